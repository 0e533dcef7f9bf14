"""Signed residue classes mod 9 and their single-digit arithmetic.

A nonzero integer is labelled by its sign together with the digital
root of its absolute value, giving the tokens +1..+9 and -1..-9; the
magnitude 9 plays the role of residue 0. An explicit zero token covers
exact cancellations, which the published tables have no symbol for.
Arithmetic acts on the signed single-digit representatives and then
re-classifies the result, so sums and products never leave the token
set.

Only multiplication is class-determined: the class of u*w depends only
on the classes of u and w. The sign of u+w additionally depends on the
magnitudes of u and w, so for mixed signs the class-level sum fixes the
residue of the true sum but not its sign.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digits import digital_root

_SIGN_CHARS = {1: "+", -1: "-"}


@dataclass(frozen=True)
class PrimalClass:
    """A signed residue token: sign in {-1, 0, +1}, magnitude in 1..9.

    The zero class has sign 0 and no magnitude.
    """

    sign: int
    magnitude: int | None = None

    def __post_init__(self) -> None:
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or +1, got {self.sign!r}")
        if self.sign == 0:
            if self.magnitude is not None:
                raise ValueError("the zero class carries no magnitude")
        elif self.magnitude not in (1, 2, 3, 4, 5, 6, 7, 8, 9):
            raise ValueError(f"magnitude must be in 1..9, got {self.magnitude!r}")

    @property
    def rep(self) -> int:
        """Signed single-digit representative (0 for the zero class)."""
        return 0 if self.sign == 0 else self.sign * self.magnitude

    @property
    def residue(self) -> int:
        """Residue mod 9 in 0..8; magnitude 9 and the zero class both give 0."""
        return self.rep % 9

    def as_positive(self) -> "PrimalClass":
        """The positive token with the same residue (residue 0 maps to +9)."""
        r = self.residue
        return PrimalClass(1, r if r else 9)

    def __str__(self) -> str:
        if self.sign == 0:
            return "0"
        return f"{_SIGN_CHARS[self.sign]}{self.magnitude}"

    @classmethod
    def parse(cls, text: str) -> "PrimalClass":
        """Parse a token like "+6", "-7", "4" or "0"."""
        t = text.strip()
        if t == "0":
            return cls(0)
        sign = 1
        if t[:1] in ("+", "-"):
            sign = -1 if t[0] == "-" else 1
            t = t[1:]
        if not t.isdigit() or not 1 <= int(t) <= 9:
            raise ValueError(f"not a class token: {text!r}")
        return cls(sign, int(t))


ZERO_CLASS = PrimalClass(0)

POSITIVE_CLASSES = tuple(PrimalClass(1, m) for m in range(1, 10))
NEGATIVE_CLASSES = tuple(PrimalClass(-1, m) for m in range(1, 10))
ALL_CLASSES = POSITIVE_CLASSES + NEGATIVE_CLASSES + (ZERO_CLASS,)


def class_of(v: int) -> PrimalClass:
    """Class token of an arbitrary integer.

    Sign of v plus the digital root of |v|; class_of(v) always has
    residue v mod 9.
    """
    if v == 0:
        return ZERO_CLASS
    return PrimalClass(1 if v > 0 else -1, digital_root(abs(v)).root)


def primal_add(a: PrimalClass, b: PrimalClass) -> PrimalClass:
    """Class of the sum of the two signed representatives.

    One rule covers the published addition table and both subtraction
    tables; subtracting a class is adding the opposite-sign token.
    """
    return class_of(a.rep + b.rep)


def primal_mul(a: PrimalClass, b: PrimalClass) -> PrimalClass:
    """Class of the product of the two signed representatives."""
    return class_of(a.rep * b.rep)


def primal_pow(a: PrimalClass, e: int) -> PrimalClass:
    """e-th power of a class by repeated multiplication, e >= 2.

    Every class's power sequence repeats with period 6 (the
    multiplicative order of each residue mod 9 divides 6, and 6 is
    even so signs stay in step), so large exponents are folded back
    into 2..7 instead of multiplying e times.
    """
    if e < 2:
        raise ValueError(f"exponent must be >= 2, got {e}")
    if e > 7:
        e = (e - 2) % 6 + 2
    acc = a
    for _ in range(e - 1):
        acc = primal_mul(acc, a)
    return acc


@dataclass(frozen=True)
class E9Matrix:
    """Grid whose nine columns enumerate the positive residue classes mod 9.

    Row i holds 9(i-1)+1 .. 9(i-1)+9, so column j lists, in increasing
    order and without gaps, every positive integer with digital root j.
    """

    rows: int
    entries: tuple[tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> int:
        """1-based access: row i in 1..rows, column j in 1..9."""
        return self.entries[i - 1][j - 1]


def e9_matrix(rows: int) -> E9Matrix:
    if rows < 1:
        raise ValueError(f"rows must be >= 1, got {rows}")
    entries = tuple(
        tuple(9 * (i - 1) + j for j in range(1, 10)) for i in range(1, rows + 1)
    )
    return E9Matrix(rows=rows, entries=entries)
