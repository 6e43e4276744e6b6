"""Exact integer and rational kernels. Nothing here touches floating point."""

from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Tuple


def integer_nth_root(y: int, n: int) -> Tuple[int, int]:
    """Return (x, y - x**n) with x = floor(y ** (1/n)), by Newton iteration.

    Raises:
        ValueError: y < 0 or n < 1
    """
    if n < 1:
        raise ValueError(f"root degree must be positive, got {n}")
    if y < 0:
        raise ValueError("negative argument provided to integer_nth_root")
    if y <= 1 or n == 1:
        return y, 0

    # start above the root so the iteration decreases monotonically
    u = 1 << (y.bit_length() // n + 1)
    while True:
        t = ((n - 1) * u + y // pow(u, n - 1)) // n
        if t >= u:
            break
        u = t
    return u, y - pow(u, n)


def floor_nth_root(num: int, den: int, n: int) -> int:
    """Largest integer s with s**n * den <= num, i.e. floor((num/den) ** (1/n))."""
    if num < 0 or den < 1 or n < 1:
        raise ValueError(f"floor_nth_root needs num >= 0, den >= 1, n >= 1; got {num}, {den}, {n}")
    return integer_nth_root(num // den, n)[0]


def parse_kappa(text: str) -> Fraction:
    """Convert a decimal string ("1.0583") or a fraction ("63/50") into an exact positive rational.

    Decimal input keeps its digits: "1.0583" becomes 10583/10000.
    """
    raw = str(text).strip()
    try:
        if "/" in raw:
            value = Fraction(raw)
        else:
            value = Fraction(Decimal(raw))
    except (ValueError, ZeroDivisionError, InvalidOperation):
        raise ValueError(f"kappa must be a positive decimal or fraction, got {text!r}") from None
    if value <= 0:
        raise ValueError(f"kappa must be positive, got {text!r}")
    return value


def format_fraction(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def decimal_bounds_cbrt(value: int, places: int) -> Tuple[Fraction, Fraction]:
    """Rational interval [lo, hi] of width 10**-places containing value ** (1/3)."""
    scale = 10 ** places
    lo, rem = integer_nth_root(value * scale ** 3, 3)
    hi = lo if rem == 0 else lo + 1
    return Fraction(lo, scale), Fraction(hi, scale)


def decimal_bounds_sqrt(value: Fraction, places: int) -> Tuple[Fraction, Fraction]:
    """Rational interval [lo, hi] of width 10**-places containing value ** (1/2)."""
    scale = 10 ** places
    num = value.numerator * scale ** 2
    lo = floor_nth_root(num, value.denominator, 2)
    exact = lo * lo * value.denominator == num
    hi = lo if exact else lo + 1
    return Fraction(lo, scale), Fraction(hi, scale)
