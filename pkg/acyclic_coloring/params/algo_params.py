"""Palette, list size and radix parameters of the coloring algorithm.

For Δ and κ = a/b:

- list size ℓ = ceil((3/2)·sqrt(3κ/2)·Δ^(4/3))
- d_max = ceil((Δ^(4/3) - Δ^(1/3)) / κ), the largest possible dangerous set
- f(Δ, κ) = ℓ_real + Δ + d_max_real, the real-valued palette size
- X = Δ^(4/3)·sqrt(κ/2), the radix base for uncoloring records

All comparisons are made on integer powers so no rounding ever leaks in.
"""

import logging
import math
import threading
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Dict, Tuple

from pydantic import BaseModel, ConfigDict, PrivateAttr

from acyclic_coloring.data.structures import PaletteMode
from acyclic_coloring.errors import ParameterError
from acyclic_coloring.params.arith import (
    decimal_bounds_cbrt,
    decimal_bounds_sqrt,
    floor_nth_root,
    format_fraction,
)
from acyclic_coloring.utils.log_icon import icon

DEFAULT_KAPPA = Fraction(10583, 10000)
KAPPA_STEP = 10000
TIGHT_START_PLACES = 10
TIGHT_MAX_REFINEMENTS = 12


class RadixTable:
    """Lazy, lock-guarded memo of floor(X^(2k-2)) for k >= 2."""

    def __init__(self, delta: int, kappa: Fraction):
        self.delta = delta
        self.kappa = kappa
        self._cache: Dict[int, int] = {}
        self._lock = threading.Lock()

    def __getitem__(self, k: int) -> int:
        if k < 2:
            raise ValueError(f"radix is defined for k >= 2, got {k}")
        value = self._cache.get(k)
        if value is None:
            a, b = self.kappa.numerator, self.kappa.denominator
            e = k - 1
            value = floor_nth_root(self.delta ** (8 * e) * a ** (3 * e), (2 * b) ** (3 * e), 3)
            with self._lock:
                self._cache.setdefault(k, value)
        return value


class AlgoParams(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    delta: int
    kappa: Fraction
    mode: PaletteMode = PaletteMode.SAFE
    list_size: int
    d_max: int
    palette: int
    f_approx: Decimal

    _radices: RadixTable = PrivateAttr()

    def model_post_init(self, __context) -> None:
        self._radices = RadixTable(self.delta, self.kappa)

    def radix(self, k: int) -> int:
        return self._radices[k]

    @property
    def kappa_text(self) -> str:
        return format_fraction(self.kappa)

    def to_dict(self) -> dict:
        return {
            "delta": self.delta,
            "kappa": self.kappa_text,
            "mode": self.mode.value,
            "list_size": self.list_size,
            "d_max": self.d_max,
            "palette": self.palette,
            "f_approx": str(self.f_approx),
        }


def kappa_constraint_holds(delta: int, kappa: Fraction) -> bool:
    """κ ≥ 2/Δ^(2/3), decided as κ³Δ² ≥ 8."""
    return kappa.numerator ** 3 * delta ** 2 >= 8 * kappa.denominator ** 3


def minimal_kappa(delta: int) -> Fraction:
    """Smallest multiple of 1/10000 satisfying the κ constraint for this Δ."""
    if delta < 1:
        raise ParameterError(f"delta must be at least 1, got {delta}")
    target = 8 * KAPPA_STEP ** 3
    j = floor_nth_root(target, delta ** 2, 3)
    if j ** 3 * delta ** 2 < target:
        j += 1
    return Fraction(j, KAPPA_STEP)


def resolve_kappa(delta: int, kappa: Fraction = DEFAULT_KAPPA) -> Fraction:
    """Return κ unchanged when valid for Δ, otherwise the minimal valid κ (with a warning)."""
    if kappa_constraint_holds(delta, kappa):
        return kappa
    raised = minimal_kappa(delta)
    logging.warning(
        f"{icon['warning']} kappa {float(kappa):.4f} violates kappa^3 * delta^2 >= 8 for delta={delta}; "
        f"raised to the minimal valid value {float(raised):.4f} ({format_fraction(raised)})"
    )
    return raised


def list_size(delta: int, kappa: Fraction) -> int:
    """Smallest s with s^6 * 512 b^3 >= 19683 a^3 Δ^8."""
    a, b = kappa.numerator, kappa.denominator
    num, den = 19683 * a ** 3 * delta ** 8, 512 * b ** 3
    s = floor_nth_root(num, den, 6)
    if s ** 6 * den < num:
        s += 1
    return s


def dangerous_set_bound(delta: int, kappa: Fraction) -> int:
    """Smallest d with d^3 a^3 >= b^3 Δ (Δ-1)^3."""
    a, b = kappa.numerator, kappa.denominator
    num, den = b ** 3 * delta * (delta - 1) ** 3, a ** 3
    d = floor_nth_root(num, den, 3)
    if d ** 3 * den < num:
        d += 1
    return d


def f_bounds(delta: int, kappa: Fraction, places: int) -> Tuple[Fraction, Fraction]:
    """Rational enclosure of f(Δ, κ); f is increasing in both irrational terms."""
    r_lo, r_hi = decimal_bounds_cbrt(delta, places)
    s_lo, s_hi = decimal_bounds_sqrt(Fraction(3, 2) * kappa, places)

    def f(r: Fraction, s: Fraction) -> Fraction:
        return r * (delta - 1) / kappa + Fraction(3, 2) * s * delta * r + delta

    return f(r_lo, s_lo), f(r_hi, s_hi)


def f_approx(delta: int, kappa: Fraction, places: int = 30) -> Decimal:
    lo, _ = f_bounds(delta, kappa, places)
    with localcontext() as ctx:
        ctx.prec = places + 10
        value = Decimal(lo.numerator) / Decimal(lo.denominator)
        return value.quantize(Decimal(10) ** -20)


def floor_f(delta: int, kappa: Fraction) -> int:
    places = TIGHT_START_PLACES
    for _ in range(TIGHT_MAX_REFINEMENTS):
        lo, hi = f_bounds(delta, kappa, places)
        if math.floor(lo) == math.floor(hi):
            return math.floor(lo)
        places *= 2
    logging.warning(f"{icon['warning']} floor of f({delta}, {format_fraction(kappa)}) still ambiguous; using the lower bound")
    return math.floor(lo)


def growth_coefficient(kappa: Fraction, precision: int = 30) -> Decimal:
    """1/κ + (3/2)·sqrt(3κ/2), the coefficient of Δ^(4/3) in f(Δ, κ)."""
    with localcontext() as ctx:
        ctx.prec = precision
        k = Decimal(kappa.numerator) / Decimal(kappa.denominator)
        return 1 / k + Decimal("1.5") * (Decimal(3) * k / 2).sqrt()


def make_params(delta: int, kappa: Fraction = DEFAULT_KAPPA, mode: PaletteMode = PaletteMode.SAFE) -> AlgoParams:
    """Compute ℓ, d_max and the palette for (Δ, κ).

    Raises:
        ParameterError: Δ < 1 or κ³Δ² < 8
    """
    if delta < 1:
        raise ParameterError(f"delta must be at least 1, got {delta}")
    kappa = Fraction(kappa)
    if kappa <= 0:
        raise ParameterError(f"kappa must be positive, got {kappa}")
    if not kappa_constraint_holds(delta, kappa):
        raise ParameterError(
            f"kappa {float(kappa):.4f} violates kappa^3 * delta^2 >= 8 for delta={delta}",
            suggested_kappa=minimal_kappa(delta),
        )
    mode = PaletteMode(mode)

    ell = list_size(delta, kappa)
    d_max = dangerous_set_bound(delta, kappa)
    if mode == PaletteMode.SAFE:
        palette = ell + delta + d_max
    else:
        palette = floor_f(delta, kappa)

    params = AlgoParams(
        delta=delta,
        kappa=kappa,
        mode=mode,
        list_size=ell,
        d_max=d_max,
        palette=palette,
        f_approx=f_approx(delta, kappa),
    )
    logging.debug(f"Params: {params.to_dict()}")
    return params


def radix(params: AlgoParams, k: int) -> int:
    """Exact floor(X^(2k-2)), memoized per parameter set."""
    return params.radix(k)


def catalog_bound_holds(params: AlgoParams, k: int, size: int) -> bool:
    """|C_2k(v)| < (κ/2)·Δ^(2k-4/3), as size³(2b)³ < a³Δ^(6k-4)."""
    a, b = params.kappa.numerator, params.kappa.denominator
    return size ** 3 * (2 * b) ** 3 < a ** 3 * params.delta ** (6 * k - 4)


def catalog_bound_value(params: AlgoParams, k: int, precision: int = 30) -> Decimal:
    """Decimal approximation of (κ/2)·Δ^(2k-4/3), for reports only."""
    with localcontext() as ctx:
        ctx.prec = precision
        delta = Decimal(params.delta)
        half_kappa = Decimal(params.kappa.numerator) / (2 * Decimal(params.kappa.denominator))
        return half_kappa * delta ** (2 * k) / (delta * delta ** (Decimal(1) / Decimal(3)))


def record_bound_holds(params: AlgoParams, r2: int, u_total: int) -> bool:
    """r2 < X^U, as r2^6 (2b)^(3U) < Δ^(8U) a^(3U)."""
    a, b = params.kappa.numerator, params.kappa.denominator
    return r2 ** 6 * (2 * b) ** (3 * u_total) < params.delta ** (8 * u_total) * a ** (3 * u_total)
