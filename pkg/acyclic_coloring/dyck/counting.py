"""Partial Dyck words whose descents (maximal runs of ones) all have even length.

A word counts when no prefix has more ones than zeros. ``count_partial_dyck_even(t, r)``
counts words with t zeros and t - r ones; ``count_dyck_even(t)`` is the r = 0 case.
"""

import threading
from decimal import Decimal, localcontext
from math import comb
from typing import Dict, Iterator, List, Sequence, Tuple, Union

# (height, inside an odd-length descent)
State = Tuple[int, int]

Bits = Union[str, Sequence[int]]


def is_partial_dyck_even(bits: Bits) -> bool:
    height = 0
    run = 0
    for b in bits:
        if b in ("1", 1):
            height -= 1
            run += 1
            if height < 0:
                return False
        elif b in ("0", 0):
            if run % 2:
                return False
            height += 1
            run = 0
        else:
            return False
    return run % 2 == 0


class DyckCountTable:
    """Exact counts by dynamic programming over (zeros consumed, height, descent parity).

    Layer z maps each state to the number of words with exactly z zeros reaching it.
    Layers are appended on demand and never change afterwards.
    """

    def __init__(self):
        self._layers: List[Dict[State, int]] = []
        self._lock = threading.Lock()
        self._append_layer({(0, 0): 1})

    @staticmethod
    def _close(entering: Dict[State, int]) -> Dict[State, int]:
        # apply every run of ones that may follow the last zero
        layer = dict(entering)
        top = max((h for h, _ in layer), default=0)
        for h in range(top, 0, -1):
            for parity in (0, 1):
                count = layer.get((h, parity), 0)
                if count:
                    key = (h - 1, 1 - parity)
                    layer[key] = layer.get(key, 0) + count
        return layer

    def _append_layer(self, entering: Dict[State, int]):
        self._layers.append(self._close(entering))

    def _extend_to(self, t: int):
        with self._lock:
            while len(self._layers) <= t:
                last = self._layers[-1]
                entering = {(h + 1, 0): count for (h, parity), count in last.items() if parity == 0 and count}
                self._append_layer(entering)

    def count(self, t: int, r: int) -> int:
        if t < 0 or not 0 <= r <= t:
            raise ValueError(f"need 0 <= r <= t, got t={t}, r={r}")
        self._extend_to(t)
        return self._layers[t].get((r, 0), 0)


_TABLE = DyckCountTable()


def count_partial_dyck_even(t: int, r: int) -> int:
    """Words with exactly t zeros, t - r ones and all descents even."""
    return _TABLE.count(t, r)


def count_dyck_even(t: int) -> int:
    """Dyck words of length 2t with all descents even."""
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t}")
    return _TABLE.count(t, 0)


def enumerate_partial_dyck_even(t: int, r: int) -> Iterator[str]:
    """Every word counted by ``count_partial_dyck_even(t, r)``, built bit by bit.

    Branches die as soon as a prefix overshoots or an odd descent is closed by a zero.
    """
    if t < 0 or not 0 <= r <= t:
        raise ValueError(f"need 0 <= r <= t, got t={t}, r={r}")
    ones_total = t - r
    word: List[str] = []

    def walk(zeros: int, ones: int, run: int) -> Iterator[str]:
        if zeros == t and ones == ones_total:
            if run % 2 == 0:
                yield "".join(word)
            return
        if zeros < t and run % 2 == 0:
            word.append("0")
            yield from walk(zeros + 1, ones, 0)
            word.pop()
        if ones < ones_total and ones < zeros:
            word.append("1")
            yield from walk(zeros, ones + 1, run + 1)
            word.pop()

    yield from walk(0, 0, 0)


def catalan_even_descent_closed_form(t: int) -> int:
    """C(3m, m) / (2m + 1) for t = 2m, zero for odd t."""
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t}")
    if t % 2:
        return 0
    m = t // 2
    return comb(3 * m, m) // (2 * m + 1)


def growth_ratio(t: int, r: int = 0, precision: int = 40) -> Decimal:
    """count(t, r) · (t+r)^(3/2) / (3√3/2)^(t+r)."""
    count = count_partial_dyck_even(t, r)
    with localcontext() as ctx:
        ctx.prec = precision
        s = Decimal(t + r)
        base = Decimal(3) * Decimal(3).sqrt() / 2
        return Decimal(count) * s * s.sqrt() / base ** (t + r)
