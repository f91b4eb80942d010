"""Admissible levels and weights for affine osp(1|2).

A level is admissible when ``level + 3/2 = p/(2q)`` with ``p >= 2``,
``p = q (mod 2)`` and ``gcd((p-q)/2, q) = 1``.  Admissible highest weights are
``j = (m-1)/2 - l*s`` on the grid ``1 <= m <= p-1``, ``0 <= s <= q-1`` with
``m + s`` odd, where ``l = p/(2q)`` is the shifted level.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Dict, List, Optional, Tuple

from .exactmath import Rational, UniPoly, as_rational

__all__ = [
    "InvalidPair",
    "AdmissiblePair",
    "AdmissibleWeight",
    "GradingShift",
    "validate_pair",
    "enumerate_weights",
    "unique_ms",
    "vacuum_polynomial",
    "ordinary_weights",
    "reducibility_witnesses",
    "xi_weight",
    "central_charge_shift",
    "valid_pairs",
    "H_WEIGHT",
]

CRITICAL_LEVEL = Rational(-3, 2)


class InvalidPair(ValueError):
    """Raised when ``(p, q)`` does not define an admissible level.

    ``failures`` lists the violated conditions by name, a subset of
    ``("positive", "p>=2", "parity", "gcd")``.
    """

    _TEXT = {
        "positive": "positivity condition failed: p and q must be positive integers",
        "p>=2": "p >= 2 condition failed",
        "parity": "parity condition failed: need p = q (mod 2)",
        "gcd": "gcd condition failed: need gcd((p-q)/2, q) = 1",
    }

    def __init__(self, p, q, failures):
        self.p, self.q, self.failures = p, q, tuple(failures)
        msg = "; ".join(self._TEXT[f] for f in self.failures)
        super().__init__(f"({p}, {q}) is not admissible: {msg}")


def _pair_failures(p: int, q: int) -> List[str]:
    if not (isinstance(p, int) and isinstance(q, int)) or p < 1 or q < 1:
        return ["positive"]
    failures = []
    if p < 2:
        failures.append("p>=2")
    if (p - q) % 2:
        failures.append("parity")
    elif gcd(abs(p - q) // 2, q) != 1:
        failures.append("gcd")
    return failures


@dataclass(frozen=True, order=True)
class AdmissiblePair:
    p: int
    q: int

    def __post_init__(self):
        failures = _pair_failures(self.p, self.q)
        if failures:
            raise InvalidPair(self.p, self.q, failures)

    @property
    def level(self) -> Rational:
        return Rational(self.p, 2 * self.q) + CRITICAL_LEVEL

    @property
    def l(self) -> Rational:  # noqa: E743 - shifted level, named as in the literature
        return Rational(self.p, 2 * self.q)

    def weight_value(self, m: int, s: int) -> Rational:
        return Rational(m - 1, 2) - self.l * s

    def in_grid(self, m: int, s: int) -> bool:
        return 1 <= m <= self.p - 1 and 0 <= s <= self.q - 1 and (m + s) % 2 == 1

    @cached_property
    def weights(self) -> Tuple["AdmissibleWeight", ...]:
        return tuple(enumerate_weights(self))

    @cached_property
    def _by_value(self) -> Dict[Rational, "AdmissibleWeight"]:
        return {w.j: w for w in self.weights}

    def __str__(self):
        return f"({self.p},{self.q})"


def validate_pair(p: int, q: int) -> AdmissiblePair:
    """Return the pair, or raise :class:`InvalidPair` naming every failed condition."""
    return AdmissiblePair(p, q)


@dataclass(frozen=True)
class AdmissibleWeight:
    m: int
    s: int
    pair: AdmissiblePair

    def __post_init__(self):
        if not self.pair.in_grid(self.m, self.s):
            raise ValueError(f"(m, s) = ({self.m}, {self.s}) is off the admissible grid of {self.pair}")

    @property
    def j(self) -> Rational:
        return self.pair.weight_value(self.m, self.s)

    @property
    def ms(self) -> Tuple[int, int]:
        return (self.m, self.s)

    @property
    def sort_key(self) -> Tuple[int, int]:
        return (self.s, self.m)

    def __lt__(self, other: "AdmissibleWeight"):
        return self.sort_key < other.sort_key

    def __repr__(self):
        return f"AdmissibleWeight(m={self.m}, s={self.s}, j={self.j})"


def enumerate_weights(pair: AdmissiblePair) -> List[AdmissibleWeight]:
    """All grid points ``(m, s)``, ordered lexicographically by ``(s, m)``."""
    return [
        AdmissibleWeight(m, s, pair)
        for s in range(pair.q)
        for m in range(1, pair.p)
        if (m + s) % 2 == 1
    ]


def unique_ms(pair: AdmissiblePair, j) -> Optional[AdmissibleWeight]:
    """The unique grid point with value ``j``, or ``None`` if ``j`` is not admissible.

    Solved directly: ``m = 2j + 1 + 2ls`` must be an integer in range for some
    ``s`` in ``[0, q-1]``.
    """
    j = as_rational(j)
    hits = []
    for s in range(pair.q):
        m = 2 * j + 1 + 2 * pair.l * s
        if m.denominator == 1 and pair.in_grid(int(m), s):
            hits.append(AdmissibleWeight(int(m), s, pair))
    if len(hits) > 1:
        raise AssertionError(f"non-unique (m, s) for j={j} at {pair}: {hits}")
    return hits[0] if hits else None


def vacuum_polynomial(pair: AdmissiblePair) -> UniPoly:
    """Monic ``f(t)`` whose roots are the admissible weights.

    Product over ``1 <= i <= p-1``, ``0 <= j <= q-1`` with ``i + j`` odd of
    ``(t - (i-1)/2 + j*l)``.
    """
    l = pair.l
    roots = [
        Rational(i - 1, 2) - jj * l
        for jj in range(pair.q)
        for i in range(1, pair.p)
        if (i + jj) % 2 == 1
    ]
    return UniPoly.from_roots(roots)


def ordinary_weights(pair: AdmissiblePair) -> List[int]:
    """Integral admissible weights; these are exactly the ``s = 0`` points."""
    return [(m - 1) // 2 for m in range(1, pair.p, 2)]


def reducibility_witnesses(level, j, s_bound: int) -> List[Tuple[int, int]]:
    """Integer pairs ``(m, s)`` with ``|s| <= s_bound`` making ``M(level, j)`` reducible.

    Criterion: ``j = (m-1)/2 - s*(level + 3/2)`` with ``m + s`` odd and either
    ``m > 0, s >= 0`` or ``m < 0, s < 0``.  The search is bounded in ``s``; an
    empty result does not prove irreducibility.
    """
    level, j = as_rational(level), as_rational(j)
    if level == CRITICAL_LEVEL:
        raise ValueError("critical level -3/2 excluded")
    if s_bound < 1:
        raise ValueError("s_bound must be a positive integer")
    shifted = level - CRITICAL_LEVEL
    out = []
    for s in range(-s_bound, s_bound + 1):
        m = 2 * j + 1 + 2 * s * shifted
        if m.denominator != 1:
            continue
        m = int(m)
        if (m + s) % 2 != 1:
            continue
        if (m > 0 and s >= 0) or (m < 0 and s < 0):
            out.append((m, s))
    return out


# eigenvalue of ad h(0) on each generator
H_WEIGHT = {"h": 0, "e": 2, "f": -2, "x": 1, "y": -1}


@dataclass(frozen=True)
class GradingShift:
    """Shifted conformal vector ``omega + (xi/2) L(-1) h``.

    ``kappa1`` and ``kappa2`` are the coefficients in the central charge shift
    ``-6 xi (kappa1 + xi kappa2)``; for this algebra they are ``0`` and the level.
    """

    xi: Rational
    level: Rational

    def __post_init__(self):
        object.__setattr__(self, "xi", as_rational(self.xi))
        object.__setattr__(self, "level", as_rational(self.level))
        if not 0 < self.xi < 1:
            raise ValueError(f"xi must lie in (0, 1), got {self.xi}")

    @property
    def kappa1(self) -> Rational:
        return Rational(0)

    @property
    def kappa2(self) -> Rational:
        return self.level

    def central_charge_shift(self) -> Rational:
        return -6 * self.xi * (self.kappa1 + self.xi * self.kappa2)

    def weight(self, generator: str) -> Rational:
        """``L'(0)``-eigenvalue of ``a(-1)1``; ``L'(0) = L(0) - (xi/2) h(0)``."""
        try:
            alpha = H_WEIGHT[generator]
        except KeyError:
            raise ValueError(f"unknown generator {generator!r}") from None
        return 1 - self.xi / 2 * alpha


def xi_weight(generator: str, xi) -> Rational:
    # the level does not enter the weight; any value serves
    return GradingShift(xi, Rational(0)).weight(generator)


def central_charge_shift(xi, level) -> Rational:
    return GradingShift(xi, level).central_charge_shift()


def valid_pairs(max_p: Optional[int] = None, max_q: Optional[int] = None,
                max_pq: Optional[int] = None) -> List[AdmissiblePair]:
    """All admissible pairs within the given bounds, ordered by ``(p, q)``."""
    if max_pq is None and (max_p is None or max_q is None):
        raise ValueError("need max_pq or both max_p and max_q")
    hi_p = max_p if max_p is not None else max_pq
    hi_q = max_q if max_q is not None else max_pq
    out = []
    for p in range(2, hi_p + 1):
        for q in range(1, hi_q + 1):
            if max_pq is not None and p * q > max_pq:
                continue
            if not _pair_failures(p, q):
                out.append(AdmissiblePair(p, q))
    return out
