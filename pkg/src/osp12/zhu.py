"""Zhu algebra C[t]/<f(t)> and the bimodules A(L(level, j)) as quotients of C[t1, t2].

The bimodule of the weight ``(m, s)`` is presented as ``C[t1, t2]`` modulo the
subspace ``C[t1,t2] t2^m + sum_n C[t1] g_n(t1) t2^n`` (``n < m``).  Elements are
kept as canonical representatives: monomials ``t1^a t2^n`` with ``n < m`` and
``a < deg g_n``.

Left action of ``t``:  ``(t1 + j - t2 d/dt2) v``.  Right action of ``t``: ``t1 v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .admissible import AdmissiblePair, AdmissibleWeight, vacuum_polynomial
from .exactmath import BiPoly, Rational, UniPoly, as_rational, bipoly_d_dt2, upoly_divmod, upoly_gcd

__all__ = [
    "ZhuAlgebra",
    "BimodulePresentation",
    "zhu_build",
    "zhu_universal",
    "zhu_mul",
    "bimodule_build",
    "bimodule_universal",
    "bimodule_reducer",
    "bimodule_nf",
    "bimodule_left",
    "bimodule_right",
    "bimodule_dim",
    "is_squarefree",
    "action_matrix",
]


def is_squarefree(f: UniPoly) -> bool:
    return upoly_gcd(f, f.derivative()).degree == 0


@dataclass(frozen=True)
class ZhuAlgebra:
    """``C[t]/<modulus>``; ``modulus is None`` stands for the polynomial ring itself."""

    modulus: Optional[UniPoly]
    pair: Optional[AdmissiblePair] = None

    def reduce(self, a: UniPoly) -> UniPoly:
        if self.modulus is None:
            return a
        return upoly_divmod(a, self.modulus)[1]

    def mul(self, a: UniPoly, b: UniPoly) -> UniPoly:
        return self.reduce(a * b)

    @property
    def dim(self) -> Optional[int]:
        return None if self.modulus is None else self.modulus.degree

    def is_semisimple(self) -> bool:
        return self.modulus is not None and is_squarefree(self.modulus)

    def basis(self) -> List[UniPoly]:
        if self.modulus is None:
            raise ValueError("polynomial ring has no finite basis")
        return [UniPoly({k: 1}) for k in range(self.modulus.degree)]


def zhu_build(pair: AdmissiblePair) -> ZhuAlgebra:
    return ZhuAlgebra(vacuum_polynomial(pair), pair)


def zhu_universal() -> ZhuAlgebra:
    """Zhu algebra of the generalized Verma vertex algebra, ``C[t]``."""
    return ZhuAlgebra(None)


def zhu_mul(A: ZhuAlgebra, a: UniPoly, b: UniPoly) -> UniPoly:
    return A.mul(a, b)


def bimodule_reducer(pair: AdmissiblePair, m: int, s: int, n: int) -> UniPoly:
    """``g_n(t1) = prod (t1 - (i+n)/2 + j*l)`` over ``0<=i<=p-m-1``, ``0<=j<=q-s-1``, ``i+n+j`` even."""
    l = pair.l
    roots = [
        Rational(i + n, 2) - jj * l
        for jj in range(pair.q - s)
        for i in range(pair.p - m)
        if (i + n + jj) % 2 == 0
    ]
    return UniPoly.from_roots(roots)


@dataclass(frozen=True)
class BimodulePresentation:
    """Finite presentation of ``A(L(level, j))``.

    ``m is None`` encodes the universal bimodule ``A(M(level, j)) = C[t1, t2]``
    where nothing is reduced.
    """

    j: Rational
    m: Optional[int]
    reducers: Tuple[UniPoly, ...]
    weight: Optional[AdmissibleWeight] = None

    @property
    def universal(self) -> bool:
        return self.m is None

    def basis(self) -> List[Tuple[int, int]]:
        """Exponent pairs ``(a, n)`` of the canonical basis ``t1^a t2^n``."""
        if self.universal:
            raise ValueError("universal bimodule is infinite dimensional")
        return [(a, n) for n, g in enumerate(self.reducers) for a in range(g.degree)]


@lru_cache(maxsize=4096)
def bimodule_build(pair: AdmissiblePair, w: AdmissibleWeight) -> BimodulePresentation:
    if w.pair != pair:
        raise ValueError(f"weight {w} belongs to {w.pair}, not {pair}")
    reducers = tuple(bimodule_reducer(pair, w.m, w.s, n) for n in range(w.m))
    return BimodulePresentation(w.j, w.m, reducers, w)


def bimodule_universal(j) -> BimodulePresentation:
    return BimodulePresentation(as_rational(j), None, ())


def bimodule_nf(P: BimodulePresentation, v: BiPoly) -> BiPoly:
    if P.universal:
        return v
    out: Dict[Tuple[int, int], Rational] = {}
    for n, u in sorted(v.t2_strata().items()):
        if n >= P.m:
            continue
        r = upoly_divmod(u, P.reducers[n])[1]
        for a, c in r.coeffs.items():
            out[(a, n)] = c
    return BiPoly(out)


_T1 = BiPoly.monomial(1, 0)
_T2 = BiPoly.monomial(0, 1)


def _left_raw(P: BimodulePresentation, v: BiPoly) -> BiPoly:
    return _T1 * v + P.j * v - _T2 * bipoly_d_dt2(v)


def bimodule_left(P: BimodulePresentation, j, v: BiPoly) -> BiPoly:
    """Left action of the generator ``t`` of the Zhu algebra."""
    if as_rational(j) != P.j:
        raise ValueError(f"j={j} does not match presentation weight {P.j}")
    return bimodule_nf(P, _left_raw(P, v))


def bimodule_right(P: BimodulePresentation, v: BiPoly) -> BiPoly:
    """Right action of ``t``: multiplication by ``t1``."""
    return bimodule_nf(P, BiPoly.monomial(1, 0) * v)


def bimodule_dim(P: BimodulePresentation) -> int:
    if P.universal:
        raise ValueError("universal bimodule is infinite dimensional")
    return sum(g.degree for g in P.reducers)


def action_matrix(P: BimodulePresentation, side: str) -> List[List[Rational]]:
    """Matrix of the left or right action of ``t`` on the canonical basis (columns = images)."""
    basis = P.basis()
    index = {b: k for k, b in enumerate(basis)}
    mat = [[Rational(0)] * len(basis) for _ in basis]
    for col, (a, n) in enumerate(basis):
        v = BiPoly.monomial(a, n)
        img = bimodule_left(P, P.j, v) if side == "left" else bimodule_right(P, v)
        for key, c in img.coeffs.items():
            mat[index[key]][col] = c
    return mat
