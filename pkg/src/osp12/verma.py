"""Truncated Verma modules over affine osp(1|2).

``M(level, j)`` is realised on PBW monomials in the lowering generators
``f(0), y(0)`` and ``a(-n)``, ``n >= 1``, applied to a highest weight vector
with ``h(0) v = j v``.  The generalized module ``V(level, C)`` drops ``f(0)`` and
``y(0)`` from the lowering set (they kill the vacuum) and has ``j = 0``.

A monomial is a sorted tuple of ``(gen_index, mode)`` pairs, modes descending
then generator order ``f y h x e``; odd generators occur at most once per mode.
Vectors are plain dicts ``{monomial: Rational}``.  Everything is graded by
t-degree ``d = -sum(modes)`` and h-weight drop.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .admissible import AdmissiblePair
from .exactmath import Rational, as_rational, fmt_rational
from .pbw import GEN_ORDER, UG, UL0, UEElement, _axpy, mff_word

__all__ = [
    "AffineGenerator",
    "VermaConfig",
    "DepthOverflow",
    "FRACTIONAL",
    "slice_basis",
    "act",
    "act_vector",
    "vacuum",
    "singular_vector",
    "is_singular",
    "remark_maximal_check",
    "vector_depth",
    "vector_drop",
    "vec_str",
    "NPLUS_CHECK",
    "nplus_closure",
    "singular_space",
    "project",
]

Gen = Tuple[int, int]  # (index into GEN_ORDER, mode)
Word = Tuple[Gen, ...]
Vector = Dict[Word, Rational]

_IDX = {g: k for k, g in enumerate(GEN_ORDER)}
_ODD = tuple(UG.parity)
# decrease of the h(0)-eigenvalue caused by each generator
_DROP = {_IDX["f"]: 2, _IDX["y"]: 1, _IDX["h"]: 0, _IDX["x"]: -1, _IDX["e"]: -2}

# invariant form: (e,f) = (f,e) = 1, (h,h) = 2, (x,y) = -(y,x) = 2
_FORM = {
    (_IDX["e"], _IDX["f"]): 1,
    (_IDX["f"], _IDX["e"]): 1,
    (_IDX["h"], _IDX["h"]): 2,
    (_IDX["x"], _IDX["y"]): 2,
    (_IDX["y"], _IDX["x"]): -2,
}

FRACTIONAL = "fractional"


class DepthOverflow(ValueError):
    pass


@dataclass(frozen=True, order=True)
class AffineGenerator:
    base: str
    mode: int

    def __post_init__(self):
        if self.base not in _IDX:
            raise ValueError(f"unknown generator {self.base!r}")

    @property
    def key(self) -> Gen:
        return (_IDX[self.base], self.mode)

    @property
    def odd(self) -> bool:
        return bool(_ODD[_IDX[self.base]])

    def __str__(self):
        return f"{self.base}({self.mode})"


def _gen(g) -> Gen:
    if isinstance(g, AffineGenerator):
        return g.key
    if isinstance(g, str):
        base, mode = g.rstrip(")").split("(")
        return (_IDX[base], int(mode))
    return tuple(g)


def _order(g: Gen):
    return (-g[1], g[0])


def affine_bracket(a: Gen, b: Gen, level) -> Tuple[Dict[Gen, Rational], Rational]:
    """``[a(m), b(n)] = [a,b](m+n) + m delta_{m+n,0} (a,b) level`` as (generator part, scalar)."""
    (ia, m), (ib, n) = a, b
    gens = {(k, m + n): c for k, c in UG._bracket.get((ia, ib), {}).items()}
    scalar = Rational(0)
    if m + n == 0 and m:
        scalar = m * _FORM.get((ia, ib), 0) * as_rational(level)
    return gens, scalar


@dataclass
class VermaConfig:
    level: Rational
    j: Rational = Rational(0)
    kind: str = "verma"
    depth_bound: int = 6
    _cache: Dict = field(default_factory=dict, repr=False, compare=False)
    _slices: Dict = field(default_factory=dict, repr=False, compare=False)
    _lock: threading.RLock = field(default_factory=threading.RLock, repr=False, compare=False)

    def __post_init__(self):
        self.level = as_rational(self.level)
        self.j = as_rational(self.j)
        if self.kind not in ("verma", "generalized"):
            raise ValueError(f"kind must be 'verma' or 'generalized', got {self.kind!r}")
        if self.kind == "generalized" and self.j != 0:
            raise ValueError("the generalized module has j = 0")
        if self.depth_bound < 0:
            raise ValueError("depth_bound must be >= 0")

    def lowering(self, g: Gen) -> bool:
        idx, mode = g
        if mode < 0:
            return True
        return mode == 0 and self.kind == "verma" and GEN_ORDER[idx] in ("f", "y")


def vacuum() -> Vector:
    return {(): Rational(1)}


def vector_depth(v: Vector) -> Optional[int]:
    ds = {-sum(m for _, m in w) for w in v}
    if len(ds) > 1:
        raise ValueError("vector is not homogeneous in t-degree")
    return ds.pop() if ds else None


def vector_drop(v: Vector) -> Optional[int]:
    ds = {sum(_DROP[i] for i, _ in w) for w in v}
    if len(ds) > 1:
        raise ValueError("vector is not homogeneous in h-weight")
    return ds.pop() if ds else None


def _act_word(cfg: VermaConfig, a: Gen, word: Word) -> Vector:
    key = (a, word)
    hit = cfg._cache.get(key)
    if hit is not None:
        return hit
    out: Vector = {}
    if not word:
        if cfg.lowering(a):
            out[(a,)] = Rational(1)
        elif a == (_IDX["h"], 0) and cfg.j:
            out[()] = cfg.j
    else:
        g1, rest = word[0], word[1:]
        low = cfg.lowering(a)
        if low and _order(a) < _order(g1):
            out[(a,) + word] = Rational(1)
        elif low and a == g1:
            if not _ODD[a[0]]:
                out[(a,) + word] = Rational(1)
            else:
                # a a = (1/2) {a, a}; no central term since 2*mode = 0 only at mode 0
                gens, _ = affine_bracket(a, a, cfg.level)
                for g, c in gens.items():
                    _axpy(out, c / 2, _act_word(cfg, g, rest))
        else:
            # a g1 rest = sign g1 (a rest) + [a, g1] rest
            sign = -1 if _ODD[a[0]] and _ODD[g1[0]] else 1
            for w, c in _act_word(cfg, a, rest).items():
                _axpy(out, sign * c, _act_word(cfg, g1, w))
            gens, scalar = affine_bracket(a, g1, cfg.level)
            for g, c in gens.items():
                _axpy(out, c, _act_word(cfg, g, rest))
            if scalar:
                _axpy(out, scalar, {rest: Rational(1)})
    cfg._cache[key] = out
    return out


def act(cfg: VermaConfig, gen, v: Vector) -> Vector:
    """Apply one affine generator to a homogeneous vector."""
    a = _gen(gen)
    d = vector_depth(v)
    if d is not None and d - a[1] > cfg.depth_bound:
        raise DepthOverflow(f"{GEN_ORDER[a[0]]}({a[1]}) would leave depth bound {cfg.depth_bound} (target {d - a[1]})")
    out: Vector = {}
    with cfg._lock:
        for w, c in v.items():
            _axpy(out, c, _act_word(cfg, a, w))
    return out


def act_vector(cfg: VermaConfig, gens, v: Optional[Vector] = None) -> Vector:
    """Apply ``gens`` right to left, as in the written product ``g1 g2 ... gk v``."""
    v = vacuum() if v is None else v
    for g in reversed(list(gens)):
        v = act(cfg, g, v)
    return v


def _lowering_gens(cfg: VermaConfig, d: int) -> List[Gen]:
    gens = [(i, -n) for n in range(1, d + 1) for i in range(5)]
    if cfg.kind == "verma":
        gens += [(_IDX["f"], 0), (_IDX["y"], 0)]
    return sorted(gens, key=_order)


def slice_basis(cfg: VermaConfig, d: int, drop) -> List[Word]:
    """PBW monomials of t-degree ``d`` and h-weight drop ``drop``, in a fixed order."""
    if d > cfg.depth_bound:
        raise DepthOverflow(f"degree {d} exceeds depth bound {cfg.depth_bound}")
    drop = as_rational(drop)
    if drop.denominator != 1:
        return []
    drop = int(drop)
    key = (d, drop)
    with cfg._lock:
        hit = cfg._slices.get(key)
        if hit is not None:
            return list(hit)
        gens = [g for g in _lowering_gens(cfg, d) if g[1] < 0]
        zero_f = cfg.kind == "verma"
        out: List[Word] = []

        def rec(k, deg_left, drop_left, acc):
            if deg_left == 0:
                # fill with mode-0 generators f(0)^a y(0)^e in front
                if not zero_f:
                    if drop_left == 0:
                        out.append(tuple(acc))
                    return
                if drop_left < 0:
                    return
                a, e = divmod(drop_left, 2)
                head = [(_IDX["f"], 0)] * a + [(_IDX["y"], 0)] * e
                out.append(tuple(head + acc))
                return
            if k == len(gens):
                return
            g = gens[k]
            n = -g[1]
            cap = 1 if _ODD[g[0]] else deg_left // n
            for c in range(min(cap, deg_left // n), -1, -1):
                rec(k + 1, deg_left - c * n, drop_left - c * _DROP[g[0]], acc + [g] * c)

        rec(0, d, drop, [])
        out = sorted(set(out), key=lambda w: [_order(g) for g in w])
        cfg._slices[key] = tuple(out)
        return list(out)


def singular_vector(cfg: VermaConfig, pair: AdmissiblePair, m: int, s: int, which: str):
    """Word ``F1``/``F2`` applied to the highest weight vector, or ``FRACTIONAL``."""
    if cfg.level != pair.level:
        raise ValueError(f"config level {cfg.level} differs from {pair} level {pair.level}")
    if cfg.j != pair.weight_value(m, s):
        raise ValueError(f"config j = {cfg.j} but ({m}, {s}) gives j = {pair.weight_value(m, s)}")
    word = mff_word(pair, m, s, which)
    if not word.integer_instance:
        return FRACTIONAL
    gens: List[Gen] = []
    for g, c in word.factors:
        gens += [(_IDX["y"], 0) if g == "y" else (_IDX["e"], -1)] * int(c)
    return act_vector(cfg, gens)


# e(0), x(0), f(1), y(1), h(1)
NPLUS_CHECK: Tuple[Gen, ...] = (
    (_IDX["e"], 0), (_IDX["x"], 0), (_IDX["f"], 1), (_IDX["y"], 1), (_IDX["h"], 1),
)


def is_singular(cfg: VermaConfig, v: Vector) -> bool:
    vector_depth(v)
    vector_drop(v)
    return all(not act(cfg, g, v) for g in NPLUS_CHECK)


def nplus_closure(max_mode: int) -> set:
    """Generators reached from ``NPLUS_CHECK`` by iterated brackets, up to ``max_mode``."""
    reached = set(NPLUS_CHECK)
    frontier = set(reached)
    while frontier:
        new = set()
        for a in frontier:
            for b in list(reached):
                for x, y in ((a, b), (b, a)):
                    gens, _ = affine_bracket(x, y, 0)
                    for g, c in gens.items():
                        if c and g[1] <= max_mode and g not in reached:
                            new.add(g)
        reached |= new
        frontier = new
    return reached


def remark_maximal_check(pair: AdmissiblePair, depth_bound: int = 6) -> dict:
    """In ``V(level, C)``: ``F1(1,0) 1 = y(0) 1`` vanishes and ``F2(1,0) 1`` is a nonzero singular vector."""
    cfg = VermaConfig(pair.level, Rational(0), "generalized", depth_bound)
    a_ok = not act(cfg, (_IDX["y"], 0), vacuum())
    word = mff_word(pair, 1, 0, "F2")
    report = {"pair": str(pair), "F1_vanishes": a_ok, "F2_word": word.to_str()}
    if not word.integer_instance:
        report.update(F2_singular=None, F2_nonzero=None, status=FRACTIONAL)
        return report
    v = singular_vector(cfg, pair, 1, 0, "F2")
    b_ok = bool(v) and is_singular(cfg, v)
    report.update(F2_singular=b_ok, F2_nonzero=bool(v), status="pass" if a_ok and b_ok else "fail")
    return report


def vec_str(v: Vector) -> str:
    if not v:
        return "0"
    parts = []
    for w, c in sorted(v.items(), key=lambda kv: [_order(g) for g in kv[0]]):
        body = "".join(f"{GEN_ORDER[i]}({m})" for i, m in w) or "vac"
        parts.append(f"{fmt_rational(c)}*{body}")
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# singular vectors found by linear algebra, independent of any word

_PRIME = (1 << 127) - 1


def _ratrec(a: int, p: int = _PRIME) -> Optional[Rational]:
    """Rational reconstruction of ``a mod p`` with numerator and denominator below ``sqrt(p/2)``."""
    bound = 1 << 63
    r0, r1, s0, s1 = p, a % p, 0, 1
    while r1 >= bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) >= bound:
        return None
    return Rational(r1, s1) if s1 > 0 else Rational(-r1, -s1)


def _modp(c: Rational, p: int = _PRIME) -> int:
    return int(c.numerator) * pow(int(c.denominator), -1, p) % p


def singular_space(cfg: VermaConfig, d: int, drop) -> List[Vector]:
    """Basis of the vectors in slice ``(d, drop)`` killed by ``x(0)`` and ``f(1)``.

    Elimination runs modulo a large prime; kernel vectors are lifted back by
    rational reconstruction and re-checked exactly against all of
    ``NPLUS_CHECK``.  A lift that fails the exact check raises.
    """
    basis = slice_basis(cfg, d, drop)
    col = {w: k for k, w in enumerate(basis)}
    eqs: Dict[Tuple[int, Word], Dict[int, int]] = {}
    for k, w in enumerate(basis):
        for gi, g in enumerate(((_IDX["x"], 0), (_IDX["f"], 1))):
            for tw, c in act(cfg, g, {w: Rational(1)}).items():
                eqs.setdefault((gi, tw), {})[k] = _modp(c)
    p = _PRIME
    pivots: Dict[int, Dict[int, int]] = {}  # pivot column -> row normalised to 1 there
    for key in sorted(eqs, key=lambda t: (t[0], [_order(g) for g in t[1]])):
        row = {c: v for c, v in eqs[key].items() if v}
        while row:
            lead = min(row)
            if lead not in pivots:
                break
            f = row[lead]
            for c, v in pivots[lead].items():
                nv = (row.get(c, 0) - f * v) % p
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        if not row:
            continue
        lead = min(row)
        inv = pow(row[lead], -1, p)
        row = {c: v * inv % p for c, v in row.items()}
        # keep pivot rows reduced against each other
        for pc, prow in pivots.items():
            f = prow.get(lead)
            if f:
                for c, v in row.items():
                    nv = (prow.get(c, 0) - f * v) % p
                    if nv:
                        prow[c] = nv
                    else:
                        prow.pop(c, None)
        pivots[lead] = row
    free = [k for k in range(len(basis)) if k not in pivots]
    out = []
    for fk in free:
        coeffs = {fk: 1}
        for pc, prow in pivots.items():
            v = prow.get(fk)
            if v:
                coeffs[pc] = (-v) % p
        vec: Vector = {}
        for k, v in coeffs.items():
            r = _ratrec(v)
            if r is None:
                raise ArithmeticError("rational reconstruction failed; coefficients too large")
            vec[basis[k]] = r
        if not is_singular(cfg, vec):
            raise ArithmeticError("lifted kernel vector is not singular over Q")
        out.append(vec)
    return out


def _l0_image(g: Gen) -> Tuple[int, int]:
    """``(generator index, sign)`` of ``g`` in ``L0``.

    ``a(-n) = (-1)^(n-1) a(-1)`` for every ``a``, and ``f(-1) = -f(0)``,
    ``y(-1) = -y(0)``; the ``T`` generators are ``f(0), y(0), h(-1), x(-1), e(-1)``.
    """
    idx, mode = g
    if GEN_ORDER[idx] in ("f", "y"):
        return idx, (-1) ** (-mode)
    if mode >= 0:
        raise ValueError(f"{GEN_ORDER[idx]}({mode}) is not in N-")
    return idx, (-1) ** (-mode - 1)


def project(v: Vector, target: str = "pi") -> UEElement:
    """Image of a Verma vector, read as an element of U(N-), under ``pi`` (to U(g)) or ``pi1`` (to U(L0))."""
    alg = UG if target == "pi" else UL0
    gens = [alg.gen(g) for g in GEN_ORDER]
    out = alg.zero()
    for w, c in sorted(v.items(), key=lambda kv: [_order(g) for g in kv[0]]):
        term = alg.scalar(c)
        for g in w:
            if target == "pi":
                term = term * gens[g[0]]
            else:
                idx, sign = _l0_image(g)
                term = term * gens[idx] * sign
        out = out + term
    return out
