"""Exact rational scalars and sparse uni/bivariate polynomials over Q.

Scalars are ``gmpy2.mpq`` rationals (exported as :data:`Rational`), always
stored reduced with a positive denominator, so equality and hashing are
structural.  Polynomials are immutable sparse maps from exponents to nonzero
``Rational`` coefficients.
"""

from __future__ import annotations

import operator
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Dict, Iterable, Mapping, Tuple, Union

from gmpy2 import mpq as Rational

Scalar = Union[int, Rational]

__all__ = [
    "Rational",
    "as_rational",
    "rat_arith",
    "fmt_rational",
    "parse_rational",
    "UniPoly",
    "BiPoly",
    "upoly_divmod",
    "upoly_gcd",
    "bipoly_d_dt2",
]


_MPQ = type(Rational(0))


def as_rational(x) -> Rational:
    if type(x) is _MPQ:
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, _RationalABC)):
        return Rational(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


_OPS = {"+": operator.add, "-": operator.sub, "*": operator.mul, "/": operator.truediv}


def rat_arith(a, b, op: str) -> Rational:
    """Apply ``op`` (one of ``+ - * /``) to two rationals exactly."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operator {op!r}") from None
    a, b = as_rational(a), as_rational(b)
    if op == "/" and b == 0:
        raise ZeroDivisionError("rational division by zero")
    return fn(a, b)


def fmt_rational(x) -> str:
    """Serialize as ``"num/den"``, dropping the denominator when it is 1."""
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Rational:
    s = s.strip()
    if "." in s or "e" in s.lower():
        raise ValueError(f"not an exact rational literal: {s!r}")
    return Rational(Fraction(s))


def _clean(coeffs: Mapping) -> Dict:
    out = {}
    for k, c in coeffs.items():
        c = as_rational(c)
        if c != 0:
            out[k] = c
    return out


class UniPoly:
    """Univariate polynomial over Q in a single indeterminate ``t``.

    The zero polynomial has degree ``-1``.
    """

    __slots__ = ("_c", "_hash")

    ZERO_DEGREE = -1

    def __init__(self, coeffs: Union[Mapping[int, Scalar], Iterable[Scalar], None] = None):
        if coeffs is None:
            coeffs = {}
        elif not isinstance(coeffs, Mapping):
            coeffs = dict(enumerate(coeffs))
        for k in coeffs:
            if not isinstance(k, int) or k < 0:
                raise ValueError(f"bad exponent {k!r}")
        self._c = _clean(coeffs)
        self._hash = None

    # -- constructors
    @classmethod
    def _raw(cls, coeffs: Dict[int, Rational]) -> "UniPoly":
        # trusted: nonzero Fraction values, nonnegative int keys
        obj = cls.__new__(cls)
        obj._c = coeffs
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: Scalar) -> "UniPoly":
        return cls({0: c})

    @classmethod
    def t(cls) -> "UniPoly":
        return cls({1: 1})

    @classmethod
    def linear_root(cls, root: Scalar) -> "UniPoly":
        """The monic factor ``t - root``."""
        return cls({1: 1, 0: -as_rational(root)})

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar]) -> "UniPoly":
        dense = [Rational(1)]
        for r in roots:
            r = as_rational(r)
            nxt = [Rational(0)] * (len(dense) + 1)
            for k, c in enumerate(dense):
                nxt[k + 1] += c
                nxt[k] -= r * c
            dense = nxt
        return cls._raw({k: c for k, c in enumerate(dense) if c})

    # -- accessors
    @property
    def coeffs(self) -> Dict[int, Rational]:
        return dict(self._c)

    @property
    def degree(self) -> int:
        return max(self._c) if self._c else self.ZERO_DEGREE

    def coeff(self, k: int) -> Rational:
        return self._c.get(k, Rational(0))

    @property
    def lead(self) -> Rational:
        return self._c[self.degree] if self._c else Rational(0)

    def is_zero(self) -> bool:
        return not self._c

    def is_monic(self) -> bool:
        return self.lead == 1

    def __call__(self, x: Scalar) -> Rational:
        x = as_rational(x)
        get = self._c.get
        acc = Rational(0)
        for k in range(self.degree, -1, -1):
            acc = acc * x + get(k, 0)
        return acc

    # -- arithmetic
    @staticmethod
    def _coerce(other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, _RationalABC)):
            return UniPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
        return UniPoly._raw({k: v for k, v in c.items() if v})

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._raw({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c: Dict[int, Rational] = {}
        for i, a in self._c.items():
            for j, b in other._c.items():
                c[i + j] = c.get(i + j, 0) + a * b
        return UniPoly._raw({k: v for k, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = UniPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other):
        return upoly_divmod(self, other)

    def __floordiv__(self, other):
        return upoly_divmod(self, other)[0]

    def __mod__(self, other):
        return upoly_divmod(self, other)[1]

    def derivative(self) -> "UniPoly":
        return UniPoly({k - 1: k * v for k, v in self._c.items() if k > 0})

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self * (1 / self.lead)

    # -- comparison / display
    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __repr__(self):
        return f"UniPoly({self.to_str()!r})"

    def to_str(self, var: str = "t") -> str:
        if not self._c:
            return "0"
        parts = []
        for k in sorted(self._c, reverse=True):
            c = self._c[k]
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if mono and abs(c) == 1:
                body = mono
            elif mono:
                body = f"{fmt_rational(abs(c))}*{mono}"
            else:
                body = fmt_rational(abs(c))
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    __str__ = to_str


def upoly_divmod(a: UniPoly, b: UniPoly) -> Tuple[UniPoly, UniPoly]:
    """Euclidean division ``a = q*b + r`` with ``deg r < deg b``."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    db, da = b.degree, a.degree
    if da < db:
        return UniPoly._raw({}), a
    bc = [b._c.get(k, 0) for k in range(db + 1)]
    inv_lead = 1 / bc[db]
    r = [a._c.get(k, Rational(0)) for k in range(da + 1)]
    q = {}
    for top in range(da, db - 1, -1):
        c = r[top]
        if not c:
            continue
        c = c * inv_lead
        q[top - db] = c
        off = top - db
        for k in range(db + 1):
            if bc[k]:
                r[k + off] -= c * bc[k]
    return UniPoly._raw(q), UniPoly._raw({k: v for k, v in enumerate(r[:db]) if v})


def upoly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd (zero if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, upoly_divmod(a, b)[1]
    return a.monic()


class BiPoly:
    """Bivariate polynomial over Q in ``t1, t2``; keys are ``(deg_t1, deg_t2)``."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Union[Mapping[Tuple[int, int], Scalar], None] = None):
        coeffs = coeffs or {}
        for k in coeffs:
            if len(k) != 2 or min(k) < 0:
                raise ValueError(f"bad exponent {k!r}")
        self._c = _clean(coeffs)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: Dict[Tuple[int, int], Rational]) -> "BiPoly":
        obj = cls.__new__(cls)
        obj._c = coeffs
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: Scalar) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, a: int, n: int, c: Scalar = 1) -> "BiPoly":
        return cls({(a, n): c})

    @classmethod
    def from_uni(cls, u: UniPoly, n: int = 0) -> "BiPoly":
        """Embed ``u(t1) * t2**n``."""
        return cls({(k, n): v for k, v in u.coeffs.items()})

    @property
    def coeffs(self) -> Dict[Tuple[int, int], Rational]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def t2_strata(self) -> Dict[int, UniPoly]:
        """Split as ``sum_n u_n(t1) t2^n``."""
        parts: Dict[int, Dict[int, Rational]] = {}
        for (a, n), c in self._c.items():
            parts.setdefault(n, {})[a] = c
        return {n: UniPoly(v) for n, v in parts.items()}

    def subs_t1(self, x: Scalar) -> UniPoly:
        """Substitute ``t1 = x``; the result is a polynomial in ``t2``."""
        x = as_rational(x)
        c: Dict[int, Rational] = {}
        for (a, n), v in self._c.items():
            c[n] = c.get(n, 0) + v * x ** a
        return UniPoly(c)

    @staticmethod
    def _coerce(other):
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, _RationalABC)):
            return BiPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
        return BiPoly._raw({k: v for k, v in c.items() if v})

    __radd__ = __add__

    def __neg__(self):
        return BiPoly._raw({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c: Dict[Tuple[int, int], Rational] = {}
        for (a1, n1), x in self._c.items():
            for (a2, n2), y in other._c.items():
                k = (a1 + a2, n1 + n2)
                c[k] = c.get(k, 0) + x * y
        return BiPoly._raw({k: v for k, v in c.items() if v})

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def to_str(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for (a, n) in sorted(self._c, key=lambda k: (-k[1], -k[0])):
            c = self._c[(a, n)]
            vars_ = [v for v in (_pw("t1", a), _pw("t2", n)) if v]
            mono = "*".join(vars_)
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            elif mono:
                terms.append(f"{fmt_rational(c)}*{mono}")
            else:
                terms.append(fmt_rational(c))
        return " + ".join(terms).replace("+ -", "- ")

    __str__ = to_str

    def __repr__(self):
        return f"BiPoly({self.to_str()!r})"


def _pw(var: str, k: int) -> str:
    if k == 0:
        return ""
    return var if k == 1 else f"{var}^{k}"


def bipoly_d_dt2(a: BiPoly) -> BiPoly:
    """Formal partial derivative with respect to ``t2``."""
    return BiPoly({(i, n - 1): n * c for (i, n), c in a.coeffs.items() if n > 0})


T1 = BiPoly.monomial(1, 0)
T2 = BiPoly.monomial(0, 1)
