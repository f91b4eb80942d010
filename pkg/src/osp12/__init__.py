"""Exact computations for the admissible-level affine vertex operator superalgebra of osp(1|2).

Modules: ``exactmath`` (rationals, polynomials), ``admissible`` (levels and
weights), ``zhu`` (Zhu algebra and bimodules), ``fusion`` (closed form and
bimodule oracle), ``pbw`` (super PBW normal forms and the P/Q calculus),
``verma`` (truncated Verma modules), ``cli``.
"""

from .admissible import AdmissiblePair, AdmissibleWeight, InvalidPair, validate_pair
from .exactmath import Rational

__version__ = "0.1.0"
__all__ = ["AdmissiblePair", "AdmissibleWeight", "InvalidPair", "validate_pair", "Rational"]
