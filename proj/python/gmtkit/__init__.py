"""Exact genus-0 Gromov-Witten invariants of projective hypersurfaces.

Two-point quasimap intersection numbers of the degree-k hypersurface in
CP^{N-1} are computed from the Chow-ring presentation of the quasimap moduli
space, and the generalized mirror transformation turns them into Gromov-Witten
invariants, virtual structure constants, mirror-map series, and instanton
numbers. Everything is exact: values are `fractions.Fraction`.
"""

from fractions import Fraction

from gmtkit import _core
from gmtkit._core import (
    CorrelatorConflictError,
    CorrelatorParseError,
    NeedsCorrelatorError,
    check_w_mirror_identity,
    enumerate_partitions,
    graded_dim,
    multiplicity,
    socle_degree,
    verify_gmt_identity,
)

__version__ = "0.1.0"

__all__ = [
    "CorrelatorConflictError",
    "CorrelatorParseError",
    "NeedsCorrelatorError",
    "check_w_mirror_identity",
    "cy_series_route",
    "ek_poly",
    "enumerate_partitions",
    "general_type_d1",
    "graded_dim",
    "gw_invariants",
    "instanton_numbers",
    "mirror_map",
    "multiplicity",
    "ring_integrate",
    "socle_degree",
    "symmetry_factor",
    "verify_gmt_identity",
    "vsc",
    "w_d1_closed",
    "w_integrand",
    "w_two_point",
]


def w_two_point(N, k, d, a, b):
    """w(O_{h^a} O_{h^b})_{0,d} as an exact Fraction."""
    return Fraction(_core.w_two_point(N, k, d, a, b))


def w_d1_closed(N, k, a, b):
    """d = 1 closed form: a coefficient of e^k(x, y)."""
    return Fraction(_core.w_d1_closed(N, k, a, b))


def vsc(N, k, d, n):
    """Virtual structure constant L~_n^{N,k,d}."""
    return Fraction(_core.vsc(N, k, d, n))


def general_type_d1(N, k, n):
    """k (L~_n - L~_{1+k-N}) at d = 1."""
    return Fraction(_core.general_type_d1(N, k, n))


def ek_poly(k):
    """Terms of e^k(x, y) as {(ex, ey): Fraction}."""
    return {tuple(exps): Fraction(c) for exps, c in _core.ek_poly(k)}


def w_integrand(N, k, d, a, b):
    """Terms of the w-integrand as {exponent tuple: Fraction}."""
    return {tuple(exps): Fraction(c) for exps, c in _core.w_integrand(N, k, d, a, b)}


def ring_integrate(N, d, terms):
    """Integration functional; terms maps exponent tuples to values."""
    packed = [(list(exps), str(Fraction(c))) for exps, c in terms.items()]
    return Fraction(_core.ring_integrate(N, d, packed))


def symmetry_factor(parts):
    """S(sigma) = prod 1/mul(i, sigma)! for a partition given by its parts."""
    return Fraction(_core.symmetry_factor(list(parts)))


def mirror_map(k, order):
    """w0, w1 and mirror-map coefficients as lists of Fractions."""
    raw = _core.mirror_map(k, order)
    return {name: [Fraction(c) for c in coeffs] for name, coeffs in raw.items()}


def cy_series_route(k, w_by_degree, d_max):
    """Gromov-Witten invariants from the series substitution route."""
    packed = {d: str(Fraction(v)) for d, v in w_by_degree.items()}
    return {d: Fraction(v) for d, v in _core.cy_series_route(k, packed, d_max).items()}


def gw_invariants(N, k, d, correlators=None):
    """Two-point Gromov-Witten invariants at degree d, keyed by (a, b)."""
    return {ab: Fraction(v) for ab, v in _core.gw_invariants(N, k, d, correlators).items()}


def instanton_numbers(d_max):
    """Quintic instanton numbers n_1 .. n_{d_max}."""
    return {d: Fraction(v) for d, v in _core.instanton_numbers(d_max).items()}
