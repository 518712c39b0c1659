"""Filtrable rank-2 bundles with det = K and c2 = 0.

Three shapes occur: the central term E_L of 0 -> L -> E -> L^v K -> 0, the
central term A_R of 0 -> R^v K -> A -> R -> 0, and split sums L + M with
L M = K.  Isomorphism questions are answered through the classification
(``canonical_form``), never by searching for bundle maps.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .cohomology import in_Q, in_R
from .errors import AmbiguousFamily, ConstraintViolation, NotApplicable, OnlyTrivialExtension, WrongChernClass
from .picard import F, K, LineBundle, dual, named_bundle, parse_line_bundle, tensor
from .surface import EffectiveDivisor, SurfaceKind, SurfaceModel, degree, effective_divisor, rho


@dataclass(frozen=True)
class ExtE:
    L: LineBundle

    def __str__(self) -> str:
        return f"E:{self.L}"


@dataclass(frozen=True)
class ExtA:
    R: LineBundle

    def __str__(self) -> str:
        return f"A:{self.R}"


@dataclass(frozen=True)
class Split:
    L: LineBundle
    M: LineBundle

    def __post_init__(self) -> None:
        if tensor(self.L, self.M) != K:
            raise ConstraintViolation(f"split summands {self.L} and {self.M} do not multiply to K")

    def __str__(self) -> str:
        return f"S:{self.L}|{self.M}"


FiltrableBundle = Union[ExtE, ExtA, Split]


@dataclass(frozen=True)
class PointE:
    L: LineBundle

    def __str__(self) -> str:
        return f"PointE({self.L})"


@dataclass(frozen=True)
class PointA0:
    def __str__(self) -> str:
        return "PointA0"


@dataclass(frozen=True)
class PointSplit:
    L: LineBundle
    M: LineBundle

    def __str__(self) -> str:
        return f"PointSplit({self.L}|{self.M})"


@dataclass(frozen=True)
class NonFiltrableCenter:
    def __str__(self) -> str:
        return "NonFiltrableCenter"


CanonicalPoint = Union[PointE, PointA0, PointSplit, NonFiltrableCenter]


def parse_bundle(text: str) -> FiltrableBundle:
    """Parse ``E:<lb>``, ``A:<lb>`` or ``S:<lb>|<lb>``.

    Only the syntax and the n = 0 / det = K shape are checked here; use
    :func:`mk_ext_E` / :func:`mk_ext_A` for the surface-dependent checks.
    """
    tag, sep, body = text.strip().partition(":")
    if not sep:
        raise ValueError(f"bundle must look like E:..., A:... or S:...|..., got {text!r}")
    if tag == "E":
        return ExtE(parse_line_bundle(body))
    if tag == "A":
        return ExtA(parse_line_bundle(body))
    if tag == "S":
        left, bar, right = body.partition("|")
        if not bar:
            raise ValueError(f"split bundle needs two summands separated by '|', got {text!r}")
        return Split(parse_line_bundle(left), parse_line_bundle(right))
    raise ValueError(f"unknown bundle tag {tag!r}")


def _require_pic0(a: LineBundle) -> None:
    if a.n != 0:
        raise WrongChernClass(f"{a} is not in Pic^0 (n={a.n})")


def mk_ext_E(s: SurfaceModel, L: LineBundle) -> ExtE:
    _require_pic0(L)
    if in_Q(s, L):
        raise AmbiguousFamily(L)
    return ExtE(L)


def mk_ext_A(s: SurfaceModel, R: LineBundle) -> ExtA:
    _require_pic0(R)
    if not in_R(s, R):
        raise OnlyTrivialExtension(R)
    return ExtA(R)


def validate(s: SurfaceModel, b: FiltrableBundle) -> FiltrableBundle:
    """Re-run the constructor checks for a bundle parsed from text."""
    if isinstance(b, ExtE):
        return mk_ext_E(s, b.L)
    if isinstance(b, ExtA):
        return mk_ext_A(s, b.R)
    return b


def enoki_partner(s: SurfaceModel, L: LineBundle) -> LineBundle | None:
    """On an Enoki surface, the R in R(S) with L = R^v(-C), if any."""
    if s.kind is not SurfaceKind.ENOKI or L.n != 0:
        return None
    R = tensor(dual(L), dual(named_bundle(s, "O_C")))
    return R if in_R(s, R) else None


def is_simple(s: SurfaceModel, b: FiltrableBundle) -> bool:
    if isinstance(b, Split):
        return False
    if isinstance(b, ExtE):
        return not in_Q(s, b.L)
    return in_R(s, b.R) and not in_Q(s, b.R)


def _enoki_A_stable(s: SurfaceModel, R: LineBundle) -> bool:
    partner = tensor(dual(R), dual(named_bundle(s, "O_C")))
    if s.deg_K < 0:
        return degree(s, partner) < rho(s)
    return rho(s) < degree(s, R)


def _normalized_split(s: SurfaceModel, a: LineBundle, b: LineBundle) -> tuple[LineBundle, LineBundle]:
    def key(x: LineBundle):
        return degree(s, x), x.arg, x.n, x.logmod

    return (a, b) if key(a) <= key(b) else (b, a)


def parabolic_split_form(s: SurfaceModel, R: LineBundle) -> Split:
    """A_R = R(-E) + R^v(-C) on the parabolic Inoue surface."""
    a = tensor(R, dual(named_bundle(s, "O_E")))
    b = tensor(dual(R), dual(named_bundle(s, "O_C")))
    return Split(*_normalized_split(s, a, b))


def is_stable(s: SurfaceModel, b: FiltrableBundle) -> bool:
    if isinstance(b, Split):
        return False
    if isinstance(b, ExtA):
        if s.kind is SurfaceKind.HALF:
            return True
        if s.kind is SurfaceKind.ENOKI:
            return _enoki_A_stable(s, b.R)
        return False
    if in_Q(s, b.L):
        return False
    R = enoki_partner(s, b.L)
    if R is not None:
        return _enoki_A_stable(s, R)
    return degree(s, b.L) < rho(s)


def is_polystable(s: SurfaceModel, b: FiltrableBundle) -> bool:
    if isinstance(b, Split):
        return degree(s, b.L) == degree(s, b.M)
    if isinstance(b, ExtA) and s.kind is SurfaceKind.PARABOLIC:
        return is_polystable(s, parabolic_split_form(s, b.R))
    return is_stable(s, b)


def canonical_form(s: SurfaceModel, b: FiltrableBundle) -> CanonicalPoint:
    if isinstance(b, ExtE):
        return PointE(b.L)
    if isinstance(b, Split):
        return PointSplit(*_normalized_split(s, b.L, b.M))
    if s.kind is SurfaceKind.HALF:
        return PointA0()
    if s.kind is SurfaceKind.ENOKI:
        return PointE(tensor(dual(b.R), dual(named_bundle(s, "O_C"))))
    split = parabolic_split_form(s, b.R)
    return PointSplit(split.L, split.M)


def subbundles(s: SurfaceModel, b: FiltrableBundle) -> list[LineBundle]:
    """All holomorphic line subbundles of a simple filtrable bundle."""
    if isinstance(b, ExtA):
        if s.kind is SurfaceKind.HALF:
            return [K, tensor(F, K)]
        if s.kind is SurfaceKind.ENOKI:
            R = b.R
        else:
            raise NotApplicable(f"{b} is not simple on the parabolic surface")
    elif isinstance(b, ExtE):
        if in_Q(s, b.L):
            raise NotApplicable(f"{b} is not simple (L in Q(S))")
        R = enoki_partner(s, b.L)
        if R is None:
            return [b.L]
    else:
        raise NotApplicable(f"{b} is split, hence not simple")
    return [tensor(dual(R), K), tensor(dual(R), dual(named_bundle(s, "O_C")))]


def twist_by_F(s: SurfaceModel, b: FiltrableBundle) -> FiltrableBundle:
    if isinstance(b, ExtE):
        L = tensor(b.L, F)
        if in_Q(s, L) and not in_Q(s, b.L):
            raise AmbiguousFamily(L)  # Q(S) is F-stable; reaching this is a bug
        return ExtE(L)
    if isinstance(b, ExtA):
        return ExtA(tensor(b.R, F))
    return Split(tensor(b.L, F), tensor(b.M, F))


def a_iso_divisor_candidates(s: SurfaceModel, R: LineBundle, R2: LineBundle) -> list[EffectiveDivisor]:
    """Divisors D > 0 with R R2 = K(D); necessary for A_R = A_R2.

    The restriction condition R_D = R2_D is not checked.
    """
    _require_pic0(R)
    _require_pic0(R2)
    d = effective_divisor(s, tensor(tensor(R, R2), dual(K)))
    if d is None or d.is_zero:
        return []
    return [d]
