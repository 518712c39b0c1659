"""Assembly of the moduli-space reports.

The polystable moduli space is the closed disc Pic^0_{<=rho} plus a centre
point, minus the finite set U(S) of parameters giving unstable E_L.  On an
Enoki surface with deg K >= 0 each R in R(S) of degree < rho produces a
transverse self-crossing: the puncture R^v(-C) is glued onto the point R.
Members with deg R = rho only touch the boundary circle and are dropped.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional, Union

from .bundles import ExtA, ExtE
from .cohomology import enumerate_Q_window, enumerate_R_below, enumerate_R_window, in_Q, in_R
from .errors import InternalInconsistency, UndefinedPoint, WrongChernClass
from .picard import F, LineBundle, dual, named_bundle, parse_line_bundle, pic0_key, tensor
from .surface import SurfaceKind, SurfaceModel, degree, rho

FILTRABLE_A0 = "FiltrableA0"
NON_FILTRABLE = "NonFiltrable"


@dataclass(frozen=True)
class Center:
    kind: str
    f_invariant: bool = True


@dataclass(frozen=True)
class Boundary:
    degree: Fraction
    card_touch: int
    smooth: bool


@dataclass(frozen=True)
class SingularPair:
    R: LineBundle
    node_degree: Fraction
    puncture: LineBundle
    puncture_degree: Fraction


@dataclass(frozen=True)
class Counts:
    card_R_le_rho: int
    card_U: int
    card_boundary_touch: int
    card_singular_pairs: int


@dataclass(frozen=True)
class ModuliReport:
    surface: SurfaceModel
    rho: Fraction
    center: Center
    boundary: Boundary
    singular_pairs: tuple[SingularPair, ...]
    boundary_touches: tuple[LineBundle, ...]
    punctures_U: tuple[LineBundle, ...]
    counts: Counts
    smooth: bool

    def to_dict(self) -> dict:
        return {
            "surface": self.surface.to_dict(),
            "rho": str(self.rho),
            "center": {"type": self.center.kind, "f_invariant": self.center.f_invariant},
            "boundary": {
                "degree": str(self.boundary.degree),
                "card_touch": str(self.boundary.card_touch),
                "smooth": self.boundary.smooth,
            },
            "singular_pairs": [
                {
                    "R": str(p.R),
                    "node_degree": str(p.node_degree),
                    "puncture": str(p.puncture),
                    "puncture_degree": str(p.puncture_degree),
                }
                for p in self.singular_pairs
            ],
            "boundary_touches": [str(r) for r in self.boundary_touches],
            "punctures_U": [str(u) for u in self.punctures_U],
            "counts": {
                "card_R_le_rho": str(self.counts.card_R_le_rho),
                "card_U": str(self.counts.card_U),
                "card_boundary_touch": str(self.counts.card_boundary_touch),
                "card_singular_pairs": str(self.counts.card_singular_pairs),
            },
            "smooth": self.smooth,
        }

    @classmethod
    def from_dict(cls, d: dict) -> ModuliReport:
        c = d["counts"]
        return cls(
            surface=SurfaceModel.from_dict(d["surface"]),
            rho=Fraction(d["rho"]),
            center=Center(d["center"]["type"], d["center"]["f_invariant"]),
            boundary=Boundary(
                Fraction(d["boundary"]["degree"]),
                int(d["boundary"]["card_touch"]),
                d["boundary"]["smooth"],
            ),
            singular_pairs=tuple(
                SingularPair(
                    parse_line_bundle(p["R"]),
                    Fraction(p["node_degree"]),
                    parse_line_bundle(p["puncture"]),
                    Fraction(p["puncture_degree"]),
                )
                for p in d["singular_pairs"]
            ),
            boundary_touches=tuple(parse_line_bundle(x) for x in d["boundary_touches"]),
            punctures_U=tuple(parse_line_bundle(x) for x in d["punctures_U"]),
            counts=Counts(
                int(c["card_R_le_rho"]),
                int(c["card_U"]),
                int(c["card_boundary_touch"]),
                int(c["card_singular_pairs"]),
            ),
            smooth=d["smooth"],
        )


def unstable_partner(s: SurfaceModel, R: LineBundle) -> LineBundle:
    """R -> R^v(-C), the bijection from R_{<=rho} onto U(S)."""
    return tensor(dual(R), dual(named_bundle(s, "O_C")))


def closed_form_card_R_le_rho(s: SurfaceModel) -> int:
    """|R(S) cap Pic^0_{<=rho}| without enumerating."""
    r = rho(s)
    if r < 0:
        return 0
    if s.kind is SurfaceKind.HALF:
        return 2
    t = r / s.vol_C
    return 2 * max(0, math.floor(t) + 1) + 2 * max(0, math.floor(t + Fraction(1, 2)))


def build_polystable_moduli(s: SurfaceModel) -> ModuliReport:
    r = rho(s)
    members = enumerate_R_below(s, r)
    pairs = []
    touches = []
    for R in members:
        if degree(s, R) == r:
            touches.append(R)
            continue
        U = unstable_partner(s, R)
        pairs.append(SingularPair(R, degree(s, R), U, degree(s, U)))
    punctures = tuple(unstable_partner(s, R) for R in members)

    for u in punctures:
        if u.n != 0 or not degree(s, u) < r:
            raise InternalInconsistency(f"puncture {u} not inside the open disc")

    center = Center(FILTRABLE_A0 if s.kind is SurfaceKind.HALF else NON_FILTRABLE)
    counts = Counts(len(members), len(punctures), len(touches), len(pairs))
    return ModuliReport(
        surface=s,
        rho=r,
        center=center,
        boundary=Boundary(r, len(touches), not touches),
        singular_pairs=tuple(pairs),
        boundary_touches=tuple(touches),
        punctures_U=punctures,
        counts=counts,
        smooth=not pairs,
    )


def twist_report(report: ModuliReport) -> ModuliReport:
    """Tensor every parameter with F and restore the canonical ordering."""
    s = report.surface
    pairs = sorted(
        (replace(p, R=tensor(p.R, F), puncture=tensor(p.puncture, F)) for p in report.singular_pairs),
        key=lambda p: pic0_key(p.R),
    )
    touches = sorted((tensor(t, F) for t in report.boundary_touches), key=pic0_key)
    members = sorted(
        [p.R for p in pairs] + touches,
        key=pic0_key,
    )
    return replace(
        report,
        singular_pairs=tuple(pairs),
        boundary_touches=tuple(touches),
        punctures_U=tuple(unstable_partner(s, R) for R in members),
    )


class LocalType(enum.Enum):
    SMOOTH_CURVE = "SmoothCurve"
    NODAL_CROSSING = "NodalCrossing"
    SMOOTH_NON_SEPARATED_PARTNER = "SmoothNonSeparatedPartner"
    CENTER_SMOOTH = "CenterSmooth"


@dataclass(frozen=True)
class ASide:
    """Marks the A_R point over R, as opposed to E_R."""

    R: LineBundle


@dataclass(frozen=True)
class CenterPoint:
    pass


def local_structure(s: SurfaceModel, p: Union[LineBundle, ASide, CenterPoint]) -> LocalType:
    """Germ of the simple-bundle moduli space at the given point."""
    if isinstance(p, CenterPoint):
        return LocalType.CENTER_SMOOTH
    if isinstance(p, ASide):
        if p.R.n != 0:
            raise WrongChernClass(f"{p.R} is not in Pic^0")
        if not in_R(s, p.R) or in_Q(s, p.R):
            raise UndefinedPoint(f"no simple bundle A_R over {p.R}")
        return LocalType.SMOOTH_NON_SEPARATED_PARTNER
    if p.n != 0:
        raise WrongChernClass(f"{p} is not in Pic^0")
    if in_Q(s, p):
        raise UndefinedPoint(f"{p} lies in Q(S); no simple E_L there")
    if in_R(s, p):
        return LocalType.NODAL_CROSSING
    return LocalType.SMOOTH_CURVE


@dataclass(frozen=True)
class NonSeparatedGroup:
    kind: str  # "pair" or "triple"
    members: tuple[str, ...]
    R: Optional[LineBundle] = None
    partner: Optional[LineBundle] = None

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "members": list(self.members),
            "R": None if self.R is None else str(self.R),
            "partner": None if self.partner is None else str(self.partner),
        }


@dataclass(frozen=True)
class SimpleModuliReport:
    surface: SurfaceModel
    window: tuple[Fraction, Fraction]
    nonseparated_groups: tuple[NonSeparatedGroup, ...]
    punctures_Q: tuple[LineBundle, ...]
    plane_minus_discrete: bool

    def to_dict(self) -> dict:
        return {
            "surface": self.surface.to_dict(),
            "window": [str(self.window[0]), str(self.window[1])],
            "nonseparated_groups": [g.to_dict() for g in self.nonseparated_groups],
            "punctures_Q": [str(q) for q in self.punctures_Q],
            "plane_minus_discrete": self.plane_minus_discrete,
        }


def build_simple_moduli(s: SurfaceModel, lo: Fraction, hi: Fraction) -> SimpleModuliReport:
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        raise ValueError(f"empty window [{lo}, {hi}]")
    groups: list[NonSeparatedGroup] = []
    if s.kind is SurfaceKind.HALF:
        if lo <= 0 <= hi:
            O = named_bundle(s, "O")
            groups.append(NonSeparatedGroup("triple", (str(ExtA(O)), str(ExtE(O)), str(ExtE(F)))))
    elif s.kind is SurfaceKind.ENOKI:
        for R in enumerate_R_window(s, lo, hi):
            groups.append(
                NonSeparatedGroup("pair", (str(ExtE(R)), str(ExtA(R))), R, unstable_partner(s, R))
            )
    return SimpleModuliReport(
        surface=s,
        window=(lo, hi),
        nonseparated_groups=tuple(groups),
        punctures_Q=tuple(enumerate_Q_window(s, lo, hi)),
        plane_minus_discrete=s.kind is SurfaceKind.PARABOLIC,
    )
