"""Surface models, the Gauduchon degree map and the effective-divisor solver."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .errors import ConstraintViolation
from .picard import HALF, LineBundle, Rational, as_fraction, named_bundle, power, tensor


class SurfaceKind(enum.Enum):
    HALF = "half"
    ENOKI = "enoki"
    PARABOLIC = "parabolic"


@dataclass(frozen=True)
class SurfaceModel:
    """A class VII surface with b2 = 1 plus the metric data that matters here.

    Build instances through :func:`mk_surface`, which derives ``deg_K`` on
    the Inoue surfaces and validates the rest.
    """

    kind: SurfaceKind
    vol_C: Fraction
    vol_E: Optional[Fraction]
    deg_K: Fraction
    theta_C: Fraction = Fraction(0)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "vol_C": str(self.vol_C),
            "vol_E": None if self.vol_E is None else str(self.vol_E),
            "deg_K": str(self.deg_K),
            "theta_C": str(self.theta_C),
        }

    @classmethod
    def from_dict(cls, d: dict) -> SurfaceModel:
        return mk_surface(
            d["kind"],
            Fraction(d["vol_C"]),
            vol_E=None if d.get("vol_E") is None else Fraction(d["vol_E"]),
            deg_K=Fraction(d["deg_K"]),
            theta_C=Fraction(d.get("theta_C", "0")),
        )


@dataclass(frozen=True)
class EffectiveDivisor:
    """The divisor rC + sE (s = 0 off the parabolic surface)."""

    r: int
    s: int = 0

    def __post_init__(self) -> None:
        if self.r < 0 or self.s < 0:
            raise ConstraintViolation(f"divisor multiplicities must be >= 0, got ({self.r},{self.s})")

    @property
    def is_zero(self) -> bool:
        return self.r == 0 and self.s == 0


def mk_surface(
    kind: SurfaceKind | str,
    vol_C: Rational | str,
    vol_E: Rational | str | None = None,
    deg_K: Rational | str | None = None,
    theta_C: Rational | str | None = None,
) -> SurfaceModel:
    try:
        kind = SurfaceKind(kind) if not isinstance(kind, SurfaceKind) else kind
    except ValueError:
        raise ConstraintViolation(f"unknown surface kind {kind!r}") from None
    vol_C = as_fraction(vol_C)
    if vol_C <= 0:
        raise ConstraintViolation(f"vol_C must be positive, got {vol_C}")

    if kind is SurfaceKind.PARABOLIC:
        if vol_E is None:
            raise ConstraintViolation("parabolic Inoue surface requires vol_E")
        vol_E = as_fraction(vol_E)
        if vol_E <= 0:
            raise ConstraintViolation(f"vol_E must be positive, got {vol_E}")
    elif vol_E is not None:
        raise ConstraintViolation(f"vol_E is only defined on the parabolic surface, not {kind.value}")

    if kind is SurfaceKind.HALF:
        if theta_C is not None and as_fraction(theta_C) != 0:
            raise ConstraintViolation("theta_C is not a parameter of the half Inoue surface")
        theta = Fraction(0)
    else:
        theta = Fraction(0) if theta_C is None else as_fraction(theta_C)
        if not 0 <= theta < 1:
            raise ConstraintViolation(f"theta_C must lie in [0,1), got {theta}")

    if kind is SurfaceKind.ENOKI:
        if deg_K is None:
            raise ConstraintViolation("Enoki surface requires deg_K (free metric parameter)")
        dk = as_fraction(deg_K)
    else:
        dk = -vol_C if kind is SurfaceKind.HALF else -vol_C - vol_E
        if deg_K is not None and as_fraction(deg_K) != dk:
            raise ConstraintViolation(
                f"deg_K on the {kind.value} Inoue surface is forced to {dk}, got {as_fraction(deg_K)}"
            )
    return SurfaceModel(kind, vol_C, vol_E, dk, theta)


def degree(s: SurfaceModel, a: LineBundle) -> Fraction:
    return a.n * s.deg_K + a.logmod


def rho(s: SurfaceModel) -> Fraction:
    return s.deg_K / 2


def divisor_bundle(s: SurfaceModel, d: EffectiveDivisor) -> LineBundle:
    """O(rC + sE) in coordinates."""
    if d.s and s.kind is not SurfaceKind.PARABOLIC:
        raise ConstraintViolation("E-multiplicity only exists on the parabolic surface")
    out = power(named_bundle(s, "O_C"), d.r)
    if d.s:
        out = tensor(out, power(named_bundle(s, "O_E"), d.s))
    return out


def divisor_volume(s: SurfaceModel, d: EffectiveDivisor) -> Fraction:
    return d.r * s.vol_C + (d.s * s.vol_E if d.s else 0)


def effective_divisor(s: SurfaceModel, a: LineBundle) -> Optional[EffectiveDivisor]:
    """The unique D >= 0 with a = O(D), or None if ``a`` has no sections."""
    if s.kind is SurfaceKind.HALF:
        # O(rC) = (-r, (0, r/2))
        r = -a.n
        if r < 0 or a.logmod != 0 or a.arg != (r * HALF) % 1:
            return None
        return EffectiveDivisor(r)

    if s.kind is SurfaceKind.ENOKI:
        if a.n != 0:
            return None
        sdiv = 0
    else:
        # O(rC + sE) = (-s, ((r - s) vol_C, (r - s) theta_C))
        sdiv = -a.n
        if sdiv < 0:
            return None
    q = a.logmod / s.vol_C
    if q.denominator != 1:
        return None
    r = sdiv + int(q)
    if r < 0 or a.arg != (int(q) * s.theta_C) % 1:
        return None
    return EffectiveDivisor(r, sdiv)


def divisors_up_to(s: SurfaceModel, max_volume: Fraction) -> Iterator[EffectiveDivisor]:
    """All effective divisors of volume <= max_volume, by increasing (s, r)."""
    if max_volume < 0:
        return
    smax = int(max_volume // s.vol_E) if s.kind is SurfaceKind.PARABOLIC else 0
    for sm in range(smax + 1):
        rest = max_volume - (sm * s.vol_E if sm else 0)
        for r in range(int(rest // s.vol_C) + 1):
            yield EffectiveDivisor(r, sm)
