"""Exact arithmetic in Pic(S) = Z x Pic^0(S), Pic^0(S) = C^*.

A point of C^* is stored in log-polar form ``(logmod, arg)`` with both
coordinates rational and ``arg`` read in R/Z.  The identification is fixed
so that the Gauduchon degree of a Pic^0 element is exactly its ``logmod``.
A full line bundle is ``K^n (x) tw`` with ``tw`` in Pic^0.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Union

from .errors import OddChernClass, UnsupportedName

if TYPE_CHECKING:
    from .surface import SurfaceModel

Rational = Union[Fraction, int]

HALF = Fraction(1, 2)


def as_fraction(x: Rational | str) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` (or an integer) into a Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def format_rational(x: Fraction) -> str:
    return str(x)


@dataclass(frozen=True, order=False)
class Pic0Element:
    logmod: Fraction
    arg: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "logmod", as_fraction(self.logmod))
        object.__setattr__(self, "arg", as_fraction(self.arg) % 1)

    def __add__(self, other: Pic0Element) -> Pic0Element:
        return Pic0Element(self.logmod + other.logmod, self.arg + other.arg)

    def __neg__(self) -> Pic0Element:
        return Pic0Element(-self.logmod, -self.arg)

    def scale(self, k: Rational) -> Pic0Element:
        return Pic0Element(k * self.logmod, k * self.arg)


@dataclass(frozen=True)
class LineBundle:
    """The line bundle ``K^n (x) tw``.

    Equality of instances is isomorphism of the bundles they denote.
    """

    n: int
    tw: Pic0Element

    def __post_init__(self) -> None:
        if isinstance(self.n, bool) or not isinstance(self.n, int):
            raise TypeError("n must be an int")

    @classmethod
    def of(cls, n: int, logmod: Rational = 0, arg: Rational = 0) -> LineBundle:
        return cls(n, Pic0Element(logmod, arg))

    @property
    def logmod(self) -> Fraction:
        return self.tw.logmod

    @property
    def arg(self) -> Fraction:
        return self.tw.arg

    def __mul__(self, other: LineBundle) -> LineBundle:
        return tensor(self, other)

    def __invert__(self) -> LineBundle:
        return dual(self)

    def __pow__(self, k: int) -> LineBundle:
        return power(self, k)

    def __str__(self) -> str:
        return format_line_bundle(self)


O = LineBundle.of(0)
F = LineBundle.of(0, 0, HALF)
K = LineBundle.of(1)


def tensor(a: LineBundle, b: LineBundle) -> LineBundle:
    return LineBundle(a.n + b.n, a.tw + b.tw)


def dual(a: LineBundle) -> LineBundle:
    return LineBundle(-a.n, -a.tw)


def power(a: LineBundle, k: int) -> LineBundle:
    return LineBundle(k * a.n, a.tw.scale(k))


def square_roots(a: LineBundle) -> tuple[LineBundle, LineBundle]:
    """Both solutions r of r (x) r = a, the one with smaller arg first."""
    if a.n % 2:
        raise OddChernClass(f"{a} has odd Chern class n={a.n}; no square root")
    r = LineBundle(a.n // 2, Pic0Element(a.logmod / 2, a.arg / 2))
    return r, tensor(r, F)


def named_bundle(s: SurfaceModel, name: str) -> LineBundle:
    """Coordinates of O, F, K, O(C), O(E) on the given surface."""
    from .surface import SurfaceKind

    if name == "O":
        return O
    if name == "F":
        return F
    if name == "K":
        return K
    if name == "O_C":
        if s.kind is SurfaceKind.HALF:
            # K = F (x) O(-C)
            return tensor(F, dual(K))
        return LineBundle.of(0, s.vol_C, s.theta_C)
    if name == "O_E":
        if s.kind is not SurfaceKind.PARABOLIC:
            raise UnsupportedName(f"O_E exists only on the parabolic Inoue surface, not {s.kind.value}")
        # K = O(-C-E)
        return dual(tensor(K, named_bundle(s, "O_C")))
    raise UnsupportedName(f"unknown line bundle name {name!r}")


def format_line_bundle(a: LineBundle) -> str:
    return f"{a.n},{a.logmod},{a.arg}"


def parse_line_bundle(text: str) -> LineBundle:
    """Inverse of :func:`format_line_bundle`: ``n,logmod,arg``."""
    parts = text.strip().split(",")
    if len(parts) != 3:
        raise ValueError(f"line bundle must be 'n,logmod,arg', got {text!r}")
    n = parse_rational(parts[0])
    if n.denominator != 1:
        raise ValueError(f"Chern component must be an integer, got {parts[0]!r}")
    return LineBundle.of(int(n), parse_rational(parts[1]), parse_rational(parts[2]))


def pic0_key(a: LineBundle) -> tuple[Fraction, Fraction]:
    """Sort key (degree, arg) for Pic^0 elements."""
    return a.logmod, a.arg
