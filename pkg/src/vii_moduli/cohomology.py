"""Dimension arithmetic for line bundles and the sets R(S), Q(S).

h^0 is read off from the effective-divisor solver (a line bundle on these
surfaces has sections iff it is O(D) for some D >= 0, and then exactly one
up to scale).  h^2 follows by Serre duality and h^1 from Riemann-Roch,
chi(M) = c1(M)(c1(M) - c1(K)) / 2 with c1(K)^2 = -1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalInconsistency, WrongChernClass
from .picard import K, LineBundle, dual, pic0_key, power, square_roots, tensor
from .surface import (
    SurfaceModel,
    degree,
    divisor_bundle,
    divisors_up_to,
    effective_divisor,
)


@dataclass(frozen=True)
class DimRecord:
    h0: int
    h1: int
    h2: int
    chi: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return self.h0, self.h1, self.h2, self.chi


def euler_char(s: SurfaceModel, a: LineBundle) -> int:
    n = a.n
    return -n * (n - 1) // 2


def h0(s: SurfaceModel, a: LineBundle) -> int:
    return 0 if effective_divisor(s, a) is None else 1


def dims(s: SurfaceModel, a: LineBundle) -> DimRecord:
    h_0 = h0(s, a)
    h_2 = h0(s, tensor(dual(a), K))
    chi = euler_char(s, a)
    h_1 = h_0 + h_2 - chi
    if h_1 < 0:
        raise InternalInconsistency(f"h1({a}) = {h_1} < 0")
    return DimRecord(h_0, h_1, h_2, chi)


def _require_pic0(a: LineBundle) -> None:
    if a.n != 0:
        raise WrongChernClass(f"{a} is not in Pic^0 (n={a.n})")


def ext_dim_E(s: SurfaceModel, L: LineBundle) -> int:
    """dim Ext^1(L^v K, L) = 1 + h0(L^2 K^v)."""
    _require_pic0(L)
    return 1 + h0(s, tensor(power(L, 2), dual(K)))


def ext_dim_A(s: SurfaceModel, R: LineBundle) -> int:
    """dim Ext^1(R, R^v K) = h0(R^2)."""
    _require_pic0(R)
    return h0(s, power(R, 2))


def in_R(s: SurfaceModel, L: LineBundle) -> bool:
    _require_pic0(L)
    return effective_divisor(s, power(L, 2)) is not None


def in_Q(s: SurfaceModel, L: LineBundle) -> bool:
    _require_pic0(L)
    return effective_divisor(s, tensor(power(L, 2), dual(K))) is not None


def _roots_of_divisors(
    s: SurfaceModel, shift: LineBundle, lo: Fraction | None, hi: Fraction
) -> list[LineBundle]:
    # Pic^0 square roots of shift (x) O(D) over all D >= 0, degree in [lo, hi].
    out = set()
    for d in divisors_up_to(s, 2 * hi - degree(s, shift)):
        target = tensor(shift, divisor_bundle(s, d))
        if target.n != 0:
            continue
        for root in square_roots(target):
            if root.logmod <= hi and (lo is None or root.logmod >= lo):
                out.add(root)
    return sorted(out, key=pic0_key)


def enumerate_R_below(s: SurfaceModel, bound: Fraction) -> list[LineBundle]:
    """Members of R(S) of degree <= bound, sorted by (degree, arg)."""
    return _roots_of_divisors(s, LineBundle.of(0), None, Fraction(bound))


def enumerate_R_window(s: SurfaceModel, lo: Fraction, hi: Fraction) -> list[LineBundle]:
    return _roots_of_divisors(s, LineBundle.of(0), Fraction(lo), Fraction(hi))


def enumerate_Q_window(s: SurfaceModel, lo: Fraction, hi: Fraction) -> list[LineBundle]:
    """Members of Q(S) with degree in [lo, hi], sorted by (degree, arg)."""
    return _roots_of_divisors(s, K, Fraction(lo), Fraction(hi))


def zlr_solutions(max_n: int) -> list[tuple[int, int]]:
    """Brute-force all (n, |Z|) with |n| <= max_n, |Z| >= 0, |Z| + n(n-1) = 0."""
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    zmax = max_n * (max_n + 1)
    return [
        (n, z)
        for n in range(-max_n, max_n + 1)
        for z in range(zmax + 1)
        if z + n * (n - 1) == 0
    ]
