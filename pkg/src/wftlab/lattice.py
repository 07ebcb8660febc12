"""Primitive integral vectors of the hypercubic space-time lattice.

A vector (t, x, y, z) is admissible when t^2 - x^2 - y^2 - z^2 = 1; its
perturbation speed (in units of c) is |(x, y, z)| / t = sqrt(t^2 - 1) / t.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from wftlab.core import DomainError

T_MAX_LIMIT = 10_000


class LatticeVector(NamedTuple):
    t: int
    x: int
    y: int
    z: int

    @property
    def spatial_norm2(self) -> int:
        return self.x * self.x + self.y * self.y + self.z * self.z

    def validate(self) -> "LatticeVector":
        if self.t < 1 or self.t * self.t - self.spatial_norm2 != 1:
            raise DomainError(f"{tuple(self)} does not satisfy t^2 - x^2 - y^2 - z^2 = 1 with t >= 1")
        return self


def _sorted_triples(n: int):
    """Non-negative a <= b <= c with a^2 + b^2 + c^2 = n."""
    a = 0
    while 3 * a * a <= n:
        b = a
        while a * a + 2 * b * b <= n:
            rest = n - a * a - b * b
            c = math.isqrt(rest)
            if c * c == rest and c >= b:
                yield a, b, c
            b += 1
        a += 1


def _signed_arrangements(triple):
    out = set()
    for perm in set(itertools.permutations(triple)):
        choices = [(v,) if v == 0 else (v, -v) for v in perm]
        out.update(itertools.product(*choices))
    return out


def vectors_at(t: int) -> list[LatticeVector]:
    """All admissible vectors with the given time component, sorted by (x, y, z)."""
    n = t * t - 1
    found = set()
    for triple in _sorted_triples(n):
        found.update(_signed_arrangements(triple))
    return [LatticeVector(t, *xyz) for xyz in sorted(found)]


def enumerate_vectors(t_max: int) -> list[LatticeVector]:
    """Every admissible vector with 1 <= t <= t_max in lexicographic (t, x, y, z) order."""
    if isinstance(t_max, bool) or not isinstance(t_max, int) or not 1 <= t_max <= T_MAX_LIMIT:
        raise DomainError(f"t_max must be an integer in [1, {T_MAX_LIMIT}], got {t_max!r}")
    out: list[LatticeVector] = []
    for t in range(1, t_max + 1):
        out.extend(vectors_at(t))
    return out


def perturbation_speed(v: LatticeVector) -> float:
    v = LatticeVector(*v).validate()
    return math.sqrt(v.spatial_norm2) / v.t


def perturbation_speed_squared(v: LatticeVector) -> Fraction:
    """Exact rational speed^2 = (x^2 + y^2 + z^2) / t^2."""
    v = LatticeVector(*v).validate()
    return Fraction(v.spatial_norm2, v.t * v.t)


@dataclass(frozen=True)
class SchildBound:
    """Outcome of sqrt(s2) <= x + y + z <= sqrt(3 s2) for the spatial part."""

    holds: bool
    left_strict: bool
    right_tight: bool


def schild_bound_check(v) -> SchildBound:
    """Check the double inequality on |x|, |y|, |z| in exact integer arithmetic.

    Accepts a LatticeVector or a bare (x, y, z) triple. Signs are dropped: the
    bound concerns the magnitudes of the spatial components.
    """
    comps = tuple(v)
    if len(comps) == 4:
        comps = comps[1:]
    if len(comps) != 3:
        raise DomainError("expected (t, x, y, z) or (x, y, z)")
    x, y, z = (abs(int(c)) for c in comps)
    norm2 = x * x + y * y + z * z
    if norm2 == 0:
        raise DomainError("spatial part must not be all zero")
    s2 = (x + y + z) ** 2
    return SchildBound(
        holds=norm2 <= s2 <= 3 * norm2,
        left_strict=norm2 < s2,
        right_tight=s2 == 3 * norm2,
    )
