"""Fixed-point localization: the independent ground truth.

The push-forward of a class restricting to V at the torus fixed points is
the sum over fixed points of V(eps_1*t_1, ..., eps_n*t_n) divided by the
equivariant Euler class of the tangent space there.  Everything here is
exact rational arithmetic at explicitly chosen generic parameter points;
no residue machinery is involved, which is what makes it usable as an
oracle for the residue engine.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import lcm

from .errors import DegenerateEulerClass, VariableCountMismatch
from .poly import SparsePoly
from .spaces import Space, SpaceKind

_ZERO = Fraction(0)


@dataclass(frozen=True)
class FixedPoint:
    """Torus fixed point encoded by a sign vector; +1 in slot i means the
    i-th isotropic coordinate plane is taken positively."""

    signs: tuple

    def __post_init__(self):
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"signs must be +-1, got {self.signs}")


class GenericPoint:
    """Rational parameter point at which no Euler factor can vanish.

    Entries must be nonzero with pairwise distinct absolute values.
    """

    __slots__ = ("values",)

    def __init__(self, values):
        vals = tuple(Fraction(v) for v in values)
        if any(not v for v in vals):
            raise DegenerateEulerClass(f"zero coordinate in {vals}")
        if len({abs(v) for v in vals}) != len(vals):
            raise DegenerateEulerClass(
                f"coordinates with equal absolute value in {vals}"
            )
        self.values = vals

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other):
        if isinstance(other, GenericPoint):
            return self.values == other.values
        return NotImplemented

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return f"GenericPoint({', '.join(str(v) for v in self.values)})"


def default_point(n: int) -> GenericPoint:
    """The reproducible default t = (1, 2, ..., n)."""
    return GenericPoint(range(1, n + 1))


def seeded_points(n: int, count: int, seed: int) -> list:
    """Deterministic pseudo-random generic rational points."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        values = []
        for _ in range(n):
            numerator = rng.randrange(1, 400)
            denominator = rng.randrange(1, 8)
            sign = 1 if rng.randrange(2) else -1
            values.append(Fraction(sign * numerator, denominator))
        if len({abs(v) for v in values}) == n:
            out.append(GenericPoint(values))
    return out


def fixed_points(space: Space) -> list:
    """All torus fixed points, in a fixed order.

    LG and og-odd have all 2^n sign vectors.  For og-even one connected
    component is used: the sign vectors whose positive count is congruent
    to n mod 2 (2^(n-1) of them).
    """
    signs = list(product((1, -1), repeat=space.n))
    if space.kind is SpaceKind.ORTHOGONAL_EVEN:
        parity = space.n % 2
        signs = [s for s in signs if s.count(1) % 2 == parity]
    return [FixedPoint(s) for s in signs]


def euler_factor(space: Space, point: FixedPoint, at: GenericPoint) -> Fraction:
    """Equivariant Euler class of the tangent space at the fixed point.

    LG:      prod_{i<=j} (eps_i t_i + eps_j t_j)   (i == j gives 2 eps_i t_i)
    og-even: prod_{i<j}  (eps_i t_i + eps_j t_j)
    og-odd:  prod_{i<j}  (eps_i t_i + eps_j t_j) * prod_i eps_i t_i
    """
    if len(point.signs) != space.n or len(at.values) != space.n:
        raise VariableCountMismatch("fixed point or parameter point has wrong length")
    return _euler_cached(space, point.signs, at.values)


@lru_cache(maxsize=1 << 14)
def _euler_cached(space: Space, signs, values) -> Fraction:
    signed = [s * v for s, v in zip(signs, values)]
    result = Fraction(1)
    for i in range(space.n):
        for j in range(i + 1, space.n):
            factor = signed[i] + signed[j]
            if not factor:
                raise DegenerateEulerClass(
                    f"tangent weight vanished at signs={signs}, t={values}"
                )
            result *= factor
    if space.kind is SpaceKind.LAGRANGIAN:
        for x in signed:
            result *= 2 * x
    elif space.kind is SpaceKind.ORTHOGONAL_ODD:
        for x in signed:
            result *= x
    return result


def localization_sum(V: SparsePoly, space: Space, at: GenericPoint) -> Fraction:
    """Exact fixed-point sum of V(eps * t) / Euler factor.

    The restrictions at all fixed points differ only by signs of the
    monomial values, so each monomial is evaluated once over a common
    denominator and reused with a parity sign; this keeps the inner loop
    in integer arithmetic without changing the summation formula.
    """
    if V.nvars != space.n:
        raise VariableCountMismatch(
            f"class has {V.nvars} variables, space rank is {space.n}"
        )
    points = fixed_points(space)
    items = list(V.terms().items())
    if not items:
        return _ZERO
    values = at.values
    if V.has_negative_exponents():
        total = _ZERO
        for fp in points:
            signed = [s * v for s, v in zip(fp.signs, values)]
            total += V.evaluate(signed) / euler_factor(space, fp, at)
        return total

    n = space.n
    scale = lcm(*(v.denominator for v in values))
    numerators = [int(v * scale) for v in values]
    coeff_scale = lcm(*(c.denominator for _, c in items))
    max_degree = max(sum(e) for e, _ in items)
    power_table = [dict() for _ in range(n)]
    scale_powers = {}
    monomials = []
    for exps, coeff in items:
        value = int(coeff * coeff_scale)
        deficit = max_degree - sum(exps)
        if deficit not in scale_powers:
            scale_powers[deficit] = scale ** deficit
        value *= scale_powers[deficit]
        mask = 0
        for i, k in enumerate(exps):
            if k:
                p = power_table[i].get(k)
                if p is None:
                    p = numerators[i] ** k
                    power_table[i][k] = p
                value *= p
            if k & 1:
                mask |= 1 << i
        monomials.append((value, mask))
    shared_denominator = coeff_scale * scale ** max_degree

    total = _ZERO
    for fp in points:
        negatives = 0
        for i, s in enumerate(fp.signs):
            if s < 0:
                negatives |= 1 << i
        acc = 0
        for value, mask in monomials:
            if (mask & negatives).bit_count() & 1:
                acc -= value
            else:
                acc += value
        total += Fraction(acc, shared_denominator) / euler_factor(space, fp, at)
    return total


@dataclass(frozen=True)
class CrossCheckSample:
    point: tuple
    lhs: Fraction  # localization sum
    rhs: Fraction  # residue result evaluated at the point

    @property
    def match(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict:
        return {
            "point": [str(v) for v in self.point],
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "match": self.match,
        }


@dataclass(frozen=True)
class CrossCheckReport:
    space: Space
    samples: tuple

    @property
    def all_match(self) -> bool:
        return all(s.match for s in self.samples)

    def to_dict(self) -> dict:
        return {
            "space": self.space.label(),
            "all_match": self.all_match,
            "samples": [s.to_dict() for s in self.samples],
        }


def cross_check(V: SparsePoly, space: Space, trials: int = 20, seed: int = 0,
                claimed: SparsePoly | None = None) -> CrossCheckReport:
    """Compare the fixed-point sum against the residue result per point.

    Points are the default (1, ..., n) plus ``trials`` seeded random ones.
    ``claimed`` substitutes a caller-supplied result polynomial for the
    residue computation, which is how a corrupted value is detected.
    """
    from .pushforward import pushforward_symmetric

    if claimed is None:
        claimed = pushforward_symmetric(V, space)
    points = [default_point(space.n)] + seeded_points(space.n, trials, seed)
    samples = tuple(
        CrossCheckSample(
            pt.values,
            localization_sum(V, space, pt),
            claimed.evaluate(pt.values),
        )
        for pt in points
    )
    return CrossCheckReport(space, samples)
