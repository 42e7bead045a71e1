"""The three isotropic Grassmannians the push-forward engine works over."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .partitions import Partition, rho
from .poly import SparsePoly


class SpaceKind(enum.Enum):
    LAGRANGIAN = "lg"
    ORTHOGONAL_EVEN = "og-even"
    ORTHOGONAL_ODD = "og-odd"


@dataclass(frozen=True)
class Space:
    """A Grassmannian of maximal isotropic subspaces, with its rank n.

    * lg:      Lagrangian subspaces of C^(2n), dimension n(n+1)/2
    * og-even: orthogonal maximal isotropic in C^(2n), dimension n(n-1)/2
    * og-odd:  orthogonal maximal isotropic in C^(2n+1), dimension n(n+1)/2
    """

    kind: SpaceKind
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"space rank must be positive, got {self.n}")

    @property
    def dimension(self) -> int:
        if self.kind is SpaceKind.ORTHOGONAL_EVEN:
            return self.n * (self.n - 1) // 2
        return self.n * (self.n + 1) // 2

    def staircase(self) -> Partition:
        """The staircase appearing in the decomposition lam = 2*mu + rho."""
        if self.kind is SpaceKind.ORTHOGONAL_EVEN:
            return rho(self.n - 1)
        return rho(self.n)

    def numerator_prefactor(self) -> SparsePoly:
        """Factor multiplied into the residue numerator before extraction."""
        n = self.n
        if self.kind is SpaceKind.LAGRANGIAN:
            return SparsePoly.constant(n, 1)
        if self.kind is SpaceKind.ORTHOGONAL_ODD:
            return SparsePoly.constant(n, 2 ** n)
        return SparsePoly.monomial(n, (1,) * n, 2 ** (n - 1))

    @property
    def closed_form_constant(self) -> Fraction:
        """Scalar in front of s_mu(t^2) in the closed-form push-forward.

        For og-even this is the 2^(n-1) the residue prefactor produces.
        """
        if self.kind is SpaceKind.LAGRANGIAN:
            return Fraction(1)
        if self.kind is SpaceKind.ORTHOGONAL_ODD:
            return Fraction(2 ** self.n)
        return Fraction(2 ** (self.n - 1))

    def label(self) -> str:
        return f"{self.kind.value}({self.n})"


def lg(n: int) -> Space:
    return Space(SpaceKind.LAGRANGIAN, n)


def og_even(n: int) -> Space:
    return Space(SpaceKind.ORTHOGONAL_EVEN, n)


def og_odd(n: int) -> Space:
    return Space(SpaceKind.ORTHOGONAL_ODD, n)
