"""Push-forward to a point via parity-filtered coefficient extraction.

The iterated residue at infinity that computes the push-forward reduces,
after the substitution z -> 1/z and a geometric-series expansion, to a
single Laurent coefficient.  Concretely, with W the numerator (the class
times the antisymmetrizing product prod_{i<j}(z_j - z_i) and the space
prefactor): a term a * z^k contributes a * t^(k-1) when every component
of k is odd and nothing otherwise, and the collected contributions are
divided exactly by prod_{i<j}(t_j^2 - t_i^2).

For Schur classes there is also a closed form: the result vanishes unless
lam = 2*mu + staircase, and then equals a space constant times
s_mu(t_1^2, ..., t_n^2).  Every Schur push-forward computed here verifies
itself against that closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ExplicitSizeLimit,
    InternalInconsistency,
    InvalidPartition,
    MixedParity,
    NotSymmetric,
    VariableCountMismatch,
)
from .partitions import Partition, decompose
from .poly import SparsePoly
from .schur import schur_bialternant, schur_squared_args, vandermonde_factors
from .spaces import Space, SpaceKind

# Schur construction is n!-sized; refuse larger ranks.
MAX_RANK = 8


@dataclass(frozen=True)
class PushforwardResult:
    """Push-forward value in t, with its closed-form decomposition when the
    staircase decomposition lam = 2*mu + rho exists: then
    value == constant * s_mu(t^2)."""

    value: SparsePoly
    mu: Partition | None = None
    constant: Fraction | None = None

    @property
    def decomposed(self) -> bool:
        return self.mu is not None


def _check_numerator(p: SparsePoly, space: Space):
    if p.nvars != space.n:
        raise VariableCountMismatch(
            f"polynomial has {p.nvars} variables, space rank is {space.n}"
        )
    if p.has_negative_exponents():
        raise ValueError("push-forward input must be an ordinary polynomial")


def _extract_and_divide(W: SparsePoly, n: int) -> SparsePoly:
    # a * z^k with all k odd -> a * t^(k-1), then exact division by
    # prod_{i<j}(t_j^2 - t_i^2)
    shifted = {
        tuple(k - 1 for k in exps): coeff
        for exps, coeff in W.extract_odd_terms().items()
    }
    result = SparsePoly(n, shifted)
    for factor in vandermonde_factors(n, reverse=True, squared=True):
        result = result.exact_div(factor)
    return result


def pushforward_numerator(W: SparsePoly, space: Space) -> SparsePoly:
    """Push-forward from the numerator W = V * prod_{i<j}(z_j - z_i).

    The space prefactor is multiplied in first.  Inputs that are not of
    the antisymmetric product form surface as InexactDivision.
    """
    _check_numerator(W, space)
    return _extract_and_divide(W * space.numerator_prefactor(), space.n)


def pushforward_symmetric(V: SparsePoly, space: Space) -> SparsePoly:
    """Push-forward of the class whose fixed-point restriction is V."""
    _check_numerator(V, space)
    if not V.is_symmetric():
        raise NotSymmetric("push-forward input must be a symmetric polynomial")
    W = V
    for factor in vandermonde_factors(space.n, reverse=True):
        W = W * factor
    return pushforward_numerator(W, space)


def closed_form(lam: Partition, space: Space) -> PushforwardResult:
    """Fast path: zero unless lam = 2*mu + staircase, else the constant
    times s_mu(t^2), with no residue computation."""
    n = space.n
    if n > MAX_RANK:
        raise ExplicitSizeLimit(f"rank limited to {MAX_RANK}, got {n}")
    if lam.length > n:
        raise InvalidPartition(f"partition {lam} has more than {n} parts")
    mu = decompose(lam, n, space.staircase())
    if mu is None:
        return PushforwardResult(SparsePoly.zero(n))
    constant = space.closed_form_constant
    return PushforwardResult(constant * schur_squared_args(mu, n), mu, constant)


def pushforward_schur(lam: Partition, space: Space) -> PushforwardResult:
    """Residue-path push-forward of the Schur class s_lam, self-checked.

    The residue value is compared against the closed form; a mismatch can
    only come from an internal defect and raises InternalInconsistency.
    """
    n = space.n
    if n > MAX_RANK:
        raise ExplicitSizeLimit(f"rank limited to {MAX_RANK}, got {n}")
    if lam.length > n:
        raise InvalidPartition(f"partition {lam} has more than {n} parts")
    value = pushforward_symmetric(schur_bialternant(lam, n), space)
    expected = closed_form(lam, space)
    if value != expected.value:
        raise InternalInconsistency(
            f"residue and closed form disagree for lambda={lam} on {space.label()}"
        )
    return PushforwardResult(value, expected.mu, expected.constant)


def pushforward_parity_special(W: SparsePoly, space: Space) -> SparsePoly:
    """Parity dichotomy of the extraction, for parity-pure numerators.

    An all-even W pushes forward to exactly 0; an all-odd W with terms
    a * z^(2m+1) gives (sum a * t^(2m)) / prod_{i<j}(t_j^2 - t_i^2) times
    the space constant.  Identical to pushforward_numerator on every
    space; og-even delegates outright since its z_1...z_n prefactor swaps
    the two parity classes.
    """
    _check_numerator(W, space)
    n = space.n
    if not W:
        return SparsePoly.zero(n)
    classes = set()
    for exps in W.terms():
        odd = sum(k & 1 for k in exps)
        classes.add("odd" if odd == n else "even" if odd == 0 else "mixed")
    if classes not in ({"odd"}, {"even"}):
        raise MixedParity(f"numerator mixes exponent parities: {sorted(classes)}")
    if space.kind is SpaceKind.ORTHOGONAL_EVEN:
        return pushforward_numerator(W, space)
    if classes == {"even"}:
        return SparsePoly.zero(n)
    scale = Fraction(2 ** n) if space.kind is SpaceKind.ORTHOGONAL_ODD else Fraction(1)
    return _extract_and_divide(W, n) * scale
