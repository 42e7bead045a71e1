"""Cross-validation sweeps: residue path vs closed form vs fixed-point sums.

Used by the CLI ``verify`` and ``table`` commands and by the acceptance
suite.  For og-even the fixed-point comparison is only applied to
decomposable partitions: the single-component fixed-point sum and the
residue extraction agree exactly on those, while on other classes the
two sides compute different (both well-defined) quantities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ExplicitSizeLimit
from .localization import default_point, localization_sum, seeded_points
from .partitions import Partition, partitions_up_to_weight
from .poly import SparsePoly
from .pushforward import MAX_RANK, PushforwardResult, closed_form, pushforward_symmetric
from .schur import schur_bialternant, schur_squared_args
from .spaces import Space, SpaceKind

ALL_KINDS = (SpaceKind.LAGRANGIAN, SpaceKind.ORTHOGONAL_EVEN, SpaceKind.ORTHOGONAL_ODD)


@dataclass(frozen=True)
class CaseResult:
    space: Space
    lam: Partition
    residue: SparsePoly
    closed: PushforwardResult
    closed_match: bool
    oracle_points: int           # number of points compared (0 = skipped)
    oracle_match: bool | None    # None when skipped
    measured_constant: Fraction | None

    @property
    def ok(self) -> bool:
        return self.closed_match and self.oracle_match is not False

    def to_dict(self) -> dict:
        return {
            "space": self.space.kind.value,
            "n": self.space.n,
            "lambda": list(self.lam.parts),
            "value": self.residue.render("t"),
            "mu": list(self.closed.mu.parts) if self.closed.mu is not None else None,
            "constant": str(self.closed.constant) if self.closed.constant is not None else None,
            "closed_match": self.closed_match,
            "oracle_points": self.oracle_points,
            "oracle_match": self.oracle_match,
            "measured_constant": (
                str(self.measured_constant) if self.measured_constant is not None else None
            ),
            "ok": self.ok,
        }


def measure_constant(value: SparsePoly, mu: Partition, n: int) -> Fraction | None:
    """The scalar C with value == C * s_mu(t^2), or None if not proportional."""
    reference = schur_squared_args(mu, n)
    lead = reference.leading_term()
    assert lead is not None
    exps, ref_coeff = lead
    ratio = value.coefficient(exps) / ref_coeff
    if value == ratio * reference:
        return ratio
    return None


def evaluate_case(space: Space, lam: Partition, points) -> CaseResult:
    n = space.n
    schur = schur_bialternant(lam, n)
    residue = pushforward_symmetric(schur, space)
    expected = closed_form(lam, space)
    closed_match = residue == expected.value

    measured = None
    if expected.mu is not None and residue:
        measured = measure_constant(residue, expected.mu, n)

    skip_oracle = (
        space.kind is SpaceKind.ORTHOGONAL_EVEN and expected.mu is None
    )
    if skip_oracle:
        oracle_points, oracle_match = 0, None
    else:
        oracle_points = len(points)
        oracle_match = all(
            localization_sum(schur, space, pt) == residue.evaluate(pt.values)
            for pt in points
        )
    return CaseResult(
        space, lam, residue, expected, closed_match, oracle_points, oracle_match, measured
    )


@dataclass
class VerificationReport:
    n_max: int
    weight_max: int
    seed: int
    oracle_points: int
    cases: list
    fault_injected: bool

    @property
    def all_ok(self) -> bool:
        return all(case.ok for case in self.cases)

    def og_even_constants(self) -> dict:
        """Measured og-even proportionality constant per rank.

        The value is None for a rank whose cases did not all agree on a
        single constant.
        """
        found: dict = {}
        for case in self.cases:
            if case.space.kind is not SpaceKind.ORTHOGONAL_EVEN:
                continue
            if case.measured_constant is None:
                continue
            found.setdefault(case.space.n, set()).add(case.measured_constant)
        return {n: (vals.pop() if len(vals) == 1 else None) for n, vals in found.items()}

    def to_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "weight_max": self.weight_max,
            "seed": self.seed,
            "oracle_points": self.oracle_points,
            "fault_injected": self.fault_injected,
            "all_ok": self.all_ok,
            "og_even_constants": {
                str(n): (str(c) if c is not None else None)
                for n, c in sorted(self.og_even_constants().items())
            },
            "cases": [case.to_dict() for case in self.cases],
        }


def run_verification(n_max: int = 3, weight_max: int = 9, kinds=None, seed: int = 0,
                     oracle_points: int = 2, inject_fault: bool = False) -> VerificationReport:
    """Run residue/closed/fixed-point comparisons over all partitions with
    at most n parts and bounded weight, for every requested space kind."""
    if n_max > MAX_RANK:
        raise ExplicitSizeLimit(f"n_max limited to {MAX_RANK}, got {n_max}")
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if kinds is None:
        kinds = ALL_KINDS
    cases = []
    for kind in kinds:
        for n in range(1, n_max + 1):
            space = Space(kind, n)
            points = [default_point(n)] + seeded_points(n, oracle_points, seed)
            for lam in partitions_up_to_weight(n, weight_max):
                cases.append(evaluate_case(space, lam, points))
    if inject_fault and cases:
        first = cases[0]
        corrupted = first.residue + 1
        cases[0] = CaseResult(
            first.space,
            first.lam,
            corrupted,
            first.closed,
            corrupted == first.closed.value,
            first.oracle_points,
            False if first.oracle_points else None,
            first.measured_constant,
        )
    return VerificationReport(n_max, weight_max, seed, oracle_points, cases, inject_fault)


def table_rows(space: Space, weight_max: int) -> list:
    """Rows {space, n, lambda, mu, constant, value} for the self-checked
    push-forward of every s_lam with weight <= weight_max.

    ``terms`` carries the lossless serialization of the value polynomial;
    the CSV writer ignores it.
    """
    from .pushforward import pushforward_schur

    rows = []
    for lam in partitions_up_to_weight(space.n, weight_max):
        result = pushforward_schur(lam, space)
        rows.append(
            {
                "space": space.kind.value,
                "n": space.n,
                "lambda": lam.to_text(),
                "mu": result.mu.to_text() if result.mu is not None else "-",
                "constant": str(result.constant) if result.constant is not None else "-",
                "value": result.value.render("t"),
                "terms": result.value.to_records(),
            }
        )
    return rows
