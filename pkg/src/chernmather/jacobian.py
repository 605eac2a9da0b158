"""Chern-Mather tables of Jacobian theta divisors and the Jacobian-detection criterion.

For the Jacobian of a smooth genus-g curve C, cc(IC_Theta) is Alt^{g-1} of the
conormal cycle of C (minus Alt^{g-3} when C is hyperelliptic), and the curve
has data c_0 = 2g-2, c_1 = [C] = w_1, c_r = 0 for r >= 2. The criterion runs
this backwards: from observed c_{M,0..2} of a fake Jacobian it reconstructs
the data of the underlying cycle and checks that c_2 vanishes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .combinatorics import binomial, middle_binomial
from .pontryagin import ThetaClass, pontryagin_mul, theta_basis
from .rational import RationalLike
from .series import c2_gap, e_coefficient, unit_index


class CurveCase(enum.Enum):
    NON_HYPERELLIPTIC = "nonhyp"
    HYPERELLIPTIC = "hyp"

    @classmethod
    def parse(cls, text: str | "CurveCase") -> "CurveCase":
        if isinstance(text, CurveCase):
            return text
        aliases = {
            "nonhyp": cls.NON_HYPERELLIPTIC,
            "non-hyperelliptic": cls.NON_HYPERELLIPTIC,
            "nonhyperelliptic": cls.NON_HYPERELLIPTIC,
            "hyp": cls.HYPERELLIPTIC,
            "hyperelliptic": cls.HYPERELLIPTIC,
        }
        try:
            return aliases[text.lower()]
        except KeyError:
            raise ValueError(f"unknown curve case {text!r}; use 'nonhyp' or 'hyp'") from None


def reference_multiplier(g: int, r: int, case: CurveCase) -> int:
    """Multiplier of w_r in c_{M,r}(cc(IC_Theta)) for a genus-g Jacobian."""
    m = middle_binomial(g - r - 1)
    if case is CurveCase.HYPERELLIPTIC:
        m -= binomial(2 * g - 2 * r - 2, g - r - 3)
    return m


def jacobian_reference_classes(g: int, case: CurveCase) -> list[ThetaClass]:
    """[c_{M,0}, ..., c_{M,g-1}] of cc(IC_Theta) on a Jacobian, as theta classes."""
    if g < 1:
        raise ValueError(f"genus must be >= 1, got {g}")
    case = CurveCase.parse(case)
    return [theta_basis(g, r).scale(reference_multiplier(g, r, case)) for r in range(g)]


def dim_omega(g: int, case: CurveCase) -> int:
    """Dimension of the Tannakian representation: Alt^{g-1}(C^{2g-2}), modulo Alt^{g-3} if hyperelliptic."""
    if g < 2:
        raise ValueError(f"dim_omega needs g >= 2, got {g}")
    case = CurveCase.parse(case)
    n = g - 1
    d = binomial(2 * n, n)
    if case is CurveCase.HYPERELLIPTIC:
        d -= binomial(2 * n, n - 2)
    return d


class Verdict(enum.Enum):
    JACOBIAN = "Jacobian"
    NOT_CONCLUSIVE = "NotConclusive"
    INAPPLICABLE = "Inapplicable"


@dataclass(frozen=True)
class CriterionVerdict:
    tag: Verdict
    reason: str
    # (c0, multiplier of w_1, multiplier of w_2) of the reconstructed cycle
    reconstruction: tuple[int, Fraction, Fraction] | None = None
    equations: tuple[str, ...] = field(default=())

    @property
    def is_jacobian(self) -> bool:
        return self.tag is Verdict.JACOBIAN


def _alt_combination(case: CurveCase, n: int, g: int, index) -> Fraction:
    """Coefficient of c^index in c_M(Alt^{g-1}) [- c_M(Alt^{g-3})] for degree-n data."""
    value = e_coefficient(n, g, g - 1, index)
    if case is CurveCase.HYPERELLIPTIC:
        value -= e_coefficient(n, g, g - 3, index)
    return value


def _degree_zero(case: CurveCase, g: int, c0: int) -> int:
    value = binomial(c0, g - 1)
    if case is CurveCase.HYPERELLIPTIC:
        value -= binomial(c0, g - 3)
    return value


def solve_degree(g: int, case: CurveCase, observed: RationalLike, cap: int | None = None) -> list[int]:
    """All integers c0 >= g-1 with C(c0, g-1) [- C(c0, g-3)] == observed, up to ``cap``.

    The non-hyperelliptic expression is strictly increasing from c0 = g-1; the
    hyperelliptic difference is strictly increasing from c0 = 2g-5. The scan
    stops once the value exceeds ``observed`` on the monotone range.
    """
    case = CurveCase.parse(case)
    observed = Fraction(observed)
    if observed.denominator != 1:
        return []
    target = observed.numerator
    if cap is None:
        cap = abs(target) + 2 * g
    monotone_from = g - 1 if case is CurveCase.NON_HYPERELLIPTIC else 2 * g - 5
    found = []
    for c0 in range(g - 1, cap + 1):
        value = _degree_zero(case, g, c0)
        if value == target:
            found.append(c0)
        if c0 >= monotone_from and value > target:
            break
    return found


def criterion_check(
    g: int,
    case: CurveCase,
    observed_c0: RationalLike,
    observed_c1: RationalLike,
    observed_c2: RationalLike,
    problematic_codim: int,
) -> CriterionVerdict:
    """Decide whether observed c_{M,0..2} of a fake Jacobian force a Jacobian.

    ``observed_c1`` and ``observed_c2`` are multipliers of w_1 and w_2. The
    steps follow the reconstruction: solve for the degree c0 of the cycle,
    then for its c_1 and c_2 multipliers; the answer is Jacobian iff c_2 = 0.
    """
    if g < 4:
        raise ValueError(f"criterion_check needs g >= 4, got {g}")
    case = CurveCase.parse(case)
    obs0, obs1, obs2 = (Fraction(v) for v in (observed_c0, observed_c1, observed_c2))
    label = "C(c0,g-1)" if case is CurveCase.NON_HYPERELLIPTIC else "C(c0,g-1) - C(c0,g-3)"

    if problematic_codim <= 2:
        return CriterionVerdict(
            Verdict.INAPPLICABLE,
            f"problematic locus has codimension {problematic_codim} <= 2; "
            "the Chern-Mather class is not known to be multiplicative up to degree 2",
        )

    equations = []
    solutions = solve_degree(g, case, obs0)
    if len(solutions) != 1:
        why = "no integer solution" if not solutions else f"ambiguous solutions {solutions}"
        return CriterionVerdict(
            Verdict.NOT_CONCLUSIVE,
            f"degree equation {label} = {obs0}: {why}",
            equations=(f"{label} = {obs0}  =>  {why}",),
        )
    c0 = solutions[0]
    equations.append(f"{label} = {obs0}  =>  c0 = {c0}")

    e1 = unit_index(g, 1)
    a1 = _alt_combination(case, c0, g, e1)
    if a1 == 0:
        raise ArithmeticError(f"vanishing c_1 coefficient at g={g}, c0={c0}")
    mu1 = obs1 / a1
    equations.append(f"{a1} * c1 = {obs1}  =>  c1 = {mu1} * w1")

    # c_M,2(Alt) = E(2e_1) c_1^2 + E(e_2) c_2, the square taken in the Pontryagin ring
    a11 = _alt_combination(case, c0, g, unit_index(g, 1, 2))
    b2 = _alt_combination(case, c0, g, unit_index(g, 2))
    if b2 == 0:
        raise ArithmeticError(f"vanishing c_2 coefficient at g={g}, c0={c0}")
    if case is CurveCase.HYPERELLIPTIC and c0 == 2 * g - 2 and b2 != c2_gap(g):
        raise AssertionError(f"c_2 coefficient {b2} disagrees with c2_gap({g})")
    c1_class = theta_basis(g, 1).scale(mu1)
    square = pontryagin_mul(c1_class, c1_class)[2]
    mu2 = (obs2 - a11 * square) / b2
    equations.append(f"{a11} * ({square} w2) + {b2} * c2 = {obs2} w2  =>  c2 = {mu2} * w2")

    reconstruction = (c0, mu1, mu2)
    if c0 != 2 * g - 2:
        return CriterionVerdict(
            Verdict.NOT_CONCLUSIVE,
            f"reconstructed degree c0 = {c0} differs from 2g-2 = {2 * g - 2}; "
            "observed c_M,0 is not dim omega of a genus-g Jacobian",
            reconstruction,
            tuple(equations),
        )
    if mu2 != 0:
        return CriterionVerdict(
            Verdict.NOT_CONCLUSIVE,
            f"reconstructed c2 = {mu2} * w2 is nonzero, so the cycle need not be a curve",
            reconstruction,
            tuple(equations),
        )
    return CriterionVerdict(
        Verdict.JACOBIAN,
        "reconstructed c2 vanishes: the underlying cycle is one-dimensional",
        reconstruction,
        tuple(equations),
    )


def adams_rescaled(observed: tuple[RationalLike, RationalLike, RationalLike], n: int) -> tuple[Fraction, ...]:
    """Observed (c0, c1, c2) multipliers pushed forward by [n]: c_r -> n^(2r) c_r."""
    return tuple(Fraction(v) * n ** (2 * r) for r, v in enumerate(observed))


def verdict_is_scale_invariant(
    g: int,
    case: CurveCase,
    observed_c0: RationalLike,
    observed_c1: RationalLike,
    observed_c2: RationalLike,
    problematic_codim: int,
    scales=(1, 2, 3, 5),
) -> bool:
    base = criterion_check(g, case, observed_c0, observed_c1, observed_c2, problematic_codim).tag
    for n in scales:
        c0, c1, c2 = adams_rescaled((observed_c0, observed_c1, observed_c2), n)
        if criterion_check(g, case, c0, c1, c2, problematic_codim).tag is not base:
            return False
    return True
