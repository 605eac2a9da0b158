"""Exclusion of hyperelliptic fake Jacobians in dimension 5.

A hyperelliptic fake Jacobian of dimension 5 on the bielliptic locus has
dim omega = C(8,4) - C(8,2) = 42, which places it in S_(1,2,2)^2 or S_(2,3)^10.
There, [2]_* cc(IC_Theta) = Alt^4(L) - Alt^2(L) for some Lagrangian cycle L,
so on H_2:  4 c_M,1(cc(IC_Theta)) = 14 c_M,1(L).  Pairing with theta_1 gives
44 resp. 92 on the left, neither of which is divisible by 7, contradiction.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .jacobian import CurveCase, dim_omega
from .pontryagin import adams, theta_basis
from .prym import ChiTag, SCycle, euler_characteristic
from .series import e_coefficient, unit_index

# c_M,1(Lambda_Xi'') . theta_1 for the two candidate boundary strata; external input
PAIRING_VALUES: dict[tuple[int, ...], int] = {(1, 2, 2): 44, (2, 3): 92}
CANDIDATE_LOCI = (SCycle((1, 2, 2), 2), SCycle((2, 3), 10))

CITATIONS = {
    "candidate_loci": "membership from Euler characteristic 42 on boundary strata of the bielliptic Prym locus (external Prym references)",
    "pairing_values": "intersection numbers c_M,1 . theta_1 on the normalization (external Prym reference), not recomputed",
    "relation": "[2]_* cc(IC_Theta) = Alt^4(L) - Alt^2(L) for some Lagrangian cycle L",
}


def divisibility_obstruction(a: int, m: int, v: int) -> bool:
    """True iff m divides a*v over the integers."""
    if m == 0:
        raise ValueError("modulus m must be nonzero")
    return (a * v) % m == 0


@dataclass(frozen=True)
class ExclusionReport:
    dim_omega: int
    candidate_loci: tuple[SCycle, ...]
    lhs_multiplier: int
    rhs_multiplier: int
    pairing_values: tuple[tuple[tuple[int, ...], int], ...]
    # (partition, divisible, residue of v modulo rhs/gcd)
    verdicts: tuple[tuple[tuple[int, ...], bool, int], ...]

    @property
    def excluded(self) -> bool:
        return all(not divisible for _, divisible, _ in self.verdicts)

    @property
    def modulus(self) -> int:
        return self.rhs_multiplier // gcd(self.lhs_multiplier, self.rhs_multiplier)

    def to_json(self) -> dict:
        return {
            "dim_omega": self.dim_omega,
            "candidate_loci": [
                {"partition": list(l.partition), "k": l.k, "chi": euler_characteristic(l).tag.value}
                for l in self.candidate_loci
            ],
            "lhs_multiplier": self.lhs_multiplier,
            "rhs_multiplier": self.rhs_multiplier,
            "modulus": self.modulus,
            "pairing_values": [{"partition": list(p), "value": v} for p, v in self.pairing_values],
            "verdicts": [{"partition": list(p), "divisible": d, "residue": r} for p, d, r in self.verdicts],
            "excluded": self.excluded,
            "citations": dict(CITATIONS),
        }


def genus5_hyperelliptic_report() -> ExclusionReport:
    g = 5
    # push-forward by [2] on H_2 multiplies by 2^2
    lhs = int(adams(theta_basis(g, 1), 2)[1])
    e1 = unit_index(g, 1)
    rhs = e_coefficient(8, g, 4, e1) - e_coefficient(8, g, 2, e1)
    if rhs.denominator != 1:
        raise ArithmeticError(f"non-integral rhs multiplier {rhs}")
    rhs = int(rhs)
    for locus in CANDIDATE_LOCI:
        # membership is cited, so chi there must not be claimed in closed form
        if euler_characteristic(locus).tag is not ChiTag.EXTERNAL_REFERENCE:
            raise AssertionError(f"{locus.label} unexpectedly has a closed-form chi")
    modulus = rhs // gcd(lhs, rhs)
    pairings = tuple((l.partition, PAIRING_VALUES[l.partition]) for l in CANDIDATE_LOCI)
    verdicts = tuple((p, divisibility_obstruction(lhs, rhs, v), v % modulus) for p, v in pairings)
    return ExclusionReport(
        dim_omega=dim_omega(g, CurveCase.HYPERELLIPTIC),
        candidate_loci=CANDIDATE_LOCI,
        lhs_multiplier=lhs,
        rhs_multiplier=rhs,
        pairing_values=pairings,
        verdicts=verdicts,
    )
