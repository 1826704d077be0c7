"""The built-in claims: parity congruences between hauptmoduln and mock theta
functions, congruences modulo 3, 5, 7, 13, the dissection identities they rest
on, and the triangular-number count.  Ids are stable.
"""

from __future__ import annotations

from typing import List

from .claims import (
    CONGRUENT,
    COUNT,
    IDENTITY,
    TRIANGULAR,
    VANISHING,
    Claim,
    ClaimError,
    CoefficientStream,
    Factor,
    SUITES,
    Term,
)

S = CoefficientStream.of


def c(level: int, stride: int = 1, offset: int = 0) -> CoefficientStream:
    return S(f"j{level}", stride, offset)


def eta(k: int, r: int = 1) -> Factor:
    return Factor(f"euler_{k}", r)


def term(*factors: Factor, coeff: int = 1, shift: int = 0) -> Term:
    return Term(coeff, shift, tuple(factors))


def _congruent(cid, lhs, rhs, m, source, suite):
    return Claim(cid, CONGRUENT, (lhs,), tuple(rhs), m, source, (suite,))


def _vanishing(cid, streams, m, source, suite):
    return Claim(cid, VANISHING, tuple(streams), (), m, source, (suite,))


def _identity(cid, lhs, rhs, source, suites=("identities",)):
    return Claim(cid, IDENTITY, tuple(lhs), tuple(rhs), None, source, tuple(suites))


def _level_two_power_parity() -> List[Claim]:
    s = "thm1"
    return [
        _congruent("T1-chain", c(1), [c(2), c(4), c(8), c(16)], 2,
                   "parities of j1, j2, j4, j8, j16 agree for n >= 1", s),
        _vanishing("T1-1", [c(1, 8, r) for r in range(7)], 2,
                   "c1(n) is even unless n = 7 mod 8", s),
        _congruent("T1-2", c(1, 8, -1), [S("mu2"), S("U0")], 2,
                   "c1(8n-1) matches the 2nd order mu2 and the 8th order U0 mod 2", s),
        _congruent("T1-3", c(1, 16, -1), [S("S0")], 2,
                   "c1(16n-1) matches the 8th order S0 mod 2", s),
        _congruent("T1-4", c(1, 16, 7), [S("S1")], 2,
                   "c1(16n+7) matches the 8th order S1 mod 2", s),
    ]


def _level_three_parity() -> List[Claim]:
    s = "thm2"
    return [
        _congruent("T2-chain", c(3), [c(6), c(12)], 2, "parities of j3, j6, j12 agree for n >= 1", s),
        _vanishing("T2-1", [c(3, 2, 0), c(3, 4, 1), c(3, 12, 7), c(3, 24, 11)], 2,
                   "c3(2n), c3(4n+1), c3(12n+7), c3(24n+11) are even", s),
        _congruent("T2-2", c(3, 24, -1),
                   [S("f3"), S("phi3"), S("phi6"), S("two_mu6", 2, 0), S("partition_gf")], 2,
                   "c3(24n-1) matches f3, phi3, phi6, 2mu6(2n) and p(n) mod 2", s),
        _congruent("T2-3", c(3, 24, -9), [S("psi6")], 2, "c3(24n-9) matches psi6 mod 2", s),
        Claim("T2-4", TRIANGULAR, (c(3, 24, 3),), (), 2,
              "c3(24n+3) is odd exactly at triangular n", (s,)),
        _congruent("T2-5", c(3, 12, 3), [S("lambda6")], 2, "c3(12n+3) matches lambda6 mod 2", s),
    ]


def _level_five_parity() -> List[Claim]:
    s = "thm3"
    vanish = [c(5, 2, 0), c(5, 8, 3)]
    vanish += [c(5, 40, 5 + 8 * i) for i in (1, 2, 3, 4)]
    vanish += [c(5, 40, 7 + 8 * j) for j in (0, 2)]
    return [
        _congruent("T3-chain", c(5), [c(10)], 2, "parities of j5 and j10 agree for n >= 1", s),
        _vanishing("T3-1", vanish, 2,
                   "c5(2n), c5(8n+3), c5(40n+13|21|29|37), c5(40n+7|23) are even", s),
        _congruent("T3-2", c(5, 40, -1), [S("X10")], 2, "c5(40n-1) matches the 10th order X10 mod 2", s),
        _congruent("T3-3", c(5, 40, -9), [S("chi10")], 2,
                   "c5(40n-9) matches the 10th order chi10 mod 2", s),
        _congruent("T3-4a", c(5, 8, 1), [c(5, 40, 5)], 2, "c5(8n+1) and c5(40n+5) agree mod 2", s),
        Claim("T3-4b", TRIANGULAR, (c(5, 8, 1), c(5, 40, 5)), (), 2,
              "c5(8n+1) and c5(40n+5) are odd exactly at triangular n", (s,)),
        _congruent("T3-5", c(5, 40, 15), [S("p10_gf")], 2,
                   "c5(40n+15) matches partitions with no part divisible by 10, mod 2", s),
    ]


def _odd_prime_chains() -> List[Claim]:
    s = "prop"
    return [
        _congruent("P-1", c(1), [c(3), c(9)], 3, "c1 = c3 = c9 mod 3", s),
        _congruent("P-2", c(2), [c(6), c(18)], 3, "c2 = c6 = c18 mod 3", s),
        _congruent("P-3", c(4), [c(12)], 3, "c4 = c12 mod 3", s),
        _congruent("P-4", c(1), [c(5), c(25)], 5, "c1 = c5 = c25 mod 5", s),
        _congruent("P-5", c(2), [c(10)], 5, "c2 = c10 mod 5", s),
        _congruent("P-6", c(1), [c(7)], 7, "c1 = c7 mod 7", s),
        _congruent("P-7", c(1), [c(13)], 13, "c1 = c13 mod 13", s),
        _congruent("P-f3chi3", S("f3"), [S("chi3")], 3,
                   "3rd order f3 and chi3 agree mod 3", s),
    ]


def _identities() -> List[Claim]:
    E4, E12, D, j1 = Factor("E4", 3), Factor("E12hat"), Factor("Delta", -1), Factor("j1")
    return [
        _identity(
            "I-2dis3",
            [term(eta(1), eta(3, -3))],
            [term(eta(2), eta(4, 2), eta(12, 2), eta(6, -7)),
             term(eta(2, 3), eta(12, 6), eta(4, -2), eta(6, -9), coeff=-1, shift=1)],
            "2-dissection of (q)/(q^3)^3",
        ),
        _identity(
            "I-3dis",
            [term(eta(1, 3), eta(3, -1))],
            [term(Factor("borwein_a", 1, 3)), term(Factor("borwein_c", 1, 3), coeff=-1, shift=1)],
            "3-dissection (q)^3/(q^3) = a(q^3) - q c(q^3)",
        ),
        _identity(
            "I-c2dis",
            [term(Factor("borwein_c"))],
            [term(Factor("negpoch_2_2", 3), eta(2), eta(6), Factor("negpoch_6_6", -1), coeff=3),
             term(Factor("borwein_c", 1, 4), shift=1)],
            "2-dissection of the cubic theta function c(q)",
        ),
        _identity(
            "I-cid",
            [term(Factor("borwein_c"))],
            [term(eta(3, 3), eta(1, -1), coeff=3)],
            "c(q) = 3 (q^3)^3/(q)",
        ),
        _identity(
            "I-JTP",
            [term(Factor("psi_theta"))],
            [term(Factor("negpoch_1_1", 2), eta(1))],
            "psi(q) = (-q;q)^2 (q) by the triple product",
        ),
        _identity(
            "I-10dis",
            [term(eta(1), eta(5, -1))],
            [term(eta(2), eta(8), eta(20, 3), eta(4, -1), eta(10, -3), eta(40, -1)),
             term(eta(4, 2), eta(40), eta(8, -1), eta(10, -2), coeff=-1, shift=1)],
            "2-dissection of (q)/(q^5)",
        ),
        _identity(
            "I-5dis",
            [term(eta(2), eta(5, -1))],
            [term(eta(50), eta(5, -1), Factor("rr_F", -1, 10)),
             term(eta(50), eta(5, -1), coeff=-1, shift=2),
             term(eta(50), eta(5, -1), Factor("rr_F", 1, 10), coeff=-1, shift=4)],
            "5-dissection of (q^2)/(q^5) through the Rogers-Ramanujan product F",
        ),
        _identity(
            "I-TX",
            [term(eta(1), eta(5))],
            [term(eta(4, 2), eta(10, 5), eta(2, -1), eta(5, -2), eta(20, -2)),
             term(eta(2, 5), eta(20, 2), eta(1, -2), eta(4, -2), eta(10, -1), coeff=-1, shift=1)],
            "2-dissection of (q)(q^5)",
        ),
        _identity(
            "I-H34",
            [term(eta(3, 3), eta(4), eta(12), eta(1, -1), eta(6, -2))],
            [term(eta(4, 4), eta(2, -2)), term(eta(12, 4), eta(6, -2), shift=1)],
            "2-dissection of (q^3)^3 (q^4)(q^12) / ((q)(q^6)^2)",
        ),
        _identity(
            "I-GM",
            [term(Factor("U0"))],
            [term(Factor("S0", 1, 2)), term(Factor("S1", 1, 2), shift=1)],
            "U0(q) = S0(q^2) + q S1(q^2)",
        ),
        _identity(
            "I-E12a",
            [term(E4, D), term(E12, D, coeff=-3)],
            [term(j1, coeff=-2072), term(coeff=1296000)],
            "(E4^3 - 3*691 E12)/Delta = -2072 j1 + 1296000",
            ("identities", "prop"),
        ),
        _identity(
            "I-E12b",
            [term(E4, D), term(E12, D, coeff=-7)],
            [term(j1, coeff=-4836), term(coeff=3024000)],
            "(E4^3 - 7*691 E12)/Delta = -4836 j1 + 3024000",
            ("identities", "prop"),
        ),
        _identity(
            "I-AL",
            [term(Factor("mu2"))],
            [term(Factor("mu2_appell_lerch"))],
            "mu2 from its Eulerian sum equals its Appell-Lerch form",
        ),
    ]


def _counts() -> List[Claim]:
    return [
        Claim("C-tri", COUNT, (c(3, 24, 3),), (), 2,
              "number of odd c3(24n+3) with n <= X is floor((1 + sqrt(1+8X))/2)", ("counts",)),
    ]


def builtin_claims() -> List[Claim]:
    return _level_two_power_parity() + _level_three_parity() + _level_five_parity() + _odd_prime_chains() + _identities() + _counts()


def select(selection: str, claims: List[Claim] = None) -> List[Claim]:
    """Claims in a suite, ``all``, or the single claim with that id."""
    claims = builtin_claims() if claims is None else claims
    if selection == "all":
        return list(claims)
    if selection in SUITES:
        return [c for c in claims if selection in c.suites]
    hit = [c for c in claims if c.id == selection]
    if not hit:
        raise ClaimError(f"unknown suite or claim id {selection!r}")
    return hit


# Progressions whose parity is pinned down for level 3: (stride, offset).
LEVEL3_PROGRESSIONS = ((2, 0), (4, 1), (12, 7), (24, 11), (24, -1), (24, -9), (24, 3))


def residues_covered(progressions, modulus: int) -> set:
    """Residues mod ``modulus`` hit by the union of progressions stride*n + offset
    (each stride must divide the modulus)."""
    out = set()
    for stride, offset in progressions:
        if modulus % stride:
            raise ValueError(f"stride {stride} does not divide {modulus}")
        out.update((offset + stride * k) % modulus for k in range(modulus // stride))
    return out
