"""Product-type q-series: Pochhammer symbols, eta quotients, Eisenstein series,
the hauptmoduln of genus-zero level, cubic theta functions and partition
generating functions.

Every constructor takes the absolute precision ``prec`` explicitly.  Those that
accept ``modulus`` compute directly in (Z/mZ)[[q]], reducing after each step.
"""

from __future__ import annotations

from math import isqrt
from typing import Optional, Sequence

from .series import (
    LaurentSeries,
    _div_binomial,
    _mul_binomial,
    inv,
    mul,
    power,
    reduce_mod,
    shift,
)

# Level -> ((k, r), ...) meaning prod eta(q^k)^r; level 1 is E4^3/Delta.
HAUPTMODUL_ETA = {
    2: ((1, 24), (2, -24)),
    3: ((1, 12), (3, -12)),
    4: ((1, 8), (4, -8)),
    5: ((1, 6), (5, -6)),
    6: ((2, 3), (3, 9), (1, -3), (6, -9)),
    7: ((1, 4), (7, -4)),
    8: ((1, 4), (4, 2), (2, -2), (8, -4)),
    9: ((1, 3), (9, -3)),
    10: ((2, 1), (5, 5), (1, -1), (10, -5)),
    12: ((4, 4), (6, 2), (2, -2), (12, -4)),
    13: ((1, 2), (13, -2)),
    16: ((1, 2), (8, 1), (2, -1), (16, -2)),
    18: ((6, 1), (9, 3), (3, -1), (18, -3)),
    25: ((1, 1), (25, -1)),
}

LEVELS = (1,) + tuple(HAUPTMODUL_ETA)


class EtaQuotientError(ValueError):
    """The eta quotient does not have an integral power of q in front."""


def _one(prec: int, modulus: Optional[int]) -> list:
    cs = [0] * max(prec, 0)
    if prec > 0:
        cs[0] = 1
    return cs


def pochhammer_inf(a: int, b: int, negated: bool, prec: int, modulus: Optional[int] = None) -> LaurentSeries:
    """(q^a; q^b)_inf, or (-q^a; q^b)_inf when ``negated``."""
    if a < 1 or b < 1:
        raise ValueError(f"pochhammer_inf needs a >= 1 and b >= 1, got a={a}, b={b}")
    sign = 1 if negated else -1
    cs = _one(prec, modulus)
    for e in range(a, prec, b):
        cs = _mul_binomial(cs, sign, e, modulus)
    return LaurentSeries(cs, 0, prec, modulus)


def pochhammer_fin(
    a: int, b: int, n: int, negated: bool, prec: int, modulus: Optional[int] = None
) -> LaurentSeries:
    """Finite product prod_{k<n} (1 -+ q^(a + k b))."""
    if b < 1 or n < 0:
        raise ValueError(f"pochhammer_fin needs b >= 1 and n >= 0, got b={b}, n={n}")
    sign = 1 if negated else -1
    if a < 0:
        raise ValueError("pochhammer_fin only handles nonnegative exponents")
    cs = _one(prec, modulus)
    for k in range(n):
        e = a + k * b
        if e == 0:
            cs = [(1 + sign) * c for c in cs]
            if modulus:
                cs = [c % modulus for c in cs]
        elif e < prec:
            cs = _mul_binomial(cs, sign, e, modulus)
    return LaurentSeries(cs, 0, prec, modulus)


def euler_inf(k: int, prec: int, modulus: Optional[int] = None) -> LaurentSeries:
    """(q^k; q^k)_inf from the pentagonal number theorem."""
    if k < 1:
        raise ValueError(f"euler_inf needs k >= 1, got {k}")
    cs = [0] * prec
    j = 0
    while True:
        e1 = k * j * (3 * j - 1) // 2
        if e1 >= prec:
            break
        s = -1 if j % 2 else 1
        cs[e1] = s
        e2 = k * j * (3 * j + 1) // 2
        if j and e2 < prec:
            cs[e2] = s
        j += 1
    return LaurentSeries(cs, 0, prec, modulus)


def eta_quotient(spec: Sequence[tuple], prec: int, modulus: Optional[int] = None) -> LaurentSeries:
    """prod eta(q^k)^r = q^(sum k r / 24) prod (q^k)_inf^r."""
    total = sum(k * r for k, r in spec)
    if total % 24:
        raise EtaQuotientError(f"sum of k*r is {total}, not divisible by 24")
    s = total // 24
    inner = prec - s
    if inner < 1:
        raise ValueError(f"precision {prec} does not exceed the leading exponent {s}")
    result = None
    for k, r in spec:
        if r == 0:
            continue
        f = power(euler_inf(k, inner, modulus), r)
        result = f if result is None else mul(result, f)
    if result is None:
        result = LaurentSeries([1], 0, inner, modulus)
    return shift(result, s)


def divisor_sigma(k: int, n_max: int) -> list:
    """sigma_k(n) for 0 <= n < n_max by sieve (entry 0 is 0)."""
    sig = [0] * n_max
    for d in range(1, n_max):
        dk = d**k
        for n in range(d, n_max, d):
            sig[n] += dk
    return sig


def eisenstein_E4(prec: int, modulus: Optional[int] = None) -> LaurentSeries:
    """1 + 240 sum sigma_3(n) q^n."""
    sig = divisor_sigma(3, prec)
    cs = [240 * s for s in sig]
    cs[0] = 1
    return LaurentSeries(cs, 0, prec, modulus)


def eisenstein_E12hat(prec: int, modulus: Optional[int] = None) -> LaurentSeries:
    """691 E12 = 691 + 65520 sum sigma_11(n) q^n, kept integral."""
    sig = divisor_sigma(11, prec)
    cs = [65520 * s for s in sig]
    cs[0] = 691
    return LaurentSeries(cs, 0, prec, modulus)


def delta(prec: int, modulus: Optional[int] = None) -> LaurentSeries:
    """q (q)_inf^24."""
    return shift(power(euler_inf(1, prec - 1, modulus), 24), 1)


def hauptmodul(N: int, prec: int, modulus: Optional[int] = None) -> LaurentSeries:
    """The normalized hauptmodul j_N = q^-1 + ... of the given genus-zero level."""
    if N == 1:
        e4 = eisenstein_E4(prec + 1, modulus)
        return mul(power(e4, 3), shift(inv(power(euler_inf(1, prec + 1, modulus), 24)), -1))
    try:
        spec = HAUPTMODUL_ETA[N]
    except KeyError:
        raise ValueError(f"no hauptmodul for level {N}; levels are {LEVELS}") from None
    return eta_quotient(spec, prec, modulus)


def _lattice_box(prec: int) -> int:
    # ceil(2 sqrt(prec/3)) + 2
    b = isqrt(4 * prec // 3)
    while 3 * b * b < 4 * prec:
        b += 1
    return b + 2


def _lattice_sum(prec: int, linear: bool) -> LaurentSeries:
    # With M = max(|m|, |n|) the exponent is at least 3M^2/4 - M/2 - 1/4,
    # increasing in M; the first excluded shell is checked explicitly.
    bound = _lattice_box(prec)

    def expo(m, n):
        return m * m + m * n + n * n + ((m + n) if linear else 0)

    shell = bound + 1
    low = min(
        min(expo(x, y), expo(y, x))
        for x in (shell, -shell)
        for y in range(-shell, shell + 1)
    )
    assert low >= prec, f"lattice box {bound} too small for precision {prec}"
    cs = [0] * prec
    for m in range(-bound, bound + 1):
        for n in range(-bound, bound + 1):
            e = expo(m, n)
            if e < prec:
                cs[e] += 1
    return LaurentSeries(cs, 0, prec)


def borwein_a(prec: int) -> LaurentSeries:
    """a(q) = sum over (m, n) in Z^2 of q^(m^2 + mn + n^2)."""
    return _lattice_sum(prec, False)


def borwein_c(prec: int) -> LaurentSeries:
    """c(q) = sum over (m, n) in Z^2 of q^(m^2 + mn + n^2 + m + n)."""
    return _lattice_sum(prec, True)


def theta_psi(prec: int) -> LaurentSeries:
    """psi(q) = sum_{n >= 0} q^(n(n+1)/2)."""
    cs = [0] * prec
    n = 0
    while n * (n + 1) // 2 < prec:
        cs[n * (n + 1) // 2] = 1
        n += 1
    return LaurentSeries(cs, 0, prec)


def rr_fraction_F(prec: int, modulus: Optional[int] = None) -> LaurentSeries:
    """(q;q^5)(q^4;q^5) / ((q^2;q^5)(q^3;q^5)), the Rogers-Ramanujan product."""
    cs = _one(prec, modulus)
    for e in range(1, prec, 5):
        cs = _mul_binomial(cs, -1, e, modulus)
    for e in range(4, prec, 5):
        cs = _mul_binomial(cs, -1, e, modulus)
    for e in range(2, prec, 5):
        cs = _div_binomial(cs, -1, e, modulus)
    for e in range(3, prec, 5):
        cs = _div_binomial(cs, -1, e, modulus)
    return LaurentSeries(cs, 0, prec, modulus)


def partition_gf(prec: int, modulus: Optional[int] = None) -> LaurentSeries:
    """1/(q)_inf = sum p(n) q^n."""
    return inv(euler_inf(1, prec, modulus))


def p10_gf(prec: int, modulus: Optional[int] = None) -> LaurentSeries:
    """(q^10)_inf/(q)_inf: partitions with no part divisible by 10."""
    return mul(euler_inf(10, prec, modulus), inv(euler_inf(1, prec, modulus)))


def reduced(f: LaurentSeries, modulus: Optional[int]) -> LaurentSeries:
    return f if modulus is None else reduce_mod(f, modulus)
