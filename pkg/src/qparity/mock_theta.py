"""Mock theta functions expanded from their Eulerian (q-hypergeometric) sums.

Each function is a sum over n >= 0 of

    sign^n q^e(n) * prod(numerator Pochhammers) / prod(denominator Pochhammers)

where every Pochhammer (+-q^a; q^b)_L has a length L(n) growing linearly in n.
Summands are built incrementally: moving from n to n + 1 multiplies in the
new factors and divides out the new denominator factors, each an O(prec)
pass over the running quotient.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .products import euler_inf, pochhammer_inf
from .series import (
    LaurentSeries,
    _div_binomial,
    _mul_binomial,
    inv,
    mul,
)


@dataclass(frozen=True)
class Pochhammer:
    """(sign q^a; q^b)_L with L = per_n * n + extra; sign +1 means (-q^a; q^b)."""

    a: int
    b: int
    per_n: int
    extra: int = 0
    negated: bool = True

    def length(self, n: int) -> int:
        return self.per_n * n + self.extra

    def factor_exponents(self, lo: int, hi: int) -> range:
        return range(self.a + lo * self.b, self.a + hi * self.b, self.b)


@dataclass(frozen=True)
class EulerianSum:
    """A sum_{n>=0} term(n) with term(n) = O(q^minexp(n))."""

    exponent: Callable[[int], int]
    numer: tuple = ()
    denom: tuple = ()
    alternating: bool = False
    extra: Optional[Callable[[int], tuple]] = None  # extra binomial (c, a) factors, per term
    constant: int = 0

    def minexp(self, n: int) -> int:
        return self.exponent(n)

    def terms(self, prec: int, modulus: Optional[int] = None) -> Iterator[tuple]:
        """Yield ``(n, minexp, summand)`` while minexp(n) < prec.

        Raises AssertionError if minexp ever decreases, since truncation at
        the first large exponent would then be unsound.
        """
        ratio = [1] + [0] * (prec - 1)
        lengths = [0] * (len(self.numer) + len(self.denom))
        last = None
        n = 0
        while True:
            e = self.exponent(n)
            if last is not None:
                assert e >= last, f"summand exponents decrease at n={n}"
            if e >= prec:
                return
            last = e
            width = prec - e
            del ratio[width:]
            for i, p in enumerate(self.numer + self.denom):
                target = p.length(n)
                sign = 1 if p.negated else -1
                for a in p.factor_exponents(lengths[i], target):
                    if a == 0:
                        raise ValueError("Pochhammer factor with zero exponent")
                    if a >= width:
                        continue
                    if i < len(self.numer):
                        ratio = _mul_binomial(ratio, sign, a, modulus)
                    else:
                        ratio = _div_binomial(ratio, sign, a, modulus)
                lengths[i] = target
            cs = ratio
            if self.extra is not None:
                for c, a in self.extra(n):
                    if a == 0:
                        cs = [(1 + c) * x for x in cs]
                    elif a < width:
                        cs = _mul_binomial(cs, c, a, modulus)
            if self.alternating and n % 2:
                cs = [-x for x in cs]
            yield n, e, LaurentSeries(cs, e, prec, modulus)
            n += 1

    def expand(self, prec: int, modulus: Optional[int] = None) -> LaurentSeries:
        acc = [0] * prec
        acc[0] = self.constant
        for _, e, term in self.terms(prec, modulus):
            for i, c in enumerate(term.coeffs, term.order):
                acc[i] += c
        return LaurentSeries(acc, 0, prec, modulus)


def _q(a, b, per_n, extra=0, negated=True):
    return Pochhammer(a, b, per_n, extra, negated)


# (q; q^2)_n
_Q_ODD = _q(1, 2, 1, negated=False)
# (-q; q^2)_n
_NEG_Q_ODD = _q(1, 2, 1)
# (-q^2; q^2)_n
_NEG_Q2 = _q(2, 2, 1)

MOCK_THETA = {
    "mu2": EulerianSum(lambda n: n * n, numer=(_Q_ODD,), denom=(_NEG_Q2, _NEG_Q2), alternating=True),
    "f3": EulerianSum(lambda n: n * n, denom=(_q(1, 1, 1), _q(1, 1, 1))),
    "phi3": EulerianSum(lambda n: n * n, denom=(_NEG_Q2,)),
    "chi3": EulerianSum(lambda n: n * n, numer=(_q(1, 1, 1),), denom=(_q(3, 3, 1),)),
    "phi6": EulerianSum(lambda n: n * n, numer=(_Q_ODD,), denom=(_q(1, 1, 2),), alternating=True),
    "psi6": EulerianSum(
        lambda n: (n + 1) ** 2, numer=(_Q_ODD,), denom=(_q(1, 1, 2, 1),), alternating=True
    ),
    "lambda6": EulerianSum(lambda n: n, numer=(_Q_ODD,), denom=(_q(1, 1, 1),), alternating=True),
    "two_mu6": EulerianSum(
        lambda n: n + 1,
        numer=(_Q_ODD,),
        denom=(_q(1, 1, 1, 1),),
        alternating=True,
        extra=lambda n: ((1, n),),
        constant=1,
    ),
    "U0": EulerianSum(lambda n: n * n, numer=(_NEG_Q_ODD,), denom=(_q(4, 4, 1),)),
    "S0": EulerianSum(lambda n: n * n, numer=(_NEG_Q_ODD,), denom=(_NEG_Q2,)),
    "S1": EulerianSum(lambda n: n * (n + 2), numer=(_NEG_Q_ODD,), denom=(_NEG_Q2,)),
    "X10": EulerianSum(lambda n: n * n, denom=(_q(1, 1, 2),), alternating=True),
    "chi10": EulerianSum(lambda n: (n + 1) ** 2, denom=(_q(1, 1, 2, 1),), alternating=True),
}

MOCK_THETA_NAMES = tuple(MOCK_THETA)


def mock_theta_series(name: str, prec: int, modulus: Optional[int] = None) -> LaurentSeries:
    """Expand the named mock theta function to precision ``prec``."""
    try:
        spec = MOCK_THETA[name]
    except KeyError:
        raise ValueError(f"unknown mock theta function {name!r}") from None
    if prec < 1:
        raise ValueError(f"precision must be >= 1, got {prec}")
    return spec.expand(prec, modulus)


def mu2_appell_lerch(prec: int, modulus: Optional[int] = None) -> LaurentSeries:
    """mu2 from its Appell-Lerch form.

    mu2 = (-q;q^2)_inf / (q^2;q^2)_inf * (1 + 2 sum_{n != 0} (-q)^T(n) / (1 + q^2n)),
    T(n) = n(n+1)/2.  For n < 0 the summand is rewritten with q^-2n in the
    numerator so every piece is a power series.
    """
    if prec < 1:
        raise ValueError(f"precision must be >= 1, got {prec}")
    acc = [0] * prec
    acc[0] = 1
    for n in range(1, prec + 1):
        pos = n * (n + 1) // 2
        neg = n * (n - 1) // 2 + 2 * n  # the n -> -n summand after rewriting
        if pos >= prec:
            break
        for e, t in ((pos, pos), (neg, n * (n - 1) // 2)):
            if e >= prec:
                continue
            c = -2 if t % 2 else 2
            # c q^e / (1 + q^2n) = c sum_k (-1)^k q^(e + 2nk)
            for k, i in enumerate(range(e, prec, 2 * n)):
                acc[i] += -c if k % 2 else c
    bracket = LaurentSeries(acc, 0, prec, modulus)
    front = mul(pochhammer_inf(1, 2, True, prec, modulus), inv(euler_inf(2, prec, modulus)))
    return mul(front, bracket)
