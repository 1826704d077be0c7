"""Truncated Laurent series in q with exact integer coefficients.

A series stores the coefficients of q^order, ..., q^(prec-1).  Everything
below ``order`` is zero, everything at or above ``prec`` is unknown.  A series
may carry a modulus, in which case every coefficient is kept as its least
nonnegative residue and arithmetic happens in (Z/mZ)[[q]].
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

import gmpy2

__all__ = [
    "LaurentSeries",
    "PrecisionError",
    "NotInvertibleError",
    "Comparison",
    "monomial",
    "add",
    "sub",
    "negate",
    "scale",
    "mul",
    "inv",
    "power",
    "shift",
    "truncate",
    "substitute_power",
    "extract_progression",
    "reduce_mod",
    "coeff",
    "compare",
]

# Below this length schoolbook convolution beats packing into big integers.
_SCHOOLBOOK_CUTOFF = 48


class PrecisionError(ValueError):
    """A coefficient was requested at or beyond the known precision."""


class NotInvertibleError(ArithmeticError):
    """The leading coefficient is not a unit of the coefficient ring."""


def _check_modulus(m: Optional[int]) -> None:
    if m is not None and (not isinstance(m, int) or m < 2):
        raise ValueError(f"modulus must be an integer >= 2, got {m!r}")


def _join_modulus(f: "LaurentSeries", g: "LaurentSeries") -> Optional[int]:
    if f.modulus is None:
        return g.modulus
    if g.modulus is None or g.modulus == f.modulus:
        return f.modulus
    raise ValueError(f"cannot combine series mod {f.modulus} and mod {g.modulus}")


class LaurentSeries:
    """Immutable truncated Laurent series ``sum c(n) q^n + O(q^prec)``.

    The constructor canonicalizes: leading zero coefficients are absorbed by
    raising ``order``; the zero series has ``order == prec`` and no stored
    coefficients.  Trailing zeros are kept since they carry precision.
    """

    __slots__ = ("_order", "_coeffs", "_prec", "_modulus")

    def __init__(
        self,
        coeffs: Iterable[int],
        order: int = 0,
        prec: Optional[int] = None,
        modulus: Optional[int] = None,
    ):
        _check_modulus(modulus)
        cs = [int(c) for c in coeffs]
        if prec is None:
            prec = order + len(cs)
        if prec < order:
            raise ValueError(f"prec {prec} below order {order}")
        n = prec - order
        if len(cs) > n:
            del cs[n:]
        elif len(cs) < n:
            cs.extend([0] * (n - len(cs)))
        if modulus is not None:
            cs = [c % modulus for c in cs]
        lead = 0
        while lead < n and cs[lead] == 0:
            lead += 1
        self._order = order + lead
        self._coeffs = tuple(cs[lead:])
        self._prec = prec
        self._modulus = modulus

    @classmethod
    def _raw(cls, coeffs: list, order: int, prec: int, modulus: Optional[int]) -> "LaurentSeries":
        # Internal constructor: coeffs already has length prec - order and is reduced.
        self = object.__new__(cls)
        lead = 0
        n = len(coeffs)
        while lead < n and coeffs[lead] == 0:
            lead += 1
        self._order = order + lead
        self._coeffs = tuple(coeffs[lead:]) if lead else tuple(coeffs)
        self._prec = prec
        self._modulus = modulus
        return self

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def prec(self) -> int:
        return self._prec

    @property
    def modulus(self) -> Optional[int]:
        return self._modulus

    def is_zero(self) -> bool:
        return not self._coeffs

    def valuation(self) -> int:
        return self._order

    def __getitem__(self, n: int) -> int:
        return coeff(self, n)

    def __iter__(self) -> Iterator[tuple]:
        """Yield ``(exponent, coefficient)`` for every stored term."""
        return iter(zip(range(self._order, self._prec), self._coeffs))

    def __len__(self) -> int:
        return len(self._coeffs)

    def dense(self, start: int, stop: int) -> list:
        """Coefficients of q^start .. q^(stop-1) as a list."""
        if stop > self._prec:
            raise PrecisionError(f"need q^{stop - 1}, series known below q^{self._prec}")
        out = [0] * max(0, stop - start)
        lo = max(start, self._order)
        for n in range(lo, stop):
            out[n - start] = self._coeffs[n - self._order]
        return out

    def __add__(self, other):
        if isinstance(other, int):
            other = monomial(other, 0, max(self._prec, 1))
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return negate(self)

    def __sub__(self, other):
        if isinstance(other, int):
            other = monomial(other, 0, max(self._prec, 1))
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return sub(self, other)

    def __rsub__(self, other):
        if isinstance(other, int):
            return sub(monomial(other, 0, max(self._prec, 1)), self)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return power(self, k)

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return compare(self, other).equal

    __hash__ = None  # equality only holds up to precision

    def identical(self, other: "LaurentSeries") -> bool:
        """Structural equality, precision included."""
        return (
            self._order == other._order
            and self._prec == other._prec
            and self._modulus == other._modulus
            and self._coeffs == other._coeffs
        )

    def __repr__(self):
        mod = f", modulus={self._modulus}" if self._modulus else ""
        return f"LaurentSeries({self}{mod})"

    def __str__(self):
        return self.format()

    def format(self, max_terms: int = 12) -> str:
        parts = []
        shown = 0
        for n, c in self:
            if c == 0:
                continue
            if shown == max_terms:
                parts.append("...")
                break
            shown += 1
            if n == 0:
                mono = str(abs(c))
            else:
                var = "q" if n == 1 else f"q^{n}"
                mono = var if abs(c) == 1 else f"{abs(c)}{var}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        out = ""
        for i, p in enumerate(parts):
            if p == "...":
                out += " + ..."
            elif i == 0:
                out += ("-" if p[0] == "-" else "") + p[1]
            else:
                out += f" {p[0]} {p[1]}"
        tail = f"O(q^{self._prec})"
        return f"{out} + {tail}" if out else tail


# ---------------------------------------------------------------------------
# coefficient-list kernels (lists are dense, start at a common exponent)


def _reduce(cs: list, m: Optional[int]) -> list:
    if m is None:
        return cs
    return [c % m for c in cs]


def _schoolbook(a: Sequence[int], b: Sequence[int], n: int) -> list:
    out = [0] * n
    for i, x in enumerate(a):
        if i >= n:
            break
        if x == 0:
            continue
        lim = n - i
        for j, y in enumerate(b[:lim]):
            out[i + j] += x * y
    return out


def _pack(cs: Sequence[int], nbytes: int) -> int:
    zero = bytes(nbytes)
    pos = b"".join(c.to_bytes(nbytes, "little") if c > 0 else zero for c in cs)
    p = int.from_bytes(pos, "little")
    if any(c < 0 for c in cs):
        neg = b"".join((-c).to_bytes(nbytes, "little") if c < 0 else zero for c in cs)
        p -= int.from_bytes(neg, "little")
    return p


def _unpack(value: int, nbytes: int, n: int) -> list:
    # Every packed digit lies in (-2^(8*nbytes-1), 2^(8*nbytes-1)); adding half a
    # digit to each slot makes all digits nonnegative without carries.
    half = 1 << (8 * nbytes - 1)
    offset = int.from_bytes((bytes(nbytes - 1) + b"\x80") * n, "little")
    mask = (1 << (8 * nbytes * n)) - 1
    raw = ((value + offset) & mask).to_bytes(nbytes * n, "little")
    fb = int.from_bytes
    return [fb(raw[i : i + nbytes], "little") - half for i in range(0, nbytes * n, nbytes)]


def _convolve(a: Sequence[int], b: Sequence[int], n: int) -> list:
    """First ``n`` coefficients of the product of two dense coefficient lists."""
    a = a[:n]
    b = b[:n]
    if not a or not b or n <= 0:
        return [0] * max(n, 0)
    if min(len(a), len(b)) <= _SCHOOLBOOK_CUTOFF:
        return _schoolbook(a, b, n)
    ma = max(abs(c) for c in a)
    mb = max(abs(c) for c in b)
    if ma == 0 or mb == 0:
        return [0] * n
    bound = ma * mb * min(len(a), len(b))
    nbytes = (bound.bit_length() + 2 + 7) // 8
    pa = gmpy2.mpz(_pack(a, nbytes))
    pb = pa if a is b else gmpy2.mpz(_pack(b, nbytes))
    prod = int(pa * pb)
    digits = min(n, len(a) + len(b) - 1)
    out = _unpack(prod, nbytes, digits)
    if digits < n:
        out.extend([0] * (n - digits))
    return out


def _unit_inverse(c: int, m: Optional[int]) -> int:
    if m is None:
        if c in (1, -1):
            return c
        raise NotInvertibleError(f"leading coefficient {c} is not a unit in Z")
    try:
        return pow(c, -1, m)
    except ValueError:
        raise NotInvertibleError(f"leading coefficient {c} is not a unit mod {m}") from None


def _inverse_list(u: Sequence[int], n: int, m: Optional[int]) -> list:
    """Dense inverse of a power series with unit constant term, to n terms."""
    u0inv = _unit_inverse(u[0], m)
    if n <= _SCHOOLBOOK_CUTOFF:
        g = [0] * n
        g[0] = u0inv
        for k in range(1, n):
            s = 0
            for i in range(1, min(k, len(u) - 1) + 1):
                s += u[i] * g[k - i]
            s = -s * u0inv
            g[k] = s % m if m else s
        return g
    g = [u0inv]
    k = 1
    while k < n:
        k2 = min(2 * k, n)
        e = _convolve(u[:k2], g, k2)
        # e = u*g = 1 + O(q^k); correct g by -g*(e - 1)
        high = _reduce(e[k:k2], m)
        t = _convolve(g, high, k2 - k)
        g = g + _reduce([-x for x in t], m)
        k = k2
    return g


def _mul_binomial(cs: list, c: int, a: int, m: Optional[int]) -> list:
    """Multiply a dense list by (1 + c q^a), keeping its length."""
    out = list(cs)
    for i in range(a, len(cs)):
        if cs[i - a]:
            out[i] += c * cs[i - a]
    return _reduce(out, m)


def _div_binomial(cs: list, c: int, a: int, m: Optional[int]) -> list:
    """Divide a dense list by (1 + c q^a), a >= 1, keeping its length."""
    out = list(cs)
    for i in range(a, len(out)):
        if out[i - a]:
            out[i] -= c * out[i - a]
            if m:
                out[i] %= m
    return out


# ---------------------------------------------------------------------------
# public operations


def monomial(c: int, n: int, prec: int, modulus: Optional[int] = None) -> LaurentSeries:
    """The series ``c q^n + O(q^prec)``."""
    if n >= prec:
        raise PrecisionError(f"monomial q^{n} not below precision {prec}")
    cs = [0] * (prec - n)
    cs[0] = c
    return LaurentSeries(cs, n, prec, modulus)


def _aligned(f: LaurentSeries, lo: int, hi: int) -> list:
    out = [0] * (hi - lo)
    a = f.order - lo
    stop = min(hi, f.prec) - lo
    if a < stop:
        out[a:stop] = f.coeffs[: stop - a]
    return out


def add(f: LaurentSeries, g: LaurentSeries) -> LaurentSeries:
    m = _join_modulus(f, g)
    prec = min(f.prec, g.prec)
    lo = min(f.order, g.order, prec)
    a = _aligned(f, lo, prec)
    b = _aligned(g, lo, prec)
    return LaurentSeries._raw(_reduce([x + y for x, y in zip(a, b)], m), lo, prec, m)


def negate(f: LaurentSeries) -> LaurentSeries:
    return LaurentSeries._raw(_reduce([-c for c in f.coeffs], f.modulus), f.order, f.prec, f.modulus)


def sub(f: LaurentSeries, g: LaurentSeries) -> LaurentSeries:
    return add(f, negate(g))


def scale(f: LaurentSeries, c: int) -> LaurentSeries:
    return LaurentSeries._raw(_reduce([c * x for x in f.coeffs], f.modulus), f.order, f.prec, f.modulus)


def shift(f: LaurentSeries, s: int) -> LaurentSeries:
    """Multiply by q^s (exact, so precision moves with the series)."""
    return LaurentSeries._raw(list(f.coeffs), f.order + s, f.prec + s, f.modulus)


def truncate(f: LaurentSeries, prec: int) -> LaurentSeries:
    """Forget everything at or above q^prec."""
    if prec > f.prec:
        raise PrecisionError(f"cannot raise precision from {f.prec} to {prec}")
    if prec <= f.order:
        return LaurentSeries._raw([], prec, prec, f.modulus)
    return LaurentSeries._raw(list(f.coeffs[: prec - f.order]), f.order, prec, f.modulus)


def mul(f: LaurentSeries, g: LaurentSeries) -> LaurentSeries:
    m = _join_modulus(f, g)
    prec = min(f.prec + g.order, g.prec + f.order)
    order = f.order + g.order
    if f.is_zero() or g.is_zero() or prec <= order:
        return LaurentSeries._raw([], prec, prec, m)
    n = prec - order
    return LaurentSeries._raw(_reduce(_convolve(f.coeffs, g.coeffs, n), m), order, prec, m)


def inv(f: LaurentSeries) -> LaurentSeries:
    """Multiplicative inverse; the leading coefficient must be a unit."""
    if f.is_zero():
        raise NotInvertibleError("zero series has no inverse")
    n = f.prec - f.order
    g = _inverse_list(f.coeffs, n, f.modulus)
    return LaurentSeries._raw(g, -f.order, -f.order + n, f.modulus)


def power(f: LaurentSeries, k: int) -> LaurentSeries:
    """f^k by binary powering; negative k goes through ``inv``."""
    if k < 0:
        return power(inv(f), -k)
    if k == 0:
        return monomial(1, 0, max(f.prec - f.order, 1), f.modulus)
    result = None
    base = f
    while True:
        if k & 1:
            result = base if result is None else mul(result, base)
        k >>= 1
        if not k:
            return result
        base = mul(base, base)


def substitute_power(f: LaurentSeries, k: int) -> LaurentSeries:
    """The series f(q^k)."""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"substitution exponent must be >= 1, got {k!r}")
    if k == 1:
        return f
    if f.is_zero():
        return LaurentSeries._raw([], k * f.prec, k * f.prec, f.modulus)
    n = k * (f.prec - f.order)
    cs = [0] * n
    cs[::k] = f.coeffs
    return LaurentSeries._raw(cs, k * f.order, k * f.prec, f.modulus)


def extract_progression(f: LaurentSeries, r: int, m: int) -> LaurentSeries:
    """The series sum_n c(m n + r) q^n."""
    if m < 1 or not 0 <= r < m:
        raise ValueError(f"need 0 <= r < m, got r={r}, m={m}")
    prec = -((r - f.prec) // m)  # ceil((f.prec - r) / m)
    start = -((r - f.order) // m)
    if start >= prec:
        return LaurentSeries._raw([], prec, prec, f.modulus)
    base = m * start + r - f.order
    cs = list(f.coeffs[base::m])[: prec - start]
    return LaurentSeries._raw(cs, start, prec, f.modulus)


def reduce_mod(f: LaurentSeries, m: int) -> LaurentSeries:
    """Coefficients replaced by least nonnegative residues mod m."""
    _check_modulus(m)
    if f.modulus is not None and f.modulus % m:
        raise ValueError(f"series mod {f.modulus} cannot be reduced mod {m}")
    return LaurentSeries._raw([c % m for c in f.coeffs], f.order, f.prec, m)


def coeff(f: LaurentSeries, n: int) -> int:
    """Exact coefficient of q^n; an error at or beyond the precision."""
    if n >= f.prec:
        raise PrecisionError(f"coefficient of q^{n} requested, series known below q^{f.prec}")
    if n < f.order:
        return 0
    return f.coeffs[n - f.order]


class Comparison(NamedTuple):
    """Outcome of comparing two series on their common known range."""

    start: int
    stop: int
    mismatch: Optional[int]

    @property
    def equal(self) -> bool:
        return self.mismatch is None


def compare(f: LaurentSeries, g: LaurentSeries) -> Comparison:
    """Compare coefficientwise on exponents ``start <= n < stop``.

    ``stop`` is the smaller precision.  Residues are compared when either side
    carries a modulus.
    """
    m = _join_modulus(f, g)
    stop = min(f.prec, g.prec)
    start = min(f.order, g.order, stop)
    a = _reduce(_aligned(f, start, stop), m)
    b = _reduce(_aligned(g, start, stop), m)
    for i, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return Comparison(start, stop, start + i)
    return Comparison(start, stop, None)
