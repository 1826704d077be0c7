"""Stable names for every series the claims and the CLI can refer to."""

from __future__ import annotations

import re
import threading
from typing import Callable, Dict, Optional

from . import products
from .mock_theta import MOCK_THETA_NAMES, mock_theta_series, mu2_appell_lerch
from .series import LaurentSeries, reduce_mod, truncate


class UnknownSeriesError(KeyError):
    def __str__(self):
        return f"unknown series name {self.args[0]!r}"


# name -> (constructor(prec, modulus), computes natively mod m)
_Builder = Callable[[int, Optional[int]], LaurentSeries]

_FIXED: Dict[str, tuple] = {
    "E4": (products.eisenstein_E4, True),
    "E12hat": (products.eisenstein_E12hat, True),
    "Delta": (products.delta, True),
    "psi_theta": (lambda p, m: products.theta_psi(p), False),
    "borwein_a": (lambda p, m: products.borwein_a(p), False),
    "borwein_c": (lambda p, m: products.borwein_c(p), False),
    "rr_F": (products.rr_fraction_F, True),
    "partition_gf": (products.partition_gf, True),
    "p10_gf": (products.p10_gf, True),
    "mu2_appell_lerch": (mu2_appell_lerch, True),
}
for _n in products.LEVELS:
    _FIXED[f"j{_n}"] = ((lambda N: lambda p, m: products.hauptmodul(N, p, m))(_n), True)
for _name in MOCK_THETA_NAMES:
    _FIXED[_name] = ((lambda s: lambda p, m: mock_theta_series(s, p, m))(_name), True)

_EULER = re.compile(r"euler_([1-9]\d*)$")
_POCH = re.compile(r"(neg)?poch_([1-9]\d*)_([1-9]\d*)$")

HAUPTMODUL_NAMES = tuple(f"j{n}" for n in products.LEVELS)
CATALOG_NAMES = tuple(_FIXED)
PATTERN_NAMES = ("euler_<k>", "poch_<a>_<b>", "negpoch_<a>_<b>")


def _resolve(name: str) -> tuple:
    if name in _FIXED:
        return _FIXED[name]
    m = _EULER.match(name)
    if m:
        k = int(m.group(1))
        return (lambda p, mod: products.euler_inf(k, p, mod)), True
    m = _POCH.match(name)
    if m:
        neg, a, b = bool(m.group(1)), int(m.group(2)), int(m.group(3))
        return (lambda p, mod: products.pochhammer_inf(a, b, neg, p, mod)), True
    raise UnknownSeriesError(name)


def is_known(name: str) -> bool:
    try:
        _resolve(name)
    except UnknownSeriesError:
        return False
    return True


def build(name: str, prec: int, modulus: Optional[int] = None) -> LaurentSeries:
    """Construct a catalog series to absolute precision ``prec``.

    With a modulus the result is reduced; series that support it are
    computed in the residue ring throughout.
    """
    fn, native = _resolve(name)
    if native:
        f = fn(prec, modulus)
    else:
        f = fn(prec, None)
        if modulus is not None:
            f = reduce_mod(f, modulus)
    if f.prec != prec:
        f = truncate(f, prec)
    return f


class SeriesCache:
    """Memo of catalog expansions keyed by (name, modulus).

    Keeps the most precise expansion seen and truncates on lookup, so a
    cached answer is identical to a fresh ``build``.  With ``exact=True``
    residue-ring requests are served by building over Z and reducing at the
    end, the reference path the modular constructors must agree with.
    """

    def __init__(self, exact: bool = False):
        self.exact = exact
        self._store: Dict[tuple, LaurentSeries] = {}
        self._lock = threading.Lock()

    def _build(self, name: str, prec: int, modulus: Optional[int]) -> LaurentSeries:
        if self.exact and modulus is not None:
            return reduce_mod(build(name, prec), modulus)
        return build(name, prec, modulus)

    def get(self, name: str, prec: int, modulus: Optional[int] = None) -> LaurentSeries:
        key = (name, modulus)
        with self._lock:
            f = self._store.get(key)
        if f is None or f.prec < prec:
            f = self._build(name, prec, modulus)
            with self._lock:
                old = self._store.get(key)
                if old is None or old.prec < f.prec:
                    self._store[key] = f
        return f if f.prec == prec else truncate(f, prec)

    def clear(self) -> None:
        with self._lock:
            self._store.clear()
