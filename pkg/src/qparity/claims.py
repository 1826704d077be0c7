"""Claims about coefficient streams and series identities, and their verifier.

A claim is checked on a finite range: stream claims for start <= n <= terms,
identities for every exponent below ``terms``.  Each check produces a
:class:`VerificationReport`; a failed report carries the first failing index
together with both values.
"""

from __future__ import annotations

import json
import re
import time
from dataclasses import dataclass, field
from math import isqrt
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Union

from .catalog import HAUPTMODUL_NAMES, SeriesCache, is_known, UnknownSeriesError
from .series import (
    LaurentSeries,
    PrecisionError,
    add,
    coeff,
    compare,
    monomial,
    mul,
    power,
    scale,
    shift,
    substitute_power,
    truncate,
)

CONGRUENT = "CongruentStreams"
VANISHING = "VanishingStream"
TRIANGULAR = "TriangularCharacterization"
IDENTITY = "ExactIdentity"
COUNT = "CountFormula"
KINDS = (CONGRUENT, VANISHING, TRIANGULAR, IDENTITY, COUNT)

SUITES = ("thm1", "thm2", "thm3", "prop", "identities", "counts")


class ClaimError(ValueError):
    """A claim document is malformed."""


class PrecisionShortfall(RuntimeError):
    """The engine failed to build a series precise enough for a check."""


def is_triangular(n: int) -> bool:
    """True iff n = k(k+1)/2 for some k >= 0."""
    if n < 0:
        return False
    r = isqrt(8 * n + 1)
    return r * r == 8 * n + 1


def triangular_count(X: int) -> int:
    """#{k >= 0 : k(k+1)/2 <= X} = floor((1 + sqrt(1 + 8X)) / 2)."""
    if X < 0:
        raise ValueError("X must be nonnegative")
    return (1 + isqrt(1 + 8 * X)) // 2


# ---------------------------------------------------------------------------
# claim data


@dataclass(frozen=True)
class CoefficientStream:
    """n -> coefficient of q^(stride*n + offset) in a catalog series, n >= start."""

    series: str
    stride: int = 1
    offset: int = 0
    start: int = 0

    def __post_init__(self):
        if self.stride < 1:
            raise ClaimError(f"stride must be >= 1, got {self.stride}")
        if self.start < 0:
            raise ClaimError(f"start must be >= 0, got {self.start}")

    @classmethod
    def of(cls, series: str, stride: int = 1, offset: int = 0, start: Optional[int] = None):
        """Stream with the natural start: first n whose index is >= 1 for a
        hauptmodul (constant terms excluded) or >= 0 otherwise."""
        if start is None:
            floor = 1 if series in HAUPTMODUL_NAMES else 0
            start = max(0, -((offset - floor) // stride))
        return cls(series, stride, offset, start)

    def index(self, n: int) -> int:
        return self.stride * n + self.offset

    def required_prec(self, terms: int) -> int:
        return self.stride * terms + self.offset + 1

    def label(self) -> str:
        name = f"c{self.series[1:]}" if self.series in HAUPTMODUL_NAMES else self.series
        if self.stride == 1 and self.offset == 0:
            arg = "n"
        else:
            arg = "n" if self.stride == 1 else f"{self.stride}n"
            if self.offset:
                arg += f"{self.offset:+d}"
        return f"{name}({arg})"

    def to_dict(self) -> dict:
        return {"series": self.series, "stride": self.stride, "offset": self.offset, "start": self.start}

    @classmethod
    def from_dict(cls, d: dict) -> "CoefficientStream":
        try:
            series = d["series"]
        except (KeyError, TypeError):
            raise ClaimError(f"stream needs a 'series' field: {d!r}") from None
        return cls.of(series, int(d.get("stride", 1)), int(d.get("offset", 0)), d.get("start"))


@dataclass(frozen=True)
class Factor:
    """series(q^subst)^power."""

    series: str
    power: int = 1
    subst: int = 1

    def to_dict(self) -> dict:
        return {"series": self.series, "power": self.power, "subst": self.subst}

    @classmethod
    def from_dict(cls, d: dict) -> "Factor":
        return cls(d["series"], int(d.get("power", 1)), int(d.get("subst", 1)))


@dataclass(frozen=True)
class Term:
    """coeff * q^shift * product of factors."""

    coeff: int = 1
    shift: int = 0
    factors: tuple = ()

    def to_dict(self) -> dict:
        return {"coeff": self.coeff, "shift": self.shift, "factors": [f.to_dict() for f in self.factors]}

    @classmethod
    def from_dict(cls, d: dict) -> "Term":
        return cls(
            int(d.get("coeff", 1)),
            int(d.get("shift", 0)),
            tuple(Factor.from_dict(f) for f in d.get("factors", ())),
        )


@dataclass(frozen=True)
class Claim:
    id: str
    kind: str
    lhs: tuple
    rhs: tuple = ()
    modulus: Optional[int] = None
    source: str = ""
    suites: tuple = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ClaimError(f"{self.id}: unknown kind {self.kind!r}")
        if self.kind == IDENTITY:
            if not self.lhs or not self.rhs:
                raise ClaimError(f"{self.id}: an identity needs both sides")
            if not all(isinstance(t, Term) for t in self.lhs + self.rhs):
                raise ClaimError(f"{self.id}: identity sides must be sums of terms")
            if self.modulus is not None and self.modulus < 2:
                raise ClaimError(f"{self.id}: modulus must be >= 2")
            return
        if not self.lhs or not all(isinstance(s, CoefficientStream) for s in self.lhs + self.rhs):
            raise ClaimError(f"{self.id}: stream claims need coefficient streams")
        if self.modulus is None or self.modulus < 2:
            raise ClaimError(f"{self.id}: stream claims need a modulus >= 2")
        if self.kind == CONGRUENT and (len(self.lhs) != 1 or not self.rhs):
            raise ClaimError(f"{self.id}: congruence needs one lhs stream and at least one rhs stream")
        if self.kind in (TRIANGULAR, COUNT) and self.modulus != 2:
            raise ClaimError(f"{self.id}: parity claims are mod 2")
        if self.kind == COUNT and (len(self.lhs) != 1 or self.rhs):
            raise ClaimError(f"{self.id}: count formula takes exactly one stream")

    def streams(self) -> tuple:
        return () if self.kind == IDENTITY else self.lhs + self.rhs

    def series_names(self) -> set:
        if self.kind == IDENTITY:
            return {f.series for t in self.lhs + self.rhs for f in t.factors}
        return {s.series for s in self.streams()}

    def statement(self) -> str:
        if self.kind == IDENTITY:
            rel = "=" if self.modulus is None else "=="
            tail = f" (mod {self.modulus})" if self.modulus else ""
            return f"{format_expression(self.lhs)} {rel} {format_expression(self.rhs)}{tail}"
        if self.kind == CONGRUENT:
            parts = " == ".join(s.label() for s in self.lhs + self.rhs)
            return f"{parts} (mod {self.modulus})"
        if self.kind == VANISHING:
            parts = " == ".join(s.label() for s in self.lhs)
            return f"{parts} == 0 (mod {self.modulus})"
        if self.kind == TRIANGULAR:
            parts = ", ".join(s.label() for s in self.lhs)
            return f"{parts} odd iff n is triangular"
        return f"#{{n <= X : {self.lhs[0].label()} odd}} = floor((1 + sqrt(1 + 8X))/2)"

    def to_dict(self) -> dict:
        side = (lambda xs: [x.to_dict() for x in xs])
        d = {"id": self.id, "kind": self.kind, "lhs": side(self.lhs)}
        if self.rhs:
            d["rhs"] = side(self.rhs)
        d["modulus"] = self.modulus
        d["source"] = self.source
        if self.suites:
            d["suites"] = list(self.suites)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Claim":
        try:
            cid, kind = d["id"], d["kind"]
        except (KeyError, TypeError):
            raise ClaimError(f"claim needs 'id' and 'kind': {d!r}") from None

        def side(x):
            if x is None:
                return ()
            items = x if isinstance(x, list) else [x]
            conv = Term.from_dict if kind == IDENTITY else CoefficientStream.from_dict
            return tuple(conv(i) for i in items)

        modulus = d.get("modulus")
        if modulus is None and kind in (TRIANGULAR, COUNT):
            modulus = 2
        return cls(
            id=str(cid),
            kind=kind,
            lhs=side(d.get("lhs")),
            rhs=side(d.get("rhs")),
            modulus=None if modulus is None else int(modulus),
            source=str(d.get("source", "")),
            suites=tuple(d.get("suites", ())),
        )


def format_expression(expr: Sequence[Term]) -> str:
    out = []
    for t in expr:
        facs = []
        for f in t.factors:
            arg = "q" if f.subst == 1 else f"q^{f.subst}"
            s = f"{f.series}({arg})"
            if f.power != 1:
                s += f"^{f.power}"
            facs.append(s)
        mono = "" if t.shift == 0 else ("q" if t.shift == 1 else f"q^{t.shift}")
        body = " ".join(x for x in [mono] + facs if x)
        c = t.coeff
        if not body:
            text = str(abs(c))
        elif abs(c) == 1:
            text = body
        else:
            text = f"{abs(c)} {body}"
        if not out:
            out.append(("-" if c < 0 else "") + text)
        else:
            out.append(("- " if c < 0 else "+ ") + text)
    return " ".join(out)


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class Failure:
    index: int
    lhs: int
    rhs: int
    stream: Optional[str] = None

    def to_dict(self) -> dict:
        d = {"index": self.index, "lhs": self.lhs, "rhs": self.rhs}
        if self.stream:
            d["stream"] = self.stream
        return d


@dataclass
class VerificationReport:
    claim: Claim
    checked: tuple  # (first, last) index, inclusive
    status: str
    first_failure: Optional[Failure] = None
    elapsed: float = 0.0
    failures: list = field(default_factory=list)

    def __post_init__(self):
        assert (self.status == "failed") == (self.first_failure is not None)

    @property
    def claim_id(self) -> str:
        return self.claim.id

    @property
    def verified(self) -> bool:
        return self.status == "verified"

    def to_dict(self, all_failures: bool = False) -> dict:
        d = {
            "id": self.claim.id,
            "kind": self.claim.kind,
            "status": self.status,
            "range": list(self.checked),
            "first_failure": self.first_failure.to_dict() if self.first_failure else None,
            "source": self.claim.source,
            "statement": self.claim.statement(),
        }
        if all_failures:
            d["failures"] = [f.to_dict() for f in self.failures]
        d["claim"] = self.claim.to_dict()
        return d


# ---------------------------------------------------------------------------
# evaluation


def _term_series(term: Term, prec: int, cache: SeriesCache, modulus: Optional[int]) -> LaurentSeries:
    need = prec - term.shift
    if need <= 0 or term.coeff == 0:
        return LaurentSeries([], prec, prec, modulus)
    acc = None
    for fac in term.factors:
        base = cache.get(fac.series, -(-need // fac.subst) + 1, modulus)
        f = power(substitute_power(base, fac.subst), fac.power)
        acc = f if acc is None else mul(acc, f)
    if acc is None:
        acc = monomial(1, 0, need, modulus)
    return shift(scale(acc, term.coeff), term.shift)


def evaluate(expr: Sequence[Term], prec: int, cache: Optional[SeriesCache] = None,
             modulus: Optional[int] = None) -> LaurentSeries:
    """Expand a sum of terms to absolute precision ``prec``."""
    cache = cache or SeriesCache()
    margin = 2
    for _ in range(8):
        total = None
        for t in expr:
            s = _term_series(t, prec + margin, cache, modulus)
            total = s if total is None else add(total, s)
        if total.prec >= prec:
            return truncate(total, prec)
        margin += prec - total.prec + 2
    raise PrecisionShortfall(f"could not reach precision {prec}")


def _stream_values(stream: CoefficientStream, lo: int, hi: int, cache: SeriesCache,
                   modulus: int) -> list:
    f = cache.get(stream.series, stream.required_prec(hi), modulus)
    try:
        return [coeff(f, stream.index(n)) % modulus for n in range(lo, hi + 1)]
    except PrecisionError as exc:
        raise PrecisionShortfall(str(exc)) from exc


def _check_streams(claim: Claim, terms: int, cache: SeriesCache, keep_all: bool):
    m = claim.modulus
    lo = max(s.start for s in claim.streams())
    hi = terms
    failures: List[Failure] = []
    if hi < lo:
        return (lo, hi), failures
    if claim.kind == CONGRUENT:
        ref = _stream_values(claim.lhs[0], lo, hi, cache, m)
        others = [(s, _stream_values(s, lo, hi, cache, m)) for s in claim.rhs]
        for i, x in enumerate(ref):
            for s, vals in others:
                if vals[i] != x:
                    failures.append(Failure(lo + i, x, vals[i], s.label()))
                    if not keep_all:
                        return (lo, hi), failures
    elif claim.kind == VANISHING:
        for s in claim.lhs:
            vals = _stream_values(s, lo, hi, cache, m)
            for i, x in enumerate(vals):
                if x:
                    failures.append(Failure(lo + i, x, 0, s.label()))
        failures.sort(key=lambda f: f.index)
    elif claim.kind == TRIANGULAR:
        for s in claim.lhs:
            vals = _stream_values(s, lo, hi, cache, m)
            for i, x in enumerate(vals):
                want = 1 if is_triangular(lo + i) else 0
                if x % 2 != want:
                    failures.append(Failure(lo + i, x % 2, want, s.label()))
        failures.sort(key=lambda f: f.index)
    elif claim.kind == COUNT:
        s = claim.lhs[0]
        vals = _stream_values(s, lo, hi, cache, m)
        running = 0
        for i, x in enumerate(vals):
            running += x % 2
            X = lo + i
            want = triangular_count(X)
            if running != want:
                failures.append(Failure(X, running, want, s.label()))
                if not keep_all:
                    break
    if not keep_all:
        failures = failures[:1]
    return (lo, hi), failures


def _check_identity(claim: Claim, terms: int, cache: SeriesCache, keep_all: bool):
    lhs = evaluate(claim.lhs, terms, cache, claim.modulus)
    rhs = evaluate(claim.rhs, terms, cache, claim.modulus)
    cmp = compare(lhs, rhs)
    failures = []
    if not cmp.equal:
        m = claim.modulus
        for n in range(cmp.mismatch, cmp.stop):
            a, b = coeff(lhs, n), coeff(rhs, n)
            if m:
                a, b = a % m, b % m
            if a != b:
                failures.append(Failure(n, a, b))
                if not keep_all:
                    break
    return (cmp.start, cmp.stop - 1), failures


def verify_claim(claim: Claim, terms: int, cache: Optional[SeriesCache] = None,
                 all_failures: bool = False) -> VerificationReport:
    """Check one claim for indices up to ``terms`` (exponents below ``terms``
    for identities)."""
    if terms < 1:
        raise ValueError(f"terms must be >= 1, got {terms}")
    for name in claim.series_names():
        if not is_known(name):
            raise UnknownSeriesError(name)
    cache = cache or SeriesCache()
    t0 = time.perf_counter()
    if claim.kind == IDENTITY:
        checked, failures = _check_identity(claim, terms, cache, all_failures)
    else:
        checked, failures = _check_streams(claim, terms, cache, all_failures)
    elapsed = time.perf_counter() - t0
    return VerificationReport(
        claim=claim,
        checked=checked,
        status="failed" if failures else "verified",
        first_failure=failures[0] if failures else None,
        elapsed=elapsed,
        failures=failures if all_failures else failures[:1],
    )


def _id_key(cid: str):
    return [int(p) if p.isdigit() else p for p in re.split(r"(\d+)", cid)]


def verify_claims(claims: Iterable[Claim], terms: int, cache: Optional[SeriesCache] = None,
                  all_failures: bool = False) -> List[VerificationReport]:
    """Verify several claims sharing one cache; reports are ordered by id."""
    claims = list(claims)
    cache = cache or SeriesCache()
    # Build each (series, modulus) once at the largest precision any claim needs.
    need = {}
    for c in claims:
        if c.kind == IDENTITY:
            continue
        for s in c.streams():
            key = (s.series, c.modulus)
            need[key] = max(need.get(key, 0), s.required_prec(terms))
    for (name, m), p in sorted(need.items(), key=lambda kv: (kv[0][0], kv[0][1] or 0)):
        if is_known(name):
            cache.get(name, p, m)
    reports = [verify_claim(c, terms, cache, all_failures) for c in claims]
    return sorted(reports, key=lambda r: _id_key(r.claim.id))


def odd_index_list(stream: CoefficientStream, limit: int, cache: Optional[SeriesCache] = None) -> list:
    """Ascending n in [stream.start, limit] with an odd stream value."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    cache = cache or SeriesCache()
    lo = stream.start
    if limit < lo:
        return []
    vals = _stream_values(stream, lo, limit, cache, 2)
    return [lo + i for i, v in enumerate(vals) if v]


# ---------------------------------------------------------------------------
# manifests


def claims_to_document(claims: Iterable[Claim]) -> list:
    return [c.to_dict() for c in claims]


def parse_manifest(data) -> List[Claim]:
    """Claims from a parsed manifest: a list of claim documents, an object
    with a ``claims`` list, or a verification report with ``reports``."""
    if isinstance(data, dict):
        if "claims" in data:
            data = data["claims"]
        elif "reports" in data:
            data = [r["claim"] for r in data["reports"]]
        else:
            data = [data]
    if not isinstance(data, list):
        raise ClaimError("manifest must hold a list of claims")
    claims = [Claim.from_dict(d) for d in data]
    seen = set()
    for c in claims:
        if c.id in seen:
            raise ClaimError(f"duplicate claim id {c.id!r}")
        seen.add(c.id)
    return claims


def load_manifest(path: Union[str, Path]) -> List[Claim]:
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        # one JSON document per line
        try:
            data = [json.loads(line) for line in text.splitlines() if line.strip()]
        except json.JSONDecodeError as exc:
            raise ClaimError(f"{path}: not JSON or JSON lines ({exc})") from None
    return parse_manifest(data)
