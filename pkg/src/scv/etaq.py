"""Integer q-expansions of Dedekind eta quotients.

eta(z) = q^(1/24) prod (1 - q^n); a quotient prod_delta eta(delta z)^(r_delta)
is admissible here when sum(delta * r)/24 is a nonnegative integer, which
every form used by the congruence sweeps satisfies.  The three coefficient
families exposed by newform_coeff:

    gamma(n):  eta(2z)^4 eta(4z)^4
    a(n):      eta(4z)^6
    c(n):      f1 + 5 f2 + 20 f3 + 25 f4 + 25 f5 built from eta(z), eta(5z), eta(25z)

Expansions are cached on disk, one record per line:
    delta^exponent[,delta^exponent...] N c0 c1 c2 ...
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

from .errors import FractionalLeadingPower, IoFailure, PrecisionTooLow


@dataclass(frozen=True)
class QSeries:
    """Dense integer power series in q, coefficients valid for n < precision."""

    coeffs: tuple
    precision: int

    def __post_init__(self):
        if len(self.coeffs) != self.precision:
            raise ValueError("coefficient count must equal the stated precision")

    def __add__(self, other: "QSeries") -> "QSeries":
        n = min(self.precision, other.precision)
        return QSeries(tuple(a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])), n)

    def __mul__(self, other):
        if isinstance(other, int):
            return QSeries(tuple(c * other for c in self.coeffs), self.precision)
        n = min(self.precision, other.precision)
        out = [0] * n
        for i, a in enumerate(self.coeffs[:n]):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs[: n - i]):
                if b:
                    out[i + j] += a * b
        return QSeries(tuple(out), n)

    __rmul__ = __mul__

    def shift(self, e: int) -> "QSeries":
        """Multiply by q^e, keeping the precision window."""
        if e == 0:
            return self
        out = [0] * self.precision
        for i in range(self.precision - e):
            out[i + e] = self.coeffs[i]
        return QSeries(tuple(out), self.precision)

    def inverse(self) -> "QSeries":
        """Series inverse by Newton iteration on truncations (unit constant term)."""
        if self.coeffs[0] not in (1, -1):
            raise ValueError("inversion requires constant term +-1")
        n = self.precision
        inv = [self.coeffs[0]] + [0] * (n - 1)
        prec = 1
        while prec < n:
            prec = min(2 * prec, n)
            a = QSeries(tuple(self.coeffs[:prec]), prec)
            g = QSeries(tuple(inv[:prec]), prec)
            # g <- g * (2 - a g)
            ag = a * g
            corr = QSeries(tuple((2 if i == 0 else 0) - c for i, c in enumerate(ag.coeffs)), prec)
            g = g * corr
            inv[:prec] = g.coeffs
        return QSeries(tuple(inv), n)

    def coefficient(self, n: int) -> int:
        if n >= self.precision:
            raise PrecisionTooLow(f"coefficient {n} beyond precision {self.precision}")
        return self.coeffs[n]


@dataclass(frozen=True)
class EtaQuotientSpec:
    """Factors (delta, exponent); leading q-power sum(delta*r)/24 must be in Z>=0."""

    factors: tuple

    def __post_init__(self):
        clean = tuple(sorted((int(d), int(r)) for d, r in self.factors))
        object.__setattr__(self, "factors", clean)
        if any(d <= 0 for d, _ in clean):
            raise ValueError("eta scales must be positive")

    @property
    def leading_power(self) -> int:
        s = sum(d * r for d, r in self.factors)
        if s % 24 or s < 0:
            raise FractionalLeadingPower(f"leading power {s}/24 is not a nonnegative integer")
        return s // 24

    def key(self) -> str:
        return ",".join(f"{d}^{r}" for d, r in self.factors)


def _euler_product(delta: int, n: int) -> QSeries:
    """prod (1 - q^(delta m)) via the pentagonal-number expansion."""
    out = [0] * n
    out[0] = 1
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2 * delta
        g2 = k * (3 * k + 1) // 2 * delta
        if g1 >= n and g2 >= n:
            break
        s = -1 if k % 2 else 1
        if g1 < n:
            out[g1] += s
        if g2 < n:
            out[g2] += s
        k += 1
    return QSeries(tuple(out), n)


def eta_quotient(spec: EtaQuotientSpec, n: int, cache: bool = True) -> QSeries:
    """q-expansion of prod eta(delta z)^r to precision n."""
    lead = spec.leading_power  # validates integrality up front
    if cache:
        cached = _cache_lookup(spec, n)
        if cached is not None:
            return cached
    series = QSeries((1,) + (0,) * (n - 1), n)
    for delta, r in spec.factors:
        base = _euler_product(delta, n)
        if r < 0:
            base = base.inverse()
            r = -r
        for _ in range(r):
            series = series * base
    series = series.shift(lead)
    if cache:
        _cache_store(spec, series)
    return series


# --- newform coefficient families -------------------------------------------

_GAMMA_SPEC = EtaQuotientSpec(((2, 4), (4, 4)))
_A_SPEC = EtaQuotientSpec(((4, 6),))
_C_PARTS = (
    (1, EtaQuotientSpec(((1, 4), (5, 4)))),
    (5, EtaQuotientSpec(((1, 3), (5, 4), (25, 1)))),
    (20, EtaQuotientSpec(((1, 2), (5, 4), (25, 2)))),
    (25, EtaQuotientSpec(((1, 1), (5, 4), (25, 3)))),
    (25, EtaQuotientSpec(((5, 4), (25, 4)))),
)

FORMS = ("gamma", "a", "c")


def newform_series(form: str, n: int) -> QSeries:
    """Full expansion of one of the three coefficient families to precision n."""
    if form == "gamma":
        return eta_quotient(_GAMMA_SPEC, n)
    if form == "a":
        return eta_quotient(_A_SPEC, n)
    if form == "c":
        total = None
        for w, spec in _C_PARTS:
            part = w * eta_quotient(spec, n)
            total = part if total is None else total + part
        return total
    raise ValueError(f"unknown form {form!r}; expected one of {FORMS}")


def newform_coeff(form: str, n: int, precision: int | None = None) -> int:
    """The q^n coefficient of the requested family."""
    prec = precision if precision is not None else n + 1
    if n >= prec:
        raise PrecisionTooLow(f"need precision > {n}")
    return newform_series(form, prec).coefficient(n)


# --- disk cache ---------------------------------------------------------------


def cache_path() -> Path:
    root = os.environ.get("SCV_CACHE_DIR")
    base = Path(root) if root else Path.home() / ".cache" / "scv"
    return base / "etaq.cache"


def _parse_cache(path: Path) -> dict:
    records = {}
    try:
        text = path.read_text(encoding="ascii")
    except FileNotFoundError:
        return records
    except OSError as exc:
        raise IoFailure(str(exc)) from exc
    for line in text.splitlines():
        parts = line.split()
        if len(parts) < 2:
            continue
        key, n = parts[0], int(parts[1])
        coeffs = tuple(int(c) for c in parts[2:])
        if len(coeffs) == n:
            records[(key, n)] = coeffs
    return records


def _cache_lookup(spec: EtaQuotientSpec, n: int):
    records = _parse_cache(cache_path())
    exact = records.get((spec.key(), n))
    if exact is not None:
        return QSeries(exact, n)
    best = None
    for (key, stored_n), coeffs in records.items():
        if key == spec.key() and stored_n >= n and (best is None or stored_n < best[0]):
            best = (stored_n, coeffs)
    if best is not None:
        return QSeries(best[1][:n], n)
    return None


def _cache_store(spec: EtaQuotientSpec, series: QSeries) -> None:
    path = cache_path()
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        records = _parse_cache(path)
        records[(spec.key(), series.precision)] = series.coeffs
        lines = []
        for (key, n), coeffs in sorted(records.items()):
            lines.append(" ".join([key, str(n)] + [str(c) for c in coeffs]))
        tmp = path.with_suffix(".tmp")
        tmp.write_text("\n".join(lines) + "\n", encoding="ascii")
        os.replace(tmp, path)
    except OSError as exc:
        raise IoFailure(str(exc)) from exc
