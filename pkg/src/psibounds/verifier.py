"""Grid sweeps certifying inequalities, monotonicity, signs and limits.

A sweep evaluates the oracle target and the closed-form bounds at every grid
point and certifies strictness only when the margin clears a noise floor of

    10 * (oracle error radius + 4 ulps of the bound value)

so a "pass" means the inequality genuinely holds beyond working-precision
noise, not just that two rounded numbers happened to order correctly.  The
gamma families are swept in log space (their targets overflow doubles from
x ~ 170), which the report records in its ``scale`` field.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import bounds, oracle, specfun
from .bounds import BoundFamily, Interval
from .errors import DomainError, ToleranceError, UndecidedComparisonError

DEFAULT_EPS = 1e-12
STRICTNESS_FACTOR = 10.0
BOUND_ULPS = 4.0
#: Forward differences within this many ulps of the larger neighbour are
#: treated as undecidable rather than as evidence either way.
NOISE_ULPS = 8.0


@dataclass(frozen=True)
class GridSpec:
    """A sweep grid: [x_min, x_max] with `points` abscissae, linear or log."""

    x_min: float
    x_max: float
    points: int = 500
    spacing: str = "log"

    def __post_init__(self) -> None:
        if not (0.0 < self.x_min < self.x_max) or not math.isfinite(self.x_max):
            raise DomainError(
                f"need 0 < x_min < x_max, got [{self.x_min!r}, {self.x_max!r}]"
            )
        if self.points < 2:
            raise DomainError(f"need at least 2 points, got {self.points!r}")
        if self.spacing not in ("linear", "log"):
            raise DomainError(f"spacing must be 'linear' or 'log', got {self.spacing!r}")

    def abscissae(self) -> list[float]:
        n = self.points
        if self.spacing == "linear":
            step = (self.x_max - self.x_min) / (n - 1)
            xs = [self.x_min + i * step for i in range(n)]
        else:
            lo, hi = math.log(self.x_min), math.log(self.x_max)
            step = (hi - lo) / (n - 1)
            xs = [math.exp(lo + i * step) for i in range(n)]
        xs[0], xs[-1] = self.x_min, self.x_max
        for a, b in zip(xs, xs[1:]):
            if not a < b:
                raise DomainError("grid abscissae failed to increase strictly")
        return xs

    def as_dict(self) -> dict:
        return {
            "x_min": self.x_min,
            "x_max": self.x_max,
            "points": self.points,
            "spacing": self.spacing,
        }


@dataclass(frozen=True)
class PointRecord:
    """Per-abscissa verdict of a sweep."""

    x: float
    target: oracle.ErrorBoundedValue
    interval: Interval
    lower_margin: float
    upper_margin: float
    lower_threshold: float
    upper_threshold: float
    passed: bool

    @property
    def rel_lower_margin(self) -> float:
        return self.lower_margin / max(abs(self.target.value), 1e-300)

    @property
    def rel_upper_margin(self) -> float:
        return self.upper_margin / max(abs(self.target.value), 1e-300)


@dataclass(frozen=True)
class InequalityReport:
    """All records of one family sweep plus the pass/fail summary."""

    family: BoundFamily
    grid: GridSpec
    scale: str  # 'abs' (gap), 'ratio' (Stirling) or 'log' (gamma)
    records: list[PointRecord] = field(repr=False)
    notes: tuple[str, ...] = ()

    @property
    def all_pass(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def min_margin(self) -> float:
        return min(min(r.lower_margin, r.upper_margin) for r in self.records)

    @property
    def argmin_x(self) -> float:
        worst = min(self.records, key=lambda r: min(r.lower_margin, r.upper_margin))
        return worst.x

    def summary(self) -> dict:
        return {
            "all_pass": self.all_pass,
            "min_margin": self.min_margin,
            "argmin_x": self.argmin_x,
            "points": len(self.records),
            "failures": sum(not r.passed for r in self.records),
        }


@dataclass(frozen=True)
class ComparisonRow:
    """Per-abscissa gap metric for several families sharing one target."""

    x: float
    gap_by_family: dict[BoundFamily, float]


def _oracle_target(family: BoundFamily, x: float, eps: float) -> oracle.ErrorBoundedValue:
    kind = family.target
    if kind == "gap":
        fn = lambda e: oracle.ref_digamma_gap(x, e)
    elif kind == "ratio":
        fn = lambda e: oracle.ref_stirling_target(x, e)
    else:
        fn = lambda e: oracle.ref_log_gamma(x + 1.0, e)
    # Large arguments can have representation floors above eps (log-gamma at
    # 1e4 occupies ~1.5e-11 per ulp); relax in decades and keep the honest
    # radius, which is what the strictness rule consumes.
    current = eps
    while True:
        try:
            return fn(current)
        except ToleranceError:
            current *= 10.0
            if current > 1e-3:
                raise


def _family_interval(family: BoundFamily, x: float) -> Interval:
    kind = family.target
    if kind == "gap":
        return bounds.digamma_gap_bounds(x, family)
    if kind == "ratio":
        return bounds.stirling_ratio_bounds(x, family)
    return bounds.gamma_bounds_log(x, family)


_SCALES = {"gap": "abs", "ratio": "ratio", "gamma": "log"}


def sweep(grid: GridSpec, family: BoundFamily, eps: float = DEFAULT_EPS) -> InequalityReport:
    """Certify one family over a grid; every abscissa must be in-domain."""
    if grid.x_min < family.domain_min:
        raise DomainError(
            f"grid starts at {grid.x_min!r} but {family.value} requires "
            f"x >= {family.domain_min}"
        )
    records = []
    for x in grid.abscissae():
        target = _oracle_target(family, x, eps)
        interval = _family_interval(family, x)
        lower_margin = target.value - interval.lower
        upper_margin = interval.upper - target.value
        lo_thr = STRICTNESS_FACTOR * (
            target.error_radius + BOUND_ULPS * math.ulp(abs(interval.lower))
        )
        up_thr = STRICTNESS_FACTOR * (
            target.error_radius + BOUND_ULPS * math.ulp(abs(interval.upper))
        )
        records.append(
            PointRecord(
                x=x,
                target=target,
                interval=interval,
                lower_margin=lower_margin,
                upper_margin=upper_margin,
                lower_threshold=lo_thr,
                upper_threshold=up_thr,
                passed=(lower_margin > lo_thr and upper_margin > up_thr),
            )
        )
    notes = ()
    if family.target == "gamma":
        notes = ("target and bounds reported on the log scale: "
                 "Gamma(x+1) overflows doubles for x beyond ~170",)
    return InequalityReport(family=family, grid=grid, scale=_SCALES[family.target],
                            records=records, notes=notes)


def compare(grid: GridSpec, families: list[BoundFamily], side: str,
            eps: float = DEFAULT_EPS) -> list[ComparisonRow]:
    """Per-family gap metrics on a shared grid; no direction is asserted.

    side='width' reports upper - lower; side='lower'/'upper' reports the
    distance |bound - target| of that side from the oracle target.
    """
    if side not in ("lower", "upper", "width"):
        raise DomainError(f"side must be lower/upper/width, got {side!r}")
    if not families:
        raise DomainError("need at least one family")
    kinds = {f.target for f in families}
    if len(kinds) > 1:
        raise DomainError(
            "families bound different targets: "
            + ", ".join(f"{f.value}->{f.target}" for f in families)
        )
    for f in families:
        if grid.x_min < f.domain_min:
            raise DomainError(
                f"grid starts at {grid.x_min!r} but {f.value} requires x >= {f.domain_min}"
            )
    rows = []
    for x in grid.abscissae():
        gaps = {}
        for f in families:
            interval = _family_interval(f, x)
            if side == "width":
                gaps[f] = interval.width
            else:
                target = _oracle_target(f, x, eps)
                bound = interval.lower if side == "lower" else interval.upper
                gaps[f] = abs(bound - target.value)
        rows.append(ComparisonRow(x=x, gap_by_family=gaps))
    return rows


# -- monotonicity / sign / limit checks ---------------------------------------


def _tau_at(x: float):
    return lambda k: bounds.tau(int(round(k)), x)


def _monotone_functions() -> dict:
    fns = {
        "digamma": specfun.digamma,
        "trigamma": specfun.trigamma,
        "beta": bounds.beta,
        "stirling_ratio": specfun.stirling_ratio,
        "f": bounds.aux_f,
        "h": bounds.aux_h,
        "theta": bounds.aux_theta,
        "H": bounds.aux_big_h,
        "P": bounds.aux_big_p,
        "p": bounds.aux_p,
    }
    return fns


def monotonicity_check(fn_name: str, grid: GridSpec, expected: str) -> bool:
    """True iff consecutive forward differences all have the expected strict
    sign beyond the working-precision noise floor.

    ``fn_name`` may be 'tau:<x>' to check tau in its integer index at fixed
    x; the grid abscissae are then rounded to distinct integers >= 1.
    A difference inside the noise floor raises UndecidedComparisonError.
    """
    if expected not in ("increasing", "decreasing"):
        raise DomainError(f"expected must be increasing/decreasing, got {expected!r}")
    if fn_name.startswith("tau:"):
        fn = _tau_at(float(fn_name.split(":", 1)[1]))
        xs = sorted({max(1, int(round(v))) for v in grid.abscissae()})
        if len(xs) < 2:
            raise DomainError("tau grid collapsed to fewer than 2 integer indices")
    else:
        try:
            fn = _monotone_functions()[fn_name]
        except KeyError:
            raise KeyError(f"unknown function {fn_name!r} for monotonicity checks") from None
        xs = grid.abscissae()
    want_positive = expected == "increasing"
    values = [fn(x) for x in xs]
    for (xa, a), (xb, b) in zip(zip(xs, values), zip(xs[1:], values[1:])):
        floor = NOISE_ULPS * math.ulp(max(abs(a), abs(b)))
        diff = b - a
        if abs(diff) <= floor:
            raise UndecidedComparisonError(
                f"{fn_name} difference at x in [{xa!r}, {xb!r}] is {diff!r}, "
                f"inside the {floor!r} noise floor"
            )
        if (diff > 0.0) != want_positive:
            return False
    return True


def sign_check(fn_name: str, grid: GridSpec, expected: str) -> bool:
    """True iff the named auxiliary has the expected strict sign on the grid."""
    if expected not in ("positive", "negative"):
        raise DomainError(f"expected must be positive/negative, got {expected!r}")
    fn = _monotone_functions()[fn_name]
    want_positive = expected == "positive"
    for x in grid.abscissae():
        v = fn(x)
        if v == 0.0 or (v > 0.0) != want_positive:
            return False
    return True


LIMIT_PROBE_SCHEDULE = (1e2, 1e3, 1e4)

_LIMITS = {
    # name: (observable, expected limit)
    "beta_offset": (lambda x: bounds.beta(x) - x, 1.0 / 3.0),
    "delta_offset": (lambda x: bounds.delta_star(x) - x, 1.0 / 3.0),
    "f_limit": (bounds.aux_f, 1.0 / 3.0),
    "tau_limit": (lambda k: bounds.tau(int(k), 1.0) - 1.0, -2.0 / 3.0),
    "stirling_limit": (specfun.stirling_ratio, 1.0),
    "gap_leading": (lambda x: x * specfun.digamma_gap(x), 0.5),
}


def limit_check(name: str, probe: float) -> tuple[float, float, bool]:
    """(observed, expected, pass) for a named asymptotic limit at one probe.

    The tolerance schedule is 1/probe: 1e-3 at probe 1e3, and so on.
    """
    try:
        observe, expected = _LIMITS[name]
    except KeyError:
        raise KeyError(f"unknown limit {name!r}; choose from {sorted(_LIMITS)}") from None
    observed = observe(probe)
    return observed, expected, abs(observed - expected) < 1.0 / probe


def limit_schedule_check(name: str) -> bool:
    """Run the fixed probe schedule; require passes and monotone improvement."""
    errors = []
    for probe in LIMIT_PROBE_SCHEDULE:
        observed, expected, ok = limit_check(name, probe)
        if not ok:
            return False
        errors.append(abs(observed - expected))
    return all(b < a for a, b in zip(errors, errors[1:]))


def identity_check(grid: GridSpec, tau_terms: int = 100,
                   tolerance: float = 1e-10) -> bool:
    """Recurrence identities plus the tau-series enclosure at every abscissa."""
    for x in grid.abscissae():
        if abs(specfun.digamma(x + 1.0) - specfun.digamma(x) - 1.0 / x) > tolerance:
            return False
        if abs(specfun.trigamma(x + 1.0) - specfun.trigamma(x) + 1.0 / (x * x)) > tolerance:
            return False
        if abs(specfun.log_gamma(x + 1.0) - specfun.log_gamma(x) - math.log(x)) > tolerance:
            return False
        gap = oracle.ref_digamma_gap(x, DEFAULT_EPS)
        iv = bounds.gap_via_tau_series(x, tau_terms)
        if not (iv.lower <= gap.lower and gap.upper <= iv.upper):
            return False
    return True


def aux_property_report(grid: GridSpec) -> dict:
    """Sign and monotonicity verdicts for every proof auxiliary, with notes.

    The ``p`` entry carries a sign-convention note: p(0) = 0 and p' < 0 force
    p < 0 on (0, inf), so the negative direction is the one certified here
    even though the opposite inequality is sometimes quoted.
    """
    verdicts = {}
    specs = {
        "f": ("increasing", "positive"),
        "H": ("decreasing", "positive"),
        "P": ("increasing", "negative"),
        "p": ("decreasing", "negative"),
        "theta": (None, "negative"),
    }
    for name, (direction, sign) in specs.items():
        entry = {"sign_expected": sign, "sign_ok": sign_check(name, grid, sign)}
        if direction is not None:
            entry["monotonicity_expected"] = direction
            entry["monotonicity_ok"] = monotonicity_check(name, grid, direction)
        if name == "f":
            entry["below_one_third"] = all(
                0.0 < bounds.aux_f(x) < 1.0 / 3.0 for x in grid.abscissae()
            )
        if name == "p":
            entry["note"] = (
                "sign convention: p(0)=0 with p strictly decreasing forces "
                "p<0 on (0,inf); the opposite printed direction is a typo"
            )
        verdicts[name] = entry
    return verdicts
