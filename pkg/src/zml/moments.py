"""Discrete sums over zeros: the inverse-derivative moments J_{-k}(T), the
mollified sums M1 and M2, their predicted main terms, the Cauchy-Schwarz
lower-bound chain, and the Landau-type prime-power sum.

Predicted main terms (natural logs throughout):

    J_{-1}(T) ~ (3/pi^3) T                (conjectured rate)
    lower bound (3/(2 pi^3) - eps) T      (proven rate, half the conjecture)
    M1 ~ (3 theta / pi^3) T log T
    M2 ~ (3/pi^3) (theta + theta^2) T log^2 T
    sweep bound (3/pi^3) T / (1 + 1/theta)

Every sum over zeros uses math.fsum of per-zero terms, so results are
deterministic and independent of the order the zeros are fed in.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .dirichlet import DirichletPoly, eval_poly_at_zeros
from .errors import InputError, SimplicityError
from .sieve import SieveTable
from .zeros import SIMPLICITY_GUARD, ZeroList

GONEK_CONSTANT = 3.0 / math.pi**3


@dataclass(frozen=True)
class MollifierParams:
    """Mollifier shape (theta_exp, T) with xi = floor(T^theta_exp)."""
    theta_exp: float
    T: float
    xi: int

    @classmethod
    def from_theta(cls, theta_exp: float, T: float) -> "MollifierParams":
        if not 0.0 < theta_exp < 1.0:
            raise InputError("theta_exp must lie in (0, 1)")
        if T <= 1.0:
            raise InputError("T > 1 required")
        xi = int(math.floor(T**theta_exp))
        if xi < 1:
            raise InputError("xi = floor(T^theta) must be >= 1")
        return cls(theta_exp=theta_exp, T=T, xi=xi)


@dataclass(frozen=True)
class MomentReport:
    """Computed discrete sums next to all the predicted main terms."""
    params: MollifierParams
    j_minus_1: float
    m1: complex
    m2: float
    m1_pred: float
    m2_pred: float
    cauchy_lb: float
    gonek_pred: float
    halfbound_pred: float
    sweep_pred: float

    def to_json_dict(self) -> dict:
        return {
            "theta_exp": self.params.theta_exp,
            "t": self.params.T,
            "xi": self.params.xi,
            "j_minus_1": self.j_minus_1,
            "m1_re": self.m1.real,
            "m1_im": self.m1.imag,
            "m2": self.m2,
            "m1_pred": self.m1_pred,
            "m2_pred": self.m2_pred,
            "cauchy_lb": self.cauchy_lb,
            "gonek_pred": self.gonek_pred,
            "halfbound_pred": self.halfbound_pred,
            "sweep_pred": self.sweep_pred,
        }


@dataclass(frozen=True)
class LandauReport:
    """sum_{0<gamma<=T} x^rho against its main term -(T/2pi) Lambda(x)."""
    x: float
    T: float
    zero_sum: complex
    main_term: float
    deviation: float

    def to_json_dict(self) -> dict:
        return {
            "x": self.x,
            "t": self.T,
            "zero_sum_re": self.zero_sum.real,
            "zero_sum_im": self.zero_sum.imag,
            "main_term": self.main_term,
            "deviation": self.deviation,
        }


# ---------------------------------------------------------------------------
# guards
# ---------------------------------------------------------------------------

def _require_certified(zlist: ZeroList) -> None:
    if not zlist.certified:
        raise InputError("zero list is not completeness-certified; rescan first")


def _check_window(zlist: ZeroList, T: float) -> np.ndarray:
    if T > zlist.t_max:
        raise InputError(f"T = {T} beyond list t_max = {zlist.t_max}")
    n = zlist.count_below(T)
    return np.arange(n)


def _guard_simplicity(zlist: ZeroList, idx: np.ndarray) -> None:
    if idx.size == 0:
        return
    mods = zlist.zeta_prime_mods[idx]
    j = int(np.argmin(mods))
    if mods[j] < SIMPLICITY_GUARD:
        raise SimplicityError(
            f"|zeta'(rho)| = {mods[j]:.3e} below guard {SIMPLICITY_GUARD:g} at "
            f"gamma = {zlist.ordinates[idx][j]:.9f}; re-verify at higher resolution "
            "before trusting reciprocal-derivative sums"
        )


# ---------------------------------------------------------------------------
# discrete moments
# ---------------------------------------------------------------------------

def j_moment(zlist: ZeroList, k: float, T: float) -> float:
    """J_{-k}(T) = sum_{0<gamma<=T} |zeta'(rho)|^(-2k)."""
    if k <= 0:
        raise InputError("k must be positive")
    _require_certified(zlist)
    idx = _check_window(zlist, T)
    if idx.size == 0:
        return 0.0
    return math.fsum(zlist.zeta_prime_mods[idx] ** (-2.0 * k))


def gonek_prediction(T: float) -> float:
    """Conjectured rate (3/pi^3) T for J_{-1}."""
    return GONEK_CONSTANT * T


def halfbound_prediction(T: float) -> float:
    """Proven lower-bound rate (3/(2 pi^3)) T, half the conjectured one."""
    return 0.5 * GONEK_CONSTANT * T


def predict_m1(params: MollifierParams) -> float:
    """Main term (3 theta / pi^3) T log T."""
    return GONEK_CONSTANT * params.theta_exp * params.T * math.log(params.T)


def predict_m2(params: MollifierParams) -> float:
    """Main term (3/pi^3)(theta + theta^2) T log^2 T."""
    th = params.theta_exp
    return GONEK_CONSTANT * (th + th * th) * params.T * math.log(params.T) ** 2


def m1_sum(zlist: ZeroList, poly: DirichletPoly, T: float) -> complex:
    """M1 = sum_{0<gamma<=T} conj(M(rho)) / zeta'(rho).

    Uses the critical-line identity M(1-rho) = conj(M(rho)), which needs
    real coefficients.
    """
    _require_certified(zlist)
    if not poly.is_real:
        raise InputError("M1 needs a real-coefficient polynomial")
    idx = _check_window(zlist, T)
    _guard_simplicity(zlist, idx)
    if idx.size == 0:
        return 0.0 + 0.0j
    vals = eval_poly_at_zeros(poly, zlist.ordinates[idx])
    terms = np.conj(vals) / zlist.zeta_primes[idx]
    return complex(math.fsum(terms.real), math.fsum(terms.imag))


def m2_sum(zlist: ZeroList, poly: DirichletPoly, T: float) -> float:
    """M2 = sum_{0<gamma<=T} |M(rho)|^2."""
    _require_certified(zlist)
    idx = _check_window(zlist, T)
    _guard_simplicity(zlist, idx)
    if idx.size == 0:
        return 0.0
    vals = eval_poly_at_zeros(poly, zlist.ordinates[idx])
    return math.fsum(np.abs(vals) ** 2)


def cauchy_chain(report: MomentReport) -> bool:
    """Exact Cauchy-Schwarz inequality J_{-1} >= |M1|^2 / M2 (rounding slack
    1e-12 relative only)."""
    return report.j_minus_1 >= report.cauchy_lb - 1e-12 * abs(report.cauchy_lb)


def moment_report(
    zlist: ZeroList, table: SieveTable, theta_exp: float, T: float
) -> MomentReport:
    """Assemble every moment and prediction for one (theta, T) gridpoint.

    T must already be snapped mid-gap (see zeros.snap_to_midgap).
    """
    from .dirichlet import mollifier

    params = MollifierParams.from_theta(theta_exp, T)
    if params.xi > table.limit:
        raise InputError(f"xi = {params.xi} exceeds sieve limit {table.limit}")
    poly = mollifier(table, params.xi)
    j1 = j_moment(zlist, 1.0, T)
    m1 = m1_sum(zlist, poly, T)
    m2 = m2_sum(zlist, poly, T)
    lb = (abs(m1) ** 2 / m2) if m2 > 0.0 else 0.0
    return MomentReport(
        params=params,
        j_minus_1=j1,
        m1=m1,
        m2=m2,
        m1_pred=predict_m1(params),
        m2_pred=predict_m2(params),
        cauchy_lb=lb,
        gonek_pred=gonek_prediction(T),
        halfbound_pred=halfbound_prediction(T),
        sweep_pred=sweep_prediction(theta_exp, T),
    )


# ---------------------------------------------------------------------------
# theta sweep
# ---------------------------------------------------------------------------

def sweep_prediction(theta_exp: float, T: float) -> float:
    """Lower-bound main term (3/pi^3) T / (1 + 1/theta)."""
    return GONEK_CONSTANT * T / (1.0 + 1.0 / theta_exp)


def theta_sweep(zlist: ZeroList, table: SieveTable, T: float, thetas) -> list:
    """Per-theta rows of (cauchy_lb, sweep_pred, ratio); a row whose xi
    exceeds the sieve limit carries an error string, other rows still
    compute."""
    rows = []
    for th in thetas:
        entry = {"theta_exp": th, "t": T}
        try:
            rep = moment_report(zlist, table, th, T)
            entry.update(
                xi=rep.params.xi,
                cauchy_lb=rep.cauchy_lb,
                sweep_pred=rep.sweep_pred,
                ratio=rep.cauchy_lb / rep.sweep_pred if rep.sweep_pred else math.inf,
                j_minus_1=rep.j_minus_1,
                cauchy_ok=cauchy_chain(rep),
            )
        except InputError as exc:
            entry["error"] = str(exc)
        rows.append(entry)
    return rows


# ---------------------------------------------------------------------------
# Landau-type sum
# ---------------------------------------------------------------------------

def mangoldt_at(table: SieveTable, x: float) -> float:
    """Lambda(x), zero off integer prime powers (integrality to 1e-9)."""
    n = round(x)
    if abs(x - n) > 1e-9 or n < 2:
        return 0.0
    table._check_range(int(n))
    return float(table.mangoldt[int(n)])


def landau_gonek(zlist: ZeroList, table: SieveTable, x: float, T: float) -> LandauReport:
    """sum_{0<gamma<=T} x^rho = sqrt(x) sum e^(i gamma log x), with the
    explicit-formula main term -(T/2pi) Lambda(x)."""
    if x <= 1.0:
        raise InputError("x > 1 required")
    _require_certified(zlist)
    idx = _check_window(zlist, T)
    lx = math.log(x)
    sx = math.sqrt(x)
    if idx.size:
        phases = zlist.ordinates[idx] * lx
        zero_sum = complex(
            sx * math.fsum(np.cos(phases)), sx * math.fsum(np.sin(phases))
        )
    else:
        zero_sum = 0.0 + 0.0j
    main = -(T / (2.0 * math.pi)) * mangoldt_at(table, x)
    return LandauReport(
        x=x, T=T, zero_sum=zero_sum, main_term=main, deviation=abs(zero_sum - main)
    )


# ---------------------------------------------------------------------------
# serialization helpers
# ---------------------------------------------------------------------------

def report_to_json(report, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(report.to_json_dict(), fh, indent=2, sort_keys=True)
        fh.write("\n")


def reports_to_csv(reports, path) -> None:
    """One CSV row per report, columns from to_json_dict (sorted keys)."""
    if not reports:
        raise InputError("no reports to write")
    keys = sorted(reports[0].to_json_dict())
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(keys) + "\n")
        for rep in reports:
            d = rep.to_json_dict()
            fh.write(",".join(repr(d[k]) for k in keys) + "\n")
