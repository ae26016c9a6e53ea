"""Locating critical-line zeros with a completeness certificate.

The scan walks Gram points, groups consecutive Gram intervals into blocks
bounded by "good" Gram points (where (-1)^k Z(g_k) > 0), finds the expected
number of sign changes per block by adaptive subdivision, refines every
bracket by vectorised bisection, and populates |zeta'(rho)| through the
rotation identity zeta'(rho) = -i exp(-i theta(gamma)) Z'(gamma).

Completeness is certified by reconciling the count against
N(T) = theta(T)/pi + 1 + S(T) anchored at good Gram points, where the count
is exact when S vanishes; Rosser's rule holds throughout t <= 1e5 (its first
failure is far above), so a mismatch means a scanning defect, not new
mathematics.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace
from functools import cached_property

import numpy as np
from scipy.special import lambertw

from . import zeta
from .errors import InputError, NumericsError, ParseError, ValidationError
from .zeta import EvalConfig, DEFAULT_CONFIG

ZEROS_MAGIC = "# zml-zeros v1"
ORDINATE_ERR_BOUND = 1e-9     # certified enclosure half-width on export
REFINE_WIDTH = 1e-10          # bisection stops below this bracket width
SIMPLICITY_GUARD = 1e-4       # |Z'(gamma)| below this trips re-verification
MAX_SUBDIV_DEPTH = 12


@dataclass(frozen=True)
class ZeroRecord:
    """A refined critical-line zero ordinate with its derivative data.

    zeta_prime is zeta'(1/2 + i*gamma); zeta_prime_mod equals |z_prime| by
    the rotation identity.  Derivative fields are NaN for ordinate-only
    imports until refresh_derivatives runs.
    """
    ordinate: float
    ordinate_err: float
    z_prime: float
    zeta_prime: complex
    zeta_prime_mod: float

    @property
    def populated(self) -> bool:
        return not math.isnan(self.z_prime)


@dataclass(frozen=True, eq=False)
class ZeroList:
    """Ascending zero records up to t_max with a completeness flag."""
    records: tuple
    t_max: float
    certified: bool

    def __post_init__(self):
        ords = [r.ordinate for r in self.records]
        if any(b <= a for a, b in zip(ords, ords[1:])):
            raise ValidationError("ordinates must be strictly ascending")
        if ords and ords[-1] > self.t_max:
            raise ValidationError("ordinate beyond t_max")
        errs = [r.ordinate_err for r in self.records]
        if errs:
            gap_min = min((b - a for a, b in zip(ords, ords[1:])), default=math.inf)
            if gap_min <= 2.0 * max(errs):
                raise ValidationError("a zero gap is smaller than twice the enclosure width")

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    @cached_property
    def ordinates(self) -> np.ndarray:
        return np.array([r.ordinate for r in self.records])

    @cached_property
    def z_primes(self) -> np.ndarray:
        return np.array([r.z_prime for r in self.records])

    @cached_property
    def zeta_primes(self) -> np.ndarray:
        return np.array([r.zeta_prime for r in self.records], dtype=complex)

    @cached_property
    def zeta_prime_mods(self) -> np.ndarray:
        return np.array([r.zeta_prime_mod for r in self.records])

    def count_below(self, T: float) -> int:
        return int(np.searchsorted(self.ordinates, T, side="right"))


# ---------------------------------------------------------------------------
# Gram points
# ---------------------------------------------------------------------------

def gram_points_many(ks: np.ndarray) -> np.ndarray:
    """Solve theta(g_k) = k*pi by Newton iteration for an array of k >= -1."""
    ks = np.asarray(ks, dtype=float)
    target = ks * math.pi
    g = 2.0 * math.pi * np.exp(1.0 + lambertw((8.0 * ks + 1.0) / (8.0 * math.e)).real)
    for _ in range(50):
        resid = zeta.rs_theta_many(g) - target
        if np.all(np.abs(resid) <= 1e-10):
            return g
        slope = 0.5 * np.log(g / (2.0 * math.pi))
        g = g - resid / slope
    raise NumericsError("Gram-point Newton iteration failed to converge")


def gram_point(k: int) -> float:
    """Gram point g_k (theta(g_k) = k*pi), k >= -1, residual <= 1e-9."""
    if k < -1:
        raise InputError("k >= -1 required")
    return float(gram_points_many(np.array([float(k)]))[0])


# ---------------------------------------------------------------------------
# scanning
# ---------------------------------------------------------------------------

def _good_mask(ks: np.ndarray, zs: np.ndarray) -> np.ndarray:
    sign = np.where(ks.astype(np.int64) % 2 == 0, 1.0, -1.0)
    return sign * zs > 0.0


def _block_brackets(lo_pts, lo_zs, m_expected, cfg):
    """Find >= m_expected sign-change brackets inside one Gram block.

    lo_pts / lo_zs are the block's Gram points and Z values.  Subdivides
    every Gram interval into 2^depth slices until enough sign changes
    appear; depth is capped at MAX_SUBDIV_DEPTH.
    """
    for depth in range(1, MAX_SUBDIV_DEPTH + 1):
        n_sub = 2 ** depth
        pts = []
        for a, b in zip(lo_pts[:-1], lo_pts[1:]):
            pts.append(np.linspace(a, b, n_sub + 1)[:-1])
        pts = np.concatenate(pts + [lo_pts[-1:]])
        zs = np.empty(pts.shape)
        zs[:: n_sub] = lo_zs
        inner = np.ones(pts.shape, dtype=bool)
        inner[:: n_sub] = False
        zs[inner] = zeta.hardy_z_many(pts[inner], cfg)
        flips = np.nonzero(zs[:-1] * zs[1:] < 0.0)[0]
        if len(flips) >= m_expected:
            return [(pts[i], pts[i + 1], zs[i]) for i in flips]
    raise NumericsError(
        f"block [{lo_pts[0]:.6f}, {lo_pts[-1]:.6f}] still holds "
        f"{m_expected} expected zeros after depth {MAX_SUBDIV_DEPTH}; "
        "possible close pair - rerun with a tighter EvalConfig"
    )


def _refine_brackets(lows, highs, f_lows, cfg):
    """Vectorised bisection of sign-change brackets down to REFINE_WIDTH."""
    a = np.asarray(lows, dtype=float)
    b = np.asarray(highs, dtype=float)
    fa_neg = np.asarray(f_lows) < 0.0
    for _ in range(64):
        if np.all(b - a <= REFINE_WIDTH):
            break
        mid = 0.5 * (a + b)
        fm = zeta.hardy_z_many(mid, cfg)
        goes_low = (fm < 0.0) == fa_neg
        a = np.where(goes_low, mid, a)
        b = np.where(goes_low, b, mid)
    return 0.5 * (a + b), 0.5 * (b - a)


def _build_records(gammas, errs, cfg) -> tuple:
    zp = zeta.hardy_z_prime_many(gammas, cfg)
    theta = zeta.rs_theta_many(gammas)
    rot = -1j * np.exp(-1j * theta)
    zetap = rot * zp
    return tuple(
        ZeroRecord(
            ordinate=float(g),
            ordinate_err=float(e),
            z_prime=float(z),
            zeta_prime=complex(c),
            zeta_prime_mod=abs(float(z)),
        )
        for g, e, z, c in zip(gammas, errs, zp, zetap)
    )


def _anchored_gram_range(t_lo: float, t_hi: float, cfg: EvalConfig):
    """Good Gram anchors (k_a below t_lo, k_b at/above t_hi) plus the grid."""
    k_a = int(math.floor(zeta.rs_theta(t_lo) / math.pi))
    while k_a >= -1:
        g = gram_point(k_a)
        if g < t_lo and _good_mask(np.array([k_a]), np.array([zeta.hardy_z(g, cfg)]))[0]:
            break
        k_a -= 1
    else:
        raise NumericsError(f"no good Gram anchor below t_lo = {t_lo}")
    k_b = int(math.ceil(zeta.rs_theta(t_hi) / math.pi))
    while True:
        g = gram_point(k_b)
        if g >= t_hi and _good_mask(np.array([k_b]), np.array([zeta.hardy_z(g, cfg)]))[0]:
            break
        k_b += 1
        if k_b - k_a > 200000:
            raise NumericsError("no good Gram anchor above t_hi")
    ks = np.arange(k_a, k_b + 1)
    gs = gram_points_many(ks.astype(float))
    return ks, gs


def scan_and_refine(t_lo: float, t_hi: float, cfg: EvalConfig = DEFAULT_CONFIG) -> ZeroList:
    """All zeros with t_lo < gamma <= t_hi, refined and derivative-populated.

    certified is True only when the zero count over the anchored Gram range
    reconciles exactly with the Gram indices (Rosser-block bookkeeping).
    """
    if not 10.0 <= t_lo < t_hi <= zeta.T_MAX:
        raise InputError(f"need 10 <= t_lo < t_hi <= {zeta.T_MAX:g}")
    ks, gs = _anchored_gram_range(t_lo, t_hi, cfg)
    zs = zeta.hardy_z_many(gs, cfg)
    good = _good_mask(ks, zs)
    good_idx = np.nonzero(good)[0]

    brackets_a, brackets_b, brackets_f = [], [], []
    for lo, hi in zip(good_idx[:-1], good_idx[1:]):
        m = int(hi - lo)
        if m == 1 and zs[lo] * zs[hi] < 0.0:
            brackets_a.append(gs[lo])
            brackets_b.append(gs[hi])
            brackets_f.append(zs[lo])
            continue
        found = _block_brackets(gs[lo: hi + 1], zs[lo: hi + 1], m, cfg)
        for a, b, fa in found:
            brackets_a.append(a)
            brackets_b.append(b)
            brackets_f.append(fa)

    expected = int(ks[good_idx[-1]] - ks[good_idx[0]])
    certified = len(brackets_a) == expected
    if len(brackets_a) == 0:
        return ZeroList(records=(), t_max=t_hi, certified=certified)

    gammas, errs = _refine_brackets(brackets_a, brackets_b, brackets_f, cfg)
    order = np.argsort(gammas)
    gammas, errs = gammas[order], errs[order]
    keep = (gammas > t_lo) & (gammas <= t_hi)
    records = _build_records(gammas[keep], errs[keep], cfg)
    return ZeroList(records=records, t_max=t_hi, certified=certified)


# ---------------------------------------------------------------------------
# completeness certificate
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CountCheck:
    """Boolean-like certificate result with its diagnostics."""
    passed: bool
    count: int
    expected: float
    anchor_k: int
    anchor_gram: float
    count_at_anchor: int

    def __bool__(self) -> bool:
        return self.passed


def zero_count_check(zlist: ZeroList, T: float, cfg: EvalConfig = DEFAULT_CONFIG) -> CountCheck:
    """Certify that a (0, T]-covering list is complete up to T.

    Checks |count - (theta(T)/pi + 1)| <= 2 (the |S(T)| slack) and, exactly,
    that the count at the nearest good Gram point g_k <= T equals k + 1.
    """
    if T > zlist.t_max:
        raise InputError(f"T = {T} beyond list t_max = {zlist.t_max}")
    count = zlist.count_below(T)
    expected = zeta.rs_theta(T) / math.pi + 1.0 if T >= 10.0 else 0.0
    slack_ok = abs(count - expected) <= 2.0

    k = int(math.floor(zeta.rs_theta(max(T, 10.0)) / math.pi))
    anchor_k, anchor_g, exact_ok, count_at = k, math.nan, False, -1
    while k >= -1:
        g = gram_point(k)
        if g <= T and _good_mask(np.array([k]), np.array([zeta.hardy_z(g, cfg)]))[0]:
            anchor_k, anchor_g = k, g
            count_at = zlist.count_below(g)
            exact_ok = count_at == k + 1
            break
        k -= 1
    return CountCheck(
        passed=bool(slack_ok and exact_ok),
        count=count,
        expected=expected,
        anchor_k=anchor_k,
        anchor_gram=anchor_g,
        count_at_anchor=count_at,
    )


# ---------------------------------------------------------------------------
# derivative helpers
# ---------------------------------------------------------------------------

def complex_zeta_prime(rec: ZeroRecord) -> complex:
    """zeta'(1/2 + i*gamma) from the rotation identity at a refined zero."""
    return -1j * cmath.exp(-1j * zeta.rs_theta(rec.ordinate)) * rec.z_prime


def snap_to_midgap(zlist: ZeroList, T: float) -> float:
    """Snap T to the midpoint of the enclosing zero gap.

    Mirrors the admissibility condition that summation endpoints stay well
    clear of every ordinate; requires gamma_1 < T < last ordinate.
    """
    o = zlist.ordinates
    idx = int(np.searchsorted(o, T, side="right"))
    if idx == 0 or idx >= len(o):
        raise InputError(f"T = {T} not strictly inside the ordinate range")
    return 0.5 * (o[idx - 1] + o[idx])


def refresh_derivatives(zlist: ZeroList, cfg: EvalConfig = DEFAULT_CONFIG) -> ZeroList:
    """Re-refine every ordinate and repopulate the derivative fields.

    Used after an ordinate-only import; each stored ordinate seeds a small
    sign-change bracket that is then bisected as in the scanner.
    """
    if len(zlist) == 0:
        return zlist
    gammas = zlist.ordinates.copy()
    w = np.full(gammas.shape, 1e-6)
    a, b = gammas - w, gammas + w
    fa = zeta.hardy_z_many(a, cfg)
    fb = zeta.hardy_z_many(b, cfg)
    bad = fa * fb > 0.0
    grow = 0
    while bad.any():
        grow += 1
        if grow > 20:
            raise NumericsError("could not bracket an imported ordinate; value too coarse")
        w[bad] *= 4.0
        a, b = gammas - w, gammas + w
        fa[bad] = zeta.hardy_z_many(a[bad], cfg)
        fb[bad] = zeta.hardy_z_many(b[bad], cfg)
        bad = fa * fb > 0.0
    refined, errs = _refine_brackets(a, b, fa, cfg)
    records = _build_records(refined, errs, cfg)
    t_max = max(zlist.t_max, float(refined[-1]))
    return ZeroList(records=records, t_max=t_max, certified=zlist.certified)


# ---------------------------------------------------------------------------
# persistence
# ---------------------------------------------------------------------------

def export_zeros(zlist: ZeroList, path) -> None:
    """Write the v1 text format: magic + t_max comments, then per record
    "ordinate z_prime zeta_prime_re zeta_prime_im" at 17 significant digits."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"{ZEROS_MAGIC}\n")
        fh.write(f"# t_max {zlist.t_max!r}\n")
        fh.write(f"# certified {'true' if zlist.certified else 'false'}\n")
        for r in zlist.records:
            fh.write(
                f"{r.ordinate!r} {r.z_prime!r} "
                f"{r.zeta_prime.real!r} {r.zeta_prime.imag!r}\n"
            )


def import_zeros(path) -> ZeroList:
    """Read either the v1 format or a bare one-ordinate-per-line table.

    Bare tables yield records with NaN derivative fields; run
    refresh_derivatives to populate them.  Non-ascending or duplicated
    ordinates fail validation; malformed lines report their line number.
    """
    records = []
    t_max = None
    certified = False
    bare = True
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                parts = line[1:].split()
                if parts[:2] == ["zml-zeros", "v1"]:
                    bare = False
                elif parts[0] == "t_max" and len(parts) == 2:
                    try:
                        t_max = float(parts[1])
                    except ValueError as exc:
                        raise ParseError(f"{path}:{lineno}: bad t_max") from exc
                elif parts[0] == "certified" and len(parts) == 2:
                    certified = parts[1] == "true"
                continue
            fields = line.split()
            if len(fields) not in (1, 4):
                raise ParseError(f"{path}:{lineno}: expected 1 or 4 columns, got {len(fields)}")
            try:
                vals = [float(f) for f in fields]
            except ValueError as exc:
                raise ParseError(f"{path}:{lineno}: non-numeric field") from exc
            if len(vals) == 1:
                records.append(
                    ZeroRecord(vals[0], ORDINATE_ERR_BOUND, math.nan,
                               complex(math.nan, math.nan), math.nan)
                )
            else:
                records.append(
                    ZeroRecord(vals[0], ORDINATE_ERR_BOUND, vals[1],
                               complex(vals[2], vals[3]), abs(vals[1]))
                )
    if bare and t_max is None:
        t_max = records[-1].ordinate if records else 0.0
        certified = False
    if t_max is None:
        raise ParseError(f"{path}: missing '# t_max' header")
    try:
        return ZeroList(records=tuple(records), t_max=t_max, certified=certified)
    except ValidationError as exc:
        raise ValidationError(f"{path}: {exc}") from exc
