"""Independent verification of generated curves and their surfaces.

Nothing here trusts the construction: residuals are evaluated from the
stored data.  Two complementary routes are used for the lightlike-mean-
curvature condition

    r (x1'x2'' - x1''x2') = eta (r r'' + (r')^2 + 1)        elliptic
    r (x2'x4'' - x2''x4') = eta (r r'' + (r')^2 - 1)        hyperbolic
    f (x1''f' - x1'f'')   = eta (f f'' + (f')^2)            parabolic

* identity route: first derivatives follow from the stored angle phi via the
  arc-length identities, and the planar quantity is (1+(r')^2) phi' (and
  analogues) with phi' from finite differences of the stored phi column.
  This measures how well the quadrature-built phi solves the defining ODE.
* coordinate route: all derivatives from 5-point finite differences of the
  stored coordinate columns.  This measures whether the stored curve itself
  satisfies the condition, independently of phi.

The report also carries the arc-length residual, frame Gram audits, a
finite-difference cross-check of every closed-form surface quantity, the
parabolic angle ODE residual, profile-consistency checks of the derived
columns, and the special-class audits showing that a lightlike mean
curvature vector in class I or II forces minimality (hh = +/- coef^2).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .generator import (DEFAULT_QUAD_TOL, INTEGRATED_COLUMNS, GeneratingCurve)
from .neutral import CausalCharacter, causal_character, euclid_sq, inner
from .numdiff import grid_derivative, local_derivative
from .profiles import (RotationType, VANISH_TOL,
                       generality_quantity, generality_scale)
from .surface import (Frame, embed_point, eval_jet, frame_at,
                      gauss_equation_curvature, mean_curvature, rho)

REPORT_FORMAT = "rotsurf4-report/1"


class Verdict(str, Enum):
    QUASI_MINIMAL = "quasi_minimal"
    MINIMAL = "minimal"
    NOT_QUASI_MINIMAL = "not_quasi_minimal"
    INVALID = "invalid"


@dataclass(frozen=True)
class VerifierGates:
    """Tolerance ladder: quadrature, then identity checks at 100x, then
    finite-difference cross-checks at their own truncation-limited level."""

    quad_tol: float = DEFAULT_QUAD_TOL
    arc: float = 0.0
    qm_identity: float = 0.0
    qm_fd_rel: float = 1e-5
    consistency_rel: float = 1e-9
    frame: float = 1e-9
    fd_rel: float = 1e-5
    h_coef_min: float = 1e-6
    ode: float = 1e-6
    hh_identity: float = 1e-10

    def __post_init__(self):
        if self.arc == 0.0:
            object.__setattr__(self, "arc", 10.0 * self.quad_tol)
        if self.qm_identity == 0.0:
            object.__setattr__(self, "qm_identity", 100.0 * self.quad_tol)


@dataclass
class CheckResult:
    name: str
    value: float
    gate: float
    passed: bool
    mode: str = "max<=gate"

    def as_dict(self):
        return {"value": self.value, "gate": self.gate,
                "passed": bool(self.passed), "mode": self.mode}


@dataclass
class FdDeviation:
    u: float
    v: float
    h: float
    deviations: dict

    @property
    def max_dev(self) -> float:
        return max(self.deviations.values())


@dataclass
class ClassAudit:
    classification: str
    verdict: Verdict
    hh_identity_dev: float
    h_coef_max: float
    n1_drift_max: float | None
    causal_characters: list[str]

    def as_dict(self):
        return {"classification": self.classification,
                "verdict": self.verdict.value,
                "hh_identity_dev": self.hh_identity_dev,
                "h_coef_max": self.h_coef_max,
                "n1_drift_max": self.n1_drift_max,
                "causal_characters": list(self.causal_characters)}


# ---------------------------------------------------------------------------
# Grid-array building blocks


def _grid_jets(curve: GeneratingCurve):
    return [curve.profile.jet(float(u)) for u in curve.grid]


def _identity_planar(curve: GeneratingCurve, jets) -> np.ndarray:
    """Planar quantity from stored phi (FD) and the arc-length identities."""
    window = min(7, curve.n_samples)
    dphi = grid_derivative(curve.grid, curve.phi, 1, window=window)
    dp = np.array([j.dp for j in jets])
    if curve.rotation_type is RotationType.ELLIPTIC:
        return (1.0 + dp * dp) * dphi
    if curve.rotation_type.is_hyperbolic:
        return (1.0 - dp * dp) * dphi
    d2p = np.array([j.d2p for j in jets])
    return dphi * dp - curve.phi * d2p


def _coordinate_planar(curve: GeneratingCurve, jets) -> np.ndarray:
    """Planar quantity from 5-point finite differences of the coordinates."""
    n = curve.n_samples
    w1 = min(5, n)
    w2 = min(6, n)
    name_a, name_b = INTEGRATED_COLUMNS[curve.rotation_type]
    if curve.rotation_type is RotationType.PARABOLIC:
        x1 = curve.column("x1")
        x1d = grid_derivative(curve.grid, x1, 1, window=w1)
        x1dd = grid_derivative(curve.grid, x1, 2, window=w2)
        dp = np.array([j.dp for j in jets])
        d2p = np.array([j.d2p for j in jets])
        return x1dd * dp - x1d * d2p
    a = curve.column(name_a)
    b = curve.column(name_b)
    ad = grid_derivative(curve.grid, a, 1, window=w1)
    add = grid_derivative(curve.grid, a, 2, window=w2)
    bd = grid_derivative(curve.grid, b, 1, window=w1)
    bdd = grid_derivative(curve.grid, b, 2, window=w2)
    # elliptic: x1'x2'' - x1''x2'; hyperbolic: x2'x4'' - x2''x4'
    return ad * bdd - add * bd


def _qm_residuals(front: np.ndarray, planar: np.ndarray, gen: np.ndarray,
                  eta: int):
    """|front * planar -/+ gen| minimized over the sign, plus stored-sign value."""
    lhs = front * planar
    res_plus = np.abs(lhs - gen)
    res_minus = np.abs(lhs + gen)
    best = np.minimum(res_plus, res_minus)
    eta_best = np.where(res_plus <= res_minus, 1, -1)
    stored = res_plus if eta == 1 else res_minus
    return best, eta_best, stored


def _arc_residuals(curve: GeneratingCurve, jets) -> np.ndarray:
    window = min(7, curve.n_samples)
    dp = np.array([j.dp for j in jets])
    name_a, name_b = INTEGRATED_COLUMNS[curve.rotation_type]
    ad = grid_derivative(curve.grid, curve.column(name_a), 1, window=window)
    bd = grid_derivative(curve.grid, curve.column(name_b), 1, window=window)
    if curve.rotation_type is RotationType.ELLIPTIC:
        ident = ad * ad + bd * bd - dp * dp
    elif curve.rotation_type.is_hyperbolic:
        ident = dp * dp + ad * ad - bd * bd
    else:
        ident = ad * ad - 2.0 * dp * bd
    return np.abs(ident - 1.0)


def _consistency_residuals(curve: GeneratingCurve, jets) -> np.ndarray:
    """Derived columns versus the profile (catches corrupted exports)."""
    p = np.array([j.p for j in jets])
    scale = max(1.0, float(np.max(np.abs(p))))
    devs = []
    cols = curve.columns
    if curve.rotation_type is RotationType.ELLIPTIC:
        devs.append(np.abs(cols["x3"] - p))
        devs.append(np.abs(cols["x4"]))
    elif curve.rotation_type.is_hyperbolic:
        devs.append(np.abs(cols["x1"] - p))
        devs.append(np.abs(cols["x3"]))
    else:
        devs.append(np.abs(cols["f"] - p))
    dev = np.maximum.reduce(devs) / scale
    if curve.declared_interval is not None:
        lo, hi = curve.declared_interval
        span = max(abs(hi - lo), 1.0)
        end_dev = max(abs(float(curve.grid[0]) - lo),
                      abs(float(curve.grid[-1]) - hi)) / span
        dev = np.maximum(dev, end_dev)
    return dev


def _ode_residuals(curve: GeneratingCurve, jets) -> np.ndarray:
    """Residual of the parabolic angle ODE phi' - (f''/f') phi = eta (f''/f' + f'/f)."""
    if curve.rotation_type is not RotationType.PARABOLIC:
        raise ValueError("the angle ODE applies to the parabolic type only")
    window = min(7, curve.n_samples)
    dphi = grid_derivative(curve.grid, curve.phi, 1, window=window)
    dp = np.array([j.dp for j in jets])
    d2p = np.array([j.d2p for j in jets])
    p = np.array([j.p for j in jets])
    ratio = d2p / dp
    return np.abs(dphi - ratio * curve.phi - curve.eta * (ratio + dp / p))


def _classify(planar, planar_scale, gen, gen_scale, tol=VANISH_TOL) -> str:
    planar_small = abs(planar) <= tol * max(planar_scale, 1e-30)
    gen_small = abs(gen) <= tol * max(gen_scale, 1e-30)
    if planar_small and gen_small:
        return "minimal_candidate"
    if planar_small:
        return "special_I"
    if gen_small:
        return "special_II"
    return "general"


# ---------------------------------------------------------------------------
# Pointwise operations


def qm_residual(rotation_type: RotationType, curve: GeneratingCurve,
                u: float, h: float = 1e-4) -> float:
    """Lightlike-condition residual at u, minimized over the sign eta.

    First derivatives come from the stored phi through the arc-length
    identities; phi' is a local finite difference of the stored angle.
    """
    return qm_residual_detail(rotation_type, curve, u, h=h)[0]


def qm_residual_detail(rotation_type: RotationType, curve: GeneratingCurve,
                       u: float, h: float = 1e-4):
    """(best residual, best eta, residual at the stored eta) at u."""
    u = float(u)
    lo, hi = curve.interval
    dphi = local_derivative(lambda t: curve.state(t).phi, u, 1, h, lo=lo, hi=hi)
    state = curve.state(u)
    jet = state.jet
    if rotation_type is RotationType.ELLIPTIC:
        planar = (1.0 + jet.dp * jet.dp) * dphi
    elif rotation_type.is_hyperbolic:
        planar = (1.0 - jet.dp * jet.dp) * dphi
    else:
        planar = dphi * jet.dp - state.phi * jet.d2p
    gen = generality_quantity(rotation_type, jet)
    lhs = jet.p * planar
    res_plus = abs(lhs - gen)
    res_minus = abs(lhs + gen)
    if res_plus <= res_minus:
        return res_plus, 1, (res_plus if curve.eta == 1 else res_minus)
    return res_minus, -1, (res_plus if curve.eta == 1 else res_minus)


def arc_length_residual(curve: GeneratingCurve, u: float, h: float = 1e-4) -> float:
    """Deviation of the arc-length identity from 1 at u (derivatives by FD
    of the stored/interpolated coordinates)."""
    u = float(u)
    lo, hi = curve.interval
    name_a, name_b = INTEGRATED_COLUMNS[curve.rotation_type]
    ad = local_derivative(lambda t: curve.state(t).coords[name_a][0],
                          u, 1, h, lo=lo, hi=hi)
    bd = local_derivative(lambda t: curve.state(t).coords[name_b][0],
                          u, 1, h, lo=lo, hi=hi)
    dp = curve.profile.jet(u).dp
    if curve.rotation_type is RotationType.ELLIPTIC:
        ident = ad * ad + bd * bd - dp * dp
    elif curve.rotation_type.is_hyperbolic:
        ident = dp * dp + ad * ad - bd * bd
    else:
        ident = ad * ad - 2.0 * dp * bd
    return abs(ident - 1.0)


def parabolic_ode_residual(curve: GeneratingCurve, u: float) -> float:
    """Angle-ODE residual at the grid node nearest to u."""
    jets = _grid_jets(curve)
    res = _ode_residuals(curve, jets)
    i = int(np.argmin(np.abs(curve.grid - float(u))))
    return float(res[i])


def frame_audit(frame: Frame, rotation_type: RotationType | None = None) -> float:
    """Max deviation of the frame's Gram matrix from diag(1, -1, eps, -eps)."""
    vecs = frame.vectors()
    expected = frame.expected_gram()
    dev = 0.0
    for i in range(4):
        for j in range(4):
            dev = max(dev, abs(inner(vecs[i], vecs[j]) - expected[i][j]))
    return dev


def fd_cross_check(rotation_type: RotationType, curve: GeneratingCurve,
                   u: float, v: float, h: float = 1e-4) -> FdDeviation:
    """Compare every closed-form quantity with a second-order FD jet.

    Partials of the embedding are taken by central differences of
    eval_point; sigma, H, K and the first form are reassembled from them by
    projecting onto the closed-form normal frame.  Deviations are relative
    with an absolute floor of 1 (|fd - cf| / (1 + |cf|)).
    """
    u = float(u)
    v = float(v)
    lo, hi = curve.interval
    if u - 2.0 * h < lo or u + 2.0 * h > hi:
        raise ValueError("FD stencil exits the curve's grid range")
    cf = eval_jet(rotation_type, curve, u, v)

    st_m = curve.state(u - h)
    st_0 = cf.state
    st_p = curve.state(u + h)

    def emb(st, vv):
        return embed_point(rotation_type, st, vv)

    z = cf.z
    z_up, z_um = emb(st_p, v), emb(st_m, v)
    z_vp, z_vm = emb(st_0, v + h), emb(st_0, v - h)
    zu_fd = (z_up - z_um) / (2.0 * h)
    zv_fd = (z_vp - z_vm) / (2.0 * h)
    zuu_fd = (z_up - z * 2.0 + z_um) / (h * h)
    zvv_fd = (z_vp - z * 2.0 + z_vm) / (h * h)
    zuv_fd = (emb(st_p, v + h) - emb(st_p, v - h)
              - emb(st_m, v + h) + emb(st_m, v - h)) / (4.0 * h * h)

    e_fd = inner(zu_fd, zu_fd)
    f_fd = inner(zu_fd, zv_fd)
    g_fd = inner(zv_fd, zv_fd)

    frame = cf.frame
    eps = float(frame.eps)

    def project(w):
        return (eps * inner(w, frame.n1), -eps * inner(w, frame.n2))

    rho_cf = rho(rotation_type, st_0)
    rho_fd = math.copysign(math.sqrt(max(-g_fd, 0.0)), rho_cf)
    sxx_fd = tuple(c / e_fd for c in project(zuu_fd))
    sxy_fd = tuple(c / (math.sqrt(e_fd) * rho_fd) for c in project(zuv_fd))
    syy_fd = tuple(c / (rho_fd * rho_fd) for c in project(zvv_fd))
    h_fd = ((sxx_fd[0] - syy_fd[0]) / 2.0, (sxx_fd[1] - syy_fd[1]) / 2.0)

    def sdot(a, b):
        return eps * (a[0] * b[0] - a[1] * b[1])

    denom = (inner(frame.X, frame.X) * inner(frame.Y, frame.Y)
             - inner(frame.X, frame.Y) ** 2)
    k_fd = (sdot(sxy_fd, sxy_fd) - sdot(sxx_fd, syy_fd)) / denom

    def rel(fd_val, cf_val):
        return abs(fd_val - cf_val) / (1.0 + abs(cf_val))

    devs = {
        "E": rel(e_fd, cf.first_form[0]),
        "F": rel(f_fd, cf.first_form[1]),
        "G": rel(g_fd, cf.first_form[2]),
        "sigma_xx_1": rel(sxx_fd[0], cf.sigma.xx[0]),
        "sigma_xx_2": rel(sxx_fd[1], cf.sigma.xx[1]),
        "sigma_xy_1": rel(sxy_fd[0], cf.sigma.xy[0]),
        "sigma_xy_2": rel(sxy_fd[1], cf.sigma.xy[1]),
        "sigma_yy_1": rel(syy_fd[0], cf.sigma.yy[0]),
        "sigma_yy_2": rel(syy_fd[1], cf.sigma.yy[1]),
        "h1": rel(h_fd[0], cf.H.h1),
        "h2": rel(h_fd[1], cf.H.h2),
        "K": rel(k_fd, cf.K),
    }
    return FdDeviation(u=u, v=v, h=h, deviations=devs)


def special_class_audit(rotation_type: RotationType, curve: GeneratingCurve,
                        gates: VerifierGates | None = None) -> ClassAudit:
    """Detect class I/II membership and audit the nonexistence identity.

    In class I (planar quantity zero) H is proportional to n2 and
    hh = -<n2,n2>-signed coef^2; in class II (generality zero) H is
    proportional to n1.  Either way hh vanishes only with H itself, so the
    verdict is not_quasi_minimal unless H is numerically zero (minimal).
    For class I the constancy of n1 is additionally confirmed by finite
    differences of the frame along the curve.
    """
    gates = gates or VerifierGates(quad_tol=curve.quad_tol)
    n = curve.n_samples
    states = [curve.state_at_index(i) for i in range(n)]
    labels = []
    for i, st in enumerate(states):
        gen = generality_quantity(rotation_type, st.jet)
        labels.append(_classify(st.planar_quantity, st.planar_scale, gen,
                                generality_scale(rotation_type, st.jet)))
    if all(l == labels[0] for l in labels):
        classification = labels[0]
    else:
        classification = "mixed"

    hs = [mean_curvature(rotation_type, curve, float(u)) for u in curve.grid]
    h_coef_max = max(max(abs(h.h1), abs(h.h2)) for h in hs)
    causal = sorted({causal_character(h.vector).value for h in hs
                     if max(abs(h.h1), abs(h.h2)) > gates.h_coef_min})

    hh_dev = 0.0
    for st, h in zip(states, hs):
        if classification == "special_I":
            expected = -float(h.eps) * h.h2 * h.h2
        elif classification == "special_II":
            expected = float(h.eps) * h.h1 * h.h1
        elif classification == "minimal_candidate":
            expected = 0.0
        else:
            expected = h.hh_from_coefficients
        hh_dev = max(hh_dev, abs(h.hh - expected))

    n1_drift = None
    if classification in ("special_I", "minimal_candidate"):
        comps = np.array([frame_at(rotation_type, st, 0.0).n1.components
                          for st in states])
        drift = np.zeros(n)
        for k in range(4):
            d = grid_derivative(curve.grid, comps[:, k], 1, window=min(5, n))
            drift = np.maximum(drift, np.abs(d))
        n1_drift = float(np.max(drift))

    if classification in ("special_I", "special_II"):
        verdict = (Verdict.MINIMAL if h_coef_max < gates.h_coef_min
                   else Verdict.NOT_QUASI_MINIMAL)
    elif classification == "minimal_candidate":
        verdict = Verdict.MINIMAL
    elif classification == "general":
        verdict = Verdict.QUASI_MINIMAL
    else:
        verdict = Verdict.NOT_QUASI_MINIMAL

    return ClassAudit(classification=classification, verdict=verdict,
                      hh_identity_dev=hh_dev, h_coef_max=h_coef_max,
                      n1_drift_max=n1_drift, causal_characters=causal)


# ---------------------------------------------------------------------------
# Full report


@dataclass
class GeometryReport:
    rotation_type: RotationType
    eta: int
    n_samples: int
    interval: tuple[float, float]
    quad_tol: float
    verdict: Verdict
    checks: dict
    arrays: dict
    fd_checks: list
    class_audit: ClassAudit
    regime_labels: list

    def stat(self, name: str) -> float:
        return self.checks[name].value

    def passed(self, name: str) -> bool:
        return self.checks[name].passed

    def to_json_dict(self) -> dict:
        return {
            "format": REPORT_FORMAT,
            "type": self.rotation_type.value,
            "eta": self.eta,
            "n_samples": self.n_samples,
            "interval": list(self.interval),
            "quad_tol": self.quad_tol,
            "verdict": self.verdict.value,
            "checks": {k: v.as_dict() for k, v in self.checks.items()},
            "class_audit": self.class_audit.as_dict(),
            "regime_labels": list(self.regime_labels),
            "fd_checks": [{"u": c.u, "v": c.v, "h": c.h, "max_dev": c.max_dev}
                          for c in self.fd_checks],
            "arrays": {k: [float(x) for x in v] for k, v in self.arrays.items()},
        }

    def write_json(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_json_dict(), fh, indent=2)
            fh.write("\n")

    def summary_table(self) -> str:
        rows = [f"{'check':<28}{'value':>14}{'gate':>12}  status"]
        for name, c in self.checks.items():
            rows.append(f"{name:<28}{c.value:>14.3e}{c.gate:>12.1e}  "
                        f"{'pass' if c.passed else 'FAIL'}")
        rows.append(f"classification: {self.class_audit.classification}")
        rows.append(f"verdict: {self.verdict.value}")
        return "\n".join(rows)


def verify_curve(curve: GeneratingCurve, fd_points: int = 6,
                 fd_h: float = 1e-4, gates: VerifierGates | None = None,
                 v_probes=None) -> GeometryReport:
    """Run the full verification battery on a curve and assemble the report."""
    gates = gates or VerifierGates(quad_tol=curve.quad_tol)
    t = curve.rotation_type
    n = curve.n_samples
    grid = curve.grid

    # Structural sanity first; anything broken here makes geometry undefined.
    structural: list[str] = []
    for name, col in curve.columns.items():
        if not np.all(np.isfinite(col)):
            structural.append(f"non-finite values in column {name}")
    if not np.all(np.diff(grid) > 0):
        structural.append("grid is not strictly increasing")
    jets = None
    if not structural:
        try:
            jets = _grid_jets(curve)
        except Exception as exc:
            structural.append(f"profile evaluation failed: {exc}")
    if jets is not None:
        ps = np.array([j.p for j in jets])
        dps = np.array([j.dp for j in jets])
        if t is not RotationType.PARABOLIC and np.any(ps <= 0.0):
            structural.append("profile not positive on the grid")
        if t is RotationType.PARABOLIC and (np.any(ps == 0.0) or np.any(dps == 0.0)):
            structural.append("profile or its slope vanishes on the grid")
        if t.is_hyperbolic:
            sgn = np.sign(dps * dps - 1.0)
            if np.any(sgn == 0.0) or np.any(sgn != sgn[0]):
                structural.append("slope magnitude crosses 1 inside the grid")
            want = 1.0 if t is RotationType.HYPERBOLIC_A else -1.0
            if sgn[0] != want:
                structural.append("slope magnitude inconsistent with the case tag")
    if structural:
        checks = {"structural": CheckResult("structural", float(len(structural)),
                                            0.0, False, mode="issues")}
        audit = ClassAudit("invalid", Verdict.INVALID, math.nan, math.nan,
                           None, [])
        return GeometryReport(rotation_type=t, eta=curve.eta, n_samples=n,
                              interval=curve.interval, quad_tol=curve.quad_tol,
                              verdict=Verdict.INVALID, checks=checks,
                              arrays={"u": grid}, fd_checks=[],
                              class_audit=audit, regime_labels=structural)

    states = [curve.state_at_index(i) for i in range(n)]
    gen = np.array([generality_quantity(t, j) for j in jets])
    ps = np.array([j.p for j in jets])

    planar_id = _identity_planar(curve, jets)
    qm_best, eta_best, qm_stored = _qm_residuals(ps, planar_id, gen, curve.eta)
    planar_fd = _coordinate_planar(curve, jets)
    qm_fd_best, _, qm_fd_stored = _qm_residuals(ps, planar_fd, gen, curve.eta)
    qm_fd_scale = np.abs(ps * planar_fd) + np.abs(gen) + 1.0
    arc = _arc_residuals(curve, jets)
    consistency = _consistency_residuals(curve, jets)

    # Mean curvature data at every node (v = 0; hh is v-independent).
    hs = [mean_curvature(t, curve, float(u)) for u in grid]
    h1 = np.array([h.h1 for h in hs])
    h2 = np.array([h.h2 for h in hs])
    hh = np.array([h.hh for h in hs])
    coef_min = np.minimum(np.abs(h1), np.abs(h2))
    interior = slice(1, n - 1) if n > 2 else slice(0, n)
    lightlike_ok = all(causal_character(h.vector) is CausalCharacter.LIGHTLIKE
                       for h in hs[interior])
    hh_rel = np.array([abs(h.hh) / max(euclid_sq(h.vector), 1e-300)
                       for h in hs])

    # Frame audits over the grid at a few rotation angles.
    if v_probes is None:
        v_probes = ((0.0, 1.1, 3.9) if t is RotationType.ELLIPTIC
                    else (0.0, 0.9, -1.7))
    frame_dev = np.zeros(n)
    for i, st in enumerate(states):
        for v in v_probes:
            frame_dev[i] = max(frame_dev[i],
                               frame_audit(frame_at(t, st, float(v))))

    # Regime labels per node.
    regime = []
    for st, g in zip(states, gen):
        label = _classify(st.planar_quantity, st.planar_scale, g,
                          generality_scale(t, st.jet))
        flat = abs(st.jet.d2p) <= VANISH_TOL * max(1.0, abs(st.jet.p),
                                                   abs(st.jet.dp))
        regime.append(label + ("+flat" if flat else ""))
    base_labels = [r.split("+")[0] for r in regime]

    # FD cross-checks at interior nodes.
    fd_checks = []
    if fd_points > 0 and n >= 8:
        idx = np.unique(np.linspace(3, n - 4, fd_points).astype(int))
        for k, i in enumerate(idx):
            v = float(v_probes[k % len(v_probes)])
            fd_checks.append(fd_cross_check(t, curve, float(grid[i]), v, h=fd_h))
    fd_max = max((c.max_dev for c in fd_checks), default=0.0)

    arrays = {
        "u": grid,
        "qm_residual": qm_best,
        "qm_residual_stored_eta": qm_stored,
        "qm_residual_fd": qm_fd_best,
        "arc_residual": arc,
        "consistency_residual": consistency,
        "frame_deviation": frame_dev,
        "h1": h1,
        "h2": h2,
        "hh": hh,
        "eta_best": eta_best.astype(float),
    }

    checks = {}

    def add_max(name, values, gate):
        arrv = np.asarray(values, dtype=float)
        checks[name] = CheckResult(name, float(np.max(arrv)), gate,
                                   bool(np.max(arrv) <= gate))

    add_max("qm_identity", qm_stored, gates.qm_identity)
    add_max("qm_fd_relative", qm_fd_stored / qm_fd_scale, gates.qm_fd_rel)
    add_max("arc_length", arc, gates.arc)
    add_max("consistency", consistency, gates.consistency_rel)
    add_max("frame_gram", frame_dev, gates.frame)
    checks["fd_cross_check"] = CheckResult("fd_cross_check", fd_max,
                                           gates.fd_rel, fd_max <= gates.fd_rel)
    cmin = float(np.min(coef_min[interior])) if n > 2 else float(np.min(coef_min))
    checks["h_coef_min"] = CheckResult("h_coef_min", cmin, gates.h_coef_min,
                                       cmin > gates.h_coef_min,
                                       mode="min>gate")
    hl = float(np.max(hh_rel[interior]))
    checks["lightlike"] = CheckResult("lightlike", hl, 1e-12,
                                      bool(lightlike_ok), mode="causal")
    if t is RotationType.PARABOLIC:
        ode = _ode_residuals(curve, jets)
        arrays["ode_residual"] = ode
        add_max("ode", ode, gates.ode)

    audit = special_class_audit(t, curve, gates)

    # Verdict.
    if all(b == "general" for b in base_labels):
        gate_names = ["qm_identity", "qm_fd_relative", "arc_length",
                      "consistency", "frame_gram", "fd_cross_check",
                      "h_coef_min", "lightlike"]
        if t is RotationType.PARABOLIC:
            gate_names.append("ode")
        ok = all(checks[g].passed for g in gate_names)
        verdict = Verdict.QUASI_MINIMAL if ok else Verdict.NOT_QUASI_MINIMAL
    elif all(b in ("special_I", "special_II", "minimal_candidate")
             for b in base_labels):
        verdict = audit.verdict
        # A broken file can masquerade as a special class; arc and
        # consistency failures still invalidate quasi-minimality claims.
        if verdict is Verdict.QUASI_MINIMAL:
            verdict = Verdict.NOT_QUASI_MINIMAL
    else:
        verdict = Verdict.NOT_QUASI_MINIMAL

    return GeometryReport(rotation_type=t, eta=curve.eta, n_samples=n,
                          interval=curve.interval, quad_tol=curve.quad_tol,
                          verdict=verdict, checks=checks, arrays=arrays,
                          fd_checks=fd_checks, class_audit=audit,
                          regime_labels=regime)
