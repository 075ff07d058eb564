"""Construction of generating curves for the three rotation types.

Starting from an admissible profile, the rotation angle phi is recovered by
quadrature of

    elliptic            (r r'' + (r')^2 + 1) / (r (1 + (r')^2))
    hyperbolic (A, B)   (r r'' + (r')^2 - 1) / (r (1 - (r')^2))

scaled by the sign eta, while the parabolic phi has the closed form

    phi = f' * (C + eta * (-1/f' + integral du / f)).

The curve coordinates then follow by cumulative quadrature of the arc-length
envelopes (cos/sin, sinh/cosh, or phi and (phi^2-1)/(2 f')).  Curves built
this way have a lightlike, nowhere vanishing mean curvature vector; the
verifier re-checks that independently.

Besides the main construction, the module builds the two special-class
curves of each type (planar quantity vanishing, or generality quantity
vanishing), which are exactly the classes where a lightlike mean curvature
vector forces minimality.

Evaluation between grid nodes re-runs the cumulative quadrature locally from
the nearest node, so off-grid values stay consistent with the stored ones to
quadrature tolerance.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, replace
from typing import Callable

import numpy as np

from .profiles import (Profile, ProfileJet, RotationType, ValidityError,
                       generality_quantity, generality_scale, validity_check)
from .quadrature import (DEFAULT_TOL, adaptive_simpson,
                         cumulative_adaptive_simpson, step_tolerance)

DEFAULT_QUAD_TOL = DEFAULT_TOL
MIN_SAMPLES = 16

PHI_QUASI_MINIMAL = "quasi-minimal"
PHI_CONSTANT = "constant"
PHI_LINEAR = "linear"
PHI_PROFILE_SLOPE = "profile-slope"

_PHI_KINDS = (PHI_QUASI_MINIMAL, PHI_CONSTANT, PHI_LINEAR, PHI_PROFILE_SLOPE)

#: Names of the two quadrature-built coordinate columns per rotation type.
INTEGRATED_COLUMNS = {
    RotationType.ELLIPTIC: ("x1", "x2"),
    RotationType.HYPERBOLIC_A: ("x2", "x4"),
    RotationType.HYPERBOLIC_B: ("x2", "x4"),
    RotationType.PARABOLIC: ("x1", "g"),
}

#: CSV / JSON column order (u and phi first, then the embedding columns).
COLUMN_ORDER = {
    RotationType.ELLIPTIC: ("u", "phi", "x1", "x2", "x3", "x4"),
    RotationType.HYPERBOLIC_A: ("u", "phi", "x1", "x2", "x3", "x4"),
    RotationType.HYPERBOLIC_B: ("u", "phi", "x1", "x2", "x3", "x4"),
    RotationType.PARABOLIC: ("u", "phi", "x1", "f", "g"),
}

CURVE_FORMAT = "rotsurf4-curve/1"


@dataclass(frozen=True)
class CurveConstants:
    """Integration constants of a generating curve.

    u0 is the base point where phi takes the value phi0 (elliptic and
    hyperbolic) or anchoring the 1/f integral (parabolic); offsets shift the
    two integrated coordinates; big_c is the parabolic constant C.  slope and
    scale_k parameterize the special-class phi models and are ignored for
    quasi-minimal curves.
    """

    u0: float | None = None
    phi0: float = 0.0
    offset_a: float = 0.0
    offset_b: float = 0.0
    big_c: float = 0.0
    slope: float = 1.0
    scale_k: float = 1.0

    def as_dict(self) -> dict:
        return {"u0": self.u0, "phi0": self.phi0,
                "offset_a": self.offset_a, "offset_b": self.offset_b,
                "big_c": self.big_c, "slope": self.slope,
                "scale_k": self.scale_k}

    @classmethod
    def from_dict(cls, d: dict) -> "CurveConstants":
        return cls(**{k: d[k] for k in
                      ("u0", "phi0", "offset_a", "offset_b",
                       "big_c", "slope", "scale_k") if k in d})


def phi_integrand(rotation_type: RotationType, profile: Profile, u: float) -> float:
    """Rate of the rotation angle before the eta sign (elliptic/hyperbolic)."""
    jet = profile.jet(u)
    if rotation_type is RotationType.ELLIPTIC:
        denom = jet.p * (1.0 + jet.dp * jet.dp)
        if abs(denom) < 1e-300:
            raise ValidityError(f"profile vanishes at u={u!r}")
        return (jet.p * jet.d2p + jet.dp * jet.dp + 1.0) / denom
    if rotation_type.is_hyperbolic:
        one_minus = 1.0 - jet.dp * jet.dp
        denom = jet.p * one_minus
        scale = abs(jet.p) * (jet.dp * jet.dp + 1.0)
        if abs(denom) <= 1e-12 * max(scale, 1e-300):
            raise ValidityError(
                f"slope magnitude reaches 1 (or profile vanishes) at u={u!r}")
        return (jet.p * jet.d2p + jet.dp * jet.dp - 1.0) / denom
    raise ValueError("parabolic phi has a closed form; see phi_of_u")


def phi_of_u(rotation_type: RotationType, profile: Profile, u0: float, u: float,
             eta: int = 1, big_c: float = 0.0, phi0: float = 0.0,
             tol: float = DEFAULT_QUAD_TOL) -> float:
    """Rotation angle at u with base point u0.

    Elliptic/hyperbolic: phi0 + eta * integral of the phi integrand.
    Parabolic: the closed form with constant big_c and the 1/f integral
    anchored at u0 (phi0 is not used; C plays its role).
    """
    if rotation_type is RotationType.PARABOLIC:
        s = adaptive_simpson(lambda t: 1.0 / profile.value(t), u0, u, tol)
        jet = profile.jet(u)
        return jet.dp * (big_c + eta * (-1.0 / jet.dp + s))
    val = adaptive_simpson(lambda t: phi_integrand(rotation_type, profile, t),
                           u0, u, tol)
    return phi0 + eta * val


# ---------------------------------------------------------------------------
# Pointwise curve state


@dataclass(frozen=True)
class CurveState:
    """Curve data at one parameter value: profile jet, angle, coordinates.

    ``coords`` maps coordinate names to (value, d/du, d2/du2) triples; the
    derivatives come from the defining identities (not finite differences),
    so they are exactly the closed forms entering the curvature formulas.
    """

    rotation_type: RotationType
    u: float
    jet: ProfileJet
    phi: float
    dphi: float
    coords: dict

    def coord(self, name: str) -> tuple[float, float, float]:
        return self.coords[name]

    @property
    def planar_quantity(self) -> float:
        """x1'x2'' - x1''x2' (elliptic), x2'x4'' - x2''x4' (hyperbolic),
        x1''f' - x1'f'' (parabolic)."""
        t = self.rotation_type
        if t is RotationType.ELLIPTIC:
            _, x1d, x1dd = self.coords["x1"]
            _, x2d, x2dd = self.coords["x2"]
            return x1d * x2dd - x1dd * x2d
        if t.is_hyperbolic:
            _, x2d, x2dd = self.coords["x2"]
            _, x4d, x4dd = self.coords["x4"]
            return x2d * x4dd - x2dd * x4d
        _, x1d, x1dd = self.coords["x1"]
        return x1dd * self.jet.dp - x1d * self.jet.d2p

    @property
    def planar_scale(self) -> float:
        t = self.rotation_type
        if t is RotationType.ELLIPTIC:
            _, x1d, x1dd = self.coords["x1"]
            _, x2d, x2dd = self.coords["x2"]
            s = abs(x1d * x2dd) + abs(x1dd * x2d)
        elif t.is_hyperbolic:
            _, x2d, x2dd = self.coords["x2"]
            _, x4d, x4dd = self.coords["x4"]
            s = abs(x2d * x4dd) + abs(x2dd * x4d)
        else:
            _, x1d, x1dd = self.coords["x1"]
            s = abs(x1dd * self.jet.dp) + abs(x1d * self.jet.d2p)
        return max(s, 1e-30)

    @property
    def generality_quantity(self) -> float:
        return generality_quantity(self.rotation_type, self.jet)


def _envelope(rotation_type: RotationType, jet: ProfileJet) -> tuple[float, float]:
    """Arc-length envelope W and dW/du for the elliptic/hyperbolic types."""
    dp, d2p = jet.dp, jet.d2p
    if rotation_type is RotationType.ELLIPTIC:
        w = math.sqrt(1.0 + dp * dp)
        return w, dp * d2p / w
    if rotation_type is RotationType.HYPERBOLIC_A:
        arg = dp * dp - 1.0
        if arg <= 0.0:
            raise ValidityError("case A requires (slope)^2 > 1")
        w = math.sqrt(arg)
        return w, dp * d2p / w
    if rotation_type is RotationType.HYPERBOLIC_B:
        arg = 1.0 - dp * dp
        if arg <= 0.0:
            raise ValidityError("case B requires (slope)^2 < 1")
        w = math.sqrt(arg)
        return w, -dp * d2p / w
    raise ValueError("parabolic type has no envelope")


def _state_coords(rotation_type, jet, phi, dphi, a, b) -> dict:
    """Coordinate triples (value, d1, d2) from the defining identities."""
    if rotation_type is RotationType.ELLIPTIC:
        w, dw = _envelope(rotation_type, jet)
        c, s = math.cos(phi), math.sin(phi)
        return {"x1": (a, w * c, dw * c - w * s * dphi),
                "x2": (b, w * s, dw * s + w * c * dphi)}
    if rotation_type is RotationType.HYPERBOLIC_A:
        w, dw = _envelope(rotation_type, jet)
        sh, ch = math.sinh(phi), math.cosh(phi)
        return {"x2": (a, w * sh, dw * sh + w * ch * dphi),
                "x4": (b, w * ch, dw * ch + w * sh * dphi)}
    if rotation_type is RotationType.HYPERBOLIC_B:
        w, dw = _envelope(rotation_type, jet)
        sh, ch = math.sinh(phi), math.cosh(phi)
        return {"x2": (a, w * ch, dw * ch + w * sh * dphi),
                "x4": (b, w * sh, dw * sh + w * ch * dphi)}
    dp, d2p = jet.dp, jet.d2p
    gd = (phi * phi - 1.0) / (2.0 * dp)
    gdd = phi * dphi / dp - (phi * phi - 1.0) * d2p / (2.0 * dp * dp)
    return {"x1": (a, phi, dphi), "g": (b, gd, gdd)}


# ---------------------------------------------------------------------------
# The curve model: phi law and coordinate integrands


@dataclass(frozen=True)
class _CurveModel:
    rotation_type: RotationType
    profile: Profile
    eta: int
    constants: CurveConstants
    phi_kind: str
    quad_tol: float
    span: float

    def phi_rate(self, u: float, jet: ProfileJet, phi: float) -> float:
        if self.phi_kind == PHI_QUASI_MINIMAL:
            if self.rotation_type is RotationType.PARABOLIC:
                ratio = jet.d2p / jet.dp
                return ratio * phi + self.eta * (ratio + jet.dp / jet.p)
            return self.eta * phi_integrand(self.rotation_type, self.profile, u)
        if self.phi_kind == PHI_CONSTANT:
            return 0.0
        if self.phi_kind == PHI_LINEAR:
            return self.constants.slope
        return self.constants.scale_k * jet.d2p

    def phi_local(self, anchor_u: float, anchor_phi: float) -> Callable[[float], float]:
        """phi(t) near an anchor node, consistent with the stored value there."""
        c = self.constants
        if self.phi_kind == PHI_CONSTANT:
            return lambda t: anchor_phi
        if self.phi_kind == PHI_LINEAR:
            return lambda t: anchor_phi + c.slope * (t - anchor_u)
        if self.phi_kind == PHI_PROFILE_SLOPE:
            return lambda t: c.scale_k * self.profile.jet(t).dp
        if self.rotation_type is RotationType.PARABOLIC:
            dp0 = self.profile.jet(anchor_u).dp
            # invert the closed form for the running 1/f integral at the anchor
            s0 = (anchor_phi / dp0 - c.big_c) / self.eta + 1.0 / dp0
            cache: dict[float, float] = {}

            def phi_par(t: float) -> float:
                t = float(t)
                got = cache.get(t)
                if got is None:
                    s = s0 + adaptive_simpson(
                        lambda x: 1.0 / self.profile.value(x), anchor_u, t,
                        step_tolerance(self.quad_tol, anchor_u, t, self.span))
                    dp = self.profile.jet(t).dp
                    got = dp * (c.big_c + self.eta * (-1.0 / dp + s))
                    cache[t] = got
                return got

            return phi_par

        cache2: dict[float, float] = {}

        def phi_qm(t: float) -> float:
            t = float(t)
            if t == anchor_u:
                return anchor_phi
            got = cache2.get(t)
            if got is None:
                got = anchor_phi + self.eta * adaptive_simpson(
                    lambda x: phi_integrand(self.rotation_type, self.profile, x),
                    anchor_u, t,
                    step_tolerance(self.quad_tol, anchor_u, t, self.span))
                cache2[t] = got
            return got

        return phi_qm

    def coord_integrands(self, phi_fn) -> tuple[Callable, Callable]:
        t = self.rotation_type
        if t is RotationType.ELLIPTIC:
            def fa(x):
                return _envelope(t, self.profile.jet(x))[0] * math.cos(phi_fn(x))

            def fb(x):
                return _envelope(t, self.profile.jet(x))[0] * math.sin(phi_fn(x))
        elif t is RotationType.HYPERBOLIC_A:
            def fa(x):
                return _envelope(t, self.profile.jet(x))[0] * math.sinh(phi_fn(x))

            def fb(x):
                return _envelope(t, self.profile.jet(x))[0] * math.cosh(phi_fn(x))
        elif t is RotationType.HYPERBOLIC_B:
            def fa(x):
                return _envelope(t, self.profile.jet(x))[0] * math.cosh(phi_fn(x))

            def fb(x):
                return _envelope(t, self.profile.jet(x))[0] * math.sinh(phi_fn(x))
        else:
            def fa(x):
                return phi_fn(x)

            def fb(x):
                p = phi_fn(x)
                return (p * p - 1.0) / (2.0 * self.profile.jet(x).dp)
        return fa, fb


# ---------------------------------------------------------------------------
# The curve itself


@dataclass
class GeneratingCurve:
    """A sampled generating curve, immutable after construction.

    ``columns`` holds the full export table (u and phi included); the two
    quadrature-built coordinates are the source of truth, the remaining
    embedding columns are derived from the profile and kept for export and
    for consistency auditing.
    """

    rotation_type: RotationType
    profile: Profile
    grid: np.ndarray
    phi: np.ndarray
    columns: dict
    eta: int
    constants: CurveConstants
    quad_tol: float
    phi_kind: str = PHI_QUASI_MINIMAL
    #: Interval the file claims to cover; None means "the grid itself".
    declared_interval: tuple[float, float] | None = None

    def __post_init__(self):
        self.grid = np.asarray(self.grid, dtype=float)
        self.phi = np.asarray(self.phi, dtype=float)
        self.columns = {k: np.asarray(v, dtype=float) for k, v in self.columns.items()}
        self.columns["u"] = self.grid
        self.columns["phi"] = self.phi

    # Basic access -----------------------------------------------------------

    @property
    def n_samples(self) -> int:
        return int(self.grid.size)

    @property
    def interval(self) -> tuple[float, float]:
        return (float(self.grid[0]), float(self.grid[-1]))

    def column(self, name: str) -> np.ndarray:
        return self.columns[name]

    def column_names(self) -> tuple[str, ...]:
        return COLUMN_ORDER[self.rotation_type]

    @property
    def _model(self) -> _CurveModel:
        lo, hi = self.interval
        return _CurveModel(self.rotation_type, self.profile, self.eta,
                           self.constants, self.phi_kind, self.quad_tol,
                           span=hi - lo)

    # Evaluation ---------------------------------------------------------------

    def state_at_index(self, i: int) -> CurveState:
        i = int(i)
        u = float(self.grid[i])
        jet = self.profile.jet(u)
        phi = float(self.phi[i])
        model = self._model
        dphi = model.phi_rate(u, jet, phi)
        name_a, name_b = INTEGRATED_COLUMNS[self.rotation_type]
        a = float(self.columns[name_a][i])
        b = float(self.columns[name_b][i])
        return CurveState(self.rotation_type, u, jet, phi, dphi,
                          _state_coords(self.rotation_type, jet, phi, dphi, a, b))

    def state(self, u: float) -> CurveState:
        """Curve state at any u in the grid range.

        Off-grid values re-run the cumulative quadrature from the nearest
        node, preserving the arc-length identity to quadrature tolerance.
        """
        u = float(u)
        lo, hi = self.interval
        span = hi - lo
        i = int(np.searchsorted(self.grid, u))
        candidates = [j for j in (i - 1, i) if 0 <= j < self.grid.size]
        j = min(candidates, key=lambda k: abs(float(self.grid[k]) - u))
        if abs(float(self.grid[j]) - u) <= 1e-12 * max(1.0, span):
            return self.state_at_index(j)
        if u < lo or u > hi:
            raise ValueError(f"u={u!r} outside curve grid range [{lo!r}, {hi!r}]")

        model = self._model
        anchor = float(self.grid[j])
        phi_fn = model.phi_local(anchor, float(self.phi[j]))
        phi = phi_fn(u)
        jet = self.profile.jet(u)
        dphi = model.phi_rate(u, jet, phi)
        fa, fb = model.coord_integrands(phi_fn)
        st = step_tolerance(self.quad_tol, anchor, u, span)
        name_a, name_b = INTEGRATED_COLUMNS[self.rotation_type]
        a = float(self.columns[name_a][j]) + adaptive_simpson(fa, anchor, u, st)
        b = float(self.columns[name_b][j]) + adaptive_simpson(fb, anchor, u, st)
        return CurveState(self.rotation_type, u, jet, phi, dphi,
                          _state_coords(self.rotation_type, jet, phi, dphi, a, b))

    def planar_quantity(self, u: float) -> float:
        return self.state(u).planar_quantity

    def planar_scale(self, u: float) -> float:
        return self.state(u).planar_scale

    # Serialization -------------------------------------------------------------

    def to_json_dict(self) -> dict:
        lo, hi = self.declared_interval or self.interval
        return {
            "format": CURVE_FORMAT,
            "type": self.rotation_type.value,
            "phi_kind": self.phi_kind,
            "eta": int(self.eta),
            "constants": self.constants.as_dict(),
            "quad_tol": float(self.quad_tol),
            "interval": [lo, hi],
            "n_samples": self.n_samples,
            "profile": self.profile.spec(),
            "arrays": {name: [float(x) for x in self.columns[name]]
                       for name in self.column_names()},
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "GeneratingCurve":
        if d.get("format") != CURVE_FORMAT:
            raise ValueError(f"not a generating-curve document: format={d.get('format')!r}")
        rotation_type = RotationType.parse(d["type"])
        arrays = {k: np.asarray(v, dtype=float) for k, v in d["arrays"].items()}
        declared = d.get("interval")
        return cls(rotation_type=rotation_type,
                   profile=Profile.from_spec(d["profile"]),
                   grid=arrays["u"], phi=arrays["phi"],
                   columns={k: v for k, v in arrays.items()
                            if k not in ("u", "phi")},
                   eta=int(d["eta"]),
                   constants=CurveConstants.from_dict(d["constants"]),
                   quad_tol=float(d["quad_tol"]),
                   phi_kind=d.get("phi_kind", PHI_QUASI_MINIMAL),
                   declared_interval=(tuple(float(x) for x in declared)
                                      if declared else None))

    def write_json(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_json_dict(), fh, indent=2)
            fh.write("\n")

    @classmethod
    def read_json(cls, path) -> "GeneratingCurve":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_json_dict(json.load(fh))

    def write_csv(self, path):
        names = self.column_names()
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(names)
            for i in range(self.n_samples):
                writer.writerow([repr(float(self.columns[n][i])) for n in names])

    def with_columns(self, **replacements) -> "GeneratingCurve":
        """Copy of the curve with some columns replaced (for corruption tests)."""
        cols = {k: np.array(v, dtype=float, copy=True)
                for k, v in self.columns.items()}
        for name, values in replacements.items():
            cols[name] = np.asarray(values, dtype=float)
        grid = cols.pop("u")
        phi = cols.pop("phi")
        return replace(self, grid=grid, phi=phi, columns=cols)


# ---------------------------------------------------------------------------
# Construction


def _resolve_interval(profile, interval):
    if interval is None:
        return profile.domain
    lo, hi = float(interval[0]), float(interval[1])
    dlo, dhi = profile.domain
    slack = 1e-12 * max(1.0, abs(dlo), abs(dhi))
    if not (lo < hi):
        raise ValueError(f"empty interval [{lo!r}, {hi!r}]")
    if lo < dlo - slack or hi > dhi + slack:
        raise ValueError(f"interval [{lo!r}, {hi!r}] exceeds profile domain "
                         f"[{dlo!r}, {dhi!r}]")
    return lo, hi


def generate_curve(rotation_type: RotationType | str, profile: Profile,
                   interval=None, eta: int = 1,
                   constants: CurveConstants | None = None,
                   n_samples: int = 256, quad_tol: float = DEFAULT_QUAD_TOL,
                   phi_kind: str = PHI_QUASI_MINIMAL,
                   check_validity: bool = True) -> GeneratingCurve:
    """Build a generating curve on a uniform grid.

    With the default phi_kind the curve generates a surface whose mean
    curvature vector is lightlike and nonzero; the other phi kinds build the
    special-class demonstration curves (see special_class_curve).
    """
    rotation_type = RotationType.parse(rotation_type) if not isinstance(
        rotation_type, RotationType) else rotation_type
    if eta not in (1, -1):
        raise ValueError("eta must be +1 or -1")
    if phi_kind not in _PHI_KINDS:
        raise ValueError(f"unknown phi kind {phi_kind!r}")
    n_samples = int(n_samples)
    if n_samples < MIN_SAMPLES:
        raise ValueError(f"n_samples must be >= {MIN_SAMPLES}")
    lo, hi = _resolve_interval(profile, interval)
    constants = constants or CurveConstants()
    u0 = lo if constants.u0 is None else float(constants.u0)
    if not (lo <= u0 <= hi):
        raise ValueError(f"base point u0={u0!r} outside [{lo!r}, {hi!r}]")
    constants = replace(constants, u0=u0)

    if check_validity:
        report = validity_check(profile, rotation_type, (lo, hi),
                                require_generality=(phi_kind == PHI_QUASI_MINIMAL))
        report.raise_if_invalid()

    grid = np.linspace(lo, hi, n_samples)
    span = hi - lo
    model = _CurveModel(rotation_type, profile, eta, constants, phi_kind,
                        quad_tol, span)
    jets = [profile.jet(float(u)) for u in grid]
    dps = np.array([j.dp for j in jets])

    # Stage 1: the angle column.
    if phi_kind == PHI_QUASI_MINIMAL:
        if rotation_type is RotationType.PARABOLIC:
            s_raw = cumulative_adaptive_simpson(
                lambda t: 1.0 / profile.value(t), grid, quad_tol)
            s_base = 0.0 if u0 == lo else adaptive_simpson(
                lambda t: 1.0 / profile.value(t), lo, u0,
                step_tolerance(quad_tol, lo, u0, span))
            s = s_raw - s_base
            phi = dps * (constants.big_c + eta * (-1.0 / dps + s))
        else:
            integrand = lambda t: phi_integrand(rotation_type, profile, t)
            raw = cumulative_adaptive_simpson(integrand, grid, quad_tol)
            raw_base = 0.0 if u0 == lo else adaptive_simpson(
                integrand, lo, u0, step_tolerance(quad_tol, lo, u0, span))
            phi = constants.phi0 + eta * (raw - raw_base)
    elif phi_kind == PHI_CONSTANT:
        phi = np.full(n_samples, constants.phi0)
    elif phi_kind == PHI_LINEAR:
        phi = constants.phi0 + constants.slope * (grid - u0)
    else:
        phi = constants.scale_k * dps

    # Stage 2: the two integrated coordinates.
    a = np.empty(n_samples)
    b = np.empty(n_samples)
    a[0] = constants.offset_a
    b[0] = constants.offset_b
    for i in range(1, n_samples):
        glo = float(grid[i - 1])
        ghi = float(grid[i])
        phi_fn = model.phi_local(glo, float(phi[i - 1]))
        fa, fb = model.coord_integrands(phi_fn)
        st = step_tolerance(quad_tol, glo, ghi, span)
        a[i] = a[i - 1] + adaptive_simpson(fa, glo, ghi, st)
        b[i] = b[i - 1] + adaptive_simpson(fb, glo, ghi, st)

    # Stage 3: the export table.
    ps = np.array([j.p for j in jets])
    zeros = np.zeros(n_samples)
    if rotation_type is RotationType.ELLIPTIC:
        columns = {"x1": a, "x2": b, "x3": ps, "x4": zeros}
    elif rotation_type.is_hyperbolic:
        columns = {"x1": ps, "x2": a, "x3": zeros, "x4": b}
    else:
        columns = {"x1": a, "f": ps, "g": b}

    return GeneratingCurve(rotation_type=rotation_type, profile=profile,
                           grid=grid, phi=phi, columns=columns, eta=eta,
                           constants=constants, quad_tol=quad_tol,
                           phi_kind=phi_kind)


def special_class_curve(rotation_type: RotationType | str, which: str,
                        profile: Profile, interval=None, eta: int = 1,
                        n_samples: int = 256, quad_tol: float = DEFAULT_QUAD_TOL,
                        phi0: float = 0.0, slope: float = 1.0,
                        scale_k: float = 1.0) -> GeneratingCurve:
    """Build a curve in special class I or II of the given rotation type.

    Class I has a vanishing planar quantity (constant normal direction n1):
    phi is held constant (elliptic/hyperbolic) or proportional to the profile
    slope (parabolic).  Class II requires a profile on which the generality
    quantity vanishes identically (circle-type profiles); phi is then linear
    with a nonzero slope.  Either way the mean curvature vector is lightlike
    only where it vanishes, which is what the class audits demonstrate.
    """
    rotation_type = RotationType.parse(rotation_type) if not isinstance(
        rotation_type, RotationType) else rotation_type
    tag = str(which).strip().upper().replace("CLASS-", "").replace("CLASS_", "")
    if tag in ("I", "1"):
        phi_kind = (PHI_PROFILE_SLOPE if rotation_type is RotationType.PARABOLIC
                    else PHI_CONSTANT)
    elif tag in ("II", "2"):
        if slope == 0.0:
            raise ValueError("class II needs a nonzero phi slope")
        phi_kind = PHI_LINEAR
        lo, hi = _resolve_interval(profile, interval)
        for u in np.linspace(lo, hi, 64):
            jet = profile.jet(float(u))
            gen = generality_quantity(rotation_type, jet)
            if abs(gen) > 1e-9 * generality_scale(rotation_type, jet):
                raise ValueError(
                    f"profile is not in special class II: generality quantity "
                    f"{gen:.3g} at u={float(u):.6g}")
    else:
        raise ValueError(f"unknown special class {which!r}")
    constants = CurveConstants(phi0=phi0, slope=slope, scale_k=scale_k)
    return generate_curve(rotation_type, profile, interval=interval, eta=eta,
                          constants=constants, n_samples=n_samples,
                          quad_tol=quad_tol, phi_kind=phi_kind,
                          check_validity=True)
