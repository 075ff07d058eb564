"""Closed-form geometry of the three rotational surface types.

For a generating curve c(u) the surfaces are

    elliptic    z(u,v) = (x1, x2, r cos v, r sin v)
    hyperbolic  z(u,v) = (r cosh v, x2, r sinh v, x4)
    parabolic   z(u,v) = x1 e1 + f xi1 + (-v^2 f + g) xi2 + sqrt(2) v f e4

with induced first fundamental form (1, 0, -r^2) resp. (1, 0, -2 f^2): a
Lorentz surface.  The orthonormal tangent frame is X = z_u, Y = z_v / rho
with rho = r (elliptic/hyperbolic) or sqrt(2) f (parabolic), and the normal
frame n1, n2 follows the explicit formulas of the construction; no numerical
re-orthonormalization is applied, so the second-form and mean-curvature
coefficients are directly comparable with the defining expressions.

Gram relations: <X,X> = 1, <Y,Y> = -1, <n1,n1> = eps, <n2,n2> = -eps with
eps = +1 except in hyperbolic case B, where eps = sign((r')^2 - 1) = -1.

All quantities at one (u, v) are bundled into a SurfaceJet; everything is a
pure function of its inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .generator import CurveState, GeneratingCurve
from .neutral import MVec4, inner
from .profiles import Profile, RotationType, generality_quantity

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class Frame:
    """Orthonormal tangent/normal frame at a surface point."""

    X: MVec4
    Y: MVec4
    n1: MVec4
    n2: MVec4
    eps: int

    def vectors(self) -> tuple[MVec4, MVec4, MVec4, MVec4]:
        return (self.X, self.Y, self.n1, self.n2)

    def expected_gram(self) -> tuple[tuple[float, ...], ...]:
        e = float(self.eps)
        return ((1.0, 0.0, 0.0, 0.0),
                (0.0, -1.0, 0.0, 0.0),
                (0.0, 0.0, e, 0.0),
                (0.0, 0.0, 0.0, -e))


@dataclass(frozen=True)
class SecondForm:
    """Second-fundamental-form coefficients on (n1, n2).

    xx, xy, yy are the coefficient pairs of sigma(X,X), sigma(X,Y) and
    sigma(Y,Y); sigma(X,Y) vanishes identically for all three types and is
    kept for the oracle comparison.
    """

    xx: tuple[float, float]
    xy: tuple[float, float]
    yy: tuple[float, float]

    def vector(self, which: str, frame: Frame) -> MVec4:
        c1, c2 = getattr(self, which)
        return frame.n1 * c1 + frame.n2 * c2


@dataclass(frozen=True)
class MeanCurvature:
    """Mean curvature data: coefficients on (n1, n2), the assembled vector
    (at the frame's v), and hh = <H, H> computed from the vector."""

    h1: float
    h2: float
    vector: MVec4
    hh: float
    eps: int

    @property
    def hh_from_coefficients(self) -> float:
        return self.eps * (self.h1 * self.h1 - self.h2 * self.h2)


@dataclass(frozen=True)
class SurfaceJet:
    """Point, first/second partials, frame, forms and curvatures at (u, v)."""

    rotation_type: RotationType
    u: float
    v: float
    state: CurveState
    z: MVec4
    z_u: MVec4
    z_v: MVec4
    z_uu: MVec4
    z_uv: MVec4
    z_vv: MVec4
    frame: Frame
    first_form: tuple[float, float, float]
    sigma: SecondForm
    K: float
    H: MeanCurvature


def _eps_of(rotation_type: RotationType) -> int:
    return -1 if rotation_type is RotationType.HYPERBOLIC_B else 1


def rho(rotation_type: RotationType, state: CurveState) -> float:
    """Normalization of z_v: r, r, or sqrt(2) f (signed)."""
    if rotation_type is RotationType.PARABOLIC:
        return _SQRT2 * state.jet.p
    return state.jet.p


def embed_point(rotation_type: RotationType, state: CurveState, v: float) -> MVec4:
    """Surface point from a curve state and the rotation parameter v."""
    p = state.jet.p
    if rotation_type is RotationType.ELLIPTIC:
        x1 = state.coords["x1"][0]
        x2 = state.coords["x2"][0]
        return MVec4(x1, x2, p * math.cos(v), p * math.sin(v))
    if rotation_type.is_hyperbolic:
        x2 = state.coords["x2"][0]
        x4 = state.coords["x4"][0]
        return MVec4(p * math.cosh(v), x2, p * math.sinh(v), x4)
    x1 = state.coords["x1"][0]
    g = state.coords["g"][0]
    return MVec4.from_null_basis(x1, _SQRT2 * v * p, p, -v * v * p + g)


def eval_point(rotation_type: RotationType, curve: GeneratingCurve,
               u: float, v: float) -> MVec4:
    return embed_point(rotation_type, curve.state(u), float(v))


def _partials(rotation_type, state: CurveState, v: float):
    jet = state.jet
    p, dp, d2p = jet
    if rotation_type is RotationType.ELLIPTIC:
        _, x1d, x1dd = state.coords["x1"]
        _, x2d, x2dd = state.coords["x2"]
        c, s = math.cos(v), math.sin(v)
        z_u = MVec4(x1d, x2d, dp * c, dp * s)
        z_v = MVec4(0.0, 0.0, -p * s, p * c)
        z_uu = MVec4(x1dd, x2dd, d2p * c, d2p * s)
        z_uv = MVec4(0.0, 0.0, -dp * s, dp * c)
        z_vv = MVec4(0.0, 0.0, -p * c, -p * s)
    elif rotation_type.is_hyperbolic:
        _, x2d, x2dd = state.coords["x2"]
        _, x4d, x4dd = state.coords["x4"]
        ch, sh = math.cosh(v), math.sinh(v)
        z_u = MVec4(dp * ch, x2d, dp * sh, x4d)
        z_v = MVec4(p * sh, 0.0, p * ch, 0.0)
        z_uu = MVec4(d2p * ch, x2dd, d2p * sh, x4dd)
        z_uv = MVec4(dp * sh, 0.0, dp * ch, 0.0)
        z_vv = MVec4(p * ch, 0.0, p * sh, 0.0)
    else:
        _, x1d, x1dd = state.coords["x1"]
        _, gd, gdd = state.coords["g"]
        nb = MVec4.from_null_basis
        z_u = nb(x1d, _SQRT2 * v * dp, dp, -v * v * dp + gd)
        z_v = nb(0.0, _SQRT2 * p, 0.0, -2.0 * v * p)
        z_uu = nb(x1dd, _SQRT2 * v * d2p, d2p, -v * v * d2p + gdd)
        z_uv = nb(0.0, _SQRT2 * dp, 0.0, -2.0 * v * dp)
        z_vv = nb(0.0, 0.0, 0.0, -2.0 * p)
    return z_u, z_v, z_uu, z_uv, z_vv


def frame_at(rotation_type: RotationType, state: CurveState, v: float) -> Frame:
    """Tangent/normal frame from the explicit construction formulas."""
    jet = state.jet
    p, dp, _ = jet
    eps = _eps_of(rotation_type)
    z_u, z_v = _partials(rotation_type, state, v)[:2]
    if rotation_type is RotationType.ELLIPTIC:
        _, x1d, _ = state.coords["x1"]
        _, x2d, _ = state.coords["x2"]
        w = math.sqrt(1.0 + dp * dp)
        n1 = MVec4(-x2d / w, x1d / w, 0.0, 0.0)
        n2 = MVec4(dp * x1d / w, dp * x2d / w,
                   w * math.cos(v), w * math.sin(v))
        return Frame(X=z_u, Y=z_v / p, n1=n1, n2=n2, eps=eps)
    if rotation_type.is_hyperbolic:
        _, x2d, _ = state.coords["x2"]
        _, x4d, _ = state.coords["x4"]
        nw = math.sqrt(eps * (dp * dp - 1.0))
        one_minus = 1.0 - dp * dp
        n1 = MVec4(0.0, x4d / nw, 0.0, x2d / nw)
        n2 = MVec4(one_minus * math.cosh(v) / nw, -dp * x2d / nw,
                   one_minus * math.sinh(v) / nw, -dp * x4d / nw)
        return Frame(X=z_u, Y=z_v / p, n1=n1, n2=n2, eps=eps)
    _, x1d, _ = state.coords["x1"]
    _, gd, _ = state.coords["g"]
    nb = MVec4.from_null_basis
    n1 = nb(1.0, 0.0, 0.0, x1d / dp)
    n2 = nb(x1d, _SQRT2 * v * dp, dp,
            (1.0 + dp * gd - v * v * dp * dp) / dp)
    return Frame(X=z_u, Y=z_v / (_SQRT2 * p), n1=n1, n2=n2, eps=eps)


def second_form(rotation_type: RotationType, curve_or_state, u: float | None = None) -> SecondForm:
    """Second-fundamental-form coefficients at u (independent of v)."""
    state = curve_or_state if isinstance(curve_or_state, CurveState) \
        else curve_or_state.state(float(u))
    jet = state.jet
    p, dp, d2p = jet
    if rotation_type is RotationType.ELLIPTIC:
        w = math.sqrt(1.0 + dp * dp)
        return SecondForm(xx=(state.planar_quantity / w, d2p / w),
                          xy=(0.0, 0.0),
                          yy=(0.0, -w / p))
    if rotation_type.is_hyperbolic:
        eps = _eps_of(rotation_type)
        nw = math.sqrt(eps * (dp * dp - 1.0))
        # x4'x2'' - x4''x2' = -(x2'x4'' - x2''x4')
        q = -state.planar_quantity
        return SecondForm(xx=(eps * q / nw, -eps * d2p / nw),
                          xy=(0.0, 0.0),
                          yy=(0.0, eps * (dp * dp - 1.0) / (p * nw)))
    return SecondForm(xx=(state.planar_quantity / dp, d2p / dp),
                      xy=(0.0, 0.0),
                      yy=(0.0, -dp / p))


def gauss_curvature(rotation_type: RotationType, profile: Profile, u: float) -> float:
    """K = -r''/r (elliptic, hyperbolic) or -f''/f (parabolic)."""
    jet = profile.jet(float(u))
    return -jet.d2p / jet.p


def gauss_equation_curvature(sigma: SecondForm, frame: Frame) -> float:
    """K recomputed from sigma via the Gauss equation with the induced
    signature (<X,X><Y,Y> - <X,Y>^2 = -1 for these Lorentz frames)."""
    def dot(a, b):
        return float(frame.eps) * (a[0] * b[0] - a[1] * b[1])

    denom = (inner(frame.X, frame.X) * inner(frame.Y, frame.Y)
             - inner(frame.X, frame.Y) ** 2)
    return (dot(sigma.xy, sigma.xy) - dot(sigma.xx, sigma.yy)) / denom


def mean_curvature(rotation_type: RotationType, curve: GeneratingCurve,
                   u: float, v: float = 0.0) -> MeanCurvature:
    """Mean curvature coefficients, assembled vector (at v) and hh = <H,H>.

    For quasi-minimally generated curves the coefficients collapse to the
    single lightlike combination (eta n1 + n2) scaled by
        (r r'' + (r')^2 + 1) / (2 r sqrt(1 + (r')^2))       elliptic
        -(r r'' + (r')^2 - 1) / (2 r sqrt(eps((r')^2-1)))   hyperbolic
        (ln |f f'|)' / 2                                    parabolic
    """
    state = curve.state(float(u))
    jet = state.jet
    p, dp, d2p = jet
    gen = generality_quantity(rotation_type, jet)
    eps = _eps_of(rotation_type)
    if rotation_type is RotationType.ELLIPTIC:
        w = math.sqrt(1.0 + dp * dp)
        h1 = state.planar_quantity / (2.0 * w)
        h2 = gen / (2.0 * p * w)
    elif rotation_type.is_hyperbolic:
        nw = math.sqrt(eps * (dp * dp - 1.0))
        q = -state.planar_quantity
        h1 = eps * q / (2.0 * nw)
        h2 = -eps * gen / (2.0 * p * nw)
    else:
        h1 = state.planar_quantity / (2.0 * dp)
        h2 = gen / (2.0 * p * dp)
    frame = frame_at(rotation_type, state, float(v))
    vec = frame.n1 * h1 + frame.n2 * h2
    return MeanCurvature(h1=h1, h2=h2, vector=vec, hh=inner(vec, vec), eps=eps)


def eval_jet(rotation_type: RotationType, curve: GeneratingCurve,
             u: float, v: float) -> SurfaceJet:
    """Full closed-form jet of the surface at (u, v)."""
    u = float(u)
    v = float(v)
    state = curve.state(u)
    z = embed_point(rotation_type, state, v)
    z_u, z_v, z_uu, z_uv, z_vv = _partials(rotation_type, state, v)
    frame = frame_at(rotation_type, state, v)
    first = (inner(z_u, z_u), inner(z_u, z_v), inner(z_v, z_v))
    sigma = second_form(rotation_type, state)
    k = -state.jet.d2p / state.jet.p
    h = mean_curvature(rotation_type, curve, u, v)
    return SurfaceJet(rotation_type=rotation_type, u=u, v=v, state=state,
                      z=z, z_u=z_u, z_v=z_v, z_uu=z_uu, z_uv=z_uv, z_vv=z_vv,
                      frame=frame, first_form=first, sigma=sigma, K=k, H=h)
