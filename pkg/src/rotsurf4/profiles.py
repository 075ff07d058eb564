"""Profile functions and their admissibility for the three rotation types.

A profile is the scalar function driving a rotational surface: r(u) for the
elliptic and hyperbolic types, f(u) for the parabolic type.  Profiles expose
value together with first and second derivative (a jet); the generator and
all curvature formulas consume nothing else.

Admissibility per rotation type:

* elliptic      r > 0 and r r'' + (r')^2 + 1 bounded away from zero
* hyperbolic A  r > 0, (r')^2 > 1,  r r'' + (r')^2 - 1 nonvanishing
* hyperbolic B  r > 0, (r')^2 < 1,  r r'' + (r')^2 - 1 nonvanishing
* parabolic     f != 0, f' != 0,    f f'' + (f')^2 nonvanishing

The combination r r'' + (r')^2 +/- 1 (resp. f f'' + (f')^2) is called the
*generality quantity* below; profiles on which it changes sign are rejected
rather than split.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple

import numpy as np

from .numdiff import fd_weights

#: Relative tolerance for the "does this quantity vanish" dichotomies.
VANISH_TOL = 1e-9


class RotationType(str, Enum):
    ELLIPTIC = "elliptic"
    HYPERBOLIC_A = "hyperbolic-a"
    HYPERBOLIC_B = "hyperbolic-b"
    PARABOLIC = "parabolic"

    @property
    def is_hyperbolic(self) -> bool:
        return self in (RotationType.HYPERBOLIC_A, RotationType.HYPERBOLIC_B)

    @classmethod
    def parse(cls, text: str) -> "RotationType":
        key = str(text).strip().lower().replace("_", "-")
        for t in cls:
            if t.value == key:
                return t
        raise ValueError(f"unknown rotation type {text!r}")


class ProfileJet(NamedTuple):
    p: float
    dp: float
    d2p: float


class ProfileDomainError(ValueError):
    """Evaluation outside the profile's domain."""


class ValidityError(ValueError):
    """Profile/interval combination unusable for the requested rotation type."""

    def __init__(self, message: str, report: "ValidityReport | None" = None):
        super().__init__(message)
        self.report = report


_REGISTRY: dict[str, type] = {}


def _register(cls):
    _REGISTRY[cls.kind] = cls
    return cls


@dataclass(frozen=True)
class Profile:
    """Base profile: a smooth scalar function on a closed interval."""

    domain: tuple[float, float]

    kind = "abstract"

    def __post_init__(self):
        lo, hi = self.domain
        if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
            raise ValueError(f"invalid profile domain {self.domain!r}")
        object.__setattr__(self, "domain", (float(lo), float(hi)))

    # Evaluation ------------------------------------------------------------

    def jet(self, u: float) -> ProfileJet:
        u = float(u)
        lo, hi = self.domain
        slack = 1e-12 * max(1.0, abs(lo), abs(hi))
        if u < lo - slack or u > hi + slack:
            raise ProfileDomainError(
                f"u={u!r} outside profile domain [{lo!r}, {hi!r}]")
        return self._jet(min(max(u, lo), hi))

    def value(self, u: float) -> float:
        return self.jet(u).p

    def _jet(self, u: float) -> ProfileJet:  # pragma: no cover - abstract
        raise NotImplementedError

    # Serialization ----------------------------------------------------------

    def spec(self) -> dict:
        return {"kind": self.kind, "params": self._params(), "domain": list(self.domain)}

    def _params(self) -> list:  # pragma: no cover - abstract
        raise NotImplementedError

    @staticmethod
    def from_spec(spec: dict) -> "Profile":
        kind = str(spec["kind"]).strip().lower()
        if kind.startswith("builtin-"):
            kind = kind[len("builtin-"):]
        try:
            cls = _REGISTRY[kind]
        except KeyError:
            raise ValueError(f"unknown profile kind {spec['kind']!r}") from None
        return cls._from_spec(spec)

    @classmethod
    def _from_spec(cls, spec: dict) -> "Profile":
        domain = tuple(float(x) for x in spec["domain"])
        return cls(domain, *[float(x) for x in spec.get("params", [])])


@_register
@dataclass(frozen=True)
class ConstantProfile(Profile):
    """p(u) = c."""

    c: float = 1.0
    kind = "constant"

    def _jet(self, u):
        return ProfileJet(self.c, 0.0, 0.0)

    def _params(self):
        return [self.c]


@_register
@dataclass(frozen=True)
class LinearProfile(Profile):
    """p(u) = a + b u."""

    a: float = 1.0
    b: float = 0.5
    kind = "linear"

    def _jet(self, u):
        return ProfileJet(self.a + self.b * u, self.b, 0.0)

    def _params(self):
        return [self.a, self.b]


@_register
@dataclass(frozen=True)
class PowerProfile(Profile):
    """p(u) = a * u**q, for u > 0 when q is not a nonnegative integer."""

    a: float = 1.0
    q: float = 2.0
    kind = "power"

    def __post_init__(self):
        super().__post_init__()
        integer_q = float(self.q).is_integer() and self.q >= 0
        if not integer_q and self.domain[0] <= 0.0:
            raise ValueError("power profile with non-integer exponent needs u > 0")

    def _jet(self, u):
        a, q = self.a, self.q
        p = a * u ** q
        dp = a * q * u ** (q - 1.0) if q != 0.0 else 0.0
        d2p = a * q * (q - 1.0) * u ** (q - 2.0) if q not in (0.0, 1.0) else 0.0
        return ProfileJet(p, dp, d2p)

    def _params(self):
        return [self.a, self.q]


@_register
@dataclass(frozen=True)
class ExpProfile(Profile):
    """p(u) = a * exp(k u)."""

    a: float = 1.0
    k: float = 1.0
    kind = "exp"

    def _jet(self, u):
        p = self.a * math.exp(self.k * u)
        return ProfileJet(p, self.k * p, self.k * self.k * p)

    def _params(self):
        return [self.a, self.k]


@_register
@dataclass(frozen=True)
class CoshProfile(Profile):
    """p(u) = a * cosh(k u)."""

    a: float = 1.0
    k: float = 1.0
    kind = "cosh"

    def _jet(self, u):
        ch = math.cosh(self.k * u)
        sh = math.sinh(self.k * u)
        return ProfileJet(self.a * ch, self.a * self.k * sh,
                          self.a * self.k * self.k * ch)

    def _params(self):
        return [self.a, self.k]


@_register
@dataclass(frozen=True)
class PolynomialProfile(Profile):
    """p(u) = sum(coeffs[i] * u**i)."""

    coeffs: tuple[float, ...] = (1.0,)
    kind = "poly"

    def __post_init__(self):
        super().__post_init__()
        object.__setattr__(self, "coeffs", tuple(float(c) for c in self.coeffs))

    def _jet(self, u):
        c = np.asarray(self.coeffs)
        p = float(np.polynomial.polynomial.polyval(u, c))
        dp = float(np.polynomial.polynomial.polyval(u, np.polynomial.polynomial.polyder(c)))
        d2p = float(np.polynomial.polynomial.polyval(u, np.polynomial.polynomial.polyder(c, 2)))
        return ProfileJet(p, dp, d2p)

    def _params(self):
        return list(self.coeffs)

    @classmethod
    def _from_spec(cls, spec):
        domain = tuple(float(x) for x in spec["domain"])
        return cls(domain, tuple(float(x) for x in spec.get("params", [1.0])))


@_register
@dataclass(frozen=True)
class SqrtPolyProfile(Profile):
    """p(u) = sqrt(q(u)) with q a polynomial positive on the domain.

    This covers the circle-type profiles sqrt(c^2 - u^2), sqrt(u^2 + c^2) and
    sqrt(a u + b) on which the generality quantity vanishes identically; they
    are the canonical second special class of each rotation type.
    """

    coeffs: tuple[float, ...] = (1.0,)
    kind = "sqrt-poly"

    def __post_init__(self):
        super().__post_init__()
        object.__setattr__(self, "coeffs", tuple(float(c) for c in self.coeffs))

    def _jet(self, u):
        c = np.asarray(self.coeffs)
        q = float(np.polynomial.polynomial.polyval(u, c))
        if q <= 0.0:
            raise ProfileDomainError(f"sqrt-poly radicand nonpositive at u={u!r}")
        dq = float(np.polynomial.polynomial.polyval(u, np.polynomial.polynomial.polyder(c)))
        d2q = float(np.polynomial.polynomial.polyval(u, np.polynomial.polynomial.polyder(c, 2)))
        p = math.sqrt(q)
        dp = dq / (2.0 * p)
        d2p = d2q / (2.0 * p) - dq * dq / (4.0 * q * p)
        return ProfileJet(p, dp, d2p)

    def _params(self):
        return list(self.coeffs)

    @classmethod
    def _from_spec(cls, spec):
        domain = tuple(float(x) for x in spec["domain"])
        return cls(domain, tuple(float(x) for x in spec.get("params", [1.0])))


@_register
@dataclass(frozen=True)
class TabulatedProfile(Profile):
    """Profile sampled on a grid; derivatives come from finite differences.

    Jets interpolate with a 5-node local stencil: central in the interior,
    one-sided at the ends (second order there).  ``fd_derivatives`` flags the
    reduced accuracy compared to the analytic kinds.
    """

    grid: tuple[float, ...] = ()
    values: tuple[float, ...] = ()
    kind = "tabulated"
    fd_derivatives = True

    def __post_init__(self):
        super().__post_init__()
        g = np.asarray(self.grid, dtype=float)
        v = np.asarray(self.values, dtype=float)
        if g.size < 5 or g.size != v.size:
            raise ValueError("tabulated profile needs >= 5 matching samples")
        if not np.all(np.diff(g) > 0):
            raise ValueError("tabulated grid must be strictly increasing")
        object.__setattr__(self, "grid", tuple(float(x) for x in g))
        object.__setattr__(self, "values", tuple(float(x) for x in v))

    def _jet(self, u):
        g = np.asarray(self.grid)
        v = np.asarray(self.values)
        i = int(np.searchsorted(g, u))
        lo = min(max(i - 2, 0), g.size - 5)
        nodes = g[lo:lo + 5]
        vals = v[lo:lo + 5]
        p = float(np.dot(fd_weights(nodes, u, 0), vals))
        dp = float(np.dot(fd_weights(nodes, u, 1), vals))
        d2p = float(np.dot(fd_weights(nodes, u, 2), vals))
        return ProfileJet(p, dp, d2p)

    def _params(self):
        return []

    def spec(self):
        return {"kind": self.kind, "grid": list(self.grid),
                "values": list(self.values), "domain": list(self.domain)}

    @classmethod
    def _from_spec(cls, spec):
        domain = tuple(float(x) for x in spec["domain"])
        return cls(domain, tuple(spec["grid"]), tuple(spec["values"]))


def eval_jet(profile: Profile, u: float) -> ProfileJet:
    """Value and first two derivatives of the profile at u."""
    return profile.jet(u)


# ---------------------------------------------------------------------------
# Regime quantities


def generality_quantity(rotation_type: RotationType, jet: ProfileJet) -> float:
    """r r'' + (r')^2 + 1 / - 1 / f f'' + (f')^2 depending on the type."""
    core = jet.p * jet.d2p + jet.dp * jet.dp
    if rotation_type is RotationType.ELLIPTIC:
        return core + 1.0
    if rotation_type.is_hyperbolic:
        return core - 1.0
    return core


def generality_scale(rotation_type: RotationType, jet: ProfileJet) -> float:
    """Magnitude of the generality quantity's ingredients, for relative tests."""
    s = abs(jet.p * jet.d2p) + jet.dp * jet.dp
    if rotation_type is not RotationType.PARABOLIC:
        s += 1.0
    return max(s, 1e-30)


@dataclass(frozen=True)
class RegimeFlags:
    """Pointwise regime of a profile (optionally with a concrete curve).

    ``classification`` is one of general / special_I / special_II /
    minimal_candidate; flat and singular are independent flags (a flat
    surface can still be of general class).
    """

    flat: bool
    singular: bool
    classification: str

    def labels(self) -> tuple[str, ...]:
        out = [self.classification]
        if self.flat:
            out.append("flat")
        if self.singular:
            out.append("singular")
        return tuple(out)


def regime_classify(rotation_type: RotationType, profile: Profile, u: float,
                    curve=None, tol: float = VANISH_TOL) -> RegimeFlags:
    """Classify the regime at u.

    With a curve, the planar quantity (x1'x2'' - x1''x2' and analogues) is
    read off the curve; without one, a curve constructed for a lightlike mean
    curvature vector is assumed, for which the planar quantity vanishes
    exactly when the generality quantity does.
    """
    jet = profile.jet(u)
    gen = generality_quantity(rotation_type, jet)
    gen_small = abs(gen) <= tol * generality_scale(rotation_type, jet)

    if curve is not None:
        planar = curve.planar_quantity(u)
        pscale = max(curve.planar_scale(u), 1e-30)
        planar_small = abs(planar) <= tol * pscale
    else:
        planar_small = gen_small

    flat_ref = max(1.0, abs(jet.p), abs(jet.dp))
    flat = abs(jet.d2p) <= tol * flat_ref

    singular = bool(rotation_type.is_hyperbolic
                    and abs(jet.dp * jet.dp - 1.0) <= tol * (jet.dp * jet.dp + 1.0))

    if planar_small and gen_small:
        cls = "minimal_candidate"
    elif planar_small:
        cls = "special_I"
    elif gen_small:
        cls = "special_II"
    else:
        cls = "general"
    return RegimeFlags(flat=flat, singular=singular, classification=cls)


# ---------------------------------------------------------------------------
# Validity


@dataclass(frozen=True)
class ValidityIssue:
    check: str
    u: float
    value: float

    def __str__(self):
        return f"{self.check} at u={self.u:.6g} (value {self.value:.6g})"


@dataclass
class ValidityReport:
    ok: bool
    rotation_type: RotationType
    interval: tuple[float, float]
    n_samples: int
    issues: list[ValidityIssue] = field(default_factory=list)

    def message(self) -> str:
        if self.ok:
            return (f"profile valid for {self.rotation_type.value} on "
                    f"[{self.interval[0]:.6g}, {self.interval[1]:.6g}]")
        head = "; ".join(str(i) for i in self.issues[:3])
        more = f" (+{len(self.issues) - 3} more)" if len(self.issues) > 3 else ""
        return (f"profile invalid for {self.rotation_type.value}: {head}{more}")

    def raise_if_invalid(self):
        if not self.ok:
            raise ValidityError(self.message(), self)


def validity_check(profile: Profile, rotation_type: RotationType,
                   interval: tuple[float, float] | None = None,
                   samples: int = 512, tol: float = VANISH_TOL,
                   require_generality: bool = True) -> ValidityReport:
    """Check admissibility of the profile on the interval for the given type.

    Sampled on a dense grid including the endpoints.  ``require_generality``
    is switched off when constructing the special-class demonstration curves,
    whose whole point is a vanishing generality quantity.
    """
    if interval is None:
        interval = profile.domain
    lo, hi = float(interval[0]), float(interval[1])
    if not (lo < hi):
        raise ValueError(f"empty interval [{lo!r}, {hi!r}]")
    us = np.linspace(lo, hi, samples)
    jets = [profile.jet(float(u)) for u in us]

    issues: list[ValidityIssue] = []
    p_scale = max(1.0, max(abs(j.p) for j in jets))
    dp_scale = max(1.0, max(j.dp * j.dp for j in jets))

    gen_sign = 0
    for u, j in zip(us, jets):
        u = float(u)
        if rotation_type is not RotationType.PARABOLIC:
            if j.p <= tol * p_scale:
                issues.append(ValidityIssue("profile not positive", u, j.p))
        else:
            if abs(j.p) <= tol * p_scale:
                issues.append(ValidityIssue("profile vanishes", u, j.p))
            if abs(j.dp) <= tol * math.sqrt(dp_scale):
                issues.append(ValidityIssue("profile slope vanishes", u, j.dp))
        if rotation_type.is_hyperbolic:
            x = j.dp * j.dp - 1.0
            if abs(x) <= tol * (j.dp * j.dp + 1.0):
                issues.append(ValidityIssue("slope magnitude crosses 1 (singular)", u, j.dp))
            elif rotation_type is RotationType.HYPERBOLIC_A and x < 0.0:
                issues.append(ValidityIssue("case A requires (slope)^2 > 1", u, j.dp))
            elif rotation_type is RotationType.HYPERBOLIC_B and x > 0.0:
                issues.append(ValidityIssue("case B requires (slope)^2 < 1", u, j.dp))
        if require_generality:
            gen = generality_quantity(rotation_type, j)
            if abs(gen) <= tol * generality_scale(rotation_type, j):
                issues.append(ValidityIssue("generality quantity vanishes", u, gen))
            else:
                s = 1 if gen > 0 else -1
                if gen_sign == 0:
                    gen_sign = s
                elif s != gen_sign:
                    issues.append(ValidityIssue("generality quantity changes sign", u, gen))
                    gen_sign = s

    return ValidityReport(ok=not issues, rotation_type=rotation_type,
                          interval=(lo, hi), n_samples=samples, issues=issues)
