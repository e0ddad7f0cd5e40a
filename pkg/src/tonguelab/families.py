"""Two-parameter lift families F_{t,a}(x) = x + t + a*phi(x).

A FamilySpec fixes the periodic perturbation and the open a-interval on which
every F_{t,a} is a strictly increasing lift (F(x+1) = F(x) + 1, x in turns).
Four kinds are supported:

  standard   phi(x) = sin(2 pi x)
  blaschke   lift of z -> e^{2 pi i t} z (1 - a z)/(1 - a/z) on the circle:
             perturbation -arctan(a sin(2 pi x) / (1 - a cos(2 pi x))) / pi
             = -(1/pi) sum_k (a^k/k) sin(2 pi k x); phi depends on a, and the
             a-independent shape used by the asymptotics is the a-derivative
             at 0, xi(0, x) = -sin(2 pi x) / pi
  angle      phi(x) = sum_{n=1}^{T} sin(2 pi n x) / n!   (truncated tail)
  fourier    phi(x) = c_0 + sum_{k>=1} (c_k e^{i 2 pi k x} + conj(c_k) e^{-i 2 pi k x})

All kinds use turn units (angles in [0, 1)), so F(x+1) = F(x) + 1 exactly.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from ._optimize import periodic_argmax, periodic_argmin
from .errors import ParameterOutOfRange

TWO_PI = 2.0 * math.pi

KIND_TRIG = 0
KIND_BLASCHKE = 1

_RANGE_GRID = 1 << 14
_RANGE_TOL = 1e-12


def _as_float_array(x):
    return np.asarray(x, dtype=float)


def _match(x, out):
    if isinstance(x, np.ndarray):
        return out
    return float(out)


@dataclass(frozen=True)
class FamilySpec:
    """Immutable family descriptor; build via standard()/blaschke()/angle()/fourier()."""

    kind: str
    fourier_coeffs: tuple = None  # ((k, complex), ...) for kind="fourier"
    angle_truncation: int = 12
    a_min: float = field(default=None, compare=False)
    a_max: float = field(default=None, compare=False)
    # trig representation phi = sum_j cos_amp[j]*cos(2 pi k x) + sin_amp[j]*sin(2 pi k x)
    _ks: np.ndarray = field(default=None, repr=False, compare=False)
    _cos_amp: np.ndarray = field(default=None, repr=False, compare=False)
    _sin_amp: np.ndarray = field(default=None, repr=False, compare=False)
    _phi_sup: float = field(default=None, repr=False, compare=False)

    # -- constructors -----------------------------------------------------

    @classmethod
    def standard(cls):
        return cls._build_trig(
            "standard",
            ks=[1],
            cos_amp=[0.0],
            sin_amp=[1.0],
            a_min=-1.0 / TWO_PI,
            a_max=1.0 / TWO_PI,
            phi_sup=1.0,
        )

    @classmethod
    def blaschke(cls):
        # Lift of z -> e^{2pi i t} z(1-az)/(1-a/z) on |z|=1, i.e.
        # x + t - arctan(a sin(2pix)/(1 - a cos(2pix)))/pi. The derivative
        # (1 - 4a cos + 3a^2)/(1 - 2a cos + a^2) stays positive exactly for
        # |a| < 1/3, which is the monotonicity range.
        fam = cls(
            kind="blaschke",
            a_min=-1.0 / 3.0,
            a_max=1.0 / 3.0,
        )
        object.__setattr__(fam, "_phi_sup", 1.0 / math.pi)
        return fam

    @classmethod
    def angle(cls, truncation=12):
        if not isinstance(truncation, int) or truncation < 1:
            raise ValueError("angle truncation must be a positive integer")
        ks = list(range(1, truncation + 1))
        sin_amp = [1.0 / math.factorial(n) for n in ks]
        return cls._build_trig(
            "angle",
            ks=ks,
            cos_amp=[0.0] * truncation,
            sin_amp=sin_amp,
            angle_truncation=truncation,
        )

    @classmethod
    def fourier(cls, coeffs):
        items = []
        seen = set()
        for entry in coeffs:
            k, c = entry
            k = int(k)
            c = complex(c)
            if k < 0:
                raise ValueError("fourier frequencies must be >= 0")
            if k in seen:
                raise ValueError("duplicate fourier frequency %d" % k)
            if k == 0 and c.imag != 0.0:
                raise ValueError("frequency-0 coefficient must be real")
            seen.add(k)
            items.append((k, c))
        if not items:
            raise ValueError("fourier kind needs at least one coefficient")
        items.sort()
        ks, cos_amp, sin_amp = [], [], []
        for k, c in items:
            ks.append(k)
            if k == 0:
                # the constant enters once: phi contains c_0 itself
                cos_amp.append(c.real)
                sin_amp.append(0.0)
            else:
                cos_amp.append(2.0 * c.real)
                sin_amp.append(-2.0 * c.imag)
        return cls._build_trig(
            "fourier",
            ks=ks,
            cos_amp=cos_amp,
            sin_amp=sin_amp,
            fourier_coeffs=tuple(items),
        )

    @classmethod
    def from_config(cls, record):
        """Build from {"kind": ..., "fourier": [[k, re, im], ...], "angle_terms": n}."""
        if not isinstance(record, dict):
            raise ValueError("family config must be a mapping")
        allowed = {"kind", "fourier", "angle_terms"}
        extra = set(record) - allowed
        if extra:
            raise ValueError("unknown family config keys: %s" % sorted(extra))
        kind = record.get("kind")
        if kind == "standard":
            return cls.standard()
        if kind == "blaschke":
            return cls.blaschke()
        if kind == "angle":
            return cls.angle(int(record.get("angle_terms", 12)))
        if kind == "fourier":
            raw = record.get("fourier")
            if not raw:
                raise ValueError("fourier kind needs a 'fourier' coefficient list")
            return cls.fourier([(int(k), complex(re, im)) for k, re, im in raw])
        raise ValueError("unknown family kind: %r" % (kind,))

    @classmethod
    def _build_trig(cls, kind, ks, cos_amp, sin_amp, a_min=None, a_max=None,
                    phi_sup=None, angle_truncation=12, fourier_coeffs=None):
        ks = np.asarray(ks, dtype=float)
        cos_amp = np.asarray(cos_amp, dtype=float)
        sin_amp = np.asarray(sin_amp, dtype=float)
        fam = cls(kind=kind, fourier_coeffs=fourier_coeffs,
                  angle_truncation=angle_truncation, a_min=a_min, a_max=a_max)
        object.__setattr__(fam, "_ks", ks)
        object.__setattr__(fam, "_cos_amp", cos_amp)
        object.__setattr__(fam, "_sin_amp", sin_amp)
        if a_min is None or a_max is None:
            lo, hi = fam._monotonicity_range()
            object.__setattr__(fam, "a_min", lo)
            object.__setattr__(fam, "a_max", hi)
        if phi_sup is None:
            _, mx = periodic_argmax(lambda xs: np.abs(fam.phi(xs)),
                                    lambda x: abs(fam.phi(x)), _RANGE_GRID, _RANGE_TOL)
            phi_sup = mx
        object.__setattr__(fam, "_phi_sup", phi_sup)
        return fam

    def _monotonicity_range(self):
        # 1 + a*phi'(x) > 0 for all x: a_min = -1/max(phi'), a_max = 1/|min(phi')|
        _, d_max = periodic_argmax(self.phi_prime, self.phi_prime, _RANGE_GRID, _RANGE_TOL)
        _, d_min = periodic_argmin(self.phi_prime, self.phi_prime, _RANGE_GRID, _RANGE_TOL)
        lo = -math.inf if d_max <= 1e-15 else -1.0 / d_max
        hi = math.inf if d_min >= -1e-15 else 1.0 / (-d_min)
        return lo, hi

    # -- perturbation shape ------------------------------------------------

    def phi(self, x):
        """The a-independent perturbation shape (xi(0, .) for the Blaschke kind)."""
        xa = _as_float_array(x)
        if self.kind == "blaschke":
            out = -np.sin(TWO_PI * xa) / math.pi
            return _match(x, out)
        out = np.zeros_like(xa)
        for k, ca, sa in zip(self._ks, self._cos_amp, self._sin_amp):
            ang = TWO_PI * k * xa
            if ca != 0.0:
                out = out + ca * np.cos(ang)
            if sa != 0.0:
                out = out + sa * np.sin(ang)
        return _match(x, out)

    def phi_prime(self, x):
        xa = _as_float_array(x)
        if self.kind == "blaschke":
            out = -2.0 * np.cos(TWO_PI * xa)
            return _match(x, out)
        out = np.zeros_like(xa)
        for k, ca, sa in zip(self._ks, self._cos_amp, self._sin_amp):
            w = TWO_PI * k
            ang = w * xa
            if ca != 0.0:
                out = out - ca * w * np.sin(ang)
            if sa != 0.0:
                out = out + sa * w * np.cos(ang)
        return _match(x, out)

    @property
    def phi_sup(self):
        """sup |phi| over one period."""
        return self._phi_sup

    # -- full perturbation F - x - t ---------------------------------------

    def perturbation(self, a, x):
        """F_{t,a}(x) - x - t; equals a*phi(x) except for the Blaschke kind."""
        xa = _as_float_array(x)
        if self.kind == "blaschke":
            ang = TWO_PI * xa
            out = -np.arctan2(a * np.sin(ang), 1.0 - a * np.cos(ang)) / math.pi
            return _match(x, out)
        return _match(x, a * self.phi(xa))

    def perturbation_sup(self, a):
        """sup_x |F_{t,a}(x) - x - t| (tight for built-ins, used for brackets)."""
        if self.kind == "blaschke":
            return math.asin(min(abs(a), 1.0)) / math.pi
        return abs(a) * self._phi_sup

    def lift_deriv(self, a, x):
        """d/dx F_{t,a}(x), strictly positive on the open a-interval."""
        xa = _as_float_array(x)
        if self.kind == "blaschke":
            ang = TWO_PI * xa
            ca = np.cos(ang)
            denom = 1.0 - 2.0 * a * ca + a * a
            out = (1.0 - 4.0 * a * ca + 3.0 * a * a) / denom
            return _match(x, out)
        return _match(x, 1.0 + a * self.phi_prime(xa))

    def lift_second_deriv(self, a, x):
        """d^2/dx^2 F_{t,a}(x)."""
        xa = _as_float_array(x)
        if self.kind == "blaschke":
            ang = TWO_PI * xa
            denom = 1.0 - 2.0 * a * np.cos(ang) + a * a
            out = 2.0 * TWO_PI * a * (1.0 - a * a) * np.sin(ang) / (denom * denom)
            return _match(x, out)
        out = np.zeros_like(xa)
        for k, ca, sa in zip(self._ks, self._cos_amp, self._sin_amp):
            w = TWO_PI * k
            ang = w * xa
            if ca != 0.0:
                out = out - ca * w * w * np.cos(ang)
            if sa != 0.0:
                out = out - sa * w * w * np.sin(ang)
        return _match(x, a * out)

    # -- validation and kernel plumbing ------------------------------------

    def check_a(self, a):
        if not (self.a_min < a < self.a_max):
            raise ParameterOutOfRange(
                "a=%r outside the open interval (%r, %r) for kind=%s"
                % (a, self.a_min, self.a_max, self.kind)
            )

    def kernel_args(self):
        """(kind_id, ks, cos_amp, sin_amp) encoding consumed by the jit kernels."""
        if self.kind == "blaschke":
            empty = np.zeros(0)
            return KIND_BLASCHKE, empty, empty, empty
        return KIND_TRIG, self._ks, self._cos_amp, self._sin_amp


@dataclass(frozen=True)
class ParamPoint:
    """A point (t, a) of the parameter plane."""

    t: float
    a: float


def eval_lift(fam, p, x):
    """F_{t,a}(x) for the lift; satisfies F(x+1) = F(x) + 1."""
    fam.check_a(p.a)
    return _match(x, _as_float_array(x) + p.t + fam.perturbation(p.a, _as_float_array(x)))


def eval_iterate(fam, p, x, n):
    """n-fold composition F^n(x); n = 0 returns x."""
    if n < 0:
        raise ValueError("iteration count must be >= 0")
    fam.check_a(p.a)
    y = _as_float_array(x).copy()
    for _ in range(int(n)):
        y = y + p.t + fam.perturbation(p.a, y)
    return _match(x, y)


def eval_iterate_deriv(fam, p, x, n):
    """(F^n)'(x) by the chain rule along the orbit; strictly positive."""
    if n < 1:
        raise ValueError("iteration count must be >= 1")
    fam.check_a(p.a)
    y = _as_float_array(x).copy()
    d = np.ones_like(y)
    for _ in range(int(n)):
        d = d * fam.lift_deriv(p.a, y)
        y = y + p.t + fam.perturbation(p.a, y)
    return _match(x, d)
