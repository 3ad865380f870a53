"""Kernel, measure and eigenvalue functions of the three operator families.

Families and their two-point building blocks:

  hyperbolic    K(x)    = cosh(x)^(-g)                                  (position side)
  gamma         Khat(l) = Gamma((g+il)/2) Gamma((g-il)/2) / (2^(1-g) Gamma(g))
  relativistic  Kg(l)   = 1 / (S2(g/2 + il) S2(g/2 - il))

Measures of the two-variable operators (f(x +- y) means f(x+y) f(x-y)):

  hyperbolic    sinh(|a-b|)^(2g)
  gamma         (2^(1-g) Gamma(g))^2 / (Gamma(g +- i(a-b)/2) Gamma(+- i(a-b)/2))
  relativistic  S2(g +- i(a-b)) S2(+- i(a-b))

Real powers of positive quantities are taken in the log domain, and measure
zeros at coincident arguments come out as exact 0 rather than through gamma or
double-sine poles.  Real-argument kernels additionally expose fast vectorized
evaluators for the operator quadratures; the relativistic one is accelerated by
a piecewise Chebyshev proxy of the direct double-sine integral, switched to the
exact exponential asymptote at large argument (both validated in the tests).
"""
from __future__ import annotations

import enum
import math
import threading
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, KernelPoleError
from .special import (
    _LANCZOS_C as _LANCZOS_C_K,
    Periods,
    _gamma_vec,
    _nearest_nonpositive_int,
    _panels,
    complex_gamma,
    double_sine,
)

__all__ = [
    "Coupling",
    "KernelFamily",
    "kernel_K",
    "kernel_hatK",
    "kernel_Kg",
    "measure",
    "eigenvalue",
    "hatK_asymptotic",
]

_LN2 = math.log(2.0)


class KernelFamily(str, enum.Enum):
    HYPERBOLIC = "hyperbolic"
    GAMMA = "gamma"
    RELATIVISTIC = "relativistic"


@dataclass(frozen=True)
class Coupling:
    """Coupling constant g, with periods when a relativistic form is in play.

    With periods present the standing assumption 0 < g < omega1 + omega2 is
    enforced, and gstar() = omega1 + omega2 - g is the dual coupling.
    """

    g: float
    periods: Periods | None = None

    def __post_init__(self):
        if isinstance(self.g, complex):
            raise DomainError("coupling g must be real")
        if not (math.isfinite(self.g) and self.g > 0):
            raise DomainError(f"coupling g must be positive, got {self.g!r}")
        object.__setattr__(self, "g", float(self.g))
        if self.periods is not None and not self.g < self.periods.total:
            raise DomainError(
                f"need 0 < g < omega1 + omega2, got g = {self.g}, "
                f"omega1 + omega2 = {self.periods.total}"
            )

    def gstar(self) -> float:
        if self.periods is None:
            raise DomainError("gstar requires periods")
        # exact involution: a coupling built by dual() remembers its source
        src = getattr(self, "_dual_src", None)
        if src is not None:
            return src.g
        return self.periods.total - self.g

    def dual(self) -> "Coupling":
        src = getattr(self, "_dual_src", None)
        if src is not None:
            return src
        d = Coupling(self.gstar(), self.periods)
        object.__setattr__(d, "_dual_src", self)
        return d

    def require_periods(self) -> Periods:
        if self.periods is None:
            raise DomainError("this operation requires a Coupling with periods")
        return self.periods


# ---------------------------------------------------------------------------
# hyperbolic family
# ---------------------------------------------------------------------------


def ln_cosh(x: np.ndarray) -> np.ndarray:
    x = np.abs(np.asarray(x, dtype=float))
    return x + np.log1p(np.exp(-2.0 * x)) - _LN2


def ln_sinh_abs(x: np.ndarray) -> np.ndarray:
    """log sinh|x|; -inf at 0 (callers exponentiate, giving exact 0)."""
    x = np.abs(np.asarray(x, dtype=float))
    with np.errstate(divide="ignore"):
        return x + np.log1p(-np.exp(-2.0 * x)) - _LN2


def kernel_K(x, c: Coupling):
    """cosh(x)^(-g) for real x (scalar or array)."""
    out = np.exp(-c.g * ln_cosh(x))
    return float(out) if np.isscalar(x) else out


def kernel_K_complex(z: complex, c: Coupling) -> complex:
    """cosh(z)^(-g) by the principal branch, for complex spectral shifts."""
    return complex(np.exp(-c.g * np.log(np.cosh(complex(z)))))


def measure_hyperbolic(v, c: Coupling):
    out = np.exp(2.0 * c.g * ln_sinh_abs(v))
    return float(out) if np.isscalar(v) else out


# ---------------------------------------------------------------------------
# gamma family
# ---------------------------------------------------------------------------


def _hatK_vec(lam: np.ndarray, g: float) -> np.ndarray:
    """Vectorized Khat(lam) without pole screening."""
    lam = np.asarray(lam, dtype=complex)
    pref = 2.0 ** (g - 1.0) / complex_gamma(g)
    return pref * _gamma_vec(0.5 * (g + 1j * lam)) * _gamma_vec(0.5 * (g - 1j * lam))


def kernel_hatK(lam: complex, c: Coupling) -> complex:
    """Khat(lam) = Gamma((g+i lam)/2) Gamma((g-i lam)/2) / (2^(1-g) Gamma(g))."""
    lam = complex(lam)
    for z in (0.5 * (c.g + 1j * lam), 0.5 * (c.g - 1j * lam)):
        if _nearest_nonpositive_int(z) is not None:
            raise KernelPoleError(f"Khat pole: gamma argument {z!r} is a nonpositive integer")
    return complex(_hatK_vec(np.asarray(lam), c.g))


def _hatK_real_vec(x: np.ndarray, g: float) -> np.ndarray:
    """Khat on the real axis (positive), vectorized."""
    z = _gamma_vec(0.5 * (g + 1j * np.asarray(x, dtype=float)))
    return (2.0 ** (g - 1.0) / float(complex_gamma(g).real)) * (z * z.conjugate()).real


def _ln_hatK_real_vec(x: np.ndarray, g: float) -> np.ndarray:
    """ln Khat on the real axis, overflow-safe for large |x|."""
    return (
        (g - 1.0) * _LN2
        - math.lgamma(g)
        + _ln_abs_gamma_sq(0.5 * (g + 1j * np.asarray(x, dtype=float)))
    )


def _ln_abs_gamma_sq(z: np.ndarray) -> np.ndarray:
    """ln |Gamma(x + iy)|^2 for Re z > 0, vectorized and overflow-safe."""
    z = np.asarray(z, dtype=complex)
    shift = z.real < 1.5
    zz = np.where(shift, z + 2.0, z)
    zm1 = zz - 1.0
    acc = np.full_like(zz, _LANCZOS_C_K[0])
    for k in range(1, len(_LANCZOS_C_K)):
        acc = acc + _LANCZOS_C_K[k] / (zm1 + k)
    t = zm1 + 7.5
    ln = 0.5 * math.log(2.0 * math.pi) + (zm1 + 0.5) * np.log(t) - t + np.log(acc)
    out = 2.0 * ln.real
    corr = np.log(z * (z + 1.0))
    return np.where(shift, out - 2.0 * corr.real, out)


def measure_gamma(v, c: Coupling):
    """Gamma-family measure on real separations, in pole-free smooth form.

    1/(Gamma(i d/2) Gamma(-i d/2)) = (d/2) sinh(pi d/2) / pi collapses the
    zero at d = 0 to an explicit factor, so coincident arguments give exact 0.
    """
    g = c.g
    d = np.asarray(v, dtype=float)
    pref = (2.0 ** (1.0 - g) * float(complex_gamma(g).real)) ** 2
    gam = _gamma_vec(g + 0.5j * d)
    out = pref * (0.5 * d) * np.sinh(0.5 * math.pi * d) / (math.pi * (gam * gam.conjugate()).real)
    return float(out) if np.isscalar(v) else out


def hatK_asymptotic(gamma_minus_mu_base: float, mu: float, c: Coupling) -> complex:
    """Large-mu form of Khat(gamma - mu): (2 pi / Gamma(g)) mu^(g-1) e^(pi (gamma-mu)/2)."""
    if mu <= 0:
        raise DomainError("mu must be large positive")
    g = c.g
    return (
        (2.0 * math.pi / complex_gamma(g))
        * mu ** (g - 1.0)
        * math.exp(0.5 * math.pi * (gamma_minus_mu_base - mu))
    )


# ---------------------------------------------------------------------------
# relativistic family
# ---------------------------------------------------------------------------

# correction to the B22 asymptote is O(e^(-2 pi |x| / omega_max)); beyond
# 5.5 * omega_max it is below 1e-14
_ASYM_FACTOR = 5.5


def _re_ln_s2_pair(u: float, d: np.ndarray, w1: float, w2: float) -> np.ndarray:
    """ln S2(u+id) + ln S2(u-id) for real d (vectorized), 0 < u < w1+w2.

    Uses the cosine form of the integral representation; |d| beyond the
    asymptotic switch point uses the exact B22 limit -pi |d| (2u-w)/(w1 w2).
    """
    d = np.abs(np.asarray(d, dtype=float))
    w = w1 + w2
    b = 2.0 * u - w
    out = np.empty_like(d)
    x_asym = _ASYM_FACTOR * max(w1, w2)
    far = d > x_asym
    out[far] = -math.pi * d[far] * b / (w1 * w2)
    near = ~far
    if near.any():
        dn = d[near]
        rate = w - abs(b)
        t_max = 39.2 / rate
        freq = 2.0 * float(dn.max(initial=0.0))
        width = min(
            8.0 / max(freq, rate, 1.0), t_max / 4.0, 1.6 * math.pi / max(w1, w2)
        )
        t, wt = _panels(t_max, width)
        core = (
            2.0
            * (np.exp((b - w) * t) - np.exp(-(b + w) * t))
            / ((1.0 - np.exp(-2.0 * w1 * t)) * (1.0 - np.exp(-2.0 * w2 * t)))
        )
        integrand = (
            core[None, :] * np.cos(2.0 * np.outer(dn, t)) - (b / (w1 * w2 * t))[None, :]
        ) / t[None, :]
        out[near] = integrand @ wt - b / (w1 * w2 * t_max)
    return out


class _PiecewiseCheb:
    """Piecewise Chebyshev proxy of a smooth even function on [0, xmax]."""

    def __init__(self, fn_batch, xmax: float, width: float, degree: int = 24):
        n_pieces = max(1, int(math.ceil(xmax / width)))
        self.edges = np.linspace(0.0, xmax, n_pieces + 1)
        k = np.arange(degree + 1)
        theta = (k + 0.5) * math.pi / (degree + 1)
        nodes = np.cos(theta)
        # DCT-II style coefficient matrix for Chebyshev-Gauss nodes
        self._eval_deg = degree
        mid = 0.5 * (self.edges[:-1] + self.edges[1:])
        half = 0.5 * (self.edges[1:] - self.edges[:-1])
        x = (mid[:, None] + half[:, None] * nodes[None, :]).ravel()
        y = fn_batch(x).reshape(n_pieces, degree + 1)
        basis = np.cos(np.outer(k, theta))  # (deg+1, deg+1)
        coef = (2.0 / (degree + 1)) * (y @ basis.T)
        coef[:, 0] *= 0.5
        self.coef = coef
        self.half = half
        self.mid = mid

    def __call__(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        idx = np.clip(np.searchsorted(self.edges, x, side="right") - 1, 0, len(self.mid) - 1)
        s = (x - self.mid[idx]) / self.half[idx]
        # Clenshaw over the shared degree
        b1 = np.zeros_like(s)
        b2 = np.zeros_like(s)
        c = self.coef[idx]
        for j in range(self._eval_deg, 0, -1):
            b1, b2 = 2.0 * s * b1 - b2 + c[:, j], b1
        return s * b1 - b2 + c[:, 0]


_kg_cache: dict[tuple[float, float, float], tuple] = {}
_hatk_cache: dict[float, "_PiecewiseCheb"] = {}
_kg_lock = threading.Lock()


def hatK_ln_evaluator(g: float):
    """Cached piecewise-Chebyshev proxy of ln Khat on the real axis.

    Covers |x| <= 512 (the operator quadrature ranges); beyond that it falls
    back to the direct log-gamma form.  Validated against _ln_hatK_real_vec
    in the tests.
    """
    g = float(g)
    with _kg_lock:
        proxy = _hatk_cache.get(g)
    if proxy is None:
        width = min(0.8 * g, 0.8)
        proxy = _PiecewiseCheb(lambda x: _ln_hatK_real_vec(x, g), 512.0, width)
        with _kg_lock:
            _hatk_cache[g] = proxy

    def ev(x: np.ndarray) -> np.ndarray:
        xa = np.abs(np.asarray(x, dtype=float))
        out = np.empty_like(xa)
        far = xa > 512.0
        if far.any():
            out[far] = _ln_hatK_real_vec(xa[far], g)
        near = ~far
        if near.any():
            out[near] = proxy(xa[near])
        return out

    return ev


def _kg_real_tables(c: Coupling):
    """Cached (proxy, x_asym, slope) for ln Kg on the real axis, unit-normalized."""
    p = c.require_periods()
    key = (c.g, p.omega1, p.omega2)
    with _kg_lock:
        hit = _kg_cache.get(key)
    if hit is not None:
        return hit
    s = 1.0 / p.omin
    w1, w2, gn = p.omega1 * s, p.omega2 * s, c.g * s
    x_asym = _ASYM_FACTOR * max(w1, w2)
    width = min(0.4 * gn, 0.75)
    proxy = _PiecewiseCheb(
        lambda x: -_re_ln_s2_pair(0.5 * gn, x, w1, w2), x_asym, width
    )
    slope = -math.pi * (w1 + w2 - gn) / (w1 * w2)  # d ln Kg / d|x|, exact beyond x_asym
    tables = (proxy, x_asym, slope, s)
    with _kg_lock:
        _kg_cache[key] = tables
    return tables


def kg_ln_evaluator(c: Coupling):
    """Fast vectorized ln Kg on the real axis (Kg is real positive and even)."""
    proxy, x_asym, slope, s = _kg_real_tables(c)

    def ev(x: np.ndarray) -> np.ndarray:
        xn = np.abs(np.asarray(x, dtype=float)) * s
        out = np.empty_like(xn)
        far = xn > x_asym
        out[far] = slope * xn[far]
        near = ~far
        if near.any():
            out[near] = proxy(xn[near])
        return out

    return ev


def kg_real_evaluator(c: Coupling):
    """Fast vectorized Kg on the real axis."""
    ln_ev = kg_ln_evaluator(c)

    def ev(x: np.ndarray) -> np.ndarray:
        return np.exp(ln_ev(x))

    return ev


def kernel_Kg(lam: complex, c: Coupling) -> complex:
    """Kg(lam) = 1/(S2(g/2 + i lam) S2(g/2 - i lam)), any complex lam off poles."""
    p = c.require_periods()
    lam = complex(lam)
    half_g = 0.5 * c.g
    den = double_sine(half_g + 1j * lam, p) * double_sine(half_g - 1j * lam, p)
    if den == 0:
        raise KernelPoleError(f"Kg pole at lam = {lam!r} (double sine zero)")
    return 1.0 / den


def ln_measure_relativistic(v, c: Coupling) -> np.ndarray:
    """ln of S2(g +- i d) S2(+- i d) on real separations (-inf at d = 0).

    S2(+-id) is reduced with one functional-equation step to
    4 sinh^2(pi d / omega_min) S2(omega_max +- i d), which makes the
    quadratic zero at d = 0 explicit; everything stays in the log domain.
    """
    p = c.require_periods()
    s = 1.0 / p.omin
    d = np.abs(np.asarray(v, dtype=float)) * s
    w1, w2 = p.omega1 * s, p.omega2 * s
    wmax = max(w1, w2)
    ln_smooth = _re_ln_s2_pair(c.g * s, d, w1, w2) + _re_ln_s2_pair(wmax, d, w1, w2)
    with np.errstate(divide="ignore"):
        ln_sh = math.pi * d + np.log1p(-np.exp(-2.0 * math.pi * d)) - _LN2
    return 2.0 * (ln_sh + _LN2) + ln_smooth


def measure_relativistic(v, c: Coupling):
    """S2(g +- i d) S2(+- i d) on real separations d, vectorized."""
    out = np.exp(ln_measure_relativistic(v, c))
    return float(out) if np.isscalar(v) else out


def ln_measure_hyperbolic(v, c: Coupling) -> np.ndarray:
    return 2.0 * c.g * ln_sinh_abs(v)


def ln_measure_gamma(v, c: Coupling) -> np.ndarray:
    g = c.g
    d = np.abs(np.asarray(v, dtype=float))
    ln_pref = 2.0 * ((1.0 - g) * _LN2 + math.lgamma(g))
    with np.errstate(divide="ignore"):
        ln_sh = 0.5 * math.pi * d + np.log1p(-np.exp(-math.pi * d)) - _LN2
        ln_d = np.log(0.5 * d)
    return ln_pref + ln_d + ln_sh - math.log(math.pi) - _ln_abs_gamma_sq(g + 0.5j * d)


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------


def measure(kind: KernelFamily, a: float, b: float, c: Coupling):
    """Two-variable operator measure of the given family at separation a - b."""
    kind = KernelFamily(kind)
    if kind is KernelFamily.HYPERBOLIC:
        return measure_hyperbolic(a - b, c)
    if kind is KernelFamily.GAMMA:
        return measure_gamma(a - b, c)
    return measure_relativistic(a - b, c)


def eigenvalue(kind: KernelFamily, spectral: complex, label: complex, c: Coupling) -> complex:
    """Plane-wave eigenvalue of the family's one-variable integral operator.

    hyperbolic -> Khat(spectral - label); gamma -> K(spectral - label);
    relativistic -> sqrt(omega1 omega2) S2(g) Kg(spectral - label).
    """
    kind = KernelFamily(kind)
    z = complex(spectral) - complex(label)
    if kind is KernelFamily.HYPERBOLIC:
        return kernel_hatK(z, c)
    if kind is KernelFamily.GAMMA:
        if abs(z.imag) < 1e-14:
            return complex(kernel_K(z.real, c))
        return kernel_K_complex(z, c)
    p = c.require_periods()
    return (
        math.sqrt(p.product) * double_sine(c.g, p) * kernel_Kg(z, c)
    )


def kernel_decay_rate(kind: KernelFamily, c: Coupling) -> float:
    """Envelope exponent of the family's kernel as the argument grows."""
    kind = KernelFamily(kind)
    if kind is KernelFamily.HYPERBOLIC:
        return c.g
    if kind is KernelFamily.GAMMA:
        return 0.5 * math.pi
    p = c.require_periods()
    return math.pi * c.gstar() / p.product


def measure_growth_rate(kind: KernelFamily, c: Coupling) -> float:
    """Envelope exponent of the family's measure as the separation grows."""
    return 2.0 * kernel_decay_rate(kind, c)


def kernel_pole_distance(kind: KernelFamily, c: Coupling) -> float:
    """Distance from the real axis to the nearest kernel singularity.

    Quadrature panels spanning a kernel factor must stay below ~1.6x this
    scale for the Gauss rules to converge at full order.
    """
    kind = KernelFamily(kind)
    if kind is KernelFamily.HYPERBOLIC:
        return 0.5 * math.pi
    if kind is KernelFamily.GAMMA:
        return c.g
    return 0.5 * c.g


def exponent_scale(kind: KernelFamily, c: Coupling) -> float:
    """Scale kappa in the plane-wave convention e^(i kappa lambda x)."""
    if KernelFamily(kind) is KernelFamily.RELATIVISTIC:
        return 2.0 * math.pi / c.require_periods().product
    return 1.0
