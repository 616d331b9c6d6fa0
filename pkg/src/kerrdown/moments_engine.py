"""Exact coherent-state moments of the Kerr + pair-production two-mode system.

Model
-----
Two boson modes interact through an intensity-dependent cross phase (a Kerr
medium) and a resonant pair-creation term (nondegenerate down-conversion).
Exact solvability requires the self-phase couplings to be locked to the cross
coupling (chi_1 = chi_2, cross = -2 chi_1); with that lock, and with the
single-mode frequency shifts it produces absorbed into the co-rotating frame
(they only redefine the mode carriers), the frame generator is

    H = chi * N(N - 1) - i k (a1 a2 - a1+ a2+),        N = n1 - n2,

with N a constant of motion.  The Heisenberg solution is then

    A1(t) = exp(-2i chi N t) (a1 C + a2+ S),
    A2(t) = exp(+2i chi N t) (a2 C + a1+ S),           C, S = cosh kt, sinh kt.

The mode-2 carrier includes a 2*chi dressed-frequency shift; this is the unique
carrier choice under which mode 2 is the exact alpha1 <-> alpha2 mirror of
mode 1 (and it is what `fock_oracle.moment_set_numeric` applies when reading
moments out of the evolved state).

Moment recipe
-------------
Every moment is obtained by commuting the phase factors through the ladder
operators with the shift rules

    f(N) a1 = a1 f(N-1),   f(N) a2+ = a2+ f(N-1),
    f(N) a2 = a2 f(N+1),   f(N) a1+ = a1+ f(N+1),

and evaluating the leftover exp(i m phi N), phi = 2 chi t, on the coherent
state |alpha1, alpha2> via the displacement kernel

    <alpha| e^{i lam n} |alpha> = exp(alpha^2 (e^{i lam} - 1)),

whose product over both modes is `kerr_kernel(p, m, t)` below.  Writing
beta1 = alpha1 C + alpha2 S and beta2 = alpha2 C + alpha1 S, the closed forms
are (K(m) := kerr_kernel, e := e^{i phi}):

mode 1 (B = A1, d = 1):
    <B>    = (alpha1 C + alpha2 S e) K(-1)
    <B^2>  = e^{-i phi} K(-2) (C^2 a1^2 + S^2 a2^2 e^4 + 2CS a1 a2 e^2)
    <B+ B> = C^2 a1^2 + S^2 (a2^2 + 1) + 2CS a1 a2
mode 2: swap alpha1 <-> alpha2 (which also conjugates K and flips eps2).
two-mode (B = A1 + A2, d = 2): single-mode pieces plus the cross moments
    <A1 A2>  = e (beta1 beta2 + CS)                      [no Kerr dephasing]
    <A1+ A2> = K(2) (a1 a2 (C^2+S^2) + CS a1^2 e^2 + CS a2^2 e^-2)
sum (B = A1 A2, d = <n1 + n2> or <n1 + n2> + 1): Kerr phases cancel inside all
N-commuting products, so up to the carrier rotation the moments are those of
the pure down-converter:
    <B>    = e   (beta1 beta2 + CS)
    <B^2>  = e^2 (beta1^2 beta2^2 + 4 beta1 beta2 CS + 2 C^2 S^2)
    <B+ B> = beta1^2 beta2^2 + 2 beta1 beta2 CS + S^2 (beta1^2 + beta2^2)
             + C^2 S^2 + S^4
    <n1 + n2> = beta1^2 + beta2^2 + 2 S^2

All of these are proven against `fock_oracle` by the test suite (each moment to
1e-6 on the verification grid, limited only by the evolution arithmetic).

Everything here is a pure function of immutable inputs; sweeps may evaluate
time grids concurrently.
"""

from __future__ import annotations

import cmath
import enum
import math
import numbers
from dataclasses import dataclass

from .quad_core import QuadratureMoments

__all__ = [
    "SystemParams",
    "AuxQuantities",
    "SqueezeKind",
    "DConvention",
    "kernel",
    "kerr_kernel",
    "aux_quantities",
    "mode_moments",
    "pair_moments",
    "sum_moments",
    "moments_for",
]


@dataclass(frozen=True)
class SystemParams:
    """Physical couplings and coherent seed amplitudes.

    chi_bar -- cross-Kerr coupling (rad per unit time); the self-phase
               couplings are derived, never independent inputs (the exact
               solution exists only on that constraint surface)
    k       -- parametric gain (rad per unit time), k >= 0
    alpha1, alpha2 -- initial coherent amplitudes, real and >= 0 (complex
               seeds are out of scope and rejected)
    """

    chi_bar: float
    k: float
    alpha1: float
    alpha2: float

    def __post_init__(self):
        for name in ("chi_bar", "k", "alpha1", "alpha2"):
            val = getattr(self, name)
            if not isinstance(val, numbers.Real):
                raise TypeError(f"{name} must be real, got {val!r}")
            if not math.isfinite(val):
                raise ValueError(f"{name} must be finite, got {val}")
            object.__setattr__(self, name, float(val))
        if self.k < 0:
            raise ValueError(f"k must be >= 0, got {self.k}")
        if self.alpha1 < 0 or self.alpha2 < 0:
            raise ValueError("coherent amplitudes must be >= 0")

    @property
    def chi_self(self) -> float:
        """Self-phase coupling locked by the solvability constraint (= -chi_bar/2)."""
        return -0.5 * self.chi_bar


class SqueezeKind(enum.Enum):
    """Which composite amplitude B is examined."""

    SINGLE1 = "single1"
    SINGLE2 = "single2"
    TWO_MODE = "two"
    SUM = "sum"


class DConvention(enum.Enum):
    """Normalization of sum squeezing.

    NUMBER_SUM ("paper")  -- d = <n1 + n2>, the number-sum reading
    COMMUTATOR            -- d = <[A1 A2, A2+ A1+]> = <n1 + n2> + 1
    """

    NUMBER_SUM = "paper"
    COMMUTATOR = "commutator"


@dataclass(frozen=True)
class AuxQuantities:
    """Hyperbolic and dephasing abbreviations at one time t.

    c, s        -- cosh(kt), sinh(kt)
    eps1        -- -2 (alpha1^2 + alpha2^2)  (total dephasing weight, <= 0)
    eps2        -- alpha1^2 - alpha2^2       (dephasing asymmetry)
    theta_plus  -- 2 chi t + eps2 sin(4 chi t)
    theta_minus -- 2 chi t - eps2 sin(4 chi t)
    theta       -- 6 chi t - eps2 sin(4 chi t)
    """

    c: float
    s: float
    eps1: float
    eps2: float
    theta_plus: float
    theta_minus: float
    theta: float


def aux_quantities(p: SystemParams, t: float) -> AuxQuantities:
    """Evaluate the AuxQuantities bundle of `p` at time `t`."""
    x = p.chi_bar * t
    eps2 = p.alpha1**2 - p.alpha2**2
    s4 = math.sin(4.0 * x)
    return AuxQuantities(
        c=math.cosh(p.k * t),
        s=math.sinh(p.k * t),
        eps1=-2.0 * (p.alpha1**2 + p.alpha2**2),
        eps2=eps2,
        theta_plus=2.0 * x + eps2 * s4,
        theta_minus=2.0 * x - eps2 * s4,
        theta=6.0 * x - eps2 * s4,
    )


def kernel(alpha: float, lam: float) -> complex:
    """Coherent displacement kernel <alpha| e^{i lam n} |alpha> for real alpha.

    Equals exp(alpha^2 (cos lam - 1)) * exp(i alpha^2 sin lam); magnitude <= 1.
    """
    return cmath.exp(alpha * alpha * (cmath.exp(1j * lam) - 1.0))


def kerr_kernel(p: SystemParams, m: int, t: float) -> complex:
    """Two-mode kernel <e^{i m phi N}> on |alpha1, alpha2>, phi = 2 chi t.

    Magnitude exp(eps1 sin^2(m chi t)), phase eps2 sin(2 m chi t).
    """
    phi = 2.0 * p.chi_bar * t
    return kernel(p.alpha1, m * phi) * kernel(p.alpha2, -m * phi)


def mode_moments(p: SystemParams, t: float, which: int) -> QuadratureMoments:
    """Moments of a single dressed mode amplitude, B = A1(t) or A2(t); d = 1."""
    if which not in (1, 2):
        raise ValueError(f"which must be 1 or 2, got {which}")
    a1, a2 = (p.alpha1, p.alpha2) if which == 1 else (p.alpha2, p.alpha1)
    # mode 2 is the exact amplitude swap, which conjugates the kernel
    sign = -1 if which == 1 else 1
    c, s = math.cosh(p.k * t), math.sinh(p.k * t)
    e = cmath.exp(2j * p.chi_bar * t)
    mean_b = (a1 * c + a2 * s * e) * kerr_kernel(p, sign, t)
    mean_b_sq = (
        (1.0 / e)
        * kerr_kernel(p, 2 * sign, t)
        * (c * c * a1 * a1 + s * s * a2 * a2 * e**4 + 2.0 * c * s * a1 * a2 * e**2)
    )
    mean_n = c * c * a1 * a1 + s * s * (a2 * a2 + 1.0) + 2.0 * c * s * a1 * a2
    return QuadratureMoments(
        mean_b=mean_b, mean_b_sq=mean_b_sq, mean_bdag_b=mean_n, mean_d=1.0
    )


def pair_moments(p: SystemParams, t: float) -> QuadratureMoments:
    """Moments of the mode sum B = A1(t) + A2(t); d = 2."""
    m1 = mode_moments(p, t, 1)
    m2 = mode_moments(p, t, 2)
    c, s = math.cosh(p.k * t), math.sinh(p.k * t)
    a1, a2 = p.alpha1, p.alpha2
    e = cmath.exp(2j * p.chi_bar * t)
    cross_bb = e * (a1 * a2 * (c * c + s * s) + c * s * (a1 * a1 + a2 * a2 + 1.0))
    cross_nb = kerr_kernel(p, 2, t) * (
        a1 * a2 * (c * c + s * s)
        + c * s * a1 * a1 * e * e
        + c * s * a2 * a2 / (e * e)
    )
    return QuadratureMoments(
        mean_b=m1.mean_b + m2.mean_b,
        mean_b_sq=m1.mean_b_sq + m2.mean_b_sq + 2.0 * cross_bb,
        mean_bdag_b=m1.mean_bdag_b + m2.mean_bdag_b + 2.0 * cross_nb.real,
        mean_d=2.0,
    )


def sum_moments(
    p: SystemParams,
    t: float,
    d_convention: DConvention = DConvention.NUMBER_SUM,
) -> QuadratureMoments:
    """Moments of the pair amplitude B = A1(t) A2(t).

    The Kerr phase enters only through the carrier rotation e^{2i chi t} of B;
    all magnitudes are those of the pure down-converter.
    """
    c, s = math.cosh(p.k * t), math.sinh(p.k * t)
    b1 = p.alpha1 * c + p.alpha2 * s
    b2 = p.alpha2 * c + p.alpha1 * s
    e = cmath.exp(2j * p.chi_bar * t)
    mean_b = e * (b1 * b2 + c * s)
    mean_b_sq = e * e * (b1 * b1 * b2 * b2 + 4.0 * b1 * b2 * c * s + 2.0 * c * c * s * s)
    mean_nb = (
        b1 * b1 * b2 * b2
        + 2.0 * b1 * b2 * c * s
        + s * s * (b1 * b1 + b2 * b2)
        + c * c * s * s
        + s**4
    )
    n_total = b1 * b1 + b2 * b2 + 2.0 * s * s
    d = n_total if d_convention is DConvention.NUMBER_SUM else n_total + 1.0
    return QuadratureMoments(
        mean_b=mean_b, mean_b_sq=mean_b_sq, mean_bdag_b=mean_nb, mean_d=d
    )


def moments_for(
    p: SystemParams,
    t: float,
    kind: SqueezeKind,
    d_convention: DConvention = DConvention.NUMBER_SUM,
) -> QuadratureMoments:
    """Dispatch to the moment set of the requested squeezing kind."""
    if kind is SqueezeKind.SINGLE1:
        return mode_moments(p, t, 1)
    if kind is SqueezeKind.SINGLE2:
        return mode_moments(p, t, 2)
    if kind is SqueezeKind.TWO_MODE:
        return pair_moments(p, t)
    if kind is SqueezeKind.SUM:
        return sum_moments(p, t, d_convention)
    raise ValueError(f"unknown kind {kind!r}")
