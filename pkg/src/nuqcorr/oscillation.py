"""Two-flavor oscillation physics: mixing, wave-packet damping, flavor kernels.

Unit conventions
----------------
Every conversion in the package descends from the single constant
``HBARC_MEV_FM`` (hbar*c = 197.3269804 MeV fm).  Baselines are given in km,
wave-packet widths in meters, energies in MeV, mass splittings in eV^2;
internally everything is converted to powers of eV.  The oscillation phase is
``dm2 * x / (2E)``, equivalently ``2.5338653588... * dm2[eV^2] * L[km] / E[GeV]``.

State layout
------------
A flavor state occupies two modes mapped to two qubits in the joint basis
|00>,|01>,|10>,|11>: the electron component sits on |01> and the muon
component on |10>, so a kernel F embeds as

    [[0,     0,     0,     0],
     [0,  F_ee,  F_emu,    0],
     [0, F_mue, F_mumu,    0],
     [0,     0,     0,     0]]

and the reduced state of the first qubit is diag(F_ee, F_mumu).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .states import DensityMatrix, PAIR_LABELS

HBARC_MEV_FM = 197.3269804          # CODATA 2018, MeV*fm; sole conversion source
HBARC_EV_M = HBARC_MEV_FM * 1e-9    # eV*m
KM_IN_INV_EV = 1e3 / HBARC_EV_M     # 1 km expressed in 1/eV
M_IN_INV_EV = 1.0 / HBARC_EV_M      # 1 m expressed in 1/eV
EV_PER_MEV = 1e6

FLAVORS = ("e", "mu")

PLANE_WAVE_WIDTH = math.inf


@dataclass(frozen=True)
class MixingSpec:
    """Two-flavor mixing angle (radians) and mass splitting |dm^2| (eV^2)."""

    theta: float
    dm2_ev2: float

    def __post_init__(self):
        if not (0.0 <= self.theta <= math.pi / 2):
            raise ValueError(f"theta={self.theta} outside [0, pi/2]")
        if not (self.dm2_ev2 > 0.0 and math.isfinite(self.dm2_ev2)):
            raise ValueError(f"dm2_ev2={self.dm2_ev2} must be positive and finite")

    @classmethod
    def from_sin2_2theta(cls, sin2_2theta: float, dm2_ev2: float) -> "MixingSpec":
        if not (0.0 <= sin2_2theta <= 1.0):
            raise ValueError(f"sin2_2theta={sin2_2theta} outside [0, 1]")
        return cls(0.5 * math.asin(math.sqrt(sin2_2theta)), dm2_ev2)

    @classmethod
    def from_tan2_2theta(cls, tan2_2theta: float, dm2_ev2: float) -> "MixingSpec":
        if tan2_2theta < 0.0:
            raise ValueError(f"tan2_2theta={tan2_2theta} must be nonnegative")
        return cls(0.5 * math.atan(math.sqrt(tan2_2theta)), dm2_ev2)

    @classmethod
    def from_tan2_theta(cls, tan2_theta: float, dm2_ev2: float) -> "MixingSpec":
        if tan2_theta < 0.0:
            raise ValueError(f"tan2_theta={tan2_theta} must be nonnegative")
        return cls(math.atan(math.sqrt(tan2_theta)), dm2_ev2)

    @property
    def sin2_2theta(self) -> float:
        return math.sin(2.0 * self.theta) ** 2

    @property
    def matrix(self) -> np.ndarray:
        """Rotation from mass to flavor basis, rows (e, mu), columns (1, 2)."""
        c, s = math.cos(self.theta), math.sin(self.theta)
        return np.array([[c, s], [-s, c]])


@dataclass(frozen=True)
class WavePacketParams:
    """Spatial packet width in meters (inf = plane wave) and energy in MeV."""

    sigma_x_m: float
    energy_mev: float

    def __post_init__(self):
        if not self.sigma_x_m > 0.0:
            raise ValueError(f"sigma_x_m={self.sigma_x_m} must be positive (or inf)")
        if not (self.energy_mev > 0.0 and math.isfinite(self.energy_mev)):
            raise ValueError(f"energy_mev={self.energy_mev} must be positive and finite")

    @property
    def is_plane_wave(self) -> bool:
        return math.isinf(self.sigma_x_m)


@dataclass(frozen=True)
class PureFlavorState:
    """Amplitudes of a coherently evolved flavor state.

    ``a_survival`` multiplies the initial flavor, ``a_transition`` the other
    one; together they are normalized.
    """

    a_survival: complex
    a_transition: complex

    def __post_init__(self):
        norm = abs(self.a_survival) ** 2 + abs(self.a_transition) ** 2
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"amplitudes not normalized: |a|^2 sums to {norm!r}")


@dataclass(frozen=True)
class FlavorKernel:
    """2x2 flavor-projection kernel at a fixed distance, indexed (e, mu).

    Hermitian with real diagonal probabilities summing to one.  The initial
    flavor tags which diagonal entry is the survival probability.
    """

    matrix: np.ndarray
    initial_flavor: str

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.shape != (2, 2):
            raise ValueError(f"kernel must be 2x2, got {m.shape}")
        if not np.all(np.isfinite(m.view(float))):
            raise ValueError("kernel contains NaN or Inf entries")
        if np.max(np.abs(m - m.conj().T)) > 1e-12:
            raise ValueError("kernel is not Hermitian")
        tr = m[0, 0].real + m[1, 1].real
        if abs(tr - 1.0) > 1e-12:
            raise ValueError(f"kernel diagonal sums to {tr!r}, expected 1")
        for i in range(2):
            d = m[i, i].real
            if not -1e-12 <= d <= 1.0 + 1e-12:
                raise ValueError(f"kernel diagonal entry {d!r} outside [0, 1]")
            m[i, i] = min(max(d, 0.0), 1.0)
        if self.initial_flavor not in FLAVORS:
            raise ValueError(f"initial_flavor must be one of {FLAVORS}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)


def natural_units_phase(dm2_ev2: float, x_km: float, energy_mev: float) -> float:
    """Oscillation phase dm2*x/(2E) in radians.

    x is converted with 1 km = KM_IN_INV_EV / eV and the energy with
    1 MeV = 1e6 eV.  dm2 and x may be zero (limits); energy must be positive.
    """
    if dm2_ev2 < 0.0 or x_km < 0.0:
        raise ValueError(f"dm2_ev2={dm2_ev2} and x_km={x_km} must be nonnegative")
    if not energy_mev > 0.0:
        raise ValueError(f"energy_mev={energy_mev} must be positive")
    return dm2_ev2 * (x_km * KM_IN_INV_EV) / (2.0 * energy_mev * EV_PER_MEV)


def coherence_factor(j: int, k: int, x_km: float, wp: WavePacketParams,
                     mix: MixingSpec) -> complex:
    """Mass-eigenstate overlap factor after propagating a distance x.

    Carries the oscillation phase and, for finite packet width, a Gaussian
    damping whose argument is dm2_jk * x / (4*sqrt(2)*E^2*sigma_x) in natural
    units.  Equal indices give exactly 1.
    """
    if j not in (1, 2) or k not in (1, 2):
        raise ValueError(f"mass indices must be 1 or 2, got j={j}, k={k}")
    if x_km < 0.0:
        raise ValueError(f"x_km={x_km} must be nonnegative")
    if j == k:
        return 1.0 + 0.0j
    sign = 1.0 if j > k else -1.0          # dm2_jk = m_j^2 - m_k^2
    phase = sign * natural_units_phase(mix.dm2_ev2, x_km, wp.energy_mev)
    if wp.is_plane_wave:
        damp = 0.0
    else:
        e_ev = wp.energy_mev * EV_PER_MEV
        arg = (mix.dm2_ev2 * x_km * KM_IN_INV_EV
               / (4.0 * math.sqrt(2.0) * e_ev ** 2 * wp.sigma_x_m * M_IN_INV_EV))
        damp = arg * arg
    return complex(np.exp(-1j * phase - damp))


def flavor_kernel(alpha: str, x_km: float, wp: WavePacketParams,
                  mix: MixingSpec) -> FlavorKernel:
    """Flavor-basis dyad coefficients of the propagated state of flavor alpha.

    F_{beta,gamma}(x) = sum_{k,j} U*_{alpha j} U_{alpha k} f_{jk}(x)
    U_{beta j} U*_{gamma k}.  Unitarity makes the diagonal sum to one.
    """
    if alpha not in FLAVORS:
        raise ValueError(f"alpha must be one of {FLAVORS}")
    u = mix.matrix
    a = FLAVORS.index(alpha)
    f12 = coherence_factor(1, 2, x_km, wp, mix)
    f = {(1, 1): 1.0 + 0.0j, (2, 2): 1.0 + 0.0j, (1, 2): f12, (2, 1): f12.conjugate()}
    out = np.zeros((2, 2), dtype=complex)
    for b in range(2):
        for g in range(2):
            acc = 0.0 + 0.0j
            for j in (1, 2):
                for k in (1, 2):
                    acc += (np.conj(u[a, j - 1]) * u[a, k - 1] * f[(j, k)]
                            * u[b, j - 1] * np.conj(u[g, k - 1]))
            out[b, g] = acc
    # clean the round-off on the strictly real diagonal
    out[0, 0] = out[0, 0].real
    out[1, 1] = out[1, 1].real
    return FlavorKernel(out, alpha)


def flavor_density_matrix(kernel: FlavorKernel) -> DensityMatrix:
    """Embed a flavor kernel as the 4x4 two-mode state described above."""
    rho = np.zeros((4, 4), dtype=complex)
    rho[1:3, 1:3] = kernel.matrix
    return DensityMatrix(rho, PAIR_LABELS)


def plane_wave_state(phase: float, mix: MixingSpec,
                     initial_flavor: str = "e") -> PureFlavorState:
    """Coherent-evolution amplitudes at a given oscillation phase.

    For an initial electron flavor,
    a_survival = cos^2(theta) + sin^2(theta) e^{-i phase};
    a_transition = sin(theta) cos(theta) (e^{-i phase} - 1), so that
    |a_transition|^2 = sin^2(2 theta) sin^2(phase / 2).  For an initial muon
    the squared cosine and sine swap roles in the survival amplitude.
    """
    if initial_flavor not in FLAVORS:
        raise ValueError(f"initial_flavor must be one of {FLAVORS}")
    c2, s2 = math.cos(mix.theta) ** 2, math.sin(mix.theta) ** 2
    if initial_flavor == "mu":
        c2, s2 = s2, c2
    cross = math.sin(mix.theta) * math.cos(mix.theta)
    w = np.exp(-1j * phase)
    return PureFlavorState(complex(c2 + s2 * w), complex(cross * (w - 1.0)))


def pure_state_density_matrix(state: PureFlavorState,
                              initial_flavor: str = "e") -> DensityMatrix:
    """Rank-1 two-mode embedding of a coherent flavor state.

    The electron amplitude always sits on |01> and the muon amplitude on
    |10>, matching the kernel embedding for either initial flavor.
    """
    if initial_flavor not in FLAVORS:
        raise ValueError(f"initial_flavor must be one of {FLAVORS}")
    if initial_flavor == "e":
        a_e, a_mu = state.a_survival, state.a_transition
    else:
        a_e, a_mu = state.a_transition, state.a_survival
    psi = np.array([0.0, a_e, a_mu, 0.0], dtype=complex)
    return DensityMatrix(np.outer(psi, psi.conj()), PAIR_LABELS)


def survival_probability(kernel: FlavorKernel) -> float:
    """Probability of detecting the initial flavor: the matching diagonal entry.

    Equals 1 - (sin^2(2 theta)/2) * (1 - Re f_12(x)) for two flavors.
    """
    i = FLAVORS.index(kernel.initial_flavor)
    return float(kernel.matrix[i, i].real)
