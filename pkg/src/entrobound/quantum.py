"""Dense two-qubit density-matrix engine.

Small by design: states live on a composite dimension dim_a * dim_b (4x4 in
every interesting case here), eigenvalues come from LAPACK's Hermitian
solver, and measurements are projective spin measurements along directions
in the x-z plane, n(theta) = (sin theta, 0, cos theta).  That measurement
convention is the minimal standard Bell-test setup and is the one the
violation search optimizes over.

Quantum entropies default to bits so they compose with the classical side
and the Cerf-Adami bound of 1.

Matrix serialization::

    {"dims": [2, 2], "re": [[...], ...], "im": [[...], ...]}
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dist import JointDistribution
from .entropy import EntropyValue, _check_base, _clamp, mutual_entropy
from .errors import (
    DimensionMismatchError,
    InternalError,
    InvalidDensityMatrixError,
    InvalidSubsystemError,
    NotPositiveSemidefiniteError,
    NotPureError,
    ValidationError,
)
from .inequalities import InequalityReport, cerf_adami_check

MATRIX_ATOL = 1e-9
EIGENVALUE_ATOL = 1e-9
PURITY_ATOL = 1e-9
MARGINAL_UNIFORM_ATOL = 1e-6

_SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]])
_SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]])
_I2 = np.eye(2)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace, positive semidefinite matrix over dim_a * dim_b.

    Validated on construction (Hermitian entrywise within 1e-9, trace within
    1e-9 of 1, eigenvalues >= -1e-9) and stored read-only.
    """

    dim_a: int
    dim_b: int
    matrix: np.ndarray

    def __post_init__(self) -> None:
        da, db = int(self.dim_a), int(self.dim_b)
        if da < 1 or db < 1:
            raise InvalidDensityMatrixError(f"dimensions must be positive, got ({da}, {db})")
        n = da * db
        m = np.asarray(self.matrix, dtype=complex)
        if m.shape != (n, n):
            raise InvalidDensityMatrixError(f"matrix shape {m.shape} != ({n}, {n}) for dims ({da}, {db})")
        herm_dev = float(np.max(np.abs(m - m.conj().T)))
        if herm_dev > MATRIX_ATOL:
            raise InvalidDensityMatrixError(f"not Hermitian: max |M - M^dagger| = {herm_dev}")
        trace_dev = abs(complex(np.trace(m)) - 1.0)
        if trace_dev > MATRIX_ATOL:
            raise InvalidDensityMatrixError(f"trace deviates from 1 by {trace_dev}")
        min_eig = float(np.linalg.eigvalsh(m).min())
        if min_eig < -EIGENVALUE_ATOL:
            raise NotPositiveSemidefiniteError(f"eigenvalue {min_eig} below -{EIGENVALUE_ATOL}")
        m.setflags(write=False)
        object.__setattr__(self, "dim_a", da)
        object.__setattr__(self, "dim_b", db)
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.dim_a * self.dim_b

    def purity(self) -> float:
        """tr(rho^2); 1 for pure states."""
        return float(np.vdot(self.matrix, self.matrix).real)

    @classmethod
    def from_dict(cls, payload: dict) -> "DensityMatrix":
        da, db = (int(x) for x in payload["dims"])
        re = np.asarray(payload["re"], dtype=float)
        im = np.asarray(payload["im"], dtype=float)
        if re.shape != im.shape:
            raise InvalidDensityMatrixError(f"re shape {re.shape} != im shape {im.shape}")
        return cls(da, db, re + 1j * im)

    def to_dict(self) -> dict:
        return {
            "dims": [self.dim_a, self.dim_b],
            "re": [[float(x) for x in row] for row in self.matrix.real],
            "im": [[float(x) for x in row] for row in self.matrix.imag],
        }

    def __repr__(self) -> str:
        return f"DensityMatrix(dims=({self.dim_a}, {self.dim_b}))"


@dataclass(frozen=True)
class MeasurementSettings:
    """Three measurement angles in the x-z plane, canonicalized to [0, pi).

    Projector pairs are pi-periodic up to relabeling the two outcomes, so
    angles are reduced modulo pi.
    """

    angles: tuple[float, float, float]

    def __post_init__(self) -> None:
        raw = tuple(float(a) for a in self.angles)
        if len(raw) != 3:
            raise ValidationError(f"need exactly 3 angles, got {len(raw)}")
        if not all(math.isfinite(a) for a in raw):
            raise ValidationError(f"angles must be finite, got {raw}")
        object.__setattr__(self, "angles", tuple(a % math.pi for a in raw))

    def to_dict(self) -> dict:
        return {"angles": [float(a) for a in self.angles]}


# --- state constructors -------------------------------------------------------

def pure_state(amplitudes, dims: tuple[int, int] = (2, 2)) -> DensityMatrix:
    """Density matrix |psi><psi| from an amplitude vector (normalized here)."""
    v = np.asarray(amplitudes, dtype=complex).ravel()
    norm = float(np.linalg.norm(v))
    if norm == 0.0:
        raise ValidationError("amplitude vector must be nonzero")
    v = v / norm
    return DensityMatrix(dims[0], dims[1], np.outer(v, v.conj()))


def singlet() -> DensityMatrix:
    """(|01> - |10>)/sqrt(2): the canonical violating state."""
    return pure_state([0.0, 1.0, -1.0, 0.0])


def bell_state(name: str) -> DensityMatrix:
    """One of the four Bell states: phi+, phi-, psi+, psi-."""
    vectors = {
        "phi+": [1.0, 0.0, 0.0, 1.0],
        "phi-": [1.0, 0.0, 0.0, -1.0],
        "psi+": [0.0, 1.0, 1.0, 0.0],
        "psi-": [0.0, 1.0, -1.0, 0.0],
    }
    if name not in vectors:
        raise ValidationError(f"unknown Bell state {name!r}; expected one of {sorted(vectors)}")
    return pure_state(vectors[name])


def werner_state(p: float) -> DensityMatrix:
    """p * singlet + (1 - p) * I/4: a tunable classical-to-quantum dial."""
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValidationError(f"Werner parameter must be in [0, 1], got {p}")
    m = p * singlet().matrix + (1.0 - p) * np.eye(4) / 4.0
    return DensityMatrix(2, 2, m)


def product_state(rho_a, rho_b) -> DensityMatrix:
    """Tensor product of two single-subsystem density matrices."""
    a = np.asarray(rho_a, dtype=complex)
    b = np.asarray(rho_b, dtype=complex)
    return DensityMatrix(a.shape[0], b.shape[0], np.kron(a, b))


def maximally_mixed(dim_a: int = 2, dim_b: int = 2) -> DensityMatrix:
    n = int(dim_a) * int(dim_b)
    return DensityMatrix(dim_a, dim_b, np.eye(n) / n)


# --- operations -----------------------------------------------------------------

def partial_trace(rho: DensityMatrix, keep: int) -> DensityMatrix:
    """Reduced state over one subsystem (0 = first factor, 1 = second)."""
    if keep not in (0, 1):
        raise InvalidSubsystemError(f"keep must be 0 or 1, got {keep!r}")
    da, db = rho.dim_a, rho.dim_b
    blocks = rho.matrix.reshape(da, db, da, db)
    if keep == 0:
        reduced = np.einsum("ibjb->ij", blocks)
    else:
        reduced = np.einsum("aiaj->ij", blocks)
    return DensityMatrix(reduced.shape[0], 1, reduced)


def von_neumann_entropy(rho: DensityMatrix, base: float = 2.0) -> EntropyValue:
    """-tr(rho log rho): the Shannon entropy of the spectrum."""
    base = _check_base(base)
    eigs = np.linalg.eigvalsh(rho.matrix)
    if float(eigs.min()) < -EIGENVALUE_ATOL:
        raise NotPositiveSemidefiniteError(f"eigenvalue {float(eigs.min())} below -{EIGENVALUE_ATOL}")
    lam = eigs[eigs > 0.0]  # clamp [-1e-9, 0) to 0 by skipping
    bits = float(-(lam * np.log2(lam)).sum())
    return EntropyValue(_clamp(bits / math.log2(base), "von Neumann entropy"), base)


def conditional_quantum_entropy(rho: DensityMatrix, target: int, given: int) -> EntropyValue:
    """S(target | given) = S(joint) - S(given); may be negative.

    Negative values are the quantum signature: for pure composite states
    they witness entanglement.
    """
    if target not in (0, 1) or given not in (0, 1):
        raise InvalidSubsystemError(f"subsystems must be 0 or 1, got ({target!r}, {given!r})")
    if target == given:
        raise InvalidSubsystemError("target and given must differ")
    s_joint = von_neumann_entropy(rho).value
    s_given = von_neumann_entropy(partial_trace(rho, keep=given)).value
    return EntropyValue(s_joint - s_given, 2.0)


def is_entangled_pure(rho: DensityMatrix) -> bool:
    """Entanglement witness for pure states: S(B|A) < 0.

    The criterion is an iff for pure states only, so mixed inputs
    (tr(rho^2) < 1 - 1e-9) are refused rather than silently misjudged.
    """
    purity = rho.purity()
    if purity < 1.0 - PURITY_ATOL:
        raise NotPureError(f"tr(rho^2) = {purity}; the criterion only applies to pure states")
    return conditional_quantum_entropy(rho, target=1, given=0).value < -EIGENVALUE_ATOL


def _projector(angle: float, sign: float) -> np.ndarray:
    direction = math.sin(angle) * _SIGMA_X + math.cos(angle) * _SIGMA_Z
    return (_I2 + sign * direction) / 2.0


def measure_pair(rho: DensityMatrix, angle_1: float, angle_2: float) -> JointDistribution:
    """Outcome statistics of a pair of projective spin measurements.

    Returns the 2x2 joint distribution with index 0 mapping to outcome +1
    and index 1 to outcome -1 on each side:
    p(i, j) = tr[rho (P_i(angle_1) x P_j(angle_2))].
    """
    if (rho.dim_a, rho.dim_b) != (2, 2):
        raise DimensionMismatchError(f"need a two-qubit state, got dims ({rho.dim_a}, {rho.dim_b})")
    table = np.empty((2, 2))
    for i, sa in enumerate((1.0, -1.0)):
        pa = _projector(float(angle_1), sa)
        for j, sb in enumerate((1.0, -1.0)):
            pb = _projector(float(angle_2), sb)
            p = float(np.einsum("ij,ji->", rho.matrix, np.kron(pa, pb)).real)
            if p < -EIGENVALUE_ATOL:
                raise InternalError(f"measurement probability {p} below -{EIGENVALUE_ATOL}")
            table[i, j] = max(p, 0.0)
    return JointDistribution((2, 2), table)


def cerf_adami_quantum(rho: DensityMatrix, settings: MeasurementSettings) -> InequalityReport:
    """Cerf-Adami check on three pairwise measurement experiments.

    H(A:B), H(A:C), H(B:C) come from three separate (mutually incompatible)
    pairs of settings on the same state; no joint tripartite distribution
    exists, which is exactly where quantum statistics can exceed the bound
    of 1.  The bound assumes uniform single-setting marginals; the report
    flags that precondition and records a warning when a marginal deviates
    from uniform by more than 1e-6.
    """
    theta_a, theta_b, theta_c = settings.angles
    pairs = {
        "H(A:B)": (("A", theta_a), ("B", theta_b)),
        "H(A:C)": (("A", theta_a), ("C", theta_c)),
        "H(B:C)": (("B", theta_b), ("C", theta_c)),
    }
    mis: dict[str, EntropyValue] = {}
    warnings: list[str] = []
    for label, ((n1, a1), (n2, a2)) in pairs.items():
        dist = measure_pair(rho, a1, a2)
        mis[label] = mutual_entropy(dist, 0, 1)
        for setting_name, axis in ((n1, 1), (n2, 0)):
            marginal = dist.probs.sum(axis=axis)
            deviation = float(np.max(np.abs(marginal - 0.5)))
            if deviation > MARGINAL_UNIFORM_ATOL:
                warnings.append(
                    f"setting {setting_name} marginal in {label} deviates from uniform by {deviation:.3g}"
                )
    report = cerf_adami_check(mis["H(A:B)"], mis["H(A:C)"], mis["H(B:C)"], bound=1.0, source="pairwise")
    meta = dict(report.meta)
    meta["angles"] = [float(a) for a in settings.angles]
    meta["marginals_uniform"] = not warnings
    meta["warnings"] = warnings
    return InequalityReport(
        name=report.name,
        lhs=report.lhs,
        rhs=report.rhs,
        terms=report.terms,
        satisfied=report.satisfied,
        margin=report.margin,
        meta=meta,
    )
