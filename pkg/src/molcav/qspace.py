"""Operator algebra on a composite Hilbert space.

The composite space is an ordered tensor product of truncated bosonic
modes and one two-level system.  Canonical factor order, fixed once and
used everywhere:

    (cavity, ensemble1, ensemble2, cpb)

Basis indices are mixed-radix in that order, i.e. the composite basis
state ``|n_c, n_1, n_2, n_e>`` has flat index
``((n_c * d_1 + n_1) * d_2 + n_2) * 2 + n_e``.  The two-level (cpb)
basis order is ``(|g>, |e>)``.

Everything is dense complex double precision; the spaces involved stay
small (total dimension <= a few hundred), so sparse machinery would be
pure overhead.  All objects are immutable values and all functions are
pure, so concurrent use needs no locking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

CAVITY = "cavity"
ENSEMBLE1 = "ensemble1"
ENSEMBLE2 = "ensemble2"
CPB = "cpb"

KNOWN_LABELS = (CAVITY, ENSEMBLE1, ENSEMBLE2, CPB)

_HERMITICITY_RTOL = 1e-12


@dataclass(frozen=True)
class SpaceLayout:
    """Ordered list of (label, dimension) factors of the composite space."""

    factors: tuple[tuple[str, int], ...]

    def __post_init__(self):
        labels = [lab for lab, _ in self.factors]
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate factor labels in {labels}")
        for lab, dim in self.factors:
            if lab not in KNOWN_LABELS:
                raise ValueError(f"unknown factor label {lab!r}; expected one of {KNOWN_LABELS}")
            if dim < 2:
                raise ValueError(f"factor {lab!r} has dimension {dim}; every factor needs >= 2")
            if lab == CPB and dim != 2:
                raise ValueError(f"cpb dimension must be exactly 2, got {dim}")

    @classmethod
    def default(cls, cavity_dim: int = 4, ensemble_dim: int = 3) -> "SpaceLayout":
        return cls(
            (
                (CAVITY, cavity_dim),
                (ENSEMBLE1, ensemble_dim),
                (ENSEMBLE2, ensemble_dim),
                (CPB, 2),
            )
        )

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(lab for lab, _ in self.factors)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(dim for _, dim in self.factors)

    @property
    def total_dim(self) -> int:
        return math.prod(self.dims)

    def dim(self, label: str) -> int:
        for lab, d in self.factors:
            if lab == label:
                return d
        raise ValueError(f"layout has no factor {label!r}")

    def position(self, label: str) -> int:
        for i, (lab, _) in enumerate(self.factors):
            if lab == label:
                return i
        raise ValueError(f"layout has no factor {label!r}")

    def flat_index(self, occupations: dict[str, int]) -> int:
        """Flat basis index of the product state with the given occupations.

        Factors not mentioned default to 0 (vacuum / ground).
        """
        unknown = set(occupations) - set(self.labels)
        if unknown:
            raise ValueError(f"occupations for labels not in layout: {sorted(unknown)}")
        idx = 0
        for lab, d in self.factors:
            n = occupations.get(lab, 0)
            if not 0 <= n < d:
                raise ValueError(f"occupation {n} out of range for factor {lab!r} (dim {d})")
            idx = idx * d + n
        return idx

    def occupations_of(self, flat: int) -> tuple[int, ...]:
        """Mixed-radix digits (per-factor occupations) of a flat basis index."""
        digits = []
        for _, d in reversed(self.factors):
            digits.append(flat % d)
            flat //= d
        return tuple(reversed(digits))

    def excitation_numbers(self) -> np.ndarray:
        """Total excitation number of every flat basis state (integer array)."""
        out = np.zeros(self.total_dim, dtype=int)
        for i in range(self.total_dim):
            out[i] = sum(self.occupations_of(i))
        return out


@dataclass(frozen=True)
class Operator:
    """Dense operator tied to a layout."""

    layout: SpaceLayout
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        mat = np.asarray(self.matrix, dtype=complex)
        n = self.layout.total_dim
        if mat.shape != (n, n):
            raise ValueError(f"matrix shape {mat.shape} does not match layout dimension {n}")
        object.__setattr__(self, "matrix", mat)

    def dag(self) -> "Operator":
        return Operator(self.layout, self.matrix.conj().T)

    def is_hermitian(self, rtol: float = _HERMITICITY_RTOL) -> bool:
        scale = np.linalg.norm(self.matrix)
        if scale == 0.0:
            return True
        return np.linalg.norm(self.matrix - self.matrix.conj().T) <= rtol * scale

    def assert_hermitian(self, rtol: float = _HERMITICITY_RTOL) -> "Operator":
        if not self.is_hermitian(rtol):
            raise ValueError("operator is not Hermitian within tolerance")
        return self

    def expectation(self, state) -> complex:
        if isinstance(state, Ket):
            v = state.amplitudes
            return complex(v.conj() @ (self.matrix @ v))
        if isinstance(state, DensityMatrix):
            return complex(np.trace(self.matrix @ state.matrix))
        v = np.asarray(state)
        if v.ndim == 1:
            return complex(v.conj() @ (self.matrix @ v))
        return complex(np.trace(self.matrix @ v))

    # Light arithmetic sugar; results stay on the same layout.
    def __add__(self, other: "Operator") -> "Operator":
        self._check(other)
        return Operator(self.layout, self.matrix + other.matrix)

    def __sub__(self, other: "Operator") -> "Operator":
        self._check(other)
        return Operator(self.layout, self.matrix - other.matrix)

    def __mul__(self, scalar) -> "Operator":
        return Operator(self.layout, self.matrix * scalar)

    __rmul__ = __mul__

    def __matmul__(self, other: "Operator") -> "Operator":
        self._check(other)
        return Operator(self.layout, self.matrix @ other.matrix)

    def _check(self, other: "Operator"):
        if other.layout != self.layout:
            raise ValueError("operators live on different layouts")


@dataclass(frozen=True)
class Ket:
    """Pure state on a layout."""

    layout: SpaceLayout
    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self):
        v = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if v.shape != (self.layout.total_dim,):
            raise ValueError(
                f"amplitude vector length {v.shape[0]} does not match layout dimension "
                f"{self.layout.total_dim}"
            )
        object.__setattr__(self, "amplitudes", v)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def assert_normalized(self, tol: float = 1e-10) -> "Ket":
        if abs(self.norm() - 1.0) > tol:
            raise ValueError(f"ket norm {self.norm()} is not 1 within {tol}")
        return self

    def normalized(self) -> "Ket":
        return Ket(self.layout, self.amplitudes / self.norm())

    def to_density(self) -> "DensityMatrix":
        v = self.amplitudes
        return DensityMatrix(self.layout, np.outer(v, v.conj()))


@dataclass(frozen=True)
class DensityMatrix:
    """Mixed state on a layout."""

    layout: SpaceLayout
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        n = self.layout.total_dim
        if m.shape != (n, n):
            raise ValueError(f"density matrix shape {m.shape} does not match layout dimension {n}")
        object.__setattr__(self, "matrix", m)

    def trace(self) -> float:
        return float(np.trace(self.matrix).real)

    def validate(self, trace_tol: float = 1e-10, eig_floor: float = -1e-9) -> "DensityMatrix":
        m = self.matrix
        scale = max(np.linalg.norm(m), 1.0)
        if np.linalg.norm(m - m.conj().T) > 1e-10 * scale:
            raise ValueError("density matrix is not Hermitian within tolerance")
        if abs(self.trace() - 1.0) > trace_tol:
            raise ValueError(f"density matrix trace {self.trace()} is not 1 within {trace_tol}")
        if np.linalg.eigvalsh(m).min() < eig_floor:
            raise ValueError("density matrix has a significantly negative eigenvalue")
        return self


def boson_annihilator(dim: int) -> Operator:
    """Truncated lowering operator: <k-1|a|k> = sqrt(k) for k = 1..dim-1."""
    if dim < 2:
        raise ValueError(f"boson mode needs dimension >= 2, got {dim}")
    m = np.zeros((dim, dim), dtype=complex)
    for k in range(1, dim):
        m[k - 1, k] = math.sqrt(k)
    return Operator(_single(CAVITY if dim != 2 else CAVITY, dim), m)


def number_operator(dim: int) -> Operator:
    if dim < 2:
        raise ValueError(f"boson mode needs dimension >= 2, got {dim}")
    return Operator(_single(CAVITY, dim), np.diag(np.arange(dim, dtype=complex)))


def two_level_ops() -> tuple[Operator, Operator]:
    """CPB lowering |g><e| and excited-state projector |e><e|, basis (|g>, |e>)."""
    lay = _single(CPB, 2)
    sigma_ge = Operator(lay, np.array([[0, 1], [0, 0]], dtype=complex))
    sigma_ee = Operator(lay, np.array([[0, 0], [0, 1]], dtype=complex))
    return sigma_ge, sigma_ee


def identity(layout: SpaceLayout) -> Operator:
    return Operator(layout, np.eye(layout.total_dim, dtype=complex))


def embed(op: Operator, label: str, layout: SpaceLayout) -> Operator:
    """Lift a single-factor operator into the composite space by kron with identities."""
    if len(op.layout.factors) != 1:
        raise ValueError("embed expects a single-factor operator")
    target_dim = layout.dim(label)  # raises for unknown labels
    if op.layout.total_dim != target_dim:
        raise ValueError(
            f"operator dimension {op.layout.total_dim} does not match factor "
            f"{label!r} dimension {target_dim}"
        )
    out = np.ones((1, 1), dtype=complex)
    for lab, d in layout.factors:
        block = op.matrix if lab == label else np.eye(d, dtype=complex)
        out = np.kron(out, block)
    return Operator(layout, out)


def mode_lowering(layout: SpaceLayout, label: str) -> Operator:
    """Annihilation operator of one bosonic factor, embedded in the layout."""
    if label == CPB:
        sigma_ge, _ = two_level_ops()
        return embed(sigma_ge, label, layout)
    d = layout.dim(label)
    op = Operator(_single(label, d), boson_annihilator(d).matrix)
    return embed(op, label, layout)


def total_excitation(layout: SpaceLayout) -> Operator:
    """sum_i m_i^dag m_i + c^dag c + |e><e| on the composite space.

    Commutes with every system Hamiltonian built by the model layer, so its
    expectation is a conserved charge on unitary runs.
    """
    needed = set(KNOWN_LABELS)
    missing = needed - set(layout.labels)
    if missing:
        raise ValueError(f"layout is missing factors {sorted(missing)}")
    total = np.zeros((layout.total_dim, layout.total_dim), dtype=complex)
    for lab, d in layout.factors:
        if lab == CPB:
            _, sigma_ee = two_level_ops()
            total += embed(sigma_ee, lab, layout).matrix
        else:
            num = Operator(_single(lab, d), np.diag(np.arange(d, dtype=complex)))
            total += embed(num, lab, layout).matrix
    return Operator(layout, total)


def product_ket(layout: SpaceLayout, occupations: dict[str, int] | None = None) -> Ket:
    """Product basis state; factors not listed are in their lowest level."""
    v = np.zeros(layout.total_dim, dtype=complex)
    v[layout.flat_index(occupations or {})] = 1.0
    return Ket(layout, v)


def vacuum(layout: SpaceLayout) -> Ket:
    return product_ket(layout, {})


def excitation_sector_indices(layout: SpaceLayout, n_max: int) -> np.ndarray:
    """Flat indices of all basis states with total excitation <= n_max.

    The system Hamiltonian conserves total excitation and the dissipation
    channels never raise it, so dynamics started inside such a sector stays
    there exactly; restricting to these indices is a lossless compression.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    return np.where(layout.excitation_numbers() <= n_max)[0]


def _single(label: str, dim: int) -> SpaceLayout:
    return SpaceLayout(((label, dim),))
