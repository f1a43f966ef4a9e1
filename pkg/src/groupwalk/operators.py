"""Convolution Markov operators, their spectra, and the matrix-level lift.

The right operator sends f to f * mu (steps multiply on the right), the
left operator sends f to mu * f.  Both are row-stochastic matrices over the
group's element indices.  The matrix-level lift acts on order-by-order
arrays by weighted conjugation with regular-representation permutations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .groups import ConstructionError
from .linalg import float_nullspace, normalize_leading, rational_nullspace

PERIPHERAL_TOL = 1e-8
CLUSTER_TOL = 1e-7

__all__ = [
    "ComputationError",
    "GroupFunction",
    "ConvolutionOperator",
    "EigenvalueRecord",
    "SpectralReport",
    "OperatorOnMatrices",
    "right_operator",
    "left_operator",
    "apply",
    "apply_truncated",
    "spectrum",
    "eigenspace",
    "superoperator",
    "super_apply",
    "conditional_expectation",
    "fourier_coefficient",
    "eigen_operator_to_function",
]


class ComputationError(RuntimeError):
    """A numerical routine failed; carries the failing context."""


def _is_exact_value(x):
    return isinstance(x, (Fraction, int)) and not isinstance(x, bool)


class GroupFunction:
    """Function on a group's element indices; values may be exact or floating.

    Entries equal to None mark points where a partial result is undefined
    (only produced by apply_truncated).
    """

    def __init__(self, group, values):
        values = list(values)
        if len(values) != group.order:
            raise ValueError(
                f"function has {len(values)} values but {group.name} has {group.order} elements"
            )
        self.group = group
        self.values = values

    @staticmethod
    def constant(group, value):
        return GroupFunction(group, [value] * group.order)

    @property
    def is_exact(self):
        return all(_is_exact_value(v) for v in self.values)

    @property
    def is_partial(self):
        return any(v is None for v in self.values)

    def sup_norm(self):
        return max(abs(v) for v in self.values if v is not None)

    def as_array(self):
        if any(isinstance(v, complex) for v in self.values):
            return np.array([complex(v) for v in self.values])
        return np.array([float(v) for v in self.values])

    def __add__(self, other):
        self._check_peer(other)
        return GroupFunction(self.group, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        self._check_peer(other)
        return GroupFunction(self.group, [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, other):
        self._check_peer(other)
        return GroupFunction(self.group, [a * b for a, b in zip(self.values, other.values)])

    def __neg__(self):
        return GroupFunction(self.group, [-v for v in self.values])

    def scale(self, c):
        return GroupFunction(self.group, [c * v for v in self.values])

    def _check_peer(self, other):
        if not isinstance(other, GroupFunction) or other.group is not self.group:
            raise ValueError("group functions live on different groups")
        if self.is_partial or other.is_partial:
            raise ValueError("arithmetic on partial functions is not defined")

    def __eq__(self, other):
        return (
            isinstance(other, GroupFunction)
            and self.group is other.group
            and self.values == other.values
        )

    def __repr__(self):
        return f"<GroupFunction on {self.group.name} len={len(self.values)}>"


class ConvolutionOperator:
    """Dense convolution operator on a finite group."""

    def __init__(self, group, measure, side):
        self.group = group
        self.measure = measure
        self.side = side
        self.exact = measure.exact
        self._float_matrix = None
        self._exact_matrix = None

    def _step(self, g, h):
        """Index the operator averages f over, for state g and step h."""
        if self.side == "right":
            return self.group.mul(g, h)
        return self.group.mul(h, g)

    def exact_matrix(self):
        """Row-stochastic Fraction matrix: rows index g, columns index x."""
        if not self.exact:
            raise ComputationError(f"{self.side} operator on {self.group.name} has float weights")
        if self._exact_matrix is None:
            n = self.group.order
            rows = [[Fraction(0)] * n for _ in range(n)]
            for h, w in self.measure.weights.items():
                for g in range(n):
                    rows[g][self._step(g, h)] += w
            self._exact_matrix = rows
        return self._exact_matrix

    def as_array(self):
        if self._float_matrix is None:
            n = self.group.order
            mat = np.zeros((n, n))
            for h, w in self.measure.weights.items():
                for g in range(n):
                    mat[g, self._step(g, h)] += float(w)
            self._float_matrix = mat
        return self._float_matrix

    def __repr__(self):
        return f"<ConvolutionOperator {self.side} on {self.group.name}>"


def _require_finite(group, what):
    if group.is_truncated:
        raise ConstructionError(f"{what} requires a finite group; use apply_truncated on balls")


def right_operator(group, mu):
    """Operator f -> f * mu with entries[g][x] = mu(g^-1 x)."""
    _require_finite(group, "right_operator")
    return ConvolutionOperator(group, mu, "right")


def left_operator(group, mu):
    """Operator f -> mu * f with entries[g][x] = mu(x g^-1)."""
    _require_finite(group, "left_operator")
    return ConvolutionOperator(group, mu, "left")


def apply(op, f):
    """Apply a convolution operator to a group function.

    Stays exact when both the measure and the function are exact.
    """
    if f.group is not op.group:
        raise ValueError("function and operator live on different groups")
    if f.is_partial:
        raise ValueError("apply needs a total function; apply_truncated handles partial ones")
    group = op.group
    if op.exact and f.is_exact:
        out = [Fraction(0)] * group.order
        for h, w in op.measure.weights.items():
            for g in range(group.order):
                out[g] += w * f.values[op._step(g, h)]
        return GroupFunction(group, out)
    vec = f.as_array()
    return GroupFunction(group, list(op.as_array() @ vec))


def apply_truncated(group, mu, f, side):
    """Apply one convolution step on a ball truncation.

    Returns (result, interior) where interior lists the indices g at which
    every required product stays in the ball and f is defined there; the
    result holds None outside the interior.  The measure may live on any
    ball of the same family (matched by canonical form), which permits
    degenerate radii where the measure itself would not fit.
    """
    if not group.is_truncated:
        raise ConstructionError("apply_truncated requires a ball truncation; use apply instead")
    if side not in ("right", "left"):
        raise ValueError(f"side must be 'right' or 'left', got {side!r}")
    if not mu.group.is_truncated or mu.group.family_key() != group.family_key():
        raise ValueError(
            f"measure on {mu.group.name} cannot act on {group.name}: different family"
        )
    if f.group is not group:
        raise ValueError("function and ball live on different groups")
    steps = []
    for h, w in sorted(mu.weights.items()):
        form = mu.group.canonical_form(h)
        if mu.group.length_form(form) > 1:
            raise ValueError("truncated measures must be supported on word length <= 1")
        steps.append((form, w))
    exact = mu.exact and all(v is None or _is_exact_value(v) for v in f.values)
    zero = Fraction(0) if exact else 0.0
    values = []
    interior = []
    for g in group.elements():
        g_form = group.canonical_form(g)
        acc = zero
        ok = True
        for h_form, w in steps:
            prod = group.mul_forms(g_form, h_form) if side == "right" else group.mul_forms(h_form, g_form)
            idx = group.index_of_form(prod)
            if idx is None or f.values[idx] is None:
                ok = False
                break
            acc = acc + w * f.values[idx]
        if ok:
            values.append(acc)
            interior.append(g)
        else:
            values.append(None)
    return GroupFunction(group, values), interior


@dataclass(frozen=True)
class EigenvalueRecord:
    value: complex
    multiplicity: int
    residual: float

    def to_json(self):
        return {
            "re": self.value.real,
            "im": self.value.imag,
            "multiplicity": self.multiplicity,
            "residual": self.residual,
        }


@dataclass
class SpectralReport:
    eigenvalues: list
    peripheral: list
    tol: float
    peripheral_tol: float = PERIPHERAL_TOL

    def to_json(self):
        return {
            "eigenvalues": [rec.to_json() for rec in self.eigenvalues],
            "peripheral": [{"re": z.real, "im": z.imag} for z in self.peripheral],
            "tol": self.tol,
            "peripheral_tol": self.peripheral_tol,
        }


def _sort_key(z):
    angle = math.atan2(z.imag, z.real) % (2 * math.pi)
    return (-round(abs(z), 9), round(angle, 9))


def spectrum(op, tol=1e-9, peripheral_tol=PERIPHERAL_TOL):
    """Full eigenvalue report with residual certificates.

    Eigenvalues within 1e-7 of each other are clustered into one record
    whose multiplicity is the cluster size; the peripheral list keeps every
    representative with modulus >= 1 - peripheral_tol.
    """
    a = op.as_array()
    symmetric = bool(np.allclose(a, a.T, atol=1e-12, rtol=0.0))
    try:
        if symmetric:
            eigvals, eigvecs = np.linalg.eigh(a)
            eigvals = eigvals.astype(complex)
        else:
            eigvals, eigvecs = np.linalg.eig(a)
    except np.linalg.LinAlgError as exc:
        raise ComputationError(
            f"eigensolver failed for the {op.side} operator on {op.group.name}: {exc}"
        ) from exc
    residuals = []
    for i in range(len(eigvals)):
        v = eigvecs[:, i]
        residuals.append(float(np.linalg.norm(a @ v - eigvals[i] * v) / np.linalg.norm(v)))
    worst = max(residuals, default=0.0)
    if worst > tol:
        raise ComputationError(
            f"eigenpair residual {worst:.3e} exceeds tol {tol:.3e} "
            f"for the {op.side} operator on {op.group.name}"
        )
    order = sorted(range(len(eigvals)), key=lambda i: (eigvals[i].real, eigvals[i].imag))
    clusters = []
    for i in order:
        z = complex(eigvals[i])
        if clusters and abs(z - clusters[-1][0][0]) <= CLUSTER_TOL:
            clusters[-1][0].append(z)
            clusters[-1][1].append(residuals[i])
        else:
            clusters.append(([z], [residuals[i]]))
    records = []
    for values, res in clusters:
        rep = sum(values) / len(values)
        records.append(EigenvalueRecord(rep, len(values), max(res)))
    records.sort(key=lambda r: _sort_key(r.value))
    peripheral = [r.value for r in records if abs(r.value) >= 1.0 - peripheral_tol]
    return SpectralReport(records, peripheral, tol, peripheral_tol)


def eigenspace(op, lam, tol=1e-9):
    """Basis of the lam-eigenspace of a convolution operator.

    Exact rational elimination when the measure is rational and lam is 1 or
    -1; otherwise a floating rank-revealing nullspace.  Basis vectors are
    normalized so the entry at the identity is 1 when nonzero, else the
    first nonzero entry is 1.  Returns [] when lam is not an eigenvalue.
    """
    group = op.group
    if op.exact and lam in (1, -1):
        lam = Fraction(lam)
        mat = [row[:] for row in op.exact_matrix()]
        for i in range(group.order):
            mat[i][i] -= lam
        basis = rational_nullspace(mat)
        return [GroupFunction(group, normalize_leading(vec)) for vec in basis]
    a = op.as_array().astype(complex) - complex(lam) * np.eye(group.order)
    cols = float_nullspace(a, tol)
    out = []
    for i in range(cols.shape[1]):
        vec = cols[:, i]
        if np.allclose(vec.imag, 0.0, atol=1e-12):
            vec = vec.real
        out.append(GroupFunction(group, normalize_leading(list(vec), cutoff=1e-12)))
    return out


MAX_SUPEROPERATOR_ORDER = 12


class OperatorOnMatrices:
    """Weighted conjugation by regular-representation permutations.

    side "right": T -> sum_g mu(g) rho_g T rho_g^*, which on diagonal
    arrays reproduces f -> f * mu.  side "left": T -> sum_g mu(g)
    lambda_g^* T lambda_g, reproducing f -> mu * f on diagonals.
    """

    def __init__(self, group, measure, side):
        if group.is_truncated:
            raise ConstructionError("matrix-level operators require a finite group")
        if group.order > MAX_SUPEROPERATOR_ORDER:
            raise ConstructionError(
                f"matrix-level operators support order <= {MAX_SUPEROPERATOR_ORDER}, "
                f"got {group.order}"
            )
        if side not in ("right", "left"):
            raise ValueError(f"side must be 'right' or 'left', got {side!r}")
        self.group = group
        self.measure = measure
        self.side = side
        self.terms = []
        for g, w in sorted(measure.weights.items()):
            if side == "right":
                perm = [group.mul(i, g) for i in group.elements()]
            else:
                perm = [group.mul(g, i) for i in group.elements()]
            self.terms.append((w, perm))

    def apply(self, T):
        n = self.group.order
        if isinstance(T, np.ndarray):
            out = np.zeros_like(T, dtype=complex if np.iscomplexobj(T) else float)
            for w, perm in self.terms:
                idx = np.asarray(perm)
                out += float(w) * T[np.ix_(idx, idx)]
            return out
        exact = self.measure.exact and all(_is_exact_value(x) for row in T for x in row)
        zero = Fraction(0) if exact else 0.0
        out = [[zero] * n for _ in range(n)]
        for w, perm in self.terms:
            weight = w if exact else float(w)
            for i in range(n):
                for j in range(n):
                    out[i][j] += weight * T[perm[i]][perm[j]]
        return out

    def matrix(self):
        """Dense float matrix acting on row-major vectorized arrays."""
        n = self.group.order
        mat = np.zeros((n * n, n * n))
        for w, perm in self.terms:
            for i in range(n):
                for j in range(n):
                    mat[i * n + j, perm[i] * n + perm[j]] += float(w)
        return mat

    def __repr__(self):
        return f"<OperatorOnMatrices {self.side} on {self.group.name}>"


def superoperator(group, mu, side):
    return OperatorOnMatrices(group, mu, side)


def super_apply(s_op, T):
    return s_op.apply(T)


def conditional_expectation(group, T):
    """Diagonal of an array, as a function on the group."""
    if isinstance(T, np.ndarray):
        return GroupFunction(group, list(np.diagonal(T)))
    return GroupFunction(group, [T[i][i] for i in range(group.order)])


def fourier_coefficient(group, T, g):
    """Diagonal of T * lambda_g^*: values[i] = T[i, g^-1 i]."""
    ginv = group.inv(g)
    cols = [group.mul(ginv, i) for i in group.elements()]
    if isinstance(T, np.ndarray):
        return GroupFunction(group, [T[i, cols[i]] for i in group.elements()])
    return GroupFunction(group, [T[i][cols[i]] for i in group.elements()])


def eigen_operator_to_function(T, lam, mu, tol=1e-9):
    """Turn a peripheral eigen-array of the matrix-level operator into a
    scalar eigenfunction of the convolution operator.

    Picks the translation g whose Fourier coefficient has the largest sup
    norm (ties broken by element order) and certifies f * mu = lam * f.
    Returns (g, f).
    """
    group = mu.group
    arr = np.asarray(T, dtype=complex)
    norm = float(np.linalg.norm(arr))
    if norm == 0.0:
        raise ValueError("zero array has no eigenfunction")
    s_op = superoperator(group, mu, "right")
    residual = float(np.linalg.norm(s_op.apply(arr) - complex(lam) * arr))
    if residual > tol * norm:
        raise ValueError(
            f"array is not a lam={lam} eigenvector of the matrix-level operator "
            f"(residual {residual:.3e})"
        )
    best_g, best_f, best_norm = None, None, 0.0
    for g in group.elements():
        f = fourier_coefficient(group, arr, g)
        f_norm = float(f.sup_norm())
        if f_norm > best_norm + tol * norm and f_norm > tol * norm:
            best_g, best_f, best_norm = g, f, f_norm
    if best_g is None:
        raise ValueError("all Fourier coefficients vanish; array is numerically zero")
    op = right_operator(group, mu)
    vec = best_f.as_array()
    res = float(np.max(np.abs(op.as_array() @ vec - complex(lam) * vec)))
    if res > tol * max(1.0, best_norm):
        raise ValueError(
            f"Fourier coefficient violates the eigen relation beyond tol (residual {res:.3e})"
        )
    values = [complex(v) for v in vec]
    if all(abs(v.imag) <= 1e-14 for v in values):
        values = [v.real for v in values]
    return best_g, GroupFunction(group, values)
