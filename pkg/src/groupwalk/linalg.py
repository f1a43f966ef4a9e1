"""Exact and floating linear-algebra kernels shared across the package.

The exact routines work over :class:`fractions.Fraction` with deterministic
pivot choices, so basis outputs are reproducible run to run.  The floating
routines are thin wrappers over numpy decompositions.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

__all__ = [
    "rational_rref",
    "rational_nullspace",
    "rational_solve",
    "rational_matmul",
    "normalize_leading",
    "GF2System",
    "operator_norm",
    "float_nullspace",
]


def rational_rref(matrix):
    """Reduced row echelon form over Fraction.  Returns (rref, pivot_cols)."""
    rows = [list(r) for r in matrix]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    rank = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(rank, nrows) if rows[i][col] != 0), None)
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        inv = Fraction(1, 1) / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(nrows):
            if i != rank and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    return rows, pivots


def rational_nullspace(matrix):
    """Basis of the right nullspace of a Fraction matrix.

    One vector per free column, in increasing column order: the vector has a
    1 at its free column and back-substituted pivot entries, which makes the
    output canonical.
    """
    if not matrix:
        return []
    ncols = len(matrix[0])
    rref, pivots = rational_rref(matrix)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for free in free_cols:
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for row_idx, pivot_col in enumerate(pivots):
            vec[pivot_col] = -rref[row_idx][free]
        basis.append(vec)
    return basis


def rational_solve(matrix, rhs):
    """Solve M x = rhs exactly.  Returns one solution (free vars zero) or
    None when the system is inconsistent."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    augmented = [list(row) + [b] for row, b in zip(matrix, rhs)]
    rref, pivots = rational_rref(augmented)
    for row in rref:
        if all(x == 0 for x in row[:ncols]) and row[ncols] != 0:
            return None
    solution = [Fraction(0)] * ncols
    for row_idx, pivot_col in enumerate(pivots):
        if pivot_col < ncols:
            solution[pivot_col] = rref[row_idx][ncols]
    return solution


def rational_matmul(a, b):
    """Exact product of two Fraction matrices."""
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    bt = [[b[r][c] for r in range(k)] for c in range(m)]
    return [[sum(arow[i] * bcol[i] for i in range(k)) for bcol in bt] for arow in a]


def normalize_leading(vec, cutoff=0.0):
    """Scale a vector so the first entry is 1 when nonzero, else the first
    nonzero entry is 1.  Works for Fraction and float entries alike."""
    lead = None
    for x in vec:
        if abs(x) > cutoff:
            lead = x
            break
    if lead is None:
        return list(vec)
    return [x / lead for x in vec]


class GF2System:
    """Incremental GF(2) linear system with bitset rows.

    Equations are ``mask . x = rhs`` where ``mask`` packs variable
    coefficients as integer bits.  Rows are kept in echelon form keyed by
    their lowest set bit, which makes feasibility checks O(rows).
    """

    def __init__(self):
        self.rows = {}  # pivot bit position -> (mask, rhs)
        self.contradiction = False

    def _reduce(self, mask, rhs):
        while mask:
            pivot = (mask & -mask).bit_length() - 1
            if pivot not in self.rows:
                return mask, rhs, pivot
            row_mask, row_rhs = self.rows[pivot]
            mask ^= row_mask
            rhs ^= row_rhs
        return 0, rhs, None

    def add(self, mask, rhs):
        """Insert one equation.  Returns False when it contradicts the system."""
        if self.contradiction:
            return False
        mask, rhs, pivot = self._reduce(mask, rhs)
        if pivot is None:
            if rhs:
                self.contradiction = True
                return False
            return True
        self.rows[pivot] = (mask, rhs)
        return True

    def consistent_with(self, mask, rhs):
        """Would (mask, rhs) be consistent, without inserting it?"""
        if self.contradiction:
            return False
        reduced_mask, reduced_rhs, _ = self._reduce(mask, rhs)
        return bool(reduced_mask) or not reduced_rhs

    def lex_min_solution(self, nvars):
        """Lexicographically smallest solution vector (x_0, ..., x_{nvars-1}).

        Greedy per variable: fix the earliest undetermined bit to 0 whenever
        the system stays consistent, else to 1.  Returns None when the system
        is contradictory.
        """
        if self.contradiction:
            return None
        scratch = GF2System()
        scratch.rows = dict(self.rows)
        bits = []
        for i in range(nvars):
            mask = 1 << i
            if scratch.consistent_with(mask, 0):
                scratch.add(mask, 0)
                bits.append(0)
            else:
                scratch.add(mask, 1)
                bits.append(1)
        return bits


def operator_norm(matrix):
    """Largest singular value."""
    return float(np.linalg.norm(np.asarray(matrix, dtype=complex), 2))


def float_nullspace(matrix, tol=1e-9):
    """Orthonormal basis (columns) of the numerical nullspace via SVD."""
    a = np.asarray(matrix)
    if a.size == 0:
        return np.zeros((0, 0))
    _, s, vh = np.linalg.svd(a)
    ncols = a.shape[1]
    null_mask = np.zeros(ncols, dtype=bool)
    null_mask[len(s):] = True  # wide matrices: columns beyond rank
    null_mask[: len(s)] = s <= tol
    return vh[null_mask].conj().T
