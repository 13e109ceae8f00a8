"""Linear algebra over GF(q) and exact parameters of linear codes.

Minimum distance and generalized Hamming weights are computed by
exhaustive enumeration under explicit budgets.  When an enumeration would
exceed its budget, BudgetExceeded is raised; no estimate is returned.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from . import kernels
from .errors import BudgetExceeded, DimensionMismatch, FieldMismatch
from .gf import FieldSpec, make_field

DEFAULT_DISTANCE_BUDGET = 1 << 24
DEFAULT_SUBSPACE_BUDGET = 1 << 20

ELEM = np.int32


def default_budgets() -> tuple[int, int]:
    """(distance, subspace) budgets, honouring ``SEGRECODES_BUDGET``.

    The variable holds one positive integer for both budgets or two
    separated by a comma (distance first).
    """
    raw = os.environ.get("SEGRECODES_BUDGET", "").strip()
    if not raw:
        return DEFAULT_DISTANCE_BUDGET, DEFAULT_SUBSPACE_BUDGET
    parts = [int(x) for x in raw.split(",")]
    if len(parts) == 1:
        parts = parts * 2
    if len(parts) != 2 or min(parts) < 1:
        raise ValueError(f"SEGRECODES_BUDGET={raw!r}: expected N or DIST,SUB with positive integers")
    return parts[0], parts[1]


@dataclass(frozen=True, eq=False)
class MatrixGF:
    field: FieldSpec
    entries: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.entries)
        if a.ndim != 2:
            raise DimensionMismatch(f"expected a 2-d array, got shape {a.shape}")
        if a.size and (a.min() < 0 or a.max() >= self.field.q):
            raise ValueError(f"entries outside GF({self.field.q})")
        a = np.ascontiguousarray(a, dtype=ELEM)
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixGF):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.entries, other.entries)

    __hash__ = None


def matrix(field: FieldSpec, rows: Sequence[Sequence[int]], cols: int | None = None) -> MatrixGF:
    a = np.array(rows, dtype=ELEM)
    if a.size == 0:
        a = a.reshape(len(rows), cols or 0)
    return MatrixGF(field, a)


def rref(M: MatrixGF) -> tuple[MatrixGF, int, tuple[int, ...]]:
    """Reduced row-echelon form, rank and pivot columns."""
    t = M.field.tables()
    if M.rows == 0 or M.cols == 0:
        return M, 0, ()
    R, pivots = kernels.rref(M.entries, t.add, t.mul, t.neg, t.inv)
    return MatrixGF(M.field, R), len(pivots), tuple(int(p) for p in pivots)


def rank(M: MatrixGF) -> int:
    return rref(M)[1]


def row_basis(M: MatrixGF) -> tuple[MatrixGF, tuple[int, ...]]:
    """RREF with zero rows dropped.

    Duplicate rows are removed first; this leaves the row space alone and
    makes tall evaluation matrices much cheaper to reduce.
    """
    a = M.entries
    if a.shape[0] > a.shape[1]:
        a = np.unique(a, axis=0)
        a = a[np.any(a != 0, axis=1)]
    R, r, piv = rref(MatrixGF(M.field, a))
    return MatrixGF(M.field, R.entries[:r]), piv


def _check_pair(A: MatrixGF, B: MatrixGF) -> None:
    if A.field != B.field:
        raise FieldMismatch(f"{A.field!r} vs {B.field!r}")


def rowspace_equal(A: MatrixGF, B: MatrixGF) -> bool:
    _check_pair(A, B)
    if A.cols != B.cols:
        raise DimensionMismatch(f"{A.cols} vs {B.cols} columns")
    return row_basis(A)[0] == row_basis(B)[0]


def kronecker(A: MatrixGF, B: MatrixGF) -> MatrixGF:
    """Row i*rB + j is the flattened outer product of row i of A and row j of B."""
    _check_pair(A, B)
    mul = A.field.tables().mul
    a, b = A.entries, B.entries
    K = mul[a[:, None, :, None], b[None, :, None, :]]
    return MatrixGF(A.field, K.reshape(A.rows * B.rows, A.cols * B.cols))


def support(rows) -> set[int]:
    """Union of the supports of ``rows`` (0-based positions)."""
    a = np.atleast_2d(np.asarray(rows))
    if a.size == 0:
        return set()
    return set(int(i) for i in np.flatnonzero(np.any(a != 0, axis=0)))


def gaussian_binomial(k: int, r: int, q: int) -> int:
    """Number of r-dimensional subspaces of GF(q)^k."""
    if r < 0 or r > k:
        return 0
    num = den = 1
    for i in range(r):
        num *= q ** (k - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def colex_subsets(k: int, r: int) -> np.ndarray:
    """r-subsets of range(k) in colexicographic order, one per row."""
    subsets = sorted(itertools.combinations(range(k), r), key=lambda c: c[::-1])
    return np.array(subsets, dtype=np.int64).reshape(len(subsets), r)


class LinearCode:
    """Row space of a generator matrix, with its RREF basis cached."""

    def __init__(self, generators: MatrixGF):
        self.generators = generators
        self.field = generators.field
        self._basis: MatrixGF | None = None
        self._pivots: tuple[int, ...] = ()
        self._distance: int | None = None
        self._ghw: dict[int, int] = {}

    @classmethod
    def from_rows(cls, field: FieldSpec, rows, n: int | None = None) -> "LinearCode":
        return cls(matrix(field, rows, n))

    @property
    def n(self) -> int:
        return self.generators.cols

    @property
    def basis(self) -> MatrixGF:
        if self._basis is None:
            self._basis, self._pivots = row_basis(self.generators)
        return self._basis

    @property
    def pivots(self) -> tuple[int, ...]:
        self.basis
        return self._pivots

    @property
    def k(self) -> int:
        return self.basis.rows

    def __repr__(self) -> str:
        return f"LinearCode(GF({self.field.q}), n={self.n}, k={self.k})"

    def encode(self, message) -> np.ndarray:
        m = np.asarray(message, dtype=ELEM)
        t = self.field.tables()
        out = np.zeros(self.n, dtype=ELEM)
        for c, row in zip(m, self.basis.entries):
            out = t.add[out, t.mul[c, row]]
        return out

    def codewords(self):
        """Every codeword, in odometer order of messages over the basis."""
        for msg in itertools.product(range(self.field.q), repeat=self.k):
            yield self.encode(msg)

    def contains(self, word) -> bool:
        w = np.asarray(word, dtype=ELEM)[None, :]
        stacked = MatrixGF(self.field, np.vstack([self.basis.entries, w]))
        return rank(stacked) == self.k

    def has_unit_word(self) -> bool:
        """Exact test for minimum distance 1.

        A unit vector e_i lies in the row space of an RREF basis only as
        one of its rows, so it suffices to look for a weight-1 basis row.
        """
        if self.k == 0:
            return False
        return bool(np.any(np.count_nonzero(self.basis.entries, axis=1) == 1))


def projective_message_count(k: int, q: int) -> int:
    return (q**k - 1) // (q - 1)


def min_distance(C: LinearCode, budget: int | None = None) -> int:
    """Exact minimum distance by enumerating (q^k - 1)/(q - 1) messages."""
    if C.k < 1:
        raise ValueError("the zero code has no minimum distance")
    if budget is None:
        budget = default_budgets()[0]
    needed = projective_message_count(C.k, C.field.q)
    if needed > budget:
        raise BudgetExceeded(needed, budget, "minimum distance")
    if C._distance is None:
        t = C.field.tables()
        C._distance = int(kernels.min_weight(C.basis.entries, t.add, t.sub, t.mul))
    return C._distance


def ghw(C: LinearCode, r: int, budget: int | None = None) -> int:
    """Exact r-th generalized Hamming weight over all [k choose r]_q subcodes."""
    if not 1 <= r <= C.k:
        raise ValueError(f"r={r} outside 1..{C.k}")
    if budget is None:
        budget = default_budgets()[1]
    needed = gaussian_binomial(C.k, r, C.field.q)
    if needed > budget:
        raise BudgetExceeded(needed, budget, f"generalized Hamming weight r={r}")
    if r not in C._ghw:
        t = C.field.tables()
        C._ghw[r] = int(
            kernels.min_support(C.basis.entries, colex_subsets(C.k, r), t.add, t.sub, t.mul)
        )
    return C._ghw[r]


def weight_hierarchy(C: LinearCode, r_max: int | None = None, budget: int | None = None) -> list[int]:
    """(delta_1, ..., delta_{r_max}); stops early at the first budget overrun."""
    r_max = C.k if r_max is None else min(r_max, C.k)
    out = []
    for r in range(1, r_max + 1):
        try:
            out.append(ghw(C, r, budget))
        except BudgetExceeded:
            break
    return out


def direct_product_code(C1: LinearCode, C2: LinearCode) -> LinearCode:
    if C1.field != C2.field:
        raise FieldMismatch(f"{C1.field!r} vs {C2.field!r}")
    C = LinearCode(kronecker(C1.basis, C2.basis))
    assert C.k == C1.k * C2.k, "Kronecker product of bases lost rank"
    return C


# -- text format: header "q=<int> rows=<int> cols=<int>", then comma-separated rows

def format_matrix(M: MatrixGF) -> str:
    lines = [f"q={M.field.q} rows={M.rows} cols={M.cols}"]
    lines += [",".join(map(str, row)) for row in M.tolist()]
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> MatrixGF:
    rows = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not rows:
        raise ValueError("empty matrix file")
    head = {}
    for tok in rows[0].split():
        key, _, val = tok.partition("=")
        head[key] = int(val)
    for key in ("q", "rows", "cols"):
        if key not in head:
            raise ValueError(f"matrix header lacks {key}")
    body = [[int(x) for x in ln.split(",")] for ln in rows[1:]]
    if len(body) != head["rows"] or any(len(r) != head["cols"] for r in body):
        raise DimensionMismatch(f"body does not match header {rows[0]!r}")
    return matrix(make_field(head["q"]), body, head["cols"])


def write_matrix(M: MatrixGF, path) -> None:
    Path(path).write_text(format_matrix(M))


def read_matrix(path) -> MatrixGF:
    return parse_matrix(Path(path).read_text())
