"""Projective Reed-Muller-type codes C_X(d) and Hilbert functions of point sets.

Points are stored in canonical form (first nonzero coordinate 1), so the
normalizing polynomial for each point can be taken as a power of the
variable at its first nonzero coordinate, which evaluates to 1.  The
evaluation map is then plain evaluation at the stored representatives.

Hilbert values come from ranks of evaluation matrices:
dim S_d / I(X)_d = dim C_X(d).
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceeded
from .gf import FieldSpec
from .matcodes import ELEM, LinearCode, MatrixGF, min_distance
from .projgeom import PointSet, ProjectivePoint

Monomial = tuple[int, ...]


def monomials_of_degree(s: int, d: int) -> list[Monomial]:
    """Exponent vectors of total degree d in s variables, graded lex order."""
    if s < 1 or d < 0:
        raise ValueError("need s >= 1 and d >= 0")
    return list(_monomials(s, d))


@functools.lru_cache(maxsize=256)
def _monomials(s: int, d: int) -> tuple[Monomial, ...]:
    if s == 1:
        return ((d,),)
    out = []
    for first in range(d, -1, -1):
        out.extend((first,) + rest for rest in _monomials(s - 1, d - first))
    return tuple(out)


def monomial_count(s: int, d: int) -> int:
    return math.comb(d + s - 1, s - 1)


def evaluate_monomial(m: Monomial, P: ProjectivePoint) -> int:
    if len(m) != len(P.coords):
        raise ValueError("monomial and point have different numbers of variables")
    f = P.field
    value = 1
    for x, e in zip(P.coords, m):
        if e:  # 0^0 = 1
            value = f.mul(value, f.pow(x, e))
    return value


def evaluation_matrix(X: PointSet, d: int) -> MatrixGF:
    """Rows: monomials of degree d in graded lex order; columns: points of X."""
    return evaluate_at(X.field, X.array, d)


def evaluate_at(f: FieldSpec, P: np.ndarray, d: int) -> MatrixGF:
    """Evaluation matrix at the given coordinate rows, taken as they are.

    Useful for representatives other than the canonical ones; the result
    then differs from the canonical matrix by nonzero column scalings.
    """
    t = f.tables()
    P = np.asarray(P, dtype=np.int64)
    E = np.array(monomials_of_degree(P.shape[1], d), dtype=np.int64)
    # powers[x, e] = x^e for every field element x, with 0^0 = 1
    powers = np.empty((f.q, d + 1), dtype=ELEM)
    powers[:, 0] = 1
    for e in range(1, d + 1):
        powers[:, e] = t.mul[powers[:, e - 1], np.arange(f.q)]
    out = np.ones((E.shape[0], P.shape[0]), dtype=ELEM)
    for j in range(P.shape[1]):
        out = t.mul[out, powers[P[:, j][None, :], E[:, j][:, None]]]
    return MatrixGF(f, out)


@dataclass(eq=False)
class EvaluationCode:
    points: PointSet
    d: int
    code: LinearCode

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def k(self) -> int:
        return self.code.k

    @property
    def hilbert(self) -> int:
        return self.code.k

    @property
    def generators(self) -> MatrixGF:
        return self.code.generators

    @property
    def basis(self) -> MatrixGF:
        return self.code.basis

    def sidecar(self) -> dict:
        return {
            "label": self.points.label,
            "q": self.points.field.q,
            "s": self.points.ambient_dim,
            "d": self.d,
            "n": self.n,
            "k": self.k,
            "hilbert": self.hilbert,
        }


@functools.lru_cache(maxsize=128)
def evaluation_code(X: PointSet, d: int) -> EvaluationCode:
    if d < 0:
        raise ValueError("degree must be nonnegative")
    return EvaluationCode(X, d, LinearCode(evaluation_matrix(X, d)))


def hilbert_function(X: PointSet, d: int) -> int:
    return evaluation_code(X, d).hilbert


@dataclass(frozen=True)
class QuotientInvariants:
    points: PointSet
    hilbert_values: tuple[int, ...]
    regularity: int
    degree: int
    krull_dim: int = 1


def hilbert_sequence(X: PointSet, d_max: int) -> list[int]:
    return [hilbert_function(X, d) for d in range(d_max + 1)]


@functools.lru_cache(maxsize=128)
def quotient_invariants(X: PointSet) -> QuotientInvariants:
    """Hilbert values until they reach |X|; that degree is the regularity."""
    target = len(X)
    cap = target * X.ambient_dim
    values = []
    d = 0
    while True:
        h = hilbert_function(X, d)
        values.append(h)
        if h == target:
            break
        d += 1
        if d > cap:
            raise RuntimeError(f"Hilbert function of {X.label} did not reach {target} by degree {cap}")
    return QuotientInvariants(X, tuple(values), d, target)


def regularity(X: PointSet) -> int:
    return quotient_invariants(X).regularity


def code_parameters(X: PointSet, d: int, budget: int | None = None) -> dict:
    """n, k, delta (None when over budget), Hilbert sequence and regularity."""
    C = evaluation_code(X, d)
    inv = quotient_invariants(X)
    try:
        delta = min_distance(C.code, budget)
    except BudgetExceeded:
        delta = None
    return {
        "n": C.n,
        "k": C.k,
        "delta": delta,
        "hilbert_sequence": list(inv.hilbert_values),
        "regularity": inv.regularity,
    }
