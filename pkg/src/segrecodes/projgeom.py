"""Projective points, standard point sets, and the Segre embedding.

Every stored point is in canonical form: its first nonzero coordinate is 1.
Point order inside a PointSet is part of its value, because codes built on
the set use it as coordinate order.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import DegenerateField, DuplicatePoint, FieldMismatch, ZeroVector
from .gf import FieldSpec, make_field


@dataclass(frozen=True)
class ProjectivePoint:
    field: FieldSpec
    coords: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)


@dataclass(frozen=True, eq=True)
class PointSet:
    field: FieldSpec
    ambient_dim: int
    points: tuple[ProjectivePoint, ...]
    label: str = ""

    def __post_init__(self):
        if not self.points:
            raise ValueError("a point set must be nonempty")

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i) -> ProjectivePoint:
        return self.points[i]

    def __hash__(self) -> int:
        return self._hash

    @functools.cached_property
    def _hash(self) -> int:
        return hash((self.field, self.ambient_dim, self.coord_tuples))

    @functools.cached_property
    def coord_tuples(self) -> tuple[tuple[int, ...], ...]:
        return tuple(p.coords for p in self.points)

    @functools.cached_property
    def array(self) -> np.ndarray:
        """Points as an (n, s) int32 array of element codes."""
        a = np.array(self.coord_tuples, dtype=np.int32).reshape(len(self.points), self.ambient_dim)
        a.setflags(write=False)
        return a


def canonicalize(field: FieldSpec, v: Sequence[int]) -> ProjectivePoint:
    """Scale ``v`` so its first nonzero coordinate is 1."""
    coords = tuple(field.check(int(x)) for x in v)
    for x in coords:
        if x:
            lam = field.inv(x)
            break
    else:
        raise ZeroVector(f"{coords} is the zero vector")
    if lam != 1:
        coords = tuple(field.mul(lam, x) for x in coords)
    return ProjectivePoint(field, coords)


def _canonical_vectors(field: FieldSpec, s: int) -> Iterable[tuple[int, ...]]:
    # lexicographic order of code vectors: the later the leading 1, the earlier
    for lead in range(s - 1, -1, -1):
        head = (0,) * lead + (1,)
        for tail in itertools.product(range(field.q), repeat=s - 1 - lead):
            yield head + tail


def projective_space(s: int, field: FieldSpec) -> PointSet:
    """All (q^s - 1)/(q - 1) points of P^{s-1} in lexicographic order."""
    if s < 1:
        raise ValueError("ambient dimension must be at least 1")
    pts = tuple(ProjectivePoint(field, v) for v in _canonical_vectors(field, s))
    return PointSet(field, s, pts, f"P^{s - 1}")


def projective_torus(s: int, field: FieldSpec, *, require_nondegenerate: bool = False) -> PointSet:
    """Points of P^{s-1} with no zero coordinate; (q-1)^{s-1} of them."""
    if s < 1:
        raise ValueError("ambient dimension must be at least 1")
    if require_nondegenerate and field.q == 2 and s > 1:
        raise DegenerateField("over GF(2) the projective torus is a single point")
    nonzero = range(1, field.q)
    pts = tuple(
        ProjectivePoint(field, (1,) + tail)
        for tail in itertools.product(nonzero, repeat=s - 1)
    )
    return PointSet(field, s, pts, f"torus^{s - 1}")


def parameterized_set(exponents: Sequence[Sequence[int]], field: FieldSpec) -> PointSet:
    """Image of the algebraic torus (K*)^n under z -> [z^v_1 : ... : z^v_s].

    Points are kept in order of first appearance while z runs through
    (K*)^n lexicographically.
    """
    exps = [tuple(int(e) for e in v) for v in exponents]
    if not exps:
        raise ValueError("need at least one monomial")
    n = len(exps[0])
    if n < 1 or any(len(v) != n for v in exps):
        raise ValueError("exponent vectors must share one positive length")
    if any(e < 0 for v in exps for e in v):
        raise ValueError("exponents must be nonnegative")
    seen: dict[tuple[int, ...], None] = {}
    for z in itertools.product(range(1, field.q), repeat=n):
        powers = [[field.pow(zi, e) for zi, e in zip(z, v)] for v in exps]
        vec = [functools.reduce(field.mul, row, 1) for row in powers]
        seen.setdefault(canonicalize(field, vec).coords, None)
    pts = tuple(ProjectivePoint(field, c) for c in seen)
    label = "param(" + ";".join(",".join(map(str, v)) for v in exps) + ")"
    return PointSet(field, len(exps), pts, label)


def segre_point(P: ProjectivePoint, Q: ProjectivePoint) -> ProjectivePoint:
    """psi(P, Q): all products alpha_k * beta_l, flattened row-major."""
    f = P.field
    if Q.field != f:
        raise FieldMismatch(f"{P.field!r} vs {Q.field!r}")
    coords = tuple(f.mul(a, b) for a in P.coords for b in Q.coords)
    # canonical times canonical is canonical: the first nonzero product is 1 * 1
    return ProjectivePoint(f, coords)


def segre_embed(X1: PointSet, X2: PointSet) -> PointSet:
    """Segre product; point (i, j) sits at flat index i * |X2| + j."""
    if X1.field != X2.field:
        raise FieldMismatch(f"{X1.field!r} vs {X2.field!r}")
    f = X1.field
    mul = f.tables().mul if f.q <= 1024 else None
    if mul is not None:
        A, B = X1.array, X2.array
        prod = mul[A[:, None, :, None], B[None, :, None, :]]
        prod = prod.reshape(len(X1) * len(X2), X1.ambient_dim * X2.ambient_dim)
        pts = tuple(ProjectivePoint(f, tuple(int(x) for x in row)) for row in prod)
    else:
        pts = tuple(segre_point(P, Q) for P in X1 for Q in X2)
    return PointSet(f, X1.ambient_dim * X2.ambient_dim, pts, f"segre({X1.label},{X2.label})")


def custom_set(field: FieldSpec, s: int, vectors: Sequence[Sequence[int]], label: str = "custom") -> PointSet:
    pts = []
    where: dict[tuple[int, ...], int] = {}
    for idx, v in enumerate(vectors):
        if len(v) != s:
            raise ValueError(f"point {idx} has {len(v)} coordinates, expected {s}")
        P = canonicalize(field, v)
        if P.coords in where:
            raise DuplicatePoint(where[P.coords], idx, P.coords)
        where[P.coords] = idx
        pts.append(P)
    return PointSet(field, s, tuple(pts), label)


def random_subset(X: PointSet, size: int, seed: int = 0) -> PointSet:
    """``size`` distinct points of X chosen by a seeded generator, kept in X's order."""
    if not 1 <= size <= len(X):
        raise ValueError(f"cannot choose {size} of {len(X)} points")
    rng = np.random.default_rng(seed)
    idx = np.sort(rng.choice(len(X), size=size, replace=False))
    return PointSet(X.field, X.ambient_dim, tuple(X.points[i] for i in idx),
                    f"random{size}({X.label},seed={seed})")


# -- text format: header "q=<int> s=<int>", then one comma-separated point per line

def format_pointset(X: PointSet) -> str:
    lines = [f"q={X.field.q} s={X.ambient_dim}"]
    lines += [",".join(map(str, P.coords)) for P in X]
    return "\n".join(lines) + "\n"


def parse_pointset(text: str, label: str = "file") -> PointSet:
    rows = [ln.strip() for ln in text.splitlines()]
    rows = [ln for ln in rows if ln and not ln.startswith("#")]
    if not rows:
        raise ValueError("empty point-set file")
    header = _parse_header(rows[0], ("q", "s"))
    field = make_field(header["q"])
    vectors = []
    for lineno, row in enumerate(rows[1:], start=2):
        try:
            vectors.append([int(x) for x in row.split(",")])
        except ValueError:
            raise ValueError(f"line {lineno}: cannot parse {row!r}") from None
    return custom_set(field, header["s"], vectors, label=label)


def write_pointset(X: PointSet, path) -> None:
    Path(path).write_text(format_pointset(X))


def read_pointset(path) -> PointSet:
    path = Path(path)
    return parse_pointset(path.read_text(), label=path.name)


def _parse_header(line: str, keys: tuple[str, ...]) -> dict[str, int]:
    out = {}
    for tok in line.split():
        key, _, val = tok.partition("=")
        out[key] = int(val)
    missing = [k for k in keys if k not in out]
    if missing:
        raise ValueError(f"header {line!r} lacks {', '.join(missing)}")
    return out
