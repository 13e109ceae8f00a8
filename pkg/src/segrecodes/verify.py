"""Checks of the direct-product structure of projective Segre codes.

For point sets X1, X2 and their Segre product X, ``verify_segre`` builds
C_X1(d), C_X2(d), C_X(d) and checks, clause by clause:

  a  |X| = |X1| |X2|
  b  dim C_X(d) = dim C_X1(d) dim C_X2(d)
  c  C_X(d) equals the Kronecker product of the factor codes
  d  delta(C_X(d)) = delta(C_X1(d)) delta(C_X2(d))
  e  delta_2(C_X(d)) = min(delta_1(C1) delta_2(C2), delta_2(C1) delta_1(C2))
  f  reg(X) = max(reg(X1), reg(X2)) and delta(C_X(d)) = 1 at that degree
     and the next

Exhaustive steps that would exceed their budgets mark a clause
"skipped"; only a genuine mismatch marks it "fail".
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import BudgetExceeded, SegreCodesError
from .gf import FieldSpec, make_field
from .matcodes import (
    LinearCode,
    default_budgets,
    ghw,
    kronecker,
    min_distance,
    rowspace_equal,
)
from .projgeom import (
    PointSet,
    custom_set,
    parameterized_set,
    projective_space,
    projective_torus,
    random_subset,
    read_pointset,
    segre_embed,
)
from .rmtype import evaluation_code, hilbert_function, quotient_invariants

PASS, FAIL, SKIP, ERROR = "pass", "fail", "skipped", "error"

CSV_COLUMNS = (
    "q", "x1", "x2", "a1", "a2", "d",
    "n1", "k1", "delta1", "n2", "k2", "delta2",
    "n", "k", "delta", "delta2_product", "reg", "status",
)

STANDARD_KINDS = (
    "space:2",
    "space:3",
    "torus:3",
    "param:1,1,0;0,1,1;1,0,1",
    "random:3:4",
)


def build_set(spec: str, field: FieldSpec, seed: int = 0) -> PointSet:
    """Point set from a ``kind:params`` string.

    kinds: ``space:S``, ``torus:S``, ``param:E`` (exponent rows separated
    by ';', entries by ','), ``random:S:COUNT[:SEED]`` (seeded subset of
    P^{S-1}), ``custom:P`` (points as in ``param``), ``file:PATH``.
    """
    kind, _, arg = spec.partition(":")
    kind = kind.strip().lower()
    if kind == "space":
        return projective_space(int(arg), field)
    if kind == "torus":
        return projective_torus(int(arg), field)
    if kind in ("param", "parameterized"):
        return parameterized_set(parse_rows(arg), field)
    if kind == "random":
        parts = [int(x) for x in arg.split(":")]
        if len(parts) not in (2, 3):
            raise ValueError(f"random set needs S:COUNT[:SEED], got {arg!r}")
        s, count = parts[:2]
        sub_seed = parts[2] if len(parts) == 3 else seed
        return random_subset(projective_space(s, field), count, sub_seed)
    if kind == "custom":
        rows = parse_rows(arg)
        return custom_set(field, len(rows[0]), rows)
    if kind == "file":
        X = read_pointset(arg)
        if X.field != field:
            raise ValueError(f"{arg} is over GF({X.field.q}), expected GF({field.q})")
        return X
    raise ValueError(f"unknown point-set kind {kind!r}")


def parse_rows(text: str) -> list[list[int]]:
    rows = [r for r in text.replace(" ", "").split(";") if r]
    if not rows:
        raise ValueError("no rows given")
    try:
        return [[int(x) for x in r.split(",")] for r in rows]
    except ValueError:
        raise ValueError(f"cannot parse rows {text!r}") from None


@dataclass(frozen=True)
class SegreConfig:
    q: int
    x1: str
    x2: str
    d: int
    budget_dist: int | None = None
    budget_subspaces: int | None = None
    seed: int = 0

    def budgets(self) -> tuple[int, int]:
        dist, sub = default_budgets()
        return (self.budget_dist or dist, self.budget_subspaces or sub)

    def to_dict(self) -> dict:
        dist, sub = self.budgets()
        out = asdict(self)
        out.update(budget_dist=dist, budget_subspaces=sub)
        return out

    @classmethod
    def from_dict(cls, rec: dict) -> "SegreConfig":
        unknown = set(rec) - {f for f in cls.__dataclass_fields__}
        if unknown:
            raise ValueError(f"unknown config fields: {', '.join(sorted(unknown))}")
        for key in ("q", "x1", "x2", "d"):
            if key not in rec:
                raise ValueError(f"config lacks field {key!r}")
        return cls(
            q=int(rec["q"]),
            x1=str(rec["x1"]),
            x2=str(rec["x2"]),
            d=int(rec["d"]),
            budget_dist=rec.get("budget_dist"),
            budget_subspaces=rec.get("budget_subspaces"),
            seed=int(rec.get("seed", 0)),
        )

    def key(self) -> str:
        blob = json.dumps(self.to_dict(), sort_keys=True)
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    def point_sets(self) -> tuple[PointSet, PointSet]:
        F = make_field(self.q)
        # distinct default seeds so two random factors differ
        return build_set(self.x1, F, self.seed), build_set(self.x2, F, self.seed + 1)


@dataclass
class ClauseResult:
    clause: str
    status: str
    predicted: object = None
    measured: object = None
    note: str = ""


@dataclass
class VerificationReport:
    config: SegreConfig
    measured: dict = field(default_factory=dict)
    clauses: list[ClauseResult] = field(default_factory=list)
    status: str = SKIP
    error: str = ""

    def clause(self, name: str) -> ClauseResult:
        for c in self.clauses:
            if c.clause == name:
                return c
        raise KeyError(name)

    def finish(self) -> "VerificationReport":
        states = {c.status for c in self.clauses}
        if self.error:
            self.status = ERROR
        elif FAIL in states:
            self.status = FAIL
        elif PASS in states:
            self.status = PASS
        else:
            self.status = SKIP
        return self

    def to_dict(self) -> dict:
        out = {
            "config": self.config.to_dict(),
            "measured": self.measured,
            "clauses": [asdict(c) for c in self.clauses],
            "status": self.status,
        }
        if self.error:
            out["error"] = self.error
        return out

    def csv_row(self) -> list:
        return csv_row(self.to_dict())


def csv_row(rec: dict) -> list:
    """CSV cells for a serialized report, in CSV_COLUMNS order."""
    cfg, m = rec["config"], rec.get("measured", {})
    row = {**{c: m.get(c) for c in CSV_COLUMNS}, "q": cfg["q"], "x1": cfg["x1"],
           "x2": cfg["x2"], "d": cfg["d"], "status": rec["status"]}
    return ["" if row[c] is None else row[c] for c in CSV_COLUMNS]


def _try(fn, *args):
    try:
        return fn(*args), ""
    except BudgetExceeded as exc:
        return None, str(exc)


def _eq_clause(name, predicted, measured, note=""):
    return ClauseResult(name, PASS if predicted == measured else FAIL, predicted, measured, note)


def verify_segre(config: SegreConfig) -> VerificationReport:
    report = VerificationReport(config)
    try:
        _verify_into(report)
    except (SegreCodesError, ValueError) as exc:
        report.error = f"{type(exc).__name__}: {exc}"
    return report.finish()


def _verify_into(report: VerificationReport) -> None:
    cfg = report.config
    dist_budget, sub_budget = cfg.budgets()
    X1, X2 = cfg.point_sets()
    X = segre_embed(X1, X2)
    d = cfg.d
    m = report.measured
    m.update(a1=X1.ambient_dim, a2=X2.ambient_dim,
             set1=X1.label, set2=X2.label)

    C1, C2, C = (evaluation_code(Y, max(d, 0)) for Y in (X1, X2, X))
    m.update(n1=C1.n, k1=C1.k, n2=C2.n, k2=C2.k, n=C.n, k=C.k)

    if d < 1:
        for name in "abcdef":
            report.clauses.append(ClauseResult(name, SKIP, note="d >= 1 required"))
        return

    add = report.clauses.append
    add(_eq_clause("a", len(X1) * len(X2), len(X)))
    add(_eq_clause("b", C1.k * C2.k, C.k))

    K = kronecker(C1.basis, C2.basis)
    same = rowspace_equal(C.generators, K)
    add(ClauseResult("c", PASS if same else FAIL, True, same,
                     "row space of C_X(d) vs Kronecker product of factor bases"))

    delta1, n1 = _try(min_distance, C1.code, dist_budget)
    delta2, n2 = _try(min_distance, C2.code, dist_budget)
    delta, n0 = _try(min_distance, C.code, dist_budget)
    m.update(delta1=delta1, delta2=delta2, delta=delta)
    if None in (delta, delta1, delta2):
        add(ClauseResult("d", SKIP, note=n0 or n1 or n2))
    else:
        add(_eq_clause("d", delta1 * delta2, delta))

    add(_clause_e(m, C1.code, C2.code, C.code, delta1, delta2, sub_budget))
    add(_clause_f(m, X1, X2, X, dist_budget))


def _second_weight(code: LinearCode, budget: int):
    """delta_2, math.inf for a one-dimensional code."""
    if code.k < 2:
        return math.inf, ""
    return _try(ghw, code, 2, budget)


def _clause_e(m, C1, C2, C, delta1, delta2, budget) -> ClauseResult:
    if C.k < 2:
        m.update(ghw2_1=None, ghw2_2=None, delta2_product=None)
        return ClauseResult("e", SKIP, note="product code has dimension 1")
    g1, n1 = _second_weight(C1, budget)
    g2, n2 = _second_weight(C2, budget)
    g, n0 = _try(ghw, C, 2, budget)
    m.update(ghw2_1=None if g1 is math.inf else g1,
             ghw2_2=None if g2 is math.inf else g2,
             delta2_product=g)
    if None in (g, g1, g2, delta1, delta2):
        return ClauseResult("e", SKIP, note=n0 or n1 or n2 or "factor distance over budget")
    predicted = min(delta1 * g2, g1 * delta2)
    return _eq_clause("e", predicted, g)


def _distance_is_one(code: LinearCode, budget: int) -> tuple[bool, str]:
    """Exact structural test, cross-checked by enumeration when affordable."""
    unit = code.has_unit_word()
    delta, _ = _try(min_distance, code, budget)
    if delta is not None and (delta == 1) != unit:
        return False, f"enumerated distance {delta} disagrees with unit-word test"
    return unit, "enumerated" if delta is not None else "unit-word test"


def _clause_f(m, X1, X2, X, budget) -> ClauseResult:
    reg1 = quotient_invariants(X1).regularity
    reg2 = quotient_invariants(X2).regularity
    reg = quotient_invariants(X).regularity
    m.update(reg1=reg1, reg2=reg2, reg=reg)
    top = max(reg1, reg2)
    ok_at = {}
    notes = []
    for dd in (top, top + 1):
        ok, how = _distance_is_one(evaluation_code(X, dd).code, budget)
        ok_at[dd] = ok
        notes.append(f"d={dd}: {how}")
    measured = {"reg": reg, **{f"delta_is_1_at_{dd}": v for dd, v in ok_at.items()}}
    predicted = {"reg": top, **{f"delta_is_1_at_{dd}": True for dd in ok_at}}
    return _eq_clause("f", predicted, measured, "; ".join(notes))


def sweep(configs: Sequence[SegreConfig]) -> list[VerificationReport]:
    return [verify_segre(c) for c in configs]


def standard_suite(seed: int = 0, qs: Sequence[int] = (2, 3, 4),
                   kinds: Sequence[str] = STANDARD_KINDS) -> list[SegreConfig]:
    """Every ordered pair of standard sets, d = 1 .. max(reg1, reg2) + 1."""
    configs = []
    for q in qs:
        for x1 in kinds:
            for x2 in kinds:
                probe = SegreConfig(q, x1, x2, 1, seed=seed)
                X1, X2 = probe.point_sets()
                top = max(quotient_invariants(X1).regularity, quotient_invariants(X2).regularity)
                configs.extend(SegreConfig(q, x1, x2, d, seed=seed) for d in range(1, top + 2))
    return configs


@dataclass
class HilbertProductReport:
    rows: list[dict]
    increasing: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(r["ok"] for r in self.rows) and all(self.increasing.values())


def hilbert_shape_ok(values: Sequence[int], size: int) -> bool:
    """Strictly increasing from 1 until it reaches ``size``, then constant."""
    if not values or values[0] != 1:
        return False
    for prev, cur in zip(values, values[1:]):
        if prev == size:
            if cur != size:
                return False
        elif not prev < cur <= size:
            return False
    return True


def verify_hilbert_product(X1: PointSet, X2: PointSet, d_max: int) -> HilbertProductReport:
    X = segre_embed(X1, X2)
    rows = []
    for d in range(d_max + 1):
        h1, h2, h = (hilbert_function(Y, d) for Y in (X1, X2, X))
        rows.append({"d": d, "h1": h1, "h2": h2, "h": h, "ok": h == h1 * h2})
    inc = {}
    for name, Y in (("X1", X1), ("X2", X2), ("X", X)):
        vals = [hilbert_function(Y, d) for d in range(d_max + 1)]
        inc[name] = hilbert_shape_ok(vals, len(Y))
    return HilbertProductReport(rows, inc)


@dataclass
class ClosureReport:
    segre_size: int
    param_size: int
    equal: bool
    exponents: list[list[int]]


def product_exponents(E1: Sequence[Sequence[int]], E2: Sequence[Sequence[int]]) -> list[list[int]]:
    """Exponents of z^v_i w^u_j in disjoint variables (z, w), i major."""
    return [list(v) + list(u) for v in E1 for u in E2]


def verify_parameterized_closure(E1, E2, field: FieldSpec) -> ClosureReport:
    S = segre_embed(parameterized_set(E1, field), parameterized_set(E2, field))
    E = product_exponents(E1, E2)
    P = parameterized_set(E, field)
    equal = set(S.coord_tuples) == set(P.coord_tuples)
    return ClosureReport(len(S), len(P), equal, E)


def random_exponents(rng: np.random.Generator, s: int, n: int, max_exp: int = 3) -> list[list[int]]:
    return rng.integers(0, max_exp + 1, size=(s, n)).tolist()


# -- report serialization

def reports_to_json(reports: Sequence[VerificationReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, default=_json_default) + "\n"


def _json_default(obj):
    if isinstance(obj, float) and math.isinf(obj):
        return None
    if isinstance(obj, (np.integer,)):
        return int(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def load_configs(path) -> list[SegreConfig]:
    """JSON list of config records; errors name the offending entry and field."""
    text = Path(path).read_text()
    if not text.strip():
        raise ValueError(f"{path}: empty config file")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: line {exc.lineno}: {exc.msg}") from None
    if not isinstance(data, list):
        raise ValueError(f"{path}: expected a JSON list of configs")
    out = []
    for i, rec in enumerate(data):
        if not isinstance(rec, dict):
            raise ValueError(f"{path}: entry {i} is not an object")
        try:
            out.append(SegreConfig.from_dict(rec))
        except (ValueError, TypeError) as exc:
            raise ValueError(f"{path}: entry {i}: {exc}") from None
    return out
