"""Verification suites and the report they produce.

Every suite is split into tasks (top-level functions with plain arguments),
so that a process pool can run them; results are collected in task order.
Each task seeds its own generator from (seed, task index).
"""
import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from . import catalog as cat
from . import jets as jl
from . import linalg as la
from . import pairs as pc
from .curvature import CurvatureModel, is_curvature_invariant

SUITES = ("types", "table", "nonexistence", "jets", "obstructions", "jtheta")
SCHEMA_VERSION = 1


@dataclass(frozen=True)
class RunConfig:
    n: int = 4
    sign: int = 1
    seed: int = 24601
    suite: str = "all"
    budget: int = 10_000
    output_path: str = None
    format: str = "json"
    jobs: int = 1

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError("n must be an integer >= 2")
        if self.sign not in (1, -1):
            raise ValueError("sign must be 1 or -1")
        if self.suite not in SUITES + ("all",):
            raise ValueError(f"unknown suite {self.suite!r}")
        if not isinstance(self.budget, int) or self.budget < 1:
            raise ValueError("budget must be an integer >= 1")
        if self.format not in ("json", "csv"):
            raise ValueError("format must be json or csv")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")

    def report_fields(self):
        d = asdict(self)
        d.pop("output_path")
        d.pop("jobs")
        return d


def _r(x):
    """Residuals are reported to 6 significant digits."""
    return float(f"{float(x):.6g}")


def case(cid, ok, residuals=None, evidence=None, verdict=None):
    return {
        "id": cid,
        "verdict": verdict or ("pass" if ok else "fail"),
        "residuals": {k: _r(v) for k, v in sorted((residuals or {}).items())},
        "evidence": evidence or {},
    }


def _grass(n, sign):
    return CurvatureModel("grassmannian2", n, sign)


# ------------------------------------------------------------------ types

def task_types(n, sign, seed, idx, variant, reps=10):
    rng = np.random.default_rng([seed, idx])
    m = _grass(n, sign)
    out = []
    for k, l in cat.admissible_params(variant, n):
        inv = ang = 0.0
        dims = set()
        same = True
        for _ in range(reps):
            t = cat.random_tag(variant, n, rng, k, l)
            W = cat.construct_type(t, n)
            inv = max(inv, is_curvature_invariant(m, W).residual)
            back = cat.classify(m, W)
            ref = t.canonical()
            same &= back.params == ref.params
            ang = max(ang, la.subspace_distance(cat.construct_type(back, n), W))
            dims.add(cat.curvature_algebra(m, W).dim)
        want = cat.expected_algebra_dim(variant, k, l)
        ok = inv <= la.RANK_TOL and ang <= 1e-7 and same and dims == {want}
        out.append(case(f"types/{variant}/k={k},l={l}", ok,
                        {"invariance": inv, "round_trip_angle": ang},
                        {"algebra_dims": sorted(dims), "expected_dim": want, "params_match": bool(same)}))
    return out


# ------------------------------------------------------------------ table

def task_table(n, sign, seed, idx, row_index):
    rows = pc.load_table()
    r = rows[row_index]
    if r.n > n:
        return [case(f"table/{r.row_id}", True, {}, {"n": r.n, "reason": f"needs n >= {r.n}"}, verdict="skip")]
    res = pc.verify_row(r, n, sign, 20, np.random.default_rng([seed, idx]))
    resid = dict(res.residuals)
    resid["conditions"] = max(res.conditions.values())
    ev = {"n": res.n, "mutations_failed": res.mutations_failed, "mutations": res.mutations_total,
          "mutation_min_residual": _r(res.mutation_min_residual)}
    if res.v_invariant is not None:
        ev["v_curvature_invariant"] = res.v_invariant
    return [case(f"table/{r.row_id}", res.ok, resid, ev)]


# ------------------------------------------------------------------ nonexistence

def task_nonexistence(n, sign, seed, idx, a, b, budget):
    specA, specB = pc.parse_label(a), pc.parse_label(b)
    nn = max(n, pc.search_dimension(specA, specB))
    res = pc.search_pairs(_grass(nn, sign), a, b, budget, int(np.random.SeedSequence([seed, idx]).generate_state(1)[0]))
    return [case(f"nonexistence/{a}|{b}", res.n_hits == 0, {"closest": res.closest},
                 {"n": nn, "budget": budget, "hits": res.n_hits})]


# ------------------------------------------------------------------ jets

def task_circles(n, sign, seed, idx, count=100):
    rng = np.random.default_rng([seed, idx])
    m = _grass(n, sign)
    worst = 0.0
    bad = 0
    for _ in range(count):
        j = jl.random_circle_jet(m, rng)
        v = jl.is_integrable_jet(j)
        bad += not v
        worst = max(worst, v.residual)
        jl.derived_pair(j)
    return [case("jets/circles", bad == 0, {"max": worst}, {"count": count, "failed": bad})]


def task_zero_jets(n, sign, seed, idx):
    rng = np.random.default_rng([seed, idx])
    nn = max(n, 4)
    m = _grass(nn, sign)
    out = []
    for v in cat.VARIANTS:
        t = cat.random_tag(v, nn, rng)
        j = jl.zero_jet(m, cat.construct_type(t, nn))
        ver = jl.is_integrable_jet(j)
        out.append(case(f"jets/zero/{v}", ver.ok, {"max": ver.residual}, {"n": nn, "label": t.label()}))
    return out


def task_counterexample(n, sign, seed, idx):
    j = jl.flat_counterexample_jet()
    if sign == -1:
        j = jl.TwoJet(j.model.flipped(), j.W, j.h)
    v = jl.is_integrable_jet(j)
    # expected residual: operator norm of J restricted to the osculating space V
    P = jl.osculating_space(j).projector
    expected = float(np.linalg.norm(la.complex_structure(j.n) @ P, 2))
    ok = (not v.ok) and v.details["failed"] == "cond2" and v.details["k"] == 1
    ok = ok and abs(v.residual - expected) <= 1e-8
    return [case("jets/flat_counterexample", ok, {"cond2": v.residual, "expected": expected},
                 {"failed": v.details["failed"], "k": v.details.get("k")})]


def task_dense(n, sign, seed, idx, count=100):
    rng = np.random.default_rng([seed, idx])
    m = _grass(n, sign)
    rejected = 0
    clauses = {}
    for _ in range(count):
        t = cat.random_tag("c_k", n, rng, 2, 0)
        j = jl.random_dense_jet(m, cat.construct_type(t, n), rng)
        v = jl.is_integrable_jet(j)
        rejected += not v
        if not v:
            clauses[v.details["failed"]] = clauses.get(v.details["failed"], 0) + 1
    return [case("jets/dense_c2", rejected == count, {}, {"count": count, "rejected": rejected,
                                                           "clauses": dict(sorted(clauses.items()))})]


def task_curved_flat(n, sign, seed, idx):
    j = jl.product_of_circles_jet(1.0, 2.0)
    if sign == -1:
        j = jl.TwoJet(j.model.flipped(), j.W, j.h)
    good = jl.curved_flat_normal_form(j, seed=seed)
    c = jl.flat_counterexample_jet()
    if sign == -1:
        c = jl.TwoJet(c.model.flipped(), c.W, c.h)
    bad = jl.curved_flat_normal_form(c, seed=seed)
    W, U, pv = jl.derived_pair(j)
    eq = jl.eq_ci_check(j, seed=seed)
    return [
        case("jets/curved_flat/product_of_circles", good.ok, good.residuals,
             {"commutator": _r(good.commutator_residual)}),
        case("jets/curved_flat/counterexample", (not bad.ok) and bad.failed_clause == "cfl2",
             bad.residuals, {"failed_clause": bad.failed_clause, "failed_term": bad.failed_term}),
        case("jets/derived_pair/product_of_circles", pv.ok, pv.details, {"U_dim": U.dim}),
        case("jets/eq_ci/product_of_circles", True, eq, {"gate": False}, verdict="info"),
    ]


# ------------------------------------------------------------------ obstructions

def task_obstructions(n, sign, seed, idx):
    out = []
    for r in pc.load_table():
        nn = max(n, r.n)
        if not (r.blocked or r.v_invariant):
            continue
        m = _grass(nn, sign)
        W, U = pc.construct_pair(r, nn, m)
        if r.blocked:
            verdict, ev = jl.dec_obstruction(m, W, U)
            out.append(case(f"obstructions/dec/{r.row_id}", verdict == "blocked", {}, {"verdict": verdict, **ev}))
        if r.v_invariant:
            v = is_curvature_invariant(m, la.sum_subspaces(W, U))
            out.append(case(f"obstructions/V_invariant/{r.row_id}", v.ok, {"invariance": v.residual}))
    m = _grass(2, sign)
    W = la.span_orthonormal([la.unit(2, 0), 1j * la.unit(2, 0)])
    U = la.span_orthonormal([la.unit(2, 1), 1j * la.unit(2, 1)])
    verdict, ev = jl.dec_obstruction(m, W, U)
    out.append(case("obstructions/dec/c_1,c_1", verdict == "inconclusive", {}, {"verdict": verdict, **ev}))
    j = jl.product_of_circles_jet()
    if sign == -1:
        j = jl.TwoJet(j.model.flipped(), j.W, j.h)
    W, U, _ = jl.derived_pair(j)
    verdict, ev = jl.dec_obstruction(j.model, W, U)
    out.append(case("obstructions/dec/integrable_product_of_circles", verdict != "blocked", {},
                    {"verdict": verdict, **ev}))
    return out


# ------------------------------------------------------------------ jtheta

def task_jtheta(n, sign, seed, idx, k, theta):
    rng = np.random.default_rng([seed, idx])
    nn = max(n, 2 * k)
    t = cat.random_tag("tr_k_prime", nn, rng, k=k)
    rep = cat.jtheta_structure(t, theta, _grass(nn, sign), strict=False)
    res = dict(rep["residuals"])
    res["jtheta_in_centralizer"] = rep["jtheta_in_centralizer"]
    ok = rep["ok"] and rep["stabilizer_dims"]["total"] == k * (k - 1)
    return [case(f"jtheta/k={k}/theta={theta:.6f}", ok, res,
                 {"n": nn, "stabilizer_dims": rep["stabilizer_dims"],
                  "centralizer_minus_dim": rep["centralizer_minus_dim"]})]


# ------------------------------------------------------------------ driver

def suite_tasks(cfg, suite):
    """(function, extra args) per task of a suite, in report order."""
    if suite == "types":
        return [(task_types, (v,)) for v in cat.VARIANTS]
    if suite == "table":
        rows = pc.load_table()
        return [(task_table, (i,)) for i in range(len(rows))]
    if suite == "nonexistence":
        return [(task_nonexistence, (a, b, cfg.budget)) for a, b in pc.FORBIDDEN_PAIRS]
    if suite == "jets":
        return [(task_circles, ()), (task_zero_jets, ()), (task_counterexample, ()),
                (task_dense, ()), (task_curved_flat, ())]
    if suite == "obstructions":
        return [(task_obstructions, ())]
    if suite == "jtheta":
        return [(task_jtheta, (k, th)) for k in (2, 3, 4) for th in (0.0, 0.7, np.pi / 3)]
    raise ValueError(suite)


def _call(job):
    fn, args = job
    return fn(*args)


def run_suites(cfg):
    names = SUITES if cfg.suite == "all" else (cfg.suite,)
    jobs = []
    for s_idx, name in enumerate(names):
        for t_idx, (fn, extra) in enumerate(suite_tasks(cfg, name)):
            idx = 1000 * SUITES.index(name) + t_idx
            jobs.append((fn, (cfg.n, cfg.sign, cfg.seed, idx) + tuple(extra)))
    if cfg.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as ex:
            results = list(ex.map(_call, jobs))
    else:
        results = [_call(j) for j in jobs]
    cases = [c for r in results for c in r]
    return build_report(cfg, cases)


def build_report(cfg, cases):
    counts = {}
    for c in cases:
        counts[c["verdict"]] = counts.get(c["verdict"], 0) + 1
    ok = all(c["verdict"] in ("pass", "info", "skip") for c in cases)
    return {
        "schema_version": SCHEMA_VERSION,
        "config": cfg.report_fields(),
        "cases": cases,
        "summary": {"cases": len(cases), "counts": dict(sorted(counts.items())), "ok": ok},
    }


def report_json(report):
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def report_csv(report):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["row_id", "n", "verdict", "max_residual", "mutations_failed"])
    n = report["config"]["n"]
    for c in report["cases"]:
        vals = list(c["residuals"].values())
        ev = c["evidence"]
        w.writerow([c["id"], ev.get("n", n), c["verdict"],
                    repr(max(vals)) if vals else "", ev.get("mutations_failed", "")])
    return buf.getvalue()
