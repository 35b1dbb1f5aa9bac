"""Executes parsed programs against the engine and renders reports."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field, replace
from fractions import Fraction

from . import lab
from .algebra import FieldSpec, make_ring
from .cache import NullCache, content_hash
from .ci import (
    cokernel,
    cyclic,
    depth_and_dim,
    direct_sum,
    free,
    make_ci_ring,
    residue_field,
    resolution,
    shift,
    syzygy_module,
)
from .config import DEFAULT, ENGINE_VERSION, EngineConfig
from .constructions import linear_support_module, point_support_module
from .dsl import CIDecl, IdealDecl, Neg, Num, Pow, Pragma, Program, Query, RingDecl, Var
from .dsl import format_statement
from .errors import CISupportError
from .geometry import join, secant
from .homological import ext_pair, hom_module, tensor_product, tor
from .support import complexity, support

RESULT_KEYS = ("query", "status", "ideal", "dim", "betti", "verdict", "notes", "ms")


def make_result(query: str, status: str = "ok", ideal=None, dim=None, betti=None, verdict=None,
                notes: str = "", ms: float = 0.0) -> dict:
    return {"query": query, "status": status, "ideal": list(ideal or []), "dim": dim,
            "betti": list(betti or []), "verdict": verdict, "notes": notes, "ms": ms}


@dataclass
class Report:
    config: dict
    results: list[dict] = field(default_factory=list)
    version: str = ENGINE_VERSION

    def as_dict(self, timing: bool = True) -> dict:
        results = []
        for r in self.results:
            r = {k: r[k] for k in RESULT_KEYS}
            if not timing:
                r["ms"] = 0.0
            results.append(r)
        return {"version": self.version, "config": dict(self.config), "results": results}

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        return cls(dict(d["config"]), [dict(r) for r in d["results"]], d["version"])

    @property
    def exit_code(self) -> int:
        statuses = {r["status"] for r in self.results}
        if "refuted" in statuses:
            return 2
        if "error" in statuses:
            return 1
        return 0


def _config_echo(config: EngineConfig) -> dict:
    return {"field": config.field, "order": config.order, "res_bound": config.res_bound,
            "ann_window": config.ann_window, "seed": config.seed}


def render_report(report: Report, fmt: str = "json", timing: bool = True) -> bytes:
    d = report.as_dict(timing)
    if fmt == "json":
        return (json.dumps(d, indent=2, ensure_ascii=False) + "\n").encode("utf-8")
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    cfg = d["config"]
    lines = [f"cisupport {d['version']}  " + "  ".join(f"{k}={cfg[k]}" for k in cfg)]
    for r in d["results"]:
        lines.append(f"[{r['status']}] {r['query']}")
        if r["ideal"]:
            lines.append("  ideal: [" + ", ".join(sorted(r["ideal"])) + "]")
        if r["dim"] is not None:
            lines.append(f"  dim: {r['dim']}")
        if r["betti"]:
            lines.append("  betti: " + " ".join(map(str, r["betti"])))
        if r["verdict"] is not None:
            lines.append(f"  verdict: {r['verdict']}")
        if r["notes"]:
            lines.append(f"  notes: {r['notes']}")
        if timing:
            lines.append(f"  ms: {r['ms']}")
    return ("\n".join(lines) + "\n").encode("utf-8")


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------


def eval_expr(e, ring):
    if isinstance(e, Num):
        return ring.const(e.value)
    if isinstance(e, Var):
        return ring.var(e.name)
    if isinstance(e, Neg):
        return -eval_expr(e.arg, ring)
    if isinstance(e, Pow):
        return eval_expr(e.base, ring) ** e.exp
    a, b = eval_expr(e.left, ring), eval_expr(e.right, ring)
    if e.op == "+":
        return a + b
    if e.op == "-":
        return a - b
    if e.op == "*":
        return a * b
    if not b.is_constant() or not b:
        raise CISupportError("division only by nonzero constants")
    return a.scale(ring.field.inv(b.constant_term()))


class _Session:
    def __init__(self, config: EngineConfig, cache):
        self.config = config
        self.cache = cache
        self.objects: dict = {}
        self.deps: dict[str, tuple[str, ...]] = {}
        self.failed: dict[str, str] = {}

    def _dep_text(self, names) -> tuple[str, ...]:
        out: list[str] = []
        for n in names:
            for s in self.deps.get(n, ()):
                if s not in out:
                    out.append(s)
        return tuple(out)

    def _get(self, name):
        if name in self.failed:
            raise CISupportError(f"{name} was not constructed: {self.failed[name]}")
        return self.objects[name]

    # declarations
    def declare(self, s) -> None:
        text = format_statement(s)
        try:
            obj, refs = self._build(s)
        except Exception as exc:  # noqa: BLE001 - reported per statement
            self.failed[s.name] = f"{type(exc).__name__}: {exc}"
            self.deps[s.name] = (text,)
            raise
        self.objects[s.name] = obj
        self.failed.pop(s.name, None)
        self.deps[s.name] = self._dep_text(refs) + (text,)

    def _build(self, s):
        cfg = self.config
        if isinstance(s, RingDecl):
            F = FieldSpec.parse(s.field or cfg.field)
            return make_ring(F, list(s.variables), s.order or cfg.order, list(s.weights) if s.weights else None), []
        if isinstance(s, CIDecl):
            Q = self._get(s.ring)
            return make_ci_ring(Q, [eval_expr(e, Q) for e in s.relations]), [s.ring]
        if isinstance(s, IdealDecl):
            R = self._get(s.ring)
            return (R, [eval_expr(e, R.ambient) for e in s.gens]), [s.ring]
        e = s.expr
        k, a = e.kind, e.args
        if k == "quotient":
            R = self._get(a[0])
            gens = [eval_expr(x, R.ambient) for x in a[1]]
            return cyclic(R, gens, s.name), [a[0]]
        if k == "quotient_ideal":
            R, gens = self._get(a[1])
            return cyclic(R, gens, s.name), [a[1]]
        if k == "coker":
            R = self._get(a[0])
            rows = [[eval_expr(x, R.ambient) for x in row] for row in a[1]]
            return cokernel(R, rows, name=s.name), [a[0]]
        if k == "ideal":
            R, gens = self._get(a[0])
            return syzygy_module(cyclic(R, gens), 1).rename(s.name), [a[0]]
        if k == "residue":
            return residue_field(self._get(a[0])).rename(s.name), [a[0]]
        if k == "free":
            return free(self._get(a[0]), a[1], name=s.name), [a[0]]
        if k == "point":
            return point_support_module(self._get(a[0]), a[1] - 1, cfg).rename(s.name), [a[0]]
        if k == "span":
            return linear_support_module(self._get(a[0]), [i - 1 for i in a[1]], config=cfg).rename(s.name), [a[0]]
        if k == "syz":
            return syzygy_module(self._get(a[0]), a[1]).rename(s.name), [a[0]]
        if k == "shift":
            return shift(self._get(a[0]), a[1]).rename(s.name), [a[0]]
        M, N = self._get(a[0]), self._get(a[1])
        if k == "tensor":
            return tensor_product(M, N).rename(s.name), list(a)
        if k == "hom":
            return hom_module(M, N).rename(s.name), list(a)
        if k == "dsum":
            return direct_sum(M, N).rename(s.name), list(a)
        raise CISupportError(f"unknown module constructor {k}")

    # queries
    def run_query(self, q: Query) -> list[dict]:
        text = format_statement(q)
        names = [a for a in q.args if isinstance(a, str)] if q.op not in ("examples", "paper_examples") else []
        key = content_hash(_config_echo(self.config), self._dep_text(names), text)
        hit = self.cache.get(key)
        if hit is not None:
            return hit
        t0 = time.perf_counter()
        try:
            out = self._answer(q, text)
        except Exception as exc:  # noqa: BLE001 - reported per query
            ms = round((time.perf_counter() - t0) * 1000, 1)
            return [make_result(text, "error", notes=f"{type(exc).__name__}: {exc}", ms=ms)]
        ms = round((time.perf_counter() - t0) * 1000, 1)
        for r in out:
            if not r["ms"]:
                r["ms"] = ms
        if all(r["status"] != "error" for r in out):
            self.cache.put(key, out)
        return out

    def _answer(self, q: Query, text: str) -> list[dict]:
        cfg = self.config
        op, args = q.op, q.args
        if op in ("examples", "paper_examples"):
            which = [a.upper() for a in args] or list(lab.GOLDEN)
            out = []
            for w in which:
                if w not in lab.GOLDEN:
                    raise CISupportError(f"unknown example {w!r}")
                rep = lab.GOLDEN[w](cfg)
                out.append(_check_result(f"examples({w});", rep))
            return out
        mods = [self._get(a) for a in args if isinstance(a, str)]
        ints = [a for a in args if isinstance(a, int)]
        M = mods[0]
        if op == "support":
            V = support(M, cfg)
            return [make_result(text, ideal=V.ideal_strings(), dim=V.dim, notes=str(V))]
        if op == "join":
            jr = join(support(M, cfg), support(mods[1], cfg))
            V = jr.result
            verdict = "disjoint" if jr.disjoint else "intersecting"
            notes = f"{V}; dimension formula {'holds' if jr.formula_holds else 'n/a' if jr.formula_holds is None else 'fails'}"
            return [make_result(text, ideal=V.ideal_strings(), dim=V.dim, verdict=verdict, notes=notes)]
        if op == "secant":
            V = secant(support(M, cfg))
            return [make_result(text, ideal=V.ideal_strings(), dim=V.dim, notes=str(V))]
        if op in ("tor", "ext"):
            prof = (tor if op == "tor" else ext_pair)(M, mods[1], ints[0])
            gens = [m.minimal.ngens for m in prof.modules]
            name = "Tor" if op == "tor" else "Ext"
            notes = "; ".join(f"{name}_{i}: {prof.hilbert_series(i)}" for i in range(len(prof)))
            verdict = "".join("0" if z else "1" for z in prof.vanishing())
            return [make_result(text, dim=max(m.dim for m in prof.modules), betti=gens, verdict=verdict, notes=notes)]
        if op in ("hom", "tensor"):
            X = hom_module(M, mods[1]) if op == "hom" else tensor_product(M, mods[1])
            return [make_result(text, dim=X.dim, betti=[X.minimal.ngens], notes=str(X.hilbert_series))]
        if op == "complexity":
            cx = complexity(M, cfg)
            return [make_result(text, dim=cx - 1, verdict=str(cx))]
        if op == "betti":
            n = ints[0]
            if M.is_zero():
                return [make_result(text, betti=[0] * (n + 1))]
            res = resolution(M)
            res.extend(n)
            return [make_result(text, betti=[res.rank(i) for i in range(n + 1)], notes=str(res.betti(n)))]
        if op == "dim":
            return [make_result(text, dim=M.dim)]
        if op == "depth":
            dd = depth_and_dim(M)
            return [make_result(text, dim=dd.dim, verdict=str(dd.depth),
                                notes=f"CM={dd.is_cm} MCM={dd.is_mcm}")]
        N = mods[1]
        if op == "check_join":
            return [_check_result(text, lab.check_join_theorem(M, N, cfg))]
        if op == "check_hom":
            return [_check_result(text, lab.check_hom_theorem(M, N, cfg))]
        if op == "check_dim":
            return [_check_result(text, lab.check_dim_criterion(M, N, cfg))]
        if op == "probe":
            x = [a for a in args if not isinstance(a, (str, int))]
            xe = eval_expr(x[0], M.ring.ambient) if x else None
            return [_check_result(text, lab.conjecture_probes(M, N, xe, config=cfg))]
        if op == "experiment":
            return [_check_result(text, lab.experiments(M, N, ints[0], config=cfg))]
        raise CISupportError(f"unknown query {op}")

    def pragma(self, p: Pragma) -> None:
        if p.key in ("res_bound", "ann_window", "seed"):
            self.config = replace(self.config, **{p.key: int(p.value)})
        else:
            self.config = replace(self.config, **{p.key: p.value})


def _check_result(text: str, rep: "lab.CheckReport") -> dict:
    verdict = "hypothesis met" if rep.hypothesis_met else f"hypothesis not met: {rep.failed_clause}"
    ideal = []
    return make_result(text, rep.status, ideal=ideal, verdict=verdict,
                       notes=json.dumps(rep.details, sort_keys=True, default=_jsonable), ms=rep.ms)


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    return str(x)


def run_program(program: Program, config: EngineConfig = DEFAULT, cache=None) -> Report:
    """Runs statements in order; a failing statement becomes an error entry and the run continues."""
    session = _Session(config, cache or NullCache())
    report = Report(_config_echo(config))
    for s in program.statements:
        if isinstance(s, Pragma):
            session.pragma(s)
        elif isinstance(s, Query):
            report.results.extend(session.run_query(s))
        else:
            t0 = time.perf_counter()
            try:
                session.declare(s)
            except Exception as exc:  # noqa: BLE001 - reported per statement
                ms = round((time.perf_counter() - t0) * 1000, 1)
                report.results.append(make_result(format_statement(s), "error",
                                                  notes=f"{type(exc).__name__}: {exc}", ms=ms))
    return report
