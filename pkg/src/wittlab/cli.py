"""Command line front end.

Exit status: 0 when every check passes, 1 when a check fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import format_rational, parse_rational
from .coeff import (Binomial, FreeLambda, IntegralityError, Integers, MultiPoly, Rationals,
                    Ring, TruncationError, from_json_value, parse_ring, to_json_value)


class InputError(Exception):
    """Malformed user input (exit status 2)."""


@dataclass
class RunConfig:
    command: str
    ring: str = "int"
    n: int = 8
    cap: int = 6
    rank: int = 1
    fmt: str = "text"
    input: str | None = None
    output: str | None = None
    seed: int = 0
    samples: int = 10
    extra: dict = field(default_factory=dict)

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> "RunConfig":
        known = {f for f in cls.__dataclass_fields__ if f != "extra"}
        values = {k: v for k, v in vars(ns).items() if k in known and v is not None}
        extra = {k: v for k, v in vars(ns).items() if k not in known and k != "handler"}
        return cls(extra=extra, **values)


@dataclass
class Result:
    """Rows for tabular output plus an overall verdict."""

    rows: list
    ok: bool = True
    meta: dict = field(default_factory=dict)


# -- helpers ---------------------------------------------------------------------

def _ring(cfg: RunConfig) -> Ring:
    try:
        return parse_ring(cfg.ring)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from None


def _positive(name, value):
    if value is None or value < 1:
        raise InputError(f"--{name} must be a positive integer")
    return value


def _jv(ring, x):
    return to_json_value(ring, x)


def _text_value(v):
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=False)
    return str(v)


def render(result: Result, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"ok": result.ok, **result.meta, "rows": result.rows}, indent=2) + "\n"
    keys: list = []
    for row in result.rows:
        for k in row:
            if k not in keys:
                keys.append(k)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
        w.writeheader()
        for row in result.rows:
            w.writerow({k: _text_value(row.get(k, "")) for k in keys})
        return buf.getvalue()
    lines = [f"{k}: {_text_value(v)}" for k, v in result.meta.items()]
    for row in result.rows:
        lines.append("  ".join(f"{k}={_text_value(row[k])}" for k in keys if k in row))
    lines.append("PASS" if result.ok else "FAIL")
    return "\n".join(lines) + "\n"


def _random_vector(ring: Ring, N: int, rng: random.Random) -> tuple:
    return tuple(ring.random_element(rng) for _ in range(N))


# -- subcommands ---------------------------------------------------------------------

def cmd_witt_table(cfg: RunConfig) -> Result:
    from .lambda1 import Series1
    from .necklace import tau
    from .witt import WittVector

    ring = _ring(cfg)
    N = _positive("n", cfg.n)
    if cfg.input:
        data = _load_json(cfg.input)
        if not isinstance(data, dict) or not isinstance(data.get("a"), list) or not data["a"]:
            raise InputError('expected {"a": [...]} with a non-empty list')
        coords = tuple(from_json_value(ring, v) for v in data["a"])
    else:
        coords = _random_vector(ring, N, random.Random(cfg.seed))
    x = WittVector(ring, coords)
    g = x.ghost()
    b = tau(x).coords
    f = Series1.from_witt(x).coeffs
    rows = [{"n": n, "a": _jv(ring, x.coords[n - 1]), "ghost": _jv(ring, g[n - 1]),
             "necklace": _jv(ring, b[n - 1]), "series": _jv(ring, f[n - 1])}
            for n in range(1, x.N + 1)]
    return Result(rows, True, {"ring": str(ring)})


def cmd_necklace_table(cfg: RunConfig) -> Result:
    from .necklace import m_vector

    ring = _ring(cfg)
    N = _positive("n", cfg.n)
    r_text = cfg.extra.get("r")
    base = ring.base if isinstance(ring, Binomial) else ring
    if r_text is None:
        r = base.gen(0) if isinstance(base, (FreeLambda, MultiPoly)) else ring.coerce(2)
    else:
        try:
            r = from_json_value(ring, json.loads(r_text) if r_text.strip().startswith("{") else r_text)
        except (ValueError, TypeError) as exc:
            raise InputError(f"bad --r value: {exc}") from None
    M = m_vector(ring, r, N).coords
    rows = [{"n": n, "M": _jv(ring, M[n - 1])} for n in range(1, N + 1)]
    return Result(rows, True, {"ring": str(ring), "r": _jv(ring, r)})


def cmd_plethysm_check(cfg: RunConfig) -> Result:
    from . import symfun as sf

    D = _positive("n", cfg.n)
    R = FreeLambda(D)
    p1, p2 = R.p(1), R.p(2)

    def geo(x):  # 1 / (1 - x)
        return sum((x ** k for k in range(D + 1)), R.zero())

    H, L, Lt = sf.h_series(R), sf.l_series(R), sf.ltilde_series(R)
    Es = sf.e_series_signed(R)
    E = sf.e_series(R)
    checks = [
        ("H o L = 1/(1-p1)", sf.plethysm(H, L), geo(p1)),
        ("H o Lt = 1/(1+p1)", sf.plethysm(H, Lt), geo(-p1)),
        ("exp(sum (-1)^n p_n/n) o L = (1-p1)/(1-p2)", sf.plethysm(Es, L), (1 - p1) * geo(p2)),
        ("exp(sum (-1)^n p_n/n) o Lt = (1+p1)/(1+p2)", sf.plethysm(Es, Lt), (1 + p1) * geo(-p2)),
        ("E o L = (1-p2)/(1-p1)", sf.plethysm(E, L), (1 - p2) * geo(p1)),
        ("A (*) B = A", sf.plethysm(H, sf.b_series(R)), sf.a_series(R)),
    ]
    for k in range(1, min(D, 6) + 1):
        checks.append((f"A (*) L({k}) = prod_(l|{k}) Psi^l A",
                       sf.plethysm(H, sf.lk_series(R, k)), sf.lk_expected(R, k)))
    rows = [{"identity": name, "pass": lhs == rhs} for name, lhs, rhs in checks]
    return Result(rows, all(r["pass"] for r in rows), {"degree": D})


def cmd_supersym(cfg: RunConfig) -> Result:
    from . import symfun as sf

    a, b = cfg.extra.get("a"), cfg.extra.get("b")
    if a is None or b is None or a < 0 or b < 0 or a + b < 1:
        raise InputError("--a and --b must be non-negative with a + b >= 1")
    N = _positive("n", cfg.n)
    R = sf.super_ring(a, b)
    fams = sf.supersym_generators(a, b, N)
    rows = []
    ok = True
    for name, vals in fams.items():
        for n, v in enumerate(vals, start=1):
            good = sf.is_supersymmetric(v, a, b)
            ok &= good
            rows.append({"family": name, "n": n, "supersymmetric": good, "value": _jv(R, v)})
    return Result(rows, ok, {"a": a, "b": b})


def _ingest_module(path, rank: int, cap: int):
    from .gradedlog import GradedSeries

    data = _load_json(path)
    if isinstance(data, dict):
        data = [data]
    if not isinstance(data, list):
        raise InputError("module file must hold a list of {alpha, parity, coeff} objects")
    terms: dict = {}
    for item in data:
        if not isinstance(item, dict) or not {"alpha", "parity", "coeff"} <= set(item):
            raise InputError(f"bad module entry {item!r}")
        alpha = item["alpha"]
        if (not isinstance(alpha, list) or len(alpha) != rank
                or not all(isinstance(x, int) and x >= 0 for x in alpha) or not any(alpha)):
            raise InputError(f"alpha must be {rank} non-negative integers, not all zero: {alpha!r}")
        if item["parity"] not in (0, 1):
            raise InputError(f"parity must be 0 or 1: {item['parity']!r}")
        try:
            c = parse_rational(item["coeff"])
        except ValueError as exc:
            raise InputError(str(exc)) from None
        key = (tuple(alpha), item["parity"])
        terms[key] = terms.get(key, 0) + c
    return GradedSeries(rank, cap, Rationals(), terms)


def cmd_freelie(cfg: RunConfig) -> Result:
    from . import gradedlog as gl

    rank = _positive("rank", cfg.rank)
    cap = _positive("cap", cfg.cap)
    path = cfg.extra.get("module") or cfg.input
    if not path:
        raise InputError("--module file.json is required")
    V = _ingest_module(path, rank, cap)
    L = gl.free_lie_dims(V)
    closed = gl.closed_formula_series(V)
    solved = gl.recursive_solver(V, "a").lie
    rows = []
    ok = True
    for idx in V.indices():
        v = L[idx]
        agree = closed[idx] == v and solved.get(idx, 0) == v
        ok &= agree
        if v or not agree:
            dim = -v if idx[1] else v
            rows.append({"alpha": list(idx[0]), "parity": idx[1], "coeff": format_rational(v),
                         "dim": format_rational(dim), "routes_agree": agree})
    return Result(rows, ok, {"rank": rank, "cap": cap})


def cmd_replicable_check(cfg: RunConfig) -> Result:
    from .replicable import NotReplicableError, QSeries, replicable_report

    if not cfg.input:
        raise InputError("--input series.json is required")
    try:
        F = QSeries.from_json(_load_json(cfg.input))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    order = cfg.extra.get("order") or F.N
    if order > F.N:
        raise InputError(f"--order {order} exceeds the {F.N} known coefficients")
    amax = cfg.extra.get("replicates")
    try:
        report = replicable_report(F, order, amax)
    except NotReplicableError as exc:
        return Result([], False, {"replicable": False, "error": str(exc)})
    rows = [{"violation": v} for v in report["violations"]]
    return Result(rows, report["replicable"],
                  {"replicable": report["replicable"], "replicates": report["replicates"]})


def cmd_moonshine_demo(cfg: RunConfig) -> Result:
    from . import gradedlog as gl
    from . import replicable as rp

    order = _positive("order", cfg.extra.get("order") or 24)
    J = rp.j_oracle(max(order, 108))
    rows = []

    def add(name, ok, detail=""):
        rows.append({"check": name, "pass": bool(ok), "detail": detail})

    add("c(1) = 196884", J(1) == 196884, str(J(1)))
    verdict, viol = rp.is_replicable(J, order)
    add(f"J replicable for mn <= {order}", verdict, f"{len(viol)} violations")
    reps = rp.extract_replicates(J, 3, 12, check_order=24)
    add("F^(2) = J to order 12", reps[2] == J.f[:12])
    add("F^(3) = J to order 12", reps[3] == J.f[:12])
    add("Norton (1) to bidegree (6,6)", rp.norton1_check(J, 12))
    add("Norton (2) to bidegree (6,6)", rp.norton2_check(J, 6, 6))
    add("H = W to m+n <= 10", rp.h_equals_w_check(J, 10))
    add("denominator identity to m+n <= 10", rp.monster_denominator_check(J, 10))
    L = gl.monster_recursion(J, 4, 4)
    add("[L_(m,n)] = c(mn) for m,n <= 4", all(L[(m, n)] == J(m * n) for (m, n) in L))
    return Result(rows, all(r["pass"] for r in rows), {"order": order})


def cmd_diagram_check(cfg: RunConfig) -> Result:
    from .lambda1 import Series1
    from .necklace import nr_ghost, s_tilde, tau, tau_inverse
    from .witt import WittVector

    ring = _ring(cfg)
    N = _positive("n", cfg.n)
    rng = random.Random(cfg.seed)
    rows = []
    for i in range(_positive("samples", cfg.samples)):
        x = WittVector(ring, _random_vector(ring, N, rng))
        b = tau(x)
        s = s_tilde(b)
        row = {
            "sample": i,
            "s~tau = E": s == Series1.from_witt(x),
            "phi~tau = ghost": nr_ghost(b) == x.ghost(),
            "dlog s~ = phi~": s.dlog() == nr_ghost(b),
            "tau^-1 tau = id": tau_inverse(b) == x,
        }
        rows.append(row)
    ok = all(all(v for k, v in r.items() if k != "sample") for r in rows)
    return Result(rows, ok, {"ring": str(ring), "n": N})


COMMANDS = {
    "witt-table": cmd_witt_table,
    "necklace-table": cmd_necklace_table,
    "plethysm-check": cmd_plethysm_check,
    "supersym": cmd_supersym,
    "freelie": cmd_freelie,
    "replicable-check": cmd_replicable_check,
    "moonshine-demo": cmd_moonshine_demo,
    "diagram-check": cmd_diagram_check,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", help="int, rat, free:D, poly:k or binom:<ring>")
    common.add_argument("--n", type=int, help="truncation length or degree")
    common.add_argument("--cap", type=int)
    common.add_argument("--rank", type=int)
    common.add_argument("--format", dest="fmt", choices=["json", "csv", "text"])
    common.add_argument("--input")
    common.add_argument("--output")
    common.add_argument("--seed", type=int)
    common.add_argument("--samples", type=int)

    parser = argparse.ArgumentParser(prog="wittlab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("witt-table", parents=[common])
    p = sub.add_parser("necklace-table", parents=[common])
    p.add_argument("--r")
    sub.add_parser("plethysm-check", parents=[common])
    p = sub.add_parser("supersym", parents=[common])
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p = sub.add_parser("freelie", parents=[common])
    p.add_argument("--module")
    p = sub.add_parser("replicable-check", parents=[common])
    p.add_argument("--order", type=int)
    p.add_argument("--replicates", type=int)
    p = sub.add_parser("moonshine-demo", parents=[common])
    p.add_argument("--order", type=int)
    sub.add_parser("diagram-check", parents=[common])
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    cfg = RunConfig.from_args(ns)
    try:
        result = COMMANDS[cfg.command](cfg)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (IntegralityError, TruncationError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = render(result, cfg.fmt)
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if result.ok else 1


if __name__ == "__main__":
    sys.exit(main())
