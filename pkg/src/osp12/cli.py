"""Command line front end.

    osp12 weights P Q
    osp12 zhu P Q
    osp12 fuse P Q M1 S1 M2 S2
    osp12 table P Q
    osp12 verify --suite {pq,factorization,projection,singular,oracle,all}

Every command takes ``--format {json,csv,tex}``.  Exit codes: 0 ok, 1 an
asserted check failed, 2 invalid input, 3 closed form and oracle disagree.
The worker count for sweeps comes from ``--workers`` or ``OSP12_WORKERS``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import Any, List, Optional

from .admissible import AdmissiblePair, AdmissibleWeight, InvalidPair, valid_pairs, vacuum_polynomial
from .exactmath import fmt_rational
from .fusion import ClosureViolation, FusionMismatch, fuse_closed, fuse_oracle, fusion_table, ring_checks
from .zhu import is_squarefree

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_MISMATCH = 0, 1, 2, 3
SUITES = ("pq", "factorization", "projection", "singular", "oracle")


class UsageError(Exception):
    pass


@dataclass
class Report:
    command: str
    pair: Optional[AdmissiblePair]
    payload: Any
    status: str
    rows: List[dict] = field(default_factory=list)  # flat view for csv / tex
    columns: List[str] = field(default_factory=list)  # used when rows is empty

    def as_json(self) -> dict:
        return {
            "p": self.pair.p if self.pair else None,
            "q": self.pair.q if self.pair else None,
            "level": fmt_rational(self.pair.level) if self.pair else None,
            "command": self.command,
            "payload": self.payload,
            "status": self.status,
        }


def _weight_json(w: AdmissibleWeight) -> dict:
    return {"m": w.m, "s": w.s, "j": fmt_rational(w.j)}


def _pair(p, q) -> AdmissiblePair:
    return AdmissiblePair(p, q)


def _weight(pair, m, s) -> AdmissibleWeight:
    try:
        return AdmissibleWeight(m, s, pair)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# -- commands


def cmd_weights(args) -> Report:
    pair = _pair(args.p, args.q)
    ws = [_weight_json(w) for w in pair.weights]
    return Report("weights", pair, {"level": fmt_rational(pair.level), "weights": ws}, "report-only", ws)


def cmd_zhu(args) -> Report:
    pair = _pair(args.p, args.q)
    f = vacuum_polynomial(pair)
    sf = is_squarefree(f)
    payload = {"polynomial": f.to_str("t"), "degree": f.degree, "squarefree": sf,
               "roots": [fmt_rational(w.j) for w in pair.weights]}
    rows = [{"polynomial": payload["polynomial"], "degree": f.degree, "squarefree": sf}]
    return Report("zhu", pair, payload, "pass" if sf else "fail", rows)


def cmd_fuse(args) -> Report:
    pair = _pair(args.p, args.q)
    w1, w2 = _weight(pair, args.m1, args.s1), _weight(pair, args.m2, args.s2)
    closed = fuse_closed(pair, w1, w2)
    oracle = fuse_oracle(pair, w1, w2)
    agree = closed == oracle
    payload = {
        "w1": _weight_json(w1),
        "w2": _weight_json(w2),
        "summands": [_weight_json(w) for w in closed.summands],
        "oracle": [_weight_json(w) for w in oracle.summands],
        "agree": agree,
    }
    if not agree:
        raise FusionMismatch(f"pair={pair} w1={w1.ms} w2={w2.ms}: closed={closed.ms_list()} oracle={oracle.ms_list()}")
    rows = [dict(w, source="closed") for w in payload["summands"]] + [dict(w, source="oracle") for w in payload["oracle"]]
    return Report("fuse", pair, payload, "pass", rows, ["m", "s", "j", "source"])


EMPTY = "\u2205"


def _ms(ms):
    return f"({ms[0]},{ms[1]})"


def cmd_table(args) -> Report:
    pair = _pair(args.p, args.q)
    table = fusion_table(pair, workers=args.workers)
    ws = pair.weights
    checks = ring_checks(pair)
    cells = [[[list(w.ms) for w in cell.summands] for cell in row] for row in table]
    ring = {k: {"ok": v["ok"], "asserted": v["asserted"], "failures": v["failures"]} for k, v in checks.items()}
    ok = all(v["ok"] for v in checks.values() if v["asserted"])
    payload = {"weights": [_weight_json(w) for w in ws], "cells": cells, "ring_checks": ring}
    rows = []
    for a, row in zip(ws, table):
        for b, cell in zip(ws, row):
            rows.append({"w1": _ms(a.ms), "w2": _ms(b.ms), "product": " + ".join(_ms(w.ms) for w in cell.summands) or EMPTY})
    return Report("table", pair, payload, "pass" if ok else "fail", rows)


# -- verify suites; each returns a list of check lines


def _line(suite, instance, status, asserted=True, detail=""):
    return {"suite": suite, "instance": instance, "status": status, "asserted": asserted, "detail": detail}


def suite_pq(args) -> List[dict]:
    from .pbw import UG, pq, verify_pq_identities

    lines = []
    for alg in ("U(g)", "U(L0)"):
        for c in verify_pq_identities(alg):
            lines.append(_line("pq", f"{alg} {c.name} {c.instance}", "pass" if c.ok else "fail", True, c.detail))
    # the printed form of the f^g Q rule, kept as a report-only line
    f = UG.gen("f")
    bad = sum(1 for g in range(1, 7) if f ** g * pq(1, "Q") != pq(1 - g, "P") * f ** g)
    lines.append(_line("pq", "U(g) printed f^g Q(a)=P(a-g) f^g, a=1, g=1..6",
                       "fail" if bad else "pass", False, f"{bad} of 6 instances fail"))
    return lines


def suite_factorization(args) -> List[dict]:
    from .pbw import xy_power_factorization

    out = []
    for a in range(1, args.max_a + 1):
        c = xy_power_factorization(a)
        out.append(_line("factorization", c.instance, "pass" if c.ok else "fail", True, c.detail))
    return out


def suite_projection(args) -> List[dict]:
    from .pbw import verify_projection

    out = []
    for pair in valid_pairs(max_pq=args.max_pq or 32):
        for w in pair.weights:
            for which in ("F1", "F2"):
                for target in ("pi", "pi1"):
                    r = verify_projection(pair, w.m, w.s, which, target)
                    inst = f"{pair} ({w.m},{w.s}) {which} {target} word={r.word}"
                    detail = r.detail or (f"source={r.source} literal_equal={r.literal_equal}" if r.source else "")
                    out.append(_line("projection", inst, r.status, r.status != "skipped", detail))
    return out


def suite_singular(args) -> List[dict]:
    from .pbw import mff_word
    from .verma import DepthOverflow, VermaConfig, is_singular, remark_maximal_check, singular_vector, vector_drop

    out = []
    depth = args.depth
    for pair in valid_pairs(max_pq=args.max_pq or 81):
        for w in pair.weights:
            for which in ("F1", "F2"):
                word = mff_word(pair, w.m, w.s, which)
                inst = f"{pair} ({w.m},{w.s}) {which} word={word.to_str()}"
                if not word.integer_instance:
                    out.append(_line("singular", inst, "skipped", False, "fractional - out of scope"))
                    continue
                if word.t_degree > depth:
                    out.append(_line("singular", inst, "skipped", False, f"t-degree {word.t_degree} > {depth}"))
                    continue
                cfg = VermaConfig(pair.level, w.j, "verma", depth)
                try:
                    v = singular_vector(cfg, pair, w.m, w.s, which)
                except DepthOverflow as exc:
                    out.append(_line("singular", inst, "skipped", False, str(exc)))
                    continue
                ok = bool(v) and is_singular(cfg, v) and vector_drop(v) == word.h_weight_drop()
                detail = "" if ok else ("zero vector" if not v else "not annihilated by N+")
                if not word.literal:
                    detail = (detail + "; " if detail else "") + "half-integral A in y(y^2)^A"
                out.append(_line("singular", inst, "pass" if ok else "fail", True, detail))
        if pair.q == 1 and (pair.p - 1) // 2 <= depth:
            r = remark_maximal_check(pair, depth)
            out.append(_line("singular", f"{pair} remark F1(1,0)1=0, F2(1,0)1 singular", r["status"],
                             r["status"] != "fractional", ""))
    return out


def suite_oracle(args) -> List[dict]:
    out = []
    for pair in valid_pairs(max_pq=args.max_pq or 81):
        try:
            fusion_table(pair, workers=args.workers)
            out.append(_line("oracle", str(pair), "pass"))
        except (FusionMismatch, ClosureViolation) as exc:
            out.append(_line("oracle", str(pair), "fail", True, str(exc)))
    return out


def cmd_verify(args) -> Report:
    suites = SUITES if args.suite == "all" else (args.suite,)
    runners = {"pq": suite_pq, "factorization": suite_factorization, "projection": suite_projection,
               "singular": suite_singular, "oracle": suite_oracle}
    lines = []
    for s in suites:
        lines += runners[s](args)
    summary = {}
    for ln in lines:
        key = ln["suite"]
        d = summary.setdefault(key, {"pass": 0, "fail": 0, "skipped": 0, "report_only_fail": 0})
        if ln["status"] == "fail" and not ln["asserted"]:
            d["report_only_fail"] += 1
        else:
            d[ln["status"] if ln["status"] in d else "fail"] += 1
    failed = any(ln["status"] == "fail" and ln["asserted"] for ln in lines)
    payload = {"suite": args.suite, "summary": summary, "lines": lines}
    return Report("verify", None, payload, "fail" if failed else "pass", lines,
                  ["suite", "instance", "status", "asserted", "detail"])


# -- rendering


def _tex_escape(s: str) -> str:
    return str(s).replace("\\", r"\textbackslash{}").replace("_", r"\_").replace("&", r"\&").replace("%", r"\%") \
        .replace("^", r"\^{}").replace("#", r"\#")


def _tex_value(v) -> str:
    s = str(v)
    if s == EMPTY:
        return r"$\emptyset$"
    if "/" in s and s.replace("/", "").lstrip("-").isdigit():
        num, den = s.split("/")
        sign = "-" if num.startswith("-") else ""
        return f"${sign}\\frac{{{num.lstrip('-')}}}{{{den}}}$"
    return _tex_escape(s)


def render(rep: Report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rep.as_json(), indent=2) + "\n"
    rows = rep.rows
    cols = list(rows[0]) if rows else list(rep.columns)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue()
    head = f"% {rep.command}" + (f" p={rep.pair.p} q={rep.pair.q} level={fmt_rational(rep.pair.level)}" if rep.pair else "")
    out = [head, f"% status: {rep.status}", "\\begin{tabular}{" + "l" * max(1, len(cols)) + "}", "\\hline"]
    out.append(" & ".join(_tex_escape(c) for c in cols) + r" \\")
    out.append("\\hline")
    for r in rows:
        out.append(" & ".join(_tex_value(r[c]) for c in cols) + r" \\")
    out += ["\\hline", "\\end{tabular}"]
    return "\n".join(out) + "\n"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="osp12", description="Admissible-level affine osp(1|2): weights, Zhu data, fusion, verification.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "csv", "tex"), default="json")
        p.add_argument("--workers", type=int, default=None, help="worker threads (default: $OSP12_WORKERS or 1)")

    for name in ("weights", "zhu", "table"):
        p = sub.add_parser(name)
        p.add_argument("p", type=int)
        p.add_argument("q", type=int)
        common(p)
    p = sub.add_parser("fuse")
    for a in ("p", "q", "m1", "s1", "m2", "s2"):
        p.add_argument(a, type=int)
    common(p)
    p = sub.add_parser("verify")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--max-pq", type=int, default=None, help="pair bound p*q (projection: 32, singular/oracle: 81)")
    p.add_argument("--depth", type=int, default=6)
    p.add_argument("--max-a", type=int, default=8)
    common(p)
    return ap


COMMANDS = {"weights": cmd_weights, "zhu": cmd_zhu, "fuse": cmd_fuse, "table": cmd_table, "verify": cmd_verify}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        rep = COMMANDS[args.command](args)
    except InvalidPair as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (FusionMismatch, ClosureViolation) as exc:
        print(f"theorem check mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    try:
        sys.stdout.write(render(rep, args.format))
        sys.stdout.flush()
    except BrokenPipeError:
        sys.stderr.close()
    return EXIT_FAIL if rep.status == "fail" else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
