"""Command-line surface: validation, construction, scans and lemma drivers.

Every subcommand prints one machine-readable JSON report to stdout.  With
equal seeds and arguments the report is byte-identical except for the
timing fields.  Exit codes: 0 pass, 1 violation or rejection, 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from pathlib import Path

from . import arrange, chains, generators, poset, serialize, translate
from .errors import ClaimViolation, LemmaViolation, ParseError, StabilityError

ENV_SEED = "TRANSLAB_SEED"


def _default_seed() -> int:
    try:
        return int(os.environ.get(ENV_SEED, "0"))
    except ValueError:
        return 0


def _emit(report: dict) -> None:
    print(json.dumps(report, indent=2))


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def _cmd_validate(args) -> int:
    p = serialize.load_condition(_read(args.file))
    t0 = time.perf_counter()
    violations = poset.validate(p)
    report = {
        "command": "validate",
        "file": args.file,
        "status": "pass" if not violations else "violation",
        "violations": [{"clause": v.clause, "detail": v.detail} for v in violations],
        "elapsed_s": round(time.perf_counter() - t0, 6),
    }
    _emit(report)
    return 0 if not violations else 1


def _cmd_extend(args) -> int:
    p = serialize.load_condition(_read(args.file))
    t0 = time.perf_counter()
    try:
        q = poset.extend(p, args.label, args.min_n, args.min_m)
    except ValueError as exc:
        _emit({"command": "extend", "status": "rejected", "reason": str(exc)})
        return 1
    _write(args.out, serialize.dumps(q))
    report = {
        "command": "extend",
        "status": "pass",
        "out": args.out,
        "u": list(q.u),
        "n": q.n,
        "m_star": q.m_star,
        "above_input": poset.leq(p, q, assume_valid=True),
        "elapsed_s": round(time.perf_counter() - t0, 6),
    }
    _emit(report)
    return 0


def _cmd_amalgamate(args) -> int:
    p = serialize.load_condition(_read(args.file1))
    q = serialize.load_condition(_read(args.file2))
    t0 = time.perf_counter()
    try:
        r = poset.amalgamate(p, q)
    except ValueError as exc:
        _emit({"command": "amalgamate", "status": "rejected", "reason": str(exc)})
        return 1
    _write(args.out, serialize.dumps(r))
    report = {
        "command": "amalgamate",
        "status": "pass",
        "out": args.out,
        "u": list(r.u),
        "n": r.n,
        "m_star": r.m_star,
        "above_first": poset.leq(p, r, assume_valid=True),
        "above_second": poset.leq(q, r, assume_valid=True),
        "elapsed_s": round(time.perf_counter() - t0, 6),
    }
    _emit(report)
    return 0


def _cmd_chain(args) -> int:
    labels = [int(tok) for tok in args.labels.split(",") if tok]
    t0 = time.perf_counter()
    chain = chains.build_chain(labels, args.target_n, seed=args.seed)
    try:
        chains.approximation(chain, assume_valid=True)
        stability = "pass"
        code = 0
    except StabilityError as exc:
        stability = str(exc)
        code = 1
    _write(args.out, serialize.dumps(chain))
    top = chain.last()
    report = {
        "command": "chain",
        "status": "pass" if code == 0 else "violation",
        "seed": args.seed,
        "out": args.out,
        "stages": len(chain.stages),
        "final_u": list(top.u),
        "final_n": top.n,
        "final_m_star": top.m_star,
        "stability": stability,
        "elapsed_s": round(time.perf_counter() - t0, 6),
    }
    _emit(report)
    return code


def _cmd_witnesses(args) -> int:
    chain = serialize.load_chain(_read(args.file))
    try:
        alpha, beta = (int(tok) for tok in args.pair.split(","))
    except ValueError:
        raise ParseError(f"--pair expects 'a,b', got {args.pair!r}") from None
    t0 = time.perf_counter()
    g = chains.approximation(chain)
    try:
        ws = chains.intersection_witnesses(g, alpha, beta)
    except ClaimViolation as exc:
        _emit({"command": "witnesses", "status": "violation", "detail": str(exc)})
        return 1
    report = {
        "command": "witnesses",
        "status": "pass",
        "pair": [alpha, beta],
        "witnesses": [
            {
                "word": w.to_string(),
                "first_side": {"tree": ws.certificates[w][0][0], "leaf": ws.certificates[w][0][1].to_string()},
                "second_side": {"tree": ws.certificates[w][1][0], "leaf": ws.certificates[w][1][1].to_string()},
            }
            for w in ws.words
        ],
        "elapsed_s": round(time.perf_counter() - t0, 6),
    }
    _emit(report)
    return 0


def _cmd_scan_sums(args) -> int:
    p = serialize.load_condition(_read(args.file))
    t0 = time.perf_counter()
    condition_violations = poset.validate(p)
    reports = poset.scan_equal_sums(p, assume_valid=True)
    bad = [r for r in reports if not r.certified]
    report = {
        "command": "scan-sums",
        "status": "pass" if not bad else "violation",
        "condition_valid": not condition_violations,
        "pairings": len(reports),
        "certified": len(reports) - len(bad),
        "violations": [
            {
                "sum": r.total.to_string(),
                "pair0": [w.to_string() for w in r.pair0],
                "pair1": [w.to_string() for w in r.pair1],
                "detail": r.violation,
            }
            for r in bad
        ],
        "elapsed_s": round(time.perf_counter() - t0, 6),
    }
    _emit(report)
    return 0 if not bad else 1


def _cmd_scan_triangles(args) -> int:
    p = serialize.load_condition(_read(args.file))
    t0 = time.perf_counter()
    condition_violations = poset.validate(p)
    hit = chains.triangle_scan(p)
    report = {
        "command": "scan-triangles",
        "status": "pass" if hit is None else "violation",
        "condition_valid": not condition_violations,
        "counterexample": None
        if hit is None
        else {
            "sums": [w.to_string() for w in hit.sums],
            "kinds": list(hit.kinds),
        },
        "elapsed_s": round(time.perf_counter() - t0, 6),
    }
    _emit(report)
    return 0 if hit is None else 1


def _cmd_lemma2(args) -> int:
    rng = random.Random(args.seed)
    runs = []
    failures = 0
    for i in range(args.runs):
        sub_seed = rng.getrandbits(32)
        coloring = arrange.gen_star_coloring(args.ell, args.strategy, seed=sub_seed)
        t0 = time.perf_counter()
        entry = {"run": i, "seed": sub_seed}
        try:
            cert = arrange.extract_homogeneous(coloring)
            problems = arrange.verify_certificate(cert, coloring)
            if problems:
                failures += 1
                entry.update(status="violation", problems=problems)
            else:
                entry.update(
                    status="pass",
                    branch=cert.branch,
                    members=len(cert.members),
                    arrangement=[w.to_string() for w in cert.arrangement],
                )
        except LemmaViolation as exc:
            failures += 1
            entry.update(status="violation", detail=str(exc))
        entry["elapsed_s"] = round(time.perf_counter() - t0, 6)
        runs.append(entry)
    report = {
        "command": "lemma2",
        "status": "pass" if failures == 0 else "violation",
        "ell": args.ell,
        "strategy": args.strategy,
        "seed": args.seed,
        "runs": args.runs,
        "failures": failures,
        "results": runs,
    }
    _emit(report)
    return 0 if failures == 0 else 1


def _cmd_lemma3(args) -> int:
    rng = random.Random(args.seed)
    t0 = time.perf_counter()
    matches = 0
    failures = []
    for i in range(args.runs):
        members, basis, x = generators.translation_instance(rng, max_n=args.max_n)
        try:
            recovered = translate.recover_translation(members, basis)
            oracle = translate.brute_translation(members, basis)
            if recovered == x and oracle == {recovered}:
                matches += 1
            else:
                failures.append(
                    {
                        "run": i,
                        "expected": x.to_string(),
                        "recovered": recovered.to_string(),
                        "oracle": sorted(w.to_string() for w in oracle),
                    }
                )
        except (ValueError, LemmaViolation) as exc:
            failures.append({"run": i, "error": str(exc)})
    report = {
        "command": "lemma3",
        "status": "pass" if matches == args.runs else "violation",
        "seed": args.seed,
        "runs": args.runs,
        "max_n": args.max_n,
        "matches": matches,
        "failures": failures,
        "elapsed_s": round(time.perf_counter() - t0, 6),
    }
    _emit(report)
    return 0 if matches == args.runs else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="translab",
        description="Verification lab for the condition poset over binary words",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="clause-by-clause condition check")
    s.add_argument("file")
    s.set_defaults(fn=_cmd_validate)

    s = sub.add_parser("extend", help="density step: absorb a label, meet thresholds")
    s.add_argument("file")
    s.add_argument("--label", type=int, required=True)
    s.add_argument("--min-n", type=int, default=0)
    s.add_argument("--min-m", type=int, default=0)
    s.add_argument("-o", "--out", required=True)
    s.set_defaults(fn=_cmd_extend)

    s = sub.add_parser("amalgamate", help="common upper bound of an aligned pair")
    s.add_argument("file1")
    s.add_argument("file2")
    s.add_argument("-o", "--out", required=True)
    s.set_defaults(fn=_cmd_amalgamate)

    s = sub.add_parser("chain", help="build a chain and check stability")
    s.add_argument("--labels", required=True, help="comma-separated labels")
    s.add_argument("--target-n", type=int, required=True)
    s.add_argument("--seed", type=int, default=_default_seed())
    s.add_argument("-o", "--out", required=True)
    s.set_defaults(fn=_cmd_chain)

    s = sub.add_parser("witnesses", help="four certified intersection witnesses")
    s.add_argument("file")
    s.add_argument("--pair", required=True, help="two labels, e.g. 5,9")
    s.set_defaults(fn=_cmd_witnesses)

    s = sub.add_parser("scan-sums", help="equal-sum quadruple certification")
    s.add_argument("file")
    s.set_defaults(fn=_cmd_scan_sums)

    s = sub.add_parser("scan-triangles", help="color-0 triangle impossibility scan")
    s.add_argument("file")
    s.set_defaults(fn=_cmd_scan_triangles)

    s = sub.add_parser("lemma2", help="homogeneous-set extraction driver")
    s.add_argument("--ell", type=int, default=16)
    s.add_argument("--strategy", choices=arrange.STRATEGIES, default="matching")
    s.add_argument("--seed", type=int, default=_default_seed())
    s.add_argument("--runs", type=int, default=100)
    s.set_defaults(fn=_cmd_lemma2)

    s = sub.add_parser("lemma3", help="translation recovery vs brute oracle")
    s.add_argument("--runs", type=int, default=1000)
    s.add_argument("--seed", type=int, default=_default_seed())
    s.add_argument("--max-n", type=int, default=24)
    s.set_defaults(fn=_cmd_lemma3)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"file error: {exc}", file=sys.stderr)
        return 2
    except (ClaimViolation, LemmaViolation, StabilityError) as exc:
        _emit({"command": args.command, "status": "violation", "detail": str(exc)})
        return 1
    except ValueError as exc:
        _emit({"command": args.command, "status": "rejected", "reason": str(exc)})
        return 1


if __name__ == "__main__":
    sys.exit(main())
