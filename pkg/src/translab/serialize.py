"""Canonical JSON text format for conditions, chains and certificates.

One self-describing UTF-8 format: canonical key order, labels as decimal
string keys in numeric order, leaf lists lex-sorted, mu as a pair-sorted
record list.  Round-trips are bit-exact and re-serialization is
idempotent, so counterexamples diff cleanly.
"""

from __future__ import annotations

import json
from typing import Any

from .arrange import ArrangementCertificate
from .chains import Chain
from .errors import ParseError
from .poset import Condition, FiniteTree, make_condition
from .words import Word


def _word_str(w: Word) -> str:
    return w.to_string()


def _parse_word(text: Any, path: str, expect_len: int | None = None) -> Word:
    if not isinstance(text, str) or any(ch not in "01" for ch in text):
        raise ParseError(f"{path}: expected a 0/1 string, got {text!r}")
    w = Word.from_string(text)
    if expect_len is not None and w.n != expect_len:
        raise ParseError(f"{path}: expected length {expect_len}, got {w.n}")
    return w


def _expect_keys(obj: Any, keys: list[str], path: str) -> None:
    if not isinstance(obj, dict):
        raise ParseError(f"{path}: expected an object")
    missing = [k for k in keys if k not in obj]
    extra = [k for k in obj if k not in keys]
    if missing or extra:
        raise ParseError(f"{path}: missing keys {missing}, unexpected keys {extra}")


def _expect_int(value: Any, path: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise ParseError(f"{path}: expected an integer, got {value!r}")
    return value


def condition_to_dict(p: Condition) -> dict:
    return {
        "kind": "condition",
        "u": list(p.u),
        "n": p.n,
        "m_star": p.m_star,
        "eta": {str(a): _word_str(p.eta[a]) for a in p.u},
        "trees": [
            sorted((_word_str(w) for w in t.leaves)) for t in p.trees
        ],
        "mu": [
            {"pair": list(pair), "rho": _word_str(rho), "ell": ell}
            for pair, (rho, ell) in sorted(p.mu.items())
        ],
        "K": {str(a): p.K[a] for a in p.u},
    }


def condition_from_dict(obj: Any, path: str = "condition") -> Condition:
    _expect_keys(obj, ["kind", "u", "n", "m_star", "eta", "trees", "mu", "K"], path)
    if obj["kind"] != "condition":
        raise ParseError(f"{path}.kind: expected 'condition', got {obj['kind']!r}")
    u = [_expect_int(a, f"{path}.u[{i}]") for i, a in enumerate(obj["u"])]
    n = _expect_int(obj["n"], f"{path}.n")
    m_star = _expect_int(obj["m_star"], f"{path}.m_star")

    eta = {}
    for key, text in obj["eta"].items():
        try:
            label = int(key)
        except ValueError:
            raise ParseError(f"{path}.eta: non-integer label key {key!r}") from None
        eta[label] = _parse_word(text, f"{path}.eta[{key}]", n)

    trees = []
    for m, leaf_list in enumerate(obj["trees"]):
        if not isinstance(leaf_list, list) or not leaf_list:
            raise ParseError(f"{path}.trees[{m}]: expected a nonempty leaf list")
        leaves = frozenset(
            _parse_word(t, f"{path}.trees[{m}][{i}]", n) for i, t in enumerate(leaf_list)
        )
        trees.append(FiniteTree(n, leaves))

    mu = {}
    for i, rec in enumerate(obj["mu"]):
        rpath = f"{path}.mu[{i}]"
        _expect_keys(rec, ["pair", "rho", "ell"], rpath)
        pair = rec["pair"]
        if not isinstance(pair, list) or len(pair) != 2:
            raise ParseError(f"{rpath}.pair: expected two labels")
        a = _expect_int(pair[0], f"{rpath}.pair[0]")
        b = _expect_int(pair[1], f"{rpath}.pair[1]")
        if a == b:
            raise ParseError(f"{rpath}.pair: labels must be distinct")
        mu[(a, b)] = (
            _parse_word(rec["rho"], f"{rpath}.rho", n),
            _expect_int(rec["ell"], f"{rpath}.ell"),
        )

    K = {}
    for key, val in obj["K"].items():
        try:
            label = int(key)
        except ValueError:
            raise ParseError(f"{path}.K: non-integer label key {key!r}") from None
        K[label] = _expect_int(val, f"{path}.K[{key}]")

    try:
        return make_condition(u, n, m_star, eta, trees, mu, K)
    except ValueError as exc:
        raise ParseError(f"{path}: {exc}") from None


def chain_to_dict(c: Chain) -> dict:
    stages = []
    for p in c.stages:
        d = condition_to_dict(p)
        del d["kind"]
        stages.append(d)
    return {"kind": "chain", "stages": stages}


def chain_from_dict(obj: Any) -> Chain:
    _expect_keys(obj, ["kind", "stages"], "chain")
    if obj["kind"] != "chain":
        raise ParseError(f"chain.kind: expected 'chain', got {obj['kind']!r}")
    if not isinstance(obj["stages"], list) or not obj["stages"]:
        raise ParseError("chain.stages: expected a nonempty list")
    stages = []
    for i, stage in enumerate(obj["stages"]):
        stage = dict(stage)
        stage.setdefault("kind", "condition")
        stages.append(condition_from_dict(stage, f"chain.stages[{i}]"))
    return Chain(tuple(stages))


def approximation_to_dict(g) -> dict:
    """Approximation snapshot in the condition field vocabulary."""
    labels = sorted(g.h)
    return {
        "kind": "approximation",
        "n": g.n,
        "h": {str(a): _word_str(g.h[a]) for a in labels},
        "T": [sorted(_word_str(w) for w in leaves) for leaves in g.T],
        "r": [
            {"pair": list(pair), "word": _word_str(w)} for pair, w in sorted(g.r.items())
        ],
    }


def approximation_from_dict(obj: Any):
    from .chains import GenericApproximation

    _expect_keys(obj, ["kind", "n", "h", "T", "r"], "approximation")
    if obj["kind"] != "approximation":
        raise ParseError(f"approximation.kind: expected 'approximation', got {obj['kind']!r}")
    n = _expect_int(obj["n"], "approximation.n")
    h = {}
    for key, text in obj["h"].items():
        try:
            label = int(key)
        except ValueError:
            raise ParseError(f"approximation.h: non-integer label key {key!r}") from None
        h[label] = _parse_word(text, f"approximation.h[{key}]", n)
    T = []
    for m, leaf_list in enumerate(obj["T"]):
        if not isinstance(leaf_list, list):
            raise ParseError(f"approximation.T[{m}]: expected a leaf list")
        T.append(
            frozenset(
                _parse_word(t, f"approximation.T[{m}][{i}]", n)
                for i, t in enumerate(leaf_list)
            )
        )
    r = {}
    for i, rec in enumerate(obj["r"]):
        rpath = f"approximation.r[{i}]"
        _expect_keys(rec, ["pair", "word"], rpath)
        a = _expect_int(rec["pair"][0], f"{rpath}.pair[0]")
        b = _expect_int(rec["pair"][1], f"{rpath}.pair[1]")
        r[(a, b) if a < b else (b, a)] = _parse_word(rec["word"], f"{rpath}.word", n)
    return GenericApproximation(n=n, h=h, T=tuple(T), r=r)


def certificate_to_dict(cert: ArrangementCertificate) -> dict:
    return {
        "kind": "certificate",
        "ell": cert.ell,
        "branch": cert.branch,
        "origin": None if cert.origin is None else _word_str(cert.origin),
        "members": sorted((_word_str(w) for w in cert.members)),
        "arrangement": [_word_str(w) for w in cert.arrangement],
    }


def certificate_from_dict(obj: Any) -> ArrangementCertificate:
    _expect_keys(obj, ["kind", "ell", "branch", "origin", "members", "arrangement"], "certificate")
    if obj["kind"] != "certificate":
        raise ParseError(f"certificate.kind: expected 'certificate', got {obj['kind']!r}")
    ell = _expect_int(obj["ell"], "certificate.ell")
    members = frozenset(
        _parse_word(t, f"certificate.members[{i}]", ell) for i, t in enumerate(obj["members"])
    )
    arrangement = [
        _parse_word(t, f"certificate.arrangement[{i}]", ell)
        for i, t in enumerate(obj["arrangement"])
    ]
    if len(arrangement) != 4:
        raise ParseError("certificate.arrangement: expected exactly four words")
    origin = None if obj["origin"] is None else _parse_word(obj["origin"], "certificate.origin", ell)
    branch = obj["branch"]
    if branch not in ("staged", "zero-set"):
        raise ParseError(f"certificate.branch: unknown branch {branch!r}")
    return ArrangementCertificate(
        ell=ell,
        members=members,
        arrangement=tuple(arrangement),  # type: ignore[arg-type]
        branch=branch,
        origin=origin,
    )


def dumps(obj) -> str:
    """Canonical text for a Condition, Chain, ArrangementCertificate or
    GenericApproximation."""
    from .chains import GenericApproximation

    if isinstance(obj, Condition):
        d = condition_to_dict(obj)
    elif isinstance(obj, Chain):
        d = chain_to_dict(obj)
    elif isinstance(obj, ArrangementCertificate):
        d = certificate_to_dict(obj)
    elif isinstance(obj, GenericApproximation):
        d = approximation_to_dict(obj)
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    return json.dumps(d, indent=2) + "\n"


def loads(text: str):
    """Parse canonical text back into its object, dispatching on 'kind'."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ParseError("top level: expected an object with a 'kind' field")
    kind = obj["kind"]
    if kind == "condition":
        return condition_from_dict(obj)
    if kind == "chain":
        return chain_from_dict(obj)
    if kind == "certificate":
        return certificate_from_dict(obj)
    if kind == "approximation":
        return approximation_from_dict(obj)
    raise ParseError(f"top level: unknown kind {kind!r}")


def load_condition(text: str) -> Condition:
    obj = loads(text)
    if not isinstance(obj, Condition):
        raise ParseError(f"expected a condition file, found {type(obj).__name__}")
    return obj


def load_chain(text: str) -> Chain:
    obj = loads(text)
    if not isinstance(obj, Chain):
        raise ParseError(f"expected a chain file, found {type(obj).__name__}")
    return obj
