"""Command-line front end.

One JSON job document per run, read from a file or stdin::

    {"command": "orbits",
     "pair": {"root_system": {"family": "A", "rank": 2, "realization": "gl_n", "n": 3},
              "involution": "galois-split"},
     "options": {"budget": 51840}}

Commands: roots, weyl, orbits, star, distinction, langlands, oracle.
Exit codes: 0 ok, 2 parse/input error, 3 budget refusal, 4 precondition.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import __version__, wire
from .chars import is_dominant, weyl_orbit_equivalent
from .distinction import ORBIT_COUNT_LABEL, check_distinction
from .errors import BudgetExceeded, InputError, SymmPairError
from .langlands import (
    LanglandsParameter, check_conj_symmetry, contragredient_param, dominant_representative,
    theta_twist_param,
)
from .normalspace import gl_root, gln_oracle, normal_multiset, sym_eigen_count
from .pairs import galois_split_pair, verify_star
from .rootsys import gl, standard_parabolics
from .sampling import random_dominant_character
from .weyl import (
    DEFAULT_BUDGET, enumerate_weyl, from_permutation, longest_element, twisted_involutions,
    weyl_group_order,
)

COMMANDS = ("roots", "weyl", "orbits", "star", "distinction", "langlands", "oracle")
ORBIT_CAVEAT = (
    "twisted involutions represent orbits on Q'; for a proper open subgroup H the "
    "orbit count can exceed this by the index of H"
)


def _word(w) -> str:
    return "".join(f"s{i}" for i in w.word) or "e"


def _pair(job):
    return wire.pair_from_doc(job.get("pair") or _fail("job needs a 'pair' document"))


def _fail(msg):
    raise InputError(msg)


def _rs(job):
    if "pair" in job:
        return _pair(job).rs
    if "root_system" in job:
        return wire.root_system_from_doc(job["root_system"])
    _fail("job needs a 'pair' or 'root_system' document")


def cmd_roots(job, opts):
    rs = _rs(job)
    roots = [wire.root_to_doc(rs, k) for k in range(len(rs.roots))]
    for r, k in zip(roots, range(len(rs.roots))):
        r["positive"] = rs.is_positive_index(k)
    parabolics = standard_parabolics(rs)
    doc = {
        "root_system": wire.root_system_to_doc(rs),
        "rank": rs.rank,
        "ambient_dim": rs.ambient_dim,
        "form": [wire.vector(r) for r in rs.form],
        "rho2": wire.vector(rs.rho2),
        "roots": roots,
        "standard_parabolics": [
            {"F": sorted(p.F), "sigma_F": len(p.sigma_F), "n_F": len(p.n_F), "n_MF": len(p.n_MF),
             "a_F_dim": p.a_F_dim, "a_MF_dim": p.a_MF_dim}
            for p in parabolics
        ],
    }
    rows = [("#", "coords", "simple", "positive")] + [
        (r["index"], r["coords"], r["simple"], r["positive"]) for r in roots
    ]
    return doc, rows


def cmd_weyl(job, opts):
    rs = _rs(job)
    order = weyl_group_order(rs)
    w0 = longest_element(rs)
    doc = {"root_system": wire.root_system_to_doc(rs), "order": order,
           "longest_element": wire.weyl_element_to_doc(w0)}
    rows = [("order", order), ("w0", _word(w0)), ("length(w0)", w0.length)]
    if opts.get("list_elements"):
        elements = enumerate_weyl(rs, opts["budget"])
        doc["elements"] = [wire.weyl_element_to_doc(w) for w in elements]
        rows = [("word", "length")] + [(_word(w), w.length) for w in elements]
    return doc, rows


def cmd_orbits(job, opts):
    pair = _pair(job)
    tws = twisted_involutions(pair.rs, pair.theta, opts["budget"])
    items = []
    rows = [("w", "length", "|S|")]
    for tw in tws:
        S = normal_multiset(pair, tw)
        items.append({**wire.weyl_element_to_doc(tw.element), "normal_dimension": S.dimension})
        rows.append((_word(tw.element), tw.element.length, S.dimension))
    doc = {"count": len(tws), "count_label": ORBIT_COUNT_LABEL, "caveat": ORBIT_CAVEAT,
           "twisted_involutions": items}
    return doc, rows


def cmd_star(job, opts):
    pair = _pair(job)
    report = verify_star(pair, opts["budget"])
    items = []
    rows = [("w", "|S1|", "|S2|", "|S3|", "S3 sum", "holds")]
    for e in report.entries:
        s1, s2, s3 = e.sizes
        items.append({"w": wire.weyl_element_to_doc(e.involution.element), "S1": s1, "S2": s2,
                      "S3": s3, "S3_sum": wire.vector(e.s3_sum), "holds": e.holds})
        rows.append((_word(e.involution.element), s1, s2, s3, wire.vector(e.s3_sum), e.holds))
    return {"holds": report.holds, "entries": items}, rows


def _distinction_doc(pair, chi, opts):
    report = check_distinction(pair, chi, opts["budget"])
    items = []
    for e in report.entries:
        item = {
            "w": wire.weyl_element_to_doc(e.involution.element),
            "normal_multiset": [
                {"root": e.multiset.pair.rs.coefficients[n.root_index], "multiplicity": n.multiplicity}
                for n in e.multiset.entries
            ],
            "folded_vectors": [list(v) for v in e.multiset.folded_coordinates],
            "tau_simple": wire.vector(e.tau_coordinates),
            "solutions": [list(s) for s in e.solutions],
            "feasible": e.feasible,
            "symmetric": e.symmetric,
            "sym_dimension": e.sym_dimension,
        }
        if opts.get("k_max") is not None:
            item["sym_counts"] = sym_eigen_count(pair, e.involution, chi, int(opts["k_max"]))
        items.append(item)
    doc = {"character": wire.character_to_doc(chi, True), "feasible_count": report.feasible_count,
           "orbit_count": report.orbit_count, "orbit_count_label": ORBIT_COUNT_LABEL,
           "entries": items}
    return doc, report


def cmd_distinction(job, opts):
    pair = _pair(job)
    rows = [("w", "|S|", "feasible", "symmetric", "sym_dim")]
    if "character" in job:
        chi = wire.character_from_doc(job["character"], pair.rs.ambient_dim)
        doc, report = _distinction_doc(pair, chi, opts)
        for e in report.entries:
            rows.append((_word(e.involution.element), e.multiset.dimension,
                         e.feasible, e.symmetric, e.sym_dimension))
        return doc, rows
    samples = int(opts.get("samples") or 0)
    if not samples:
        _fail("distinction needs a 'character' or options.samples > 0")
    rng = random.Random(opts["seed"])
    docs = []
    rows = [("sample", "feasible_count", "orbit_count")]
    for i in range(samples):
        chi = random_dominant_character(pair.rs, rng)
        doc, report = _distinction_doc(pair, chi, opts)
        docs.append(doc)
        rows.append((i, report.feasible_count, report.orbit_count))
    return {"samples": docs}, rows


def cmd_langlands(job, opts):
    pair = _pair(job)
    rs, budget = pair.rs, opts["budget"]
    chi = wire.character_from_doc(_require_key(job, "character"), rs.ambient_dim)
    p, w = dominant_representative(rs, chi, budget)
    contra = contragredient_param(rs, p)
    twist = theta_twist_param(rs, pair.theta, p, budget)
    sym, witness = check_conj_symmetry(rs, pair.theta, p, budget)
    equivalent = weyl_orbit_equivalent(rs, contra.chi, twist.chi, budget)
    doc = {
        "input_dominant": is_dominant(rs, chi),
        "parameter": wire.character_to_doc(p.chi, True),
        "normalizing_element": wire.weyl_element_to_doc(w),
        "contragredient": wire.character_to_doc(contra.chi, True),
        "theta_twist": wire.character_to_doc(twist.chi, True),
        "conj_symmetric": sym,
        "symmetry_witness": wire.weyl_element_to_doc(witness) if witness else None,
        "contragredient_equivalent_to_twist": equivalent,
    }
    rows = [
        ("parameter", wire.character_to_doc(p.chi)),
        ("normalized by", _word(w)),
        ("contragredient", wire.character_to_doc(contra.chi)),
        ("theta twist", wire.character_to_doc(twist.chi)),
        ("conj symmetric", sym if not witness else f"True via {_word(witness)}"),
        ("contragredient ~ twist", equivalent),
    ]
    return doc, rows


def _require_key(job, key):
    if key not in job:
        _fail(f"job needs a {key!r} field")
    return job[key]


def cmd_oracle(job, opts):
    n = int(_require_key(job, "n"))
    perm = [int(x) for x in _require_key(job, "w")]
    pairs = sorted(gln_oracle(n, perm))
    rs = gl(n)
    S = normal_multiset(galois_split_pair(rs), from_permutation(rs, perm))
    agrees = S.support == {gl_root(n, i, j) for i, j in pairs}
    doc = {"n": n, "w": perm, "I_w": [list(p) for p in pairs], "agrees_with_normal_multiset": agrees}
    rows = [("i", "j")] + pairs
    return doc, rows


HANDLERS = {
    "roots": cmd_roots, "weyl": cmd_weyl, "orbits": cmd_orbits, "star": cmd_star,
    "distinction": cmd_distinction, "langlands": cmd_langlands, "oracle": cmd_oracle,
}


def _table(rows) -> str:
    def cell(v):
        if isinstance(v, (list, dict)):
            return json.dumps(v, separators=(",", ":"))
        return str(v)

    rows = [[cell(v) for v in (r if isinstance(r, tuple) else (r,))] for r in rows]
    widths = [max(len(r[i]) for r in rows if i < len(r)) for i in range(max(map(len, rows)))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def run(job, fmt: str = "json", overrides: dict | None = None):
    """Execute one job document. Returns ``(exit_code, text)``."""
    try:
        if not isinstance(job, dict):
            raise InputError("job document must be a JSON object")
        command = job.get("command")
        if command not in HANDLERS:
            raise InputError(f"unknown command {command!r}; expected one of {COMMANDS}")
        opts = {"budget": DEFAULT_BUDGET, "seed": 0, "k_max": None}
        opts.update(job.get("options") or {})
        opts.update({k: v for k, v in (overrides or {}).items() if v is not None})
        body, rows = HANDLERS[command](job, opts)
    except BudgetExceeded as exc:
        return _error(exc, "budget", fmt, job, estimate=exc.estimate, budget=exc.budget,
                      partial=exc.partial)
    except SymmPairError as exc:
        kind = "parse" if exc.exit_code == 2 else "precondition"
        return _error(exc, kind, fmt, job)
    except (KeyError, TypeError, ValueError) as exc:
        return _error(exc, "parse", fmt, job, code=2)
    report = {"version": __version__, "command": command, "input": job,
              "options": {k: opts[k] for k in sorted(opts)}, "result": body}
    if fmt == "table":
        return 0, _table(rows)
    return 0, json.dumps(report, indent=2)


def _error(exc, kind, fmt, job, code=None, **extra):
    code = code or getattr(exc, "exit_code", 1)
    err = {"code": code, "kind": kind, "message": str(exc)}
    err.update({k: v for k, v in extra.items() if v is not None})
    if fmt == "table":
        return code, f"error ({kind}, exit {code}): {exc}"
    return code, json.dumps({"version": __version__, "input": job, "error": err}, indent=2)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="symmpair", description=__doc__.split("\n\n")[0])
    parser.add_argument("input", nargs="?", default="-", help="job document (default: stdin)")
    parser.add_argument("--format", choices=("json", "table"), default="json")
    parser.add_argument("--seed", type=int)
    parser.add_argument("--budget", type=int)
    parser.add_argument("--k-max", type=int, dest="k_max")
    parser.add_argument("-o", "--output", help="write the report here instead of stdout")
    args = parser.parse_args(argv)

    text = sys.stdin.read() if args.input == "-" else open(args.input).read()
    try:
        job = json.loads(text)
    except json.JSONDecodeError as exc:
        code, out = _error(exc, "parse", args.format, None, code=2)
    else:
        code, out = run(job, args.format, {"seed": args.seed, "budget": args.budget, "k_max": args.k_max})
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
