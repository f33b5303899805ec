"""``coxcli``: command line front end.

Generators are named 1-based (s1, s2, ...) on the command line and in all
output; internally they are 0-based.

Exit codes: 0 success, 1 usage or parse error, 2 infinite or oversized
system, 3 verification failure or disagreeing verdicts.
"""

from __future__ import annotations

import argparse
import json
import sys as _sys
from typing import Sequence

import numpy as np

from . import symgroup as sg
from . import verify
from .bruhat import bruhat_leq, induced_subposet
from .core import (
    ELEMENT_CAP,
    ROOT_CAP,
    CoxeterSystem,
    Element,
    GenSubset,
    build_system,
    parse_type,
    read_matrix_file,
)
from .errors import CoxeterError, InfiniteOrTooLarge
from .parabolic import double_coset_min_reps, double_coset_records, is_min_double_rep, max_rep

EXIT_OK, EXIT_USAGE, EXIT_TOO_LARGE, EXIT_FAILED = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _parse_indices(text: str | None, rank: int, label: str) -> GenSubset:
    if not text:
        return GenSubset()
    try:
        names = [int(tok.strip().lstrip("s")) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"--{label}: expected comma separated generator numbers, got {text!r}")
    for i in names:
        if not 1 <= i <= rank:
            raise UsageError(f"--{label}: generator s{i} outside s1..s{rank}")
    return GenSubset.one_based(names)


def _load_system(args) -> CoxeterSystem:
    if (args.type is None) == (args.matrix is None):
        raise UsageError("give exactly one of --type or --matrix")
    spec = parse_type(args.type) if args.type else read_matrix_file(args.matrix)
    return build_system(spec, root_cap=args.root_cap, elem_cap=args.elem_cap)


def _type_a(system: CoxeterSystem) -> bool:
    return verify.is_type_a(system)


def _word_label(x: Element) -> str:
    return "".join(f"s{i + 1}" for i in x.word()) or "e"


def _label(system: CoxeterSystem, x: Element) -> str:
    if _type_a(system):
        return str(sg.from_generic(system, x))
    return _word_label(x)


def _word(x: Element) -> list[int]:
    return [i + 1 for i in x.word()]


def parse_element(system: CoxeterSystem, text: str) -> Element:
    """One-line notation (type A) or a 1-based word such as ``1,2,1`` or ``e``."""
    text = text.strip()
    if _type_a(system):
        try:
            w = sg.Permutation.parse(text)
        except ValueError:
            w = None
        if w is not None and w.n == system.rank + 1:
            return sg.to_generic(system, w)
    if text in ("", "e"):
        return system.identity()
    tokens = text.replace(",", " ").split()
    if len(tokens) == 1 and system.rank < 10 and tokens[0].isdigit():
        tokens = list(tokens[0])
    try:
        word = [int(tok.lstrip("s")) - 1 for tok in tokens]
    except ValueError:
        raise UsageError(f"cannot parse element {text!r}")
    if any(not 0 <= i < system.rank for i in word):
        raise UsageError(f"element {text!r} uses a generator outside s1..s{system.rank}")
    return system.element_from_word(word)


class Emitter:
    def __init__(self, args, system: CoxeterSystem, I: GenSubset, J: GenSubset, out):
        self.fmt = args.format
        self.system, self.I, self.J = system, I, J
        self.out = out

    def record(self, kind: str, payload: dict) -> None:
        obj = {
            "kind": kind,
            "system": self.system.name,
            "I": self.I.to_one_based(),
            "J": self.J.to_one_based(),
            "payload": payload,
        }
        self.out.write(json.dumps(obj, sort_keys=True) + "\n")

    def line(self, text: str = "") -> None:
        self.out.write(text + "\n")


def _matrix_text(m: np.ndarray) -> list[str]:
    width = max(len(str(x)) for x in m.flat)
    return ["  ".join(str(x).rjust(width) for x in row) for row in m.tolist()]


# ---------------------------------------------------------------------------
# commands


def cmd_info(args, system, I, J, em: Emitter) -> int:
    payload = {
        "rank": system.rank,
        "order": system.order,
        "positive_roots": system.n_positive,
        "w0_length": system.w0.length,
        "coxeter_matrix": [list(row) for row in system.coxeter_matrix],
    }
    if em.fmt == "json":
        em.record("info", payload)
    else:
        em.line(f"system          {system.name}")
        for key in ("rank", "order", "positive_roots", "w0_length"):
            em.line(f"{key:<15} {payload[key]}")
    return EXIT_OK


def cmd_list_cosets(args, system, I, J, em: Emitter) -> int:
    records = double_coset_records(system, I, J)
    if em.fmt == "json":
        for r in records:
            payload = {
                "b": _word(r.b),
                "b_max": _word(r.b_max),
                "cross_section": r.cross_section.to_one_based(),
                "size": r.coset_size,
            }
            if _type_a(system):
                payload["b_one_line"] = _label(system, r.b)
                payload["b_max_one_line"] = _label(system, r.b_max)
            em.record("coset", payload)
    else:
        rows = [
            (_label(system, r.b), _label(system, r.b_max), ",".join(map(str, r.cross_section.to_one_based())) or "-", str(r.coset_size))
            for r in records
        ]
        header = ("b", "b_max", "K", "size")
        widths = [max(len(x) for x in col) for col in zip(header, *rows)]
        for row in (header, *rows):
            em.line("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
        em.line(f"{len(records)} double cosets, total size {sum(r.coset_size for r in records)}")
    return EXIT_OK


def cmd_compare(args, system, I, J, em: Emitter) -> int:
    u = parse_element(system, args.u)
    v = parse_element(system, args.v)
    for name, x in (("u", u), ("v", v)):
        if not is_min_double_rep(system, x, I, J):
            raise UsageError(f"{name} = {_label(system, x)} is not a minimal (I, J) double coset representative")
    umax, vmax = max_rep(system, u, I, J), max_rep(system, v, I, J)
    payload = {
        "u": _label(system, u),
        "v": _label(system, v),
        "u_max": _label(system, umax),
        "v_max": _label(system, vmax),
        "leq_min": bruhat_leq(system, u, v),
        "leq_max": bruhat_leq(system, umax, vmax),
    }
    if _type_a(system):
        pu, pv = sg.from_generic(system, u), sg.from_generic(system, v)
        payload["coset_dominance"] = sg.coset_dominance_leq(pu, pv, I, J)
    verdicts = {payload[k] for k in ("leq_min", "leq_max", "coset_dominance") if k in payload}
    payload["agree"] = len(verdicts) == 1
    if em.fmt == "json":
        em.record("compare", payload)
    else:
        em.line(f"u = {payload['u']}   u_max = {payload['u_max']}")
        em.line(f"v = {payload['v']}   v_max = {payload['v_max']}")
        em.line(f"u <= v          {payload['leq_min']}")
        em.line(f"u_max <= v_max  {payload['leq_max']}")
        if "coset_dominance" in payload:
            em.line(f"D(u) >= D(v)    {payload['coset_dominance']}")
    return EXIT_OK if payload["agree"] else EXIT_FAILED


def hasse_graph(system: CoxeterSystem, I: GenSubset, J: GenSubset, use_max: bool = False):
    """Nodes (in order) and cover edges (lower, upper) of X_IJ or of its maxima."""
    nodes = double_coset_min_reps(system, I, J)
    if use_max:
        nodes = sorted((max_rep(system, b, I, J) for b in nodes), key=system.sort_key)
    edges = induced_subposet(system, nodes)
    return nodes, edges


def dot_text(system: CoxeterSystem, nodes, edges, name: str) -> str:
    index = {x: k for k, x in enumerate(nodes)}
    lines = [f'digraph "{name}" {{', "  rankdir=BT;"]
    for k, x in enumerate(nodes):
        lines.append(f'  n{k} [label="{_label(system, x)}"];')
    for lo, hi in sorted(edges, key=lambda e: (index[e[0]], index[e[1]])):
        lines.append(f"  n{index[lo]} -> n{index[hi]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_hasse(args, system, I, J, em: Emitter) -> int:
    nodes, edges = hasse_graph(system, I, J, use_max=args.max)
    name = ("Xmax" if args.max else "X") + f"_{system.name}"
    if em.fmt == "json":
        index = {x: k for k, x in enumerate(nodes)}
        em.record(
            "hasse",
            {
                "nodes": [_label(system, x) for x in nodes],
                "edges": sorted([index[a], index[b]] for a, b in edges),
                "max": bool(args.max),
            },
        )
    else:
        em.out.write(dot_text(system, nodes, edges, name))
    return EXIT_OK


def cmd_snmatrix(args, system, I, J, em: Emitter) -> int:
    if not _type_a(system):
        raise UsageError("snmatrix needs a type A system")
    try:
        w = sg.Permutation.parse(args.w)
    except ValueError as exc:
        raise UsageError(str(exc))
    if w.n != system.rank + 1:
        raise UsageError(f"{args.w} has degree {w.n}, system needs {system.rank + 1}")
    rows, cols = sg.blocks_from_subset(w.n, I), sg.blocks_from_subset(w.n, J)
    mats = {
        "M": sg.perm_matrix(w),
        "D": sg.dominance(w),
        "M_IJ": sg.coset_matrix(w, I, J),
        "D_IJ": sg.coset_dominance(w, I, J),
    }
    if em.fmt == "json":
        payload = {k: m.tolist() for k, m in mats.items()}
        payload.update(w=str(w), row_blocks=str(rows), col_blocks=str(cols))
        em.record("snmatrix", payload)
        return EXIT_OK
    em.line(f"w = {w}   row blocks {rows}   column blocks {cols}")
    for key, m in mats.items():
        em.line(f"{key}:")
        for text in _matrix_text(m):
            em.line("  " + text)
    m = mats["M_IJ"]
    em.line(f"row sums {m.sum(axis=1).tolist()}   block sizes {list(rows.sizes())}")
    em.line(f"col sums {m.sum(axis=0).tolist()}   block sizes {list(cols.sizes())}")
    return EXIT_OK


def cmd_verify(args, em_out) -> int:
    names, sampled = verify.parse_scope(args.scope)
    if args.type:
        names = [args.type]
    results = verify.run_suite(
        names,
        sampled=sampled,
        seed=args.seed,
        root_cap=args.root_cap,
        elem_cap=args.elem_cap,
    )
    for r in results:
        if args.format == "json":
            obj = {
                "kind": "property",
                "system": r.system,
                "I": [],
                "J": [],
                "payload": {"name": r.name, "checked": r.checked, "failed": r.failed, "ok": r.ok},
            }
            em_out.write(json.dumps(obj, sort_keys=True) + "\n")
        else:
            status = "PASS" if r.ok else "FAIL"
            em_out.write(f"{status}  {r.system:<7} {r.name:<52} checked={r.checked} failed={r.failed}\n")
            for ex in r.examples:
                em_out.write(f"      e.g. {ex}\n")
    failed = sum(not r.ok for r in results)
    if args.format != "json":
        em_out.write(f"{len(results) - failed}/{len(results)} properties passed\n")
    return EXIT_OK if failed == 0 else EXIT_FAILED


COMMANDS = {
    "info": cmd_info,
    "list-cosets": cmd_list_cosets,
    "compare": cmd_compare,
    "hasse": cmd_hasse,
    "snmatrix": cmd_snmatrix,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", help="named type: A4, B3, D4, H3, F4, I2(7), ...")
    common.add_argument("--matrix", help="Coxeter matrix file (rank line, then rows; 0 = infinity)")
    common.add_argument("--I", dest="I", default="", help="left generators, e.g. 1,2,4")
    common.add_argument("--J", dest="J", default="", help="right generators, e.g. 1,3")
    common.add_argument("--format", choices=("json", "table", "dot"), default=None)
    common.add_argument("--root-cap", type=int, default=ROOT_CAP)
    common.add_argument("--elem-cap", type=int, default=ELEMENT_CAP)

    parser = argparse.ArgumentParser(prog="coxcli", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("info", parents=[common], help="rank, order and root counts")
    sub.add_parser("list-cosets", parents=[common], help="minimal/maximal double coset representatives")
    p = sub.add_parser("compare", parents=[common], help="compare two minimal representatives")
    p.add_argument("u")
    p.add_argument("v")
    p = sub.add_parser("hasse", parents=[common], help="DOT Hasse diagram of X_IJ")
    p.add_argument("--max", action="store_true", help="use the maximal representatives instead")
    p = sub.add_parser("snmatrix", parents=[common], help="M, D and coset matrices of a permutation")
    p.add_argument("w")
    p = sub.add_parser("verify", parents=[common], help="run the invariant sweeps")
    p.add_argument("--scope", default="default", help='"default", "A5 sampled", "A3,B3", ...')
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or _sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.format is None:
        args.format = "dot" if args.command == "hasse" else "table"
    try:
        if args.command == "verify":
            if args.matrix:
                raise UsageError("verify takes named types via --type or --scope")
            return cmd_verify(args, out)
        system = _load_system(args)
        I = _parse_indices(args.I, system.rank, "I")
        J = _parse_indices(args.J, system.rank, "J")
        return COMMANDS[args.command](args, system, I, J, Emitter(args, system, I, J, out))
    except InfiniteOrTooLarge as exc:
        print(f"coxcli: {exc}", file=_sys.stderr)
        return EXIT_TOO_LARGE
    except (UsageError, CoxeterError, ValueError, OSError) as exc:
        print(f"coxcli: {exc}", file=_sys.stderr)
        return EXIT_USAGE


def run() -> None:
    _sys.exit(main())
