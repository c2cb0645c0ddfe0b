"""Command-line front end.

Exit codes: 0 success / DIM found / valid, 1 no DIM / invalid, 2 input
rejected or stage precondition failed, 3 unreadable or malformed input file.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import formats
from .dim import (
    brute_force_dims,
    brute_force_peds,
    check_dim,
    check_ped,
    validate_partial,
    validate_total,
)
from .errors import EdgeDomError, FormatError, NotAnEdge, NotTotal, TooLarge
from .graph import enumerate_triangles
from .patterns import find_induced, induced_cycles_up_to, is_cricket_free, is_nsf, named_graph
from .reduction import (
    ChainScheme,
    main_transformation,
    replace_edges_with_chains,
    subdivide_edge_3x,
)
from .sat import brute_force_1in3, positivize, split_variables
from .solver import solve

RECOGNIZED_PATTERNS = (
    "K4", "W4", "W5", "gem", "diamond", "butterfly", "paw", "claw",
    "cricket", "K15", "H", "snail", "press",
)


class Exit(Exception):
    def __init__(self, code, lines=()):
        self.code = code
        self.lines = list(lines)


def _edge_tokens(d):
    return " ".join(f"{u}-{v}" for u, v in d) or "(empty)"


def _limit(args):
    return None if args.unsafe else 24


def _load_graph(path):
    return formats.read_file(path, formats.parse_graph)


def cmd_solve(args, out):
    g = _load_graph(args.graph)
    ok, v = is_nsf(g)
    cf, witness = is_cricket_free(g)
    if not (ok and cf):
        if not args.force_oracle:
            if not ok:
                raise Exit(2, [f"NOT-NSF witness {v}"])
            raise Exit(2, ["NOT-CRICKET-FREE witness " + " ".join(map(str, witness))])
        try:
            dims = brute_force_dims(g, _limit(args))
        except TooLarge as exc:
            raise Exit(2, [f"TOO-LARGE {exc}"])
        if not dims:
            raise Exit(1, ["NO-DIM oracle"])
        out.append("DIM")
        out.extend(f"{a} {b}" for a, b in dims[0])
        return 0
    result = solve(g)
    if not result.found:
        head = f"NO-DIM {result.reason}"
        detail = list(result.detail)
        if result.reason == "discharged-pattern":
            head += f" {detail.pop(0)}"
        lines = [head]
        if detail:
            lines.append("WITNESS " + " ".join(map(str, detail)))
        raise Exit(1, lines)
    out.append("DIM")
    out.extend(f"{a} {b}" for a, b in result.dim)
    return 0


def cmd_check(args, out):
    g = _load_graph(args.graph)
    try:
        if args.mode in ("total", "partial"):
            c = formats.read_file(args.certificate, formats.parse_coloring, g.n)
            verdict = validate_total(g, c) if args.mode == "total" else validate_partial(g, c)
        else:
            d = formats.read_file(args.certificate, formats.parse_edges)
            verdict = check_dim(g, d) if args.mode == "dim" else check_ped(g, d)
    except NotTotal as exc:
        raise Exit(1, [f"NOT-TOTAL {exc.vertex}"])
    except NotAnEdge as exc:
        raise Exit(1, ["NOT-AN-EDGE {} {}".format(*exc.edge)])
    if not verdict:
        raise Exit(1, [str(verdict.violation)])
    out.append("VALID")
    return 0


def cmd_recognize(args, out):
    g = _load_graph(args.graph)
    out.append(f"N {g.n} M {g.m} MAX-DEGREE {g.max_degree()}")
    ok, v = is_nsf(g)
    out.append("NSF yes" if ok else f"NSF no witness {v}")
    cf, witness = is_cricket_free(g)
    out.append("CRICKET-FREE yes" if cf else "CRICKET-FREE no witness " + " ".join(map(str, witness)))
    out.append(f"TRIANGLES {len(enumerate_triangles(g))}")
    for name in RECOGNIZED_PATTERNS:
        out.append(f"INDUCED {name} {len(find_induced(g, name))}")
    cycles = induced_cycles_up_to(g, args.max_cycle_len)
    body = " ".join(f"{k}:{cycles[k]}" for k in sorted(cycles)) or "none"
    out.append(f"INDUCED-CYCLES<={args.max_cycle_len} {body}")
    return 0


def cmd_reduce(args, out):
    f = formats.read_file(args.formula, formats.parse_formula)
    stage = "positivize"
    try:
        if args.positivize:
            f = positivize(f)
        if args.split:
            stage = "split"
            f, _ = split_variables(f)
        if args.positivize or args.split or not args.main:
            out.append(f"VARS={f.num_vars} CLAUSES={f.num_clauses}")
        if args.out:
            _write(args.out + ".cnf", formats.dump_formula(f))
        if not args.main:
            if args.chains or args.subdiv3:
                stage = "chains" if args.chains else "subdiv3"
                raise Exit(2, [f"STAGE-ERROR {stage}: needs --main"])
            return 0
        stage = "main"
        g, trace = main_transformation(f)
        if args.chains:
            stage = "chains"
            g, trace = replace_edges_with_chains(g, trace, ChainScheme.parse(args.chains))
        if args.subdiv3:
            stage = "subdiv3"
            g = subdivide_edge_3x(g, tuple(args.subdiv3))
    except (EdgeDomError, ValueError) as exc:
        raise Exit(2, [f"STAGE-ERROR {stage}: {exc}"])
    out.append(f"V={g.n} E={g.m}")
    if args.out:
        _write(args.out + ".graph", formats.dump_graph(g))
        _write(args.out + ".trace", formats.dump_trace(trace))
    return 0


def cmd_brute(args, out):
    try:
        if args.mode == "1in3":
            f = formats.read_file(args.input, formats.parse_formula)
            sols = brute_force_1in3(f, _limit(args))
            for a in sols:
                out.append(" ".join(str(i + 1 if val else -(i + 1)) for i, val in enumerate(a)))
        elif args.mode == "dim":
            sols = brute_force_dims(_load_graph(args.input), _limit(args))
            out.extend(_edge_tokens(d) for d in sols)
        else:
            sols = brute_force_peds(_load_graph(args.input), _limit(args))
            out.extend(f"{cls.name} {_edge_tokens(d)}" for d, cls in sols)
    except TooLarge as exc:
        raise Exit(2, [f"TOO-LARGE {exc}"])
    out.append(f"COUNT {len(sols)}")
    return 0


def cmd_gen(args, out):
    name = args.name
    if name.startswith("random-nsf:"):
        from .corpus import random_nsf_cricket_free

        try:
            n = int(name.split(":", 1)[1])
            g = random_nsf_cricket_free(n, random.Random(args.seed))
        except (ValueError, RuntimeError) as exc:
            raise Exit(2, [f"UNKNOWN-PATTERN {name}: {exc}"])
    else:
        try:
            g = named_graph(name)
        except KeyError:
            raise Exit(2, [f"UNKNOWN-PATTERN {name}"])
    text = formats.dump_graph(g)
    if args.out:
        _write(args.out, text)
    else:
        out.append(text.rstrip("\n"))
    return 0


def cmd_ped(args, out):
    g = _load_graph(args.graph)
    ok, v = is_nsf(g)
    if not ok:
        raise Exit(2, [f"NOT-NSF witness {v}"])
    if is_cricket_free(g)[0]:
        result = solve(g)
        dim = result.dim
    else:
        try:
            dims = brute_force_dims(g, _limit(args))
        except TooLarge as exc:
            raise Exit(2, [f"TOO-LARGE {exc}"])
        dim = dims[0] if dims else None
    if dim is None:
        raise Exit(1, ["NOT-EXISTS"])
    out.append("EXISTS")
    out.extend(f"{a} {b}" for a, b in dim)
    return 0


def _write(path, text):
    try:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise Exit(3, [f"IO-ERROR cannot write {path}: {exc.strerror}"])


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="edgedom", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("solve", help="decide/build a DIM of an NSF cricket-free graph")
    s.add_argument("graph")
    s.add_argument("--force-oracle", action="store_true",
                   help="use brute force when the graph is outside the solver's class")
    s.add_argument("--unsafe", action="store_true", help="lift the oracle size bound")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("check", help="validate a coloring or edge set against a graph")
    s.add_argument("graph")
    s.add_argument("certificate")
    s.add_argument("--mode", choices=("total", "partial", "dim", "ped"), required=True)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("recognize", help="report class membership and induced patterns")
    s.add_argument("graph")
    s.add_argument("--max-cycle-len", type=int, default=12)
    s.set_defaults(func=cmd_recognize)

    s = sub.add_parser("reduce", help="run the 1-in-3 SAT to DIM reduction pipeline")
    s.add_argument("formula")
    s.add_argument("--positivize", action="store_true")
    s.add_argument("--split", action="store_true")
    s.add_argument("--main", action="store_true")
    s.add_argument("--chains", metavar="SCHEME", help="type1:<k1> or type2:<k2>:<gadget>")
    s.add_argument("--subdiv3", nargs=2, type=int, metavar=("U", "V"))
    s.add_argument("--out", metavar="PREFIX")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("brute", help="exhaustive enumeration oracles")
    s.add_argument("mode", choices=("dim", "ped", "1in3"))
    s.add_argument("input")
    s.add_argument("--unsafe", action="store_true")
    s.set_defaults(func=cmd_brute)

    s = sub.add_parser("gen", help="write a named pattern or family graph")
    s.add_argument("name", help="e.g. butterfly, W4, cycle:9, path:7, random-nsf:10")
    s.add_argument("--out", metavar="PATH")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("ped", help="nontrivial PED existence for NSF graphs")
    s.add_argument("graph")
    s.add_argument("--unsafe", action="store_true")
    s.set_defaults(func=cmd_ped)
    return p


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    out: list[str] = []
    try:
        code = args.func(args, out)
    except Exit as stop:
        code = stop.code
        out.extend(stop.lines)
    except FormatError as exc:
        print(f"PARSE-ERROR {exc}", file=stderr)
        return 3
    for line in out:
        print(line, file=stdout)
    return code


def run():
    sys.exit(main())
