# diffinfo: exact bijections and information efficiency on the natural numbers
# Copyright (c) 2024-2026 The diffinfo Team. All rights reserved.

"""
Command-line entry point.

    diffinfo setindex --set 1,4,6,8,10,11
    diffinfo census --fixture scalefree22 --range 0:100000
    diffinfo sbxor solve --fixture xor3 --method gf2

Artifacts go to stdout (or --output), diagnostics to stderr. Exit status is
0 on success, 1 when an operation is called outside its domain and 2 on a
usage error.
"""

import argparse
import json
import math
import sys
from typing import Dict, List, Optional, Sequence

from . import dilation, entropy, injection, numeric, pairing, sat, setcodec, subsets, xor
from .errors import DomainError
from .objects import BitVector, CharString, Codebook, DilationSpec, FinSet, SbxorInstance, SubsetProblem
from .options import Literals, LogicMode, LogicOp, Options, RateKind, SubsetOp, ZetaKind
from .utils import fixtures
from .utils.utility import Constants, csv_text, format_info, json_text, parse_nats, parse_range, write_output
from .__init__ import __version__


FORMATS = (Literals.text, Literals.csv, Literals.json, Literals.dimacs)


def _options(args) -> Options:
    return Options(seed=args.seed, num_workers=args.threads, verbose=args.verbose)


def _finset(text: str) -> FinSet:
    return FinSet(parse_nats(text))


def _require_format(args, *allowed: str) -> None:
    if args.format not in allowed:
        raise DomainError(f"'{args.command}' cannot write format '{args.format}'; "
                          f"use one of {', '.join(allowed)}.")


def _record(args, record: Dict[str, object]) -> str:
    """ A flat record: 'key value' lines as text, an object of strings as JSON. """
    _require_format(args, Literals.text, Literals.json)
    if args.format == Literals.json:
        return json_text({k: str(v) for k, v in record.items()})
    return "".join(f"{k} {v}\n" for k, v in record.items())


def _table(args, header: Sequence[str], rows, payload=None) -> str:
    """ Tables print as CSV for both text and csv; JSON gets `payload` or a list of rows. """
    _require_format(args, Literals.text, Literals.csv, Literals.json)
    rows = list(rows)
    if args.format == Literals.json:
        if payload is None:
            payload = [dict(zip(header, (str(v) for v in row))) for row in rows]
        return json_text(payload)
    return csv_text(header, rows)


def _value(args, value) -> str:
    _require_format(args, Literals.text, Literals.json)
    if args.format == Literals.json:
        return json_text(str(value))
    return f"{value}\n"


""" Bijections """


def cmd_pair(args) -> str:
    return _value(args, pairing.pair((args.x, args.y)))


def cmd_unpair(args) -> str:
    p = pairing.unpair(args.z)
    return _record(args, {"x": p.x, "y": p.y})


def cmd_setindex(args) -> str:
    s = _finset(args.set)
    if not s:
        raise DomainError("setindex needs a non-empty set.")
    col, rank = setcodec.phi_car(s)
    return _record(args, {"set": s,
                          "cardinality": len(s),
                          "rank": rank,
                          "index": pairing.pair((col, rank)),
                          "sum": sum(s),
                          "product": math.prod(s),
                          "upsilon": setcodec.upsilon(s)})


def cmd_upsilon(args) -> str:
    if args.inverse is not None:
        s = setcodec.upsilon_inv(args.inverse)
        return _value(args, s)
    if args.set is None:
        raise DomainError("upsilon needs --set or --inverse.")
    return _value(args, setcodec.upsilon(_finset(args.set)))


def cmd_endo(args) -> str:
    n = args.n
    trail = [n]
    for _ in range(args.iterate):
        n = setcodec.endo(n)
        trail.append(n)
    if args.iterate == 1:
        return _value(args, n)
    return _table(args, ("step", "value"), enumerate(trail))


""" Dilations """


def _spec(args) -> DilationSpec:
    return DilationSpec(RateKind(args.rate or RateKind.linear), args.c, args.k)


def cmd_dilate(args) -> str:
    spec = _spec(args)
    if args.inverse:
        p = dilation.undilate(spec, (args.x, args.y))
        if p is None:
            return _record(args, {"absent": True})
    else:
        p = dilation.dilate(spec, (args.x, args.y))
    record = {"x": p.x, "y": p.y}
    if not args.inverse and args.x >= 1 and args.y >= 1:
        record["delta"] = format_info(dilation.dilation_efficiency(spec, (args.x, args.y)))
    return _record(args, record)


def cmd_surface(args) -> str:
    options = _options(args)
    if args.missing is not None:
        cols = dilation.missing_columns(_spec(args), args.missing)
        return _table(args, ("column",), ((c,) for c in cols))
    if args.rate is None:
        sample = pairing.efficiency_surface(args.x_max, args.y_max, args.step, options)
    else:
        sample = dilation.dilation_surface(_spec(args), args.x_max, args.y_max, args.step, options)
    _require_format(args, Literals.text, Literals.csv)
    return sample.to_csv()


""" Sorted injections """


def cmd_zeta(args) -> str:
    options = _options(args)
    kind = ZetaKind(args.kind)
    if args.inverse is not None:
        s = injection.phi_zeta_inv(kind, args.inverse, options)
        return _value(args, "absent" if s is None else s)
    if args.set is None:
        raise DomainError("zeta needs --set or --inverse.")
    s = _finset(args.set)
    z = injection.zeta_eval(kind, s)
    theta = injection.theta_index(kind, s, options)
    return _record(args, {"zeta": z, "theta": theta, "index": injection.phi_zeta(kind, s, options)})


def cmd_powerset(args) -> str:
    options = _options(args)
    table = injection.powerset_dilation(_finset(args.set), ZetaKind(args.kind), options)
    if args.density is not None:
        d = injection.density_census(table, args.density)
        return _record(args, {"c": d.c, "d": format_info(d.d),
                              "decay": "absent" if d.decay is None else format_info(d.decay)})
    if args.format == Literals.text:
        return " ".join(str(v) for v in table.elements()) + "\n"
    return _table(args, Constants.HEADERS["multiset"], table.items(),
                  {str(v): str(c) for v, c in table.items()})


""" Subset problems """


def _codebook(args) -> Codebook:
    if args.fixture is not None:
        if args.fixture != Literals.scalefree22:
            raise DomainError(f"Fixture '{args.fixture}' is not a codebook.")
        return fixtures.scalefree_codebook()
    if args.canonical:
        return subsets.canonical_codebook(args.k)
    return subsets.gen_scale_free(args.k, args.seed)


def cmd_scalefree(args) -> str:
    cb = _codebook(args)
    if args.charstring is not None:
        cs = CharString.from_string(args.charstring)
        chosen, total = subsets.select_by_charstring(cb, cs)
        template = sum(1 << i for i in cs.indices())
        return _record(args, {"selection": chosen, "sum": total, "template_sum": template})
    if args.target is not None:
        problem = SubsetProblem(cb, args.target, SubsetOp(args.op))
        witness = subsets.solve(problem, _options(args))
        return _value(args, "absent" if witness is None else witness)
    if args.scales:
        rows = zip(range(len(cb)), cb, subsets.codebook_scales(cb), subsets.scale_deficits(cb))
        return _table(args, ("position", "entry", "scale", "deficit"),
                      ((i, e, "" if s is None else s, "" if d is None else d) for i, e, s, d in rows))
    _require_format(args, Literals.text, Literals.json)
    return json_text(cb.to_json())


def cmd_census(args) -> str:
    cb = _codebook(args)
    c = subsets.census(cb, SubsetOp(args.op), _options(args))
    lo, hi = parse_range(args.range) if args.range else (0, c.targets[-1] if c.targets else 0)
    if args.summary:
        upper = max(hi, 1)
        return _record(args, {"subsets": c.subset_total,
                              "reachable": len(c),
                              "reachable_in_range": len(c.reachable(lo, hi)),
                              "density": format_info(subsets.fractal_density(c, upper)),
                              "mean_solutions": format_info(subsets.mean_solutions(c))})
    if args.gaps:
        reach = c.reachable(lo, hi)
        return _table(args, Constants.HEADERS["gaps"], zip(reach, (b - a for a, b in zip(reach, reach[1:]))))
    return _table(args, Constants.HEADERS["census"], c.window(lo, hi),
                  {str(t): str(n) for t, n in c.window(lo, hi)})


""" SB-XOR """


def _instance(args) -> SbxorInstance:
    if args.fixture is not None:
        if args.fixture != Literals.xor3:
            raise DomainError(f"Fixture '{args.fixture}' is not an SB-XOR instance.")
        return fixtures.xor_instance()
    if args.instance is not None:
        with open(args.instance, encoding="utf-8") as f:
            return SbxorInstance.from_json(json.load(f))
    return xor.gen_instance(args.n, args.k, args.seed)


def cmd_sbxor_gen(args) -> str:
    inst = xor.gen_instance(args.n, args.k, args.seed)
    _require_format(args, Literals.text, Literals.json)
    return json_text(inst.to_json())


def cmd_sbxor_check(args) -> str:
    inst = _instance(args)
    sel = BitVector.from_string(args.selection)
    return _value(args, str(xor.check(inst, sel)).lower())


def cmd_sbxor_solve(args) -> str:
    inst = _instance(args)
    if args.method == Literals.gf2:
        sel = xor.solve_gf2(inst)
    else:
        sel = xor.solve_bruteforce(inst, _options(args))
    return _value(args, "absent" if sel is None else sel)


def cmd_sbxor_sat(args) -> str:
    inst = _instance(args)
    f = sat.sat_encode(inst, _options(args))
    if args.format == Literals.text:
        return f"{f}\n"
    _require_format(args, Literals.dimacs)
    cnf = sat.to_cnf(f)
    return sat.to_dimacs(cnf, [f"diffinfo {__version__} SB-XOR n={inst.n} k={inst.k}"])


def cmd_sbxor_absorb(args) -> str:
    inst = _instance(args)
    message = BitVector.from_string(args.message)
    out = xor.absorb(inst, message, args.seed)
    _require_format(args, Literals.text, Literals.json)
    return json_text(out.to_json())


def cmd_sbxor_bench(args) -> str:
    rows = xor.benchmark(parse_nats(args.ns), args.seed, _options(args))
    return _table(args, Constants.HEADERS["benchmark"],
                  ((n, format_info(b), format_info(g)) for n, b, g in rows))


def cmd_mmk(args) -> str:
    keys = [BitVector.from_string(k) for k in args.keys.split(",") if k]
    message = BitVector.from_string(args.message)
    out = xor.mmk_decrypt(keys, message) if args.decrypt else xor.mmk_encrypt(keys, message)
    return _value(args, out)


""" Entropy and counting """


def cmd_entropy_table(args) -> str:
    if args.monte_carlo:
        op, mode = LogicOp(args.op), LogicMode(args.mode)
        h = entropy.monte_carlo_entropy(op, mode, args.k, args.n, args.monte_carlo, args.seed, args.verbose)
        exact = entropy.logic_entropy(op, mode, args.k, args.n)
        return _record(args, {"op": op.value, "mode": mode.value, "trials": args.monte_carlo,
                              "H": format_info(h), "H_exact": format_info(exact.H)})
    rows = entropy.entropy_table(parse_nats(args.ks), args.n)
    return _table(args, Constants.HEADERS["entropy"],
                  ((op, mode, k, n, format_info(h), format_info(d)) for op, mode, k, n, h, d in rows))


def cmd_counts(args) -> str:
    if args.kind == "binom":
        if args.k is None:
            raise DomainError("binom needs --k.")
        value = numeric.binom(args.n, args.k)
    else:
        value = numeric.combinatorial_counts(args.kind, args.n, args.k)
    record = {"count": value}
    if value >= 1:
        record["info"] = format_info(numeric.info(value))
    return _record(args, record)


""" Parser """


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="SplitMix64 seed (default 0)")
    common.add_argument("--output", "-o", default=None, help="write the artifact to this path instead of stdout")
    common.add_argument("--format", "-f", choices=FORMATS, default=Literals.text, help="output format")
    common.add_argument("--threads", type=int, default=1, help="worker processes for enumerations")
    common.add_argument("--verbose", "-v", action="store_true", help="progress lines on stderr")
    return common


def _rate_arguments(p: argparse.ArgumentParser, rate_default: Optional[str] = RateKind.constant.value) -> None:
    p.add_argument("--rate", choices=[r.value for r in RateKind], default=rate_default, help="rate function")
    p.add_argument("--c", type=int, default=2, help="rate constant c")
    p.add_argument("--k", type=int, default=1, help="exponent k of polynomial rates")


def _codebook_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("--k", type=int, default=22, help="codebook length")
    p.add_argument("--fixture", choices=fixtures.fixture_names(), default=None, help="use a shipped codebook")
    p.add_argument("--canonical", action="store_true", help="use the template [2^0, ..., 2^(k-1)]")
    p.add_argument("--op", choices=[o.value for o in SubsetOp], default=SubsetOp.sum.value, help="subset operation")


def _instance_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("--fixture", choices=fixtures.fixture_names(), default=None, help="use a shipped instance")
    p.add_argument("--instance", default=None, help="instance JSON file")
    p.add_argument("--n", type=int, default=3, help="rows of a generated instance")
    p.add_argument("--k", type=int, default=3, help="row length of a generated instance")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="diffinfo", description=__doc__.strip().splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def command(name, handler, help_text, parent=sub):
        p = parent.add_parser(name, parents=[common], help=help_text, description=help_text)
        p.set_defaults(handler=handler)
        return p

    p = command("pair", cmd_pair, "Cantor pairing of (x, y)")
    p.add_argument("x", type=int)
    p.add_argument("y", type=int)

    p = command("unpair", cmd_unpair, "inverse Cantor pairing")
    p.add_argument("z", type=int)

    p = command("setindex", cmd_setindex, "cardinality index, rank and power sum of a finite set")
    p.add_argument("--set", required=True, help="comma separated naturals, e.g. 1,4,6")

    p = command("upsilon", cmd_upsilon, "power-sum bijection between finite sets and naturals")
    p.add_argument("--set", default=None, help="comma separated naturals")
    p.add_argument("--inverse", type=int, default=None, help="decode this natural")

    p = command("endo", cmd_endo, "the permutation of N induced by the two set bijections")
    p.add_argument("n", type=int)
    p.add_argument("--iterate", type=int, default=1, help="number of applications")

    p = command("dilate", cmd_dilate, "dilate (or undilate) a point of the plane")
    p.add_argument("x", type=int)
    p.add_argument("y", type=int)
    p.add_argument("--inverse", action="store_true", help="undilate instead")
    _rate_arguments(p)

    p = command("surface", cmd_surface, "information efficiency on a lattice of the plane")
    p.add_argument("--x-max", type=int, default=32)
    p.add_argument("--y-max", type=int, default=32)
    p.add_argument("--step", type=int, default=1)
    p.add_argument("--missing", type=int, default=None, help="list the columns below N a dilation never hits")
    _rate_arguments(p, rate_default=None)

    p = command("zeta", cmd_zeta, "sorted injection of a finite set by an arithmetical function")
    p.add_argument("--kind", choices=[z.value for z in ZetaKind], default=ZetaKind.sum.value)
    p.add_argument("--set", default=None, help="comma separated naturals")
    p.add_argument("--inverse", type=int, default=None, help="decode this natural")

    p = command("powerset", cmd_powerset, "arithmetical function over all non-empty subsets")
    p.add_argument("--set", required=True, help="comma separated naturals")
    p.add_argument("--kind", choices=[z.value for z in ZetaKind], default=ZetaKind.sum.value)
    p.add_argument("--density", type=int, default=None, help="compression density at N")

    p = command("scalefree", cmd_scalefree, "scale-free codebooks: generate, select, solve")
    _codebook_arguments(p)
    p.add_argument("--charstring", default=None, help="selection as a 0/1 string")
    p.add_argument("--target", type=int, default=None, help="solve for this target")
    p.add_argument("--scales", action="store_true", help="entry scales against the template")

    p = command("census", cmd_census, "number of subsets reaching every target")
    _codebook_arguments(p)
    p.add_argument("--range", default=None, help="lo:hi window of targets")
    p.add_argument("--summary", action="store_true", help="density and mean number of solutions")
    p.add_argument("--gaps", action="store_true", help="gaps between reachable targets")

    p = sub.add_parser("sbxor", help="Subset Bitwise XOR instances", description="Subset Bitwise XOR instances")
    xsub = p.add_subparsers(dest="action", required=True, metavar="action")

    q = command("gen", cmd_sbxor_gen, "generate an instance", xsub)
    q.add_argument("--n", type=int, default=3)
    q.add_argument("--k", type=int, default=3)

    q = command("check", cmd_sbxor_check, "check a selection", xsub)
    _instance_arguments(q)
    q.add_argument("--selection", required=True, help="selection as a 0/1 string")

    q = command("solve", cmd_sbxor_solve, "find a selection", xsub)
    _instance_arguments(q)
    q.add_argument("--method", choices=(Literals.bruteforce, Literals.gf2), default=Literals.gf2)

    q = command("sat", cmd_sbxor_sat, "propositional encoding (text or DIMACS)", xsub)
    _instance_arguments(q)

    q = command("absorb", cmd_sbxor_absorb, "re-encode an instance to carry a message", xsub)
    _instance_arguments(q)
    q.add_argument("--message", required=True, help="message as a 0/1 string")

    q = command("bench", cmd_sbxor_bench, "brute force against GF(2) elimination", xsub)
    q.add_argument("--ns", default="4,8,12,16", help="comma separated instance sizes")

    p = command("mmk", cmd_mmk, "multiple mutual key encryption")
    p.add_argument("--keys", required=True, help="comma separated 0/1 keys")
    p.add_argument("--message", required=True, help="0/1 message (or cipher with --decrypt)")
    p.add_argument("--decrypt", action="store_true")

    p = command("entropy-table", cmd_entropy_table, "output entropy of AND, OR and XOR")
    p.add_argument("--ks", default="1,2,4,8,16", help="comma separated word lengths")
    p.add_argument("--n", type=int, default=3, help="word count of the set mode")
    p.add_argument("--monte-carlo", type=int, default=0, metavar="TRIALS", help="estimate one entry empirically")
    p.add_argument("--op", choices=[o.value for o in LogicOp], default=LogicOp.OR.value)
    p.add_argument("--mode", choices=[m.value for m in LogicMode], default=LogicMode.bit.value)
    p.add_argument("--k", type=int, default=1)

    p = command("counts", cmd_counts, "combinatorial counts and their information")
    p.add_argument("--kind", choices=(Literals.catalan, Literals.stirling2, Literals.bell, "binom"),
                   default=Literals.catalan)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.command = args.command if getattr(args, "action", None) is None else f"sbxor {args.action}"
    try:
        text = args.handler(args)
        write_output(text, args.output)
    except (DomainError, ValueError, TypeError, OSError) as e:
        print(f"diffinfo {args.command}: {e}", file=sys.stderr)
        return Constants.EXIT["precondition"]
    return Constants.EXIT["ok"]
