"""linres command line.

Exit codes: 0 valid, 1 invalid proof or refuted claim, 2 domain error,
3 parse error.
"""
from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

from . import formats
from .checker import (R0Params, check_proof, check_r0, check_refutation, proof_stats, semantic_audit)
from .core import parse_disjunction
from .errors import CheckError, DomainError, LinresError, NotImplied, ParseError

OK, INVALID, DOMAIN, PARSE = 0, 1, 2, 3


def _read(path):
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise DomainError(f"cannot read {path}: {e.strerror}") from None


def _write(path, text, quiet=False):
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    Path(path).write_text(text, encoding="utf-8")
    if not quiet:
        print(f"wrote {path}", file=sys.stderr)


def _r0(args):
    if not args.r0:
        return None
    try:
        return R0Params(*args.r0)
    except ValueError as e:
        raise DomainError(str(e)) from None


# gen

def _tseitin_instance(args):
    from .generators import TseitinInstance, circulant, cycle
    if args.graph:
        n, r, edges = formats.parse_graph(_read(args.graph))
        return TseitinInstance(n, edges, args.p, r), Path(args.graph).stem
    if args.cycle:
        return TseitinInstance(args.cycle, cycle(args.cycle), args.p), f"cycle{args.cycle}"
    if args.circulant:
        return TseitinInstance(args.circulant, circulant(args.circulant), args.p), f"circ{args.circulant}"
    raise DomainError("tseitin needs --graph, --cycle or --circulant")


def cmd_gen(args):
    from .generators import (clique_color_formula, php_formula, php_refutation, tseitin_formula,
                             tseitin_refutation)
    from .generators.clique import CliqueColorInstance
    from .generators.php import PhpInstance
    proof = None
    if args.family == "php":
        if len(args.params) != 2:
            raise DomainError("php takes M N")
        m, n = args.params
        inst = PhpInstance(m, n)
        stem, nv, prem = f"php-{m}-{n}", inst.num_vars, php_formula(m, n)
        if args.with_proof:
            proof = php_refutation(m, n)
    elif args.family == "tseitin":
        inst, g = _tseitin_instance(args)
        stem, nv, prem = f"tseitin-{g}-p{args.p}", inst.num_vars, tseitin_formula(inst)
        if args.with_proof:
            proof = tseitin_refutation(inst)
    else:
        if len(args.params) != 3:
            raise DomainError("clique takes N K K'")
        n, k, kp = args.params
        inst = CliqueColorInstance(n, k, kp)
        stem, nv, prem = f"clique-{n}-{k}-{kp}", inst.num_vars, clique_color_formula(n, k, kp)
        if args.with_proof:
            print("clique-coloring: formula only, no refutation generator", file=sys.stderr)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    stem = args.stem or stem
    if args.dimacs:
        cnf = formats.cnf_of(nv, prem)
        if cnf is None:
            raise DomainError("formula is not a CNF")
        _write(out / f"{stem}.cnf", formats.format_dimacs(cnf))
    else:
        _write(out / f"{stem}.formula", formats.format_formula(nv, prem))
    if proof is not None:
        check_refutation(proof, args.jobs)
        _write(out / f"{stem}.proof", formats.format_proof(proof))
    return OK


# check

def cmd_check(args):
    text = _read(args.file)
    if args.system == "pcr":
        from .translators.pcr import parse_pcr, pcr_check
        pp = parse_pcr(text)
        pcr_check(pp, refutation=args.refutation)
        print(f"ok: {len(pp.lines)} polynomial lines")
        return OK
    p = formats.parse_proof(text)
    if args.refutation:
        check_refutation(p, args.jobs)
    else:
        check_proof(p, args.jobs)
    params = _r0(args)
    if params:
        check_r0(p, params)
    if args.semantic:
        bad = semantic_audit(p, local=args.local)
        if bad is not None:
            print(f"invalid: line {bad} is not semantically implied", file=sys.stderr)
            return INVALID
    s = proof_stats(p)
    kind = "refutation" if p.lines and not len(p.lines[-1].disj) else "proof"
    print(f"ok: {kind}, {s.lines} lines, size {s.size}, k={s.k} c={s.c}")
    return OK


# translate

def cmd_translate(args):
    src, dst = args.source, args.target
    text = _read(args.file)
    if (src, dst) == ("rlin", "pcr"):
        from .translators.pcr import format_pcr, pcr_check, rlin_to_pcr
        p = formats.parse_proof(text)
        check_proof(p, args.jobs)
        pp = rlin_to_pcr(p, cap=args.cap)
        pcr_check(pp)
        _write(args.output, format_pcr(pp))
        return OK
    if dst != "rlin" or src not in ("res", "res2", "rcp"):
        raise DomainError(f"unsupported translation {src} -> {dst}")
    if src == "res":
        from .translators.res import parse_trace, res_to_rlin
        p = res_to_rlin(parse_trace(text))
    elif src == "res2":
        from .translators.res2 import parse_res2, res2_to_rlin
        p = res2_to_rlin(parse_res2(text))
    else:
        from .translators.rcp import parse_rcp, rcp_to_rlin
        p = rcp_to_rlin(parse_rcp(text))
    check_proof(p, args.jobs)
    _write(args.output, formats.format_proof(p))
    return OK


def cmd_resolve(args):
    from .translators.res import dp_refutation, format_trace
    cnf = formats.parse_dimacs(_read(args.file))
    rp = dp_refutation(cnf)
    if rp is None:
        print("satisfiable: no resolution refutation exists", file=sys.stderr)
        return INVALID
    _write(args.output, format_trace(rp))
    return OK


# derive

def cmd_derive(args):
    from .implcomplete import derive, derive_r0
    n, prem = formats.parse_formula(_read(args.premises))
    try:
        target = parse_disjunction(args.target)
    except ParseError as e:
        raise ParseError(f"target: {e}") from None
    nv = args.n or n
    premises = [prem[k] for k in sorted(prem)]
    params = _r0(args)
    try:
        p = derive_r0(premises, target, nv, params) if params else derive(premises, target, nv)
    except NotImplied as e:
        print("not implied; countermodel: " + " ".join(f"x{i + 1}={v}" for i, v in enumerate(e.countermodel)))
        return INVALID
    check_proof(p)
    _write(args.output, formats.format_proof(p))
    return OK


# stats

HEADER = ["name", "lines", "size", "max_line_size", "k", "c"]


def _emit_rows(rows, as_csv):
    if as_csv:
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(HEADER)
        w.writerows(rows)
    else:
        for r in rows:
            print(f"{r[0]}: lines={r[1]} size={r[2]} max_line={r[3]} k={r[4]} c={r[5]}")


def cmd_stats(args):
    rows = []
    for f in args.files:
        p = formats.parse_proof(_read(f))
        rows.append([f] + proof_stats(p).row())
    _emit_rows(rows, args.csv)
    return OK


def cmd_sweep(args):
    from .generators import TseitinInstance, circulant, cycle, php_refutation, tseitin_refutation
    rows = []
    for n in range(args.start, args.stop + 1):
        if args.family == "php":
            p, name = php_refutation(n + 1, n), f"php-{n + 1}-{n}"
        else:
            if n % args.p != 1 % args.p or n < 3:
                continue
            g = circulant(n) if args.circulant else cycle(n)
            p, name = tseitin_refutation(TseitinInstance(n, g, args.p)), f"tseitin-{n}-p{args.p}"
        check_refutation(p, args.jobs)
        rows.append([name] + proof_stats(p).row())
    _emit_rows(rows, args.csv)
    return OK


def build_parser():
    ap = argparse.ArgumentParser(prog="linres", description="Resolution over linear equations.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", help="generate a formula family, optionally with its refutation")
    g.add_argument("family", choices=["php", "tseitin", "clique"])
    g.add_argument("params", nargs="*", type=int)
    g.add_argument("--with-proof", action="store_true")
    g.add_argument("--graph", help="graph file for tseitin")
    g.add_argument("--cycle", type=int, metavar="N")
    g.add_argument("--circulant", type=int, metavar="N", help="circulant C_N(1,2)")
    g.add_argument("-p", type=int, default=2, help="tseitin modulus")
    g.add_argument("--out-dir", default=".")
    g.add_argument("--stem", help="output file stem")
    g.add_argument("--dimacs", action="store_true", help="write the formula as DIMACS CNF")
    g.add_argument("--jobs", type=int, default=1)
    g.set_defaults(fn=cmd_gen)

    c = sub.add_parser("check", help="check a proof file")
    c.add_argument("system", choices=["rlin", "pcr"])
    c.add_argument("file")
    c.add_argument("--semantic", action="store_true", help="brute-force soundness audit")
    c.add_argument("--local", action="store_true", help="audit each line against its antecedents")
    c.add_argument("--r0", nargs=2, type=int, metavar=("K", "C"))
    c.add_argument("--refutation", action="store_true", help="also require a refutation")
    c.add_argument("--jobs", type=int, default=1)
    c.set_defaults(fn=cmd_check)

    t = sub.add_parser("translate", help="translate a proof between systems")
    t.add_argument("source", choices=["res", "res2", "rcp", "rlin"])
    t.add_argument("target", choices=["rlin", "pcr"])
    t.add_argument("file")
    t.add_argument("-o", "--output", default="-")
    t.add_argument("--cap", type=int, default=10 ** 6, help="monomial cap for pcr")
    t.add_argument("--jobs", type=int, default=1)
    t.set_defaults(fn=cmd_translate)

    r = sub.add_parser("resolve", help="exhaustive resolution refutation of a DIMACS CNF")
    r.add_argument("file")
    r.add_argument("-o", "--output", default="-")
    r.set_defaults(fn=cmd_resolve)

    d = sub.add_parser("derive", help="derive an implied disjunction")
    d.add_argument("premises", help="formula file")
    d.add_argument("target", help="target disjunction, e.g. '1:1 2:1 = 2'")
    d.add_argument("-n", type=int, help="variable count (default: from the file)")
    d.add_argument("--r0", nargs=2, type=int, metavar=("K", "C"))
    d.add_argument("-o", "--output", default="-")
    d.set_defaults(fn=cmd_derive)

    s = sub.add_parser("stats", help="size report for proof files")
    s.add_argument("files", nargs="+")
    s.add_argument("--csv", action="store_true")
    s.set_defaults(fn=cmd_stats)

    w = sub.add_parser("sweep", help="generate, check and report a family over a range")
    w.add_argument("family", choices=["php", "tseitin"])
    w.add_argument("start", type=int)
    w.add_argument("stop", type=int)
    w.add_argument("-p", type=int, default=2)
    w.add_argument("--circulant", action="store_true")
    w.add_argument("--csv", action="store_true")
    w.add_argument("--jobs", type=int, default=1)
    w.set_defaults(fn=cmd_sweep)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return PARSE
    except CheckError as e:
        print(f"invalid: {e}", file=sys.stderr)
        return INVALID
    except (DomainError, LinresError) as e:
        print(f"error: {e}", file=sys.stderr)
        return DOMAIN


if __name__ == "__main__":
    sys.exit(main())
