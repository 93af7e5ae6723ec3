"""Text formats: R(lin) proofs and formulas, DIMACS CNF, graph files.

All formats are line oriented; '#' starts a comment. Printing is canonical so
that parse(print(x)) == x and print(parse(text)) == text for printed text.
"""
from __future__ import annotations

from .core import (Clause, Cnf, FALSE, boolean_axiom, format_disjunction, format_equation,
                   parse_disjunction_tokens, parse_equation_tokens)
from .errors import ParseError
from .proof import BooleanAxiom, Line, Premise, Proof, Resolve, Simplify, Weaken


def _rows(text):
    for no, raw in enumerate(text.splitlines(), 1):
        t = raw.split("#", 1)[0].strip()
        if t:
            yield no, t


def _int(tok, no, what="number"):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"bad {what} {tok!r}", no) from None


def _at(no, fn, *args):
    try:
        return fn(*args)
    except ParseError as e:
        if e.lineno is None:
            raise ParseError(str(e), no) from None
        raise


# R(lin)

def format_just(j):
    if isinstance(j, BooleanAxiom):
        return f"axiom {j.var}"
    if isinstance(j, Premise):
        return f"premise {j.pid}"
    if isinstance(j, Resolve):
        op = "res+" if j.op == "add" else "res-"
        return f"{op} {j.a} {j.ia} {j.b} {j.ib}"
    if isinstance(j, Weaken):
        return f"weaken {j.a} {format_equation(j.eq)}"
    if isinstance(j, Simplify):
        return f"simp {j.a} {j.i}"
    raise ValueError(f"unknown justification {j!r}")


def format_proof(p: Proof) -> str:
    out = ["rlin 1", f"vars {p.num_vars}"]
    for pid in sorted(p.premises):
        out.append(f"premise {pid} {format_disjunction(p.premises[pid])}")
    for ln in p.lines:
        head = f"line {ln.id} {format_just(ln.just)}"
        if isinstance(ln.just, (BooleanAxiom, Premise)):
            out.append(head)
        else:
            out.append(f"{head} : {format_disjunction(ln.disj)}")
    return "\n".join(out) + "\n"


def format_formula(num_vars, premises) -> str:
    if not isinstance(premises, dict):
        premises = {i + 1: d for i, d in enumerate(premises)}
    return format_proof(Proof(num_vars, premises, []))


def _parse_line(no, t, premises):
    head, sep, body = t.partition(" : ")
    w = head.split()
    if len(w) < 4:
        raise ParseError("expected 'line <id> <rule> ...'", no)
    lid, rule, rest = _int(w[1], no, "line id"), w[2], w[3:]
    stated = _at(no, parse_disjunction_tokens, body.split()) if sep else None
    if rule == "axiom" and len(rest) == 1:
        j = BooleanAxiom(_int(rest[0], no, "variable"))
        d = boolean_axiom(j.var) if j.var >= 1 else FALSE
    elif rule == "premise" and len(rest) == 1:
        j = Premise(_int(rest[0], no, "premise id"))
        d = premises.get(j.pid, FALSE)
    elif rule in ("res+", "res-") and len(rest) == 4:
        a, ia, b, ib = (_int(x, no) for x in rest)
        j = Resolve(a, ia, b, ib, "add" if rule == "res+" else "sub")
        d = None
    elif rule == "weaken" and len(rest) >= 3:
        j = Weaken(_int(rest[0], no, "line id"), _at(no, parse_equation_tokens, rest[1:]))
        d = None
    elif rule == "simp" and len(rest) == 2:
        j = Simplify(_int(rest[0], no, "line id"), _int(rest[1], no, "index"))
        d = None
    else:
        raise ParseError(f"malformed {rule!r} line", no)
    if stated is not None:
        d = stated
    if d is None:
        raise ParseError("missing ' : <disjunction>'", no)
    return Line(lid, d, j)


def parse_proof(text: str) -> Proof:
    rows = list(_rows(text))
    if not rows or rows[0][1] != "rlin 1":
        raise ParseError("expected header 'rlin 1'", rows[0][0] if rows else 1)
    if len(rows) < 2:
        raise ParseError("expected 'vars <n>'", rows[0][0] + 1)
    no, t = rows[1]
    w = t.split()
    if len(w) != 2 or w[0] != "vars":
        raise ParseError("expected 'vars <n>'", no)
    n = _int(w[1], no, "variable count")
    if n < 1:
        raise ParseError("proof files need at least one variable", no)
    premises, lines = {}, []
    for no, t in rows[2:]:
        w = t.split()
        if w[0] == "premise":
            if lines:
                raise ParseError("premises must precede proof lines", no)
            if len(w) < 3:
                raise ParseError("expected 'premise <id> <disjunction>'", no)
            pid = _int(w[1], no, "premise id")
            if pid in premises:
                raise ParseError(f"duplicate premise {pid}", no)
            d = _at(no, parse_disjunction_tokens, w[2:])
            if any(v > n for v in d.variables()):
                raise ParseError(f"variable above vars={n}", no)
            premises[pid] = d
        elif w[0] == "line":
            lines.append(_parse_line(no, t, premises))
        else:
            raise ParseError(f"unknown record {w[0]!r}", no)
    return Proof(n, premises, lines)


def parse_formula(text: str):
    """(num_vars, premises dict) from a proof file without lines."""
    p = parse_proof(text)
    if p.lines:
        raise ParseError("formula files carry no proof lines")
    return p.num_vars, p.premises


# DIMACS

def format_dimacs(cnf: Cnf) -> str:
    out = [f"p cnf {cnf.num_vars} {len(cnf.clauses)}"]
    for c in cnf.clauses:
        out.append(" ".join(str(x) for x in c.literals + (0,)))
    return "\n".join(out) + "\n"


def parse_dimacs(text: str) -> Cnf:
    header = None
    clauses, cur = [], []
    for no, raw in enumerate(text.splitlines(), 1):
        t = raw.strip()
        if not t or t.startswith("c") or t.startswith("%"):
            continue
        if t.startswith("p"):
            w = t.split()
            if header is not None or len(w) != 4 or w[1] != "cnf":
                raise ParseError("expected a single 'p cnf <vars> <clauses>'", no)
            header = (_int(w[2], no), _int(w[3], no))
            continue
        if header is None:
            raise ParseError("clause before the 'p cnf' header", no)
        for tok in t.split():
            x = _int(tok, no, "literal")
            if abs(x) > header[0]:
                raise ParseError(f"literal {x} exceeds {header[0]} variables", no)
            if x == 0:
                clauses.append(Clause(tuple(cur)))
                cur = []
            else:
                cur.append(x)
    if header is None:
        raise ParseError("missing 'p cnf' header", 1)
    if cur:
        clauses.append(Clause(tuple(cur)))
    if len(clauses) != header[1]:
        raise ParseError(f"header announces {header[1]} clauses, found {len(clauses)}")
    return Cnf(header[0], clauses)


def cnf_of(num_vars, premises):
    """Cnf from clause-translation disjunctions, or None if some is not a clause."""
    from .core import as_clause
    out = []
    for d in (premises.values() if isinstance(premises, dict) else premises):
        lits = as_clause(d)
        if lits is None:
            return None
        out.append(Clause(tuple(lits)))
    return Cnf(num_vars, out)


# graphs

def format_graph(n, edges) -> str:
    deg = [0] * (n + 1)
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    r = deg[1] if n else 0
    return "\n".join([f"graph {n} {r}"] + [f"{u} {v}" for u, v in edges]) + "\n"


def parse_graph(text: str):
    """(n, r, edges) from a graph file."""
    rows = list(_rows(text))
    if not rows:
        raise ParseError("empty graph file", 1)
    no, t = rows[0]
    w = t.split()
    if len(w) != 3 or w[0] != "graph":
        raise ParseError("expected 'graph <n> <r>'", no)
    n, r = _int(w[1], no), _int(w[2], no)
    edges = []
    for no, t in rows[1:]:
        w = t.split()
        if len(w) != 2:
            raise ParseError("expected 'u v'", no)
        edges.append((_int(w[0], no, "vertex"), _int(w[1], no, "vertex")))
    return n, r, edges
