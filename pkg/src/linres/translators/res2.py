"""Res(2) proofs over 2-DNFs and their simulation in R(lin).

A term is a sorted tuple of one or two DIMACS literals. A term l1&l2 is
translated to the equation l1^ + l2^ = 2 with x^ = x and (not x)^ = 1 - x,
constants moved to the right.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..core import Disjunction, LinearEquation, literal_equation, unit
from ..errors import InvalidRes2Step, ParseError
from ..macros import Hook, case_analysis, cut_unit
from ..proof import ProofBuilder


def term(*lits):
    lits = tuple(sorted(set(lits), key=lambda x: (abs(x), x)))
    if not 1 <= len(lits) <= 2 or 0 in lits:
        raise ValueError(f"bad term {lits}")
    return lits


def dnf(terms):
    return tuple(dict.fromkeys(term(*t) for t in terms))


def term_equation(t):
    if len(t) == 1:
        return literal_equation(t[0])
    coeffs = {}
    const = 0
    for x in t:
        v = abs(x)
        coeffs[v] = coeffs.get(v, 0) + (1 if x > 0 else -1)
        const += x < 0
    return LinearEquation(coeffs, 2 - const)


def translate_dnf(d):
    return Disjunction(term_equation(t) for t in d)


def term_holds(t, a):
    return all((a[abs(x) - 1] == 1) == (x > 0) for x in t)


@dataclass(frozen=True)
class Res2Step:
    id: int
    dnf: tuple
    kind: str          # input | cut | and | weaken
    ants: tuple = ()
    args: tuple = ()   # cut: (term,), and: (l1, l2), weaken: (term,)


@dataclass
class Res2Proof:
    num_vars: int
    steps: list


def _result(s, seen):
    if s.kind == "input":
        return s.dnf
    if any(a not in seen for a in s.ants):
        raise InvalidRes2Step("antecedent is not an earlier step", s.id)
    if s.kind == "cut":
        (t,) = s.args
        d1, d2 = seen[s.ants[0]], seen[s.ants[1]]
        negs = [(-x,) for x in t]
        if t not in d1 or any(n not in d2 for n in negs):
            raise InvalidRes2Step("cut term or its negation missing", s.id)
        return dnf([u for u in d1 if u != t] + [u for u in d2 if u not in negs])
    if s.kind == "and":
        l1, l2 = s.args
        d1, d2 = seen[s.ants[0]], seen[s.ants[1]]
        if (l1,) not in d1 or (l2,) not in d2:
            raise InvalidRes2Step("AND-introduction literal missing", s.id)
        return dnf([u for u in d1 if u != (l1,)] + [u for u in d2 if u != (l2,)] + [(l1, l2)])
    if s.kind == "weaken":
        return dnf(list(seen[s.ants[0]]) + [s.args[0]])
    raise InvalidRes2Step(f"unknown step kind {s.kind}", s.id)


def check_res2(rp: Res2Proof):
    seen = {}
    for s in rp.steps:
        if s.id in seen:
            raise InvalidRes2Step("duplicate step id", s.id)
        for t in s.dnf:
            if any(abs(x) > rp.num_vars for x in t):
                raise InvalidRes2Step("literal out of range", s.id)
        got = _result(s, seen)
        if set(got) != set(s.dnf):
            raise InvalidRes2Step(f"stated {format_dnf(s.dnf)} but rule gives {format_dnf(got)}", s.id)
        seen[s.id] = s.dnf
    return True


def _lit_holds(x, val):
    return val == (1 if x > 0 else 0)


def _cut_two(ctx, l1, l2, t, target):
    """From l1 = A | T(t) and l2 = B | T(-a) | T(-b) derive A | B, t = a&b."""
    a, b = t
    u, v = abs(a), abs(b)
    T = term_equation(t)
    na, nb = literal_equation(-a), literal_equation(-b)

    def outer(ua):
        def fn(c1, Au):
            def inner(vb):
                def gn(c2, Av):
                    au, av = c2.use(Au), c2.use(Av)
                    eu, ev = unit(u, ua), unit(v, vb)
                    if _lit_holds(a, ua) and _lit_holds(b, vb):
                        cur = c2.use(l2)
                        cur = cut_unit(c2, cur, na, au, eu)
                        cur = cut_unit(c2, cur, nb, av, ev)
                        return cur
                    cur = c2.use(l1)
                    cu, cv = T.coeff(u), T.coeff(v)
                    cur = c2.resolve(cur, T, au, eu, "sub" if cu > 0 else "add")
                    T1 = T - eu if cu > 0 else T + eu
                    cur = c2.resolve(cur, T1, av, ev, "sub" if cv > 0 else "add")
                    T2 = T1 - ev if cv > 0 else T1 + ev
                    return c2.simplify(cur, T2)
                return gn
            return case_analysis(c1, c1.axiom(v), [Hook(unit(v, 0), inner(0)), Hook(unit(v, 1), inner(1))],
                                 target)
        return fn

    return case_analysis(ctx, ctx.axiom(u), [Hook(unit(u, 0), outer(0)), Hook(unit(u, 1), outer(1))], target)


def res2_to_rlin(rp: Res2Proof):
    check_res2(rp)
    inputs = [s for s in rp.steps if s.kind == "input"]
    pid = {s.id: k + 1 for k, s in enumerate(inputs)}
    b = ProofBuilder(rp.num_vars, [translate_dnf(s.dnf) for s in inputs])
    ctx = b.root
    line = {}
    for s in rp.steps:
        want = translate_dnf(s.dnf)
        if s.kind == "input":
            cur = ctx.premise(pid[s.id])
        elif s.kind == "weaken":
            cur = ctx.weaken(line[s.ants[0]], term_equation(s.args[0]))
        elif s.kind == "and":
            cur = _and_intro(ctx, line[s.ants[0]], line[s.ants[1]], *s.args)
        else:
            (t,) = s.args
            l1, l2 = line[s.ants[0]], line[s.ants[1]]
            if len(t) == 1:
                x = t[0]
                if x > 0:
                    r = ctx.sub(l1, unit(x, 1), l2, unit(x, 0))
                else:
                    r = ctx.sub(l2, unit(-x, 1), l1, unit(-x, 0))
                cur = ctx.simplify(r, LinearEquation((), 1))
            elif abs(t[0]) == abs(t[1]):
                # x & -x translates to (0=1)
                cur = ctx.simplify(l1, term_equation(t))
                cur = ctx.weaken_all(cur, want)
            else:
                cur = _cut_two(ctx, l1, l2, t, want)
        cur = ctx.weaken_all(cur, want)
        if ctx.content(cur) != want:
            raise InvalidRes2Step("internal: translation mismatch", s.id)
        line[s.id] = cur
    return b.proof


def _and_intro(ctx, l1, l2, x, y):
    e1, e2 = literal_equation(x), literal_equation(y)
    if x == y:
        return ctx.weaken_all(l1, ctx.content(l2))
    if x > 0 and y > 0:
        return ctx.add(l1, e1, l2, e2)
    if x > 0:
        return ctx.sub(l1, e1, l2, e2)
    if y > 0:
        return ctx.sub(l2, e2, l1, e1)
    f = ctx.flip(l1, e1)
    return ctx.sub(f, -e1, l2, e2)


# text format

def format_term(t):
    return "&".join(str(x) for x in t)


def format_dnf(d):
    return ";".join(format_term(t) for t in d) if d else "FALSE"


def parse_dnf(tok, no=None):
    if tok == "FALSE":
        return ()
    try:
        return dnf(tuple(int(x) for x in part.split("&")) for part in tok.split(";"))
    except ValueError:
        raise ParseError(f"bad 2-DNF {tok!r}", no) from None


def format_res2(rp: Res2Proof) -> str:
    out = ["res2 1", f"vars {rp.num_vars}"]
    for s in rp.steps:
        head = f"line {s.id} {s.kind}"
        if s.kind == "cut":
            head += f" {s.ants[0]} {s.ants[1]} {format_term(s.args[0])}"
        elif s.kind == "and":
            head += f" {s.ants[0]} {s.ants[1]} {s.args[0]} {s.args[1]}"
        elif s.kind == "weaken":
            head += f" {s.ants[0]} {format_term(s.args[0])}"
        out.append(f"{head} : {format_dnf(s.dnf)}")
    return "\n".join(out) + "\n"


def parse_res2(text: str) -> Res2Proof:
    lines = [(no, raw.split("#", 1)[0].strip()) for no, raw in enumerate(text.splitlines(), 1)]
    lines = [(no, t) for no, t in lines if t]
    if not lines or lines[0][1] != "res2 1":
        raise ParseError("expected header 'res2 1'", lines[0][0] if lines else 1)
    if len(lines) < 2 or not lines[1][1].startswith("vars "):
        raise ParseError("expected 'vars <n>'", lines[1][0] if len(lines) > 1 else 2)
    try:
        n = int(lines[1][1].split()[1])
    except (ValueError, IndexError):
        raise ParseError("bad vars line", lines[1][0]) from None
    steps = []
    for no, t in lines[2:]:
        head, sep, body = t.partition(" : ")
        if not sep:
            raise ParseError("missing ' : <2-DNF>'", no)
        h = head.split()
        if len(h) < 3 or h[0] != "line":
            raise ParseError("expected 'line <id> <kind> ...'", no)
        try:
            sid, kind, rest = int(h[1]), h[2], h[3:]
            d = parse_dnf(body.strip(), no)
            if kind == "input" and not rest:
                steps.append(Res2Step(sid, d, "input"))
            elif kind == "cut" and len(rest) == 3:
                steps.append(Res2Step(sid, d, "cut", (int(rest[0]), int(rest[1])), (parse_dnf(rest[2], no)[0],)))
            elif kind == "and" and len(rest) == 4:
                steps.append(Res2Step(sid, d, "and", (int(rest[0]), int(rest[1])), (int(rest[2]), int(rest[3]))))
            elif kind == "weaken" and len(rest) == 2:
                steps.append(Res2Step(sid, d, "weaken", (int(rest[0]),), (parse_dnf(rest[1], no)[0],)))
            else:
                raise ParseError(f"bad {kind} step", no)
        except (ValueError, IndexError):
            raise ParseError("malformed step", no) from None
    return Res2Proof(n, steps)
