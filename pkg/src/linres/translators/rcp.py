"""R(CP*) proofs (disjunctions of inequalities a.x >= a0) and their simulation
in R(lin).

Inside this module an inequality is stored as a LinearEquation whose rhs is
the bound a0; the relation is >= rather than =.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..core import Disjunction, LinearEquation, form_eq, unit
from ..errors import InvalidRcpStep, ParseError
from ..macros import Hook, all_values, case_analysis
from ..proof import ProofBuilder
from ..semantics import value_set

FALSE_INEQ = LinearEquation((), 1)     # 0 >= 1


def ineq(coeffs, a0):
    return LinearEquation(coeffs, a0)


def ineq_holds(L, a):
    return L.lhs(a) >= L.rhs


def ineq_to_disjunction(form, a0=None):
    """Translate a.x >= a0 into the disjunction (a.x = a0) | ... | (a.x = a0+k)."""
    if a0 is None:
        form, a0 = form.terms, form.rhs
    form = LinearEquation(form, 0).terms
    if not form:
        return Disjunction([form_eq((), a0 if a0 > 0 else 0)])
    top = sum(c for _, c in form if c > 0)
    return Disjunction(form_eq(form, v) for v in range(a0, max(top, a0) + 1))


def translate_line(d):
    out = []
    for L in d:
        out.extend(ineq_to_disjunction(L))
    return Disjunction(out)


@dataclass(frozen=True)
class RcpStep:
    id: int
    kind: str          # input axiom1 axiom2 axiom3 rule1 .. rule5
    args: tuple
    disj: Disjunction  # of inequalities


@dataclass
class RcpProof:
    num_vars: int
    premises: dict
    steps: list


def _ant(seen, sid, lid):
    if sid not in seen:
        raise InvalidRcpStep(f"antecedent {sid} is not an earlier step", lid)
    return seen[sid]


def _pick(d, i, lid):
    if not 0 <= i < len(d):
        raise InvalidRcpStep(f"index {i} out of range", lid)
    return d[i]


def rcp_result(s, seen, premises, num_vars):
    k, a = s.kind, s.args
    if k == "input":
        if a[0] not in premises:
            raise InvalidRcpStep(f"unknown premise {a[0]}", s.id)
        return premises[a[0]]
    if k in ("axiom1", "axiom2"):
        v = a[0]
        if not 1 <= v <= num_vars:
            raise InvalidRcpStep(f"variable {v} out of range", s.id)
        return Disjunction([ineq({v: 1}, 0)] if k == "axiom1" else [ineq({v: -1}, -1)])
    if k == "axiom3":
        (L,) = a
        return Disjunction([L, ineq(L.scale(-1).terms, 1 - L.rhs)])
    d = _ant(seen, a[0], s.id)
    if k == "rule1":
        d2 = _ant(seen, a[2], s.id)
        L1, L2 = _pick(d, a[1], s.id), _pick(d2, a[3], s.id)
        return Disjunction(d.without_index(a[1]) + d2.without_index(a[3]) + (L1 + L2,))
    if k == "rule2":
        return Disjunction(d.eqs + (a[1],))
    i = a[1]
    L = _pick(d, i, s.id)
    if k == "rule3":
        if L != FALSE_INEQ:
            raise InvalidRcpStep("rule 3 needs the inequality 0 >= 1", s.id)
        return Disjunction(d.without_index(i))
    c = a[2]
    if k == "rule4":
        if c < 0:
            raise InvalidRcpStep("rule 4 needs c >= 0", s.id)
        return Disjunction(d.without_index(i) + (L.scale(c) if c else ineq((), 0),))
    if k == "rule5":
        if c < 1 or any(x % c for _, x in L.terms):
            raise InvalidRcpStep("rule 5 needs c >= 1 dividing every coefficient", s.id)
        q = -((-L.rhs) // c)
        return Disjunction(d.without_index(i) + (ineq([(v, x // c) for v, x in L.terms], q),))
    raise InvalidRcpStep(f"unknown step kind {k}", s.id)


def check_rcp(rp: RcpProof):
    seen = {}
    for s in rp.steps:
        if s.id in seen:
            raise InvalidRcpStep("duplicate step id", s.id)
        got = rcp_result(s, seen, rp.premises, rp.num_vars)
        if got != s.disj:
            raise InvalidRcpStep(f"stated {format_idisj(s.disj)} but rule gives {format_idisj(got)}", s.id)
        seen[s.id] = s.disj
    return True


# simulation

def _fit(ctx, line, target, av):
    """Weaken line to target after cutting unattainable extra values."""
    extra = [e for e in ctx.content(line) if e not in target]
    for e in [e for e in extra if not e.terms]:
        line = ctx.simplify(line, e)
    forms = {}
    for e in extra:
        if e.terms:
            forms.setdefault(e.terms, []).append(e)
    for form, es in forms.items():
        vs = value_set(form)
        if any(e.rhs in vs for e in es):
            raise InvalidRcpStep("internal: attainable value outside the translation")
        V = av(form)

        def make(u, es=es, line=line):
            def fn(child, assum):
                cur = child.use(line)
                for e in es:
                    cur = child.sub(cur, e, assum, u)
                    cur = child.simplify(cur, e - u)
                return cur
            return fn
        keep = Disjunction(e for e in ctx.content(line) if e not in es)
        line = case_analysis(ctx, V, [Hook(u, make(u)) for u in ctx.content(V)], keep)
    line = ctx.weaken_all(line, target)
    if ctx.content(line) != target:
        raise InvalidRcpStep("internal: translation mismatch")
    return line


def _trivial(child, assum):
    return assum


def _hooks(ctx, line, active, make):
    """Hooks for every equation of line; equations in `active` get make(e)."""
    return [Hook(e, make(e) if e in active else _trivial) for e in ctx.content(line)]


def rcp_to_rlin(rp: RcpProof):
    check_rcp(rp)
    pids = sorted(rp.premises)
    b = ProofBuilder(rp.num_vars, {p: translate_line(rp.premises[p]) for p in pids})
    ctx = b.root
    cache = {}

    def av(form):
        if form not in cache:
            cache[form] = all_values(ctx, form)
        return cache[form]

    line, src = {}, {}
    for s in rp.steps:
        want = translate_line(s.disj)
        k, a = s.kind, s.args
        if k == "input":
            cur = ctx.premise(a[0])
        elif k == "axiom1":
            cur = ctx.axiom(a[0])
        elif k == "axiom2":
            v = a[0]
            cur = ctx.flip(ctx.flip(ctx.axiom(v), unit(v, 0)), unit(v, 1))
        elif k == "axiom3":
            (L,) = a
            cur = av(L.terms) if L.terms else ctx.zero(1)
            for e in ctx.content(cur):
                if e.terms and e.rhs < L.rhs:
                    cur = ctx.flip(cur, e)
        elif k == "rule1":
            cur = _rule1(ctx, line, src, s)
        elif k == "rule2":
            cur = ctx.weaken_all(line[a[0]], ineq_to_disjunction(a[1]))
        elif k == "rule3":
            cur = ctx.simplify(line[a[0]], FALSE_INEQ)
        elif k == "rule4":
            cur = _rule4(ctx, line[a[0]], src[a[0]][a[1]], a[2])
        else:
            cur = _rule5(ctx, line[a[0]], src[a[0]][a[1]], a[2], av)
        line[s.id] = _fit(ctx, cur, want, av)
        src[s.id] = s.disj
    return b.proof


def _rule1(ctx, line, src, s):
    id1, i1, id2, i2 = s.args
    L1, L2 = src[id1][i1], src[id2][i2]
    l1, l2 = line[id1], line[id2]
    T1, T2 = ineq_to_disjunction(L1), ineq_to_disjunction(L2)

    def make(u):
        def fn(child, assum):
            cur = child.use(l2)
            for e in T2:
                cur = child.add(cur, e, assum, u)
            return cur
        return fn
    return case_analysis(ctx, l1, _hooks(ctx, l1, T1, make), chained=True)


def _rule4(ctx, l1, L, c):
    T = ineq_to_disjunction(L)

    def make(u):
        def fn(child, assum):
            if c == 0:
                return child.sub(assum, u, assum, u)
            return child.scaled(assum, u, c)
        return fn
    return case_analysis(ctx, l1, _hooks(ctx, l1, T, make), chained=True)


def _rule5(ctx, l1, L, c, av):
    T = ineq_to_disjunction(L)
    if not L.terms:
        return ctx.simplify_constants(l1)
    form = tuple((v, x // c) for v, x in L.terms)
    V = av(form)
    low = [e for e in ctx.content(V) if c * e.rhs < L.rhs]

    def make(u):
        def fn(child, assum):
            cur = child.use(V)
            for e in low:
                cur = child.scaled(cur, e, c)
                ce = e.scale(c)
                cur = child.sub(cur, ce, assum, u)
                cur = child.simplify(cur, ce - u)
            return cur
        return fn
    return case_analysis(ctx, l1, _hooks(ctx, l1, T, make), chained=True)


# text format: inequalities "i:c ... >= c0", disjunctions joined by " | "

def format_ineq(L):
    lhs = " ".join(f"{v}:{c}" for v, c in L.terms)
    return f"{lhs} >= {L.rhs}" if lhs else f">= {L.rhs}"


def format_idisj(d):
    return " | ".join(format_ineq(L) for L in d) if len(d) else "FALSE"


def parse_ineq_tokens(toks, no=None):
    if ">=" not in toks:
        raise ParseError("inequality needs '>='", no)
    k = toks.index(">=")
    if k != len(toks) - 2:
        raise ParseError("expected a single bound after '>='", no)
    coeffs = {}
    try:
        for t in toks[:k]:
            v, _, c = t.partition(":")
            v, c = int(v), int(c)
            if v < 1 or v in coeffs:
                raise ValueError
            coeffs[v] = c
        a0 = int(toks[-1])
    except ValueError:
        raise ParseError(f"bad inequality {' '.join(toks)!r}", no) from None
    return ineq(coeffs, a0)


def parse_idisj(text, no=None):
    toks = text.split()
    if toks == ["FALSE"]:
        return Disjunction()
    parts, cur = [], []
    for t in toks:
        if t == "|":
            parts.append(cur)
            cur = []
        else:
            cur.append(t)
    parts.append(cur)
    return Disjunction(parse_ineq_tokens(p, no) for p in parts)


def _fmt_args(s):
    k, a = s.kind, s.args
    if k == "axiom3":
        return [format_ineq(a[0])]
    if k == "rule2":
        return [str(a[0]), "(", format_ineq(a[1]), ")"]
    return [str(x) for x in a]


def format_rcp(rp: RcpProof) -> str:
    out = ["rcp 1", f"vars {rp.num_vars}"]
    for pid in sorted(rp.premises):
        out.append(f"premise {pid} {format_idisj(rp.premises[pid])}")
    for s in rp.steps:
        out.append(" ".join([f"line {s.id} {s.kind}"] + _fmt_args(s)) + f" : {format_idisj(s.disj)}")
    return "\n".join(out) + "\n"


_ARITY = {"input": 1, "axiom1": 1, "axiom2": 1, "rule1": 4, "rule3": 2, "rule4": 3, "rule5": 3}


def parse_rcp(text: str) -> RcpProof:
    rows = [(no, raw.split("#", 1)[0].strip()) for no, raw in enumerate(text.splitlines(), 1)]
    rows = [(no, t) for no, t in rows if t]
    if not rows or rows[0][1] != "rcp 1":
        raise ParseError("expected header 'rcp 1'", rows[0][0] if rows else 1)
    try:
        h = rows[1][1].split()
        if h[0] != "vars" or len(h) != 2:
            raise ValueError
        n = int(h[1])
    except (ValueError, IndexError):
        raise ParseError("expected 'vars <n>'", rows[1][0] if len(rows) > 1 else 2) from None
    premises, steps = {}, []
    for no, t in rows[2:]:
        w = t.split()
        try:
            if w[0] == "premise":
                premises[int(w[1])] = parse_idisj(" ".join(w[2:]), no)
                continue
            if w[0] != "line":
                raise ParseError(f"unknown record {w[0]!r}", no)
            head, sep, body = t.partition(" : ")
            if not sep:
                raise ParseError("missing ' : <disjunction>'", no)
            h = head.split()
            sid, kind, rest = int(h[1]), h[2], h[3:]
            if kind == "axiom3":
                args = (parse_ineq_tokens(rest, no),)
            elif kind == "rule2":
                if len(rest) < 4 or rest[1] != "(" or rest[-1] != ")":
                    raise ParseError("rule2 expects '<id> ( <inequality> )'", no)
                args = (int(rest[0]), parse_ineq_tokens(rest[2:-1], no))
            elif kind in _ARITY and len(rest) == _ARITY[kind]:
                args = tuple(int(x) for x in rest)
            else:
                raise ParseError(f"bad {kind} step", no)
            steps.append(RcpStep(sid, kind, args, parse_idisj(body, no)))
        except (ValueError, IndexError):
            raise ParseError("malformed record", no) from None
    return RcpProof(n, premises, steps)
