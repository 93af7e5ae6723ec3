"""Counting lemmas as proof-fragment builders.

Builders take a Context and line ids and return the id of the concluding
line. The *_proof wrappers produce standalone proofs with the expected
premises registered.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .core import Disjunction, LinearEquation, unit, form_eq
from .errors import DuplicateCaseValue, HookMismatch, CheckError
from .proof import BooleanAxiom, Premise, ProofBuilder, Resolve, Simplify, Weaken


def linear_form(coeffs):
    """Normalized terms tuple for a coefficient map or pair list."""
    return LinearEquation(coeffs, 0).terms


def _own(ctx, lid):
    """Equations of a line that are not part of the context side."""
    return [e for e in ctx.content(lid) if e not in ctx.side]


@dataclass
class Hook:
    """Derives E from the case equation. fn(child_ctx, assumption_line) -> line."""
    eq: LinearEquation
    fn: Callable


@dataclass
class DerivationHook:
    """A standalone sub-proof of E from K plus the case equation (z = a).

    `assumption` is the premise id holding (z = a) inside `proof`; `bindings`
    maps the other premise ids to line ids of the host builder.
    """
    eq: LinearEquation
    proof: object
    assumption: int
    bindings: dict = field(default_factory=dict)

    @property
    def fn(self):
        return self

    def __call__(self, ctx, assumption_line):
        from .checker import check_proof
        p = self.proof
        if p.premises.get(self.assumption) != Disjunction([self.eq]):
            raise HookMismatch(f"premise {self.assumption} of the hook is not ({self.eq})")
        if not p.lines:
            raise HookMismatch("hook sub-proof has no lines")
        try:
            check_proof(p)
        except CheckError as e:
            raise HookMismatch(f"hook sub-proof invalid: {e}") from None
        return replay(ctx, p, {self.assumption: assumption_line, **self.bindings})


def replay(ctx, proof, premise_lines):
    """Re-emit a checked proof inside ctx.

    premise_lines maps pid -> host line, or is a callable doing so lazily.
    """
    get = premise_lines if callable(premise_lines) else premise_lines.get
    m = {}
    for ln in proof.lines:
        j = ln.just
        if isinstance(j, BooleanAxiom):
            m[ln.id] = ctx.axiom(j.var)
        elif isinstance(j, Premise):
            host = get(j.pid)
            if host is None:
                raise HookMismatch(f"premise {j.pid} is not bound")
            m[ln.id] = ctx.use(host)
        elif isinstance(j, Resolve):
            da, db = proof.line(j.a).disj, proof.line(j.b).disj
            m[ln.id] = ctx.resolve(m[j.a], da[j.ia], m[j.b], db[j.ib], j.op)
        elif isinstance(j, Weaken):
            m[ln.id] = ctx.weaken(m[j.a], j.eq)
        elif isinstance(j, Simplify):
            m[ln.id] = ctx.simplify(m[j.a], proof.line(j.a).disj[j.i])
    return m[proof.lines[-1].id]


def case_analysis(ctx, case_line, hooks, target=None, chained=False):
    """From case_line = OR of the hook equations derive OR of the E_i.

    If all case equations share one linear form z each
    hook is lifted by the other cases and the (z=a_j) disjuncts are cut
    pairwise by subtraction and Simplification. Otherwise (for instance a
    clause) hooks are chained: hook i runs with the remaining cases and the
    already derived E_j as side, and its assumption is the previous result.
    chained=True forces the second mode.
    """
    eqs = [h.eq for h in hooks]
    if len(set(eqs)) != len(eqs):
        raise DuplicateCaseValue("case values must be pairwise distinct")
    have = ctx.content(case_line)
    for e in eqs:
        if e not in have:
            raise HookMismatch(f"case {e} not in the case line")
    for e in have:
        if e not in ctx.side and e not in eqs:
            raise HookMismatch(f"case line equation {e} has no hook")
    if not hooks:
        res = case_line
    elif not chained and len({e.terms for e in eqs}) == 1 and eqs[0].terms:
        res = _case_same_form(ctx, case_line, hooks)
    else:
        res = _case_chained(ctx, case_line, hooks)
    if target is not None:
        res = ctx.weaken_all(res, target)
    return res


def _case_same_form(ctx, case_line, hooks):
    eqs = [h.eq for h in hooks]
    F = []
    for i, h in enumerate(hooks):
        child = ctx.extend([e for j, e in enumerate(eqs) if j != i])
        F.append(h.fn(child, child.use(case_line)))
    G = F[0]
    for k in range(1, len(F)):
        zk = eqs[k]
        if zk not in ctx.content(G):
            continue
        H = F[k]
        for j in range(k):
            zj = eqs[j]
            if zj not in ctx.content(H):
                continue
            H = ctx.sub(G, zk, H, zj)
            H = ctx.simplify(H, zk - zj)
        G = H
    return G


def _case_chained(ctx, case_line, hooks):
    F = case_line
    for h in hooks:
        child = ctx.extend([e for e in ctx.content(F) if e != h.eq])
        F = h.fn(child, F)
    return F


def add_unit_throughout(ctx, line, eqs, unit_line, u, op="add"):
    """Replace each e in eqs by e + u (or e - u) using the unit line."""
    cur = line
    for e in eqs:
        cur = ctx.resolve(cur, e, unit_line, u, op)
    return cur


def combine_value_sets(ctx, d1, d2, target=None):
    """From OR(z1=a), OR(z2=b) derive OR(z1+z2=a+b)."""
    A = _own(ctx, d1)
    B = _own(ctx, d2)

    def make(u):
        def fn(child, assum):
            return add_unit_throughout(child, child.use(d2), B, assum, u)
        return fn

    return case_analysis(ctx, d1, [Hook(u, make(u)) for u in A], target)


def _repeat(ctx, cur, ce, helper, he, times, op):
    for _ in range(times):
        nxt = ce + he if op == "add" else ce - he
        cur = ctx.resolve(cur, ce, helper, he, op)
        ce = nxt
    return cur


def scaled_axiom(ctx, var, a):
    """(a*x = 0) | (a*x = a) from the Boolean axiom of x."""
    ax = ctx.axiom(var)
    l0, l1 = unit(var, 0), unit(var, 1)
    if a == 1:
        return ax
    if a > 1:
        c = _repeat(ctx, ax, l0, ax, l0, a - 1, "add")
        return _repeat(ctx, c, l1, c, l1, a - 1, "add")
    if a < 0:
        c = _repeat(ctx, ax, l0, ax, l0, -a + 1, "sub")
        return _repeat(ctx, c, l1, c, l1, -a + 1, "sub")
    raise ValueError("zero coefficient")


def all_values(ctx, form, zero_var=1):
    """OR over all attainable values of the linear form (from axioms only)."""
    form = linear_form(form)
    if not form:
        return ctx.zero(zero_var)
    acc = None
    for v, a in form:
        s = scaled_axiom(ctx, v, a)
        acc = s if acc is None else combine_value_sets(ctx, acc, s)
    return acc


def one_hot_sum(ctx, clause_line, variables):
    """From (x1=1)|...|(xn=1) derive (S=1)|...|(S=n), S the sum of the xi."""
    variables = list(variables)
    if len(variables) == 1:
        return clause_line
    hooks = []
    for v in variables:
        others = [(w, 1) for w in variables if w != v]
        V = all_values(ctx, others)
        u = unit(v, 1)

        def fn(child, assum, V=V, u=u):
            return add_unit_throughout(child, child.use(V), _own(ctx, V), assum, u)
        hooks.append(Hook(u, fn))
    return case_analysis(ctx, clause_line, hooks)


def cut_unit(ctx, line, e, unit_line, u):
    """Remove e from line using a unit line u that contradicts it."""
    if e in ctx.side:
        return line
    r = ctx.sub(line, e, unit_line, u)
    return ctx.simplify(r, e - u)


def at_most_one_sum(ctx, variables, pair_line):
    """From all (xi=0)|(xj=0) derive (S=0)|(S=1).

    pair_line(v, w) returns the line id of the pair disjunction for v, w.
    """
    variables = list(variables)
    P = ctx.axiom(variables[0])
    for m in range(1, len(variables)):
        x = variables[m]
        prev = variables[:m]
        S_old = _own(ctx, P)
        z0, z1 = unit(x, 0), unit(x, 1)

        def branch0(child, A, P=P, S_old=S_old, z0=z0):
            return add_unit_throughout(child, child.use(P), S_old, A, z0)

        def branch1(child, A, prev=prev, x=x, z0=z0, z1=z1):
            acc, ae = A, z1
            for v in prev:
                pl = child.use(pair_line(v, x))
                uv = cut_unit(child, pl, z0, A, z1)
                ve = unit(v, 0)
                acc = child.add(acc, ae, uv, ve)
                ae = ae + ve
            return acc

        P = case_analysis(ctx, ctx.axiom(x), [Hook(z0, branch0), Hook(z1, branch1)])
    return P


# standalone wrappers

def all_values_proof(form, num_vars=None):
    form = linear_form(form)
    n = num_vars or max([v for v, _ in form], default=1)
    b = ProofBuilder(n)
    all_values(b.root, form)
    return b.proof


def one_hot_sum_proof(n):
    b = ProofBuilder(n, [Disjunction(unit(i, 1) for i in range(1, n + 1))])
    one_hot_sum(b.root, b.root.premise(1), range(1, n + 1))
    return b.proof


def at_most_one_premises(n):
    return [Disjunction((unit(i, 0), unit(j, 0)))
            for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def at_most_one_sum_proof(n):
    prem = at_most_one_premises(n)
    b = ProofBuilder(n, prem)
    pid = {}
    k = 1
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            pid[(i, j)] = k
            k += 1
    at_most_one_sum(b.root, range(1, n + 1),
                    lambda v, w: b.root.premise(pid[(min(v, w), max(v, w))]))
    return b.proof


def combine_value_sets_proof(d1, d2, num_vars):
    b = ProofBuilder(num_vars, [d1, d2])
    combine_value_sets(b.root, b.root.premise(1), b.root.premise(2))
    return b.proof


def value_line(form, values):
    form = linear_form(form)
    return Disjunction(form_eq(form, v) for v in values)
