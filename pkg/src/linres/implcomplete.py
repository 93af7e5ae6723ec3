"""Constructive implicational completeness: derive any implied disjunction.

Recursion on the highest remaining variable x. For b in {0,1} the premises
are restricted by subtracting c*(x=b) from every equation mentioning x, the
restricted target is derived recursively, x is re-introduced by adding
c*(x=b) back, and the two branches are joined by case analysis on the
Boolean axiom of x.

Restricted premises are derived lazily (only when the sub-derivation uses
them), false constants (0=k) are simplified away right after restriction,
and a branch stops early when a premise has become empty, when the target
contains (0=0), or when the target contains a premise or a Boolean axiom.
"""
from __future__ import annotations

from .checker import R0Params, r0_classify
from .core import Disjunction, ZERO, unit
from .errors import DomainError, NotImplied, NotR0, NotR0Line, TooManyVariables
from .macros import Hook, case_analysis
from .proof import ProofBuilder
from .semantics import countermodel

RECURSION_CAP = 12


def _clean(d):
    """Drop false constants (0=k), k != 0."""
    return Disjunction(e for e in d if e.terms or e.rhs == 0)


def _tautological(d):
    return ZERO in d


class _Root:
    def __init__(self, line, content, pid=None):
        self.line = line
        self.content = content
        self.pid = pid

    def get(self, ctx):
        if self.pid is not None:
            return ctx.premise(self.pid)
        return ctx.use(self.line)


class _Restricted:
    def __init__(self, parent, x, b, home, units):
        self.parent = parent
        self.x = x
        self.b = b
        self.home = home
        self.units = units
        self.content = _clean(Disjunction(e.restrict(x, b) for e in parent.content))
        self._line = None

    def _materialize(self):
        ctx = self.home
        cur = self.parent.get(ctx)
        for e in self.parent.content:
            c = e.coeff(self.x)
            if not c:
                continue
            su, se = self.units(abs(c))
            cur = ctx.resolve(cur, e, su, se, "sub" if c > 0 else "add")
        return ctx.simplify_constants(cur)

    def get(self, ctx):
        if self._line is None:
            self._line = self._materialize()
        if ctx is self.home:
            return self._line
        return ctx.use(self._line)


def _variables(ds):
    return {v for d in ds for e in d for v, _ in e.terms}


def _derive(ctx, refs, target, zero_var):
    seen, live = set(), []
    for r in refs:
        if _tautological(r.content) or r.content in seen:
            continue
        seen.add(r.content)
        live.append(r)
    for r in live:
        if not len(_clean(r.content)):
            return ctx.weaken_all(ctx.simplify_constants(r.get(ctx)), target)
    if ZERO in target:
        return ctx.weaken_all(ctx.zero(zero_var), target)
    tset = target.eqset
    for r in live:
        if r.content.eqset <= tset:
            return ctx.weaken_all(r.get(ctx), target)
    for e in target:
        if len(e.terms) == 1 and e.terms[0][1] == 1 and e.rhs == 0:
            v = e.terms[0][0]
            if unit(v, 1) in tset:
                return ctx.weaken_all(ctx.axiom(v), target)
    vs = _variables([r.content for r in live] + [target])
    if not vs:
        raise DomainError("internal: unsatisfiable target without an unsatisfiable premise")
    x = max(vs)

    def branch(b):
        def fn(child, assum):
            u = unit(x, b)
            scaled = {1: (assum, u)}

            def units(k):
                if k not in scaled:
                    scaled[k] = (child.scaled(assum, u, k), u.scale(k))
                return scaled[k]

            sub_refs = [(_Restricted(r, x, b, child, units) if x in r.content.variables() else r)
                        for r in live]
            tb = Disjunction(e.restrict(x, b) for e in target)
            line = _derive(child, sub_refs, tb, zero_var)
            groups = {}
            for e in target:
                groups.setdefault(e.restrict(x, b), []).append(e)
            for r, members in groups.items():
                members = sorted(members, key=lambda e: e.coeff(x) != 0)
                first = members[0]
                c = first.coeff(x)
                if c:
                    su, se = units(abs(c))
                    line = child.resolve(line, r, su, se, "add" if c > 0 else "sub")
                line = child.weaken_all(line, members[1:])
            return line
        return fn

    return case_analysis(ctx, ctx.axiom(x), [Hook(unit(x, 0), branch(0)), Hook(unit(x, 1), branch(1))],
                         target=target)


def derive_into(ctx, premise_lines, target, cap=RECURSION_CAP, zero_var=None, refs=None):
    """Derive target inside ctx from lines (ids) whose contents are premises.

    The caller is responsible for the implication holding.
    """
    if refs is None:
        refs = [_Root(lid, Disjunction(e for e in ctx.content(lid) if e not in ctx.side))
                for lid in premise_lines]
    nv = _variables([r.content for r in refs] + [target])
    if len(nv) > cap:
        raise TooManyVariables(f"{len(nv)} variables exceed the recursion cap {cap}")
    if zero_var is None:
        zero_var = min(nv) if nv else 1
    return _derive(ctx, refs, target, zero_var)


def derive(premises, target, n, cap=RECURSION_CAP):
    premises = list(premises)
    if n > cap:
        raise TooManyVariables(f"n={n} exceeds the recursion cap {cap}")
    if n < 1:
        raise DomainError("need at least one variable")
    for d in premises + [target]:
        if any(v > n for v in d.variables()):
            raise DomainError(f"variable above n={n} in {d}")
    cm = countermodel(premises, target, n)
    if cm is not None:
        raise NotImplied(cm[:n])
    b = ProofBuilder(n, premises)
    ctx = b.root
    refs = [_Root(None, d, pid=i + 1) for i, d in enumerate(premises)]
    derive_into(ctx, None, target, cap, refs=refs)
    return b.proof


def derive_r0(premises, target, n, params: R0Params, cap=RECURSION_CAP):
    p = derive(premises, target, n, cap)
    for ln in p.lines:
        try:
            r0_classify(ln.disj, params)
        except NotR0Line as e:
            raise NotR0(e.msg, ln.id) from None
    return p
