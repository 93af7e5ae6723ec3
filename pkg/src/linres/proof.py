"""R(lin) proof objects and a builder that emits checked-by-construction lines.

Builder contexts carry a side disjunction S: every line emitted through a
context contains S. This is how case analysis lifts a sub-derivation without
replaying it: the lifted copy is emitted directly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .core import Disjunction, LinearEquation, boolean_axiom, ZERO


@dataclass(frozen=True)
class BooleanAxiom:
    var: int


@dataclass(frozen=True)
class Premise:
    pid: int


@dataclass(frozen=True)
class Resolve:
    a: int
    ia: int
    b: int
    ib: int
    op: str  # "add" | "sub"


@dataclass(frozen=True)
class Weaken:
    a: int
    eq: LinearEquation


@dataclass(frozen=True)
class Simplify:
    a: int
    i: int


@dataclass
class Line:
    id: int
    disj: Disjunction
    just: object


@dataclass
class Proof:
    num_vars: int
    premises: dict = field(default_factory=dict)   # pid -> Disjunction
    lines: list = field(default_factory=list)

    def __post_init__(self):
        if not isinstance(self.premises, dict):
            self.premises = {i + 1: d for i, d in enumerate(self.premises)}
        self._by_id = None

    def line(self, lid) -> Optional[Line]:
        if self._by_id is None or len(self._by_id) != len(self.lines):
            self._by_id = {ln.id: k for k, ln in enumerate(self.lines)}
        k = self._by_id.get(lid)
        return None if k is None else self.lines[k]

    def position(self, lid):
        self.line(lid)
        return self._by_id.get(lid)

    @property
    def conclusion(self):
        return self.lines[-1].disj if self.lines else None

    def size(self):
        return sum(ln.disj.size() for ln in self.lines)


def proof_size(p: Proof):
    return p.size()


def resolve_result(da: Disjunction, ia, db: Disjunction, ib, op):
    la, lb = da[ia], db[ib]
    new = la + lb if op == "add" else la - lb
    return Disjunction(da.without_index(ia) + db.without_index(ib) + (new,))


class ProofBuilder:
    def __init__(self, num_vars, premises=()):
        self.proof = Proof(num_vars, premises if isinstance(premises, dict) else list(premises))
        self.contents = {}          # line id -> Disjunction
        self.root = Context(self, FALSE_SIDE, None)
        self._axioms = {}
        self._premises = {}

    def emit(self, disj, just):
        lid = len(self.proof.lines) + 1
        self.proof.lines.append(Line(lid, disj, just))
        self.contents[lid] = disj
        return lid

    def content(self, lid):
        return self.contents[lid]

    def axiom_line(self, var):
        lid = self._axioms.get(var)
        if lid is None:
            lid = self._axioms[var] = self.emit(boolean_axiom(var), BooleanAxiom(var))
        return lid

    def premise_line(self, pid):
        lid = self._premises.get(pid)
        if lid is None:
            lid = self._premises[pid] = self.emit(self.proof.premises[pid], Premise(pid))
        return lid

    def last(self):
        return len(self.proof.lines)


FALSE_SIDE = Disjunction()


class Context:
    """A view on a builder in which every line contains the side disjunction."""

    def __init__(self, builder: ProofBuilder, side: Disjunction, parent):
        self.b = builder
        self.side = side
        self.parent = parent
        self._used = {}

    def extend(self, eqs):
        eqs = [e for e in eqs if e not in self.side]
        if not eqs:
            return self
        return Context(self.b, Disjunction(self.side.eqs + tuple(eqs)), self)

    def content(self, lid):
        return self.b.contents[lid]

    def _pad(self, lid):
        d = self.b.contents[lid]
        for e in self.side:
            if e not in d:
                lid = self.b.emit(Disjunction(d.eqs + (e,)), Weaken(lid, e))
                d = self.b.contents[lid]
        return lid

    def use(self, lid):
        """Bring a line from an enclosing context into this one."""
        got = self._used.get(lid)
        if got is None:
            got = self._used[lid] = self._pad(lid)
        return got

    def axiom(self, var):
        return self.use(self.b.axiom_line(var))

    def premise(self, pid):
        return self.use(self.b.premise_line(pid))

    def resolve(self, a, la, b, lb, op="add"):
        da, db = self.b.contents[a], self.b.contents[b]
        ia, ib = da.index(la), db.index(lb)
        lid = self.b.emit(resolve_result(da, ia, db, ib, op), Resolve(a, ia, b, ib, op))
        return self._pad(lid)

    def add(self, a, la, b, lb):
        return self.resolve(a, la, b, lb, "add")

    def sub(self, a, la, b, lb):
        return self.resolve(a, la, b, lb, "sub")

    def weaken(self, a, e):
        d = self.b.contents[a]
        if e in d:
            return a
        return self.b.emit(Disjunction(d.eqs + (e,)), Weaken(a, e))

    def weaken_all(self, a, eqs):
        for e in eqs:
            a = self.weaken(a, e)
        return a

    def simplify(self, a, e):
        d = self.b.contents[a]
        i = d.index(e)
        lid = self.b.emit(Disjunction(d.without_index(i)), Simplify(a, i))
        return self._pad(lid)

    def simplify_constants(self, a):
        """Drop every (0=k), k != 0, that is not part of the side."""
        while True:
            d = self.b.contents[a]
            bad = [e for e in d if not e.terms and e.rhs != 0 and e not in self.side]
            if not bad:
                return a
            a = self.simplify(a, bad[0])

    def zero(self, var):
        """(0=0) plus side, by self-subtraction inside a Boolean axiom."""
        ax = self.axiom(var)
        l0, l1 = LinearEquation(((var, 1),), 0), LinearEquation(((var, 1),), 1)
        t = self.sub(ax, l0, ax, l0)
        return self.sub(t, l1, t, l1) if l1 not in self.side else t

    def flip(self, a, e):
        """Replace e by -e in line a: subtract e from itself twice."""
        t = self.sub(a, e, a, e)
        if e == ZERO:
            return t
        return self.sub(t, ZERO, a, e)

    def scaled(self, a, e, k):
        """Replace e by k*e (k >= 1) by repeated addition against line a."""
        cur, ce = a, e
        for _ in range(k - 1):
            cur = self.add(cur, ce, a, e)
            ce = ce + e
        return cur


def rename_equation(e, m):
    return LinearEquation([(m[v], c) for v, c in e.terms], e.rhs)


def rename_disjunction(d, m):
    return Disjunction(rename_equation(e, m) for e in d)


def rename_proof(p: Proof, m, num_vars=None):
    """Apply the variable map m (old -> new) to every line and justification."""
    out = Proof(num_vars or p.num_vars, {k: rename_disjunction(d, m) for k, d in p.premises.items()})
    for ln in p.lines:
        j = ln.just
        if isinstance(j, BooleanAxiom):
            j = BooleanAxiom(m[j.var])
        elif isinstance(j, Weaken):
            j = Weaken(j.a, rename_equation(j.eq, m))
        out.lines.append(Line(ln.id, rename_disjunction(ln.disj, m), j))
    return out
