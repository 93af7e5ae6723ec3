"""Resolution proofs: checking, an exhaustive refutation oracle, and the
translation into R(lin)."""
from __future__ import annotations

from dataclasses import dataclass

from ..core import Cnf, literal_equation, translate_clause, unit
from ..errors import InvalidResolutionStep, ParseError
from ..proof import ProofBuilder


@dataclass(frozen=True)
class ResStep:
    id: int
    clause: tuple          # DIMACS literals
    kind: str              # input | resolve | weaken
    ants: tuple = ()
    pivot: int = 0


@dataclass
class ResolutionProof:
    num_vars: int
    steps: list

    def size(self):
        return sum(len(s.clause) for s in self.steps)


def _resolvent(c1, c2, pivot):
    if pivot in c1 and -pivot in c2:
        pos, neg = c1, c2
    elif -pivot in c1 and pivot in c2:
        pos, neg = c2, c1
    else:
        return None
    out = [x for x in pos if x != pivot] + [x for x in neg if x != -pivot]
    return tuple(dict.fromkeys(out))


def check_resolution(rp: ResolutionProof):
    seen = {}
    for s in rp.steps:
        if s.id in seen:
            raise InvalidResolutionStep("duplicate step id", s.id)
        for x in s.clause:
            if x == 0 or abs(x) > rp.num_vars:
                raise InvalidResolutionStep(f"bad literal {x}", s.id)
        for a in s.ants:
            if a not in seen:
                raise InvalidResolutionStep(f"antecedent {a} is not an earlier step", s.id)
        if s.kind == "resolve":
            if len(s.ants) != 2:
                raise InvalidResolutionStep("resolution needs two antecedents", s.id)
            r = _resolvent(seen[s.ants[0]], seen[s.ants[1]], s.pivot)
            if r is None:
                raise InvalidResolutionStep(f"pivot {s.pivot} does not clash", s.id)
            if set(r) != set(s.clause):
                raise InvalidResolutionStep(f"stated {s.clause} but resolvent is {r}", s.id)
        elif s.kind == "weaken":
            if len(s.ants) != 1 or not set(seen[s.ants[0]]) <= set(s.clause):
                raise InvalidResolutionStep("weakening must extend its antecedent", s.id)
        elif s.kind != "input":
            raise InvalidResolutionStep(f"unknown step kind {s.kind}", s.id)
        seen[s.id] = s.clause
    return True


def res_to_rlin(rp: ResolutionProof):
    check_resolution(rp)
    inputs = [s for s in rp.steps if s.kind == "input"]
    pid = {s.id: k + 1 for k, s in enumerate(inputs)}
    b = ProofBuilder(rp.num_vars, [translate_clause(s.clause) for s in inputs])
    ctx = b.root
    line, clauses = {}, {}
    for s in rp.steps:
        clauses[s.id] = set(s.clause)
        if s.kind == "input":
            line[s.id] = ctx.premise(pid[s.id])
        elif s.kind == "resolve":
            a1, a2 = s.ants
            v = abs(s.pivot)
            if v in clauses[a1]:
                pos, neg = line[a1], line[a2]
            else:
                pos, neg = line[a2], line[a1]
            r = ctx.sub(pos, unit(v, 1), neg, unit(v, 0))
            line[s.id] = ctx.simplify(r, unit(v, 1) - unit(v, 0))
        else:
            added = [x for x in s.clause if x not in clauses[s.ants[0]]]
            line[s.id] = ctx.weaken_all(line[s.ants[0]], [literal_equation(x) for x in added])
        if ctx.content(line[s.id]) != translate_clause(s.clause):
            raise InvalidResolutionStep("internal: translation mismatch", s.id)
    return b.proof


# exhaustive resolution: Davis-Putnam variable elimination with subsumption

def dp_refutation(cnf: Cnf):
    """A resolution refutation of an unsatisfiable CNF, or None if satisfiable."""
    steps = []
    by_clause = {}

    def add(clause, kind, ants=(), pivot=0):
        key = frozenset(clause)
        if key in by_clause:
            return by_clause[key]
        sid = len(steps) + 1
        steps.append(ResStep(sid, tuple(sorted(clause, key=lambda x: (abs(x), x))), kind, ants, pivot))
        by_clause[key] = sid
        return sid

    active = {}
    for c in cnf.clauses:
        if c.is_tautology():
            continue
        sid = add(c.literals, "input")
        active[sid] = frozenset(c.literals)
    empty = next((s for s, c in active.items() if not c), None)
    for v in range(1, cnf.num_vars + 1):
        if empty is not None:
            break
        pos = [(s, c) for s, c in active.items() if v in c]
        neg = [(s, c) for s, c in active.items() if -v in c]
        rest = {s: c for s, c in active.items() if v not in c and -v not in c}
        for s1, c1 in pos:
            for s2, c2 in neg:
                r = (c1 - {v}) | (c2 - {-v})
                if any(-x in r for x in r):
                    continue
                if any(c <= r for c in rest.values()):
                    continue
                sid = add(r, "resolve", (s1, s2), v)
                for s in [s for s, c in rest.items() if r < c]:
                    del rest[s]
                rest[sid] = r
                if not r:
                    empty = sid
                    break
            if empty is not None:
                break
        active = rest
    if empty is None:
        return None
    need, stack = set(), [empty]
    by_id = {s.id: s for s in steps}
    while stack:
        s = stack.pop()
        if s in need:
            continue
        need.add(s)
        stack.extend(by_id[s].ants)
    ren = {}
    out = []
    for s in steps:
        if s.id in need:
            ren[s.id] = len(out) + 1
            out.append(ResStep(ren[s.id], s.clause, s.kind, tuple(ren[a] for a in s.ants), s.pivot))
    return ResolutionProof(cnf.num_vars, out)


# trace format: "<id> <lits> 0 [<ant1> [<ant2> <pivot>]]"

def format_trace(rp: ResolutionProof) -> str:
    out = [f"p res {rp.num_vars}"]
    for s in rp.steps:
        lits = " ".join(str(x) for x in s.clause)
        head = f"{s.id} {lits} 0" if lits else f"{s.id} 0"
        if s.kind == "resolve":
            head += f" {s.ants[0]} {s.ants[1]} {s.pivot}"
        elif s.kind == "weaken":
            head += f" {s.ants[0]}"
        out.append(head)
    return "\n".join(out) + "\n"


def parse_trace(text: str) -> ResolutionProof:
    n = None
    steps = []
    for no, raw in enumerate(text.splitlines(), 1):
        t = raw.split()
        if not t or t[0] in ("c", "#") or t[0].startswith("#"):
            continue
        if t[0] == "p":
            if len(t) != 3 or t[1] != "res":
                raise ParseError("expected 'p res <n>'", no)
            n = _num(t[2], no)
            continue
        nums = [_num(x, no) for x in t]
        if 0 not in nums[1:]:
            raise ParseError("literal list must be 0-terminated", no)
        k = nums.index(0, 1)
        sid, lits, tail = nums[0], tuple(nums[1:k]), nums[k + 1:]
        if not tail:
            steps.append(ResStep(sid, lits, "input"))
        elif len(tail) == 1:
            steps.append(ResStep(sid, lits, "weaken", (tail[0],)))
        elif len(tail) == 3:
            steps.append(ResStep(sid, lits, "resolve", (tail[0], tail[1]), tail[2]))
        else:
            raise ParseError("expected 0, 1 or 3 fields after the literals", no)
    if n is None:
        n = max((abs(x) for s in steps for x in s.clause), default=0)
    return ResolutionProof(n, steps)


def _num(tok, no):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"bad number {tok!r}", no) from None
