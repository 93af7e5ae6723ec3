"""Rule-by-rule verification of R(lin) proofs, R0 line classification, audits."""
from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .core import Disjunction, boolean_axiom
from .errors import (BadAntecedent, BadAxiomShape, CheckError, IndexOutOfRange, LineMismatch,
                     NotARefutation, NotR0Line, NotSimplifiable)
from .proof import BooleanAxiom, Premise, Proof, Resolve, Simplify, Weaken, resolve_result
from .semantics import TruthTable, _check_cap


def _antecedent(proof: Proof, pos, lid):
    k = proof.position(lid)
    if k is None or k >= pos:
        raise BadAntecedent(f"antecedent {lid} is not an earlier line")
    return proof.lines[k].disj


def _index(d, i, lid):
    if not isinstance(i, int) or i < 0 or i >= len(d):
        raise IndexOutOfRange(f"equation index {i} out of range for line {lid} ({len(d)} equations)")


def computed_line(proof: Proof, pos: int) -> Disjunction:
    """What the justification of the line at list position pos produces."""
    ln = proof.lines[pos]
    j = ln.just
    if isinstance(j, BooleanAxiom):
        if not isinstance(j.var, int) or not 1 <= j.var <= proof.num_vars:
            raise BadAxiomShape(f"axiom variable {j.var} outside 1..{proof.num_vars}")
        return boolean_axiom(j.var)
    if isinstance(j, Premise):
        if j.pid not in proof.premises:
            raise BadAntecedent(f"unknown premise {j.pid}")
        return proof.premises[j.pid]
    if isinstance(j, Resolve):
        da = _antecedent(proof, pos, j.a)
        db = _antecedent(proof, pos, j.b)
        _index(da, j.ia, j.a)
        _index(db, j.ib, j.b)
        if j.op not in ("add", "sub"):
            raise CheckError(f"unknown resolution op {j.op!r}")
        return resolve_result(da, j.ia, db, j.ib, j.op)
    if isinstance(j, Weaken):
        da = _antecedent(proof, pos, j.a)
        return Disjunction(da.eqs + (j.eq,))
    if isinstance(j, Simplify):
        da = _antecedent(proof, pos, j.a)
        _index(da, j.i, j.a)
        e = da[j.i]
        if e.terms or e.rhs == 0:
            raise NotSimplifiable(f"equation {e} is not of the form 0 = k with k != 0")
        return Disjunction(da.without_index(j.i))
    raise CheckError(f"unknown justification {j!r}")


def check_line(proof: Proof, idx: int):
    """Check the line with id idx. Raises a CheckError subclass on failure."""
    pos = proof.position(idx)
    if pos is None:
        raise BadAntecedent(f"no line {idx}", idx)
    try:
        got = computed_line(proof, pos)
        stated = proof.lines[pos].disj
        if got != stated:
            raise LineMismatch(f"stated {stated} but rule gives {got}")
    except CheckError as e:
        raise e.at(idx) from None
    except Exception as e:  # totality: never crash on malformed objects
        raise CheckError(f"malformed line: {e}", idx) from None
    return True


def _check_range(proof, lids):
    for lid in lids:
        try:
            check_line(proof, lid)
        except CheckError as e:
            return e
    return None


_POOL_PROOF = None


def _pool_range(lids):
    return _check_range(_POOL_PROOF, lids)


def check_proof(proof: Proof, jobs: int = 1):
    """Raise the first failing line's CheckError; return True otherwise."""
    ids = [ln.id for ln in proof.lines]
    seen = set()
    for lid in ids:
        if lid in seen:
            raise BadAntecedent("duplicate line id", lid)
        seen.add(lid)
    if jobs > 1 and len(ids) > 2000 and hasattr(os, "fork"):
        import multiprocessing as mp
        global _POOL_PROOF
        _POOL_PROOF = proof
        chunk = max(500, len(ids) // (jobs * 4))
        parts = [ids[i:i + chunk] for i in range(0, len(ids), chunk)]
        with mp.get_context("fork").Pool(jobs) as pool:
            results = pool.map(_pool_range, parts)
        _POOL_PROOF = None
        errs = [e for e in results if e is not None]
        if errs:
            raise errs[0]
        return True
    err = _check_range(proof, ids)
    if err is not None:
        raise err
    return True


def check_refutation(proof: Proof, jobs: int = 1):
    check_proof(proof, jobs)
    if not proof.lines or len(proof.lines[-1].disj) != 0:
        last = proof.lines[-1].id if proof.lines else None
        raise NotARefutation("last line is not the empty disjunction", last)
    return True


def _antecedent_ids(j):
    if isinstance(j, Resolve):
        return (j.a, j.b)
    if isinstance(j, (Weaken, Simplify)):
        return (j.a,)
    return ()


def semantic_audit(proof: Proof, local: bool = False):
    """First line id not implied by the premises, or None.

    With local=True each line must instead be implied by its own antecedents,
    which is informative even when the premises are jointly unsatisfiable.
    """
    _check_cap(proof.num_vars)
    vs = sorted({v for ln in proof.lines for e in ln.disj for v, _ in e.terms} |
                {v for d in proof.premises.values() for e in d for v, _ in e.terms})
    tt = TruthTable(vs)
    masks = {}
    base = None if local else tt.conjunction(proof.premises.values())
    for ln in proof.lines:
        m = tt.disjunction(ln.disj)
        masks[ln.id] = m
        if local:
            j = ln.just
            if isinstance(j, Premise):
                need = tt.disjunction(proof.premises.get(j.pid, Disjunction()))
            else:
                need = np.ones(tt.size, dtype=bool)
                for a in _antecedent_ids(j):
                    if a in masks:
                        need = need & masks[a]
        else:
            need = base
        if (need & ~m).any():
            return ln.id
    return None


# R0 classification

@dataclass(frozen=True)
class R0Params:
    k: int
    c: int

    def __post_init__(self):
        if self.k < 1 or self.c < 1:
            raise ValueError("R0 parameters need k >= 1 and c >= 1")


@dataclass(frozen=True)
class Group:
    kind: str          # "form" or "clause"
    equations: tuple


@dataclass(frozen=True)
class Partition:
    groups: tuple

    def __len__(self):
        return len(self.groups)


def _clause_eq(e):
    return len(e.terms) == 1 and e.terms[0][1] == 1 and e.rhs in (0, 1)


def greedy_groups(d):
    """Canonical grouping: one group per linear form, except that forms whose
    equations are all unit clause literals share a single clause group."""
    by_form = {}
    for e in d:
        by_form.setdefault(e.terms, []).append(e)
    groups, clause = [], []
    for form, es in by_form.items():
        if all(_clause_eq(e) for e in es):
            clause.extend(es)
        else:
            groups.append(Group("form", tuple(es)))
    if clause:
        groups.append(Group("clause", tuple(clause)))
    return groups


def max_coef(d):
    return max((abs(c) for e in d for _, c in e.terms), default=0)


def _group_coef(g):
    if g.kind == "clause":
        return 1
    return max((abs(c) for _, c in g.equations[0].terms), default=0)


def _exhaustive(d, params):
    eqs = list(d)
    best = None
    groups = []   # list of [kind, form or None, members]

    def fits(g, e):
        kind, form, _ = g
        if kind == "clause":
            return _clause_eq(e)
        return e.terms == form

    def rec(i):
        nonlocal best
        if best is not None:
            return
        if i == len(eqs):
            best = [Group(k, tuple(m)) for k, _, m in groups]
            return
        e = eqs[i]
        for g in groups:
            if fits(g, e):
                g[2].append(e)
                rec(i + 1)
                g[2].pop()
        if len(groups) < params.k:
            opts = []
            if max((abs(c) for _, c in e.terms), default=0) <= params.c:
                opts.append(["form", e.terms, [e]])
            if _clause_eq(e):
                opts.append(["clause", None, [e]])
            for g in opts:
                groups.append(g)
                rec(i + 1)
                groups.pop()

    rec(0)
    return best


def r0_classify(d: Disjunction, params: R0Params, exhaustive: bool = False) -> Partition:
    if not len(d):
        return Partition(())
    if exhaustive:
        if len(d) > 16:
            raise ValueError("exhaustive classification is limited to 16 equations")
        got = _exhaustive(d, params)
        if got is None:
            raise NotR0Line(f"no ({params.k},{params.c}) partition of {d}")
        return Partition(tuple(got))
    groups = greedy_groups(d)
    if len(groups) > params.k:
        raise NotR0Line(f"{len(groups)} groups > k={params.k} in {d}")
    for g in groups:
        if _group_coef(g) > params.c:
            raise NotR0Line(f"coefficient above c={params.c} in {d}")
    return Partition(tuple(groups))


def r0_measure(d):
    """Minimal (k, c) under the greedy grouping."""
    return len(greedy_groups(d)), max_coef(d)


def check_r0(proof: Proof, params: R0Params):
    """Raise NotR0Line at the first line that does not classify."""
    for ln in proof.lines:
        try:
            r0_classify(ln.disj, params)
        except NotR0Line as e:
            raise e.at(ln.id) from None
    return True


@dataclass
class Stats:
    lines: int = 0
    size: int = 0
    max_line_size: int = 0
    k: int = 0
    c: int = 0

    def row(self):
        return [self.lines, self.size, self.max_line_size, self.k, self.c]


def proof_stats(proof: Proof) -> Stats:
    s = Stats()
    for ln in proof.lines:
        sz = ln.disj.size()
        k, c = r0_measure(ln.disj)
        s.lines += 1
        s.size += sz
        s.max_line_size = max(s.max_line_size, sz)
        s.k = max(s.k, k)
        s.c = max(s.c, c)
    return s
