"""Brute-force semantics over {0,1} assignments.

Truth tables are numpy bool vectors indexed by assignment number; bit v-1 of
the index is the value of x_v.
"""
import os

import numpy as np

from .errors import TooManyVariables

DEFAULT_CAP = 20


def brute_cap():
    try:
        return int(os.environ.get("LINRES_BRUTE_CAP", DEFAULT_CAP))
    except ValueError:
        return DEFAULT_CAP


def _check_cap(n, cap=None):
    cap = brute_cap() if cap is None else cap
    if n > cap:
        raise TooManyVariables(f"{n} variables exceeds brute-force cap {cap}")


class TruthTable:
    """Evaluates equations over all 2^n assignments of the given variables."""

    def __init__(self, variables):
        self.variables = list(variables)
        _check_cap(len(self.variables))
        self.pos = {v: i for i, v in enumerate(self.variables)}
        k = len(self.variables)
        idx = np.arange(1 << k, dtype=np.int64)
        self.bits = [((idx >> i) & 1) for i in range(k)]
        self.size = 1 << k
        self._cache = {}

    def equation(self, e):
        m = self._cache.get(e)
        if m is None:
            acc = np.zeros(self.size, dtype=np.int64)
            for v, c in e.terms:
                acc += c * self.bits[self.pos[v]]
            m = acc == e.rhs
            self._cache[e] = m
        return m

    def disjunction(self, d):
        m = np.zeros(self.size, dtype=bool)
        for e in d:
            m |= self.equation(e)
        return m

    def conjunction(self, ds):
        m = np.ones(self.size, dtype=bool)
        for d in ds:
            m &= self.disjunction(d)
        return m

    def assignment(self, index, n):
        """Full 0/1 vector of length n for table row `index`."""
        a = [0] * n
        for v, i in self.pos.items():
            a[v - 1] = (index >> i) & 1
        return a


def _vars_of(ds):
    return sorted({v for d in ds for e in d for v, _ in e.terms})


def countermodel(premises, target, n):
    """An assignment satisfying all premises but not target, or None."""
    _check_cap(n)
    vs = _vars_of(list(premises) + [target])
    tt = TruthTable(vs)
    bad = tt.conjunction(premises) & ~tt.disjunction(target)
    hits = np.flatnonzero(bad)
    if len(hits) == 0:
        return None
    return tt.assignment(int(hits[0]), max(n, vs[-1] if vs else 0))


def semantically_implies(premises, target, n):
    return countermodel(premises, target, n) is None


def satisfiable(ds, n):
    _check_cap(n)
    tt = TruthTable(_vars_of(ds))
    return bool(tt.conjunction(ds).any())


def value_set(form_terms, n=None):
    """All values of a linear form over {0,1} assignments."""
    vals = {0}
    for _, c in form_terms:
        vals |= {x + c for x in vals}
    return vals
