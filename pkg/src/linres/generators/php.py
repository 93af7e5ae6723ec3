"""Pigeonhole formulas and their R0(lin) refutations."""
from dataclasses import dataclass

from ..core import Disjunction, unit
from ..errors import BadParams
from ..macros import Hook, at_most_one_sum, case_analysis, combine_value_sets, one_hot_sum
from ..proof import ProofBuilder


@dataclass(frozen=True)
class PhpInstance:
    m: int
    n: int

    def __post_init__(self):
        if not (isinstance(self.m, int) and isinstance(self.n, int) and self.m > self.n >= 1):
            raise BadParams(f"need m > n >= 1, got m={self.m} n={self.n}")

    def var(self, i, j):
        return (i - 1) * self.n + j

    @property
    def num_vars(self):
        return self.m * self.n


def php_formula(m, n):
    inst = PhpInstance(m, n)
    out = [Disjunction(unit(inst.var(i, j), 1) for j in range(1, n + 1)) for i in range(1, m + 1)]
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            for k in range(1, n + 1):
                out.append(Disjunction((unit(inst.var(i, k), 0), unit(inst.var(j, k), 0))))
    return out


def _hole_ids(m, n):
    ids = {}
    pid = m + 1
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            for k in range(1, n + 1):
                ids[(i, j, k)] = pid
                pid += 1
    return ids


def php_refutation(m, n):
    """Refute PHP(m, n) through its (n+1, n) sub-instance."""
    inst = PhpInstance(m, n)
    b = ProofBuilder(inst.num_vars, php_formula(m, n))
    ctx = b.root
    holes = _hole_ids(m, n)
    pigeons = range(1, n + 2)

    rows = [one_hot_sum(ctx, ctx.premise(i), [inst.var(i, j) for j in range(1, n + 1)])
            for i in pigeons]

    cols = []
    for k in range(1, n + 1):
        def pair(v, w, k=k):
            i, j = (v - k) // n + 1, (w - k) // n + 1
            return ctx.premise(holes[(min(i, j), max(i, j), k)])
        cols.append(at_most_one_sum(ctx, [inst.var(i, k) for i in pigeons], pair))

    R = rows[0]
    for r in rows[1:]:
        R = combine_value_sets(ctx, R, r)
    C = cols[0]
    for c in cols[1:]:
        C = combine_value_sets(ctx, C, c)

    big = list(ctx.content(R))

    def cut_all(u):
        def fn(child, assum):
            cur = child.use(R)
            for e in big:
                cur = child.sub(cur, e, assum, u)
                cur = child.simplify(cur, e - u)
            return cur
        return fn

    case_analysis(ctx, C, [Hook(u, cut_all(u)) for u in ctx.content(C)])
    return b.proof
