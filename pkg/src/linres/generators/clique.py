"""Clique-coloring formulas (formula only)."""
from dataclasses import dataclass

from ..core import Disjunction, unit
from ..errors import BadParams


@dataclass(frozen=True)
class CliqueColorInstance:
    n: int
    k: int
    kp: int

    def __post_init__(self):
        if not (1 <= self.kp < self.k <= self.n):
            raise BadParams(f"need 1 <= k' < k <= n, got n={self.n} k={self.k} k'={self.kp}")

    @property
    def pairs(self):
        return [(i, j) for i in range(1, self.n + 1) for j in range(1, self.n + 1) if i != j]

    def p(self, i, j):
        return self.pairs.index((i, j)) + 1

    def q(self, l, i):
        return self.n * (self.n - 1) + (l - 1) * self.n + i

    def r(self, l, i):
        return self.n * (self.n - 1) + self.k * self.n + (l - 1) * self.n + i

    @property
    def num_vars(self):
        return self.n * (self.n - 1) + (self.k + self.kp) * self.n


def clique_color_families(n, k, kp):
    """The seven clause families (i)..(vii) as lists of disjunctions."""
    I = CliqueColorInstance(n, k, kp)
    V, K, C = range(1, n + 1), range(1, k + 1), range(1, kp + 1)
    fam = [[] for _ in range(7)]
    for l in K:
        fam[0].append(Disjunction(unit(I.q(l, i), 1) for i in V))
    for l in K:
        for i in V:
            for j in V:
                if i < j:
                    fam[1].append(Disjunction((unit(I.q(l, i), 0), unit(I.q(l, j), 0))))
    for i in V:
        for l in K:
            for lp in K:
                if l < lp:
                    fam[2].append(Disjunction((unit(I.q(l, i), 0), unit(I.q(lp, i), 0))))
    for l in K:
        for lp in K:
            if l == lp:
                continue
            for i, j in I.pairs:
                fam[3].append(Disjunction((unit(I.q(l, i), 0), unit(I.q(lp, j), 0), unit(I.p(i, j), 1))))
    for i in V:
        fam[4].append(Disjunction(unit(I.r(l, i), 1) for l in C))
    for i in V:
        for l in C:
            for lp in C:
                if l < lp:
                    fam[5].append(Disjunction((unit(I.r(l, i), 0), unit(I.r(lp, i), 0))))
    for i, j in I.pairs:
        for t in C:
            fam[6].append(Disjunction((unit(I.p(i, j), 0), unit(I.r(t, i), 0), unit(I.r(t, j), 0))))
    return fam


def clique_color_formula(n, k, kp):
    return [d for f in clique_color_families(n, k, kp) for d in f]
