"""Tseitin mod p formulas on regular graphs and their R0(lin) refutations."""
from itertools import product

from ..checker import R0Params
from ..core import Disjunction, LinearEquation, unit, form_eq
from ..errors import BadGraph, LocalDerivationTooLarge, TooManyVariables
from ..implcomplete import RECURSION_CAP, derive_r0
from ..macros import Hook, add_unit_throughout, case_analysis, combine_value_sets, replay
from ..proof import ProofBuilder, rename_disjunction, rename_proof


class TseitinInstance:
    def __init__(self, n, edges, p, r=None):
        self.n = n
        self.p = p
        und = set()
        for u, v in edges:
            if u == v:
                raise BadGraph(f"self loop at {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise BadGraph(f"edge ({u},{v}) outside 1..{n}")
            key = (min(u, v), max(u, v))
            if key in und:
                raise BadGraph(f"double edge {key}")
            und.add(key)
        self.edges = sorted(und)
        deg = {v: 0 for v in range(1, n + 1)}
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        degs = set(deg.values())
        if len(degs) != 1:
            raise BadGraph("graph is not regular")
        self.r = degs.pop()
        if r is not None and r != self.r:
            raise BadGraph(f"declared degree {r} but graph is {self.r}-regular")
        if p < 2:
            raise BadGraph("modulus p must be at least 2")
        if n % p != 1 % p:
            raise BadGraph(f"n={n} is not 1 mod p={p}")
        if not self._connected():
            raise BadGraph("graph is not connected")
        self.directed = sorted(self.edges + [(v, u) for u, v in self.edges])
        self.rank = {e: k for k, e in enumerate(self.directed)}

    def _connected(self):
        adj = {v: [] for v in range(1, self.n + 1)}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen, stack = {1}, [1]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    @property
    def num_vars(self):
        return len(self.directed) * self.p

    def var(self, e, i):
        return self.rank[e] * self.p + i + 1

    def out_edges(self, v):
        return [e for e in self.directed if e[0] == v]

    def alpha(self, v):
        """Terms of alpha_v = sum_j sum_i i * x_{e[v,j],i}."""
        return LinearEquation([(self.var(e, i), i) for e in self.out_edges(v)
                               for i in range(1, self.p)], 0).terms


def cycle(n):
    return [(i, i % n + 1) for i in range(1, n + 1)]


def circulant(n, jumps=(1, 2)):
    es = set()
    for i in range(n):
        for j in jumps:
            u, v = i + 1, (i + j) % n + 1
            es.add((min(u, v), max(u, v)))
    return sorted(es)


def _formula_parts(inst):
    p = inst.p
    edge_lines = {}     # directed edge -> [lines] (at least one, at most one)
    pair_lines = {}     # undirected edge -> [lines]
    vertex_lines = {}
    for e in inst.directed:
        ls = [Disjunction(unit(inst.var(e, i), 1) for i in range(p))]
        for i in range(p):
            for j in range(i + 1, p):
                ls.append(Disjunction((unit(inst.var(e, i), 0), unit(inst.var(e, j), 0))))
        edge_lines[e] = ls
    for u, v in inst.edges:
        e, f = (u, v), (v, u)
        ls = []
        for i in range(p):
            a, b = inst.var(e, i), inst.var(f, (p - i) % p)
            ls.append(Disjunction((unit(a, 1), unit(b, 0))))
            ls.append(Disjunction((unit(a, 0), unit(b, 1))))
        pair_lines[(u, v)] = ls
    for v in range(1, inst.n + 1):
        outs = inst.out_edges(v)
        ls = []
        for tup in product(range(p), repeat=len(outs)):
            if sum(tup) % p != 1 % p:
                ls.append(Disjunction(unit(inst.var(e, i), 0) for e, i in zip(outs, tup)))
        vertex_lines[v] = ls
    return edge_lines, pair_lines, vertex_lines


def tseitin_formula(inst):
    edge_lines, pair_lines, vertex_lines = _formula_parts(inst)
    out = []
    for e in inst.directed:
        out += edge_lines[e]
    for k in inst.edges:
        out += pair_lines[k]
    for v in range(1, inst.n + 1):
        out += vertex_lines[v]
    return out


def _premise_ids(inst):
    edge_lines, pair_lines, vertex_lines = _formula_parts(inst)
    pid = 1
    ids = {"edge": {}, "pair": {}, "vertex": {}}
    for e in inst.directed:
        ids["edge"][e] = list(range(pid, pid + len(edge_lines[e])))
        pid += len(edge_lines[e])
    for k in inst.edges:
        ids["pair"][k] = list(range(pid, pid + len(pair_lines[k])))
        pid += len(pair_lines[k])
    for v in range(1, inst.n + 1):
        ids["vertex"][v] = list(range(pid, pid + len(vertex_lines[v])))
        pid += len(vertex_lines[v])
    return ids


def r0_params(p):
    return R0Params(3, max(p - 1, 1))


def _local(ctx, premises, pids, target, params):
    """derive_r0 on renumbered variables, spliced into ctx."""
    vs = sorted({v for d in premises + [target] for e in d for v, _ in e.terms})
    if len(vs) > RECURSION_CAP:
        raise LocalDerivationTooLarge(f"local derivation over {len(vs)} variables")
    fwd = {v: k + 1 for k, v in enumerate(vs)}
    back = {k + 1: v for k, v in enumerate(vs)}
    try:
        lp = derive_r0([rename_disjunction(d, fwd) for d in premises],
                       rename_disjunction(target, fwd), len(vs), params)
    except TooManyVariables as e:
        raise LocalDerivationTooLarge(str(e)) from None
    gp = rename_proof(lp, back, ctx.b.proof.num_vars)
    return replay(ctx, gp, lambda k: ctx.premise(pids[k - 1]))


def vertex_target(inst, v):
    a = inst.alpha(v)
    return Disjunction(form_eq(a, 1 + l * inst.p) for l in range(inst.r))


def edge_form(inst, e, i):
    p = inst.p
    f = (e[1], e[0])
    return LinearEquation([(inst.var(e, i), i), (inst.var(f, (p - i) % p), p - i)], 0).terms


def tseitin_refutation(inst, params=None):
    p = inst.p
    params = params or r0_params(p)
    formula = tseitin_formula(inst)
    ids = _premise_ids(inst)
    b = ProofBuilder(inst.num_vars, formula)
    ctx = b.root

    vlines = []
    for v in range(1, inst.n + 1):
        pids = [q for e in inst.out_edges(v) for q in ids["edge"][e]] + ids["vertex"][v]
        vlines.append(_local(ctx, [formula[q - 1] for q in pids], pids, vertex_target(inst, v), params))
    B = vlines[0]
    for line in vlines[1:]:
        B = combine_value_sets(ctx, B, line)

    for u, v in inst.edges:
        e, f = (u, v), (v, u)
        pids = ids["edge"][e] + ids["edge"][f] + ids["pair"][(u, v)]
        for i in range(1, p):
            w = edge_form(inst, e, i)
            E = _local(ctx, [formula[q - 1] for q in pids], pids,
                       Disjunction((form_eq(w, 0), form_eq(w, p))), params)
            own = list(ctx.content(B))

            def fn_for(z):
                def fn(child, assum):
                    return add_unit_throughout(child, child.use(B), own, assum, z, "sub")
                return fn
            B = case_analysis(ctx, E, [Hook(z, fn_for(z)) for z in ctx.content(E)])
    ctx.simplify_constants(B)
    return b.proof
