import pytest

import oracles
from linres.checker import R0Params, check_r0, check_refutation, proof_stats, semantic_audit
from linres.core import Disjunction, unit
from linres.errors import BadGraph, BadParams
from linres.generators import (CliqueColorInstance, PhpInstance, TseitinInstance, circulant, clique_color_families,
                               clique_color_formula, cycle, php_formula, php_refutation, tseitin_formula,
                               tseitin_refutation)
from linres.generators.tseitin import r0_params


class TestPhp:
    def test_counts(self):
        f = php_formula(4, 3)
        assert len(f) == 22 and PhpInstance(4, 3).num_vars == 12
        f = php_formula(2, 1)
        assert len(f) == 3
        assert f[2] == Disjunction((unit(1, 0), unit(2, 0)))

    def test_variable_map(self):
        inst = PhpInstance(4, 3)
        assert sorted(inst.var(i, j) for i in range(1, 5) for j in range(1, 4)) == list(range(1, 13))

    def test_unsatisfiable(self):
        assert not oracles.satisfiable(php_formula(3, 2), 6)
        assert not oracles.satisfiable(php_formula(4, 3), 12)

    @pytest.mark.parametrize("m,n", [(1, 1), (2, 2), (3, 0), (2, 3)])
    def test_bad_params(self, m, n):
        with pytest.raises(BadParams):
            php_formula(m, n)

    def test_small_refutations(self):
        for m, n in ((2, 1), (3, 2)):
            p = php_refutation(m, n)
            assert check_refutation(p)
            assert semantic_audit(p) is None

    def test_larger_m_uses_subinstance(self):
        p = php_refutation(4, 2)
        assert check_refutation(p) and p.num_vars == 8
        assert semantic_audit(p) is None

    def test_r0(self):
        assert check_r0(php_refutation(4, 3), R0Params(3, 1))


class TestTseitin:
    def test_counts(self):
        inst = TseitinInstance(3, cycle(3), 2)
        assert inst.num_vars == 12 and len(inst.directed) == 6
        f = tseitin_formula(inst)
        # 6 * (1 + 1) edge lines, 3 * 2 * 2 pair lines, 3 * 2 vertex lines
        assert len(f) == 12 + 12 + 6

    def test_unsatisfiable(self):
        assert not oracles.satisfiable(tseitin_formula(TseitinInstance(3, cycle(3), 2)), 12)

    def test_satisfiable_without_vertex_parity(self):
        # dropping one vertex's MOD lines makes the system consistent
        inst = TseitinInstance(3, cycle(3), 2)
        f = tseitin_formula(inst)
        assert oracles.satisfiable(f[:-2], 12)

    @pytest.mark.parametrize("n,edges,p", [
        (4, cycle(4), 2),                    # 4 is not 1 mod 2
        (3, [(1, 2), (2, 3)], 2),            # not regular
        (3, [(1, 1), (2, 3)], 2),            # self loop
        (3, cycle(3) + [(2, 1)], 2),         # double edge
        (7, cycle(3) + [(4, 5), (5, 6), (6, 7), (7, 4)], 3),   # disconnected
        (3, cycle(3), 1),
        (3, [(1, 5)], 2),
    ])
    def test_bad_graph(self, n, edges, p):
        with pytest.raises(BadGraph):
            TseitinInstance(n, edges, p)

    def test_declared_degree(self):
        with pytest.raises(BadGraph):
            TseitinInstance(3, cycle(3), 2, r=4)

    def test_circulant(self):
        g = circulant(7)
        inst = TseitinInstance(7, g, 3)
        assert inst.r == 4 and len(g) == 14

    def test_c3_refutation(self):
        p = tseitin_refutation(TseitinInstance(3, cycle(3), 2))
        assert check_refutation(p)
        assert semantic_audit(p) is None
        assert check_r0(p, r0_params(2))

    def test_c5_refutation_measured_r0(self):
        p = tseitin_refutation(TseitinInstance(5, cycle(5), 2))
        assert check_refutation(p)
        s = proof_stats(p)
        assert (s.k, s.c) == (3, 1)


class TestClique:
    def test_family_sizes(self):
        assert [len(f) for f in clique_color_families(3, 2, 1)] == [2, 6, 3, 12, 3, 0, 6]

    def test_variables_bijective(self):
        I = CliqueColorInstance(3, 2, 1)
        vs = [I.p(i, j) for i, j in I.pairs] + [I.q(l, i) for l in (1, 2) for i in (1, 2, 3)] + \
             [I.r(1, i) for i in (1, 2, 3)]
        assert sorted(vs) == list(range(1, I.num_vars + 1))

    def test_unsatisfiable(self):
        I = CliqueColorInstance(3, 2, 1)
        assert not oracles.satisfiable(clique_color_formula(3, 2, 1), I.num_vars)

    def test_satisfiable_without_coloring_conflict(self):
        # without family (vii) a clique and a coloring coexist
        fam = clique_color_families(3, 2, 1)
        assert oracles.satisfiable([d for f in fam[:6] for d in f], CliqueColorInstance(3, 2, 1).num_vars)

    @pytest.mark.parametrize("args", [(2, 2, 2), (3, 2, 0), (2, 3, 1)])
    def test_bad_params(self, args):
        with pytest.raises(BadParams):
            clique_color_formula(*args)
