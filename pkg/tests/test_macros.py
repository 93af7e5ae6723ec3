import pytest
from hypothesis import given, strategies as st

import oracles
from linres.checker import R0Params, check_proof, check_r0, proof_stats, semantic_audit
from linres.core import Disjunction, parse_disjunction, unit
from linres.errors import DuplicateCaseValue, HookMismatch
from linres.macros import (DerivationHook, Hook, all_values_proof, at_most_one_sum_proof, case_analysis,
                           combine_value_sets_proof, one_hot_sum_proof, value_line)
from linres.proof import Line, Premise, Proof, ProofBuilder


def D(s):
    return parse_disjunction(s)


def conclusion_values(p):
    return {e.rhs for e in p.conclusion}


def units(n):
    return [(i, 1) for i in range(1, n + 1)]


# frozen unary sizes, measured on the construction [DERIVED]
ALL_VALUES_SIZE = {1: 3, 2: 61, 3: 302, 4: 1015, 5: 2708, 6: 6172, 7: 12545, 8: 23376}
ONE_HOT_SIZE = {1: 2, 2: 56, 3: 500, 4: 2288, 5: 7840, 6: 22165, 7: 54411, 8: 119792}
AT_MOST_ONE_SIZE = {1: 3, 2: 41, 3: 96, 4: 169, 5: 261, 6: 373, 7: 506, 8: 661}


class TestCaseAnalysis:
    def _same_branches(self):
        b = ProofBuilder(2, [D("2:1 = 0")])
        ctx = b.root
        ax = ctx.axiom(1)
        hooks = [Hook(unit(1, v), lambda c, a: c.premise(1)) for v in (0, 1)]
        return b, case_analysis(ctx, ax, hooks)

    def test_identical_branches(self):
        b, res = self._same_branches()
        assert b.content(res) == D("2:1 = 0")
        assert check_proof(b.proof)
        assert semantic_audit(b.proof) is None

    def test_single_hook_is_the_subproof(self):
        b = ProofBuilder(1, [D("1:1 = 1")])
        ctx = b.root
        case = ctx.premise(1)
        res = case_analysis(ctx, case, [Hook(unit(1, 1), lambda c, a: a)])
        assert res == case and len(b.proof.lines) == 1

    def test_duplicate_values(self):
        b = ProofBuilder(1)
        ax = b.root.axiom(1)
        with pytest.raises(DuplicateCaseValue):
            case_analysis(b.root, ax, [Hook(unit(1, 0), None), Hook(unit(1, 0), None)])

    def test_unhooked_case(self):
        b = ProofBuilder(1)
        ax = b.root.axiom(1)
        with pytest.raises(HookMismatch):
            case_analysis(b.root, ax, [Hook(unit(1, 0), lambda c, a: a)])

    def test_derivation_hooks(self):
        # K = {(x2=0)}; each hook's sub-proof ignores its assumption
        def sub(v):
            return Proof(2, {1: Disjunction([unit(1, v)]), 2: D("2:1 = 0")},
                         [Line(1, D("2:1 = 0"), Premise(2))])
        b = ProofBuilder(2, [D("2:1 = 0")])
        ctx = b.root
        ax, k = ctx.axiom(1), ctx.premise(1)
        hooks = [DerivationHook(unit(1, v), sub(v), 1, {2: k}) for v in (0, 1)]
        res = case_analysis(ctx, ax, hooks)
        assert b.content(res) == D("2:1 = 0")
        assert check_proof(b.proof)

    def test_derivation_hook_wrong_assumption(self):
        p = Proof(1, {1: D("1:1 = 1")}, [Line(1, D("1:1 = 1"), Premise(1))])
        b = ProofBuilder(1)
        ax = b.root.axiom(1)
        with pytest.raises(HookMismatch):
            case_analysis(b.root, ax, [DerivationHook(unit(1, 0), p, 1), DerivationHook(unit(1, 1), p, 1)])

    def test_chained_mode_on_clause(self):
        # case line is a clause (different forms): x1=1 | x2=1 gives (x1+x2=1)|(x1+x2=2)
        p = one_hot_sum_proof(2)
        assert p.conclusion == D("1:1 2:1 = 1 | 1:1 2:1 = 2")
        assert check_proof(p)


class TestAllValues:
    def test_examples(self):
        assert all_values_proof(units(2)).conclusion == D("1:1 2:1 = 0 | 1:1 2:1 = 1 | 1:1 2:1 = 2")
        p = all_values_proof([(1, 2), (2, -1)])
        assert conclusion_values(p) == {-1, 0, 1, 2}
        assert all_values_proof([(1, 1)]).conclusion == D("1:1 = 0 | 1:1 = 1")

    @given(st.dictionaries(st.integers(1, 6), st.integers(-3, 3).filter(bool), min_size=1, max_size=6))
    def test_exact_value_set(self, coeffs):
        form = sorted(coeffs.items())
        p = all_values_proof(form, 6)
        assert check_proof(p)
        assert {e.terms for e in p.conclusion} == {tuple(form)}
        assert conclusion_values(p) == oracles.values(form, 6)

    def test_scaled_lines_stay_r0(self):
        p = all_values_proof([(1, 3), (2, -2), (3, 1)])
        assert check_r0(p, R0Params(3, 3))

    @pytest.mark.parametrize("n", range(1, 9))
    def test_frozen_size(self, n):
        s = proof_stats(all_values_proof(units(n)))
        assert s.size == ALL_VALUES_SIZE[n]
        assert s.size <= 3 * n ** 5 + 10
        assert (s.k, s.c) <= (3, 1)


class TestCombine:
    def test_example(self):
        p = combine_value_sets_proof(D("1:1 = 0 | 1:1 = 1"), D("2:1 = 0 | 2:1 = 1"), 2)
        assert p.conclusion == D("1:1 2:1 = 0 | 1:1 2:1 = 1 | 1:1 2:1 = 2")
        assert check_proof(p) and semantic_audit(p) is None

    def test_singleton_shift(self):
        p = combine_value_sets_proof(D("1:1 = 0"), D("2:1 = 0 | 2:1 = 1"), 2)
        assert p.conclusion == D("1:1 2:1 = 0 | 1:1 2:1 = 1")

    def test_interval(self):
        z1 = [(1, 1), (2, 1)]
        z2 = [(3, 1), (4, 1), (5, 1)]
        p = combine_value_sets_proof(value_line(z1, range(0, 3)), value_line(z2, range(1, 4)), 5)
        assert check_proof(p)
        assert conclusion_values(p) == set(range(1, 6))

    @given(st.sets(st.integers(-2, 3), min_size=1, max_size=3), st.sets(st.integers(-2, 3), min_size=1, max_size=3))
    def test_sumset(self, A, B):
        p = combine_value_sets_proof(value_line([(1, 1), (2, 2)], sorted(A)), value_line([(3, 1)], sorted(B)), 3)
        assert check_proof(p)
        assert conclusion_values(p) == {a + b for a in A for b in B}


class TestCounting:
    def test_one_hot_examples(self):
        assert one_hot_sum_proof(1).conclusion == D("1:1 = 1")
        assert one_hot_sum_proof(2).conclusion == D("1:1 2:1 = 1 | 1:1 2:1 = 2")
        p = one_hot_sum_proof(3)
        assert check_proof(p) and semantic_audit(p) is None
        assert conclusion_values(p) == {1, 2, 3}

    def test_at_most_one_examples(self):
        assert at_most_one_sum_proof(1).conclusion == D("1:1 = 0 | 1:1 = 1")
        assert at_most_one_sum_proof(2).conclusion == D("1:1 2:1 = 0 | 1:1 2:1 = 1")
        p = at_most_one_sum_proof(4)
        assert check_proof(p) and semantic_audit(p) is None

    @pytest.mark.parametrize("n", range(1, 9))
    def test_frozen_sizes(self, n):
        for build, frozen, budget in ((one_hot_sum_proof, ONE_HOT_SIZE, 2 * n ** 6 + 10),
                                      (at_most_one_sum_proof, AT_MOST_ONE_SIZE, 5 * n ** 3 + 10)):
            p = build(n)
            assert check_proof(p)
            s = proof_stats(p)
            assert s.size == frozen[n] and s.size <= budget
            assert check_r0(p, R0Params(3, 1))

    @pytest.mark.parametrize("n", [3, 4])
    def test_conclusions_are_exact(self, n):
        # one-hot: the sum ranges over 1..n; brute force confirms each value is attainable
        p = one_hot_sum_proof(n)
        clause = Disjunction(unit(i, 1) for i in range(1, n + 1))
        attain = {sum(a) for a in oracles.assignments(n) if oracles.dholds(clause, a)}
        assert conclusion_values(p) == attain
