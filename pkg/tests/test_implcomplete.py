import pytest
from hypothesis import given, settings, strategies as st

import oracles
from linres.checker import R0Params, check_proof, check_r0, semantic_audit
from linres.core import Disjunction, LinearEquation, parse_disjunction
from linres.errors import DomainError, NotImplied, NotR0, TooManyVariables
from linres.formats import format_proof
from linres.generators import TseitinInstance, cycle
from linres.generators.tseitin import tseitin_formula, vertex_target
from linres.implcomplete import derive, derive_r0
from linres.proof import rename_disjunction


def D(s):
    return parse_disjunction(s)


def disjunctions(n, coef=2, size=3):
    eqs = st.builds(LinearEquation,
                    st.dictionaries(st.integers(1, n), st.integers(-coef, coef).filter(bool), max_size=n),
                    st.integers(-1, 3))
    return st.lists(eqs, min_size=1, max_size=size).map(Disjunction)


class TestExamples:
    def test_axiom_target(self):
        p = derive([], D("1:1 = 0 | 1:1 = 1"), 1)
        assert len(p.lines) == 1 and check_proof(p)

    def test_sum_of_units(self):
        p = derive([D("1:1 = 1"), D("2:1 = 1")], D("1:1 2:1 = 2"), 2)
        assert check_proof(p)
        assert p.conclusion == D("1:1 2:1 = 2")
        assert semantic_audit(p) is None

    def test_not_implied(self):
        with pytest.raises(NotImplied) as ei:
            derive([D("1:1 = 1")], D("1:1 = 0"), 1)
        assert ei.value.countermodel == [1]

    def test_unsatisfiable_premises(self):
        p = derive([D("1:1 = 1"), D("1:1 = 0")], D("2:3 = 5"), 2)
        assert check_proof(p) and p.conclusion == D("2:3 = 5")

    def test_tautology_zero(self):
        p = derive([], D("= 0"), 1)
        assert check_proof(p) and p.conclusion == D("= 0")

    def test_domain(self):
        with pytest.raises(TooManyVariables):
            derive([], D("1:1 = 0 | 1:1 = 1"), 13)
        with pytest.raises(DomainError):
            derive([], D("3:1 = 0"), 2)

    def test_deterministic(self):
        prem = [D("1:1 2:1 = 1 | 3:1 = 1"), D("1:1 = 0 | 2:2 3:-1 = 1")]
        target = D("1:1 2:1 3:1 = 1 | 1:1 2:1 3:1 = 2 | 3:1 = 0")
        if not oracles.implies(prem, target, 3):
            target = Disjunction(target.eqs + (LinearEquation({1: 1}, 0), LinearEquation({1: 1}, 1)))
        texts = {format_proof(derive(prem, target, 3)) for _ in range(3)}
        assert len(texts) == 1


class TestR0:
    def test_single_variable(self):
        p = derive_r0([D("1:1 = 1")], D("1:1 = 1 | 2:1 = 0"), 2, R0Params(2, 1))
        assert check_proof(p)

    def test_coefficient_too_big(self):
        with pytest.raises(NotR0):
            derive_r0([D("1:1 = 1")], D("1:5 = 5"), 1, R0Params(3, 1))

    def test_tseitin_vertex_lemma(self):
        # cycle, r = 2, p = 2: four local variables (two residue indicators per out-edge)
        inst = TseitinInstance(3, cycle(3), 2)
        v = 1
        outs = inst.out_edges(v)
        vs = sorted(inst.var(e, i) for e in outs for i in range(inst.p))
        fwd = {x: k + 1 for k, x in enumerate(vs)}
        local = [d for d in tseitin_formula(inst) if d.variables() and set(d.variables()) <= set(vs)]
        prem = [rename_disjunction(d, fwd) for d in local]
        target = rename_disjunction(vertex_target(inst, v), fwd)
        assert len(vs) == 4
        assert target == D("2:1 4:1 = 1 | 2:1 4:1 = 3")
        p = derive_r0(prem, target, 4, R0Params(3, 1))
        assert check_proof(p)
        assert check_r0(p, R0Params(3, 1))
        assert semantic_audit(p) is None


class TestRandom:
    @settings(max_examples=40)
    @given(st.integers(1, 4).flatmap(lambda n: st.tuples(st.just(n), st.lists(disjunctions(n), max_size=3),
                                                         disjunctions(n))))
    def test_completeness_and_soundness(self, inst):
        n, prem, target = inst
        if oracles.implies(prem, target, n):
            p = derive(prem, target, n)
            assert check_proof(p)
            assert p.conclusion == target
            assert semantic_audit(p) is None
        else:
            with pytest.raises(NotImplied) as ei:
                derive(prem, target, n)
            cm = ei.value.countermodel
            assert all(oracles.dholds(d, cm) for d in prem)
            assert not oracles.dholds(target, cm)
