"""Shared fixtures data: corpora, random instances."""
import random
from pathlib import Path

import oracles
from linres.core import FALSE, Clause, Cnf, parse_disjunction as D, translate_clause
from linres.proof import Line, Premise, Proof, Resolve, Simplify

CORPUS = Path(__file__).parent / "corpus"
GOLDEN = Path(__file__).parent / "golden"

RES_BUDGET = (5, 5)   # rlin size <= 5 * res size + 5, frozen from measurements


def corpus(kind):
    return sorted((CORPUS / kind).glob(f"*.{kind}"))


def random_unsat_3cnf(seed):
    """Add random 3-clauses until the CNF is unsatisfiable (n in 4..8)."""
    rng = random.Random(seed)
    n = rng.randint(4, 8)
    clauses = []
    while True:
        vs = rng.sample(range(1, n + 1), 3)
        clauses.append(Clause(tuple(v if rng.random() < 0.5 else -v for v in vs)))
        if not oracles.satisfiable([translate_clause(c) for c in clauses], n):
            return Cnf(n, clauses)


def tiny():
    """Refutation of {(x1=1), (x1=0)}."""
    return Proof(1, [D("1:1 = 1"), D("1:1 = 0")], [
        Line(1, D("1:1 = 1"), Premise(1)),
        Line(2, D("1:1 = 0"), Premise(2)),
        Line(3, D("= 1"), Resolve(1, 0, 2, 0, "sub")),
        Line(4, FALSE, Simplify(3, 0)),
    ])
