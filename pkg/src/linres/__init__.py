"""Resolution over linear equations: R(lin) and R0(lin) proofs."""
from .core import (Clause, Cnf, Disjunction, FALSE, LinearEquation, boolean_axiom, disjunction_size,
                   eq_add, eq_sub, equation_size, eval_disjunction, format_disjunction, format_equation,
                   parse_disjunction, parse_equation, translate_clause, unit)
from .proof import Proof, ProofBuilder, proof_size
from .checker import (R0Params, check_line, check_proof, check_refutation, proof_stats, r0_classify,
                      semantic_audit)
from .semantics import semantically_implies
from .implcomplete import derive, derive_r0

__version__ = "0.1.0"
