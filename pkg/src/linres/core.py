"""Linear equations over 0/1 variables and disjunctions of them.

Equations are immutable, hashable and kept in a normal form: terms sorted by
variable, no zero coefficients. Free terms always live on the right.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import ParseError, UnboundVariable


class LinearEquation:
    __slots__ = ("terms", "rhs", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable = (), rhs: int = 0):
        if isinstance(coeffs, Mapping):
            items = coeffs.items()
        else:
            items = coeffs
        acc = {}
        for v, c in items:
            if v <= 0:
                raise ValueError(f"variable index must be positive, got {v}")
            acc[v] = acc.get(v, 0) + c
        self.terms = tuple(sorted((v, c) for v, c in acc.items() if c))
        self.rhs = int(rhs)
        self._hash = hash((self.terms, self.rhs))

    @classmethod
    def _raw(cls, terms, rhs):
        e = object.__new__(cls)
        e.terms = terms
        e.rhs = rhs
        e._hash = hash((terms, rhs))
        return e

    @property
    def coeffs(self):
        return dict(self.terms)

    @property
    def form(self):
        return self.terms

    @property
    def variables(self):
        return [v for v, _ in self.terms]

    def coeff(self, var):
        for v, c in self.terms:
            if v == var:
                return c
        return 0

    def is_constant(self):
        return not self.terms

    def size(self):
        return sum(abs(c) for _, c in self.terms) + abs(self.rhs)

    def lhs(self, a: Sequence[int]):
        try:
            return sum(c * a[v - 1] for v, c in self.terms)
        except IndexError:
            raise UnboundVariable(f"assignment too short for {self}") from None

    def holds(self, a: Sequence[int]):
        return self.lhs(a) == self.rhs

    def _combine(self, other, sign):
        i = j = 0
        t1, t2 = self.terms, other.terms
        out = []
        while i < len(t1) and j < len(t2):
            v1, c1 = t1[i]
            v2, c2 = t2[j]
            if v1 == v2:
                c = c1 + sign * c2
                if c:
                    out.append((v1, c))
                i += 1
                j += 1
            elif v1 < v2:
                out.append(t1[i])
                i += 1
            else:
                out.append((v2, sign * c2))
                j += 1
        out.extend(t1[i:])
        out.extend((v, sign * c) for v, c in t2[j:])
        return LinearEquation._raw(tuple(out), self.rhs + sign * other.rhs)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return LinearEquation._raw(tuple((v, -c) for v, c in self.terms), -self.rhs)

    def scale(self, k: int):
        if k == 0:
            return LinearEquation._raw((), 0)
        return LinearEquation._raw(tuple((v, k * c) for v, c in self.terms), k * self.rhs)

    def with_rhs(self, rhs):
        return LinearEquation._raw(self.terms, rhs)

    def restrict(self, var, b):
        """Substitute x_var := b, moving the constant to the right."""
        c = self.coeff(var)
        if not c:
            return self
        return LinearEquation._raw(tuple(t for t in self.terms if t[0] != var), self.rhs - c * b)

    def __eq__(self, other):
        return (isinstance(other, LinearEquation) and self._hash == other._hash
                and self.terms == other.terms and self.rhs == other.rhs)

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return (self.terms, self.rhs) < (other.terms, other.rhs)

    def __repr__(self):
        return f"Eq({format_equation(self)})"

    def __str__(self):
        return format_equation(self)


def eq(coeffs=(), rhs=0):
    return LinearEquation(coeffs, rhs)


def unit(var, value):
    return LinearEquation._raw(((var, 1),), value)


def form_eq(form, rhs):
    """Equation from a terms tuple (already normalized) and a free term."""
    return LinearEquation._raw(tuple(form), rhs)


ZERO = LinearEquation._raw((), 0)


def eq_add(l1, l2):
    return l1 + l2


def eq_sub(l1, l2):
    return l1 - l2


def equation_size(l):
    return l.size()


class Disjunction:
    """Ordered, duplicate free tuple of equations. Equality is set equality."""

    __slots__ = ("eqs", "_set", "_index")

    def __init__(self, eqs: Iterable[LinearEquation] = ()):
        seen = {}
        for e in eqs:
            if e not in seen:
                seen[e] = len(seen)
        self.eqs = tuple(seen)
        self._index = seen
        self._set = None

    @property
    def equations(self):
        return self.eqs

    @property
    def eqset(self):
        if self._set is None:
            self._set = frozenset(self.eqs)
        return self._set

    def index(self, e):
        return self._index[e]

    def __contains__(self, e):
        return e in self._index

    def __len__(self):
        return len(self.eqs)

    def __iter__(self):
        return iter(self.eqs)

    def __getitem__(self, i):
        return self.eqs[i]

    def __bool__(self):
        return bool(self.eqs)

    def __eq__(self, other):
        if not isinstance(other, Disjunction):
            return NotImplemented
        return len(self.eqs) == len(other.eqs) and self.eqset == other.eqset

    def __hash__(self):
        return hash(self.eqset)

    def without_index(self, i):
        return self.eqs[:i] + self.eqs[i + 1:]

    def without(self, e):
        return Disjunction(x for x in self.eqs if x != e)

    def union(self, *others):
        out = list(self.eqs)
        for o in others:
            out.extend(o)
        return Disjunction(out)

    def size(self):
        return sum(e.size() for e in self.eqs)

    def variables(self):
        return sorted({v for e in self.eqs for v, _ in e.terms})

    def holds(self, a):
        return any(e.holds(a) for e in self.eqs)

    def identical(self, other):
        return self.eqs == other.eqs

    def __repr__(self):
        return f"Disj({format_disjunction(self)})"

    def __str__(self):
        return format_disjunction(self)


FALSE = Disjunction()


def eval_disjunction(d: Disjunction, a: Sequence[int]) -> bool:
    for e in d:
        if e.terms and e.terms[-1][0] > len(a):
            raise UnboundVariable(f"variable x{e.terms[-1][0]} not covered by assignment")
    return d.holds(a)


def disjunction_size(d):
    return d.size()


def boolean_axiom(h):
    return Disjunction((unit(h, 0), unit(h, 1)))


# clauses use DIMACS signed literals

@dataclass(frozen=True)
class Clause:
    literals: tuple

    def __post_init__(self):
        lits = tuple(dict.fromkeys(int(x) for x in self.literals))
        if any(x == 0 for x in lits):
            raise ValueError("literal 0 is not allowed")
        object.__setattr__(self, "literals", lits)

    def is_tautology(self):
        s = set(self.literals)
        return any(-x in s for x in s)

    def holds(self, a):
        return any((a[abs(x) - 1] == 1) == (x > 0) for x in self.literals)


@dataclass
class Cnf:
    num_vars: int
    clauses: list = field(default_factory=list)

    def __post_init__(self):
        for c in self.clauses:
            for x in c.literals:
                if abs(x) > self.num_vars:
                    raise ValueError(f"literal {x} exceeds num_vars {self.num_vars}")


def literal_equation(lit):
    return unit(abs(lit), 1 if lit > 0 else 0)


def translate_clause(c) -> Disjunction:
    lits = c.literals if isinstance(c, Clause) else c
    return Disjunction(literal_equation(x) for x in lits)


def as_clause(d: Disjunction):
    """Inverse of translate_clause, or None if d is not a clause translation."""
    lits = []
    for e in d:
        if len(e.terms) != 1 or e.terms[0][1] != 1 or e.rhs not in (0, 1):
            return None
        v = e.terms[0][0]
        lits.append(v if e.rhs == 1 else -v)
    return lits


# text syntax

def format_equation(e: LinearEquation) -> str:
    lhs = " ".join(f"{v}:{c}" for v, c in e.terms)
    return f"{lhs} = {e.rhs}" if lhs else f"= {e.rhs}"


def format_disjunction(d) -> str:
    if not len(d):
        return "FALSE"
    return " | ".join(format_equation(e) for e in d)


def _int(tok, what):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"bad {what} {tok!r}") from None


def parse_equation_tokens(toks) -> LinearEquation:
    if "=" not in toks:
        raise ParseError(f"equation without '=': {' '.join(toks)!r}")
    k = toks.index("=")
    if len(toks) != k + 2:
        raise ParseError(f"bad equation {' '.join(toks)!r}")
    seen = set()
    terms = []
    for t in toks[:k]:
        v, sep, c = t.partition(":")
        if not sep:
            raise ParseError(f"bad term {t!r}")
        v, c = _int(v, "variable"), _int(c, "coefficient")
        if v <= 0:
            raise ParseError(f"variable index must be positive: {t!r}")
        if c == 0:
            raise ParseError(f"zero coefficient: {t!r}")
        if v in seen:
            raise ParseError(f"repeated variable: {t!r}")
        seen.add(v)
        terms.append((v, c))
    return LinearEquation(terms, _int(toks[k + 1], "free term"))


def parse_equation(s: str) -> LinearEquation:
    return parse_equation_tokens(s.split())


def parse_disjunction_tokens(toks) -> Disjunction:
    if toks == ["FALSE"]:
        return FALSE
    if not toks:
        raise ParseError("empty disjunction text (use FALSE)")
    eqs, cur = [], []
    for t in toks + ["|"]:
        if t == "|":
            eqs.append(parse_equation_tokens(cur))
            cur = []
        else:
            cur.append(t)
    return Disjunction(eqs)


def parse_disjunction(s: str) -> Disjunction:
    return parse_disjunction_tokens(s.split())
