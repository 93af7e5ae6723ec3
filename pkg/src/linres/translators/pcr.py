"""Polynomial calculus with resolution (PCR): polynomials, proofs, checking,
and the translation of R(lin) proofs.

Monomials are sorted tuples of signed variables with repetition: i stands for
x_i and -i for its twin xb_i. Coefficients are exact rationals.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import PcrCheckError, ParseError, SizeBudgetExceeded
from ..proof import BooleanAxiom, Premise, Resolve, Simplify, Weaken
from ..semantics import value_set

MONOMIAL_CAP = 10 ** 6


def _key(v):
    return (abs(v), v < 0)


def mono(*vs):
    return tuple(sorted(vs, key=_key))


class Polynomial:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        for m, c in (terms.items() if isinstance(terms, dict) else (terms or ())):
            c = Fraction(c)
            if c:
                m = mono(*m)
                t[m] = t.get(m, 0) + c
        self.terms = {m: c for m, c in t.items() if c}

    @classmethod
    def const(cls, c):
        return cls({(): c})

    @classmethod
    def linear(cls, eq):
        """lhs - rhs of an equation."""
        return cls([((v,), c) for v, c in eq.terms] + [((), -eq.rhs)])

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    def is_zero(self):
        return not self.terms

    def combine(self, other, a=1, b=1):
        t = {m: a * c for m, c in self.terms.items()} if a else {}
        if b:
            for m, c in other.terms.items():
                t[m] = t.get(m, 0) + b * c
        return Polynomial._raw(t)

    @classmethod
    def _raw(cls, t):
        p = cls.__new__(cls)
        p.terms = {m: Fraction(c) for m, c in t.items() if c}
        return p

    def __add__(self, other):
        return self.combine(other, 1, 1)

    def __sub__(self, other):
        return self.combine(other, 1, -1)

    def scale(self, a):
        return self.combine(self, a, 0)

    def mul_var(self, v):
        return Polynomial._raw({mono(*m, v): c for m, c in self.terms.items()})

    def __mul__(self, other):
        t = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono(*m1, *m2)
                t[m] = t.get(m, 0) + c1 * c2
                if len(t) > MONOMIAL_CAP:
                    raise SizeBudgetExceeded(f"product exceeds {MONOMIAL_CAP} monomials")
        return Polynomial._raw(t)

    def evaluate(self, a):
        """Value at a 0/1 assignment (list indexed by variable - 1), xb = 1 - x."""
        s = Fraction(0)
        for m, c in self.terms.items():
            p = 1
            for v in m:
                x = a[abs(v) - 1]
                p *= x if v > 0 else 1 - x
                if not p:
                    break
            s += c * p
        return s

    def degree(self):
        return max((len(m) for m in self.terms), default=0)

    def variables(self):
        return {abs(v) for m in self.terms for v in m}

    def __repr__(self):
        return f"Polynomial({format_poly(self)})"


def hat(d):
    """Polynomial translation of a disjunction: product of (lhs - rhs)."""
    p = Polynomial.const(1)
    for e in d:
        p = p * Polynomial.linear(e)
    return p


def _fmt_var(v):
    return f"x{v}" if v > 0 else f"xb{-v}"


def format_mono(m):
    return "*".join(_fmt_var(v) for v in m) if m else "1"


def _order(m):
    return (len(m), [_key(v) for v in m])


def format_poly(p):
    if p.is_zero():
        return "0"
    return " ".join(f"{format_mono(m)}:{p.terms[m]}" for m in sorted(p.terms, key=_order))


def _parse_var(tok):
    if tok.startswith("xb"):
        return -int(tok[2:])
    if tok.startswith("x"):
        return int(tok[1:])
    raise ValueError(tok)


def parse_poly(text, no=None):
    toks = text.split()
    if toks == ["0"]:
        return Polynomial()
    t = {}
    try:
        for tok in toks:
            m, _, c = tok.rpartition(":")
            ms = () if m == "1" else mono(*(_parse_var(x) for x in m.split("*")))
            if ms in t or any(v == 0 for v in ms):
                raise ValueError(tok)
            t[ms] = Fraction(c)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad polynomial {text!r}", no) from None
    return Polynomial(t)


# proofs

@dataclass(frozen=True)
class PPremise:
    pid: int


@dataclass(frozen=True)
class PAxiom:
    kind: str      # "sq": v^2 - v for a signed variable v; "compl": x + xb - 1
    var: int


@dataclass(frozen=True)
class PProduct:
    a: int
    var: int


@dataclass(frozen=True)
class PAddition:
    a: int
    b: int
    alpha: Fraction
    beta: Fraction


@dataclass
class PcrLine:
    id: int
    poly: Polynomial
    just: object


@dataclass
class PcrProof:
    num_vars: int
    premises: dict
    lines: list
    image: dict = field(default_factory=dict, compare=False)   # R(lin) line id -> PCR line id

    def size(self):
        return sum(len(ln.poly) for ln in self.lines)


def axiom_poly(kind, v):
    if kind == "sq":
        return Polynomial({(v, v): 1, (v,): -1})
    return Polynomial({(v,): 1, (-v,): 1, (): -1})


def _pcr_line(pp, j, seen, lid):
    def ant(a):
        if a not in seen:
            raise PcrCheckError(f"antecedent {a} is not an earlier line", lid)
        return seen[a]

    def okvar(v):
        if not isinstance(v, int) or v == 0 or abs(v) > pp.num_vars:
            raise PcrCheckError(f"variable {v} out of range", lid)

    if isinstance(j, PPremise):
        if j.pid not in pp.premises:
            raise PcrCheckError(f"unknown premise {j.pid}", lid)
        return pp.premises[j.pid]
    if isinstance(j, PAxiom):
        okvar(j.var)
        if j.kind not in ("sq", "compl") or (j.kind == "compl" and j.var < 0):
            raise PcrCheckError(f"bad axiom {j.kind} {j.var}", lid)
        return axiom_poly(j.kind, j.var)
    if isinstance(j, PProduct):
        okvar(j.var)
        return ant(j.a).mul_var(j.var)
    if isinstance(j, PAddition):
        return ant(j.a).combine(ant(j.b), j.alpha, j.beta)
    raise PcrCheckError(f"unknown justification {j!r}", lid)


def pcr_check(pp: PcrProof, refutation=False):
    seen = {}
    for ln in pp.lines:
        if ln.id in seen:
            raise PcrCheckError("duplicate line id", ln.id)
        try:
            got = _pcr_line(pp, ln.just, seen, ln.id)
        except PcrCheckError:
            raise
        except Exception as e:
            raise PcrCheckError(f"malformed line: {e}", ln.id) from None
        if got != ln.poly:
            raise PcrCheckError(f"stated {format_poly(ln.poly)} but rule gives {format_poly(got)}", ln.id)
        seen[ln.id] = ln.poly
    if refutation and (not pp.lines or pp.lines[-1].poly != Polynomial.const(1)):
        raise PcrCheckError("last line is not the constant 1", pp.lines[-1].id if pp.lines else None)
    return True


# translation

class _Emitter:
    def __init__(self, num_vars, premises, cap):
        self.p = PcrProof(num_vars, premises, [])
        self.polys = {}
        self.cap = cap
        self._axioms = {}

    def emit(self, poly, just):
        if len(poly) > self.cap:
            raise SizeBudgetExceeded(f"line with {len(poly)} monomials exceeds the cap {self.cap}")
        lid = len(self.p.lines) + 1
        self.p.lines.append(PcrLine(lid, poly, just))
        self.polys[lid] = poly
        return lid

    def axiom(self, kind, v):
        k = (kind, v)
        if k not in self._axioms:
            self._axioms[k] = self.emit(axiom_poly(kind, v), PAxiom(kind, v))
        return self._axioms[k]

    def product(self, a, v):
        return self.emit(self.polys[a].mul_var(v), PProduct(a, v))

    def add(self, a, b, alpha, beta):
        alpha, beta = Fraction(alpha), Fraction(beta)
        return self.emit(self.polys[a].combine(self.polys[b], alpha, beta), PAddition(a, b, alpha, beta))

    def linear_sum(self, parts):
        """Sum of coef * line over (line, coef) pairs."""
        parts = [(l, c) for l, c in parts if c]
        if not parts:
            raise ValueError("empty sum")
        if len(parts) == 1:
            l, c = parts[0]
            return l if c == 1 else self.add(l, l, c, 0)
        acc = self.add(parts[0][0], parts[1][0], parts[0][1], parts[1][1])
        for l, c in parts[2:]:
            acc = self.add(acc, l, 1, c)
        return acc

    def mul_monomial(self, a, m, cache):
        """m * line a via a chain of Products; cache maps prefixes to lines."""
        cur, pre = a, ()
        for v in m:
            pre = pre + (v,)
            if pre not in cache:
                cache[pre] = self.product(cur, v)
            cur = cache[pre]
        return cur

    def mul_poly(self, a, q):
        if q.is_zero():
            return self.add(a, a, 0, 0)
        cache = {}
        parts = [(self.mul_monomial(a, m, cache), c) for m, c in sorted(q.terms.items(), key=lambda t: _order(t[0]))]
        return self.linear_sum(parts)

    def mul_linear(self, a, eq):
        return self.mul_poly(a, Polynomial.linear(eq))

    def from_axioms(self, P):
        """Derive a polynomial in x-variables that vanishes on the cube."""
        t = dict(P.terms)
        parts = []
        for d in range(P.degree(), 1, -1):
            for m in [m for m in t if len(m) == d]:
                i = next((i for i in range(d - 1) if m[i] == m[i + 1]), None)
                if i is None:
                    continue
                c = t.pop(m)
                parts.append((m[i], m[:i] + m[i + 2:], c))
                low = m[:i] + m[i + 1:]
                t[low] = t.get(low, 0) + c
                if not t[low]:
                    del t[low]
        if t:
            raise SizeBudgetExceeded("internal: polynomial does not vanish on the cube")
        if not parts:
            return self.add(self.axiom("sq", 1), self.axiom("sq", 1), 0, 0)
        lines = []
        caches = {}
        for v, rest, c in parts:
            ax = self.axiom("sq", v)
            lines.append((self.mul_monomial(ax, rest, caches.setdefault(v, {})), c))
        return self.linear_sum(lines)


def _t_poly(q_roots, nhat):
    """Evaluate prod (t - r) at t = nhat."""
    p = Polynomial.const(1)
    for r in q_roots:
        p = p * nhat.combine(Polynomial.const(r), 1, -1)
    return p


def _divide(em, g, W, N, target):
    """From g = hat(W) * N^ with N in W derive hat(W)."""
    if not N.terms:
        return em.add(g, g, Fraction(1, -N.rhs), 0)
    nhat = Polynomial.linear(N)
    V = sorted({a - N.rhs for a in value_set(N.terms)})
    roots = [v for v in V if v != 0]
    c = Fraction(1)
    for r in roots:
        c *= -r
    # Q(t) = prod (t - r); S(t) = (Q(t) - c) / t; c * F = R * t Q(t) - g * S(t) at t = N^
    coeffs = [Fraction(1)]
    for r in roots:
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for i, a in enumerate(coeffs):
            nxt[i + 1] += a
            nxt[i] -= r * a
        coeffs = nxt
    S = Polynomial()
    power = Polynomial.const(1)
    for k in range(1, len(coeffs)):
        S = S + power.scale(coeffs[k])
        power = power * nhat
    R = hat([e for e in W if e != N])
    rz = em.from_axioms(R * _t_poly([0] + roots, nhat))
    gs = em.mul_poly(g, S)
    return em.add(rz, gs, 1 / c, -1 / c)


def rlin_to_pcr(proof, cap=MONOMIAL_CAP):
    premises = {pid: hat(d) for pid, d in proof.premises.items()}
    em = _Emitter(proof.num_vars, premises, cap)
    m = {}
    for ln in proof.lines:
        j = ln.just
        if isinstance(j, BooleanAxiom):
            m[ln.id] = em.axiom("sq", j.var)
        elif isinstance(j, Premise):
            m[ln.id] = em.emit(premises[j.pid], PPremise(j.pid))
        elif isinstance(j, Weaken):
            da = proof.line(j.a).disj
            m[ln.id] = m[j.a] if j.eq in da else em.mul_linear(m[j.a], j.eq)
        elif isinstance(j, Simplify):
            k = proof.line(j.a).disj[j.i].rhs
            m[ln.id] = em.add(m[j.a], m[j.a], Fraction(-1, k), 0)
        elif isinstance(j, Resolve):
            da, db = proof.line(j.a).disj, proof.line(j.b).disj
            A, B = da.without_index(j.ia), db.without_index(j.ib)
            N = da[j.ia] + db[j.ib] if j.op == "add" else da[j.ia] - db[j.ib]
            W = list(dict.fromkeys(A + B))
            p1 = m[j.a]
            for e in W:
                if e not in A:
                    p1 = em.mul_linear(p1, e)
            p2 = m[j.b]
            for e in W:
                if e not in B:
                    p2 = em.mul_linear(p2, e)
            g = em.add(p1, p2, 1, 1 if j.op == "add" else -1)
            target = hat(ln.disj)
            if N in W and em.polys[g] != target:
                g = _divide(em, g, W, N, target)
            m[ln.id] = g
        else:
            raise PcrCheckError(f"unknown justification {j!r}", ln.id)
        if em.polys[m[ln.id]] != hat(ln.disj):
            raise PcrCheckError("internal: translation mismatch", ln.id)
    em.p.image = m
    return em.p


# file format

def _fmt_just(j):
    if isinstance(j, PPremise):
        return f"premise {j.pid}"
    if isinstance(j, PAxiom):
        return f"axiom {j.kind} {_fmt_var(j.var)}"
    if isinstance(j, PProduct):
        return f"product {j.a} {_fmt_var(j.var)}"
    return f"add {j.a} {j.b} {j.alpha} {j.beta}"


def format_pcr(pp: PcrProof) -> str:
    out = ["pcr 1", f"vars {pp.num_vars}"]
    for pid in sorted(pp.premises):
        out.append(f"premise {pid} {format_poly(pp.premises[pid])}")
    for ln in pp.lines:
        out.append(f"poly {ln.id} {_fmt_just(ln.just)} : {format_poly(ln.poly)}")
    return "\n".join(out) + "\n"


def parse_pcr(text: str) -> PcrProof:
    rows = [(no, raw.split("#", 1)[0].strip()) for no, raw in enumerate(text.splitlines(), 1)]
    rows = [(no, t) for no, t in rows if t]
    if not rows or rows[0][1] != "pcr 1":
        raise ParseError("expected header 'pcr 1'", rows[0][0] if rows else 1)
    try:
        h = rows[1][1].split()
        if h[0] != "vars" or len(h) != 2:
            raise ValueError
        n = int(h[1])
    except (ValueError, IndexError):
        raise ParseError("expected 'vars <n>'", rows[1][0] if len(rows) > 1 else 2) from None
    premises, lines = {}, []
    for no, t in rows[2:]:
        w = t.split()
        try:
            if w[0] == "premise":
                premises[int(w[1])] = parse_poly(" ".join(w[2:]), no)
                continue
            if w[0] != "poly":
                raise ParseError(f"unknown record {w[0]!r}", no)
            head, sep, body = t.partition(" : ")
            if not sep:
                raise ParseError("missing ' : <polynomial>'", no)
            h = head.split()
            lid, kind, rest = int(h[1]), h[2], h[3:]
            if kind == "premise" and len(rest) == 1:
                j = PPremise(int(rest[0]))
            elif kind == "axiom" and len(rest) == 2:
                j = PAxiom(rest[0], _parse_var(rest[1]))
            elif kind == "product" and len(rest) == 2:
                j = PProduct(int(rest[0]), _parse_var(rest[1]))
            elif kind == "add" and len(rest) == 4:
                j = PAddition(int(rest[0]), int(rest[1]), Fraction(rest[2]), Fraction(rest[3]))
            else:
                raise ParseError(f"bad {kind} record", no)
            lines.append(PcrLine(lid, parse_poly(body, no), j))
        except (ValueError, IndexError, ZeroDivisionError):
            raise ParseError("malformed record", no) from None
    return PcrProof(n, premises, lines)
