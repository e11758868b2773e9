"""Exact sparse multivariate polynomials over the rationals.

A :class:`Polynomial` is an immutable map from exponent vectors to nonzero
:class:`~fractions.Fraction` coefficients.  Exponent vectors are indexed by
the position of each symbol in its :class:`VariableOrder`, which lists the
variables greatest first, so comparing two vectors lexicographically compares
them under the variable order.

Besides ring arithmetic this module carries the univariate-in-one-variable
primitives the triangular decomposition kernel is built on: pseudo-division,
subresultant chains, resultants, gcds, squarefree parts and the extended
Euclidean algorithm.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

Exponents = Tuple[int, ...]
Scalar = Union[int, Fraction]

#: Degree of the zero polynomial.
DEG_ZERO = -math.inf

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class OrderMismatchError(ValueError):
    """Raised when polynomials over different variable orders are combined."""


class PolynomialSyntaxError(ValueError):
    """Raised by :func:`parse` on malformed text; carries the 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.message = message
        self.position = position


class UnknownVariableError(PolynomialSyntaxError):
    pass


class VariableOrder:
    """Ordered variables, greatest first (``z > y > x`` is ``("z", "y", "x")``)."""

    __slots__ = ("symbols", "_index")

    def __init__(self, symbols: Union[str, Iterable[str]]):
        if isinstance(symbols, str):
            symbols = [part.strip() for part in symbols.split(">")]
        symbols = tuple(symbols)
        if not symbols:
            raise ValueError("a variable order needs at least one variable")
        for s in symbols:
            if not isinstance(s, str) or not _IDENT.match(s):
                raise ValueError(f"invalid variable name {s!r}")
        if len(set(symbols)) != len(symbols):
            raise ValueError(f"duplicate variables in {symbols}")
        self.symbols = symbols
        self._index = {s: i for i, s in enumerate(symbols)}

    @classmethod
    def parse(cls, text: str) -> "VariableOrder":
        return cls(text)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __contains__(self, var: object) -> bool:
        return var in self._index

    def __eq__(self, other: object) -> bool:
        return isinstance(other, VariableOrder) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __repr__(self) -> str:
        return f"VariableOrder({' > '.join(self.symbols)!r})"

    def __str__(self) -> str:
        return " > ".join(self.symbols)

    def __reduce__(self):
        return (VariableOrder, (self.symbols,))

    def index(self, var: str) -> int:
        """Slot of ``var`` in exponent vectors (0 is the greatest variable)."""
        try:
            return self._index[var]
        except KeyError:
            raise ValueError(f"unknown variable {var!r}") from None

    def rank(self, var: str) -> int:
        """0 for the smallest variable, ``len - 1`` for the greatest."""
        return len(self.symbols) - 1 - self.index(var)

    def greater(self, a: str, b: str) -> bool:
        return self.index(a) < self.index(b)


def _grlex_key(e: Exponents) -> Tuple[int, Exponents]:
    return (sum(e), e)


class Polynomial:
    """Immutable sparse polynomial with rational coefficients."""

    __slots__ = ("order", "_terms", "_hash")

    def __init__(self, order: VariableOrder, terms: Optional[Mapping[Exponents, Scalar]] = None):
        self.order = order
        clean: Dict[Exponents, Fraction] = {}
        if terms:
            n = len(order)
            for e, c in terms.items():
                if len(e) != n:
                    raise ValueError("exponent vector length does not match the order")
                if c:
                    clean[tuple(e)] = c if type(c) is Fraction else Fraction(c)
        self._terms = clean
        self._hash: Optional[int] = None

    @classmethod
    def _raw(cls, order: VariableOrder, terms: Dict[Exponents, Fraction]) -> "Polynomial":
        # trusted constructor: no zero coefficients, Fraction values
        p = object.__new__(cls)
        p.order = order
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, order: VariableOrder) -> "Polynomial":
        return cls._raw(order, {})

    @classmethod
    def constant(cls, order: VariableOrder, c: Scalar) -> "Polynomial":
        if not c:
            return cls._raw(order, {})
        return cls._raw(order, {(0,) * len(order): Fraction(c)})

    @classmethod
    def variable(cls, order: VariableOrder, var: str, power: int = 1) -> "Polynomial":
        e = [0] * len(order)
        e[order.index(var)] = power
        return cls._raw(order, {tuple(e): Fraction(1)})

    # -- basic queries -----------------------------------------------------

    @property
    def terms(self) -> Mapping[Exponents, Fraction]:
        return self._terms

    def sorted_terms(self) -> List[Tuple[Exponents, Fraction]]:
        """Terms in descending graded-lexicographic order."""
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        if not self._terms:
            return True
        return len(self._terms) == 1 and not any(next(iter(self._terms)))

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self._terms.values()), Fraction(0))

    def variables(self) -> List[str]:
        """Variables occurring in the polynomial, greatest first."""
        n = len(self.order)
        seen = [False] * n
        for e in self._terms:
            for i, k in enumerate(e):
                if k:
                    seen[i] = True
        return [self.order.symbols[i] for i in range(n) if seen[i]]

    def total_degree(self) -> Union[int, float]:
        if not self._terms:
            return DEG_ZERO
        return max(sum(e) for e in self._terms)

    def degree(self, var: str) -> Union[int, float]:
        if not self._terms:
            return DEG_ZERO
        i = self.order.index(var)
        return max(e[i] for e in self._terms)

    def main_variable(self) -> Optional[str]:
        """Greatest variable with positive degree, ``None`` for constants."""
        n = len(self.order)
        best = n
        for e in self._terms:
            for i in range(best):
                if e[i]:
                    best = i
                    break
        return None if best == n else self.order.symbols[best]

    def leading_term(self) -> Tuple[Exponents, Fraction]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self._terms, key=_grlex_key)
        return e, self._terms[e]

    def coefficients(self, var: str) -> Dict[int, "Polynomial"]:
        """Recursive view: ``{k: coefficient of var^k}`` with nonzero entries."""
        i = self.order.index(var)
        parts: Dict[int, Dict[Exponents, Fraction]] = {}
        for e, c in self._terms.items():
            k = e[i]
            if k:
                e = e[:i] + (0,) + e[i + 1:]
            parts.setdefault(k, {})[e] = c
        return {k: Polynomial._raw(self.order, t) for k, t in parts.items()}

    def coefficient(self, var: str, k: int) -> "Polynomial":
        i = self.order.index(var)
        t = {e[:i] + (0,) + e[i + 1:]: c for e, c in self._terms.items() if e[i] == k}
        return Polynomial._raw(self.order, t)

    def leading_coefficient(self, var: str) -> "Polynomial":
        d = self.degree(var)
        if d == DEG_ZERO:
            return self
        return self.coefficient(var, int(d))

    def initial(self) -> "Polynomial":
        """Leading coefficient in the main variable."""
        v = self.main_variable()
        if v is None:
            raise ValueError("a constant polynomial has no initial")
        return self.leading_coefficient(v)

    def tail(self, var: str) -> "Polynomial":
        """``self`` minus its leading part in ``var``."""
        d = self.degree(var)
        if d == DEG_ZERO:
            return self
        i = self.order.index(var)
        return Polynomial._raw(self.order, {e: c for e, c in self._terms.items() if e[i] != d})

    def diff(self, var: str) -> "Polynomial":
        i = self.order.index(var)
        out: Dict[Exponents, Fraction] = {}
        for e, c in self._terms.items():
            k = e[i]
            if k:
                out[e[:i] + (k - 1,) + e[i + 1:]] = c * k
        return Polynomial._raw(self.order, out)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if other.order is not self.order and other.order != self.order:
            raise OrderMismatchError(f"{self.order} vs {other.order}")

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.order, other)
        return NotImplemented

    def __add__(self, other) -> "Polynomial":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if len(other._terms) > len(self._terms):
            a, b = other._terms, self._terms
        else:
            a, b = self._terms, other._terms
        out = dict(a)
        for e, c in b.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s += c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial._raw(self.order, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.order, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e)
            if s is None:
                out[e] = -c
            else:
                s -= c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial._raw(self.order, out)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def scale(self, c: Scalar) -> "Polynomial":
        if not c:
            return Polynomial.zero(self.order)
        c = Fraction(c)
        return Polynomial._raw(self.order, {e: v * c for e, v in self._terms.items()})

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        a, b = self._terms, other._terms
        if not a or not b:
            return Polynomial.zero(self.order)
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (eb, cb), = b.items()
            return Polynomial._raw(
                self.order, {tuple(x + y for x, y in zip(ea, eb)): ca * cb for ea, ca in a.items()}
            )
        out: Dict[Exponents, Fraction] = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = get(e)
                out[e] = ca * cb if s is None else s + ca * cb
        return Polynomial._raw(self.order, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative exponent")
        result = Polynomial.constant(self.order, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, var: str, k: int) -> "Polynomial":
        """Multiply by ``var**k``."""
        if k == 0:
            return self
        i = self.order.index(var)
        return Polynomial._raw(
            self.order, {e[:i] + (e[i] + k,) + e[i + 1:]: c for e, c in self._terms.items()}
        )

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.order == other.order and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.order, frozenset(self._terms.items())))
        return self._hash

    def __reduce__(self):
        return (Polynomial, (self.order, self._terms))

    def __repr__(self) -> str:
        return f"Polynomial({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)


# -- text --------------------------------------------------------------------


def _monomial_text(order: VariableOrder, e: Exponents) -> str:
    parts = []
    for s, k in zip(order.symbols, e):
        if k == 1:
            parts.append(s)
        elif k:
            parts.append(f"{s}^{k}")
    return "*".join(parts)


def format_poly(p: Polynomial) -> str:
    """Canonical text: graded-lex descending terms, ``*`` between factors."""
    if p.is_zero():
        return "0"
    out = []
    for idx, (e, c) in enumerate(p.sorted_terms()):
        mono = _monomial_text(p.order, e)
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if idx == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        start = m.start(m.lastindex) if m.lastindex else pos
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise PolynomialSyntaxError(f"unexpected character {ch!r}", start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, order: VariableOrder):
        self.order = order
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> Tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self, kind: str) -> Tuple[str, str, int]:
        tok = self.tokens[self.i]
        if tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise PolynomialSyntaxError(f"expected {kind}, found {what}", tok[2])
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            raise PolynomialSyntaxError("empty expression", self.peek()[2])
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise PolynomialSyntaxError(f"unexpected {tok[1]!r}", tok[2])
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while self.peek()[0] in "+-" and self.peek()[0] != "end":
            op = self.take(self.peek()[0])[0]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Polynomial:
        p = self.unary()
        while self.peek()[0] == "*":
            self.i += 1
            p = p * self.unary()
        return p

    def unary(self) -> Polynomial:
        kind = self.peek()[0]
        if kind == "-":
            self.i += 1
            return -self.unary()
        if kind == "+":
            self.i += 1
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek()[0] == "^":
            self.i += 1
            tok = self.peek()
            if tok[0] != "int":
                raise PolynomialSyntaxError("exponent must be a non-negative integer", tok[2])
            self.i += 1
            return base ** int(tok[1])
        return base

    def atom(self) -> Polynomial:
        kind, value, pos = self.peek()
        if kind == "int":
            self.i += 1
            num = int(value)
            if self.peek()[0] == "/":
                self.i += 1
                den_tok = self.peek()
                if den_tok[0] != "int":
                    raise PolynomialSyntaxError("expected integer denominator", den_tok[2])
                self.i += 1
                den = int(den_tok[1])
                if den == 0:
                    raise PolynomialSyntaxError("zero denominator", den_tok[2])
                return Polynomial.constant(self.order, Fraction(num, den))
            return Polynomial.constant(self.order, num)
        if kind == "name":
            self.i += 1
            if value not in self.order:
                raise UnknownVariableError(f"unknown variable {value!r}", pos)
            return Polynomial.variable(self.order, value)
        if kind == "(":
            self.i += 1
            p = self.expr()
            self.take(")")
            return p
        what = "end of input" if kind == "end" else repr(value)
        raise PolynomialSyntaxError(f"unexpected {what}", pos)


def parse(text: str, order: VariableOrder) -> Polynomial:
    """Parse ``text`` (integers, ``a/b`` rationals, ``+ - * ^``, parentheses)."""
    return _Parser(text, order).parse()


# -- normalization -----------------------------------------------------------


def canonical(p: Polynomial) -> Polynomial:
    """Primitive integer associate with positive graded-lex leading coefficient."""
    if p.is_zero():
        return p
    den = 1
    num = 0
    for c in p._terms.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    for c in p._terms.values():
        num = math.gcd(num, c.numerator * (den // c.denominator))
    _, lc = p.leading_term()
    factor = Fraction(den, num)
    if lc < 0:
        factor = -factor
    if factor == 1:
        return p
    return p.scale(factor)


def monic(p: Polynomial, var: str) -> Polynomial:
    lc = p.leading_coefficient(var)
    if not lc.is_constant():
        raise ValueError("leading coefficient is not a rational constant")
    return p.scale(1 / lc.constant_value())


# -- division ----------------------------------------------------------------


def pseudo_divide(a: Polynomial, b: Polynomial, var: str) -> Tuple[Polynomial, Polynomial, int]:
    """Return ``(q, r, e)`` with ``initial(b)**e * a == q*b + r``, ``deg(r) < deg(b)``.

    ``e`` is ``max(deg(a) - deg(b) + 1, 0)``.
    """
    a._check(b)
    db = b.degree(var)
    if db == DEG_ZERO or db < 1:
        raise ValueError(f"divisor has degree {db} in {var}")
    db = int(db)
    da = a.degree(var)
    zero = Polynomial.zero(a.order)
    if da == DEG_ZERO or da < db:
        return zero, a, 0
    e = int(da) - db + 1
    bc = b.coefficients(var)
    lb = bc.pop(db)
    b_rest = [(k, c) for k, c in bc.items()]
    q = zero
    r = a
    steps = 0
    while not r.is_zero():
        dr = r.degree(var)
        if dr < db:
            break
        lr = r.coefficient(var, int(dr))
        shift = int(dr) - db
        q = q * lb + lr.shift(var, shift)
        # r <- lb*r - lr*x^shift*b, leading terms cancel
        r = r.tail(var) * lb
        for k, c in b_rest:
            r = r - (lr * c).shift(var, k + shift)
        steps += 1
    if steps < e:
        m = lb ** (e - steps)
        q = q * m
        r = r * m
    return q, r, e


def prem(a: Polynomial, b: Polynomial, var: str) -> Polynomial:
    return pseudo_divide(a, b, var)[1]


def exact_divide(a: Polynomial, b: Polynomial) -> Polynomial:
    """Exact quotient ``a / b``; raises :class:`ValueError` if ``b`` does not divide ``a``."""
    a._check(b)
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if b.is_constant():
        return a.scale(1 / b.constant_value())
    if len(b._terms) == 1:
        (eb, cb), = b._terms.items()
        out = {}
        for e, c in a._terms.items():
            d = tuple(x - y for x, y in zip(e, eb))
            if min(d) < 0:
                raise ValueError("inexact division")
            out[d] = c / cb
        return Polynomial._raw(a.order, out)
    eb, cb = b.leading_term()
    b_terms = list(b._terms.items())
    r = dict(a._terms)
    q: Dict[Exponents, Fraction] = {}
    while r:
        e = max(r, key=_grlex_key)
        d = tuple(x - y for x, y in zip(e, eb))
        if min(d) < 0:
            raise ValueError("inexact division")
        c = r[e] / cb
        q[d] = c
        for et, ct in b_terms:
            m = tuple(x + y for x, y in zip(d, et))
            s = r.get(m, 0) - c * ct
            if s:
                r[m] = s
            else:
                r.pop(m, None)
    return Polynomial._raw(a.order, q)


def divides(b: Polynomial, a: Polynomial) -> bool:
    try:
        exact_divide(a, b)
    except ValueError:
        return False
    return True


# -- gcd and content ---------------------------------------------------------


def content(p: Polynomial, var: str) -> Polynomial:
    """Gcd of the coefficients of ``p`` viewed in ``var`` (canonical)."""
    coeffs = sorted(p.coefficients(var).values(), key=len)
    g = Polynomial.zero(p.order)
    for c in coeffs:
        g = gcd(g, c)
        if g.is_constant():
            break
    return g


def primitive_part(p: Polynomial, var: str) -> Polynomial:
    """``p`` divided by its content in ``var``, canonically normalized."""
    if p.is_zero():
        return p
    c = content(p, var)
    if c.is_constant():
        return canonical(p)
    return canonical(exact_divide(p, c))


@lru_cache(maxsize=None)
def _sympy_ring(symbols: Tuple[str, ...]):
    # sparse multivariate gcd is bought, not built; imported lazily
    from sympy import Symbol
    from sympy.polys.domains import QQ
    from sympy.polys.rings import ring

    return ring([Symbol(s) for s in symbols], QQ)[0]


def warm_up(order: VariableOrder) -> None:
    """Do the lazy sympy imports and ring setup ahead of timed work."""
    _sympy_ring(order.symbols)
    _divisors(1)


def gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Greatest common divisor over the rationals, in canonical form."""
    a._check(b)
    if a.is_zero():
        return canonical(b)
    if b.is_zero():
        return canonical(a)
    if a.is_constant() or b.is_constant():
        return Polynomial.constant(a.order, 1)
    if a == b:
        return canonical(a)
    R = _sympy_ring(a.order.symbols)
    dom = R.domain
    ra = R.from_dict({e: dom(c.numerator, c.denominator) for e, c in a.terms.items()})
    rb = R.from_dict({e: dom(c.numerator, c.denominator) for e, c in b.terms.items()})
    g = ra.gcd(rb)
    terms = {tuple(e): Fraction(int(c.numerator), int(c.denominator)) for e, c in g.items()}
    return canonical(Polynomial(a.order, terms))


# -- subresultants -----------------------------------------------------------


def subresultant_chain(a: Polynomial, b: Polynomial, var: str) -> List[Polynomial]:
    """Subresultants ``[S_0, ..., S_q]`` of ``a`` and ``b`` in ``var``.

    ``q = deg(b) <= deg(a) = p``.  Signs follow the determinantal definition
    with ``a``'s rows first, so ``S_0`` is the Sylvester resultant.  ``S_q`` is
    ``lc(b)**(p-q-1) * b`` when ``p > q`` and ``b`` itself when ``p == q``.
    """
    a._check(b)
    p_deg = a.degree(var)
    q_deg = b.degree(var)
    if q_deg == DEG_ZERO or q_deg < 1 or p_deg < q_deg:
        raise ValueError("subresultant chain needs deg(a) >= deg(b) >= 1")
    p_deg, q_deg = int(p_deg), int(q_deg)
    zero = Polynomial.zero(a.order)
    S: List[Polynomial] = [zero] * (q_deg + 1)
    lc_b = b.leading_coefficient(var)
    delta = p_deg - q_deg
    S[q_deg] = b if delta == 0 else b * lc_b ** (delta - 1)
    s = lc_b ** delta
    A = b
    B = prem(a, -b, var)
    # Ducos' recurrence; prem against -b keeps the determinantal signs
    while True:
        if B.is_zero():
            break
        d = int(A.degree(var))
        e = int(B.degree(var))
        S[d - 1] = B
        dd = d - e
        if dd > 1:
            lc_B = B.leading_coefficient(var)
            C = exact_divide(B * lc_B ** (dd - 1), s ** (dd - 1))
            S[e] = C
        else:
            C = B
        if e == 0:
            break
        B = exact_divide(prem(A, -B, var), s ** dd * A.leading_coefficient(var))
        A = C
        s = A.leading_coefficient(var)
    return S


def resultant(a: Polynomial, b: Polynomial, var: str) -> Polynomial:
    """Sylvester resultant of ``a`` and ``b`` in ``var`` (``a`` listed first)."""
    da, db = a.degree(var), b.degree(var)
    if da == DEG_ZERO or db == DEG_ZERO or da < 1 or db < 1:
        raise ValueError("resultant needs positive degree in both arguments")
    if da >= db:
        return subresultant_chain(a, b, var)[0]
    r = subresultant_chain(b, a, var)[0]
    return -r if (da * db) % 2 else r


# -- univariate helpers ------------------------------------------------------


def squarefree_part(p: Polynomial, var: str) -> Polynomial:
    """``p / gcd(p, dp/dvar)``, canonically normalized."""
    if p.degree(var) == DEG_ZERO or p.degree(var) < 1:
        raise ValueError(f"squarefree part needs positive degree in {var}")
    g = gcd(p, p.diff(var))
    return canonical(exact_divide(p, g))


def _check_univariate(p: Polynomial, var: str) -> None:
    for v in p.variables():
        if v != var:
            raise ValueError(f"polynomial is not univariate in {var}: involves {v}")


def univariate_divmod(a: Polynomial, b: Polynomial, var: str) -> Tuple[Polynomial, Polynomial]:
    """Euclidean division of univariate polynomials over the rationals."""
    lb = b.leading_coefficient(var).constant_value()
    db = int(b.degree(var))
    q = Polynomial.zero(a.order)
    r = a
    while not r.is_zero() and r.degree(var) >= db:
        dr = int(r.degree(var))
        t = Polynomial.variable(a.order, var, dr - db).scale(
            r.leading_coefficient(var).constant_value() / lb
        )
        q = q + t
        r = r - t * b
    return q, r


def extended_euclid(a: Polynomial, b: Polynomial, var: str) -> Tuple[Polynomial, Polynomial, Polynomial]:
    """Return ``(u, w, g)`` with ``u*a + w*b == g``, ``g`` a monic gcd."""
    _check_univariate(a, var)
    _check_univariate(b, var)
    if b.is_zero():
        raise ValueError("second argument must be nonzero")
    order = a.order
    one, zero = Polynomial.constant(order, 1), Polynomial.zero(order)
    r0, r1 = a, b
    u0, u1 = one, zero
    w0, w1 = zero, one
    while not r1.is_zero():
        if r1.is_constant():
            q, r = r0.scale(1 / r1.constant_value()), zero
        else:
            q, r = univariate_divmod(r0, r1, var)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        w0, w1 = w1, w0 - q * w1
    if r0.is_zero():
        return u0, w0, r0
    lc = r0.leading_coefficient(var).constant_value() if not r0.is_constant() else r0.constant_value()
    inv = 1 / lc
    return u0.scale(inv), w0.scale(inv), r0.scale(inv)


def evaluate(p: Polynomial, bindings: Mapping[str, Scalar]) -> Polynomial:
    """Substitute rational values for some variables."""
    if not bindings:
        return p
    idx = [(p.order.index(v), Fraction(val)) for v, val in bindings.items()]
    out: Dict[Exponents, Fraction] = {}
    for e, c in p._terms.items():
        e2 = list(e)
        for i, val in idx:
            k = e2[i]
            if k:
                c = c * val ** k
                e2[i] = 0
        if c:
            t = tuple(e2)
            s = out.get(t)
            out[t] = c if s is None else s + c
    return Polynomial._raw(p.order, {e: c for e, c in out.items() if c})


def integer_coefficients(p: Polynomial, var: str) -> List[int]:
    """Coefficients (ascending degree) of a univariate ``p`` scaled to coprime integers."""
    _check_univariate(p, var)
    c = canonical(p)
    d = int(c.degree(var)) if not c.is_zero() else -1
    coeffs = [0] * (d + 1)
    i = p.order.index(var)
    for e, v in c._terms.items():
        coeffs[e[i]] = int(v)
    return coeffs


def _divisors(n: int) -> List[int]:
    from sympy import divisors  # integer factorization; imported lazily

    return [int(d) for d in divisors(abs(n))]


def rational_roots(p: Polynomial, var: str) -> List[Fraction]:
    """All distinct rational roots of a univariate polynomial, ascending."""
    if p.is_zero():
        raise ValueError("the zero polynomial has every value as a root")
    coeffs = integer_coefficients(p, var)
    roots: List[Fraction] = []
    if not coeffs:
        return roots
    k = 0
    while k < len(coeffs) and coeffs[k] == 0:
        k += 1
    if k:
        roots.append(Fraction(0))
        coeffs = coeffs[k:]
    if len(coeffs) <= 1:
        return roots
    # strip content first, then deflate as roots are found
    while len(coeffs) > 1:
        if len(coeffs) == 2:
            roots.append(Fraction(-coeffs[0], coeffs[1]))
            break
        found = None
        for den in _divisors(coeffs[-1]):
            for num in _divisors(coeffs[0]):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if _horner(coeffs, cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        roots.append(found)
        coeffs = _deflate(coeffs, found)
    return sorted(set(roots))


def _horner(coeffs: Sequence[int], x: Fraction) -> Fraction:
    # integer arithmetic on numerator/denominator avoids Fraction overhead
    n, d = x.numerator, x.denominator
    acc = 0
    m = len(coeffs) - 1
    dp = 1
    for k in range(m, -1, -1):
        acc = acc * n + coeffs[k] * dp
        dp *= d
    return acc


def _deflate(coeffs: Sequence[int], r: Fraction) -> List[int]:
    # divide by (den*x - num); exact over the integers by Gauss' lemma
    n, d = r.numerator, r.denominator
    m = len(coeffs) - 1
    out = [0] * m
    rem = 0
    for k in range(m, 0, -1):
        cur = coeffs[k] + rem
        q, re = divmod(cur, d)
        if re:
            raise ArithmeticError("inexact deflation")
        out[k - 1] = q
        rem = q * n
    g = reduce(math.gcd, out, 0) or 1
    if out[-1] < 0:
        g = -g
    return [c // g for c in out]
