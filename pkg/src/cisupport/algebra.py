"""Exact fields, monomial orders, graded polynomial rings and polynomial matrices."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

import gmpy2
from gmpy2 import mpq

from .errors import (
    BadWeight,
    DuplicateVariable,
    InvalidField,
    RingMismatch,
    SingularMatrix,
)

NEG_INF = float("-inf")


def _is_prime(n: int) -> bool:
    return n >= 2 and gmpy2.is_prime(n)


@dataclass(frozen=True)
class FieldSpec:
    """Either the rationals (characteristic 0) or a prime field F_p."""

    kind: str
    characteristic: int = 0

    def __post_init__(self):
        if self.kind == "QQ":
            if self.characteristic != 0:
                raise InvalidField("QQ has characteristic 0")
        elif self.kind == "Fp":
            p = self.characteristic
            if not _is_prime(p) or p >= 2**31:
                raise InvalidField(f"characteristic {p} is not a prime below 2^31")
        else:
            raise InvalidField(f"unknown field kind {self.kind!r}")

    @property
    def p(self) -> int:
        return self.characteristic

    def __call__(self, x):
        """Coerce an int, Fraction, mpq or 'a/b' string into the field."""
        p = self.characteristic
        if isinstance(x, str):
            x = Fraction(x)
        if p == 0:
            if isinstance(x, Fraction):
                return mpq(x.numerator, x.denominator)
            return mpq(x)
        if isinstance(x, (Fraction, type(mpq(0)))):
            num, den = int(x.numerator), int(x.denominator)
            if den % p == 0:
                raise ZeroDivisionError(f"denominator divisible by {p}")
            return num * pow(den, -1, p) % p
        return int(x) % p

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        p = self.characteristic
        if p:
            return pow(int(x), -1, p)
        return 1 / x

    def neg(self, x):
        p = self.characteristic
        return (-x) % p if p else -x

    def norm(self, x):
        p = self.characteristic
        return x % p if p else x

    def to_str(self, x) -> str:
        if self.characteristic:
            return str(int(x))
        x = mpq(x)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"Fp:{self.characteristic}"

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        text = text.strip()
        if text in ("QQ", "Q"):
            return QQ
        m = re.fullmatch(r"(?:Fp:|ZZ/|GF\()(\d+)\)?", text)
        if not m:
            raise InvalidField(f"cannot parse field {text!r}")
        return FieldSpec("Fp", int(m.group(1)))


QQ = FieldSpec("QQ", 0)


def GF(p: int) -> FieldSpec:
    return FieldSpec("Fp", p)


# ---------------------------------------------------------------------------
# Monomial orders
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MonomialOrder:
    """GrevLex, Lex, or a Block order eliminating the first ``block`` variables.

    A block order compares the eliminated block first (with ``sub_orders[0]``)
    and breaks ties on the kept block (with ``sub_orders[1]``).
    """

    kind: str = "grevlex"
    block: int = 0
    sub_orders: tuple[str, str] = ("grevlex", "grevlex")

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")

    def key_function(self, weights: tuple[int, ...]):
        """Return a function mapping exponent tuples to sort keys (bigger = larger monomial)."""
        if self.kind == "lex":
            return _lex_key
        if self.kind == "grevlex":
            return _grevlex_key(weights)
        k = self.block
        first = _lex_key if self.sub_orders[0] == "lex" else _grevlex_key(weights[:k])
        second = _lex_key if self.sub_orders[1] == "lex" else _grevlex_key(weights[k:])
        return lambda e: (first(e[:k]), second(e[k:]))

    def __str__(self):
        if self.kind == "block":
            return f"block({self.block})"
        return self.kind


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def block_order(n_eliminated: int) -> MonomialOrder:
    return MonomialOrder("block", n_eliminated)


def _lex_key(e):
    return e


def _grevlex_key(weights):
    if all(w == 1 for w in weights):
        return lambda e: (sum(e), tuple(-x for x in reversed(e)))
    ws = tuple(weights)
    return lambda e: (sum(w * x for w, x in zip(ws, e)), tuple(-x for x in reversed(e)))


# ---------------------------------------------------------------------------
# Rings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PolyRing:
    field: FieldSpec
    variables: tuple[str, ...]
    order: MonomialOrder = GREVLEX
    weights: tuple[int, ...] = ()

    def __post_init__(self):
        if not self.weights:
            object.__setattr__(self, "weights", (1,) * len(self.variables))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @cached_property
    def key(self):
        return self.order.key_function(self.weights)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.variables)}

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"no variable {name!r} in {self}") from None

    def degree_of(self, e) -> int:
        return sum(w * x for w, x in zip(self.weights, e))

    @property
    def zero_exp(self):
        return (0,) * self.nvars

    # constructors -------------------------------------------------------
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        c = self.field(c) if not isinstance(c, (int,)) or self.field.p else self.field(c)
        return Polynomial(self, {self.zero_exp: c} if c else {})

    def var(self, name_or_index) -> "Polynomial":
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    def gens(self) -> list["Polynomial"]:
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, exp, coeff=1) -> "Polynomial":
        c = self.field(coeff)
        return Polynomial(self, {tuple(exp): c} if c else {})

    def from_dict(self, d: dict) -> "Polynomial":
        return Polynomial(self, {tuple(e): self.field(c) for e, c in d.items() if self.field(c)})

    def parse(self, text: str) -> "Polynomial":
        return _PolyParser(self, text).parse()

    def __call__(self, x) -> "Polynomial":
        if isinstance(x, Polynomial):
            if x.ring != self:
                return self.coerce(x)
            return x
        if isinstance(x, str):
            return self.parse(x)
        return self.const(x)

    def coerce(self, p: "Polynomial") -> "Polynomial":
        """Map a polynomial from another ring by variable name (missing names must not occur)."""
        if p.ring == self:
            return p
        if p.ring.field != self.field:
            raise RingMismatch(f"field mismatch {p.ring.field} vs {self.field}")
        pos = []
        for i, v in enumerate(p.ring.variables):
            pos.append(self._index.get(v))
        out = {}
        n = self.nvars
        for e, c in p.terms.items():
            ne = [0] * n
            for i, x in enumerate(e):
                if x:
                    if pos[i] is None:
                        raise RingMismatch(f"variable {p.ring.variables[i]} not in target ring")
                    ne[pos[i]] = x
            out[tuple(ne)] = c
        return Polynomial(self, out)

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return PolyRing(self.field, self.variables, order, self.weights)

    def extend(self, names: Sequence[str], weights: Sequence[int] | None = None,
               order: MonomialOrder | None = None, front: bool = False) -> "PolyRing":
        weights = tuple(weights) if weights is not None else (1,) * len(names)
        if front:
            return make_ring(self.field, list(names) + list(self.variables),
                             order or self.order, list(weights) + list(self.weights))
        return make_ring(self.field, list(self.variables) + list(names),
                         order or self.order, list(self.weights) + list(weights))

    def __str__(self):
        ws = "" if all(w == 1 for w in self.weights) else f" weights {list(self.weights)}"
        return f"{self.field}[{','.join(self.variables)}] ({self.order}{ws})"


def make_ring(field: FieldSpec, variables: Sequence[str], order: MonomialOrder | str = GREVLEX,
              weights: Sequence[int] | None = None) -> PolyRing:
    """Validated ring constructor; equal arguments give equal (interchangeable) rings."""
    if isinstance(order, str):
        order = MonomialOrder(order)
    variables = tuple(variables)
    if len(set(variables)) != len(variables):
        dup = next(v for v in variables if variables.count(v) > 1)
        raise DuplicateVariable(f"variable {dup!r} declared twice")
    for v in variables:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9#']*", v):
            raise ValueError(f"bad variable name {v!r}")
    weights = tuple(weights) if weights is not None else (1,) * len(variables)
    if len(weights) != len(variables):
        raise BadWeight("weights and variables differ in length")
    if any((not isinstance(w, int)) or w < 1 for w in weights):
        raise BadWeight(f"weights must be positive integers, got {list(weights)}")
    if order.kind == "block" and not 0 <= order.block <= len(variables):
        raise ValueError("block size out of range")
    return PolyRing(field, variables, order, weights)


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


class Polynomial:
    """Immutable polynomial; ``terms`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "terms", "_sorted", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._sorted = None
        self._hash = None

    # canonical form ---------------------------------------------------
    def sorted_terms(self) -> tuple:
        """Terms in strictly descending monomial order."""
        if self._sorted is None:
            key = self.ring.key
            self._sorted = tuple(sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True))
        return self._sorted

    normal_form_sort = sorted_terms

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def lead_exp(self):
        key = self.ring.key
        return max(self.terms, key=key)

    def lead_coeff(self):
        return self.terms[self.lead_exp()]

    def lead_term(self) -> "Polynomial":
        e = self.lead_exp()
        return Polynomial(self.ring, {e: self.terms[e]})

    def constant_term(self):
        return self.terms.get(self.ring.zero_exp, self.ring.field.zero)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring.zero_exp in self.terms)

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        F = self.ring.field
        inv = F.inv(self.lead_coeff())
        return Polynomial(self.ring, {e: F.norm(c * inv) for e, c in self.terms.items()})

    # degrees ---------------------------------------------------------
    def degree(self) -> int | float:
        if not self.terms:
            return NEG_INF
        return max(self.ring.degree_of(e) for e in self.terms)

    def homogeneity_check(self):
        """Return the common weighted degree, NEG_INF for zero, or None if inhomogeneous."""
        if not self.terms:
            return NEG_INF
        degs = {self.ring.degree_of(e) for e in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self) -> bool:
        return self.homogeneity_check() is not None

    def variables_used(self) -> set[int]:
        used = set()
        for e in self.terms:
            used.update(i for i, x in enumerate(e) if x)
        return used

    # arithmetic -------------------------------------------------------
    def _check(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._check(other)
        d = dict(self.terms)
        F = self.ring.field
        p = F.p
        for e, c in other.terms.items():
            v = d.get(e)
            if v is None:
                d[e] = c
            else:
                v = v + c
                if p:
                    v %= p
                if v:
                    d[e] = v
                else:
                    del d[e]
        return Polynomial(self.ring, d)

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return Polynomial(self.ring, {e: F.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def scale(self, c) -> "Polynomial":
        F = self.ring.field
        c = F(c) if not isinstance(c, type(F.one)) else c
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {e: F.norm(v * c) for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._check(other)
        p = self.ring.field.p
        d: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = d.get(e, 0) + c1 * c2
                d[e] = v % p if p else v
        return Polynomial(self.ring, {e: c for e, c in d.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mul_term(self, exp, coeff) -> "Polynomial":
        p = self.ring.field.p
        out = {}
        for e, c in self.terms.items():
            v = c * coeff
            out[tuple(a + b for a, b in zip(e, exp))] = v % p if p else v
        return Polynomial(self.ring, out)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)) or other is not None:
            try:
                return self.terms == self.ring.const(other).terms
            except (TypeError, ValueError):
                return NotImplemented
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def substitute(self, images: Sequence["Polynomial"], target: PolyRing | None = None) -> "Polynomial":
        """Ring map sending variable i to ``images[i]``."""
        target = target or images[0].ring
        out = target.zero()
        cache: dict = {}
        for e, c in self.terms.items():
            term = target.const(1)
            for i, x in enumerate(e):
                if x:
                    key = (i, x)
                    if key not in cache:
                        cache[key] = images[i] ** x
                    term = term * cache[key]
            out = out + term.scale(c)
        return out

    def evaluate(self, point: Sequence):
        F = self.ring.field
        total = F.zero
        for e, c in self.terms.items():
            v = c
            for x, a in zip(e, point):
                if x:
                    v = v * a**x
            total = F.norm(total + v)
        return total

    # printing -----------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        F = self.ring.field
        names = self.ring.variables
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                names[i] if x == 1 else f"{names[i]}^{x}" for i, x in enumerate(e) if x
            )
            cs = F.to_str(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            if mono:
                body = mono if cs == "1" else f"{cs}*{mono}"
            else:
                body = cs
            if parts:
                parts.append(("- " if neg else "+ ") + body)
            else:
                parts.append(("-" if neg else "") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"


def poly_arith(op: str, *operands):
    """Dispatcher mirroring the arithmetic surface: add, mul, scale, normal_form_sort."""
    if op == "add":
        a, b = operands
        return a + b
    if op == "mul":
        a, b = operands
        return a * b
    if op == "scale":
        a, c = operands
        return a.scale(c)
    if op == "normal_form_sort":
        (a,) = operands
        return a.sorted_terms()
    raise ValueError(f"unknown op {op!r}")


def homogeneity_check(p: Polynomial):
    return p.homogeneity_check()


# ---------------------------------------------------------------------------
# Polynomial parser (compact; the DSL has its own front end)
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9#']*)|(.))")


class _PolyParser:
    def __init__(self, ring: PolyRing, text: str):
        self.ring = ring
        self.toks = []
        for m in _TOKEN.finditer(text):
            num, name, op = m.groups()
            if num is not None:
                self.toks.append(("num", int(num)))
            elif name is not None:
                self.toks.append(("name", name))
            elif op is not None and not op.isspace():
                self.toks.append(("op", op))
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else ("eof", None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expect(self, op):
        t = self.take()
        if t != ("op", op):
            raise ValueError(f"expected {op!r}, got {t[1]!r}")

    def parse(self):
        p = self.expr()
        if self.peek()[0] != "eof":
            raise ValueError(f"unexpected token {self.peek()[1]!r}")
        return p

    def expr(self):
        sign = 1
        if self.peek() in (("op", "-"), ("op", "+")):
            sign = -1 if self.take()[1] == "-" else 1
        p = self.term()
        if sign < 0:
            p = -p
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.factor()
        while True:
            t = self.peek()
            if t == ("op", "*"):
                self.take()
                p = p * self.factor()
            elif t == ("op", "/"):
                self.take()
                q = self.factor()
                if not q.is_constant() or not q:
                    raise ValueError("division only by nonzero constants")
                p = p.scale(self.ring.field.inv(q.constant_term()))
            elif t[0] in ("name", "num") or t == ("op", "("):
                p = p * self.factor()  # implicit product, e.g. 3x
            else:
                return p

    def factor(self):
        b = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            t = self.take()
            if t[0] != "num":
                raise ValueError("exponent must be a nonnegative integer")
            b = b ** t[1]
        return b

    def atom(self):
        t = self.take()
        if t[0] == "num":
            return self.ring.const(t[1])
        if t[0] == "name":
            return self.ring.var(t[1])
        if t == ("op", "("):
            p = self.expr()
            self.expect(")")
            return p
        if t == ("op", "-"):
            return -self.factor()
        raise ValueError(f"unexpected token {t[1]!r}")


# ---------------------------------------------------------------------------
# Polynomial matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PolyMatrix:
    """Dense matrix of polynomials; optional row/column degrees make it a graded map.

    Columns are images of source generators (column degree = source degree),
    rows index target generators.
    """

    ring: PolyRing
    entries: tuple[tuple[Polynomial, ...], ...]
    ncols: int
    row_degrees: tuple[int, ...] | None = None
    col_degrees: tuple[int, ...] | None = None

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @classmethod
    def from_rows(cls, ring, rows, row_degrees=None, col_degrees=None, ncols=None):
        rows = tuple(tuple(ring(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else (len(col_degrees) if col_degrees is not None else 0)
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        return cls(ring, rows, ncols,
                   tuple(row_degrees) if row_degrees is not None else None,
                   tuple(col_degrees) if col_degrees is not None else None)

    @classmethod
    def from_columns(cls, ring, cols, row_degrees=None, col_degrees=None, nrows=None):
        cols = [list(c) for c in cols]
        if nrows is None:
            nrows = len(cols[0]) if cols else (len(row_degrees) if row_degrees is not None else 0)
        rows = [[cols[j][i] for j in range(len(cols))] for i in range(nrows)]
        return cls.from_rows(ring, rows, row_degrees, col_degrees, ncols=len(cols))

    @classmethod
    def zero(cls, ring, nrows, ncols, row_degrees=None, col_degrees=None):
        z = ring.zero()
        return cls(ring, tuple((z,) * ncols for _ in range(nrows)), ncols,
                   tuple(row_degrees) if row_degrees is not None else None,
                   tuple(col_degrees) if col_degrees is not None else None)

    @classmethod
    def identity(cls, ring, n, degrees=None):
        rows = [[ring.one() if i == j else ring.zero() for j in range(n)] for i in range(n)]
        return cls.from_rows(ring, rows, degrees, degrees, ncols=n)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def column(self, j) -> list[Polynomial]:
        return [r[j] for r in self.entries]

    def columns(self) -> list[list[Polynomial]]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "PolyMatrix":
        rows = [[self.entries[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        rd = tuple(-d for d in self.col_degrees) if self.col_degrees is not None else None
        cd = tuple(-d for d in self.row_degrees) if self.row_degrees is not None else None
        return PolyMatrix.from_rows(self.ring, rows, rd, cd, ncols=self.nrows)

    def __mul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        if self.ring != other.ring:
            raise RingMismatch("matrix rings differ")
        z = self.ring.zero()
        rows = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = z
                for k in range(self.ncols):
                    a = self.entries[i][k]
                    if a:
                        b = other.entries[k][j]
                        if b:
                            acc = acc + a * b
                row.append(acc)
            rows.append(row)
        return PolyMatrix.from_rows(self.ring, rows, self.row_degrees, other.col_degrees,
                                    ncols=other.ncols)

    def is_zero(self) -> bool:
        return all(not x for r in self.entries for x in r)

    def is_graded(self) -> bool:
        """Every nonzero entry is homogeneous of degree col_degree - row_degree."""
        if self.row_degrees is None or self.col_degrees is None:
            return False
        for i, r in enumerate(self.entries):
            for j, x in enumerate(r):
                if x and x.homogeneity_check() != self.col_degrees[j] - self.row_degrees[i]:
                    return False
        return True

    def map_entries(self, fn) -> "PolyMatrix":
        return PolyMatrix(self.ring, tuple(tuple(fn(x) for x in r) for r in self.entries),
                          self.ncols, self.row_degrees, self.col_degrees)

    def submatrix(self, rows=None, cols=None) -> "PolyMatrix":
        rows = list(range(self.nrows)) if rows is None else list(rows)
        cols = list(range(self.ncols)) if cols is None else list(cols)
        ent = [[self.entries[i][j] for j in cols] for i in rows]
        rd = tuple(self.row_degrees[i] for i in rows) if self.row_degrees is not None else None
        cd = tuple(self.col_degrees[j] for j in cols) if self.col_degrees is not None else None
        return PolyMatrix.from_rows(self.ring, ent, rd, cd, ncols=len(cols))

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.entries) + "]"


def concat_columns(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    if a.nrows != b.nrows:
        raise ValueError("row counts differ")
    rows = [list(ra) + list(rb) for ra, rb in zip(a.entries, b.entries)]
    cd = None
    if a.col_degrees is not None and b.col_degrees is not None:
        cd = a.col_degrees + b.col_degrees
    return PolyMatrix.from_rows(a.ring, rows, a.row_degrees or b.row_degrees, cd,
                                ncols=a.ncols + b.ncols)


def block_diagonal(mats: Sequence[PolyMatrix]) -> PolyMatrix:
    ring = mats[0].ring
    nr = sum(m.nrows for m in mats)
    nc = sum(m.ncols for m in mats)
    z = ring.zero()
    rows = [[z] * nc for _ in range(nr)]
    r0 = c0 = 0
    for m in mats:
        for i in range(m.nrows):
            for j in range(m.ncols):
                rows[r0 + i][c0 + j] = m.entries[i][j]
        r0 += m.nrows
        c0 += m.ncols
    rd = cd = None
    if all(m.row_degrees is not None for m in mats):
        rd = sum((m.row_degrees for m in mats), ())
    if all(m.col_degrees is not None for m in mats):
        cd = sum((m.col_degrees for m in mats), ())
    return PolyMatrix.from_rows(ring, rows, rd, cd, ncols=nc)


def kronecker(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    """Tensor product of two maps; row/column index (i, k) -> i * b.n + k."""
    ring = a.ring
    rows = []
    for i in range(a.nrows):
        for k in range(b.nrows):
            row = []
            for j in range(a.ncols):
                x = a.entries[i][j]
                for l in range(b.ncols):
                    y = b.entries[k][l]
                    row.append(x * y if (x and y) else ring.zero())
            rows.append(row)
    rd = cd = None
    if a.row_degrees is not None and b.row_degrees is not None:
        rd = tuple(x + y for x in a.row_degrees for y in b.row_degrees)
    if a.col_degrees is not None and b.col_degrees is not None:
        cd = tuple(x + y for x in a.col_degrees for y in b.col_degrees)
    return PolyMatrix.from_rows(ring, rows, rd, cd, ncols=a.ncols * b.ncols)


# ---------------------------------------------------------------------------
# Dense linear algebra over the base field (small matrices)
# ---------------------------------------------------------------------------


def mat_inverse(F: FieldSpec, m: Sequence[Sequence]) -> list[list]:
    n = len(m)
    a = [[F(x) for x in row] + [F.one if i == j else F.zero for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise SingularMatrix("matrix is not invertible over the field")
        a[col], a[piv] = a[piv], a[col]
        inv = F.inv(a[col][col])
        a[col] = [F.norm(x * inv) for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [F.norm(x - f * y) for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]
