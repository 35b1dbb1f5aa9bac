"""A small statement language for declaring rings and modules and running queries."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union

from .errors import NameError as UndeclaredName
from .errors import ParseError

# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class Bin:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exp: int


Expr = Union[Num, Var, Neg, Bin, Pow]


@dataclass(frozen=True)
class RingDecl:
    name: str
    field: str | None
    variables: tuple[str, ...]
    weights: tuple[int, ...] | None = None
    order: str | None = None


@dataclass(frozen=True)
class CIDecl:
    name: str
    ring: str
    relations: tuple[Expr, ...]


@dataclass(frozen=True)
class IdealDecl:
    name: str
    ring: str
    gens: tuple[Expr, ...]


@dataclass(frozen=True)
class ModExpr:
    """kind in quotient, quotient_ideal, coker, residue, free, syz, tensor, hom, dsum, shift, point, span, ideal."""

    kind: str
    args: tuple


@dataclass(frozen=True)
class ModDecl:
    name: str
    expr: ModExpr


@dataclass(frozen=True)
class Pragma:
    key: str
    value: str


@dataclass(frozen=True)
class Query:
    op: str
    args: tuple
    line: int = field(default=0, compare=False)


Statement = Union[RingDecl, CIDecl, IdealDecl, ModDecl, Pragma, Query]


@dataclass(frozen=True)
class Program:
    statements: tuple[Statement, ...]

    def __len__(self):
        return len(self.statements)


# query name -> argument signature: m module, i int, e optional expression, s optional example labels
QUERIES = {
    "support": "m",
    "join": "mm",
    "secant": "m",
    "tor": "mmi",
    "ext": "mmi",
    "hom": "mm",
    "tensor": "mm",
    "complexity": "m",
    "betti": "mi",
    "dim": "m",
    "depth": "m",
    "check_join": "mm",
    "check_hom": "mm",
    "check_dim": "mm",
    "probe": "mme",
    "experiment": "mmi",
    "examples": "s",
    "paper_examples": "s",
}

MODULE_CALLS = {
    "residue": "c",
    "free": "ci",
    "syz": "mi",
    "tensor": "mm",
    "hom": "mm",
    "dsum": "mm",
    "shift": "mz",
    "point": "ci",
    "span": "cl",
    "ideal": "d",
}

PRAGMAS = ("field", "order", "res_bound", "ann_window", "seed")
KEYWORDS = ("ring", "ci", "module", "ideal", "pragma")

# ---------------------------------------------------------------------------
# Tokenizer
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+) |
    (?P<nl>\n) |
    (?P<comment>(//|\#)[^\n]*) |
    (?P<int>\d+) |
    (?P<ident>[A-Za-z_][A-Za-z_0-9]*) |
    (?P<op>[=;,()\[\]/+\-*^:])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str  # ident, int, op, eof
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    out = []
    line, start = 1, 0
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            start = m.end()
        elif kind in ("int", "ident", "op"):
            out.append(Token(kind, m.group(), line, pos - start + 1))
        pos = m.end()
    out.append(Token("eof", "", line, pos - start + 1))
    return out


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0
        # name -> (kind, variables)
        self.env: dict[str, tuple[str, tuple[str, ...]]] = {}

    # token helpers
    def peek(self) -> Token:
        return self.toks[self.i]

    def advance(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, expected, tok: Token | None = None):
        tok = tok or self.peek()
        got = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise ParseError(f"unexpected {got}", tok.line, tok.col, set(expected))

    def at(self, text: str) -> bool:
        t = self.peek()
        return t.kind in ("op", "ident") and t.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.fail([repr(text)])
        return self.advance()

    def ident(self, what: str = "identifier") -> Token:
        t = self.peek()
        if t.kind != "ident":
            self.fail([what])
        return self.advance()

    def integer(self, signed: bool = False) -> int:
        neg = False
        if signed and self.at("-"):
            self.advance()
            neg = True
        t = self.peek()
        if t.kind != "int":
            self.fail(["integer"])
        self.advance()
        return -int(t.text) if neg else int(t.text)

    def use(self, tok: Token, kinds: tuple[str, ...]):
        entry = self.env.get(tok.text)
        if entry is None:
            raise UndeclaredName(tok.text, tok.line, tok.col)
        if entry[0] not in kinds:
            raise ParseError(f"{tok.text!r} is a {entry[0]}, not a {' or '.join(kinds)}",
                             tok.line, tok.col, set(kinds))
        return entry

    def declare(self, tok: Token, kind: str, variables: tuple[str, ...]):
        self.env[tok.text] = (kind, variables)

    # program
    def program(self) -> Program:
        out = []
        while self.peek().kind != "eof":
            out.append(self.statement())
        return Program(tuple(out))

    def statement(self) -> Statement:
        t = self.peek()
        if t.kind != "ident":
            self.fail(list(KEYWORDS) + sorted(QUERIES))
        if t.text == "ring":
            s = self.ring_decl()
        elif t.text == "ci":
            s = self.ci_decl()
        elif t.text == "ideal":
            s = self.ideal_decl()
        elif t.text == "module":
            s = self.module_decl()
        elif t.text == "pragma":
            s = self.pragma()
        elif t.text in QUERIES:
            s = self.query()
        else:
            self.fail(list(KEYWORDS) + sorted(QUERIES))
        self.expect(";")
        return s

    def ring_decl(self) -> RingDecl:
        self.advance()
        name = self.ident("ring name")
        self.expect("=")
        field = None
        if not self.at("["):
            field = self.field_spec()
        self.expect("[")
        names = [self.ident("variable").text]
        while self.at(","):
            self.advance()
            names.append(self.ident("variable").text)
        self.expect("]")
        if len(set(names)) != len(names):
            raise ParseError("duplicate variable", name.line, name.col)
        weights = order = None
        while self.at("weights") or self.at("order"):
            if self.advance().text == "weights":
                self.expect("(")
                ws = [self.integer()]
                while self.at(","):
                    self.advance()
                    ws.append(self.integer())
                self.expect(")")
                weights = tuple(ws)
            else:
                order = self.ident("monomial order").text
        self.declare(name, "ring", tuple(names))
        return RingDecl(name.text, field, tuple(names), weights, order)

    def field_spec(self) -> str:
        t = self.peek()
        if t.kind == "ident" and t.text == "QQ":
            self.advance()
            return "QQ"
        if t.kind == "ident" and t.text == "Fp":
            self.advance()
            self.expect(":")
            return f"Fp:{self.integer()}"
        self.fail(["'QQ'", "'Fp'", "'['"])

    def ci_decl(self) -> CIDecl:
        self.advance()
        name = self.ident("ring name")
        self.expect("=")
        base = self.ident("ring name")
        _, variables = self.use(base, ("ring",))
        self.expect("/")
        rels = self.expr_tuple(variables)
        self.declare(name, "ci", variables)
        return CIDecl(name.text, base.text, rels)

    def ideal_decl(self) -> IdealDecl:
        self.advance()
        name = self.ident("ideal name")
        self.expect("=")
        base = self.ident("ring name")
        _, variables = self.use(base, ("ci",))
        gens = self.expr_tuple(variables)
        self.declare(name, "ideal", variables)
        return IdealDecl(name.text, base.text, gens)

    def module_decl(self) -> ModDecl:
        self.advance()
        name = self.ident("module name")
        self.expect("=")
        expr, variables = self.module_expr()
        self.declare(name, "module", variables)
        return ModDecl(name.text, expr)

    def module_expr(self) -> tuple[ModExpr, tuple[str, ...]]:
        t = self.ident("module expression")
        if t.text == "coker":
            base = self.ident("ring name")
            _, variables = self.use(base, ("ci",))
            return ModExpr("coker", (base.text, self.matrix(variables))), variables
        if t.text in MODULE_CALLS and self.at("("):
            self.advance()
            args = []
            variables: tuple[str, ...] = ()
            for k, code in enumerate(MODULE_CALLS[t.text]):
                if k:
                    self.expect(",")
                if code in "cmd":
                    a = self.ident({"c": "ring name", "m": "module name", "d": "ideal name"}[code])
                    kinds = {"c": ("ci",), "m": ("module",), "d": ("ideal",)}[code]
                    _, vs = self.use(a, kinds)
                    variables = variables or vs
                    args.append(a.text)
                elif code == "i":
                    args.append(self.integer())
                elif code == "z":
                    args.append(self.integer(signed=True))
                elif code == "l":
                    self.expect("[")
                    items = [self.integer()]
                    while self.at(","):
                        self.advance()
                        items.append(self.integer())
                    self.expect("]")
                    args.append(tuple(items))
            self.expect(")")
            return ModExpr(t.text, tuple(args)), variables
        _, variables = self.use(t, ("ci",))
        self.expect("/")
        if self.at("("):
            return ModExpr("quotient", (t.text, self.expr_tuple(variables))), variables
        ideal = self.ident("ideal name")
        self.use(ideal, ("ideal",))
        return ModExpr("quotient_ideal", (t.text, ideal.text)), variables

    def matrix(self, variables) -> tuple[tuple[Expr, ...], ...]:
        self.expect("[")
        rows = [self.row(variables)]
        while self.at(","):
            self.advance()
            rows.append(self.row(variables))
        self.expect("]")
        if len({len(r) for r in rows}) != 1:
            t = self.toks[self.i - 1]
            raise ParseError("matrix rows have different lengths", t.line, t.col)
        return tuple(rows)

    def row(self, variables) -> tuple[Expr, ...]:
        self.expect("[")
        items = [self.expr(variables)]
        while self.at(","):
            self.advance()
            items.append(self.expr(variables))
        self.expect("]")
        return tuple(items)

    def expr_tuple(self, variables) -> tuple[Expr, ...]:
        self.expect("(")
        items = [self.expr(variables)]
        while self.at(","):
            self.advance()
            items.append(self.expr(variables))
        self.expect(")")
        return tuple(items)

    def pragma(self) -> Pragma:
        self.advance()
        key = self.ident("pragma name")
        if key.text not in PRAGMAS:
            self.fail([repr(p) for p in PRAGMAS], key)
        if key.text == "field":
            value = self.field_spec()
        elif key.text == "order":
            value = self.ident("monomial order").text
        else:
            value = str(self.integer())
        return Pragma(key.text, value)

    def query(self) -> Query:
        t = self.advance()
        sig = QUERIES[t.text]
        self.expect("(")
        args: list = []
        scope: tuple[str, ...] = ()
        if sig == "s":
            while self.peek().kind == "ident":
                args.append(self.advance().text)
                if not self.at(","):
                    break
                self.advance()
        else:
            for k, code in enumerate(sig):
                if code == "e":
                    if self.at(","):
                        self.advance()
                        args.append(self.expr(scope))
                    continue
                if k:
                    self.expect(",")
                if code == "m":
                    a = self.ident("module name")
                    _, vs = self.use(a, ("module",))
                    scope = scope or vs
                    args.append(a.text)
                else:
                    args.append(self.integer())
        self.expect(")")
        return Query(t.text, tuple(args), t.line)

    # polynomial expressions
    def expr(self, variables) -> Expr:
        neg = False
        if self.at("-") or self.at("+"):
            neg = self.advance().text == "-"
        e = self.term(variables)
        if neg:
            e = Neg(e)
        while self.at("+") or self.at("-"):
            op = self.advance().text
            e = Bin(op, e, self.term(variables))
        return e

    def term(self, variables) -> Expr:
        e = self.factor(variables)
        while self.at("*") or self.at("/"):
            op = self.advance().text
            e = Bin(op, e, self.factor(variables))
        return e

    def factor(self, variables) -> Expr:
        b = self.atom(variables)
        if self.at("^"):
            self.advance()
            b = Pow(b, self.integer())
        return b

    def atom(self, variables) -> Expr:
        t = self.peek()
        if t.kind == "int":
            self.advance()
            return Num(int(t.text))
        if t.kind == "ident":
            self.advance()
            if t.text not in variables:
                raise UndeclaredName(t.text, t.line, t.col)
            return Var(t.text)
        if self.at("("):
            self.advance()
            e = self.expr(variables)
            self.expect(")")
            return e
        self.fail(["integer", "variable", "'('"])


def parse_program(text: str) -> Program:
    return _Parser(text).program()


# ---------------------------------------------------------------------------
# Printer
# ---------------------------------------------------------------------------


def _prec(e: Expr) -> int:
    if isinstance(e, (Neg,)):
        return 1
    if isinstance(e, Bin):
        return 1 if e.op in "+-" else 2
    if isinstance(e, Pow):
        return 3
    return 4


def format_expr(e: Expr) -> str:
    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Neg):
        inner = format_expr(e.arg)
        return "-" + (f"({inner})" if _prec(e.arg) <= 1 else inner)
    if isinstance(e, Pow):
        base = format_expr(e.base)
        return (f"({base})" if _prec(e.base) < 4 else base) + f"^{e.exp}"
    p = _prec(e)
    left = format_expr(e.left)
    right = format_expr(e.right)
    if _prec(e.left) < p:
        left = f"({left})"
    if _prec(e.right) <= p:
        right = f"({right})"
    sep = f" {e.op} " if p == 1 else e.op
    return left + sep + right


def _exprs(es) -> str:
    return ", ".join(format_expr(e) for e in es)


def format_statement(s: Statement) -> str:
    if isinstance(s, RingDecl):
        field = f"{s.field}" if s.field else ""
        out = f"ring {s.name} = {field}[{', '.join(s.variables)}]"
        if s.weights:
            out += f" weights({', '.join(map(str, s.weights))})"
        if s.order:
            out += f" order {s.order}"
        return out + ";"
    if isinstance(s, CIDecl):
        return f"ci {s.name} = {s.ring}/({_exprs(s.relations)});"
    if isinstance(s, IdealDecl):
        return f"ideal {s.name} = {s.ring}({_exprs(s.gens)});"
    if isinstance(s, ModDecl):
        e = s.expr
        if e.kind == "quotient":
            body = f"{e.args[0]}/({_exprs(e.args[1])})"
        elif e.kind == "quotient_ideal":
            body = f"{e.args[0]}/{e.args[1]}"
        elif e.kind == "coker":
            rows = ", ".join(f"[{_exprs(r)}]" for r in e.args[1])
            body = f"coker {e.args[0]} [{rows}]"
        else:
            parts = []
            for a in e.args:
                parts.append(f"[{', '.join(map(str, a))}]" if isinstance(a, tuple) else str(a))
            body = f"{e.kind}({', '.join(parts)})"
        return f"module {s.name} = {body};"
    if isinstance(s, Pragma):
        return f"pragma {s.key} {s.value};"
    parts = [format_expr(a) if isinstance(a, (Num, Var, Neg, Bin, Pow)) else str(a) for a in s.args]
    return f"{s.op}({', '.join(parts)});"


def format_program(p: Program) -> str:
    return "".join(format_statement(s) + "\n" for s in p.statements)
