import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cisupport.dsl import (
    Bin, CIDecl, IdealDecl, ModDecl, ModExpr, Neg, Num, Pow, Pragma, Program, Query, RingDecl, Var,
    format_program, parse_program,
)
from cisupport.errors import NameError as UndeclaredName
from cisupport.errors import ParseError


def test_basic_program():
    p = parse_program("ring Q = QQ[x,y]; ci R = Q/(x*y); module M = R/(x+y); support(M);")
    assert len(p) == 4
    kinds = [type(s) for s in p.statements]
    assert kinds == [RingDecl, CIDecl, ModDecl, Query]
    assert p.statements[3].op == "support" and p.statements[3].args == ("M",)


def test_cokernel_declaration():
    p = parse_program("ring Q = QQ[x,y]; ci R = Q/(x*y); module M = coker R [[x,y],[y,x]];")
    m = p.statements[2]
    assert m.expr.kind == "coker"
    assert m.expr.args[1] == ((Var("x"), Var("y")), (Var("y"), Var("x")))


def test_field_weights_order_and_pragmas():
    p = parse_program("ring Q = Fp:101[a,b] weights(1,2) order lex; pragma seed 7; pragma field Fp:5;")
    r = p.statements[0]
    assert (r.field, r.weights, r.order) == ("Fp:101", (1, 2), "lex")
    assert p.statements[1] == Pragma("seed", "7") and p.statements[2] == Pragma("field", "Fp:5")


def test_undeclared_module():
    with pytest.raises(UndeclaredName) as err:
        parse_program("ring Q = QQ[x];\nsupport(M);")
    assert (err.value.name, err.value.line, err.value.column) == ("M", 2, 9)


def test_undeclared_variable():
    with pytest.raises(UndeclaredName) as err:
        parse_program("ring Q = QQ[x]; ci R = Q/(y^2);")
    assert err.value.name == "y"


def test_parse_error_location_and_expected():
    with pytest.raises(ParseError) as err:
        parse_program("ring Q = QQ[x,y]\nci R = Q/(x*y);")
    e = err.value
    assert (e.line, e.column) == (2, 1)
    assert "';'" in e.expected or ";" in "".join(e.expected)


def test_parse_error_unknown_statement():
    with pytest.raises(ParseError) as err:
        parse_program("frobnicate(M);")
    assert "support" in err.value.expected and "ring" in err.value.expected


def test_parse_error_bad_character_and_ragged_matrix():
    with pytest.raises(ParseError):
        parse_program("ring Q = QQ[x]; $")
    with pytest.raises(ParseError):
        parse_program("ring Q = QQ[x,y]; ci R = Q/(x*y); module M = coker R [[x,y],[y]];")


def test_kind_mismatch_is_parse_error():
    with pytest.raises(ParseError):
        parse_program("ring Q = QQ[x,y]; module M = Q/(x);")


def test_comments_and_examples_query():
    p = parse_program("// comment\n# another\npaper_examples(); examples(A, D);")
    assert p.statements[1].args == ("A", "D")


# ---------------------------------------------------------------------------
# parse-print-parse on generated programs
# ---------------------------------------------------------------------------


def exprs(names):
    leaves = st.one_of(st.integers(0, 50).map(Num), st.sampled_from(names).map(Var))

    def extend(inner):
        return st.one_of(
            inner.map(Neg),
            st.tuples(st.sampled_from(["+", "-", "*"]), inner, inner).map(lambda t: Bin(*t)),
            st.tuples(inner, st.integers(0, 4)).map(lambda t: Pow(*t)),
        )

    return st.recursive(leaves, extend, max_leaves=6)


@st.composite
def programs(draw):
    names = draw(st.lists(st.sampled_from(["x", "y", "z", "w"]), min_size=1, max_size=3, unique=True))
    field = draw(st.sampled_from([None, "QQ", "Fp:7", "Fp:32003"]))
    weights = draw(st.one_of(st.none(), st.lists(st.integers(1, 3), min_size=len(names),
                                                 max_size=len(names)).map(tuple)))
    order = draw(st.sampled_from([None, "grevlex", "lex"]))
    stmts = [RingDecl("Q", field, tuple(names), weights, order)]
    e = exprs(names)
    stmts.append(CIDecl("R", "Q", tuple(draw(st.lists(e, min_size=1, max_size=3)))))
    stmts.append(IdealDecl("I", "R", tuple(draw(st.lists(e, min_size=1, max_size=2)))))
    mods = ["M0"]
    stmts.append(ModDecl("M0", ModExpr("quotient", ("R", tuple(draw(st.lists(e, min_size=1, max_size=2)))))))
    for k in range(1, draw(st.integers(1, 5))):
        kind = draw(st.sampled_from(["quotient_ideal", "coker", "residue", "free", "syz", "tensor",
                                     "hom", "dsum", "shift", "point", "span", "ideal"]))
        m = lambda: draw(st.sampled_from(mods))  # noqa: E731
        if kind == "quotient_ideal":
            args = ("R", "I")
        elif kind == "coker":
            r, c = draw(st.integers(1, 2)), draw(st.integers(1, 2))
            args = ("R", tuple(tuple(draw(e) for _ in range(c)) for _ in range(r)))
        elif kind == "residue":
            args = ("R",)
        elif kind in ("free", "point"):
            args = ("R", draw(st.integers(0, 3)))
        elif kind == "syz":
            args = (m(), draw(st.integers(0, 3)))
        elif kind in ("tensor", "hom", "dsum"):
            args = (m(), m())
        elif kind == "shift":
            args = (m(), draw(st.integers(-3, 3)))
        elif kind == "span":
            args = ("R", tuple(draw(st.lists(st.integers(0, 3), min_size=1, max_size=3))))
        else:
            args = ("I",)
        stmts.append(ModDecl(f"M{k}", ModExpr(kind, args)))
        mods.append(f"M{k}")
    for _ in range(draw(st.integers(0, 2))):
        key = draw(st.sampled_from(["field", "order", "res_bound", "ann_window", "seed"]))
        val = {"field": "Fp:11", "order": "lex"}.get(key, str(draw(st.integers(1, 20))))
        stmts.append(Pragma(key, val))
    for _ in range(draw(st.integers(0, 4))):
        op = draw(st.sampled_from(["support", "secant", "complexity", "dim", "depth", "join", "hom",
                                   "tensor", "check_join", "check_hom", "check_dim", "tor", "ext",
                                   "experiment", "betti", "probe", "paper_examples"]))
        if op in ("support", "secant", "complexity", "dim", "depth"):
            args = (draw(st.sampled_from(mods)),)
        elif op in ("tor", "ext", "experiment"):
            args = (draw(st.sampled_from(mods)), draw(st.sampled_from(mods)), draw(st.integers(0, 5)))
        elif op == "betti":
            args = (draw(st.sampled_from(mods)), draw(st.integers(0, 5)))
        elif op == "probe":
            args = (draw(st.sampled_from(mods)), draw(st.sampled_from(mods)))
            if draw(st.booleans()):
                args += (draw(e),)
        elif op == "paper_examples":
            args = tuple(draw(st.lists(st.sampled_from("ABCDE"), max_size=2, unique=True)))
        else:
            args = (draw(st.sampled_from(mods)), draw(st.sampled_from(mods)))
        stmts.append(Query(op, args))
    return Program(tuple(stmts))


@settings(max_examples=50)
@given(programs())
def test_parse_print_parse(prog):
    text = format_program(prog)
    parsed = parse_program(text)
    assert parsed == prog
    assert format_program(parsed) == text


@given(exprs(["x", "y"]))
def test_expression_round_trip_preserves_value(e):
    from cisupport.algebra import FieldSpec, make_ring
    from cisupport.dsl import format_expr
    Q = make_ring(FieldSpec.parse("QQ"), ["x", "y"])
    text = format_expr(e)
    again = parse_program(f"ring Q = QQ[x,y]; ci R = Q/({text});").statements[1].relations[0]
    assert again == e
    assert Q(text) == Q(format_expr(again))
