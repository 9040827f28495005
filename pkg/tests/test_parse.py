import pytest
from sympy import Matrix, Rational
from alexmod.parse import (LaurentParser, artinian_from_json, context_from_json, fibration_from_json,
                           laurent_from_json, module_from_json, parse_laurent, read_input,
                           results_from_json)
from alexmod.ring import LaurentPoly, format_laurent
from alexmod.utils import InputError

t = LaurentPoly.variable(1, 0)
t1 = LaurentPoly.variable(2, 0)
t2 = LaurentPoly.variable(2, 1)

def test_parse_examples():
    assert parse_laurent("t1^2 - 3/2*t1*t2^-1") == t1**2 - Rational(3, 2)*t1*t2**-1
    assert parse_laurent("t^-1 - 1") == t**-1 - 1
    assert parse_laurent("(t - 1)**2") == t**2 - 2*t + 1
    assert parse_laurent("t^(-2)*t") == t**-1
    assert parse_laurent("-t/t") == -LaurentPoly.one(1)
    assert parse_laurent("3/2", 1) == LaurentPoly.constant(1, Rational(3, 2))
    assert parse_laurent("t1", 3).nvars == 3

def test_format_parses_back():
    for p in [t1**2 - Rational(3, 2)*t1*t2**-1, -t**-1 + 1, 5*t**3]:
        assert parse_laurent(format_laurent(p), p.nvars) == p

def test_parse_errors():
    for text in ["1/(t - 1)", "t + t1", "t @ 2", "(t - 1", "(t - 1)^-1", "t^", "t/0"]:
        with pytest.raises(InputError):
            parse_laurent(text)
    with pytest.raises(InputError):
        parse_laurent("t3", 2)
    with pytest.raises(InputError):
        LaurentParser(2).parse("t")

def test_laurent_objects():
    doc = {"nvars": 2, "terms": [{"exps": [1, -1], "num": 3, "den": 2}, {"exps": [0, 0], "num": -1}]}
    assert laurent_from_json(doc) == Rational(3, 2)*t1*t2**-1 - 1
    with pytest.raises(InputError):
        laurent_from_json(doc, 1)
    with pytest.raises(InputError):
        laurent_from_json({"nvars": 1, "terms": [{"exps": [0], "num": 1}, {"exps": [0], "num": 2}]})
    assert laurent_from_json("1/3", 1) == LaurentPoly.constant(1, Rational(1, 3))
    assert laurent_from_json(-4, 2) == LaurentPoly.constant(2, -4)
    with pytest.raises(InputError):
        laurent_from_json(7)

def test_module_reader():
    module = module_from_json({"nvars": 1, "generators": 2, "presentation": [["t - 1", "t"], [0, "t - 1"]]})
    assert module.rank == 2 and module.ncols == 2
    assert module.column(1) == (t, t - 1)
    free = module_from_json({"nvars": 2, "generators": 1, "presentation": [[]], "relations": 0})
    assert free.ncols == 0
    with pytest.raises(InputError):
        module_from_json({"nvars": 1, "generators": 2, "presentation": [["t"]]})

def test_artinian_and_results_readers():
    art = artinian_from_json({"qdim": 2, "t_ops": [[[1, "1/2"], [0, 1]]]})
    assert art.nvars == 1
    assert art.t_ops[0] == Matrix([[1, Rational(1, 2)], [0, 1]])
    results = results_from_json({"modules": {"1": {"qdim": 0, "t_ops": [[]]}, "2": {"qdim": 1, "t_ops": [[[1]]]}}})
    assert sorted(results) == [1, 2]
    assert results[2].qdim == 1
    with pytest.raises(InputError):
        results_from_json({"x": {"qdim": 1, "t_ops": [[[1]]]}})

def test_context_reader():
    ctx = context_from_json({"n": 1, "d": 2, "proper": True})
    assert (ctx.n, ctx.d, ctx.proper, ctx.smooth_fiber) == (1, 2, True, False)
    with pytest.raises(InputError):
        context_from_json({"n": 1})

def test_fibration_reader(pencil_document):
    fib = fibration_from_json(pencil_document)
    assert fib.fiber_betti == [1, 2]
    assert fib.words == [[1]]
    assert fib.matrices(1)[0] == Matrix([[1, -1], [0, 1]])

def test_read_input_failures(tmp_path, write_json):
    with pytest.raises(InputError):
        read_input(str(tmp_path / "missing.json"), "module")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(InputError):
        read_input(str(bad), "module")
    with pytest.raises(InputError):
        read_input(write_json("list.json", [1, 2]), "module")
    with pytest.raises(InputError):
        read_input(write_json("partial.json", {"vertices": 3}), "complex")
