from fractions import Fraction

import pytest

import umbra


def test_bell_numbers():
    assert umbra.bell(8) == [1, 1, 2, 5, 15, 52, 203, 877, 4140]


def test_series_expressions():
    assert umbra.eval_series_egf("exp(t)-1", 5) == [0, 1, 1, 1, 1, 1]
    assert umbra.eval_series("t/(1-t)", 4) == [0, 1, 1, 1, 1]
    assert umbra.eval_series("rev(exp(t)-1)", 8) == umbra.eval_series("log(1+t)", 8)
    assert umbra.eval_series("1/2", 0) == [Fraction(1, 2)]


def test_series_operations():
    assert umbra.mul_inverse([1, -1, 0, 0]) == [1, 1, 1, 1]
    b = [0, 1, 1, 1, 1, 1]
    assert umbra.compose(b, umbra.comp_inverse(b)) == [0, 1, 0, 0, 0, 0]
    assert umbra.b_star(b) == [1, 2, 1, 0, 0]
    assert umbra.log_series(umbra.exp_series([0, Fraction(1, 3), 2])) == [0, Fraction(1, 3), 2]


def test_umbral():
    assert umbra.umbral_sequences("exp(t)-1", 3) == [[1], [0, 1], [0, 1, 1], [0, 1, 3, 1]]
    assert umbra.theta("exp(t)-1", [0, 0, 1]) == [0, 1, 1]
    assert umbra.shift("exp(t)-1", [0, 1, 1]) == [0, 1, 3, 1]
    assert umbra.shift("exp(t)-1", [0, 1, 1], m=1) == [0, 4]
    assert umbra.pair("exp(t)", [1, 1, 1]) == 3


def test_ladder_coefficients():
    assert [umbra.f_rec(1, n) for n in range(6)] == [0, 1, 4, 9, 16, 25]
    assert umbra.f_rec(0, 0) == Fraction(1, 2)
    assert umbra.f_closed(2, 3) == 15
    assert umbra.sheffer_ts(1, -2)[0] == Fraction(-1, 2)
    assert "\n1,0,1,4,9,16,25\n" in umbra.fmn_table_csv(3, 5)


def test_verify_registry():
    results = umbra.verify("ALL", order=6, seed=7)
    assert [r["tag"] for r in results] == umbra.registry_tags()
    assert all(r["pass"] for r in results)
    assert umbra.verify("ALL", order=6, seed=7) == results


def test_errors():
    with pytest.raises(umbra.SeriesSyntaxError, match="offset 6"):
        umbra.eval_series("t/(1-t", 4)
    with pytest.raises(umbra.MathError, match="ZeroConstantTerm"):
        umbra.mul_inverse([0, 1])
    with pytest.raises(ValueError):
        umbra.verify("NOPE")


def test_cli_in_process():
    code, out, _ = umbra.run_cli(["bell", "--order", "7"])
    assert code == 0
    assert out == "1 1 2 5 15 52 203 877\n"
