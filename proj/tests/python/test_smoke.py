import pytest

import lucasbinom as lb


def test_fibonacci_and_lucas_numbers():
    assert [str(v) for v in lb.lucas_u(1, 1).terms(8)] == ["0", "1", "1", "2", "3", "5", "8", "13", "21"]
    assert [int(v) for v in lb.lucas_v(1, 1).terms(4)] == [2, 1, 3, 4, 7]


def test_gaussian_polynomials():
    u = lb.lucas_u("x+1", "-x")
    assert str(u.term(3)) == "x^2+x+1"
    b = lb.u_binomial("x+1", "-x", 4, 2)
    assert str(b.value) == "x^4+x^3+2*x^2+x+1"
    assert b.integral
    assert b.value.coefficients() == ["1", "1", "2", "1", "1"]


def test_binomial_values():
    assert int(lb.u_binomial(1, 1, 4, 2).value) == 6
    v = lb.v_binomial(1, 1, 4, 2)
    assert str(v.value) == "28/3" and not v.integral
    assert str(lb.h_binomial(lb.RecurrenceParams(1, 1, 1, 2), 3, 1).value) == "5/2"
    assert int(lb.mixed_binomial(1, 1, 1, 2).value) == 12
    assert int(lb.multinomial(lb.lucas_u(1, 1), [1, 1, 2]).value) == 6


def test_big_integers_round_trip():
    big = 3**200
    assert int(lb.Ring(big) * lb.Ring(2)) == 2 * big
    assert lb.lucas_u(1, 1)[300] == lb.Ring(
        "222232244629420445529739893461909967206666939096499764990979600"
    )


def test_oracle_agrees():
    r = lb.oracle_binomial(lb.lucas_u(2, -3), 9, 4)
    assert r.reduced == lb.u_binomial(2, -3, 9, 4).value
    assert r.matches(lb.binomial_quotient(lb.lucas_u(2, -3), 9, 4))


def test_errors():
    with pytest.raises(lb.DegenerateRecurrence):
        lb.lucas_u(1, 0)
    with pytest.raises(lb.ParseError):
        lb.Ring("1+")
    with pytest.raises(lb.ZeroTerm):
        lb.u_binomial(0, 1, 4, 2)
    with pytest.raises(lb.NotDivisible):
        lb.v_binomial("x+1", "-x", 2, 1)
    with pytest.raises(ZeroDivisionError):
        lb.exact_div(1, 0)
    assert issubclass(lb.ZeroTerm, lb.LucasError) and issubclass(lb.LucasError, ValueError)


def test_identities():
    reports = lb.check_addition_formulas(1, 1, 10)
    assert reports and all(r.holds() for r in reports)
    paper = lb.check_mixed_recurrence(1, 1, 6, lb.MixedVariant.PAPER)
    derived = lb.check_mixed_recurrence(1, 1, 6, lb.MixedVariant.DERIVED)
    verdict = lb.resolve_mixed_recurrence(paper, derived)
    assert verdict.clean and verdict.survivor == lb.MixedVariant.DERIVED
    assert (verdict.counterexample.r, verdict.counterexample.s) == (1, 1)


def test_python_callable_coefficients():
    u2 = lb.lucas_u(1, 1)
    coeffs = lb.DecompositionCoeffs(lambda r, s: u2.term(s + 1), lambda r, s: u2.term(r - 1) + 1)
    res = lb.check_theorem1_equivalence(u2, coeffs, 8)
    assert res.equivalent
    assert res.first_decomposition_failure == (1, 1) == res.first_recurrence_mismatch


def test_cli_in_process():
    code, out, _ = lb.run_cli(["table", "--maxn", "3"])
    assert code == 0 and out == "1\n1,1\n1,1,1\n1,2,2,1\n"
    assert lb.run_cli(["verify", "--identity", "eq14-paper", "--maxn", "4"])[0] == 5
