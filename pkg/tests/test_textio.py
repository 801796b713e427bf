import random

import pytest

from carlitz_units.errors import ParseError, StarViolated
from carlitz_units.fq import make_field
from carlitz_units.textio import (
    RunConfig,
    format_decomposition,
    format_element,
    format_poly,
    format_xpoly,
    human_poly,
    parse_element,
    parse_poly,
    parse_xpoly,
)
from carlitz_units.units import decompose, gen_norm1_unit
from carlitz_units.verify import random_element

F2, F3 = make_field(2), make_field(3)
F4 = make_field(2, 2, [1, 1, 1])


@pytest.mark.parametrize(
    "text, F, expect",
    [
        ("T^2+T+1", F2, (1, 1, 1)),
        ("[1,1,1]", F2, (1, 1, 1)),
        ("[0]", F2, ()),
        ("0", F3, ()),
        ("2T", F3, (0, 2)),
        ("-T", F3, (0, 2)),
        ("(T+1)^2", F3, (1, 2, 1)),
        ("(T+1)(T+2)", F3, (2, 0, 1)),
        ("T*T - 1", F3, (2, 0, 1)),
        ("t*T + t + 1", F4, (3, 2)),
        ("[[1,1],[0,1]]", F4, (3, 2)),
    ],
)
def test_parse_poly(text, F, expect):
    assert parse_poly(text, F) == expect


@pytest.mark.parametrize("bad", ["", "T^", "T+", "(T", "X", "[1,2", "T^x"])
def test_parse_poly_errors(bad):
    with pytest.raises(ParseError):
        parse_poly(bad, F3)


def test_format_poly():
    assert format_poly((), F2) == "[0]"
    assert format_poly((1, 1, 1), F2) == "[1,1,1]"
    assert human_poly((1, 1, 1), F2) == "T^2+T+1"
    assert human_poly((3, 2), F4) == "t*T+t+1"


def test_poly_round_trip():
    rng = random.Random(0)
    from carlitz_units.poly import PolyRing

    for F in (F2, F3, F4):
        A = PolyRing(F)
        for _ in range(30):
            a = A.make(rng.randrange(F.q) for _ in range(rng.randint(0, 6)))
            assert parse_poly(format_poly(a, F), F) == a
            assert parse_poly(human_poly(a, F), F) == a


def test_xpoly_round_trip(ctx_f2_2):
    s = format_xpoly(ctx_f2_2.psi, F2)
    assert s == "[[1,1,1],[1,1,1],[0],[1]]"
    assert parse_xpoly(s, F2) == ctx_f2_2.psi


def test_element_round_trip(any_ctx):
    rng = random.Random(3)
    for _ in range(20):
        a = random_element(rng, any_ctx)
        assert parse_element(format_element(a), any_ctx) == a
    assert parse_element("[1]", any_ctx) == any_ctx.one
    assert parse_element("[0;1]", any_ctx) == any_ctx.lam


def test_element_reduces_long_input(ctx_f2_2):
    assert parse_element("[0;0;0;1]", ctx_f2_2) == ctx_f2_2.lam**3


def test_decomposition_record(ctx_f2_3):
    d = decompose(gen_norm1_unit(4, ctx_f2_3))
    lines = format_decomposition(d, ctx_f2_3).splitlines()
    assert lines[0].startswith("context q=2 ")
    assert lines[1] == f"ell={d.ell}"
    assert parse_xpoly(lines[2].split("=", 1)[1], ctx_f2_3.F) == d.Q
    assert parse_element(lines[3].split("=", 1)[1], ctx_f2_3) == d.witness


def test_config_parsing():
    cfg = RunConfig.from_text("p = 2\nprime_poly = T^2+T+1  # comment\nseed=3\n")
    assert (cfg.p, cfg.k, cfg.prime_poly, cfg.seed, cfg.trials) == (2, 1, "T^2+T+1", 3, 10)
    assert cfg.context().n == 3
    cfg4 = RunConfig.from_text("p=2\nk=2\nmodulus=t^2+t+1\nprime_poly=T")
    assert cfg4.context().q == 4
    with pytest.raises(ParseError):
        RunConfig.from_text("p=2\nbogus=1")
    with pytest.raises(ParseError):
        RunConfig.from_text("prime_poly=T")
    with pytest.raises(StarViolated):
        RunConfig.from_text("p=2\nprime_poly=T").context()
