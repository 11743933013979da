import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import random_producible_path, random_tas

from tilelab.core import grow
from tilelab.simulation import BlockRepr, gen_tn
from tilelab.textio import (
    ParseError,
    parse_assembly,
    parse_path,
    parse_repr,
    parse_tas,
    serialize_assembly,
    serialize_path,
    serialize_repr,
    serialize_tas,
)

SMALL = """\
# a two-tile row
temp 1
tile s e=a
tile t w=a n=b:0
seed 0 0 s
"""


class TestTas:
    def test_tn12_text(self):
        tas = parse_tas(serialize_tas(gen_tn(12)))
        assert len(tas.tileset) == 15
        assert tas == gen_tn(12)

    def test_small(self):
        tas = parse_tas(SMALL)
        t = tas.by_name("t")
        assert t.west.label == "a" and t.north.label == "b" and not t.north.active
        assert "n=b:0" in serialize_tas(tas)

    def test_empty_file(self):
        with pytest.raises(ParseError, match="no tiles"):
            parse_tas("# nothing\n\n")

    def test_undeclared_seed_tile_has_line_number(self):
        with pytest.raises(ParseError) as e:
            parse_tas("tile s\n\nseed 0 0 q\n")
        assert e.value.line == 3

    @pytest.mark.parametrize(
        "text, line",
        [
            ("tile s\ntile s\nseed 0 0 s\n", 2),
            ("tile s x=a\nseed 0 0 s\n", 1),
            ("tile s e=a:z\nseed 0 0 s\n", 1),
            ("tile s e=a:-1\nseed 0 0 s\n", 1),
            ("temp 2\ntile s\nseed 0 0 s\n", 1),
            ("tile s\nseed 0 zero s\n", 2),
            ("tile s\nseed 0 0 s\nseed 0 0 s\n", 3),
            ("tile s\nbogus\n", 2),
            ("tile s\nseed 0 0 s\nseed 4 4 s\n", 3),
        ],
    )
    def test_errors_carry_lines(self, text, line):
        with pytest.raises(ParseError) as e:
            parse_tas(text)
        assert e.value.line == line

    def test_no_seed(self):
        with pytest.raises(ParseError, match="no seed"):
            parse_tas("tile s\n")


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6))
def test_tas_round_trip(seed):
    tas = random_tas(random.Random(seed))
    assert parse_tas(serialize_tas(tas)) == tas


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6))
def test_path_round_trip(seed):
    rng = random.Random(seed)
    tas = random_tas(rng, p_glue=0.8)
    p = random_producible_path(rng, tas, 8)
    if p is None:
        return
    assert parse_path(serialize_path(p), tas) == p


class TestPath:
    def test_broken_binding_line(self):
        tas = parse_tas(SMALL)
        with pytest.raises(ParseError) as e:
            parse_path("1 0 t\n2 0 t\n", tas)
        assert e.value.line == 2

    def test_undeclared(self):
        with pytest.raises(ParseError) as e:
            parse_path("# c\n1 0 zz\n", parse_tas(SMALL))
        assert e.value.line == 2

    def test_empty(self):
        with pytest.raises(ParseError):
            parse_path("", parse_tas(SMALL))


class TestRepr:
    def test_round_trip(self):
        tgt = gen_tn(2)
        text = "block 2 a,./.,. -> r1\nblock 2 a,b/.,. -> r1\nblock 2 c,./.,. -> col\n"
        r = parse_repr(text, tgt)
        assert isinstance(r, BlockRepr) and r.m == 2
        assert parse_repr(serialize_repr(r), tgt) == r

    @pytest.mark.parametrize(
        "text",
        [
            "block 1 a -> nope\n",
            "block 2 a -> r1\n",
            "block 1 a -> r1\nblock 2 a,./.,. -> r1\n",
            "block 1 a r1\n",
            "block 1 a -> r1\nblock 1 a -> r2\n",
            "block 0 a -> r1\n",
        ],
    )
    def test_errors(self, text):
        with pytest.raises(ParseError):
            parse_repr(text, gen_tn(2))

    def test_inconsistent_table(self):
        with pytest.raises(ParseError, match="invalid repr"):
            parse_repr("block 2 a,./.,. -> r1\nblock 2 a,b/.,. -> r2\n", gen_tn(2))

    def test_empty(self):
        with pytest.raises(ParseError, match="no blocks"):
            parse_repr("#\n", gen_tn(2))


class TestAssembly:
    def test_round_trip(self):
        tas = gen_tn(4)
        asm = grow(tas, steps=9, rng_seed=1).final()
        assert parse_assembly(serialize_assembly(asm), tas) == asm

    def test_duplicate_position(self):
        with pytest.raises(ParseError) as e:
            parse_assembly("0 0 seed\n0 0 r1\n", gen_tn(2))
        assert e.value.line == 2
