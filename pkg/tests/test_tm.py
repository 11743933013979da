import pytest

from tilelab.core import Assembly, GlueSide, Tas, TileType, TilelabError, grow
from tilelab.simulation import gen_tn
from tilelab.tm import PremiseViolation, RectBound, check_rect_conditions, modify_tileset_for_reduction


def row_with_halt(east: GlueSide) -> Tas:
    s = TileType(0, "s", east=GlueSide("a"))
    h = TileType(1, "H", west=GlueSide("a"), east=east)
    return Tas((s, h), Assembly.single((0, 0), s))


class TestModify:
    def test_grows_a_column_east_of_h(self):
        red = modify_tileset_for_reduction(row_with_halt(GlueSide("free")), "H")
        assert red.premise == "unmatched"
        asm = grow(red.tas, steps=12, rng_seed=0).final()
        assert asm[(2, 0)] == red.t1
        assert all(asm[(2, y)] == red.t2 for y in range(1, 11))

    def test_strength_zero_premise(self):
        red = modify_tileset_for_reduction(row_with_halt(GlueSide(None)), "H")
        assert red.premise == "strength-0"
        assert red.halt.east.active

    def test_flipped_l_column(self):
        # H is T_12's corner: its east side is empty, so a second column starts east of it
        red = modify_tileset_for_reduction(gen_tn(12), "corner")
        asm = grow(red.tas, steps=60, rng_seed=2).final()
        assert asm.get((14, 0)) == red.t1
        assert asm.get((14, 1)) in (None, red.t2)

    def test_fresh_names_avoid_clashes(self):
        s = TileType(0, "t1", east=GlueSide("gE'"))
        h = TileType(1, "H", west=GlueSide("gE'"))
        red = modify_tileset_for_reduction(Tas((s, h), Assembly.single((0, 0), s)), h)
        assert red.t1.name != "t1"
        assert red.t1.west.label not in {"gE'"}

    def test_binding_east_glue_names_the_tile(self):
        v = row_with_halt(GlueSide("x"))
        bad = Tas(v.tileset + (TileType(2, "eater", west=GlueSide("x")),), v.seed)
        with pytest.raises(PremiseViolation) as e:
            modify_tileset_for_reduction(bad, "H")
        assert e.value.tile == "eater"

    def test_missing_halt_tile(self):
        with pytest.raises(PremiseViolation):
            modify_tileset_for_reduction(row_with_halt(GlueSide("x")), "nope")

    def test_seed_copy_of_h_is_replaced(self):
        h = TileType(0, "H")
        red = modify_tileset_for_reduction(Tas((h,), Assembly.single((0, 0), h)), "H")
        assert red.tas.seed[(0, 0)] == red.halt


def row(n, halt_at=None):
    tiles = {}
    for x in range(n):
        tiles[(x, 0)] = TileType(x, "H" if x == halt_at else f"r{x}")
    return Assembly(tiles)


class TestRect:
    RB = RectBound(3, 2, 3, 1, "H")

    def test_accept(self):
        assert check_rect_conditions(row(6, 5), self.RB)[0] == "ok_accept"

    def test_reject_without_h(self):
        assert check_rect_conditions(row(6), self.RB) == ("ok_reject", "no halting tile")

    def test_h_off_the_last_column(self):
        assert check_rect_conditions(row(6, 3), self.RB)[0] == "violation"

    def test_outside_the_rectangle(self):
        verdict, why = check_rect_conditions(row(7, 6), self.RB)
        assert verdict == "violation" and "rectangle" in why

    def test_never_reaches_last_band(self):
        assert check_rect_conditions(row(3, 2), self.RB)[0] == "violation"

    def test_seed_outside_square(self):
        seed = Assembly.single((4, 0), TileType(0, "s"))
        assert check_rect_conditions(row(6, 5), self.RB, seed)[0] == "violation"

    def test_bound_below_space(self):
        with pytest.raises(TilelabError):
            RectBound(2, 2, 3, 1, "H")
