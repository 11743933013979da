import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import random_walk, universal_tiles
from lemmas import LemmaReport, check_node
from oracles import visible_by_embedding, visible_by_midpoints

from tilelab.core import GlueSide, TileType, TilelabError
from tilelab.paths import Path, Tile
from tilelab.visibility import (
    MINUS,
    PLUS,
    VERTICAL,
    SetupConfig,
    VLine,
    has_visible_glue,
    is_glue_visible,
    same_line_glue,
    visibility_setup,
    visible_glue_on_line,
    visible_glues,
)

U = universal_tiles(1)[0]


def walk(*pos):
    return Path(tuple(Tile(p, U) for p in pos))


class TestVisibleGlues:
    def test_east_run(self):
        vis = visible_glues(walk(*[(x, 0) for x in range(6)]))
        assert vis.indices() == set(range(5))
        assert vis.plus_indices() == set(range(5))
        assert not vis.minus

    def test_north_run(self):
        vis = visible_glues(walk(*[(0, y) for y in range(5)]))
        assert vis.indices() == {0}

    def test_l_path(self):
        p = walk((0, 0), (1, 0), (2, 0), (2, 1), (1, 1))
        vis = visible_glues(p)
        assert vis.indices() == {0, 1, 2}
        kinds = {v.index: v.orientation for v in vis.all}
        assert kinds == {0: PLUS, 1: PLUS, 2: VERTICAL}
        assert not is_glue_visible(p, 3)
        # the vertical glue counts as plus (north step) in the signed sets ...
        assert vis.plus_indices() == {0, 1, 2}
        # ... but never among the horizontal steps
        assert {v.index for v in vis.east_steps} == {0, 1}

    def test_west_steps(self):
        p = walk((0, 0), (0, -1), (-1, -1), (-2, -1))
        vis = visible_glues(p)
        assert {v.index for v in vis.west_steps} == {1, 2}
        assert vis.minus_indices() == {0, 1, 2}

    def test_has_visible_glue_checks_label_and_edge(self):
        p = walk((0, 0), (1, 0), (2, 0))
        g = p.glue(1)
        assert has_visible_glue(p, g)
        assert not has_visible_glue(walk((0, 0), (1, 0)), g)


def test_vertical_glues_break_the_left_right_lemma():
    # north step at x=0 visible as plus, south step at x=3 visible as minus, the
    # last tile lies right of everything before it, yet plus sits left of minus
    p = walk((0, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 0), (4, 0))
    vis = visible_glues(p)
    assert 0 in vis.plus_indices() and 4 in vis.minus_indices()
    vertical_steps = LemmaReport()
    check_node(list(p.tiles), vertical_steps, reading="midpoint")
    assert vertical_steps.counterexamples["leftright"]
    horizontal = LemmaReport()
    check_node(list(p.tiles), horizontal, reading="horizontal")
    assert horizontal.ok()
    # under the full-embedding reading neither vertical glue is visible
    assert visible_by_embedding(p) == {1, 2, 3, 5}


def test_left_right_compares_midpoints():
    # plus glue at x=-0.5 and minus glue at x=-1.5 both leave tiles with x=-1
    p = walk((-1, 0), (-1, -1), (0, -1), (0, -2), (1, -2), (1, -1), (1, 0), (1, 1), (0, 1), (0, 2), (-1, 2), (-1, 3), (-2, 3), (-2, 4))
    by_tile = LemmaReport()
    check_node(list(p.tiles), by_tile, leftright_by="tile")
    assert by_tile.counterexamples["leftright"]
    by_mid = LemmaReport()
    check_node(list(p.tiles), by_mid)
    assert by_mid.ok()


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 10**6))
def test_matches_ray_cast_oracles(seed):
    p = random_walk(random.Random(seed), 25)
    vis = visible_glues(p)
    assert vis.indices() == visible_by_midpoints(p)
    horizontal = {v.index for v in vis.east_steps} | {v.index for v in vis.west_steps}
    assert horizontal == visible_by_embedding(p)
    # one visible glue per column of midpoints
    xs = [v.ray_origin[0] for v in vis.all]
    assert len(xs) == len(set(xs))


class TestLineGlue:
    def test_single_crossing(self):
        p = walk((0, 0), (1, 0), (2, 0))
        g = visible_glue_on_line(p, VLine.at(1.5))
        assert g.index == 1 and g.orientation == PLUS

    def test_lowest_of_three_crossings(self):
        p = walk((0, 2), (1, 2), (1, 1), (0, 1), (0, 0), (1, 0), (2, 0))
        g = visible_glue_on_line(p, VLine.at(0.5))
        assert g.index == 4
        assert g.ray_origin == (2, 0)

    def test_absent(self):
        assert visible_glue_on_line(walk((0, 0), (0, 1)), VLine.at(3.5)) is None

    def test_same_line_glue(self):
        p = walk((0, 0), (1, 0))
        a = visible_glue_on_line(p, VLine.at(0.5))
        assert same_line_glue(a, a)
        assert not same_line_glue(a, None)

    def test_line_must_be_half_integer(self):
        with pytest.raises(TilelabError):
            VLine(4)


def labelled_row(labels):
    """East row from x=0 whose glue (x, x+1) carries labels[x]."""
    tiles, prev = [], None
    for x, lab in enumerate(labels + [None]):
        t = TileType(x, f"c{x}", east=GlueSide(lab), west=GlueSide(prev))
        tiles.append(Tile((x, 0), t))
        prev = lab
    return Path(tuple(tiles))


class TestSetup:
    def test_first_qualifying_pair(self):
        labels = ["g" if x in (10, 13, 16, 19) else f"l{x}" for x in range(21)]
        p = labelled_row(labels)
        cfg = SetupConfig(tileset_size=30, m=1, line=VLine.at(0.5), min_sep=3, max_vsep=3)
        assert visibility_setup(p, cfg) == (10, 13)

    def test_too_close_pairs_skipped(self):
        labels = ["g" if x in (10, 12, 16) else f"l{x}" for x in range(21)]
        cfg = SetupConfig(tileset_size=30, m=1, line=VLine.at(0.5), min_sep=3, max_vsep=3)
        assert visibility_setup(labelled_row(labels), cfg) == (10, 16)

    def test_distinct_labels(self):
        p = labelled_row([f"l{x}" for x in range(12)])
        cfg = SetupConfig(tileset_size=13, m=1, line=VLine.at(0.5), min_sep=3, max_vsep=3)
        assert visibility_setup(p, cfg) is None

    def test_minus_side(self):
        # mirrored row, scanning leftwards from the line
        labels = ["g" if x in (4, 8) else f"l{x}" for x in range(10)]
        row = labelled_row(labels)
        tiles = tuple(
            Tile((-t.pos[0], 0), TileType(t.type.id, t.type.name, east=t.type.west, west=t.type.east)) for t in row.tiles
        )
        p = Path(tiles)
        cfg = SetupConfig(tileset_size=11, m=1, line=VLine.at(-0.5), min_sep=3, max_vsep=0)
        assert visible_glue_on_line(p, cfg.line).orientation == MINUS
        assert visibility_setup(p, cfg) == (4, 8)

    def test_default_window(self):
        cfg = SetupConfig(tileset_size=5, m=1, line=VLine.at(0.5), min_sep=3, max_vsep=3)
        assert cfg.scan_window() == 5 * 4 + 1
