"""Temperature-1 tile assembly: paths, pumping, visibility, blocking and simulation checks."""

from .core import Assembly, GlueSide, Tas, TileType, TilelabError, CapExceeded, grow
from .paths import Path, Tile, PumpSpec, is_pumpable
from .simulation import gen_tn

__all__ = [
    "Assembly", "GlueSide", "Tas", "TileType", "TilelabError", "CapExceeded", "grow",
    "Path", "Tile", "PumpSpec", "is_pumpable", "gen_tn",
]
