"""grouplab: brute-force laboratory for power maps, automorphisms and
almost-abelianity bounds of small finite groups."""

__version__ = "0.1.0"

from .automorphisms import Automorphism, automorphism_group
from .catalog import parse_group
from .groups import GroupTable, Subgroup

__all__ = ["Automorphism", "GroupTable", "Subgroup", "automorphism_group", "parse_group",
           "__version__"]
