"""Accordion complexes of polygon dissections and their serpent nests."""

from .core import (Accordion, Cell, DissectionError, DualTree, HollowDissection, Relabel,
                   accordion_path, compute_cells, contract_boundary_pair, crossed_hollow,
                   crosses, dual_tree, is_accordion, rotate, separates, zigzag_of)
from .complex import accordion_diagonals, faces, facets, is_accordion_diagonal
from .serpents import (Serpent, enumerate_serpent_nests, enumerate_serpents, incompatible,
                       is_serpent, is_serpent_nest, serpent_intersection, turns_at)
from .bijection import find_x, normalize_leaf, phi, psi, split_dissection
from .oracle import VerificationReport, catalan, enumerate_dissections, verify
from .render import RenderSpec, render_svg

__all__ = [
    "Accordion", "Cell", "DissectionError", "DualTree", "HollowDissection", "Relabel",
    "accordion_path", "compute_cells", "contract_boundary_pair", "crossed_hollow", "crosses",
    "dual_tree", "is_accordion", "rotate", "separates", "zigzag_of",
    "accordion_diagonals", "faces", "facets", "is_accordion_diagonal",
    "Serpent", "enumerate_serpent_nests", "enumerate_serpents", "incompatible", "is_serpent",
    "is_serpent_nest", "serpent_intersection", "turns_at",
    "find_x", "normalize_leaf", "phi", "psi", "split_dissection",
    "VerificationReport", "catalan", "enumerate_dissections", "verify",
    "RenderSpec", "render_svg",
]
