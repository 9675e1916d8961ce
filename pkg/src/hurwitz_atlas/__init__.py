"""Exact Hurwitz numbers of closed surfaces, orientable or not."""

from .characters import CharacterTable, character, character_table, dimension, normalized_character
from .class_algebra import ClassAlgebraElement, brute_force_multiply, class_multiply
from .core import Partition, ResourceLimitError, partitions_of, z_of
from .engine import (
    HurwitzQuery,
    SurfaceSignature,
    hurwitz,
    hurwitz_e,
    hurwitz_mednykh,
    mobius_factor,
    verify_tft_axioms,
    weighted_hurwitz,
)
from .oracle import FactorizationProblem, oracle_count, oracle_hurwitz
from .ribbon import RibbonGraph, from_face_text, wick_hurwitz
from .symfun import PSeries

__version__ = "0.1.0"
