"""Exact enumeration on lattices of q-decreasing binary words.

A binary word is q-decreasing when each maximal factor ``0^a 1^b`` has
``a = 0`` or ``q*a > b``.  The package builds these lattices explicitly,
derives generating functions for their statistics with exact rational
arithmetic, and checks each against the other.
"""

from .asymptotics import GrowthEstimate, growth_check, phi, pi_polynomial
from .formulas import (
    gf,
    gf_A,
    gf_B,
    gf_coverings,
    gf_D,
    gf_intervals,
    gf_join_irreducible,
    gf_prime_intervals,
    gf_words,
    series_coverings_real,
    series_words_real,
)
from .gfcore import Poly, RatFun, floor_seq_gf, floor_transform, root_power_transform
from .lattice import LatticeModel, build_lattice, covers, join, lower_covers, meet
from .meet import gf_meet, gf_meet_high, gf_meet_low
from .oracle import VerifyReport, verify, verify_covers_equivalence
from .qparam import PrecisionError, QParam, RationalQ, RealQ, parse_q
from .words import (
    count_words,
    decompose,
    enumerate_words,
    is_q_decreasing,
    is_q_plus_decreasing,
    unique_admissible_factor,
)

__version__ = "0.1.0"

__all__ = [
    "GrowthEstimate",
    "LatticeModel",
    "Poly",
    "PrecisionError",
    "QParam",
    "RatFun",
    "RationalQ",
    "RealQ",
    "VerifyReport",
    "build_lattice",
    "count_words",
    "covers",
    "decompose",
    "enumerate_words",
    "floor_seq_gf",
    "floor_transform",
    "gf",
    "gf_A",
    "gf_B",
    "gf_D",
    "gf_coverings",
    "gf_intervals",
    "gf_join_irreducible",
    "gf_meet",
    "gf_meet_high",
    "gf_meet_low",
    "gf_prime_intervals",
    "gf_words",
    "growth_check",
    "is_q_decreasing",
    "is_q_plus_decreasing",
    "join",
    "lower_covers",
    "meet",
    "parse_q",
    "phi",
    "pi_polynomial",
    "root_power_transform",
    "series_coverings_real",
    "series_words_real",
    "unique_admissible_factor",
    "verify",
    "verify_covers_equivalence",
]
