"""Enumeration and exact counting of n-colour compositions and n-colour self-inverse compositions."""

__version__ = "0.1.0"

from .core import (
    ColouredPart,
    Composition,
    enumerate_compositions,
    enumerate_compositions_m,
    enumerate_self_inverse,
    enumerate_self_inverse_m,
    is_self_inverse,
    iter_compositions,
    weight,
)
from .formulas import (
    a_closed,
    b_closed,
    binomial,
    c_closed,
    count_A,
    count_si_even_weight_even_parts,
    count_si_even_weight_odd_parts,
    count_si_odd_weight,
    fibonacci,
    lucas,
)
from .sequences import DomainError, SequenceId, SequenceWindow, seq, seq_window
from .genfunc import IntPolynomial, RationalSeries, SeriesError, expand, gf_compositions_m, gf_of
from .identities import IdentityReport, alternating_sum, identity_i, identity_ii, sweep, three_times
from .lattice import B_total, PathCountRow, d_count, enumerate_paths
from .bijection import ClassLabel, Origin, TaggedSource, classify, forward, inverse, verify_bijection
