"""Gray maps and constacyclic codes over finite chain rings."""

from ._kernels import BACKEND
from .chain_ring import PRESETS, ChainRing, RingError, all_words, make_ring
from .codes import (
    CapExceeded,
    Code,
    FieldCode,
    distance_distribution,
    enumerate_code,
    gray_image,
    is_constacyclic,
    is_distance_invariant,
    is_ideal,
    is_linear,
    is_quasicyclic,
    min_hamming,
    min_hom_distance,
)
from .field import ResidueField
from .gray_map import gray, gray_inverse, hamming_distance, hamming_weight, hom_distance, hom_weight
from .shifts import (
    UnitSpec,
    beta,
    constacyclic_shift,
    mu_bar,
    mu_bar_sq,
    mu_poly,
    nechaev_perm,
    pi_block,
    quasi_shift,
)

__version__ = "0.1.0"
