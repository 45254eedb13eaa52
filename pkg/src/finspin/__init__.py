"""Finslerian 4-spinors and the 16-dimensional Finslerian space Herm(4)."""
from .herm16 import (
    BASIS,
    TAU,
    TAU_DUAL,
    GTensor,
    build_gtensor,
    finsler_length,
    gtensor,
    pack,
    quartic_det,
    quartic_form,
    unpack,
)
from .isometry import (
    embed_sl2,
    induced_transform,
    l_blocks_sl2,
    l_matrix,
    random_sl2,
    split_action_sl2,
)
from .kernels import BACKEND
from .linalg import ResidueError, adjoint4, det4, is_hermitian, mul4, trace4
from .reduction import GAMMA, GAMMA5, METRIC, ReducedX, bar, bilinear, join, quartic_reduced, split
from .spinor4 import (
    TWISTOR_GRAM,
    is_sl4,
    is_su22,
    pseudounitary_product,
    random_sl4,
    su22_sample,
    symplectic_product,
)

__version__ = "0.1.0"
