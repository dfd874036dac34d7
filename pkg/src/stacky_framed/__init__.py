"""Exact invariants of stacky Hirzebruch surfaces and their framed sheaves."""
from .riemann_roch import (
    A_term,
    B_term,
    FramingVector,
    dimension,
    dimension_from_twisted_sectors,
    fixed_point_discriminant,
    roots_of_unity_sum,
    roots_of_unity_sum_numeric,
    todd2_integral,
    twisted_sector_sum,
)
from .fans import (
    Fan2D,
    StackyFan,
    gerbe_gale_dual,
    hirzebruch_fan,
    quotient_presentation,
    quotient_stacky_fan_along_ray,
    root_stacky_fan,
)
from .fixed_points import (
    FixedPoint,
    count_fixed_points,
    count_rank_one,
    enumerate_fixed_points,
    young_pairs,
)
from .lattice import (
    FGAbelianGroup,
    IntMatrix,
    cokernel,
    gale_dual,
    is_gale_dual_weights,
    smith_normal_form,
)
from .picard import (
    CoarseDivisor,
    DinfLineClass,
    DivisorClass,
    degree_on_Dinf,
    good_framing_divisor_check,
    intersect,
    named_class,
    restrict_to_Dinf,
)
from .stability import (
    FramedNumData,
    HilbertPoly,
    degree_shift,
    delta_semistable_check,
    framed_hilbert,
    generating_sheaf_condition,
    good_framing_sheaf_check,
    hat_mu_relation,
    mu_stable_check,
    polarization_threshold,
    poly_leq,
    twist_degree,
)

__version__ = "0.1.0"
