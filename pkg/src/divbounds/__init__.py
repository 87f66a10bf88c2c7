"""Jensen-difference bounds, Csiszar f-divergences, mean divergence measures and
verification suites for the inequality chains that relate them."""

from .csiszar import (
    DivergenceBounds,
    NamedDivergence,
    compare_divergences,
    csiszar_divergence,
    divergence_bounds,
    get_measure,
    named_divergence,
    phi_s,
    shannon_entropy,
    v_s,
    w_s,
)
from .generators import Generator, GeneratorSpec, Kind, get_generator, make_generator, registry
from .jensen import (
    JensenReport,
    RatioExtrema,
    WeightedPoints,
    compare_generators,
    jensen_bounds,
    jensen_difference,
    second_ratio_extrema,
    two_point_gap,
    weighted_points,
)
from .means import MeanDivergence, MeanKind, binary_mean, mean_chain, mean_divergence, power_mean
from .prob import Distribution, RatioBounds, new_distribution, ratio_bounds, sample_pair

__version__ = "0.1.0"
