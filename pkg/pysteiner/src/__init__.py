"""
Source code for the PySteiner operations.
"""
from pysteiner.src.config import config
from pysteiner.src.steiner import (
    SteinerCheck,
    evaluations,
    fiber_dual,
    is_steiner,
    reduced_summand,
)
from pysteiner.src.random_steiner import random_steiner
from pysteiner.src.schwarz import (
    TripletSpec,
    schwarz_ample_p1,
    schwarz_from_tensor,
    schwarz_p1,
    schwarz_scroll,
    schwarz_veronese,
)
from pysteiner.src.tangent import tangent_dim, tecnico_bound, tecnico_dim
from pysteiner.src.jumping import (
    JumpingLocusReport,
    JumpingPair,
    ab_pair_bound,
    enumerate_jumping_pairs,
    hyperplane_kernels,
    hyperplane_profile,
    is_jumping_pair_ab,
    point_fiber,
    span_report,
)
from pysteiner.src.transform import (
    TransformLawReport,
    TransformStep,
    model_pair_counts,
    quotient_map,
    transform_at,
    verify_transform_laws,
)
from pysteiner.src.classify import ClassificationReport, classify_max
from pysteiner.src.experiments import all_hyperplanes_jumping, generic_locus_sweep
