"""Exact counting of subgroups of finite abelian groups by exponent."""

from .partition import Partition, conjugate, contains, subpartitions_with_first_part
from .polyring import IntPoly, gauss_binom
from .pgroup import (
    DomainError,
    ExponentProfile,
    GroupSpec,
    alpha,
    count_exponent,
    count_exponent_general,
    count_exponent_p,
    count_exponent_p2,
    count_exponent_rank2,
    count_exponent_rank3,
    count_type_rank3,
    exponent_profile,
    profiles_isomorphic,
    total_rank2,
    total_rank3,
)
from .rank2 import (
    ExponentDistribution,
    SubgroupKey,
    count_exponent_mn,
    cyclic_equivalent_count,
    enumerate_keys,
    exponent_distribution,
    key_invariants,
    materialize,
    sum_of_exponents,
    total_mn,
)

__version__ = "0.1.0"
