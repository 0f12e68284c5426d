"""qpl: exact q-series arithmetic, modular figurate numbers, partition
counting by independent routes, restricted divisor sums, and numeric theta
functions, with a verification harness that cross-checks everything."""

from .errors import (
    NotInvertibleError,
    OracleBoundError,
    OrderMismatchError,
    ParameterError,
)
from .series import QSeries, ZLaurentSeries, triple_pochhammer
from .figurate import (
    BoundaryClass,
    ModularParams,
    QPolynomial,
    figurate,
    figurate_enumerate,
    gaussian_binomial,
    gnomon,
    pentagonal,
)
from .partsets import PartSet, parse_part_set
from .partitions import (
    CountMode,
    DISTINCT,
    SIGNED_DISTINCT,
    SIGNED_UNRESTRICTED,
    SequenceTable,
    UNRESTRICTED,
    at_most,
    bounded_mult_shift_identity,
    generate_partitions,
    gf_count,
    oracle_bound,
    oracle_count,
    oracle_table,
    partition_shift_identities,
    quotient_series,
    recursive_count_bounded_jbar,
    recursive_count_distinct_j,
    recursive_count_j,
    recursive_count_jbar,
    recursive_count_quotient,
)
from .divisors import (
    DivisorTable,
    apostol_convolution_check,
    divisor_series,
    divisor_sum,
    divisor_table,
    kim_identity_check,
    recursive_divisor_sums,
)
from .reports import Mismatch, VerificationReport
from .identities import (
    battery,
    compare_series,
    interior_grid,
    verify_berger,
    verify_boundary_half,
    verify_hermite,
    verify_specialized,
    verify_sylvester,
    verify_triple_product,
)
from .theta import (
    ThetaPoint,
    aux_theta,
    quasi_periodicity_residual,
    theta_class,
    theta_product,
    theta_series,
)

__version__ = "0.1.0"
