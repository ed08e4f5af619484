from commseries.oracle.products import hadamard, infiltration, product, shuffle
from commseries.oracle.series import (
    CommutativityViolation,
    TruncatedSeries,
    commutative_up_to,
    left_derivative,
    parikh,
    right_derivative,
)
