from commseries.algebra.polynomials import (
    Polynomial,
    add,
    arity,
    constant,
    constant_term,
    evaluate,
    format_polynomial,
    formal_partial,
    lift,
    make_ring,
    multiply,
    power,
    scale,
    substitute,
    subtract,
    to_qq,
    variable_names,
    with_order,
)
from commseries.algebra.twisted import (
    extend_derivation,
    extend_endomorphism,
    extend_sigma_derivation,
)
