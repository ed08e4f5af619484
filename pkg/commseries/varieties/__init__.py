from commseries.varieties.ideal import (
    CommutativityIdeal,
    canonical_representative,
    commutativity_polynomials,
    iter_commutativity_ideals,
)
from commseries.varieties.queries import (
    Answer,
    Stabilization,
    all_outputs_commutative,
    exists_commutative_output,
    output_membership,
    sample_commutative_output,
    stabilize,
)
