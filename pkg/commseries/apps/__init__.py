from commseries.apps.cda import adjoin_variable, cda_solvable, companion_shuffle, taylor_coefficient
from commseries.apps.polyrec import (
    companion_hadamard,
    diagonal,
    evaluate_point,
    polyrec_consistent,
    section,
)
from commseries.apps.systems import (
    CDASystem,
    EquationSystem,
    PolyrecConstant,
    PolyrecSystem,
    canonical_path,
)
