from commseries.groebner.buchberger import GroebnerBasis, buchberger, spoly
from commseries.groebner.ideals import (
    contains_all,
    contains_one,
    ideal_equality,
    ideal_membership,
    normal_form,
)
from commseries.groebner.orders import MonomialOrder
