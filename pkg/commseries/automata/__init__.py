from commseries.automata.closure import (
    DisjointUnion,
    RightDerivative,
    disjoint_union,
    extend_alphabet,
    right_derivative_automaton,
)
from commseries.automata.gadget import shuffle_gadget
from commseries.automata.mixed import MixedAutomaton, Presentation
from commseries.automata.polynomial_automaton import (
    PolynomialAutomaton,
    from_polynomial_automaton,
    to_polynomial_automaton,
)
from commseries.automata.semantics import coefficient, iter_configurations, run, step, truncate
