from commseries.decide.commutativity import commutativity, rotate_check, swap_check
from commseries.decide.equality import equality
from commseries.decide.verdict import FailedCheck, PathWitness, Verdict, Witness
from commseries.decide.zeroness import ChainState, ideal_chain, zeroness
