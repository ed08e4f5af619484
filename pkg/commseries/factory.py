"""
Factory for the product rule of each mode
"""

from typing import Union

from commseries.product_rules import (
    HadamardRule,
    InfiltrationRule,
    ProductMode,
    ProductRule,
    ShuffleRule,
)

_RULES = {
    ProductMode.HADAMARD: HadamardRule(),
    ProductMode.SHUFFLE: ShuffleRule(),
    ProductMode.INFILTRATION: InfiltrationRule(),
}


def create_rule(mode: Union[ProductMode, str]) -> ProductRule:
    """
    Return the product rule for a mode

    Args:
        mode: The mode to use (e.g., "hadamard", "shuffle", "infiltration")
    """
    try:
        mode = ProductMode(mode)
    except ValueError:
        raise ValueError(f"Unknown product mode: {mode}")
    return _RULES[mode]
