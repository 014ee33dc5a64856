"""Size caps for exhaustive operations.

Tensor lattices are doubly exponential in the factor sizes and several checks
enumerate all subsets of a carrier, so every potentially explosive operation
takes a cap and fails loudly with CapExceeded instead of silently truncating.
"""

import os
from dataclasses import dataclass

ENV_MAX_EXHAUSTIVE = "PFSPEC_MAX_EXHAUSTIVE"


@dataclass(frozen=True)
class Caps:
    # largest product carrier for which a full tensor lattice is materialized
    max_tensor_carrier: int = 24
    # largest carrier for subset-exhaustive checks (2**max_exhaustive states)
    max_exhaustive: int = 16

    def search_budget(self):
        return 1 << self.max_exhaustive


def caps_from_env(max_tensor_carrier=None, max_exhaustive=None):
    """Build a Caps, letting explicit arguments override the environment."""
    if max_exhaustive is None:
        env = os.environ.get(ENV_MAX_EXHAUSTIVE)
        if env is not None:
            max_exhaustive = int(env)
    kwargs = {}
    if max_tensor_carrier is not None:
        kwargs["max_tensor_carrier"] = max_tensor_carrier
    if max_exhaustive is not None:
        kwargs["max_exhaustive"] = max_exhaustive
    return Caps(**kwargs)


DEFAULT_CAPS = Caps()
