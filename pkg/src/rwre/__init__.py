"""Deterministic Monte Carlo lab for finite-range random walks on
one-dimensional dynamic random environments.

Everything is driven by a counter-based random field keyed on
(master seed, stream, replica, site, time), so any trajectory, event or
table can be reproduced bit-exactly from the seed recorded in a run
manifest.
"""

__version__ = "0.1.0"

from .rng_field import SeedKey, Stream, aux_uniform, poisson_times, uniform_at
from .geometry import (
    AllowedPath,
    BoxSpec,
    RealAnchor,
    ScaleLadder,
    box_of,
    interval_points,
    ladder,
    paving,
    rounded_point,
)
from .environment import EnvironmentSpec, iid_field, markov_site_chains, renewal_chains
from .walker import (
    JumpKernel,
    Trajectory,
    evolve_continuous,
    evolve_discrete,
    evolve_front,
    fixed_row_kernel,
    jump,
    mirror,
    skeleton,
    state_mix_kernel,
    uniform_kernel,
    validate_kernel,
)

__all__ = [
    "SeedKey",
    "Stream",
    "uniform_at",
    "aux_uniform",
    "poisson_times",
    "RealAnchor",
    "BoxSpec",
    "ScaleLadder",
    "AllowedPath",
    "interval_points",
    "box_of",
    "ladder",
    "rounded_point",
    "paving",
    "EnvironmentSpec",
    "iid_field",
    "markov_site_chains",
    "renewal_chains",
    "JumpKernel",
    "Trajectory",
    "uniform_kernel",
    "fixed_row_kernel",
    "state_mix_kernel",
    "validate_kernel",
    "jump",
    "evolve_discrete",
    "evolve_front",
    "evolve_continuous",
    "skeleton",
    "mirror",
]
