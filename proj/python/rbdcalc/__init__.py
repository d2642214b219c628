"""Exact lattice arithmetic for rational blowdowns of CP^2 # n(-CP^2).

Class vectors are lists of ints, h-coefficient first. Reports are dicts with
the same layout as the rbdcalc CLI output.
"""

from ._core import (
    ArityError,
    ConsistencyError,
    DimensionMismatch,
    DomainError,
    PreconditionError,
    RbdError,
    SearchSizeError,
    __version__,
    blowdown,
    boundary_group,
    chain_template,
    is_characteristic,
    lens_space_cf,
    pairing,
    reproduce_paper,
    run_fixture,
    search,
    smith_normal_form,
    sw,
    verify_config,
    wall_crossing,
)

__all__ = [
    "ArityError",
    "ConsistencyError",
    "DimensionMismatch",
    "DomainError",
    "PreconditionError",
    "RbdError",
    "SearchSizeError",
    "__version__",
    "blowdown",
    "boundary_group",
    "chain_template",
    "is_characteristic",
    "lens_space_cf",
    "pairing",
    "reproduce_paper",
    "run_fixture",
    "search",
    "smith_normal_form",
    "sw",
    "verify_config",
    "wall_crossing",
]
