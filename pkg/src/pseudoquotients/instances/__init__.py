"""The four built-in actions, each feeding the generic calculus in ``core``."""

from __future__ import annotations

from ..core import DomainError, Instance
from .affine_lattice import AffineLattice, AffineLatticeMap, adjugate, determinant
from .dyadic_steps import DyadicStepMap, DyadicSteps, DyadicStepValue, StepFunction
from .power_affine import PowerAffine, PowerAffineMap, RootValue
from .tower import Tower, TowerConfig, TowerMap, TowerPoint, TowerValue, default_tower_config

__all__ = [
    "AffineLattice",
    "AffineLatticeMap",
    "DyadicStepMap",
    "DyadicSteps",
    "DyadicStepValue",
    "INSTANCE_NAMES",
    "PowerAffine",
    "PowerAffineMap",
    "RootValue",
    "StepFunction",
    "Tower",
    "TowerConfig",
    "TowerMap",
    "TowerPoint",
    "TowerValue",
    "adjugate",
    "create_instance",
    "default_tower_config",
    "determinant",
]

INSTANCE_NAMES = ("power-affine", "affine-lattice", "dyadic-steps", "tower")


def create_instance(name: str, *, dim: int = 1) -> Instance:
    """Instantiate a built-in action by its public name."""
    if name == "power-affine":
        return PowerAffine()
    if name == "affine-lattice":
        return AffineLattice(dim)
    if name == "dyadic-steps":
        return DyadicSteps()
    if name == "tower":
        return Tower()
    raise DomainError(f"unknown instance {name!r}; choose one of {', '.join(INSTANCE_NAMES)}")
