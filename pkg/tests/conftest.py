import random

import pytest

from pseudoquotients import AffineLattice, DyadicSteps, PowerAffine, Tower

INSTANCES = {
    "power-affine": PowerAffine(),
    "affine-lattice-1d": AffineLattice(1),
    "affine-lattice-2d": AffineLattice(2),
    "dyadic-steps": DyadicSteps(),
    "tower": Tower(),
}


@pytest.fixture(params=sorted(INSTANCES), ids=sorted(INSTANCES))
def instance(request):
    return INSTANCES[request.param]


@pytest.fixture
def rng():
    return random.Random(987654321)
