import numpy as np
import pytest

from jbcone import DirectSum, Orthant, SpinFactor, SymMatrices

# The default instance family exercised across the suite.
INSTANCES = [
    Orthant(4),
    SymMatrices(3),
    SpinFactor(4),
    DirectSum((SymMatrices(2), SpinFactor(3)), "inf"),
]

# Instances carrying the associative (l2 / trace) inner product.
JH_INSTANCES = [Orthant(4), SymMatrices(2), SpinFactor(4)]


def instance_id(alg):
    name = type(alg).__name__
    if isinstance(alg, DirectSum):
        return f"{name}[{'+'.join(instance_id(p) for p in alg.parts)}:{alg.norm_mode}]"
    return f"{name}{alg.n}"


@pytest.fixture(params=INSTANCES, ids=instance_id)
def alg(request):
    return request.param


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
