import json
import random
import pytest
from sympy import Matrix
from alexmod.mellin import FibrationModel, LocalSystem
from alexmod.models import circle, torus, torus_minus_fiber, wedge

@pytest.fixture
def rng():
    return random.Random(20240917)

@pytest.fixture
def circle_model():
    return circle(1)

@pytest.fixture
def wedge_model():
    "C* minus a point: one loop around 0 and one around the removed point."
    return wedge([1, 0])

@pytest.fixture
def torus_model():
    return torus()

@pytest.fixture
def torus_minus_fiber_model():
    return torus_minus_fiber()

# A family over C* minus {1} whose fiber has H^1 = Q^2: the loop around 0
# acts unipotently and the loop around 1 acts trivially.
LOOP_AT_ZERO = [[1, -1], [0, 1]]
LOOP_AT_ONE = [[1, 0], [0, 1]]

@pytest.fixture
def pencil_document():
    return {"n": 1,
            "generators": ["a", "b"],
            "images": [[1], [0]],
            "kernel_words": [[2]],
            "degrees": {"0": {"matrices": [[[1]], [[1]]]},
                        "1": {"matrices": [LOOP_AT_ZERO, LOOP_AT_ONE]}},
            "fiber_betti": [1, 2]}

@pytest.fixture
def pencil_fibration():
    return FibrationModel(1, ["a", "b"], [[1], [0]], [[2]],
                          {0: [Matrix([[1]]), Matrix([[1]])],
                           1: [Matrix(LOOP_AT_ZERO), Matrix(LOOP_AT_ONE)]},
                          fiber_betti=[1, 2])

@pytest.fixture
def unipotent_local_system():
    return LocalSystem(1, [Matrix([[1, 1], [0, 1]])])

@pytest.fixture
def write_json(tmp_path):
    "Return a function that writes a JSON document to a temporary file and returns its name."
    def write(name, doc):
        path = tmp_path / name
        path.write_text(json.dumps(doc))
        return str(path)
    return write
