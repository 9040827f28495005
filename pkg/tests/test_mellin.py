import pytest
from sympy import Matrix, Rational
from alexmod.checks import PASS, VIOLATION
from alexmod.groebner import is_zero_module, maximal_artinian
from alexmod.mellin import (FibrationModel, LocalSystem, basis_words, invariants_factor_through_torus,
                            kernel_coinvariants, kernel_invariants, koszul_mellin, mellin_agrees,
                            mellin_stalk, remove_fiber_check)
from alexmod.pid import FPModule, are_similar
from alexmod.ring import LaurentPoly
from alexmod.twisted import twisted_cohomology
from alexmod.utils import InputError

def image_of(word, images):
    total = [0]*len(images[0])
    for w in word:
        sign = 1 if w > 0 else -1
        total = [x + sign*y for x, y in zip(total, images[abs(w) - 1])]
    return total

def test_local_system_validation():
    with pytest.raises(InputError):
        LocalSystem(2, [Matrix([[1]])])
    with pytest.raises(InputError):
        LocalSystem(1, [Matrix([[1, 0], [0, 0]])])
    with pytest.raises(InputError):
        LocalSystem(2, [Matrix([[1, 1], [0, 1]]), Matrix([[1, 0], [1, 1]])])

def test_stalk_inverts_the_monodromy(unipotent_local_system):
    degree, stalk = mellin_stalk(unipotent_local_system)
    assert degree == 1
    assert stalk.t_ops[0] == Matrix([[1, -1], [0, 1]])

def test_koszul_degree_range(unipotent_local_system):
    with pytest.raises(InputError):
        koszul_mellin(unipotent_local_system, 2)

def test_koszul_agrees_in_one_variable(unipotent_local_system):
    assert is_zero_module(koszul_mellin(unipotent_local_system, 0))
    assert mellin_agrees(unipotent_local_system)

def test_koszul_agrees_on_random_systems(rng):
    for _ in range(6):
        r = rng.randint(1, 3)
        m = Matrix(r, r, lambda i, j: Rational(rng.randint(-3, 3), rng.randint(1, 2)))
        if m.det() == 0:
            continue
        assert mellin_agrees(LocalSystem(1, [m]))

def test_koszul_agrees_in_two_variables(rng):
    assert mellin_agrees(LocalSystem(2, [Matrix([[2]]), Matrix([[Rational(1, 3)]])]))
    for _ in range(3):
        a = Rational(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3))
        b = Rational(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3))
        assert mellin_agrees(LocalSystem(2, [Matrix([[a]]), Matrix([[b]])]))

def test_basis_words():
    for images, n in [([[2], [3]], 1), ([[1], [1]], 1), ([[1, 1], [0, 1]], 2), ([[1, 0], [2, 1], [0, -1]], 2)]:
        words = basis_words(images, n)
        for k, word in enumerate(words):
            assert image_of(word, images) == [1 if c == k else 0 for c in range(n)]
    with pytest.raises(InputError):
        basis_words([[2], [4]], 1)
    with pytest.raises(InputError):
        basis_words([[1, 0], [2, 0]], 2)

def test_fibration_validation():
    one = [Matrix([[1]]), Matrix([[1]])]
    with pytest.raises(InputError):
        FibrationModel(1, ["a", "b"], [[1], [0]], [[1]], {0: one})
    with pytest.raises(InputError):
        FibrationModel(1, ["a", "b"], [[2], [0]], [], {0: one})
    with pytest.raises(InputError):
        FibrationModel(1, ["a", "b"], [[1], [0]], [[3]], {0: one})
    with pytest.raises(InputError):
        FibrationModel(1, ["a", "b"], [[1], [0]], [], {0: one}, fiber_betti=[2])
    with pytest.raises(InputError):
        FibrationModel(1, ["a", "b"], [[1], [0]], [], {0: [Matrix([[1]]), Matrix([[0]])]})

def test_pencil_invariants(pencil_fibration):
    art = kernel_invariants(pencil_fibration, 2)
    assert art.qdim == 2
    assert art.t_ops[0] == Matrix([[1, -1], [0, 1]])
    assert kernel_invariants(pencil_fibration, 1).qdim == 1
    assert invariants_factor_through_torus(pencil_fibration, 2)
    with pytest.raises(InputError):
        kernel_invariants(pencil_fibration, 4)

def test_kernel_action_cuts_down_the_invariants():
    fib = FibrationModel(1, ["a", "b"], [[1], [0]], [[2]],
                         {1: [Matrix.eye(2), Matrix([[1, 1], [0, 1]])]})
    art = kernel_invariants(fib, 2)
    assert art.qdim == 1
    assert art.t_ops[0] == Matrix([[1]])
    co = kernel_coinvariants(fib, 1)
    assert co.qdim == 1
    assert co.t_ops[0] == Matrix([[1]])

def test_missing_kernel_words_are_detected():
    # a and b both map to 1 but act differently, so b*a^-1 is not in the given kernel.
    fib = FibrationModel(1, ["a", "b"], [[1], [1]], [], {0: [Matrix([[2]]), Matrix([[3]])]})
    assert not invariants_factor_through_torus(fib, 1)

def test_pencil_coinvariants(pencil_fibration):
    art = kernel_coinvariants(pencil_fibration, 1)
    assert art.qdim == 2
    assert are_similar(art.t_ops[0], Matrix([[1, 1], [0, 1]]))
    assert kernel_coinvariants(pencil_fibration, 0).qdim == 1

def test_coinvariants_need_one_variable():
    fib = FibrationModel(2, ["a", "b"], [[1, 0], [0, 1]], [], {0: [Matrix([[1]]), Matrix([[1]])]})
    with pytest.raises(InputError):
        kernel_coinvariants(fib, 0)

def test_remove_fiber_in_one_variable(circle_model, wedge_model, torus_model, torus_minus_fiber_model):
    h_x = twisted_cohomology(*circle_model, i=1)
    h_y = twisted_cohomology(*wedge_model, i=1)
    assert remove_fiber_check(h_x, h_y, 1, 1).status == PASS
    assert remove_fiber_check(h_y, h_x, 1, 1).status == VIOLATION
    for i in [1, 2]:
        h_x = twisted_cohomology(*torus_model, i=i)
        h_y = twisted_cohomology(*torus_minus_fiber_model, i=i)
        assert remove_fiber_check(h_x, h_y, 1, 1).status == PASS

def test_remove_fiber_in_two_variables():
    x1 = LaurentPoly.variable(2, 0)
    x2 = LaurentPoly.variable(2, 1)
    zero = LaurentPoly.zero(2)
    h_x = FPModule(2, 1, [[x1 - 1, x2 - 1]])
    h_y = FPModule(2, 2, [[x1 - 1, x2 - 1], [zero, zero]])
    result = remove_fiber_check(h_x, h_y, 1, 2)
    assert result.status == PASS
    assert result.observed == {"free_rank": 1, "s0_qdim": 1}
    with pytest.raises(InputError):
        remove_fiber_check(h_x, h_y, 1, 1)

def invertible(rng, r):
    while True:
        m = Matrix(r, r, lambda i, j: rng.randint(-2, 2))
        if m.det() != 0:
            return m

@pytest.mark.slow
def test_koszul_agrees_on_commuting_systems(rng):
    # The second monodromy is a polynomial in the first, so the two commute.
    for _ in range(100):
        r = rng.randint(1, 4)
        m = invertible(rng, r)
        if rng.random() < 0.5:
            local = LocalSystem(1, [m])
        else:
            while True:
                a, b, c = [rng.randint(-2, 2) for _ in range(3)]
                other = a*m*m + b*m + c*Matrix.eye(r)
                if other.det() != 0:
                    break
            local = LocalSystem(2, [m, other])
        assert mellin_agrees(local)
        assert maximal_artinian(koszul_mellin(local, local.n)).qdim == r
