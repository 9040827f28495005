import pytest
from sympy import Matrix
from alexmod.checks import (NOT_APPLICABLE, PASS, VIOLATION, GeometryContext, check_jordan_bound,
                            check_quasi_unipotence, check_semisimplicity, check_vanishing_range,
                            has_violation, is_quasi_unipotent, is_semisimple, jordan_profile,
                            run_checks)
from alexmod.mellin import kernel_invariants
from alexmod.pid import ArtinianModule
from alexmod.utils import InputError

def single(rows):
    m = Matrix(rows)
    return ArtinianModule(1, m.rows, [m])

JORDAN = single([[1, 1], [0, 1]])
ROTATION = single([[0, -1], [1, 0]])
DOUBLE = single([[2]])

def test_context_validation():
    with pytest.raises(InputError):
        GeometryContext(0, 1)
    with pytest.raises(InputError):
        GeometryContext(1, -1)

def test_jordan_bounds():
    ctx = GeometryContext(1, 1)
    assert [ctx.jordan_bound(i) for i in [1, 2, 3]] == [1, 2, 1]
    smooth = GeometryContext(1, 1, smooth_fiber=True)
    assert smooth.jordan_bound(2) == 1
    assert GeometryContext(1, 2).jordan_bound(3) == 3
    assert ctx.vanishing_range() == (1, 3)

def test_quasi_unipotent_examples():
    assert is_quasi_unipotent(JORDAN, [1]) == (True, 1)
    assert is_quasi_unipotent(single([[-1]]), [1]) == (True, 2)
    assert is_quasi_unipotent(ROTATION, [1]) == (True, 4)
    assert is_quasi_unipotent(DOUBLE, [1]) == (False, None)
    assert is_quasi_unipotent(ArtinianModule.zero(1), [1]) == (True, 1)

def test_jordan_profile_examples():
    profile = jordan_profile(JORDAN, [1])
    assert (profile.quasi_unipotent, profile.order, profile.nilpotence_index) == (True, 1, 2)
    profile = jordan_profile(single([[-1, 1], [0, -1]]), [1])
    assert (profile.order, profile.nilpotence_index) == (2, 2)
    profile = jordan_profile(ROTATION, [1])
    assert (profile.order, profile.nilpotence_index) == (4, 1)
    assert not jordan_profile(DOUBLE, [1]).quasi_unipotent

def test_semisimple_examples():
    assert not is_semisimple(JORDAN)
    assert is_semisimple(ROTATION)
    assert is_semisimple(ArtinianModule.zero(1))
    assert is_semisimple(ArtinianModule(2, 2, [Matrix.eye(2), Matrix([[1, 0], [0, 2]])]), seed=7)
    assert not is_semisimple(ArtinianModule(2, 2, [Matrix.eye(2), Matrix([[1, 1], [0, 1]])]), seed=7)

def test_semisimplicity_is_inverse_invariant():
    for module in [JORDAN, ROTATION, DOUBLE, single([[-1, 1], [0, -1]])]:
        assert is_semisimple(module) == is_semisimple(module.inverse())

def test_vanishing_range():
    ctx = GeometryContext(1, 1)
    results = {0: single([[1]]), 2: JORDAN, 4: ArtinianModule.zero(1)}
    statuses = dict((c.name, c.status) for c in check_vanishing_range(results, ctx))
    assert statuses == {"vanishing[0]": VIOLATION, "vanishing[2]": PASS, "vanishing[4]": PASS}

def test_jordan_bound_checks():
    ctx = GeometryContext(1, 1)
    profile = jordan_profile(JORDAN, [1])
    assert check_jordan_bound(profile, ctx, 2).status == PASS
    assert check_jordan_bound(profile, ctx, 1).status == VIOLATION
    assert check_jordan_bound(profile, GeometryContext(1, 1, smooth_fiber=True), 2).status == VIOLATION
    assert check_jordan_bound(profile, ctx.at_degree(2)).status == PASS
    assert check_jordan_bound(jordan_profile(DOUBLE, [1]), ctx, 2).status == NOT_APPLICABLE
    with pytest.raises(InputError):
        check_jordan_bound(profile, ctx)

def test_quasi_unipotence_check():
    assert check_quasi_unipotence(ROTATION, 1).observed == {"quasi_unipotent": True, "N": 4}
    assert check_quasi_unipotence(DOUBLE, 1).status == VIOLATION

def test_semisimplicity_expectation():
    ctx = GeometryContext(1, 1)
    assert check_semisimplicity(JORDAN, ctx, 2).status == NOT_APPLICABLE
    proper = GeometryContext(1, 1, smooth_total_space=True, proper=True)
    assert check_semisimplicity(JORDAN, proper, 2).status == VIOLATION
    assert check_semisimplicity(ROTATION, proper, 2).status == PASS

def test_run_checks_on_the_pencil(pencil_fibration):
    ctx = GeometryContext(1, 1)
    report = run_checks({2: kernel_invariants(pencil_fibration, 2)}, ctx)
    names = [c["name"] for c in report["checks"]]
    assert names == ["vanishing[2]", "quasi_unipotent[2]", "jordan[2]", "semisimple[2]"]
    assert [c["status"] for c in report["checks"]] == [PASS, PASS, PASS, NOT_APPLICABLE]
    assert not has_violation(report)
    assert report["context"] == {"n": 1, "d": 1, "smooth_fiber": False,
                                 "smooth_total_space": False, "proper": False}

def test_run_checks_flags_violations(pencil_fibration):
    proper = GeometryContext(1, 1, smooth_total_space=True, proper=True)
    report = run_checks({2: kernel_invariants(pencil_fibration, 2)}, proper)
    assert has_violation(report)
    report = run_checks({0: single([[1]])}, GeometryContext(1, 1))
    assert has_violation(report)

def test_run_checks_needs_matching_variables():
    with pytest.raises(InputError):
        run_checks({1: JORDAN}, GeometryContext(2, 1))
