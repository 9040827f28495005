###################################
# Monodromy verdicts              #
###################################

"""Quasi-unipotence, Jordan structure and semisimplicity of Artinian
modules, and the conformance checks on a bundle of S0 modules: vanishing
outside [n, n + 2d], the Jordan block bounds and the semisimplicity
expected of smooth proper maps.  Verdicts are pass, violation or na;
synthetic inputs may legitimately fail them, so a violation is never an
exception."""

import logging
import random
from sympy import ImmutableMatrix, Matrix
from alexmod.pid import characteristic_polynomial, minimal_polynomial
from alexmod.ring import format_laurent, qt_to_laurent, squarefree_part, strip_roots_of_unity, yun_squarefree
from alexmod.utils import InputError, InternalError, default_seed, lcm

logger = logging.getLogger(__name__)

# Trials of the randomized joint-semisimplicity test.
SEMISIMPLE_TRIALS = 5

PASS = "pass"
VIOLATION = "violation"
NOT_APPLICABLE = "na"

class GeometryContext(object):
    """Hold the geometric data the checks compare against: torus dimension n,
    general fiber dimension d and user-asserted hypotheses."""

    def __init__(self, n, d, smooth_fiber=False, degree=None, smooth_total_space=False, proper=False):
        if not isinstance(n, int) or n < 1:
            raise InputError("Context needs a torus dimension n >= 1 (saw %s)" % repr(n))
        if not isinstance(d, int) or d < 0:
            raise InputError("Context needs a fiber dimension d >= 0 (saw %s)" % repr(d))
        self.n = n
        self.d = d
        self.smooth_fiber = bool(smooth_fiber)
        self.degree = degree
        self.smooth_total_space = bool(smooth_total_space)
        self.proper = bool(proper)

    def at_degree(self, i):
        return GeometryContext(self.n, self.d, self.smooth_fiber, i, self.smooth_total_space, self.proper)

    def vanishing_range(self):
        return self.n, self.n + 2*self.d

    def jordan_bound(self, i):
        "Return the largest Jordan block allowed in degree i."
        k = i - self.n
        if self.smooth_fiber:
            return min(-((-(k + 1)) // 2), self.d - (k - 1)//2)
        return 1 + min(k, 2*self.d - k)

    def to_dict(self):
        result = {"n": self.n, "d": self.d, "smooth_fiber": self.smooth_fiber,
                  "smooth_total_space": self.smooth_total_space, "proper": self.proper}
        if self.degree != None:
            result["degree"] = self.degree
        return result

class JordanProfile(object):
    """Hold the Jordan data of a monodromy operator sigma: N with sigma^N
    unipotent, the nilpotence index of sigma^N - I and the squarefree
    layers of its minimal polynomial."""

    def __init__(self, quasi_unipotent, order=None, nilpotence_index=None, layers=()):
        self.quasi_unipotent = quasi_unipotent
        self.order = order
        self.nilpotence_index = nilpotence_index
        self.layers = list(layers)

    def to_dict(self):
        return {"quasi_unipotent": self.quasi_unipotent, "N": self.order,
                "nilpotence_index": self.nilpotence_index,
                "layers": [{"factor": format_laurent(qt_to_laurent(f)), "multiplicity": m}
                           for f, m in self.layers]}

    def __repr__(self):
        return "JordanProfile(quasi_unipotent=%s, N=%s, nilpotence_index=%s)" % (
            self.quasi_unipotent, self.order, self.nilpotence_index)

class CheckResult(object):
    "Record one verdict with what was expected and what was observed."

    def __init__(self, name, status, expected, observed):
        if status not in [PASS, VIOLATION, NOT_APPLICABLE]:
            raise InternalError("Unknown check status %s" % repr(status))
        self.name = name
        self.status = status
        self.expected = expected
        self.observed = observed

    def to_dict(self):
        return {"name": self.name, "status": self.status, "expected": self.expected, "observed": self.observed}

    def __repr__(self):
        return "CheckResult(%r, %r)" % (self.name, self.status)

###########################################################################

def is_quasi_unipotent(module, word):
    "Return (True, N) if sigma^N is unipotent for the operator of word, else (False, None)."
    if module.qdim == 0:
        return True, 1
    sigma = module.operator(word)
    sqf = squarefree_part(characteristic_polynomial(sigma))
    _, rest, orders = strip_roots_of_unity(sqf)
    if rest.degree() > 0:
        return False, None
    return True, lcm(orders)

def _nilpotence_index(mat, size):
    power = ImmutableMatrix.eye(size)
    for m in range(size + 1):
        if all(e == 0 for e in power):
            return m
        power = power*mat
    raise InternalError("A unipotent operator failed to become nilpotent after %d steps" % size)

def jordan_profile(module, word):
    "Compute the Jordan profile of the operator of word on an Artinian module."
    ok, order = is_quasi_unipotent(module, word)
    if not ok:
        return JordanProfile(False)
    if module.qdim == 0:
        return JordanProfile(True, 1, 0, [])
    sigma = module.operator(word)
    index = _nilpotence_index(sigma**order - ImmutableMatrix.eye(module.qdim), module.qdim)
    layers = yun_squarefree(minimal_polynomial(sigma))
    factor_index = max(m for _, m in layers)
    if factor_index != index:
        raise InternalError("Nilpotence index %d disagrees with the squarefree multiplicity %d" %
                            (index, factor_index))
    return JordanProfile(True, order, index, layers)

def _squarefree(p):
    return p.degree() == squarefree_part(p).degree()

def is_semisimple(module, seed=None, trials=SEMISIMPLE_TRIALS):
    """Return True if the t-operators generate a semisimple algebra: every
    minimal polynomial is squarefree and, for n >= 2, so is that of a few
    seeded random combinations."""
    if module.qdim == 0:
        return True
    for op in module.t_ops:
        if not _squarefree(minimal_polynomial(op)):
            return False
    if module.nvars == 1:
        return True
    rng = random.Random(default_seed() if seed == None else seed)
    for trial in range(trials):
        coeffs = [rng.randint(-10, 10) for _ in module.t_ops]
        combo = Matrix.zeros(module.qdim, module.qdim)
        for c, op in zip(coeffs, module.t_ops):
            combo += c*op
        ok = _squarefree(minimal_polynomial(combo))
        logger.info("Semisimplicity trial %d with coefficients %s: %s", trial + 1, coeffs,
                    "squarefree" if ok else "not squarefree")
        if not ok:
            return False
    return True

###########################################################################

def check_vanishing_range(results, ctx):
    "Flag every degree outside [n, n + 2d] whose S0 module is nonzero."
    low, high = ctx.vanishing_range()
    checks = []
    for i in sorted(results):
        qdim = results[i].qdim
        if low <= i <= high:
            checks.append(CheckResult("vanishing[%d]" % i, PASS, "any", {"qdim": qdim}))
        else:
            status = PASS if qdim == 0 else VIOLATION
            checks.append(CheckResult("vanishing[%d]" % i, status, {"qdim": 0}, {"qdim": qdim}))
    return checks

def check_jordan_bound(profile, ctx, degree=None, name=None):
    "Compare a nilpotence index to the Jordan block bound for its degree."
    i = ctx.degree if degree == None else degree
    if i == None:
        raise InputError("The Jordan bound needs a degree")
    name = name or "jordan[%d]" % i
    if not profile.quasi_unipotent:
        return CheckResult(name, NOT_APPLICABLE, "quasi-unipotent", profile.to_dict())
    bound = ctx.jordan_bound(i)
    observed = {"nilpotence_index": profile.nilpotence_index, "N": profile.order}
    expected = {"max_block": bound, "smooth_fiber": ctx.smooth_fiber}
    if profile.nilpotence_index == 0:
        return CheckResult(name, PASS, expected, observed)
    status = PASS if profile.nilpotence_index <= bound else VIOLATION
    return CheckResult(name, status, expected, observed)

def check_quasi_unipotence(module, degree):
    "Check that every generator t_k acts quasi-unipotently."
    orders = []
    for k in range(1, module.nvars + 1):
        ok, order = is_quasi_unipotent(module, [k])
        if not ok:
            return CheckResult("quasi_unipotent[%d]" % degree, VIOLATION, "quasi-unipotent",
                               {"quasi_unipotent": False, "generator": k})
        orders.append(order)
    return CheckResult("quasi_unipotent[%d]" % degree, PASS, "quasi-unipotent",
                       {"quasi_unipotent": True, "N": lcm(orders)})

def check_semisimplicity(module, ctx, degree, seed=None):
    "Report semisimplicity; it is expected only of smooth proper maps."
    observed = {"semisimple": is_semisimple(module, seed=seed)}
    name = "semisimple[%d]" % degree
    if not (ctx.smooth_total_space and ctx.proper):
        return CheckResult(name, NOT_APPLICABLE, "no expectation", observed)
    return CheckResult(name, PASS if observed["semisimple"] else VIOLATION, {"semisimple": True}, observed)

def run_checks(results, ctx, seed=None):
    """Run every check on a map degree -> ArtinianModule and return the
    report {"checks": [...], "context": {...}} with a stable ordering."""
    for i, module in results.items():
        if module.nvars != ctx.n:
            raise InputError("Module in degree %d has %d variables but the context says n = %d" %
                             (i, module.nvars, ctx.n))
    checks = check_vanishing_range(results, ctx)
    for i in sorted(results):
        module = results[i]
        if module.qdim == 0:
            continue
        checks.append(check_quasi_unipotence(module, i))
        for k in range(1, module.nvars + 1):
            name = "jordan[%d]" % i if module.nvars == 1 else "jordan[%d][t%d]" % (i, k)
            checks.append(check_jordan_bound(jordan_profile(module, [k]), ctx, i, name))
        checks.append(check_semisimplicity(module, ctx, i, seed=seed))
    failed = [c.name for c in checks if c.status == VIOLATION]
    logger.info("Ran %d checks, %d violations", len(checks), len(failed))
    return {"checks": [c.to_dict() for c in checks], "context": ctx.to_dict()}

def has_violation(report):
    return any(c["status"] == VIOLATION for c in report["checks"])
