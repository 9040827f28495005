###################################
# Mellin transforms, fibrations   #
###################################

"""Mellin transforms of local systems on the torus, with the Koszul
complex of the operators t_j*M_j - I as an independent check, and the
fibration shortcuts: S0 H^i(X, L_X) as the kernel-fixed part of the fiber
cohomology, torsion homology as kernel coinvariants (n = 1) and the
removal-of-fiber comparison."""

import itertools
import logging
from sympy import ImmutableMatrix, Matrix
from alexmod.checks import CheckResult, PASS, VIOLATION
from alexmod.groebner import generic_rank, homology_module, is_zero_module, maximal_artinian
from alexmod.pid import ArtinianModule, invariant_factors, modules_similar
from alexmod.ring import LaurentPoly, format_laurent, laurent_matmul, qt_to_laurent
from alexmod.utils import (InputError, InternalError, complement_basis, coordinates, identity,
                           intersect_spans, is_zero_matrix, kernel_basis, restrict_operator,
                           span_basis, sum_spans, word_matrix)

logger = logging.getLogger(__name__)

class LocalSystem(object):
    "Represent a Q-local system on an n-torus by n commuting invertible monodromy matrices."

    def __init__(self, n, monodromies):
        if not isinstance(n, int) or n < 1:
            raise InputError("Torus dimension must be a positive integer (saw %s)" % repr(n))
        mats = [ImmutableMatrix(m) for m in monodromies]
        if len(mats) != n:
            raise InputError("Expected %d monodromy matrices but saw %d" % (n, len(mats)))
        rank = mats[0].rows
        for k, m in enumerate(mats):
            if m.shape != (rank, rank):
                raise InputError("Monodromy %d has shape %s, not %dx%d" % (k + 1, m.shape, rank, rank))
            if rank > 0 and m.det() == 0:
                raise InputError("Monodromy %d is not invertible" % (k + 1))
        for a, b in itertools.combinations(range(n), 2):
            if mats[a]*mats[b] != mats[b]*mats[a]:
                raise InputError("Monodromies %d and %d do not commute" % (a + 1, b + 1))
        self.n = n
        self.rank = rank
        self.monodromies = tuple(mats)

    def __repr__(self):
        return "LocalSystem(n=%d, rank=%d)" % (self.n, self.rank)

def mellin_stalk(local):
    "Return (n, stalk) where the stalk carries the inverse monodromy action."
    ops = [m.inv() for m in local.monodromies] if local.rank > 0 else list(local.monodromies)
    return local.n, ArtinianModule(local.n, local.rank, ops)

class KoszulMellinComplex(object):
    """Hold the Koszul complex over A of the commuting operators
    delta_j = t_j*M_j - I on A^r: K^p is a sum of copies of A^r indexed by
    the p-subsets of {1..n}."""

    def __init__(self, local):
        n, r = local.n, local.rank
        self.nvars = n
        self.local = local
        self.subsets = [list(itertools.combinations(range(n), p)) for p in range(n + 1)]
        deltas = []
        for j, m in enumerate(local.monodromies):
            tj = LaurentPoly.variable(n, j)
            deltas.append([[tj*m[a, b] - (1 if a == b else 0) for b in range(r)] for a in range(r)])
        self.differentials = {}
        for p in range(n):
            self.differentials[p] = self._differential(p, deltas, r)
        for p in range(n - 1):
            prod = laurent_matmul(self.differentials[p + 1], self.differentials[p], n, ncols=self.rank(p))
            if any(not e.is_zero() for row in prod for e in row):
                raise InternalError("Koszul differential does not square to zero in degree %d" % p)

    def rank(self, p):
        if p < 0 or p > self.nvars:
            return 0
        return len(self.subsets[p])*self.local.rank

    def _differential(self, p, deltas, r):
        n = self.nvars
        source = dict((s, k) for k, s in enumerate(self.subsets[p]))
        target = dict((s, k) for k, s in enumerate(self.subsets[p + 1]))
        rows = [[LaurentPoly.zero(n)]*self.rank(p) for _ in range(self.rank(p + 1))]
        for s, col in source.items():
            for j in range(n):
                if j in s:
                    continue
                sign = (-1)**sum(1 for k in s if k < j)
                row = target[tuple(sorted(s + (j,)))]
                for a in range(r):
                    for b in range(r):
                        rows[row*r + a][col*r + b] = deltas[j][a][b]*sign
        return rows

    def differential(self, p):
        "Return d^p: K^p -> K^(p+1) as a list of rows."
        return self.differentials[p]

def koszul_mellin(local, i):
    "Present the i-th cohomology of the Koszul complex of a local system."
    n = local.n
    if i < 0 or i > n:
        raise InputError("Degree %d is out of range 0..%d" % (i, n))
    cx = KoszulMellinComplex(local)
    d_out = cx.differential(i) if i < n else []
    d_in = cx.differential(i - 1) if i > 0 else [[] for _ in range(cx.rank(0))]
    return homology_module(d_in, d_out, cx.rank(i), cx.rank(i - 1), n)

def mellin_agrees(local):
    """Compare the Koszul cohomology with the stalk formula: zero below
    degree n and, in degree n, the inverse monodromies up to conjugacy."""
    n, stalk = mellin_stalk(local)
    for i in range(n):
        if not is_zero_module(koszul_mellin(local, i)):
            return False
    top = maximal_artinian(koszul_mellin(local, n))
    return modules_similar(top, stalk)

###########################################################################
# Fibrations.

def _integer_vector(value, n, what):
    value = list(value)
    if len(value) != n or not all(isinstance(z, int) and not isinstance(z, bool) for z in value):
        raise InputError("%s must be a list of %d integers (saw %s)" % (what, n, value))
    return tuple(value)

def _invert_word(word):
    return [-w for w in reversed(word)]

def basis_words(images, n):
    """Return words w_1, ..., w_n in the generators with image e_i, or raise
    InputError if the images do not generate Z^n."""
    pool = [(list(v), [k + 1]) for k, v in enumerate(images)]
    pivots = []
    for c in range(n):
        # Euclid on coordinate c among the vectors not yet used as pivots.
        while True:
            live = [e for e in pool if e[0][c] != 0]
            if len(live) <= 1:
                break
            live.sort(key=lambda e: abs(e[0][c]))
            small = live[0]
            for other in live[1:]:
                q = other[0][c] // small[0][c]
                other[0][:] = [x - q*y for x, y in zip(other[0], small[0])]
                other[1].extend((_invert_word(small[1]) if q > 0 else small[1])*abs(q))
        live = [e for e in pool if e[0][c] != 0]
        if len(live) == 0 or abs(live[0][0][c]) != 1:
            raise InputError("The generator images do not generate Z^%d" % n)
        pivot = live[0]
        pool.remove(pivot)
        if pivot[0][c] < 0:
            pivot = ([-x for x in pivot[0]], _invert_word(pivot[1]))
        pivots.append(pivot)
    words = [None]*n
    for c in range(n - 1, -1, -1):
        vec, word = list(pivots[c][0]), list(pivots[c][1])
        for k in range(c + 1, n):
            coeff = vec[k]
            if coeff != 0:
                step = words[k] if coeff > 0 else _invert_word(words[k])
                word = word + _invert_word(step)*abs(coeff)
        words[c] = word
    return words

class FibrationModel(object):
    """Describe a locally trivial fibration over the torus minus a
    hypersurface: loop generators with their images in Z^n, words normally
    generating the kernel K, and per fiber degree the monodromy matrices of
    every generator on H^j(F, Q) (optionally also on H_j(F, Q))."""

    def __init__(self, n, generators, images, kernel_words, degrees, fiber_betti=None,
                 homology=None, hypersurface=True):
        if not isinstance(n, int) or n < 1:
            raise InputError("Torus dimension must be a positive integer (saw %s)" % repr(n))
        if len(images) != len(generators):
            raise InputError("Expected one image per generator (%d vs. %d)" % (len(images), len(generators)))
        self.n = n
        self.generators = list(generators)
        self.images = [_integer_vector(v, n, "Image of %s" % g) for v, g in zip(images, generators)]
        self.words = basis_words(self.images, n)
        self.kernel_words = []
        for word in kernel_words:
            word = list(word)
            image = [0]*n
            for w in word:
                if not isinstance(w, int) or w == 0 or abs(w) > len(generators):
                    raise InputError("Kernel word %s uses an unknown generator index %s" % (word, repr(w)))
                sign = 1 if w > 0 else -1
                image = [x + sign*y for x, y in zip(image, self.images[abs(w) - 1])]
            if any(image):
                raise InputError("Kernel word %s maps to %s, not to 0" % (word, image))
            self.kernel_words.append(word)
        self.degrees = self._matrices(degrees, "cohomology")
        self.homology = self._matrices(homology or {}, "homology")
        if fiber_betti == None:
            top = max(list(self.degrees) + [-1])
            fiber_betti = [self.degrees[j][0].rows if j in self.degrees else 0 for j in range(top + 1)]
        self.fiber_betti = list(fiber_betti)
        for j, mats in self.degrees.items():
            if j < len(self.fiber_betti) and self.fiber_betti[j] != mats[0].rows:
                raise InputError("Fiber degree %d has %dx%d matrices but b_%d = %d" %
                                 (j, mats[0].rows, mats[0].rows, j, self.fiber_betti[j]))
        self.hypersurface = bool(hypersurface)

    def _matrices(self, degrees, what):
        result = {}
        for j, mats in degrees.items():
            mats = [ImmutableMatrix(m) for m in mats]
            if len(mats) != len(self.generators):
                raise InputError("Fiber %s degree %s needs one matrix per generator" % (what, j))
            size = mats[0].rows
            for k, m in enumerate(mats):
                if m.shape != (size, size):
                    raise InputError("Matrix of %s in fiber %s degree %s is not %dx%d" %
                                     (self.generators[k], what, j, size, size))
                if size > 0 and m.det() == 0:
                    raise InputError("Matrix of %s in fiber %s degree %s is not invertible" %
                                     (self.generators[k], what, j))
            result[int(j)] = mats
        return result

    def monodromy(self, j, word, homology=False):
        "Return the matrix of a word on H^j(F) (or H_j(F))."
        mats = self.matrices(j, homology)
        return word_matrix(mats, word, mats[0].rows)

    def matrices(self, j, homology=False):
        "Return the generator matrices on H^j(F), or on H_j(F) (by default the dual action)."
        if homology:
            if j in self.homology:
                return self.homology[j]
            if j in self.degrees:
                return [m.inv().T for m in self.degrees[j]]
            raise InputError("No fiber homology data in degree %d" % j)
        if j not in self.degrees:
            raise InputError("No fiber cohomology data in degree %d" % j)
        return self.degrees[j]

    def __repr__(self):
        return "FibrationModel(n=%d, generators=%d, kernel_words=%d)" % (
            self.n, len(self.generators), len(self.kernel_words))

def fixed_subspace(generator_mats, kernel_mats, size):
    """Return a basis of the largest subspace fixed pointwise by kernel_mats
    and mapped onto itself by generator_mats."""
    space = identity(size)
    for k in kernel_mats:
        space = intersect_spans(space, kernel_basis(k - identity(size)))
    steps = 0
    while True:
        new = space
        for g in generator_mats:
            new = intersect_spans(new, span_basis(g*space))
            new = intersect_spans(new, span_basis(g.inv()*space))
        steps += 1
        if new.cols == space.cols:
            logger.debug("Fixed subspace of dimension %d after %d rounds", new.cols, steps)
            return Matrix(space)
        space = new

def kernel_invariants(fibration, i):
    "Return S0 H^i(X, L_X) as the K-fixed part of H^(i-n)(F) with t_k acting as the monodromy."
    n = fibration.n
    j = i - n
    mats = fibration.matrices(j, False)
    size = mats[0].rows
    kernel_mats = [word_matrix(mats, w, size) for w in fibration.kernel_words]
    space = fixed_subspace(mats, kernel_mats, size)
    if space.cols == 0:
        return ArtinianModule.zero(n)
    ops = [restrict_operator(word_matrix(mats, w, size), space) for w in fibration.words]
    return ArtinianModule(n, space.cols, ops)

def invariants_factor_through_torus(fibration, i):
    """Return True if, on the K-fixed part of H^(i-n)(F), every generator acts
    as the monomial in t_1, ..., t_n given by its image."""
    n = fibration.n
    mats = fibration.matrices(i - n, False)
    size = mats[0].rows
    kernel_mats = [word_matrix(mats, w, size) for w in fibration.kernel_words]
    space = fixed_subspace(mats, kernel_mats, size)
    if space.cols == 0:
        return True
    ops = [restrict_operator(word_matrix(mats, w, size), space) for w in fibration.words]
    for g, image in zip(mats, fibration.images):
        word = [k + 1 if z > 0 else -(k + 1) for k, z in enumerate(image) for _ in range(abs(z))]
        if not is_zero_matrix(restrict_operator(g, space) - word_matrix(ops, word, space.cols)):
            return False
    return True

def coinvariant_subspace(generator_mats, kernel_mats, size):
    "Return a basis of the smallest generator-stable subspace containing every (k - I)v."
    space = Matrix.zeros(size, 0)
    for k in kernel_mats:
        space = sum_spans(space, span_basis(k - identity(size)))
    while True:
        new = space
        for g in generator_mats:
            new = sum_spans(new, span_basis(g*space))
            new = sum_spans(new, span_basis(g.inv()*space))
        if new.cols == space.cols:
            return space
        space = new

def kernel_coinvariants(fibration, i):
    "Return Tors H_i(X, L_X) as the K-coinvariants of H_i(F); only for n = 1."
    if fibration.n != 1:
        raise InputError("Kernel coinvariants are only defined for n = 1 (saw n = %d)" % fibration.n)
    mats = fibration.matrices(i, True)
    size = mats[0].rows
    kernel_mats = [word_matrix(mats, w, size) for w in fibration.kernel_words]
    sub = coinvariant_subspace(mats, kernel_mats, size)
    quotient = complement_basis(sub, size)
    if quotient.cols == 0:
        return ArtinianModule.zero(1)
    sigma = word_matrix(mats, fibration.words[0], size)
    coords = coordinates(Matrix.hstack(sub, quotient), sigma*quotient)
    return ArtinianModule(1, quotient.cols, [coords[sub.cols:, :]])

###########################################################################

def _decomposition_summary(dec):
    return {"free_rank": dec.free_rank,
            "factors": [format_laurent(qt_to_laurent(d)) for d in dec.factors]}

def remove_fiber_check(h_x, h_y, fiber_betti, n):
    """Check H(Y) = H(X) + A^b for Y the complement of a fiber: exact
    invariant factors when n = 1, generic rank and S0 data otherwise."""
    if h_x.nvars != n or h_y.nvars != n:
        raise InputError("Variable-count mismatch (modules have %d and %d variables, n = %d)" %
                         (h_x.nvars, h_y.nvars, n))
    if n == 1:
        dx, dy = invariant_factors(h_x), invariant_factors(h_y)
        expected = _decomposition_summary(dx)
        expected["free_rank"] += fiber_betti
        observed = _decomposition_summary(dy)
        status = PASS if expected == observed else VIOLATION
        return CheckResult("remove_fiber", status, expected, observed)
    rx, ry = generic_rank(h_x), generic_rank(h_y)
    sx, sy = maximal_artinian(h_x), maximal_artinian(h_y)
    expected = {"free_rank": rx + fiber_betti, "s0_qdim": sx.qdim}
    observed = {"free_rank": ry, "s0_qdim": sy.qdim}
    ok = expected == observed and modules_similar(sx, sy)
    return CheckResult("remove_fiber", PASS if ok else VIOLATION, expected, observed)
