###################################
# Modules over Q[t^+-1]           #
###################################

"""Module theory over the Euclidean domain A1 = Q[t^+-1]: Smith normal
form with transformation matrices, invariant factors, the torsion
submodule as a finite-dimensional Q-vector space with its t-operator, and
similarity invariants of rational matrices."""

import logging
from sympy import ImmutableMatrix, Matrix, Rational
from alexmod.ring import LaurentPoly, _as_qt, laurent_matmul, qt_degree, qt_one, qt_poly, qt_to_laurent
from alexmod.utils import InputError, word_matrix

logger = logging.getLogger(__name__)

class FPModule(object):
    """Represent a finitely presented module over Q[t1^+-1, ..., tn^+-1]
    (or, for the Groebner routines, over Q[x1, ..., xn]) as the cokernel
    of a rank x ncols presentation matrix whose columns are relations."""

    def __init__(self, nvars, rank, presentation, ncols=None):
        if rank < 0:
            raise InputError("Negative module rank %d" % rank)
        if len(presentation) != rank:
            raise InputError("Presentation has %d rows but the module has %d generators" % (len(presentation), rank))
        if ncols == None:
            ncols = len(presentation[0]) if rank > 0 else 0
        rows = []
        for row in presentation:
            if len(row) != ncols:
                raise InputError("Presentation rows must all have %d entries" % ncols)
            rows.append(tuple(_as_laurent(e, nvars) for e in row))
        self.nvars = nvars
        self.rank = rank
        self.ncols = ncols
        self.presentation = tuple(rows)

    @classmethod
    def from_columns(cls, nvars, rank, columns):
        "Build a module from a list of relation vectors."
        rows = [[col[i] for col in columns] for i in range(rank)]
        return cls(nvars, rank, rows, ncols=len(columns))

    @classmethod
    def free(cls, nvars, rank):
        return cls(nvars, rank, [[] for _ in range(rank)], ncols=0)

    def column(self, j):
        return tuple(self.presentation[i][j] for i in range(self.rank))

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def rows(self):
        return [list(r) for r in self.presentation]

    def __repr__(self):
        return "FPModule(nvars=%d, rank=%d, relations=%d)" % (self.nvars, self.rank, self.ncols)

def _as_laurent(e, nvars):
    if isinstance(e, LaurentPoly):
        if e.nvars != nvars:
            raise InputError("Entry %s has %d variables, not %d" % (e, e.nvars, nvars))
        return e
    return LaurentPoly.constant(nvars, e)

class InvariantFactorDecomposition(object):
    "Represent A^free_rank + A/(d1) + ... + A/(dk) with d1 | d2 | ... | dk."

    def __init__(self, free_rank, factors):
        factors = list(factors)
        for i, d in enumerate(factors):
            if qt_degree(d) < 1 or d.LC() != 1 or d.eval(0) == 0:
                raise InputError("Invariant factor %s is not a monic nonunit core" % d.as_expr())
            if i > 0 and not d.rem(factors[i - 1]).is_zero:
                raise InputError("Invariant factors violate the divisibility chain")
        self.free_rank = free_rank
        self.factors = tuple(factors)

    def torsion_dimension(self):
        return sum(d.degree() for d in self.factors)

    def alexander_polynomial(self):
        "Return the product of the invariant factors (the order of the torsion)."
        result = qt_one()
        for d in self.factors:
            result = result*d
        return result

    def __eq__(self, other):
        return (isinstance(other, InvariantFactorDecomposition) and
                self.free_rank == other.free_rank and
                len(self.factors) == len(other.factors) and
                all(a == b for a, b in zip(self.factors, other.factors)))

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "InvariantFactorDecomposition(free_rank=%d, factors=[%s])" % (
            self.free_rank, ", ".join(str(d.as_expr()) for d in self.factors))

class ArtinianModule(object):
    """Represent a finite-dimensional Q-vector space with n commuting
    invertible operators, the actions of t1, ..., tn."""

    def __init__(self, nvars, qdim, t_ops):
        t_ops = [ImmutableMatrix(op) for op in t_ops]
        if len(t_ops) != nvars:
            raise InputError("Expected %d t-operators but saw %d" % (nvars, len(t_ops)))
        for i, op in enumerate(t_ops):
            if op.shape != (qdim, qdim):
                raise InputError("t%d has shape %s, not %dx%d" % (i + 1, op.shape, qdim, qdim))
            if qdim > 0 and op.det() == 0:
                raise InputError("t%d is not invertible" % (i + 1))
        for i in range(nvars):
            for j in range(i + 1, nvars):
                if t_ops[i]*t_ops[j] != t_ops[j]*t_ops[i]:
                    raise InputError("t%d and t%d do not commute" % (i + 1, j + 1))
        self.nvars = nvars
        self.qdim = qdim
        self.t_ops = tuple(t_ops)

    @classmethod
    def zero(cls, nvars):
        return cls(nvars, 0, [ImmutableMatrix.zeros(0, 0)]*nvars)

    def is_zero(self):
        return self.qdim == 0

    def operator(self, word):
        "Return the operator of a word in 1-based signed variable indices."
        return ImmutableMatrix(word_matrix(self.t_ops, word, self.qdim))

    def inverse(self):
        "Return the module with every t_i replaced by t_i^-1 (the conjugate structure)."
        if self.qdim == 0:
            return self
        return ArtinianModule(self.nvars, self.qdim, [op.inv() for op in self.t_ops])

    def transpose_inverse(self):
        "Return the Q-dual module with its contragredient action."
        if self.qdim == 0:
            return self
        return ArtinianModule(self.nvars, self.qdim, [op.inv().T for op in self.t_ops])

    def __repr__(self):
        return "ArtinianModule(nvars=%d, qdim=%d)" % (self.nvars, self.qdim)

###########################################################################
# Smith normal form over Q[t].

def _const(c):
    return qt_poly({0: c})

class _SmithWork(object):
    """Hold the working state of a diagonalization over Q[t].  Row
    operations are recorded in u and column operations in v and vinv so
    that u*P*v = a and v*vinv = I throughout."""

    def __init__(self, rows, nrows, ncols, track=True):
        self.a = [list(r) for r in rows]
        self.m = nrows
        self.n = ncols
        self.track = track
        zero, one = qt_poly({}), qt_one()
        if track:
            self.u = [[one if i == j else zero for j in range(nrows)] for i in range(nrows)]
            self.v = [[one if i == j else zero for j in range(ncols)] for i in range(ncols)]
            self.vinv = [[one if i == j else zero for j in range(ncols)] for i in range(ncols)]

    def swap_rows(self, i, j):
        if i == j:
            return
        self.a[i], self.a[j] = self.a[j], self.a[i]
        if self.track:
            self.u[i], self.u[j] = self.u[j], self.u[i]

    def swap_cols(self, i, j):
        if i == j:
            return
        for row in self.a:
            row[i], row[j] = row[j], row[i]
        if self.track:
            for row in self.v:
                row[i], row[j] = row[j], row[i]
            self.vinv[i], self.vinv[j] = self.vinv[j], self.vinv[i]

    def add_row(self, dst, src, q):
        "Row dst += q * row src."
        self.a[dst] = [x + q*y for x, y in zip(self.a[dst], self.a[src])]
        if self.track:
            self.u[dst] = [x + q*y for x, y in zip(self.u[dst], self.u[src])]

    def add_col(self, dst, src, q):
        "Column dst += q * column src."
        for row in self.a:
            row[dst] = row[dst] + q*row[src]
        if self.track:
            for row in self.v:
                row[dst] = row[dst] + q*row[src]
            self.vinv[src] = [x - q*y for x, y in zip(self.vinv[src], self.vinv[dst])]

    def scale_row(self, i, c):
        c = _const(c)
        self.a[i] = [c*x for x in self.a[i]]
        if self.track:
            self.u[i] = [c*x for x in self.u[i]]

    def pivot(self, k):
        "Find the nonzero entry of minimal degree in the trailing submatrix, row-major on ties."
        best = None
        for i in range(k, self.m):
            for j in range(k, self.n):
                e = self.a[i][j]
                if e.is_zero:
                    continue
                key = (e.degree(), i, j)
                if best == None or key < best:
                    best = key
        return None if best == None else best[1:]

    def eliminate(self, k):
        "Clear row k and column k against the pivot; return True if nothing was left over."
        clean = True
        piv = self.a[k][k]
        for i in range(k + 1, self.m):
            if not self.a[i][k].is_zero:
                q, r = self.a[i][k].div(piv)
                self.add_row(i, k, -q)
                if not r.is_zero:
                    clean = False
        for j in range(k + 1, self.n):
            if not self.a[k][j].is_zero:
                q, r = self.a[k][j].div(piv)
                self.add_col(j, k, -q)
                if not r.is_zero:
                    clean = False
        return clean

    def nondivisible_row(self, k):
        "Return a row holding an entry the pivot fails to divide, or None."
        piv = self.a[k][k]
        for i in range(k + 1, self.m):
            for j in range(k + 1, self.n):
                if not self.a[i][j].is_zero and not self.a[i][j].rem(piv).is_zero:
                    return i
        return None

    def run(self):
        "Diagonalize; return the number of nonzero diagonal entries."
        k = 0
        while k < min(self.m, self.n):
            while True:
                piv = self.pivot(k)
                if piv == None:
                    return k
                self.swap_rows(k, piv[0])
                self.swap_cols(k, piv[1])
                if not self.eliminate(k):
                    continue
                bad = self.nondivisible_row(k)
                if bad == None:
                    break
                self.add_row(k, bad, qt_one())
            self.scale_row(k, 1/Rational(self.a[k][k].LC()))
            k += 1
        return k

def _valuation(p):
    "Return the exponent of the largest power of t dividing a nonzero polynomial."
    return min(k for (k,), c in p.terms() if c != 0)

class SmithForm(object):
    """Hold U*P*V = D over Q[t^+-1] with U, V invertible, V^-1 and the
    nonzero diagonal entries (monic, nonzero constant term)."""

    def __init__(self, u, d, v, vinv, diagonal):
        self.u = u
        self.d = d
        self.v = v
        self.vinv = vinv
        self.diagonal = diagonal

    @property
    def rank(self):
        return len(self.diagonal)

def smith_decomposition(rows, ncols=None):
    "Compute a SmithForm of a matrix (list of rows) over Q[t^+-1]."
    nrows = len(rows)
    if ncols == None:
        ncols = len(rows[0]) if nrows > 0 else 0
    for row in rows:
        if len(row) != ncols:
            raise InputError("Ragged matrix passed to the Smith normal form")
        for e in row:
            if e.nvars != 1:
                raise InputError("Smith normal form requires univariate entries (saw %d variables)" % e.nvars)

    # Multiply each row by a power of t (a unit) to land in Q[t].
    shifts = []
    poly_rows = []
    for row in rows:
        nonzero = [e for e in row if not e.is_zero()]
        k = min(e.min_exponents()[0] for e in nonzero) if nonzero else 0
        shifts.append(-k)
        poly_rows.append([_as_qt(e.shift((-k,))) for e in row])
    work = _SmithWork(poly_rows, nrows, ncols)
    rank = work.run()
    logger.debug("Smith normal form of a %dx%d matrix has rank %d", nrows, ncols, rank)

    # Strip powers of t from the diagonal by scaling rows by t^-v.
    strip = [0]*nrows
    diagonal = []
    for k in range(rank):
        val = _valuation(work.a[k][k])
        strip[k] = -val
        diagonal.append(work.a[k][k].exquo(qt_poly({val: 1})))
    u = [[qt_to_laurent(work.u[i][j], strip[i] + shifts[j]) for j in range(nrows)] for i in range(nrows)]
    zero = LaurentPoly.zero(1)
    d = [[qt_to_laurent(diagonal[i]) if i == j and i < rank else zero for j in range(ncols)]
         for i in range(nrows)]
    v = [[qt_to_laurent(e) for e in row] for row in work.v]
    vinv = [[qt_to_laurent(e) for e in row] for row in work.vinv]
    return SmithForm(u, d, v, vinv, diagonal)

def smith_normal_form(rows, ncols=None):
    "Return (U, D, V) with U*P*V = D diagonal, d1 | d2 | ..., each nonzero d_i monic with d_i(0) != 0."
    sf = smith_decomposition(rows, ncols)
    return sf.u, sf.d, sf.v

def invariant_factors(module):
    "Decompose a module over Q[t^+-1] into free rank and invariant factors."
    if module.nvars != 1:
        raise InputError("Invariant factors require a univariate module (saw %d variables)" % module.nvars)
    sf = smith_decomposition(module.rows(), module.ncols)
    factors = [d for d in sf.diagonal if d.degree() > 0]
    return InvariantFactorDecomposition(module.rank - sf.rank, factors)

def companion_matrix(p):
    "Return the matrix of multiplication by t on Q[t]/(p) in the basis 1, t, ..., t^(m-1)."
    m = p.degree()
    coeffs = {k: Rational(c) for (k,), c in p.terms()}
    mat = Matrix.zeros(m, m)
    for i in range(1, m):
        mat[i, i - 1] = 1
    for i in range(m):
        mat[i, m - 1] = -coeffs.get(i, 0)
    return mat

def torsion_summary(module):
    "Realize the torsion submodule of a univariate module with its t-operator."
    dec = invariant_factors(module)
    return artinian_from_factors(dec.factors)

def artinian_from_factors(factors):
    "Build the block-diagonal companion realization of A/(d1) + ... + A/(dk)."
    qdim = sum(d.degree() for d in factors)
    op = Matrix.zeros(qdim, qdim)
    offset = 0
    for d in factors:
        m = d.degree()
        op[offset:offset + m, offset:offset + m] = companion_matrix(d)
        offset += m
    return ArtinianModule(1, qdim, [op])

###########################################################################
# Similarity invariants of rational matrices.

def similarity_invariants(mat):
    """Return the nonunit invariant factors of t*I - mat over Q[t], which
    determine mat up to conjugacy (rational canonical form)."""
    mat = Matrix(mat)
    size = mat.rows
    if mat.cols != size:
        raise InputError("Similarity invariants need a square matrix")
    rows = [[qt_poly({1: 1, 0: -mat[i, j]}) if i == j else _const(-mat[i, j]) for j in range(size)]
            for i in range(size)]
    work = _SmithWork(rows, size, size, track=False)
    work.run()
    return [work.a[k][k] for k in range(size) if work.a[k][k].degree() > 0]

def minimal_polynomial(mat):
    invs = similarity_invariants(mat)
    return invs[-1] if invs else qt_one()

def characteristic_polynomial(mat):
    result = qt_one()
    for d in similarity_invariants(mat):
        result = result*d
    return result

def are_similar(a, b):
    "Return True if two rational matrices are conjugate over Q."
    if a.shape != b.shape:
        return False
    ia = similarity_invariants(a)
    ib = similarity_invariants(b)
    return len(ia) == len(ib) and all(x == y for x, y in zip(ia, ib))

def modules_similar(m1, m2):
    "Compare two Artinian modules operator by operator up to conjugacy."
    if m1.nvars != m2.nvars or m1.qdim != m2.qdim:
        return False
    return all(are_similar(a, b) for a, b in zip(m1.t_ops, m2.t_ops))

###########################################################################

def pid_homology(d_in, d_out, size, in_cols):
    """Present ker(d_out) / im(d_in) over Q[t^+-1], where d_in maps into
    A^size (size x in_cols) and d_out maps out of it (any rows x size)."""
    sf = smith_decomposition(d_out, size)
    r = sf.rank
    coords = laurent_matmul(sf.vinv[r:], d_in, 1, ncols=in_cols)
    return FPModule(1, size - r, coords, ncols=in_cols)

def is_zero_module(module):
    "Return True if a univariate module vanishes."
    dec = invariant_factors(module)
    return dec.free_rank == 0 and len(dec.factors) == 0
