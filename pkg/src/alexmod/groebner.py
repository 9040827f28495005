###################################
# Groebner bases for modules      #
###################################

"""Buchberger's algorithm for submodules of free modules over
R = Q[x1, ..., xn] and the constructions built on it: syzygies, free
resolutions, colon and saturation, annihilators, Krull dimension, the top
Ext module and the maximal Artinian submodule of a module over the Laurent
ring A = R[s^-1], s = x1*...*xn.

A vector of R^rank is stored as a dict mapping terms (position, exponents)
to nonzero coefficients in SymPy's QQ domain.  Lower positions dominate
higher ones under position-over-term orders, so the leading position block
can be eliminated by placing it first."""

import itertools
import logging
from sympy import QQ
from sympy.polys.monomials import monomial_div, monomial_divides, monomial_lcm, monomial_mul
from sympy.polys.orderings import grevlex, lex
from sympy.polys.rings import ring
from alexmod.pid import ArtinianModule, FPModule, pid_homology, torsion_summary
from alexmod.ring import LaurentPoly, laurent_matmul
from alexmod.utils import InputError, InternalError

logger = logging.getLogger(__name__)

class MonomialOrder(object):
    "Order the terms x^a*e_j of a free module by a monomial order and the position j."

    monomial_orders = {"lex": lex, "grevlex": grevlex}

    def __init__(self, kind="grevlex", module="pot"):
        if kind not in self.monomial_orders:
            raise InputError("Unknown monomial order %s (expected lex or grevlex)" % repr(kind))
        if module not in ["pot", "top"]:
            raise InputError("Unknown module order %s (expected pot or top)" % repr(module))
        self.kind = kind
        self.module = module
        self._key = self.monomial_orders[kind]

    def term_key(self, term):
        "Return a sort key under which larger terms compare greater."
        pos, mon = term
        if self.module == "pot":
            return (-pos, self._key(mon))
        return (self._key(mon), -pos)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and (self.kind, self.module) == (other.kind, other.module)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "MonomialOrder(%r, %r)" % (self.kind, self.module)

DEFAULT_ORDER = MonomialOrder("grevlex", "pot")

###########################################################################
# Sparse vector arithmetic.

def _lead(v, order):
    return max(v, key=order.term_key)

def _sub_multiple(p, c, mon, g):
    "In place, p -= c * x^mon * g."
    for (pos, m), a in g.items():
        t = (pos, monomial_mul(m, mon))
        val = p.get(t, QQ.zero) - c*a
        if val:
            p[t] = val
        else:
            p.pop(t, None)

def _monic(v, order):
    c = v[_lead(v, order)]
    return {t: a/c for t, a in v.items()}

def _normal_form(v, basis, order):
    "Fully reduce v modulo basis, a list of (vector, lead term) with monic vectors."
    p = dict(v)
    r = {}
    while p:
        lt = _lead(p, order)
        c = p[lt]
        for g, glt in basis:
            if glt[0] != lt[0]:
                continue
            q = monomial_div(lt[1], glt[1])
            if q != None:
                _sub_multiple(p, c, q, g)
                break
        else:
            r[lt] = c
            del p[lt]
    return r

def _s_vector(f, flt, g, glt):
    m = monomial_lcm(flt[1], glt[1])
    s = {}
    _sub_multiple(s, -QQ.one, monomial_div(m, flt[1]), f)
    _sub_multiple(s, QQ.one, monomial_div(m, glt[1]), g)
    return s

def _chain_skip(i, j, basis, pending):
    "Buchberger's chain criterion."
    li, lj = basis[i][1], basis[j][1]
    lcm = monomial_lcm(li[1], lj[1])
    for k, (_, lk) in enumerate(basis):
        if k == i or k == j or lk[0] != li[0]:
            continue
        if (monomial_divides(lk[1], lcm) and (min(i, k), max(i, k)) not in pending and
                (min(j, k), max(j, k)) not in pending):
            return True
    return False

def _buchberger(vectors, order, single):
    """Return a reduced Groebner basis of the submodule spanned by vectors as
    a list of (monic vector, lead term), largest lead first.  single enables
    the coprime-leads criterion, which is valid only for ideals."""
    basis = []
    pairs = []

    def add(h):
        h = _monic(h, order)
        hl = _lead(h, order)
        k = len(basis)
        basis.append((h, hl))
        for i in range(k):
            if basis[i][1][0] == hl[0]:
                pairs.append((i, k))

    for v in vectors:
        h = _normal_form(v, basis, order)
        if h:
            add(h)
    considered = 0
    while pairs:
        # Normal strategy: the pair with the smallest lcm goes first.
        def lcm_key(p):
            (_, li), (_, lj) = basis[p[0]], basis[p[1]]
            return order.term_key((li[0], monomial_lcm(li[1], lj[1])))
        best = min(range(len(pairs)), key=lambda idx: lcm_key(pairs[idx]))
        i, j = pairs.pop(best)
        (fi, li), (fj, lj) = basis[i], basis[j]
        if single and all(a == 0 or b == 0 for a, b in zip(li[1], lj[1])):
            continue
        if _chain_skip(i, j, basis, set(pairs)):
            continue
        considered += 1
        h = _normal_form(_s_vector(fi, li, fj, lj), basis, order)
        if h:
            add(h)
    logger.debug("Buchberger treated %d S-pairs and produced %d elements", considered, len(basis))
    return _interreduce(basis, order)

def _interreduce(basis, order):
    ascending = sorted(basis, key=lambda e: order.term_key(e[1]))
    minimal = []
    for v, l in ascending:
        if any(ml[0] == l[0] and monomial_divides(ml[1], l[1]) for _, ml in minimal):
            continue
        minimal.append((v, l))
    reduced = []
    for idx, (v, l) in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        r = _monic(_normal_form(v, others, order), order)
        reduced.append((r, l))
    reduced.sort(key=lambda e: order.term_key(e[1]), reverse=True)
    return reduced

###########################################################################
# Conversions between columns of Laurent polynomials and sparse vectors.

def _to_vector(column, nvars):
    v = {}
    for pos, p in enumerate(column):
        if not isinstance(p, LaurentPoly):
            p = LaurentPoly.constant(nvars, p)
        if p.nvars != nvars:
            raise InputError("Entry %s has %d variables, not %d" % (p, p.nvars, nvars))
        for exps, c in p.terms():
            if min(exps) < 0:
                raise InputError("%s is not a polynomial" % p)
            v[(pos, exps)] = QQ.from_sympy(c)
    return v

def _to_column(v, rank, nvars):
    terms = [{} for _ in range(rank)]
    for (pos, mon), c in v.items():
        terms[pos][mon] = QQ.to_sympy(c)
    return tuple(LaurentPoly(nvars, t) for t in terms)

def _unit_vector(pos, nvars):
    return {(pos, (0,)*nvars): QQ.one}

def _s_element(nvars):
    "The product of all variables as an ideal element."
    return {(0, (1,)*nvars): QQ.one}

def _as_columns(gens, nvars):
    columns = []
    for g in gens:
        columns.append((g,) if isinstance(g, LaurentPoly) else tuple(g))
    return columns

def clear_column(column):
    "Multiply a column of Laurent polynomials by the monomial that makes it a minimal polynomial vector."
    nonzero = [p for p in column if not p.is_zero()]
    if len(nonzero) == 0:
        return tuple(column)
    nvars = nonzero[0].nvars
    shift = tuple(-min(p.min_exponents()[i] for p in nonzero) for i in range(nvars))
    return tuple(p.shift(shift) for p in column)

###########################################################################

class GroebnerBasis(object):
    """Hold a reduced Groebner basis of a submodule of R^rank together with
    the order it was computed for."""

    def __init__(self, nvars, rank, order, elements):
        self.nvars = nvars
        self.rank = rank
        self.order = order
        self.elements = list(elements)

    @classmethod
    def from_vectors(cls, vectors, rank, nvars, order=None):
        order = order or DEFAULT_ORDER
        return cls(nvars, rank, order, _buchberger(vectors, order, rank == 1))

    def __len__(self):
        return len(self.elements)

    def vectors(self):
        return [v for v, _ in self.elements]

    def leads(self):
        return [l for _, l in self.elements]

    def generators(self):
        "Return the basis as columns of polynomials."
        return [_to_column(v, self.rank, self.nvars) for v in self.vectors()]

    def reduce_vector(self, v):
        return _normal_form(v, self.elements, self.order)

    def contains_vector(self, v):
        return len(self.reduce_vector(v)) == 0

    def reduce(self, column):
        "Return the normal form of a column."
        return _to_column(self.reduce_vector(_to_vector(column, self.nvars)), self.rank, self.nvars)

    def contains(self, column):
        if isinstance(column, LaurentPoly):
            column = (column,)
        return self.contains_vector(_to_vector(column, self.nvars))

    def is_everything(self):
        "Return True if the submodule is the whole free module."
        constants = set(pos for pos, mon in self.leads() if sum(mon) == 0)
        return len(constants) == self.rank

    def is_groebner(self):
        "Check that every S-vector reduces to zero."
        for (i, (f, fl)), (j, (g, gl)) in itertools.combinations(enumerate(self.elements), 2):
            if fl[0] != gl[0]:
                continue
            if self.reduce_vector(_s_vector(f, fl, g, gl)):
                return False
        return True

    def standard_monomials(self):
        """Return the terms (position, exponents) outside the leading-term
        module, lowest position first.  Raise InternalError when there are
        infinitely many."""
        result = []
        for pos in range(self.rank):
            leads = [mon for p, mon in self.leads() if p == pos]
            if any(sum(mon) == 0 for mon in leads):
                continue
            bounds = []
            for i in range(self.nvars):
                powers = [mon[i] for mon in leads
                          if all(e == 0 for k, e in enumerate(mon) if k != i)]
                if len(powers) == 0:
                    raise InternalError("The quotient is infinite-dimensional in position %d (no pure power of x%d)" %
                                        (pos, i + 1))
                bounds.append(min(powers))
            for mon in itertools.product(*[range(b) for b in bounds]):
                if not any(monomial_divides(l, mon) for l in leads):
                    result.append((pos, tuple(mon)))
        return sorted(result, key=lambda t: (t[0], self.order.term_key((0, t[1]))))

    def __repr__(self):
        return "GroebnerBasis(nvars=%d, rank=%d, elements=%d)" % (self.nvars, self.rank, len(self.elements))

def buchberger(gens, order=None, rank=None, nvars=None):
    """Compute the reduced Groebner basis of the submodule generated by gens,
    a list of columns of polynomials (or of single polynomials, for an
    ideal).  Pass rank and nvars when gens is empty."""
    columns = _as_columns(gens, nvars)
    if rank == None:
        if len(columns) == 0:
            raise InputError("Cannot infer the ambient rank of an empty generator list")
        rank = len(columns[0])
    if nvars == None:
        if len(columns) == 0 or rank == 0:
            raise InputError("Cannot infer the number of variables of an empty generator list")
        nvars = columns[0][0].nvars if isinstance(columns[0][0], LaurentPoly) else 1
    for col in columns:
        if len(col) != rank:
            raise InputError("Generator %s does not lie in a free module of rank %d" % (col, rank))
    gb = GroebnerBasis.from_vectors([_to_vector(c, nvars) for c in columns], rank, nvars, order)
    logger.info("Groebner basis of %d generators in rank %d has %d elements", len(columns), rank, len(gb))
    return gb

###########################################################################
# Elimination-based constructions.

ELIMINATION_ORDER = MonomialOrder("grevlex", "pot")

def _syzygy_vectors(vectors, rank, nvars):
    """Return generators of the module of relations among vectors, as vectors
    of R^len(vectors), by eliminating the first rank positions of the graph
    vectors (v_i, e_i)."""
    lifted = []
    for idx, v in enumerate(vectors):
        w = dict(v)
        w[(rank + idx, (0,)*nvars)] = QQ.one
        lifted.append(w)
    syz = []
    for v, l in _buchberger(lifted, ELIMINATION_ORDER, False):
        if l[0] >= rank:
            syz.append({(pos - rank, m): c for (pos, m), c in v.items()})
    return syz

def _project(v, start, stop):
    return {(pos - start, m): c for (pos, m), c in v.items() if start <= pos < stop}

def _combine(coeffs, gens):
    "Return the sum of coeffs[i]*gens[i] for a coefficient vector in R^len(gens)."
    out = {}
    for (i, mon), c in coeffs.items():
        _sub_multiple(out, -c, mon, gens[i])
    return out

def _times_poly(f, v):
    "Multiply a vector by a polynomial given as an ideal element."
    out = {}
    for (_, fm), fc in f.items():
        _sub_multiple(out, -fc, fm, v)
    return out

def _subquotient_relations(gens, sub, rank, nvars):
    "Return the relations {c : sum c_i gens_i lies in span(sub)} as vectors of R^len(gens)."
    k = len(gens)
    rels = []
    for syz in _syzygy_vectors(list(gens) + list(sub), rank, nvars):
        r = _project(syz, 0, k)
        if r:
            rels.append(r)
    return rels

def _intersect(n1, n2, rank, nvars):
    "Return generators of span(n1) meet span(n2)."
    out = []
    for syz in _syzygy_vectors(list(n1) + list(n2), rank, nvars):
        v = _combine(_project(syz, 0, len(n1)), n1)
        if v:
            out.append(v)
    return out

def _colon_poly(sub, f, rank, nvars):
    "Return generators of {v in R^rank : f*v in span(sub)}."
    multiples = [_times_poly(f, _unit_vector(j, nvars)) for j in range(rank)]
    out = []
    for syz in _syzygy_vectors(multiples + list(sub), rank, nvars):
        v = _project(syz, 0, rank)
        if v:
            out.append(v)
    return out

def _colon_ideal(sub, ideal, rank, nvars):
    "Return generators of {v in R^rank : I*v in span(sub)}."
    ideal = [f for f in ideal if f]
    if len(ideal) == 0:
        return [_unit_vector(j, nvars) for j in range(rank)]
    result = _colon_poly(sub, ideal[0], rank, nvars)
    for f in ideal[1:]:
        result = _intersect(result, _colon_poly(sub, f, rank, nvars), rank, nvars)
    return result

def _colon_vector(sub, v, rank, nvars):
    "Return generators of the ideal {f : f*v in span(sub)}."
    out = []
    for syz in _syzygy_vectors([v] + list(sub), rank, nvars):
        f = _project(syz, 0, 1)
        if f:
            out.append(f)
    return out

def _saturate_vectors(sub, ideal, rank, nvars):
    "Return the Groebner basis of span(sub) : I^infinity by iterated colons."
    current = GroebnerBasis.from_vectors(sub, rank, nvars)
    steps = 0
    while True:
        bigger = _colon_ideal(current.vectors(), ideal, rank, nvars)
        if all(current.contains_vector(v) for v in bigger):
            logger.debug("Saturation stabilized after %d colon steps", steps)
            return current
        current = GroebnerBasis.from_vectors(bigger, rank, nvars)
        steps += 1

def _ideal_vectors(ideal, nvars):
    return [_to_vector((p,), nvars) for p in ideal]

def colon(sub, ideal, rank, nvars):
    "Return a Groebner basis (as columns) of N : I for a submodule N of R^rank."
    vecs = [_to_vector(c, nvars) for c in _as_columns(sub, nvars)]
    gb = GroebnerBasis.from_vectors(_colon_ideal(vecs, _ideal_vectors(ideal, nvars), rank, nvars), rank, nvars)
    return gb.generators()

def saturate(module, sub, ideal):
    """Return generators of (N :_M I^infinity) for a submodule N of the
    polynomial module M = R^g / relations, as columns of R^g (the preimage,
    which contains the relations)."""
    n, g = module.nvars, module.rank
    vecs = [_to_vector(c, n) for c in module.columns()] + [_to_vector(c, n) for c in _as_columns(sub, n)]
    vecs = [v for v in vecs if v]
    return _saturate_vectors(vecs, _ideal_vectors(ideal, n), g, n).generators()

def _krull_dim_basis(gb):
    leads = [mon for _, mon in gb.leads()]
    if any(sum(mon) == 0 for mon in leads):
        return -1
    n = gb.nvars
    for size in range(n, -1, -1):
        for subset in itertools.combinations(range(n), size):
            if all(any(mon[i] > 0 for i in range(n) if i not in subset) for mon in leads):
                return size
    return 0

def krull_dim(ideal, nvars):
    "Return the Krull dimension of R/I, with -1 for the unit ideal."
    gb = GroebnerBasis.from_vectors(_ideal_vectors(ideal, nvars), 1, nvars)
    return _krull_dim_basis(gb)

def _annihilator_vectors(module_vectors, rank, nvars):
    "Return ideal generators of Ann(R^rank / span(module_vectors))."
    if rank == 0:
        return [_unit_vector(0, nvars)]
    result = None
    for j in range(rank):
        ideal = _colon_vector(module_vectors, _unit_vector(j, nvars), rank, nvars)
        result = ideal if result == None else _intersect(result, ideal, 1, nvars)
    return result

def annihilator(module):
    "Return a Groebner basis of the annihilator ideal of a polynomial module."
    n = module.nvars
    vecs = [v for v in (_to_vector(c, n) for c in module.columns()) if v]
    gb = GroebnerBasis.from_vectors(_annihilator_vectors(vecs, module.rank, n), 1, n)
    return [c[0] for c in gb.generators()]

###########################################################################

def syzygies(gens, rank=None, nvars=None):
    """Return the first syzygy module of a generator list (or of the elements
    of a GroebnerBasis): an FPModule with one generator per input vector
    whose relation columns generate the syzygies."""
    if isinstance(gens, GroebnerBasis):
        rank, nvars = gens.rank, gens.nvars
        vecs = gens.vectors()
    else:
        columns = _as_columns(gens, nvars)
        if rank == None:
            rank = len(columns[0]) if columns else 0
        if nvars == None:
            nvars = columns[0][0].nvars
        vecs = [_to_vector(c, nvars) for c in columns]
    k = len(vecs)
    syz = _syzygy_vectors(vecs, rank, nvars)
    return FPModule.from_columns(nvars, k, [_to_column(v, k, nvars) for v in syz])

class FreeResolutionSegment(object):
    """Hold F0 <- F1 <- ... <- F_length with ranks[k] = rank F_k and maps[k]
    the matrix (list of rows) of F_{k+1} -> F_k."""

    def __init__(self, nvars, ranks, maps):
        self.nvars = nvars
        self.ranks = list(ranks)
        self.maps = list(maps)

    @property
    def length(self):
        return len(self.maps)

    def cokernel(self):
        return FPModule(self.nvars, self.ranks[0], self.maps[0], ncols=self.ranks[1])

    def composites_vanish(self):
        for k in range(len(self.maps) - 1):
            prod = laurent_matmul(self.maps[k], self.maps[k + 1], self.nvars, ncols=self.ranks[k + 2])
            if any(not e.is_zero() for row in prod for e in row):
                return False
        return True

    def __repr__(self):
        return "FreeResolutionSegment(ranks=%s)" % self.ranks

def _rows(vectors, rank, nvars):
    cols = [_to_column(v, rank, nvars) for v in vectors]
    return [[c[i] for c in cols] for i in range(rank)]

def _resolution_vectors(module, length):
    n = module.nvars
    current = [v for v in (_to_vector(c, n) for c in module.columns()) if v]
    ranks = [module.rank]
    maps = []
    for _ in range(length):
        maps.append(current)
        ranks.append(len(current))
        current = _syzygy_vectors(current, ranks[-2], n)
    return ranks, maps

def free_resolution(module, length):
    "Resolve a polynomial module by iterated syzygies up to homological degree length."
    if length < 0:
        raise InputError("Resolution length must be nonnegative")
    ranks, maps = _resolution_vectors(module, length)
    logger.info("Free resolution ranks %s", ranks)
    n = module.nvars
    return FreeResolutionSegment(n, ranks, [_rows(m, ranks[k], n) for k, m in enumerate(maps)])

def ext_top(module):
    "Present Ext^n_R(M, R), n the number of variables, from a length n+1 resolution."
    n = module.nvars
    ranks, maps = _resolution_vectors(module, n + 1)
    size = ranks[n]
    if size == 0:
        return FPModule.free(n, 0)
    # Dualizing turns the rows of each map into the columns of its transpose.
    outgoing = [_to_column(v, size, n) for v in maps[n]]
    transposed_out = [_to_vector(tuple(col[i] for col in outgoing), n) for i in range(size)]
    if len(outgoing) == 0:
        kernel = [_unit_vector(j, n) for j in range(size)]
    else:
        kernel = _syzygy_vectors(transposed_out, len(outgoing), n)
    incoming = [_to_column(v, ranks[n - 1], n) for v in maps[n - 1]]
    image = [v for v in (_to_vector(tuple(col[i] for col in incoming), n) for i in range(ranks[n - 1])) if v]
    rels = _subquotient_relations(kernel, image, size, n)
    k = len(kernel)
    return FPModule.from_columns(n, k, [_to_column(r, k, n) for r in rels])

###########################################################################
# Maximal Artinian submodules over A = R[s^-1].

def _localized_relations(module):
    "Return the Groebner basis of the relations of M over R saturated at s."
    n, g = module.nvars, module.rank
    rel = [v for v in (_to_vector(clear_column(c), n) for c in module.columns()) if v]
    return _saturate_vectors(rel, [_s_element(n)], g, n)

class S0Data(object):
    """Hold the pieces of a maximal Artinian submodule computation: the
    localized relations and the submodule T of R^g with S0 M = T / relations."""

    def __init__(self, module, local, torsion):
        self.module = module
        self.local = local
        self.torsion = torsion

    def contains(self, column):
        "Return True if a column of Laurent polynomials lies in S0 M."
        return self.torsion.contains_vector(_to_vector(clear_column(column), self.module.nvars))

def s0_data(module):
    "Compute the submodule of R^g whose image in M is the maximal Artinian submodule."
    n, g = module.nvars, module.rank
    local = _localized_relations(module)
    if g == 0 or local.is_everything():
        return S0Data(module, local, local)
    ext = ext_top(FPModule.from_columns(n, g, local.generators()))
    ext_vecs = [v for v in (_to_vector(c, n) for c in ext.columns()) if v]
    ann = _annihilator_vectors(ext_vecs, ext.rank, n)
    ann_gb = GroebnerBasis.from_vectors(ann, 1, n)
    if ann_gb.is_everything():
        logger.info("Ext^%d vanishes; the maximal Artinian submodule is zero", n)
        return S0Data(module, local, local)
    support = _saturate_vectors(ann_gb.vectors(), [_s_element(n)], 1, n)
    dim = _krull_dim_basis(support)
    if dim > 0:
        raise InternalError("The annihilator of Ext^%d has a %d-dimensional support off s = 0" % (n, dim))
    torsion = _saturate_vectors(local.vectors(), ann_gb.vectors(), g, n)
    logger.info("Maximal Artinian submodule: %d localized relations, %d saturated generators",
                len(local), len(torsion))
    return S0Data(module, local, torsion)

def finite_realization(gens, relations, rank, nvars):
    """Realize the finite-dimensional module span(gens) / span(relations)
    (relations inside span(gens), both vectors of the same free module, no
    s-torsion) as an ArtinianModule.  Return it with the Q-basis as a list of
    vectors x^a*gens[j]."""
    m = len(gens)
    rels = _subquotient_relations(gens, relations, rank, nvars)
    quotient = GroebnerBasis.from_vectors(rels, m, nvars)
    basis = quotient.standard_monomials()
    index = dict((t, k) for k, t in enumerate(basis))
    qdim = len(basis)
    ops = []
    for i in range(nvars):
        step = tuple(1 if k == i else 0 for k in range(nvars))
        op = [[QQ.zero]*qdim for _ in range(qdim)]
        for col, (pos, mon) in enumerate(basis):
            image = quotient.reduce_vector({(pos, monomial_mul(mon, step)): QQ.one})
            for term, c in image.items():
                op[index[term]][col] = c
        ops.append([[QQ.to_sympy(c) for c in row] for row in op])
    try:
        art = ArtinianModule(nvars, qdim, ops)
    except InputError as err:
        raise InternalError("Finite realization is not Artinian: %s" % err)
    vectors = [_times_poly({(0, mon): QQ.one}, gens[pos]) for pos, mon in basis]
    return art, vectors

def s0_submodule(module):
    """Return the maximal Artinian submodule of a module over A as an
    ArtinianModule together with its inclusion into M, a g x qdim matrix
    (list of rows) whose columns express the Q-basis in M's generators."""
    n, g = module.nvars, module.rank
    data = s0_data(module)
    gens = [v for v in (data.local.reduce_vector(t) for t in data.torsion.vectors()) if v]
    if len(gens) == 0:
        return ArtinianModule.zero(n), [[] for _ in range(g)]
    art, vectors = finite_realization(gens, data.local.vectors(), g, n)
    logger.info("Maximal Artinian submodule has Q-dimension %d", art.qdim)
    return art, _rows(vectors, g, n)

def is_s0_element(module, column):
    """Decide membership in S0 M one element at a time: A*m is finite-dimensional
    iff its annihilator, saturated at s, has zero-dimensional support."""
    n, g = module.nvars, module.rank
    rel = [v for v in (_to_vector(clear_column(c), n) for c in module.columns()) if v]
    m = _to_vector(clear_column(column), n)
    if not m:
        return True
    ann = _colon_vector(rel, m, g, n)
    support = _saturate_vectors(ann, [_s_element(n)], 1, n)
    return _krull_dim_basis(support) <= 0

def is_zero_module(module):
    "Return True if a module over A vanishes."
    return module.rank == 0 or _localized_relations(module).is_everything()

###########################################################################

def generic_rank(module):
    "Return the rank of a module over A, i.e. its dimension over the fraction field."
    n = module.nvars
    names = ",".join("x%d" % (i + 1) for i in range(n))
    R = ring(names, QQ, grevlex)[0]
    cols = [clear_column(c) for c in module.columns()]
    mat = [[R.from_dict({e: QQ.from_sympy(c) for e, c in col[i].terms()}) for col in cols]
           for i in range(module.rank)]

    # Fraction-free (Bareiss) elimination.
    rank = 0
    prev = R.one
    nrows, ncols = module.rank, len(cols)
    for c in range(ncols):
        piv = next((r for r in range(rank, nrows) if mat[r][c]), None)
        if piv == None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        for r in range(rank + 1, nrows):
            for j in range(c + 1, ncols):
                mat[r][j] = (mat[rank][c]*mat[r][j] - mat[r][c]*mat[rank][j]).exquo(prev)
            mat[r][c] = R.zero
        prev = mat[rank][c]
        rank += 1
        if rank == nrows:
            break
    return module.rank - rank

def groebner_homology(d_in, d_out, size, in_cols, nvars):
    """Present ker(d_out) / im(d_in) over A, where d_in maps into A^size
    (size x in_cols) and d_out maps out of it (rows x size)."""
    # Rows of d_out are cleared, not columns: scaling a row keeps the kernel.
    cleared = [clear_column(tuple(row)) for row in d_out] if d_out else None
    out_cols = [tuple(row[j] for row in cleared) for j in range(size)] if d_out else None
    in_vectors = [v for v in (_to_vector(clear_column(tuple(row[j] for row in d_in)), nvars)
                              for j in range(in_cols)) if v] if size > 0 else []
    if out_cols == None:
        kernel = [_unit_vector(j, nvars) for j in range(size)]
    else:
        kernel = _syzygy_vectors([_to_vector(c, nvars) for c in out_cols], len(d_out), nvars)
    rels = _subquotient_relations(kernel, in_vectors, size, nvars)
    k = len(kernel)
    logger.info("Homology presentation: %d kernel generators, %d relations", k, len(rels))
    return FPModule.from_columns(nvars, k, [_to_column(r, k, nvars) for r in rels])

###########################################################################
# Dispatch between the univariate and the multivariate engines.

def homology_module(d_in, d_out, size, in_cols, nvars):
    "Present ker(d_out) / im(d_in) over A with the engine suited to nvars."
    if nvars == 1:
        return pid_homology(d_in, d_out, size, in_cols)
    return groebner_homology(d_in, d_out, size, in_cols, nvars)

def maximal_artinian(module):
    "Return S0 M as an ArtinianModule: the torsion submodule when n = 1."
    if module.nvars == 1:
        return torsion_summary(module)
    return s0_submodule(module)[0]
