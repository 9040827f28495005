###################################
# Twisted simplicial (co)chains   #
###################################

"""Cellular chain complexes of a finite simplicial complex with
coefficients in the rank-one A-local system pulled back along a map to the
torus, the map being given up to homotopy by a closed Z^n-valued edge
cocycle.  A simplex [v0, ..., vk] is lifted with its base vertex v0 on the
zeroth sheet, so its zeroth face picks up the transport t^w(v0 v1)."""

import logging
from sympy import Matrix
from alexmod.groebner import homology_module, maximal_artinian
from alexmod.pid import are_similar, invariant_factors, torsion_summary
from alexmod.ring import LaurentPoly, laurent_matmul
from alexmod.utils import InputError, InternalError

logger = logging.getLogger(__name__)

class SimplicialComplexInput(object):
    """Represent a finite simplicial complex on vertices 0..V-1.  Every
    vertex is a 0-simplex; the listed simplices of dimension >= 1 must be
    closed under taking faces."""

    def __init__(self, vertices, simplices):
        if not isinstance(vertices, int) or vertices < 0:
            raise InputError("Vertex count must be a nonnegative integer (saw %s)" % repr(vertices))
        seen = set()
        for s in simplices:
            s = tuple(s)
            if len(s) == 0:
                raise InputError("Empty simplex in the input")
            for v in s:
                if not isinstance(v, int) or v < 0 or v >= vertices:
                    raise InputError("Vertex %s of simplex %s is out of range" % (repr(v), list(s)))
            if any(s[k] >= s[k + 1] for k in range(len(s) - 1)):
                raise InputError("Simplex %s is not strictly increasing" % list(s))
            if len(s) == 1:
                continue
            if s in seen:
                raise InputError("Duplicate simplex %s" % list(s))
            seen.add(s)
        for s in seen:
            if len(s) < 3:
                continue
            for k in range(len(s)):
                face = s[:k] + s[k + 1:]
                if face not in seen:
                    raise InputError("Face %s of simplex %s is missing" % (list(face), list(s)))
        self.num_vertices = vertices
        dim = max([len(s) - 1 for s in seen] + [0 if vertices > 0 else -1])
        by_dim = [[(v,) for v in range(vertices)]]
        for k in range(1, dim + 1):
            by_dim.append(sorted(s for s in seen if len(s) == k + 1))
        self.dim = dim
        self._by_dim = by_dim if vertices > 0 else []
        self._index = [dict((s, i) for i, s in enumerate(level)) for level in self._by_dim]

    def simplices(self, k):
        "Return the k-simplices in their canonical (sorted) order."
        if k < 0 or k >= len(self._by_dim):
            return []
        return self._by_dim[k]

    def count(self, k):
        return len(self.simplices(k))

    def index(self, simplex):
        return self._index[len(simplex) - 1][tuple(simplex)]

    def edges(self):
        return self.simplices(1)

    def __repr__(self):
        return "SimplicialComplexInput(vertices=%d, dim=%d)" % (self.num_vertices, self.dim)

class TorusCocycle(object):
    "Assign a vector of Z^n to every oriented edge [i, j], i < j."

    def __init__(self, n, values):
        if not isinstance(n, int) or n < 1:
            raise InputError("Torus dimension must be a positive integer (saw %s)" % repr(n))
        clean = {}
        for edge, value in dict(values).items():
            edge = tuple(edge)
            if len(edge) != 2 or edge[0] >= edge[1]:
                raise InputError("Edge %s must be a pair [i, j] with i < j" % list(edge))
            value = tuple(value)
            if len(value) != n or not all(isinstance(z, int) and not isinstance(z, bool) for z in value):
                raise InputError("Edge %s must carry %d integers (saw %s)" % (list(edge), n, list(value)))
            if edge in clean:
                raise InputError("Edge %s is assigned twice" % list(edge))
            clean[edge] = value
        self.n = n
        self.values = clean

    def value(self, i, j):
        "Return w([i, j]) for i < j, w([j, i]) = -w([i, j]), and 0 for i = j."
        if i == j:
            return (0,)*self.n
        if i < j:
            return self.values[(i, j)]
        return tuple(-z for z in self.values[(j, i)])

    def __repr__(self):
        return "TorusCocycle(n=%d, edges=%d)" % (self.n, len(self.values))

def validate_cocycle(cx, w):
    "Check that w assigns exactly the edges of the complex and is closed on every triangle."
    edges = set(cx.edges())
    for e in sorted(edges):
        if e not in w.values:
            raise InputError("Edge %s has no cocycle value" % list(e))
    for e in sorted(w.values):
        if e not in edges:
            raise InputError("Cocycle value given for %s, which is not an edge of the complex" % list(e))
    for v0, v1, v2 in cx.simplices(2):
        a, b, c = w.value(v1, v2), w.value(v0, v2), w.value(v0, v1)
        if any(x - y + z != 0 for x, y, z in zip(a, b, c)):
            raise InputError("Cocycle is not closed on the 2-simplex %s" % [v0, v1, v2])
    return True

def conjugate_transpose(rows, nrows, ncols):
    "Transpose a Laurent matrix and apply t_i -> t_i^-1 to every entry."
    return [[rows[i][j].conjugate() for i in range(nrows)] for j in range(ncols)]

class TwistedComplex(object):
    """Hold the twisted chain groups C_k = A^ranks[k] and the boundary
    matrices d_k: C_k -> C_(k-1) (lists of rows, columns are images)."""

    def __init__(self, nvars, ranks, boundaries):
        self.nvars = nvars
        self.ranks = list(ranks)
        self.boundaries = dict(boundaries)
        for k in range(2, len(self.ranks)):
            prod = laurent_matmul(self.boundary(k - 1), self.boundary(k), nvars, ncols=self.ranks[k])
            if any(not e.is_zero() for row in prod for e in row):
                raise InternalError("Twisted boundary does not square to zero in degree %d" % k)

    @property
    def dim(self):
        return len(self.ranks) - 1

    def rank(self, k):
        return self.ranks[k] if 0 <= k < len(self.ranks) else 0

    def boundary(self, k):
        "Return d_k as rank(k-1) rows of rank(k) entries ([] outside the complex)."
        if k in self.boundaries:
            return self.boundaries[k]
        return [[LaurentPoly.zero(self.nvars)]*self.rank(k) for _ in range(self.rank(k - 1))]

    def coboundary(self, k):
        "Return the cochain differential C^k -> C^(k+1) under the conjugate module structure."
        return conjugate_transpose(self.boundary(k + 1), self.rank(k), self.rank(k + 1))

    def specialize(self, k):
        "Return d_k with every t_i set to 1, as a rational matrix."
        ones = [1]*self.nvars
        rows, cols = self.rank(k - 1), self.rank(k)
        return Matrix(rows, cols, [e.evaluate(ones) for row in self.boundary(k) for e in row])

    def betti_numbers(self):
        "Return the rational Betti numbers of the untwisted complex."
        ranks = [self.specialize(k).rank() if self.rank(k) and self.rank(k - 1) else 0
                 for k in range(len(self.ranks) + 1)]
        return [self.ranks[k] - ranks[k] - ranks[k + 1] for k in range(len(self.ranks))]

    def __repr__(self):
        return "TwistedComplex(nvars=%d, ranks=%s)" % (self.nvars, self.ranks)

def twisted_chain_complex(cx, w):
    "Build the twisted chain complex of a simplicial complex with a closed edge cocycle."
    validate_cocycle(cx, w)
    n = w.n
    ranks = [cx.count(k) for k in range(cx.dim + 1)]
    boundaries = {}
    for k in range(1, cx.dim + 1):
        rows = [[LaurentPoly.zero(n)]*ranks[k] for _ in range(ranks[k - 1])]
        for col, s in enumerate(cx.simplices(k)):
            for i in range(k + 1):
                face = s[:i] + s[i + 1:]
                if i == 0:
                    coeff = LaurentPoly.monomial(n, w.value(s[0], s[1]))
                else:
                    coeff = LaurentPoly.constant(n, (-1)**i)
                row = cx.index(face)
                rows[row][col] = rows[row][col] + coeff
        boundaries[k] = rows
    logger.info("Twisted chain complex with ranks %s over %d variables", ranks, n)
    return TwistedComplex(n, ranks, boundaries)

def _check_degree(complex, i):
    top = max(complex.dim, 0)
    if i < 0 or i > top:
        raise InputError("Degree %d is out of range 0..%d" % (i, top))

def cohomology_of(complex, i):
    "Present H^i of the cochain complex of a TwistedComplex."
    _check_degree(complex, i)
    d_out = complex.coboundary(i) if complex.rank(i + 1) > 0 else []
    d_in = complex.coboundary(i - 1) if i > 0 else [[] for _ in range(complex.rank(i))]
    return homology_module(d_in, d_out, complex.rank(i), complex.rank(i - 1), complex.nvars)

def homology_of(complex, i):
    "Present H_i of a TwistedComplex."
    _check_degree(complex, i)
    d_out = complex.boundary(i) if i > 0 and complex.rank(i - 1) > 0 else []
    d_in = complex.boundary(i + 1) if complex.rank(i + 1) > 0 else [[] for _ in range(complex.rank(i))]
    return homology_module(d_in, d_out, complex.rank(i), complex.rank(i + 1), complex.nvars)

def twisted_cohomology(cx, w, i):
    "Present the cohomological Alexander module H^i(X, L_X) as an FPModule."
    return cohomology_of(twisted_chain_complex(cx, w), i)

def twisted_homology(cx, w, i):
    "Present the homological Alexander module H_i(X, L_X); only for n = 1."
    if w.n != 1:
        raise InputError("Homology Alexander modules are only supported for n = 1 (saw n = %d)" % w.n)
    return homology_of(twisted_chain_complex(cx, w), i)

def alexander_s0(cx, w, i):
    "Return S0 H^i(X, L_X) as an ArtinianModule."
    return maximal_artinian(twisted_cohomology(cx, w, i))

def alexander_polynomial(cx, w, i):
    "Return the order of the torsion of H^i(X, L_X) for n = 1, a monic element of Q[t]."
    if w.n != 1:
        raise InputError("The Alexander polynomial needs n = 1 (saw n = %d)" % w.n)
    return invariant_factors(twisted_cohomology(cx, w, i)).alexander_polynomial()

def duality_check(cx, w, i):
    """For n = 1, compare the torsion of H_i and of H^(i+1): the Q-dimensions
    agree and the t-actions are inverse to each other up to conjugacy."""
    complex = twisted_chain_complex(cx, w)
    if w.n != 1:
        raise InputError("The homology/cohomology comparison needs n = 1 (saw n = %d)" % w.n)
    lower = torsion_summary(homology_of(complex, i))
    upper = torsion_summary(cohomology_of(complex, i + 1)) if i + 1 <= max(complex.dim, 0) else None
    if upper == None:
        return lower.qdim == 0
    if lower.qdim != upper.qdim:
        return False
    if lower.qdim == 0:
        return True
    return are_similar(upper.t_ops[0], lower.t_ops[0].inv())

def complex_from_json(data):
    "Build (SimplicialComplexInput, TorusCocycle) from the complex JSON schema."
    try:
        cx = SimplicialComplexInput(data["vertices"], data.get("simplices", []))
        co = data["cocycle"]
        values = {}
        for entry in co.get("edges", []):
            edge = tuple(entry["edge"])
            if edge in values:
                raise InputError("Edge %s is assigned twice" % list(edge))
            values[edge] = entry["value"]
        w = TorusCocycle(co["n"], values)
    except (KeyError, TypeError) as err:
        raise InputError("Malformed complex description (%s)" % err)
    return cx, w

def complex_to_json(cx, w):
    "Render a complex and cocycle in the JSON input schema."
    simplices = []
    for k in range(1, cx.dim + 1):
        simplices.extend([list(s) for s in cx.simplices(k)])
    edges = [{"edge": list(e), "value": list(w.values[e])} for e in sorted(w.values)]
    return {"vertices": cx.num_vertices, "simplices": simplices,
            "cocycle": {"n": w.n, "edges": edges}}
