###################################
# Standard simplicial models      #
###################################

"""Builders for small simplicial models with maps to a torus: circles,
wedges of circles, simplicial products and coboundary shifts.  Each builder
returns a (SimplicialComplexInput, TorusCocycle) pair."""

import itertools
from alexmod.twisted import SimplicialComplexInput, TorusCocycle, validate_cocycle
from alexmod.utils import InputError

def _winding(value):
    "Accept an integer or a list of integers as a winding vector."
    if isinstance(value, int) and not isinstance(value, bool):
        return (value,)
    value = tuple(value)
    if len(value) == 0:
        raise InputError("A winding vector needs at least one entry")
    return value

def circle(winding):
    "Return the hollow triangle with total winding w, carried by the edge [0, 1]."
    w = _winding(winding)
    zero = (0,)*len(w)
    cx = SimplicialComplexInput(3, [[0, 1], [0, 2], [1, 2]])
    return cx, TorusCocycle(len(w), {(0, 1): w, (0, 2): zero, (1, 2): zero})

def wedge(windings):
    """Return a wedge of hollow triangles at vertex 0; loop l uses vertices
    0, 2l+1, 2l+2 and winds windings[l] times."""
    loops = [_winding(w) for w in windings]
    if len(loops) == 0:
        raise InputError("A wedge needs at least one circle")
    n = len(loops[0])
    if any(len(w) != n for w in loops):
        raise InputError("All windings of a wedge must have the same length")
    zero = (0,)*n
    simplices = []
    values = {}
    for l, w in enumerate(loops):
        a, b = 2*l + 1, 2*l + 2
        simplices.extend([[0, a], [0, b], [a, b]])
        values[(0, a)] = w
        values[(0, b)] = zero
        values[(a, b)] = zero
    return SimplicialComplexInput(1 + 2*len(loops), simplices), TorusCocycle(n, values)

def _chains(sigma, tau):
    "Yield the maximal monotone lattice paths through sigma x tau."
    p, q = len(sigma) - 1, len(tau) - 1
    for rights in itertools.combinations(range(p + q), q):
        i = j = 0
        path = [(sigma[0], tau[0])]
        for step in range(p + q):
            if step in rights:
                j += 1
            else:
                i += 1
            path.append((sigma[i], tau[j]))
        yield path

def product(first, second, combine="concat"):
    """Return the staircase triangulation of the product of two models.
    Vertex (u, w) becomes u*V2 + w.  Cocycles are concatenated (the map to
    the product torus) or summed (composition with multiplication)."""
    (cx1, w1), (cx2, w2) = first, second
    if combine not in ["concat", "sum"]:
        raise InputError("Unknown cocycle combination %s (expected concat or sum)" % repr(combine))
    if combine == "sum" and w1.n != w2.n:
        raise InputError("Summed cocycles must have the same torus dimension (%d vs. %d)" % (w1.n, w2.n))
    v2 = cx2.num_vertices
    faces1 = [s for k in range(cx1.dim + 1) for s in cx1.simplices(k)]
    faces2 = [s for k in range(cx2.dim + 1) for s in cx2.simplices(k)]
    simplices = set()
    for sigma in faces1:
        for tau in faces2:
            for path in _chains(sigma, tau):
                ids = [u*v2 + w for u, w in path]
                for size in range(2, len(ids) + 1):
                    for face in itertools.combinations(ids, size):
                        simplices.add(face)
    n = w1.n + w2.n if combine == "concat" else w1.n
    values = {}
    for a, b in sorted(s for s in simplices if len(s) == 2):
        x = w1.value(a // v2, b // v2)
        y = w2.value(a % v2, b % v2)
        values[(a, b)] = x + y if combine == "concat" else tuple(p + q for p, q in zip(x, y))
    cx = SimplicialComplexInput(cx1.num_vertices*v2, sorted(simplices))
    w = TorusCocycle(n, values)
    validate_cocycle(cx, w)
    return cx, w

def coboundary_shift(model, potential):
    "Return the model with w([i, j]) replaced by w([i, j]) + phi(j) - phi(i)."
    cx, w = model
    if len(potential) != cx.num_vertices:
        raise InputError("The potential needs one vector per vertex (%d vs. %d)" % (len(potential), cx.num_vertices))
    phi = [_winding(p) for p in potential]
    if any(len(p) != w.n for p in phi):
        raise InputError("Potential vectors must have length %d" % w.n)
    values = {}
    for (i, j), value in w.values.items():
        values[(i, j)] = tuple(z + phi[j][k] - phi[i][k] for k, z in enumerate(value))
    return cx, TorusCocycle(w.n, values)

def torus(windings=((1,), (0,)), combine="sum"):
    "Return the product of two circles; by default the projection to the first factor."
    return product(circle(windings[0]), circle(windings[1]), combine)

def torus_minus_fiber():
    "Return (C* minus a point) x S^1 mapping through the first loop, the torus with one fiber removed."
    return product(wedge([1, 0]), circle(0), "sum")

def identity_torus(n):
    "Return a model of the n-torus whose cocycle is the identity class in H^1(T; Z^n)."
    if n < 1:
        raise InputError("Torus dimension must be positive")
    model = circle([1 if k == 0 else 0 for k in range(n)])
    for k in range(1, n):
        e = [1 if m == k else 0 for m in range(n)]
        model = product(model, circle(e), "sum")
    return model

builders = {
    "circle": lambda args: circle(args.get("winding", 1)),
    "wedge": lambda args: wedge(args.get("windings", [1, 0])),
    "torus": lambda args: torus(),
    "torus2": lambda args: identity_torus(2),
    "torus-minus-fiber": lambda args: torus_minus_fiber(),
}
