###################################
# alexmod utility functions       #
###################################

import logging
import os
import re
import sys
from fractions import Fraction
from functools import reduce
from math import gcd
from sympy import ImmutableMatrix, Integer, Matrix, Rational

logger = logging.getLogger(__name__)

# Default seed for every randomized verdict; ALEXMOD_SEED overrides it.
DEFAULT_SEED = 0

class AlexmodError(Exception):
    "Base class for every error alexmod raises on purpose."
    pass

class InputError(AlexmodError):
    "Malformed or inconsistent user input."
    pass

class InternalError(AlexmodError):
    "A property that the theory guarantees failed to hold."
    pass

class Utilities(object):
    "Provide various utility functions as mixins for alexmod."

    def abend(self, str, code=1):
        "Abort the program on an error."
        sys.stderr.write("%s: %s\n" % (self.progname(), str))
        sys.exit(code)

    def warn(self, str):
        "Issue a warning message but continue execution."
        sys.stderr.write("%s: Warning: %s\n" % (self.progname(), str))

    def progname(self):
        "Return the name under which we were invoked."
        name = os.path.basename(sys.argv[0]) if sys.argv and sys.argv[0] else ""
        if name in ["", "__main__.py", "-c"]:
            name = "alexmod"
        return name

def default_seed():
    "Return the seed for randomized trials, honoring ALEXMOD_SEED."
    try:
        seed = os.environ["ALEXMOD_SEED"]
    except KeyError:
        return DEFAULT_SEED
    try:
        return int(seed)
    except ValueError:
        raise InputError("ALEXMOD_SEED is set to %s, which is not an integer" % repr(seed))

###########################################################################

rational_re = re.compile(r'^\s*([-+]?\d+)\s*(?:/\s*(\d+))?\s*$')

def rational(value):
    "Convert an int, a string, a Fraction, or a SymPy number to an exact Rational."
    if isinstance(value, bool):
        raise InputError("Expected a rational number but saw %s" % repr(value))
    if isinstance(value, Rational):
        return value
    if isinstance(value, int):
        return Integer(value)
    if isinstance(value, Fraction):
        return Rational(value.numerator, value.denominator)
    if isinstance(value, str):
        mo = rational_re.match(value)
        if mo == None:
            raise InputError("Failed to parse %s as a rational number" % repr(value))
        num = int(mo.group(1))
        den = 1 if mo.group(2) == None else int(mo.group(2))
        if den == 0:
            raise InputError("Zero denominator in %s" % repr(value))
        return Rational(num, den)
    if isinstance(value, dict) and "num" in value:
        return rational("%s/%s" % (value["num"], value.get("den", 1)))
    raise InputError("Expected a rational number but saw %s" % repr(value))

def lcm(values):
    "Return the least common multiple of a list of positive integers (1 if empty)."
    return reduce(lambda a, b: a*b//gcd(a, b), values, 1)

###########################################################################
# Exact linear algebra over Q.  Subspaces of Q^m are represented by
# matrices whose columns form a basis; the zero subspace is an m x 0 matrix.

def rational_matrix(rows, ncols=None):
    "Build an immutable exact matrix from nested lists of rationals."
    rows = [[rational(v) for v in r] for r in rows]
    if len(rows) == 0:
        return ImmutableMatrix.zeros(0, ncols or 0)
    widths = set(len(r) for r in rows)
    if len(widths) != 1:
        raise InputError("Ragged matrix (row lengths %s)" % sorted(widths))
    return ImmutableMatrix(rows)

def identity(size):
    "Return the size x size identity matrix."
    return ImmutableMatrix.eye(size)

def is_zero_matrix(mat):
    "Return True if every entry of a matrix is zero."
    return all(e == 0 for e in mat)

def span_basis(mat):
    "Return a matrix whose columns form a basis of the column space of mat."
    if mat.cols == 0:
        return Matrix.zeros(mat.rows, 0)
    cols = mat.columnspace()
    if len(cols) == 0:
        return Matrix.zeros(mat.rows, 0)
    return Matrix.hstack(*cols)

def kernel_basis(mat):
    "Return a matrix whose columns form a basis of the null space of mat."
    if mat.rows == 0:
        return Matrix.eye(mat.cols)
    if mat.cols == 0:
        return Matrix.zeros(0, 0)
    vecs = mat.nullspace()
    if len(vecs) == 0:
        return Matrix.zeros(mat.cols, 0)
    return Matrix.hstack(*vecs)

def sum_spans(a, b):
    "Return a basis of the sum of two subspaces."
    return span_basis(Matrix.hstack(a, b))

def intersect_spans(a, b):
    "Return a basis of the intersection of two subspaces."
    if a.cols == 0 or b.cols == 0:
        return Matrix.zeros(a.rows, 0)
    null = kernel_basis(Matrix.hstack(a, -b))
    if null.cols == 0:
        return Matrix.zeros(a.rows, 0)
    return span_basis(a*null[:a.cols, :])

def coordinates(basis, vectors):
    "Express the columns of vectors in a basis with independent columns."
    if basis.cols == 0:
        return Matrix.zeros(0, vectors.cols)
    return (basis.T*basis).inv()*basis.T*vectors

def complement_basis(basis, size):
    "Extend a subspace basis greedily by standard basis vectors; return the added vectors."
    current = Matrix(basis)
    rank = current.cols
    added = []
    for k in range(size):
        e = Matrix.zeros(size, 1)
        e[k, 0] = 1
        trial = Matrix.hstack(current, e)
        if trial.rank() > rank:
            current = trial
            rank += 1
            added.append(e)
    if len(added) == 0:
        return Matrix.zeros(size, 0)
    return Matrix.hstack(*added)

def restrict_operator(op, basis):
    "Return the matrix of op on an op-invariant subspace in the given basis."
    return coordinates(basis, op*basis)

def word_matrix(mats, word, size):
    """Multiply out a word in 1-based signed generator indices, reading left
    to right: [a, -b] is mats[a-1] * mats[b-1]^-1."""
    result = Matrix.eye(size)
    for w in word:
        if w == 0 or abs(w) > len(mats):
            raise InputError("Generator index %d out of range 1..%d" % (w, len(mats)))
        m = mats[abs(w) - 1]
        result = result*(m if w > 0 else m.inv())
    return result
