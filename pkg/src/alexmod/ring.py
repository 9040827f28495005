###################################
# Laurent polynomials over Q      #
###################################

"""Exact arithmetic in A = Q[t1^+-1, ..., tn^+-1] plus the univariate
factor-structure utilities (unit normalization, Yun squarefree
decomposition, root-of-unity splitting) that every quasi-unipotence and
Jordan computation relies on."""

from sympy import Integer, Poly, QQ, Rational, Symbol
from alexmod.utils import InputError, rational

# Exponents are meant to fit in a signed machine word.
EXPONENT_LIMIT = 2**63 - 1

# The generator of Q[t] as seen by SymPy.
T = Symbol("t")

def _check_exponents(exps):
    "Abort if an exponent vector leaves the signed 64-bit range."
    for e in exps:
        if e > EXPONENT_LIMIT or e < -EXPONENT_LIMIT - 1:
            raise InputError("Exponent %d overflows the exponent range" % e)
    return exps

class LaurentPoly(object):
    "Represent an immutable Laurent polynomial with exact rational coefficients."

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars, terms=None):
        if not isinstance(nvars, int) or nvars < 1:
            raise InputError("A Laurent polynomial needs at least one variable (saw %s)" % repr(nvars))
        clean = {}
        if terms != None:
            for exps, coeff in dict(terms).items():
                exps = tuple(int(e) for e in exps)
                if len(exps) != nvars:
                    raise InputError("Exponent vector %s has length %d, not %d" % (exps, len(exps), nvars))
                coeff = rational(coeff)
                if coeff == 0:
                    continue
                _check_exponents(exps)
                clean[exps] = clean.get(exps, Integer(0)) + coeff
                if clean[exps] == 0:
                    del clean[exps]
        self.nvars = nvars
        self._terms = clean
        self._hash = None

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def one(cls, nvars):
        return cls.monomial(nvars, (0,)*nvars)

    @classmethod
    def constant(cls, nvars, c):
        return cls.monomial(nvars, (0,)*nvars, c)

    @classmethod
    def monomial(cls, nvars, exps, c=1):
        return cls(nvars, {tuple(exps): c})

    @classmethod
    def variable(cls, nvars, i, power=1):
        "Return t_i^power (0-based i)."
        exps = [0]*nvars
        exps[i] = power
        return cls.monomial(nvars, exps)

    def terms(self):
        "Return (exponents, coefficient) pairs sorted by exponent vector, highest first."
        return sorted(self._terms.items(), reverse=True)

    def coefficient(self, exps):
        return self._terms.get(tuple(exps), Integer(0))

    def is_zero(self):
        return len(self._terms) == 0

    def is_monomial(self):
        "Return True for q*t^k with q nonzero (the units of A)."
        return len(self._terms) == 1

    def is_constant(self):
        return self.is_zero() or (self.is_monomial() and all(e == 0 for e in next(iter(self._terms))))

    def min_exponents(self):
        "Return the componentwise minimum exponent vector (zeros for the zero polynomial)."
        if self.is_zero():
            return (0,)*self.nvars
        return tuple(min(e[i] for e in self._terms) for i in range(self.nvars))

    def max_exponents(self):
        if self.is_zero():
            return (0,)*self.nvars
        return tuple(max(e[i] for e in self._terms) for i in range(self.nvars))

    def shift(self, exps):
        "Multiply by the monomial t^exps."
        return LaurentPoly(self.nvars, {_check_exponents(tuple(a + b for a, b in zip(e, exps))): c
                                        for e, c in self._terms.items()})

    def scale(self, c):
        c = rational(c)
        return LaurentPoly(self.nvars, {e: c*v for e, v in self._terms.items()})

    def conjugate(self):
        "Apply the involution t_i -> t_i^-1."
        return LaurentPoly(self.nvars, {tuple(-x for x in e): c for e, c in self._terms.items()})

    def evaluate(self, values):
        "Substitute nonzero rationals for every variable."
        values = [rational(v) for v in values]
        if len(values) != self.nvars:
            raise InputError("Expected %d values but saw %d" % (self.nvars, len(values)))
        total = Integer(0)
        for exps, c in self._terms.items():
            term = c
            for v, e in zip(values, exps):
                term *= v**e
            total += term
        return total

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise InputError("Variable-count mismatch (%d vs. %d)" % (self.nvars, other.nvars))
            return other
        return LaurentPoly.constant(self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, Integer(0)) + c
        return LaurentPoly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        return laurent_mul(self, self._coerce(other))

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            if not self.is_monomial():
                raise InputError("Only monomials may be raised to negative powers")
            (exps, c), = self._terms.items()
            return LaurentPoly(self.nvars, {tuple(e*k for e in exps): c**k})
        result = LaurentPoly.one(self.nvars)
        base = self
        while k > 0:
            if k & 1:
                result = result*base
            base = base*base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        try:
            return self == LaurentPoly.constant(self.nvars, other)
        except InputError:
            return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        if self._hash == None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return "LaurentPoly(%d, %r)" % (self.nvars, str(self))

    def __str__(self):
        return format_laurent(self)

def variable_names(nvars):
    "Return the textual names of the variables: t for one variable, t1..tn otherwise."
    if nvars == 1:
        return ["t"]
    return ["t%d" % (i + 1) for i in range(nvars)]

def format_laurent(p):
    "Render a Laurent polynomial in the textual syntax the parser accepts."
    if p.is_zero():
        return "0"
    names = variable_names(p.nvars)
    pieces = []
    for exps, c in p.terms():
        mono = []
        for name, e in zip(names, exps):
            if e == 1:
                mono.append(name)
            elif e != 0:
                mono.append("%s^%d" % (name, e))
        mag = abs(c)
        if len(mono) == 0:
            body = str(mag)
        elif mag == 1:
            body = "*".join(mono)
        else:
            body = "%s*%s" % (mag, "*".join(mono))
        if len(pieces) == 0:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append(("- " if c < 0 else "+ ") + body)
    return " ".join(pieces)

def laurent_mul(a, b):
    "Multiply two Laurent polynomials in the same number of variables."
    if a.nvars != b.nvars:
        raise InputError("Variable-count mismatch (%d vs. %d)" % (a.nvars, b.nvars))
    terms = {}
    for ea, ca in a._terms.items():
        for eb, cb in b._terms.items():
            e = _check_exponents(tuple(x + y for x, y in zip(ea, eb)))
            terms[e] = terms.get(e, Integer(0)) + ca*cb
    return LaurentPoly(a.nvars, terms)

def laurent_matmul(a, b, nvars, ncols=None):
    """Multiply two matrices (lists of rows) of Laurent polynomials.  Pass
    ncols when b has no rows."""
    inner = len(b)
    if ncols == None:
        ncols = len(b[0]) if inner > 0 else 0
    for row in a:
        if len(row) != inner:
            raise InputError("Matrix dimension mismatch (%d columns vs. %d rows)" % (len(row), inner))
    zero = LaurentPoly.zero(nvars)
    result = []
    for row in a:
        out = []
        for j in range(ncols):
            acc = zero
            for k in range(inner):
                if not row[k].is_zero() and not b[k][j].is_zero():
                    acc = acc + row[k]*b[k][j]
            out.append(acc)
        result.append(out)
    return result

###########################################################################
# Univariate utilities.  Elements of Q[t] are SymPy Poly objects in T over
# QQ; they convert to and from one-variable Laurent polynomials.

def qt_poly(coeffs):
    "Build an element of Q[t] from a {degree: coefficient} mapping."
    return Poly.from_dict({(k,): rational(c) for k, c in coeffs.items() if rational(c) != 0} or {(0,): 0},
                          T, domain=QQ)

def qt_one():
    return qt_poly({0: 1})

def laurent_to_qt(p):
    """Split a one-variable Laurent polynomial as t^k * q(t) with q a
    polynomial; return (q, k).  For nonzero p, q(0) is nonzero."""
    if p.nvars != 1:
        raise InputError("Expected a univariate Laurent polynomial (saw %d variables)" % p.nvars)
    if p.is_zero():
        return qt_poly({}), 0
    k = p.min_exponents()[0]
    return qt_poly({e[0] - k: c for e, c in p._terms.items()}), k

def qt_to_laurent(q, shift=0):
    "Convert an element of Q[t] to a Laurent polynomial, multiplied by t^shift."
    terms = {}
    for (k,), c in q.terms():
        terms[(k + shift,)] = Rational(c)
    return LaurentPoly(1, terms)

def _as_qt(p):
    "Accept a Poly or a Laurent polynomial with nonnegative exponents."
    if isinstance(p, Poly):
        return p
    if isinstance(p, LaurentPoly):
        q, k = laurent_to_qt(p)
        if k < 0:
            raise InputError("%s is not a polynomial" % p)
        return q*qt_poly({k: 1})
    raise InputError("Expected a univariate polynomial but saw %s" % repr(p))

def qt_degree(q):
    "Degree of an element of Q[t], with -1 for zero."
    return -1 if q.is_zero else q.degree()

def x_power_minus_one(n):
    "Return t^n - 1."
    return qt_poly({n: 1, 0: -1})

class UnitNormalForm(object):
    """Represent p = unit * core with core monic in Q[t], core(0) != 0, and
    unit = q*t^k."""

    def __init__(self, core, unit_coeff, unit_exp):
        self.core = core
        self.unit_coeff = unit_coeff
        self.unit_exp = unit_exp

    @property
    def unit(self):
        return LaurentPoly.monomial(1, (self.unit_exp,), self.unit_coeff)

    def core_laurent(self):
        return qt_to_laurent(self.core)

    def reproduce(self):
        "Return unit*core as a Laurent polynomial."
        return self.unit*self.core_laurent()

    def is_unit(self):
        return qt_degree(self.core) == 0

def normalize_unit(p):
    "Factor a nonzero univariate Laurent polynomial into a unit and a canonical core."
    if not isinstance(p, LaurentPoly) or p.nvars != 1:
        raise InputError("normalize_unit requires a univariate Laurent polynomial")
    if p.is_zero():
        raise InputError("Cannot normalize the zero polynomial")
    q, k = laurent_to_qt(p)
    lc = Rational(q.LC())
    return UnitNormalForm(q.monic(), lc, k)

def yun_squarefree(p):
    """Decompose a monic polynomial as a product of powers of pairwise
    coprime squarefree factors.  Return [(factor, multiplicity), ...] with
    strictly increasing multiplicities."""
    p = _as_qt(p)
    if p.is_zero:
        raise InputError("Cannot decompose the zero polynomial")
    if p.LC() != 1:
        raise InputError("Squarefree decomposition requires a monic polynomial")
    if p.degree() == 0:
        return []

    # Yun's algorithm: w runs through the products of the factors of
    # multiplicity >= i, z through the derivative remainders.
    dp = p.diff(T)
    c = p.gcd(dp)
    w = p.exquo(c)
    y = dp.exquo(c)
    z = y - w.diff(T)
    factors = []
    i = 1
    while w.degree() > 0:
        g = w.gcd(z)
        if g.degree() > 0:
            factors.append((g, i))
        w = w.exquo(g)
        y = z.exquo(g)
        z = y - w.diff(T)
        i += 1
    return factors

def squarefree_part(p):
    "Return p divided by gcd(p, p'), made monic."
    p = _as_qt(p)
    if p.is_zero:
        raise InputError("The zero polynomial has no squarefree part")
    if p.degree() == 0:
        return qt_one()
    return p.exquo(p.gcd(p.diff(T))).monic()

def root_of_unity_bound(degree):
    "Largest order N that a root of unity of a degree-d rational polynomial can have."
    return 2*degree*degree + 6

def strip_roots_of_unity(p):
    """Split p as (root-of-unity part, remainder) and report the orders N at
    which gcd(p, t^N - 1) stripped something.  Each reported N is the exact
    multiplicative order of some root."""
    p = _as_qt(p)
    if p.is_zero or p.LC() != 1:
        raise InputError("Root-of-unity splitting requires a monic polynomial")
    if p.eval(0) == 0:
        raise InputError("Root-of-unity splitting requires p(0) != 0")
    bound = root_of_unity_bound(p.degree())
    part = qt_one()
    rest = p
    orders = []
    for n in range(1, bound + 1):
        if rest.degree() == 0:
            break
        xn = x_power_minus_one(n)
        g = rest.gcd(xn)
        if g.degree() > 0:
            orders.append(n)
        while g.degree() > 0:
            part = part*g
            rest = rest.exquo(g)
            g = rest.gcd(xn)
    return part, rest, orders

def cyclotomic_part(p):
    "Return (root-of-unity part, remainder) of a monic p with p(0) != 0."
    part, rest, _ = strip_roots_of_unity(p)
    return part, rest
