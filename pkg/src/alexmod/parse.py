###################################
# Read alexmod input files        #
###################################

"""Parse textual Laurent polynomials and turn the JSON input documents
(complexes, local systems, fibrations, module presentations, Artinian
modules, result bundles and geometry contexts) into domain objects."""

import json
import re
import sys
from alexmod.checks import GeometryContext
from alexmod.mellin import FibrationModel, LocalSystem
from alexmod.pid import ArtinianModule, FPModule
from alexmod.ring import LaurentPoly
from alexmod.twisted import complex_from_json
from alexmod.utils import InputError, rational, rational_matrix

class LaurentParser(object):
    "Parse expressions such as t1^2 - 3/2*t1*t2^-1 into LaurentPoly objects."
    int_re = re.compile(r'\d+')
    var_re = re.compile(r't(\d*)(?![A-Za-z_\d])')
    arith_re = re.compile(r'[-+*/]')

    class ParseError(Exception):
        pass

    def __init__(self, nvars=None):
        self.nvars = nvars

    def lex(self, s):
        "Split a string into tokens (tuples of type and value)."
        tokens = []
        s = s.lstrip()
        while len(s) > 0:
            # Match parentheses.
            if s[0] == "(":
                tokens.append(("lparen", "("))
                s = s[1:].lstrip()
                continue
            if s[0] == ")":
                tokens.append(("rparen", ")"))
                s = s[1:].lstrip()
                continue

            # Match nonnegative integers.
            mo = self.int_re.match(s)
            if mo != None:
                match = mo.group(0)
                tokens.append(("int", int(match)))
                s = s[len(match):].lstrip()
                continue

            # Match "**" before we match "*".
            if s[:2] == "**" or s[0] == "^":
                match = s[:2] if s[:2] == "**" else "^"
                tokens.append(("power", match))
                s = s[len(match):].lstrip()
                continue

            # Match arithmetic operators.
            mo = self.arith_re.match(s)
            if mo != None:
                match = mo.group(0)
                tokens.append(("arith", match))
                s = s[len(match):].lstrip()
                continue

            # Match variables: t, t1, t2, ...
            mo = self.var_re.match(s)
            if mo != None:
                digits = mo.group(1)
                tokens.append(("var", 0 if digits == "" else int(digits)))
                s = s[len(mo.group(0)):].lstrip()
                continue
            raise self.ParseError("Failed to parse %s" % s)
        tokens.append(("EOF", "EOF"))
        return tokens

    def advance(self):
        "Advance to the next symbol."
        self.tokidx += 1
        self.sym = self.tokens[self.tokidx]

    def accept(self, ty):
        """Advance to the next token if the current token matches a given
        token type and return True.  Otherwise, return False."""
        if self.sym[0] == ty:
            self.advance()
            return True
        return False

    def expect(self, ty):
        """Advance to the next token if the current token matches a given
        token.  Otherwise, fail."""
        if not self.accept(ty):
            raise self.ParseError("Expected %s but saw %s" % (ty, repr(self.sym[1])))

    def infer_nvars(self, tokens):
        "Return the number of variables the tokens mention (1 if none)."
        indices = set(v for ty, v in tokens if ty == "var")
        if 0 in indices and len(indices) > 1:
            raise self.ParseError("Mixed use of t and indexed variables")
        return max(indices | set([1]))

    def variable(self, index):
        if index == 0:
            if self.nvars != 1:
                raise self.ParseError("Variable t is ambiguous with %d variables" % self.nvars)
            index = 1
        if index > self.nvars:
            raise self.ParseError("Variable t%d is out of range 1..%d" % (index, self.nvars))
        return LaurentPoly.variable(self.nvars, index - 1)

    def exponent(self):
        "Return a signed integer exponent, optionally parenthesized."
        paren = self.accept("lparen")
        sign = 1
        if self.sym[0] == "arith" and self.sym[1] in ["+", "-"]:
            sign = -1 if self.sym[1] == "-" else 1
            self.advance()
        val = self.sym[1]
        self.expect("int")
        if paren:
            self.expect("rparen")
        return sign*val

    def factor(self):
        "Return a factor (variable, integer, or parenthesized expression)."
        val = self.sym[1]
        if self.accept("var"):
            return self.variable(val)
        if self.accept("int"):
            return LaurentPoly.constant(self.nvars, val)
        if self.accept("lparen"):
            child = self.expression()
            self.expect("rparen")
            return child
        if val == "EOF":
            raise self.ParseError("Parse error at end of expression")
        raise self.ParseError('Parse error at "%s"' % val)

    def power(self):
        "Return a factor or a factor raised to an integer power."
        base = self.factor()
        if self.accept("power"):
            k = self.exponent()
            if k < 0 and not base.is_monomial():
                raise self.ParseError("Only monomials may be raised to negative powers")
            return base**k
        return base

    def unary(self):
        "Return a unary operator applied to a power."
        op = self.sym[1]
        if self.sym[0] == "arith" and op in ["+", "-"]:
            self.advance()
            child = self.unary()
            return -child if op == "-" else child
        return self.power()

    def term(self):
        "Return a term (product and quotient of one or more unaries)."
        result = self.unary()
        while self.sym[0] == "arith" and self.sym[1] in ["*", "/"]:
            op = self.sym[1]
            self.advance()
            rhs = self.unary()
            if op == "*":
                result = result*rhs
            elif not rhs.is_monomial():
                raise self.ParseError("Division is allowed only by nonzero monomials")
            else:
                result = result*rhs**-1
        return result

    def expression(self):
        "Return an expression (sum of one or more terms)."
        result = self.term()
        while self.sym[0] == "arith" and self.sym[1] in ["+", "-"]:
            op = self.sym[1]
            self.advance()
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def parse(self, s):
        "Parse a Laurent polynomial, raising InputError on failure."
        try:
            self.tokens = self.lex(s)
            if self.nvars == None:
                self.nvars = self.infer_nvars(self.tokens)
            self.tokidx = -1
            self.advance()
            result = self.expression()
            if self.sym[0] != "EOF":
                raise self.ParseError('Parse error at "%s"' % self.sym[1])
        except self.ParseError as e:
            raise InputError('%s in "%s"' % (e, s))
        return result

def parse_laurent(s, nvars=None):
    "Parse a textual Laurent polynomial."
    return LaurentParser(nvars).parse(s)

###########################################################################

def load_json(filename):
    "Read a JSON document from a file or, for \"-\", from standard input."
    try:
        if filename == "-":
            return json.load(sys.stdin)
        with open(filename) as infile:
            return json.load(infile)
    except IOError as e:
        raise InputError("Failed to read %s (%s)" % (filename, e.strerror))
    except ValueError as e:
        raise InputError("Failed to parse %s as JSON (%s)" % (filename, e))

def _field(data, key, what):
    try:
        return data[key]
    except (KeyError, TypeError):
        raise InputError("%s is missing the \"%s\" field" % (what, key))

def laurent_from_json(value, nvars=None):
    "Accept a LaurentPoly object, a textual polynomial or a rational constant."
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, str):
        return parse_laurent(value, nvars)
    if isinstance(value, dict):
        n = _field(value, "nvars", "Laurent polynomial")
        if nvars != None and n != nvars:
            raise InputError("Polynomial has %s variables but %d were expected" % (n, nvars))
        terms = {}
        for term in _field(value, "terms", "Laurent polynomial"):
            exps = tuple(_field(term, "exps", "Laurent term"))
            if exps in terms:
                raise InputError("Exponent vector %s appears twice" % list(exps))
            terms[exps] = rational({"num": _field(term, "num", "Laurent term"), "den": term.get("den", 1)})
        return LaurentPoly(n, terms)
    if nvars == None:
        raise InputError("Cannot infer the number of variables of %s" % repr(value))
    return LaurentPoly.constant(nvars, rational(value))

def laurent_matrix_from_json(rows, nvars):
    return [[laurent_from_json(e, nvars) for e in row] for row in rows]

def local_system_from_json(data):
    "Build a LocalSystem from {\"n\": n, \"monodromies\": [matrix, ...]}."
    n = _field(data, "n", "Local system")
    mats = [rational_matrix(m) for m in _field(data, "monodromies", "Local system")]
    return LocalSystem(n, mats)

def _degree_matrices(block):
    result = {}
    for j, entry in block.items():
        try:
            degree = int(j)
        except ValueError:
            raise InputError("Fiber degree %s is not an integer" % repr(j))
        mats = entry["matrices"] if isinstance(entry, dict) else entry
        result[degree] = [rational_matrix(m) for m in mats]
    return result

def fibration_from_json(data):
    "Build a FibrationModel from the fibration schema."
    n = _field(data, "n", "Fibration")
    generators = _field(data, "generators", "Fibration")
    degrees = _degree_matrices(_field(data, "degrees", "Fibration"))
    homology = _degree_matrices(data.get("homology", {}))
    return FibrationModel(n, generators, _field(data, "images", "Fibration"),
                          data.get("kernel_words", []), degrees,
                          fiber_betti=data.get("fiber_betti"), homology=homology,
                          hypersurface=data.get("hypersurface", True))

def module_from_json(data):
    "Build an FPModule from {\"nvars\", \"generators\", \"presentation\"}."
    nvars = _field(data, "nvars", "Module")
    g = _field(data, "generators", "Module")
    rows = laurent_matrix_from_json(_field(data, "presentation", "Module"), nvars)
    ncols = data.get("relations")
    return FPModule(nvars, g, rows, ncols=ncols)

def artinian_from_json(data, nvars=None):
    "Build an ArtinianModule from {\"qdim\", \"t_ops\"}."
    qdim = _field(data, "qdim", "Artinian module")
    ops = _field(data, "t_ops", "Artinian module")
    nvars = data.get("nvars", len(ops) if nvars == None else nvars)
    return ArtinianModule(nvars, qdim, [rational_matrix(op, qdim) for op in ops])

def results_from_json(data):
    "Return a map degree -> ArtinianModule from a result bundle."
    modules = data.get("modules", data) if isinstance(data, dict) else None
    if not isinstance(modules, dict):
        raise InputError("A result bundle must map degrees to Artinian modules")
    results = {}
    for i, entry in modules.items():
        if i == "context":
            continue
        try:
            degree = int(i)
        except ValueError:
            raise InputError("Degree %s is not an integer" % repr(i))
        results[degree] = artinian_from_json(entry)
    return results

def context_from_json(data):
    "Build a GeometryContext from {\"n\", \"d\", ...}."
    return GeometryContext(_field(data, "n", "Context"), _field(data, "d", "Context"),
                           smooth_fiber=data.get("smooth_fiber", False),
                           degree=data.get("degree"),
                           smooth_total_space=data.get("smooth_total_space", False),
                           proper=data.get("proper", False))

readers = {
    "complex": complex_from_json,
    "local_system": local_system_from_json,
    "fibration": fibration_from_json,
    "module": module_from_json,
    "artinian": artinian_from_json,
    "results": results_from_json,
    "context": context_from_json,
}

def read_input(filename, kind):
    "Load a JSON file and convert it with the reader for kind."
    data = load_json(filename)
    if not isinstance(data, dict):
        raise InputError("%s does not contain a JSON object" % filename)
    try:
        return readers[kind](data)
    except (KeyError, TypeError, AttributeError) as err:
        raise InputError("Malformed %s description in %s (%s)" % (kind.replace("_", " "), filename, err))
