###################################
# Output alexmod results          #
###################################

"""Render modules, decompositions and reports as JSON documents or as
line-oriented text."""

import json
import sys
from alexmod.ring import LaurentPoly, format_laurent, qt_to_laurent

def rational_to_json(q):
    "Render an integer as a JSON number and any other rational as \"p/q\"."
    if q.q == 1:
        return int(q.p)
    return "%d/%d" % (q.p, q.q)

def laurent_to_json(p):
    return {"nvars": p.nvars,
            "terms": [{"exps": list(e), "num": str(c.p), "den": str(c.q)} for e, c in p.terms()]}

def qt_to_json(q):
    "Render an element of Q[t] as a one-variable LaurentPoly object."
    return laurent_to_json(qt_to_laurent(q))

def matrix_to_json(mat):
    return [[rational_to_json(mat[i, j]) for j in range(mat.cols)] for i in range(mat.rows)]

def artinian_to_json(module):
    return {"qdim": module.qdim, "t_ops": [matrix_to_json(op) for op in module.t_ops]}

def module_to_json(module):
    return {"nvars": module.nvars, "generators": module.rank, "relations": module.ncols,
            "presentation": [[laurent_to_json(e) for e in row] for row in module.rows()]}

def decomposition_to_json(dec):
    return {"free_rank": dec.free_rank, "factors": [qt_to_json(d) for d in dec.factors]}

###########################################################################

def _format_entry(e):
    if isinstance(e, LaurentPoly):
        return format_laurent(e)
    return str(e)

def matrix_to_text(rows, indent="  "):
    "Render a matrix (a SymPy matrix or a list of rows) with aligned columns."
    if hasattr(rows, "tolist"):
        rows = rows.tolist()
    cells = [[_format_entry(e) for e in row] for row in rows]
    if len(cells) == 0 or len(cells[0]) == 0:
        return ["%s[]" % indent]
    width = max(len(c) for row in cells for c in row)
    return ["%s[%s]" % (indent, "  ".join("%*s" % (width, c) for c in row)) for row in cells]

def artinian_to_text(module):
    lines = ["qdim: %d" % module.qdim]
    if module.qdim == 0:
        return lines
    for k, op in enumerate(module.t_ops):
        lines.append("%s:" % ("t" if module.nvars == 1 else "t%d" % (k + 1)))
        lines.extend(matrix_to_text(op))
    return lines

def module_to_text(module):
    lines = ["generators: %d" % module.rank, "relations: %d" % module.ncols]
    if module.rank > 0 and module.ncols > 0:
        lines.append("presentation:")
        lines.extend(matrix_to_text(module.rows()))
    return lines

def decomposition_to_text(dec):
    lines = ["free rank: %d" % dec.free_rank]
    for d in dec.factors:
        lines.append("factor: %s" % format_laurent(qt_to_laurent(d)))
    lines.append("alexander polynomial: %s" % format_laurent(qt_to_laurent(dec.alexander_polynomial())))
    return lines

def report_to_text(report):
    "Render a check report with one check per line."
    width = max([len(c["name"]) for c in report["checks"]] + [5])
    lines = []
    for c in report["checks"]:
        lines.append("%-*s  %-9s  expected=%s  observed=%s" %
                     (width, c["name"], c["status"], json.dumps(c["expected"], sort_keys=True),
                      json.dumps(c["observed"], sort_keys=True)))
    return lines

class OutputMixin(object):
    "Provide functions for outputting alexmod results."

    def open_output_file(self, oname):
        "Open a file or standard output."
        if oname == "<stdout>":
            outfile = sys.stdout
        else:
            try:
                outfile = open(oname, "w")
            except IOError:
                self.abend('Failed to open %s for output' % oname)
        return outfile

    def close_output_file(self, outfile):
        if outfile != sys.stdout:
            outfile.close()

    def write_result(self, oname, fmt, doc, lines):
        "Write either a JSON document or lines of text to a file or standard output."
        outfile = self.open_output_file(oname)
        if fmt == "json":
            json.dump(doc, outfile, indent=2, sort_keys=True)
            outfile.write("\n")
        else:
            for line in lines:
                outfile.write("%s\n" % line)
        self.close_output_file(outfile)
