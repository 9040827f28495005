#! /usr/bin/env python

###################################
# Alexander module calculator     #
###################################

import logging
import sys
from alexmod.checks import has_violation, is_semisimple, run_checks
from alexmod.cmdline import ParseCommandLine
from alexmod.groebner import is_s0_element, s0_submodule
from alexmod.mellin import (invariants_factor_through_torus, kernel_coinvariants, kernel_invariants,
                            mellin_agrees, mellin_stalk)
from alexmod.models import builders
from alexmod.output import (OutputMixin, artinian_to_json, artinian_to_text, decomposition_to_json,
                            decomposition_to_text, matrix_to_text, module_to_json, module_to_text,
                            qt_to_json, report_to_text)
from alexmod.parse import context_from_json, load_json, read_input, results_from_json
from alexmod.pid import invariant_factors, modules_similar, smith_decomposition, torsion_summary
from alexmod.ring import laurent_matmul
from alexmod.twisted import (cohomology_of, complex_to_json, duality_check, homology_of,
                             twisted_chain_complex)
from alexmod.utils import InputError, InternalError, Utilities

# Exit codes
EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INTERNAL = 2
EXIT_VIOLATION = 3

def configure_logging(verbosity):
    "Map the -v count to a log level for every alexmod logger."
    if verbosity < 1:
        level = logging.WARNING
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = logging.DEBUG
    logging.basicConfig(format="%(name)s: %(message)s", stream=sys.stderr)
    logging.getLogger("alexmod").setLevel(level)

class AlexMod(ParseCommandLine, Utilities, OutputMixin):
    "AlexMod represents everything the program can do."

    def run(self, argv=None):
        "Execute one subcommand and return an exit code."

        # Parse the command line.
        try:
            cl_args = self.parse_command_line(argv)
        except SystemExit as e:
            return EXIT_OK if e.code in [0, None] else EXIT_INPUT
        configure_logging(cl_args.verbose)
        self.report_command_line(cl_args)

        # Dispatch to the subcommand, mapping our errors to exit codes.
        handler = getattr(self, "do_" + cl_args.command)
        try:
            doc, lines, code = handler(cl_args)
        except InputError as e:
            self.abend(str(e), EXIT_INPUT)
        except InternalError as e:
            self.abend("Internal consistency failure: %s" % e, EXIT_INTERNAL)
        self.write_result(cl_args.output, cl_args.format, doc, lines)
        return code

    def verified(self, ok, what):
        "Abort with an internal error if a cross-check failed."
        if not ok:
            raise InternalError("Verification failed: %s" % what)
        logging.getLogger(__name__).info("Verified: %s", what)

    def s0_of(self, module, verify):
        """Return S0 M: the torsion submodule for n = 1, cross-checked against
        the Ext route, and for n >= 2 the Ext route, cross-checked against
        the per-element membership oracle."""
        if module.nvars == 1:
            art = torsion_summary(module)
            if verify:
                self.verified(modules_similar(art, s0_submodule(module)[0]),
                              "S0 agrees with the torsion submodule")
            return art
        art, inclusion = s0_submodule(module)
        if verify:
            for j in range(art.qdim):
                column = tuple(row[j] for row in inclusion)
                self.verified(is_s0_element(module, column), "S0 basis vector %d lies in S0" % (j + 1))
        return art

    def do_alexander(self, cl_args):
        "Compute an Alexander module, its invariant factors or its S0 part."
        cx, w = read_input(cl_args.input, "complex")
        i = cl_args.degree
        chains = twisted_chain_complex(cx, w)
        if cl_args.homology:
            if w.n != 1:
                raise InputError("Homology Alexander modules are only supported for n = 1 (saw n = %d)" % w.n)
            module = homology_of(chains, i)
            label = "H_%d" % i
        else:
            module = cohomology_of(chains, i)
            label = "H^%d" % i
        if cl_args.verify and w.n == 1:
            if cl_args.homology:
                self.verified(duality_check(cx, w, i), "torsion of H_%d matches H^%d" % (i, i + 1))
            elif i > 0:
                self.verified(duality_check(cx, w, i - 1), "torsion of H_%d matches H^%d" % (i - 1, i))
        if cl_args.s0:
            art = self.s0_of(module, cl_args.verify)
            return artinian_to_json(art), ["S0 %s" % label] + artinian_to_text(art), EXIT_OK
        doc = {"degree": i, "kind": "homology" if cl_args.homology else "cohomology",
               "module": module_to_json(module)}
        lines = ["%s over %d variable(s)" % (label, w.n)] + module_to_text(module)
        if w.n == 1:
            dec = invariant_factors(module)
            doc["decomposition"] = decomposition_to_json(dec)
            doc["alexander_polynomial"] = qt_to_json(dec.alexander_polynomial())
            lines.extend(decomposition_to_text(dec))
        return doc, lines, EXIT_OK

    def do_mellin(self, cl_args):
        "Report the Mellin transform of a local system: one Artinian module in degree n."
        local = read_input(cl_args.input, "local_system")
        degree, stalk = mellin_stalk(local)
        if cl_args.verify:
            self.verified(mellin_agrees(local), "Koszul cohomology matches the stalk formula")
        doc = {"degree": degree, "module": artinian_to_json(stalk)}
        lines = ["degree: %d" % degree] + artinian_to_text(stalk)
        return doc, lines, EXIT_OK

    def do_fibration(self, cl_args):
        "Compute S0 H^i from fiber monodromy data, or torsion homology as coinvariants."
        fibration = read_input(cl_args.input, "fibration")
        self.warn("Assuming the kernel words normally generate the kernel of the map to Z^%d" % fibration.n)
        i = cl_args.degree
        if cl_args.coinvariants:
            art = kernel_coinvariants(fibration, i)
            label = "Tors H_%d" % i
        else:
            art = kernel_invariants(fibration, i)
            label = "S0 H^%d" % i
            if cl_args.verify:
                self.verified(invariants_factor_through_torus(fibration, i),
                              "the K-fixed action factors through Z^%d" % fibration.n)
        return artinian_to_json(art), [label] + artinian_to_text(art), EXIT_OK

    def do_module(self, cl_args):
        "Compute the Smith normal form or the S0 part of a presented module."
        module = read_input(cl_args.input, "module")
        if cl_args.s0:
            art = self.s0_of(module, cl_args.verify)
            return artinian_to_json(art), ["S0"] + artinian_to_text(art), EXIT_OK
        if module.nvars != 1:
            raise InputError("The Smith normal form needs a univariate module (saw %d variables)" % module.nvars)
        sf = smith_decomposition(module.rows(), module.ncols)
        if cl_args.verify:
            product = laurent_matmul(laurent_matmul(sf.u, module.rows(), 1, ncols=module.ncols),
                                     sf.v, 1, ncols=module.ncols)
            self.verified(product == sf.d, "U*P*V = D")
        dec = invariant_factors(module)
        doc = {"decomposition": decomposition_to_json(dec),
               "alexander_polynomial": qt_to_json(dec.alexander_polynomial()),
               "diagonal": [qt_to_json(d) for d in sf.diagonal]}
        lines = decomposition_to_text(dec)
        if module.rank > 0 and module.ncols > 0:
            lines.append("smith form:")
            lines.extend(matrix_to_text(sf.d))
        return doc, lines, EXIT_OK

    def do_check(self, cl_args):
        "Check a bundle of S0 modules against the geometric bounds."
        data = load_json(cl_args.input)
        if not isinstance(data, dict):
            raise InputError("%s does not contain a JSON object" % cl_args.input)
        results = results_from_json(data)
        if cl_args.context != None:
            ctx = read_input(cl_args.context, "context")
        elif "context" in data:
            ctx = context_from_json(data["context"])
        else:
            raise InputError("No geometry context given (use --context)")
        if ctx.smooth_fiber:
            self.warn("Assuming that a general fiber is smooth")
        if ctx.smooth_total_space and ctx.proper:
            self.warn("Assuming a smooth total space and a proper map")
        if cl_args.verify:
            for i, module in sorted(results.items()):
                self.verified(is_semisimple(module) == is_semisimple(module.inverse()),
                              "semisimplicity in degree %d is invariant under t -> t^-1" % i)
        report = run_checks(results, ctx)
        code = EXIT_VIOLATION if has_violation(report) else EXIT_OK
        return report, report_to_text(report), code

    def do_model(self, cl_args):
        "Write a standard model in the complex JSON schema."
        args = {}
        if cl_args.winding != None:
            args["winding"] = cl_args.winding[0]
            args["windings"] = cl_args.winding
        cx, w = builders[cl_args.name](args)
        doc = complex_to_json(cx, w)
        lines = ["vertices: %d" % cx.num_vertices, "dimension: %d" % cx.dim, "torus dimension: %d" % w.n]
        for edge in doc["cocycle"]["edges"]:
            lines.append("edge %s: %s" % (edge["edge"], edge["value"]))
        return doc, lines, EXIT_OK

def run_cli(args):
    "Run alexmod on a list of arguments and return the exit code."
    app = AlexMod()
    try:
        return app.run(args)
    except SystemExit as e:
        return EXIT_OK if e.code == None else e.code

def main():
    "Run alexmod."
    sys.exit(run_cli(sys.argv[1:]))

if __name__ == "__main__":
    main()
