###################################
# Parse the alexmod command line  #
###################################

import argparse
import shlex
import sys
from alexmod.models import builders

class ParseCommandLine(object):
    def parse_command_line(self, argv=None):
        "Parse the alexmod command line.  Return an argparse.Namespace."

        # Options shared by every subcommand.
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("-v", "--verbose", action="count", default=0,
                            help="increase output verbosity (can be specified repeatedly)")
        common.add_argument("-o", "--output", metavar="FILE", default="<stdout>",
                            help="file to which to write the result (default: standard output)")
        common.add_argument("--format", choices=["json", "text"], default="text",
                            help="output format (default: text)")
        common.add_argument("--verify", action="store_true",
                            help="cross-check results with independent algorithms")

        # Define all of our subcommands.
        cl_parser = argparse.ArgumentParser(prog=self.progname(),
                                            description="Compute cohomological Alexander modules and their maximal Artinian submodules")
        subparsers = cl_parser.add_subparsers(dest="command", metavar="COMMAND")
        subparsers.required = True

        alex = subparsers.add_parser("alexander", parents=[common],
                                     help="Alexander module of a simplicial complex mapping to a torus")
        alex.add_argument("--input", metavar="FILE", required=True,
                          help='complex description in JSON ("-" for standard input)')
        alex.add_argument("--degree", metavar="INT", type=int, required=True,
                          help="cohomological degree i")
        alex.add_argument("--s0", action="store_true",
                          help="report the maximal Artinian submodule instead of a presentation")
        alex.add_argument("--homology", action="store_true",
                          help="use the homology Alexander module (n = 1 only)")

        mellin = subparsers.add_parser("mellin", parents=[common],
                                       help="Mellin transform of a local system on the torus")
        mellin.add_argument("--input", metavar="FILE", required=True,
                            help="local system description in JSON")

        fib = subparsers.add_parser("fibration", parents=[common],
                                    help="S0 module of a fibration from fiber monodromy data")
        fib.add_argument("--input", metavar="FILE", required=True,
                         help="fibration description in JSON")
        fib.add_argument("--degree", metavar="INT", type=int, required=True,
                         help="degree i (a fiber homology degree with --coinvariants)")
        fib.add_argument("--coinvariants", action="store_true",
                         help="compute torsion homology as kernel coinvariants (n = 1 only)")

        mod = subparsers.add_parser("module", parents=[common],
                                    help="structure of a finitely presented module")
        mod.add_argument("--input", metavar="FILE", required=True,
                         help="module presentation in JSON")
        what = mod.add_mutually_exclusive_group(required=True)
        what.add_argument("--snf", action="store_true",
                          help="Smith normal form and invariant factors (n = 1 only)")
        what.add_argument("--s0", action="store_true",
                          help="maximal Artinian submodule")

        check = subparsers.add_parser("check", parents=[common],
                                      help="check a bundle of S0 modules against the vanishing and Jordan bounds")
        check.add_argument("--input", metavar="FILE", required=True,
                           help="result bundle in JSON (degree -> Artinian module)")
        check.add_argument("--context", metavar="FILE", default=None,
                           help='geometry context in JSON (default: the bundle\'s "context" entry)')

        model = subparsers.add_parser("model", parents=[common],
                                      help="write a standard simplicial model in the complex JSON schema")
        model.add_argument("name", choices=sorted(builders.keys()),
                           help="model to build")
        model.add_argument("--winding", metavar="Z[,Z...]", action="append", default=None,
                           help="winding vector of a circle, or of each wedge summand (repeatable)")

        # Parse the command line.
        cl_args = cl_parser.parse_args(argv)
        self.argv = list(sys.argv) if argv == None else [self.progname()] + list(argv)

        # Perform a few sanity checks on the parameters.
        if getattr(cl_args, "degree", 0) < 0:
            self.abend("The degree must be nonnegative (saw %d)" % cl_args.degree)
        if cl_args.command == "model" and cl_args.winding != None:
            try:
                cl_args.winding = [[int(z) for z in w.split(",")] for w in cl_args.winding]
            except ValueError:
                self.abend("Failed to parse the winding vectors %s" % cl_args.winding)
        return cl_args

    def get_command_line(self):
        "Return the command line as a string, properly quoted."
        return " ".join([shlex.quote(a) for a in self.argv])

    def report_command_line(self, cl_args):
        "For provenance and debugging purposes, report our command line parameters."
        # Output the command line as is.
        verbosity = cl_args.verbose
        if verbosity < 1:
            return
        sys.stderr.write("Command line provided:\n\n")
        sys.stderr.write("    %s\n\n" % self.get_command_line())

        # At higher levels of verbosity, output every single option.
        if verbosity < 2:
            return
        sys.stderr.write("All alexmod parameters:\n\n")
        params = vars(cl_args)
        klen = max([len(a) for a in params.keys()])
        klen = max(klen + 2, len("Option"))   # +2 for "--"
        vlen = max([len(repr(a)) for a in params.values()])
        vlen = max(vlen, len("Value(s)"))
        sys.stderr.write("    %-*s  %-*s\n" % (klen, "Option", vlen, "Value(s)"))
        sys.stderr.write("    %s  %s\n" % ("-" * klen, "-" * vlen))
        for k in sorted(params.keys()):
            kname = k.replace("_", "-")
            sys.stderr.write("    %-*s  %-*s\n" % (klen, "--" + kname, vlen, repr(params[k])))
        sys.stderr.write("\n")
