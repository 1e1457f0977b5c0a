#!/usr/bin/env python

import argparse
import contextlib
import io
import logging
import random
import sys

import rscolour.chordal
import rscolour.colouring
import rscolour.constructions
import rscolour.datasources
import rscolour.gadgets
import rscolour.generators
import rscolour.graph
import rscolour.hessian
import rscolour.solver
import rscolour.tree3rs
from rscolour.errors import BudgetExceeded, InputError
from rscolour.progress import Progress

log = logging.getLogger("rscolour")

EXIT_YES = 0
EXIT_NO = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

LOG_FORMAT = "%(name)-20s %(levelname)-8s %(message)s"


def _result(token):
    print("RESULT: %s" % token)


def _vertex_list(text):
    """
    Parses a comma separated list of 1-based vertices into 0-based ids.
    """
    try:
        return [int(item) - 1 for item in text.split(",") if item.strip()]
    except ValueError:
        raise InputError("expected a comma separated vertex list, got %r" % text)


def _one_based(vertices):
    return " ".join(str(v + 1) for v in vertices)


def _read_graph(args):
    return rscolour.datasources.GraphFile(args.graph).read()


def _read_colouring(args, g, k=None):
    return rscolour.datasources.ColouringFile(args.colouring, g.n, k).read()


def _budget(args):
    return rscolour.solver.SolveBudget(args.budget_nodes, args.budget_secs)


def _print_colouring(c):
    for v, colour in enumerate(c.assignment, 1):
        print("%d %d" % (v, colour))


def _emit_graph(args, g):
    if args.out:
        rscolour.datasources.write_graph(args.out, g)
    if args.dot:
        rscolour.datasources.write_dot(args.dot, g)
    print("vertices: %d edges: %d" % (g.n, g.m))


def cmd_verify(args):
    g = _read_graph(args)
    c = _read_colouring(args, g, args.k)
    kind = args.kind
    witness = None
    if kind == "proper":
        witness = rscolour.colouring.proper_violation(g, c)
    elif kind == "rs":
        witness = rscolour.colouring.rs_witness(g, c)
    elif kind == "star":
        witness = rscolour.colouring.star_witness(g, c)
    elif kind == "ordered":
        witness = None if rscolour.colouring.is_ordered(g, c) else ()
    else:
        witness = None if rscolour.colouring.is_distance_two(g, c) else ()

    if witness is None:
        _result("VALID")
        return EXIT_YES
    _result("INVALID")
    if witness:
        print("witness: %s" % _one_based(witness))
    return EXIT_NO


def cmd_solve(args):
    g = _read_graph(args)
    budget = _budget(args)
    mode = args.mode

    if mode == "decide":
        if args.k is None:
            raise InputError("solve --mode decide needs -k")
        pre = None
        if args.colouring:
            pre = rscolour.datasources.ColouringFile(args.colouring, g.n, args.k, partial=True).read()
        result = rscolour.solver.decide_k_rs(g, args.k, pre, budget, args.threads)
        _result(result.status.name)
        print("nodes: %d" % result.nodes)
        if result.yes:
            if args.colouring_out:
                rscolour.datasources.write_colouring(args.colouring_out, result.witness)
            else:
                _print_colouring(result.witness)
        return {rscolour.solver.Status.YES: EXIT_YES,
                rscolour.solver.Status.NO: EXIT_NO}.get(result.status, EXIT_BUDGET)

    if mode == "mis":
        chosen = rscolour.solver.max_independent_set(g, budget)
        _result(str(len(chosen)))
        print("vertices: %s" % _one_based(chosen))
        return EXIT_YES

    chromatic = {
        "rs-chi": rscolour.solver.rs_chromatic_number,
        "star-chi": rscolour.solver.star_chromatic_number,
        "ordered-chi": rscolour.solver.ordered_chromatic_number,
        "chi": rscolour.solver.chromatic_number,
    }[mode]
    _result(str(chromatic(g, budget, args.threads)))
    return EXIT_YES


def cmd_tree3rs(args):
    g = _read_graph(args)
    verdict = rscolour.tree3rs.test_3rs_tree(g)
    if verdict.colourable:
        _result("YES")
        return EXIT_YES
    _result("NO")
    print("reason: %s" % verdict.describe(lambda v: str(v + 1)))
    return EXIT_NO


def cmd_chordal3rs(args):
    g = _read_graph(args)
    verdict = rscolour.chordal.test_3rs_chordal(g)
    if args.dump_tree and verdict.trees:
        rscolour.datasources.write_graph(args.dump_tree, rscolour.graph.disjoint_union(*verdict.trees))
    _result("YES" if verdict.colourable else "NO")
    print("eliminations: %d" % verdict.eliminations)
    if verdict.colourable:
        return EXIT_YES
    if verdict.reason == "type_i_triangle":
        print("reason: triangle %s has every degree >= 3" % _one_based(verdict.triangle))
    else:
        print("reason: %s in the reduced tree" % verdict.tree_verdict.describe(lambda v: str(v + 1)))
    return EXIT_NO


def cmd_path_feasible(args):
    feasible = rscolour.tree3rs.path_3rs_feasible(args.n, args.i, args.j)
    _result("YES" if feasible else "NO")
    return EXIT_YES if feasible else EXIT_NO


def cmd_gen_sat(args):
    f = rscolour.datasources.CnfFile(args.cnf).read()
    gg = rscolour.gadgets.sat_to_graph(f, args.variant, args.s)
    _result("GENERATED")
    _emit_graph(args, gg.graph)
    if args.names:
        rscolour.datasources.write_names(args.names, gg.names())
    if args.assignment:
        values = [item.strip() for item in args.assignment.split(",")]
        if len(values) != f.num_vars or any(value not in ("0", "1") for value in values):
            raise InputError("--assignment needs %d comma separated 0/1 values" % f.num_vars)
        assignment = {i: value == "1" for i, value in enumerate(values, 1)}
        c = rscolour.gadgets.assignment_to_3rs_colouring(f, gg, assignment)
        if args.colouring_out:
            rscolour.datasources.write_colouring(args.colouring_out, c)
        else:
            _print_colouring(c)
    return EXIT_YES


def cmd_gen_blowup(args):
    g = _read_graph(args)
    blowup = rscolour.constructions.edge_blowup(g)
    _result("GENERATED")
    _emit_graph(args, blowup.graph)
    if args.colouring:
        lifted = rscolour.constructions.colouring_lift(g, blowup, _read_colouring(args, g))
        if args.colouring_out:
            rscolour.datasources.write_colouring(args.colouring_out, lifted)
        else:
            _print_colouring(lifted)
    return EXIT_YES


def cmd_gplus(args):
    g = _read_graph(args)
    padded = rscolour.constructions.g_plus(g)
    _result("GENERATED")
    _emit_graph(args, padded)
    return EXIT_YES


def cmd_split_chi(args):
    g = _read_graph(args)
    clique = set(_vertex_list(args.clique))
    p = rscolour.constructions.SplitPartition(frozenset(clique), frozenset(set(g.vertices()) - clique))
    _result(str(rscolour.constructions.split_rs_chromatic(g, p)))
    return EXIT_YES


def cmd_cobip_convert(args):
    g = _read_graph(args)
    a = set(_vertex_list(args.part_a))
    p = rscolour.constructions.CoBipartitePartition(frozenset(a), frozenset(set(g.vertices()) - a))
    sc = _read_colouring(args, g, args.k)
    converted = rscolour.constructions.star_to_ordered_cobipartite(g, p, sc)
    _result("CONVERTED")
    if args.colouring_out:
        rscolour.datasources.write_colouring(args.colouring_out, converted)
    else:
        _print_colouring(converted)
    return EXIT_YES


def cmd_hess_compress(args):
    h, pattern = rscolour.datasources.MatrixMarketFile(args.matrix).read()
    g = rscolour.hessian.pattern_to_graph(pattern)
    order = rscolour.hessian.LARGEST_DEGREE_FIRST if args.order == "ldf" else rscolour.hessian.NATURAL
    grouping = rscolour.hessian.SeedGrouping.from_colouring(rscolour.hessian.greedy_rs_colouring(g, order), pattern)
    b = rscolour.hessian.compress(h, grouping, pattern)
    _result("COMPRESSED")
    print("columns: %d colours: %d" % (pattern.n, grouping.colouring.k))
    if args.out:
        rscolour.datasources.write_dense_csv(args.out, b)
    if args.colouring_out:
        rscolour.datasources.write_colouring(args.colouring_out, grouping.colouring)
    return EXIT_YES


def cmd_hess_recover(args):
    _, pattern = rscolour.datasources.MatrixMarketFile(args.matrix).read()
    g = rscolour.hessian.pattern_to_graph(pattern)
    grouping = rscolour.hessian.SeedGrouping.from_colouring(_read_colouring(args, g), pattern)
    b = rscolour.datasources.read_dense_csv(args.compressed)
    if b.shape != (pattern.n, grouping.colouring.k):
        raise InputError("compressed matrix is %d x %d, expected %d x %d"
                         % (b.shape + (pattern.n, grouping.colouring.k)))
    h = rscolour.hessian.recover(b, pattern, grouping)
    _result("RECOVERED")
    if args.out:
        rscolour.datasources.write_dense_csv(args.out, h)
    return EXIT_YES


def _crosscheck_instance(family, n, rng):
    if family == "tree":
        g = rscolour.generators.random_tree(n, rng)
        return g, rscolour.tree3rs.test_3rs_tree(g).colourable
    g = rscolour.generators.random_chordal(n, rng)
    return g, rscolour.chordal.test_3rs_chordal(g).colourable


def cmd_crosscheck(args):
    if args.min_n < 1 or args.max_n < args.min_n:
        raise InputError("need 1 <= --min-n <= --max-n")
    rng = random.Random(args.seed)
    budget = _budget(args)
    progress = Progress(args.count)
    for _ in range(args.count):
        g, fast = _crosscheck_instance(args.family, rng.randint(args.min_n, args.max_n), rng)
        result = rscolour.solver.decide_k_rs(g, 3, budget=budget)
        if result.status is rscolour.solver.Status.BUDGET_EXCEEDED:
            raise BudgetExceeded("exact solver ran out of budget on a %d-vertex instance" % g.n, result.nodes)
        if result.yes != fast:
            log.warning("disagreement on %r: tester %s, exact solver %s", g, fast, result.status.value)
        progress.advance(flagged=result.yes != fast)
    _result("AGREE" if progress.clean else "DISAGREE")
    print("instances: %d disagreements: %d" % (progress.done, progress.flagged))
    return EXIT_YES if progress.clean else EXIT_NO


def cmd_gen_random(args):
    rng = random.Random(args.seed)
    family = args.family
    extra = []
    if family == "tree":
        g = rscolour.generators.random_tree(args.n, rng)
    elif family == "chordal":
        g = rscolour.generators.random_chordal(args.n, rng)
    elif family == "split":
        g, p = rscolour.generators.random_split(args.n, rng)
        extra = ["clique: %s" % _one_based(sorted(p.clique)), "independent: %s" % _one_based(sorted(p.independent))]
    elif family == "cobipartite":
        g, p = rscolour.generators.random_cobipartite(args.n, rng)
        extra = ["part A: %s" % _one_based(sorted(p.a)), "part B: %s" % _one_based(sorted(p.b))]
    else:
        g = rscolour.graph.hypercube(args.n)
    _result("GENERATED")
    _emit_graph(args, g)
    for line in extra:
        print(line)
    return EXIT_YES


def _add_budget(parser):
    parser.add_argument('--budget-nodes', type=int, dest='budget_nodes', default=rscolour.solver.DEFAULT_MAX_NODES,
                        help="search node limit (default %d)" % rscolour.solver.DEFAULT_MAX_NODES)
    parser.add_argument('--budget-secs', type=float, dest='budget_secs', default=rscolour.solver.DEFAULT_TIME_LIMIT,
                        help="wall clock limit in seconds (default %g)" % rscolour.solver.DEFAULT_TIME_LIMIT)


def _add_output(parser):
    parser.add_argument('-o', '--out', dest='out', default=None, help="write the resulting graph file here")
    parser.add_argument('--dot', dest='dot', default=None, help="also write the graph in DOT format here")


class _Parser(argparse.ArgumentParser):
    """
    Usage mistakes raise InputError instead of exiting.
    """

    def error(self, message):
        raise InputError("%s: %s" % (self.prog, message))


def build_parser():
    parser = _Parser(prog="rscolour", formatter_class=argparse.RawTextHelpFormatter,
                     description="""
Restricted star (rs) colouring toolkit

Verifies colourings, decides k-rs colourability exactly, tests 3-rs
colourability of trees and chordal graphs in polynomial time, builds the
gadget and blow-up graphs of the hardness reductions, and compresses sparse
symmetric matrices through rs colourings.

The first line printed is always "RESULT: <token>". Exit status: 0 yes/valid,
1 no/invalid, 2 input error, 3 budget exceeded.""")

    parser.add_argument('-v', '--verbose', action='count', dest='verbose', default=0,
                        help="log progress to stderr (-v for info, -vv for debug)")
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    p = commands.add_parser('verify', help="check a colouring against a graph")
    p.add_argument('-g', dest='graph', required=True, help="graph file")
    p.add_argument('-c', dest='colouring', required=True, help="colouring file")
    p.add_argument('-k', type=int, dest='k', default=None, help="colour budget (default: largest colour + 1)")
    p.add_argument('--kind', choices=['proper', 'rs', 'star', 'ordered', 'distance-two'], default='rs')
    p.set_defaults(func=cmd_verify)

    p = commands.add_parser('solve', help="exact decision and optimisation")
    p.add_argument('-g', dest='graph', required=True, help="graph file")
    p.add_argument('-k', type=int, dest='k', default=None, help="number of colours (decide mode)")
    p.add_argument('-c', dest='colouring', default=None, help="partial colouring file to extend (decide mode)")
    p.add_argument('--mode', choices=['decide', 'rs-chi', 'star-chi', 'ordered-chi', 'chi', 'mis'], default='decide')
    p.add_argument('--threads', type=int, default=rscolour.solver.DEFAULT_THREADS,
                   help="worker processes (default %d)" % rscolour.solver.DEFAULT_THREADS)
    p.add_argument('--colouring-out', dest='colouring_out', default=None, help="write the witness here")
    _add_budget(p)
    p.set_defaults(func=cmd_solve)

    p = commands.add_parser('tree3rs', help="linear-time 3-rs test for a tree")
    p.add_argument('-g', dest='graph', required=True, help="graph file holding a tree")
    p.set_defaults(func=cmd_tree3rs)

    p = commands.add_parser('chordal3rs', help="3-rs test for a chordal graph")
    p.add_argument('-g', dest='graph', required=True, help="graph file holding a chordal graph")
    p.add_argument('--dump-tree', dest='dump_tree', default=None, help="write the reduced tree(s) here")
    p.set_defaults(func=cmd_chordal3rs)

    p = commands.add_parser('path-feasible', help="can P_n be 3-rs coloured with end colours i and j")
    p.add_argument('-n', type=int, required=True, help="number of path vertices")
    p.add_argument('-i', type=int, required=True, choices=[0, 1], help="colour of the first end")
    p.add_argument('-j', type=int, required=True, choices=[0, 1], help="colour of the last end")
    p.set_defaults(func=cmd_path_feasible)

    p = commands.add_parser('gen-sat', help="gadget graph of a positive 3-CNF formula")
    p.add_argument('-f', dest='cnf', required=True, help="DIMACS cnf file (positive, three literals per clause)")
    p.add_argument('--variant', choices=[rscolour.gadgets.BASIC, rscolour.gadgets.GIRTH], default=rscolour.gadgets.BASIC)
    p.add_argument('--s', type=int, dest='s', default=2, help="blocks per side for the girth variant (even, >= 2)")
    p.add_argument('--names', default=None, help="write the gadget vertex names here")
    p.add_argument('--assignment', default=None, help="comma separated 0/1 per variable; emits the 3-rs colouring")
    p.add_argument('--colouring-out', dest='colouring_out', default=None)
    _add_output(p)
    p.set_defaults(func=cmd_gen_sat)

    p = commands.add_parser('gen-blowup', help="replace each edge by K_{2,D+1}")
    p.add_argument('-g', dest='graph', required=True, help="graph file")
    p.add_argument('-c', dest='colouring', default=None, help="proper colouring of the input to lift")
    p.add_argument('--colouring-out', dest='colouring_out', default=None)
    _add_output(p)
    p.set_defaults(func=cmd_gen_blowup)

    p = commands.add_parser('gplus', help="pad every vertex with pendants to degree D+1")
    p.add_argument('-g', dest='graph', required=True, help="graph file")
    _add_output(p)
    p.set_defaults(func=cmd_gplus)

    p = commands.add_parser('split-chi', help="rs chromatic number of a split graph")
    p.add_argument('-g', dest='graph', required=True, help="graph file")
    p.add_argument('--clique', required=True, help="comma separated 1-based clique vertices")
    p.set_defaults(func=cmd_split_chi)

    p = commands.add_parser('cobip-convert', help="star colouring to ordered colouring on a co-bipartite graph")
    p.add_argument('-g', dest='graph', required=True, help="graph file")
    p.add_argument('-c', dest='colouring', required=True, help="star colouring file")
    p.add_argument('-k', type=int, dest='k', default=None, help="colour budget (default: largest colour + 1)")
    p.add_argument('--part-a', dest='part_a', required=True, help="comma separated 1-based vertices of one clique")
    p.add_argument('--colouring-out', dest='colouring_out', default=None)
    p.set_defaults(func=cmd_cobip_convert)

    p = commands.add_parser('hess-compress', help="compress a symmetric matrix with a greedy rs colouring")
    p.add_argument('-m', '--matrix', dest='matrix', required=True, help="Matrix Market file")
    p.add_argument('--order', choices=['natural', 'ldf'], default='natural')
    p.add_argument('-o', '--out', dest='out', default=None, help="write the compressed matrix (CSV) here")
    p.add_argument('--colouring-out', dest='colouring_out', default=None, help="write the column grouping here")
    p.set_defaults(func=cmd_hess_compress)

    p = commands.add_parser('hess-recover', help="recover a symmetric matrix from its compressed form")
    p.add_argument('-m', '--matrix', dest='matrix', required=True, help="Matrix Market file giving the pattern")
    p.add_argument('-b', '--compressed', dest='compressed', required=True, help="compressed matrix (CSV)")
    p.add_argument('-c', dest='colouring', required=True, help="column grouping (colouring file)")
    p.add_argument('-o', '--out', dest='out', default=None, help="write the recovered matrix (CSV) here")
    p.set_defaults(func=cmd_hess_recover)

    p = commands.add_parser('crosscheck', help="compare a polynomial tester with the exact solver")
    p.add_argument('--family', choices=['tree', 'chordal'], default='tree')
    p.add_argument('--count', type=int, default=100)
    p.add_argument('--min-n', type=int, dest='min_n', default=4)
    p.add_argument('--max-n', type=int, dest='max_n', default=12)
    p.add_argument('--seed', type=int, default=rscolour.generators.DEFAULT_SEED)
    _add_budget(p)
    p.set_defaults(func=cmd_crosscheck)

    p = commands.add_parser('gen-random', help="write a random instance")
    p.add_argument('--family', choices=['tree', 'chordal', 'split', 'cobipartite', 'hypercube'], default='tree')
    p.add_argument('-n', type=int, required=True, help="number of vertices (dimension for hypercube)")
    p.add_argument('--seed', type=int, default=rscolour.generators.DEFAULT_SEED)
    _add_output(p)
    p.set_defaults(func=cmd_gen_random)

    return parser


def run(argv):
    """
    Runs one command. Its report is held back until the command returns; on failure only the error is printed.

    :param argv: Command line arguments, without the program name
    :return: The exit status
    """
    try:
        args = build_parser().parse_args(argv)
    except InputError as e:
        _result("ERROR")
        print(str(e))
        return EXIT_INPUT
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)
    report = io.StringIO()
    try:
        with contextlib.redirect_stdout(report):
            status = args.func(args)
    except InputError as e:
        _result("ERROR")
        print(str(e))
        return EXIT_INPUT
    except BudgetExceeded as e:
        _result("BUDGET_EXCEEDED")
        print(str(e))
        return EXIT_BUDGET
    sys.stdout.write(report.getvalue())
    return status


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
