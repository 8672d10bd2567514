"""``nht`` command line interface.

Exit codes: 0 success, 1 domain failure (check fails, invalid key, bad
container, cost guard), 2 usage error, 3 I/O error.
"""

import argparse
import logging
import sys
from pathlib import Path

from nhtkit import catalog, codec, search, tables
from nhtkit.circulant import NhtMatrix, gram, is_identity
from nhtkit.conditions import check_solution
from nhtkit.errors import InvalidCoefficientsError, InvalidModulusError, NhtError

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

log = logging.getLogger("nhtkit")


class UsageError(Exception):
    pass


def _int_list(text):
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _key_args(p):
    p.add_argument("--n", type=int, required=True, help="transform size (even)")
    p.add_argument("--mod", type=int, required=True, help="modulus m")
    p.add_argument("--coeffs", type=_int_list, required=True,
                   help="comma-separated coefficients a,b,c,... (n/2 of them)")


def _coeffs_for(args):
    if args.n < 4 or args.n % 2:
        raise UsageError(f"--n must be even and >= 4, got {args.n}")
    if len(args.coeffs) != args.n // 2:
        raise UsageError(f"--n {args.n} needs {args.n // 2} coefficients, got {len(args.coeffs)}")
    bad = [u for u in args.coeffs if not 0 <= u < args.mod]
    if bad:
        raise UsageError(f"coefficients must lie in [0, {args.mod}): {bad}")
    return args.coeffs


def _h_for(args):
    if args.n < 4 or args.n % 2:
        raise UsageError(f"--n must be even and >= 4, got {args.n}")
    return args.n // 2


def cmd_check(args, out):
    verdict = check_solution(_coeffs_for(args), args.mod)
    print(verdict.describe(), file=out)
    return EXIT_OK if verdict.passed else EXIT_FAIL


def cmd_gram(args, out):
    matrix = NhtMatrix(args.n, args.mod, _coeffs_for(args))
    g = gram(matrix)
    for row in g:
        print(" ".join(str(x) for x in row), file=out)
    ok = is_identity(g, args.mod)
    print("identity" if ok else "not identity", file=out)
    if args.figure:
        from nhtkit.plotting import plot_gram

        plot_gram(g, args.mod, args.figure,
                  f"N N^T mod {args.mod}, coeffs {','.join(map(str, matrix.coeffs))}")
    return EXIT_OK if ok else EXIT_FAIL


def _search_spec(args, limit=None):
    h = _h_for(args)
    if args.random:
        return search.SearchSpec(h, args.mod, "random", args.budget, args.seed, limit,
                                 args.cost_guard, args.workers)
    return search.SearchSpec(h, args.mod, "exhaustive", limit=limit,
                             cost_guard=args.cost_guard, workers=args.workers)


def cmd_search(args, out):
    spec = _search_spec(args, args.limit)
    if args.canonical:
        records = search.canonical_solutions(spec)
    else:
        records = search.enumerate_solutions(spec)
    found = []
    for rec in records:
        print(rec.line(), file=out)
        found.append(rec)
    if args.append is not None:
        path = args.append or catalog.default_catalog_path()
        if path is None:
            raise UsageError(f"--append needs a path or ${catalog.CATALOG_ENV}")
        catalog.append_entries(path, [catalog.CatalogEntry.checked(r.n, r.m, r.coeffs)
                                      for r in found])
    return EXIT_OK


def cmd_census(args, out):
    result = search.census(_h_for(args), args.mod, args.cost_guard, args.workers)
    print(f"n={args.n} m={args.mod} total={result.total_solutions} "
          f"orbits={result.equivalence_classes}", file=out)
    if args.figure:
        from nhtkit.plotting import plot_orbit_sizes

        plot_orbit_sizes(result.orbit_sizes, args.figure,
                         f"orbit sizes, n={args.n} m={args.mod}")
    return EXIT_OK


def cmd_transform(args, out):
    coeffs = _coeffs_for(args)
    if len(args.block) != args.n:
        raise UsageError(f"--block needs {args.n} values, got {len(args.block)}")
    block = [x % args.mod for x in args.block]
    if args.unchecked:
        if args.inverse:
            raise UsageError("--unchecked only applies to the forward transform")
        result = codec.apply_matrix(NhtMatrix(args.n, args.mod, coeffs), block)
    else:
        key = codec.ScrambleKey(args.n, args.mod, coeffs)
        result = (codec.inverse if args.inverse else codec.forward)(key, block)
    print(",".join(str(x) for x in result), file=out)
    return EXIT_OK


def _read(path):
    return Path(path).read_bytes()


def _write(path, data):
    Path(path).write_bytes(data)


def cmd_scramble(args, out):
    key = codec.ScrambleKey(args.n, args.mod, _coeffs_for(args))
    data = _read(args.input)
    container = codec.scramble_stream(key, data)
    _write(args.output, container)
    print(f"scrambled {len(data)} bytes -> {len(container)} bytes", file=out)
    return EXIT_OK


def cmd_descramble(args, out):
    key = codec.ScrambleKey(args.n, args.mod, _coeffs_for(args))
    data = codec.descramble_stream(_read(args.input), key)
    _write(args.output, data)
    print(f"descrambled {len(data)} bytes", file=out)
    return EXIT_OK


def cmd_tables(args, out):
    for line in tables.report_lines():
        print(line, file=out)
    if args.figures:
        from nhtkit.plotting import plot_gram, plot_table

        outdir = Path(args.figures)
        outdir.mkdir(parents=True, exist_ok=True)
        for table in tables.TABLES:
            plot_table(table, tables.reproduce(table), outdir / f"table{table.number}.png")
            plot_gram(gram(table.matrix), table.m, outdir / f"table{table.number}_gram.png",
                      f"Table {table.number} key: N N^T mod {table.m}")
    return EXIT_OK


def cmd_catalog_verify(args, out):
    if args.builtin:
        entries = catalog.builtin_catalog()
    else:
        path = args.path or catalog.default_catalog_path()
        if path is None:
            raise UsageError(f"give a catalog path, --builtin, or set ${catalog.CATALOG_ENV}")
        entries = catalog.load_catalog(path)
    for e in entries:
        status = "verified" if e.verified else "FAILED"
        print(f"{e.line()}\t{status}\t{e.source}", file=out)
    failed = sum(not e.verified for e in entries)
    print(f"# {len(entries)} entries, {failed} failed", file=out)
    return EXIT_FAIL if failed else EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="nht", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="test the orthogonality conditions for a key")
    _key_args(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gram", help="print the dense N N^T mod m")
    _key_args(p)
    p.add_argument("--figure", help="also write a heatmap to this path")
    p.set_defaults(func=cmd_gram)

    def guard_args(p):
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--cost-guard", type=int, default=search.DEFAULT_COST_GUARD)

    p = sub.add_parser("search", help="list coefficient vectors that form NHT keys")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mod", type=int, required=True)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--random", action="store_true")
    p.add_argument("--budget", type=int, default=10**6, help="random-mode trial count")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--limit", type=int)
    p.add_argument("--canonical", action="store_true", help="one representative per orbit")
    p.add_argument("--append", nargs="?", const="", default=None, metavar="CATALOG",
                   help=f"merge results into a catalog file (default ${catalog.CATALOG_ENV})")
    guard_args(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("census", help="count solutions and orbits for one modulus")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--figure", help="write an orbit-size bar chart to this path")
    guard_args(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("transform", help="apply the forward or inverse transform to one block")
    _key_args(p)
    p.add_argument("--block", type=_int_list, required=True)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--unchecked", action="store_true",
                   help="forward only; skip key validation (reproduces invalid printed keys)")
    p.set_defaults(func=cmd_transform)

    for name, func in (("scramble", cmd_scramble), ("descramble", cmd_descramble)):
        p = sub.add_parser(name, help=f"{name} a file through the container format")
        _key_args(p)
        p.add_argument("input")
        p.add_argument("output")
        p.set_defaults(func=func)

    p = sub.add_parser("tables", help="regenerate the published transform tables")
    p.add_argument("--figures", metavar="DIR", help="write comparison figures into DIR")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("catalog-verify", help="re-verify every entry of a catalog")
    p.add_argument("path", nargs="?")
    p.add_argument("--builtin", action="store_true", help="verify the built-in published catalog")
    p.set_defaults(func=cmd_catalog_verify)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args, out)
    except (UsageError, InvalidCoefficientsError, InvalidModulusError) as exc:
        print(f"nht {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NhtError as exc:
        print(f"nht {args.command}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except OSError as exc:
        print(f"nht {args.command}: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
