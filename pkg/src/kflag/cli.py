"""Command-line front end.

Subcommands: ``product`` (expand a product of two basis elements),
``table`` (dump every structure constant, with an optional JSON cache),
``delta`` (evaluate the elimination operator on one polynomial),
``image`` (print an image polynomial of a word) and ``verify`` (run the
cross-check suites).  Elements are always printed as their canonical,
lexicographically minimal reduced word; identical invocations produce
byte-identical output.
"""

import argparse
import hashlib
import json
import os
import random
import sys
import tempfile

from .constants import (
    BASES,
    BasisMismatchError,
    ConstantTable,
    MissingLowerConstantError,
    expand_product,
    full_table,
)
from .delta import DegreeTooHighError, NotHomogeneousError, delta_a
from .derived import demazure_image, grothendieck_image
from .oracles import NotTypeAError, WordTooLongError
from .polyring import Polynomial, PolynomialParseError, VarCountMismatchError
from .rootsys import (
    DEFAULT_GROUP_CAP,
    CartanMatrix,
    GroupTooLargeError,
    IndexOutOfRangeError,
    NonCartanError,
    NotFiniteTypeError,
    WeylGroup,
    WordCartanMatrix,
    validate_cartan,
)
from .verify import run_suite

CACHE_ENV = "KFLAG_CACHE_DIR"
CACHE_FORMAT_VERSION = 1

_DOMAIN_ERRORS = (
    NonCartanError,
    NotFiniteTypeError,
    GroupTooLargeError,
    IndexOutOfRangeError,
    VarCountMismatchError,
    PolynomialParseError,
    DegreeTooHighError,
    NotHomogeneousError,
    MissingLowerConstantError,
    BasisMismatchError,
    WordTooLongError,
    NotTypeAError,
    ValueError,
)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kflag",
        description="Structure constants of the Demazure and Grothendieck "
        "bases in the K-theory of flag varieties, from the Cartan matrix.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_cartan_args(p):
        p.add_argument("--type", help="built-in Cartan type, e.g. A3, B2, G2, F4")
        p.add_argument(
            "--cartan-file", help="path to a JSON array-of-arrays Cartan matrix"
        )
        p.add_argument(
            "--group-cap",
            type=int,
            default=DEFAULT_GROUP_CAP,
            help="abort group generation beyond this many elements",
        )

    p = sub.add_parser("product", help="expand a product of two basis elements")
    add_cartan_args(p)
    p.add_argument("--basis", choices=BASES, required=True)
    p.add_argument("--u", default="", help="comma-separated word; empty for the unit")
    p.add_argument("--v", default="", help="comma-separated word; empty for the unit")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument(
        "--strict",
        action="store_true",
        help="reject words that are not reduced instead of canonicalizing",
    )
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("table", help="compute the full structure-constant table")
    add_cartan_args(p)
    p.add_argument("--basis", choices=BASES, required=True)
    p.add_argument("--out", help="output path (stdout when omitted)")
    p.add_argument(
        "--cache-dir",
        default=None,
        help=f"table cache directory (default: ${CACHE_ENV} when set)",
    )
    p.add_argument(
        "--table-cap",
        type=int,
        default=500,
        help="refuse to tabulate groups larger than this",
    )
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("delta", help="evaluate the elimination operator")
    p.add_argument("--matrix", help="strictly upper triangular matrix, inline JSON")
    p.add_argument("--matrix-file", help="path to the matrix as JSON")
    p.add_argument("--poly", required=True, help='polynomial, e.g. "y1*y2 - 3*y3"')
    p.set_defaults(func=_cmd_delta)

    p = sub.add_parser("image", help="print an image polynomial of a word")
    add_cartan_args(p)
    p.add_argument("--basis", choices=BASES, default="demazure")
    p.add_argument("--word", default="", help="simple-root sequence, comma-separated")
    p.add_argument("--element", default="", help="group element as a word")
    p.set_defaults(func=_cmd_image)

    p = sub.add_parser("verify", help="run the cross-check suites")
    add_cartan_args(p)
    p.add_argument(
        "--suite",
        default="all",
        help="comma-separated suite names, or 'all'",
    )
    p.set_defaults(func=_cmd_verify)

    return parser


# -- shared input handling -------------------------------------------------


def _load_group(args) -> WeylGroup:
    if bool(args.type) == bool(args.cartan_file):
        raise ValueError("exactly one of --type or --cartan-file is required")
    if args.type:
        cartan = CartanMatrix.named(args.type)
    else:
        with open(args.cartan_file) as fh:
            rows = json.load(fh)
        cartan = validate_cartan(rows, cap=args.group_cap)
    return WeylGroup(cartan, cap=args.group_cap)


def _parse_word(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"malformed word {text!r}; expected comma-separated integers")


def _resolve_element(group: WeylGroup, text: str, strict: bool, label: str) -> int:
    word = _parse_word(text)
    element = group.element(word)
    if len(word) != group.length(element):
        canonical = group.word(element)
        if strict:
            raise ValueError(
                f"--{label} word {text!r} is not reduced "
                f"(canonical form: {_format_word(canonical)})"
            )
        print(
            f"note: --{label} word is not reduced; using {_format_word(canonical)}",
            file=sys.stderr,
        )
    return element


def _format_word(word) -> str:
    return ",".join(str(x) for x in word) if word else "e"


# -- product ---------------------------------------------------------------


def _cmd_product(args) -> int:
    group = _load_group(args)
    u = _resolve_element(group, args.u, args.strict, "u")
    v = _resolve_element(group, args.v, args.strict, "v")
    expansion = expand_product(group, args.basis, u, v)
    terms = [
        {"w": list(group.word(w)), "coeff": expansion[w]} for w in sorted(expansion)
    ]
    if args.format == "json":
        payload = {
            "basis": args.basis,
            "cartan": group.cartan.as_lists(),
            "u": list(group.word(u)),
            "v": list(group.word(v)),
            "terms": terms,
        }
        print(json.dumps(payload))
    else:
        print(f"basis: {args.basis}")
        print(f"u: {_format_word(group.word(u))}")
        print(f"v: {_format_word(group.word(v))}")
        if not terms:
            print("product: 0")
        for term in terms:
            print(f"  {_format_word(term['w']):<20} {term['coeff']}")
    return 0


# -- table and its cache -----------------------------------------------------


def _table_payload(table: ConstantTable) -> dict:
    group = table.group
    entries = [
        [list(group.word(u)), list(group.word(v)), list(group.word(w)), c]
        for (u, v, w), c in sorted(table.entries.items())
    ]
    return {
        "format_version": CACHE_FORMAT_VERSION,
        "basis": table.basis,
        "cartan": group.cartan.as_lists(),
        "entries": entries,
    }


def _cache_path(cache_dir: str, cartan: CartanMatrix, basis: str) -> str:
    blob = json.dumps(
        {
            "cartan": [list(r) for r in cartan.entries],
            "basis": basis,
            "version": CACHE_FORMAT_VERSION,
        },
        sort_keys=True,
    )
    digest = hashlib.sha256(blob.encode()).hexdigest()[:20]
    return os.path.join(cache_dir, f"table-{digest}.json")


def _load_cached_table(
    path: str, group: WeylGroup, basis: str, rng=None
) -> ConstantTable | None:
    """Read a cached table; any anomaly means the cache is ignored.

    Three randomly chosen entries have their whole product row
    recomputed and compared before the cache is trusted.
    """
    rng = rng or random.Random()
    try:
        with open(path) as fh:
            payload = json.load(fh)
    except OSError:
        return None
    except json.JSONDecodeError:
        print(f"warning: ignoring corrupt cache {path}", file=sys.stderr)
        return None
    if (
        payload.get("format_version") != CACHE_FORMAT_VERSION
        or payload.get("basis") != basis
        or payload.get("cartan") != group.cartan.as_lists()
    ):
        print(f"warning: ignoring stale cache {path}", file=sys.stderr)
        return None
    try:
        entries = {
            (group.element(u), group.element(v), group.element(w)): int(c)
            for u, v, w, c in payload["entries"]
        }
    except (KeyError, TypeError, ValueError, IndexOutOfRangeError):
        print(f"warning: ignoring corrupt cache {path}", file=sys.stderr)
        return None
    table = ConstantTable(basis=basis, group=group, entries=entries)
    probes = list(entries)
    rng.shuffle(probes)
    for u, v, _ in probes[:3] or [(0, 0, 0)]:
        expected = expand_product(group, basis, u, v)
        if table.row(u, v) != expected:
            print(
                f"warning: cache {path} failed validation; recomputing",
                file=sys.stderr,
            )
            return None
    return table


def _store_cached_table(path: str, payload: dict):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path), suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(payload, fh)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _cmd_table(args) -> int:
    group = _load_group(args)
    cache_dir = args.cache_dir or os.environ.get(CACHE_ENV)
    table = None
    cache_path = None
    if cache_dir:
        cache_path = _cache_path(cache_dir, group.cartan, args.basis)
        table = _load_cached_table(cache_path, group, args.basis)
    if table is None:
        table = full_table(group, args.basis, max_group_size=args.table_cap)
        if cache_path:
            _store_cached_table(cache_path, _table_payload(table))
    payload = _table_payload(table)
    text = json.dumps(payload)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


# -- delta -------------------------------------------------------------------


def _cmd_delta(args) -> int:
    if bool(args.matrix) == bool(args.matrix_file):
        raise ValueError("exactly one of --matrix or --matrix-file is required")
    if args.matrix:
        rows = json.loads(args.matrix)
    else:
        with open(args.matrix_file) as fh:
            rows = json.load(fh)
    matrix = WordCartanMatrix.from_rows(rows)
    poly = Polynomial.parse(args.poly, matrix.size)
    print(delta_a(matrix, poly))
    return 0


# -- image -------------------------------------------------------------------


def _cmd_image(args) -> int:
    group = _load_group(args)
    word = _parse_word(args.word)
    for letter in word:
        if not 1 <= letter <= group.rank:
            raise IndexOutOfRangeError(
                f"generator index {letter} outside 1..{group.rank}"
            )
    element = _resolve_element(group, args.element, False, "element")
    images = (
        demazure_image(group, word)
        if args.basis == "demazure"
        else grothendieck_image(group, word)
    )
    print(images[element])
    return 0


# -- verify ------------------------------------------------------------------


def _cmd_verify(args) -> int:
    group = _load_group(args)
    results = run_suite(group, args.suite)
    for result in results:
        print(result)
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
