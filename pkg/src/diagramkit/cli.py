"""Command-line front end.

Exit status is 0 on success, 1 on a domain error (the error class name is
printed on stderr) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from pathlib import Path

from . import annular as an
from .diagram import (
    Diagram,
    bottom_word,
    compose,
    diagram_from_json,
    diagram_to_json,
    equal,
    format_diagram,
    insert_dipole,
    invert,
    is_reduced,
    make_diagram,
    reduce,
)
from .errors import DiagramKitError, ParseError
from .homology import boundary_matrix, homology_report
from .ppbraid import (
    BraidWord,
    braid_equal,
    braid_from_json,
    braid_inv,
    braid_mul,
    braid_to_diagram,
    braid_to_json,
    diagram_to_braid,
    format_braid,
    is_pure,
    parse_braid,
    permutation,
    reduce_braid,
)
from .presentation import (
    Direction,
    apply_relation,
    applicable_cells,
    base_word,
    format_word,
    parse_word,
    planar_presentation,
    presentation_from_json,
    presentation_to_json,
    word_to_json,
)
from .snf import IntegerMatrix, smith_normal_form
from .squier import (
    DEFAULT_MAX_VERTICES,
    build_squier,
    complex_summary,
    complex_to_json,
    fundamental_presentation,
    format_group_presentation,
    group_presentation_to_json,
    simplify_presentation,
    to_dot,
)

ENV_MAX_VERTICES = "DIAGRAMKIT_MAX_VERTICES"


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj)


def _load_text(value: str) -> str:
    path = Path(value)
    if not value.lstrip().startswith(("{", "[")) and path.is_file():
        return path.read_text()
    return value


_CELL = re.compile(r"\(?(\d+),(\d+),([FB])\)?$")


def parse_diagram_arg(value: str) -> Diagram:
    """A diagram given as JSON (inline or a file) or as ``n=<N> [top=<word>] (o,r,F) ...``."""
    text = _load_text(value).strip()
    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid diagram JSON: {exc}") from None
        return diagram_from_json(data)
    tokens = text.split()
    if not tokens or not (m := re.fullmatch(r"n=(\d+)", tokens[0])):
        raise ParseError(f"diagram text must start with n=<N>: {value!r}")
    p = planar_presentation(int(m.group(1)))
    top = base_word(p.alphabet_size)
    cells = []
    for tok in tokens[1:]:
        if tok.startswith("top="):
            top = parse_word(tok[4:], p.alphabet_size)
        elif c := _CELL.match(tok):
            cells.append((int(c.group(1)), int(c.group(2)), Direction.from_code(c.group(3))))
        else:
            raise ParseError(f"bad diagram token {tok!r}")
    return make_diagram(p, top, cells)


def parse_braid_arg(value: str) -> BraidWord:
    text = _load_text(value).strip()
    if text.startswith("{"):
        try:
            return braid_from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid braid JSON: {exc}") from None
    return parse_braid(text)


def _operands(args, count: int):
    """The ``count`` diagrams or braids given on the command line, and their kind."""
    diagrams = args.diagram or []
    braids = args.braid or []
    if diagrams and braids:
        raise UsageError("give either --diagram or --braid operands, not both")
    given = diagrams or braids
    if len(given) != count:
        raise UsageError(f"expected {count} operand(s), got {len(given)}")
    if diagrams:
        return "diagram", [parse_diagram_arg(v) for v in diagrams]
    return "braid", [parse_braid_arg(v) for v in braids]


def _show_diagram(d: Diagram, fmt: str) -> str:
    return format_diagram(d) if fmt == "text" else _dump(diagram_to_json(d))


def _show_braid(b: BraidWord, fmt: str) -> str:
    return format_braid(b) if fmt == "text" else _dump(braid_to_json(b))


def _show(kind: str, value, fmt: str) -> str:
    return _show_diagram(value, fmt) if kind == "diagram" else _show_braid(value, fmt)


def _max_vertices(args) -> int:
    if args.max_vertices is not None:
        return args.max_vertices
    env = os.environ.get(ENV_MAX_VERTICES)
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"{ENV_MAX_VERTICES} must be an integer, got {env!r}") from None
    return DEFAULT_MAX_VERTICES


def _complex(args):
    if args.n is not None:
        if args.pres or args.word:
            raise UsageError("--n excludes --pres/--word")
        p = planar_presentation(args.n)
        w = base_word(args.n)
    else:
        if not (args.pres and args.word):
            raise UsageError("give --n N, or both --pres FILE and --word W")
        p = _presentation(args.pres)
        w = parse_word(args.word, p.alphabet_size)
    return build_squier(p, w, _max_vertices(args))


def _presentation(value: str):
    try:
        data = json.loads(_load_text(value))
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid presentation JSON: {exc}") from None
    return presentation_from_json(data)


def _pres_from_args(args):
    if args.n is not None:
        return planar_presentation(args.n)
    if args.pres:
        return _presentation(args.pres)
    raise UsageError("give --n N or --pres FILE")


# subcommands

def cmd_reduce(args):
    kind, (x,) = _operands(args, 1)
    if kind == "diagram":
        return _show_diagram(reduce(x), args.format)
    return _show_braid(reduce_braid(x), args.format)


def cmd_reduced(args):
    return "true" if is_reduced(parse_diagram_arg(args.diagram)) else "false"


def cmd_insert(args):
    d = parse_diagram_arg(args.diagram)
    out = insert_dipole(d, args.position, args.rel, Direction.from_code(args.dir), args.offset)
    return _show_diagram(out, args.format)


def cmd_eq(args):
    kind, (x, y) = _operands(args, 2)
    result = equal(x, y) if kind == "diagram" else braid_equal(x, y)
    return "true" if result else "false"


def cmd_mul(args):
    kind, (x, y) = _operands(args, 2)
    return _show(kind, compose(x, y) if kind == "diagram" else braid_mul(x, y), args.format)


def cmd_inv(args):
    kind, (x,) = _operands(args, 1)
    return _show(kind, invert(x) if kind == "diagram" else braid_inv(x), args.format)


def cmd_b2d(args):
    return _show_diagram(braid_to_diagram(parse_braid_arg(args.braid)), args.format)


def cmd_d2b(args):
    return _show_braid(diagram_to_braid(parse_diagram_arg(args.diagram)), args.format)


def cmd_bottom(args):
    d = parse_diagram_arg(args.diagram)
    w = bottom_word(d)
    return format_word(w, d.presentation) if args.format == "text" else _dump(word_to_json(w))


def cmd_perm(args):
    b = parse_braid_arg(args.braid)
    perm = [i + 1 for i in permutation(b)]
    if args.format == "text":
        return " ".join(map(str, perm)) + (" (pure)" if is_pure(b) else "")
    return _dump({"permutation": perm, "pure": is_pure(b)})


def cmd_planar(args):
    p = planar_presentation(args.n)
    if args.format == "text":
        rels = ", ".join(f"{format_word(r.lhs)}={format_word(r.rhs)}" for r in p.relations)
        gens = ",".join(f"x{i + 1}" for i in range(p.alphabet_size))
        return f"<{gens} | {rels}>"
    return _dump(presentation_to_json(p))


def cmd_apply(args):
    p = _pres_from_args(args)
    w = parse_word(args.word, p.alphabet_size)
    out = apply_relation(p, w, args.rel, Direction.from_code(args.dir), args.offset)
    return format_word(out, p) if args.format == "text" else _dump(word_to_json(out))


def cmd_cells(args):
    p = _pres_from_args(args)
    w = parse_word(args.word, p.alphabet_size)
    cells = applicable_cells(w, p)
    if args.format == "text":
        return " ".join(f"({o},{r},{d.code})" for o, r, d in cells)
    return _dump([{"offset": o, "rel": r, "dir": d.code} for o, r, d in cells])


def cmd_squier(args):
    K = _complex(args)
    if args.format == "dot":
        return to_dot(K)
    if args.format == "text":
        return complex_summary(K)
    return _dump(complex_to_json(K))


def cmd_homology(args):
    K = _complex(args)
    report = homology_report(K, args.dim)
    if args.format == "text":
        entries = report if isinstance(report, list) else [report]
        return "\n".join(
            f"H_{e['dimension']}: betti {e['betti']}, torsion {e['torsion']}" for e in entries
        )
    return _dump(report)


def cmd_boundary(args):
    M = boundary_matrix(_complex(args), args.dim)
    if args.format == "text":
        return M.to_triplets().rstrip("\n")
    entries = [[i, j, v] for (i, j), v in sorted(M.entries.items())]
    return _dump({"rows": M.rows, "cols": M.cols, "entries": entries})


def cmd_presentation(args):
    K = _complex(args)
    gp = fundamental_presentation(K)
    if args.simplify:
        gp = simplify_presentation(gp)
    if args.format == "json":
        return _dump(group_presentation_to_json(gp))
    return format_group_presentation(gp)


def cmd_snf(args):
    text = _load_text(args.matrix).strip()
    if text.startswith("["):
        M = IntegerMatrix.from_dense(json.loads(text))
    else:
        try:
            M = IntegerMatrix.from_triplets(text)
        except (ValueError, IndexError) as exc:
            raise ParseError(f"bad matrix: {exc}") from None
    result = smith_normal_form(M, transforms=args.transforms)
    if args.format == "text":
        return " ".join(map(str, result.divisors))
    out = {"rank": result.rank, "divisors": list(result.divisors)}
    if args.transforms:
        out.update(U=result.U, V=result.V)
    return _dump(out)


def cmd_annular(args):
    op = args.op
    pure = op != "reduce"
    elements = [an.parse_annular(_load_text(v), require_pure=pure) for v in args.elements]
    arity = {"make": 1, "reduce": 1, "inv": 1, "mul": 2, "eq": 2}[op]
    if len(elements) != arity:
        raise UsageError(f"annular {op} takes {arity} element(s)")
    if op == "eq":
        return "true" if an.a_equal(*elements) else "false"
    result = {
        "make": lambda e: e,
        "reduce": an.a_reduce,
        "inv": an.a_invert,
        "mul": an.a_compose,
    }[op](*elements)
    return an.format_annular(result) if args.format == "text" else _dump(an.annular_to_json(result))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diagramkit",
        description="Planar pure braids as diagram groups: word problem, Squier complexes, homology.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, formats=("json", "text"), default="json"):
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(func=func)
        sp.add_argument("--format", choices=formats, default=default)
        sp.add_argument("--out", metavar="FILE", help="write the result here instead of stdout")
        return sp

    def operands(sp):
        sp.add_argument("--diagram", action="append", metavar="D",
                        help="diagram: JSON, a JSON file, or 'n=N [top=W] (o,r,F) ...'")
        sp.add_argument("--braid", action="append", metavar="B", help="braid: 'n=N s1 s2 ...' or JSON")

    def complex_args(sp):
        sp.add_argument("--n", type=int, help="use the commutation presentation on n letters")
        sp.add_argument("--pres", metavar="FILE", help="presentation JSON (inline or file)")
        sp.add_argument("--word", metavar="W", help="base word, e.g. x1x2x3")
        sp.add_argument("--max-vertices", type=int, default=None)

    operands(add("reduce", cmd_reduce, "reduced normal form of a diagram or braid"))
    operands(add("eq", cmd_eq, "decide equality of two diagrams or two braids"))
    operands(add("mul", cmd_mul, "product (first on top)"))
    operands(add("inv", cmd_inv, "inverse"))

    sp = add("reduced", cmd_reduced, "whether a diagram has no dipole")
    sp.add_argument("--diagram", required=True)
    sp = add("insert", cmd_insert, "insert a dipole into a diagram")
    sp.add_argument("--diagram", required=True)
    sp.add_argument("--position", type=int, required=True, help="index in the cell sequence")
    sp.add_argument("--rel", type=int, required=True, help="0-based relation index")
    sp.add_argument("--dir", choices=("F", "B"), required=True)
    sp.add_argument("--offset", type=int, required=True)

    sp = add("b2d", cmd_b2d, "braid to diagram")
    sp.add_argument("--braid", required=True)
    sp = add("d2b", cmd_d2b, "diagram to braid")
    sp.add_argument("--diagram", required=True)
    sp = add("bottom", cmd_bottom, "bottom word of a diagram")
    sp.add_argument("--diagram", required=True)
    sp = add("perm", cmd_perm, "strand permutation of a braid")
    sp.add_argument("--braid", required=True)

    sp = add("planar", cmd_planar, "the commutation presentation on n letters")
    sp.add_argument("--n", type=int, required=True)
    sp = add("apply", cmd_apply, "apply one relation to a word")
    sp.add_argument("--n", type=int)
    sp.add_argument("--pres", metavar="FILE")
    sp.add_argument("--word", required=True)
    sp.add_argument("--rel", type=int, required=True, help="0-based relation index")
    sp.add_argument("--dir", choices=("F", "B"), required=True)
    sp.add_argument("--offset", type=int, required=True)
    sp = add("cells", cmd_cells, "all applicable cells of a word")
    sp.add_argument("--n", type=int)
    sp.add_argument("--pres", metavar="FILE")
    sp.add_argument("--word", required=True)

    complex_args(add("squier", cmd_squier, "build the Squier complex", ("json", "text", "dot")))
    sp = add("homology", cmd_homology, "integral homology of the Squier complex")
    complex_args(sp)
    sp.add_argument("--dim", type=int, default=None)
    sp = add("boundary", cmd_boundary, "boundary matrix of the Squier complex (text: sparse triplets)")
    complex_args(sp)
    sp.add_argument("--dim", type=int, required=True)
    sp = add("presentation", cmd_presentation, "fundamental group presentation", default="text")
    complex_args(sp)
    sp.add_argument("--simplify", action="store_true")

    sp = add("snf", cmd_snf, "Smith normal form of an integer matrix")
    sp.add_argument("--matrix", required=True, help="dense JSON rows, or triplet text/file")
    sp.add_argument("--transforms", action="store_true")

    sp = add("annular", cmd_annular, "annular planar pure braids")
    sp.add_argument("op", choices=("make", "reduce", "inv", "mul", "eq"))
    sp.add_argument("elements", nargs="+", metavar="E", help="'n=N r=K c0 c2 ...'")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        output = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except DiagramKitError as exc:
        print(f"{exc.name}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.out:
        Path(args.out).write_text(output + "\n")
    else:
        print(output)
    return 0


def main() -> None:
    try:
        code = run()
    except SystemExit as exc:  # argparse usage errors
        code = exc.code if isinstance(exc.code, int) else 2
    sys.exit(code)


if __name__ == "__main__":
    main()
