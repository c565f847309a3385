"""Command-line interface: AR quivers, convex orders, denominator zero sets,
spectral-point quivers, surjection verdicts, pair embeddings, and the
verification suite.  Output is deterministic JSON (or DOT for quivers)."""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from pathlib import Path
from typing import Sequence

from .dorey import DoreyTriple, dorey, embed_pair_in_AR, multiple_pole_class
from .quiver import DynkinQuiver, adapted_word, ar_quiver, height_function, minimal_pairs
from .rootsys import FiniteType, format_root, root_sequence
from .sequiver import se0_window, se_window, schur_weyl_quiver, vertex_class
from .spectral import AffineType, SpectralParam, denominator

_ARROW_RE = re.compile(r"(\d+)>(\d+)")
_BASE_RE = re.compile(r"(\d+)=(-?\d+)")


def _parse_ftype(args: argparse.Namespace) -> FiniteType:
    return FiniteType(args.type, args.rank)


def _parse_affine(args: argparse.Namespace) -> AffineType:
    return AffineType.from_code(args.g, args.n)


def _parse_orientation(t: FiniteType, text: str) -> DynkinQuiver:
    arrows = []
    for part in text.split(","):
        m = _ARROW_RE.fullmatch(part.strip())
        if not m:
            raise ValueError(f"bad arrow {part.strip()!r}; expected 'a>b'")
        arrows.append((int(m.group(1)), int(m.group(2))))
    return DynkinQuiver(t, tuple(arrows))


def _parse_base(q: DynkinQuiver, text: str | None) -> dict[int, int]:
    if text is None:
        return height_function(q)
    m = _BASE_RE.fullmatch(text.strip())
    if not m:
        raise ValueError(f"bad base {text!r}; expected 'vertex=value'")
    return height_function(q, int(m.group(1)), int(m.group(2)))


def _parse_vertex(text: str) -> tuple[int, SpectralParam]:
    head, sep, tail = text.partition(":")
    if not sep:
        raise ValueError(f"bad vertex {text!r}; expected 'i:param'")
    return int(head), SpectralParam.parse(tail)


def _parse_root(t: FiniteType, text: str) -> tuple[int, ...]:
    coeffs = tuple(int(c) for c in text.split(","))
    if len(coeffs) != t.rank:
        raise ValueError(f"root {text!r} needs {t.rank} coefficients")
    return coeffs


def _root_str(root: Sequence[int]) -> str:
    return ",".join(str(c) for c in root)


def _emit(text: str, out: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _dumps(obj: object) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _quiver_json(
    vertices: Sequence[tuple[str, str]], arrows: Sequence[tuple[str, str, int]]
) -> str:
    return _dumps(
        {
            "vertices": [{"id": vid, "label": label} for vid, label in vertices],
            "arrows": [{"src": a, "dst": b, "mult": m} for a, b, m in arrows],
        }
    )


def _quiver_dot(
    vertices: Sequence[tuple[str, str]], arrows: Sequence[tuple[str, str, int]]
) -> str:
    lines = ["digraph G {"]
    for vid, label in vertices:
        lines.append(f'  "{vid}" [label="{label}"];')
    for a, b, m in arrows:
        lines.extend([f'  "{a}" -> "{b}";'] * m)
    lines.append("}")
    return "\n".join(lines)


def _emit_quiver(
    vertices: Sequence[tuple[str, str]],
    arrows: Sequence[tuple[str, str, int]],
    args: argparse.Namespace,
) -> None:
    render = _quiver_dot if args.format == "dot" else _quiver_json
    _emit(render(vertices, arrows), args.out)


def _cmd_ar_quiver(args: argparse.Namespace) -> int:
    q = _parse_orientation(_parse_ftype(args), args.orientation)
    ar = ar_quiver(q, _parse_base(q, args.base))
    vertices = [
        (f"{i},{p}", format_root(ar.phi[(i, p)][0])) for i, p in sorted(ar.gamma_vertices)
    ]
    arrows = [
        (f"{a[0]},{a[1]}", f"{b[0]},{b[1]}", 1) for a, b in ar.gamma_arrows
    ]
    _emit_quiver(vertices, arrows, args)
    return 0


def _cmd_convex_order(args: argparse.Namespace) -> int:
    t = _parse_ftype(args)
    q = _parse_orientation(t, args.orientation)
    word = adapted_word(q, "w0")
    seq = root_sequence(t, word)
    _emit(_dumps({"word": list(word), "order": [_root_str(r) for r in seq]}), args.out)
    return 0


def _cmd_minimal_pairs(args: argparse.Namespace) -> int:
    t = _parse_ftype(args)
    q = _parse_orientation(t, args.orientation)
    alpha = _parse_root(t, args.root)
    seq = root_sequence(t, adapted_word(q, "w0"))
    pairs = minimal_pairs(seq, alpha)
    _emit(
        _dumps(
            {
                "alpha": _root_str(alpha),
                "pairs": [
                    {"beta": _root_str(b), "gamma": _root_str(g)} for b, g in pairs
                ],
            }
        ),
        args.out,
    )
    return 0


def _cmd_denominator(args: argparse.Namespace) -> int:
    g = _parse_affine(args)
    d = denominator(g, args.k, args.l)
    _emit(
        _dumps(
            {
                "g": g.code,
                "N": g.N,
                "k": args.k,
                "l": args.l,
                "degree": d.degree,
                "factors": list(d.factors),
                "roots": [{"root": str(x), "mult": mult} for x, mult in d.roots],
            }
        ),
        args.out,
    )
    return 0


def _cmd_se_quiver(args: argparse.Namespace) -> int:
    g = _parse_affine(args)
    bound = args.bound if args.bound is not None else 2 * g.N
    if args.se0:
        seeds = list(se0_window(g, bound))
    elif args.seed:
        seeds = [vertex_class(g, *_parse_vertex(s)) for s in args.seed]
    else:
        raise ValueError("provide --seed at least once or use --se0")
    quiver, _ = se_window(g, seeds, bound)
    _emit_quiver(quiver.vertices, quiver.arrows, args)
    return 0


def _cmd_schur_weyl(args: argparse.Namespace) -> int:
    q = _parse_orientation(_parse_ftype(args), args.orientation)
    ar = ar_quiver(q, _parse_base(q, args.base))
    sw = schur_weyl_quiver(ar, args.t)
    _emit_quiver(sw.quiver.vertices, sw.quiver.arrows, args)
    return 0


def _cmd_dorey(args: argparse.Namespace) -> int:
    g = _parse_affine(args)
    triple = DoreyTriple(
        g, _parse_vertex(args.a), _parse_vertex(args.b), _parse_vertex(args.c)
    )
    verdict = dorey(triple)
    obj: dict[str, object] = {"holds": verdict.holds}
    if verdict.holds and g.twist == 1:
        obj["condition"] = verdict.condition
        obj["pole"] = multiple_pole_class(triple)
    if verdict.holds and g.twist == 2:
        obj["witness"] = [f"{i}:{x}" for i, x in verdict.witness]
    _emit(_dumps(obj), args.out)
    return 0


def _cmd_embed_pair(args: argparse.Namespace) -> int:
    g = _parse_affine(args)
    v = vertex_class(g, *_parse_vertex(args.v))
    w = vertex_class(g, *_parse_vertex(args.w))
    res = embed_pair_in_AR(g, v, w)
    if res.found:
        obj: dict[str, object] = {
            "found": True,
            "orientation": ",".join(f"{a}>{b}" for a, b in res.quiver.arrows),
            "height": {str(i): h for i, h in sorted(res.height.items())},
            "shift": str(res.shift),
            "positions": [list(res.positions[0]), list(res.positions[1])],
        }
    else:
        obj = {"found": False, "reason": res.reason}
    _emit(_dumps(obj), args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    from .verify import run_all

    names = [args.check] if args.check else None
    failed = False
    for report in run_all(names):
        line = f"{'PASS' if report.passed else 'FAIL'} {report.check_name} [{report.universe}]"
        if not report.passed:
            failed = True
            line += f" :: {report.counterexample}"
        print(line)
        print(f"# {report.check_name} {report.elapsed_ms}ms", file=sys.stderr)
    return 1 if failed else 0


def _add_classical(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", choices=("A", "D"), required=True, help="Dynkin family")
    p.add_argument("--rank", type=int, required=True, help="number of vertices")
    p.add_argument(
        "--orientation",
        required=True,
        help="comma-separated arrows covering every edge, e.g. '1>2,3>2'",
    )


def _add_affine(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--g", choices=("A1", "A2", "D1", "D2"), required=True, help="family and twist"
    )
    p.add_argument("--n", type=int, required=True, help="the integer N of the type name")


def _add_out(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", help="write output to this file instead of stdout")


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "dot"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arquiver",
        description="Exact AR-quiver and R-matrix denominator combinatorics for types A and D.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ar-quiver", help="AR quiver of an oriented Dynkin diagram")
    _add_classical(p)
    p.add_argument("--base", help="height normalization 'vertex=value' (default '1=0')")
    _add_format(p)
    _add_out(p)
    p.set_defaults(handler=_cmd_ar_quiver)

    p = sub.add_parser("convex-order", help="adapted longest-element order on positive roots")
    _add_classical(p)
    _add_out(p)
    p.set_defaults(handler=_cmd_convex_order)

    p = sub.add_parser("minimal-pairs", help="minimal pairs of a positive root")
    _add_classical(p)
    p.add_argument("--root", required=True, help="comma-separated coefficients, e.g. '1,1,0'")
    _add_out(p)
    p.set_defaults(handler=_cmd_minimal_pairs)

    p = sub.add_parser("denominator", help="zero multiset of a denominator d_{k,l}(z)")
    _add_affine(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    _add_out(p)
    p.set_defaults(handler=_cmd_denominator)

    p = sub.add_parser("se-quiver", help="window of the spectral-point quiver")
    _add_affine(p)
    p.add_argument("--seed", action="append", help="lattice seed 'i:param' (repeatable)")
    p.add_argument("--se0", action="store_true", help="seed with the distinguished component")
    p.add_argument("--bound", type=int, help="|q-power| window bound (default 2N)")
    _add_format(p)
    _add_out(p)
    p.set_defaults(handler=_cmd_se_quiver)

    p = sub.add_parser("schur-weyl", help="quiver on the simple-root slots of an AR quiver")
    _add_classical(p)
    p.add_argument("--base", help="height normalization 'vertex=value' (default '1=0')")
    p.add_argument("--t", type=int, choices=(1, 2), required=True, help="untwisted or twisted")
    _add_format(p)
    _add_out(p)
    p.set_defaults(handler=_cmd_schur_weyl)

    p = sub.add_parser("dorey", help="tensor-surjection verdict for a triple")
    _add_affine(p)
    p.add_argument("--a", required=True, help="first factor 'i:param'")
    p.add_argument("--b", required=True, help="second factor 'i:param'")
    p.add_argument("--c", required=True, help="target 'i:param'")
    _add_out(p)
    p.set_defaults(handler=_cmd_dorey)

    p = sub.add_parser("embed-pair", help="realize an adjacent pair inside one AR quiver")
    _add_affine(p)
    p.add_argument("--v", required=True, help="first point 'i:param'")
    p.add_argument("--w", required=True, help="second point 'i:param'")
    _add_out(p)
    p.set_defaults(handler=_cmd_embed_pair)

    p = sub.add_parser("verify", help="run the self-verification suite")
    p.add_argument("--check", help="run a single named check")
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"invariant failure: {exc}", file=sys.stderr)
        return 1
    finally:
        elapsed = round((time.perf_counter() - start) * 1000)
        print(f"# {args.command} {elapsed}ms", file=sys.stderr)


def entry_point() -> int:
    return main()


if __name__ == "__main__":
    sys.exit(main())
