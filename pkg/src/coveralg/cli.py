"""Command-line interface.

Every command reads a complex as JSON (``{"n": 6, "facets": [[1,2,3], ...]}``)
from a file, from stdin (``-``, the default) or, with ``random:N[:M]``, draws
one on N vertices with at most M facets from ``--seed``.

Exit codes: 0 ok, 1 malformed input, 2 guard exceeded, 3 internal
consistency failure between modules.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from typing import Any

from . import covers, cycles, ideals, matrixops, mengerian, structure
from .complex_core import (
    ComplexError,
    SimplicialComplex,
    clique_complex,
    dual,
    incidence_matrix,
    one_skeleton,
    polarize,
    random_complex,
)
from .limits import GuardExceeded, check, limits, parse_overrides

COMMANDS = (
    "classify", "covers", "decompose", "dual", "polarize", "cycles",
    "canonical", "unimodular", "mengerian", "ideal", "skeleton",
)


class ConsistencyError(RuntimeError):
    """Two modules disagree on something a theorem forces; always a bug."""


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ConsistencyError(msg)


def read_complex(source: str, seed: int | None) -> SimplicialComplex:
    if source.startswith("random:"):
        parts = source.split(":")[1:]
        try:
            n = int(parts[0])
            m = int(parts[1]) if len(parts) > 1 else n
        except (IndexError, ValueError):
            raise ComplexError("random input must look like random:N or random:N:M") from None
        return random_complex(n, m, random.Random(seed))
    if source == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ComplexError(f"cannot read {source}: {exc.strerror}") from None
    return SimplicialComplex.from_json(text)


def parse_vector(text: str | None, n: int) -> tuple[int, ...]:
    if text is None:
        raise ComplexError("--c is required for this command")
    try:
        vals = json.loads(text) if text.strip().startswith("[") else [int(x) for x in text.split(",")]
    except ValueError:
        raise ComplexError(f"cannot parse vector {text!r}") from None
    if len(vals) != n or any(not isinstance(v, int) or v < 0 for v in vals):
        raise ComplexError(f"vector must have {n} nonnegative integer entries")
    return tuple(vals)


def _witness(w: cycles.CycleWitness | None) -> dict | None:
    return None if w is None else w.to_dict()


def classify(cx: SimplicialComplex, max_k: int, bound: int) -> dict:
    """Full report; every boolean carries a witness or a certificate tag."""
    odd = cycles.find_special_cycle(cx, "odd", 3)
    any3 = cycles.find_special_cycle(cx, "any", 3)
    balanced, totally = odd is None, any3 is None
    glo = structure.good_leaf_order(cx)
    lo = structure.leaf_order(cx)
    forest, quasi = glo is not None, lo is not None
    forest_def = structure.every_subcomplex_has_leaf(cx) if cx.m <= 12 else forest
    greedy = matrixops.is_greedy(cx)

    mat = incidence_matrix(cx)
    uni_witness = None
    try:
        check("unimodular_dim", max(mat.rows, mat.cols), "square minor enumeration")
        bad = matrixops.bad_minor(mat.entries)
        unimodular = bad is None
        if bad is not None:
            rs, cs, d = bad
            uni_witness = {
                "facets": [list(cx.facets[i]) for i in rs],
                "vertices": [c + 1 for c in cs],
                "det": d,
            }
    except GuardExceeded as exc:
        unimodular = None
        uni_witness = exc.to_dict()

    # bounded searches run without certificates so the gates below can compare
    gens = covers.generator_set(cx, max_k)
    higher = [(c, k) for c, k in gens.generators if k >= 2]
    grid_gap = mengerian.first_gap(cx, bound)

    _require(forest == forest_def, "good-leaf peeling disagrees with the forest definition")
    _require(forest == totally, "forest test disagrees with total balancedness")
    _require(forest == greedy, "forest test disagrees with the greedy canonical form")
    _require(not forest or quasi, "forest that is not a quasi-forest")
    _require(not totally or balanced, "totally balanced but not balanced")
    _require(unimodular is not True or balanced, "unimodular complex with a special odd cycle")
    _require(not balanced or grid_gap is None, "balanced complex with a Mengerian gap")
    _require(not balanced or not higher, "balanced complex with a generator of degree >= 2")

    if forest:
        std = {"status": "certified-standard", "reason": "forest"}
        meng = {"status": "certified-mengerian", "reason": "forest"}
    elif balanced:
        std = {"status": "certified-standard", "reason": "no special odd cycle"}
        meng = {"status": "certified-mengerian", "reason": "no special odd cycle"}
    else:
        std = {"status": "not-standard" if higher else "standard-up-to"}
        if higher:
            std["witness"] = {"k": higher[0][1], "c": list(higher[0][0])}
        meng = {"status": "gap" if grid_gap else "no-gap-up-to"}
        if grid_gap:
            meng["witness"] = grid_gap.to_dict()
    std.update(max_k=max_k, d_A=max(gens.degrees()), generators=gens.to_dict()["generators"])
    meng["bound"] = bound

    dl = dual(cx)
    codim1 = covers.check_codim1_quasi_forest(cx, max_k)
    # a non-forest whose witness lies above max_k is a bound artefact, not a contradiction
    _require(not (codim1.applicable and codim1.forest and not codim1.standard_up_to_bound),
             "forest with a higher generator")

    return {
        "complex": cx.to_dict(),
        "dropped_nonmaximal": [list(f) for f in cx.dropped],
        "balanced": {"value": balanced, "special_odd_cycle": _witness(odd)},
        "totally_balanced": {"value": totally, "special_cycle": _witness(any3)},
        "forest": {
            "value": forest,
            "good_leaf_order": None if glo is None else glo.to_dict(),
            "greedy_canonical_form": greedy,
        },
        "quasi_forest": {"value": quasi, "leaf_order": None if lo is None else lo.to_dict()},
        "tree": structure.is_tree(cx),
        "quasi_tree": structure.is_quasi_tree(cx),
        "unimodular": {"value": unimodular, "bad_minor": uni_witness},
        "mengerian": meng,
        "standard_graded": std,
        "dual": {"facets": [list(f) for f in dl.facets], "facet_count": dl.m},
        "codim1_quasi_forest": codim1.to_dict(),
    }


def run_command(args: argparse.Namespace, cx: SimplicialComplex) -> Any:
    cmd = args.command
    if cmd == "classify":
        return classify(cx, args.max_k, args.bound)
    if cmd == "covers":
        out = covers.generator_set(cx, args.max_k).to_dict()
        out["d_A"] = max(g["k"] for g in out["generators"])
        out["standard_graded"] = covers.is_standard_graded(cx, max(args.max_k, 2)).to_dict()
        if args.k is not None:
            out["minimal_k_covers"] = {"k": args.k, "covers": [list(c) for c in covers.minimal_k_covers(cx, args.k)]}
        return out
    if cmd == "decompose":
        c = parse_vector(args.c, cx.n)
        res = covers.decompose_cover(cx, c, args.k or 1)
        out = res.to_dict()
        out["c"] = list(c)
        out["order"] = covers.cover_order(cx, c)
        return out
    if cmd == "dual":
        return dual(cx).to_dict()
    if cmd == "polarize":
        c = parse_vector(args.c, cx.n)
        pol, labels = polarize(cx, c)
        return {**pol.to_dict(), "labels": [[pv.base, pv.copy] for pv in labels]}
    if cmd == "cycles":
        w = cycles.find_special_cycle(cx, args.parity, args.min_length)
        return {
            "parity": args.parity,
            "min_length": args.min_length,
            "witness": _witness(w),
            "balanced": cycles.is_balanced(cx),
            "totally_balanced": cycles.is_totally_balanced(cx),
        }
    if cmd == "canonical":
        res = matrixops.canonical_form(incidence_matrix(cx))
        b = matrixops.contains_B(res.matrix)
        return {**res.to_dict(), "contains_B": None if b is None else list(b)}
    if cmd == "unimodular":
        mat = incidence_matrix(cx)
        check("unimodular_dim", max(mat.rows, mat.cols), "square minor enumeration")
        bad = matrixops.bad_minor(mat.entries)
        return {
            "unimodular": bad is None,
            "bad_minor": None if bad is None else {"rows": [r + 1 for r in bad[0]], "cols": [c + 1 for c in bad[1]], "det": bad[2]},
        }
    if cmd == "mengerian":
        out = {"verdict": mengerian.is_mengerian_bounded(cx, args.bound).to_dict()}
        t, mtc = mengerian.koenig_numbers(cx)
        out["koenig"] = {"min_transversal": t, "max_matching": mtc}
        if args.c is not None:
            out["min_max"] = mengerian.min_max_gap(cx, parse_vector(args.c, cx.n)).to_dict()
        return out
    if cmd == "ideal":
        k = args.k or 1
        if args.kind == "facet":
            return ideals.facet_ideal(cx).to_dict()
        if args.kind == "cover":
            return ideals.cover_ideal(cx).to_dict()
        if args.kind == "symbolic":
            return ideals.symbolic_power(cx, k).to_dict()
        return ideals.symbolic_equals_ordinary(cx, max(k, 2)).to_dict()
    if cmd == "skeleton":
        sk = one_skeleton(cx)
        peo = structure.is_chordal(sk)
        out = {
            **sk.to_dict(),
            "chordal": peo is not None,
            "perfect_elimination_ordering": peo,
            "clique_complex": clique_complex(sk).to_dict(),
        }
        try:
            strong = structure.has_strong_peo(sk)
            out["strongly_chordal"] = strong is not None
            out["strong_elimination_ordering"] = strong
        except GuardExceeded as exc:
            out["strongly_chordal"] = None
            out["strong_elimination_ordering"] = exc.to_dict()
        return out
    raise ValueError(f"unknown command {cmd}")  # pragma: no cover


def format_text(obj: Any, indent: int = 0) -> str:
    """Indented key: value lines; leaf lists stay on one line as JSON."""
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if _flat(v):
                lines.append(f"{pad}{k}: {json.dumps(v)}")
            else:
                lines.append(f"{pad}{k}:")
                lines.append(format_text(v, indent + 1))
        return "\n".join(lines)
    if isinstance(obj, list):
        lines = []
        for v in obj:
            body = format_text(v, indent + 1)
            lines.append(f"{pad}- {body.lstrip()}")
        return "\n".join(lines)
    return f"{pad}{json.dumps(obj)}"


def _flat(v: Any) -> bool:
    if isinstance(v, dict):
        return not v
    if isinstance(v, list):
        return all(_flat(x) and not isinstance(x, dict) for x in v)
    return True


_LEAF_ARRAY = re.compile(r"\[[-0-9,\s]*\]")


def dump_json(obj: Any) -> str:
    """Indented JSON with integer arrays kept on one line."""
    return _LEAF_ARRAY.sub(lambda m: "[" + ", ".join(m.group(0)[1:-1].split()).replace(",,", ",") + "]",
                           json.dumps(obj, indent=2))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coveralg", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("input", nargs="?", default="-", help="complex JSON file, '-' for stdin, or random:N[:M]")
    p.add_argument("--max-k", type=int, default=4, help="degree bound for generator search")
    p.add_argument("--bound", type=int, default=2, help="entry bound for the Mengerian grid")
    p.add_argument("--guard", action="append", default=[], metavar="NAME=VALUE", help="override a search guard")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--seed", type=int, default=None, help="seed for random:N inputs")
    p.add_argument("--c", help="vector, e.g. 1,1,0 or [1,1,0]")
    p.add_argument("--k", type=int, help="cover order / power")
    p.add_argument("--parity", choices=("odd", "any"), default="odd")
    p.add_argument("--min-length", type=int, default=3)
    p.add_argument("--kind", choices=("facet", "cover", "symbolic", "compare"), default="compare")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_intermixed_args(argv)

    def emit(obj: Any, stream=sys.stdout) -> None:
        if args.format == "text" and stream is sys.stdout:
            print(format_text(obj), file=stream)
        else:
            print(json.dumps(obj) if stream is sys.stderr else dump_json(obj), file=stream)

    try:
        overrides = {}
        for g in args.guard:
            overrides.update(parse_overrides(g))
        with limits(**overrides):
            cx = read_complex(args.input, args.seed)
            result = run_command(args, cx)
    except GuardExceeded as exc:
        emit(exc.to_dict(), sys.stderr)
        return 2
    except ConsistencyError as exc:
        emit({"error": "consistency", "message": str(exc)}, sys.stderr)
        return 3
    except (ComplexError, ValueError) as exc:
        emit({"error": "malformed_input", "message": str(exc)}, sys.stderr)
        return 1
    emit(result)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
