"""Command line front end.

Usage::

    polyoideal VERB INPUT [--order=degrevlex|lex] [--cap-vertices=N]
               [--cap-walks=N] [--junction=min|all]
               [--field=rational|prime32003] [--format=text|json]

``INPUT`` is a JSON fixture path, ``-`` for standard input, or
``fixture:NAME`` for a built-in fixture. Exit status is 0 on success
(including an "invalid" verdict), 1 on input errors and 2 when a cap
refuses the computation.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from . import fixtures
from .decomposition import DEFAULT_CAP, radical_decomposition, verify_main_theorem
from .fixtures import ClosedPathSample, generate_closed_paths  # noqa: F401  (re-export)
from .geometry import (CapExceeded, CellComplex, InputError, Polyocollection, ViolationList,
                       closed_path, enumerate_zigzag_walks, find_L_configurations, find_ladders,
                       is_simple)
from .ideals import PRIME, Ideal, height, ideal_of
from .lattice import LatticeError, build_lattice_model, lattice_ideal
from .monomials import MonomialOrder

VERBS = ("validate", "inner", "ideal", "gb", "prime", "zigzag", "decompose",
         "closed-path-verify", "height", "lattice")

# vertex caps per verb when --cap-vertices is not given
DEFAULT_CAPS = {"decompose": DEFAULT_CAP, "zigzag": 40}
GENERAL_CAP = 80


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="polyoideal", description="Binomial ideals of polyocollections.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("input", help="fixture path, '-' for stdin, or fixture:NAME")
    p.add_argument("--order", choices=("degrevlex", "lex"), default="degrevlex")
    p.add_argument("--cap-vertices", type=int, default=None)
    p.add_argument("--cap-walks", type=int, default=None)
    p.add_argument("--junction", choices=("min", "all"), default="min")
    p.add_argument("--field", choices=("rational", "prime32003"), default="rational")
    p.add_argument("--format", choices=("text", "json"), default="text")
    return p


def read_input(spec: str, stdin=None):
    """Parsed collection for ``spec`` (a path, ``-`` or ``fixture:NAME``)."""
    if spec.startswith("fixture:"):
        return fixtures.load(spec[len("fixture:"):])
    if spec == "-":
        text = (stdin or sys.stdin).read()
    else:
        try:
            with open(spec, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {spec}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON at line {exc.lineno} column {exc.colno} "
                         f"(char {exc.pos}): {exc.msg}") from None
    return fixtures.parse_fixture(data)


# ---------------------------------------------------------------------------
# verbs; each returns a JSON-ready dict


def _collection(obj) -> Polyocollection:
    return obj.polyocollection if isinstance(obj, CellComplex) else obj


def _cells(obj) -> CellComplex:
    if isinstance(obj, CellComplex):
        return obj
    if obj.is_cells:
        return CellComplex(m.ll for m in obj.members)
    raise InputError("this verb needs a collection of cells")


def _cap(args, verb: str) -> int | None:
    cap = args.cap_vertices
    if cap is None:
        cap = DEFAULT_CAPS.get(verb, GENERAL_CAP)
    return None if cap <= 0 else cap


def _check_cap(C: Polyocollection, cap: int | None):
    if cap is not None and len(C.vertices) > cap:
        raise CapExceeded(f"|V| = {len(C.vertices)} exceeds the cap {cap}; raise --cap-vertices")


def _order(args) -> MonomialOrder:
    return MonomialOrder(args.order)


def _ideal(C: Polyocollection, args) -> Ideal:
    I = ideal_of(C, order=_order(args))
    if args.field == "prime32003":
        I = Ideal(I.table, I.generators, I.order, PRIME)
    return I


def verb_validate(obj, args) -> dict:
    out = {"verdict": "valid"}
    C = _collection(obj)
    out["members"] = len(C.members)
    out["vertices"] = len(C.vertices)
    if isinstance(obj, CellComplex):
        out["polyomino"] = obj.is_polyomino()
        out["simple"] = is_simple(obj).simple if out["polyomino"] else None
        chk = closed_path(obj)
        out["closed_path"] = chk.ok
        if not chk.ok:
            out["closed_path_condition"] = chk.condition
    return out


def verb_inner(obj, args) -> dict:
    C = _collection(obj)
    _check_cap(C, _cap(args, "inner"))
    return {"inner_intervals": [str(I) for I in sorted(C.inner_intervals)],
            "count": len(C.inner_intervals)}


def verb_ideal(obj, args) -> dict:
    C = _collection(obj)
    I = ideal_of(C, order=_order(args))
    return {"variables": list(I.table.names),
            "generators": [f.to_text(I.order) for f in I.generators]}


def verb_gb(obj, args) -> dict:
    C = _collection(obj)
    _check_cap(C, _cap(args, "gb"))
    I = _ideal(C, args)
    G = I.groebner_basis()
    return {"order": args.order, "field": args.field, "size": len(G),
            "groebner_basis": [g.to_text(I.order) for g in G]}


def verb_prime(obj, args) -> dict:
    C = _collection(obj)
    _check_cap(C, _cap(args, "prime"))
    I = ideal_of(C)
    L = lattice_ideal(C, table=I.table)
    prime = I.equals(L)
    extra = [g.to_text() for g in L.groebner_basis() if not I.contains(g)]
    h = height(I) if C.members else 0
    return {"verdict": "prime" if prime else "non-prime", "height": h,
            "dimension": len(I.table) - h, "lattice_extra_generators": extra}


def verb_height(obj, args) -> dict:
    C = _collection(obj)
    _check_cap(C, _cap(args, "height"))
    I = ideal_of(C)
    h = height(I) if C.members else 0
    return {"height": h, "dimension": len(I.table) - h, "variables": len(I.table)}


def verb_zigzag(obj, args) -> dict:
    P = _cells(obj)
    walks = enumerate_zigzag_walks(P, cap_vertices=_cap(args, "zigzag"), cap_walks=args.cap_walks)
    out = {"count": len(walks), "lengths": [len(W) for W in walks],
           "walks": [W.to_json() for W in walks],
           "closed_path": P._closed_path.ok}
    if P._closed_path.ok:
        out["l_configurations"] = len(find_L_configurations(P))
        out["ladders"] = len(find_ladders(P))
        out["verdict"] = "non-prime" if walks else "prime"
    if walks:
        necks = {W.necklace(P) for W in walks}
        out["identical_necklaces"] = len(necks) == 1
        out["necklace"] = [list(p) for p in sorted(next(iter(necks)))]
    return out


def verb_decompose(obj, args) -> dict:
    C = _collection(obj)
    rep = radical_decomposition(C, cap=_cap(args, "decompose"))
    return _report(rep)


def verb_closed_path_verify(obj, args) -> dict:
    P = _cells(obj)
    _check_cap(P.polyocollection, _cap(args, "closed-path-verify"))
    rep = verify_main_theorem(P, toric=True, junction=args.junction)
    return _report(rep)


def verb_lattice(obj, args) -> dict:
    C = _collection(obj)
    _check_cap(C, _cap(args, "lattice"))
    model = build_lattice_model(C)
    L = lattice_ideal(C)
    return {"determinant": model.determinant,
            "free_vertices": [list(p) for p in model.free_vertices],
            "matrix_csv": model.to_csv(),
            "lattice_ideal": [g.to_text() for g in L.groebner_basis()]}


def _report(rep) -> dict:
    out = rep.to_json(timing=False)
    out["verdict"] = "pass" if rep.passed else "fail"
    out["_text"] = rep.to_text()
    return out


VERB_FUNCS: dict[str, Callable] = {
    "validate": verb_validate, "inner": verb_inner, "ideal": verb_ideal, "gb": verb_gb,
    "prime": verb_prime, "zigzag": verb_zigzag, "decompose": verb_decompose,
    "closed-path-verify": verb_closed_path_verify, "height": verb_height,
    "lattice": verb_lattice,
}


def run(verb: str, obj, args) -> dict:
    """Run one verb on a parsed input; an invalid collection is a verdict."""
    if isinstance(obj, ViolationList):
        return {"verdict": "invalid",
                "witness": [str(obj.violations[0].first), str(obj.violations[0].second)],
                "violations": [{"pair": [str(v.first), str(v.second)], "clause": v.clause}
                               for v in obj.violations]}
    return VERB_FUNCS[verb](obj, args)


def render_text(result: dict) -> str:
    if "_text" in result:
        return result["_text"]
    lines = []
    for k in sorted(result):
        v = result[k]
        if isinstance(v, list) and v and not isinstance(v[0], (int, bool)):
            lines.append(f"{k}:")
            lines.extend(f"  {json.dumps(x, sort_keys=True) if isinstance(x, (dict, list)) else x}"
                         for x in v)
        elif isinstance(v, str) and "\n" in v:
            lines.append(f"{k}:")
            lines.extend(f"  {row}" for row in v.rstrip("\n").split("\n"))
        else:
            lines.append(f"{k}: {json.dumps(v) if not isinstance(v, str) else v}")
    return "\n".join(lines)


def main(argv: list[str] | None = None, stdout=None, stderr=None, stdin=None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        obj = read_input(args.input, stdin)
        result = run(args.verb, obj, args)
    except CapExceeded as exc:
        print(f"refused: {exc}", file=err)
        return 2
    except (InputError, LatticeError) as exc:
        print(f"error: {exc}", file=err)
        return 1
    if args.format == "json":
        result = {k: v for k, v in result.items() if k != "_text"}
        print(json.dumps(result, sort_keys=True, indent=2), file=out)
    else:
        print(render_text(result), file=out)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
