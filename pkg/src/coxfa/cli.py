"""Command-line front end.

Every subcommand loads a system file, runs one computation and prints a
report: plain text by default, a JSON document with ``--json``.  Reports
depend only on the system contents and the flags, never on the file path,
so identical inputs give byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import math
import sys as _sys
from typing import Callable, Dict, List, Optional, Tuple

from coxfa.angles import format_pi_multiple, gs_angle_formula
from coxfa.classify import (
    component_types,
    is_finite,
    is_k_spherical,
    order,
    v_of,
)
from coxfa.errors import CapExceeded, CoxeterError, ParseError
from coxfa.nerve import build_nerve, dimss_bounds, homology
from coxfa.parabolic import parabolic_intersection
from coxfa.splitting import (
    NO,
    SimplexOfGroups,
    choose_apex,
    fa_verdict,
    maximal_fa_subgroups,
    triangle_curvature,
    v_splitting,
)
from coxfa.system import CoxeterSystem, parse_system
from coxfa.words import DEFAULT_CAP, enumerate_group, reduce

SCHEMA_VERSION = 1
ENUMERATE_CAP = 100_000

COMMANDS = {
    "reduce": "canonical reduced word of --word",
    "equal": "decide whether two --word values are the same element",
    "length": "length of the element --word",
    "classify": "components of the diagram (optionally on --T) with their types",
    "spherical": "is W (or W_T) k-spherical, k given by --n",
    "v": "largest k with W (or W_T) k-spherical",
    "intersect": "W_T ∩ w W_U w^-1 for --T, --U, --word",
    "angle": "Gersten-Stallings angle between W_T and W_U",
    "split": "v-splitting of W along --sprime (default: least admissible S')",
    "curvature": "angle sum of a triangle splitting",
    "fa": "FA_n verdict for --n",
    "maxfa": "maximal FA_n special subgroups for --n",
    "nerve": "nerve of W (or W_T) and its integral homology",
    "dim-bounds": "bounds on the CAT(0) dimension of W",
    "enumerate": "list the elements of a finite W (or W_T)",
}


class UsageError(Exception):
    pass


class InfiniteGroup(CoxeterError):
    pass


def _value(x):
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    return x


class Ctx:
    """Parsed arguments bound to a loaded system."""

    def __init__(self, args, system: CoxeterSystem):
        self.args = args
        self.sys = system

    def names(self, T) -> List[str]:
        return [self.sys.names[i] for i in sorted(T)]

    def subset(self, flag: str, required: bool = False):
        text = getattr(self.args, flag)
        if text is None:
            if required:
                raise UsageError(f"--{flag} is required for {self.args.command}")
            return None
        return self.sys.parse_subset(text)

    def n(self) -> int:
        if self.args.n is None:
            raise UsageError(f"--n is required for {self.args.command}")
        return self.args.n

    def words(self, count: int):
        given = self.args.word or []
        if len(given) != count:
            raise UsageError(f"{self.args.command} takes exactly {count} --word value(s)")
        return [self.sys.parse_word(w) for w in given]

    def cap(self, default: int = DEFAULT_CAP) -> int:
        return default if self.args.cap is None else self.args.cap

    def fmt(self, T) -> str:
        return self.sys.format_subset(T)

    def word(self, w) -> str:
        return self.sys.format_word(w)


Result = Tuple[dict, List[str]]


def cmd_reduce(c: Ctx) -> Result:
    (w,) = c.words(1)
    r = reduce(c.sys, w, c.cap())
    return {"word": c.word(r), "length": len(r)}, [f"reduced: {c.word(r)}", f"length: {len(r)}"]


def cmd_equal(c: Ctx) -> Result:
    w1, w2 = c.words(2)
    r1, r2 = reduce(c.sys, w1, c.cap()), reduce(c.sys, w2, c.cap())
    same = r1 == r2
    payload = {"equal": same, "reduced": [c.word(r1), c.word(r2)]}
    return payload, [f"equal: {'yes' if same else 'no'}", f"reduced: {c.word(r1)} | {c.word(r2)}"]


def cmd_length(c: Ctx) -> Result:
    (w,) = c.words(1)
    r = reduce(c.sys, w, c.cap())
    return {"length": len(r)}, [f"length: {len(r)}"]


def cmd_classify(c: Ctx) -> Result:
    T = c.subset("T")
    T = c.sys.generators if T is None else T
    comps = component_types(c.sys, T)
    total = order(c.sys, T)
    lines = [f"subset: {c.fmt(T)}"]
    rows = []
    for comp, label in comps:
        rows.append({"generators": c.names(comp), "type": str(label)})
        lines.append(f"component {c.fmt(comp)}: {label}")
    finite = is_finite(c.sys, T)
    lines.append(f"finite: {'yes' if finite else 'no'}")
    lines.append(f"order: {total if finite else 'infinite'}")
    lines.append(f"v: {_value(v_of(c.sys, T))}")
    payload = {
        "subset": c.names(T),
        "components": rows,
        "finite": finite,
        "order": total if finite else "inf",
        "v": _value(v_of(c.sys, T)),
    }
    return payload, lines


def cmd_spherical(c: Ctx) -> Result:
    k = c.n()
    T = c.subset("T")
    rep = is_k_spherical(c.sys, k, T)
    lines = [f"k: {k}", f"spherical: {'yes' if rep.holds else 'no'}"]
    payload = {"k": k, "holds": rep.holds, "witness": None}
    if rep.witness is not None:
        lines.append(f"witness: {c.fmt(rep.witness)} generates an infinite group")
        payload["witness"] = c.names(rep.witness)
    return payload, lines


def cmd_v(c: Ctx) -> Result:
    v = _value(v_of(c.sys, c.subset("T")))
    return {"v": v}, [f"v: {v}"]


def cmd_intersect(c: Ctx) -> Result:
    T = c.subset("T", required=True)
    U = c.subset("U", required=True)
    (w,) = c.words(1)
    res = parabolic_intersection(c.sys, T, U, w, c.cap())
    a = c.word(res.conjugator_a)
    lines = [
        f"d: {c.word(res.d)}",
        f"a: {a}",
        f"core: {c.fmt(res.core_generators)}",
        f"intersection: ({a}) <{c.fmt(res.core_generators)}> ({a})^-1",
    ]
    payload = {"a": a, "d": c.word(res.d), "core": c.names(res.core_generators)}
    return payload, lines


def cmd_angle(c: Ctx) -> Result:
    T = c.subset("T", required=True)
    U = c.subset("U", required=True)
    ang = gs_angle_formula(c.sys, T, U)
    return {"angle": str(ang)}, [f"angle: {ang}"]


def _apex(c: Ctx):
    S_prime = c.subset("sprime")
    if S_prime is None:
        S_prime = choose_apex(c.sys)
        if S_prime is None:
            raise CoxeterError("W is finite, it has no v-splitting")
    return S_prime


def _splitting_section(c: Ctx, spl: SimplexOfGroups) -> Result:
    faces = []
    lines = [
        f"S': {c.fmt(spl.apex_generators)}",
        f"S' type: {spl.apex_type}",
        f"dimension: {spl.dimension}",
        f"metric: {spl.metric_tag}",
        "local groups (face spanned by S' vertices: group):",
    ]
    for A in sorted(spl.faces, key=lambda A: (-len(A), sorted(A))):
        simplex = spl.simplex_of(A)
        group = spl.faces[A]
        faces.append({"simplex": c.names(simplex), "group": c.names(group)})
        lines.append(f"  face {c.fmt(simplex)}: <{c.fmt(group)}>")
    payload = {
        "sprime": c.names(spl.apex_generators),
        "sprime_type": str(spl.apex_type),
        "dimension": spl.dimension,
        "metric": spl.metric_tag,
        "faces": faces,
    }
    return payload, lines


def cmd_split(c: Ctx) -> Result:
    spl = v_splitting(c.sys, _apex(c))
    return _splitting_section(c, spl)


def _curvature_section(c: Ctx, spl: SimplexOfGroups) -> Result:
    cur = triangle_curvature(spl)
    rows = []
    lines = ["angles by vertex of S':"]
    for p, ang in cur.angles:
        q, r = sorted(spl.apex_generators - {p})
        rows.append({"vertex": c.sys.names[p], "angle": str(ang)})
        lines.append(
            f"  vertex {c.sys.names[p]}: {ang}"
            f" (between {c.fmt({r} | spl.rest)} and {c.fmt({q} | spl.rest)})"
        )
    lines.append(cur.describe())
    lines.append(f"sum vs pi: {cur.comparison}")
    lines.append(f"curvature: {cur.verdict}")
    payload = {
        "angles": rows,
        "sum": format_pi_multiple(cur.total),
        "comparison": cur.comparison,
        "verdict": cur.verdict,
    }
    return payload, lines


def cmd_curvature(c: Ctx) -> Result:
    spl = v_splitting(c.sys, _apex(c))
    return _curvature_section(c, spl)


def _verify_commands(c: Ctx, spl: SimplexOfGroups, with_angles: bool) -> List[str]:
    sp = ",".join(c.names(spl.apex_generators))
    cmds = ["v", f"classify --T {sp}", f"split --sprime {sp}"]
    if with_angles:
        cmds.append(f"curvature --sprime {sp}")
        for p in sorted(spl.apex_generators):
            q, r = sorted(spl.apex_generators - {p})
            T = ",".join(c.names({r} | spl.rest))
            U = ",".join(c.names({q} | spl.rest))
            cmds.append(f"angle --T {T} --U {U}")
    return [f"coxfa {cmd} --system <file>" for cmd in cmds]


def cmd_fa(c: Ctx) -> Result:
    verdict = fa_verdict(c.sys, c.n())
    lines = [
        f"n: {verdict.n}",
        f"verdict: {verdict.status}",
        f"basis: {verdict.basis}",
        f"v: {_value(verdict.v)}",
    ]
    payload = {
        "n": verdict.n,
        "status": verdict.status,
        "basis": verdict.basis,
        "v": _value(verdict.v),
        "witness": None,
    }
    if verdict.splitting is not None:
        spl = verdict.splitting
        kind = {1: "amalgam splitting", 2: "triangle splitting"}.get(spl.dimension, f"{spl.dimension}-simplex splitting")
        lines.append(f"witness: {kind}")
        w_payload, w_lines = _splitting_section(c, spl)
        lines.extend("  " + ln for ln in w_lines)
        if verdict.curvature is not None:
            cur_payload, cur_lines = _curvature_section(c, spl)
            lines.extend("  " + ln for ln in cur_lines)
            w_payload["curvature"] = cur_payload
        if verdict.status != NO:
            lines.append("  note: nonpositive curvature of this splitting is not established")
        verify = _verify_commands(c, spl, verdict.curvature is not None)
        lines.append("  verify with:")
        lines.extend("    " + v for v in verify)
        w_payload["kind"] = kind
        w_payload["verify"] = verify
        payload["witness"] = w_payload
    return payload, lines


def cmd_maxfa(c: Ctx) -> Result:
    rep = maximal_fa_subgroups(c.sys, c.n())
    lines = [f"n: {rep.n}", f"status: {rep.tag}"]
    if rep.open_v:
        lines.append("open v values met: " + " ".join(str(v) for v in rep.open_v))
    lines.append(f"maximal (n+1)-spherical subsets: {len(rep.subsets)}")
    lines.extend(f"  {c.fmt(T)}" for T in rep.subsets)
    payload = {
        "n": rep.n,
        "status": rep.tag,
        "open_v": list(rep.open_v),
        "subsets": [c.names(T) for T in rep.subsets],
    }
    return payload, lines


def cmd_nerve(c: Ctx) -> Result:
    cx = build_nerve(c.sys, c.subset("T"))
    prof = homology(cx)
    lines = [
        f"vertices: {c.fmt(cx.vertices)}",
        f"dimension: {cx.dimension}",
        f"f-vector: {' '.join(map(str, cx.f_vector()))}",
        f"euler characteristic: {cx.euler_characteristic()}",
        f"betti: {' '.join(map(str, prof.betti))}",
        f"reduced betti: {' '.join(map(str, prof.reduced_betti))}",
        "torsion: " + (" ".join(
            f"H{k}:" + ",".join(map(str, t)) for k, t in enumerate(prof.torsion) if t
        ) or "none"),
        "facets:",
    ]
    lines.extend(f"  {c.fmt(f)}" for f in cx.facets)
    payload = {
        "vertices": c.names(cx.vertices),
        "facets": [c.names(f) for f in cx.facets],
        "f_vector": cx.f_vector(),
        "euler_characteristic": cx.euler_characteristic(),
        "betti": list(prof.betti),
        "reduced_betti": list(prof.reduced_betti),
        "torsion": [list(t) for t in prof.torsion],
    }
    return payload, lines


def cmd_dim_bounds(c: Ctx) -> Result:
    b = dimss_bounds(c.sys)
    lines = [
        f"lower: {b.lower}",
        f"upper: {b.upper}",
        f"homology convention: {b.convention}",
        f"lower with unreduced homology: {b.lower_unreduced}",
    ]
    if b.homology_subset is not None:
        lines.append(
            f"  homology: reduced H_{b.homology_degree} of the nerve on {c.fmt(b.homology_subset)} is nonzero"
        )
    if b.spherical_subset is not None:
        lines.append(
            f"  sphericity: {c.fmt(b.spherical_subset)} is infinite and {b.spherical_n + 1}-spherical"
        )
    lines.append(f"  upper: {c.fmt(b.upper_subset)} generates a finite group")
    payload = {
        "lower": b.lower,
        "upper": b.upper,
        "convention": b.convention,
        "lower_unreduced": b.lower_unreduced,
        "homology_subset": None if b.homology_subset is None else c.names(b.homology_subset),
        "homology_degree": b.homology_degree,
        "spherical_subset": None if b.spherical_subset is None else c.names(b.spherical_subset),
        "spherical_n": b.spherical_n,
        "upper_subset": c.names(b.upper_subset),
    }
    return payload, lines


def cmd_enumerate(c: Ctx) -> Result:
    T = c.subset("T")
    if not is_finite(c.sys, T):
        types = ", ".join(str(label) for _, label in component_types(c.sys, T))
        raise InfiniteGroup(f"the group is infinite (proven by type recognition: {types})")
    elements = enumerate_group(c.sys, T, c.cap(ENUMERATE_CAP))
    words = [c.word(g) for g in elements]
    return {"order": len(words), "elements": words}, [f"order: {len(words)}"] + words


HANDLERS: Dict[str, Callable[[Ctx], Result]] = {
    "reduce": cmd_reduce,
    "equal": cmd_equal,
    "length": cmd_length,
    "classify": cmd_classify,
    "spherical": cmd_spherical,
    "v": cmd_v,
    "intersect": cmd_intersect,
    "angle": cmd_angle,
    "split": cmd_split,
    "curvature": cmd_curvature,
    "fa": cmd_fa,
    "maxfa": cmd_maxfa,
    "nerve": cmd_nerve,
    "dim-bounds": cmd_dim_bounds,
    "enumerate": cmd_enumerate,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--system", required=True, metavar="PATH", help="Coxeter system file")
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--cap", type=int, help="size cap for searches")
    common.add_argument("--n", type=int, help="n for fa/maxfa, k for spherical")
    common.add_argument("--T", dest="T", metavar="NAMES", help="comma separated generators")
    common.add_argument("--U", dest="U", metavar="NAMES", help="comma separated generators")
    common.add_argument("--word", action="append", help="space separated generators, 'e' for identity")
    common.add_argument("--sprime", metavar="NAMES", help="comma separated generators of S'")
    parser = argparse.ArgumentParser(prog="coxfa", description="Coxeter group calculator")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name, text in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=text, description=text)
    return parser


def command_echo(args) -> str:
    """The invocation without the system path, flags in a fixed order."""
    parts = [args.command]
    if args.n is not None:
        parts.append(f"--n {args.n}")
    for flag in ("T", "U", "sprime"):
        val = getattr(args, flag)
        if val is not None:
            parts.append(f"--{flag} {val}")
    for w in args.word or []:
        parts.append(f'--word "{w}"')
    if args.cap is not None:
        parts.append(f"--cap {args.cap}")
    return " ".join(parts)


def render(args, system: CoxeterSystem, payload: dict, lines: List[str]) -> str:
    if args.json:
        doc = {
            "schema": SCHEMA_VERSION,
            "command": command_echo(args),
            "system": system.fingerprint(),
            "generators": list(system.names),
            "result": payload,
        }
        return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    head = [f"command: {command_echo(args)}", f"system: {system.fingerprint()}"]
    return "\n".join(head + lines) + "\n"


def _error(kind: str, message: str, as_json: bool) -> str:
    if as_json:
        doc = {"schema": SCHEMA_VERSION, "error": {"kind": kind, "message": message}}
        return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    return f"coxfa: {kind}: {message}\n"


def run(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = _sys.stdout if out is None else out
    err = _sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        with open(args.system, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        err.write(_error("missing-file", f"cannot read {args.system}: {exc.strerror}", args.json))
        return 1
    try:
        system = parse_system(text)
        payload, lines = HANDLERS[args.command](Ctx(args, system))
    except UsageError as exc:
        parser.print_usage(err)
        err.write(f"coxfa: usage error: {exc}\n")
        return 2
    except ParseError as exc:
        err.write(_error("parse-error", str(exc), args.json))
        return 1
    except CapExceeded as exc:
        err.write(_error("cap-exceeded", f"{exc} (this does not show the group is infinite)", args.json))
        return 1
    except InfiniteGroup as exc:
        err.write(_error("infinite", str(exc), args.json))
        return 1
    except CoxeterError as exc:
        err.write(_error("domain-error", str(exc), args.json))
        return 1
    out.write(render(args, system, payload, lines))
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    return run(argv)
