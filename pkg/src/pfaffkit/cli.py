"""Command-line front end.

Every subcommand prints a report; ``--json`` switches to a machine-readable
object ``{"command", "input", "verdict", "timing"}``.  Exit status is 0
whenever a verdict was computed (including "false" verdicts) and 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .exterior import DiffForm, PolyMap, interior_product, pullback
from .groebner import Ideal, groebner_basis, ideal_dimension, ideal_member, radical_member, same_variety
from .parsing import ParseError, parse_form, parse_form_file, parse_polynomial, parse_polynomial_list
from .pfaff import (
    PfaffSystem,
    class_of,
    codim_report,
    derived_pencil,
    engel_check,
    in_derived,
    is_integrable,
    is_integral_variety,
    same_system,
    singular_ideal,
)
from .projective import (
    CORPUS,
    ProjectiveSystem,
    atypicality_verdict,
    corpus,
    degeneracy_check,
    degree_of,
    euler_check,
    jouanolou_factor,
    jouanolou_sides,
    radial,
)
from .ring import GREVLEX, LEX, Ambient, MonomialOrder, Polynomial

EXIT_OK = 0
EXIT_INPUT = 2


class UsageError(ValueError):
    pass


class Session:
    """Shared ambient and input sources for one invocation."""

    def __init__(self, args):
        first = args.first if args.first is not None else (1 if args.vars == 4 else 0)
        self.ambient = Ambient(args.vars, first)
        self.args = args
        self.order = MonomialOrder(args.order)

    def forms(self, texts=None) -> list:
        args = self.args
        if getattr(args, "corpus", None):
            entry = corpus(args.corpus)
            if entry.ambient != self.ambient:
                raise UsageError(
                    f"corpus {entry.name!r} lives on {entry.ambient}, session ambient is {self.ambient}"
                )
            return list(entry.parsed().values())
        if getattr(args, "file", None):
            return parse_form_file(args.file, self.ambient)
        texts = args.inputs if texts is None else texts
        if not texts:
            raise UsageError("no input: give forms, --corpus or --file")
        return [parse_form(t, self.ambient) for t in texts]

    def system(self) -> PfaffSystem:
        return PfaffSystem(self.forms())

    def polys(self, texts) -> list:
        out = []
        for t in texts:
            out.extend(parse_polynomial_list(t, self.ambient))
        return out


def _variety_name(ideal: Ideal):
    """``{z0=z1=0}`` when V(ideal) is a coordinate subspace, else None."""
    amb = ideal.ambient
    if ideal.is_unit():
        return "empty"
    coords = [
        lab for lab in amb.labels if radical_member(Polynomial.variable(amb, lab), ideal)
    ]
    if not same_variety(ideal, Ideal(amb, [Polynomial.variable(amb, lab) for lab in coords])):
        return None
    if not coords:
        return "everything"
    return "{" + "=".join(f"z{lab}" for lab in coords) + "=0}"


# -- subcommands ------------------------------------------------------------------

def cmd_engel_check(s: Session):
    S = s.system()
    report = engel_check(S)
    return {"forms": [str(g) for g in S]}, report.to_dict()


def cmd_sing(s: Session):
    S = s.system()
    ideal = singular_ideal(S)
    codim = codim_report(S)
    verdict = {
        "singular_ideal_basis": [str(g) for g in ideal.groebner(s.order)],
        "variety": _variety_name(ideal),
        **codim.to_dict(),
    }
    if s.args.against:
        target = Ideal(s.ambient, parse_polynomial_list(s.args.against, s.ambient))
        verdict["same_variety_as"] = {"ideal": [str(g) for g in target.generators],
                                      "verdict": same_variety(ideal, target)}
    return {"forms": [str(g) for g in S]}, verdict


def cmd_dim(s: Session):
    ideal = Ideal(s.ambient, s.polys(s.args.inputs))
    return {"ideal": [str(g) for g in ideal.generators]}, ideal_dimension(ideal).to_dict()


def cmd_class(s: Session):
    forms = s.forms()
    return {"forms": [str(f) for f in forms]}, {"class": [class_of(f) for f in forms]}


def cmd_derived(s: Session):
    S = s.system()
    verdict = {
        "generators": [in_derived(g, S) for g in S],
        "integrable": is_integrable(S),
    }
    if S.k == 2 and not any(verdict["generators"]):
        pencil = derived_pencil(S)
        verdict["pencil"] = None if pencil is None else str(pencil)
    gammas = [parse_form(t, s.ambient) for t in s.args.gamma or []]
    if gammas:
        verdict["candidates"] = [{"form": str(g), "in_derived": in_derived(g, S)} for g in gammas]
    return {"forms": [str(g) for g in S]}, verdict


def cmd_integral(s: Session):
    S = s.system()
    if not s.args.gens:
        raise UsageError("integral needs --gens")
    gens = parse_polynomial_list(s.args.gens, s.ambient)
    return (
        {"forms": [str(g) for g in S], "gens": [str(g) for g in gens]},
        {"integral": is_integral_variety(gens, S)},
    )


def cmd_same_system(s: Session):
    S = s.system()
    if not s.args.other:
        raise UsageError("same-system needs --with")
    T = PfaffSystem([parse_form(t, s.ambient) for t in s.args.other.split(";") if t.strip()])
    return (
        {"forms": [str(g) for g in S], "other": [str(g) for g in T]},
        {"same_system": same_system(S, T)},
    )


def cmd_euler(s: Session):
    forms = s.forms()
    R = radial(s.ambient)
    rows = [
        {"form": str(f), "euler": euler_check(f), "contraction": str(interior_product(R, f))}
        for f in forms
    ]
    return {"forms": [str(f) for f in forms]}, {"results": rows, "all": all(r["euler"] for r in rows)}


def cmd_degree(s: Session):
    forms = s.forms()
    return {"forms": [str(f) for f in forms]}, {"results": [degree_of(f).to_dict() for f in forms]}


def cmd_jouanolou(s: Session):
    rows = []
    forms = s.forms()
    for f in forms:
        lhs, rhs = jouanolou_sides(f)
        rows.append({
            "form": str(f),
            "factor": jouanolou_factor(f) if f else None,
            "lhs": str(lhs),
            "identity": lhs == rhs,
        })
    return {"forms": [str(f) for f in forms]}, {"results": rows}


def cmd_degeneracy(s: Session):
    polys = [parse_polynomial(t, s.ambient) for t in s.args.inputs]
    if len(polys) != 4:
        raise UsageError("degeneracy needs exactly four polynomials f1 f2 f3 f4")
    report = degeneracy_check(*polys, allow_zero_f2=s.args.allow_zero_f2)
    return {"f": [str(p) for p in polys]}, report.to_dict()


def cmd_atypical(s: Session):
    S = s.system()
    P = ProjectiveSystem(S)
    beta = None
    if s.args.beta_generator is not None:
        beta = S.generators[s.args.beta_generator - 1]
    return {"forms": [str(g) for g in S]}, atypicality_verdict(P, beta=beta).to_dict()


def cmd_groebner(s: Session):
    ideal = Ideal(s.ambient, s.polys(s.args.inputs))
    basis = groebner_basis(ideal, s.order)
    return (
        {"ideal": [str(g) for g in ideal.generators], "order": s.args.order},
        {"basis": [str(g) for g in basis.generators]},
    )


def cmd_member(s: Session):
    if len(s.args.inputs) < 2:
        raise UsageError("member needs a polynomial followed by ideal generators")
    p = parse_polynomial(s.args.inputs[0], s.ambient)
    ideal = Ideal(s.ambient, s.polys(s.args.inputs[1:]))
    return (
        {"polynomial": str(p), "ideal": [str(g) for g in ideal.generators]},
        {"member": ideal_member(p, ideal), "radical_member": radical_member(p, ideal)},
    )


def cmd_pullback(s: Session):
    if not s.args.map:
        raise UsageError("pullback needs --map")
    comps = [parse_polynomial(t, s.ambient) for t in s.args.map.split(";") if t.strip()]
    f = PolyMap(s.ambient, s.ambient, comps)
    forms = s.forms()
    return (
        {"map": [str(c) for c in comps], "forms": [str(w) for w in forms]},
        {"pullback": [str(pullback(f, w)) for w in forms]},
    )


def cmd_corpus(s: Session):
    names = s.args.inputs or list(CORPUS)
    entries = []
    for name in names:
        entry = corpus(name)
        parsed = entry.parsed()
        entries.append({
            "name": entry.name,
            "ambient": str(entry.ambient),
            "note": entry.note,
            "forms": {lab: str(f) for lab, f in parsed.items()},
            "round_trip": all(parse_form(str(f), entry.ambient) == f for f in parsed.values()),
        })
    return {"names": names}, {"entries": entries}


COMMANDS = {
    "engel-check": (cmd_engel_check, "Engel conditions, roles, class and singular loci"),
    "sing": (cmd_sing, "singular ideal of a system and its codimension"),
    "dim": (cmd_dim, "dimension of the zero set of polynomials"),
    "class": (cmd_class, "class of 1-forms"),
    "derived": (cmd_derived, "first derived system membership"),
    "integral": (cmd_integral, "integral variety test"),
    "same-system": (cmd_same_system, "generic equality of two systems"),
    "euler": (cmd_euler, "Euler condition i_R w = 0"),
    "degree": (cmd_degree, "projective degree and twist"),
    "jouanolou": (cmd_jouanolou, "radial contraction identity"),
    "degeneracy": (cmd_degeneracy, "homogenized normal form f1 f2 f3 f4"),
    "atypical": (cmd_atypical, "codimension dichotomy on P^4"),
    "groebner": (cmd_groebner, "reduced Groebner basis"),
    "member": (cmd_member, "ideal and radical membership"),
    "pullback": (cmd_pullback, "pull forms back along a polynomial map"),
    "corpus": (cmd_corpus, "list built-in systems"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--vars", type=int, required=True, help="number of variables")
    common.add_argument(
        "--first", type=int, default=None,
        help="label of the first variable (default 1 for --vars 4, else 0)",
    )
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--no-timing", action="store_true", help="omit the timing field")
    common.add_argument("--corpus", choices=sorted(CORPUS), help="built-in system")
    common.add_argument("--order", choices=["grevlex", "lex"], default="grevlex")
    common.add_argument("--file", help="file with one form per line")
    common.add_argument("inputs", nargs="*", help="forms or polynomials")

    parser = argparse.ArgumentParser(prog="pfaffkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    subs = {}
    for name, (_, help_text) in COMMANDS.items():
        subs[name] = sub.add_parser(name, parents=[common], help=help_text)
    subs["sing"].add_argument("--against", help="compare V(Sing) with V(these polynomials)")
    subs["derived"].add_argument("--gamma", action="append", help="candidate 1-form (repeatable)")
    subs["integral"].add_argument("--gens", help="generators of the candidate ideal")
    subs["same-system"].add_argument("--with", dest="other", help="second system, ';'-separated")
    subs["degeneracy"].add_argument("--allow-zero-f2", action="store_true")
    subs["atypical"].add_argument("--beta-generator", type=int, help="1-based generator playing beta")
    subs["pullback"].add_argument("--map", help="map components, ';'-separated")
    return parser


def _render_text(value, indent=0) -> list:
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(pad + _scalar(value))
    return lines


def _scalar(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "null"
    if isinstance(v, (dict, list)):
        return json.dumps(v)
    return str(v)


def run_command(args) -> dict:
    session = Session(args)
    handler = COMMANDS[args.command][0]
    start = time.perf_counter()
    echoed, verdict = handler(session)
    elapsed = time.perf_counter() - start
    report = {
        "command": args.command,
        "ambient": str(session.ambient),
        "input": echoed,
        "verdict": verdict,
    }
    if not args.no_timing:
        report["timing"] = {"seconds": round(elapsed, 6)}
    return report


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = run_command(args)
    except (ParseError, UsageError, ValueError, IndexError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"pfaffkit {args.command}: error: {msg}", file=sys.stderr)
        return EXIT_INPUT
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(f"{report['command']} over {report['ambient']}")
        print("\n".join(_render_text(report["verdict"], 1)))
        if "timing" in report:
            print(f"  ({report['timing']['seconds']:.3f} s)")
    return EXIT_OK
