"""Command-line workbench: JSON payloads in, deterministic reports out.

Exit codes: 0 success, 1 validation failure (the report explains why),
2 malformed input.  Payloads are UTF-8 JSON files; a handful of preset
names stand in for files so the shipped examples run without any setup.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .cox import (
    AliasTable,
    NegativeExponentError,
    binomials,
    boundary_monomial,
    is_degenerate_monomial,
    pretty,
    trinomials,
)
from .datum import (
    DatumStructureError,
    build_datum,
    build_tilde,
    check_tilde_structure,
    validate_datum,
)
from .mutation import (
    MutationFamilyError,
    OutsideVError,
    mutate,
    mutation_family,
    specialize_fiber,
    validate_fano,
    validate_mutation_datum,
)
from .oracle import (
    boundary_equality_check,
    degree_zero_equality_check,
    hilbert_basis,
)
from . import presets
from .polyhedral import Cone, Fan, Polyhedron
from .projective import (
    NonPrimitiveVertexError,
    OriginNotInteriorError,
    PolarizedToricVariety,
    classify_divisor,
    cox_comparison,
    polytope_in_M,
)


class InputError(Exception):
    """Malformed payload; maps to exit code 2."""


class Failure(Exception):
    """Validation failure with a printable report; maps to exit code 1."""

    def __init__(self, text):
        self.text = text
        super().__init__(text)


# ---------------------------------------------------------------------------
# lenient JSON loading


def _load_file(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise InputError("cannot read %s: %s" % (path, e.strerror or e))
    except json.JSONDecodeError as e:
        raise InputError("invalid JSON in %s: %s" % (path, e))


def _coord(x) -> Fraction:
    if isinstance(x, bool):
        raise InputError("coordinate %r is not a number" % (x,))
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError):
            raise InputError("bad coordinate %r" % (x,))
    if isinstance(x, (list, tuple)) and len(x) == 2:
        try:
            return Fraction(int(x[0]), int(x[1]))
        except (ValueError, TypeError, ZeroDivisionError):
            raise InputError("bad coordinate %r" % (x,))
    raise InputError("bad coordinate %r" % (x,))


def _vector(v) -> tuple:
    if not isinstance(v, (list, tuple)) or not v:
        raise InputError("expected a coordinate vector, got %r" % (v,))
    return tuple(_coord(x) for x in v)


def _int_vector(v) -> tuple:
    out = _vector(v)
    if any(x.denominator != 1 for x in out):
        raise InputError("expected integer coordinates in %r" % (v,))
    return tuple(int(x) for x in out)


def _polytope(obj) -> Polyhedron:
    if isinstance(obj, list):
        obj = {"vertices": obj}
    if not isinstance(obj, dict) or "vertices" not in obj:
        raise InputError("polytope payload needs a \"vertices\" list")
    verts = [_vector(v) for v in obj["vertices"]]
    rays = [_int_vector(r) for r in obj.get("rays", [])]
    if not verts:
        raise InputError("polytope payload has no vertices")
    rank = len(verts[0])
    if any(len(v) != rank for v in verts) or any(len(r) != rank for r in rays):
        raise InputError("inconsistent coordinate lengths in polytope")
    return Polyhedron.from_points_and_rays(rank, verts, rays)


def _cone(obj) -> Cone:
    if not isinstance(obj, dict) or "rays" not in obj:
        raise InputError("cone payload needs a \"rays\" list")
    rays = [_int_vector(r) for r in obj["rays"]]
    if not rays:
        raise InputError("cone payload has no rays")
    rank = int(obj.get("rank", len(rays[0])))
    if any(len(r) != rank for r in rays):
        raise InputError("inconsistent ray lengths in cone")
    return Cone.from_generators(rank, rays)


def _datum(obj):
    if not isinstance(obj, dict):
        raise InputError("datum payload must be a JSON object")
    for key in ("sigma", "summands", "w"):
        if key not in obj:
            raise InputError("datum payload needs \"%s\"" % key)
    sigma = _cone(obj["sigma"])
    summands = [_polytope(s) for s in obj["summands"]]
    w = _int_vector(obj["w"])
    total = _polytope(obj["Q"]) if "Q" in obj else None
    try:
        return build_datum(sigma, summands, w,
                           boundary=bool(obj.get("boundary", False)),
                           total=total)
    except DatumStructureError as e:
        raise InputError(str(e))


def _mutation_payload(obj):
    if not isinstance(obj, dict):
        raise InputError("mutation payload must be a JSON object")
    for key in ("polytope", "w", "factor"):
        if key not in obj:
            raise InputError("mutation payload needs \"%s\"" % key)
    return (_polytope(obj["polytope"]), _int_vector(obj["w"]),
            _polytope(obj["factor"]))


# ---------------------------------------------------------------------------
# presets as stand-in payloads


def _datum_for(name: str, p: int):
    if name == "cA1":
        return presets.ca1_datum(p)
    if name == "toy-plane":
        return presets.toy_plane_datum()
    if name == "hexagon-a":
        return presets.hexagon_data()[0]
    if name == "hexagon-b":
        return presets.hexagon_data()[1]
    if name == "p2-p114":
        return presets.p2_p114_family().induced_datum
    return None


def _shipped_alias(name: str):
    if name == "cA1":
        return presets.ca1_alias
    if name == "p2-p114":
        return presets.p2_p114_alias
    return None


def _resolve(args, loader, preset_lookup=None):
    """A payload argument is a file if one exists at that path, else a
    known preset name."""
    if os.path.exists(args.input):
        return loader(_load_file(args.input)), None
    if preset_lookup is not None:
        got = preset_lookup(args.input)
        if got is not None:
            return got, args.input
    raise InputError("no such file or preset: %s" % args.input)


# ---------------------------------------------------------------------------
# output helpers


def _emit_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _fmt_vec(v) -> str:
    return "(" + ", ".join(str(Fraction(x)) for x in v) + ")"


def _alias_for(args, rays, preset_name):
    if args.alias:
        data = _load_file(args.alias)
        try:
            return AliasTable.from_json(data, rays)
        except (KeyError, TypeError, ValueError) as e:
            raise InputError("bad alias table: %s" % e)
    shipped = _shipped_alias(preset_name) if preset_name else None
    if shipped is not None:
        return shipped(rays)
    return AliasTable.default(rays)


# ---------------------------------------------------------------------------
# commands


def _cmd_validate_datum(args):
    d, _ = _resolve(args, _datum, lambda n: _datum_for(n, args.p))
    rep = validate_datum(d)
    if args.format == "json":
        out = _emit_json(rep.to_json())
    else:
        out = str(rep)
    return (0 if rep.ok else 1), out


def _require_valid(d):
    rep = validate_datum(d)
    if not rep.ok:
        raise Failure(str(rep))
    return rep


def _cmd_tilde(args):
    d, _ = _resolve(args, _datum, lambda n: _datum_for(n, args.p))
    _require_valid(d)
    t = build_tilde(d)
    struct = check_tilde_structure(t)
    if args.format == "json":
        out = _emit_json({"tilde": t.to_json(),
                          "structure": struct.to_json()})
    else:
        lines = ["rays:"]
        for r, prov in zip(t.rays, t.provenance):
            lines.append("  %s  <- %s" % (_fmt_vec(r), "; ".join(prov)))
        lines.append("w_tilde: %s" % _fmt_vec(t.w_tilde))
        lines.append("pairing matrix (rows e_i*):")
        for row in t.pairing_matrix():
            lines.append("  " + " ".join("%3d" % x for x in row))
        lines.append("structure: %s"
                     % ("ok" if struct.ok else struct.detail))
        out = "\n".join(lines)
    return (0 if struct.ok else 1), out


def _cmd_equations(args):
    d, preset = _resolve(args, _datum, lambda n: _datum_for(n, args.p))
    _require_valid(d)
    t = build_tilde(d)
    alias = _alias_for(args, t.rays, preset)
    try:
        bs = binomials(t)
        ts = trinomials(t)
        mono = boundary_monomial(t) if d.boundary else None
    except NegativeExponentError as e:
        raise Failure(str(e))
    if args.format == "json":
        out = _emit_json({
            "rays": [list(r) for r in t.rays],
            "binomials": [f.to_json() for f in bs],
            "trinomials": [f.to_json() for f in ts],
            "boundary_monomial": mono.to_json() if mono else None,
        })
    else:
        lines = []
        for i, f in enumerate(ts, start=1):
            lines.append("trinomial %d: %s" % (i, pretty(f, t.rays, alias)))
        for i, f in enumerate(bs, start=1):
            lines.append("binomial %d: %s" % (i, pretty(f, t.rays, alias)))
        if mono is not None:
            text = pretty(mono, t.rays, alias)
            if is_degenerate_monomial(mono):
                text += "  (degenerate: empty support)"
            lines.append("boundary monomial: %s" % text)
        out = "\n".join(lines)
    return 0, out


def _polarize_payload(obj) -> PolarizedToricVariety:
    if not isinstance(obj, dict):
        raise InputError("polarize payload must be a JSON object")
    try:
        if "tau" in obj:
            return PolarizedToricVariety.from_cone(_cone(obj["tau"]))
        if "polytope" in obj:
            return PolarizedToricVariety.from_fano_polytope(
                _polytope(obj["polytope"]))
        if "fan" in obj and "phi" in obj:
            fan_obj = obj["fan"]
            rays = tuple(_int_vector(r) for r in fan_obj["rays"])
            cones = tuple(tuple(int(i) for i in c)
                          for c in fan_obj["maximal_cones"])
            fan = Fan(rank=int(fan_obj.get("rank", len(rays[0]))),
                      rays=rays, maximal_cones=cones)
            phi = [_coord(x) for x in obj["phi"]]
            return PolarizedToricVariety.from_support_function(fan, phi)
    except (OriginNotInteriorError, NonPrimitiveVertexError) as e:
        raise Failure(str(e))
    except (KeyError, TypeError) as e:
        raise InputError("bad polarize payload: %s" % e)
    except ValueError as e:
        raise Failure(str(e))
    raise InputError(
        "polarize payload needs \"tau\", \"polytope\", or \"fan\"+\"phi\"")


def _cmd_polarize(args):
    v, _ = _resolve(
        args, _polarize_payload,
        lambda n: (_polarize_payload({"polytope": presets.p2_polytope()
                                      .to_json()})
                   if n == "p2-p114" else None))
    pm = polytope_in_M(v)
    cls = classify_divisor(v)
    if args.format == "json":
        out = _emit_json({
            "tau": v.tau.to_json(),
            "fan_rays": [list(r) for r in v.fan.rays],
            "phi": [str(x) for x in v.phi_values],
            "classification": str(cls),
            "cox_exponents": list(cox_comparison(v)),
            "polytope_in_M": pm.to_json(),
        })
    else:
        lines = ["fan rays and support values:"]
        for rd in v.ray_data:
            lines.append("  rho=%s  phi=%s  b=%d"
                         % (_fmt_vec(rd.rho), rd.phi, rd.b))
        lines.append("classification: %s" % cls)
        lines.append("polytope in M: vertices %s"
                     % " ".join(_fmt_vec(x) for x in pm.vertices))
        out = "\n".join(lines)
    return 0, out


def _fano_and_datum(args):
    (p, w, f), preset = _resolve(
        args, _mutation_payload,
        lambda n: presets.p2_p114_inputs() if n == "p2-p114" else None)
    try:
        fano = validate_fano(p)
        d = validate_mutation_datum(fano, w, f)
    except ValueError as e:
        # covers MutationDatumError and the Fano shape checks
        raise Failure(str(e))
    return fano, d, preset


def _cmd_mutate(args):
    fano, d, _ = _fano_and_datum(args)
    mut = mutate(fano, d)
    if args.format == "json":
        out = _emit_json({
            "vertices": [list(v) for v in mut.vertices()],
            "witnesses": [
                {"height": layer.height,
                 "factor_vertices":
                     None if layer.factor_part is None else
                     [[str(Fraction(x)) for x in v]
                      for v in layer.factor_part.vertices]}
                for layer in d.witnesses],
        })
    else:
        lines = ["mutated polytope: conv{%s}"
                 % ", ".join(_fmt_vec(v) for v in sorted(mut.vertices()))]
        for layer in d.witnesses:
            if layer.factor_part is None:
                lines.append("  height %d: empty" % layer.height)
            else:
                lines.append("  height %d: conv{%s}" % (
                    layer.height,
                    ", ".join(_fmt_vec(v)
                              for v in layer.factor_part.vertices)))
        out = "\n".join(lines)
    return 0, out


def _build_family(args):
    fano, d, preset = _fano_and_datum(args)
    try:
        return mutation_family(fano, d), preset
    except MutationFamilyError as e:
        raise Failure(str(e))


def _cmd_family(args):
    fam, preset = _build_family(args)
    alias = _alias_for(args, fam.fan.rays, preset)
    if args.format == "json":
        out = _emit_json({
            "rays": [list(r) for r in fam.fan.rays],
            "weights": list(fam.weights()),
            "trinomial": fam.trinomial.to_json(),
            "monomial": fam.monomial.to_json(),
            "mutated_vertices": [list(v) for v in fam.mutated.vertices()],
            "q_tilde_vertices": [[str(Fraction(x)) for x in v]
                                 for v in fam.q_tilde.vertices],
        })
    else:
        lines = []
        lines.append("ambient rays: %s"
                     % " ".join(_fmt_vec(r) for r in fam.fan.rays))
        lines.append("weights: %s" % _fmt_vec(fam.weights()))
        lines.append("trinomial: %s"
                     % pretty(fam.trinomial, fam.fan.rays, alias))
        lines.append("monomial: %s"
                     % pretty(fam.monomial, fam.fan.rays, alias))
        lines.append("mutated polytope: conv{%s}"
                     % ", ".join(_fmt_vec(v)
                                 for v in sorted(fam.mutated.vertices())))
        out = "\n".join(lines)
    return 0, out


def _parse_point(text: str) -> tuple:
    parts = text.split(":")
    if len(parts) != 3:
        raise InputError("parameter point must look like a:b:c")
    try:
        return tuple(Fraction(x) for x in parts)
    except (ValueError, ZeroDivisionError):
        raise InputError("bad parameter point %r" % text)


def _cmd_fiber(args):
    fam, preset = _build_family(args)
    point = _parse_point(args.point)
    try:
        rep = specialize_fiber(fam, point)
    except OutsideVError as e:
        raise Failure(str(e))
    except ValueError as e:
        raise InputError(str(e))
    alias = _alias_for(args, fam.fan.rays, preset)
    if args.format == "json":
        out = _emit_json(rep.to_json())
    else:
        lines = ["fiber at [%s] (%s): %s"
                 % (":".join(str(x) for x in rep.point), rep.kind,
                    pretty(rep.polynomial, fam.fan.rays, alias))]
        lines.append("monomial: %s"
                     % pretty(rep.monomial, fam.fan.rays, alias))
        if rep.matched is not None:
            lines.append("matched reference binomial: %s" % rep.matched)
        out = "\n".join(lines)
    code = 0 if rep.matched is not False else 1
    return code, out


def _cmd_hilbert_basis(args):
    c, _ = _resolve(
        args, _cone,
        lambda n: presets.ca1_sigma().dual() if n == "cA1" else None)
    try:
        hb = hilbert_basis(c, bound=args.bound)
    except ValueError as e:
        raise Failure(str(e))
    if args.format == "json":
        out = _emit_json(hb.to_json())
    else:
        lines = ["generators: %s"
                 % " ".join(_fmt_vec(g) for g in hb.generators)]
        lines.append("complete: %s (bound %d, certificate needs %d)"
                     % (hb.complete, hb.bound, hb.certificate_bound))
        out = "\n".join(lines)
    return 0, out


def _cmd_oracle(args):
    d, _ = _resolve(args, _datum, lambda n: _datum_for(n, args.p))
    _require_valid(d)
    t = build_tilde(d)
    rep0 = degree_zero_equality_check(t, bound=args.bound)
    repb = boundary_equality_check(t, bound=args.bound) if d.boundary \
        else None
    ok = rep0.ok and (repb is None or repb.ok)
    if args.format == "json":
        payload = {"degree_zero": rep0.to_json()}
        if repb is not None:
            payload["boundary"] = repb.to_json()
        out = _emit_json(payload)
    else:
        lines = ["degree-zero check: %d pairs, %d failures"
                 % (rep0.checked, len(rep0.failures))]
        if repb is not None:
            lines.append("boundary check: %d characters, %d failures"
                         % (repb.checked, len(repb.failures)))
        out = "\n".join(lines)
    return (0 if ok else 1), out


def _cmd_verify_example(args):
    try:
        rep = presets.verify_example(args.name, p=args.p)
    except KeyError as e:
        raise InputError(e.args[0])
    if args.format == "json":
        out = _emit_json(rep.to_json())
    else:
        out = "\n".join(rep.lines())
    return (0 if rep.ok else 1), out


_COMMANDS = {
    "validate-datum": (_cmd_validate_datum,
                       "check the six datum conditions, report each"),
    "tilde": (_cmd_tilde, "build the enlarged cone and check its shape"),
    "equations": (_cmd_equations,
                  "binomials, trinomials, boundary monomial"),
    "polarize": (_cmd_polarize,
                 "polarized projective data from a cone or polytope"),
    "mutate": (_cmd_mutate, "mutate a Fano polytope"),
    "family": (_cmd_family, "the one-parameter pencil of a mutation"),
    "fiber": (_cmd_fiber, "specialize the pencil at a parameter point"),
    "hilbert-basis": (_cmd_hilbert_basis,
                      "irreducible semigroup generators of a cone"),
    "oracle": (_cmd_oracle, "bounded brute-force ideal equality checks"),
    "verify-example": (_cmd_verify_example,
                       "run a shipped example against its goldens"),
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toricdeform",
        description="exact toric deformation workbench")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in _COMMANDS.items():
        sp = sub.add_parser(name, help=help_text)
        if name == "verify-example":
            sp.add_argument("name",
                            help="one of: %s" % ", ".join(
                                presets.PRESET_NAMES))
        else:
            sp.add_argument("input", help="JSON payload file or preset name")
        if name == "fiber":
            sp.add_argument("--point", required=True,
                            help="homogeneous parameter point a:b:c")
        sp.add_argument("--format", choices=("json", "pretty"),
                        default="pretty", help="output format")
        sp.add_argument("--bound", type=int, default=12,
                        help="degree bound for enumerations")
        sp.add_argument("--p", type=int, default=3,
                        help="exponent for the cA1 preset")
        sp.add_argument("--alias", default=None,
                        help="JSON file with variable names per ray")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handler, _ = _COMMANDS[args.command]
    try:
        code, out = handler(args)
    except Failure as e:
        print(e.text)
        return 1
    except InputError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    if out:
        print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
