"""Command-line interface: ``revlexgin <subcommand> ...``.

Ideal files hold one generator per line (terms or polynomials in x0, x1, ...);
blank lines and lines starting with ``#`` are ignored. Curve files are JSON
``{"n":..,"d":..,"g":..,"param":[..]}`` or ``{"gens":[..]}``.

Exit status: 0 on success, 2 on a failed precondition or certificate,
1 on an internal error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import __version__
from .borel import (
    MonomialIdeal,
    almost_revlex_construct,
    dgin_compare,
    enumerate_strongly_stable,
    gotzmann_decomposition,
    gotzmann_number,
    hilbert_function,
    is_strongly_stable,
    max_hilbert_function,
    monomial_saturation,
    points_hilbert_function,
    saturate_borel,
    screen_candidates,
    segment_ideal_construct,
)
from .curves import (
    CurveSpec,
    attach_line,
    curve_gin,
    curve_ideal,
    grid_cells,
    hyperplane_section_in,
    random_rational_curve,
    rational_normal_curve,
    select_pencil_and_line,
    verify_theorem,
)
from .errors import CertificateError, EnumerationLimitError, PreconditionError
from .groebner import MonomialOrder, buchberger, gin_report, initial_ideal, is_groebner, saturate_x0
from .order import RingContext, expand
from .polyring import Polynomial

_VAR = re.compile(r"x(\d+)")


def _read_lines(path: str) -> list:
    text = sys.stdin.read() if path == "-" else open(path).read()
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]


def _ring_for(texts, args) -> RingContext:
    if args.vars:
        names = tuple(v.strip() for v in args.vars.split(","))
        return RingContext(len(names), names)
    idx = [int(m) for s in texts for m in _VAR.findall(s)]
    return RingContext.standard(max(max(idx, default=0) + 1, 2))


_TERM_LINE = re.compile(r"^[A-Za-z_0-9^*\s]+$")


def _is_term(text: str) -> bool:
    return bool(_TERM_LINE.match(text)) and not re.search(r"(^|\*)\s*\d+\s*(\*|$)", text) or text == "1"


def _load_ideal(path, args):
    """Monomial ideal when every line is a term, otherwise a list of polynomials."""
    lines = _read_lines(path)
    ring = _ring_for(lines, args)
    if all(_is_term(s) for s in lines):
        return ring, MonomialIdeal.parse(ring, lines), None
    return ring, None, [Polynomial.parse(ring, s) for s in lines]


def _ideal_from_polys(ring, polys):
    return initial_ideal(buchberger(polys, ring=ring))


def _load_curve(args) -> CurveSpec:
    if getattr(args, "rnc", None):
        return rational_normal_curve(args.rnc)
    if getattr(args, "random", None):
        n, d = args.random
        return random_rational_curve(n, d, args.seed, args.bound)
    if not getattr(args, "file", None):
        raise PreconditionError("give a curve file, --rnc N or --random N D")
    text = sys.stdin.read() if args.file == "-" else open(args.file).read()
    return CurveSpec.from_json(json.loads(text))


def _ideal_json(J: MonomialIdeal) -> dict:
    out = J.to_json()
    out["terms"] = J.gen_strings()
    return out


class _Out:
    def __init__(self, args):
        self.json = args.json
        self.data = {}
        self.lines = []

    def put(self, key, value, text=None):
        self.data[key] = value
        if text is not None:
            self.lines.append(text)

    def text(self, line):
        self.lines.append(line)

    def emit(self, stream):
        if self.json:
            stream.write(json.dumps(self.data, sort_keys=True, indent=2) + "\n")
        else:
            for ln in self.lines:
                stream.write(ln + "\n")


def _gens_text(J: MonomialIdeal) -> str:
    return "\n".join(J.gen_strings()) if J.gens else "(zero ideal)"


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_hf(args, out):
    ring, J, polys = _load_ideal(args.file, args)
    if J is None:
        J = _ideal_from_polys(ring, polys)
    H = hilbert_function(J, args.up_to)
    out.put("hilbert_function", H.to_json())
    out.text("values: " + " ".join(str(v) for v in H.values))
    out.text(f"polynomial: {H.poly_str()}")
    out.text(f"regularity: {H.stab}")


def cmd_almost_revlex(args, out):
    H = max_hilbert_function(args.n, args.d, args.g)
    J = almost_revlex_construct(H, RingContext.standard(args.n + 1), args.max_degree)
    out.put("ideal", _ideal_json(J), _gens_text(J))
    out.put("hilbert_function", H.to_json())


def cmd_segment(args, out):
    ring = RingContext.standard(args.nvars, first=args.first)
    H = points_hilbert_function(args.nvars, args.points)
    J = segment_ideal_construct(H, ring)
    out.put("ideal", _ideal_json(J), _gens_text(J))
    out.put("hilbert_function", H.to_json())


def cmd_expand(args, out):
    texts = list(args.terms)
    if args.file:
        texts += _read_lines(args.file)
    if not texts:
        raise PreconditionError("nothing to expand")
    ring = _ring_for(texts, args)
    result = expand([ring.parse_term(s) for s in texts])
    strings = [ring.format_term(t.exponents) for t in result]
    out.put("terms", strings, "\n".join(strings))


def cmd_saturate(args, out):
    ring, J, polys = _load_ideal(args.file, args)
    if J is not None:
        S = saturate_borel(J) if is_strongly_stable(J) else monomial_saturation(J)
        out.put("ideal", _ideal_json(S), _gens_text(S))
        return
    G = saturate_x0(buchberger(polys, ring=ring))
    out.put("basis", G.to_json(), "\n".join(str(f) for f in G.polys))


def _parse_poly_coeffs(args):
    if args.curve:
        d, g = args.curve
        return [Fraction(1 - g), Fraction(d)]
    if not args.coeffs:
        raise PreconditionError("give Hilbert polynomial coefficients or --curve D G")
    return [Fraction(c) for c in args.coeffs]


def cmd_gotzmann(args, out):
    p = _parse_poly_coeffs(args)
    dec = gotzmann_decomposition(p)
    r = gotzmann_number(p)
    out.put("gotzmann_number", r, f"gotzmann number: {r}")
    out.put("decomposition", dec)
    out.text("exponents: " + " ".join(str(a) for a in dec))


def cmd_compare(args, out):
    ring1, J1, p1 = _load_ideal(args.first, args)
    ring2, J2, p2 = _load_ideal(args.second, args)
    J1 = J1 if J1 is not None else _ideal_from_polys(ring1, p1)
    J2 = J2 if J2 is not None else _ideal_from_polys(ring2, p2)
    nv = max(J1.nvars, J2.nvars)
    ring = RingContext.standard(nv) if not args.vars else ring1
    J1 = MonomialIdeal(ring, [e + (0,) * (nv - len(e)) for e in J1.gens])
    J2 = MonomialIdeal(ring, [e + (0,) * (nv - len(e)) for e in J2.gens])
    res = dgin_compare(J1, J2, args.degree_cap)
    out.put("result", res.value, res.value)


def cmd_enumerate(args, out):
    if args.curve:
        n, d, g = args.curve
        H = max_hilbert_function(n, d, g)
        ring = RingContext.standard(n + 1)
    elif args.points:
        nv, k = args.points
        H = points_hilbert_function(nv, k)
        ring = RingContext.standard(nv, first=args.first)
    else:
        raise PreconditionError("give --curve N D G or --points NVARS NPOINTS")
    found = enumerate_strongly_stable(H, ring, args.saturated, args.max_degree, args.node_cap)
    out.put("count", len(found), f"{len(found)} ideal(s)")
    out.put("ideals", [_ideal_json(J) for J in found])
    for J in found:
        out.text(str(J))


def cmd_screen(args, out):
    found = screen_candidates(args.n, args.d, args.g, args.max_degree, args.node_cap)
    AR = almost_revlex_construct(max_hilbert_function(args.n, args.d, args.g), RingContext.standard(args.n + 1))
    rows = []
    for J in found:
        rel = dgin_compare(AR, J).value
        rows.append({"ideal": _ideal_json(J), "almost_revlex": J == AR, "almost_revlex_vs_this": rel})
        out.text(f"{J}  [almost revlex vs this: {rel}]")
    out.put("count", len(found))
    out.put("candidates", rows)


def cmd_gb(args, out):
    ring, J, polys = _load_ideal(args.file, args)
    if polys is None:
        polys = [Polynomial.monomial(ring, e) for e in J.gens]
    G = buchberger(polys, MonomialOrder.from_tag(args.order), ring=ring)
    if not is_groebner(G):
        raise CertificateError("S-polynomial certificate failed")
    out.put("basis", G.to_json(), "\n".join(str(f) for f in G.polys))


def cmd_in(args, out):
    ring, J, polys = _load_ideal(args.file, args)
    if J is None:
        J = _ideal_from_polys(ring, polys)
    out.put("ideal", _ideal_json(J), _gens_text(J))


def cmd_gin(args, out):
    ring, J, polys = _load_ideal(args.file, args)
    if polys is None:
        polys = [Polynomial.monomial(ring, e) for e in J.gens]
    res = gin_report(polys, args.trials, args.seed, args.bound)
    out.put("ideal", _ideal_json(res.ideal), _gens_text(res.ideal))
    out.put("trials_used", res.trials_used)
    out.put("strongly_stable", True)


def cmd_curve(args, out):
    C = _load_curve(args)
    G = curve_ideal(C, args.method)
    H = hilbert_function(initial_ideal(G), args.up_to)
    out.put("curve", C.to_json())
    out.put("basis", G.to_json(), "\n".join(str(f) for f in G.polys))
    out.put("hilbert_function", H.to_json())
    out.text("hilbert function: " + " ".join(str(v) for v in H.values) + f"  then {H.poly_str()}")


def cmd_section(args, out):
    C = _load_curve(args)
    cg = curve_gin(C, args.trials, args.seed, args.bound)
    Z = hyperplane_section_in(cg.basis)
    target = segment_ideal_construct(points_hilbert_function(C.n, C.d), Z.ring)
    out.put("ideal", _ideal_json(Z), _gens_text(Z))
    out.put("segment", Z == target, f"segment ideal: {Z == target}")


def cmd_attach_line(args, out):
    C = _load_curve(args)
    cg = curve_gin(C, args.trials, args.seed, args.bound)
    S = select_pencil_and_line(cg.basis, args.seed, curve=cg.curve, bound=args.bound)
    A = attach_line(cg.basis, S)
    ring = cg.basis.ring
    out.put("gin", _ideal_json(cg.ideal))
    out.put("selection", S.to_json())
    out.put("attached", A.to_json(ring))
    out.text(f"tau1 = {ring.format_term(S.tau1)}, tau2 = {ring.format_term(S.tau2)}")
    out.text("certificates: " + ", ".join(f"{k}={v}" for k, v in S.certificates.items()))
    out.text("leading terms: " + ", ".join(ring.format_term(e) for e in A.leading_terms))


def cmd_verify(args, out):
    opts = dict(bound=args.bound, trials=args.trials, screen=not args.no_screen, line=not args.no_line)
    if args.grid:
        seeds = args.seeds or [args.seed]
        reports = [verify_theorem(n, d, 0, s, **opts) for n, d in grid_cells(args.grid) for s in seeds]
        out.put("reports", [r.to_json() for r in reports])
        out.put("all_equal", all(r.equal for r in reports))
        for r in reports:
            out.text(f"n={r.n} d={r.d} seed={r.seed}: equal={r.equal}")
        return
    if args.n is None or args.d is None:
        raise PreconditionError("verify needs N D [G] or --grid NMAX")
    curve = None
    if args.curve:
        curve = CurveSpec.from_json(json.load(open(args.curve)))
    r = verify_theorem(args.n, args.d, args.g, args.seed, curve=curve, **opts)
    out.put("report", r.to_json())
    out.put("equal", r.equal)
    out.text(f"equal: {r.equal}")
    out.text(f"gin: {r.gin}")
    out.text(f"almost revlex: {r.almost_revlex}")
    for name, stage in r.stages.items():
        if name != "sample":
            out.text(f"{name}: {json.dumps(stage, sort_keys=True)}")


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed of the single PRNG (default 0)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--bound", type=int, default=100, help="random coefficients in [-B, B] (default 100)")
    common.add_argument("--vars", help="comma-separated variable names, least first")

    parser = argparse.ArgumentParser(prog="revlexgin", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"revlexgin {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    p = add("hf", cmd_hf, "Hilbert function of R/I for an ideal file")
    p.add_argument("file")
    p.add_argument("--up-to", type=int, default=0)

    p = add("almost-revlex", cmd_almost_revlex, "almost revlex ideal of a general curve")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("g", type=int)
    p.add_argument("--max-degree", type=int)

    p = add("segment", cmd_segment, "saturated degrevlex segment ideal of general points")
    p.add_argument("nvars", type=int)
    p.add_argument("points", type=int)
    p.add_argument("--first", type=int, default=1, help="index of the first variable (default 1)")

    p = add("expand", cmd_expand, "ordered expansion of equal-degree terms")
    p.add_argument("terms", nargs="*")
    p.add_argument("--file")

    p = add("saturate", cmd_saturate, "saturation of a monomial ideal, or I : x0^inf for polynomials")
    p.add_argument("file")

    p = add("gotzmann", cmd_gotzmann, "Gotzmann decomposition of a Hilbert polynomial")
    p.add_argument("coeffs", nargs="*", help="coefficients, constant term first")
    p.add_argument("--curve", type=int, nargs=2, metavar=("D", "G"))

    p = add("compare", cmd_compare, "compare two ideals under >>")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--degree-cap", type=int, default=400)

    p = add("enumerate", cmd_enumerate, "strongly stable ideals with a given Hilbert function")
    p.add_argument("--curve", type=int, nargs=3, metavar=("N", "D", "G"))
    p.add_argument("--points", type=int, nargs=2, metavar=("NVARS", "NPOINTS"))
    p.add_argument("--first", type=int, default=0)
    p.add_argument("--saturated", action="store_true")
    p.add_argument("--max-degree", type=int)
    p.add_argument("--node-cap", type=int, default=10**6)

    p = add("screen", cmd_screen, "candidate gins with the segment hyperplane section")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("g", type=int)
    p.add_argument("--max-degree", type=int)
    p.add_argument("--node-cap", type=int, default=10**6)

    p = add("gb", cmd_gb, "reduced Groebner basis")
    p.add_argument("file")
    p.add_argument("--order", default="degrevlex", help="degrevlex or block:K")

    p = add("in", cmd_in, "degrevlex initial ideal")
    p.add_argument("file")

    p = add("gin", cmd_gin, "generic initial ideal by random coordinates")
    p.add_argument("file")
    p.add_argument("--trials", type=int, default=5)

    curve_opts = argparse.ArgumentParser(add_help=False)
    curve_opts.add_argument("file", nargs="?")
    curve_opts.add_argument("--rnc", type=int, metavar="N", help="rational normal curve in P^N")
    curve_opts.add_argument("--random", type=int, nargs=2, metavar=("N", "D"), help="random rational curve")
    curve_opts.add_argument("--trials", type=int, default=5)

    p = sub.add_parser("curve", parents=[common, curve_opts], help="ideal of a curve")
    p.set_defaults(func=cmd_curve)
    p.add_argument("--method", default="kernel", choices=["kernel", "elimination"])
    p.add_argument("--up-to", type=int, default=0)

    p = sub.add_parser("section", parents=[common, curve_opts], help="initial ideal of a general hyperplane section")
    p.set_defaults(func=cmd_section)

    p = sub.add_parser("attach-line", parents=[common, curve_opts], help="pencil, line and interpolated quadrics")
    p.set_defaults(func=cmd_attach_line)

    p = add("verify", cmd_verify, "gin of a general curve versus the almost revlex ideal")
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("d", type=int, nargs="?")
    p.add_argument("g", type=int, nargs="?", default=0)
    p.add_argument("--curve", help="curve JSON file (required for g = 1)")
    p.add_argument("--grid", type=int, metavar="NMAX")
    p.add_argument("--seeds", type=int, nargs="*")
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--no-screen", action="store_true")
    p.add_argument("--no-line", action="store_true")
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = _Out(args)
    try:
        args.func(args, out)
    except (PreconditionError, CertificateError, EnumerationLimitError) as exc:
        stderr.write(f"error: {exc}\n")
        return 2
    except (OSError, json.JSONDecodeError) as exc:
        stderr.write(f"error: {exc}\n")
        return 2
    except Exception as exc:  # noqa: BLE001
        stderr.write(f"internal error: {exc.__class__.__name__}: {exc}\n")
        return 1
    out.emit(stdout)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
