"""Command-line interface.

Exit status: 0 on success, 1 for invalid input or out-of-domain parameters,
2 when a verification subcommand finds a residual above its tolerance.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import fockrep as fr
from . import kinematics as kin
from . import liealg as la
from .errors import QuaplecticError

EXIT_OK, EXIT_INPUT, EXIT_TOLERANCE = 0, 1, 2


class InputError(Exception):
    pass


def fmt(x) -> str:
    return f"{float(x):.17g}"


def _floats(text: str, n: int | None = None) -> list[float]:
    try:
        vals = [float(s) for s in text.split(",")]
    except ValueError:
        raise InputError(f"expected comma-separated numbers, got {text!r}") from None
    if n is not None and len(vals) != n:
        raise InputError(f"expected {n} comma-separated numbers, got {len(vals)}")
    if not all(np.isfinite(vals)):
        raise InputError(f"non-finite value in {text!r}")
    return vals


def _constants(args) -> kin.Constants:
    return kin.Constants(c=args.c, b=args.b, hbar=args.hbar)


def _params(text: str) -> kin.FrameParams:
    return kin.FrameParams(*_floats(text, 3))


def _write(path, text: str, out) -> None:
    if path:
        Path(path).write_text(text)
        print(f"wrote {path}", file=out)


def _verdict(ok: bool, out) -> int:
    print("status " + ("ok" if ok else "FAIL"), file=out)
    return EXIT_OK if ok else EXIT_TOLERANCE


# -- kinematics ----------------------------------------------------------


def cmd_transform(args, out):
    t = kin.build_transform(args.kind, _params(args.params), _constants(args))
    for row in t.matrix:
        print(" ".join(fmt(x) for x in row), file=out)
    if args.frame:
        image = kin.apply_transform(t, kin.PhaseFrame(*_floats(args.frame, 4)))
        print("frame " + " ".join(fmt(x) for x in image.as_array()), file=out)
    return EXIT_OK


def cmd_compose(args, out):
    p = kin.compose(args.kind, _params(args.p2), _params(args.p1), _constants(args))
    print(" ".join(fmt(x) for x in p.as_array()), file=out)
    return EXIT_OK


def cmd_rates(args, out):
    r = kin.rates_transform(_params(args.params), kin.RateVector(*_floats(args.rates, 3)), _constants(args))
    print(" ".join(fmt(x) for x in r.as_array()), file=out)
    return EXIT_OK


def cmd_null_surface(args, out):
    rep = kin.null_surface(_params(args.params), _constants(args))
    print(f"residual {fmt(rep.residual)}", file=out)
    print(f"fixed_point {str(rep.is_fixed_point).lower()}", file=out)
    return EXIT_OK


def cmd_limits(args, out):
    bs = _floats(args.b_values) if args.b_values else kin.geometric_schedule()
    rep = kin.limit_check(_params(args.params), [(args.c, b) for b in bs], c=args.c)
    print("b binf_error lorentz_error hamilton_error", file=out)
    for (_, b), e1, e2, e3 in zip(rep.schedule, rep.binf_error, rep.lorentz_error, rep.hamilton_error):
        print(" ".join(fmt(x) for x in (b, e1, e2, e3)), file=out)
    print(f"slope {fmt(rep.slope)}", file=out)
    if args.expect_slope is None:
        return EXIT_OK
    return _verdict(abs(rep.slope - args.expect_slope) <= args.slope_tol, out)


def cmd_integrate(args, out):
    fmap, res = kin.integrate_frame(_params(args.params))
    for row in fmap.matrix:
        print(" ".join(fmt(x) for x in row), file=out)
    for key in sorted(res):
        print(f"{key} {fmt(res[key])}", file=out)
    return _verdict(max(res.values()) <= args.tol, out)


def cmd_scales(args, out):
    s = kin.scales(_constants(args))
    for key in ("lambda_t", "lambda_q", "lambda_p", "lambda_e"):
        print(f"{key} {fmt(getattr(s, key))}", file=out)
    return EXIT_OK


# -- Lie algebras ----------------------------------------------------------


def _algebra(args) -> la.LieAlgebra:
    if bool(args.algebra) == bool(args.input):
        raise InputError("give exactly one of --algebra or --input")
    if args.input:
        return la.LieAlgebra.load(args.input)
    return la.builtin_algebra(args.algebra)


def cmd_jacobi(args, out):
    L = _algebra(args)
    res = la.jacobi_residual(L)
    print(f"dim {L.dim}", file=out)
    print(f"jacobi_residual {fmt(res)}", file=out)
    if args.output:
        L.save(args.output)
        print(f"wrote {args.output}", file=out)
    return _verdict(res <= args.tol, out)


def cmd_extend(args, out):
    L = _algebra(args)
    sol = la.central_extensions(L)
    print(f"h2_dim {sol.h2_dim}", file=out)
    if args.verbose:
        print(f"cocycle_kernel {sol.kernel_dim}", file=out)
        print(f"coboundary_rank {sol.coboundary_rank}", file=out)
        for k, w in enumerate(sol.cocycles):
            for a, b in zip(*np.nonzero(np.triu(np.abs(w) > 1e-12))):
                print(f"cocycle {k} {L.names[a]} {L.names[b]} {fmt(w[a, b])}", file=out)
    if args.output:
        if sol.h2_dim == 0:
            raise InputError("no nontrivial extension to write")
        la.extend(L, sol.cocycles[0]).save(args.output)
        print(f"wrote {args.output}", file=out)
    return EXIT_OK


def cmd_contract(args, out):
    L = _algebra(args)
    if bool(args.preset) == bool(args.weights):
        raise InputError("give exactly one of --preset or --weights")
    if args.preset:
        w = la.preset_weights(L, args.preset)
    else:
        w = la.ContractionWeights(tuple(int(x) for x in _floats(args.weights, L.dim)))
    C = la.contract(L, w)
    fp = la.fingerprint(C)
    res = la.jacobi_residual(C)
    print(f"dim {C.dim}", file=out)
    print(f"brackets {len(C.brackets)}", file=out)
    print("derived " + " ".join(str(x) for x in fp["derived"]), file=out)
    print("lower_central " + " ".join(str(x) for x in fp["lower_central"]), file=out)
    print(f"center {fp['center']}", file=out)
    print(f"killing_rank {fp['killing_rank']}", file=out)
    print(f"jacobi_residual {fmt(res)}", file=out)
    if args.output:
        C.save(args.output)
        print(f"wrote {args.output}", file=out)
    return _verdict(res <= 1e-12, out)


# -- representations -------------------------------------------------------


def _bundle(args, **kw):
    p, q = (int(x) for x in _floats(args.signature, 2))
    return fr.build_rep(fr.Signature(p, q), fr.Truncation(args.cutoff), **kw)


def cmd_rep_check(args, out):
    b = _bundle(args)
    res = fr.commutator_residuals(b)
    for key in sorted(res):
        print(f"{key} {fmt(res[key])}", file=out)
    return _verdict(max(res.values()) <= args.tol, out)


def cmd_casimir(args, out):
    b = _bundle(args)
    cas = fr.casimir_ops(b, args.max_order)
    keys = ["c_gen", "d_a", "mutual", "c1_check"]
    for key in keys + ["d_z"]:
        print(f"{key} {fmt(cas.residuals[key])}", file=out)
    for name, specs in (("C", cas.c_spectra), ("D", cas.d_spectra)):
        for k, s in enumerate(specs, 1):
            levels = " ".join(f"{fmt(v)}x{c}" for v, c in s.degeneracies()[: args.show])
            print(f"{name}{k} {levels}", file=out)
    if args.output:
        rows = []
        for name, specs in (("C", cas.c_spectra), ("D", cas.d_spectra)):
            rows += [(f"fock:{name}{k}", s.eigenvalues) for k, s in enumerate(specs, 1)]
        text = "index,eigenvalue,method\n" + "".join(
            fr.spectrum_csv(vals, tag).split("\n", 1)[1] for tag, vals in rows
        )
        _write(args.output, text, out)
    return _verdict(max(cas.residuals[k] for k in keys) <= args.tol, out)


def cmd_spectrum(args, out):
    if args.method == "grid":
        rep = fr.oscillator_spectrum_grid(args.half_width, args.points, args.levels, args.order)
        print("one_d " + " ".join(fmt(x) for x in rep.residuals["one_d"]), file=out)
        print(f"even_deviation {fmt(rep.residuals['even_deviation'])}", file=out)
        fock = fr.oscillator_spectrum_fock(args.levels)
        agree = float(np.max(np.abs(rep.eigenvalues - fock.eigenvalues)))
        print(f"fock_agreement {fmt(agree)}", file=out)
        ok = rep.residuals["even_deviation"] <= 2e-3 and agree <= 1e-3
    else:
        rep = fr.oscillator_spectrum_fock(args.levels)
        ok = True
    print("values " + " ".join(fmt(x) for x in rep.eigenvalues), file=out)
    _write(args.output, fr.spectrum_csv(rep.eigenvalues, rep.method), out)
    return _verdict(ok, out)


def cmd_wave(args, out):
    b = _bundle(args)
    eps = None
    if args.eps:
        vals = _floats(args.eps)
        m = b.modes
        if len(vals) != 2 * m * m:
            raise InputError(f"--eps needs {2 * m * m} numbers (real and imaginary parts, row-major)")
        eps = (np.array(vals[::2]) + 1j * np.array(vals[1::2])).reshape(m, m)
    op = fr.wave_operator(b, args.order, eps)
    margin = max(b.truncation.interior_margin, 2 * args.order)
    spec = fr.interior_spectrum(b, op, margin)
    print(f"dim {op.shape[0]}", file=out)
    print(f"hermiticity {fmt(spec.residuals['hermiticity'])}", file=out)
    print("levels " + " ".join(f"{fmt(v)}x{c}" for v, c in spec.degeneracies()[: args.show]), file=out)
    _write(args.output, fr.matrix_csv(op), out)
    return _verdict(spec.residuals["hermiticity"] <= args.tol, out)


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quaplectic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def units(p):
        p.add_argument("--c", type=float, default=1.0, help="speed bound (default 1)")
        p.add_argument("--b", type=float, default=1.0, help="force bound (default 1)")
        p.add_argument("--hbar", type=float, default=1.0, help="action scale (default 1)")

    def algebra(p):
        p.add_argument("--algebra", help="catalog name such as poincare13 or quaplectic11")
        p.add_argument("--input", help="algebra JSON file")
        p.add_argument("--output", help="write the resulting algebra as JSON")

    def rep(p, cutoff=10):
        p.add_argument("--signature", default="1,1", help="p,q mode counts (default 1,1)")
        p.add_argument("--cutoff", type=int, default=cutoff)
        p.add_argument("--tol", type=float, default=1e-8)

    kinds = list(kin.KINDS)
    p = sub.add_parser("transform", help="build a 4x4 frame transform")
    p.add_argument("--kind", choices=kinds, required=True)
    p.add_argument("--params", required=True, help="v,f,r")
    p.add_argument("--frame", help="dt,dq,dp,de to transform")
    units(p)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("compose", help="compose two frames with the closed-form law")
    p.add_argument("--kind", choices=kinds, required=True)
    p.add_argument("--p1", required=True, help="v,f,r of the first frame")
    p.add_argument("--p2", required=True, help="v,f,r of the second frame")
    units(p)
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("rates", help="transform acceleration, force rate and power rate")
    p.add_argument("--params", required=True)
    p.add_argument("--rates", required=True, help="dv/dt,df/dt,dr/dt")
    units(p)
    p.set_defaults(func=cmd_rates)

    p = sub.add_parser("null-surface", help="null-surface residual and fixed-point test")
    p.add_argument("--params", required=True)
    units(p)
    p.set_defaults(func=cmd_null_surface)

    p = sub.add_parser("limits", help="approach of the reciprocal transform to its limits")
    p.add_argument("--params", required=True)
    p.add_argument("--b-values", help="comma-separated b schedule (default 1e2..1e6)")
    p.add_argument("--c", type=float, default=1.0)
    p.add_argument("--expect-slope", type=float)
    p.add_argument("--slope-tol", type=float, default=0.1)
    p.set_defaults(func=cmd_limits)

    p = sub.add_parser("integrate", help="integrated Hamilton frame map and residuals")
    p.add_argument("--params", required=True)
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_integrate)

    p = sub.add_parser("scales", help="dimensional scales from c, b, hbar")
    units(p)
    p.set_defaults(func=cmd_scales)

    p = sub.add_parser("jacobi", help="Jacobi residual of an algebra")
    algebra(p)
    p.add_argument("--tol", type=float, default=1e-12)
    p.set_defaults(func=cmd_jacobi)

    p = sub.add_parser("extend", help="nontrivial central extensions")
    algebra(p)
    p.add_argument("--verbose", action="store_true", help="print ranks and cocycle entries")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("contract", help="contraction limit of an algebra")
    algebra(p)
    p.add_argument("--preset", choices=sorted(la.contraction.PRESET_ALIASES))
    p.add_argument("--weights", help="comma-separated integer weights")
    p.set_defaults(func=cmd_contract)

    p = sub.add_parser("rep-check", help="commutation residuals of the oscillator representation")
    rep(p, 12)
    p.set_defaults(func=cmd_rep_check)

    p = sub.add_parser("casimir", help="Casimir operators, commutators and spectra")
    rep(p)
    p.add_argument("--max-order", type=int, default=4)
    p.add_argument("--show", type=int, default=8, help="levels printed per operator")
    p.add_argument("--output", help="CSV of all interior eigenvalues")
    p.set_defaults(func=cmd_casimir)

    p = sub.add_parser("spectrum", help="relativistic oscillator spectrum")
    p.add_argument("--method", choices=["grid", "fock"], default="grid")
    p.add_argument("--half-width", type=float, default=8.0)
    p.add_argument("--points", type=int, default=201)
    p.add_argument("--levels", type=int, default=5)
    p.add_argument("--order", type=int, default=4, help="finite-difference accuracy order")
    p.add_argument("--output", help="CSV path")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("wave", help="wave operator of a given order")
    rep(p)
    p.add_argument("--order", type=int, default=1)
    p.add_argument("--eps", help="Hermitian m x m block as re,im pairs, row-major")
    p.add_argument("--show", type=int, default=8)
    p.add_argument("--output", help="matrix CSV path")
    p.set_defaults(func=cmd_wave)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage; that code is reserved for tolerance failures
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args, out)
    except (InputError, QuaplecticError, ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
