"""``greenring`` command-line interface.

Exit status: 0 on success, 1 when a ``verify`` report has violations, 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from pathlib import Path

from . import __version__
from .based import (
    BasedRing,
    based_from_presented,
    detect_involution,
    fpdim,
    fusion_report,
    gram_and_radicals,
)
from .bifrob import DEFAULT_TOL, bifrob_build, bifrob_verify, grouplike_build, grouplike_verify
from .errors import GreenRingError
from .parser import parse_element
from .presented import (
    RingKind,
    from_monomial_coords,
    grothendieck_projection,
    make_ring,
    render_terms,
    stable_projection,
    to_monomial_basis,
)
from .report import Report
from .ringfile import dumps, format_float, load_ring, ring_csv, ring_text, ring_to_dict

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _common(p: argparse.ArgumentParser, formats=("json", "csv", "text"), default="text"):
    p.add_argument("--kind", choices=["radford", "grothendieck", "stable", "taft"], default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--input", metavar="FILE", help="BasedRingFile JSON instead of --kind/--n/--m")
    p.add_argument("--format", choices=formats, default=default)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--out", metavar="FILE", help="write output here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="greenring",
        description="Green rings of Radford Hopf algebras: tables, forms, FPdims, verification.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    _common(sub.add_parser("ring", help="basis and structure constants"), default="json")

    p = sub.add_parser("mul", help="multiply two elements")
    _common(p)
    p.add_argument("left")
    p.add_argument("right")

    _common(sub.add_parser("gram", help="Gram matrix of the unit-coefficient form"))
    _common(sub.add_parser("radical", help="left and right radicals of the form"))
    _common(sub.add_parser("fpdim", help="Frobenius-Perron dimensions"))

    p = sub.add_parser("verify", help="check fusion, group-like or bi-Frobenius axioms")
    p.add_argument("what", choices=["fusion", "group-like", "bifrobenius"])
    _common(p, ("json", "text"), default="json")

    p = sub.add_parser("convert", help="stable ring: monomial <-> F basis")
    _common(p)
    p.add_argument("--to", choices=["f", "monomial"], default="f")
    p.add_argument("element")

    p = sub.add_parser("project", help="project a Radford Green ring element")
    p.add_argument("target", choices=["stable", "grothendieck"])
    _common(p)
    p.add_argument("element")
    return parser


# -- helpers -------------------------------------------------------------------


def _spec(args, default_kind=None):
    kind = args.kind or default_kind
    if kind is None:
        raise UsageError("--kind is required (or --input)")
    if args.n is None:
        raise UsageError("--n is required")
    m = args.m if args.m is not None else (2 if kind in ("radford", "grothendieck") else 1)
    return make_ring(kind, args.n, m)


def _ring(args, *, validate=True) -> BasedRing:
    if args.input:
        return load_ring(args.input, validate=validate)
    return based_from_presented(_spec(args))


def _write(args, text: str):
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _element_payload(e) -> dict:
    return {"ring": e.spec.describe(), "element": str(e),
            "coefficients": {str(k): v for k, v in e.coeffs.items()}}


def _emit_element(args, e):
    if args.format == "json":
        _write(args, dumps(_element_payload(e)))
    elif args.format == "csv":
        _write(args, _csv([["label", "coefficient"]] + [[str(k), v] for k, v in e.coeffs.items()]))
    else:
        _write(args, str(e))


def _render_monomials(coords: dict) -> str:
    def name(i, j):
        parts = [p for p in ((f"y^{i}" if i > 1 else "y" if i else ""),
                             (f"z^{j}" if j > 1 else "z" if j else "")) if p]
        return "*".join(parts) or "1"

    ordered = sorted(coords.items(), key=lambda kv: (kv[0][1], kv[0][0]), reverse=True)
    return render_terms((name(i, j), c) for (i, j), c in ordered)


# -- commands ------------------------------------------------------------------


def cmd_ring(args):
    r = _ring(args)
    if args.format == "json":
        _write(args, dumps(ring_to_dict(r)))
    elif args.format == "csv":
        _write(args, ring_csv(r))
    else:
        _write(args, ring_text(r))


def cmd_mul(args):
    spec = _spec(args)
    _emit_element(args, parse_element(args.left, spec) * parse_element(args.right, spec))


def cmd_gram(args):
    r = _ring(args)
    g = gram_and_radicals(r).gram
    if args.format == "json":
        _write(args, dumps({"labels": list(r.labels), "gram": g}))
    elif args.format == "csv":
        _write(args, _csv([[""] + list(r.labels)] + [[lab] + row for lab, row in zip(r.labels, g)]))
    else:
        width = max(len(s) for s in r.labels)
        lines = [f"{lab:>{width}}  " + " ".join(f"{v:>2}" for v in row) for lab, row in zip(r.labels, g)]
        _write(args, "\n".join(lines))


def cmd_radical(args):
    r = _ring(args)
    form = gram_and_radicals(r)
    if args.format == "json":
        _write(args, dumps({"labels": list(r.labels), "left_radical": form.left_radical,
                            "right_radical": form.right_radical,
                            "nondegenerate": form.nondegenerate}))
    elif args.format == "csv":
        rows = [["side"] + list(r.labels)]
        rows += [["left"] + v for v in form.left_radical]
        rows += [["right"] + v for v in form.right_radical]
        _write(args, _csv(rows))
    else:
        def show(vs):
            return [render_terms((r.labels[i], c) for i, c in enumerate(v) if c) for v in vs]

        lines = [f"nondegenerate: {str(form.nondegenerate).lower()}",
                 f"left radical (rank {len(form.left_radical)}):"]
        lines += ["  " + s for s in show(form.left_radical)]
        lines.append(f"right radical (rank {len(form.right_radical)}):")
        lines += ["  " + s for s in show(form.right_radical)]
        _write(args, "\n".join(lines))


def cmd_fpdim(args):
    r = _ring(args)
    dims = fpdim(r, args.tol)
    if args.format == "json":
        _write(args, dumps({"labels": list(r.labels), "fpdim": [float(d) for d in dims]}))
    elif args.format == "csv":
        _write(args, _csv([["label", "fpdim"]] + [[lab, format_float(d)] for lab, d in zip(r.labels, dims)]))
    else:
        width = max(len(s) for s in r.labels)
        _write(args, "\n".join(f"{lab:>{width}}  {format_float(d)}" for lab, d in zip(r.labels, dims)))


def _verify_report(args) -> Report:
    r = _ring(args, validate=False)
    tol = args.tol
    if args.what == "fusion":
        return fusion_report(r, tol)
    base = fusion_report(r, tol)
    if not base.passed:
        # group-like data needs a valid fusion ring; report why it is not one
        return Report(args.what, list(base.checks))
    ring = r if r.involution is not None else r.with_involution(detect_involution(r))
    g = grouplike_build(ring, tol=tol)
    if args.what == "group-like":
        return grouplike_verify(g, tol)
    rep = grouplike_verify(g, tol)
    full = bifrob_verify(bifrob_build(g, tol), tol)
    return Report("bi-Frobenius", rep.checks + full.checks)


def cmd_verify(args):
    if args.input is None and args.kind is None:
        args.kind = "stable"
    rep = _verify_report(args)
    if args.format == "json":
        _write(args, dumps(rep.to_dict()))
    else:
        lines = [f"{rep.title}: {'PASS' if rep.passed else 'FAIL'}"]
        for c in rep.checks:
            res = "" if c.residual is None else f"  residual={format_float(c.residual)}"
            det = f"  ({c.detail})" if c.detail else ""
            lines.append(f"  {'PASS' if c.passed else 'FAIL'} {c.name}{res}{det}")
        _write(args, "\n".join(lines))
    return EXIT_OK if rep.passed else EXIT_VIOLATION


def cmd_convert(args):
    spec = _spec(args, "stable")
    if spec.kind is not RingKind.STABLE:
        raise UsageError("convert works on the stable ring only")
    e = parse_element(args.element, spec)
    if args.to == "f":
        _emit_element(args, e)
        return
    coords = to_monomial_basis(spec, e)
    assert from_monomial_coords(spec, coords) == e
    if args.format == "json":
        _write(args, dumps({"ring": spec.describe(), "element": _render_monomials(coords),
                            "coefficients": {f"y^{i}*z^{j}": c for (i, j), c in coords.items()}}))
    elif args.format == "csv":
        _write(args, _csv([["y_exp", "z_exp", "coefficient"]] + [[i, j, c] for (i, j), c in coords.items()]))
    else:
        _write(args, _render_monomials(coords))


def cmd_project(args):
    args.kind = args.kind or "radford"
    spec = _spec(args)
    if spec.kind is not RingKind.RADFORD:
        raise UsageError("project needs a Radford (or Taft) Green ring")
    e = parse_element(args.element, spec)
    _emit_element(args, stable_projection(e) if args.target == "stable" else grothendieck_projection(e))


COMMANDS = {
    "ring": cmd_ring,
    "mul": cmd_mul,
    "gram": cmd_gram,
    "radical": cmd_radical,
    "fpdim": cmd_fpdim,
    "verify": cmd_verify,
    "convert": cmd_convert,
    "project": cmd_project,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        status = COMMANDS[args.command](args)
    except UsageError as exc:
        parser.error(str(exc))
    except (GreenRingError, OSError) as exc:
        print(f"greenring: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK if status is None else status


if __name__ == "__main__":
    sys.exit(main())
