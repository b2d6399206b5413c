# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License

import argparse
import json
import logging
import os
import sys

from .errors import InputError, MathError
from .expmap import ExpMap, expmap_canonical, verify_expmap
from .fields import CoefficientField
from .morphisms import (
    IsoData,
    auto_from_seed,
    build_iso,
    compare_invariants,
    invariants_tuple,
    solve_fiber_conditions,
    verify_auto_properties,
)
from .report import Report
from .stable import (
    build_stable_iso,
    cancellation_demo,
    check_stable_hypotheses,
    load_certificate,
    save_certificate,
    stable_chain,
)
from .surface import SurfaceElement, load_spec, normalize
from .verifier import Verifier


logger = logging.getLogger(__name__)


def _yes(flag):
    return "yes" if flag else "no"


def _read_json(path):
    with open(path) as fh:
        return json.load(fh)


def _emit(args, data, text):
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        print(text)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(data, fh, indent=2)


def _emit_report(args, report):
    _emit(args, report.to_dict(), report.render())
    return 0 if report.passed else 1


def cmd_info(args):
    spec = load_spec(args.spec, args.field)
    hypotheses = check_stable_hypotheses(spec)
    data = {
        "spec": spec.to_dict(),
        "tuple": list(invariants_tuple(spec)),
        "double": spec.double,
        "mlc": spec.mlc,
        "stable_hypotheses": hypotheses.to_dict(),
    }
    text = "tuple=({}) double={} mlc={} stable-hyp={}".format(
        ",".join(str(k) for k in invariants_tuple(spec)),
        _yes(spec.double),
        _yes(spec.mlc),
        "pass" if hypotheses.passed else "fail",
    )
    if not hypotheses.passed:
        text += " ({})".format(", ".join(hypotheses.failed()))
    _emit(args, data, text)
    return 0


def cmd_normalize(args):
    spec = load_spec(args.spec, args.field)
    element = SurfaceElement(spec, args.expr)
    normal_form = normalize(element)
    data = {
        "normal_form": str(normal_form),
        "laurent": str(element.laurent),
        "within_bounds": normal_form.within_bounds(),
    }
    text = "normal form: {}\nlaurent: {}".format(normal_form, element.laurent)
    _emit(args, data, text)
    return 0


def cmd_expmap_verify(args):
    spec = load_spec(args.spec, args.field)
    if args.map:
        phi = ExpMap.from_dict(spec, _read_json(args.map))
    else:
        phi = expmap_canonical(spec)
    return _emit_report(args, verify_expmap(phi))


def cmd_iso(args):
    first = load_spec(args.first, args.field)
    second = load_spec(args.second, first.field)
    comparison = compare_invariants(first, second)

    if args.action == "solve":
        candidates = solve_fiber_conditions(first, second)
        field = first.field
        data = {
            "comparison": comparison.to_dict(),
            "candidates": [
                {"gamma": field.format(g), "delta0": field.format(d)} for g, d in candidates
            ],
            "unconstrained": candidates.unconstrained,
        }
        lines = [comparison.render()]
        lines += ["gamma={} delta0={}".format(field.format(g), field.format(d)) for g, d in candidates]
        if not candidates:
            lines.append("no (gamma, delta0) satisfies the fiber conditions")
        _emit(args, data, "\n".join(lines))
        return 0

    if args.data is None:
        raise InputError("iso verify needs a data file")
    if comparison.differing:
        _emit(args, comparison.to_dict(), comparison.render())
        return 1
    data = IsoData.from_dict(_read_json(args.data), first.field)
    psi = build_iso(first, second, data)
    report = Report("isomorphism {} -> {}".format(second, first), data=psi.to_dict())
    report.add("relations-killed", True)
    report.add("inverse-composes", psi.inverse is not None)
    return _emit_report(args, report)


def cmd_auto(args):
    spec = load_spec(args.spec, args.field)
    psi = auto_from_seed(spec, args.lam, args.lam2, args.mu2)
    report = verify_auto_properties(psi)
    report.data.update({"psi(" + name + ")": image for name, image in psi.to_dict().items()})
    return _emit_report(args, report)


def cmd_stable(args):
    if args.action == "verify":
        cert = load_certificate(args.path, args.field)
        verifier = Verifier(
            verbosity=[],
            n_jobs=args.n_jobs,
        )
        report_id = verifier.add_certificate(cert)
        verifier.run()
        return _emit_report(args, verifier.report(report_id))

    spec = load_spec(args.path, args.field)
    if args.action == "build":
        cert = build_stable_iso(spec)
        data = cert.to_dict()
        if args.out:
            save_certificate(cert, args.out)
        print(json.dumps(data, indent=2))
        return 0

    certificates = stable_chain(spec)
    out_dir = args.out or "."
    os.makedirs(out_dir, exist_ok=True)
    for cert in certificates:
        path = os.path.join(out_dir, "certificate_e{}.json".format(cert.source.e))
        save_certificate(cert, path)
        print("{} -> {}: {}".format(cert.source, cert.target, path))
    return 0


def cmd_cancel_demo(args):
    spec = load_spec(args.spec, args.field)
    return _emit_report(args, cancellation_demo(spec))


def _field(text):
    try:
        return CoefficientField.from_cli(text)
    except InputError as err:
        raise argparse.ArgumentTypeError(str(err))


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--field",
        type=_field,
        default=None,
        help="coefficient field Q or Fp:<p> (default: the field of the spec file)",
    )
    common.add_argument("--json", action="store_true", help="print JSON instead of text")
    common.add_argument("--out", default=None, help="write the JSON result to this path")
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    common.add_argument("--n-jobs", type=int, default=1, help="parallel verification jobs")

    parser = argparse.ArgumentParser(
        prog="danielewski",
        description="Exact computations on double Danielewski surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    info = sub.add_parser("info", parents=[common], help="invariants and flags")
    info.add_argument("spec")
    info.set_defaults(handler=cmd_info)

    norm = sub.add_parser("normalize", parents=[common], help="normal form of an element")
    norm.add_argument("spec")
    norm.add_argument("expr")
    norm.set_defaults(handler=cmd_normalize)

    expmap = sub.add_parser("expmap-verify", parents=[common], help="exponential map axioms")
    expmap.add_argument("spec")
    expmap.add_argument("map", nargs="?", default=None)
    expmap.set_defaults(handler=cmd_expmap_verify)

    iso = sub.add_parser("iso", parents=[common], help="isomorphisms between two surfaces")
    iso.add_argument("action", choices=["verify", "solve"])
    iso.add_argument("first")
    iso.add_argument("second")
    iso.add_argument("data", nargs="?", default=None)
    iso.set_defaults(handler=cmd_iso)

    auto = sub.add_parser("auto", parents=[common], help="automorphism from a seed")
    auto.add_argument("spec")
    auto.add_argument("--lambda", dest="lam", default="1")
    auto.add_argument("--lambda2", dest="lam2", default="1")
    auto.add_argument("--mu2", default="0")
    auto.set_defaults(handler=cmd_auto)

    stable = sub.add_parser("stable", parents=[common], help="stable isomorphism certificates")
    stable.add_argument("action", choices=["build", "verify", "chain"])
    stable.add_argument("path", help="spec file (build, chain) or certificate file (verify)")
    stable.set_defaults(handler=cmd_stable)

    cancel = sub.add_parser("cancel-demo", parents=[common], help="cancellation counter-example")
    cancel.add_argument("spec")
    cancel.set_defaults(handler=cmd_cancel_demo)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return int(err.code or 0)

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    logger.debug("running %s", args.command)

    try:
        return args.handler(args)
    except InputError as err:
        print("error: {}".format(err), file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError) as err:
        print("error: {}".format(err), file=sys.stderr)
        return 2
    except MathError as err:
        print("failed: {}".format(err), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
