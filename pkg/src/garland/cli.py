"""garland: validate complexes, print link spectra, certify vanishing and property (T)."""

from __future__ import annotations

import argparse
import hashlib
import sys
from datetime import datetime, timezone
from fractions import Fraction

from . import generators
from .complex import validate_hypotheses
from .criteria import CONSISTENCY_TOL, PASS, STRICT_MARGIN, certify_property_T
from .errors import GarlandError, InvalidInput
from .io import complex_to_dict, dumps, load_complex_file
from .oracle import betti_numbers, identity_suite
from .spectral import ZERO_TOL, link_matrix, summarize, eigenvalues
from .xprime import build_xprime, verify_xprime

EXIT_OK, EXIT_FAIL, EXIT_INVALID = 0, 1, 2


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _rational(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write JSON here instead of stdout")
    common.add_argument("--tol", type=_positive_float, default=ZERO_TOL,
                        help="zero-eigenvalue tolerance (default %(default)g)")
    common.add_argument("--no-timestamp", action="store_true", help="omit the timestamp field")

    parser = argparse.ArgumentParser(prog="garland", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check purity and link connectivity")
    p.add_argument("input")

    p = sub.add_parser("spectra", parents=[common], help="eigenvalues of link matrices")
    p.add_argument("input")
    p.add_argument("--k", type=int, help="only links of (k-1)-simplices (default: all proper links)")

    p = sub.add_parser("certify", parents=[common], help="vanishing criterion and property (T) certificate")
    p.add_argument("input")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--strict-margin", type=_positive_float, default=STRICT_MARGIN)

    p = sub.add_parser("xprime", parents=[common], help="build and verify the auxiliary 2-complex")
    p.add_argument("input")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_rational, required=True, help="rational, e.g. 3/2")

    p = sub.add_parser("verify", parents=[common], help="identity suite and rational cohomology")
    p.add_argument("input")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--exact", action=argparse.BooleanOptionalAction, default=True,
                   help="exact rational arithmetic (default) or floats")

    p = sub.add_parser("gen", parents=[common], help="write a complex file for a built-in family")
    p.add_argument("family", choices=sorted(generators.FAMILIES))
    p.add_argument("params", nargs="*", help="positional ints or key=value pairs")
    p.add_argument("--seed", type=int)
    return parser


def _parse_params(items: list[str]) -> tuple[list[int], dict[str, int]]:
    args, kwargs = [], {}
    for item in items:
        try:
            if "=" in item:
                key, value = item.split("=", 1)
                kwargs[key.strip()] = int(value)
            else:
                args.append(int(item))
        except ValueError as exc:
            raise InvalidInput(f"bad parameter {item!r}") from exc
    return args, kwargs


def cmd_validate(ns) -> tuple[dict, int]:
    loaded = load_complex_file(ns.input)
    report = validate_hypotheses(loaded.complex)
    out = {"name": loaded.name, "n": loaded.complex.n, "f_vector": list(loaded.complex.f_vector),
           "C": [str(c) for c in loaded.weight.balance_constants]}
    out.update(report.to_dict())
    return out, EXIT_OK if report.ok else EXIT_INVALID


def cmd_spectra(ns) -> tuple[dict, int]:
    loaded = load_complex_file(ns.input)
    X, W = loaded.complex, loaded.weight
    if ns.k is not None:
        if not 1 <= ns.k <= X.n - 1:
            raise InvalidInput(f"k={ns.k} must lie in 1..{X.n - 1}")
        dims = [ns.k - 1]
    else:
        dims = list(range(-1, X.n - 1))
    links = []
    for j in dims:
        for tau in X.simplices(j) if j >= 0 else [()]:
            A = link_matrix(W, tau)
            s = summarize(eigenvalues(A.entries), ns.tol)
            links.append({
                "tau": list(tau),
                "C0": str(A.C0),
                "eigenvalues": list(s.eigenvalues),
                "gap": s.lambda_gap,
                "components": A.components,
            })
    return {"name": loaded.name, "links": links}, EXIT_OK


def cmd_certify(ns) -> tuple[dict, int]:
    loaded = load_complex_file(ns.input)
    if not 1 <= ns.k <= loaded.complex.n - 1:
        raise InvalidInput(f"k={ns.k} must lie in 1..{loaded.complex.n - 1}")
    digest = hashlib.sha256(loaded.raw).hexdigest()
    cert = certify_property_T(loaded.weight, ns.k, ns.strict_margin, ns.tol, digest)
    return cert.to_dict(), EXIT_OK if cert.verdict == PASS else EXIT_FAIL


def cmd_xprime(ns) -> tuple[dict, int]:
    loaded = load_complex_file(ns.input)
    XP = build_xprime(loaded.weight, ns.k, ns.lam)
    report = verify_xprime(XP, ns.tol)
    gaps_ok = all(d.gap is not None and d.gap >= float(ns.lam) - CONSISTENCY_TOL for d in report.links)
    ok = report.C1_ok and report.decomposition_ok and report.hypotheses_ok and gaps_ok
    return {"complex": XP.to_dict(), "report": report.to_dict()}, EXIT_OK if ok else EXIT_FAIL


def cmd_verify(ns) -> tuple[dict, int]:
    loaded = load_complex_file(ns.input)
    report = identity_suite(loaded.weight, ns.trials, ns.seed, ns.exact)
    out = report.to_dict()
    out["betti"] = list(betti_numbers(loaded.complex))
    out["seed"] = ns.seed
    return out, EXIT_OK if report.passed else EXIT_FAIL


def cmd_gen(ns) -> tuple[dict, int]:
    args, kwargs = _parse_params(ns.params)
    if ns.seed is not None:
        kwargs["seed"] = ns.seed
    try:
        X = generators.generate(ns.family, *args, **kwargs)
    except TypeError as exc:
        raise InvalidInput(f"bad parameters for {ns.family}: {exc}") from exc
    name = "-".join([ns.family] + ns.params)
    return complex_to_dict(X, name), EXIT_OK


COMMANDS = {
    "validate": cmd_validate,
    "spectra": cmd_spectra,
    "certify": cmd_certify,
    "xprime": cmd_xprime,
    "verify": cmd_verify,
    "gen": cmd_gen,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        payload, code = COMMANDS[ns.command](ns)
    except InvalidInput as exc:
        print(f"garland: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except GarlandError as exc:
        # violated hypotheses (disconnected links etc.) are input problems too
        print(f"garland: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if ns.command != "gen" and not ns.no_timestamp:
        payload["timestamp"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    text = dumps(payload)
    if ns.out:
        with open(ns.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
