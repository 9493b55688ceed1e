"""Command-line front end.

Words are comma-separated canonical integers; field words are comma-separated
field encodings.  Exit status: 0 on success, 1 when a verification fails or a
field word has no preimage, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import _kernels
from .chain_ring import RingError, make_ring, ring_label
from .codes import CapExceeded, Code, DEFAULT_CAP, code_report
from .field import FieldError
from .gray_map import (
    gray,
    gray_inverse,
    hamming_distance,
    hom_distance,
    hom_weight,
    image_length,
)
from .shifts import UnitSpec, beta, constacyclic_shift, mu_bar, mu_bar_sq, nechaev_perm, pi_block, quasi_shift
from .verify import CLAIMS, MUTATIONS, CheckPlan, desk_suite, run_suite, suite_passed, summary_table, write_reports


class UsageError(Exception):
    pass


def _parse_word(text: str) -> np.ndarray:
    try:
        return np.array([int(t) for t in text.replace(" ", "").split(",") if t != ""], dtype=np.int64)
    except ValueError as exc:
        raise UsageError(f"malformed word {text!r}: expected comma-separated integers") from exc


def _fmt(word) -> str:
    return ",".join(str(int(v)) for v in np.atleast_1d(word))


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _ring_word(args, ring):
    if not args.word:
        raise UsageError("--word is required")
    x = _parse_word(args.word[0])
    if args.n is not None and args.n != x.size:
        raise UsageError(f"--n {args.n} does not match word length {x.size}")
    ring.check(x)
    return x


def _field_word(args, ring):
    if not args.word:
        raise UsageError("--word is required")
    w = _parse_word(args.word[0])
    block = ring.q**ring.e
    if w.size % block:
        raise UsageError(f"field word length {w.size} is not a multiple of p^(ke) = {block}")
    n = w.size // block
    if args.n is not None and args.n != n:
        raise UsageError(f"--n {args.n} does not match field word length {w.size}")
    return w, n


def cmd_ring_info(args):
    ring = make_ring(args.ring)
    units = int(np.count_nonzero(ring.is_unit(ring.elements())))
    info = {
        "ring": ring.to_spec(),
        "name": ring.name,
        "order": ring.order,
        "characteristic": ring.characteristic,
        "gamma": ring.gamma,
        "residue_field_order": ring.q,
        "primitive_element": ring.field.primitive_element,
        "units": units,
        "ideal_sizes": [ring.ideal_size(j) for j in range(ring.e + 1)],
        "hom_weights": sorted({int(w) for w in hom_weight(ring, ring.elements())}),
        "outside_hypothesis": ring.outside_hypothesis,
    }
    lines = [f"{k}: {v}" for k, v in info.items()]
    if ring.outside_hypothesis:
        lines.append("note: e = 1 lies outside the standing assumption e >= 2")
    _emit(args, info, "\n".join(lines))
    return 0


def cmd_gray(args):
    ring = make_ring(args.ring)
    x = _ring_word(args, ring)
    img = gray(ring, x)
    _emit(args, {"word": x.tolist(), "image": img.tolist()}, _fmt(img))
    return 0


def cmd_gray_inverse(args):
    ring = make_ring(args.ring)
    w, n = _field_word(args, ring)
    x = gray_inverse(ring, w, n)
    if x is None:
        _emit(args, {"image": w.tolist(), "word": None}, "absent")
        return 1
    _emit(args, {"image": w.tolist(), "word": x.tolist()}, _fmt(x))
    return 0


def cmd_shift(args):
    ring = make_ring(args.ring)
    p, k, e = ring.p, ring.k, ring.e
    if args.op in ("nu", "mu", "mu2"):
        x = _ring_word(args, ring)
        if args.op == "nu":
            out = constacyclic_shift(ring, x, UnitSpec.parse(args.unit))
        elif args.op == "mu":
            out = mu_bar(ring, x)
        else:
            out = mu_bar_sq(ring, x)
    else:
        w, n = _field_word(args, ring)
        if args.op == "sigma":
            out = quasi_shift(w, p, k, e, n)
        elif args.op == "pi":
            out = pi_block(w, p, k, e, n)
        else:
            out = pi_block(pi_block(w, p, k, e, n), p, k, e, n)
    _emit(args, {"op": args.op, "output": out.tolist()}, _fmt(out))
    return 0


def cmd_perm(args):
    if args.p is not None:
        p = args.p
    else:
        p = make_ring(args.ring).p
    if args.n is None:
        raise UsageError("--n is required")
    if args.n_prime is not None:
        n_prime = args.n_prime
    else:
        n_prime = beta(make_ring(args.ring), args.n)[0] if args.p is None else pow(args.n, -1, p)
    tau = nechaev_perm(args.n, p, n_prime)
    _emit(args, {"p": p, "n": args.n, "n_prime": n_prime, "images": tau.tolist()}, _fmt(tau))
    return 0


def _load_code(args) -> Code:
    src = args.generators
    if src is None:
        raise UsageError("--generators is required")
    path = Path(src)
    if path.is_file():
        doc = json.loads(path.read_text())
        if isinstance(doc, list):
            doc = {"generators": doc}
    else:
        doc = {"generators": [_parse_word(part).tolist() for part in src.split(";") if part.strip()]}
    doc.setdefault("ring", args.ring)
    if "n" not in doc:
        if args.n is not None:
            doc["n"] = args.n
        elif doc.get("generators"):
            doc["n"] = len(doc["generators"][0])
        else:
            raise UsageError("cannot infer n; pass --n")
    if args.unit is not None:
        doc["unit"] = args.unit
    return Code.from_spec(doc)


def cmd_analyze(args):
    code = _load_code(args)
    code.codewords(args.cap)
    report = code_report(code)
    if args.dump:
        report["codewords"] = code.codewords().tolist()
    text = "\n".join(f"{k}: {v}" for k, v in report.items())
    _emit(args, report, text)
    return 0


def cmd_distance(args):
    ring = make_ring(args.ring)
    if not args.word or len(args.word) != 2:
        raise UsageError("distance needs exactly two --word options")
    x, y = (_parse_word(w) for w in args.word)
    if x.size != y.size:
        raise UsageError("words have different lengths")
    ring.check(x)
    ring.check(y)
    d_hom = hom_distance(ring, x, y)
    d_ham = hamming_distance(gray(ring, x), gray(ring, y))
    payload = {"hom_distance": d_hom, "hamming_distance_of_images": d_ham, "image_length": image_length(ring, x.size)}
    _emit(args, payload, f"hom_distance: {d_hom}\nhamming_distance_of_images: {d_ham}")
    return 0


def cmd_verify(args):
    if args.suite:
        if args.suite != "desk":
            raise UsageError(f"unknown suite {args.suite!r}")
        plans = desk_suite(seed=args.seed if args.seed is not None else 2024)
    else:
        if not args.claim:
            raise UsageError("pass --suite desk or --claim")
        if args.n is None:
            raise UsageError("--n is required with --claim")
        code = None
        if args.generators:
            code = _load_code(args).to_spec()
        plans = [
            CheckPlan(
                args.claim,
                args.ring,
                args.n,
                mode=args.mode,
                seed=args.seed if args.seed is not None else 0,
                count=args.count,
                code=code,
                mutation=args.mutation,
            )
        ]
    reports = run_suite(plans)
    if args.out:
        write_reports(reports, args.out)
    if args.json:
        print(json.dumps({"passed": suite_passed(reports), "reports": [r.to_dict() for r in reports]}, sort_keys=True))
    else:
        print(summary_table(reports))
        for r in reports:
            for f in r.failures[:3]:
                print(f"  {r.claim} {r.ring} n={r.n}: {json.dumps(f, sort_keys=True)}")
    return 0 if suite_passed(reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chaingray", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s 0.1.0 ({_kernels.BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, word=True):
        p.add_argument("--ring", default="z8", help="preset name (z4, z8, z27, f4u3, ...) or JSON spec path")
        p.add_argument("--n", type=int, help="code length")
        p.add_argument("--json", action="store_true", help="structured output")
        if word:
            p.add_argument("--word", action="append", help="comma-separated integers")
        return p

    common(sub.add_parser("ring-info", help="ring parameters and invariants"), word=False).set_defaults(func=cmd_ring_info)
    common(sub.add_parser("gray", help="Gray image of a ring word")).set_defaults(func=cmd_gray)
    common(sub.add_parser("gray-inverse", help="preimage of a field word")).set_defaults(func=cmd_gray_inverse)

    p = common(sub.add_parser("shift", help="apply a shift or permutation operator"))
    p.add_argument("--op", choices=("nu", "sigma", "pi", "pi2", "mu", "mu2"), default="nu")
    p.add_argument("--unit", default="1-g^e", help="1 | 1-g^e | 1+g^e | custom:<E>")
    p.set_defaults(func=cmd_shift)

    p = common(sub.add_parser("perm", help="Nechaev permutation images"), word=False)
    p.add_argument("--p", type=int, help="prime (defaults to the ring's)")
    p.add_argument("--n-prime", type=int, help="inverse of n mod p (computed when omitted)")
    p.set_defaults(func=cmd_perm)

    p = common(sub.add_parser("analyze", help="structural report for one code"), word=False)
    p.add_argument("--generators", help="code spec JSON path, or inline words separated by ';'")
    p.add_argument("--unit", help="1 | 1-g^e | 1+g^e | custom:<E>")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--dump", action="store_true", help="include the codewords")
    p.set_defaults(func=cmd_analyze)

    common(sub.add_parser("distance", help="homogeneous vs Hamming distance of images")).set_defaults(func=cmd_distance)

    p = common(sub.add_parser("verify", help="run theorem checks"), word=False)
    p.add_argument("--suite", help="named suite (desk)")
    p.add_argument("--claim", choices=CLAIMS)
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--seed", type=int)
    p.add_argument("--count", type=int, default=64)
    p.add_argument("--generators", help="check a single code instead of a sampled family")
    p.add_argument("--unit", help="unit for --generators codes")
    p.add_argument("--mutation", choices=MUTATIONS, help="deliberately break one side (harness self-test)")
    p.add_argument("--out", help="directory for per-check JSON reports")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
    except (RingError, FieldError) as exc:
        print(f"invalid ring or element: {exc}", file=sys.stderr)
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
    return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
