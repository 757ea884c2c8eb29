"""Command-line front end: compute, export, and verify.

Subcommands: kl | restrict | hybrid | factorize | parabolic | verify.
Words are comma-separated generator indices ("1,2,1"); "e" is the identity.
Chains are "<"-separated subsets ("@<1<1,2"), where "@", "e", or an empty
field denote the empty set (the symbol U+2205 is also accepted).

Exit codes: 0 success, 1 a checked property failed, 2 usage/parse/domain
error.  Output is byte-deterministic for a fixed invocation: elements appear
in canonical (length, word) order and polynomials use the fixed textual
grammar from laurent.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .coxeter import coxeter_system, format_word, parse_word
from .klbasis import KLCache
from .hybrid import (
    HybridBasisSpec,
    factorize_chain,
    hybrid_element,
    kl_matrix,
    matmul,
    parabolic_kl,
    restriction_coeffs,
)
from .laurent import ZERO
from .verification import crystallographic_note, run_suite

_EMPTY_TOKENS = {"", "e", "@", "∅"}


def _parse_subset(text: str) -> frozenset[int]:
    text = text.strip()
    if text in _EMPTY_TOKENS:
        return frozenset()
    out = set()
    for tok in text.split(","):
        tok = tok.strip()
        if not tok.isdigit():
            raise ValueError(f"invalid generator index {tok!r} in subset {text!r}")
        out.add(int(tok))
    return frozenset(out)


def _parse_chain(text: str) -> list[frozenset[int]]:
    return [_parse_subset(part) for part in text.split("<")]


def _csv_quote(s: str) -> str:
    return '"' + s.replace('"', '""') + '"'


def _csv_lines(header: str, rows) -> str:
    lines = [header]
    for row in rows:
        lines.append(",".join(_csv_quote(str(c)) for c in row))
    return "\n".join(lines) + "\n"


def _emit(args, text: str) -> None:
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _make_cache(args) -> KLCache:
    system = coxeter_system(args.group, allow_large=args.allow_large)
    if args.cache_dir:
        path = Path(args.cache_dir) / f"{system.type_string}.klcache.gz"
        if path.exists():
            return KLCache.load(path, system)
    return KLCache(system)


def _save_cache(args, cache: KLCache) -> None:
    if args.cache_dir:
        d = Path(args.cache_dir)
        d.mkdir(parents=True, exist_ok=True)
        cache.save(d / f"{cache.system.type_string}.klcache.gz")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_kl(args) -> int:
    cache = _make_cache(args)
    sys_ = cache.system
    if args.w is not None:
        w = sys_.element_from_word(parse_word(args.w))
        col = cache.kl_column(w)
        order = sys_.elements()
        if args.format == "json":
            obj = {
                "group": sys_.type_string,
                "w": format_word(sys_.word(w)),
                "order": [format_word(sys_.word(x)) for x in order],
                "column": [str(col.get(x, ZERO)) for x in order],
            }
            text = _json_text(obj)
        else:
            rows = [(format_word(sys_.word(x)), str(col.get(x, ZERO))) for x in order]
            text = _csv_lines("x,coeff", rows)
    else:
        cache.fill(args.threads)
        m = kl_matrix(cache)
        text = _json_text(m.to_json_obj()) if args.format == "json" else m.to_csv()
    _save_cache(args, cache)
    _emit(args, text)
    return 0


def cmd_restrict(args) -> int:
    cache = _make_cache(args)
    sys_ = cache.system
    J = _parse_subset(args.J)
    u = sys_.element_from_word(parse_word(args.u))
    w = sys_.element_from_word(parse_word(args.w))
    coeffs = restriction_coeffs(cache, u, w, J)
    pairs = [
        (format_word(sys_.word(v)), str(p))
        for v, p in sorted(coeffs.items(), key=lambda kv: sys_.sort_key(kv[0]))
    ]
    if args.format == "json":
        obj = {
            "group": sys_.type_string,
            "J": sorted(J),
            "u": format_word(sys_.word(u)),
            "w": format_word(sys_.word(w)),
            "coeffs": [list(p) for p in pairs],
        }
        text = _json_text(obj)
    else:
        text = _csv_lines("v,coeff", pairs)
    _save_cache(args, cache)
    _emit(args, text)
    return 0


def cmd_hybrid(args) -> int:
    cache = _make_cache(args)
    sys_ = cache.system
    spec = HybridBasisSpec(_parse_subset(args.J), args.orientation)
    w = sys_.element_from_word(parse_word(args.w))
    el = hybrid_element(cache, spec, w)
    pairs = [
        (format_word(sys_.word(x)), str(p))
        for x, p in sorted(el.terms.items(), key=lambda kv: sys_.sort_key(kv[0]))
    ]
    if args.format == "json":
        obj = {
            "group": sys_.type_string,
            "J": sorted(spec.J),
            "orientation": spec.orientation,
            "w": format_word(sys_.word(w)),
            "terms": [list(p) for p in pairs],
        }
        text = _json_text(obj)
    else:
        text = _csv_lines("x,coeff", pairs)
    _save_cache(args, cache)
    _emit(args, text)
    return 0


def cmd_factorize(args) -> int:
    cache = _make_cache(args)
    chain = _parse_chain(args.chain) if args.chain else None
    factors = factorize_chain(cache, chain, threads=args.threads)
    prod = factors[0]
    for m in factors[1:]:
        prod = matmul(prod, m)
    equal = prod.same_entries(kl_matrix(cache))
    nonneg = all(m.is_nonneg_poly_matrix() for m in factors)
    if args.format == "json":
        obj = {
            "group": cache.system.type_string,
            "chain": [sorted(m.I) for m in factors] + [sorted(factors[-1].J)],
            "factors": [m.to_json_obj() for m in factors],
            "product_equals_kl": equal,
            "nonnegative": nonneg,
        }
        text = _json_text(obj)
    else:
        parts = []
        for k, m in enumerate(factors, 1):
            parts.append(f"# factor {k}: I={sorted(m.I)} J={sorted(m.J)}")
            parts.append(m.to_csv().rstrip("\n"))
        parts.append(f"product_equals_kl,{str(equal).lower()}")
        parts.append(f"nonnegative,{str(nonneg).lower()}")
        text = "\n".join(parts) + "\n"
    _save_cache(args, cache)
    _emit(args, text)
    return 0 if (equal and nonneg) else 1


def cmd_parabolic(args) -> int:
    cache = _make_cache(args)
    sys_ = cache.system
    J = _parse_subset(args.J)
    P = parabolic_kl(cache, J)
    reps = sys_.min_coset_reps(J, "left")
    idx = {u: k for k, u in enumerate(reps)}
    triplets = sorted(
        ([idx[u], idx[u2], p.to_json_obj()] for (u, u2), p in P.items()),
        key=lambda t: (t[1], t[0]),
    )
    if args.format == "json":
        obj = {
            "group": sys_.type_string,
            "J": sorted(J),
            "order": [format_word(sys_.word(u)) for u in reps],
            "entries": triplets,
        }
        text = _json_text(obj)
    else:
        header = "u\\u'," + ",".join(_csv_quote(format_word(sys_.word(u))) for u in reps)
        lines = [header]
        for u in reps:
            cells = [str(P.get((u, u2), ZERO)) for u2 in reps]
            lines.append(
                _csv_quote(format_word(sys_.word(u))) + "," + ",".join(_csv_quote(c) for c in cells)
            )
        text = "\n".join(lines) + "\n"
    _save_cache(args, cache)
    _emit(args, text)
    return 0


def cmd_verify(args) -> int:
    cache = _make_cache(args)
    results = run_suite(cache, args.suite)
    note = crystallographic_note(cache.system)
    all_passed = all(r.passed for r in results)
    if args.format == "json":
        obj = {
            "group": cache.system.type_string,
            "suite": args.suite,
            "results": [
                {"name": r.name, "passed": r.passed, "detail": r.detail} for r in results
            ],
            "all_passed": all_passed,
        }
        if note:
            obj["note"] = note
        text = _json_text(obj)
    else:
        rows = [(r.name, str(r.passed).lower(), r.detail) for r in results]
        rows.append(("all_passed", str(all_passed).lower(), note or ""))
        text = _csv_lines("name,passed,detail", rows)
    _save_cache(args, cache)
    _emit(args, text)
    return 0 if all_passed else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", required=True, help="group type string, e.g. A3, B3, I2(7)")
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--output", help="write output to this path instead of stdout")
    common.add_argument("--cache-dir", help="directory for persistent KL caches (opt-in)")
    common.add_argument("--threads", type=int, default=1, help="parallel column workers")
    common.add_argument(
        "--allow-large", action="store_true", help="lift the desk-scale group size bound"
    )

    p = argparse.ArgumentParser(
        prog="heckekl",
        description="Exact Hecke-algebra computations: KL bases, parabolic restriction, "
        "hybrid bases, and transition-matrix factorizations.",
    )
    sub = p.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("kl", parents=[common], help="KL basis column or full matrix")
    sp.add_argument("--w", help="reduced word; omit for the full matrix")
    sp.set_defaults(fn=cmd_kl)

    sp = sub.add_parser("restrict", parents=[common], help="restriction coefficients over W_J")
    sp.add_argument("--J", required=True, help="parabolic subset, e.g. 1,2")
    sp.add_argument("--u", default="e", help="minimal coset representative word")
    sp.add_argument("--w", required=True, help="word for the KL element")
    sp.set_defaults(fn=cmd_restrict)

    sp = sub.add_parser("hybrid", parents=[common], help="hybrid basis element in T-coordinates")
    sp.add_argument("--J", required=True)
    sp.add_argument("--w", required=True)
    sp.add_argument("--orientation", choices=["TC", "CT"], default="TC")
    sp.set_defaults(fn=cmd_hybrid)

    sp = sub.add_parser("factorize", parents=[common], help="chain factorization of the KL matrix")
    sp.add_argument("--chain", help='increasing subsets, e.g. "@<1<1,2" (default singleton steps)')
    sp.set_defaults(fn=cmd_factorize)

    sp = sub.add_parser("parabolic", parents=[common], help="parabolic KL matrix over W^J")
    sp.add_argument("--J", required=True)
    sp.set_defaults(fn=cmd_parabolic)

    sp = sub.add_parser("verify", parents=[common], help="run named property checks")
    sp.add_argument(
        "--suite", choices=["all", "positivity", "oracles", "involutions"], default="all"
    )
    sp.set_defaults(fn=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.fn(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
