"""Command-line interface: ``inoue <command> ...``.

Exit codes: 0 success or accepted, 1 rejected or negative verdict,
2 error (bad input, failed self-check), 3 unknown (search budget spent).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import __version__
from .classify import (
    CONJUGATE_TO, DEFAULT_CONSTANTS, DISTINCT, HOMEOMORPHIC,
    NOT_HOMEOMORPHIC, homeo_verdict,
)
from .core import ActionPoint, build_descriptor, check_all_relations, evaluate_word, parse_word, presentation
from .errors import HypothesisViolation, InputFormatError, InoueError, InternalInconsistency, Rejection
from .linalg import format_matrix, read_matrix, read_poly
from .ot import correspondence_report
from .polyroots import ComplexInterval, enclose_complex_roots, precision, preview, real_roots
from .report import SCHEMA_VERSION, certificate_json, eigen_json, to_json
from .search import RNG_ALGORITHM, SearchConfig, search_type_I
from .spectral import check_type_I

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR, EXIT_UNKNOWN = 0, 1, 2, 3


class _Out:
    """Collects the JSON report or prints human-readable lines."""

    def __init__(self, args, command: str):
        self.json = args.json
        self.report = {"schema_version": SCHEMA_VERSION, "command": command, "input": {},
                       "parameters": {}, "result": {}, "timings": {}}
        self.t0 = time.perf_counter()

    def say(self, line: str = ""):
        if not self.json:
            print(line)

    def finish(self, code: int) -> int:
        self.report["timings"]["total_us"] = int((time.perf_counter() - self.t0) * 1e6)
        self.report["exit_code"] = code
        if self.json:
            print(json.dumps(self.report, indent=2))
        return code


def _pv(q) -> str:
    return preview(q, 12)


def _reject(out: _Out, exc: Rejection) -> int:
    out.report["result"] = {"accepted": False, "reason": exc.reason, "details": to_json(exc.details)}
    out.say(f"rejected: {exc.reason}")
    for k, v in exc.details.items():
        out.say(f"  {k}: {v}")
    return out.finish(EXIT_NEGATIVE)


def _load_matrix(out: _Out, path: str, key: str = "matrix"):
    M = read_matrix(path)
    out.report["input"][key] = to_json(M)
    return M


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_check(args) -> int:
    out = _Out(args, "check")
    M = _load_matrix(out, args.matrix)
    out.report["parameters"] = {"bits": args.bits}
    try:
        cert = check_type_I(M, args.bits)
    except Rejection as exc:
        return _reject(out, exc)
    out.report["result"] = {"accepted": True, "certificate": certificate_json(cert)}
    out.say(f"accepted: type I, dim = {M.dim}, n = {cert.n}")
    out.say(f"  char poly: {cert.char_poly}")
    enc = cert.alpha_enclosure
    out.say(f"  alpha ~ {_pv(enc.mid)} (preview; enclosure width {_pv(enc.width)})")
    for j, (f, box) in enumerate(cert.complex_pairs, start=1):
        z = box.as_interval()
        out.say(f"  beta_{j} ~ {z.preview()} (preview) root of {f}")
    for note in cert.notes:
        out.say(f"  note: {note}")
    return out.finish(EXIT_OK)


def cmd_invariants(args) -> int:
    out = _Out(args, "invariants")
    M = _load_matrix(out, args.matrix)
    out.report["parameters"] = {"bits": args.bits}
    try:
        desc = build_descriptor(M, args.bits)
    except Rejection as exc:
        return _reject(out, exc)
    h = desc.homology
    res = {
        "accepted": True,
        "n": desc.n,
        "b1": h.b1,
        "torsion": list(h.torsion),
        "total_torsion_order": h.total_torsion_order,
        "homology_from_presentation": to_json(desc.homology_from_presentation),
        "torsion_note": "invariant factors of coker(M - I); derived, b1 = 1 and finiteness are the proven facts",
        "diagonalizable": desc.diagonalizability.diagonalizable,
        "squarefree_part": to_json(desc.diagonalizability.g),
        "mapping_torus": {"fiber_dim": desc.mapping_torus.fiber_dim,
                          "monodromy": to_json(desc.mapping_torus.monodromy)},
        "flags": to_json(desc.flags.as_dict()),
        "certificate": certificate_json(desc.certificate),
        "eigen_data": eigen_json(desc.eigen),
    }
    out.report["result"] = res
    out.say(f"T_M for a type-I matrix of size {M.dim} (n = {desc.n})")
    out.say(f"  H_1 = {h}   (b1 = {h.b1}, torsion order {h.total_torsion_order})")
    out.say(f"  diagonalizable over C: {'yes' if desc.diagonalizability.diagonalizable else 'no'}")
    out.say(f"  mapping torus: fiber T^{M.dim}, monodromy M^T")
    f = desc.flags
    out.say(f"  flags: kahler={f.kahler} kodaira={f.kodaira} lck={f.lck} ot_homeomorphic={f.ot_homeomorphic}")
    return out.finish(EXIT_OK)


def cmd_present(args) -> int:
    out = _Out(args, "present")
    M = _load_matrix(out, args.matrix)
    try:
        check_type_I(M, 64)
    except Rejection as exc:
        return _reject(out, exc)
    pres = presentation(M)
    out.report["result"] = {"generators": list(pres.generators),
                            "relations": [str(r) for r in pres.relations], "text": pres.to_text()}
    if not out.json:
        sys.stdout.write(pres.to_text())
    return out.finish(EXIT_OK)


def _parse_point(text: str | None, n: int) -> ActionPoint:
    vals = [Fraction(t) for t in text.replace(",", " ").split()] if text else [Fraction(0), Fraction(1)]
    if len(vals) < 2 or len(vals) % 2:
        raise InputFormatError("point needs an even number of rationals: w_re w_im z1_re z1_im ...")
    vals += [Fraction(0)] * (2 + 2 * n - len(vals))
    if len(vals) != 2 + 2 * n:
        raise InputFormatError(f"point has too many coordinates for n = {n}")
    w = ComplexInterval(vals[0], vals[1])
    z = [ComplexInterval(vals[2 + 2 * j], vals[3 + 2 * j]) for j in range(n)]
    return ActionPoint.make(w, z)


def cmd_orbit(args) -> int:
    out = _Out(args, "orbit")
    M = _load_matrix(out, args.matrix)
    out.report["parameters"] = {"bits": args.bits, "word": args.word, "point": args.point}
    try:
        desc = build_descriptor(M, args.bits)
    except Rejection as exc:
        return _reject(out, exc)
    word = parse_word(args.word)
    p = _parse_point(args.point, desc.n)
    with precision(args.bits + 64):
        img = evaluate_word(desc, word, p)
        checks = check_all_relations(desc, p) if args.check_relations else []
    res = {"word": [[g, e] for g, e in word], "point": {"w": to_json(p.w), "z": to_json(p.z)},
           "image": {"w": to_json(img.w), "z": to_json(img.z)}}
    if args.check_relations:
        res["relations"] = [{"relation": str(c.relation), "ok": c.ok} for c in checks]
    out.report["result"] = res
    out.say(f"image of the point under {args.word!r} (previews):")
    out.say(f"  w = {img.w.preview()}")
    for j, zj in enumerate(img.z, start=1):
        out.say(f"  z_{j} = {zj.preview()}")
    if checks:
        bad = [c for c in checks if not c.ok]
        out.say(f"  relations checked at the point: {len(checks) - len(bad)}/{len(checks)} overlap")
        if bad:
            return out.finish(EXIT_ERROR)
    return out.finish(EXIT_OK)


def cmd_roots(args) -> int:
    out = _Out(args, "roots")
    P = read_poly(args.poly)
    out.report["input"]["poly"] = to_json(P)
    out.report["parameters"] = {"bits": args.bits}
    if P.degree < 1:
        raise InputFormatError("polynomial must have degree >= 1")
    reals = real_roots(P, args.bits)
    boxes = enclose_complex_roots(P, args.bits)
    out.report["result"] = {
        "real_roots": [{"enclosure": to_json(I), "multiplicity": m} for I, m in reals],
        "complex_boxes": to_json(boxes),
    }
    out.say(f"{P}: {len(reals)} distinct real root(s), {len(boxes)} distinct complex root(s)")
    for I, m in reals:
        out.say(f"  real {_pv(I.mid)} (preview) mult {m}  in [{I.lo}, {I.hi}]")
    for b in boxes:
        if not b.is_real:
            out.say(f"  complex {b.as_interval().preview()} (preview) mult {b.multiplicity}")
    return out.finish(EXIT_OK)


def cmd_classify(args) -> int:
    out = _Out(args, "classify")
    A = _load_matrix(out, args.a, "A")
    B = _load_matrix(out, args.b, "B")
    constants = tuple(args.constants) if args.constants else DEFAULT_CONSTANTS
    out.report["parameters"] = {"budget": args.budget, "constants": list(constants)}
    if A.dim != B.dim:
        raise HypothesisViolation("A and B have different sizes")
    hv = homeo_verdict(A, B, args.budget, constants)
    v = hv.conjugacy
    res = {"status": hv.status, "conjugacy": v.kind, "steps": v.steps, "sign_fixes": v.sign_fixes,
           "maps": [list(m) for m in hv.maps], "reason": hv.reason}
    if v.witness is not None:
        res["witness"] = to_json(v.witness)
    if v.kind == DISTINCT:
        res["invariant"] = v.invariant
        res["values"] = [str(x) if not isinstance(x, (tuple, list, bool)) else to_json(x) for x in v.values]
    out.report["result"] = res
    out.say(f"{hv.status} ({v.kind})")
    out.say(f"  {hv.reason}")
    if v.witness is not None:
        target = "B" if v.kind == CONJUGATE_TO else "B^-1"
        out.say(f"  witness C with C A C^-1 = {target}:")
        for line in format_matrix(v.witness).splitlines()[1:]:
            out.say("    " + line)
    if hv.status == HOMEOMORPHIC:
        return out.finish(EXIT_OK)
    if hv.status == NOT_HOMEOMORPHIC:
        return out.finish(EXIT_NEGATIVE)
    return out.finish(EXIT_UNKNOWN)


def cmd_ot(args) -> int:
    out = _Out(args, "ot")
    P = read_poly(args.poly)
    out.report["input"]["poly"] = to_json(P)
    out.report["parameters"] = {"bits": args.bits}
    try:
        rep = correspondence_report(P, args.bits)
    except Rejection as exc:
        return _reject(out, exc)
    od = rep.ot
    out.report["result"] = {
        "accepted": True,
        "checks": rep.checks,
        "statement": rep.statement,
        "s": od.s, "t": od.t, "unit_rank": od.unit_rank,
        "alpha": to_json(od.alpha),
        "betas": to_json(od.betas),
        "lattice": to_json(od.lattice),
        "eigen_v_rows": to_json(rep.eigen.v),
        "D_P": to_json(rep.type_I.matrix),
    }
    out.say(f"P = {P}: s = 1, t = {od.t}")
    for name, ok in rep.checks.items():
        out.say(f"  {'pass' if ok else 'FAIL'}  {name}")
    out.say(f"  {rep.statement}")
    return out.finish(EXIT_OK)


def cmd_search(args) -> int:
    out = _Out(args, "search")
    cfg = SearchConfig(args.dim, args.bound, args.count, args.seed, args.mode, args.max_attempts, args.bits)
    out.report["parameters"] = {"dim": cfg.dim, "entry_bound": cfg.entry_bound, "count": cfg.count,
                                "seed": cfg.rng_seed, "mode": cfg.mode, "rng": RNG_ALGORITHM, "bits": cfg.bits}
    res = search_type_I(cfg)
    files = []
    if args.out:
        d = Path(args.out)
        d.mkdir(parents=True, exist_ok=True)
        for h in res.hits:
            path = d / f"M_{cfg.mode}_{cfg.dim}_{cfg.rng_seed}_{h.trial:05d}.txt"
            path.write_text(format_matrix(h.matrix))
            files.append(str(path))
    out.report["result"] = {"found": len(res), "attempts": res.attempts,
                            "matrices": [{"trial": h.trial, "matrix": to_json(h.matrix),
                                          "char_poly": to_json(h.certificate.char_poly)} for h in res.hits],
                            "files": files}
    out.say(f"found {len(res)}/{cfg.count} type-I matrices in {res.attempts} trials (seed {cfg.rng_seed})")
    for h in res.hits:
        out.say(f"  trial {h.trial}: char poly {h.certificate.char_poly}")
    return out.finish(EXIT_OK if len(res) == cfg.count else EXIT_NEGATIVE)


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="inoue", description="Generalized Inoue manifolds from integer matrices.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable report on stdout")
    common.add_argument("--bits", type=int, default=128, help="enclosure precision (default 128)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[common], help="certify that M is type I")
    s.add_argument("matrix")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("invariants", parents=[common], help="homology, flags and eigen-data of T_M")
    s.add_argument("matrix")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("present", parents=[common], help="print the presentation of pi_1(T_M)")
    s.add_argument("matrix")
    s.set_defaults(func=cmd_present)

    s = sub.add_parser("orbit", parents=[common], help="apply a word in g0..gN to a point of H x C^n")
    s.add_argument("matrix")
    s.add_argument("--word", required=True, help='e.g. "0 1 -2 3^2" (rightmost acts first)')
    s.add_argument("--point", help='rationals "w_re w_im z1_re z1_im ..." (default w = i, z = 0)')
    s.add_argument("--check-relations", action="store_true", help="also test every relation at the point")
    s.set_defaults(func=cmd_orbit)

    s = sub.add_parser("roots", parents=[common], help="certified real and complex roots of a polynomial")
    s.add_argument("poly")
    s.set_defaults(func=cmd_roots)

    s = sub.add_parser("classify", parents=[common], help="compare the mapping tori of A and B")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--budget", type=int, default=10 ** 6, help="candidate witnesses to try (default 10^6)")
    s.add_argument("--constants", type=int, nargs="+", help="shifts c for the SNF of A - cI (default -2..2)")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("ot", parents=[common], help="compare T_(D_P) with the OT data of P")
    s.add_argument("poly")
    s.set_defaults(func=cmd_ot)

    s = sub.add_parser("search", parents=[common], help="generate random type-I matrices")
    s.add_argument("--dim", type=int, required=True)
    s.add_argument("--mode", choices=["companion", "conjugated-companion", "block-nondiag"], default="companion")
    s.add_argument("--count", type=int, default=5)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--bound", type=int, default=3, help="coefficient bound")
    s.add_argument("--max-attempts", type=int, default=10_000)
    s.add_argument("--out", help="directory for the matrix files")
    s.set_defaults(func=cmd_search)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InternalInconsistency as exc:
        print(f"internal error (please report): {exc}", file=sys.stderr)
    except (InoueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
