"""Command line front end.

Exit codes: 0 pass, 1 verification failure or definite negative, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone
from pathlib import Path

from . import psi, roots, spectral
from .arith import DimensionError, DomainError, format_rational, parse_rational
from .io import dumps, rat_to_json, vec_to_json
from .real_forms import RealFormClass, catalog_table, legal_instances, make_class, two_rho

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _fmt_vec(v) -> str:
    return "(" + ", ".join(format_rational(x) for x in v) + ")"


def _fmt_rat(x) -> str:
    return rat_to_json(x)


def _emit(args, doc: dict, text: str) -> None:
    out = dumps(doc) if args.json else text.rstrip("\n") + "\n"
    if getattr(args, "output", None):
        Path(args.output).write_text(out, encoding="utf-8")
    else:
        sys.stdout.write(out)


def _stamp(args, doc: dict) -> dict:
    if not getattr(args, "no_timestamp", False):
        doc["timestamp"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return doc


def _parse_vec(text: str):
    try:
        return tuple(parse_rational(x) for x in text.replace("(", "").replace(")", "").split(",") if x.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse vector {text!r}: {exc}") from exc


def _load_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _class_from_args(args) -> RealFormClass:
    return make_class(args.cls, args.l, getattr(args, "r", None), getattr(args, "variant", None),
                      getattr(args, "j", None))


# ---------------------------------------------------------------------------


def cmd_roots(args) -> int:
    sys_ = roots.build(args.family, args.rank)
    doc = roots.to_dict(sys_)
    lines = [f"{sys_.label}: {len(sys_.positive_roots)} positive roots"
             + (" (simple-root coordinates)" if sys_.family == "G2" else "")]
    for name, members in sys_.classes.items():
        lines.append(f"  {name} [{len(members)}]: sum = {_fmt_vec(roots.norm_class_sum(sys_, name))}")
        for r in members:
            lines.append(f"    {_fmt_vec(r)}")
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


def cmd_list_classes(args) -> int:
    rows = catalog_table()
    lines = [f"{'class':<16}{'family':<8}{'rank':<10}{'r':<12}multiplicities"]
    for r in rows:
        key = r["label"] if r["variant"] is None else f"{r['label']}/{r['variant']}"
        lines.append(f"{key:<16}{r['restricted_family']:<8}{r['rank']:<10}{r['r'] or '-':<12}{r['multiplicities']}")
        if r["note"]:
            lines.append(f"{'':<16}note: {r['note']}")
    _emit(args, {"kind": "class-catalog", "classes": rows}, "\n".join(lines))
    return EXIT_OK


def _cert_text(cert: psi.PsiCertificate) -> str:
    head = cert.cls.describe() if cert.cls else cert.system.label
    lines = [f"certificate for {head}: |Psi| = {len(cert.roots)}, {cert.strictness}",
             f"  target 2rho = {_fmt_vec(cert.target)}"]
    for i, (r, c) in enumerate(zip(cert.roots, cert.coeffs)):
        lines.append(f"  [{i}] {format_rational(c):>6} * {_fmt_vec(r)}")
    if cert.offending_pair:
        lines.append(f"  offending pair: {list(cert.offending_pair)}")
    return "\n".join(lines)


def _report_text(rep: psi.VerificationReport) -> str:
    ok = lambda b: "pass" if b else "FAIL"  # noqa: E731
    return "\n".join([
        f"(i)   {ok(rep.cond_i)}  residual {_fmt_vec(rep.residual)}",
        f"(ii)  {ok(rep.cond_ii)}  rank {rep.span_rank} of {rep.expected_rank}",
        f"(iii) {rep.cond_iii}  pairs {[list(p) for p in rep.root_sum_pairs]}",
        f"cone  {ok(rep.cond_1)}",
        f"status: {'pass' if rep.ok else 'fail'}",
    ])


def cmd_psi(args) -> int:
    if args.psi_cmd == "construct":
        cert = psi.construct_certificate(_class_from_args(args))
        _emit(args, psi.certificate_to_json(cert), _cert_text(cert))
        return EXIT_OK
    if args.psi_cmd == "verify":
        try:
            cert = psi.certificate_from_json(_load_json(args.file))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, DomainError):
                raise
            raise UsageError(f"malformed certificate: {exc}") from exc
        rep = psi.verify_certificate(cert.system, cert.target, cert)
        status = rep.ok and rep.cond_iii == cert.strictness
        doc = psi.report_to_json(rep)
        doc["claimed_strictness"] = cert.strictness
        doc["status"] = "pass" if status else "fail"
        _emit(args, doc, _report_text(rep) + f"\nclaimed: {cert.strictness}")
        return EXIT_OK if status else EXIT_FAIL
    if args.psi_cmd == "search":
        sys_ = roots.build(args.family, args.rank)
        if args.target:
            target = _parse_vec(args.target)
        elif args.cls:
            target = two_rho(make_class(args.cls, args.l, args.r, args.variant, args.j))
        else:
            target = roots.positive_root_sum(sys_)
        max_size = args.max_size if args.max_size is not None else len(sys_.positive_roots)
        found = psi.search_certificate(sys_, target, max_size, args.allow_one_pair, args.limit)
        doc = {"kind": "search-result", "system": {"family": sys_.family, "rank": sys_.rank},
               "target": vec_to_json(target), "max_size": max_size, "allow_one_pair": args.allow_one_pair,
               "certificates": [psi.certificate_to_json(c) for c in found]}
        text = [f"{len(found)} certificate(s) for {sys_.label}, target {_fmt_vec(target)}"]
        text += [_cert_text(c) for c in found]
        _emit(args, doc, "\n".join(text))
        return EXIT_OK if found else EXIT_FAIL
    raise UsageError("psi needs one of construct, verify, search")


def _exponent_text(report: spectral.ExponentReport, prof: spectral.SpectralProfile) -> str:
    lines = [f"D = {prof.D}, l = {prof.l}, h = {_fmt_rat(prof.h)}, xi = {_fmt_vec(prof.xi)}",
             f"lambda = {_fmt_vec(prof.lambdas)}",
             f"w = {_fmt_vec(prof.w)}", f"W = {_fmt_vec(prof.W)}",
             "flags: " + ", ".join(f"{k}={v}" for k, v in report.flags.items())]
    if report.contracting:
        lines.append(f"vanishing below h/W_(n-1) = {_fmt_rat(report.vanishing_bound)}; "
                     f"degree-l threshold h/w_l = {_fmt_rat(report.nonvanishing_threshold)}")
    for s in report.statements:
        iv = s.interval
        lines.append(f"  H^{s.degree:<3} {s.kind:<21} p in ({_fmt_rat(iv.lo)}, {_fmt_rat(iv.hi)})  [{s.basis}]")
    return "\n".join(lines)


def cmd_exponents(args) -> int:
    certified = False
    if args.weights:
        try:
            datum = spectral.datum_from_json(_load_json(args.weights))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, (DomainError, DimensionError)):
                raise
            raise UsageError(f"malformed weight file: {exc}") from exc
        rho = datum.trace_form()
        J = range(len(datum.weights))
        label = args.weights
    else:
        if not args.cls:
            raise UsageError("give a class or --weights FILE")
        cls = _class_from_args(args)
        datum = spectral.iwasawa_datum(cls)
        rho = datum.rho
        cert = psi.construct_certificate(cls)
        rep = psi.verify_certificate(cls.system, cert.target, cert)
        certified = rep.matches(cls.expected_strictness)
        sys_ = cls.system
        J = [sys_.index(r) for r in cert.roots]
        label = cls.describe()
    flags = {"nT": spectral.check_nT(datum)}
    if args.xi:
        xi = _parse_vec(args.xi)
        if len(xi) != datum.l:
            raise UsageError(f"--xi needs {datum.l} coordinates")
        bad = spectral.violating_weights(datum, xi)
        if bad:
            doc = {"kind": "exponent-report", "source": label, "nC": False,
                   "violating_weights": [{"index": i, "real": vec_to_json(datum.weights[i].real_part)} for i in bad]}
            _emit(args, doc, f"xi does not contract: weights {bad} have Re(w)(xi) >= 0")
            return EXIT_FAIL
    else:
        xi = datum.default_xi if datum.default_xi is not None else spectral.check_nC(datum)
    flags["nC"] = xi is not None
    if xi is None:
        doc = {"kind": "exponent-report", "source": label, "flags": flags, "statements": []}
        _emit(args, doc, f"{label}: no contracting xi exists (nC fails); no intervals")
        return EXIT_FAIL
    flags["condition_1"] = spectral.check_condition1(datum, J, rho) if any(rho) else None
    flags["certified"] = certified
    prof = spectral.spectral_profile(datum, xi)
    try:
        report = spectral.exponent_report(prof, certified=certified, flags=flags)
    except DomainError as exc:
        _emit(args, {"kind": "exponent-report", "source": label, "flags": flags, "error": str(exc)}, str(exc))
        return EXIT_FAIL
    doc = spectral.report_to_json(report)
    doc["source"] = label
    doc["profile"] = spectral.profile_to_json(prof)
    _emit(args, doc, f"{label}\n" + _exponent_text(report, prof))
    return EXIT_OK


# ---------------------------------------------------------------------------
# batch report


def paper_rows(only: list[str] | None = None, expect: dict[str, str] | None = None) -> list[dict]:
    expect = expect or {}
    rows = []
    for cls in legal_instances():
        if only and not any(cls.key == o or cls.label == o for o in only):
            continue
        rows.append(_paper_row(cls, expect.get(cls.key, expect.get(cls.label))))
    return rows


def _paper_row(cls: RealFormClass, expected: str | None) -> dict:
    sys_ = cls.system
    cert = psi.construct_certificate(cls)
    rep = psi.verify_certificate(sys_, cert.target, cert)
    expected = expected or cls.expected_strictness
    datum = spectral.iwasawa_datum(cls)
    prof = spectral.spectral_profile(datum, datum.default_xi)
    J = [sys_.index(r) for r in cert.roots]
    cond1 = spectral.check_condition1(datum, J, datum.rho)
    status = rep.ok and rep.cond_iii == expected and cond1 and prof.contracting
    return {
        "class": cls.key, "l": cls.l, "r": cls.r, "j": cls.j, "system": sys_.label,
        "psi_size": len(cert.roots), "coeffs": [format_rational(c) for c in cert.coeffs],
        "expected": expected, "cond_i": rep.cond_i, "cond_ii": rep.cond_ii, "cond_iii": rep.cond_iii,
        "cond_1": rep.cond_1 and cond1, "D": prof.D, "h": format_rational(prof.h),
        "threshold": format_rational(prof.h / prof.w[prof.l]),
        "status": "pass" if status else "fail",
    }


def cmd_paper_report(args) -> int:
    expect = {}
    for item in args.expect or []:
        key, _, level = item.partition("=")
        if level not in ("strict", "relaxed"):
            raise UsageError(f"--expect wants CLASS=strict|relaxed, got {item!r}")
        expect[key.strip()] = level
    only = [_resolve_only(o) for o in args.only] if args.only else None
    rows = paper_rows(only, expect)
    if not rows:
        raise UsageError("no catalog rows selected")
    bad = next((r for r in rows if r["status"] != "pass"), None)
    doc = {"kind": "paper-report", "rows": rows, "status": "fail" if bad else "pass",
           "first_failure": f"{bad['class']} l={bad['l']} ({bad['system']})" if bad else None}
    _stamp(args, doc)
    lines = [f"{'class':<14}{'l':>3}{'r':>4}{'j':>3} {'system':<7}{'|Psi|':>6} {'claimed':<8}{'got':<8}"
             f"{'i':>2}{'ii':>3}{'1':>3}{'D':>6} {'h':>7} {'h/w_l':>8}  status"]
    yn = lambda b: "y" if b else "n"  # noqa: E731
    for r in rows:
        lines.append(f"{r['class']:<14}{r['l']:>3}{r['r'] if r['r'] is not None else '-':>4}"
                     f"{r['j'] if r['j'] is not None else '-':>3} {r['system']:<7}{r['psi_size']:>6} "
                     f"{r['expected']:<8}{r['cond_iii']:<8}{yn(r['cond_i']):>2}{yn(r['cond_ii']):>3}"
                     f"{yn(r['cond_1']):>3}{r['D']:>6} {r['h']:>7} {r['threshold']:>8}  {r['status']}")
    lines.append(f"{len(rows)} rows, status: {doc['status']}"
                 + (f" (first failure: {doc['first_failure']})" if bad else ""))
    if "timestamp" in doc:
        lines.append(f"generated {doc['timestamp']}")
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK if not bad else EXIT_FAIL


def _resolve_only(text: str) -> str:
    from .real_forms import _canonical_label

    name, variant = _canonical_label(text)
    return name if variant is None else f"{name}/{variant}"


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rootcert", description="Root-subset certificates and L^p exponent ranges.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="emit the JSON interchange document")
        sp.add_argument("-o", "--output", help="write to this file instead of stdout")

    def class_args(sp, optional=False):
        if optional:
            sp.add_argument("cls", nargs="?", help='Cartan class, e.g. "B I" or b-i')
        else:
            sp.add_argument("cls", help='Cartan class, e.g. "B I" or b-i')
        sp.add_argument("l", nargs="?", type=int, help="real rank")
        sp.add_argument("--r", type=int, help="complex rank, where the class needs it")
        sp.add_argument("--variant", help="restricted-system variant (C/BC, D/B)")
        sp.add_argument("--j", type=int, help="F4 family exponent j in 0..3")

    sp = sub.add_parser("roots", help="list positive roots by norm class")
    sp.add_argument("family")
    sp.add_argument("rank", nargs="?", type=int)
    common(sp)
    sp.set_defaults(func=cmd_roots)

    sp = sub.add_parser("list-classes", help="print the class catalog")
    common(sp)
    sp.set_defaults(func=cmd_list_classes)

    sp = sub.add_parser("psi", help="construct, verify or search certificates")
    psub = sp.add_subparsers(dest="psi_cmd", required=True)
    c = psub.add_parser("construct")
    class_args(c)
    common(c)
    v = psub.add_parser("verify")
    v.add_argument("file")
    common(v)
    s = psub.add_parser("search")
    s.add_argument("family")
    s.add_argument("rank", nargs="?", type=int)
    s.add_argument("--target", help="comma-separated rational coordinates (default: sum of positive roots)")
    s.add_argument("--class", dest="cls", help="use 2rho of this class as the target")
    s.add_argument("--l", type=int)
    s.add_argument("--r", type=int)
    s.add_argument("--variant")
    s.add_argument("--j", type=int)
    s.add_argument("--max-size", type=int)
    s.add_argument("--allow-one-pair", action="store_true")
    s.add_argument("--limit", type=int)
    common(s)
    sp.set_defaults(func=cmd_psi)

    sp = sub.add_parser("exponents", help="spectral profile and exponent intervals")
    class_args(sp, optional=True)
    sp.add_argument("--weights", help="solvable-datum JSON file")
    sp.add_argument("--xi", help="comma-separated coordinates of xi in a")
    common(sp)
    sp.set_defaults(func=cmd_exponents)

    sp = sub.add_parser("paper-report", help="construct and verify every catalog class")
    sp.add_argument("--no-timestamp", action="store_true")
    sp.add_argument("--only", action="append", help="restrict to a class (repeatable)")
    sp.add_argument("--expect", action="append", help="override claimed strictness, CLASS=strict|relaxed")
    common(sp)
    sp.set_defaults(func=cmd_paper_report)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, DomainError, DimensionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
