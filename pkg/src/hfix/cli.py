"""Command-line interface.

    hfix analyze   --f EXPR              fixed points, indices, index-sum check
    hfix verify    --f EXPR              index sum, quadrature cross-check, polynomial sums
    hfix harmonic  --h EXPR --g EXPR     induced h-fixed points and witness checks
    hfix quadratic --c COMPLEX           closed-form analysis of z^2 + c + conj(z^2 + c)
    hfix plot      --in DOC.json         SVG from a saved JSON document
    hfix batch     FILE | --random N     analyze many maps

Exit codes: 0 success (including "hypothesis not met"), 1 verification
failure, 2 usage or input error.
"""

import argparse
import contextlib
import csv
import io
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import document as D
from .config import DEFAULT
from .errors import HfixError, ParseError
from .expr import format_function, parse_complex, parse_function
from .fixpoint import contour_index_of, fixed_points, verify_polynomial_sums
from .harmonic import HarmonicMap, analyze_harmonic, conjecture_witness, quadratic_family_analyze, remark_witnesses
from .plot import PlotError, render_plot
from .poly import RationalMap, is_inf
from .random_maps import random_polynomial, random_rational_map

OK, FAILED, USAGE = 0, 1, 2


@dataclass
class CommandResult:
    exit_code: int
    stdout: bytes
    stderr: bytes


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _num(z, digits=12):
    if is_inf(z):
        return "inf"
    z = complex(z)
    re, im = z.real, z.imag
    if abs(im) <= 1e-13 * (1 + abs(re)):
        return f"{re:.{digits}g}"
    if abs(re) <= 1e-13 * (1 + abs(im)):
        return f"{im:.{digits}g}i"
    sign = "-" if im < 0 else "+"
    return f"{re:.{digits}g}{sign}{abs(im):.{digits}g}i"


def _table(headers, rows):
    cells = [headers] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    return "\n".join(lines)


def _tolerances(args):
    return DEFAULT.with_overrides(root_tol=args.tol_root, cluster_eps=args.tol_cluster, one_band=args.tol_one)


def _options(args):
    return {k: v for k, v in (("tol_root", args.tol_root), ("tol_cluster", args.tol_cluster),
                              ("tol_one", args.tol_one)) if v is not None}


def _parse_map(text, name):
    try:
        return parse_function(text)
    except ParseError as e:
        raise UsageError(f"--{name}: {e}") from None


# ---------------------------------------------------------------------------
# document builders

def build_analyze(text, tol, options=None, command="analyze"):
    rmap = parse_function(text)
    report = fixed_points(rmap, tol)
    doc = D.new_document(command, {"f": text, "options": options or {}}, tol)
    doc["fixed_points"] = [D.encode_fixed_point(p) for p in report.points]
    doc["verdicts"]["index_sum"] = D.encode_complex(report.index_sum)
    doc["verdicts"]["index_sum_pass"] = report.index_sum_deviation <= tol.sum_pass
    doc["verdicts"]["index_sum_deviation"] = report.index_sum_deviation
    doc["diagnostics"]["iterations"] = report.sweeps
    doc["diagnostics"]["warnings"] = list(report.warnings)
    return doc, report


def build_verify(text, tol, options=None):
    doc, report = build_analyze(text, tol, options, command="verify")
    rmap = report.map
    worst = 0.0
    for p in report.points:
        if not p.multiplier_one:
            worst = max(worst, abs(contour_index_of(rmap, p, report, tol) - p.index))
    doc["verdicts"]["index_oracle"] = {"max_deviation": worst, "pass": worst <= tol.index_agree}
    sums = None
    if rmap.is_polynomial() and rmap.degree >= 2:
        ps = verify_polynomial_sums(rmap, tol)
        if ps.skipped:
            w = ps.multiple_witness
            sums = {"skipped": True, "multiplier_one_witness": D.encode_complex(w.location)}
        else:
            ok = max(abs(ps.e3_sum), abs(ps.e4_sum), abs(ps.im_sum)) <= tol.index_agree
            sums = {
                "skipped": False,
                "e3_sum": D.encode_complex(ps.e3_sum),
                "e4_sum": ps.e4_sum,
                "im_sum": ps.im_sum,
                "re_ge1": list(ps.re_ge1),
                "re_le1": list(ps.re_le1),
                "im_nonneg": list(ps.im_nonneg),
                "pass": ok,
            }
    doc["verdicts"]["polynomial_sums"] = sums
    return doc


def _conjecture_json(rep, ids):
    return {
        "applies": rep.theorem_applies,
        "pass": rep.passed,
        "hypothesis": "met" if rep.theorem_applies else "not met",
        "reason": rep.reason,
        "witnesses": [ids[id(p)] for p in rep.witnesses_ge1],
        "witnesses_le1": [ids[id(p)] for p in rep.witnesses_le1],
    }


def build_harmonic(htext, gtext, tol, check="all", options=None, command="harmonic", c=None):
    h = parse_function(htext)
    g = parse_function(gtext)
    f = HarmonicMap(h, g)
    a = analyze_harmonic(f, tol)
    doc = D.new_document(command, {"h": htext, "g": gtext, "c": c, "options": options or {}}, tol)
    doc["fixed_points"] = ([D.encode_fixed_point(p, "h") for p in a.h_report.points]
                           + [D.encode_fixed_point(p, "g") for p in a.g_report.points])
    doc["h_fixed_points"] = [D.encode_h_fixed_point(p, i) for i, p in enumerate(a.points)]
    ids = {id(p): f"hfp-{i}" for i, p in enumerate(a.points)}
    v = doc["verdicts"]
    v["map_kind"] = f.kind
    v["component_index_sums"] = {"h": D.encode_complex(a.h_report.index_sum),
                                 "g": D.encode_complex(a.g_report.index_sum)}
    v["index_sum_pass"] = max(a.h_report.index_sum_deviation, a.g_report.index_sum_deviation) <= tol.sum_pass
    if check in ("conjecture", "all") and f.kind is not None:
        v["conjecture"] = _conjecture_json(conjecture_witness(f, tol, a), ids)
    if check in ("remark", "all") and f.kind is not None:
        r = remark_witnesses(f, tol, a)
        v["remark"] = {
            "le1": [ids[id(p)] for p in r.le1],
            "im_nonneg_h": None if r.im_nonneg_h is None else [D.encode_complex(p.location) for p in r.im_nonneg_h],
            "im_nonneg_g": None if r.im_nonneg_g is None else [D.encode_complex(p.location) for p in r.im_nonneg_g],
        }
    doc["diagnostics"]["iterations"] = a.h_report.sweeps + a.g_report.sweeps
    doc["diagnostics"]["warnings"] = list(a.h_report.warnings) + list(a.g_report.warnings)
    if check in ("conjecture", "all") and f.kind is None:
        doc["diagnostics"]["warnings"].append("a component has degree < 2; conjecture check not applicable")
    return doc, a


def build_quadratic(ctext, tol, options=None):
    c = parse_complex(ctext)
    q = quadratic_family_analyze(c, tol)
    comp = format_function(RationalMap([c, 0, 1]))
    doc, a = build_harmonic(comp, comp, tol, "none", options, command="quadratic", c=ctext)
    doc["input"]["f"] = comp
    generic = fixed_points(RationalMap([c, 0, 1]), tol).finite
    worst = 0.0
    for z, lam in zip(q.fixed_points, q.multipliers):
        best = min(generic, key=lambda p: abs(p.location - z))
        worst = max(worst, abs(best.location - z), abs(best.multiplier - lam))
    doc["verdicts"]["quadratic"] = {
        "c": D.encode_complex(q.c),
        "fixed_points": [D.encode_complex(z) for z in q.fixed_points],
        "multipliers": [D.encode_complex(z) for z in q.multipliers],
        "multiplicities": list(q.multiplicities),
        "h_fixed_points": [D.encode_complex(z) for z in q.h_fixed_points],
        "single_point": q.single_point,
        "re_exactly_one": q.re_exactly_one,
        "c_is_real": q.c_is_real,
        "c_at_least_quarter": q.c_at_least_quarter,
        "consistent": q.consistent,
        "generic_max_deviation": worst,
    }
    return doc, q


# ---------------------------------------------------------------------------
# text renderers

def _fixed_point_rows(points):
    rows = []
    for i, p in enumerate(points):
        rows.append([i, _num(p.location), _num(p.multiplier), p.multiplicity, _num(p.index),
                     p.classification, "yes" if p.weakly_repelling else "no"])
    return rows


_FP_HEADERS = ["#", "location", "multiplier", "m", "index", "class", "weakly-rep"]


def _analyze_text(doc, report):
    out = [f"f(z) = {format_function(report.map)}",
           f"degree {report.map.degree}: {report.total_multiplicity()} fixed points counted with multiplicity",
           _table(_FP_HEADERS, _fixed_point_rows(report.points))]
    v = doc["verdicts"]
    verdict = "PASS" if v["index_sum_pass"] else "FAIL"
    out.append(f"index sum = {_num(report.index_sum)} (deviation {report.index_sum_deviation:.3g}): {verdict}")
    if "index_oracle" in v:
        o = v["index_oracle"]
        out.append(f"contour vs 1/(1-lambda): max deviation {o['max_deviation']:.3g}: "
                   f"{'PASS' if o['pass'] else 'FAIL'}")
    ps = v.get("polynomial_sums")
    if ps is not None:
        if ps["skipped"]:
            out.append(f"finite-point sums skipped: multiplier-1 fixed point at "
                       f"{_num(D.decode_complex(ps['multiplier_one_witness']))}")
        else:
            out.append(f"sum 1/(1-lambda) = {_num(D.decode_complex(ps['e3_sum']))}, "
                       f"real-part sum = {ps['e4_sum']:.3g}, imaginary-part sum = {ps['im_sum']:.3g}: "
                       f"{'PASS' if ps['pass'] else 'FAIL'}")
            out.append(f"Re(lambda) >= 1 at {ps['re_ge1']}; Re(lambda) <= 1 at {ps['re_le1']}; "
                       f"Im(lambda) >= 0 at {ps['im_nonneg']}")
    for w in doc["diagnostics"]["warnings"]:
        out.append(f"warning: {w}")
    return "\n".join(out) + "\n"


def _harmonic_text(doc, a):
    f = a.map
    out = [f"h(z) = {format_function(f.h)}", f"g(z) = {format_function(f.g)}",
           f"kind: {f.kind or 'degenerate (a component has degree < 2)'}"]
    witnesses = set(doc["verdicts"].get("conjecture", {}).get("witnesses", []))
    fin, inf = [], []
    for i, p in enumerate(a.points):
        ident = f"hfp-{i}"
        flag = "Re>=1" if ident in witnesses else ""
        row = [ident, _num(p.zeta) if p.is_finite else D.SYMBOLIC_ZETA[p.kind], _num(p.mu), _num(p.omega),
               _num(p.lam), _num(p.theta), f"{p.multiplicity[0]},{p.multiplicity[1]}", flag]
        (fin if p.is_finite else inf).append(row)
    headers = ["id", "zeta", "mu", "omega", "lambda", "theta", "m", "witness"]
    out.append(f"finite h-fixed points: {len(fin)}")
    if fin:
        out.append(_table(headers, fin))
    out.append(f"infinite h-fixed points: {len(inf)}")
    if inf:
        out.append(_table(headers, inf))
    v = doc["verdicts"]
    if "conjecture" in v:
        c = v["conjecture"]
        w = ", ".join(c["witnesses"]) or "none"
        status = "PASS" if c["pass"] else "FAIL"
        reason = c["reason"].removeprefix("hypothesis not met: ")
        head = f"hypothesis: {c['hypothesis']} ({reason})"
        out.append(f"conjecture: {head}; witnesses with Re(lambda), Re(theta) >= 1: {w}; {status}")
    if "remark" in v:
        r = v["remark"]
        out.append(f"Re(lambda), Re(theta) <= 1 at: {', '.join(r['le1']) or 'none'}")
        for comp in ("h", "g"):
            pts = r[f"im_nonneg_{comp}"]
            txt = "skipped (multiple fixed point)" if pts is None else (
                ", ".join(_num(D.decode_complex(z)) for z in pts) or "none")
            out.append(f"fixed points of {comp} with Im(multiplier) >= 0 (excluding super-attracting): {txt}")
    for w in doc["diagnostics"]["warnings"]:
        out.append(f"warning: {w}")
    return "\n".join(out) + "\n"


def _quadratic_text(doc, q):
    out = [f"P(z) = z^2 + c + conj(z^2 + c), c = {_num(q.c)}"]
    if q.single_point:
        out.append("single 𝔥-fixed point, multiplier 1")
        out.append(f"  component fixed point 0.5 (multiplicity 2), zeta = {_num(q.h_fixed_points[0])}")
    else:
        out.append("two simple 𝔥-fixed points")
        for z, lam, zeta in zip(q.fixed_points, q.multipliers, q.h_fixed_points):
            out.append(f"  mu = omega = {_num(z)}, zeta = {_num(zeta)}, multiplier {_num(lam)}")
    out.append(f"real part of every multiplier exactly 1: {'yes' if q.re_exactly_one else 'no'}")
    if q.c_is_real:
        out.append(f"c >= 1/4: {'yes' if q.c_at_least_quarter else 'no'} "
                   f"({'consistent' if q.consistent else 'INCONSISTENT'})")
    return "\n".join(out) + "\n"


def _csv_number(x):
    return repr(float(x))


def _fixed_points_csv(doc):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["component", "location_re", "location_im", "multiplier_re", "multiplier_im",
                "multiplicity", "index_re", "index_im", "class", "weakly_repelling", "simple"])
    for p in doc["fixed_points"]:
        loc = p["location"]
        lr, li = ("inf", "") if loc == "inf" else (_csv_number(loc["re"]), _csv_number(loc["im"]))
        w.writerow([p["component"], lr, li, _csv_number(p["multiplier"]["re"]), _csv_number(p["multiplier"]["im"]),
                    p["multiplicity"], _csv_number(p["index"]["re"]), _csv_number(p["index"]["im"]),
                    p["class"], p["weakly_repelling"], p["simple"]])
    return buf.getvalue()


def _h_fixed_points_csv(doc):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["id", "kind", "zeta_re", "zeta_im", "mu_re", "mu_im", "omega_re", "omega_im",
                "lambda_re", "lambda_im", "theta_re", "theta_im"])

    def pair(v):
        if isinstance(v, str):
            return [v, ""]
        return [_csv_number(v["re"]), _csv_number(v["im"])]

    for h in doc["h_fixed_points"]:
        w.writerow([h["id"], h["kind"], *pair(h["zeta"]), *pair(h["mu"]), *pair(h["omega"]),
                    *pair(h["lambda"]), *pair(h["theta"])])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# commands

def _emit(args, doc, text, csv_text):
    if args.out:
        try:
            svg = render_plot(doc)
        except PlotError as e:
            raise UsageError(str(e)) from None
        with open(args.out, "wb") as fh:
            fh.write(svg)
    if args.format == "json":
        return D.dumps(doc)
    if args.format == "csv":
        return csv_text
    return text


def cmd_analyze(args):
    tol = _tolerances(args)
    _parse_map(args.f, "f")
    doc, report = build_analyze(args.f, tol, _options(args))
    out = _emit(args, doc, _analyze_text(doc, report), _fixed_points_csv(doc))
    return (OK if doc["verdicts"]["index_sum_pass"] else FAILED), out


def cmd_verify(args):
    tol = _tolerances(args)
    _parse_map(args.f, "f")
    doc = build_verify(args.f, tol, _options(args))
    report = fixed_points(parse_function(args.f), tol)
    out = _emit(args, doc, _analyze_text(doc, report), _fixed_points_csv(doc))
    v = doc["verdicts"]
    ok = v["index_sum_pass"] and v["index_oracle"]["pass"]
    if v["polynomial_sums"] and not v["polynomial_sums"]["skipped"]:
        ok = ok and v["polynomial_sums"]["pass"]
    return (OK if ok else FAILED), out


def cmd_harmonic(args):
    tol = _tolerances(args)
    _parse_map(args.h, "h")
    _parse_map(args.g, "g")
    doc, a = build_harmonic(args.h, args.g, tol, args.check, _options(args))
    csv_text = _h_fixed_points_csv(doc)
    out = _emit(args, doc, _harmonic_text(doc, a), csv_text)
    conj = doc["verdicts"].get("conjecture")
    ok = doc["verdicts"]["index_sum_pass"] and (conj is None or conj["pass"])
    return (OK if ok else FAILED), out


def cmd_quadratic(args):
    tol = _tolerances(args)
    try:
        parse_complex(args.c)
    except ParseError as e:
        raise UsageError(f"--c: {e}") from None
    doc, q = build_quadratic(args.c, tol, _options(args))
    out = _emit(args, doc, _quadratic_text(doc, q), _h_fixed_points_csv(doc))
    ok = q.consistent is not False and doc["verdicts"]["quadratic"]["generic_max_deviation"] <= 1e-10
    return (OK if ok else FAILED), out


def cmd_plot(args):
    if args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise UsageError(f"cannot read {args.input}: {e.strerror}") from None
    try:
        doc = D.loads(text)
    except ValueError as e:
        raise UsageError(f"{args.input}: not a JSON document ({e})") from None
    try:
        svg = render_plot(doc, args.width, args.height)
    except (PlotError, KeyError, TypeError) as e:
        raise UsageError(f"cannot plot: {e}") from None
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(svg)
        return OK, ""
    return OK, svg.decode("utf-8")


def _batch_inputs(args):
    if args.random is not None:
        rng = np.random.default_rng(args.seed)
        gen = random_polynomial if args.kind == "polynomial" else random_rational_map
        maps = [gen(rng, args.degree) for _ in range(args.random)]
        return [format_function(m if isinstance(m, RationalMap) else RationalMap(m)) for m in maps]
    if args.file is None:
        raise UsageError("batch: give an input FILE or --random N")
    try:
        with open(args.file, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as e:
        raise UsageError(f"cannot read {args.file}: {e.strerror}") from None
    return [ln.strip() for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]


def cmd_batch(args):
    tol = _tolerances(args)
    exprs = _batch_inputs(args)

    def one(text):
        try:
            doc, _ = build_analyze(text, tol, _options(args))
            return doc
        except HfixError as e:
            return {"f": text, "error": str(e)}

    with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
        results = list(pool.map(one, exprs))

    errors = sum(1 for r in results if "error" in r)
    failed = sum(1 for r in results if "error" not in r and not r["verdicts"]["index_sum_pass"])
    doc = {
        "schema_version": D.SCHEMA_VERSION,
        "command": "batch",
        "input": {"file": args.file, "random": args.random, "seed": args.seed, "degree": args.degree,
                  "kind": args.kind, "options": _options(args)},
        "results": results,
        "summary": {"count": len(results), "passed": len(results) - errors - failed,
                    "failed": failed, "errors": errors},
        "diagnostics": {"backend": D._kernels.BACKEND, "tolerances": tol.as_dict()},
    }
    if args.format == "json":
        out = D.dumps(doc)
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "f", "fixed_points", "index_sum_re", "index_sum_im", "deviation", "pass", "error"])
        for i, r in enumerate(results):
            if "error" in r:
                w.writerow([i, r["f"], "", "", "", "", "", r["error"]])
            else:
                s = r["verdicts"]["index_sum"]
                w.writerow([i, r["input"]["f"], len(r["fixed_points"]), _csv_number(s["re"]), _csv_number(s["im"]),
                            _csv_number(r["verdicts"]["index_sum_deviation"]), r["verdicts"]["index_sum_pass"], ""])
        out = buf.getvalue()
    else:
        rows = []
        for i, r in enumerate(results):
            if "error" in r:
                rows.append([i, r["f"], "-", "-", "ERROR: " + r["error"]])
            else:
                v = r["verdicts"]
                rows.append([i, r["input"]["f"], len(r["fixed_points"]),
                             f"{v['index_sum_deviation']:.3g}", "PASS" if v["index_sum_pass"] else "FAIL"])
        s = doc["summary"]
        out = (_table(["#", "f", "points", "|sum-1|", "verdict"], rows)
               + f"\n{s['count']} maps: {s['passed']} passed, {s['failed']} failed, {s['errors']} errors\n")
    code = USAGE if errors else (FAILED if failed else OK)
    return code, out


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["table", "json", "csv"], default="table")
    common.add_argument("--tol-root", type=float, default=None, help="root-finder stop tolerance (1e-12)")
    common.add_argument("--tol-cluster", type=float, default=None, help="root clustering scale (1e-6)")
    common.add_argument("--tol-one", type=float, default=None, help="multiplier-one band (1e-8)")

    p = _Parser(prog="hfix", description="Fixed points of rational maps and h-fixed points of harmonic maps.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    a = sub.add_parser("analyze", parents=[common], help="fixed points of a rational map")
    a.add_argument("--f", required=True, metavar="EXPR")
    a.add_argument("--out", metavar="FILE", help="also write an SVG plot")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", parents=[common], help="index-sum and polynomial identities")
    v.add_argument("--f", required=True, metavar="EXPR")
    v.add_argument("--out", metavar="FILE")
    v.set_defaults(func=cmd_verify)

    h = sub.add_parser("harmonic", parents=[common], help="h-fixed points of f = h + conj(g)")
    h.add_argument("--h", required=True, metavar="EXPR")
    h.add_argument("--g", required=True, metavar="EXPR")
    h.add_argument("--check", choices=["conjecture", "remark", "all", "none"], default="all")
    h.add_argument("--out", metavar="FILE")
    h.set_defaults(func=cmd_harmonic)

    q = sub.add_parser("quadratic", parents=[common], help="the family z^2 + c + conj(z^2 + c)")
    q.add_argument("--c", required=True, metavar="COMPLEX", help='e.g. "0.25" or "1+2i"')
    q.add_argument("--out", metavar="FILE")
    q.set_defaults(func=cmd_quadratic)

    pl = sub.add_parser("plot", help="render a saved JSON document as SVG")
    pl.add_argument("--in", dest="input", required=True, metavar="FILE")
    pl.add_argument("--out", metavar="FILE")
    pl.add_argument("--width", type=int, default=800)
    pl.add_argument("--height", type=int, default=800)
    pl.set_defaults(func=cmd_plot)

    b = sub.add_parser("batch", parents=[common], help="analyze many maps")
    b.add_argument("file", nargs="?", help="newline-delimited expressions")
    b.add_argument("--random", type=int, metavar="N")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--degree", type=int, default=3)
    b.add_argument("--kind", choices=["rational", "polynomial"], default="rational")
    b.add_argument("--jobs", type=int, default=1)
    b.set_defaults(func=cmd_batch)
    return p


def run_command(argv):
    """Run the CLI on ``argv`` and capture everything it would print."""
    out, err = io.StringIO(), io.StringIO()
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(list(argv))
        code, text = args.func(args)
        out.write(text)
    except SystemExit as e:  # --help
        code = e.code if isinstance(e.code, int) else USAGE
    except UsageError as e:
        msg = str(e)
        err.write(f"{msg}\n" if msg.startswith("hfix") else f"hfix: error: {msg}\n")
        code = USAGE
    except HfixError as e:
        err.write(f"hfix: error: {e}\n")
        code = USAGE
    return CommandResult(code, out.getvalue().encode("utf-8"), err.getvalue().encode("utf-8"))


def main(argv=None):
    res = run_command(sys.argv[1:] if argv is None else argv)
    sys.stdout.buffer.write(res.stdout)
    sys.stdout.flush()
    sys.stderr.buffer.write(res.stderr)
    sys.stderr.flush()
    return res.exit_code


if __name__ == "__main__":
    sys.exit(main())
