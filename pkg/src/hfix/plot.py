"""Static SVG plots of fixed points and h-fixed points from an analysis document."""

from xml.sax.saxutils import escape

from .config import DEFAULT
from .document import decode_complex
from .fixpoint import ATTRACTING, INDIFFERENT, REPELLING, SUPER_ATTRACTING, classify_multiplier
from .poly import is_inf

FILL = {
    SUPER_ATTRACTING: "#1f4e9c",
    ATTRACTING: "#6baed6",
    INDIFFERENT: "#f2b705",
    REPELLING: "#d7301f",
}
MARGIN = 60


class PlotError(ValueError):
    pass


def _short(z):
    z = complex(z)
    re, im = z.real, z.imag
    if abs(im) <= 1e-12 * (1 + abs(re)):
        return f"{re:.4g}"
    if abs(re) <= 1e-12 * (1 + abs(im)):
        return f"{im:.4g}i"
    sign = "-" if im < 0 else "+"
    return f"{re:.4g}{sign}{abs(im):.4g}i"


def _f(x):
    return f"{x:.2f}"


class _Frame:
    def __init__(self, pts, width, height):
        xs = [p.real for p in pts]
        ys = [p.imag for p in pts]
        cx, cy = (min(xs) + max(xs)) / 2, (min(ys) + max(ys)) / 2
        span = max(max(xs) - min(xs), max(ys) - min(ys))
        if span <= 1e-12:
            span = 1.0
        else:
            span *= 1.4
        self.x0, self.x1 = cx - span / 2, cx + span / 2
        self.y0, self.y1 = cy - span / 2, cy + span / 2
        self.span = span
        self.w, self.h = width, height

    def __call__(self, z):
        sx = (self.w - 2 * MARGIN) / self.span
        sy = (self.h - 2 * MARGIN) / self.span
        return (MARGIN + (z.real - self.x0) * sx, self.h - MARGIN - (z.imag - self.y0) * sy)


def _marker(out, ident, x, y, fill, ring, title, r=7):
    out.append(f'<g id="{ident}"><title>{escape(title)}</title>')
    out.append(f'<circle cx="{_f(x)}" cy="{_f(y)}" r="{r}" fill="{fill}" stroke="#222" stroke-width="1"/>')
    if ring:
        out.append(f'<circle cx="{_f(x)}" cy="{_f(y)}" r="{r + 4}" fill="none" stroke="#222" stroke-width="1.5"/>')
    out.append("</g>")


def _split_marker(out, ident, x, y, left, right, ring, title, r=8):
    out.append(f'<g id="{ident}"><title>{escape(title)}</title>')
    out.append(f'<path d="M {_f(x)} {_f(y - r)} A {r} {r} 0 0 0 {_f(x)} {_f(y + r)} Z" '
               f'fill="{left}" stroke="#222" stroke-width="1"/>')
    out.append(f'<path d="M {_f(x)} {_f(y - r)} A {r} {r} 0 0 1 {_f(x)} {_f(y + r)} Z" '
               f'fill="{right}" stroke="#222" stroke-width="1"/>')
    if ring:
        out.append(f'<circle cx="{_f(x)}" cy="{_f(y)}" r="{r + 4}" fill="none" stroke="#222" stroke-width="1.5"/>')
    out.append("</g>")


def _arrow(out, ident, p, q):
    (x0, y0), (x1, y1) = p, q
    if abs(x1 - x0) + abs(y1 - y0) < 4:
        # fixed by the map: draw a loop returning to the point
        d = f"M {_f(x0 - 4)} {_f(y0 - 8)} C {_f(x0 - 22)} {_f(y0 - 40)} {_f(x0 + 22)} {_f(y0 - 40)} {_f(x0 + 4)} {_f(y0 - 9)}"
    else:
        d = f"M {_f(x0)} {_f(y0)} L {_f(x1)} {_f(y1)}"
    out.append(f'<path id="{ident}" d="{d}" fill="none" stroke="#555" stroke-width="1.2" marker-end="url(#arrowhead)"/>')


def _axes(out, fr):
    w, h = fr.w, fr.h
    out.append(f'<rect x="{MARGIN}" y="{MARGIN}" width="{w - 2 * MARGIN}" height="{h - 2 * MARGIN}" '
               'fill="none" stroke="#999" stroke-width="1"/>')
    if fr.y0 <= 0 <= fr.y1:
        _, y = fr(complex(fr.x0, 0))
        out.append(f'<line id="axis-re" x1="{MARGIN}" y1="{_f(y)}" x2="{w - MARGIN}" y2="{_f(y)}" stroke="#bbb"/>')
    if fr.x0 <= 0 <= fr.x1:
        x, _ = fr(complex(0, fr.y0))
        out.append(f'<line id="axis-im" x1="{_f(x)}" y1="{MARGIN}" x2="{_f(x)}" y2="{h - MARGIN}" stroke="#bbb"/>')
    out.append(f'<text x="{MARGIN}" y="{h - MARGIN + 18}" font-size="11">{fr.x0:.4g}</text>')
    out.append(f'<text x="{w - MARGIN}" y="{h - MARGIN + 18}" font-size="11" text-anchor="end">{fr.x1:.4g}</text>')
    out.append(f'<text x="{MARGIN - 6}" y="{h - MARGIN}" font-size="11" text-anchor="end">{fr.y0:.4g}i</text>')
    out.append(f'<text x="{MARGIN - 6}" y="{MARGIN + 10}" font-size="11" text-anchor="end">{fr.y1:.4g}i</text>')


def _legend(out, harmonic):
    # one row across the top margin, clear of the plot frame and axis labels
    out.append('<g id="legend">')
    x = 16
    for kind in (SUPER_ATTRACTING, ATTRACTING, INDIFFERENT, REPELLING):
        out.append(f'<circle cx="{x}" cy="16" r="5" fill="{FILL[kind]}" stroke="#222"/>')
        out.append(f'<text x="{x + 10}" y="20" font-size="11">{kind}</text>')
        x += 24 + 7 * len(kind)
    out.append(f'<circle cx="{x}" cy="16" r="6" fill="none" stroke="#222" stroke-width="1.5"/>')
    out.append(f'<text x="{x + 10}" y="20" font-size="11">ring: weakly repelling</text>')
    if harmonic:
        out.append('<text x="10" y="38" font-size="11">zeta marker: left half λ class, right half θ class; '
                   'square μ, diamond ω</text>')
    out.append("</g>")


def render_plot(doc, width=800, height=800, tol=DEFAULT):
    """SVG bytes for an analysis document; raises PlotError when it has no finite point."""
    hfps = [(i, h) for i, h in enumerate(doc.get("h_fixed_points") or []) if h["kind"] == "finite"]
    fps = [(i, p) for i, p in enumerate(doc.get("fixed_points") or []) if p["location"] != "inf"]
    if not hfps and not fps:
        raise PlotError("nothing to plot: the document has no finite fixed point")

    out = []
    if hfps:
        pts = []
        for _, h in hfps:
            pts += [decode_complex(h["zeta"]), decode_complex(h["mu"]), decode_complex(h["omega"])]
            pts.append(decode_complex(h["omega"]).conjugate())
    else:
        pts = [decode_complex(p["location"]) for _, p in fps]
    fr = _Frame(pts, width, height)
    out.append(f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
               f'viewBox="0 0 {width} {height}" '
               f'data-bounds="{fr.x0!r} {fr.y0!r} {fr.x1!r} {fr.y1!r}">')
    out.append('<defs><marker id="arrowhead" markerWidth="8" markerHeight="8" refX="7" refY="4" '
               'orient="auto"><path d="M 0 0 L 8 4 L 0 8 Z" fill="#555"/></marker></defs>')
    out.append('<rect width="100%" height="100%" fill="white"/>')
    _axes(out, fr)

    stacked = {}

    def label(x, y, text):
        key = (round(x), round(y))
        k = stacked.get(key, 0)
        stacked[key] = k + 1
        out.append(f'<text x="{_f(x + 12)}" y="{_f(y - 10 - 13 * k)}" font-size="11">{escape(text)}</text>')

    if hfps:
        for i, h in hfps:
            z = decode_complex(h["zeta"])
            lam, th = decode_complex(h["lambda"]), decode_complex(h["theta"])
            cl, ct = classify_multiplier(lam, tol), classify_multiplier(th, tol)
            x, y = fr(z)
            title = f"zeta={_short(z)} mu={_short(decode_complex(h['mu']))} omega={_short(decode_complex(h['omega']))}"
            _split_marker(out, f"hfp-{i}", x, y, FILL[cl.kind], FILL[ct.kind],
                          cl.weakly_repelling and ct.weakly_repelling, title)
            label(x, y, f"λ={_short(lam)}, θ={_short(th)}")
        comps = {}
        for _, h in hfps:
            for role, key, mult in (("mu", "mu", "lambda"), ("omega", "omega", "theta")):
                z = decode_complex(h[key])
                comps.setdefault((role, z.real, z.imag), (z, decode_complex(h[mult])))
        counters = {"mu": 0, "omega": 0}
        for (role, _, _), (z, m) in comps.items():
            k = counters[role]
            counters[role] += 1
            x, y = fr(z)
            fill = FILL[classify_multiplier(m, tol).kind]
            if role == "mu":
                shape = f'<rect x="{_f(x - 4)}" y="{_f(y - 4)}" width="8" height="8" fill="{fill}" stroke="#222"/>'
                target = fr(z)  # h(mu) = mu
            else:
                shape = (f'<path d="M {_f(x)} {_f(y - 6)} L {_f(x + 6)} {_f(y)} L {_f(x)} {_f(y + 6)} '
                         f'L {_f(x - 6)} {_f(y)} Z" fill="{fill}" stroke="#222"/>')
                target = fr(z.conjugate())  # omega -> g(omega) -> conj(g(omega))
            out.append(f'<g id="{role}-{k}"><title>{role}={_short(z)}</title>{shape}</g>')
            _arrow(out, f"arrow-{role}-{k}", (x, y), target)
    else:
        for i, p in fps:
            z = decode_complex(p["location"])
            x, y = fr(z)
            lam = decode_complex(p["multiplier"])
            _marker(out, f"fp-{i}", x, y, FILL[p["class"]], p["weakly_repelling"],
                    f"z={_short(z)} multiplicity={p['multiplicity']}")
            text = f"λ={_short(lam)}"
            if p["multiplicity"] > 1:
                text += f", m={p['multiplicity']}"
            label(x, y, text)

    _legend(out, bool(hfps))
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode("utf-8")


def locations_plotted(doc):
    """Finite points that receive a marker, in element order (for tests and tooling)."""
    hfps = [h for h in doc.get("h_fixed_points") or [] if h["kind"] == "finite"]
    if hfps:
        return [decode_complex(h["zeta"]) for h in hfps]
    return [decode_complex(p["location"]) for p in doc.get("fixed_points") or []
            if not is_inf(decode_complex(p["location"]))]
