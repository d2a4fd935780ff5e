"""Text renderings of the coefficient tables: LaTeX rows, CSV and JSON."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from math import lcm

from .exact_core import format_rational
from .polynomial import Poly

LATEX_VARS = {"y": "y", "u": "u", "xi": "\\xi", "omega": "\\omega", "x": "x"}


def _sub(n: int) -> str:
    return str(n) if 0 <= n < 10 else "{%d}" % n


def latex_rational(c: Fraction) -> str:
    """Signed value: 8, -\\frac{1}{30}."""
    c = Fraction(c)
    sign = "-" if c < 0 else ""
    c = abs(c)
    if c.denominator == 1:
        return f"{sign}{c.numerator}"
    return f"{sign}\\frac{{{c.numerator}}}{{{c.denominator}}}"


def latex_poly(p: Poly, var: str = "x") -> str:
    """Descending terms, unit coefficients dropped: 16 y^3 - 20 y^2 + 12 y - 3."""
    v = LATEX_VARS.get(var, var)
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeff(k)
        if c == 0:
            continue
        mag = latex_rational(abs(c))
        if k == 0:
            body = mag
        else:
            power = v if k == 1 else f"{v}^{_sub(k)}"
            body = power if abs(c) == 1 else f"{mag} {power}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts) if parts else "0"


def _frac_prefix(c: Fraction) -> str:
    c = abs(c)
    return f"\\frac{{{c.numerator}}}{{{c.denominator}}}"


def latex_faulhaber(F) -> str:
    """\\frac{1}{D} ( integer polynomial in y ), or the bare polynomial when D = 1."""
    p = F.poly
    if p.degree == 0:
        return latex_rational(p.coeff(0))
    den = lcm(*(c.denominator for c in p.coeffs))
    inner = latex_poly(p * den, "y")
    if den == 1:
        return inner
    return f"\\frac{{1}}{{{den}}} ( {inner} )"


def _strip_power(p: Poly, k: int) -> Poly:
    if any(p.coeff(i) for i in range(k)):
        raise ValueError(f"polynomial is not divisible by the {k}-th power of its variable")
    return Poly(p.coeffs[k:])


def _scaled_monic(lead: Fraction, rest: Poly, var: str) -> str:
    if rest.degree <= 0:
        return ""
    return f" ( {latex_poly(rest / lead, var)} )"


def latex_companion(form) -> str:
    """Row body for the u-table (odd n), xi-table (even n) or the omega display."""
    n = form.n
    basis = form.basis.value
    v = LATEX_VARS[basis]
    p = form.poly
    lead = p.leading
    if basis == "omega":
        scale = 1 / lead
        label = f"{n + 1} \\cdot 2^{{{n + 1}}}" if scale == (n + 1) * 2 ** (n + 1) else str(scale)
        return f"\\frac{{1}}{{{label}}} ( {latex_poly(p / lead, 'omega')} )"
    if form.half_factor:
        inner = _strip_power(p, 1)
        sign = "+" if lead > 0 else "-"
        return f"{sign}{_frac_prefix(lead)} (x-\\frac{{1}}{{2}}) {v}" + _scaled_monic(lead, inner, basis)
    inner = _strip_power(p, 2)
    sign = "-" if lead < 0 else ""
    return f"{sign}{_frac_prefix(lead)} {v}^2" + _scaled_monic(lead, inner, basis)


def latex_row(label: str, body: str) -> str:
    return f"${label}$ & ${body}$ \\\\"


def faulhaber_latex_row(F) -> str:
    return latex_row(f"F_{_sub(F.n)}(y)", latex_faulhaber(F))


def companion_latex_row(form) -> str:
    return latex_row(f"S_{_sub(form.n)}(x)", latex_companion(form))


def bold_F_latex_row(n: int, p: Poly) -> str:
    return latex_row(f"\\mathbf{{F}}\\mspace{{-2.5mu}}_{_sub(n)}(u)", latex_poly(p, "u"))


def triangle_latex_row(n: int, values) -> str:
    cells = [f"${n}$"] + [f"${latex_rational(v)}$" for v in values]
    return " & ".join(cells) + " \\\\"


def to_csv(rows, header=("n", "k", "value")) -> str:
    """rows: iterable of (n, k, value) with rational values."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_rational(c) if isinstance(c, Fraction) else c for c in row])
    return buf.getvalue()


def to_json(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)


def parse_json_rationals(text: str):
    """Inverse helper for tests: every "p/q" string value becomes a Fraction."""
    from .exact_core import parse_rational

    def walk(obj):
        if isinstance(obj, dict):
            return {k: walk(v) for k, v in obj.items()}
        if isinstance(obj, list):
            return [walk(v) for v in obj]
        if isinstance(obj, str):
            try:
                return parse_rational(obj)
            except ValueError:
                return obj
        return obj

    return walk(json.loads(text))
