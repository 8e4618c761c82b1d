"""Orbit tables (orbit, exponent profile, orbit sum) and the bundled corpus."""

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .analysis import orbit_expr
from .coset import DEFAULT_CAP, sigma_context
from .errors import DomainError
from .lfunc import canonicalize, equal, parse, render_factored
from .orbit import compute_orbits, exponent_profile, format_profile


@dataclass(frozen=True)
class TableRow:
    members: tuple  # Shuffle
    profile: tuple
    expr: object  # canonical LExpr

    def labels(self):
        return [w.label() for w in self.members]


@dataclass(frozen=True)
class Table:
    m: int
    n: int
    sigma: int
    rows: tuple


def build_table(m, n, sigma, cap=DEFAULT_CAP):
    ctx = sigma_context(m, n, sigma)
    rows = []
    for o in compute_orbits(ctx, cap):
        rows.append(TableRow(o.members, exponent_profile(o.base_point, ctx), orbit_expr(o, ctx)))
    return Table(m, n, sigma, tuple(rows))


# -- rendering ---------------------------------------------------------------


def _profile_latex(profile):
    def q(v):
        if v.denominator == 1:
            return str(v.numerator)
        sign = "-" if v < 0 else ""
        return f"{sign}\\frac{{{abs(v.numerator)}}}{{{v.denominator}}}"

    body = ",".join(q(v) for v in profile)
    if any(v.denominator != 1 for v in profile):
        return f"$\\left\\{{{body}\\right\\}}$"
    return f"$\\{{{body}\\}}$"


def render_text(table):
    """Same layout as the corpus files, so output can be saved as a golden."""
    lines = [f"m={table.m} n={table.n} sigma={table.sigma}"]
    for row in table.rows:
        lines.append(
            f"{','.join(str(w) for w in row.members)} | {format_profile(row.profile)} | {render_factored(row.expr)}"
        )
    return "\n".join(lines) + "\n"


def render_latex(table):
    lines = [
        "\\begin{tabular}{ccc}",
        "    Orbit & $\\rho_{m,n}$ & $R(w,\\frac{m+n}{2}-\\sigma+t)$\\\\",
    ]
    body = []
    for row in table.rows:
        label = "${" + ",".join(row.labels()) + "}$"
        body.append(
            f"    {label} & {_profile_latex(row.profile)} & ${render_factored(row.expr, latex=True)}$"
        )
    lines.append("\\\\\n".join(body))
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"


def table_json(table):
    return {
        "m": table.m,
        "n": table.n,
        "sigma": table.sigma,
        "rows": [
            {
                "orbit": [str(w) for w in row.members],
                "profile": [str(v) for v in row.profile],
                "expr": render_factored(row.expr),
            }
            for row in table.rows
        ],
    }


def render_json(table):
    return json.dumps(table_json(table), indent=2) + "\n"


# -- corpus ------------------------------------------------------------------


@dataclass(frozen=True)
class CorpusRow:
    line: int
    members: tuple  # arrangement strings
    profile: tuple
    expr_text: str


@dataclass(frozen=True)
class CorpusTable:
    name: str
    m: int
    n: int
    sigma: int
    rows: tuple


_HEADER = re.compile(r"m=(\d+)\s+n=(\d+)\s+sigma=(\d+)")


def parse_corpus_text(text, name="<corpus>"):
    header = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            mt = _HEADER.fullmatch(line)
            if not mt:
                raise DomainError(f"{name}:{lineno}: expected 'm=.. n=.. sigma=..' header")
            header = tuple(int(x) for x in mt.groups())
            continue
        parts = [p.strip() for p in line.split("|")]
        if len(parts) != 3:
            raise DomainError(f"{name}:{lineno}: expected three '|'-separated columns")
        members = tuple(x.strip() for x in parts[0].split(","))
        profile = tuple(Fraction(x) for x in parts[1].strip("()").split(","))
        rows.append(CorpusRow(lineno, members, profile, parts[2]))
    if header is None:
        raise DomainError(f"{name}: empty corpus file")
    return CorpusTable(name, *header, tuple(rows))


def bundled_corpus_dir():
    return Path(str(resources.files("speh_poles") / "data" / "reference"))


def load_corpus(directory=None):
    directory = Path(directory) if directory else bundled_corpus_dir()
    if not directory.is_dir():
        raise FileNotFoundError(f"corpus directory {directory} not found")
    files = sorted(directory.glob("*.txt"))
    if not files:
        raise FileNotFoundError(f"no corpus files in {directory}")
    return [parse_corpus_text(f.read_text(), f.name) for f in files]


@dataclass
class Mismatch:
    table: str
    row: object
    message: str

    def __str__(self):
        where = f"{self.table}" + (f" line {self.row}" if self.row is not None else "")
        return f"{where}: {self.message}"


def compare_table(corpus_table, cap=DEFAULT_CAP):
    """Re-derive a table and list every disagreement with the corpus."""
    ct = corpus_table
    table = build_table(ct.m, ct.n, ct.sigma, cap)
    out = []
    by_members = {tuple(sorted(str(w) for w in row.members)): row for row in table.rows}
    seen = set()
    for crow in ct.rows:
        key = tuple(sorted(crow.members))
        row = by_members.get(key)
        if row is None:
            out.append(Mismatch(ct.name, crow.line, f"orbit {{{','.join(crow.members)}}} not produced"))
            continue
        seen.add(key)
        if row.profile != crow.profile:
            out.append(Mismatch(
                ct.name, crow.line,
                f"profile {format_profile(crow.profile)} != derived {format_profile(row.profile)}",
            ))
        try:
            expected = canonicalize(parse(crow.expr_text))
        except DomainError as exc:
            out.append(Mismatch(ct.name, crow.line, f"unparsable expression: {exc}"))
            continue
        if not equal(expected, row.expr):
            out.append(Mismatch(
                ct.name, crow.line,
                f"expression differs\n  corpus : {render_factored(expected)}\n  derived: {render_factored(row.expr)}",
            ))
        elif render_factored(expected) != render_factored(row.expr):
            out.append(Mismatch(ct.name, crow.line, "canonical renderings differ"))
    for key, row in by_members.items():
        if key not in seen:
            out.append(Mismatch(ct.name, None, f"derived orbit {{{','.join(key)}}} missing from corpus"))
    return out
