import re
from fractions import Fraction
from pathlib import Path

import pytest

from speh_poles.coset import Shuffle
from speh_poles.lfunc import equal, parse
from speh_poles.tables import (
    build_table,
    bundled_corpus_dir,
    compare_table,
    load_corpus,
    parse_corpus_text,
    render_json,
    render_latex,
    render_text,
    table_json,
)

LATEX_DIR = Path(__file__).parent / "data" / "reference_latex"
TABLES = {
    "m2n2s0": (2, 2, 0), "m2n2s1": (2, 2, 1), "m2n2s2": (2, 2, 2),
    "m2n3s2": (2, 3, 2), "m3n2s1": (3, 2, 1), "m3n3s3": (3, 3, 3),
}


# -- reading a stored tabular ------------------------------------------------


def _flatten_arrays(tex):
    """Multi-line orbit cells are stacked in an array; fold them into one line."""
    def fold(mt):
        return re.sub(r"\\\\", ",", mt.group(1))

    return re.sub(r"\\begin\{array\}\{c\}(.*?)\\end\{array\}", fold, tex, flags=re.S)


def _rows(tex):
    body = tex.split(r"\begin{tabular}{ccc}", 1)[1].split(r"\end{tabular}", 1)[0]
    body = _flatten_arrays(body)
    rows = [r.strip() for r in re.split(r"\\\\(?![a-z])", body)]
    rows = [r for r in rows if r]
    return [[c.strip() for c in r.split("&")] for r in rows[1:]]


def _labels(cell):
    return sorted(re.findall(r"\(\d+\)|\be\b", cell))


def _profile(cell):
    cell = re.sub(r"\\left|\\right|\\\{|\\\}|\$", "", cell)
    cell = re.sub(r"\\frac\{(\d+)\}\{(\d+)\}", r"\1/\2", cell)
    return tuple(Fraction(x) for x in cell.split(","))


def _norm_expr(cell):
    s = cell.strip().rstrip(".").strip().strip("$")
    s = re.sub(r"\\left|\\right", "", s)
    s = re.sub(r"L\((\d+)\+t\)", r"L(t+\1)", s)
    return re.sub(r"\s+", "", s)


def _stored(name):
    return _rows((LATEX_DIR / f"{name}.tex").read_text())


@pytest.mark.parametrize("name", TABLES)
def test_latex_matches_stored(name):
    ours = _rows(render_latex(build_table(*TABLES[name])))
    theirs = _stored(name)
    assert len(ours) == len(theirs)
    by_label = {tuple(_labels(r[0])): r for r in ours}
    for row in theirs:
        mine = by_label[tuple(_labels(row[0]))]
        assert _profile(mine[1]) == _profile(row[1])
        assert _norm_expr(mine[2]) == _norm_expr(row[2])
        assert equal(parse(mine[2].strip("$")), parse(row[2].strip().rstrip(".").strip("$")))


def test_latex_header_layout():
    tex = render_latex(build_table(2, 2, 1))
    assert tex.startswith("\\begin{tabular}{ccc}\n")
    assert "Orbit & $\\rho_{m,n}$ & $R(w,\\frac{m+n}{2}-\\sigma+t)$\\\\" in tex
    assert tex.rstrip().endswith("\\end{tabular}")
    last = _rows(tex)[-1]
    assert _norm_expr(last[2]).find("(L(1-t)+L(t+1))") > 0


def test_three_formats_agree():
    for dims in TABLES.values():
        table = build_table(*dims)
        tex_rows = _rows(render_latex(table))
        text_rows = [line.split(" | ") for line in render_text(table).splitlines()[1:]]
        json_rows = table_json(table)["rows"]
        for row, t, x, j in zip(table.rows, tex_rows, text_rows, json_rows):
            assert equal(parse(t[2].strip("$")), row.expr)
            assert equal(parse(x[2]), row.expr)
            assert equal(parse(j["expr"]), row.expr)
            assert j["orbit"] == [str(w) for w in row.members]


def test_text_layout():
    out = render_text(build_table(3, 2, 1))
    lines = out.splitlines()
    assert lines[0] == "m=3 n=2 sigma=1" and len(lines) == 10
    out = render_text(build_table(1, 1, 0))
    assert out.splitlines()[1:] == ["12 | (1/2,-1/2) | 1", "21 | (-1/2,1/2) | c^{-t-1/2} L(t+1)/L(t+2)"]


def test_text_output_is_a_corpus_file():
    for c in load_corpus():
        out = render_text(build_table(c.m, c.n, c.sigma))
        assert compare_table(parse_corpus_text(out, c.name)) == []


def test_json_render():
    out = render_json(build_table(1, 1, 0))
    assert '"expr": "c^{-t-1/2} L(t+1)/L(t+2)"' in out


# -- bundled corpus ------------------------------------------------------------


def test_corpus_complete():
    corpus = load_corpus()
    assert {(c.m, c.n, c.sigma) for c in corpus} == set(TABLES.values())
    sizes = {(c.m, c.n, c.sigma): sorted(len(r.members) for r in c.rows) for c in corpus}
    assert sizes[(2, 2, 0)] == [1] * 6
    assert sizes[(2, 2, 2)] == [2, 4]
    assert sizes[(2, 3, 2)] == [1, 1, 2, 2, 4]
    assert len(sizes[(3, 2, 1)]) == 9
    assert sizes[(3, 3, 3)] == [2, 2, 4, 4, 8]


def test_corpus_agrees_with_stored_latex():
    """The structured corpus and the stored tabulars describe the same rows."""
    for c in load_corpus():
        name = Path(c.name).stem
        pub = {tuple(_labels(r[0])): r for r in _stored(name)}
        assert len(pub) == len(c.rows)
        for row in c.rows:
            labels = tuple(sorted(Shuffle.parse(c.m, c.n, x).label() for x in row.members))
            r = pub[labels]
            assert _profile(r[1]) == row.profile
            assert equal(parse(row.expr_text), parse(r[2].strip().rstrip(".").strip("$")))


def test_corpus_regression_clean():
    for c in load_corpus():
        assert compare_table(c) == []


def test_perturbed_corpus_detected():
    text = (bundled_corpus_dir() / "m2n2s1.txt").read_text()
    bad = text.replace("(-1,0,0,1)", "(-1,0,1,0)")
    mism = compare_table(parse_corpus_text(bad, "m2n2s1.txt"))
    assert len(mism) == 1 and "profile" in mism[0].message
    bad = text.replace("L(t+2) L(t+3))", "L(t+2) L(t+4))")
    mism = compare_table(parse_corpus_text(bad, "m2n2s1.txt"))
    assert mism and all("expression differs" in m.message for m in mism)


def test_missing_corpus(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_corpus(tmp_path / "nope")
    with pytest.raises(FileNotFoundError):
        load_corpus(tmp_path)
