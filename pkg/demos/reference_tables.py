"""
Re-deriving the reference tables
=================================

Each table lists orbits, their exponent profiles and the orbit sum of
normalization factors.  The bundled corpus holds the reference rows; here
they are re-derived and printed as LaTeX tabulars.
"""

from speh_poles.tables import build_table, compare_table, load_corpus, render_latex

for corpus in load_corpus():
    mism = compare_table(corpus)
    print(f"% {corpus.name}: {len(corpus.rows)} rows, {len(mism)} mismatches")
    print(render_latex(build_table(corpus.m, corpus.n, corpus.sigma)))
