"""Exact PSD certification of Gram matrices.

Run:  python demos/03_gram_psd_certificates.py
"""

from fractions import Fraction

from rookchar import (
    RationalMatrix,
    enumerate_rn,
    gram_matrix,
    make_state,
    psd_certificate,
)
from rookchar.states import I_STAR_J, STAR_JI

state = make_state(alpha=["1/2", "1/3"], beta=["1/6"], mark=(1, "1/2"))

# Gram matrices over all of R_2, under both ordering conventions the
# literature uses; the certificates are exact pivot sequences.
elements = list(enumerate_rn(2))
for ordering in (STAR_JI, I_STAR_J):
    report = gram_matrix(state, elements, ordering)
    print(f"ordering {ordering}: verdict {report.certificate.verdict}")
    print("  pivots:", [str(p) for p in report.certificate.pivots])

# The certifier is exact in both directions: a failed matrix comes back with
# a rational witness vector, not a floating-point guess.
bad = RationalMatrix.from_rows([[0, 1], [1, 0]])
cert = psd_certificate(bad)
print("\n[[0,1],[1,0]]:", cert.verdict, "witness", cert.witness)
print("quadratic form at the witness:", bad.quadratic_form(cert.witness))

tight = RationalMatrix.from_rows([[1, Fraction(1, 4)], [Fraction(1, 4), Fraction(1, 4)]])
print("\n[[1,1/4],[1/4,1/4]]:", psd_certificate(tight).pivots)
