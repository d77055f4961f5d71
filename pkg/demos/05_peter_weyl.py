"""Matrix coefficients as sections, and exact Peter-Weyl expansion.

Every entry of a weight-m block, evaluated on a factorized point, is a
section: a polynomial in t, t^-1 and the odd coordinates.  Conversely,
every section decomposes exactly over those entries, except for one famous
leftover at weight zero.
"""

import json

from supercircle import Section, expand, make_pi_m, matrix_coefficients, reconstruct


def main():
    print("== the entry sections of pi(1, +) ==")
    sections = matrix_coefficients(make_pi_m(1, "+"))
    for (i, j), sec in sorted(sections.items()):
        print("entry (%d, %d): %s" % (i, j, sec))

    print()
    print("== expanding t^2 * theta ==")
    f = Section.monomial("su11", 2, ["theta"])
    res = expand(f)
    for (label, entry), coef in sorted(res.coefficients.items()):
        print("coefficient %s at entry %s: %s" % (label, entry, coef))
    print("residual:", res.residual)
    print("reconstruct matches:", reconstruct(res.coefficients, "su11") == f)

    print()
    print("== the weight-zero leftover ==")
    g = Section.monomial("su11", 0, ["theta", "eta"])
    res = expand(g)
    print("expanding theta*eta gives no coefficients:", res.coefficients)
    print("the residual is the section itself:", res.residual == g)
    print("(the span of weight-zero matrix coefficients covers 1, theta and")
    print(" eta, but not theta*eta; the expansion reports this exactly")
    print(" instead of hiding it)")

    print()
    print("== the same, through JSON ==")
    print(json.dumps(expand(g).to_json(), sort_keys=True, indent=2))


if __name__ == "__main__":
    main()
