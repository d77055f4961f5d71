"""Group points: involutions, membership, and factorization.

The unitary supergroups are carved out of the invertible 1|1 matrices by an
antiholomorphic involution sigma; their points factor uniquely through a
circle coordinate t and two odd coordinates theta and eta.
"""

from supercircle import (
    defactorize,
    factorize,
    membership,
    sigma_su,
    sl11_generic_ring,
    su11_chart_ring,
)


def main():
    print("== sigma is an involution on generic unimodular points ==")
    gens, p = sl11_generic_ring()
    print("generic point entry a      =", p.a)
    q = sigma_su(p)
    print("sigma moves it:  a becomes =", q.a)
    print("sigma(sigma(p)) == p       :", sigma_su(q) == p)

    print()
    print("== membership diagnostics ==")
    for group in ("su11", "su11_minus"):
        cgens, pts = su11_chart_ring(group)
        point = pts[0]
        ok, diag = membership(point, group)
        print("%s chart point in %s: %s (%s)" % (group, group, ok, diag))
        other = "su11_minus" if group == "su11" else "su11"
        ok, diag = membership(point, other)
        print("%s chart point in %s: %s" % (group, other, ok))
        print("   diagnostic:", diag)

    print()
    print("== factorization round trip ==")
    cgens, pts = su11_chart_ring("su11")
    point = pts[0]
    triple = factorize(point, "su11")
    print("t     =", triple.t)
    print("theta =", triple.theta)
    print("eta   =", triple.eta)
    back = defactorize(triple.t, triple.theta, triple.eta)
    print("defactorize(factorize(p)) == p :", back == point)
    print("t * star(t) =", triple.t * triple.t.star())


if __name__ == "__main__":
    main()
