"""Walk through the compound A1 point: one deformation datum, the
enlarged cone, and the pencil xy - u^2 - t z^p it produces.

Run:  python3 demos/affine_smoothing.py
"""

from toricdeform.cox import binomials, boundary_monomial, pretty, trinomials
from toricdeform.datum import build_tilde, validate_datum
from toricdeform.oracle import hilbert_basis
from toricdeform.presets import ca1_alias, ca1_datum, ca1_sigma


def main():
    sigma = ca1_sigma()
    print("sigma rays:", sigma.rays)

    hb = hilbert_basis(sigma.dual())
    print("dual cone semigroup generators:", hb.generators)
    print("  (four generators, one relation: the xy = u^2 wall)")

    for p in (1, 2, 3):
        d = ca1_datum(p)
        rep = validate_datum(d)
        print("\np = %d, datum %s" % (p, "valid" if rep.ok else "INVALID"))

        t = build_tilde(d)
        alias = ca1_alias(t.rays)
        for ray, prov in zip(t.rays, t.provenance):
            print("  ray %-16s from %s" % (ray, "; ".join(prov)))
        print("  w~ =", t.w_tilde)
        print("  pencil:  ", pretty(trinomials(t)[0], t.rays, alias))
        print("  t1 -> 0: ", pretty(binomials(t)[0], t.rays, alias))
        print("  boundary:", pretty(boundary_monomial(t), t.rays, alias))


if __name__ == "__main__":
    main()
