"""The cone over a hexagon admits two genuinely different Minkowski
decompositions of its cross-section, hence two smoothing components.

Decomposition A: three segments (a zonotope).  Decomposition B: two
triangles.  Same singularity, different equations downstairs.
"""

from toricdeform.cox import binomials, pretty, trinomials
from toricdeform.datum import build_tilde, validate_datum
from toricdeform.presets import hexagon_data


def show(tag, d):
    rep = validate_datum(d)
    print("%s: %d summands, %s" % (tag, len(d.summands),
                                   "valid" if rep.ok else "INVALID"))
    for s in d.summands:
        print("   summand verts",
              " ".join("(%s)" % ", ".join(str(x) for x in v)
                       for v in s.vertices))
    t = build_tilde(d)
    print("   %d rays in the enlarged cone" % len(t.rays))
    for f in trinomials(t):
        print("   trinomial:", pretty(f, t.rays))
    for f in binomials(t):
        print("   binomial: ", pretty(f, t.rays))
    print()


def main():
    a, b = hexagon_data()
    show("A (three segments)", a)
    show("B (two triangles)", b)
    # k differs: A deforms in two parameters, B in one
    print("components meet only in the undeformed fiber")


if __name__ == "__main__":
    main()
