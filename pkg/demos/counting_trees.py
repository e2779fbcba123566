"""Counting assembly trees: the three independent engines agree.

An assembly tree records how a connected graph is built up from its
vertices: leaves are single vertices, the root is the whole vertex set,
and every join of two parts must be witnessed by a crossing edge. This
walk-through counts them three ways and evaluates the closed forms.
"""

from asmtree import (
    closed_form,
    count_connected_rule,
    count_edge_rule,
    enumerate_edge_rule,
    family,
    trees_from_gluing_sequences,
)


def main():
    print("== subset DP vs explicit enumeration vs gluing sequences ==")
    for name, g in [
        ("path P6", family("path", [6])),
        ("cycle C6", family("cycle", [6])),
        ("star with 5 arms", family("star", [5])),
        ("double star, 3 arms of length 2", family("star2", [3])),
        ("K4", family("complete", [4])),
        ("K_{2,3}", family("complete_multipartite", [2, 3])),
    ]:
        dp = count_edge_rule(g)
        enum = len(enumerate_edge_rule(g))
        glue = len(trees_from_gluing_sequences(g))
        print(f"  {name:34s} dp={dp:6d}  enum={enum:6d}  gluing={glue:6d}")
        assert dp == enum == glue

    print()
    print("== closed forms ==")
    print("  paths follow the Catalan numbers:")
    print("   ", [closed_form("path", n) for n in range(1, 10)])
    print("  cycles are n/2 times that:")
    print("   ", [closed_form("cycle", n) for n in range(3, 10)])
    print("  stars are factorials:")
    print("   ", [closed_form("star", n) for n in range(1, 8)])
    print("  double stars mix both flavors:")
    print("   ", [closed_form("star2", n) for n in range(1, 6)])
    print("  complete graphs give odd double factorials:")
    print("   ", [closed_form("complete", n) for n in range(1, 8)])

    print()
    print("== the laxer connected rule (children just partition the label) ==")
    for name, g in [
        ("path P5", family("path", [5])),
        ("cycle C5", family("cycle", [5])),
        ("star with 4 arms", family("star", [4])),
        ("K4", family("complete", [4])),
    ]:
        print(f"  {name:22s} edge rule={count_edge_rule(g):5d}   "
              f"connected rule={count_connected_rule(g):5d}")

    print()
    print("== caterpillars: no closed form is known, but counting works ==")
    for n in range(1, 6):
        g = family("caterpillar", [n])
        print(f"  {n} spine vertices ({g.n:2d} total): {count_edge_rule(g)}")


if __name__ == "__main__":
    main()
