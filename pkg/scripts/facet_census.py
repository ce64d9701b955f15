#!/usr/bin/env python3
"""Census of the arc complexes: sizes, facet counts, flip diameters.

Prints one table per surface family.  The polygon column reproduces the
Catalan numbers, crowns the central binomial coefficients, and the full
Moebius complexes the powers of four; flip diameters of crowns follow 2n-2.
"""

from arclab.arcs import crown, mobius_crown, polygon
from arclab.build import arc_complex, inner_complex
from arclab.certify import flip_graph, graph_diameter
from arclab.simplicial import dimension, euler_characteristic


def row(name, c, diameter=False):
    d = graph_diameter(flip_graph(c)) if diameter else ""
    print(
        f"{name:<16} V={c.n_vertices:<4} facets={len(c.facets):<5} "
        f"dim={dimension(c):<3} chi={euler_characteristic(c):<3} "
        + (f"flip-diameter={d}" if diameter else "")
    )


def main() -> None:
    for n in range(4, 10):
        row(f"polygon({n})", arc_complex(polygon(n)), diameter=n <= 7)
    print()
    for n in range(1, 7):
        row(f"crown({n})", arc_complex(crown(n)), diameter=True)
    print()
    for n in range(1, 6):
        row(f"mobius({n})", arc_complex(mobius_crown(n)), diameter=n <= 4)
    print()
    for n in range(1, 8):
        row(f"inner-mobius({n})", inner_complex(mobius_crown(n)))


if __name__ == "__main__":
    main()
