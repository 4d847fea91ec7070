"""Orbit tables of the conjugation action on the pair basis.

The closed-form tables agree with direct enumeration; the full positive
cycle shows the halved extra orbit in even degree.
"""

from braidcryst import (
    BlockSpec,
    block_cycle,
    closed_form_orbits,
    enumerate_orbits,
    iter_block_specs,
    torsion_element,
)


def render(table):
    return "\n".join(
        "  " + " -> ".join(f"{{{i},{j}}}" for (i, j) in orbit)
        for orbit in table.orbits
    )


def main():
    for blocks, n in [((3,), 5), ((3, 3), 7), ((7,), 7)]:
        spec = BlockSpec(n, blocks)
        table = closed_form_orbits(spec)
        match = table.orbits == enumerate_orbits(torsion_element(spec)).orbits
        print(f"delta with blocks {blocks} in n={n} (closed form == enumeration: {match})")
        print(render(table))
        print()

    print("full positive cycle: orbit sizes per degree")
    for n in range(3, 10):
        sizes = sorted(enumerate_orbits(block_cycle(0, n, n)).sizes(), reverse=True)
        note = "  <- extra halved orbit" if n % 2 == 0 else ""
        print(f"  n={n}: {sizes}{note}")
    print()

    print("every table partitions the C(n,2) pairs; sizes for all specs, n=9:")
    for spec in iter_block_specs(9):
        sizes = closed_form_orbits(spec).sizes()
        print(f"  blocks {spec.blocks}: {sizes} (total {sum(sizes)})")


if __name__ == "__main__":
    main()
