"""Finite-order elements and constructive conjugacy.

Shows the delta block construction, the odd-order dichotomy, and witness
conjugators between scrambled torsion elements.
"""

import random

from braidcryst import (
    BlockSpec,
    BraidWord,
    PairVector,
    QuotientElement,
    are_conjugate,
    conjugate,
    count_conjugacy_classes,
    element_order,
    finite_orders,
    iter_block_specs,
    mul,
    normalize,
    pairs,
    pure,
    torsion_element,
    torsion_element_word,
    torsion_witness,
)
from braidcryst.permutation import Permutation


def main():
    print("delta blocks: one odd block per window, concatenated")
    for blocks, n in [((3,), 3), ((5,), 5), ((3, 3), 7), ((3, 5), 9)]:
        spec = BlockSpec(n, blocks)
        g = torsion_element(spec)
        print(
            f"  n={n} blocks={blocks}: word '{torsion_element_word(spec)}', "
            f"order {element_order(g)}"
        )
    print()

    print("finite orders available per strand count:")
    for n in (3, 5, 7, 9, 10):
        print(f"  n={n}: {finite_orders(n)}")
    print()

    print("witness dichotomy: any odd-order permutation lifts to torsion")
    for text in ["(1,2,3)", "(1,2,3)(4,5,6,7)", "(1,2)(3,4)", "(1,2,3,4,5)"]:
        p = Permutation.from_text(7, text)
        w = torsion_witness(p)
        if w is None:
            print(f"  {text}: even order {p.order()}, no torsion lift exists")
        else:
            k = element_order(QuotientElement(p, w))
            print(f"  {text}: witness {w}, element order {k}")
    print()

    rng = random.Random(7)
    n = 7
    print("conjugacy is decided by the block structure; witnesses are exact:")
    specs = list(iter_block_specs(n))
    for _ in range(4):
        s1, s2 = rng.choice(specs), rng.choice(specs)
        noise = lambda: mul(
            normalize(BraidWord(n, tuple(rng.choice([1, -2, 3, -4, 5, -6]) for _ in range(6)))),
            pure(PairVector(n, tuple(rng.randint(-1, 1) for _ in pairs(n)))),
        )
        g = conjugate(torsion_element(s1), noise())
        h = conjugate(torsion_element(s2), noise())
        verdict, witness = are_conjugate(g, h)
        line = f"  blocks {s1.blocks} vs {s2.blocks}: {verdict}"
        if verdict:
            line += f", witness checks: {conjugate(g, witness) == h}"
        print(line)
    print()

    print("conjugacy classes of order-k torsion elements:")
    for n, k in [(3, 3), (7, 3), (9, 3), (10, 21), (12, 15)]:
        print(f"  n={n}, k={k}: {count_conjugacy_classes(n, k)} classes")


if __name__ == "__main__":
    main()
