"""The tied-maximum instance: two lattice points share the top degree without cancelling.

Run with ``python3 demos/tie_case.py``.
"""

from montesinos_slopes.colored_jones import state_sum
from montesinos_slopes.jones_slope import (brute_force_max_phi, cancellation_exponent,
                                           cancellation_parity_check, reduced_max_R)
from montesinos_slopes.params import knot


def main():
    k = knot((-4, -1), (4, -1), (4, -1))
    print(k.descriptor(), k.case_tag.value, "disc", k.disc)
    for n in range(1, 4):
        top, pts = reduced_max_R(k, n)
        _, argmax = brute_force_max_phi(k, n)
        heads = sorted({a.head for a in argmax})
        signs = {h: "-" if cancellation_exponent(k, *h) % 2 else "+" for h in heads}
        deg = state_sum(k, n).max_degree()
        print(f"n={n}: max {top} at {pts}; head signs {signs}; "
              f"parity check {cancellation_parity_check(k, n, argmax)}; state sum degree {deg}")


if __name__ == "__main__":
    main()
