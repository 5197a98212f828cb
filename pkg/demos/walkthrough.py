"""Follow one knot through every layer: parameters, state sum, degrees, surfaces.

Run with ``python3 demos/walkthrough.py``.
"""

from montesinos_slopes.bracket import kauffman_oracle
from montesinos_slopes.colored_jones import state_sum
from montesinos_slopes.hatcher_oertel import (build_seifert_system, closed_form_surface, describe,
                                              matching_system, surface_summary)
from montesinos_slopes.jones_slope import brute_force_max_phi, closed_form_degree, reduced_max_R
from montesinos_slopes.params import knot, writhe_and_framing


def main():
    k = knot((-4, -1), (2, -1), (2, -1))
    print(k.descriptor(), k.case_tag.value, "disc", k.disc, "period", k.period)
    print("tangle values", k.fr, k.fs, k.ft)
    print("writhe, framing, correction", writhe_and_framing(k))

    # the colored Jones polynomial at the first few colors
    for n in range(0, 4):
        j = state_sum(k, n)
        print(f"J({n + 1}) has {j.term_count()} terms, max degree {j.max_degree()}")
    print("J(2) =", state_sum(k, 1))
    print("bracket oracle agrees:", kauffman_oracle(k) == state_sum(k, 1))

    # three routes to the maximal degree
    qq = closed_form_degree(k)
    print("quasi-quadratic", qq.as_dict())
    for n in range(0, 7):
        brute, argmax = brute_force_max_phi(k, n)
        reduced, pts = reduced_max_R(k, n)
        print(f"  n={n}: brute {brute} reduced {reduced} closed {qq.evaluate(n + 1)} "
              f"maximisers {pts}")

    # the essential surface that realises the slope
    print(describe(build_seifert_system(k)))
    print(describe(matching_system(k)))
    s = closed_form_surface(k)
    print("boundary slope", s.boundary_slope, "= a", qq.a)
    print("chi/#S", s.chi_ratio, "= b", qq.b)
    print(surface_summary(k))


if __name__ == "__main__":
    main()
