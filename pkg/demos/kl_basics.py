"""Canonical bases from scratch: columns, self-duality, and the smoothness boundary.

Run:  python3 demos/kl_basics.py
"""

from heckekl import (
    KLCache,
    KLOracle,
    bruhat_interval_element,
    coxeter_system,
    format_word,
    is_rationally_smooth,
)


def show(s, w):
    return format_word(s.word(w)) or "e"


def main():
    s = coxeter_system("A3")
    cache = KLCache(s)
    print(f"group {s.type_string}, order {s.order}")

    # a canonical-basis column: coefficients of C_w over the standard basis
    w = s.element_from_word([1, 2, 1, 3])
    print(f"\ncolumn of C_{{{show(s, w)}}} (length {s.length(w)}):")
    for x, p in sorted(cache.kl_column(w).items(), key=lambda kv: s.sort_key(kv[0])):
        print(f"  {show(s, x):>10}  {p}")

    # every column is fixed by the bar involution
    assert all(cache.kl_element(v).bar() == cache.kl_element(v) for v in s.elements())
    print("\nbar(C_w) = C_w for all 24 elements")

    # an independent recursion computes the same polynomials
    oracle = KLOracle(s)
    assert all(
        cache.kl_poly(y, x) == oracle.kl_poly(y, x) for y in s.elements() for x in s.elements()
    )
    print("dual-path check: production recursion == oracle recursion on all pairs")

    # the interval element sum(q^(l(w)-l(y)) T_y) equals C_w most of the time;
    # in S4 it fails exactly at the two pattern permutations 3412 and 4231
    rough = [
        v
        for v in s.elements()
        if cache.kl_element(v) != bruhat_interval_element(s, v)
    ]
    print(f"\nC_w != interval element for {len(rough)} permutations:")
    for v in rough:
        print(
            f"  one-line {v}, word {show(s, v)}, "
            f"smooth={is_rationally_smooth(s, v)}, "
            f"h_e_w = {cache.kl_poly(s.identity, v)}"
        )


if __name__ == "__main__":
    main()
