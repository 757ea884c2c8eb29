"""Restricting canonical basis elements to a parabolic subalgebra.

For u a minimal coset representative and w arbitrary, (T_{u^-1} C_w)|_J is a
nonnegative combination of the subgroup's canonical basis.  The hybrid bases
TC^J interpolate between the standard basis (J empty) and the canonical one
(J = S), and make those coefficients visible as expansion coordinates.

Run:  python3 demos/restriction_and_hybrid.py
"""

from heckekl import (
    HybridBasisSpec,
    KLCache,
    coxeter_system,
    dihedral_restriction_formula,
    expand_in_hybrid,
    format_word,
    hybrid_element,
    restriction_coeffs,
)


def show(s, w):
    return format_word(s.word(w)) or "e"


def main():
    s = coxeter_system("A3")
    cache = KLCache(s)
    J = frozenset({1, 2})

    print(f"group {s.type_string}, J = {sorted(J)}")
    print("\nhybrid basis elements TC^J_w = T_(quotient part) * C_(subgroup part):")
    for word in ([2], [1, 2], [3, 1, 2]):
        w = s.element_from_word(word)
        el = hybrid_element(cache, HybridBasisSpec(J), w)
        terms = ", ".join(
            f"({p})*T_{{{show(s, x)}}}"
            for x, p in sorted(el.terms.items(), key=lambda kv: s.sort_key(kv[0]))
        )
        print(f"  TC_{{{show(s, w)}}} = {terms}")

    print("\nrestriction coefficients of C_w against the coset of u:")
    u = s.element_from_word([2, 3])
    for word in ([1, 2, 3], [1, 2, 3, 1], [1, 2, 3, 1, 2]):
        w = s.element_from_word(word)
        coeffs = restriction_coeffs(cache, u, w, J)
        pretty = {show(s, v): str(p) for v, p in coeffs.items()} or "0"
        print(f"  u = {show(s, u):>5}, w = {show(s, w):>9}  ->  {pretty}")

    print("\nexpanding a full canonical column in the hybrid basis:")
    w = s.longest_element()
    coords = expand_in_hybrid(cache, cache.kl_element(w), HybridBasisSpec(J))
    for x, p in sorted(coords.items(), key=lambda kv: s.sort_key(kv[0])):
        print(f"  coefficient of TC_{{{show(s, x)}}}: {p}")

    # dihedral groups admit a three-case closed form for the same data
    d = coxeter_system("I2(7)")
    dcache = KLCache(d)
    print(f"\nclosed form vs pipeline in {d.type_string}, J = {{1}}:")
    mismatches = 0
    for u in d.min_coset_reps({1}, "left"):
        for w in d.elements():
            if dihedral_restriction_formula(d, u, w) != restriction_coeffs(dcache, u, w, {1}):
                mismatches += 1
    print(f"  {len(d.min_coset_reps({1}, 'left')) * d.order} pairs checked, {mismatches} mismatches")


if __name__ == "__main__":
    main()
