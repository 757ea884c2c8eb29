"""Factoring the canonical-basis change-of-matrix into nonnegative steps.

Refining the basis one generator at a time — standard basis, then hybrid
over {1}, then over {1,2}, ... up to the canonical basis — factors the KL
matrix into unitriangular pieces whose entries are polynomials in q with
nonnegative coefficients.

Run:  python3 demos/factorization.py
"""

from heckekl import KLCache, coxeter_system, factorize_chain, kl_matrix, matmul


def main():
    for group in ("A2", "A3", "B3"):
        s = coxeter_system(group)
        cache = KLCache(s)
        factors = factorize_chain(cache)
        prod = factors[0]
        for m in factors[1:]:
            prod = matmul(prod, m)
        ok = prod.same_entries(kl_matrix(cache))
        nonneg = all(m.is_nonneg_poly_matrix() for m in factors)
        sizes = " * ".join(f"M[{sorted(m.I)}->{sorted(m.J)}]" for m in factors)
        print(f"{s.type_string}: {sizes}")
        print(f"  product equals KL matrix: {ok}; all entries in Z>=0[q]: {nonneg}")

    # peek inside the smallest example
    s = coxeter_system("A2")
    cache = KLCache(s)
    f1, f2 = factorize_chain(cache)
    print("\nA2 factors as dense grids (rows/columns in canonical order):")
    for name, m in (("step {} -> {1}", f1), ("step {1} -> {1,2}", f2)):
        print(f"--- {name}")
        print(m.to_csv())
    print("the same data is available from the command line:")
    print("  heckekl factorize --group A2 --format csv")
    print("  heckekl factorize --group B3 --output b3_factors.json")


if __name__ == "__main__":
    main()
