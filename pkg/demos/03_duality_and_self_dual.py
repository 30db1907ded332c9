"""Orthogonal complements of subspaces, code duality, and an exhaustive
search for self-dual quasi-cyclic codes.

The inner product is the coordinate dot product in the basis
1, gamma, ..., gamma^{n-1}.  Dualizing a code replaces every word by its
orthogonal complement; a code is self-dual when that map fixes it setwise.
The search finds, for every modulus m, the inclusion-minimal self-dual
m-quasi-cyclic codes by taking connected components of the pairing
V <-> V-perp at the quasi-orbit level.
"""

from orbitcodes import (
    code_from_generators,
    dualize,
    from_exponents,
    is_cyclic,
    make_field,
    orthogonal_complement,
    self_dual_search,
)


def main():
    f32 = make_field(2, 5)
    V = from_exponents(f32, [0, 13, 14])
    print("V  =", sorted(V.exponents))
    print("V~ =", sorted(orthogonal_complement(V).exponents))

    C = code_from_generators(f32, 1, [V])
    D = dualize(C)
    print("\ncyclic orbit code:", C.params(), "cyclic:", is_cyclic(C))
    print("its dual:         ", D.params(), "cyclic:", is_cyclic(D))
    print("dual of dual equals the original:", dualize(D).words == C.words)

    for n in (4, 6):
        field = make_field(2, n)
        hits = self_dual_search(field)
        primary = [h for h in hits if h.constant_dimension and h.single_generator]
        print(f"\nself-dual quasi-cyclic search over F_2^{n}: "
              f"{len(hits)} minimal codes, "
              f"{len(primary)} constant-dimension single-generator")
        for h in primary:
            print(f"  m={h.m}  params {h.params()}")
            for w in sorted(h.code.words, key=lambda w: w.exponents):
                print("    word:", sorted(w.exponents))


if __name__ == "__main__":
    main()
