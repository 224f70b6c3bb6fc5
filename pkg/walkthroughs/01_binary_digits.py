"""k_n of GF(2)[x] against the primitive filtration and binary digit counts."""

from ukrull.kalg import poly_algebra, primitive_filtration
from ukrull.krull import krull_in

D = 32
H = poly_algebra(1, 2 * D)
for n in range(4):
    spaces, cert = krull_in(H.module, n, D)
    prim = primitive_filtration(H, n)
    degrees = [d for d in range(D + 1) if spaces[d].dim]
    same = all(prim[d] == spaces[d] for d in range(1, D + 1))
    print(f"k_{n}: degrees {degrees} (exact through {cert}); equals primitives: {same}")
