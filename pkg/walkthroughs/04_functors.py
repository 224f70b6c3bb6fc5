"""Functors on finite vector spaces: l of unstable modules and the Lambda^2 x Id splitting."""

from ukrull import genfun as G
from ukrull.lannes import tbar
from ukrull.umod import free_presentation

for n in (1, 2):
    L = G.l_of(free_presentation(n), 3)
    print(f"l(F({n})) dims on F2^0..F2^3:", list(L.dims), "degree", G.poly_degree(L))
    print(f"  Delta l(F({n})) = {list(G.delta(L).dims)}, l(Tbar F({n})) = "
          f"{list(G.l_of(tbar(free_presentation(n)), 2).dims)}")
print("r(Id) nonzero in degrees", [d for d, x in enumerate(G.r_of(G.identity_functor(3), 8)) if x])
rep = G.lambda2_tensor_splitting(3)
print("L = ker(Lambda^2 x Id -> Lambda^3): dims", rep.dims_L, "simple:", rep.simple)
