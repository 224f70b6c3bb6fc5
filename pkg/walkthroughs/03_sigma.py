"""sigma_* of free modules, of F(1) x F(2), and of H*(K(Z/2, 1))."""

import warnings

from ukrull.kalg import kvm
from ukrull.krull import CertificationWarning, module_presentation, sigma
from ukrull.symseq import fixed_point_table
from ukrull.umod import free, free_presentation, tensor

warnings.simplefilter("ignore", CertificationWarning)

for m in (1, 2):
    dims = [sigma(free_presentation(m), n, 16).module.dim(0) for n in range(4)]
    print(f"sigma_n F({m}) in degree 0, n = 0..3:", dims)

T = module_presentation(tensor(free(1, 32), free(2, 32)), 16)
E = sigma(T, 3, 16, top=0)
print("sigma_3 (F(1) x F(2)): dim", E.module.dim(0))
for H, fixed in sorted(fixed_point_table(E).items(), key=lambda kv: len(kv[0])):
    print(f"  fixed points of a subgroup of order {len(H)}: {fixed[0]}")

U = module_presentation(kvm(1, 32).module, 16)
print("sigma_n U(F(1)) in degree 0:", [sigma(U, n, 16, top=0).module.dim(0) for n in range(4)])
