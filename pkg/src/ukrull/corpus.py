"""Named modules used by the tests, the CLI and the walkthroughs."""

from __future__ import annotations

from .umod import (Module, ModuleMap, free, free_presentation, phi, point, present,
                   pullback, suspend, tensor, truncate_above)


def onto_top_class(M: Module, d: int, target: Module) -> ModuleMap:
    """The map M -> Sigma^d Z/2 reading the first basis coordinate in degree d."""
    mats = {e: [0] * M.dim(e) for e in range(M.top + 1)}
    mats[d] = [1 if i == 0 else 0 for i in range(M.dim(d))]
    return ModuleMap(M, target, mats, min(M.cert, target.cert))


def example62(D: int = 64) -> Module:
    """Pullback of Sigma F(3) ->> Sigma^4 Z/2 <<- Phi^2 F(1), through D."""
    A = suspend(free(3, D), 1)
    B = phi(phi(free(1, D)))
    Q = point(4, D)
    f = onto_top_class(A, 4, Q)
    g = onto_top_class(B, 4, Q)
    f.check()
    g.check()
    M, pa, pb = pullback(f, g, "M62")
    M.legs = (pa, pb)
    return M


def example62_presentation(D: int = 64):
    M = example62(D)
    return present(M, 4, D, name="M62"), M


def f1_tensor(m: int, D: int) -> Module:
    M = free(1, D)
    for _ in range(m - 1):
        M = tensor(M, free(1, D))
    return M


def f1_tensor_presentation(m: int, D: int = 0):
    """Presentation of F(1)^{(x) m}: generators sit in degrees m..2^m - 1 and
    relations are complete through max(D, 2^{m+1})."""
    W = max(D, 2 ** (m + 1))
    return present(f1_tensor(m, W), 2 ** m - 1, W, name=f"F(1)^{m}")


def sigma_z2(D: int) -> Module:
    """Sigma Z/2 = F(1)/F(1)^{>1}."""
    return truncate_above(free(1, D), 1)
