"""The Krull filtration k_n, the nilpotent filtration and the invariant sigma.

k_n M is the kernel of the unit ``M -> H~^{(x) n+1} (x) Tbar^{n+1} M``: the
kernel K satisfies Tbar^{n+1} K = 0 (its inclusion is adjoint to the zero
map) and every submodule in U_n maps to zero by naturality.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import List, Optional, Sequence

from . import gf2
from .errors import CertificationError, NotLocallyFinite, WindowError
from .lannes import EquivariantModule, group_by_monomial, tbar_data, tbar_iter
from .umod import (Module, ModuleMap, PresentedModule, evaluation_map, present, quotient,
                   realize, submodule)


class CertificationWarning(UserWarning):
    pass


def certified_degree(P: PresentedModule, n: int, D: int) -> int:
    """Degree through which k_n computed from P is exact for the module P presents.

    A windowed P presents the truncation M' = F / R_{<= window}; k_n M' maps
    into k_n M and is the identity in degrees <= window, so the computed
    spaces are exact for M' and a degreewise lower bound for M there.
    """
    if P.window is None:
        return D
    return min(D, P.window)


def minimal_tbar(P: PresentedModule, top: int):
    """A minimal presentation of Tbar M' (M' the module P presents exactly).

    Returns ``(P1, T, iso)`` with T = realize(Tbar P) through at least
    ``top`` and iso: realize(P1, top) -> T. Re-presenting with relation
    window max(relation degree, generator degree) is exact: the new kernel
    is generated by the old relations and by rewriting the old generators.
    """
    data = tbar_data(P, 1)
    TP = data.presentation
    g = TP.max_generator_degree()
    r = max(TP.max_relation_degree(), g, top, 0)
    T = realize(TP, r)
    if g < 0:
        P1 = PresentedModule((), (), (), (), name=TP.name)
    else:
        P1 = present(T, g, r, name=TP.name)
        P1.window = None
    M1 = realize(P1, top)
    iso = evaluation_map(P1, M1, T)
    return P1, M1, T, iso, data


def krull_spaces(P: PresentedModule, n: int, D: int, M: Optional[Module] = None) -> List[gf2.Subspace]:
    """k_n M' as subspaces of realize(P, D), M' the module P presents.

    Uses k_n M = eta^{-1}(H~ (x) k_{n-1} Tbar M) for the one-slot unit, with
    Tbar M re-presented minimally at each level.
    """
    M = realize(P, D) if M is None else M
    if n < 0 or not P.gen_degrees:
        return [gf2.Subspace(M.dim(d)) for d in range(M.top + 1)]
    P1, M1, T, iso, data = minimal_tbar(P, max(D - 1, 0))
    if n == 0:
        inner = [gf2.Subspace(T.dim(e)) for e in range(T.top + 1)]
    else:
        K1 = krull_spaces(P1, n - 1, max(D - 1, 0), M1)
        inner = [gf2.Subspace(T.dim(e), [iso(e, v) for v in K1[e].basis]) if e <= M1.top
                 else gf2.Subspace(T.dim(e)) for e in range(T.top + 1)]
    proj = T.realization
    out = []
    for d in range(M.top + 1):
        cols = []
        offs = {}
        for w, gi in M.labels[d]:
            v = 0
            for e, rel in group_by_monomial(data.unit_terms(gi, w)).items():
                a = e[0]
                q = inner[d - a].quotient_coords(proj.project_terms(d - a, rel))
                if a not in offs:
                    offs[a] = sum(inner[d - b].codim for b in offs)
                v ^= q << offs[a]
            cols.append(v)
        out.append(gf2.Subspace(M.dim(d), gf2.kernel(cols)))
    return out


def k_n(P: PresentedModule, n: int, D: int, M: Optional[Module] = None):
    """k_n of the presented module through degree D.

    Returns ``(K, inclusion)`` with inclusion into realize(P, D).
    """
    if P.window is not None and D > P.window:
        raise WindowError(f"degree {D} beyond the presentation window {P.window}", D)
    M = realize(P, D) if M is None else M
    cert = certified_degree(P, n, D)
    K, inc = submodule(M, krull_spaces(P, n, D, M), f"k{n}({P.name})", cert)
    return K, inc


def krull_filtration(P: PresentedModule, n_max: int, D: int) -> List[List[gf2.Subspace]]:
    M = realize(P, D)
    return [krull_spaces(P, n, D, M) for n in range(n_max + 1)]


def _relative_quotient(M: Module, big, small, name, cert):
    """big / small where both are subspace families of M and small <= big."""
    S, inc = submodule(M, big, name, cert)
    rel = [gf2.Subspace(big[d].dim, [big[d].coords(v) for v in small[d].basis])
           for d in range(M.top + 1)]
    Q, _ = quotient(S, rel, name, cert)
    return Q


def kbar_n(P: PresentedModule, n: int, D: int) -> Module:
    """k_n M / k_{n-1} M (with kbar_0 = k_0)."""
    M = realize(P, D)
    big = krull_spaces(P, n, D, M)
    small = krull_spaces(P, n - 1, D, M)
    return _relative_quotient(M, big, small, f"kbar{n}({P.name})", certified_degree(P, n, D))


# ---------------------------------------------------------------------------
# nilpotent filtration


@dataclass
class NilResult:
    """nil_1 M and R_0 M with their certification data."""

    nil: Module
    inclusion: ModuleMap
    reduced: Module
    projection: ModuleMap
    cert: int
    warning_degree: Optional[int]


def p0_matrix(M: Module, d: int) -> List[int]:
    return M.sq_matrix(d, d)


def nil_1(M: Module) -> NilResult:
    """nil_1 M: classes killed by some power of P_0 = Sq^{|x|}.

    An element of degree d is tested along its P_0-orbit through the window;
    the answer is certified through ``cert // 2`` (every class there gets at
    least one P_0 step). ``warning_degree`` is the lowest degree holding a
    class whose orbit leaves the window alive.
    """
    cert = M.cert // 2
    Mt = M.restrict_top(cert)
    spaces = []
    warning = None
    for d in range(cert + 1):
        n = M.dim(d)
        cols = [1 << i for i in range(n)]
        e = d
        while d > 0 and 2 * e <= M.cert and any(cols):
            cols = [M.sq(e, e, v) for v in cols]
            e *= 2
        if d == 0:
            cols = [1 << i for i in range(n)]
        if any(cols) and warning is None and d > 0:
            warning = d
        spaces.append(gf2.Subspace(n, gf2.kernel(cols)))
    N, inc = submodule(Mt, spaces, f"nil1({M.name})", cert)
    R, proj = quotient(Mt, spaces, f"R0({M.name})", cert)
    return NilResult(N, inc, R, proj, cert, warning)


def R_0(M: Module) -> Module:
    return nil_1(M).reduced


def is_locally_finite(M: Module) -> Optional[int]:
    """Return e such that M is certified zero above e, or None.

    M must vanish on (e, cert] with 2e <= cert: an admissible Sq^I x with
    |x| <= e passes through degrees that at most double, so its first degree
    above e is at most 2e and hence already zero.
    """
    e = max((d for d in range(M.cert + 1) if M.dim(d)), default=0)
    return e if 2 * e <= M.cert else None


@dataclass
class LocallyFiniteNil:
    top: int
    nil_dims: List[List[int]]  # nil_s dims by degree, for s = 0..top+1
    R: List[int]  # dim R_s M = dim M^s

    def nil(self, s: int) -> List[int]:
        return self.nil_dims[min(s, len(self.nil_dims) - 1)]


def nil_filtration_locally_finite(M: Module) -> LocallyFiniteNil:
    """nil_s M = M^{>=s} and R_s M = M^s for a locally finite module."""
    e = is_locally_finite(M)
    if e is None:
        raise NotLocallyFinite(f"{M.name} not certified locally finite within degree {M.cert}")
    dims = [M.dim(d) for d in range(e + 1)]
    nils = [[dims[d] if d >= s else 0 for d in range(e + 1)] for s in range(e + 2)]
    return LocallyFiniteNil(e, nils, dims)


# ---------------------------------------------------------------------------
# sigma


def _default_generation_degree(K: Module) -> int:
    g = -1
    for d in range(K.cert // 2 + 1):
        if K.dim(d):
            g = d
    return max(g, 0)


def present_krull(P: PresentedModule, n: int, D: int, gen_window: Optional[int] = None):
    """A presentation of k_n M whose realization matches k_n M through D."""
    K, inc = k_n(P, n, D)
    cert = K.cert
    g = _default_generation_degree(K) if gen_window is None else gen_window
    if g > cert:
        raise WindowError(f"generation degree {g} exceeds certified degree {cert}", g)
    Q = present(K, g, cert, name=f"k{n}({P.name})")
    R = realize(Q, cert)
    if R.dims != K.dims[: cert + 1]:
        raise WindowError(f"generators through degree {g} do not generate k_{n} through {cert}", g)
    return Q, K


def sigma(P: PresentedModule, n: int, D: int, gen_window: Optional[int] = None,
          top: Optional[int] = None) -> EquivariantModule:
    """sigma_n M = Tbar^n k_n M with its symmetric group action.

    Computed from the presentation of k_n M through ``window - g`` (g the top
    generator degree). Relations above the window can still shrink Tbar, so
    the window must be large enough for k_n M to be presented completely. A
    nonzero class in the top degree triggers a CertificationWarning since
    sigma_n M is finite.
    """
    Q, K = present_krull(P, n, D, gen_window)
    g = max(Q.max_generator_degree(), 0)
    exact = Q.window - g
    if exact < 0:
        raise WindowError(f"window {Q.window} too small for generators in degree {g}", exact)
    top = exact if top is None else min(top, exact)
    E = tbar_iter(Q, n, top)
    if top > 0 and E.module.dim(top):
        warnings.warn(f"sigma_{n} nonzero at its top certified degree {top}", CertificationWarning)
    return E


def sigma_sequence(P: PresentedModule, n_max: int, D: int, **kw) -> List[EquivariantModule]:
    return [sigma(P, n, D, **kw) for n in range(n_max + 1)]


# ---------------------------------------------------------------------------
# k_n inside a realized module


def module_presentation(M: Module, D: int, gen_window: Optional[int] = None) -> PresentedModule:
    """Present M with generators through D (or ``gen_window``) and relations
    through M.cert."""
    g = D if gen_window is None else gen_window
    return present(M, min(g, M.cert), M.cert, name=M.name)


def krull_in(M: Module, n: int, D: int, gen_window: Optional[int] = None, P=None):
    """k_n M as subspaces of M through D, with the certified degree."""
    if D > M.cert:
        raise WindowError(f"degree {D} beyond cert {M.cert}", D)
    P = module_presentation(M, D, gen_window) if P is None else P
    R = realize(P, D)
    ks = krull_spaces(P, n, D, R)
    ev = evaluation_map(P, R, M)
    spaces = [gf2.Subspace(M.dim(d), [gf2.apply(ev.matrix(d), v) for v in ks[d].basis])
              for d in range(D + 1)]
    return spaces, certified_degree(P, n, D)
