"""Symmetric sequences of locally finite modules.

A symmetric object of arity n is an :class:`EquivariantModule` whose action
is indexed by all of Sigma_n. Permutations are tuples ``p`` with ``p[i]`` the
image of ``i``; products compose right to left. Representations are compared
through explicit maps where one exists and otherwise through fixed-point
dimensions under every subgroup.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import gf2
from .errors import UKrullError, WindowError
from .lannes import EquivariantModule, group_by_monomial, is_in_Un, tbar_data, tbar_iter
from .umod import (Module, ModuleMap, PresentedModule, direct_sum, free, kernel, cokernel,
                   hom_to_map, present, realize, submodule, tensor, tensor_index, tensor_maps)

Perm = Tuple[int, ...]


# ---------------------------------------------------------------------------
# permutation groups


def pmul(p: Perm, q: Perm) -> Perm:
    return tuple(p[i] for i in q)


def pinv(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def identity(n: int) -> Perm:
    return tuple(range(n))


@lru_cache(maxsize=None)
def symmetric_group(n: int) -> Tuple[Perm, ...]:
    return tuple(itertools.permutations(range(n)))


def closure(gens: Sequence[Perm], n: int) -> frozenset:
    out = {identity(n)}
    frontier = list(out)
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = pmul(g, p)
                if q not in out:
                    out.add(q)
                    nxt.append(q)
        frontier = nxt
    return frozenset(out)


@lru_cache(maxsize=None)
def subgroups(n: int) -> Tuple[frozenset, ...]:
    """All subgroups of Sigma_n (n <= 4 is instant; every one is 2-generated)."""
    G = symmetric_group(n)
    seen = set()
    for a in G:
        for b in G:
            seen.add(closure((a, b), n))
    return tuple(sorted(seen, key=lambda H: (len(H), sorted(H))))


def young_subgroup(l: int, m: int) -> frozenset:
    n = l + m
    return frozenset(p for p in symmetric_group(n) if all(p[i] < l for i in range(l)))


def wreath_subgroup(k: int, m: int) -> frozenset:
    """Sigma_k wr Sigma_m inside Sigma_{km}: permutations preserving the
    blocks {bm, ..., bm+m-1}."""
    out = []
    for p in symmetric_group(k * m):
        ok = True
        for b in range(k):
            tgt = p[b * m] // m
            if any(p[b * m + r] // m != tgt for r in range(m)):
                ok = False
                break
        if ok:
            out.append(p)
    return frozenset(out)


# ---------------------------------------------------------------------------
# constructors


def _degree_zero(dim: int, top: int = 0) -> Module:
    return Module([dim] + [0] * top, {}, top, top, None, f"Z/2^{dim}")


def with_action(M: Module, n: int, rule: Callable[[Perm, int], List[int]]) -> EquivariantModule:
    action = {p: {d: rule(p, d) for d in range(M.top + 1)} for p in symmetric_group(n)}
    return EquivariantModule(M, n, action)


def trivial_action(M: Module, n: int) -> EquivariantModule:
    return with_action(M, n, lambda p, d: [1 << i for i in range(M.dim(d))])


def trivial(n: int, top: int = 0) -> EquivariantModule:
    """Z/2 in degree 0 with trivial Sigma_n action."""
    return trivial_action(_degree_zero(1, top), n)


def regular(n: int, top: int = 0) -> EquivariantModule:
    """GF(2)[Sigma_n] in degree 0, Sigma_n acting by left multiplication."""
    G = symmetric_group(n)
    idx = {g: i for i, g in enumerate(G)}
    M = _degree_zero(len(G), top)
    return with_action(M, n, lambda p, d: [1 << idx[pmul(p, g)] for g in G] if d == 0 else [])


def zero_object(n: int, top: int = 0) -> EquivariantModule:
    return trivial_action(_degree_zero(0, top), n)


def fixed_dims(E: EquivariantModule, H) -> Tuple[int, ...]:
    return tuple(E.fixed_dim(list(H), d) for d in range(E.module.top + 1))


def fixed_point_table(E: EquivariantModule) -> Dict[frozenset, Tuple[int, ...]]:
    return {H: fixed_dims(E, H) for H in subgroups(E.arity)}


def same_fixed_points(A: EquivariantModule, B: EquivariantModule, top: Optional[int] = None) -> bool:
    if A.arity != B.arity:
        return False
    top = min(A.module.top, B.module.top) if top is None else top
    for H in subgroups(A.arity):
        for d in range(top + 1):
            if A.fixed_dim(list(H), d) != B.fixed_dim(list(H), d):
                return False
    return True


def pad(M: Module, top: int) -> Module:
    if M.top >= top:
        return M
    dims = list(M.dims) + [0] * (top - M.top)
    labels = None if M.labels is None else list(M.labels) + [[] for _ in range(top - M.top)]
    return Module(dims, M.act, top, top, labels, M.name)


# ---------------------------------------------------------------------------
# tensor powers with factor permutations


def tensor_power(N: Module, k: int, top: Optional[int] = None) -> Module:
    """N^{(x) k} with basis tuples ((d_1, i_1), ..., (d_k, i_k))."""
    top = N.top if top is None else top
    labels = []
    index = []
    for d in range(top + 1):
        lab = sorted(_pow_basis(N, k, d))
        labels.append(lab)
        index.append({b: i for i, b in enumerate(lab)})

    def sq_basis(s, d, i):
        b = labels[d][i]
        out = 0
        for split in _splits(s, [e for e, _ in b]):
            factors = []
            for (e, j), t in zip(b, split):
                v = N.sq(t, e, 1 << j)
                if not v:
                    break
                factors.append([(e + t, x) for x in gf2.bits(v)])
            else:
                for combo in itertools.product(*factors):
                    out ^= 1 << index[d + s][tuple(combo)]
        return out

    T = Module.build([len(l) for l in labels], sq_basis, top, min(top, N.cert), labels,
                     f"{N.name}^{k}")
    T.power_index = index
    T.power_base = N
    T.power_k = k
    return T


def _pow_basis(N: Module, k: int, d: int):
    if k == 0:
        if d == 0:
            yield ()
        return
    for e in range(d + 1):
        for j in range(N.dim(e)):
            for rest in _pow_basis(N, k - 1, d - e):
                yield ((e, j),) + rest


def _splits(s: int, caps: Sequence[int]):
    if not caps:
        if s == 0:
            yield ()
        return
    for t in range(min(s, caps[0]) + 1):
        for rest in _splits(s - t, caps[1:]):
            yield (t,) + rest


def power_map(T: Module, perm: Perm, factor_maps: Optional[Sequence] = None) -> Dict[int, List[int]]:
    """Matrices of ``(x) v_b -> (x)_b f_b(v_b)`` placed at position perm[b]."""
    k = T.power_k
    N = T.power_base
    mats = {}
    for d in range(T.top + 1):
        cols = []
        for b in T.labels[d]:
            factors = [None] * k
            for pos, (e, j) in enumerate(b):
                v = 1 << j if factor_maps is None else factor_maps[pos][e][j]
                factors[perm[pos]] = [(e, x) for x in gf2.bits(v)]
            v = 0
            for combo in itertools.product(*factors):
                v ^= 1 << T.power_index[d][tuple(combo)]
            cols.append(v)
        mats[d] = cols
    return mats


# ---------------------------------------------------------------------------
# induction, direct sums and tensor products


def direct_sum_objects(objs: Sequence[EquivariantModule], n: int, top: int) -> EquivariantModule:
    mods = [pad(o.module, top).restrict_top(top) for o in objs]
    if not mods:
        return zero_object(n, top)
    S = direct_sum(*mods)
    action = {}
    for p in symmetric_group(n):
        mats = {}
        for d in range(top + 1):
            cols = []
            off = 0
            for o, m in zip(objs, mods):
                src = o.action[p].get(d, []) if d <= o.module.top else []
                cols.extend(v << off for v in src)
                off += m.dim(d)
            mats[d] = cols
        action[p] = mats
    return EquivariantModule(S, n, action)


def induce(W: Module, H: frozenset, W_action: Callable[[Perm], Dict[int, List[int]]],
           n: int) -> EquivariantModule:
    """Ind_H^{Sigma_n} W, one copy of W per left coset gH."""
    G = symmetric_group(n)
    reps = []
    coset_of = {}
    for g in G:
        if g in coset_of:
            continue
        c = len(reps)
        reps.append(g)
        for h in H:
            coset_of[pmul(g, h)] = c
    cache = {}

    def act_h(h):
        if h not in cache:
            cache[h] = W_action(h)
        return cache[h]

    nc = len(reps)
    top = W.top
    mods = [W] * nc
    S = direct_sum(*mods) if nc > 1 else W
    action = {}
    for s in G:
        mats = {}
        moves = []
        for c, g in enumerate(reps):
            sg = pmul(s, g)
            c2 = coset_of[sg]
            h = pmul(pinv(reps[c2]), sg)
            moves.append((c2, h))
        for d in range(top + 1):
            w = W.dim(d)
            cols = [0] * (nc * w)
            for c, (c2, h) in enumerate(moves):
                m = act_h(h)[d]
                for i in range(w):
                    cols[c * w + i] = m[i] << (c2 * w)
            mats[d] = cols
        action[s] = mats
    E = EquivariantModule(S, n, action)
    E.coset_reps = reps
    return E


def tensor_objects(A: EquivariantModule, B: EquivariantModule) -> EquivariantModule:
    """Diagonal action on A (x) B for objects of the same arity."""
    if A.arity != B.arity:
        raise ValueError("arity mismatch")
    T = tensor(A.module, B.module)
    action = {}
    for p in symmetric_group(A.arity):
        f = ModuleMap(A.module, A.module, A.action[p], A.module.top)
        g = ModuleMap(B.module, B.module, B.action[p], B.module.top)
        action[p] = tensor_maps(f, g, T, T).mats
    return EquivariantModule(T, A.arity, action)


def _split_perm(h: Perm, l: int) -> Tuple[Perm, Perm]:
    return tuple(h[:l]), tuple(v - l for v in h[l:])


def boxtimes(A: Sequence[EquivariantModule], B: Sequence[EquivariantModule],
             max_arity: Optional[int] = None, top: Optional[int] = None) -> List[EquivariantModule]:
    """(A [x] B)_n = sum_{l+m=n} Ind_{Sigma_l x Sigma_m}^{Sigma_n} (A_l (x) B_m)."""
    if max_arity is None:
        max_arity = len(A) + len(B) - 2
    if top is None:
        top = min(o.module.top for o in list(A) + list(B))
    out = []
    for n in range(max_arity + 1):
        parts = []
        for l in range(n + 1):
            m = n - l
            if l >= len(A) or m >= len(B):
                continue
            a, b = A[l], B[m]
            W = tensor(pad(a.module, top).restrict_top(top), pad(b.module, top).restrict_top(top))
            if W.is_zero():
                continue

            def W_action(h, a=a, b=b, W=W, l=l):
                h1, h2 = _split_perm(h, l)
                Ma, Mb = W.tensor_factors
                f = ModuleMap(Ma, Ma, _act(a, h1, top), top)
                g = ModuleMap(Mb, Mb, _act(b, h2, top), top)
                return tensor_maps(f, g, W, W).mats

            parts.append(induce(W, young_subgroup(l, m), W_action, n))
        out.append(direct_sum_objects(parts, n, top))
    return out


def _act(E: EquivariantModule, p: Perm, top: int) -> Dict[int, List[int]]:
    return {d: (E.action[p][d] if d <= E.module.top else []) for d in range(top + 1)}


def sh_m(N: EquivariantModule, max_arity: int, top: Optional[int] = None) -> List[EquivariantModule]:
    """Sh^m_n(N) = Ind_{Sigma_k wr Sigma_m}^{Sigma_km} N^{(x) k} for n = km, else 0."""
    m = N.arity
    top = N.module.top if top is None else top
    base = pad(N.module, top).restrict_top(top)
    out = []
    for n in range(max_arity + 1):
        if m == 0 or n % m:
            if m == 0 and n == 0:
                out.append(trivial(0, top))
            else:
                out.append(zero_object(n, top))
            continue
        k = n // m
        W = tensor_power(base, k, top)
        Nact = {p: _act(N, p, top) for p in symmetric_group(m)}

        def W_action(h, W=W, k=k):
            blocks = [h[b * m] // m for b in range(k)]
            taus = [tuple(h[b * m + r] - blocks[b] * m for r in range(m)) for b in range(k)]
            return power_map(W, tuple(blocks), [Nact[t] for t in taus])

        out.append(induce(W, wreath_subgroup(k, m), W_action, n))
    return out


# ---------------------------------------------------------------------------
# the U_n / U_{n-1} adjunction


@dataclass
class Coinduced:
    module: Module
    inclusion: ModuleMap
    ambient: Module
    power: Module
    source: EquivariantModule


def coinduce(N: EquivariantModule, D: int) -> Coinduced:
    """(N (x) F(1)^{(x) n})^{Sigma_n} realized through D."""
    n = N.arity
    base = pad(N.module, D).restrict_top(D)
    F1 = free(1, D)
    P = tensor_power(F1, n, D)
    T = tensor(base, P)
    acts = {}
    for p in symmetric_group(n):
        f = ModuleMap(base, base, _act(N, p, D), D)
        g = ModuleMap(P, P, power_map(P, p), D)
        acts[p] = tensor_maps(f, g, T, T).mats
    spaces = []
    for d in range(D + 1):
        w = T.dim(d)
        if n == 0 or not w:
            spaces.append(gf2.full_space(w))
            continue
        cols = []
        perms = [p for p in symmetric_group(n) if p != identity(n)]
        for i in range(w):
            v = 0
            for k, p in enumerate(perms):
                v |= (acts[p][d][i] ^ (1 << i)) << (k * w)
            cols.append(v)
        spaces.append(gf2.Subspace(w, gf2.kernel(cols)))
    C, inc = submodule(T, spaces, f"coind({N.module.name})", D)
    return Coinduced(C, inc, T, P, N)


def _power_index_of_monomial(P: Module, e: Tuple[int, ...]) -> Optional[int]:
    """Index in F(1)^{(x) n} of x_1^{e_1} ... x_n^{e_n}, or None if some
    e_i is not a power of 2."""
    if any(x & (x - 1) for x in e):
        return None
    return P.power_index[sum(e)].get(tuple((x, 0) for x in e))


@dataclass
class CounitReport:
    ranks: List[int]
    source_dims: List[int]
    target_dims: List[int]
    equivariant: bool
    fixed_points_agree: bool

    @property
    def iso(self) -> bool:
        return (self.equivariant and self.fixed_points_agree
                and self.source_dims == self.target_dims == self.ranks)


def counit(N: EquivariantModule, D: int, gen_degree: Optional[int] = None) -> CounitReport:
    """Build Tbar^n coinduce(N) -> N (adjoint to the inclusion) and test it."""
    n = N.arity
    co = coinduce(N, D)
    C, T, P = co.module, co.ambient, co.power
    g = D // 2 if gen_degree is None else gen_degree
    Q = present(C, g, D)
    top = N.module.top
    if D - g < top:
        raise WindowError("window too small for the counit", D - g)
    E = tbar_iter(Q, n, top)
    data = E.data
    Nm = N.module
    images = []
    for gi, a in data.presentation.gen_labels:
        gd, gv = Q.gen_elements[gi]
        t_vec = co.inclusion(gd, gv)
        out = 0
        e = gd - sum(a)
        pj = _power_index_of_monomial(P, a)
        if pj is not None and e <= top:
            for idx in gf2.bits(t_vec):
                b, i, j = _tensor_where(T, gd, idx)
                if b == e and j == pj:
                    out ^= 1 << i
        images.append(out)
    R = E.module
    eps = hom_to_map(data.presentation, images, R, pad(Nm, top).restrict_top(top))
    ranks = [gf2.rank(eps.matrix(d)) for d in range(top + 1)]
    equivariant = True
    for p in symmetric_group(n):
        for d in range(top + 1):
            lhs = gf2.compose(eps.matrix(d), E.action[p][d])
            rhs = gf2.compose(N.action[p][d], eps.matrix(d))
            if lhs != rhs:
                equivariant = False
    return CounitReport(ranks, [R.dim(d) for d in range(top + 1)],
                        [Nm.dim(d) for d in range(top + 1)], equivariant,
                        same_fixed_points(E, N, top))


def _tensor_where(T: Module, d: int, idx: int):
    M, N = T.tensor_factors
    offs = T.tensor_offsets[d]
    for a in sorted(offs, reverse=True):
        if idx >= offs[a] and M.dim(a) and N.dim(d - a):
            r = idx - offs[a]
            return a, r // N.dim(d - a), r % N.dim(d - a)
    raise IndexError(idx)


@dataclass
class UnitReport:
    kernel_dims: Tuple[int, ...]
    cokernel_dims: Tuple[int, ...]
    kernel_in_lower: bool
    cokernel_in_lower: bool

    @property
    def ok(self) -> bool:
        return self.kernel_in_lower and self.cokernel_in_lower


def unit_to_coinduced(Pm: PresentedModule, n: int, D: int, gen_degree: Optional[int] = None):
    """The unit M -> (Tbar^n M (x) F(1)^{(x) n})^{Sigma_n} for M in U_n.

    Returns ``(unit map, coinduced data)``. Raises UKrullError if the unit
    leaves F(1)^{(x) n}, which happens exactly when M is not in U_n.
    """
    g = max(Pm.max_generator_degree(), 0)
    ttop = D - g if Pm.window is None else min(D, Pm.window) - g
    ttop = max(ttop, 0)
    E = tbar_iter(Pm, n, ttop)
    data = E.data
    co = coinduce(E, D)
    C, T, P = co.module, co.ambient, co.power
    Tbar = E.module
    proj = Tbar.realization
    M = realize(Pm, D)
    mats = {}
    for d in range(D + 1):
        cols = []
        for w, gi in M.labels[d]:
            v = 0
            for e, rel in group_by_monomial(data.unit_terms(gi, w)).items():
                td = d - sum(e)
                coords = proj.project_terms(td, rel)
                if not coords:
                    continue
                pj = _power_index_of_monomial(P, e)
                if pj is None:
                    raise UKrullError(f"unit has a component outside F(1)^{n}: not in U_{n}")
                for i in gf2.bits(coords):
                    v ^= 1 << tensor_index(T, td, i, pj, d)
            cols.append(_coords_in(co, d, v))
        mats[d] = cols
    return ModuleMap(M, C, mats, D), co


def _coords_in(co, d, v):
    basis = co.inclusion.matrix(d)
    sol = gf2.solve(basis, v)
    if sol is None:
        raise UKrullError("unit image is not Sigma_n-invariant")
    return sol


def verify_unit(Pm: PresentedModule, n: int, D: int, gen_degree: Optional[int] = None) -> UnitReport:
    """Kernel and cokernel of the unit lie in U_{n-1} (windowed presentations)."""
    eta, co = unit_to_coinduced(Pm, n, D)
    K, _ = kernel(eta)
    Q, _ = cokernel(eta)
    g = D // 2 if gen_degree is None else gen_degree
    res = []
    for X in (K, Q):
        if X.is_zero():
            res.append(True)
            continue
        PX = present(X, g, D)
        res.append(is_in_Un(PX, n - 1))
    return UnitReport(K.dims, Q.dims, res[0], res[1])


def verify_quotient_equivalence(N: EquivariantModule, n: int, D: int,
                                M: Optional[PresentedModule] = None) -> dict:
    """Counit test on N and, when M is given, the unit test on M."""
    out = {"counit": counit(N, D)}
    if M is not None:
        out["unit"] = verify_unit(M, n, D)
    return out
