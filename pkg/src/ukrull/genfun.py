"""Functors from finite dimensional GF(2)-vector spaces to vector spaces.

Only ranks 0..K are stored. A linear map ``F2^j -> F2^k`` is a tuple of j
column images, each a k-bit int. A :class:`FiniteFunctor` knows its value
dimensions and computes (and memoizes) the matrix of any linear map.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import gf2
from .errors import CertificationError, RankExhausted

LinMap = Tuple[int, ...]


def compose_lin(B: LinMap, A: LinMap) -> LinMap:
    """B o A for A: F2^i -> F2^j and B: F2^j -> F2^k."""
    return tuple(gf2.apply(B, a) for a in A)


def identity_lin(k: int) -> LinMap:
    return tuple(1 << i for i in range(k))


def all_maps(j: int, k: int):
    return itertools.product(range(1 << k), repeat=j)


def generating_maps(K: int):
    """Maps generating the category of spaces of dimension <= K:
    swaps, one transvection, coordinate inclusions and projections."""
    out = []
    for k in range(K + 1):
        if k >= 2:
            for i in range(k - 1):
                sw = list(identity_lin(k))
                sw[i], sw[i + 1] = sw[i + 1], sw[i]
                out.append((k, k, tuple(sw)))
            tv = list(identity_lin(k))
            tv[1] ^= 1
            out.append((k, k, tuple(tv)))
        if k < K:
            out.append((k, k + 1, identity_lin(k)))
            out.append((k + 1, k, identity_lin(k) + (0,)))
    return out


class FiniteFunctor:
    """A functor truncated at rank K with memoized map actions."""

    def __init__(self, K: int, dims: Sequence[int], act_fn: Callable[[LinMap, int, int], List[int]],
                 name: str = ""):
        self.K = K
        self.dims = tuple(dims)
        self._act_fn = act_fn
        self._memo: Dict[tuple, List[int]] = {}
        self.name = name

    def dim(self, k: int) -> int:
        if k > self.K:
            raise RankExhausted(f"{self.name} known only through rank {self.K}")
        return self.dims[k]

    def act(self, A: LinMap, j: int, k: int) -> List[int]:
        key = (A, j, k)
        m = self._memo.get(key)
        if m is None:
            if j > self.K or k > self.K:
                raise RankExhausted(f"{self.name} known only through rank {self.K}")
            m = self._act_fn(A, j, k)
            self._memo[key] = m
        return m

    def is_zero(self) -> bool:
        return not any(self.dims)

    def __repr__(self):
        return f"FiniteFunctor({self.name}; dims={list(self.dims)})"

    def check(self, trials: int = 40, seed: int = 0) -> None:
        """Identity and composition laws on random composable pairs."""
        rng = random.Random(seed)
        for k in range(self.K + 1):
            if self.act(identity_lin(k), k, k) != [1 << i for i in range(self.dims[k])]:
                raise AssertionError(f"identity fails at rank {k}")
        for _ in range(trials):
            i, j, k = (rng.randint(0, self.K) for _ in range(3))
            A = tuple(rng.randrange(1 << j) for _ in range(i))
            B = tuple(rng.randrange(1 << k) for _ in range(j))
            lhs = self.act(compose_lin(B, A), i, k)
            rhs = gf2.compose(self.act(B, j, k), self.act(A, i, j))
            if lhs != rhs:
                raise AssertionError(f"composition fails for ranks {i}->{j}->{k}")


# ---------------------------------------------------------------------------
# standard functors


def constant(K: int) -> FiniteFunctor:
    return FiniteFunctor(K, [1] * (K + 1), lambda A, j, k: [1], "const")


def identity_functor(K: int) -> FiniteFunctor:
    return FiniteFunctor(K, list(range(K + 1)), lambda A, j, k: list(A), "Id")


def _expand_products(cols_list):
    """All choices of one set bit from each int in cols_list."""
    return itertools.product(*[gf2.bits(c) for c in cols_list])


def tensor_power_functor(m: int, K: int) -> FiniteFunctor:
    def act(A, j, k):
        out = []
        for t in itertools.product(range(j), repeat=m):
            v = 0
            for choice in _expand_products([A[i] for i in t]):
                idx = 0
                for c in choice:
                    idx = idx * k + c
                v ^= 1 << idx
            out.append(v)
        return out

    return FiniteFunctor(K, [k ** m for k in range(K + 1)], act, f"Id^{m}")


@lru_cache(maxsize=None)
def _subsets(k: int, m: int):
    subs = [tuple(c) for c in itertools.combinations(range(k), m)]
    return subs, {s: i for i, s in enumerate(subs)}


@lru_cache(maxsize=None)
def _multisets(k: int, m: int):
    ms = [tuple(c) for c in itertools.combinations_with_replacement(range(k), m)]
    return ms, {s: i for i, s in enumerate(ms)}


def exterior_functor(m: int, K: int) -> FiniteFunctor:
    def act(A, j, k):
        src, _ = _subsets(j, m)
        _, tgt = _subsets(k, m)
        out = []
        for s in src:
            v = 0
            for choice in _expand_products([A[i] for i in s]):
                if len(set(choice)) == m:
                    v ^= 1 << tgt[tuple(sorted(choice))]
            out.append(v)
        return out

    return FiniteFunctor(K, [comb(k, m) for k in range(K + 1)], act, f"Lambda^{m}")


def symmetric_functor(m: int, K: int) -> FiniteFunctor:
    """S^m(V) = (V^{(x) m})_{Sigma_m}: monomials of degree m."""

    def act(A, j, k):
        src, _ = _multisets(j, m)
        _, tgt = _multisets(k, m)
        out = []
        for s in src:
            v = 0
            for choice in _expand_products([A[i] for i in s]):
                v ^= 1 << tgt[tuple(sorted(choice))]
            out.append(v)
        return out

    return FiniteFunctor(K, [comb(k + m - 1, m) if m else 1 for k in range(K + 1)], act, f"S^{m}")


def _orbit(t: tuple) -> List[tuple]:
    return sorted(set(itertools.permutations(t)))


def divided_power_functor(m: int, K: int) -> FiniteFunctor:
    """H_m(V) = H_m(BV) = Gamma^m(V) = (V^{(x) m})^{Sigma_m}, basis of orbit sums."""

    def act(A, j, k):
        src, _ = _multisets(j, m)
        _, tgt = _multisets(k, m)
        out = []
        for s in src:
            coeff: Dict[tuple, int] = {}
            for t in _orbit(s):
                for choice in _expand_products([A[i] for i in t]):
                    coeff[choice] = coeff.get(choice, 0) ^ 1
            v = 0
            for choice, c in coeff.items():
                if c and list(choice) == sorted(choice):
                    v ^= 1 << tgt[choice]
            out.append(v)
        return out

    return FiniteFunctor(K, [comb(k + m - 1, m) if m else 1 for k in range(K + 1)], act, f"H_{m}")


def _homs(src_rank: int, tgt_rank: int):
    """Linear maps F2^src -> F2^tgt as column tuples, in a fixed order."""
    maps = list(all_maps(src_rank, tgt_rank))
    return maps, {m: i for i, m in enumerate(maps)}


def projective_functor(w: int, K: int, reduced: bool = False) -> FiniteFunctor:
    """P_W(V) = F2[Hom(W, V)], or its augmentation ideal when ``reduced``."""

    def act(A, j, k):
        src, _ = _homs(w, j)
        _, tgt = _homs(w, k)
        zero = tuple([0] * w)
        out = []
        for phi in src:
            if reduced and phi == zero:
                continue
            psi = compose_lin(A, phi)
            if reduced:
                out.append(0 if psi == zero else 1 << (tgt[psi] - 1))
            else:
                out.append(1 << tgt[psi])
        return out

    dims = [(1 << (w * k)) - (1 if reduced else 0) for k in range(K + 1)]
    return FiniteFunctor(K, dims, act, ("barP" if reduced else "P") + f"_{w}")


def injective_functor(w: int, K: int, reduced: bool = False) -> FiniteFunctor:
    """I_W(V) = F2^{Hom(V, W)}, basis of delta functions; reduced: u(0) = 0."""

    def act(A, j, k):
        src, sidx = _homs(j, w)
        tgt, _ = _homs(k, w)
        cols = [0] * len(src)
        for ti, psi in enumerate(tgt):
            phi = compose_lin(psi, A)
            cols[sidx[phi]] |= 1 << ti
        if reduced:
            return [c >> 1 for c in cols[1:]]
        return cols

    dims = [(1 << (w * k)) - (1 if reduced else 0) for k in range(K + 1)]
    return FiniteFunctor(K, dims, act, ("barI" if reduced else "I") + f"_{w}")


def standard_functor(name: str, K: int, m: int = 1) -> FiniteFunctor:
    """Named functors: id, const, tensor_power, lambda, sym, gamma, P_W,
    I_W, barP, barI (``m`` is the power or dim W)."""
    table = {
        "id": lambda: identity_functor(K),
        "const": lambda: constant(K),
        "tensor_power": lambda: tensor_power_functor(m, K),
        "lambda": lambda: exterior_functor(m, K),
        "sym": lambda: symmetric_functor(m, K),
        "gamma": lambda: divided_power_functor(m, K),
        "P_W": lambda: projective_functor(m, K),
        "I_W": lambda: injective_functor(m, K),
        "barP": lambda: projective_functor(m, K, True),
        "barI": lambda: injective_functor(m, K, True),
    }
    if name not in table:
        raise KeyError(name)
    return table[name]()


# ---------------------------------------------------------------------------
# tensor products, subfunctors, quotients


def tensor_functors(F: FiniteFunctor, G: FiniteFunctor) -> FiniteFunctor:
    K = min(F.K, G.K)

    def act(A, j, k):
        return gf2.kron(F.act(A, j, k), F.dim(k), G.act(A, j, k), G.dim(k))

    return FiniteFunctor(K, [F.dim(k) * G.dim(k) for k in range(K + 1)], act,
                         f"({F.name} x {G.name})")


def subfunctor(F: FiniteFunctor, spaces: Sequence[gf2.Subspace], name: str = "") -> FiniteFunctor:
    K = len(spaces) - 1

    def act(A, j, k):
        M = F.act(A, j, k)
        return [spaces[k].coords(gf2.apply(M, b)) for b in spaces[j].basis]

    return FiniteFunctor(K, [s.dim for s in spaces], act, name or f"sub({F.name})")


def quotient_functor(F: FiniteFunctor, spaces: Sequence[gf2.Subspace], name: str = "") -> FiniteFunctor:
    K = len(spaces) - 1

    def act(A, j, k):
        M = F.act(A, j, k)
        return [spaces[k].quotient_coords(gf2.apply(M, spaces[j].lift(1 << i)))
                for i in range(spaces[j].codim)]

    return FiniteFunctor(K, [s.codim for s in spaces], act, name or f"quot({F.name})")


def _inclusion_skipping(k: int, total: int, skip: int) -> LinMap:
    """F2^{total-1} -> F2^total missing coordinate ``skip``."""
    return tuple(1 << (i if i < skip else i + 1) for i in range(total - 1))


def _delta_spaces(F: FiniteFunctor, k: int, m: int) -> gf2.Subspace:
    """The subspace of F(k+m) whose quotient is Delta^m F(k)."""
    total = k + m
    vecs = []
    for i in range(m):
        inc = _inclusion_skipping(k, total, k + i)
        vecs.extend(F.act(inc, total - 1, total))
    return gf2.Subspace(F.dim(total), vecs)


def delta(F: FiniteFunctor) -> FiniteFunctor:
    """Delta F(V) = F(V + F2) / F(V)."""
    if F.K < 1:
        raise RankExhausted("Delta needs rank cap at least 1")
    K = F.K - 1
    spaces = [_delta_spaces(F, k, 1) for k in range(K + 1)]

    def act(A, j, k):
        Ap = tuple(A) + (1 << k,)
        M = F.act(Ap, j + 1, k + 1)
        return [spaces[k].quotient_coords(gf2.apply(M, spaces[j].lift(1 << i)))
                for i in range(spaces[j].codim)]

    return FiniteFunctor(K, [s.codim for s in spaces], act, f"Delta({F.name})")


def delta_power(F: FiniteFunctor, m: int) -> FiniteFunctor:
    for _ in range(m):
        F = delta(F)
    return F


@dataclass(frozen=True)
class NotPolynomialWithin:
    K: int

    def __str__(self):
        return f"not polynomial within rank {self.K}"


def poly_degree(F: FiniteFunctor):
    """Least n with Delta^{n+1} F = 0 on every rank still available."""
    G = F
    for n in range(F.K):
        G = delta(G)
        if G.is_zero():
            return n
    return NotPolynomialWithin(F.K)


def p_n_spaces(F: FiniteFunctor, n: int) -> List[gf2.Subspace]:
    """p_n F(F2^k) = {x : [F(1, lambda) x] = 0 in Delta^{n+1} F for all lambda}."""
    m = n + 1
    K = F.K - m
    if K < 0:
        raise RankExhausted(f"p_{n} needs rank cap at least {m}")
    out = []
    for k in range(K + 1):
        total = k + m
        S = _delta_spaces(F, k, m)
        cols = [0] * F.dim(k)
        off = 0
        for lam in itertools.product(range(1, 1 << k), repeat=m):
            A = tuple((1 << l) | sum(((lam[i] >> l) & 1) << (k + i) for i in range(m))
                      for l in range(k))
            M = F.act(A, k, total)
            for x in range(F.dim(k)):
                cols[x] |= S.quotient_coords(M[x]) << off
            off += S.codim
        out.append(gf2.Subspace(F.dim(k), gf2.kernel(cols)))
    return out


def p_n(F: FiniteFunctor, n: int) -> FiniteFunctor:
    return subfunctor(F, p_n_spaces(F, n), f"p_{n}({F.name})")


def q_n(F: FiniteFunctor, n: int) -> FiniteFunctor:
    """Cokernel of the counit Delta^{n+1} F (x) barP^{(x) n+1} -> F."""
    m = n + 1
    K = F.K - m
    if K < 0:
        raise RankExhausted(f"q_{n} needs rank cap at least {m}")
    spaces = []
    for k in range(K + 1):
        total = k + m
        vecs = []
        for vs in itertools.product(range(1, 1 << k), repeat=m):
            acc = [0] * F.dim(total)
            for S in range(1 << m):
                A = identity_lin(k) + tuple(vs[i] if (S >> i) & 1 else 0 for i in range(m))
                M = F.act(A, total, k)
                acc = [a ^ b for a, b in zip(acc, M)]
            vecs.extend(acc)
        spaces.append(gf2.Subspace(F.dim(k), vecs))
    return quotient_functor(F.__class__(K, F.dims[: K + 1], F._act_fn, F.name), spaces,
                            f"q_{n}({F.name})")


def tensor_filtration_spaces(F: FiniteFunctor, G: FiniteFunctor, n: int) -> List[gf2.Subspace]:
    """sum_{l+m=n} p_l F (x) p_m G inside (F (x) G)(k)."""
    pf = [p_n_spaces(F, l) for l in range(n + 1)]
    pg = [p_n_spaces(G, m) for m in range(n + 1)]
    K = min(len(pf[n]), len(pg[n])) - 1
    out = []
    for k in range(K + 1):
        vecs = []
        for l in range(n + 1):
            for a in pf[l][k].basis:
                for b in pg[n - l][k].basis:
                    vecs.append(gf2.kron([a], F.dim(k), [b], G.dim(k))[0])
        out.append(gf2.Subspace(F.dim(k) * G.dim(k), vecs))
    return out


# ---------------------------------------------------------------------------
# natural transformations and the bridge to unstable modules


def hom_functors(F: FiniteFunctor, G: FiniteFunctor, K: Optional[int] = None) -> int:
    """dim of natural transformations F -> G restricted to ranks <= K."""
    K = min(F.K, G.K) if K is None else K
    offs = []
    n = 0
    for k in range(K + 1):
        offs.append(n)
        n += F.dim(k) * G.dim(k)
    # unknown (k, col, row) -> index offs[k] + col * G.dim(k) + row
    rows = []
    for j, k, A in generating_maps(K):
        GA = G.act(A, j, k)
        FA = F.act(A, j, k)
        # G(A) eta_j = eta_k F(A): one equation per (source basis c, target row r)
        for c in range(F.dim(j)):
            for r in range(G.dim(k)):
                v = 0
                for s in range(G.dim(j)):  # (G(A) eta_j)[r, c] = sum_s GA[s]_r eta_j[s, c]
                    if (GA[s] >> r) & 1:
                        v ^= 1 << (offs[j] + c * G.dim(j) + s)
                for c2 in gf2.bits(FA[c]):  # (eta_k F(A))[r, c] = sum_c2 eta_k[r, c2]
                    v ^= 1 << (offs[k] + c2 * G.dim(k) + r)
                rows.append(v)
    cols = gf2.transpose(rows, n)
    return len(gf2.kernel(cols))


def _pullback_matrix(A: LinMap, j: int, k: int, top: int):
    """f^*: H*(B F2^k) -> H*(B F2^j) for f = A, as a function (d, monomial) -> set."""
    forms = []
    for i in range(k):
        forms.append({tuple(1 if l2 == l else 0 for l2 in range(j))
                      for l in range(j) if (A[l] >> i) & 1})
    return forms


def l_of(P, K: int, top: Optional[int] = None) -> FiniteFunctor:
    """l(M)(V) = Hom_U(M, H*(BV))^dual for the module presented by P."""
    from .kalg import poly_algebra, poly_mul
    from .umod import hom_space

    need = max(list(P.gen_degrees) + list(P.relation_degrees) + [0])
    top = need if top is None else max(top, need)
    algs = [poly_algebra(k, top) for k in range(K + 1)]
    bases = []
    flats = []
    layouts = []
    for k in range(K + 1):
        hs = hom_space(P, algs[k].module)
        offs = []
        n = 0
        for gd in P.gen_degrees:
            offs.append(n)
            n += algs[k].module.dim(gd)
        flat = [sum(h[g] << offs[g] for g in range(len(h))) for h in hs]
        flats.append(flat)
        bases.append(gf2.Echelon(flat))
        layouts.append((offs, len(hs)))

    def act(A, j, k):
        # Hom(M, H_k) -> Hom(M, H_j) via f^*, then transpose
        forms = _pullback_matrix(A, j, k, top)
        Hj, Hk = algs[j], algs[k]
        offs_j, nj = layouts[j]
        offs_k, nk = layouts[k]
        rows = []
        for b in range(nk):
            combo_vec = flats[k][b]
            img = 0
            for g, gd in enumerate(P.gen_degrees):
                v = (combo_vec >> offs_k[g]) & ((1 << Hk.module.dim(gd)) - 1)
                w = 0
                for i in gf2.bits(v):
                    mono = Hk.module.labels[gd][i]
                    poly = {tuple([0] * j)}
                    for var, e in enumerate(mono):
                        for _ in range(e):
                            poly = poly_mul(poly, forms[var])
                    if poly:
                        w ^= Hj.reduce(gd, poly)
                img |= w << offs_j[g]
            rows.append(bases[j].coords(img) if img else 0)
        # rows[b] = coords (in basis of Hom(M,H_j)) of f^* applied to basis b of Hom(M,H_k)
        return gf2.transpose(rows, nj)

    dims = [layouts[k][1] for k in range(K + 1)]
    return FiniteFunctor(K, dims, act, f"l({P.name})")


@dataclass
class NilClosure:
    dims: List[int]
    certified: bool
    poly_degree: object


def nil_closure(P, n_bound: int, K: int = 3) -> NilClosure:
    """Degreewise r(l(M))^n = Hom_F(H_n, l(M)) for n <= n_bound.

    Trusted only when l(M) has certified polynomial degree below K.
    """
    F = l_of(P, K)
    deg = poly_degree(F)
    certified = isinstance(deg, int) and deg < K
    dims = [hom_functors(divided_power_functor(n, K), F) for n in range(n_bound + 1)]
    return NilClosure(dims, certified, deg)


def r_of(F: FiniteFunctor, n_bound: int) -> List[int]:
    return [hom_functors(divided_power_functor(n, F.K), F) for n in range(n_bound + 1)]


@dataclass
class SplittingReport:
    dims_L: List[int]
    composite_identity: bool
    simple: bool
    L: FiniteFunctor


def lambda2_tensor_splitting(K: int = 3) -> SplittingReport:
    """Lambda^2 (x) Id = Lambda^3 + L; L = ker(multiplication), checked simple
    by cyclic generation of every nonzero vector."""
    if K < 3:
        raise RankExhausted("the splitting needs rank 3")
    L2 = exterior_functor(2, K)
    L3 = exterior_functor(3, K)
    T = tensor_functors(L2, identity_functor(K))
    ok = True
    spaces = []
    for k in range(K + 1):
        s2, i2 = _subsets(k, 2)
        s3, i3 = _subsets(k, 3)
        mult = []
        for a in s2:
            for c in range(k):
                if c in a:
                    mult.append(0)
                else:
                    mult.append(1 << i3[tuple(sorted(a + (c,)))])
        comult = []
        for t in s3:
            v = 0
            for c in t:
                rest = tuple(x for x in t if x != c)
                v ^= 1 << (i2[rest] * k + c)
            comult.append(v)
        if gf2.compose(mult, comult) != [1 << i for i in range(len(s3))]:
            ok = False
        spaces.append(gf2.Subspace(T.dim(k), gf2.kernel(mult)))
    L = subfunctor(T, spaces, "L")
    simple = is_simple(L)
    return SplittingReport(list(L.dims), ok, simple, L)


def generated_dims(F: FiniteFunctor, k: int, v: int) -> List[int]:
    out = []
    for k2 in range(F.K + 1):
        vecs = [gf2.apply(F.act(A, k, k2), v) for A in all_maps(k, k2)]
        out.append(gf2.rank(vecs))
    return out


def is_simple(F: FiniteFunctor) -> bool:
    """Every nonzero vector at every rank generates all of F."""
    if F.is_zero():
        return False
    full = list(F.dims)
    for k in range(F.K + 1):
        for v in range(1, 1 << F.dim(k)):
            if generated_dims(F, k, v) != full:
                return False
    return True
