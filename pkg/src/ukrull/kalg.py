"""Unstable algebras: polynomial quotients, free unstable algebras, Q_8.

Polynomials are sets of exponent tuples (GF(2) coefficients). The Steenrod
action on a polynomial quotient is specified by the total square
``Sq(g) = sum_k Sq^k g`` of each generator and extended multiplicatively;
squaring is additive in characteristic 2, so ``Sq(g)^e`` is a product of
Frobenius twists.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import gf2
from .errors import IdealNotStable, NoCoproduct
from .umod import Module

Mono = Tuple[int, ...]


def _mono_degree(m: Mono, degs: Sequence[int]) -> int:
    return sum(e * d for e, d in zip(m, degs))


def _monomials(d: int, degs: Sequence[int]) -> List[Mono]:
    out = []

    def rec(i, left, acc):
        if i == len(degs):
            if left == 0:
                out.append(tuple(acc))
            return
        for e in range(left // degs[i] + 1):
            acc.append(e)
            rec(i + 1, left - e * degs[i], acc)
            acc.pop()

    rec(0, d, [])
    return sorted(out, reverse=True)


def poly_mul(p: Iterable[Mono], q: Iterable[Mono], degs=None, top=None) -> set:
    out: set = set()
    q = list(q)
    for a in p:
        for b in q:
            m = tuple(x + y for x, y in zip(a, b))
            if top is not None and _mono_degree(m, degs) > top:
                continue
            out ^= {m}
    return out


class UnstableAlgebra:
    """Base interface: an unstable module with a commutative product.

    Subclasses provide ``module`` (a :class:`Module` whose labels are basis
    keys) and ``mul(d1, v1, d2, v2)``.
    """

    module: Module
    name: str = ""

    @property
    def top(self) -> int:
        return self.module.top

    def unit(self) -> int:
        return 1 if self.module.dim(0) else 0

    def mul(self, d1: int, v1: int, d2: int, v2: int) -> int:
        raise NotImplementedError

    def coproduct_reduced_iterate(self, n: int, d: int) -> List[int]:
        raise NoCoproduct(f"{self.name} carries no coproduct")

    # -- validators ------------------------------------------------------
    def check_restriction(self, through: Optional[int] = None) -> None:
        """Sq^{|x|} x = x^2 on every basis element."""
        M = self.module
        through = M.top // 2 if through is None else through
        for d in range(through + 1):
            for i in range(M.dim(d)):
                v = 1 << i
                if M.sq(d, d, v) != self.mul(d, v, d, v):
                    raise AssertionError(f"restriction axiom fails in degree {d}, basis {i}")

    def check_products(self, through: Optional[int] = None) -> None:
        """Commutativity, associativity, unit and the Cartan formula."""
        M = self.module
        through = M.top if through is None else through
        one = self.unit()
        for a in range(through + 1):
            for i in range(M.dim(a)):
                x = 1 << i
                if one and self.mul(0, one, a, x) != x:
                    raise AssertionError("unit fails")
                for b in range(a, through - a + 1):
                    for j in range(M.dim(b)):
                        y = 1 << j
                        xy = self.mul(a, x, b, y)
                        if xy != self.mul(b, y, a, x):
                            raise AssertionError("not commutative")
                        for k in range(1, through - a - b + 1):
                            rhs = 0
                            for s in range(k + 1):
                                sx, sy = M.sq(s, a, x), M.sq(k - s, b, y)
                                if sx and sy:
                                    rhs ^= self.mul(a + s, sx, b + k - s, sy)
                            if M.sq(k, a + b, xy) != rhs:
                                raise AssertionError(f"Cartan fails for degrees {a},{b}, Sq^{k}")
                        for c in range(b, through - a - b + 1):
                            for l in range(M.dim(c)):
                                z = 1 << l
                                lhs = self.mul(a + b, xy, c, z)
                                rhs = self.mul(a, x, b + c, self.mul(b, y, c, z))
                                if lhs != rhs:
                                    raise AssertionError("not associative")

    def power_span(self, gens: Dict[int, List[int]], length: int) -> List[gf2.Subspace]:
        """Span of products of at most ``length`` elements drawn from ``gens``
        (a dict degree -> vectors), including the empty product 1."""
        M = self.module
        top = M.top
        layers = [{0: [self.unit()] if self.unit() else []}]
        total: Dict[int, List[int]] = {0: list(layers[0][0])}
        for _ in range(length):
            prev = layers[-1]
            nxt: Dict[int, List[int]] = {}
            for a, vs in prev.items():
                for b, ws in gens.items():
                    if a + b > top:
                        continue
                    for v in vs:
                        for w in ws:
                            nxt.setdefault(a + b, []).append(self.mul(a, v, b, w))
            layers.append(nxt)
            for d, vs in nxt.items():
                total.setdefault(d, []).extend(vs)
        return [gf2.Subspace(M.dim(d), total.get(d, [])) for d in range(top + 1)]


class PolyQuotient(UnstableAlgebra):
    """GF(2)[g_1..g_r] / (relations), truncated at degree ``top``."""

    def __init__(self, degs: Sequence[int], total_sq: Sequence[Iterable[Mono]],
                 relations: Sequence[Iterable[Mono]], top: int, name: str = "",
                 validate: bool = True):
        self.degs = tuple(degs)
        self.r = len(self.degs)
        self.total_sq = [frozenset(p) for p in total_sq]
        self.relations = [frozenset(p) for p in relations]
        self.name = name
        self._top = top
        self._rel_deg = []
        for p in self.relations:
            ds = {_mono_degree(m, self.degs) for m in p}
            if len(ds) != 1:
                raise ValueError("relations must be homogeneous")
            self._rel_deg.append(ds.pop())
        self.monos = [_monomials(d, self.degs) for d in range(top + 1)]
        self.mindex = [{m: i for i, m in enumerate(ms)} for ms in self.monos]
        self.ideal = []
        for d in range(top + 1):
            vecs = []
            for rel, e in zip(self.relations, self._rel_deg):
                if e > d:
                    continue
                for m in self.monos[d - e]:
                    vecs.append(self._vec(d, poly_mul([m], rel)))
            self.ideal.append(gf2.Subspace(len(self.monos[d]), vecs))
        if validate:
            self.check_ideal_stable()
        labels = [[self.monos[d][c] for c in self.ideal[d].complement] for d in range(top + 1)]
        dims = [sp.codim for sp in self.ideal]

        def sq_basis(k, d, i):
            m = labels[d][i]
            return self.reduce(d + k, self.sq_poly(k, {m}))

        self.module = Module.build(dims, sq_basis, top, top, labels, name)

    def _vec(self, d: int, poly) -> int:
        v = 0
        idx = self.mindex[d]
        for m in poly:
            v ^= 1 << idx[m]
        return v

    def reduce(self, d: int, poly) -> int:
        """Coordinates in the quotient basis of a homogeneous polynomial."""
        return self.ideal[d].quotient_coords(self._vec(d, poly))

    def lift(self, d: int, v: int) -> set:
        return {self.module.labels[d][i] for i in gf2.bits(v)}

    @lru_cache(maxsize=None)
    def _total_sq_power(self, g: int, e: int) -> frozenset:
        """Sq(g)^e truncated at top."""
        acc = {tuple(0 for _ in self.degs)}
        base = set(self.total_sq[g])
        b = 0
        while e >> b:
            if (e >> b) & 1:
                twisted = {tuple(x << b for x in m) for m in base}
                acc = poly_mul(acc, twisted, self.degs, self._top)
            b += 1
        return frozenset(acc)

    def sq_poly(self, k: int, poly) -> set:
        out: set = set()
        for m in poly:
            d = _mono_degree(m, self.degs)
            if d + k > self._top:
                continue
            acc = {tuple(0 for _ in self.degs)}
            for g, e in enumerate(m):
                if e:
                    acc = poly_mul(acc, self._total_sq_power(g, e), self.degs, d + k)
            out ^= {x for x in acc if _mono_degree(x, self.degs) == d + k}
        return out

    def check_ideal_stable(self) -> None:
        for rel, e in zip(self.relations, self._rel_deg):
            for k in range(1, self._top - e + 1):
                img = self.sq_poly(k, rel)
                if img and not self.ideal[e + k].contains(self._vec(e + k, img)):
                    raise IdealNotStable(f"Sq^{k} of a relation in degree {e} leaves the ideal")

    def mul(self, d1, v1, d2, v2) -> int:
        if d1 + d2 > self._top:
            return 0
        p = poly_mul(self.lift(d1, v1), self.lift(d2, v2))
        return self.reduce(d1 + d2, p)

    def element(self, poly) -> Tuple[int, int]:
        """(degree, vector) of a homogeneous polynomial given as a set of exponent tuples."""
        poly = set(poly)
        d = _mono_degree(next(iter(poly)), self.degs)
        return d, self.reduce(d, poly)

    def variable(self, i: int) -> Tuple[int, int]:
        m = tuple(1 if j == i else 0 for j in range(self.r))
        return self.element({m})

    # -- Hopf structure for polynomial algebras on primitive generators --
    def coproduct_reduced_iterate(self, n: int, d: int) -> List[int]:
        """Matrix of the iterated reduced coproduct H~^d -> H~^{(x) n+1}.

        Generators are primitive; Psi(x^a) splits the exponent of each
        generator into disjoint binary digits (Lucas).
        """
        if self.relations:
            raise NoCoproduct(f"{self.name} is not a polynomial algebra")
        keys: Dict[tuple, int] = {}
        cols = []
        for m in self.module.labels[d]:
            v = 0
            for parts in _splits_mono(m, n + 1):
                if any(not any(p) for p in parts):
                    continue
                key = tuple(parts)
                if key not in keys:
                    keys[key] = len(keys)
                v ^= 1 << keys[key]
            cols.append(v)
        return cols


def _bit_splits(e: int, k: int):
    """Ordered k-tuples of disjoint submasks of e with union e."""
    bitsl = [1 << b for b in range(e.bit_length()) if (e >> b) & 1]
    for assign in itertools.product(range(k), repeat=len(bitsl)):
        parts = [0] * k
        for bit, slot in zip(bitsl, assign):
            parts[slot] |= bit
        yield tuple(parts)


def _splits_mono(m: Mono, k: int):
    per = [list(_bit_splits(e, k)) for e in m]
    for choice in itertools.product(*per):
        yield tuple(tuple(choice[g][s] for g in range(len(m))) for s in range(k))


def poly_algebra(r: int, top: int) -> PolyQuotient:
    """H*(BV) = GF(2)[x_1..x_r], |x_i| = 1, Sq(x) = x + x^2."""
    sqs = []
    for i in range(r):
        x = tuple(1 if j == i else 0 for j in range(r))
        x2 = tuple(2 if j == i else 0 for j in range(r))
        sqs.append({x, x2})
    return PolyQuotient([1] * r, sqs, [], top, f"H*(BV_{r})")


def primitive_filtration(K: UnstableAlgebra, n: int) -> List[gf2.Subspace]:
    """ker of the iterated reduced coproduct on the augmentation ideal
    (degree 0 contributes nothing)."""
    M = K.module
    out = [gf2.Subspace(M.dim(0))]
    for d in range(1, M.top + 1):
        if n == 0:
            out.append(gf2.Subspace(M.dim(d)))
            continue
        out.append(gf2.Subspace(M.dim(d), gf2.kernel(K.coproduct_reduced_iterate(n, d))))
    return out


def s3_mod_q8(top: int = 8) -> PolyQuotient:
    """Z/2[x,y]/(x^2+xy+y^2, x^2y+xy^2); Sq^1 x = x^2 and Sq^1 y = y^2 are forced."""
    sqs = [{(1, 0), (2, 0)}, {(0, 1), (0, 2)}]
    rels = [{(2, 0), (1, 1), (0, 2)}, {(2, 1), (1, 2)}]
    return PolyQuotient([1, 1], sqs, rels, top, "H*(S3/Q8)")


def bq8(top: int = 8) -> PolyQuotient:
    """H*(S^3/Q_8) (x) Phi^2 H*(BZ/2): a third generator z in degree 4 with
    Sq(z) = z + z^2."""
    sqs = [{(1, 0, 0), (2, 0, 0)}, {(0, 1, 0), (0, 2, 0)}, {(0, 0, 1), (0, 0, 2)}]
    rels = [{(2, 0, 0), (1, 1, 0), (0, 2, 0)}, {(2, 1, 0), (1, 2, 0)}]
    return PolyQuotient([1, 1, 4], sqs, rels, top, "H*(BQ8)")


# ---------------------------------------------------------------------------
# free unstable algebras


class FreeUnstableAlgebra(UnstableAlgebra):
    """U(M) = S*(M)/(Sq^{|x|}x - x^2), truncated at M.top.

    Square-free monomials in a basis of M form a basis: x^2 rewrites to
    P_0 x, and the length filtration has the exterior powers as quotients.
    Basis keys are sorted tuples of ``(degree, index)`` pairs.
    """

    def __init__(self, M: Module, top: Optional[int] = None, name: str = ""):
        top = M.top if top is None else min(top, M.top)
        self.base = M
        self.name = name or f"U({M.name})"
        gens = [(d, i) for d in range(1, top + 1) for i in range(M.dim(d))]
        labels = [[] for _ in range(top + 1)]
        for subset in _subsets_by_degree(gens, top):
            labels[sum(d for d, _ in subset)].append(subset)
        for d in range(top + 1):
            labels[d].sort(key=lambda s: (len(s), s))
        self.index = [{s: i for i, s in enumerate(l)} for l in labels]
        self.labels = labels
        self._top = top
        self._reduce_cache: Dict[tuple, frozenset] = {}
        self._sq_cache: Dict[tuple, frozenset] = {}

        def sq_basis(k, d, i):
            return self._vec(d + k, self._sq_mono(k, labels[d][i]))

        self.module = Module.build([len(l) for l in labels], sq_basis, top, min(top, M.cert),
                                   labels, self.name)

    def _vec(self, d, monos) -> int:
        v = 0
        for m in monos:
            v ^= 1 << self.index[d][m]
        return v

    def reduce(self, mono: tuple) -> frozenset:
        """Square-free normal form of a sorted multiset of basis keys."""
        if mono in self._reduce_cache:
            return self._reduce_cache[mono]
        rep = None
        for a, b in zip(mono, mono[1:]):
            if a == b:
                rep = a
                break
        if rep is None:
            out = frozenset([mono])
        else:
            d, i = rep
            rest = list(mono)
            rest.remove(rep)
            rest.remove(rep)
            acc: set = set()
            if 2 * d <= self._top:
                p0 = self.base.sq(d, d, 1 << i)
                for j in gf2.bits(p0):
                    acc ^= self.reduce(tuple(sorted(rest + [(2 * d, j)])))
            out = frozenset(acc)
        self._reduce_cache[mono] = out
        return out

    def _sq_mono(self, k: int, mono: tuple) -> frozenset:
        """Cartan formula peeling off the first factor, memoized."""
        key = (k, mono)
        hit = self._sq_cache.get(key)
        if hit is not None:
            return hit
        M = self.base
        if not mono:
            out = frozenset([()]) if k == 0 else frozenset()
        elif sum(d for d, _ in mono) + k > self._top:
            out = frozenset()
        else:
            (d, i), rest = mono[0], mono[1:]
            acc: set = set()
            for t in range(min(k, d) + 1):
                a = M.sq(t, d, 1 << i)
                if not a:
                    continue
                tail = self._sq_mono(k - t, rest)
                for j in gf2.bits(a):
                    for m in tail:
                        acc ^= self.reduce(tuple(sorted(((d + t, j),) + m)))
            out = frozenset(acc)
        self._sq_cache[key] = out
        return out

    def mul(self, d1, v1, d2, v2) -> int:
        if d1 + d2 > self._top:
            return 0
        out = 0
        for i in gf2.bits(v1):
            for j in gf2.bits(v2):
                for m in self.reduce(tuple(sorted(self.labels[d1][i] + self.labels[d2][j]))):
                    out ^= 1 << self.index[d1 + d2][m]
        return out

    def length_filtration(self, k: int) -> List[gf2.Subspace]:
        """U^k: span of monomials of length at most k (a submodule)."""
        return [gf2.Subspace(len(l), [1 << i for i, s in enumerate(l) if len(s) <= k])
                for l in self.labels]

    def exterior_dims(self, k: int) -> List[int]:
        """dim Lambda^k M = dim U^k / U^{k-1}, degreewise."""
        return [sum(1 for s in l if len(s) == k) for l in self.labels]


def _subsets_by_degree(gens, top):
    out = [()]

    def rec(start, acc, deg):
        for idx in range(start, len(gens)):
            d = gens[idx][0]
            if deg + d > top:
                continue
            nxt = acc + (gens[idx],)
            out.append(nxt)
            rec(idx + 1, nxt, deg + d)

    rec(0, (), 0)
    return out


def free_unstable_algebra(M: Module, top: Optional[int] = None) -> FreeUnstableAlgebra:
    return FreeUnstableAlgebra(M, top)


def kvm(m: int, top: int) -> FreeUnstableAlgebra:
    """H*(K(Z/2, m)) = U(F(m))."""
    from .umod import free

    return FreeUnstableAlgebra(free(m, top), top, f"H*(K(Z/2,{m}))")
