"""Lannes' reduced T-functor on presented modules.

Tbar is left adjoint to ``H~ (x) -`` where ``H~ = x GF(2)[x]``. On a free
module, Hom(Tbar F(n), N) = (H~ (x) N)^n = sum_{j<n} N^j, so

    Tbar F(n) = F(0) + F(1) + ... + F(n-1)

with universal element ``u_n = sum_j x^{n-j} (x) e_j``. Iterating with
``n`` adjunction slots, Tbar^n F(m) is the sum over tuples ``a`` of positive
integers with ``|a| <= m`` of F(m - |a|), with universal element
``sum_a x_1^{a_1} ... x_n^{a_n} (x) e_a``; the symmetric group permutes the
slots. A map of free modules is carried along by expanding ``theta . u``
with the Cartan formula and reading off the coefficient of each x-monomial.
Everything is exact: Tbar is computed on presentations, never on truncated
realized data.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from . import gf2
from .umod import (FreeModule, Module, ModuleMap, PresentedModule, Realization, _free_sq,
                   realize)

Word = Tuple[int, ...]


def _submasks_upto(b: int, limit: int):
    """Nonzero-or-zero submasks of ``b`` not exceeding ``limit`` (Sq^i x^b != 0)."""
    s = b
    out = []
    while True:
        if s <= limit:
            out.append(s)
        if s == 0:
            break
        s = (s - 1) & b
    return out


def _distribute(k: int, exps: Tuple[int, ...]):
    """All (i_1..i_n) with sum k and C(b_m, i_m) odd for every slot."""
    n = len(exps)
    if n == 0:
        if k == 0:
            yield ()
        return
    if n == 1:
        if (k & ~exps[0]) == 0:
            yield (k,)
        return
    for i in _submasks_upto(exps[0], k):
        for rest in _distribute(k - i, exps[1:]):
            yield (i,) + rest


@lru_cache(maxsize=None)
def _sq_slots(k: int, exps: Tuple[int, ...]):
    return tuple(tuple(b + i for b, i in zip(exps, dist)) for dist in _distribute(k, exps))


def sq_on_terms(k: int, terms, gen_deg: Sequence[int], top: Optional[int] = None) -> set:
    """Sq^k on a GF(2) set of terms ``(x-exponents, word, generator)``.

    The generator index refers to a free module F(gen_deg[g]); terms whose
    module part lands above ``top`` are dropped (Sq never lowers degree).
    """
    out: set = set()
    for exps, w, g in terms:
        j = gen_deg[g]
        base = j + sum(w)
        for r in range(k + 1):
            if top is not None and base + r > top:
                break
            words = (w,) if r == 0 else _free_sq(r, w, j)
            if not words:
                continue
            new_exps = _sq_slots(k - r, exps)
            if not new_exps:
                continue
            for u in words:
                for e in new_exps:
                    out ^= {(e, u, g)}
    return out


def act_on_terms(theta: Word, terms, gen_deg, top=None) -> set:
    acc = set(terms)
    for a in reversed(theta):
        if a == 0:
            continue
        acc = sq_on_terms(a, acc, gen_deg, top)
        if not acc:
            break
    return acc


def slot_tuples(m: int, n: int):
    """Tuples of n positive ints with sum at most m."""
    if n == 0:
        yield ()
        return
    for a in range(1, m - n + 2):
        for rest in slot_tuples(m - a, n - 1):
            yield (a,) + rest


@dataclass
class TbarData:
    """Tbar^n of a presentation together with slot bookkeeping.

    ``presentation`` has generators labelled ``(g, a)``: the summand
    F(deg g - |a|) of Tbar^n F(deg g) attached to x-monomial ``a``.
    """

    source: PresentedModule
    slots: int
    presentation: PresentedModule
    index: Dict[Tuple[int, Tuple[int, ...]], int]
    top: Optional[int] = None

    def unit_terms(self, gen: int, word: Word = ()) -> set:
        """``Sq^word`` applied to the universal element of generator ``gen``."""
        m = self.source.gen_degrees[gen]
        terms = set()
        for a in slot_tuples(m, self.slots):
            t = self.index.get((gen, a))
            if t is not None:
                terms.add((a, (), t))
        return act_on_terms(word, terms, self.presentation.gen_degrees, self.top)

    def element_unit_terms(self, element) -> set:
        """Universal-element expansion of a free-module element of the source."""
        acc: set = set()
        for w, g in element:
            acc ^= self.unit_terms(g, w)
        return acc


def group_by_monomial(terms) -> Dict[Tuple[int, ...], frozenset]:
    groups: Dict[Tuple[int, ...], set] = {}
    for e, w, t in terms:
        groups.setdefault(e, set()).symmetric_difference_update({(w, t)})
    return {e: frozenset(s) for e, s in groups.items() if s}


def tbar_data(P: PresentedModule, slots: int = 1, top: Optional[int] = None) -> TbarData:
    """Tbar^slots P as a presentation; generators above ``top`` are omitted.

    With ``top`` set, the result presents a module agreeing with Tbar^slots P
    in degrees ``<= top`` (that is all realizations there ever need).
    """
    labels = []
    degs = []
    index = {}
    for g, m in enumerate(P.gen_degrees):
        for a in slot_tuples(m, slots):
            j = m - sum(a)
            if top is not None and j > top:
                continue
            index[(g, a)] = len(labels)
            labels.append((g, a))
            degs.append(j)
    TP = PresentedModule(tuple(degs), (), tuple(labels), name=f"Tbar^{slots}({P.name})")
    data = TbarData(P, slots, TP, index, top)
    rels = []
    for r in P.relations:
        for e, rel in sorted(group_by_monomial(data.element_unit_terms(r)).items()):
            rels.append(rel)
    data.presentation = PresentedModule(tuple(degs), tuple(rels), tuple(labels),
                                        name=TP.name)
    return data


def tbar(P: PresentedModule) -> PresentedModule:
    """Presentation of Tbar P (exact in all degrees)."""
    return tbar_data(P, 1).presentation


def tbar_free(n: int):
    """Tbar F(n) = F(0) + ... + F(n-1), and its universal element.

    Returns ``(presentation, unit)`` where ``unit`` lists ``(x-exponent,
    summand index)`` pairs of ``u_n = sum_j x^{n-j} (x) e_j``.
    """
    from .umod import free_presentation

    data = tbar_data(free_presentation(n), 1)
    unit = sorted((a[0], data.index[(0, a)]) for (g, a) in data.index)
    return data.presentation, unit


def tbar_map(source_degrees: Sequence[int], target_degrees: Sequence[int],
             images: Sequence[frozenset]):
    """Tbar of a map between sums of free modules.

    ``images[s]`` is the image of source generator ``s`` as a set of
    ``(word, target generator)`` terms. Returns ``(Tsource, Ttarget, timages)``
    where ``timages[t]`` is the image of the t-th generator of Tbar(source).
    """
    src = PresentedModule(tuple(source_degrees), ())
    tgt = PresentedModule(tuple(target_degrees), ())
    sdata = tbar_data(src, 1)
    tdata = tbar_data(tgt, 1)
    out = []
    for (s, a) in sdata.presentation.gen_labels:
        groups = group_by_monomial(tdata.element_unit_terms(images[s]))
        out.append(groups.get(a, frozenset()))
    return sdata.presentation, tdata.presentation, out


# ---------------------------------------------------------------------------
# realized iterates with symmetric group action


def permute_tuple(perm: Tuple[int, ...], a: Tuple[int, ...]) -> Tuple[int, ...]:
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[perm[i]] = v
    return tuple(out)


def all_perms(n: int):
    return list(itertools.permutations(range(n)))


@dataclass
class EquivariantModule:
    """A realized module with a symmetric group acting by module maps.

    ``action[perm][d]`` are the column images of ``perm`` on degree ``d``.
    """

    module: Module
    arity: int
    action: Dict[Tuple[int, ...], Dict[int, List[int]]]
    presentation: Optional[PresentedModule] = None

    def matrix(self, perm, d) -> List[int]:
        return self.action[tuple(perm)][d]

    def fixed_dim(self, group: Sequence[Tuple[int, ...]], d: int) -> int:
        n = self.module.dim(d)
        if not n:
            return 0
        cols = []
        for i in range(n):
            v = 0
            for k, p in enumerate(group):
                img = self.action[tuple(p)][d][i] ^ (1 << i)
                v |= img << (k * n)
            cols.append(v)
        return len(gf2.kernel(cols))

    def check(self) -> None:
        """Group law and Sq-equivariance of every element."""
        perms = list(self.action)
        ident = tuple(range(self.arity))
        M = self.module
        for d in range(M.top + 1):
            n = M.dim(d)
            if ident in self.action and self.action[ident][d] != [1 << i for i in range(n)]:
                raise AssertionError("identity does not act trivially")
            for p in perms:
                for q in perms:
                    pq = tuple(p[q[i]] for i in range(self.arity))
                    lhs = self.action[pq][d]
                    rhs = gf2.compose(self.action[p][d], self.action[q][d])
                    if lhs != rhs:
                        raise AssertionError(f"group law fails in degree {d}")
        for p in perms:
            ModuleMap(M, M, self.action[p], M.cert).check()


def tbar_iter(P: PresentedModule, n: int, top: int) -> EquivariantModule:
    """Tbar^n P realized through ``top`` with the slot-permutation action."""
    data = tbar_data(P, n, top)
    TP = data.presentation
    T = realize(TP, top)
    free, spaces = T.realization.free, T.realization.spaces
    action = {}
    for perm in all_perms(n):
        relabel = [data.index[(g, permute_tuple(perm, a))] for (g, a) in TP.gen_labels]
        mats = {}
        for d in range(top + 1):
            cols = []
            for c in spaces[d].complement:
                w, t = free.basis[d][c]
                v = 1 << free.index[d][(w, relabel[t])]
                cols.append(spaces[d].quotient_coords(v))
            mats[d] = cols
        action[perm] = mats
    E = EquivariantModule(T, n, action, TP)
    E.data = data
    return E


def is_zero_presentation(P: PresentedModule) -> bool:
    """A presented module is zero iff its generators lie in the relation span.

    Only degrees up to the largest generator degree need checking.
    """
    top = P.max_generator_degree()
    if top < 0:
        return True
    return realize(P, top).is_zero()


def is_in_Un(P: PresentedModule, n: int) -> bool:
    """Membership in the n-th Krull stage: Tbar^{n+1} P = 0."""
    if n < 0:
        return P.is_trivially_zero() or is_zero_presentation(P)
    top = max(P.max_generator_degree() - n - 1, -1)
    if top < 0:
        return True
    data = tbar_data(P, n + 1, top)
    return is_zero_presentation(data.presentation)


def krull_degree(P: PresentedModule, n_max: int = 8) -> Optional[int]:
    """Least n with P in U_n (None if not found up to ``n_max``)."""
    for n in range(n_max + 1):
        if is_in_Un(P, n):
            return n
    return None


# ---------------------------------------------------------------------------
# the unit map


def hbar_power(m: int, top: int) -> Module:
    """H~^{(x) m}: basis x^b for tuples b of positive ints, Cartan action."""
    dims = []
    labels = []
    index = []
    for d in range(top + 1):
        lab = sorted(b for b in _compositions(d, m))
        labels.append(lab)
        index.append({b: i for i, b in enumerate(lab)})
        dims.append(len(lab))

    def sq_basis(k, d, i):
        b = labels[d][i]
        out = 0
        for e in _sq_slots(k, b):
            out ^= 1 << index[d + k][e]
        return out

    H = Module.build(dims, sq_basis, top, top, labels, f"Hbar^{m}")
    H.monomial_index = index
    return H


def _compositions(d: int, m: int):
    if m == 0:
        if d == 0:
            yield ()
        return
    for a in range(1, d - m + 2):
        for rest in _compositions(d - a, m - 1):
            yield (a,) + rest


def unit_matrices(P: PresentedModule, n: int, top: int, M: Optional[Module] = None):
    """Matrices of eta through ``top`` without building the target module.

    Target coordinates in degree d are numbered on first use by the pair
    (x-monomial, Tbar basis index); only kernels are meaningful.
    """
    from .umod import FreeModule, _relation_spaces

    slots = n + 1
    M = realize(P, top) if M is None else M
    ttop = max(top - slots, 0)
    data = tbar_data(P, slots, ttop)
    TP = data.presentation
    free = FreeModule(TP.gen_degrees, ttop)
    proj = Realization(free, _relation_spaces(free, TP.relations, TP.relation_degrees, ttop))
    mats = {}
    for d in range(top + 1):
        keys: Dict[tuple, int] = {}
        cols = []
        for w, g in M.labels[d]:
            v = 0
            for e, rel in group_by_monomial(data.unit_terms(g, w)).items():
                coords = proj.project_terms(d - sum(e), rel)
                for j in gf2.bits(coords):
                    key = (e, j)
                    if key not in keys:
                        keys[key] = len(keys)
                    v ^= 1 << keys[key]
            cols.append(v)
        mats[d] = cols
    return M, mats


def unit_map(P: PresentedModule, n: int, top: int, M: Optional[Module] = None) -> ModuleMap:
    """eta: P -> H~^{(x) n+1} (x) Tbar^{n+1} P, realized through ``top``.

    The target is built as ``tensor(H~^{n+1}, Tbar^{n+1} P)``.
    """
    from .umod import tensor, tensor_index

    slots = n + 1
    M = realize(P, top) if M is None else M
    data = tbar_data(P, slots, max(top - slots, 0))
    T = realize(data.presentation, max(top - slots, 0))
    T = _pad(T, top)
    H = hbar_power(slots, top)
    target = tensor(H, T)
    proj = T.realization
    mats = {}
    for d in range(top + 1):
        cols = []
        for w, g in M.labels[d]:
            v = 0
            for e, rel in group_by_monomial(data.unit_terms(g, w)).items():
                a = sum(e)
                coords = proj.project_terms(d - a, rel)
                hi = H.monomial_index[a][e]
                for j in gf2.bits(coords):
                    v ^= 1 << tensor_index(target, a, hi, j, d)
            cols.append(v)
        mats[d] = cols
    return ModuleMap(M, target, mats, min(M.cert, top))


def _pad(T: Module, top: int) -> Module:
    if T.top >= top:
        return T
    dims = list(T.dims) + [0] * (top - T.top)
    labels = None if T.labels is None else list(T.labels) + [[] for _ in range(top - T.top)]
    out = Module(dims, T.act, top, top, labels, T.name)
    out.realization = T.realization
    return out
