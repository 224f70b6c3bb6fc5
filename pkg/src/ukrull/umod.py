"""Unstable modules over the mod 2 Steenrod algebra as truncated graded data.

Two representations live here:

* :class:`Module` -- a *realized* module: a GF(2) vector space in each degree
  ``0..top`` together with matrices for every ``Sq^k`` that stays inside the
  window. Data is exact through ``cert``.
* :class:`PresentedModule` -- generators and relations in a sum of free
  unstable modules ``F(n)``. Exact in every degree; realize it to get numbers.

Vectors and matrices use the int-bitmask conventions of :mod:`ukrull.gf2`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from . import gf2
from .errors import CertificationError, DesuspensionError, WindowError
from .steenrod import _sq_times, adem_normalize, admissible_basis, excess, is_admissible

Word = Tuple[int, ...]


class Module:
    """A realized unstable module, truncated at degree ``top``.

    ``act[(k, d)]`` lists the images of the basis of ``M^d`` in ``M^{d+k}``
    under ``Sq^k``; absent keys mean the zero map. Only ``1 <= k <= d`` and
    ``d + k <= top`` are ever stored (instability kills ``k > d``).
    """

    def __init__(self, dims, act, top=None, cert=None, labels=None, name=""):
        dims = list(dims)
        self.top = len(dims) - 1 if top is None else top
        dims = dims + [0] * (self.top + 1 - len(dims))
        self.dims = tuple(dims[: self.top + 1])
        self.act = {key: tuple(v) for key, v in act.items() if v and any(v)}
        self.cert = self.top if cert is None else min(cert, self.top)
        self.labels = labels
        self.name = name

    # -- basic access -------------------------------------------------
    def dim(self, d: int) -> int:
        if d < 0 or d > self.top:
            return 0
        return self.dims[d]

    def sq(self, k: int, d: int, v: int) -> int:
        if k == 0 or not v:
            return v
        if k > d or d + k > self.top:
            if k > d:
                return 0
            raise CertificationError(f"Sq^{k} from degree {d} leaves the window", d + k)
        images = self.act.get((k, d))
        if images is None:
            return 0
        return gf2.apply(images, v)

    def sq_matrix(self, k: int, d: int) -> List[int]:
        images = self.act.get((k, d))
        if images is None:
            return [0] * self.dim(d)
        return list(images)

    def apply_word(self, word: Word, d: int, v: int) -> int:
        """Apply ``Sq^{a1} ... Sq^{ak}`` (rightmost first) to ``v`` in degree ``d``."""
        for a in reversed(word):
            v = self.sq(a, d, v)
            d += a
            if not v:
                return 0
        return v

    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return not any(self.dims)

    def support(self) -> List[int]:
        return [d for d, n in enumerate(self.dims) if n]

    def dims_through(self, d: int) -> Tuple[int, ...]:
        return tuple(self.dim(i) for i in range(d + 1))

    def label(self, d: int, i: int):
        if self.labels is None:
            return (d, i)
        return self.labels[d][i]

    def restrict_top(self, top: int) -> "Module":
        """Forget everything above degree ``top``."""
        top = min(top, self.top)
        act = {(k, d): v for (k, d), v in self.act.items() if d + k <= top}
        labels = None if self.labels is None else self.labels[: top + 1]
        return Module(self.dims[: top + 1], act, top, min(self.cert, top), labels, self.name)

    def __repr__(self):
        shown = ", ".join(f"{d}:{n}" for d, n in enumerate(self.dims) if n)
        return f"Module({self.name or '?'}; top={self.top}, cert={self.cert}; {shown})"

    # -- validation -----------------------------------------------------
    def check(self, through: Optional[int] = None) -> None:
        """Check instability storage and Adem compatibility through ``through``."""
        through = self.cert if through is None else through
        for (k, d), images in self.act.items():
            if k > d:
                raise AssertionError(f"unstable entry Sq^{k} in degree {d}")
            if len(images) != self.dim(d):
                raise AssertionError(f"bad matrix shape for Sq^{k} on degree {d}")
        for d in range(through + 1):
            n = self.dim(d)
            if not n:
                continue
            for b in range(1, through - d + 1):
                for a in range(1, 2 * b):
                    if d + a + b > through:
                        break
                    rhs_words = adem_normalize((a, b))
                    for i in range(n):
                        v = 1 << i
                        lhs = self.sq(a, d + b, self.sq(b, d, v))
                        rhs = 0
                        for w in rhs_words:
                            rhs ^= self.apply_word(w, d, v)
                        if lhs != rhs:
                            raise AssertionError(
                                f"Adem relation Sq^{a}Sq^{b} fails on degree {d} basis {i}")

    @classmethod
    def build(cls, dims, sq_basis, top, cert=None, labels=None, name="") -> "Module":
        """Assemble a module from a function ``sq_basis(k, d, i) -> image``."""
        act = {}
        for d in range(top + 1):
            n = dims[d] if d < len(dims) else 0
            if not n:
                continue
            for k in range(1, min(d, top - d) + 1):
                if d + k >= len(dims) or not dims[d + k]:
                    continue
                act[(k, d)] = [sq_basis(k, d, i) for i in range(n)]
        return cls(dims, act, top, cert, labels, name)


def zero_module(top: int) -> Module:
    return Module([0] * (top + 1), {}, top, name="0")


def point(s: int, top: int) -> Module:
    """``Sigma^s Z/2``: one class in degree ``s``."""
    dims = [0] * (top + 1)
    if s <= top:
        dims[s] = 1
    return Module(dims, {}, top, labels=None, name=f"S^{s}Z/2" if s else "Z/2")


@dataclass
class ModuleMap:
    source: Module
    target: Module
    mats: Dict[int, List[int]]
    cert: int

    def matrix(self, d: int) -> List[int]:
        m = self.mats.get(d)
        if m is None:
            return [0] * self.source.dim(d)
        return m

    def __call__(self, d: int, v: int) -> int:
        return gf2.apply(self.matrix(d), v)

    def check(self) -> None:
        """Sq-equivariance through the certified degree."""
        src, tgt = self.source, self.target
        for d in range(self.cert + 1):
            for k in range(1, min(d, self.cert - d) + 1):
                for i in range(src.dim(d)):
                    v = 1 << i
                    lhs = self(d + k, src.sq(k, d, v))
                    rhs = tgt.sq(k, d, self(d, v))
                    if lhs != rhs:
                        raise AssertionError(f"map not Sq^{k}-equivariant in degree {d}")

    def is_zero(self) -> bool:
        return all(not any(m) for m in self.mats.values())

    def ranks(self) -> List[int]:
        return [gf2.rank(self.matrix(d)) for d in range(self.cert + 1)]


def identity_map(M: Module) -> ModuleMap:
    return ModuleMap(M, M, {d: [1 << i for i in range(M.dim(d))] for d in range(M.top + 1)}, M.cert)


def compose_maps(g: ModuleMap, f: ModuleMap) -> ModuleMap:
    cert = min(f.cert, g.cert)
    return ModuleMap(f.source, g.target,
                     {d: gf2.compose(g.matrix(d), f.matrix(d)) for d in range(cert + 1)}, cert)


# ---------------------------------------------------------------------------
# free modules and presentations


@lru_cache(maxsize=None)
def _free_sq(k: int, word: Word, n: int) -> Tuple[Word, ...]:
    """Sq^k applied to Sq^word iota_n in F(n): admissible words of excess <= n."""
    return tuple(sorted(w for w in _sq_times(k, word) if excess(w) <= n))


def free_word_times(theta: Word, word: Word, n: int) -> frozenset:
    """Sq^theta applied to Sq^word iota_n inside F(n)."""
    acc = {word}
    for a in reversed(theta):
        nxt = set()
        for w in acc:
            nxt.symmetric_difference_update(_free_sq(a, w, n))
        acc = nxt
        if not acc:
            break
    return frozenset(acc)


class FreeModule:
    """The free unstable module on generators of the given degrees, truncated."""

    def __init__(self, gen_degrees: Sequence[int], top: int):
        self.gen_degrees = tuple(gen_degrees)
        self.top = top
        self.basis: List[List[Tuple[Word, int]]] = []
        self.index: List[Dict[Tuple[Word, int], int]] = []
        by_degree: Dict[int, List[int]] = {}
        for g, n in enumerate(self.gen_degrees):
            by_degree.setdefault(n, []).append(g)
        for d in range(top + 1):
            elems = []
            for n in sorted(by_degree):
                if n > d:
                    break
                words = admissible_basis(d - n, n)
                for g in by_degree[n]:
                    elems.extend((w, g) for w in words)
            self.basis.append(elems)
            self.index.append({e: i for i, e in enumerate(elems)})
        self._sq_cache: Dict[Tuple[int, int], List[int]] = {}

    def dim(self, d: int) -> int:
        return len(self.basis[d]) if 0 <= d <= self.top else 0

    def to_vector(self, d: int, terms) -> int:
        idx = self.index[d]
        v = 0
        for t in terms:
            v ^= 1 << idx[t]
        return v

    def to_terms(self, d: int, v: int) -> frozenset:
        return frozenset(self.basis[d][i] for i in gf2.bits(v))

    def sq_images(self, k: int, d: int) -> List[int]:
        key = (k, d)
        out = self._sq_cache.get(key)
        if out is None:
            out = []
            for w, g in self.basis[d]:
                n = self.gen_degrees[g]
                out.append(self.to_vector(d + k, ((u, g) for u in _free_sq(k, w, n))))
            self._sq_cache[key] = out
        return out

    def sq(self, k: int, d: int, v: int) -> int:
        if k == 0:
            return v
        return gf2.apply(self.sq_images(k, d), v)

    def act_terms(self, theta: Word, terms) -> frozenset:
        """Sq^theta applied to a free-module element given as (word, gen) terms."""
        acc = set()
        for w, g in terms:
            for u in free_word_times(theta, w, self.gen_degrees[g]):
                acc ^= {(u, g)}
        return frozenset(acc)


def element_degree(terms, gen_degrees) -> int:
    degs = {sum(w) + gen_degrees[g] for w, g in terms}
    if len(degs) != 1:
        raise ValueError("element is not homogeneous")
    return degs.pop()


@dataclass
class PresentedModule:
    """Generators with degrees and relations in the free module on them.

    A relation is a frozenset of ``(admissible word, generator index)`` terms.
    ``gen_labels`` are optional names; ``gen_elements`` optionally records the
    ``(degree, vector)`` each generator maps to in ``source``.
    """

    gen_degrees: Tuple[int, ...]
    relations: Tuple[frozenset, ...] = ()
    gen_labels: Optional[Tuple] = None
    gen_elements: Optional[Tuple[Tuple[int, int], ...]] = None
    source: Optional[Module] = None
    window: Optional[int] = None
    name: str = ""
    _rel_degrees: Tuple[int, ...] = field(default=(), repr=False)

    def __post_init__(self):
        self.gen_degrees = tuple(self.gen_degrees)
        self.relations = tuple(frozenset(r) for r in self.relations if r)
        for r in self.relations:
            for w, g in r:
                if not is_admissible(w) or excess(w) > self.gen_degrees[g]:
                    raise ValueError(f"relation term {w} on generator {g} vanishes in the free module")
        self._rel_degrees = tuple(element_degree(r, self.gen_degrees) for r in self.relations)

    @property
    def relation_degrees(self) -> Tuple[int, ...]:
        return self._rel_degrees

    def max_generator_degree(self) -> int:
        return max(self.gen_degrees, default=-1)

    def max_relation_degree(self) -> int:
        return max(self._rel_degrees, default=-1)

    def is_trivially_zero(self) -> bool:
        return not self.gen_degrees

    def __repr__(self):
        return (f"PresentedModule({self.name or '?'}; gens={list(self.gen_degrees)}, "
                f"relation degrees={sorted(self._rel_degrees)})")


def free_presentation(n: int) -> PresentedModule:
    return PresentedModule((n,), (), (f"i{n}",), name=f"F({n})")


def direct_sum_presentation(*ps: PresentedModule) -> PresentedModule:
    degs, rels, labels = [], [], []
    for p in ps:
        off = len(degs)
        degs.extend(p.gen_degrees)
        labels.extend(p.gen_labels or [None] * len(p.gen_degrees))
        rels.extend(frozenset((w, g + off) for w, g in r) for r in p.relations)
    return PresentedModule(tuple(degs), tuple(rels), tuple(labels), name="+".join(p.name for p in ps))


class Realization:
    """Bookkeeping from :func:`realize`: the free cover and relation spaces."""

    def __init__(self, free: FreeModule, spaces: List[gf2.Subspace]):
        self.free = free
        self.spaces = spaces

    def project(self, d: int, v: int) -> int:
        """Free-module vector in degree ``d`` to coordinates of the quotient."""
        return self.spaces[d].quotient_coords(v)

    def project_terms(self, d: int, terms) -> int:
        return self.project(d, self.free.to_vector(d, terms))


def _relation_spaces(free: FreeModule, relations, rel_degrees, top: int) -> List[gf2.Subspace]:
    """Degreewise span of the submodule generated by ``relations``.

    Uses that the Steenrod algebra is generated by the Sq^{2^i}.
    """
    by_degree: Dict[int, List[int]] = {}
    for r, m in zip(relations, rel_degrees):
        if m <= top:
            by_degree.setdefault(m, []).append(free.to_vector(m, r))
    spaces: List[gf2.Subspace] = []
    bases: List[List[int]] = []
    for d in range(top + 1):
        vecs = list(by_degree.get(d, []))
        p = 1
        while p <= d:
            src = d - p
            if bases[src]:
                images = free.sq_images(p, src)
                vecs.extend(gf2.apply(images, v) for v in bases[src])
            p <<= 1
        sp = gf2.Subspace(free.dim(d), vecs)
        spaces.append(sp)
        bases.append(sp.basis)
    return spaces


def realize(P: PresentedModule, top: int, name: str = "") -> Module:
    """Realize a presentation through degree ``top``; exact there.

    The returned module carries a :class:`Realization` in ``.realization``.
    """
    free = FreeModule(P.gen_degrees, top)
    spaces = _relation_spaces(free, P.relations, P.relation_degrees, top)
    dims = [sp.codim for sp in spaces]
    labels = [[free.basis[d][c] for c in spaces[d].complement] for d in range(top + 1)]

    def sq_basis(k, d, i):
        v = 1 << spaces[d].complement[i]
        return spaces[d + k].quotient_coords(free.sq(k, d, v))

    M = Module.build(dims, sq_basis, top, top, labels, name or P.name)
    M.realization = Realization(free, spaces)
    return M


# ---------------------------------------------------------------------------
# standard constructions


def free(n: int, top: int) -> Module:
    """F(n) through degree ``top``; basis Sq^I iota_n with excess(I) <= n."""
    M = realize(free_presentation(n), top, name=f"F({n})")
    return M


def suspend(M: Module, s: int = 1) -> Module:
    top = M.top
    dims = [0] * (top + 1)
    for d in range(top + 1 - s):
        dims[d + s] = M.dim(d)
    act = {}
    for (k, d), images in M.act.items():
        if d + k + s <= top:
            act[(k, d + s)] = images
    labels = None
    if M.labels is not None:
        labels = [[] for _ in range(s)] + [list(M.labels[d]) for d in range(top + 1 - s)]
    return Module(dims, act, top, min(top, M.cert + s), labels,
                  f"S^{s}{M.name}" if s else M.name)


def desuspend(M: Module, s: int = 1) -> Module:
    """``Sigma^{-s} M``; requires M to vanish below ``s`` and stay unstable."""
    for d in range(min(s, M.top + 1)):
        if M.dim(d):
            raise DesuspensionError(f"nonzero class in degree {d} cannot be desuspended")
    top = M.top - s
    dims = [M.dim(d + s) for d in range(top + 1)]
    act = {}
    for (k, d), images in M.act.items():
        if k > d - s:
            if any(images):
                raise DesuspensionError(f"Sq^{k} nonzero on degree {d}; desuspension not unstable")
            continue
        act[(k, d - s)] = images
    labels = None if M.labels is None else [list(M.labels[d + s]) for d in range(top + 1)]
    return Module(dims, act, top, max(-1, M.cert - s), labels, f"S^-{s}{M.name}")


def phi(M: Module) -> Module:
    """Frobenius double: (Phi M)^{2n} = M^n, Sq^{2k} phi(x) = phi(Sq^k x)."""
    top = M.top
    dims = [0] * (top + 1)
    for n in range(top // 2 + 1):
        dims[2 * n] = M.dim(n)
    act = {}
    for (k, d), images in M.act.items():
        if 2 * (d + k) <= top:
            act[(2 * k, 2 * d)] = images
    labels = None
    if M.labels is not None:
        labels = [list(M.labels[d // 2]) if d % 2 == 0 else [] for d in range(top + 1)]
    return Module(dims, act, top, min(top, 2 * M.cert), labels, f"Phi{M.name}")


def lambda_map(M: Module) -> ModuleMap:
    """The natural map Phi M -> M, phi(x) -> Sq^{|x|} x."""
    PM = phi(M)
    cert = min(PM.cert, M.cert)
    mats = {}
    for d in range(cert + 1):
        if d % 2:
            continue
        n = d // 2
        mats[d] = [M.sq(n, n, 1 << i) for i in range(M.dim(n))]
    return ModuleMap(PM, M, mats, cert)


def direct_sum(*mods: Module) -> Module:
    top = min(m.top for m in mods)
    cert = min(m.cert for m in mods)
    dims = [sum(m.dim(d) for m in mods) for d in range(top + 1)]
    act = {}
    for d in range(top + 1):
        for k in range(1, min(d, top - d) + 1):
            images = []
            off = 0
            for m in mods:
                images.extend(v << off for v in m.sq_matrix(k, d))
                off += m.dim(d + k)
            act[(k, d)] = images
    labels = [[(i, m.label(d, j)) for i, m in enumerate(mods) for j in range(m.dim(d))]
              for d in range(top + 1)]
    return Module(dims, act, top, cert, labels, " + ".join(m.name for m in mods))


def tensor(M: Module, N: Module) -> Module:
    """Tensor product with the Cartan formula. Basis (i, j) ordered by the
    degree of the left factor, then i, then j."""
    top = min(M.top, N.top)
    cert = min(M.cert, N.cert)
    offsets: List[Dict[int, int]] = []
    where: List[List[Tuple[int, int, int]]] = []
    dims = []
    labels = []
    for d in range(top + 1):
        off = {}
        n = 0
        lab = []
        loc = []
        for a in range(d + 1):
            off[a] = n
            da, db = M.dim(a), N.dim(d - a)
            n += da * db
            for i in range(da):
                for j in range(db):
                    lab.append((M.label(a, i), N.label(d - a, j)))
                    loc.append((a, i, j))
        offsets.append(off)
        where.append(loc)
        dims.append(n)
        labels.append(lab)

    def sq_basis(k, d, idx):
        a, i, j = where[d][idx]
        out = 0
        for s in range(k + 1):
            x = M.sq(s, a, 1 << i)
            if not x:
                continue
            y = N.sq(k - s, d - a, 1 << j)
            if not y:
                continue
            na, nb = a + s, d - a + k - s
            base = offsets[d + k][na]
            width = N.dim(nb)
            for xi in gf2.bits(x):
                out ^= y << (base + xi * width)
        return out

    T = Module.build(dims, sq_basis, top, cert, labels, f"({M.name} x {N.name})")
    T.tensor_offsets = offsets
    T.tensor_factors = (M, N)
    return T


def tensor_index(T: Module, a: int, i: int, j: int, d: int) -> int:
    """Basis index in ``T = tensor(M, N)`` of ``m_i (deg a) x n_j (deg d - a)``."""
    M, N = T.tensor_factors
    return T.tensor_offsets[d][a] + i * N.dim(d - a) + j


def tensor_maps(f: ModuleMap, g: ModuleMap, source: Module, target: Module) -> ModuleMap:
    """f x g between tensor products built by :func:`tensor`."""
    cert = min(f.cert, g.cert, source.cert, target.cert)
    M, N = source.tensor_factors
    mats = {}
    for d in range(cert + 1):
        cols = []
        for a in range(d + 1):
            for i in range(M.dim(a)):
                fi = f(a, 1 << i)
                for j in range(N.dim(d - a)):
                    gj = g(d - a, 1 << j)
                    v = 0
                    for p in gf2.bits(fi):
                        for q in gf2.bits(gj):
                            v ^= 1 << tensor_index(target, a, p, q, d)
                    cols.append(v)
        mats[d] = cols
    return ModuleMap(source, target, mats, cert)


def swap_map(M: Module, N: Module, MN: Module, NM: Module) -> ModuleMap:
    cert = min(MN.cert, NM.cert)
    mats = {}
    for d in range(cert + 1):
        cols = []
        for a in range(d + 1):
            for i in range(M.dim(a)):
                for j in range(N.dim(d - a)):
                    cols.append(1 << tensor_index(NM, d - a, j, i, d))
        mats[d] = cols
    return ModuleMap(MN, NM, mats, cert)


# ---------------------------------------------------------------------------
# sub and quotient objects


def submodule(M: Module, spaces: Sequence[gf2.Subspace], name: str = "", cert=None):
    """Sub-object spanned degreewise by ``spaces`` (must be Sq-closed).

    Returns ``(S, inclusion)``.
    """
    cert = M.cert if cert is None else cert
    top = M.top
    dims = [spaces[d].dim if d < len(spaces) else 0 for d in range(top + 1)]

    def sq_basis(k, d, i):
        w = M.sq(k, d, spaces[d].basis[i])
        return spaces[d + k].coords(w)

    labels = None
    S = Module.build(dims, sq_basis, top, cert, labels, name)
    inc = ModuleMap(S, M, {d: list(spaces[d].basis) for d in range(top + 1)}, min(cert, M.cert))
    return S, inc


def quotient(M: Module, spaces: Sequence[gf2.Subspace], name: str = "", cert=None):
    """Quotient by the Sq-closed subspaces ``spaces``; returns ``(Q, projection)``."""
    cert = M.cert if cert is None else cert
    top = M.top
    dims = [spaces[d].codim for d in range(top + 1)]

    def sq_basis(k, d, i):
        w = M.sq(k, d, spaces[d].lift(1 << i))
        return spaces[d + k].quotient_coords(w)

    labels = None
    if M.labels is not None:
        labels = [[M.labels[d][c] for c in spaces[d].complement] for d in range(top + 1)]
    Q = Module.build(dims, sq_basis, top, cert, labels, name)
    proj = ModuleMap(M, Q, {d: [spaces[d].quotient_coords(1 << i) for i in range(M.dim(d))]
                            for d in range(top + 1)}, min(cert, M.cert))
    return Q, proj


def kernel_spaces(f: ModuleMap) -> List[gf2.Subspace]:
    return [gf2.Subspace(f.source.dim(d), gf2.kernel(f.matrix(d))) for d in range(f.source.top + 1)]


def image_spaces(f: ModuleMap) -> List[gf2.Subspace]:
    return [gf2.Subspace(f.target.dim(d), f.matrix(d)) for d in range(f.target.top + 1)]


def kernel(f: ModuleMap, name: str = "ker"):
    S, inc = submodule(f.source, kernel_spaces(f), name, cert=f.cert)
    return S, inc


def image(f: ModuleMap, name: str = "im"):
    return submodule(f.target, image_spaces(f), name, cert=f.cert)


def cokernel(f: ModuleMap, name: str = "coker"):
    return quotient(f.target, image_spaces(f), name, cert=f.cert)


def pullback(f: ModuleMap, g: ModuleMap, name: str = "pullback"):
    """Pullback of f: A -> Q and g: B -> Q; returns ``(P, proj_A, proj_B)``."""
    A, B = f.source, g.source
    S = direct_sum(A, B)
    cert = min(f.cert, g.cert)
    mats = {}
    for d in range(S.top + 1):
        mats[d] = list(f.matrix(d)) + list(g.matrix(d))
    fg = ModuleMap(S, f.target, mats, cert)
    P, inc = kernel(fg, name)
    pa = {d: [v & ((1 << A.dim(d)) - 1) for v in inc.matrix(d)] for d in range(P.top + 1)}
    pb = {d: [v >> A.dim(d) for v in inc.matrix(d)] for d in range(P.top + 1)}
    return P, ModuleMap(P, A, pa, cert), ModuleMap(P, B, pb, cert)


def truncate_above(M: Module, r: int) -> Module:
    """M / M^{>r}."""
    if r > M.cert:
        raise WindowError(f"truncation degree {r} exceeds cert {M.cert}", r)
    top = M.top
    dims = [M.dim(d) if d <= r else 0 for d in range(top + 1)]
    act = {(k, d): v for (k, d), v in M.act.items() if d + k <= r}
    labels = None
    if M.labels is not None:
        labels = [list(M.labels[d]) if d <= r else [] for d in range(top + 1)]
    return Module(dims, act, top, M.cert, labels, f"{M.name}/>{r}")


def loops(M: Module):
    """(Omega M, Omega^1 M) from 0 -> S Om^1 M -> Phi M -> M -> S Om M -> 0."""
    lam = lambda_map(M)
    C, _ = cokernel(lam)
    K, _ = kernel(lam)
    return desuspend(C), desuspend(K)


def is_reduced_by_lambda(M: Module) -> bool:
    """True when lambda: Phi M -> M is injective through the window."""
    lam = lambda_map(M)
    return all(gf2.rank(lam.matrix(d)) == lam.source.dim(d) for d in range(lam.cert + 1))


# ---------------------------------------------------------------------------
# presentations of realized modules and Hom


def _a_span(M: Module, seeds: Dict[int, List[int]], top: int) -> List[gf2.Subspace]:
    spaces = []
    for d in range(top + 1):
        vecs = list(seeds.get(d, []))
        p = 1
        while p <= d:
            if spaces[d - p].basis:
                vecs.extend(M.sq(p, d - p, v) for v in spaces[d - p].basis)
            p <<= 1
        spaces.append(gf2.Subspace(M.dim(d), vecs))
    return spaces


def present(M: Module, g: int, window: Optional[int] = None, name: str = "") -> PresentedModule:
    """Greedy minimal presentation of the submodule generated through degree ``g``.

    Generators are chosen lowest degree first in canonical basis order.
    Relations are complete through ``window`` (default: ``M.cert``).
    """
    if g > M.cert:
        raise WindowError(f"generation degree {g} exceeds cert {M.cert}", g)
    window = M.cert if window is None else window
    if window > M.cert:
        raise WindowError(f"relation window {window} exceeds cert {M.cert}", window)
    gens: List[Tuple[int, int]] = []
    spaces: List[gf2.Subspace] = []
    for d in range(window + 1):
        vecs = []
        p = 1
        while p <= d:
            if spaces[d - p].basis:
                vecs.extend(M.sq(p, d - p, v) for v in spaces[d - p].basis)
            p <<= 1
        ech = gf2.Echelon(vecs)
        if d <= g:
            for i in range(M.dim(d)):
                if ech.add(1 << i):
                    gens.append((d, 1 << i))
                    vecs.append(1 << i)
        spaces.append(gf2.Subspace(M.dim(d), vecs))
    degs = tuple(d for d, _ in gens)
    free_mod = FreeModule(degs, window)
    relations = []
    rel_bases: List[List[int]] = []
    for d in range(window + 1):
        evals = []
        for w, gi in free_mod.basis[d]:
            gd, gv = gens[gi]
            evals.append(M.apply_word(w, gd, gv))
        ker = gf2.kernel(evals)
        vecs = []
        p = 1
        while p <= d:
            if rel_bases[d - p]:
                imgs = free_mod.sq_images(p, d - p)
                vecs.extend(gf2.apply(imgs, v) for v in rel_bases[d - p])
            p <<= 1
        ech = gf2.Echelon(vecs)
        for v in ker:
            if ech.add(v):
                relations.append(free_mod.to_terms(d, v))
        rel_bases.append(ech.basis())
    return PresentedModule(degs, tuple(relations), tuple(f"g{d}_{i}" for i, (d, _) in enumerate(gens)),
                           tuple(gens), M, window, name or f"pres({M.name})")


def evaluation_map(P: PresentedModule, R: Module, target: Module) -> ModuleMap:
    """The map realize(P) -> target sending generators to ``P.gen_elements``."""
    if P.gen_elements is None:
        raise ValueError("presentation has no generator images")
    cert = min(R.cert, target.cert, P.window if P.window is not None else R.cert)
    mats = {}
    for d in range(cert + 1):
        cols = []
        for w, gi in R.labels[d]:
            gd, gv = P.gen_elements[gi]
            cols.append(target.apply_word(w, gd, gv))
        mats[d] = cols
    return ModuleMap(R, target, mats, cert)


def hom_space(P: PresentedModule, N: Module) -> List[Tuple[int, ...]]:
    """Basis of Hom_U(P, N): each element lists the image vector of every generator."""
    for d in P.gen_degrees:
        if d > N.cert:
            raise CertificationError(f"generator degree {d} exceeds cert {N.cert}", d)
    for d in P.relation_degrees:
        if d > N.cert:
            raise CertificationError(f"relation degree {d} exceeds cert {N.cert}", d)
    unknowns = []  # (generator, basis index)
    for gi, gd in enumerate(P.gen_degrees):
        unknowns.extend((gi, i) for i in range(N.dim(gd)))
    rel_offsets = []
    off = 0
    for m in P.relation_degrees:
        rel_offsets.append(off)
        off += N.dim(m)
    cols = []
    for gi, i in unknowns:
        gd = P.gen_degrees[gi]
        v = 0
        for r_idx, r in enumerate(P.relations):
            acc = 0
            for w, g in r:
                if g == gi:
                    acc ^= N.apply_word(w, gd, 1 << i)
            v |= acc << rel_offsets[r_idx]
        cols.append(v)
    out = []
    for combo in gf2.kernel(cols):
        images = [0] * len(P.gen_degrees)
        for u in gf2.bits(combo):
            gi, i = unknowns[u]
            images[gi] ^= 1 << i
        out.append(tuple(images))
    return out


def hom_to_map(P: PresentedModule, images: Sequence[int], R: Module, N: Module) -> ModuleMap:
    """Realize a Hom element as a ModuleMap realize(P) -> N."""
    cert = min(R.cert, N.cert)
    mats = {}
    for d in range(cert + 1):
        cols = []
        for w, gi in R.labels[d]:
            cols.append(N.apply_word(w, P.gen_degrees[gi], images[gi]))
        mats[d] = cols
    return ModuleMap(R, N, mats, cert)
