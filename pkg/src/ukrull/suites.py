"""Named verification suites shared by the CLI and the acceptance tests.

Each suite returns a list of :class:`Check` records; a check carries a short
anchor naming the statement it verifies.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from math import factorial
from typing import Callable, Dict, List, Optional, Sequence

from . import gf2, steenrod
from .corpus import example62, f1_tensor, f1_tensor_presentation, sigma_z2
from .kalg import primitive_filtration, poly_algebra
from .krull import krull_in, nil_1
from .lannes import is_in_Un, tbar_iter
from .symseq import regular, same_fixed_points
from .umod import Module, free, free_presentation, phi, submodule


@dataclass
class Check:
    anchor: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteResult:
    name: str
    checks: List[Check] = field(default_factory=list)
    tables: List[tuple] = field(default_factory=list)

    def add(self, anchor: str, passed: bool, detail: str = "") -> bool:
        self.checks.append(Check(anchor, bool(passed), detail))
        return bool(passed)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def dims_of(spaces: Sequence[gf2.Subspace]) -> List[int]:
    return [s.dim for s in spaces]


def support(dims: Sequence[int]) -> List[int]:
    return [d for d, n in enumerate(dims) if n]


# ---------------------------------------------------------------------------
# Adem relations


def _compositions(d: int):
    if d == 0:
        yield ()
        return
    for a in range(1, d + 1):
        for rest in _compositions(d - a):
            yield (a,) + rest


def _random_word(rng: random.Random, d: int):
    word = []
    while d:
        a = rng.randint(1, d)
        word.append(a)
        d -= a
    return tuple(word)


def adem_suite(exhaustive: int = 16, top: int = 30, samples: int = 3000, seed: int = 1) -> SuiteResult:
    """Termination, idempotence and associativity of Adem normalization.

    Words are checked exhaustively through degree ``exhaustive`` and by a
    seeded sample through ``top``; every admissible word through ``top`` is a
    fixed point.
    """
    S = steenrod
    res = SuiteResult("adem")
    res.add("Sq1 Sq1 = 0", S.adem_normalize((1, 1)) == frozenset())
    res.add("Sq2 Sq2 = Sq3 Sq1", S.adem_normalize((2, 2)) == frozenset({(3, 1)}))
    res.add("Sq2 Sq3 = Sq5 + Sq4 Sq1", S.adem_normalize((2, 3)) == frozenset({(5,), (4, 1)}))
    rng = random.Random(seed)
    words = [w for d in range(1, exhaustive) for w in _compositions(d)]
    words += [_random_word(rng, rng.randint(exhaustive, top)) for _ in range(samples)]
    ok_term = True
    ok_idem = True
    for w in words:
        p = S.adem_normalize(w)
        if not all(S.is_admissible(x) and S.degree(x) == S.degree(w) for x in p):
            ok_term = False
        if S.compose(p, frozenset([()])) != p:
            ok_idem = False
    res.add(f"normal forms admissible ({len(words)} words)", ok_term)
    adm = [w for d in range(top + 1) for w in S.admissible_basis(d)]
    res.add("admissible words are fixed points",
            all(S.adem_normalize(w) == frozenset([w]) for w in adm) and ok_idem)
    small = [w for w in adm if S.degree(w) <= 10]
    ok_assoc = True
    triples = [(a, b, c) for a in small for b in small for c in small
               if S.degree(a) + S.degree(b) + S.degree(c) <= 12]
    for _ in range(400):
        a, b, c = (rng.choice(adm) for _ in range(3))
        if S.degree(a) + S.degree(b) + S.degree(c) <= top:
            triples.append((a, b, c))
    for a, b, c in triples:
        A, B, C = (frozenset([x]) for x in (a, b, c))
        lhs = S.compose(S.compose(A, B), C)
        if lhs != S.compose(A, S.compose(B, C)) or lhs != S.adem_normalize(a + b + c):
            ok_assoc = False
            break
    res.add(f"associativity ({len(triples)} triples)", ok_assoc)
    return res


# ---------------------------------------------------------------------------
# Krull stages of free modules and tensor powers


def membership_suite(n_max: int = 3) -> SuiteResult:
    res = SuiteResult("membership")
    for n in range(n_max + 1):
        P = free_presentation(n)
        res.add(f"F({n}) in U_{n}", is_in_Un(P, n))
        res.add(f"F({n}) not in U_{n - 1}", not is_in_Un(P, n - 1))
    return res


def regular_suite(m_max: int = 3, D: int = 16) -> SuiteResult:
    """Tbar^m F(1)^{(x) m} is the regular representation in degree 0."""
    res = SuiteResult("regular")
    for m in range(1, m_max + 1):
        E = tbar_iter(f1_tensor_presentation(m, D), m, 0)
        dims = E.module.dims
        res.tables.append((f"Tbar^{m} F(1)^{m}", list(dims)))
        res.add(f"dim Tbar^{m} F(1)^{m} = {m}!", list(dims) == [factorial(m)])
        E.check()
        res.add(f"fixed points of Tbar^{m} F(1)^{m} match the regular module",
                same_fixed_points(E, regular(m)))
    return res


def locally_finite_part_suite(D: int = 32) -> SuiteResult:
    """k_0 F(1) = 0 while k_0 of F(1)/F(1)^{>1} is everything."""
    res = SuiteResult("locally-finite-part")
    F1 = free(1, 2 * D)
    sp, cert = krull_in(F1, 0, D)
    res.tables.append(("k0 F(1)", dims_of(sp)))
    res.add("k_0 F(1) = 0", cert >= D and not any(dims_of(sp)))
    Z = sigma_z2(2 * D)
    sp, cert = krull_in(Z, 0, D)
    res.tables.append(("k0 Sigma Z/2", dims_of(sp)))
    res.add("k_0 (Sigma Z/2) = Sigma Z/2", cert >= D and dims_of(sp) == list(Z.dims[: D + 1]))
    return res


def example62_suite(D: int = 32) -> SuiteResult:
    """R_0 k_1 M is a proper submodule of k_1 R_0 M for the pullback module M."""
    res = SuiteResult("example62")
    M = example62(4 * D)
    k1, cert = krull_in(M, 1, 2 * D)
    K1, inc = submodule(M.restrict_top(2 * D), k1, "k1M", cert)
    r0k1 = nil_1(K1).reduced
    nr = nil_1(M)
    R0 = nr.reduced
    k1r0, cert2 = krull_in(R0, 1, D)
    a = [r0k1.dim(d) for d in range(D + 1)]
    b = dims_of(k1r0)
    res.tables.append(("R0 k1 M", a))
    res.tables.append(("k1 R0 M", b))
    powers = [2 ** i for i in range(8)]
    res.add("R0 k1 M one-dimensional exactly in degrees 8, 16, 32",
            a == [1 if d in powers and d >= 8 else 0 for d in range(D + 1)] and r0k1.cert >= D)
    res.add("k1 R0 M one-dimensional exactly in degrees 4, 8, 16, 32",
            b == [1 if d in powers and d >= 4 else 0 for d in range(D + 1)] and cert2 >= D)
    # image of k_1 M in R_0 M sits inside k_1 R_0 M and is strictly smaller
    proj = nr.projection
    img = [gf2.Subspace(R0.dim(d), [gf2.apply(proj.matrix(d), v) for v in k1[d].basis])
           for d in range(D + 1)]
    inside = all(img[d].issubset(k1r0[d]) for d in range(D + 1))
    res.add("R0 k1 M -> k1 R0 M is a proper inclusion",
            inside and dims_of(img) == a and a != b)
    return res


def binary_digit_suite(D: int = 32, n_max: int = 3) -> SuiteResult:
    """k_n GF(2)[x] = primitive filtration = span of x^d with at most n binary digits."""
    res = SuiteResult("binary-digits")
    H = poly_algebra(1, 2 * D)
    K = poly_algebra(1, D)
    for n in range(n_max + 1):
        sp, cert = krull_in(H.module, n, D)
        prim = primitive_filtration(K, n)
        digits = [gf2.Subspace(1, [1] if bin(d).count("1") <= n else []) for d in range(D + 1)]
        res.tables.append((f"k{n} GF(2)[x]", dims_of(sp)))
        res.add(f"k_{n} GF(2)[x] = binary-digit span", cert >= D and sp == digits)
        res.add(f"k_{n} GF(2)[x] = primitive filtration in positive degrees",
                sp[1:] == prim[1 : D + 1])
    return res


# ---------------------------------------------------------------------------
# structural properties of k_n on a fixed corpus


def corpus(W: int) -> Dict[str, Module]:
    """Eight small modules realized through W."""
    from .umod import truncate_above, tensor

    return {
        "F(0)": free(0, W),
        "Sigma Z/2": sigma_z2(W),
        "F(1)": free(1, W),
        "F(2)": free(2, W),
        "F(1)xF(1)": f1_tensor(2, W),
        "Phi^2 F(1)": phi(phi(free(1, W))),
        "F(2)/>6": truncate_above(free(2, W), 6),
        "M62": example62(W),
    }


def intersect(A: gf2.Subspace, B: gf2.Subspace) -> gf2.Subspace:
    """A meet B inside a common ambient space."""
    a, b = A.basis, B.basis
    out = []
    for combo in gf2.kernel(list(a) + list(b)):
        v = 0
        for i in gf2.bits(combo):
            if i < len(a):
                v ^= a[i]
        out.append(v)
    return gf2.Subspace(A.n, out)


def push(spaces, f, D) -> List[gf2.Subspace]:
    """Images of subspaces under a module map, degreewise through D."""
    return [gf2.Subspace(f.target.dim(d), [gf2.apply(f.matrix(d), v) for v in spaces[d].basis])
            for d in range(D + 1)]


def tensor_spaces(T: Module, A, B, D: int) -> List[gf2.Subspace]:
    """sum_a A^a (x) B^{d-a} inside T = tensor(M, N), degreewise through D."""
    from .umod import tensor_index

    out = []
    for d in range(D + 1):
        vecs = []
        for a in range(d + 1):
            if a >= len(A) or d - a >= len(B):
                continue
            for x in A[a].basis:
                for y in B[d - a].basis:
                    v = 0
                    for i in gf2.bits(x):
                        for j in gf2.bits(y):
                            v ^= 1 << tensor_index(T, a, i, j, d)
                    vecs.append(v)
        out.append(gf2.Subspace(T.dim(d), vecs))
    return out


def full_spaces(M: Module, D: int) -> List[gf2.Subspace]:
    return [gf2.full_space(M.dim(d)) for d in range(D + 1)]


def property_suite(D: int = 16, n_max: int = 3) -> SuiteResult:
    """Monotonicity, exhaustion, left exactness, commutation with Sigma, Phi
    and nil_1, and the tensor rules for k_n."""
    from .krull import module_presentation
    from .lannes import krull_degree
    from .umod import kernel, lambda_map, suspend, tensor

    W = 2 * D
    res = SuiteResult("properties")
    mods = corpus(W)
    ks: Dict[str, List[List[gf2.Subspace]]] = {}
    for name, M in mods.items():
        rows = []
        for n in range(n_max + 1):
            sp, cert = krull_in(M, n, D)
            if cert < D:
                res.add(f"k_{n} {name} certified through {D}", False, f"cert {cert}")
            rows.append(sp)
        ks[name] = rows
        res.tables.extend((f"k{n} {name}", dims_of(rows[n])) for n in range(n_max + 1))
        res.add(f"monotone filtration on {name}",
                all(rows[n - 1][d].issubset(rows[n][d]) for n in range(1, n_max + 1) for d in range(D + 1)))
        kd = krull_degree(module_presentation(M, D), n_max)
        if kd is not None:
            res.add(f"k_{kd} {name} = {name} (Krull degree {kd})", rows[kd] == full_spaces(M, D))
        # suspension and Frobenius
        S = suspend(M)
        P = phi(M)
        ok_s = ok_p = True
        for n in range(n_max + 1):
            ss, _ = krull_in(S, n, D)
            if any(ss[d + 1] != ks[name][n][d] for d in range(D)) or ss[0].dim:
                ok_s = False
            ps, _ = krull_in(P, n, D)
            for d in range(D + 1):
                want = ks[name][n][d // 2] if d % 2 == 0 else gf2.Subspace(0)
                if ps[d] != want:
                    ok_p = False
        res.add(f"k_n Sigma = Sigma k_n on {name}", ok_s)
        res.add(f"k_n Phi = Phi k_n on {name}", ok_p)
        # nil_1, certified through D/2
        nr = nil_1(M)
        h = D // 2
        nil_sp = [gf2.Subspace(M.dim(d), [gf2.apply(nr.inclusion.matrix(d), v) for v in
                                          gf2.full_space(nr.nil.dim(d)).basis]) for d in range(h + 1)]
        ok_n = True
        for n in range(n_max + 1):
            kn, _ = krull_in(nr.nil, n, h)
            kn = push(kn, nr.inclusion, h)
            if any(kn[d] != intersect(nil_sp[d], ks[name][n][d]) for d in range(h + 1)):
                ok_n = False
        res.add(f"k_n nil_1 = nil_1 k_n on {name}", ok_n)
        # left exactness along lambda: Phi M -> M
        lam = lambda_map(M)
        K, inc = kernel(lam, "ker lambda")
        ok_l = True
        ker_sp = push(full_spaces(K, D), inc, D)
        for n in range(n_max + 1):
            kk, _ = krull_in(K, n, D)
            kp, _ = krull_in(P, n, D)
            if push(kk, inc, D) != [intersect(ker_sp[d], kp[d]) for d in range(D + 1)]:
                ok_l = False
        res.add(f"k_n left exact along lambda on {name}", ok_l)
    # locally finite tensor rule and the tensor formula
    pairs = [("Sigma Z/2", "F(1)"), ("Sigma Z/2", "F(2)"), ("F(0)", "F(1)xF(1)"),
             ("F(1)", "F(1)"), ("F(1)", "F(2)"), ("F(1)", "Phi^2 F(1)")]
    for a, b in pairs:
        T = tensor(mods[a], mods[b])
        for n in range(min(n_max, 2) + 1):
            kt, cert = krull_in(T, n, D)
            want = [gf2.Subspace(T.dim(d)) for d in range(D + 1)]
            for l in range(n + 1):
                part = tensor_spaces(T, ks[a][l], ks[b][n - l], D)
                want = [gf2.Subspace(T.dim(d), want[d].basis + part[d].basis) for d in range(D + 1)]
            res.add(f"k_{n}({a} x {b}) = sum k_l {a} x k_m {b}", kt == want and cert >= D)
        da = krull_degree(module_presentation(mods[a], D), n_max)
        db = krull_degree(module_presentation(mods[b], D), n_max)
        dt = krull_degree(module_presentation(T, D), n_max + 2)
        res.add(f"Krull degree of {a} x {b} is the sum", dt == da + db, f"{dt} vs {da}+{db}")
    return res


def omega_suite(D: int = 16, n_max: int = 3) -> SuiteResult:
    """The four-term sequence for lambda and the Krull degree drop under Omega."""
    from .krull import module_presentation
    from .umod import is_reduced_by_lambda, loops, suspend

    W = 2 * D
    res = SuiteResult("omega")
    for name, M in corpus(W).items():
        Om, Om1 = loops(M)
        cert = min(Om.cert, Om1.cert) + 1
        PM = phi(M)
        exact = all(suspend(Om1).dim(d) - PM.dim(d) + M.dim(d) - suspend(Om).dim(d) == 0
                    for d in range(cert + 1))
        res.add(f"four-term sequence for {name}", exact)
        reduced = is_reduced_by_lambda(M)
        P = module_presentation(M, D)
        if reduced:
            Q = module_presentation(Om, D - 1)
            res.add(f"{name} in U_n iff Omega {name} in U_(n-1)",
                    all(is_in_Un(P, n) == is_in_Un(Q, n - 1) for n in range(n_max + 1)))
            if is_in_Un(P, 0):
                res.add(f"reduced {name} with Tbar = 0 sits in degree 0",
                        all(M.dim(d) == 0 for d in range(1, M.cert + 1)))
    return res


# ---------------------------------------------------------------------------
# the adjunction between U_n / U_{n-1} and symmetric group modules


def adjunction_suite(D: int = 16, n_max: int = 2) -> SuiteResult:
    from .symseq import counit, trivial, verify_unit

    res = SuiteResult("adjunction")
    for n in range(1, n_max + 1):
        for label, N in (("trivial", trivial(n)), ("regular", regular(n))):
            rep = counit(N, D)
            res.add(f"counit iso for the {label} Sigma_{n}-module", rep.iso, f"ranks {rep.ranks}")
        for label, P in ((f"F({n})", free_presentation(n)),
                         (f"F(1)^{n}", f1_tensor_presentation(n, D))):
            u = verify_unit(P, n, D)
            res.tables.append((f"unit kernel {label}", list(u.kernel_dims)))
            res.tables.append((f"unit cokernel {label}", list(u.cokernel_dims)))
            res.add(f"unit kernel and cokernel of {label} lie in U_{n - 1}", u.ok)
    return res


# ---------------------------------------------------------------------------
# sigma


def _sigma_list(P, n_max: int, D: int, top: Optional[int] = None, gen_window=None):
    from .krull import sigma

    out = []
    for n in range(n_max + 1):
        E = sigma(P, n, D, gen_window=gen_window, top=top)
        out.append(E)
    return out


def _zero_or_empty(E) -> bool:
    return not any(E.module.dims)


def sigma_suite(D: int = 16, n_max: int = 3) -> SuiteResult:
    import warnings

    from .krull import CertificationWarning, module_presentation, nil_filtration_locally_finite
    from .symseq import boxtimes, trivial
    from .umod import hom_space, tensor

    res = SuiteResult("sigma")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", CertificationWarning)
        for m in range(1, 3):
            sig = _sigma_list(free_presentation(m), n_max, D)
            ok = True
            for n, E in enumerate(sig):
                if n == m:
                    ok &= list(E.module.dims[:1]) == [1] and not any(E.module.dims[1:])
                    ok &= same_fixed_points(E, trivial(n, E.module.top))
                else:
                    ok &= _zero_or_empty(E)
            res.tables.append((f"sigma_* F({m}) degree-0 dims", [E.module.dim(0) for E in sig]))
            res.add(f"sigma_n F({m}) = Z/2 exactly for n = {m}", ok)
        for m in range(1, 3):
            sig = _sigma_list(f1_tensor_presentation(m, D), n_max, D)
            ok = True
            for n, E in enumerate(sig):
                if n == m:
                    ok &= list(E.module.dims[:1]) == [factorial(m)] and not any(E.module.dims[1:])
                    ok &= same_fixed_points(E, regular(n, E.module.top))
                else:
                    ok &= _zero_or_empty(E)
            res.add(f"sigma_n F(1)^{m} = GF(2)[Sigma_{m}] exactly for n = {m}", ok)
        # monoidality on F(1) x F(2)
        W = 2 * D
        T = tensor(free(1, W), free(2, W))
        st = _sigma_list(module_presentation(T, D), n_max, D, top=0)
        s1 = _sigma_list(free_presentation(1), n_max, D, top=0)
        s2 = _sigma_list(free_presentation(2), n_max, D, top=0)
        box = boxtimes(s1, s2, n_max, 0)
        res.tables.append(("sigma_* (F(1) x F(2))", [E.module.dim(0) for E in st]))
        res.tables.append(("sigma_* F(1) box sigma_* F(2)", [E.module.dim(0) for E in box]))
        res.add("sigma_*(F(1) x F(2)) = sigma_* F(1) box sigma_* F(2) (dims, fixed points)",
                all(st[n].module.dims == box[n].module.dims and same_fixed_points(st[n], box[n])
                    for n in range(n_max + 1)))
        # sigma against Hom out of tensor powers of F(1)
        homs = {n: f1_tensor_presentation(n, D) if n else free_presentation(0) for n in range(n_max + 1)}
        for name, M in (("Sigma Z/2", sigma_z2(W)), ("F(2)/>6", corpus(W)["F(2)/>6"])):
            lf = nil_filtration_locally_finite(M)
            sig = _sigma_list(module_presentation(M, D), n_max, D)
            ok = True
            for s in range(lf.top + 1):
                R = Module([lf.R[s]] + [0] * W, {}, W, W)
                for n in range(n_max + 1):
                    want = len(hom_space(homs[n], R))
                    got = sig[n].module.dim(s) if s <= sig[n].module.top else 0
                    ok &= want == got
            res.add(f"dim (sigma_n {name})^s = dim Hom(F(1)^n, R_s) (locally finite)", ok)
        for r in (1, 2):
            H = poly_algebra(r, W).module
            sig = _sigma_list(module_presentation(H, D), min(n_max, 2), D, top=0)
            got = [E.module.dim(0) for E in sig]
            want = [len(hom_space(homs[n], H)) for n in range(len(sig))]
            res.tables.append((f"sigma_n H*(BV_{r}) in degree 0", got))
            res.add(f"dim (sigma_n H*(BV_{r}))^0 = dim Hom(F(1)^n, H*(BV_{r}))", got == want,
                    f"{got} vs {want}")
    return res


# ---------------------------------------------------------------------------
# unstable algebras


def algebra_suite(D: int = 16, arity: int = 4) -> SuiteResult:
    import warnings

    from .kalg import bq8, kvm, s3_mod_q8
    from .krull import CertificationWarning, module_presentation
    from .symseq import sh_m, trivial, trivial_action

    W = 2 * D
    res = SuiteResult("algebras")
    U1 = kvm(1, W)
    K1 = kvm(1, D)
    for n in range(4):
        sp, cert = krull_in(U1.module, n, D)
        res.add(f"k_{n} U(F(1)) = monomials of length <= {n}",
                cert >= D and sp == K1.length_filtration(n))
        if n:
            prev, _ = krull_in(U1.module, n - 1, D)
            quo = [a.dim - b.dim for a, b in zip(sp, prev)]
            res.add(f"kbar_{n} U(F(1)) has the dimensions of Lambda^{n} F(1)",
                    quo == K1.exterior_dims(n)[: D + 1])
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", CertificationWarning)
        for m in (1, 2):
            # k_4 U(F(1)) needs a generator in degree 15
            Dm = 2 * D if m == 1 else D
            P = module_presentation(kvm(m, 2 * Dm).module, Dm)
            sig = _sigma_list(P, arity, Dm, top=0, gen_window=Dm)
            sh = sh_m(trivial(m), arity, 0)
            res.tables.append((f"sigma_* U(F({m}))", [E.module.dim(0) for E in sig]))
            res.tables.append((f"Sh^{m}_* (Z/2)", [E.module.dim(0) for E in sh]))
            res.add(f"sigma_* U(F({m})) = Sh^{m}_* Z/2 through arity {arity}",
                    all(sig[n].module.dims == sh[n].module.dims and same_fixed_points(sig[n], sh[n])
                        for n in range(arity + 1)))
        # the quaternion group: sigma exact through degree 8
        B = bq8(64).module
        Q = s3_mod_q8(8).module
        P = module_presentation(B, 32)
        sig = _sigma_list(P, 2, 32, top=8)
        res.tables.append(("sigma_0 BQ8", list(sig[0].module.dims)))
        res.add("sigma_0 H*(BQ8) has dims (1, 2, 2, 1)",
                list(sig[0].module.dims[:4]) == [1, 2, 2, 1] and not any(sig[0].module.dims[4:]))
        ok = True
        for n, E in enumerate(sig):
            want = trivial_action(Q, n)
            ok &= list(E.module.dims) == list(Q.dims[: E.module.top + 1]) + [0] * (E.module.top - Q.top)
            ok &= same_fixed_points(E, want, min(E.module.top, Q.top))
        res.add("sigma_* H*(BQ8) = H*(S^3/Q8) x Sh^1_* Z/2 through arity 2", ok)
    return res


# ---------------------------------------------------------------------------
# functors on finite vector spaces


def functor_suite(K: int = 3) -> SuiteResult:
    from math import comb

    from . import genfun as G
    from .krull import present_krull
    from .lannes import tbar
    from .umod import present

    res = SuiteResult("functors")
    for n in range(4):
        deg = G.poly_degree(G.standard_functor("gamma", n + 1, n))
        res.add(f"H_{n} has polynomial degree {n}", deg == n)
    for name in ("barP", "barI", "P_W", "I_W"):
        deg = G.poly_degree(G.standard_functor(name, K))
        res.add(f"{name} is not polynomial within rank {K}", isinstance(deg, G.NotPolynomialWithin))
    I = G.standard_functor("I_W", 7)
    for n in range(4):
        got = list(G.p_n(I, n).dims)
        want = [sum(comb(k, i) for i in range(n + 1)) for k in range(len(got))]
        res.tables.append((f"p_{n} I", got))
        res.add(f"dim p_{n} I(F2^k) = sum_(i<={n}) C(k, i)", got == want and len(got) >= 4)
    P = G.standard_functor("P_W", 6)
    for n in range(3):
        got = list(G.q_n(P, n).dims)
        res.add(f"dim q_{n} P(F2^k) = sum_(i<={n}) C(k, i)",
                got == [sum(comb(k, i) for i in range(n + 1)) for k in range(len(got))])
    W = 16
    bridge = {"F(1)": free_presentation(1), "F(2)": free_presentation(2),
              "F(1)xF(1)": f1_tensor_presentation(2, W)}
    for name, Pm in bridge.items():
        lhs = G.delta(G.l_of(Pm, K)).dims
        rhs = G.l_of(tbar(Pm), K - 1).dims
        res.add(f"Delta l({name}) = l(Tbar {name})", lhs == rhs, f"{lhs} vs {rhs}")
    H = present(poly_algebra(1, 32).module, 15, 32, name="GF(2)[x]")
    lH = G.l_of(H, K)
    for n in range(2):
        Q, _ = present_krull(H, n, 16)
        got = G.l_of(Q, K - n - 1).dims
        want = G.p_n(lH, n).dims
        res.add(f"l(k_{n} GF(2)[x]) = p_{n} l(GF(2)[x])", got == want, f"{got} vs {want}")
    fs = {"Id": G.identity_functor(5), "S2": G.symmetric_functor(2, 5), "I": G.injective_functor(1, 5)}
    for (a, Fa), (b, Fb) in itertools.combinations_with_replacement(fs.items(), 2):
        T = G.tensor_functors(Fa, Fb)
        ok = True
        for n in range(3):
            ok &= G.tensor_filtration_spaces(Fa, Fb, n) == G.p_n_spaces(T, n)
        res.add(f"p_n({a} x {b}) = sum p_l {a} x p_m {b} for n <= 2", ok)
    rep = G.lambda2_tensor_splitting(K)
    res.tables.append(("L", rep.dims_L))
    res.add("Lambda^3 -> Lambda^2 x Id -> Lambda^3 is the identity", rep.composite_identity)
    res.add("dim L(F2^2) = 2 and dim L(F2^3) = 8", rep.dims_L[2:4] == [2, 8])
    res.add("L is simple", rep.simple)
    return res
