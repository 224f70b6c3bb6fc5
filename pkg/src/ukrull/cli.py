"""Command line: a small module-expression language and reports.

Grammar (whitespace-insensitive, decimal integers)::

    expr  := atom | comb '(' args ')'
    atom  := 's3q8' | 'bq8' | 'example62' | 'free(' int ')' | 'bz2(' int ')' | 'kvm(' int ')'
    comb  := 'susp(' int ',' expr ')' | 'phi(' expr ')' | 'tensor(' expr ',' expr ')'
           | 'trunc(' int ',' expr ')' | 'ufree(' expr ')'
"""

from __future__ import annotations

import argparse
import json
import sys
import time
import warnings
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple, Union

from . import gf2
from .errors import CertificationError, ParseError, UKrullError

# ---------------------------------------------------------------------------
# expressions

# argument kinds per operator: "i" integer, "e" expression
SIGNATURES: Dict[str, str] = {
    "free": "i",
    "bz2": "i",
    "kvm": "i",
    "s3q8": "",
    "bq8": "",
    "example62": "",
    "susp": "ie",
    "phi": "e",
    "tensor": "ee",
    "trunc": "ie",
    "ufree": "e",
}


@dataclass(frozen=True)
class Expr:
    op: str
    args: Tuple[Union[int, "Expr"], ...] = ()

    def __str__(self):
        return render(self)


def render(e: Expr) -> str:
    if not SIGNATURES[e.op]:
        return e.op
    return f"{e.op}(" + ", ".join(str(a) if isinstance(a, int) else render(a) for a in e.args) + ")"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def offset(self) -> int:
        # byte offset of the current position
        return len(self.text[: self.pos].encode())

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def fail(self, what: str, expected):
        raise ParseError(what, self.offset(), expected)

    def expect(self, ch: str):
        self.skip()
        if self.text.startswith(ch, self.pos):
            self.pos += 1
            return
        self.fail(f"expected {ch!r}", {ch})

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected a nonnegative integer", {"integer"})
        return int(self.text[start:self.pos])

    def name(self) -> str:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        word = self.text[start:self.pos]
        if word not in SIGNATURES:
            self.pos = start
            self.fail(f"unknown module name {word!r}" if word else "expected a module name",
                      set(SIGNATURES))
        return word

    def expr(self) -> Expr:
        op = self.name()
        sig = SIGNATURES[op]
        if not sig:
            return Expr(op)
        self.expect("(")
        args: List[Union[int, Expr]] = []
        for i, kind in enumerate(sig):
            if i:
                self.expect(",")
            args.append(self.integer() if kind == "i" else self.expr())
        self.expect(")")
        return Expr(op, tuple(args))

    def parse(self) -> Expr:
        e = self.expr()
        self.skip()
        if self.pos != len(self.text):
            self.fail("trailing input", {"end of input"})
        return e


def parse(text: str) -> Expr:
    return _Parser(text).parse()


def build(e: Expr, W: int):
    """Realize the expression as a Module through degree W."""
    from .corpus import example62
    from .kalg import bq8, free_unstable_algebra, kvm, poly_algebra, s3_mod_q8
    from .umod import free, phi, suspend, tensor, truncate_above

    a = e.args
    if e.op == "free":
        return free(a[0], W)
    if e.op == "bz2":
        return poly_algebra(a[0], W).module
    if e.op == "kvm":
        return kvm(a[0], W).module
    if e.op == "s3q8":
        return s3_mod_q8(W).module
    if e.op == "bq8":
        return bq8(W).module
    if e.op == "example62":
        return example62(W)
    if e.op == "susp":
        return suspend(build(a[1], W), a[0])
    if e.op == "phi":
        return phi(build(a[0], W))
    if e.op == "tensor":
        return tensor(build(a[0], W), build(a[1], W))
    if e.op == "trunc":
        return truncate_above(build(a[1], W), a[0])
    if e.op == "ufree":
        return free_unstable_algebra(build(a[0], W), W).module
    raise ValueError(e.op)


def presentation(e: Expr, M, D: int, gen_window: Optional[int]):
    """Exact presentation for free(n); otherwise generators through D and
    relations through the build window."""
    from .krull import module_presentation
    from .umod import free_presentation

    if e.op == "free":
        return free_presentation(e.args[0])
    return module_presentation(M, D, gen_window)


# ---------------------------------------------------------------------------
# reports


@dataclass
class Report:
    command: str
    degree_cap: int
    cert: Optional[int] = None
    tables: List[Tuple[str, List[int]]] = field(default_factory=list)
    assertions: List[Tuple[str, bool]] = field(default_factory=list)
    elapsed: float = 0.0

    def table(self, name: str, dims):
        self.tables.append((name, [int(x) for x in dims]))

    def check(self, anchor: str, passed: bool):
        self.assertions.append((anchor, bool(passed)))

    @property
    def passed(self) -> bool:
        return all(p for _, p in self.assertions)

    def to_json(self) -> str:
        return json.dumps({
            "command": self.command,
            "degree_cap": self.degree_cap,
            "cert": self.cert,
            "tables": [{"name": n, "dims": d} for n, d in self.tables],
            "assertions": [{"anchor": a, "pass": p} for a, p in self.assertions],
        }, indent=2)

    def to_text(self) -> str:
        lines = [f"command: {self.command}", f"degree cap: {self.degree_cap}",
                 f"cert: {self.cert}"]
        for name, dims in self.tables:
            lines.append(f"{name}: {' '.join(map(str, dims))}")
        for anchor, p in self.assertions:
            lines.append(f"{'PASS' if p else 'FAIL'} {anchor}")
        lines.append("result: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)


def _closed(M, spaces, D: int) -> bool:
    """Every Sq^i of every basis vector stays inside the family."""
    for d in range(D + 1):
        for v in spaces[d].basis:
            for i in range(1, min(d, D - d) + 1):
                if not spaces[d + i].contains(M.sq(i, d, v)):
                    return False
    return True


def _module_ok(M, D: int) -> bool:
    try:
        M.check(D)
    except AssertionError:
        return False
    return True


def cmd_info(e: Expr, D: int, gw, rep: Report, **_):
    from .krull import is_locally_finite
    from .umod import is_reduced_by_lambda

    M = build(e, 2 * D)
    rep.cert = min(D, M.cert)
    rep.table("dims", [M.dim(d) for d in range(D + 1)])
    rep.check(f"module structure satisfies instability and the Adem relations through {D}",
              _module_ok(M, D))
    lf = is_locally_finite(M)
    rep.table("locally finite top degree", [] if lf is None else [lf])
    rep.table("lambda injective", [int(is_reduced_by_lambda(M.restrict_top(D)))])


def cmd_krull(e: Expr, D: int, gw, rep: Report, max_n: int = 2, **_):
    from .krull import krull_in

    M = build(e, 2 * D)
    prev = None
    certs = []
    for n in range(max_n + 1):
        sp, cert = krull_in(M, n, D, gw, presentation(e, M, D, gw))
        certs.append(cert)
        rep.table(f"k_{n}", [s.dim for s in sp])
        rep.check(f"k_{n} is a submodule", _closed(M, sp, D))
        if prev is not None:
            rep.check(f"k_{n - 1} lies in k_{n}", all(a.issubset(b) for a, b in zip(prev, sp)))
        if e.op == "bz2" and e.args[0] == 1:
            want = [1 if bin(d).count("1") <= n else 0 for d in range(D + 1)]
            want[0] = 1
            rep.check(f"k_{n} H*(BZ/2) = span of x^d with at most {n} binary ones",
                      [s.dim for s in sp] == want)
        if e.op == "free":
            full = [M.dim(d) for d in range(D + 1)]
            want = full if n >= e.args[0] else [0] * (D + 1)
            rep.check(f"k_{n} F({e.args[0]}) is {'all' if n >= e.args[0] else 'zero'}",
                      [s.dim for s in sp] == want)
        prev = sp
    rep.cert = min(certs)


def cmd_nil(e: Expr, D: int, gw, rep: Report, **_):
    from .krull import is_locally_finite, nil_1, nil_filtration_locally_finite
    from .umod import is_reduced_by_lambda

    M = build(e, 2 * D)
    r = nil_1(M)
    rep.cert = min(D, r.cert)
    rep.table("nil_1", [r.nil.dim(d) for d in range(rep.cert + 1)])
    rep.table("R_0", [r.reduced.dim(d) for d in range(rep.cert + 1)])
    sp = [gf2.Subspace(M.dim(d), [r.inclusion(d, 1 << i) for i in range(r.nil.dim(d))])
          for d in range(rep.cert + 1)]
    rep.check("nil_1 is a submodule", _closed(M, sp, rep.cert))
    rep.check("R_0 is reduced (lambda injective)",
              is_reduced_by_lambda(r.reduced.restrict_top(rep.cert // 2)))
    if is_locally_finite(M) is not None:
        lf = nil_filtration_locally_finite(M)
        rep.table("dim R_s for s = 0, 1, ... (locally finite)", lf.R)


def cmd_sigma(e: Expr, D: int, gw, rep: Report, max_n: int = 2, **_):
    from .krull import CertificationWarning, sigma

    M = build(e, 2 * D)
    P = presentation(e, M, D, gw)
    tops = []
    for n in range(max_n + 1):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", CertificationWarning)
            E = sigma(P, n, D, gen_window=gw)
        tops.append(E.module.top)
        rep.table(f"sigma_{n}", list(E.module.dims))
        rep.check(f"sigma_{n} vanishes at its top computed degree",
                  not any(issubclass(w.category, CertificationWarning) for w in caught))
        try:
            E.check()
            ok = True
        except AssertionError:
            ok = False
        rep.check(f"Sigma_{n} acts on sigma_{n} by module maps", ok)
        if e.op == "free":
            m = e.args[0]
            want = [1] + [0] * E.module.top if n == m else [0] * (E.module.top + 1)
            rep.check(f"sigma_{n} F({m}) is {'Z/2' if n == m else 'zero'}",
                      list(E.module.dims) == want)
    rep.cert = min(tops)


def cmd_tbar(e: Expr, D: int, gw, rep: Report, iters: int = 1, **_):
    from .lannes import tbar_iter

    M = build(e, 2 * D)
    P = presentation(e, M, D, gw)
    g = max(P.max_generator_degree(), 0)
    top = D if P.window is None else min(D, P.window - g)
    rep.cert = top
    for j in range(1, iters + 1):
        E = tbar_iter(P, j, top)
        rep.table(f"Tbar^{j}", list(E.module.dims))
        try:
            E.check()
            ok = True
        except AssertionError:
            ok = False
        rep.check(f"Sigma_{j} acts on Tbar^{j} by module maps", ok)


def _suites() -> Dict[str, Callable]:
    from . import suites as s

    return {
        "adem": s.adem_suite,
        "membership": s.membership_suite,
        "regular": s.regular_suite,
        "locally-finite": s.locally_finite_part_suite,
        "example62": s.example62_suite,
        "binary-digits": s.binary_digit_suite,
        "properties": s.property_suite,
        "omega": s.omega_suite,
        "adjunction": s.adjunction_suite,
        "sigma": s.sigma_suite,
        "algebras": s.algebra_suite,
        "functors": s.functor_suite,
    }


SUITE_NAMES = ("adem", "membership", "regular", "locally-finite", "example62", "binary-digits",
               "properties", "omega", "adjunction", "sigma", "algebras", "functors")
# suites whose size parameter is a degree cap, with their defaults
_DEGREE_DEFAULTS = {"regular": 16, "locally-finite": 32, "example62": 32, "binary-digits": 32,
                    "properties": 16, "omega": 16, "adjunction": 16, "sigma": 16, "algebras": 16}


def cmd_verify(name: str, D: Optional[int], rep: Report):
    fn = _suites()[name]
    if name in _DEGREE_DEFAULTS:
        D = _DEGREE_DEFAULTS[name] if D is None else D
        res = fn(D=D)
    else:
        res = fn()
    rep.degree_cap = D
    rep.cert = D
    for tname, dims in res.tables:
        rep.table(tname, dims)
    for c in res.checks:
        rep.check(c.anchor, c.passed)


# ---------------------------------------------------------------------------
# entry point


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ukrull", description="Krull filtration calculator")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--degree", type=int, default=None, help="degree cap D (default 32)")
    common.add_argument("--json", action="store_true", help="machine-readable report")
    common.add_argument("--gen-window", type=int, default=None, help="generator window g")
    common.add_argument("--timing", action="store_true", help="print elapsed time to stderr")
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("info", parents=[common]).add_argument("expr")
    p = sub.add_parser("krull", parents=[common])
    p.add_argument("--max", type=int, default=2, dest="max_n")
    p.add_argument("expr")
    sub.add_parser("nil", parents=[common]).add_argument("expr")
    p = sub.add_parser("sigma", parents=[common])
    p.add_argument("--max", type=int, default=2, dest="max_n")
    p.add_argument("expr")
    p = sub.add_parser("tbar", parents=[common])
    p.add_argument("--iter", type=int, default=1, dest="iters")
    p.add_argument("expr")
    sub.add_parser("verify", parents=[common]).add_argument("suite", choices=SUITE_NAMES)
    return ap


COMMANDS = {"info": cmd_info, "krull": cmd_krull, "nil": cmd_nil, "sigma": cmd_sigma,
            "tbar": cmd_tbar}


def run(argv: List[str]) -> Tuple[int, str]:
    """Execute a command line; return (exit code, report text)."""
    ap = _parser()
    try:
        ns = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), ""
    start = time.perf_counter()
    if ns.command == "verify":
        rep = Report(f"verify {ns.suite}", ns.degree or 0)
        cmd_verify(ns.suite, ns.degree, rep)
    else:
        D = 32 if ns.degree is None else ns.degree
        if D < 0 or (ns.gen_window is not None and ns.gen_window < 0):
            return 2, "error: degrees must be nonnegative"
        try:
            e = parse(ns.expr)
        except ParseError as exc:
            return 2, f"error: {exc}"
        extra = {k: getattr(ns, k) for k in ("max_n", "iters") if hasattr(ns, k)}
        opts = " ".join(f"--{'iter' if k == 'iters' else 'max'} {v}" for k, v in extra.items())
        rep = Report(" ".join(x for x in (ns.command, opts, render(e)) if x), D)
        try:
            COMMANDS[ns.command](e, D, ns.gen_window, rep, **extra)
        except CertificationError as exc:
            return 2, f"error: {exc} (degree {exc.degree})"
        except UKrullError as exc:
            return 2, f"error: {exc}"
    rep.elapsed = time.perf_counter() - start
    if ns.timing:
        print(f"elapsed {rep.elapsed:.2f}s", file=sys.stderr)
    return (0 if rep.passed else 1), rep.to_json() if ns.json else rep.to_text()


def main(argv: Optional[List[str]] = None) -> int:
    code, out = run(sys.argv[1:] if argv is None else argv)
    if out:
        print(out, file=sys.stderr if code == 2 else sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
