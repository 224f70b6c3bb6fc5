"""The pullback of Sigma F(3) and Phi^2 F(1) over Sigma^4 Z/2: R_0 and k_1 do not commute."""

from ukrull.suites import example62_suite

res = example62_suite(32)
for name, dims in res.tables:
    print(f"{name:10s}", "degrees", [d for d, x in enumerate(dims) if x])
for c in res.checks:
    print("PASS" if c.passed else "FAIL", c.anchor)
