"""Sufficient vs exact: the cable gap strip.

For the (p, q)-cable of an L-space knot K of genus g the exact criterion
is q > p(2g - 1), while the sufficient conditions certify exactly
q >= 2pg - 1.  The strip p(2g-1) < q < 2pg - 1 is where the cable *is*
an L-space knot but the sufficient conditions stay silent — the
conditions are not necessary.
"""

from math import gcd

from lspacesat import CERTIFIED, certify_cable, torus_knot

trefoil = torus_knot(2, 3)  # genus 1

print("(p,q)-cables of the trefoil, q up to 3p:")
print(f"{'p':>3} {'q':>3}  {'sufficient':>13}  {'exact':>9}  gap")
for p in range(2, 8):
    for q in range(1, 3 * p + 1):
        if gcd(p, q) != 1:
            continue
        cmp = certify_cable(trefoil, p, q)
        verdict = cmp.certificate.verdict
        exact = "L-space" if cmp.exact else "-"
        gap = "<-- gap" if cmp.gap else ""
        marker = "CERTIFIED" if verdict == CERTIFIED else "-"
        print(f"{p:>3} {q:>3}  {marker:>13}  {exact:>9}  {gap}")

print("\nFor genus 1 the strip is p < q < 2p - 1: empty at p = 2,")
print("and growing linearly with p afterwards.")
