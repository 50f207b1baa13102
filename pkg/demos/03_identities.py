"""Count both sides of the identities and compare with the products.

Run: python3 demos/03_identities.py
"""
from bressoud import Family, FamilyParams, Identity, count_family, gf_A0bar, roundtrip_check, verify_identity

p = FamilyParams.of((3, 7), 10, 5, 3)
N = 40

series = gf_A0bar(p, N)
print(" n  A0bar  B0bar  product")
for n in range(0, N + 1, 5):
    print(f"{n:>2} {count_family(Family.A0bar, p, n):>6} {count_family(Family.B0bar, p, n):>6} {series[n]:>8}")

for which in (Identity.A0bar_eq_B0bar, Identity.B0bar_eq_product, Identity.gfA0bar):
    rep = verify_identity(which, p, N, threads=1)
    print(f"{which.value:<18} {'PASS' if rep.overall else 'FAIL'}")

rep = verify_identity(Identity.Aj_eq_Bj, FamilyParams.of((1, 2), 3, 4, 2), 30, j=1, threads=1)
print(f"A1 = B1 on (1,2;3,4,2): {'PASS' if rep.overall else 'FAIL'}")

rt = roundtrip_check(p, N, threads=1)
print(f"round trip over {sum(r.lhs for r in rt.rows)} overpartitions: {'PASS' if rt.overall else 'FAIL'}")
