"""Split an overpartition into (tau, mu) with phi, then rebuild it with psi.

Run: python3 demos/02_bijection_trace.py
"""
from bressoud import FamilyParams, parse_overpartition, phi, psi
from bressoud.families import is_in_B1

p = FamilyParams.of((3, 7), 10, 5, 3)
pi = parse_overpartition("60,60,53~,50~,47~,40,37~,33~,30,27~,23~,20,20~,10~,7~,3~")

res = phi(pi, p)
for step in res.trace:
    print(f"t={step.t}  {step.action.value:<17} {step.part.token():>4}   s={step.s_before.token():<4} g={step.g_before.token()}")

print("tau =", res.tau)
print("mu  =", res.mu.render())
print("mu in B1 with k-1:", is_in_B1(res.mu, p.with_k(p.k - 1)))
print("weights:", pi.weight, "=", sum(res.tau), "+", res.mu.weight)

back = psi(res.tau, res.mu, p)
# a plain insertion is justified by a type-N band; its indices are recorded
for step in back.trace:
    note = f"witness {step.evidence.indices()}" if step.evidence else ""
    print(f"t={step.t}  {step.action.value:<17} {step.part.token():>4}   {note}")
print("recovered:", back.pi == pi)
