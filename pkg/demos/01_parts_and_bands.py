"""Overpartitions, the part order, and bands.

Run: python3 demos/01_parts_and_bands.py
"""
from bressoud import FamilyParams, Part, find_bands, band_parity, g_of, parse_overpartition
from bressoud.families import is_in_B0bar, is_in_Bbar
from bressoud.parts import measures, smallest_overlined_multiple

# overlined parts carry a trailing ~ ; an overlined copy sorts just below the plain one
print(Part(20, True) < Part(20) < Part(27, True))

p = FamilyParams.of((3, 5, 7), 10, 5, 4)  # (alpha; eta, k, r)
pi = parse_overpartition(
    "80,80,80~,70,70~,67~,60,60~,55~,53~,50~,47~,45~,43~,37~,35~,27~,20,20,20~,13~,10~,7~,5~,3~"
)
print("weight, length, parts <= eta:", measures(pi, p.eta))
print("in Bbar:", is_in_Bbar(pi, p))

# (k-1)-bands: k-1 consecutive parts spanning at most eta
for band in find_bands(pi, p.k - 1, p.eta):
    print(f"  start={band.start:>2} {band.render(pi):<22} {band_parity(pi, band, p).value}")

# odd bands keep it out of B0bar
print("in B0bar:", is_in_B0bar(pi, p))

# the two statistics that drive the bijection
q = FamilyParams.of((3, 7), 10, 5, 3)
sigma = parse_overpartition("60,60,53~,50~,47~,40,37~,33~,30,27~,23~,20,20~,10~,7~,3~")
print("s =", smallest_overlined_multiple(sigma, q.eta).token(), " g =", g_of(sigma, q).token())
