"""Executable statements of the structural lemmas, checked over enumerated members.

Each ``check_*`` function returns ``(instances, violations)`` where
``violations`` is a list of human-readable strings.
"""
from bressoud.bands import (
    Band,
    BandType,
    Parity,
    Window,
    band_in_window,
    band_parity,
    find_bands,
    g_of,
    is_band,
    window_band_types,
)
from bressoud.bijection import augment, reduce
from bressoud.families import WindowKind, classify_window, is_in_B0bar, is_in_Bbar
from bressoud.parts import Part, bound, count_O, count_V, key_of, smallest_overlined_multiple
from _corpus import b0bar_upto, bbar_upto, t_range


def _residue(pi, band, eta):
    parts = band.parts(pi)
    return (sum(x.size // eta for x in parts) + count_V(pi, parts[0], eta) + count_O(pi, parts[-1], eta)) % 2


def check_overlapping_parity(p, max_w):
    n, bad = 0, []
    for pi in bbar_upto(p, max_w):
        bands = find_bands(pi, p.k - 1, p.eta)
        for a in bands:
            for b in bands:
                if a.start < b.start <= a.start + p.k - 2:
                    n += 1
                    if band_parity(pi, a, p) is not band_parity(pi, b, p):
                        bad.append(f"{pi.render()}: bands at {a.start} and {b.start} differ")
    return n, bad


def check_window_parity(p, max_w):
    n, bad = 0, []
    for pi in bbar_upto(p, max_w):
        bands = find_bands(pi, p.k - 1, p.eta)
        for t in t_range(p, max_w):
            inside = [b for b in bands if band_in_window(pi, b, Window(t), p.eta)]
            n += 1
            if len({band_parity(pi, b, p) for b in inside}) > 1:
                bad.append(f"{pi.render()}: mixed parity in window t={t}")
    return n, bad


def check_insertion_bands(p, max_w):
    """Insertion of t*eta (plain or overlined) into mu, both in Bbar."""
    n, bad = 0, []
    k, eta = p.k, p.eta
    for mu in bbar_upto(p, max_w):
        for t in t_range(p, max_w):
            for overlined in (False, True):
                part = Part(t * eta, overlined)
                if overlined and part in mu.parts:
                    continue
                pi = mu.insert(part)
                if not is_in_Bbar(pi, p):
                    continue
                n += 1
                shift = t + 1 if overlined else t
                first = Window(t, overlined)
                if any(band_in_window(mu, b, first, eta) for b in find_bands(mu, k - 1, eta)):
                    bad.append(f"{mu.render()} + {part.token()}: mu has a (k-1)-band in the window")
                windows = [Window(t, True)] if overlined else [Window(t), Window(t, True)]
                for w in windows:
                    for i in range(1, len(pi) + 1):
                        in_pi = is_band(pi, i, k - 1, eta) and band_in_window(pi, Band(i, k - 1), w, eta)
                        in_mu = is_band(mu, i, k - 2, eta) and band_in_window(mu, Band(i, k - 2), w, eta)
                        if in_pi != in_mu:
                            bad.append(f"{mu.render()} + {part.token()}: correspondence fails at i={i}, {w}")
                        elif in_pi:
                            lhs = _residue(pi, Band(i, k - 1), eta)
                            rhs = (_residue(mu, Band(i, k - 2), eta) + shift) % 2
                            if lhs != rhs:
                                bad.append(f"{mu.render()} + {part.token()}: congruence fails at i={i}")
    return n, bad


def check_tEta_occurs(p, max_w):
    n, bad = 0, []
    eta = p.eta
    for pi in b0bar_upto(p, max_w):
        s, g = key_of(smallest_overlined_multiple(pi, eta)), key_of(g_of(pi, p))
        for t in t_range(p, max_w):
            if s > bound(t * eta, True) and bound(t * eta) <= g < bound((t + 1) * eta, True):
                n += 1
                if Part(t * eta) not in pi.parts:
                    bad.append(f"{pi.render()}: {t * eta} missing at t={t}")
    return n, bad


def check_uniform_type(p, max_w):
    n, bad = 0, []
    eta = p.eta
    for mu in b0bar_upto(p, max_w):
        g = g_of(mu, p)
        for t in t_range(p, max_w):
            if classify_window(mu, p, t, checked=False).kind is not WindowKind.Greater:
                continue
            types = {bt for _, bt in window_band_types(mu, t, p)}
            if not types:
                continue
            n += 1
            if len(types) > 1:
                bad.append(f"{mu.render()}: mixed types at t={t}")
            if g in (Part((t + 1) * eta, True), Part((t + 1) * eta)) and types != {BandType.O}:
                bad.append(f"{mu.render()}: g={g.token()} but type N at t={t}")
    return n, bad


def check_reduce_augment(p, max_w):
    """D_t lands in Greater(t), C_t in Equal(t), with the weight/length deltas, and they invert."""
    n, bad = 0, []
    eta = p.eta
    for x in b0bar_upto(p, max_w):
        for t in t_range(p, max_w):
            kind = classify_window(x, p, t, checked=False).kind
            if kind is WindowKind.Equal:
                n += 1
                y = reduce(x, t, p)
                if not is_in_B0bar(y, p) or classify_window(y, p, t).kind is not WindowKind.Greater:
                    bad.append(f"D_{t}({x.render()}) not in Greater({t})")
                elif (y.weight, y.length) != (x.weight - t * eta, x.length - 1):
                    bad.append(f"D_{t}({x.render()}) has wrong weight or length")
                elif augment(y, t, p) != x:
                    bad.append(f"C_{t}(D_{t}({x.render()})) != input")
            elif kind is WindowKind.Greater:
                n += 1
                y = augment(x, t, p)
                if not is_in_B0bar(y, p) or classify_window(y, p, t).kind is not WindowKind.Equal:
                    bad.append(f"C_{t}({x.render()}) not in Equal({t})")
                elif (y.weight, y.length) != (x.weight + t * eta, x.length + 1):
                    bad.append(f"C_{t}({x.render()}) has wrong weight or length")
                elif reduce(y, t, p) != x:
                    bad.append(f"D_{t}(C_{t}({x.render()})) != input")
    return n, bad


def check_all_even_in_B0bar(p, max_w):
    n, bad = 0, []
    for pi in b0bar_upto(p, max_w):
        for b in find_bands(pi, p.k - 1, p.eta):
            n += 1
            if band_parity(pi, b, p) is not Parity.Even:
                bad.append(f"{pi.render()}: odd band at {b.start}")
    return n, bad


def check_greater_below_equal(p, max_w):
    """Equal(t) with t >= 2 holds together with Greater(t') exactly for t' < t."""
    n, bad = 0, []
    for pi in b0bar_upto(p, max_w):
        kinds = {t: classify_window(pi, p, t, checked=False).kind for t in t_range(p, max_w)}
        for t, kind in kinds.items():
            if t < 2 or kind is not WindowKind.Equal:
                continue
            n += 1
            for t2, k2 in kinds.items():
                if (k2 is WindowKind.Greater) != (t2 < t):
                    bad.append(f"{pi.render()}: Equal({t}) but t'={t2} is {k2.value}")
    return n, bad
