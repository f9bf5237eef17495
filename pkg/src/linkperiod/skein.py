"""HOMFLY polynomial by skein recursion, and its one-variable
specializations.

The recursion resolves diagrams toward descending ones: traverse the
closure from fixed base points in component order; the first crossing
first reached on its under-strand is either switched (strictly enlarging
the descending prefix) or smoothed (dropping a crossing).  A descending
diagram is an unlink and evaluates to delta^(m-1) with
delta = (a^-1 - a)/z.
"""

from __future__ import annotations

import sys

from .diagram import BraidWord, PlanarDiagram, pd_from_braid
from .laurent import BiLaurent, InexactDivisionError, LaurentPoly, exact_divide, quantum_integer

DEFAULT_MAX_CROSSINGS = 24

#: delta = (a^-1 - a) z^-1, the value of a 2-component unlink.
DELTA = BiLaurent({(-1, -1): 1, (1, -1): -1})

_A2 = BiLaurent.monomial(2, 0)       # a^2
_AZ = BiLaurent.monomial(1, 1)       # a z
_AM2 = BiLaurent.monomial(-2, 0)     # a^-2
_AMZ = BiLaurent.monomial(-1, 1)     # a^-1 z


class ResourceLimitError(RuntimeError):
    """Crossing limit exceeded before the computation could finish."""


_cache: dict[tuple, BiLaurent] = {}


def clear_cache() -> None:
    _cache.clear()


# Internal diagram state for the recursion: a dict arc -> role per
# crossing plus a free loop count.  Crossings are tuples
# (sign, under_in, over_in, under_out, over_out).

def _from_planar(d: PlanarDiagram):
    crossings = [(c.sign, c.under_in, c.over_in, c.under_out, c.over_out)
                 for c in d.crossings]
    return crossings, d.free_loops


def _canonical_key(crossings, free_loops):
    """Cache key: arcs renumbered by first appearance over sorted crossings."""
    ordered = sorted(crossings, key=lambda c: (min(c[1:]), c))
    number: dict[int, int] = {}
    out = []
    for c in ordered:
        row = [c[0]]
        for a in c[1:]:
            if a not in number:
                number[a] = len(number)
            row.append(number[a])
        out.append(tuple(row))
    return (free_loops, tuple(out))


def _first_bad_crossing(crossings):
    """Walk the closure in component order (base point = smallest arc of
    each component); return the index of the first crossing first met on
    its under-strand, or None if the diagram is descending.  The second
    return value is the number of traversed components."""
    in_slot = {}
    for idx, c in enumerate(crossings):
        in_slot[c[1]] = (idx, "u")
        in_slot[c[2]] = (idx, "o")
    visited: set[int] = set()
    done_arcs: set[int] = set()
    comps = 0
    for base in sorted(in_slot):
        if base in done_arcs:
            continue
        comps += 1
        arc = base
        while True:
            done_arcs.add(arc)
            idx, strand = in_slot[arc]
            c = crossings[idx]
            if idx not in visited:
                visited.add(idx)
                if strand == "u":
                    return idx, comps
            arc = c[3] if strand == "u" else c[4]
            if arc == base:
                break
    return None, comps


def _switch(crossings, idx):
    s, ui, oi, uo, oo = crossings[idx]
    out = list(crossings)
    out[idx] = (-s, oi, ui, oo, uo)
    return out


def _smooth(crossings, idx, free_loops):
    """Remove crossing idx with the oriented smoothing (under_in joins
    over_out, over_in joins under_out); returns (crossings, free_loops)."""
    _, ui, oi, uo, oo = crossings[idx]
    rest = [c for i, c in enumerate(crossings) if i != idx]

    parent: dict[int, int] = {}

    def find(x):
        while parent.get(x, x) != x:
            parent[x] = parent.get(parent[x], parent[x])
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    union(ui, oo)
    union(oi, uo)
    remapped = []
    used = set()
    for c in rest:
        row = (c[0], find(c[1]), find(c[2]), find(c[3]), find(c[4]))
        used.update(row[1:])
        remapped.append(row)
    vanished = {find(a) for a in (ui, oi, uo, oo)} - used
    return remapped, free_loops + len(vanished)


def _homfly_rec(crossings, free_loops, limit):
    if len(crossings) > limit:
        raise ResourceLimitError(
            f"{len(crossings)} crossings exceed the limit of {limit}")
    if not crossings:
        m = free_loops
        if m == 0:
            raise ValueError("empty diagram has no components")
        return DELTA ** (m - 1)
    key = _canonical_key(crossings, free_loops)
    hit = _cache.get(key)
    if hit is not None:
        return hit

    bad, comps = _first_bad_crossing(crossings)
    if bad is None:
        value = DELTA ** (comps + free_loops - 1)
    else:
        sign = crossings[bad][0]
        switched = _homfly_rec(_switch(crossings, bad), free_loops, limit)
        sm_cr, sm_free = _smooth(crossings, bad, free_loops)
        smoothed = _homfly_rec(sm_cr, sm_free, limit)
        if sign > 0:
            # D = L+:  P(L+) = a^2 P(L-) + a z P(L0)
            value = _A2 * switched + _AZ * smoothed
        else:
            # D = L-:  P(L-) = a^-2 P(L+) - a^-1 z P(L0)
            value = _AM2 * switched - _AMZ * smoothed
    _cache[key] = value
    return value


def homfly(d: "PlanarDiagram | BraidWord",
           max_crossings: int = DEFAULT_MAX_CROSSINGS) -> BiLaurent:
    """HOMFLY polynomial of an oriented link diagram (or braid closure)."""
    if isinstance(d, BraidWord):
        d = pd_from_braid(d)
    crossings, free_loops = _from_planar(d)
    if len(crossings) > max_crossings:
        raise ResourceLimitError(
            f"{len(crossings)} crossings exceed the limit of {max_crossings}")
    depth = sys.getrecursionlimit()
    want = 4 * max(len(crossings), 1) ** 2 + 1000
    if depth < want:
        sys.setrecursionlimit(want)
    return _homfly_rec(crossings, free_loops, max_crossings)


def _specialize(P: BiLaurent, a_image: LaurentPoly, z_image: LaurentPoly,
                var: str) -> LaurentPoly:
    """Evaluate P at a -> a_image, z -> z_image; negative z powers are
    cleared by exact division by z_image."""
    s_min = min((s for (_, s) in P._c), default=0)
    shifted = LaurentPoly.zero(var)
    for (r, s), v in P._c.items():
        term = a_image.compose_power(r) if r != 0 else LaurentPoly.one(var)
        term = term * (z_image ** (s - s_min))
        shifted = shifted + term.scale(v)
    if s_min >= 0:
        return shifted * (z_image ** s_min)
    return exact_divide(shifted, z_image ** (-s_min))


def quantum_sln(P: BiLaurent, N: int, m: int = 1) -> LaurentPoly:
    """One-variable invariant [N]_q * P(q^-N, q - q^-1) in Z[q^+-1]."""
    if N < 2:
        raise ValueError(f"N must be >= 2: {N}")
    if P.z_min() < 1 - m:
        raise ValueError("z-exponents below 1-m: not the polynomial of an "
                         f"{m}-component link")
    a_image = LaurentPoly.monomial(-N)
    z_image = LaurentPoly({1: 1, -1: -1})
    return quantum_integer(N) * _specialize(P, a_image, z_image, "q")


def jones(P: BiLaurent) -> LaurentPoly:
    """Jones polynomial via a -> t, z -> sqrt(t) - 1/sqrt(t).

    Computed in s = sqrt(t).  If only even s-powers occur (always the
    case for knots) the result is reported in t; otherwise in s.
    """
    a_image = LaurentPoly.monomial(2, var="s")  # a = t = s^2
    z_image = LaurentPoly({1: 1, -1: -1}, var="s")
    v = _specialize(P, a_image, z_image, "s")
    if all(e % 2 == 0 for e in v.exponents()):
        return LaurentPoly({e // 2: c for e, c in v.terms()}, "t")
    return v


def alexander(P: BiLaurent) -> LaurentPoly:
    """Alexander polynomial of a knot, normalized to an ordinary
    polynomial with nonzero constant term and positive leading
    coefficient."""
    if P.z_min() < 0:
        raise ValueError("negative z-exponents: not a knot polynomial")
    a_image = LaurentPoly.one("s")
    z_image = LaurentPoly({1: 1, -1: -1}, var="s")
    v = _specialize(P, a_image, z_image, "s")
    if any(e % 2 != 0 for e in v.exponents()):
        raise ValueError("odd half-powers of t: not a knot polynomial")
    t_poly = {e // 2: c for e, c in v.terms()}
    if not t_poly:
        return LaurentPoly.zero("t")
    shift = -min(t_poly)
    t_poly = {e + shift: c for e, c in t_poly.items()}
    if t_poly[max(t_poly)] < 0:
        t_poly = {e: -c for e, c in t_poly.items()}
    return LaurentPoly(t_poly, "t")


def p0_part(P: BiLaurent) -> LaurentPoly:
    """The z-degree-zero coefficient polynomial of a knot's HOMFLY, in a."""
    if P.z_min() < 0:
        raise ValueError("negative z-exponents: not a knot polynomial")
    return LaurentPoly({r: v for (r, s), v in P._c.items() if s == 0}, "a")
