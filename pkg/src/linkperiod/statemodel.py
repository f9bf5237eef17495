"""Vertex-weight state sum on braid closures.

Arcs of the closure are labeled from I_N = {-N+1, -N+3, ..., N-1}.  At a
crossing with incoming labels (c, d) (left, right below) and outgoing
labels (a, b) (left, right above), exactly one of six local rules holds:

  positive:  (1) a=c, b=d, a>b   weight q - q^-1   splice
             (2) a=b=c=d         weight q          splice
             (3) a=d, b=c, a!=b  weight 1          flat
  negative:  (4) a=c, b=d, a<b   weight q^-1 - q   splice
             (5) a=b=c=d         weight q^-1       splice
             (6) a=d, b=c, a!=b  weight 1          flat

Splice reconnects the strands in parallel (left-in to left-out), a flat
crossing passes them straight through.  In a trace closure every spliced
loop winds counterclockwise around the braid axis, so rot = +1 for all
loops.  The resulting invariant q^(-writhe*N) <D> equals the skein-route
quantum invariant and serves as its independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import BraidWord, braid_segments, strand_component, writhe
from .laurent import LaurentPoly

DEFAULT_MAX_STATES = 2_000_000

QMINUS = LaurentPoly({1: 1, -1: -1})   # q - q^-1

SPLICE_RULES = frozenset({1, 2, 4, 5})
FLAT_RULES = frozenset({3, 6})


class StateResourceError(RuntimeError):
    """State enumeration guard tripped."""


def labels_range(N: int) -> list[int]:
    if N < 2:
        raise ValueError(f"N must be >= 2: {N}")
    return list(range(-N + 1, N, 2))


@dataclass(frozen=True)
class NState:
    """An arc labeling together with the rule tag at every crossing."""

    braid: BraidWord
    labels: tuple[int, ...]        # arc id -> label
    rules: tuple[int, ...]         # crossing index -> rule 1..6

    def label_of_arc(self, arc: int) -> int:
        return self.labels[arc]


@dataclass(frozen=True)
class Loop:
    arcs: frozenset[int]
    label: int
    rot: int = 1


@dataclass(frozen=True)
class LoopDecomposition:
    loops: tuple[Loop, ...]


def _arc_structure(b: BraidWord):
    """(number of arcs, crossing arc tuples (c, d, a, b), crossing signs,
    free arcs untouched by any crossing)."""
    k = len(b.letters)
    arc_of, slots = braid_segments(b)
    if k == 0:
        return b.n, [], [], list(range(b.n))
    num_arcs = max(arc_of.values()) + 1
    quads = []
    signs = []
    for i, e in enumerate(b.letters):
        j = slots[i]
        quads.append((arc_of[(i, j)], arc_of[(i, j + 1)],
                      arc_of[((i + 1) % k, j)], arc_of[((i + 1) % k, j + 1)]))
        signs.append(1 if e > 0 else -1)
    touched = {a for q in quads for a in q}
    free = [a for a in range(num_arcs) if a not in touched]
    return num_arcs, quads, signs, free


def _rule_for(sign: int, lc: int, ld: int, la: int, lb: int) -> int | None:
    """Rule tag for a fully labeled crossing, or None if invalid."""
    if lc == ld == la == lb:
        return 2 if sign > 0 else 5
    if la == lc and lb == ld:
        if sign > 0 and la > lb:
            return 1
        if sign < 0 and la < lb:
            return 4
        return None
    if la == ld and lb == lc and la != lb:
        return 3 if sign > 0 else 6
    return None


def _enumerate_raw(b: BraidWord, N: int, max_states: int):
    """Yield (labels tuple, rules tuple) for every valid state, in a
    deterministic order (labels tried ascending, splice before flat)."""
    num_arcs, quads, signs, free = _arc_structure(b)
    values = labels_range(N)
    labels: list[int | None] = [None] * num_arcs
    rules: list[int] = [0] * len(quads)
    produced = 0

    def fill_free(fi: int):
        nonlocal produced
        if fi == len(free):
            produced += 1
            if produced > max_states:
                raise StateResourceError(
                    f"more than {max_states} states on {b.text()!r}")
            yield tuple(labels), tuple(rules)
            return
        for v in values:
            labels[free[fi]] = v
            yield from fill_free(fi + 1)
        labels[free[fi]] = None

    def out_options(sign, lc, ld):
        # Candidate (a, b) label pairs, ordered by rule number.
        if lc == ld:
            return [(lc, ld)]
        opts = []
        if (sign > 0 and lc > ld) or (sign < 0 and lc < ld):
            opts.append((lc, ld))     # rule 1 / 4
        opts.append((ld, lc))         # rule 3 / 6
        return opts

    def assign(arc, value):
        if labels[arc] is None:
            labels[arc] = value
            return True, True
        return labels[arc] == value, False

    def search(ci: int):
        if ci == len(quads):
            yield from fill_free(0)
            return
        c_arc, d_arc, a_arc, b_arc = quads[ci]
        in_choices_c = [labels[c_arc]] if labels[c_arc] is not None else values
        for lc in in_choices_c:
            set_c = labels[c_arc] is None
            if set_c:
                labels[c_arc] = lc
            in_choices_d = [labels[d_arc]] if labels[d_arc] is not None else values
            for ld in in_choices_d:
                set_d = labels[d_arc] is None
                if set_d:
                    labels[d_arc] = ld
                for la, lb in out_options(signs[ci], lc, ld):
                    ok_a, new_a = assign(a_arc, la)
                    if ok_a:
                        ok_b, new_b = assign(b_arc, lb)
                        if ok_b:
                            rules[ci] = _rule_for(signs[ci], lc, ld, la, lb)
                            yield from search(ci + 1)
                        if new_b:
                            labels[b_arc] = None
                    if new_a:
                        labels[a_arc] = None
                if set_d:
                    labels[d_arc] = None
            if set_c:
                labels[c_arc] = None

    yield from search(0)


def enumerate_states(b: BraidWord, N: int,
                     max_states: int = DEFAULT_MAX_STATES) -> list[NState]:
    """All valid states on the closure of b, deterministically ordered."""
    return [NState(b, labels, rules)
            for labels, rules in _enumerate_raw(b, N, max_states)]


def state_weight(state: NState) -> LaurentPoly:
    """Product of vertex weights of the state."""
    q_exp = 0
    qm_pow = 0
    sign = 1
    for r in state.rules:
        if r == 2:
            q_exp += 1
        elif r == 5:
            q_exp -= 1
        elif r == 1:
            qm_pow += 1
        elif r == 4:
            qm_pow += 1
            sign = -sign
    w = LaurentPoly.monomial(q_exp, sign)
    if qm_pow:
        w = w * (QMINUS ** qm_pow)
    return w


def loops(state: NState) -> LoopDecomposition:
    """Spliced loop decomposition of a state; rot = +1 throughout."""
    b = state.braid
    num_arcs, quads, _, _ = _arc_structure(b)
    parent = list(range(num_arcs))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for ci, (c_arc, d_arc, a_arc, b_arc) in enumerate(quads):
        if state.rules[ci] in SPLICE_RULES:
            union(c_arc, a_arc)
            union(d_arc, b_arc)
        else:
            union(c_arc, b_arc)
            union(d_arc, a_arc)
    groups: dict[int, list[int]] = {}
    for a in range(num_arcs):
        groups.setdefault(find(a), []).append(a)
    out = []
    for root in sorted(groups):
        members = groups[root]
        lab = {state.labels[a] for a in members}
        if len(lab) != 1:
            raise RuntimeError("incoherent loop labels: invalid state")
        out.append(Loop(frozenset(members), lab.pop(), 1))
    return LoopDecomposition(tuple(out))


def norm(state: NState) -> int:
    """Sum of label * rot over the loops of the state."""
    return sum(l.label * l.rot for l in loops(state).loops)


def is_proper(state: NState) -> bool:
    """True iff no vertex carries weight +-(q - q^-1)."""
    return all(r not in (1, 4) for r in state.rules)


def _splice_perm_cycles(b: BraidWord, rules) -> list[list[int]]:
    """Slot cycles of the permutation induced by flat crossings plus the
    closure; each cycle is one spliced loop."""
    pos = list(range(1, b.n + 1))
    for i, e in enumerate(b.letters):
        if rules[i] in FLAT_RULES:
            j = abs(e) - 1
            pos[j], pos[j + 1] = pos[j + 1], pos[j]
    perm = {}
    for slot, start in enumerate(pos, start=1):
        perm[start] = slot
    seen = set()
    cycles = []
    for s in range(1, b.n + 1):
        if s in seen:
            continue
        cyc = []
        t = s
        while t not in seen:
            seen.add(t)
            cyc.append(t)
            t = perm[t]
        cycles.append(cyc)
    return cycles


def bracket(b: BraidWord, N: int,
            max_states: int = DEFAULT_MAX_STATES) -> LaurentPoly:
    """Sum over all states of state_weight * q^norm.

    Uses a lightweight path over raw states: the norm is read off the
    slot-permutation cycles induced by the flat crossings, avoiding a
    full loop trace per state.
    """
    num_arcs, quads, signs, free = _arc_structure(b)
    total = LaurentPoly.zero()
    arc_of, _ = braid_segments(b)
    slot0_arc = {s: arc_of[(0, s)] for s in range(1, b.n + 1)} if b.letters else {}
    for labels, rules in _enumerate_raw(b, N, max_states):
        q_exp = 0
        qm_pow = 0
        sign = 1
        for r in rules:
            if r == 2:
                q_exp += 1
            elif r == 5:
                q_exp -= 1
            elif r == 1:
                qm_pow += 1
            elif r == 4:
                qm_pow += 1
                sign = -sign
        if b.letters:
            # Free arcs occupy full slots and show up as fixed points of
            # the slot permutation, so every loop is covered once here.
            nrm = sum(labels[slot0_arc[cyc[0]]]
                      for cyc in _splice_perm_cycles(b, rules))
        else:
            nrm = sum(labels)
        w = LaurentPoly.monomial(q_exp + nrm, sign)
        if qm_pow:
            w = w * (QMINUS ** qm_pow)
        total = total + w
    return total


def invariant_statesum(b: BraidWord, N: int,
                       max_states: int = DEFAULT_MAX_STATES) -> LaurentPoly:
    """q^(-writhe * N) * bracket: the state-sum route to the quantum
    invariant of the braid closure."""
    return bracket(b, N, max_states).shift(-writhe(b) * N)


def self_crossing_indices(b: BraidWord) -> list[int]:
    """Indices of crossings where one link component crosses itself."""
    comp_of = strand_component(b)
    pos = list(range(1, b.n + 1))  # pos[slot-1] = strand in that slot
    out = []
    for i, e in enumerate(b.letters):
        j = abs(e) - 1
        if comp_of[pos[j]] == comp_of[pos[j + 1]]:
            out.append(i)
        pos[j], pos[j + 1] = pos[j + 1], pos[j]
    return out
