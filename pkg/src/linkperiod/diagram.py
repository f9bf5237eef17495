"""Link presentations: braid words and oriented planar diagrams.

Braid closures are the canonical input; PD codes are accepted for the
skein engine.  A positive braid letter is a positive crossing (the
strand entering on the left passes over), so the closure of "1 1 1" is
the right-handed trefoil.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field


class ParseError(ValueError):
    """Malformed braid or PD input."""


class DiagramError(ValueError):
    """Structurally invalid diagram."""


@dataclass(frozen=True)
class BraidWord:
    """A braid word on `n` strands; letters are nonzero ints with |e| < n."""

    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise DiagramError(f"strand count must be >= 1: {self.n}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for e in self.letters:
            if e == 0 or abs(e) >= self.n:
                raise DiagramError(f"invalid letter {e} for {self.n} strands")

    def __len__(self) -> int:
        return len(self.letters)

    def text(self) -> str:
        return f"n={self.n}; " + " ".join(str(e) for e in self.letters)


def parse_braid(text: str) -> BraidWord:
    """Parse whitespace-separated letters, optionally led by "n=<strands>;"."""
    text = text.strip()
    n_declared = None
    m = re.match(r"^n\s*=\s*(\d+)\s*;", text)
    if m:
        n_declared = int(m.group(1))
        text = text[m.end():].strip()
    letters = []
    for tok in text.split():
        try:
            e = int(tok)
        except ValueError:
            raise ParseError(f"malformed braid token: {tok!r}") from None
        if e == 0:
            raise ParseError("braid letter 0 is not allowed")
        letters.append(e)
    n = n_declared if n_declared is not None else (1 + max((abs(e) for e in letters), default=0))
    n = max(n, 1)
    try:
        return BraidWord(n, tuple(letters))
    except DiagramError as exc:
        raise ParseError(str(exc)) from None


def closure_permutation(b: BraidWord) -> tuple[int, ...]:
    """Underlying permutation of the closure: strand s (0-based) at the
    bottom arrives at position perm[s] at the top."""
    pos = list(range(b.n))  # pos[slot] = strand currently in slot
    for e in b.letters:
        j = abs(e) - 1
        pos[j], pos[j + 1] = pos[j + 1], pos[j]
    perm = [0] * b.n
    for slot, strand in enumerate(pos):
        perm[strand] = slot
    return tuple(perm)


def closure_components(b: BraidWord) -> list[tuple[int, ...]]:
    """Partition of strands {1..n} into closure components.

    Components are cycles of the closure permutation, ordered by their
    smallest strand index; strands are reported 1-based.
    """
    perm = closure_permutation(b)
    seen = [False] * b.n
    comps = []
    for s in range(b.n):
        if seen[s]:
            continue
        cyc = []
        t = s
        while not seen[t]:
            seen[t] = True
            cyc.append(t + 1)
            t = perm[t]
        comps.append(tuple(sorted(cyc)))
    comps.sort(key=lambda c: c[0])
    return comps


def strand_component(b: BraidWord) -> dict[int, int]:
    """Map 1-based strand index -> component index (into closure_components)."""
    out = {}
    for ci, comp in enumerate(closure_components(b)):
        for s in comp:
            out[s] = ci
    return out


def axis_linking(b: BraidWord, j: int) -> int:
    """Linking number of closure component j (0-based) with the braid axis:
    the number of strands in that component."""
    comps = closure_components(b)
    if not 0 <= j < len(comps):
        raise IndexError(f"component index {j} out of range (m={len(comps)})")
    return len(comps[j])


def linking_tuple(b: BraidWord) -> tuple[int, ...]:
    """Axis linking numbers of all closure components, in component order."""
    return tuple(len(c) for c in closure_components(b))


def power(b: BraidWord, p: int) -> BraidWord:
    """Concatenate p copies of the word; the closure is p-periodic about
    the braid axis."""
    if p < 1:
        raise ValueError(f"power must be >= 1: {p}")
    return BraidWord(b.n, b.letters * p)


@dataclass(frozen=True)
class Crossing:
    """An oriented crossing: the under strand runs under_in -> under_out,
    the over strand over_in -> over_out; sign is +1 or -1."""

    sign: int
    under_in: int
    over_in: int
    under_out: int
    over_out: int

    def arcs(self) -> tuple[int, int, int, int]:
        return (self.under_in, self.over_in, self.under_out, self.over_out)

    def pd_tuple(self) -> tuple[int, int, int, int]:
        """Standard X[a,b,c,d]: incoming under-arc first, then counterclockwise."""
        if self.sign > 0:
            return (self.under_in, self.over_in, self.under_out, self.over_out)
        return (self.under_in, self.over_out, self.under_out, self.over_in)


@dataclass(frozen=True)
class PlanarDiagram:
    """An oriented link diagram: crossings plus crossing-free loops."""

    crossings: tuple[Crossing, ...] = ()
    free_loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))
        if self.free_loops < 0:
            raise DiagramError("negative free loop count")
        self.validate()

    def validate(self):
        ins: dict[int, int] = {}
        outs: dict[int, int] = {}
        for c in self.crossings:
            if c.sign not in (1, -1):
                raise DiagramError(f"bad crossing sign {c.sign}")
            for a in (c.under_in, c.over_in):
                ins[a] = ins.get(a, 0) + 1
            for a in (c.under_out, c.over_out):
                outs[a] = outs.get(a, 0) + 1
        if set(ins) != set(outs):
            raise DiagramError("inconsistent arc orientation: an arc lacks a head or a tail")
        for a, k in ins.items():
            if k != 1 or outs[a] != 1:
                raise DiagramError(f"arc {a} does not occur exactly twice")

    def arcs(self) -> list[int]:
        out = set()
        for c in self.crossings:
            out.update(c.arcs())
        return sorted(out)

    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    def components(self) -> list[tuple[int, ...]]:
        """Closed components as arc cycles (excluding free loops)."""
        nxt = {}
        for c in self.crossings:
            nxt[c.under_in] = c.under_out
            nxt[c.over_in] = c.over_out
        seen = set()
        comps = []
        for a in sorted(nxt):
            if a in seen:
                continue
            cyc = []
            t = a
            while t not in seen:
                seen.add(t)
                cyc.append(t)
                t = nxt[t]
            comps.append(tuple(cyc))
        return comps

    def component_count(self) -> int:
        return len(self.components()) + self.free_loops

    def pd_text(self) -> str:
        return " ".join(
            "X[{},{},{},{}]".format(*c.pd_tuple()) for c in self.crossings
        )


def writhe(d: "BraidWord | PlanarDiagram") -> int:
    if isinstance(d, BraidWord):
        return sum(1 if e > 0 else -1 for e in d.letters)
    return d.writhe()


def braid_segments(b: BraidWord):
    """Arc structure of the trace closure of a braid.

    Rows 0..k-1 are the horizontal levels between crossings (row i feeds
    crossing i; outputs land in row (i+1) mod k, the closure identifying
    row k with row 0).  Segments untouched by a crossing at a level are
    merged across it.  Returns (arc_of, crossing_slots) where arc_of maps
    (row, slot) -> arc id (0-based, dense) and crossing_slots[i] is the
    1-based left slot of crossing i.
    """
    k = len(b.letters)
    n = b.n
    if k == 0:
        return {}, []
    parent: dict[tuple[int, int], tuple[int, int]] = {}

    def find(x):
        root = x
        while parent.get(root, root) != root:
            root = parent[root]
        while parent.get(x, x) != x:
            parent[x], x = root, parent[x]
        return root

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    crossing_slots = []
    for i, e in enumerate(b.letters):
        j = abs(e)
        crossing_slots.append(j)
        for s in range(1, n + 1):
            if s not in (j, j + 1):
                union((i, s), ((i + 1) % k, s))
    arc_of = {}
    next_id = 0
    for i in range(k):
        for s in range(1, n + 1):
            r = find((i, s))
            if r not in arc_of:
                arc_of[r] = next_id
                next_id += 1
    return {key: arc_of[find(key)] for i in range(k) for s in range(1, n + 1)
            for key in [(i, s)]}, crossing_slots


def pd_from_braid(b: BraidWord) -> PlanarDiagram:
    """Diagram of the trace closure; arcs numbered consecutively along
    each component, crossing count equals the letter count."""
    k = len(b.letters)
    if k == 0:
        return PlanarDiagram((), b.n)
    arc_of, slots = braid_segments(b)
    num_arcs = max(arc_of.values()) + 1
    raw = []
    for i, e in enumerate(b.letters):
        j = slots[i]
        in_l = arc_of[(i, j)]
        in_r = arc_of[(i, j + 1)]
        out_l = arc_of[((i + 1) % k, j)]
        out_r = arc_of[((i + 1) % k, j + 1)]
        if e > 0:
            raw.append(Crossing(1, under_in=in_r, over_in=in_l,
                                under_out=out_l, over_out=out_r))
        else:
            raw.append(Crossing(-1, under_in=in_l, over_in=in_r,
                                under_out=out_r, over_out=out_l))

    # Renumber arcs 1, 2, ... consecutively along components.
    nxt = {}
    for c in raw:
        nxt[c.under_in] = c.under_out
        nxt[c.over_in] = c.over_out
    number = {}
    counter = 1
    for a in sorted(nxt):
        if a in number:
            continue
        t = a
        while t not in number:
            number[t] = counter
            counter += 1
            t = nxt[t]
    crossings = tuple(
        Crossing(c.sign, number[c.under_in], number[c.over_in],
                 number[c.under_out], number[c.over_out])
        for c in raw
    )
    # Strands crossed by no letter close up into crossing-free loops.
    free = num_arcs - len(number)
    return PlanarDiagram(crossings, free)


_PD_TOKEN = re.compile(r"X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")


def parse_pd(text: str) -> PlanarDiagram:
    """Parse PD text like "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]".

    Arcs must be numbered consecutively along each component; the over
    strand's direction (and hence each crossing sign) is inferred from
    that numbering.
    """
    text = text.strip()
    if not text:
        raise ParseError("empty PD input")
    tuples = []
    pos = 0
    for m in _PD_TOKEN.finditer(text):
        if text[pos:m.start()].strip():
            raise ParseError(f"malformed PD text near: {text[pos:m.start()].strip()!r}")
        tuples.append(tuple(int(g) for g in m.groups()))
        pos = m.end()
    if text[pos:].strip():
        raise ParseError(f"malformed PD text near: {text[pos:].strip()!r}")
    if not tuples:
        raise ParseError("no crossings found in PD input")

    counts: dict[int, int] = {}
    for t in tuples:
        for a in t:
            counts[a] = counts.get(a, 0) + 1
    bad = [a for a, c in counts.items() if c != 2]
    if bad:
        raise ParseError(f"arcs used != 2 times: {sorted(bad)}")

    # a is the incoming under-arc, c the outgoing one.  Of the over pair
    # (b_, d) the incoming arc is normally the numeric predecessor
    # (larger arc incoming on wraparound), but short components make the
    # local rule ambiguous, so the preferred choice is backtracked
    # against the global constraint that every arc has exactly one head
    # and one tail.
    heads: dict[int, int] = {a: 0 for a in counts}
    tails: dict[int, int] = {a: 0 for a in counts}
    options = []
    for (a, b_, c, d) in tuples:
        heads[a] += 1
        tails[c] += 1
        pos = Crossing(1, under_in=a, over_in=b_, under_out=c, over_out=d)
        neg = Crossing(-1, under_in=a, over_in=d, under_out=c, over_out=b_)
        if d == b_ + 1 or (b_ != d + 1 and b_ > d):
            options.append((pos, neg))
        else:
            options.append((neg, pos))
    if any(v > 1 for v in heads.values()) or any(v > 1 for v in tails.values()):
        raise ParseError("inconsistent under-strand orientation")

    chosen: list[Crossing] = []

    def solve(i: int) -> bool:
        if i == len(options):
            return True
        for cand in options[i]:
            heads[cand.over_in] += 1
            tails[cand.over_out] += 1
            if heads[cand.over_in] <= 1 and tails[cand.over_out] <= 1:
                chosen.append(cand)
                if solve(i + 1):
                    return True
                chosen.pop()
            heads[cand.over_in] -= 1
            tails[cand.over_out] -= 1
        return False

    if not solve(0):
        raise ParseError("no consistent over-strand orientation: "
                         "arcs are not numbered along components")
    try:
        return PlanarDiagram(tuple(chosen), 0)
    except DiagramError as exc:
        raise ParseError(str(exc)) from None
