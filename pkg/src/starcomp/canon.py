"""Canonical forms for small graphs.

Colour refinement seeded with (degree, triangle count), then backtracking over
individualization choices; the canonical form is the lexicographically least
graph6 encoding over all leaves.  Sound and complete for the enforced n <= 20
cap (the largest graph needing dedupe here has 18 vertices).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import TooLarge
from .graphs import Graph, graph6_encode

CANONICAL_CAP = 20


@dataclass(frozen=True)
class CanonicalForm:
    bytes: bytes
    perm: tuple[int, ...]  # perm[old vertex] = canonical position


def _refine(g: Graph, colors: list[int]) -> list[int]:
    nbrs = [g.neighbours(v) for v in range(g.n)]
    while True:
        keys = [(colors[v], tuple(sorted(colors[u] for u in nbrs[v]))) for v in range(g.n)]
        order = {k: i for i, k in enumerate(sorted(set(keys)))}
        new = [order[k] for k in keys]
        if new == colors:
            return colors
        colors = new


def _initial_colors(g: Graph) -> list[int]:
    tri = []
    for v in range(g.n):
        ns = g.neighbours(v)
        tri.append(sum(1 for i, u in enumerate(ns) for w in ns[i + 1:] if g.adjacent(u, w)))
    keys = [(g.degree(v), tri[v]) for v in range(g.n)]
    order = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def canonical(g: Graph) -> CanonicalForm:
    if g.n > CANONICAL_CAP:
        raise TooLarge(f"canonical form capped at {CANONICAL_CAP} vertices, got {g.n}")
    best: list = [None, None]  # encoding, perm

    def walk(colors: list[int]):
        colors = _refine(g, colors)
        # first colour class with more than one vertex
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = next((c for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            enc = graph6_encode(g.relabel(colors))
            if best[0] is None or enc < best[0]:
                best[0], best[1] = enc, tuple(colors)
            return
        # branch once per swap class: when exchanging u and v is an
        # automorphism (identical rows away from each other), their subtrees
        # yield the same encodings, so exploring both is pure waste.  This is
        # what keeps duplicate-heavy graphs (K_{t,s} above all) out of the
        # factorial regime.
        reps: list[int] = []
        for v in cells[target]:
            for u in reps:
                away = ~((1 << u) | (1 << v))
                if (g.adj[u] & away) == (g.adj[v] & away):
                    break
            else:
                reps.append(v)
        for v in reps:
            branched = [c + (1 if c > target else 0) for c in colors]
            for u in cells[target]:
                if u != v:
                    branched[u] += 1
            walk(branched)

    walk(_initial_colors(g))
    return CanonicalForm(bytes=best[0].encode("ascii"), perm=best[1])


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical(g).perm)


def are_isomorphic(a: Graph, b: Graph) -> bool:
    """Exact isomorphism test; no size cap (backtracking on refined colours)."""
    if a.n != b.n or sorted(a.degrees()) != sorted(b.degrees()):
        return False
    ca = _refine(a, _initial_colors(a))
    cb = _refine(b, _initial_colors(b))
    if sorted(ca) != sorted(cb):
        return False
    # order a's vertices most-constrained first
    order = sorted(range(a.n), key=lambda v: (ca.count(ca[v]), ca[v]))
    image = [-1] * a.n
    used = [False] * b.n

    def extend(i: int) -> bool:
        if i == a.n:
            return True
        v = order[i]
        for w in range(b.n):
            if used[w] or cb[w] != ca[v]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if a.adjacent(v, u) != b.adjacent(w, image[u]):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                used[w] = False
                image[v] = -1
        return False

    return extend(0)
