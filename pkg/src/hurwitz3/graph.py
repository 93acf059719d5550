"""The vertex graph that classifies quasipositive factorizations of a 3-braid.

Fix a braid X with normal form (U, p), p >= 0.  A *vertex* is a hatted
word w whose plain part equals delta**(p+j) and whose unhatted word equals
U * delta**j in the group; j >= 0 is the *weight* of w.  At weight 0 the
unhatted word coincides with U letter by letter (normal-form uniqueness),
so the weight-0 vertices are exactly the hat assignments of U whose plain
subsequence equals delta**p.

Edges come in six kinds.  Horizontal edges preserve weight:

  h1/h2  the words agree except that a hat moves from position i to
         position j across a segment B, subject to x*B' == B'*y with
         B' == delta**q (h1) or x*B' == delta**q (h2);
  h3     a contiguous fully-hatted segment is rewritten to another hatted
         word with the same group value.

Vertical edges drop the weight by one:

  v1     a plain adjacent delta pair is deleted and the tail is shifted
         by tau**(-1);
  v2     a two-letter segment P (one plain letter u, one hatted) with
         unhatted value delta is deleted while a plain letter y matching
         u gets hatted, the tail after P shifted by tau**(-1);
  v3     the composite of an h3 edge followed by a v2 edge.

Two weight-0 vertices describe Hurwitz-equivalent factorizations exactly
when they lie in the same connected component of the weight-0 graph under
h1/h2 edges (h3 cannot connect distinct weight-0 vertices: their unhatted
words are fixed letterwise, so it is scanned only for uniformity).  For
p < 0 no graph is needed: all factorizations of X are equivalent.
"""

from __future__ import annotations

import dataclasses
from heapq import heappop, heappush
from typing import Iterator, Optional

from ._backend import invert, multiply, normalize
from .braid import Braid, ConsistencyError, is_delta_pair, positive_words_equal_to
from .words import (
    HattedWord,
    delta_power_of,
    format_hatted_word,
    HAT,
    hat_word,
    hatted_positions,
    is_hatted,
    _match_r,
    plain_positions,
    plain_subword,
    prime_delta_power,
    tau_hatted_word,
    unhat_word,
)


@dataclasses.dataclass(frozen=True, slots=True)
class Vertex:
    word: HattedWord
    weight: int

    def tokens(self) -> str:
        return format_hatted_word(self.word)


@dataclasses.dataclass(frozen=True, slots=True)
class Edge:
    """A typed adjacency, re-checkable from its recorded positions.

    For h1/h2, `a` is the endpoint carrying the hat at position spots[0]
    and spots == (i, j).  For h3, spots bounds the rewritten window.  For
    v-kinds, `a` is the heavier endpoint; v3 records the intermediate h3
    word in `via`.
    """

    a: HattedWord
    b: HattedWord
    kind: str
    spots: tuple[int, ...] = ()
    via: Optional[HattedWord] = None


def vertex_for(x: Braid, word: HattedWord) -> Vertex:
    """Wrap a hatted word as a vertex carrying x, validating it.

    The word itself makes sense for any x (its plain part is a nonnegative
    delta power and its unhatted value is x times that power); the graph
    operations on vertices additionally require x.p >= 0.
    """
    q = prime_delta_power(word)
    if q is None:
        raise ValueError(f"{format_hatted_word(word)!r}: plain part is not a "
                         "power of delta")
    j = q - x.p
    if j < 0 or normalize(unhat_word(word)) != (x.u, j):
        raise ValueError(f"{format_hatted_word(word)!r} is not a vertex word "
                         f"of {x}")
    return Vertex(word, j)


def is_vertex_word(x: Braid, word: HattedWord) -> bool:
    try:
        vertex_for(x, word)
    except ValueError:
        return False
    return True


def _delta_subsequences(word, q: int) -> list[tuple[int, ...]]:
    """Index sets S, |S| == 2q, with word restricted to S equal to delta**q.

    Depth-first over positions; a partial choice is kept only while its
    value still divides delta**q on the left.
    """
    need = 2 * q
    n = len(word)
    out: list[tuple[int, ...]] = []

    def rec(idx: int, chosen: list[int], u, p) -> None:
        if len(chosen) == need:
            if not u and p == -q:
                out.append(tuple(chosen))
            return
        if n - idx < need - len(chosen):
            return
        nu, np = multiply(u, p, (word[idx],), 0)
        if invert(nu, np)[1] <= q:  # value still left-divides delta**q
            chosen.append(idx)
            rec(idx + 1, chosen, nu, np)
            chosen.pop()
        rec(idx + 1, chosen, u, p)

    rec(0, [], (), 0)
    return out


def vertices_of_weight(x: Braid, j: int) -> tuple[Vertex, ...]:
    """All vertices of weight j, sorted by word.

    The unhatted word ranges over the positive words equal to U * delta**j;
    hats are assigned so that the plain subsequence equals delta**(p+j).
    """
    if x.p < 0:
        raise ValueError("vertex graphs are defined for p >= 0 only")
    if j < 0:
        raise ValueError("weight must be >= 0")
    q = x.p + j
    found: set[HattedWord] = set()
    for bar in sorted(positive_words_equal_to(Braid(x.u, -j))):
        for spots in _delta_subsequences(bar, q):
            keep = set(spots)
            found.add(tuple(a if t in keep else a + HAT
                            for t, a in enumerate(bar)))
    return tuple(Vertex(w, j) for w in sorted(found))


def base_vertices(x: Braid) -> tuple[Vertex, ...]:
    """The weight-0 vertices; empty exactly when x has no factorization."""
    return vertices_of_weight(x, 0)


# ---------------------------------------------------------------------------
# edge classification

def classify_h12(wa: HattedWord, wb: HattedWord) -> Optional[Edge]:
    """The h1/h2 edge between two words, or None.

    Same-kind conditions cannot overlap: B' == delta**q and x*B' == delta**q'
    would force a single atom to be a delta power.
    """
    if len(wa) != len(wb) or wa == wb:
        return None
    diff = [t for t in range(len(wa)) if wa[t] != wb[t]]
    if len(diff) != 2:
        return None
    i, j = diff
    if wa[i] % 3 != wb[i] % 3 or wa[j] % 3 != wb[j] % 3:
        return None
    if is_hatted(wa[i]) and not is_hatted(wa[j]):
        w_role, v_role = wa, wb
    elif is_hatted(wb[i]) and not is_hatted(wb[j]):
        w_role, v_role = wb, wa
    else:
        return None
    x = w_role[i] % 3
    y = w_role[j] % 3
    between = plain_subword(w_role[i + 1:j])
    if normalize((x,) + between) != normalize(between + (y,)):
        return None
    if delta_power_of(between) is not None:
        kind = "h1"
    elif delta_power_of((x,) + between) is not None:
        kind = "h2"
    else:
        return None
    return Edge(w_role, v_role, kind, (i, j))


def classify_h3(wa: HattedWord, wb: HattedWord) -> Optional[Edge]:
    """The h3 edge between two words, or None.

    Trimming the longest common affixes is enough: extending the window by
    shared letters multiplies both sides by the same prefix.
    """
    n = len(wa)
    if n != len(wb) or wa == wb:
        return None
    lo = 0
    while wa[lo] == wb[lo]:
        lo += 1
    hi = n
    while hi > lo and wa[hi - 1] == wb[hi - 1]:
        hi -= 1
    win_a = wa[lo:hi]
    win_b = wb[lo:hi]
    if not all(is_hatted(l) for l in win_a + win_b):
        return None
    if normalize(unhat_word(win_a)) != normalize(unhat_word(win_b)):
        return None
    return Edge(wa, wb, "h3", (lo, hi))


def classify_horizontal(wa: HattedWord, wb: HattedWord) -> Optional[Edge]:
    return classify_h12(wa, wb) or classify_h3(wa, wb)


# ---------------------------------------------------------------------------
# neighbor generation

def _h12_neighbor_words(word: HattedWord) -> Iterator[tuple[HattedWord, Edge]]:
    for i in hatted_positions(word):
        for j in plain_positions(word):
            cand = list(word)
            cand[i] = word[i] % 3
            cand[j] = word[j] % 3 + HAT
            edge = classify_h12(word, tuple(cand))
            if edge is not None:
                yield tuple(cand), edge


def _maximal_hatted_runs(word: HattedWord) -> Iterator[tuple[int, int]]:
    t = 0
    n = len(word)
    while t < n:
        if is_hatted(word[t]):
            lo = t
            while t < n and is_hatted(word[t]):
                t += 1
            yield lo, t
        else:
            t += 1


def _h3_neighbor_words(word: HattedWord) -> Iterator[tuple[HattedWord, Edge]]:
    for lo, hi in _maximal_hatted_runs(word):
        atoms = unhat_word(word[lo:hi])
        for other in sorted(positive_words_equal_to(Braid.from_positive(atoms))):
            if other == atoms:
                continue
            nbr = word[:lo] + hat_word(other) + word[hi:]
            yield nbr, Edge(word, nbr, "h3", (lo, hi))


def h_neighbor_words(word: HattedWord) -> list[tuple[HattedWord, Edge]]:
    """All horizontal neighbors of a vertex word (h1, h2 and h3)."""
    out = list(_h12_neighbor_words(word))
    out.extend(_h3_neighbor_words(word))
    return out


def _v1_neighbor_words(word: HattedWord) -> Iterator[tuple[HattedWord, Edge]]:
    for t in range(len(word) - 1):
        a, b = word[t], word[t + 1]
        if a < HAT and b < HAT and is_delta_pair(a, b):
            nbr = word[:t] + tau_hatted_word(word[t + 2:], -1)
            yield nbr, Edge(word, nbr, "v1", (t,))


def _v2_neighbor_words(word: HattedWord) -> Iterator[tuple[HattedWord, Edge]]:
    if not prime_delta_power(word):
        return
    n = len(word)
    for t in range(n - 1):
        a, b = word[t], word[t + 1]
        if is_hatted(a) == is_hatted(b):
            continue
        if not is_delta_pair(a % 3, b % 3):
            continue
        u_pos = t if not is_hatted(a) else t + 1
        # matching letter after the segment: the hatted copy of y lands
        # inside the tau-shifted tail
        for s in range(t + 2, n):
            if is_hatted(word[s]) or _match_r(word, u_pos, s) is None:
                continue
            tail = word[t + 2:s] + (word[s] + HAT,) + word[s + 1:]
            nbr = word[:t] + tau_hatted_word(tail, -1)
            yield nbr, Edge(word, nbr, "v2", (t, u_pos, s))
        # matching letter before the segment: y is hatted in place
        for s in range(t):
            if is_hatted(word[s]) or _match_r(word, s, u_pos) is None:
                continue
            nbr = (word[:s] + (word[s] + HAT,) + word[s + 1:t]
                   + tau_hatted_word(word[t + 2:], -1))
            yield nbr, Edge(word, nbr, "v2", (t, u_pos, s))


def _v3_neighbor_words(word: HattedWord) -> Iterator[tuple[HattedWord, Edge]]:
    for mid, _ in _h3_neighbor_words(word):
        for nbr, e2 in _v2_neighbor_words(mid):
            yield nbr, Edge(word, nbr, "v3", e2.spots, via=mid)


def v_neighbor_words(word: HattedWord) -> list[tuple[HattedWord, Edge]]:
    out = list(_v1_neighbor_words(word))
    out.extend(_v2_neighbor_words(word))
    out.extend(_v3_neighbor_words(word))
    return out


def vertical_neighbors(x: Braid, v: Vertex) -> tuple[tuple[Vertex, Edge], ...]:
    """All strictly lower neighbors of a positive-weight vertex, validated."""
    if v.weight < 1:
        raise ValueError("vertical edges require weight >= 1")
    out = []
    for nbr, edge in v_neighbor_words(v.word):
        nv = vertex_for(x, nbr)
        if nv.weight != v.weight - 1:
            raise ConsistencyError(
                f"vertical move from {v.tokens()!r} changed weight by "
                f"{v.weight - nv.weight}")
        out.append((nv, edge))
    return tuple(sorted(out, key=lambda t: (t[0].word, t[1].kind, t[1].spots)))


# ---------------------------------------------------------------------------
# components of the weight-0 graph

class UnionFind:
    """Array union-find with path compression; indices 0..n-1."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:
            self.parent[a], a = root, self.parent[a]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclasses.dataclass(frozen=True)
class Components:
    """The weight-0 vertex set of x, partitioned by h-edges."""

    x: Braid
    vertices: tuple[HattedWord, ...]
    component_of: dict[HattedWord, int]
    representatives: tuple[HattedWord, ...]
    edges: tuple[Edge, ...]

    @property
    def component_count(self) -> int:
        return len(self.representatives)

    def members(self, cid: int) -> tuple[HattedWord, ...]:
        return tuple(w for w in self.vertices if self.component_of[w] == cid)

    def path(self, start: HattedWord,
             goal: HattedWord) -> Optional[list[tuple[HattedWord, HattedWord, Edge]]]:
        """A shortest edge path start -> goal, as (from, to, edge) steps."""
        if start == goal:
            return []
        adj: dict[HattedWord, list[tuple[HattedWord, Edge]]] = {}
        for e in self.edges:
            adj.setdefault(e.a, []).append((e.b, e))
            adj.setdefault(e.b, []).append((e.a, e))
        prev: dict[HattedWord, tuple[HattedWord, Edge]] = {}
        frontier = [start]
        seen = {start}
        while frontier:
            nxt = []
            for w in frontier:
                for other, e in adj.get(w, ()):
                    if other in seen:
                        continue
                    seen.add(other)
                    prev[other] = (w, e)
                    if other == goal:
                        steps = []
                        cur = goal
                        while cur != start:
                            frm, edge = prev[cur]
                            steps.append((frm, cur, edge))
                            cur = frm
                        return list(reversed(steps))
                    nxt.append(other)
            frontier = nxt
        return None


def base_components(x: Braid) -> Components:
    """Union-find over all horizontal edges among the weight-0 vertices.

    h3 is included in the scan for uniformity; at weight 0 it cannot relate
    distinct words, so only h1/h2 contribute.
    """
    words = [v.word for v in base_vertices(x)]
    uf = UnionFind(len(words))
    edges = []
    for a in range(len(words)):
        for b in range(a + 1, len(words)):
            edge = classify_horizontal(words[a], words[b])
            if edge is not None:
                edges.append(edge)
                uf.union(a, b)
    groups: dict[int, list[int]] = {}
    for t in range(len(words)):
        groups.setdefault(uf.find(t), []).append(t)
    ordered = sorted(groups.values(), key=lambda g: words[g[0]])
    component_of = {}
    reps = []
    for cid, group in enumerate(ordered):
        reps.append(words[min(group)])
        for t in group:
            component_of[words[t]] = cid
    return Components(x, tuple(words), component_of, tuple(reps), tuple(edges))


def region_components(x: Braid, cap: int) -> dict[HattedWord, int]:
    """Connectivity of the full subgraph on vertices of weight <= cap.

    Materializes every level up to cap, links all horizontal and vertical
    edges among them, and returns a map word -> component id.  Paths may
    pass up and down freely inside the weight cap.
    """
    words: list[HattedWord] = []
    weight: dict[HattedWord, int] = {}
    for j in range(cap + 1):
        for v in vertices_of_weight(x, j):
            weight[v.word] = j
            words.append(v.word)
    words.sort()
    index = {w: t for t, w in enumerate(words)}
    uf = UnionFind(len(words))
    for w in words:
        for nbr, _ in h_neighbor_words(w):
            if nbr in index:
                uf.union(index[w], index[nbr])
        if weight[w] >= 1:
            for nbr, _ in v_neighbor_words(w):
                if nbr not in index:
                    raise ConsistencyError(
                        f"vertical neighbor of {format_hatted_word(w)!r} "
                        "missing from the materialized region")
                uf.union(index[w], index[nbr])
    return {w: uf.find(index[w]) for w in words}


# ---------------------------------------------------------------------------
# descent and the equivalence decision

PathStep = tuple[HattedWord, HattedWord, Edge]


def descend_path(x: Braid, v: Vertex) -> tuple[Vertex, tuple[PathStep, ...]]:
    """A weight-0 vertex in the component of v, with the edge path used.

    Best-first search that never increases weight: horizontal neighbors at
    the current weight, vertical neighbors downward, lower weight always
    preferred and ties broken by word order.  Exhausting the region without
    reaching weight 0 is impossible for a genuine vertex.
    """
    if x.p < 0:
        raise ValueError("descend requires p >= 0")
    prev: dict[HattedWord, PathStep] = {}
    visited = {v.word}
    heap: list[tuple[int, HattedWord]] = [(v.weight, v.word)]
    while heap:
        wt, word = heappop(heap)
        if wt == 0:
            steps = []
            cur = word
            while cur != v.word:
                step = prev[cur]
                steps.append(step)
                cur = step[0]
            return Vertex(word, 0), tuple(reversed(steps))
        for nbr, edge in v_neighbor_words(word):
            if nbr not in visited:
                visited.add(nbr)
                prev[nbr] = (word, nbr, edge)
                heappush(heap, (wt - 1, nbr))
        for nbr, edge in h_neighbor_words(word):
            if nbr not in visited:
                visited.add(nbr)
                prev[nbr] = (word, nbr, edge)
                heappush(heap, (wt, nbr))
    raise ConsistencyError(
        f"no weight-0 vertex reachable from {v.tokens()!r} in the graph of {x}")


def descend(x: Braid, v: Vertex) -> Vertex:
    """A weight-0 vertex in the connected component of v."""
    return descend_path(x, v)[0]


@dataclasses.dataclass(frozen=True)
class Decision:
    """Outcome of an equivalence query, with the data behind it."""

    verdict: str  # "equivalent" | "inequivalent" | "invalid"
    reason: Optional[str] = None
    p: Optional[int] = None
    k: Optional[int] = None
    v0_size: Optional[int] = None
    component_count: Optional[int] = None
    vertex_a: Optional[Vertex] = None
    vertex_b: Optional[Vertex] = None
    start_a: Optional[Vertex] = None
    start_b: Optional[Vertex] = None
    component_a: Optional[int] = None
    component_b: Optional[int] = None
    components: Optional[Components] = None
    path_a: Optional[tuple[PathStep, ...]] = None
    path_b: Optional[tuple[PathStep, ...]] = None


def decide_equivalence(f1, f2, x: Braid) -> Decision:
    """Decide whether two factorizations of x are Hurwitz equivalent.

    Invalid inputs are reported, never raised.  For p < 0 all valid
    factorizations are equivalent; otherwise each input is turned into a
    vertex, descended to weight 0, and the two components are compared.
    """
    from .factorizations import to_vertex, validate

    for label, f in (("first", f1), ("second", f2)):
        if f.target != x:
            return Decision("invalid",
                            f"{label} factorization declares target "
                            f"{f.target} instead of {x}",
                            p=x.p, k=x.band_length)
        err = validate(f)
        if err is not None:
            return Decision("invalid", f"{label} factorization {err}",
                            p=x.p, k=x.band_length)
    if x.p < 0:
        return Decision("equivalent", "single orbit (p < 0)",
                        p=x.p, k=x.band_length)
    va, vb = to_vertex(f1), to_vertex(f2)
    wa, path_a = descend_path(x, va)
    wb, path_b = descend_path(x, vb)
    comps = base_components(x)
    for w in (wa, wb):
        if w.word not in comps.component_of:
            raise ConsistencyError(f"descended vertex {w.tokens()!r} missing "
                                   "from the weight-0 graph")
    ca = comps.component_of[wa.word]
    cb = comps.component_of[wb.word]
    return Decision(
        "equivalent" if ca == cb else "inequivalent",
        p=x.p, k=x.band_length,
        v0_size=len(comps.vertices),
        component_count=comps.component_count,
        vertex_a=wa, vertex_b=wb, start_a=va, start_b=vb,
        component_a=ca, component_b=cb, components=comps,
        path_a=path_a, path_b=path_b)


# ---------------------------------------------------------------------------
# exports

def components_report(comps: Components) -> dict:
    return {
        "normal_form": comps.x.tokens(),
        "p": comps.x.p,
        "k": comps.x.band_length,
        "v0_size": len(comps.vertices),
        "component_count": comps.component_count,
        "components": [
            {
                "id": cid,
                "representative": format_hatted_word(rep),
                "vertices": [format_hatted_word(w) for w in comps.members(cid)],
            }
            for cid, rep in enumerate(comps.representatives)
        ],
    }


def decision_report(d: Decision) -> dict:
    return {
        "verdict": d.verdict,
        "reason": d.reason,
        "p": d.p,
        "k": d.k,
        "component_a": d.component_a,
        "component_b": d.component_b,
        "vertex_a": d.vertex_a.tokens() if d.vertex_a else None,
        "vertex_b": d.vertex_b.tokens() if d.vertex_b else None,
        "v0_size": d.v0_size,
        "component_count": d.component_count,
    }


def components_dot(comps: Components) -> str:
    """DOT text: one node per vertex, components as clusters, typed edges."""
    index = {w: f"v{t}" for t, w in enumerate(comps.vertices)}
    lines = ["graph components {"]
    for cid, rep in enumerate(comps.representatives):
        lines.append(f"  subgraph cluster_{cid} {{")
        lines.append(f'    label="component {cid}";')
        for w in comps.members(cid):
            lines.append(f'    {index[w]} [label="{format_hatted_word(w)}"];')
        lines.append("  }")
    for e in comps.edges:
        lines.append(f'  {index[e.a]} -- {index[e.b]} '
                     f'[kind="{e.kind}" label="{e.kind}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
