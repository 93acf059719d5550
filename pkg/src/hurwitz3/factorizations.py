"""Quasipositive factorizations and the Hurwitz action on them.

A factor is a conjugated band A * x * A**-1, stored as the pair
(conjugator word A, atom x); this makes "conjugate to a band" structural
instead of something to decide.  A factorization is an ordered tuple of
factors together with the braid it claims to multiply to.  The Hurwitz
move at slot i replaces (X_i, X_i+1) by (X_i X_i+1 X_i**-1, X_i); its
inverse replaces the pair by (X_i+1, X_i+1**-1 X_i X_i+1).  Moves preserve
the product and the factor form.

A weight-j vertex word w encodes a factorization directly: writing
w == W_1 x^_1 W_2 x^_2 ... W_k x^_k W_k+1 with plain segments W_i and
hatted letters x^_i, the i-th factor conjugates x_i by the plain prefix
W_1...W_i, and the target is the value of the unhatted word divided by the
delta power of the plain part.  `factorization_of_word` reads this off;
`to_vertex` inverts it up to factor-wise equality of values by eliminating
the inverse letters of A_1 x^_1 A_1**-1 ... A_k x^_k A_k**-1.

File format (one factor per line):

    # optional comment
    target: s2 s0 s1 s1 s1- s2-
    s2 : s0
    : s1

i.e. ``conjugator_tokens : atom_token`` with an optional leading target
line; conjugators may use inverse tokens like ``s1-``.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable, Optional

from ._backend import hurwitz_step
from .braid import (
    Braid,
    ConsistencyError,
    SignedWord,
    TokenError,
    evaluate,
    format_signed_word,
    inverse_signed,
    parse_signed_word,
)
from .graph import Edge, Vertex, vertex_for
from .words import HAT, format_hatted_word, is_hatted, positivize, prime_delta_power

# (u, p) pair of a braid; tuples of these are the canonical orbit elements.
CanonicalBraid = tuple[tuple[int, ...], int]
CanonicalTuple = tuple[CanonicalBraid, ...]

# One Hurwitz move: (1-based slot, +1 forward / -1 inverse).
Move = tuple[int, int]
MoveSequence = tuple[Move, ...]

ORBIT_BUDGET = 50_000
# Orbits need not be finite: for many targets the move a -> X*a**-1 has
# infinite order, so canonical forms grow without revisiting.  A tuple
# whose letters exceed this bound is treated as escaping to infinity and
# the search reports itself unsaturated.
ORBIT_MAX_LETTERS = 600


@dataclasses.dataclass(frozen=True, slots=True)
class Factor:
    """A conjugated band A * x * A**-1."""

    conjugator: SignedWord
    atom: int

    def __post_init__(self):
        if self.atom not in (0, 1, 2):
            raise ValueError(f"bad atom {self.atom!r}")
        for a, s in self.conjugator:
            if a not in (0, 1, 2) or s not in (1, -1):
                raise ValueError(f"bad conjugator letter {(a, s)!r}")

    def value(self) -> Braid:
        word = self.conjugator + ((self.atom, 1),) + inverse_signed(self.conjugator)
        return evaluate(word)

    def tokens(self) -> str:
        return f"{format_signed_word(self.conjugator)} : s{self.atom}".lstrip()


@dataclasses.dataclass(frozen=True, slots=True)
class Factorization:
    factors: tuple[Factor, ...]
    target: Braid

    def values(self) -> tuple[Braid, ...]:
        return tuple(f.value() for f in self.factors)

    def canonical(self) -> CanonicalTuple:
        return tuple((v.u, v.p) for v in self.values())

    def __len__(self) -> int:
        return len(self.factors)


def validate(f: Factorization) -> Optional[str]:
    """None when f is a factorization of its target, else the failure reason."""
    k = f.target.band_length
    if len(f.factors) != k:
        return (f"has {len(f.factors)} factors but the target has band "
                f"length {k}")
    product = Braid.identity()
    for factor in f.factors:
        product = product * factor.value()
    if product != f.target:
        return f"factor product is {product}, not the declared target {f.target}"
    return None


def sigma_move(f: Factorization, i: int, direction: int = 1) -> Factorization:
    """The Hurwitz move at 1-based slot i (direction -1 for the inverse).

    Conjugators are recomputed as signed words; values are renormalized on
    demand.  The product is unchanged.
    """
    k = len(f.factors)
    if not 1 <= i <= k - 1:
        raise IndexError(f"move index {i} out of range for {k} factors")
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    a = f.factors[i - 1]
    b = f.factors[i]
    if direction == 1:
        conj = (a.conjugator + ((a.atom, 1),) + inverse_signed(a.conjugator)
                + b.conjugator)
        pair = (Factor(conj, b.atom), a)
    else:
        conj = (b.conjugator + ((b.atom, -1),) + inverse_signed(b.conjugator)
                + a.conjugator)
        pair = (b, Factor(conj, a.atom))
    return Factorization(f.factors[:i - 1] + pair + f.factors[i + 1:], f.target)


def apply_moves(f: Factorization, moves: Iterable[Move]) -> Factorization:
    for i, direction in moves:
        f = sigma_move(f, i, direction)
    return f


# ---------------------------------------------------------------------------
# between factorizations and vertex words

def factorization_of_word(word) -> Factorization:
    """Read the factorization off a hat-marked word.

    The plain part must equal a nonnegative power of delta; that power
    divides the unhatted value to give the target.
    """
    m = prime_delta_power(word)
    if m is None:
        raise ValueError(f"{format_hatted_word(word)!r}: plain part is not a "
                         "power of delta")
    factors = []
    prefix: list[tuple[int, int]] = []
    for letter in word:
        if is_hatted(letter):
            factors.append(Factor(tuple(prefix), letter - HAT))
        else:
            prefix.append((letter, 1))
    target = Braid.from_positive(tuple(l % 3 for l in word)) * Braid.delta(-m)
    return Factorization(tuple(factors), target)


def to_vertex(f: Factorization) -> Vertex:
    """The vertex of the target's graph carrying f.

    Concatenates the signed hatted words A_i x^_i A_i**-1 and eliminates
    the inverse letters; the bracket of the result is factor-wise equal to
    f.  The image is always a genuine vertex; a failure indicates a bug.
    """
    signed: list[tuple[int, int]] = []
    for factor in f.factors:
        signed.extend(factor.conjugator)
        signed.append((factor.atom + HAT, 1))
        signed.extend(inverse_signed(factor.conjugator))
    word = positivize(tuple(signed))
    try:
        return vertex_for(f.target, word)
    except ValueError as exc:
        raise ConsistencyError(f"factorization image {exc}") from exc


# ---------------------------------------------------------------------------
# the brute-force orbit oracle

def _tuple_letters(node: CanonicalTuple) -> int:
    return sum(len(u) + 2 * abs(p) for u, p in node)


def hurwitz_orbit(start: Factorization | CanonicalTuple,
                  budget: int = ORBIT_BUDGET,
                  max_letters: int = ORBIT_MAX_LETTERS,
                  ) -> tuple[frozenset[CanonicalTuple], bool]:
    """Breadth-first closure of a factorization under all Hurwitz moves.

    Works on canonical value tuples, so the result is independent of how
    conjugators are spelled.  Returns (orbit, saturated); the flag is True
    only when the closure was fully enumerated, and the search gives up as
    soon as more than `budget` tuples are collected or a tuple outgrows
    `max_letters` (the sign of an infinite orbit).
    """
    node = start.canonical() if isinstance(start, Factorization) else start
    visited: set[CanonicalTuple] = {node}
    queue: list[CanonicalTuple] = [node]
    qi = 0
    k = len(node)
    while qi < len(queue):
        if len(visited) > budget:
            return frozenset(visited), False
        node = queue[qi]
        qi += 1
        for i in range(k - 1):
            for forward in (True, False):
                child = hurwitz_step(node, i, forward)
                if child in visited:
                    continue
                if _tuple_letters(child) > max_letters:
                    return frozenset(visited), False
                visited.add(child)
                queue.append(child)
    return frozenset(visited), True


def hurwitz_connect(start: CanonicalTuple,
                    targets: Iterable[CanonicalTuple],
                    budget: int = ORBIT_BUDGET,
                    max_letters: int = ORBIT_MAX_LETTERS,
                    ) -> tuple[frozenset[CanonicalTuple], bool]:
    """Search the orbit of `start` for the given targets.

    Children larger than `max_letters` are skipped rather than aborting,
    since the point is to reach the (small) targets; the search ends when
    every target is found, the bounded region is exhausted, or the node
    budget runs out.  Returns (targets found, whole orbit enumerated); the
    flag is False after an early exit or any truncation.
    """
    wanted = set(targets)
    node = start
    found = {node} & wanted
    visited: set[CanonicalTuple] = {node}
    queue: list[CanonicalTuple] = [node]
    qi = 0
    k = len(node)
    complete = True
    while qi < len(queue) and wanted - found:
        if len(visited) > budget:
            return frozenset(found), False
        node = queue[qi]
        qi += 1
        for i in range(k - 1):
            for forward in (True, False):
                child = hurwitz_step(node, i, forward)
                if child in visited:
                    continue
                if _tuple_letters(child) > max_letters:
                    complete = False
                    continue
                visited.add(child)
                queue.append(child)
                if child in wanted:
                    found.add(child)
    return frozenset(found), complete and qi >= len(queue)


# ---------------------------------------------------------------------------
# move certificates for horizontal edges

def edge_to_moves(edge: Edge) -> MoveSequence:
    """The Hurwitz moves turning bracket(edge.a) into bracket(edge.b).

    For an h1/h2 edge with the hat at position i (ordinal m among the hats
    of edge.a) moving to position j, the certificate is the block
    (m, m+1, ..., s-2) of forward moves, where s-1 is the ordinal of the
    new hat among the hats of edge.b; it is empty when no hatted letter
    separates i from j, in which case the two brackets already agree.

    h3 edges are accepted only in the degenerate case where both brackets
    already have equal values (the only way h3 arises at weight 0); the
    certificate is then empty.
    """
    if edge.kind == "h3":
        fa = factorization_of_word(edge.a)
        fb = factorization_of_word(edge.b)
        if fa.canonical() != fb.canonical():
            raise ValueError("h3 edge with differing bracket values has no "
                             "horizontal move certificate")
        return ()
    if edge.kind not in ("h1", "h2"):
        raise ValueError(f"no move certificate for edges of kind {edge.kind}")
    i, j = edge.spots
    m = sum(1 for t in range(i + 1) if is_hatted(edge.a[t]))
    inner = sum(1 for t in range(i + 1, j) if is_hatted(edge.a[t]))
    s = m + inner + 1
    return tuple((idx, 1) for idx in range(m, s - 1))


def moves_between(path_steps, allow_vertical: bool = False) -> MoveSequence:
    """Concatenate edge certificates along a path of (from, to, edge) steps.

    Traversing an edge against its stored orientation inverts and reverses
    its move block.  With allow_vertical, edges whose endpoints have equal
    bracket values (the value-preserving vertical contractions) contribute
    an empty block; any other vertical edge has no certificate and raises.
    """
    moves: list[Move] = []
    for frm, _to, edge in path_steps:
        if edge.kind in ("v1", "v2", "v3"):
            if not allow_vertical:
                raise ValueError(f"no move certificate across {edge.kind}")
            fa = factorization_of_word(edge.a)
            fb = factorization_of_word(edge.b)
            if fa.canonical() != fb.canonical():
                raise ValueError(
                    f"{edge.kind} edge changes the bracket values")
            continue
        block = edge_to_moves(edge)
        if edge.a == frm:
            moves.extend(block)
        else:
            moves.extend((idx, -d) for idx, d in reversed(block))
    return tuple(moves)


def inverse_moves(moves: MoveSequence) -> MoveSequence:
    return tuple((i, -d) for i, d in reversed(moves))


def full_certificate(decision, f1: Factorization,
                     f2: Factorization) -> Optional[MoveSequence]:
    """An end-to-end verified move sequence from f1 to f2, when one exists
    along the decision's paths.

    Descent legs qualify only while their edges preserve bracket values;
    the weight-0 leg always carries moves.  Returns None when some step has
    no certificate or the verification fails, in which case only the
    component-level certificate stands.
    """
    if decision.verdict != "equivalent" or decision.components is None:
        return None
    try:
        leg_a = moves_between(decision.path_a, allow_vertical=True)
        leg_b = moves_between(decision.path_b, allow_vertical=True)
        path = decision.components.path(decision.vertex_a.word,
                                        decision.vertex_b.word)
        if path is None:
            return None
        mid = moves_between(path)
    except ValueError:
        return None
    moves = leg_a + mid + inverse_moves(leg_b)
    if apply_moves(f1, moves).canonical() != f2.canonical():
        return None
    return moves


# ---------------------------------------------------------------------------
# file format

def _target_signed_word(b: Braid) -> SignedWord:
    word = [(a, 1) for a in b.u]
    if b.p > 0:
        word.extend(((1, -1), (2, -1)) * b.p)     # delta**-1 == s1- s2-
    elif b.p < 0:
        word.extend(((2, 1), (1, 1)) * (-b.p))    # delta == s2 s1
    return tuple(word)


def format_factorization(f: Factorization, with_target: bool = True) -> str:
    lines = []
    if with_target:
        lines.append(f"target: {format_signed_word(_target_signed_word(f.target))}")
    for factor in f.factors:
        conj = format_signed_word(factor.conjugator)
        lines.append(f"{conj} : s{factor.atom}".lstrip())
    return "\n".join(lines) + "\n"


def parse_factorization_file(text: str) -> tuple[tuple[Factor, ...], Optional[Braid]]:
    """Parse factor lines and the optional leading ``target:`` line.

    The target, when present, is given as a signed word; the caller pairs
    the factors with the ambient braid when the line is absent.
    """
    factors: list[Factor] = []
    target: Optional[Braid] = None
    first = True
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if first and line.startswith("target:"):
            target = evaluate(parse_signed_word(line[len("target:"):]))
            first = False
            continue
        first = False
        if ":" not in line:
            raise TokenError(f"factor line {raw!r} lacks ':'")
        conj_text, atom_text = line.rsplit(":", 1)
        atom_word = parse_signed_word(atom_text)
        if len(atom_word) != 1 or atom_word[0][1] != 1:
            raise TokenError(f"factor line {raw!r} needs a single plain atom "
                             "after ':'")
        factors.append(Factor(parse_signed_word(conj_text), atom_word[0][0]))
    return tuple(factors), target
