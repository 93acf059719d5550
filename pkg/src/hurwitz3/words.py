"""Words over the doubled alphabet: plain bands plus their hatted copies.

A hatted word marks some letters of a positive word with hats.  In the
factorization machinery the hatted letters mark the conjugated bands and
the plain letters carry conjugator / delta content.  Letters are ints
0..5: values 0..2 are the plain bands, values 3..5 their hatted copies
(hat == +3).  Text tokens: ``s0 s1 s2 h0 h1 h2``.

Three projections act on a hatted word w:

  * ``unhat_word(w)``   drop every hat, keeping all letters (length preserved);
  * ``plain_subword(w)`` keep only the unhatted letters, in order;
  * ``hat_word(w)``     put a hat on every letter.

For example, for w == s0 h1 s2 h1: plain_subword == s0 s2 and
unhat_word == s0 s1 s2 s1.

Two unhatted positions i < j of w *match* when the plain content strictly
between them equals delta**r and the plain segment including both
endpoints equals delta**(r+1).  Whenever the plain part of w is a positive
power of delta, the matching pairs can be organized into a balanced
(perfect, non-crossing) parenthesization; ``parenthesize`` builds one.

Indices are 0-based everywhere in this API; the 1-based convention appears
only in printed reports.
"""

from __future__ import annotations

import dataclasses
from collections import deque
from functools import lru_cache
from typing import Optional

from ._backend import normalize
from .braid import ConsistencyError, PlainWord, TokenError, _tokens

HattedLetter = int
HattedWord = tuple[int, ...]
# (letter, sign) with the constraint: hatted letters are never inverted.
SignedHattedWord = tuple[tuple[int, int], ...]

HAT = 3


def is_hatted(letter: int) -> bool:
    return letter >= HAT


def hat_letter(atom: int) -> int:
    """The hatted copy of a plain atom (idempotent on hatted letters)."""
    return atom % 3 + HAT


def unhat_letter(letter: int) -> int:
    return letter % 3


def tau_hatted(letter: int, k: int = 1) -> int:
    """Index shift preserving the hat flag."""
    return (letter + k) % 3 + (letter - letter % 3)


def tau_hatted_word(word: HattedWord, k: int = 1) -> HattedWord:
    return tuple(tau_hatted(x, k) for x in word)


def unhat_word(word: HattedWord) -> PlainWord:
    """Drop all hats, keep every letter.

    >>> unhat_word((0, 4, 2, 4))
    (0, 1, 2, 1)
    """
    return tuple(x % 3 for x in word)


def plain_subword(word: HattedWord) -> PlainWord:
    """Keep only the unhatted letters, in order.

    >>> plain_subword((0, 4, 2, 4))
    (0, 2)
    """
    return tuple(x for x in word if x < HAT)


def hat_word(word: HattedWord) -> HattedWord:
    """Put a hat on every letter.

    >>> hat_word((0, 4, 2, 4))
    (3, 4, 5, 4)
    """
    return tuple(x % 3 + HAT for x in word)


def plain_positions(word: HattedWord) -> tuple[int, ...]:
    return tuple(i for i, x in enumerate(word) if x < HAT)


def hatted_positions(word: HattedWord) -> tuple[int, ...]:
    return tuple(i for i, x in enumerate(word) if x >= HAT)


def check_signed_hatted(word: SignedHattedWord) -> None:
    for letter, sign in word:
        if not 0 <= letter < 6 or sign not in (1, -1):
            raise ValueError(f"bad signed hatted letter {(letter, sign)!r}")
        if letter >= HAT and sign < 0:
            raise ValueError("hatted letters cannot be inverted")


def positivize(word: SignedHattedWord) -> HattedWord:
    """Eliminate inverse letters from a signed hatted word.

    Right-to-left rewriting: a positive letter is kept, while an inverse
    plain letter x**-1 followed by an already-rewritten tail T becomes
    tau(tau(x) * T).  The result is an all-positive hatted word; dropping
    its hats yields a positive word equal to the input braid times a power
    of delta.

    >>> positivize(((0, -1),))
    (2,)
    """
    check_signed_hatted(word)
    # out stores letters to which tau**shift still has to be applied.
    out: deque[int] = deque()
    shift = 0
    for letter, sign in reversed(word):
        if sign > 0:
            out.appendleft(tau_hatted(letter, -shift))
        else:
            out.appendleft(tau_hatted(letter, 1 - shift))
            shift += 1
    return tuple(tau_hatted(x, shift) for x in out)


@lru_cache(maxsize=1 << 18)
def delta_power_of(word: PlainWord) -> Optional[int]:
    """q >= 0 if the positive word equals delta**q, else None."""
    v, q = normalize(word)
    return q if not v else None


def prime_delta_power(word: HattedWord) -> Optional[int]:
    """q if the plain part of the hatted word equals delta**q, else None."""
    return delta_power_of(plain_subword(word))


def _match_r(word: HattedWord, i: int, j: int) -> Optional[int]:
    """Matching exponent of positions i < j, without the global precondition."""
    if is_hatted(word[i]) or is_hatted(word[j]):
        return None
    interior = plain_subword(word[i + 1:j])
    r = delta_power_of(interior)
    if r is None:
        return None
    full = (word[i],) + interior + (word[j],)
    if delta_power_of(full) is None:
        return None
    return r


def _require_matching_context(word: HattedWord) -> int:
    q = prime_delta_power(word)
    if q is None or q == 0:
        raise ValueError(
            "matching requires the plain part to be a positive power of delta")
    return q


def matches(word: HattedWord, i: int, j: int) -> Optional[int]:
    """The nesting exponent r if positions i < j match in word, else None.

    Positions match when both letters are unhatted, the plain content
    between them equals delta**r and the plain segment including both
    endpoints equals delta**(r+1).

    >>> matches((2, 1), 0, 1)
    0
    >>> matches((1, 2, 1, 1), 0, 3)
    1
    >>> matches((1, 2, 1, 1), 0, 2) is None
    True
    """
    _require_matching_context(word)
    if not 0 <= i < j < len(word):
        raise ValueError(f"bad position pair ({i}, {j})")
    return _match_r(word, i, j)


@dataclasses.dataclass(frozen=True, slots=True, order=True)
class MatchingPair:
    """A matched pair of unhatted positions with its nesting exponent."""

    i: int
    j: int
    r: int

    def report(self) -> str:
        """1-based serialized form used in logs and reports."""
        return f"({self.i + 1},{self.j + 1},{self.r})"


def all_matching_pairs(word: HattedWord) -> tuple[MatchingPair, ...]:
    """Every matching pair of the word, in lexicographic position order."""
    _require_matching_context(word)
    pos = plain_positions(word)
    out = []
    for a in range(len(pos)):
        for b in range(a + 1, len(pos)):
            r = _match_r(word, pos[a], pos[b])
            if r is not None:
                out.append(MatchingPair(pos[a], pos[b], r))
    return tuple(out)


def parenthesize(word: HattedWord) -> frozenset[MatchingPair]:
    """A perfect non-crossing matching of the unhatted positions.

    Every returned pair satisfies `matches`.  Pairs are chosen
    nearest-partner-first (minimal nesting), with backtracking; a balanced
    matching always exists when the plain part is a positive power of
    delta, so failure raises ConsistencyError.

    >>> sorted((m.i, m.j) for m in parenthesize((1, 2, 1, 1)))
    [(0, 3), (1, 2)]
    """
    _require_matching_context(word)
    pos = plain_positions(word)

    def solve(seq: tuple[int, ...]) -> Optional[tuple[MatchingPair, ...]]:
        if not seq:
            return ()
        first = seq[0]
        for t in range(1, len(seq), 2):  # partner must leave an even interior
            r = _match_r(word, first, seq[t])
            if r is None:
                continue
            inner = solve(seq[1:t])
            if inner is None:
                continue
            outer = solve(seq[t + 1:])
            if outer is None:
                continue
            return (MatchingPair(first, seq[t], r),) + inner + outer
        return None

    result = solve(pos)
    if result is None:
        raise ConsistencyError(
            f"no balanced matching found for {format_hatted_word(word)!r}")
    return frozenset(result)


def cyclic_shift(word: HattedWord, s: int) -> HattedWord:
    """Move the first letter a to the back as tau**s(a).

    >>> cyclic_shift((0, 1), 1)
    (1, 1)
    """
    if not word:
        raise ValueError("cannot shift the empty word")
    return word[1:] + (tau_hatted(word[0], s),)


# ---------------------------------------------------------------------------
# token grammar (extends the plain grammar with h0 h1 h2)

def parse_hatted_word(text: str) -> HattedWord:
    word = []
    for tok in _tokens(text):
        if len(tok) == 2 and tok[0] in "sh" and tok[1] in "012":
            atom = int(tok[1])
            word.append(atom + HAT if tok[0] == "h" else atom)
        else:
            raise TokenError(f"bad hatted token {tok!r}")
    return tuple(word)


def format_hatted_word(word: HattedWord) -> str:
    return " ".join(f"h{x % 3}" if x >= HAT else f"s{x}" for x in word)
