"""Exact arithmetic for the 3-strand braid group in band generators.

The group is generated by three bands s0, s1, s2 subject to

    s2*s1 == s1*s0 == s0*s2

and the common value of the three relation sides is the Garside element
delta.  Since every relation side has length two, letter count descends to
a homomorphism on the group (the band length), and "contains a subword
equal to delta" is the same as "contains one of the adjacent pairs
(s2,s1), (s1,s0), (s0,s2)".  A word with no such adjacent pair is called
delta-free.

Every element X has a unique expression

    X == u * delta**(-p)

with u delta-free; we store this pair as ``Braid(u, p)``.  Note the sign:
p counts *inverse* delta factors, so delta itself is ``Braid((), -1)`` and
the positive elements (products of bands) are exactly those with p <= 0.

Conjugation by delta shifts band indices: tau(x) = delta**-1 * x * delta
sends s_i to s_(i+1 mod 3).  The two rewriting identities used throughout
are

    a * delta * b    == a * tau**(-1)(b) * delta
    delta**(-p) * x  == tau**p(x) * delta**(-p)

Words are plain tuples of ints.  Text form: tokens ``s0 s1 s2``, suffix
``-`` for an inverse letter, ``#`` starts a comment; a braid prints as
``U | p``, e.g. ``s2 s0 | 1``.
"""

from __future__ import annotations

import dataclasses
from collections import deque
from typing import Iterable, Iterator

from ._backend import evaluate_signed, invert, multiply, normalize, tau_word

Atom = int
PlainWord = tuple[int, ...]
SignedLetter = tuple[int, int]
SignedWord = tuple[SignedLetter, ...]

ATOMS = (0, 1, 2)

# The three positive words equal to delta, in a fixed scan order.
DELTA_WORDS: tuple[PlainWord, ...] = ((2, 1), (1, 0), (0, 2))


class TokenError(ValueError):
    """A word or file failed to parse under the token grammar."""


class ConsistencyError(RuntimeError):
    """A structural guarantee failed to hold; indicates a bug, not bad input."""


def is_delta_pair(x: int, y: int) -> bool:
    """True exactly for the adjacent pairs (2,1), (1,0), (0,2).

    >>> [is_delta_pair(2, 1), is_delta_pair(1, 1), is_delta_pair(1, 2)]
    [True, False, False]
    """
    return y == (x + 2) % 3


def tau_atom(x: int, k: int = 1) -> int:
    """Index shift s_x -> s_(x+k mod 3).

    >>> tau_atom(0), tau_atom(0, 3)
    (1, 0)
    """
    return (x + k) % 3


def tau_plain(word: PlainWord, k: int = 1) -> PlainWord:
    """Letterwise index shift of a positive word."""
    return tau_word(word, k)


def is_delta_free(word: PlainWord) -> bool:
    """True iff no adjacent pair of the word multiplies to delta."""
    return all(not is_delta_pair(word[i], word[i + 1]) for i in range(len(word) - 1))


def normalize_positive(word: PlainWord) -> tuple[PlainWord, int]:
    """Rewrite a positive word as (v, q) with v delta-free and word == v * delta**q.

    The letter count is conserved: len(word) == len(v) + 2*q.

    >>> normalize_positive((0, 2))
    ((), 1)
    >>> normalize_positive((2, 0, 2))
    ((2,), 1)
    """
    return normalize(tuple(word))


@dataclasses.dataclass(frozen=True, slots=True)
class Braid:
    """An element of the group in normal form u * delta**(-p), u delta-free."""

    u: PlainWord
    p: int

    def __post_init__(self):
        if any(x not in (0, 1, 2) for x in self.u):
            raise ValueError(f"invalid atom in word {self.u!r}")
        if not is_delta_free(self.u):
            raise ValueError(f"word {self.u!r} is not delta-free")

    @classmethod
    def identity(cls) -> Braid:
        return cls((), 0)

    @classmethod
    def delta(cls, k: int = 1) -> Braid:
        """The k-th power of the Garside element."""
        return cls((), -k)

    @classmethod
    def from_positive(cls, word: Iterable[int]) -> Braid:
        """Normal form of a positive word."""
        v, q = normalize(tuple(word))
        return cls(v, -q)

    def __mul__(self, other: Braid) -> Braid:
        return Braid(*multiply(self.u, self.p, other.u, other.p))

    def inverse(self) -> Braid:
        return Braid(*invert(self.u, self.p))

    def tau(self, k: int = 1) -> Braid:
        """Conjugate by delta**k; acts letterwise on the delta-free part."""
        return Braid(tau_word(self.u, k), self.p)

    @property
    def is_positive(self) -> bool:
        """True iff the braid is a product of bands (p <= 0 in normal form)."""
        return self.p <= 0

    @property
    def band_length(self) -> int:
        """Image under the letter-count homomorphism: len(u) - 2*p."""
        return len(self.u) - 2 * self.p

    def tokens(self) -> str:
        """Text form ``U | p``.

        >>> (Braid.delta() * Braid.delta().inverse()).tokens()
        '| 0'
        """
        if self.u:
            return f"{format_plain_word(self.u)} | {self.p}"
        return f"| {self.p}"

    def __str__(self) -> str:
        return self.tokens()


def evaluate(word: SignedWord) -> Braid:
    """Normal form of a product of signed letters.

    >>> evaluate(((2, 1), (1, 1))).tokens()
    '| -1'
    """
    return Braid(*evaluate_signed(tuple(word)))


def inverse_signed(word: SignedWord) -> SignedWord:
    """The formal inverse of a signed word (reverse, flip signs)."""
    return tuple((a, -s) for a, s in reversed(word))


def positive_word(b: Braid) -> PlainWord:
    """One positive word representing b; requires b positive."""
    if not b.is_positive:
        raise ValueError(f"braid {b} is not positive")
    return b.u + DELTA_WORDS[0] * (-b.p)


def positive_words_equal_to(b: Braid) -> frozenset[PlainWord]:
    """All positive words equal to b in the group.

    Closure of one representative under single relation applications (an
    adjacent delta pair replaced by another delta pair).  All members have
    length equal to the band length of b.
    """
    start = positive_word(b)
    seen: set[PlainWord] = {start}
    queue: deque[PlainWord] = deque((start,))
    while queue:
        w = queue.popleft()
        for i in range(len(w) - 1):
            if not is_delta_pair(w[i], w[i + 1]):
                continue
            for pair in DELTA_WORDS:
                if pair == w[i:i + 2]:
                    continue
                nxt = w[:i] + pair + w[i + 2:]
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    return frozenset(seen)


# ---------------------------------------------------------------------------
# token grammar

def _strip_comments(text: str) -> str:
    return "\n".join(line.split("#", 1)[0] for line in text.splitlines())


def _tokens(text: str) -> Iterator[str]:
    return iter(_strip_comments(text).split())


def parse_plain_word(text: str) -> PlainWord:
    """Parse whitespace-separated plain tokens ``s0 s1 s2``."""
    word = []
    for tok in _tokens(text):
        if len(tok) == 2 and tok[0] == "s" and tok[1] in "012":
            word.append(int(tok[1]))
        else:
            raise TokenError(f"bad plain token {tok!r}")
    return tuple(word)


def parse_signed_word(text: str) -> SignedWord:
    """Parse signed tokens: ``s1`` is a band, ``s1-`` its inverse."""
    word = []
    for tok in _tokens(text):
        sign = 1
        if tok.endswith("-"):
            sign = -1
            tok = tok[:-1]
        if len(tok) == 2 and tok[0] == "s" and tok[1] in "012":
            word.append((int(tok[1]), sign))
        else:
            raise TokenError(f"bad signed token {tok!r}")
    return tuple(word)


def format_plain_word(word: PlainWord) -> str:
    return " ".join(f"s{x}" for x in word)


def format_signed_word(word: SignedWord) -> str:
    return " ".join(f"s{a}" if s > 0 else f"s{a}-" for a, s in word)
