"""Pure-Python rewriting kernel for 3-strand band-generator arithmetic.

This module holds the hot inner loops: positive-word normalization, the
group operations on normal-form pairs, and one Hurwitz move on a tuple of
normal forms.  `hurwitz3._kernel` is the compiled twin of this file; the
two must stay behaviourally identical (tests/test_kernel_parity.py checks
this on random inputs).

Conventions (shared with `hurwitz3.braid`):
  * a positive word is a tuple of ints 0, 1, 2;
  * a braid is a pair (u, p) with u a delta-free positive word, standing
    for u * delta**(-p);
  * delta pairs are (2,1), (1,0), (0,2): y completes x iff y == (x-1) % 3;
  * tau shifts a generator index up by one, delta**q * x == tau**(-q)(x) * delta**q.
"""


def normalize(word):
    """Return (v, q) with v delta-free and word == v * delta**q in the group.

    Single left-to-right pass: a completed trailing delta pair is removed and
    accounted for by shifting every later letter with tau**(-q).
    """
    stack = []
    q = 0
    for x in word:
        x = (x + 2 * q) % 3  # tau**(-q)(x); -q == 2q mod 3
        if stack and x == (stack[-1] + 2) % 3:
            stack.pop()
            q += 1
        else:
            stack.append(x)
    return tuple(stack), q


def multiply(u1, p1, u2, p2):
    """Product of braids (u1, p1) * (u2, p2) in normal form."""
    word = u1 + tuple((x + p1) % 3 for x in u2)
    v, q = normalize(word)
    return v, p1 + p2 - q


def invert(u, p):
    """Inverse of the braid (u, p) in normal form.

    Uses the complement table x**-1 == tau**(-1)(x) * delta**(-1) and pushes
    all delta factors to the right.
    """
    n = len(u)
    word = tuple((u[n - 1 - t] + t - 1 - p) % 3 for t in range(n))
    v, q = normalize(word)
    return v, n - p - q


def evaluate_signed(letters):
    """Normal form of a product of signed letters ((atom, sign), ...).

    Maintains (word, p) with the invariant "input so far == word * delta**(-p)";
    each letter appends one tau-shifted atom and cancels a trailing delta pair
    if one appears.
    """
    word = []
    p = 0
    for a, s in letters:
        if s > 0:
            e = (a + p) % 3
        else:
            e = (a + p - 1) % 3
            p += 1
        if word and e == (word[-1] + 2) % 3:
            word.pop()
            p -= 1
        else:
            word.append(e)
    return tuple(word), p


def tau_word(u, k):
    """Letterwise index shift by k (mod 3)."""
    return tuple((x + k) % 3 for x in u)


def hurwitz_step(values, i, forward):
    """One Hurwitz move on a tuple of normal-form pairs, at 0-based slot i.

    Forward replaces (a, b) by (a*b*a**-1, a); the inverse move replaces it
    by (b, b**-1*a*b).
    """
    a = values[i]
    b = values[i + 1]
    if forward:
        ab = multiply(a[0], a[1], b[0], b[1])
        ai = invert(a[0], a[1])
        new = (multiply(ab[0], ab[1], ai[0], ai[1]), a)
    else:
        bi = invert(b[0], b[1])
        ba = multiply(bi[0], bi[1], a[0], a[1])
        new = (b, multiply(ba[0], ba[1], b[0], b[1]))
    return values[:i] + new + values[i + 2:]
