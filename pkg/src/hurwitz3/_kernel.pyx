# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled rewriting kernel; behaviourally identical to _kernel_py.

Words are tuples of ints 0..2 and a braid is a pair (u, p) meaning
u * delta**(-p).  See _kernel_py for the reference implementation and the
conventions; tests/test_kernel_parity.py pins the two together.
"""

from libc.stdlib cimport free, malloc


cdef inline long _mod3(long v) nogil:
    v = v % 3
    if v < 0:
        v += 3
    return v


cdef tuple _from_buf(long* buf, Py_ssize_t n):
    cdef Py_ssize_t i
    out = []
    for i in range(n):
        out.append(buf[i])
    return tuple(out)


cdef Py_ssize_t _push_norm(long* stack, Py_ssize_t top, long* q, long x) nogil:
    x = _mod3(x - q[0])
    if top > 0 and x == (stack[top - 1] + 2) % 3:
        q[0] += 1
        return top - 1
    stack[top] = x
    return top + 1


def normalize(word):
    """(v, q) with v delta-free and word == v * delta**q."""
    cdef Py_ssize_t n = len(word)
    if n == 0:
        return (), 0
    cdef long* stack = <long*> malloc(n * sizeof(long))
    if stack == NULL:
        raise MemoryError()
    cdef Py_ssize_t top = 0, i
    cdef long q = 0
    try:
        for i in range(n):
            top = _push_norm(stack, top, &q, <long> word[i])
        return _from_buf(stack, top), q
    finally:
        free(stack)


def multiply(u1, p1, u2, p2):
    """Product of braids (u1, p1) * (u2, p2) in normal form."""
    cdef Py_ssize_t n1 = len(u1), n2 = len(u2)
    cdef Py_ssize_t n = n1 + n2
    cdef long cp1 = p1, cp2 = p2
    if n == 0:
        return (), cp1 + cp2
    cdef long* stack = <long*> malloc(n * sizeof(long))
    if stack == NULL:
        raise MemoryError()
    cdef Py_ssize_t top = 0, i
    cdef long q = 0
    try:
        for i in range(n1):
            top = _push_norm(stack, top, &q, <long> u1[i])
        for i in range(n2):
            top = _push_norm(stack, top, &q, <long> u2[i] + cp1)
        return _from_buf(stack, top), cp1 + cp2 - q
    finally:
        free(stack)


def invert(u, p):
    """Inverse of the braid (u, p) in normal form."""
    cdef Py_ssize_t n = len(u)
    cdef long cp = p
    if n == 0:
        return (), -cp
    cdef long* stack = <long*> malloc(n * sizeof(long))
    if stack == NULL:
        raise MemoryError()
    cdef Py_ssize_t top = 0, t
    cdef long q = 0
    try:
        for t in range(n):
            top = _push_norm(stack, top, &q,
                             <long> u[n - 1 - t] + t - 1 - cp)
        return _from_buf(stack, top), n - cp - q
    finally:
        free(stack)


def evaluate_signed(letters):
    """Normal form of a product of signed letters ((atom, sign), ...)."""
    cdef Py_ssize_t n = len(letters)
    if n == 0:
        return (), 0
    cdef long* word = <long*> malloc(n * sizeof(long))
    if word == NULL:
        raise MemoryError()
    cdef Py_ssize_t top = 0
    cdef long p = 0, e
    cdef long a, s
    try:
        for item in letters:
            a = <long> item[0]
            s = <long> item[1]
            if s > 0:
                e = _mod3(a + p)
            else:
                e = _mod3(a + p - 1)
                p += 1
            if top > 0 and e == (word[top - 1] + 2) % 3:
                top -= 1
                p -= 1
            else:
                word[top] = e
                top += 1
        return _from_buf(word, top), p
    finally:
        free(word)


def tau_word(u, k):
    """Letterwise index shift by k (mod 3)."""
    cdef long ck = k
    return tuple(_mod3(<long> x + ck) for x in u)


cdef tuple _mul2(tuple a, tuple b):
    return multiply(a[0], a[1], b[0], b[1])


def hurwitz_step(values, i, forward):
    """One Hurwitz move on a tuple of (u, p) pairs, at 0-based slot i."""
    cdef Py_ssize_t ci = i
    a = values[ci]
    b = values[ci + 1]
    if forward:
        ab = _mul2(a, b)
        ai = invert(a[0], a[1])
        new = (_mul2(ab, ai), a)
    else:
        bi = invert(b[0], b[1])
        ba = _mul2(bi, a)
        new = (b, _mul2(ba, b))
    return values[:ci] + new + values[ci + 2:]
