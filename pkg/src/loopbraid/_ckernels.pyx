# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled word kernels; same contract as ``_pykernels``."""

from cpython.long cimport PyLong_FromLong
from cpython.ref cimport Py_INCREF
from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM
from libc.stdlib cimport free, malloc, realloc


cdef struct Buf:
    long *data
    Py_ssize_t size
    Py_ssize_t cap


cdef int buf_init(Buf *b, Py_ssize_t cap) except -1:
    if cap < 16:
        cap = 16
    b.data = <long *> malloc(cap * sizeof(long))
    if b.data == NULL:
        raise MemoryError()
    b.size = 0
    b.cap = cap
    return 0


cdef inline int buf_push(Buf *b, long a) except -1:
    cdef long *tmp
    if b.size > 0 and b.data[b.size - 1] == -a:
        b.size -= 1
        return 0
    if b.size == b.cap:
        tmp = <long *> realloc(b.data, 2 * b.cap * sizeof(long))
        if tmp == NULL:
            raise MemoryError()
        b.data = tmp
        b.cap *= 2
    b.data[b.size] = a
    b.size += 1
    return 0


cdef tuple buf_to_tuple(Buf *b):
    cdef Py_ssize_t k
    cdef object item
    cdef tuple out = PyTuple_New(b.size)
    for k in range(b.size):
        item = PyLong_FromLong(b.data[k])
        Py_INCREF(item)
        PyTuple_SET_ITEM(out, k, item)
    return out


cdef int push_word(Buf *b, tuple w, bint inverse) except -1:
    cdef Py_ssize_t k, m = len(w)
    if inverse:
        for k in range(m - 1, -1, -1):
            buf_push(b, -<long> w[k])
    else:
        for k in range(m):
            buf_push(b, <long> w[k])
    return 0


def reduce_letters(letters):
    cdef Buf b
    cdef tuple w = tuple(letters)
    buf_init(&b, len(w))
    try:
        push_word(&b, w, False)
        return buf_to_tuple(&b)
    finally:
        free(b.data)


def invert_letters(letters):
    return tuple([-a for a in reversed(letters)])


def substitute(images, letters):
    cdef Buf b
    cdef long a
    cdef tuple imgs = tuple(images)
    buf_init(&b, 4 * len(letters))
    try:
        for a in letters:
            if a > 0:
                push_word(&b, <tuple> imgs[a - 1], False)
            else:
                push_word(&b, <tuple> imgs[-a - 1], True)
        return buf_to_tuple(&b)
    finally:
        free(b.data)


def conjugate_letters(u, w):
    cdef Buf b
    cdef tuple tu = tuple(u), tw = tuple(w)
    buf_init(&b, len(tu) + 2 * len(tw))
    try:
        push_word(&b, tw, True)
        push_word(&b, tu, False)
        push_word(&b, tw, False)
        return buf_to_tuple(&b)
    finally:
        free(b.data)


cdef tuple join3(tuple x, bint ix, tuple y, bint iy, tuple z, bint iz):
    cdef Buf b
    buf_init(&b, len(x) + len(y) + len(z))
    try:
        push_word(&b, x, ix)
        push_word(&b, y, iy)
        push_word(&b, z, iz)
        return buf_to_tuple(&b)
    finally:
        free(b.data)


def evaluate_codes(int n, codes):
    cdef list imgs = [(i,) for i in range(1, n + 1)]
    cdef long code
    cdef Py_ssize_t i
    cdef int kind
    cdef tuple a, c
    for code in codes:
        i = code // 4
        kind = code % 4
        if kind == 0:
            a = imgs[i]
            c = imgs[i + 1]
            imgs[i] = c
            imgs[i + 1] = join3(c, True, a, False, c, False)
        elif kind == 1:
            a = imgs[i]
            c = imgs[i + 1]
            imgs[i] = join3(a, False, c, False, a, True)
            imgs[i + 1] = a
        elif kind == 2:
            imgs[i], imgs[i + 1] = imgs[i + 1], imgs[i]
        else:
            a = imgs[i]
            imgs[i] = join3(a, True, (), False, (), False)
    return tuple(imgs)
