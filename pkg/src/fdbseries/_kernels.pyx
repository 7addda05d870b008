# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels mirroring ``_kernels_py``."""

from cpython.mem cimport PyMem_Malloc, PyMem_Free
from cpython.ref cimport Py_INCREF
from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM


def convolve(list a, list b, Py_ssize_t length):
    cdef list out = [0] * length
    cdef Py_ssize_t la = min(len(a), length)
    cdef Py_ssize_t lb = min(len(b), length)
    cdef Py_ssize_t i, j, jmax
    cdef object ai, acc
    for i in range(la):
        ai = a[i]
        if not ai:
            continue
        jmax = min(lb, length - i)
        for j in range(jmax):
            acc = out[i + j]
            out[i + j] = acc + ai * b[j]
    return out


cdef class compositions:
    """Iterator over compositions of n in lexicographic order."""

    cdef Py_ssize_t *parts
    cdef Py_ssize_t k
    cdef bint done

    def __cinit__(self, Py_ssize_t n):
        cdef Py_ssize_t i
        self.parts = <Py_ssize_t *> PyMem_Malloc(max(n, 1) * sizeof(Py_ssize_t))
        if self.parts == NULL:
            raise MemoryError()
        for i in range(n):
            self.parts[i] = 1
        self.k = n
        self.done = n < 1

    def __dealloc__(self):
        PyMem_Free(self.parts)

    def __iter__(self):
        return self

    def __next__(self):
        cdef Py_ssize_t i, last
        cdef object item
        if self.done:
            raise StopIteration
        cdef tuple out = PyTuple_New(self.k)
        for i in range(self.k):
            item = self.parts[i]
            Py_INCREF(item)
            PyTuple_SET_ITEM(out, i, item)
        if self.k == 1:
            self.done = True
        else:
            last = self.parts[self.k - 1]
            self.k -= 1
            self.parts[self.k - 1] += 1
            for i in range(last - 1):
                self.parts[self.k] = 1
                self.k += 1
        return out


cdef void _walk(Py_ssize_t remaining, Py_ssize_t k, object product,
                list weights, list sums):
    cdef Py_ssize_t part
    cdef object p
    for part in range(1, remaining + 1):
        p = product * weights[part]
        if part == remaining:
            sums[k + 1] = sums[k + 1] + p
        else:
            _walk(remaining - part, k + 1, p, weights, sums)


def composition_part_sums(Py_ssize_t n, list weights):
    cdef list sums = [0] * (n + 1)
    _walk(n, 0, 1, weights, sums)
    return sums
