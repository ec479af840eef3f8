# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled permutation-group closure used for Weyl group enumeration."""

from cpython.bytes cimport PyBytes_FromStringAndSize
from libc.stdlib cimport malloc, free


def perm_closure(gens, Py_ssize_t cap):
    """Same contract as the pure-Python ``perm_closure``; elements use 16-bit
    packed keys internally and are returned as tuples."""
    cdef Py_ssize_t ng = len(gens)
    cdef Py_ssize_t n = len(gens[0]) if ng else 0
    cdef Py_ssize_t i, gi, head = 0
    cdef unsigned short *g
    cdef unsigned short *buf
    cdef unsigned short *cur
    if n >= 65535:
        raise ValueError("permutation too long for the compiled kernel")
    g = <unsigned short *> malloc(ng * n * sizeof(unsigned short) + 1)
    buf = <unsigned short *> malloc(n * sizeof(unsigned short) + 1)
    cur = <unsigned short *> malloc(n * sizeof(unsigned short) + 1)
    if g == NULL or buf == NULL or cur == NULL:
        free(g); free(buf); free(cur)
        raise MemoryError()
    keys = []
    parent = [-1]
    via = [-1]
    seen = {}
    try:
        for gi in range(ng):
            row = gens[gi]
            for i in range(n):
                g[gi * n + i] = row[i]
        for i in range(n):
            buf[i] = i
        key = PyBytes_FromStringAndSize(<char *> buf, n * sizeof(unsigned short))
        keys.append(key)
        seen[key] = 0
        while head < len(keys):
            src = keys[head]
            for i in range(n):
                cur[i] = (<unsigned short *> (<char *> src))[i]
            for gi in range(ng):
                for i in range(n):
                    buf[i] = cur[g[gi * n + i]]
                key = PyBytes_FromStringAndSize(<char *> buf, n * sizeof(unsigned short))
                if key not in seen:
                    seen[key] = len(keys)
                    keys.append(key)
                    parent.append(head)
                    via.append(gi)
                    if len(keys) > cap:
                        raise OverflowError(f"group order exceeds cap {cap}")
            head += 1
        elements = []
        for key in keys:
            for i in range(n):
                cur[i] = (<unsigned short *> (<char *> key))[i]
            elements.append(tuple([cur[i] for i in range(n)]))
    finally:
        free(g); free(buf); free(cur)
    return elements, parent, via
