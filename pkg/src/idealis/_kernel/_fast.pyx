# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernel.

Mirrors ``_slow`` function for function; see that module for the pack
layout and the contracts.  ``tests/test_kernel_parity`` checks the two
implementations against each other on randomised inputs.
"""

from itertools import product

from libc.stdlib cimport free, malloc

IMPL = "fast"

DEF MAXD = 16


class BudgetExceeded(Exception):
    """Raised when a closure would enumerate more choice functions than allowed."""


cdef class PackView:
    cdef int d
    cdef long kinds[MAXD]
    cdef long conds[MAXD]
    cdef long frobs[MAXD]
    cdef const unsigned char *tab[MAXD]
    cdef object _keep
    cdef tuple atoms

    def __cinit__(self, pack):
        cdef int i
        self.d = len(pack[0])
        if self.d > MAXD:
            raise ValueError("too many coordinates for the compiled kernel")
        self._keep = pack[4]
        self.atoms = pack[5]
        for i in range(self.d):
            self.kinds[i] = pack[0][i]
            self.conds[i] = pack[1][i]
            self.frobs[i] = pack[2][i]
            self.tab[i] = <const unsigned char *> (<char *> (<bytes> pack[4][i]))


cdef inline bint member1c(PackView p, int i, long x):
    if p.kinds[i]:
        return True
    if x < 0:
        return False
    if x >= p.conds[i]:
        return True
    return p.tab[i][x] == 1


cdef void _getvec(PackView p, v, long *out) except *:
    cdef int i
    for i in range(p.d):
        out[i] = v[i]


cdef long *_flat(PackView p, vecs, Py_ssize_t n) except NULL:
    cdef long *buf = <long *> malloc(max(n, 1) * p.d * sizeof(long))
    cdef Py_ssize_t k
    cdef int i
    if buf is NULL:
        raise MemoryError()
    for k in range(n):
        v = vecs[k]
        for i in range(p.d):
            buf[k * p.d + i] = v[i]
    return buf


cdef inline bint _div_ptr(PackView p, const long *a, const long *b):
    cdef int i
    for i in range(p.d):
        if not member1c(p, i, b[i] - a[i]):
            return False
    return True


def member1(pack, i, x):
    cdef PackView p = PackView(pack)
    return member1c(p, i, x)


def contains(pack, v):
    cdef PackView p = PackView(pack)
    cdef long x[MAXD]
    cdef int i
    _getvec(p, v, x)
    for i in range(p.d):
        if not member1c(p, i, x[i]):
            return False
    return True


def divides(pack, a, b):
    cdef PackView p = PackView(pack)
    cdef long xa[MAXD]
    cdef long xb[MAXD]
    _getvec(p, a, xa)
    _getvec(p, b, xb)
    return _div_ptr(p, xa, xb)


def divisible_any(pack, v, gens):
    cdef PackView p = PackView(pack)
    cdef long x[MAXD]
    cdef Py_ssize_t n = len(gens), k
    cdef long *g
    _getvec(p, v, x)
    g = _flat(p, gens, n)
    try:
        for k in range(n):
            if _div_ptr(p, g + k * p.d, x):
                return True
        return False
    finally:
        free(g)


cdef tuple _reduce(PackView p, cand):
    ordered = sorted(set(cand))
    cdef Py_ssize_t n = len(ordered), k, j, nk = 0
    if n == 0:
        return ()
    cdef long *flat = _flat(p, ordered, n)
    cdef Py_ssize_t *keep = <Py_ssize_t *> malloc(n * sizeof(Py_ssize_t))
    cdef bint dom
    if keep is NULL:
        free(flat)
        raise MemoryError()
    try:
        for k in range(n):
            dom = False
            for j in range(nk):
                if _div_ptr(p, flat + keep[j] * p.d, flat + k * p.d):
                    dom = True
                    break
            if not dom:
                keep[nk] = k
                nk += 1
        return tuple([ordered[keep[j]] for j in range(nk)])
    finally:
        free(keep)
        free(flat)


def reduce_gens(pack, gens):
    cdef PackView p = PackView(pack)
    return _reduce(p, gens)


cdef tuple _module_1d(PackView p, int i, shifts):
    cdef Py_ssize_t ns = len(shifts), k, j, nout
    cdef long z, c, f, lo
    cdef bint ok, red
    if p.kinds[i]:
        return (0,)
    cdef long *sh = <long *> malloc(max(ns, 1) * sizeof(long))
    if sh is NULL:
        raise MemoryError()
    lo = shifts[0]
    for k in range(ns):
        sh[k] = shifts[k]
        if sh[k] < lo:
            lo = sh[k]
    f = p.frobs[i]
    cdef long *out = <long *> malloc((f + 2) * sizeof(long))
    if out is NULL:
        free(sh)
        raise MemoryError()
    try:
        z = -lo
        while True:
            ok = True
            for k in range(ns):
                if not member1c(p, i, z + sh[k]):
                    ok = False
                    break
            if ok:
                break
            z += 1
        out[0] = z
        nout = 1
        for c in range(z + 1, z + f + 1):
            ok = True
            for k in range(ns):
                if not member1c(p, i, c + sh[k]):
                    ok = False
                    break
            if not ok:
                continue
            red = False
            for j in range(nout):
                if member1c(p, i, c - out[j]):
                    red = True
                    break
            if not red:
                out[nout] = c
                nout += 1
        return tuple([out[j] for j in range(nout)])
    finally:
        free(out)
        free(sh)


def module_gens_1d(pack, i, shifts):
    cdef PackView p = PackView(pack)
    return _module_1d(p, i, shifts)


cdef tuple _inverse(PackView p, gens):
    if not gens:
        raise ValueError("inverse of the empty module")
    cols = [_module_1d(p, i, tuple([a[i] for a in gens])) for i in range(p.d)]
    return _reduce(p, product(*cols))


def inverse_gens(pack, gens):
    cdef PackView p = PackView(pack)
    return _inverse(p, gens)


def v_close_gens(pack, gens):
    cdef PackView p = PackView(pack)
    if not gens:
        return ()
    return _inverse(p, _inverse(p, gens))


def sum_gens(pack, a_gens, b_gens):
    cdef PackView p = PackView(pack)
    return _reduce(p, tuple(
        [tuple([x + y for x, y in zip(a, b)]) for a in a_gens for b in b_gens]))


def intersect_gens(pack, a_gens, b_gens):
    cdef PackView p = PackView(pack)
    cdef int i
    if not a_gens or not b_gens:
        return ()
    acc = []
    for a in a_gens:
        for b in b_gens:
            cols = [_module_1d(p, i, (-a[i], -b[i])) for i in range(p.d)]
            acc.extend(product(*cols))
    return _reduce(p, acc)


def radical_gens(pack, gens):
    cdef PackView p = PackView(pack)
    cdef int i
    if not gens:
        return ()
    supps = set()
    for a in gens:
        supps.add(frozenset([i for i in range(p.d) if p.kinds[i] == 0 and a[i] > 0]))
    mins = [s for s in supps if not any(t < s for t in supps)]
    acc = []
    for s in mins:
        cols = [p.atoms[i] if i in s else (0,) for i in range(p.d)]
        acc.extend(product(*cols))
    return _reduce(p, acc)


def box_members(pack, lo, hi):
    cdef PackView p = PackView(pack)
    cdef int i
    cdef long x
    cols = []
    for i in range(p.d):
        if p.kinds[i]:
            cols.append(tuple(range(lo[i], hi[i] + 1)))
        else:
            cols.append(tuple(
                [x for x in range(max(lo[i], 0), hi[i] + 1) if member1c(p, i, x)]))
    return [v for v in product(*cols)]


def modular_close_gens(pack, gens, faces, budget=0):
    cdef PackView p = PackView(pack)
    cdef int i
    cdef Py_ssize_t n, k, j
    if not gens:
        return ()
    if not faces:
        return (tuple([0] * p.d),)
    n = len(gens)
    k = len(faces)
    if budget > 0 and n ** k > budget:
        raise BudgetExceeded(f"{n}^{k} choice functions")
    memo = {}
    acc = []
    for phi in product(range(n), repeat=k):
        cols = []
        for i in range(p.d):
            if p.kinds[i]:
                cols.append((0,))
                continue
            shifts = tuple([-gens[phi[j]][i] for j in range(k) if i not in faces[j]])
            if not shifts:
                raise ValueError(f"coordinate {i} inverted in every face")
            key = (i, shifts)
            got = memo.get(key)
            if got is None:
                got = _module_1d(p, i, shifts)
                memo[key] = got
            cols.append(got)
        acc.extend(product(*cols))
    return _reduce(p, acc)


def primary_violation(pack, members, gens_i, gens_rad):
    cdef PackView p = PackView(pack)
    cdef Py_ssize_t n = len(members), ni = len(gens_i), nr = len(gens_rad)
    cdef Py_ssize_t a, b, k
    cdef int i
    cdef long s[MAXD]
    cdef bint hit
    if n == 0:
        return None
    cdef long *mem = _flat(p, members, n)
    cdef long *gi = _flat(p, gens_i, ni)
    cdef long *gr = _flat(p, gens_rad, nr)
    cdef unsigned char *in_i = <unsigned char *> malloc(n)
    cdef unsigned char *in_r = <unsigned char *> malloc(n)
    if in_i is NULL or in_r is NULL:
        free(mem); free(gi); free(gr)
        if in_i is not NULL:
            free(in_i)
        if in_r is not NULL:
            free(in_r)
        raise MemoryError()
    try:
        for a in range(n):
            hit = False
            for k in range(ni):
                if _div_ptr(p, gi + k * p.d, mem + a * p.d):
                    hit = True
                    break
            in_i[a] = hit
            hit = False
            for k in range(nr):
                if _div_ptr(p, gr + k * p.d, mem + a * p.d):
                    hit = True
                    break
            in_r[a] = hit
        for a in range(n):
            if in_i[a]:
                continue
            for b in range(n):
                if in_r[b]:
                    continue
                for i in range(p.d):
                    s[i] = mem[a * p.d + i] + mem[b * p.d + i]
                for k in range(ni):
                    if _div_ptr(p, gi + k * p.d, s):
                        return (tuple([mem[a * p.d + i] for i in range(p.d)]),
                                tuple([mem[b * p.d + i] for i in range(p.d)]))
        return None
    finally:
        free(in_r)
        free(in_i)
        free(gr)
        free(gi)
        free(mem)
