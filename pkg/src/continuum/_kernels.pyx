# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Mirrors ``_kernels_py`` exactly."""

cdef inline Py_ssize_t _gcd(Py_ssize_t a, Py_ssize_t b):
    while b:
        a, b = b, a % b
    return a


def lex_compare_bits(bytes px, bytes qx, bytes py, bytes qy):
    cdef const unsigned char* ppx = px
    cdef const unsigned char* pqx = qx
    cdef const unsigned char* ppy = py
    cdef const unsigned char* pqy = qy
    cdef Py_ssize_t lpx = len(px), lqx = len(qx), lpy = len(py), lqy = len(qy)
    cdef Py_ssize_t bound, k, ix, iy
    cdef unsigned char a, b
    if lqx == 0 or lqy == 0:
        raise ValueError("periods must be nonempty")
    bound = (lpx if lpx > lpy else lpy) + lqx // _gcd(lqx, lqy) * lqy
    ix = 0
    iy = 0
    for k in range(bound):
        if k < lpx:
            a = ppx[k]
        else:
            a = pqx[ix]
            ix += 1
            if ix == lqx:
                ix = 0
        if k < lpy:
            b = ppy[k]
        else:
            b = pqy[iy]
            iy += 1
            if iy == lqy:
                iy = 0
        if a != b:
            return -1 if a < b else 1
    return 0


cdef inline long long _mod(long long a, long long m):
    cdef long long r = a % m
    return r + m if r < 0 else r


def stadium_passings(long long n_bodies, long long ticks):
    if n_bodies < 1 or ticks < 1:
        raise ValueError("n_bodies and ticks must be >= 1")
    cdef long long track = 2 * n_bodies
    cdef long long b_off = 0, c_off = 0, bc = 0, ba = 0
    cdef long long front, j, t
    cdef int step, mover
    for t in range(ticks):
        for step in range(4):
            mover = 1 if step % 2 == 0 else -1
            if mover == 1:
                b_off += 1
            else:
                c_off -= 1
            front = _mod(2 * (n_bodies - 1) + 2 + b_off, track)
            for j in range(n_bodies):
                if _mod(2 * j + c_off, track) == front:
                    bc += 1
                    break
            if mover == 1:
                for j in range(n_bodies):
                    if _mod(2 * j, track) == front:
                        ba += 1
                        break
    return bc, ba


def leaf_audit(long long depth):
    if depth < 0:
        raise ValueError("depth must be >= 0")
    if depth > 62:
        raise OverflowError("depth > 62 does not fit the compiled sweep")
    cdef long long n = 1LL << depth
    cdef long long label, lower, upper, prev_upper = -1
    cdef long long width_units = 0, shared = 0, breaks = 0
    for label in range(n):
        lower = label
        upper = label + 1
        width_units += upper - lower
        if label > 0:
            if prev_upper == lower:
                shared += 1
            else:
                breaks += 1
        prev_upper = upper
    return width_units, shared, breaks
