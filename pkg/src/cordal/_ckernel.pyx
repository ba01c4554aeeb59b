# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled polynomial kernel; same contract as _pykernel."""

IMPL = "cython"


def add(dict a, dict b, long sign=1):
    cdef dict out = dict(a)
    cdef object k, c, v
    for k, c in b.items():
        v = out.get(k, 0) + sign * c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def iadd(dict acc, dict b, object coef=1):
    cdef object k, c, v
    for k, c in b.items():
        v = acc.get(k, 0) + coef * c
        if v:
            acc[k] = v
        else:
            del acc[k]


def scale(dict a, long el, long em, long eg, object c):
    cdef dict out = {}
    cdef tuple k
    cdef object v
    if c == 0:
        return out
    for k, v in a.items():
        out[(k[0], <long>k[1] + el, <long>k[2] + em, <long>k[3] + eg)] = v * c
    return out


def scale_by(dict a, s):
    cdef dict out = {}
    cdef tuple e, k, nk
    cdef object c, v, nv
    cdef long el, em, eg
    for e, c in s:
        el = e[0]
        em = e[1]
        eg = e[2]
        for k, v in a.items():
            nk = (k[0], <long>k[1] + el, <long>k[2] + em, <long>k[3] + eg)
            nv = out.get(nk, 0) + v * c
            if nv:
                out[nk] = nv
            else:
                del out[nk]
    return out


def mul(dict a, dict b):
    cdef dict out = {}
    cdef tuple k1, k2, k, w1
    cdef object c1, c2, v
    cdef long l1, m1, g1
    for k1, c1 in a.items():
        w1 = k1[0]
        l1 = k1[1]
        m1 = k1[2]
        g1 = k1[3]
        for k2, c2 in b.items():
            k = (w1 + <tuple>k2[0], l1 + <long>k2[1], m1 + <long>k2[2], g1 + <long>k2[3])
            v = out.get(k, 0) + c1 * c2
            if v:
                out[k] = v
            else:
                del out[k]
    return out


def normalize(dict a):
    cdef dict out = {}
    cdef tuple key, w, t, kw, k
    cdef list kept
    cdef long l, m, g, loops, r
    cdef object c, v, b
    for key, c in a.items():
        w = key[0]
        l = key[1]
        m = key[2]
        g = key[3]
        kept = []
        loops = 0
        for t in w:
            if t[0] == t[1] and t[2] == 0:
                loops += 1
            else:
                kept.append(t)
        if loops == 0:
            v = out.get(key, 0) + c
            if v:
                out[key] = v
            else:
                del out[key]
            continue
        kw = tuple(kept)
        b = 1
        for r in range(loops + 1):
            k = (kw, l, m + r, g + loops)
            v = out.get(k, 0) + c * b
            if v:
                out[k] = v
            else:
                del out[k]
            b = b * (loops - r) // (r + 1)
    return out


def substitute(dict a, image):
    cdef dict out = {}
    cdef dict cur
    cdef tuple key, w, t, k
    cdef object c, v, nv
    for key, c in a.items():
        w = key[0]
        cur = {((), key[1], key[2], key[3]): c}
        for t in w:
            cur = mul(cur, image(t))
            if not cur:
                break
        for k, v in cur.items():
            nv = out.get(k, 0) + v
            if nv:
                out[k] = nv
            else:
                del out[k]
    return out
