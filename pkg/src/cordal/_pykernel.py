"""Pure-Python polynomial kernel.

A polynomial is a flat dict mapping (word, el, em, eg) to a nonzero int,
where word is a tuple of (i, j, x) generator triples. Normalized words
contain no (i, i, 0) triple. _ckernel.pyx mirrors this file function
for function.
"""

IMPL = "python"


def add(a, b, sign=1):
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, 0) + sign * c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def iadd(acc, b, coef=1):
    for k, c in b.items():
        v = acc.get(k, 0) + coef * c
        if v:
            acc[k] = v
        else:
            del acc[k]


def scale(a, el, em, eg, c):
    if c == 0:
        return {}
    return {(w, l + el, m + em, g + eg): v * c for (w, l, m, g), v in a.items()}


def scale_by(a, s):
    # s: iterable of ((el, em, eg), c)
    out = {}
    for (el, em, eg), c in s:
        for (w, l, m, g), v in a.items():
            k = (w, l + el, m + em, g + eg)
            nv = out.get(k, 0) + v * c
            if nv:
                out[k] = nv
            else:
                del out[k]
    return out


def mul(a, b):
    out = {}
    for (w1, l1, m1, g1), c1 in a.items():
        for (w2, l2, m2, g2), c2 in b.items():
            k = (w1 + w2, l1 + l2, m1 + m2, g1 + g2)
            v = out.get(k, 0) + c1 * c2
            if v:
                out[k] = v
            else:
                del out[k]
    return out


def normalize(a):
    """Replace each a_ii^0 factor by g + m*g and merge like terms."""
    out = {}
    for (w, l, m, g), c in a.items():
        kept = []
        loops = 0
        for t in w:
            if t[0] == t[1] and t[2] == 0:
                loops += 1
            else:
                kept.append(t)
        if not loops:
            v = out.get((w, l, m, g), 0) + c
            if v:
                out[(w, l, m, g)] = v
            else:
                del out[(w, l, m, g)]
            continue
        kw = tuple(kept)
        # (1 + m)^loops * g^loops, binomial expansion
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


def substitute(a, image):
    """Apply the algebra map sending each generator t to image(t).

    Images must be normalized; concatenating normalized words never
    creates an (i, i, 0) factor, so the result is normalized too.
    """
    out = {}
    for (w, l, m, g), c in a.items():
        cur = {((), l, m, g): c}
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
