# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels; must mirror flagrep._kernels_py exactly.

Coefficients stay Python ints so the arithmetic remains exact for
arbitrarily large values; the win comes from compiled loop and tuple
machinery, not from narrowing any integer type.
"""

from flagrep.errors import ResourceCapError


def dominant_representative(cartan, w):
    """Reflect ``w`` into the dominant chamber using simple reflections."""
    cdef Py_ssize_t m = len(w)
    cdef Py_ssize_t i = 0
    cdef Py_ssize_t j
    v = list(w)
    while i < m:
        c = v[i]
        if c < 0:
            row = cartan[i]
            for j in range(m):
                v[j] = v[j] - c * row[j]
            i = 0
        else:
            i += 1
    return tuple(v)


def weyl_orbit(cartan, w, cap):
    """Orbit of ``w`` under the reflections s_i(v) = v - v[i] * root_i."""
    cdef Py_ssize_t m = len(w)
    cdef Py_ssize_t i, j
    start = tuple(w)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(m):
                c = v[i]
                if c == 0:
                    continue
                row = cartan[i]
                scratch = list(v)
                for j in range(m):
                    scratch[j] = scratch[j] - c * row[j]
                u = tuple(scratch)
                if u not in seen:
                    if len(seen) >= cap:
                        raise ResourceCapError(
                            "orbit-cap", f"orbit size exceeds cap {cap}"
                        )
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return seen


cdef _ip(gram, u, v):
    cdef Py_ssize_t m = len(u)
    cdef Py_ssize_t i, j
    total = 0
    for i in range(m):
        ui = u[i]
        if ui:
            row = gram[i]
            s = 0
            for j in range(m):
                vj = v[j]
                if vj:
                    s = s + row[j] * vj
            total = total + ui * s
    return total


def freudenthal(cartan, gram, pos_roots, lam, support):
    """Multiplicities of the dominant weights of the highest-weight module."""
    cdef Py_ssize_t m = len(lam)
    cdef Py_ssize_t j
    cdef Py_ssize_t k
    top = tuple(x + 1 for x in lam)
    norm_top = _ip(gram, top, top)
    root_norms = [_ip(gram, a, a) for a in pos_roots]
    mults = {tuple(lam): 1}
    for mu in support[1:]:
        acc = 0
        for a, na in zip(pos_roots, root_norms):
            base = _ip(gram, mu, a)
            nu = list(mu)
            k = 1
            while True:
                for j in range(m):
                    nu[j] = nu[j] + a[j]
                mult = mults.get(dominant_representative(cartan, nu))
                if mult is None:
                    break
                acc = acc + mult * (base + k * na)
                k += 1
        shifted = tuple(x + 1 for x in mu)
        denom = norm_top - _ip(gram, shifted, shifted)
        mult, rem = divmod(2 * acc, denom)
        if rem:
            raise ArithmeticError("non-integral multiplicity; invalid Cartan data")
        mults[tuple(mu)] = mult
    return mults


def orbit_terms(cartan, dominant_mults, max_terms):
    """Expand dominant multiplicities to the full Weyl-symmetric term dict."""
    terms = {}
    for mu, mult in dominant_mults.items():
        remaining = max_terms - len(terms)
        if remaining <= 0:
            raise ResourceCapError("term-cap", f"support exceeds cap {max_terms}")
        try:
            orbit = weyl_orbit(cartan, mu, remaining)
        except ResourceCapError:
            raise ResourceCapError(
                "term-cap", f"support exceeds cap {max_terms}"
            ) from None
        for w in orbit:
            terms[w] = mult
    return terms


def poly_mul(a, b):
    """Convolution of two sparse integer-coefficient term dicts."""
    cdef Py_ssize_t m
    cdef Py_ssize_t j
    if len(a) < len(b):
        a, b = b, a
    out = {}
    for wb, cb in b.items():
        m = len(wb)
        for wa, ca in a.items():
            scratch = list(wa)
            for j in range(m):
                scratch[j] = scratch[j] + wb[j]
            w = tuple(scratch)
            c = out.get(w, 0) + ca * cb
            if c:
                out[w] = c
            elif w in out:
                del out[w]
    return out
