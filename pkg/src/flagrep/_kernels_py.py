"""Pure-Python kernels for the lattice hot loops.

``flagrep._speedups`` is a compiled (Cython) implementation of the same
functions; ``flagrep._kernels`` selects one of the two at import time.  Both
backends must return identical objects: weights are tuples of Python ints and
all coefficient arithmetic is exact integer arithmetic, never floats.

Conventions used by every function here:

* ``cartan`` is a tuple of m rows; row i is simple root i written in
  fundamental-weight coordinates.
* ``gram`` is an integer matrix proportional to the invariant inner product
  on weight coordinates (a common positive scale is irrelevant because the
  recursion only uses ratios).
"""

from .errors import ResourceCapError


def dominant_representative(cartan, w):
    """Reflect ``w`` into the dominant chamber using simple reflections."""
    v = list(w)
    m = len(v)
    i = 0
    while i < m:
        c = v[i]
        if c < 0:
            row = cartan[i]
            for j in range(m):
                v[j] -= c * row[j]
            i = 0
        else:
            i += 1
    return tuple(v)


def weyl_orbit(cartan, w, cap):
    """Orbit of ``w`` under the reflections s_i(v) = v - v[i] * root_i."""
    m = len(w)
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
                u = tuple(v[j] - c * row[j] for j in range(m))
                if u not in seen:
                    if len(seen) >= cap:
                        raise ResourceCapError(
                            "orbit-cap", f"orbit size exceeds cap {cap}"
                        )
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return seen


def _ip(gram, u, v):
    m = len(u)
    total = 0
    for i in range(m):
        ui = u[i]
        if ui:
            row = gram[i]
            s = 0
            for j in range(m):
                vj = v[j]
                if vj:
                    s += row[j] * vj
            total += ui * s
    return total


def freudenthal(cartan, gram, pos_roots, lam, support):
    """Multiplicities of the dominant weights of the highest-weight module.

    ``support`` must list the dominant weights of the module sorted by
    increasing depth below ``lam`` (the first entry is ``lam`` itself).
    Returns a dict mapping each of them to its multiplicity.
    """
    m = len(lam)
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
                    nu[j] += a[j]
                mult = mults.get(dominant_representative(cartan, nu))
                if mult is None:
                    break
                acc += mult * (base + k * na)
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
    if len(a) < len(b):
        a, b = b, a
    out = {}
    for wb, cb in b.items():
        for wa, ca in a.items():
            w = tuple(x + y for x, y in zip(wa, wb))
            c = out.get(w, 0) + ca * cb
            if c:
                out[w] = c
            elif w in out:
                del out[w]
    return out
