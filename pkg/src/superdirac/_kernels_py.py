"""Pure-Python kernels; reference implementation and fallback for ``_kernels``.

All functions take and return plain dicts keyed by integer tuples:

* Laurent polynomials: ``{exponent_tuple: int}`` with arbitrary (signed) keys.
* Truncated series: ``{exponent_tuple: int}`` with nonnegative keys; the total
  degree of a key is the sum of its entries.

Zero coefficients never appear in returned dicts.
"""

import heapq


def laurent_mul(a, b):
    out = {}
    get = out.get
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = tuple([x + y for x, y in zip(ka, kb)])
            out[k] = get(k, 0) + ca * cb
    return {k: c for k, c in out.items() if c}


def laurent_divide(f, g):
    """Leading-term division of f by g in the lexicographic monomial order.

    Returns ``(quotient, remainder)``.  The remainder is empty exactly when
    ``f == quotient * g``.  On failure the remainder is whatever was left of
    the dividend when elimination stopped: the next quotient term fell outside
    the bounds any exact quotient must satisfy (lexicographic floor and the
    coordinatewise box of the Newton polytopes), or a coefficient was not
    divisible by the leading coefficient of g.
    """
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    if not f:
        return {}, {}
    glead = max(g)
    gmin = min(g)
    gc = g[glead]
    floor = tuple([x - y for x, y in zip(min(f), gmin)])
    lo, hi = _box(f, g)
    if any(l > h for l, h in zip(lo, hi)):
        return {}, dict(f)
    rem = dict(f)
    heap = [tuple([-x for x in k]) for k in rem]
    heapq.heapify(heap)
    quot = {}
    gitems = list(g.items())
    while heap:
        neg = heapq.heappop(heap)
        lead = tuple([-x for x in neg])
        c = rem.get(lead)
        if not c:
            continue
        qk = tuple([x - y for x, y in zip(lead, glead)])
        qc, r = divmod(c, gc)
        if r or qk < floor or any(x < l or x > h for x, l, h in zip(qk, lo, hi)):
            break
        quot[qk] = qc
        for kg, cg in gitems:
            k = tuple([x + y for x, y in zip(qk, kg)])
            old = rem.get(k)
            if old is None:
                rem[k] = -qc * cg
                heapq.heappush(heap, tuple([-x for x in k]))
            else:
                new = old - qc * cg
                if new:
                    rem[k] = new
                else:
                    del rem[k]
    return quot, {k: c for k, c in rem.items() if c}


def _box(f, g):
    n = len(next(iter(f)))
    lo = []
    hi = []
    for i in range(n):
        fi = [k[i] for k in f]
        gi = [k[i] for k in g]
        lo.append(min(fi) - min(gi))
        hi.append(max(fi) - max(gi))
    return lo, hi


def series_mul(a, b, order):
    out = {}
    get = out.get
    bl = [(kb, sum(kb), cb) for kb, cb in b.items()]
    for ka, ca in a.items():
        da = sum(ka)
        if da > order:
            continue
        for kb, db, cb in bl:
            if da + db > order:
                continue
            k = tuple([x + y for x, y in zip(ka, kb)])
            out[k] = get(k, 0) + ca * cb
    return {k: c for k, c in out.items() if c}
