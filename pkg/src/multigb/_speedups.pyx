# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled polynomial kernel.

Same interface and data conventions as ``multigb._purekernel`` (tuples for
monomials, sorted ``(exp, coeff)`` lists for polynomials, order matrices as
tuples of int rows); ``multigb.kernel`` prefers this module when it imports.
"""

from multigb.errors import ResourceLimitError

IMPLEMENTATION = "compiled"

cdef dict _key_caches = {}
cdef Py_ssize_t _CACHE_LIMIT = 262144


cdef tuple _order_key(tuple matrix, tuple exp):
    cdef dict cache
    cdef object hit
    cdef tuple row, key
    cdef list acc
    cdef Py_ssize_t i, n
    cdef long long s
    hit = _key_caches.get(matrix)
    if hit is None:
        cache = {}
        _key_caches[matrix] = cache
    else:
        cache = <dict>hit
    hit = cache.get(exp)
    if hit is not None:
        return <tuple>hit
    n = len(exp)
    acc = []
    for row in matrix:
        s = 0
        for i in range(n):
            s += <long long>row[i] * <long long>exp[i]
        acc.append(s)
    key = tuple(acc)
    if len(cache) > _CACHE_LIMIT:
        cache.clear()
    cache[exp] = key
    return key


def order_key(matrix, exp):
    """Sort key of an exponent vector under an order matrix."""
    return _order_key(matrix, exp)


def compare(matrix, a, b):
    """Three-way comparison of exponent vectors: 1, 0 or -1."""
    cdef tuple ka = _order_key(matrix, a)
    cdef tuple kb = _order_key(matrix, b)
    if ka > kb:
        return 1
    if ka < kb:
        return -1
    return 0


def sort_terms(terms, matrix, p):
    """Collect duplicates mod p, drop zeros, sort strictly descending."""
    cdef dict acc = {}
    cdef object exp, coeff
    cdef list decorated = []
    for exp, coeff in terms:
        acc[exp] = (acc.get(exp, 0) + coeff) % p
    for exp, coeff in acc.items():
        if coeff:
            decorated.append((_order_key(matrix, exp), exp, coeff))
    decorated.sort(reverse=True)
    return [(e, c) for _, e, c in decorated]


def poly_neg(f, p):
    cdef long long pp = p
    return [(e, pp - c) for e, c in f]


def poly_scale(f, c, p):
    cdef long long cc = c % p, pp = p, k
    cdef tuple e
    cdef list out = []
    cdef object term
    if cc == 0:
        return []
    for term in f:
        e = <tuple>(<tuple>term)[0]
        k = (<tuple>term)[1]
        out.append((e, (k * cc) % pp))
    return out


cdef inline tuple _exp_add(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    cdef long long x
    for i in range(n):
        x = <long long>a[i] + <long long>b[i]
        out[i] = x
    return tuple(out)


cdef inline tuple _exp_sub(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    cdef long long x
    for i in range(n):
        x = <long long>a[i] - <long long>b[i]
        out[i] = x
    return tuple(out)


cdef inline bint _divides_c(tuple small, tuple big):
    cdef Py_ssize_t i, n = len(small)
    for i in range(n):
        if <long long>small[i] > <long long>big[i]:
            return False
    return True


def poly_mul_term(f, shift, c, p):
    """Multiply by a single term; preserves sortedness (orders are multiplicative)."""
    cdef long long cc = c % p, pp = p, k
    cdef tuple e, sh = shift
    cdef list out = []
    cdef object term
    if cc == 0:
        return []
    for term in f:
        e = <tuple>(<tuple>term)[0]
        k = (<tuple>term)[1]
        out.append((_exp_add(e, sh), (k * cc) % pp))
    return out


cdef list _merge(list f, list g, tuple matrix, long long p):
    cdef list out = []
    cdef Py_ssize_t i = 0, j = 0, nf = len(f), ng = len(g)
    cdef tuple tf, tg, ef, eg
    cdef long long c
    while i < nf and j < ng:
        tf = <tuple>f[i]
        tg = <tuple>g[j]
        ef = <tuple>tf[0]
        eg = <tuple>tg[0]
        if ef == eg:
            c = (<long long>tf[1] + <long long>tg[1]) % p
            if c:
                out.append((ef, c))
            i += 1
            j += 1
        elif _order_key(matrix, ef) > _order_key(matrix, eg):
            out.append(tf)
            i += 1
        else:
            out.append(tg)
            j += 1
    while i < nf:
        out.append(f[i])
        i += 1
    while j < ng:
        out.append(g[j])
        j += 1
    return out


def poly_add(f, g, matrix, p):
    return _merge(list(f), list(g), matrix, p)


def poly_sub(f, g, matrix, p):
    return _merge(list(f), poly_neg(g, p), matrix, p)


def poly_mul(f, g, matrix, p):
    cdef dict acc = {}
    cdef tuple tf, tg, e
    cdef long long cf, cg, pp = p
    cdef object prev
    cdef list decorated = []
    for tf in f:
        cf = <long long>tf[1]
        for tg in g:
            e = _exp_add(<tuple>tf[0], <tuple>tg[0])
            cg = (cf * <long long>tg[1]) % pp
            prev = acc.get(e)
            if prev is None:
                acc[e] = cg
            else:
                acc[e] = (<long long>prev + cg) % pp
    for e, prev in acc.items():
        if prev:
            decorated.append((_order_key(matrix, e), e, prev))
    decorated.sort(reverse=True)
    return [(ee, cc) for _, ee, cc in decorated]


def spoly(f, g, matrix, p):
    """S-polynomial of two nonzero sorted polynomials (leads cancel)."""
    cdef tuple tf = <tuple>f[0], tg = <tuple>g[0]
    cdef tuple ef = <tuple>tf[0], eg = <tuple>tg[0]
    cdef Py_ssize_t i, n = len(ef)
    cdef list lcm_list = [0] * n
    cdef long long a, b
    for i in range(n):
        a = <long long>ef[i]
        b = <long long>eg[i]
        lcm_list[i] = a if a >= b else b
    cdef tuple lcm = tuple(lcm_list)
    cdef long long pp = p
    sf = poly_mul_term(f, _exp_sub(lcm, ef), pow(<object>tf[1], pp - 2, pp), p)
    sg = poly_mul_term(g, _exp_sub(lcm, eg), pow(<object>tg[1], pp - 2, pp), p)
    return _merge(<list>sf, poly_neg(sg, p), matrix, p)


def normal_form(f, basis, matrix, p, max_terms=0):
    """Fully reduce ``f`` modulo a list of nonzero sorted polynomials.

    Returns the unique remainder none of whose terms is divisible by a
    lead term of ``basis`` (unique given the basis and its element order;
    canonical when ``basis`` is a Groebner basis).  A positive
    ``max_terms`` aborts runaway intermediate growth.
    """
    cdef list work, out, leads, tail
    cdef Py_ssize_t pos, hit, idx, nleads
    cdef tuple term, exp, lead_exp, g_lead, shift
    cdef long long coeff, glc, factor, pp = p
    cdef long long limit = max_terms
    cdef object g
    if not f or not basis:
        return list(f)
    leads = [g[0] for g in basis]
    nleads = len(leads)
    work = list(f)
    out = []
    pos = 0
    while pos < len(work):
        term = <tuple>work[pos]
        exp = <tuple>term[0]
        hit = -1
        for idx in range(nleads):
            lead_exp = <tuple>(<tuple>leads[idx])[0]
            if _divides_c(lead_exp, exp):
                hit = idx
                break
        if hit < 0:
            out.append(term)
            pos += 1
            continue
        g = basis[hit]
        g_lead = <tuple>g[0]
        glc = <long long>g_lead[1]
        coeff = <long long>term[1]
        shift = _exp_sub(exp, <tuple>g_lead[0])
        factor = (coeff * <long long>pow(<object>glc, pp - 2, pp)) % pp
        tail = poly_mul_term(g[1:], shift, pp - factor, p)
        work = _merge(work[pos + 1:], tail, matrix, p)
        pos = 0
        if limit and len(work) + len(out) > limit:
            raise ResourceLimitError(
                f"reduction exceeded {max_terms} terms")
    return out
