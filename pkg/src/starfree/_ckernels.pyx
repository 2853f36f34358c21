# Compiled twins of the searches in _pykernels.py.  Branch order, bounds and
# tie-breaking match the Python versions exactly, so both return the same sets.
from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free
from libc.string cimport memcpy, memset

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

BACKEND = "c"

cdef enum:
    MAXW = 8

ctypedef uint64_t word


cdef inline int bs_count(const word* a, int W) noexcept nogil:
    cdef int i, c = 0
    for i in range(W):
        c += __builtin_popcountll(a[i])
    return c


cdef inline int bs_and_count(const word* a, const word* b, int W) noexcept nogil:
    cdef int i, c = 0
    for i in range(W):
        c += __builtin_popcountll(a[i] & b[i])
    return c


cdef inline bint bs_empty(const word* a, int W) noexcept nogil:
    cdef int i
    for i in range(W):
        if a[i]:
            return False
    return True


cdef inline int bs_first(const word* a, int W) noexcept nogil:
    cdef int i
    for i in range(W):
        if a[i]:
            return i * 64 + __builtin_ctzll(a[i])
    return -1


cdef inline bint bs_has(const word* a, int v) noexcept nogil:
    return (a[v >> 6] >> (v & 63)) & 1


cdef inline void bs_set(word* a, int v) noexcept nogil:
    a[v >> 6] |= (<word>1) << (v & 63)


cdef inline void bs_clear(word* a, int v) noexcept nogil:
    a[v >> 6] &= ~((<word>1) << (v & 63))


cdef void int_to_bs(object x, word* out, int W):
    cdef int i
    for i in range(W):
        out[i] = <word>((x >> (64 * i)) & 0xFFFFFFFFFFFFFFFF)


cdef object bs_to_list(const word* a, int W):
    out = []
    cdef int i
    cdef word x
    for i in range(W):
        x = a[i]
        while x:
            out.append(i * 64 + __builtin_ctzll(x))
            x &= x - 1
    return out


cdef word* load_rows(rows, int n, int W) except NULL:
    cdef word* R = <word*>malloc(max(n, 1) * W * sizeof(word))
    if R == NULL:
        raise MemoryError()
    cdef int v
    for v in range(n):
        int_to_bs(rows[v], R + v * W, W)
    return R


# --------------------------------------------------------------------------
# maximum independent set

cdef struct MisCtx:
    int n
    int W
    word* R
    int* order      # per depth: n entries
    int* colour
    int* sol
    int depth_sol
    int best
    int target
    int* best_sol
    bint done


cdef void mis_expand(MisCtx* c, word* P, int depth) noexcept nogil:
    cdef int W = c.W
    cdef int* order = c.order + depth * c.n
    cdef int* colour = c.colour + depth * c.n
    cdef word U[MAXW]
    cdef word Q[MAXW]
    cdef word newP[MAXW]
    cdef int i, v, k = 0, cnt = 0, w
    cdef word* Rv
    memcpy(U, P, W * sizeof(word))
    while not bs_empty(U, W):
        k += 1
        memcpy(Q, U, W * sizeof(word))
        while not bs_empty(Q, W):
            v = bs_first(Q, W)
            bs_clear(U, v)
            bs_clear(Q, v)
            Rv = c.R + v * W
            for w in range(W):
                Q[w] &= Rv[w]
            order[cnt] = v
            colour[cnt] = k
            cnt += 1
    i = cnt - 1
    while i >= 0:
        if c.depth_sol + colour[i] <= c.best:
            return
        v = order[i]
        c.sol[c.depth_sol] = v
        c.depth_sol += 1
        Rv = c.R + v * W
        for w in range(W):
            newP[w] = P[w] & ~Rv[w]
        bs_clear(newP, v)
        if not bs_empty(newP, W):
            mis_expand(c, newP, depth + 1)
            if c.done:
                return
        elif c.depth_sol > c.best:
            c.best = c.depth_sol
            memcpy(c.best_sol, c.sol, c.depth_sol * sizeof(int))
            if c.target > 0 and c.best >= c.target:
                c.done = True
                return
        c.depth_sol -= 1
        bs_clear(P, v)
        i -= 1


def max_independent(rows, allowed, int lb, int target):
    cdef int n = len(rows)
    cdef int W = (n + 63) // 64
    if W == 0:
        W = 1
    if W > MAXW:
        raise ValueError("graph too large for compiled kernel")
    if not allowed:
        return [] if lb < 0 else None
    cdef MisCtx c
    cdef word P[MAXW]
    c.n = n
    c.W = W
    c.R = load_rows(rows, n, W)
    c.order = <int*>malloc((n + 1) * n * sizeof(int))
    c.colour = <int*>malloc((n + 1) * n * sizeof(int))
    c.sol = <int*>malloc((n + 1) * sizeof(int))
    c.best_sol = <int*>malloc((n + 1) * sizeof(int))
    c.depth_sol = 0
    c.best = lb
    c.target = target
    c.done = False
    int_to_bs(allowed, P, W)
    try:
        with nogil:
            mis_expand(&c, P, 0)
        if c.best > lb:
            return sorted([c.best_sol[i] for i in range(c.best)])
        return None
    finally:
        free(c.R)
        free(c.order)
        free(c.colour)
        free(c.sol)
        free(c.best_sol)


# --------------------------------------------------------------------------
# k-domination

cdef struct DomCtx:
    int n
    int W
    word* R
    int* need
    int* saved     # per depth: n entries
    int* chosen
    int nchosen


cdef bint dom_rec(DomCtx* c, word* unsat, word* cand, int total, int budget, int depth) noexcept nogil:
    cdef int W = c.W
    cdef int n = c.n
    cdef int v, u, w, gain, maxgain = 0, cnt, bestcount, nsaved, ntotal, i
    cdef word x
    cdef word opts[MAXW]
    cdef word bestopts[MAXW]
    cdef word ncand[MAXW]
    cdef word nunsat[MAXW]
    cdef word wm[MAXW]
    cdef word* Rv
    cdef int* saved = c.saved + depth * n
    if bs_empty(unsat, W):
        return True
    if budget == 0:
        return False
    for i in range(W):
        x = cand[i]
        while x:
            v = i * 64 + __builtin_ctzll(x)
            x &= x - 1
            gain = bs_and_count(c.R + v * W, unsat, W)
            if bs_has(unsat, v):
                gain += c.need[v]
            if gain > maxgain:
                maxgain = gain
    if maxgain == 0 or total > budget * maxgain:
        return False
    bestcount = n + 2
    for i in range(W):
        x = unsat[i]
        while x:
            u = i * 64 + __builtin_ctzll(x)
            x &= x - 1
            Rv = c.R + u * W
            for w in range(W):
                opts[w] = Rv[w] & cand[w]
            cnt = bs_count(opts, W)
            if bs_has(cand, u):
                bs_set(opts, u)
                cnt += 1
            elif cnt < c.need[u]:
                return False
            if cnt < bestcount:
                bestcount = cnt
                memcpy(bestopts, opts, W * sizeof(word))
    memcpy(ncand, cand, W * sizeof(word))
    while not bs_empty(bestopts, W):
        v = bs_first(bestopts, W)
        bs_clear(bestopts, v)
        bs_clear(ncand, v)
        memcpy(nunsat, unsat, W * sizeof(word))
        ntotal = total
        if bs_has(nunsat, v):
            bs_clear(nunsat, v)
            ntotal -= c.need[v]
        Rv = c.R + v * W
        for w in range(W):
            wm[w] = Rv[w] & nunsat[w]
        nsaved = 0
        while not bs_empty(wm, W):
            u = bs_first(wm, W)
            bs_clear(wm, u)
            saved[nsaved] = u
            nsaved += 1
            c.need[u] -= 1
            ntotal -= 1
            if c.need[u] == 0:
                bs_clear(nunsat, u)
        c.chosen[c.nchosen] = v
        c.nchosen += 1
        if dom_rec(c, nunsat, ncand, ntotal, budget - 1, depth + 1):
            return True
        c.nchosen -= 1
        for i in range(nsaved):
            c.need[saved[i]] += 1
    return False


def k_dominating(rows, need, cand, int budget):
    cdef int n = len(rows)
    cdef int W = (n + 63) // 64
    if W == 0:
        W = 1
    if W > MAXW:
        raise ValueError("graph too large for compiled kernel")
    cdef DomCtx c
    cdef word unsat[MAXW]
    cdef word cd[MAXW]
    cdef int total = 0, u
    cdef bint ok
    memset(unsat, 0, MAXW * sizeof(word))
    c.n = n
    c.W = W
    c.R = load_rows(rows, n, W)
    c.need = <int*>malloc((n + 1) * sizeof(int))
    c.saved = <int*>malloc((budget + 2) * (n + 1) * sizeof(int))
    c.chosen = <int*>malloc((budget + 2) * sizeof(int))
    c.nchosen = 0
    try:
        for u in range(n):
            c.need[u] = need[u]
            if need[u] > 0:
                bs_set(unsat, u)
                total += need[u]
        int_to_bs(cand, cd, W)
        with nogil:
            ok = dom_rec(&c, unsat, cd, total, budget, 0)
        if ok:
            return sorted([c.chosen[i] for i in range(c.nchosen)])
        return None
    finally:
        free(c.R)
        free(c.need)
        free(c.saved)
        free(c.chosen)


# --------------------------------------------------------------------------
# k-independence

cdef struct KiCtx:
    int n
    int W
    int k
    word* R
    int best
    int target
    word best_set[MAXW]
    bint has_best
    bint done


cdef int deletion_lb(KiCtx* c, const word* alive, const word* forced) noexcept nogil:
    cdef int W = c.W
    cdef word used[MAXW]
    cdef word nb[MAXW]
    cdef int lb = 0, v, d, take, u, i, w
    cdef word x
    cdef word* Rv
    memset(used, 0, MAXW * sizeof(word))
    for i in range(W):
        x = alive[i]
        while x:
            v = i * 64 + __builtin_ctzll(x)
            x &= x - 1
            if bs_has(used, v):
                continue
            Rv = c.R + v * W
            for w in range(W):
                nb[w] = Rv[w] & alive[w] & ~used[w]
            d = bs_count(nb, W)
            if d <= c.k:
                continue
            if bs_has(forced, v):
                lb += d - c.k
                for w in range(W):
                    used[w] |= nb[w]
                bs_set(used, v)
                if d - bs_and_count(nb, forced, W) < d - c.k:
                    return -1
            else:
                lb += 1
                take = c.k + 1
                bs_set(used, v)
                while take:
                    u = bs_first(nb, W)
                    bs_clear(nb, u)
                    bs_set(used, u)
                    take -= 1
    return lb


cdef void ki_rec(KiCtx* c, word* alive, word* forced) noexcept nogil:
    cdef int W = c.W
    cdef int size = bs_count(alive, W)
    cdef int dl, v, e, fv, fexcess, bv, bdeg, d, i, w
    cdef word x
    cdef word na[MAXW]
    cdef word nf[MAXW]
    cdef word fr[MAXW]
    cdef word* Rv
    if size <= c.best:
        return
    dl = deletion_lb(c, alive, forced)
    if dl < 0 or size - dl <= c.best:
        return
    fv = -1
    fexcess = 0
    for i in range(W):
        x = forced[i]
        while x:
            v = i * 64 + __builtin_ctzll(x)
            x &= x - 1
            e = bs_and_count(c.R + v * W, alive, W) - c.k
            if e > fexcess:
                fexcess = e
                fv = v
    if fv >= 0:
        Rv = c.R + fv * W
        for w in range(W):
            fr[w] = Rv[w] & alive[w] & ~forced[w]
        if bs_empty(fr, W):
            return
        v = bs_first(fr, W)
        memcpy(na, alive, W * sizeof(word))
        bs_clear(na, v)
        ki_rec(c, na, forced)
        if c.done:
            return
        memcpy(nf, forced, W * sizeof(word))
        bs_set(nf, v)
        ki_rec(c, alive, nf)
        return
    bv = -1
    bdeg = c.k
    for i in range(W):
        x = alive[i] & ~forced[i]
        while x:
            v = i * 64 + __builtin_ctzll(x)
            x &= x - 1
            d = bs_and_count(c.R + v * W, alive, W)
            if d > bdeg:
                bdeg = d
                bv = v
    if bv < 0:
        c.best = size
        memcpy(c.best_set, alive, W * sizeof(word))
        c.has_best = True
        if c.target > 0 and size >= c.target:
            c.done = True
        return
    memcpy(na, alive, W * sizeof(word))
    bs_clear(na, bv)
    ki_rec(c, na, forced)
    if c.done:
        return
    memcpy(nf, forced, W * sizeof(word))
    bs_set(nf, bv)
    ki_rec(c, alive, nf)


def max_k_independent(rows, int k, alive, forced, int lb, int target):
    cdef int n = len(rows)
    cdef int W = (n + 63) // 64
    if W == 0:
        W = 1
    if W > MAXW:
        raise ValueError("graph too large for compiled kernel")
    if forced & ~alive:
        return None
    cdef KiCtx c
    cdef word A[MAXW]
    cdef word F[MAXW]
    c.n = n
    c.W = W
    c.k = k
    c.R = load_rows(rows, n, W)
    c.best = lb
    c.target = target
    c.has_best = False
    c.done = False
    memset(c.best_set, 0, MAXW * sizeof(word))
    int_to_bs(alive, A, W)
    int_to_bs(forced, F, W)
    try:
        with nogil:
            ki_rec(&c, A, F)
        if not c.has_best:
            return None
        return bs_to_list(c.best_set, W)
    finally:
        free(c.R)
