"""Pure-Python search kernels.

Every function here has a line-for-line twin in ``_ckernels.pyx``; both must
visit the search tree in the same order so they return identical sets.
Bitsets are Python ints, ``rows[v]`` is the open neighbourhood of ``v``.
"""

from __future__ import annotations

import sys

BACKEND = "python"


def _lowbit_index(x: int) -> int:
    return (x & -x).bit_length() - 1


class _Found(Exception):
    pass


def max_independent(rows, allowed, lb, target):
    """Largest independent set inside ``allowed`` of size greater than ``lb``.

    Greedy clique partition gives the colour bound (MCQ style, run on the
    complement).  With ``target > 0`` the search stops at the first set of
    size ``>= target``.  Returns a sorted list or ``None``.
    """
    best = [lb, None]
    stack_sol: list[int] = []

    def expand(P):
        # partition P into cliques of G; order[i] carries its clique count
        order = []
        colour = []
        U = P
        k = 0
        while U:
            k += 1
            Q = U
            while Q:
                v = _lowbit_index(Q)
                U &= ~(1 << v)
                Q &= ~(1 << v)
                Q &= rows[v]
                order.append(v)
                colour.append(k)
        for i in range(len(order) - 1, -1, -1):
            if len(stack_sol) + colour[i] <= best[0]:
                return
            v = order[i]
            stack_sol.append(v)
            newP = P & ~rows[v] & ~(1 << v)
            if newP:
                expand(newP)
            elif len(stack_sol) > best[0]:
                best[0] = len(stack_sol)
                best[1] = sorted(stack_sol)
                if target > 0 and best[0] >= target:
                    raise _Found
            stack_sol.pop()
            P &= ~(1 << v)

    if allowed:
        old = sys.getrecursionlimit()
        sys.setrecursionlimit(max(old, 4 * allowed.bit_length() + 100))
        try:
            expand(allowed)
        except _Found:
            pass
        finally:
            sys.setrecursionlimit(old)
    elif lb < 0:
        best[1] = []
    return best[1]


def k_dominating(rows, need, cand, budget):
    """Find ``D`` inside ``cand`` with ``|D| <= budget`` meeting every ``need``.

    ``need[u]`` is how many more neighbours in ``D`` vertex ``u`` requires
    unless ``u`` itself joins ``D``; zero means already satisfied.  Branches
    on the unsatisfied vertex with the fewest options, trying options in
    ascending order and excluding each one after it has been explored.
    """
    n = len(rows)
    need = list(need)
    unsat = 0
    total = 0
    for u in range(n):
        if need[u] > 0:
            unsat |= 1 << u
            total += need[u]
    chosen: list[int] = []

    def rec(unsat, cand, total, budget):
        if not unsat:
            return True
        if budget == 0:
            return False
        maxgain = 0
        c = cand
        while c:
            v = _lowbit_index(c)
            c &= c - 1
            gain = (rows[v] & unsat).bit_count()
            if unsat >> v & 1:
                gain += need[v]
            if gain > maxgain:
                maxgain = gain
        if maxgain == 0 or total > budget * maxgain:
            return False
        bestu = -1
        bestopts = 0
        bestcount = n + 2
        x = unsat
        while x:
            u = _lowbit_index(x)
            x &= x - 1
            opts = rows[u] & cand
            cnt = opts.bit_count()
            if cand >> u & 1:
                opts |= 1 << u
                cnt += 1
            elif cnt < need[u]:
                return False
            if cnt < bestcount:
                bestcount = cnt
                bestu = u
                bestopts = opts
        del bestu
        opts = bestopts
        while opts:
            c = _lowbit_index(opts)
            opts &= opts - 1
            cand &= ~(1 << c)
            # apply c
            saved = []
            nunsat = unsat
            ntotal = total
            if nunsat >> c & 1:
                nunsat &= ~(1 << c)
                ntotal -= need[c]
            w_mask = rows[c] & nunsat
            while w_mask:
                w = _lowbit_index(w_mask)
                w_mask &= w_mask - 1
                saved.append(w)
                need[w] -= 1
                ntotal -= 1
                if need[w] == 0:
                    nunsat &= ~(1 << w)
            chosen.append(c)
            ok = rec(nunsat, cand, ntotal, budget - 1)
            if ok:
                return True
            chosen.pop()
            for w in saved:
                need[w] += 1
        return False

    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 4 * n + 100))
    try:
        if rec(unsat, cand, total, budget):
            return sorted(chosen)
    finally:
        sys.setrecursionlimit(old)
    return None


def _deletion_lb(rows, k, alive, forced):
    """Lower bound on deletions needed before ``alive`` has max degree <= k."""
    used = 0
    lb = 0
    x = alive
    while x:
        v = _lowbit_index(x)
        x &= x - 1
        if used >> v & 1:
            continue
        nb = rows[v] & alive & ~used
        d = nb.bit_count()
        if d <= k:
            continue
        if forced >> v & 1:
            free = nb & ~forced
            lb += d - k
            used |= nb | (1 << v)
            if free.bit_count() < d - k:
                return -1
        else:
            lb += 1
            take = k + 1
            used |= 1 << v
            while take:
                u = _lowbit_index(nb)
                nb &= nb - 1
                used |= 1 << u
                take -= 1
    return lb


def max_k_independent(rows, k, alive, forced, lb, target):
    """Largest ``S`` with ``forced <= S <= alive`` and max degree of G[S] <= k.

    Binary branching: pick the forced vertex with the largest excess degree
    and delete-or-force its lowest free neighbour; otherwise delete-or-force
    the free vertex of largest degree.  Returns a sorted list or ``None``.
    """
    best = [lb, None]

    def rec(alive, forced):
        size = alive.bit_count()
        if size <= best[0]:
            return
        dl = _deletion_lb(rows, k, alive, forced)
        if dl < 0 or size - dl <= best[0]:
            return
        fv = -1
        fexcess = 0
        x = forced
        while x:
            v = _lowbit_index(x)
            x &= x - 1
            e = (rows[v] & alive).bit_count() - k
            if e > fexcess:
                fexcess = e
                fv = v
        if fv >= 0:
            free = rows[fv] & alive & ~forced
            if not free:
                return
            w = _lowbit_index(free)
            rec(alive & ~(1 << w), forced)
            rec(alive, forced | (1 << w))
            return
        bv = -1
        bdeg = k
        x = alive & ~forced
        while x:
            v = _lowbit_index(x)
            x &= x - 1
            d = (rows[v] & alive).bit_count()
            if d > bdeg:
                bdeg = d
                bv = v
        if bv < 0:
            best[0] = size
            best[1] = alive
            if target > 0 and size >= target:
                raise _Found
            return
        rec(alive & ~(1 << bv), forced)
        rec(alive, forced | (1 << bv))

    if forced & ~alive:
        return None
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 4 * alive.bit_length() + 100))
    try:
        rec(alive, forced)
    except _Found:
        pass
    finally:
        sys.setrecursionlimit(old)
    if best[1] is None:
        return None
    out = []
    x = best[1]
    while x:
        v = _lowbit_index(x)
        x &= x - 1
        out.append(v)
    return out
