"""Permutations on {0, ..., d-1} stored as tuples of images.

The composition convention throughout the package is (p * q)(i) = p(q(i)),
i.e. q acts first.
"""


class NotBijection(ValueError):
    """The image sequence is not a bijection of {0, ..., d-1}."""


def check_perm(p):
    """Raise NotBijection unless p is a bijection of {0, ..., len(p)-1}."""
    if sorted(p) != list(range(len(p))):
        raise NotBijection(f"not a permutation of 0..{len(p) - 1}: {p}")
    return tuple(p)


def identity(d):
    return tuple(range(d))


def mul(p, q):
    """Product p*q with q acting first: (p*q)(i) = p(q(i))."""
    return tuple(p[q[i]] for i in range(len(q)))


def inv(p):
    r = [0] * len(p)
    for i, v in enumerate(p):
        r[v] = i
    return tuple(r)


def cycles(p):
    """Cycle decomposition, including fixed points, each cycle a tuple."""
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i]:
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


def cycle_index(p):
    """Map each point to the index of its cycle in cycles(p) order."""
    idx = [-1] * len(p)
    for k, cyc in enumerate(cycles(p)):
        for i in cyc:
            idx[i] = k
    return tuple(idx)


def perm_order(p):
    n = 1
    q = p
    ident = identity(len(p))
    while q != ident:
        q = mul(p, q)
        n += 1
    return n


def is_transitive(gens, d):
    """True iff the group generated by gens acts transitively on 0..d-1."""
    if d == 0:
        return False
    seen = [False] * d
    seen[0] = True
    queue = [0]
    count = 1
    while queue:
        i = queue.pop()
        for g in gens:
            j = g[i]
            if not seen[j]:
                seen[j] = True
                count += 1
                queue.append(j)
    return count == d
