"""Exact arithmetic in SL2(Z/m): predicted Veech groups, configuration
stabilizers, the trace-zero conjugacy solver and pair alignment over F_p."""

from dataclasses import dataclass
from math import gcd

from .orbit import CosetAction


class NotOdd(ValueError):
    pass


class NotGeneralPosition(ValueError):
    pass


class BadTrace(ValueError):
    pass


class BadDet(ValueError):
    pass


class EvenModulus(ValueError):
    pass


class Dependent(ValueError):
    pass


@dataclass(frozen=True)
class MatMod:
    modulus: int
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        m = self.modulus
        if m < 2:
            raise ValueError("modulus must be >= 2")
        for f in ("a", "b", "c", "d"):
            object.__setattr__(self, f, getattr(self, f) % m)

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def det(self):
        return (self.a * self.d - self.b * self.c) % self.modulus

    def trace(self):
        return (self.a + self.d) % self.modulus

    def __mul__(self, other):
        assert self.modulus == other.modulus
        return MatMod(self.modulus, *_mmul(self.entries(), other.entries(),
                                           self.modulus))

    def inverse(self):
        di = pow(self.det(), -1, self.modulus)
        return MatMod(self.modulus, self.d * di, -self.b * di,
                      -self.c * di, self.a * di)


@dataclass(frozen=True)
class FiniteAction(CosetAction):
    modulus: int = 0


@dataclass(frozen=True)
class TorsionConfig:
    """Branch configuration S = {(p,q), (-q,p), (-p,-q), (q,-p)} in (Z/n)^2."""
    n: int
    p: int
    q: int

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("n must be >= 3")
        object.__setattr__(self, "p", self.p % self.n)
        object.__setattr__(self, "q", self.q % self.n)
        if (self.p, self.q) == (0, 0):
            raise ValueError("(p, q) must be nonzero mod n")

    def points(self):
        n, p, q = self.n, self.p, self.q
        return ((p % n, q % n), (-q % n, p % n),
                (-p % n, -q % n), (q % n, -p % n))


def _mmul(x, y, m):
    return ((x[0] * y[0] + x[1] * y[2]) % m, (x[0] * y[1] + x[1] * y[3]) % m,
            (x[2] * y[0] + x[3] * y[2]) % m, (x[2] * y[1] + x[3] * y[3]) % m)


def sl2_group_order(m):
    """|SL2(Z/m)| = m^3 * prod over primes p | m of (1 - p^-2)."""
    if m < 2:
        raise ValueError("m must be >= 2")
    num, den = m ** 3, 1
    k, left = 2, m
    while k * k <= left:
        if left % k == 0:
            num *= k * k - 1
            den *= k * k
            while left % k == 0:
                left //= k
        k += 1
    if left > 1:
        num *= left * left - 1
        den *= left * left
    assert num % den == 0
    return num // den


def enumerate_sl2(m):
    """All (a,b,c,d) with ad - bc = 1 mod m, lexicographic order."""
    out = []
    for a in range(m):
        g = gcd(a, m)
        for b in range(m):
            for c in range(m):
                r = (1 + b * c) % m
                if a == 0:
                    if r == 0:
                        out.extend((a, b, c, d) for d in range(m))
                    continue
                if r % g:
                    continue
                step = m // g
                d0 = (r // g) * pow(a // g, -1, step) % step
                out.extend((a, b, c, d0 + k * step) for k in range(g))
    out.sort()
    return out


def general_position(cfg):
    """p^2 + q^2 a unit mod n (the matrix (p -q; q p) is invertible)."""
    return gcd(cfg.p ** 2 + cfg.q ** 2, cfg.n) == 1


def stab_of_config(cfg):
    """All matrices in SL2(Z/n) preserving S as a multiset (brute force)."""
    n = cfg.n
    target = sorted(cfg.points())
    out = []
    for a, b, c, d in enumerate_sl2(n):
        image = sorted(((a * x + b * y) % n, (c * x + d * y) % n)
                       for x, y in cfg.points())
        if image == target:
            out.append(MatMod(n, a, b, c, d))
    return out


def _in_gamma_bar(g, n):
    """Membership in {A = +-I or +-S mod n} intersect {A = I or S mod 2}."""
    a, b, c, d = g
    mod_n = (a % n, b % n, c % n, d % n)
    if mod_n not in ((1, 0, 0, 1), (n - 1, 0, 0, n - 1),
                     (0, n - 1, 1, 0), (0, 1, n - 1, 0)):
        return False
    return (a % 2, b % 2, c % 2, d % 2) in ((1, 0, 0, 1), (0, 1, 1, 0))


def predicted_veech_action(cfg):
    """Action of S, T mod 2n on the cosets of the predicted congruence group."""
    n = cfg.n
    if n % 2 == 0:
        raise NotOdd("the predicted group is only defined for odd n")
    if not general_position(cfg):
        raise NotGeneralPosition(f"p^2 + q^2 not a unit mod {n}")
    m = 2 * n
    subgroup = [g for g in enumerate_sl2(m) if _in_gamma_bar(g, n)]
    s_mat = (0, m - 1, 1, 0)
    t_mat = (1, 1, 0, 1)

    def coset_key(g):
        return min(_mmul(g, h, m) for h in subgroup)

    reps = [(1, 0, 0, 1)]
    index = {coset_key(reps[0]): 0}
    edges = {"S": [], "T": []}
    frontier = 0
    while frontier < len(reps):
        cur = reps[frontier]
        for name, mat in (("S", s_mat), ("T", t_mat)):
            img = _mmul(mat, cur, m)
            k = coset_key(img)
            j = index.get(k)
            if j is None:
                j = len(reps)
                index[k] = j
                reps.append(img)
            edges[name].append(j)
        frontier += 1
    size = len(reps)
    assert size == sl2_group_order(m) // len(subgroup)
    return FiniteAction(size, tuple(edges["S"]), tuple(edges["T"]), 0, m)


def pointed_equivalent(a1, a2):
    """Equality of pointed transitive actions: a base-respecting bijection
    commuting with both generator permutations (breadth-first propagation)."""
    if a1.size != a2.size:
        return False
    match = {a1.base: a2.base}
    queue = [a1.base]
    while queue:
        v = queue.pop(0)
        w = match[v]
        for p1, p2 in ((a1.perm_S, a2.perm_S), (a1.perm_T, a2.perm_T)):
            v2, w2 = p1[v], p2[w]
            if v2 in match:
                if match[v2] != w2:
                    return False
            else:
                match[v2] = w2
                queue.append(v2)
    return len(match) == a1.size


def _is_prime(p):
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def _sqrt_mod(x, p):
    x %= p
    for r in range(p):
        if r * r % p == x:
            return r
    return None


def _eigenvector(t, alpha, p):
    """A nonzero kernel vector of (t - alpha*I) over F_p."""
    a, b, c, d = t
    if b % p or (a - alpha) % p:
        return (b % p, (alpha - a) % p)
    return ((alpha - d) % p, c % p)


def conj_to_rotation(t):
    """B in SL2(F_p) with B*t*B^-1 = S or S^-1 (returns (sign, B)).

    For p = 3 mod 4 the basis (v, t v) represents t by S up to the sign of
    the second vector, fixed by a determinant rescale; for p = 1 mod 4, t
    is diagonalized with eigenvalues +-alpha, alpha^2 = -1, and the
    diagonal form is conjugated into S.
    """
    p = t.modulus
    if p == 2:
        raise EvenModulus("p = 2 rejected: I is trace 0 but not conjugate to S")
    if not _is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    if t.trace() % p:
        raise BadTrace(f"trace {t.trace()} != 0 mod {p}")
    if t.det() != 1 % p:
        raise BadDet(f"det {t.det()} != 1 mod {p}")
    a, b, c, d = t.entries()
    if p % 4 == 3:
        # t has no eigenvalues; v = e1 and t v are independent, and c != 0
        assert c % p != 0
        for sign, det in ((1, c), (-1, -c % p)):
            lam = _sqrt_mod(pow(det, -1, p), p)
            if lam is None:
                continue
            # columns lam*v, sign*lam*(t v); inverse of that basis matrix
            m = MatMod(p, lam, sign * lam * a, 0, sign * lam * c)
            bmat = m.inverse()
            break
    else:
        alpha = _sqrt_mod(p - 1, p)
        v1 = _eigenvector(t.entries(), alpha, p)
        v2 = _eigenvector(t.entries(), -alpha % p, p)
        m = MatMod(p, v1[0], v2[0], v1[1], v2[1])
        m = MatMod(p, m.a * pow(m.det(), -1, p), m.b,
                   m.c * pow(m.det(), -1, p), m.d)  # rescale column 1
        # eigenbasis of S for the same eigenvalues, det normalized
        cm = MatMod(p, alpha, -alpha, 1, 1)
        cm = MatMod(p, cm.a * pow(cm.det(), -1, p), cm.b,
                    cm.c * pow(cm.det(), -1, p), cm.d)
        sign, bmat = 1, cm * m.inverse()
    s_pow = MatMod(p, 0, -1, 1, 0) if sign == 1 else MatMod(p, 0, 1, -1, 0)
    assert bmat.det() == 1
    assert bmat * t == s_pow * bmat
    return sign, bmat


def find_alignment(p, pvec, qvec):
    """B in SL2(F_p) with {B P, B Q} = {R, S R}; returns (B, R).

    Follows the alignment recipe: M with M P = e1, a trace-0 det-1 matrix
    with first column M Q, pulled back and conjugated into S^+-1.
    """
    p0, p1 = pvec[0] % p, pvec[1] % p
    q0, q1 = qvec[0] % p, qvec[1] % p
    if (p0 * q1 - p1 * q0) % p == 0:
        raise Dependent("P and Q are linearly dependent mod p")
    if p0:
        amat = MatMod(p, p0, 0, p1, pow(p0, -1, p))
    else:
        amat = MatMod(p, 0, -pow(p1, -1, p), p1, 0)
    m = amat.inverse()  # M P = e1
    u = (m.a * q0 + m.b * q1) % p
    v = (m.c * q0 + m.d * q1) % p
    w = -(1 + u * u) * pow(v, -1, p) % p
    s2 = MatMod(p, u, w, v, -u)  # trace 0, det 1, first column M Q
    s1 = amat * s2 * m  # s1 P = Q
    sign, bmat = conj_to_rotation(s1)
    bp = ((bmat.a * p0 + bmat.b * p1) % p, (bmat.c * p0 + bmat.d * p1) % p)
    bq = ((bmat.a * q0 + bmat.b * q1) % p, (bmat.c * q0 + bmat.d * q1) % p)
    # sign +1: S(B P) = B Q, so R = B P; sign -1: S(B Q) = B P
    return bmat, (bp if sign == 1 else bq)


def in_gamma_uu(mat):
    """A = I or S mod 2, i.e. a+c and b+d both odd."""
    a, b, c, d = mat.entries()
    return (a + c) % 2 == 1 and (b + d) % 2 == 1
