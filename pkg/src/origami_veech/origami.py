"""Origamis (square-tiled surfaces) as pairs of gluing permutations.

An origami on d unit squares is a pair (sigma_x, sigma_y) of permutations
of {0, ..., d-1}: sigma_x sends each square to its right neighbour and
sigma_y to its upper neighbour.  The surface is required to be connected,
i.e. <sigma_x, sigma_y> acts transitively.
"""

from dataclasses import dataclass

from . import perms
from .perms import NotBijection, inv, mul


class LengthMismatch(ValueError):
    """sigma_x and sigma_y act on different numbers of squares."""


class NotConnected(ValueError):
    """The glued surface is disconnected."""


class NotFreeAction(ValueError):
    """A non-identity translation fixes a square."""


@dataclass(frozen=True)
class Origami:
    sigma_x: tuple
    sigma_y: tuple

    @property
    def degree(self):
        return len(self.sigma_x)


@dataclass(frozen=True)
class Stratum:
    zero_orders: tuple  # sorted multiset of zero orders k (cone angle 2pi(k+1))
    genus: int


@dataclass(frozen=True)
class MinusOneLift:
    rho: tuple
    fixed_centers: int
    fixed_vertical_edge_midpoints: int
    fixed_horizontal_edge_midpoints: int
    fixed_vertices: int

    @property
    def total_fixed(self):
        return (self.fixed_centers + self.fixed_vertical_edge_midpoints
                + self.fixed_horizontal_edge_midpoints + self.fixed_vertices)


def make_origami(sigma_x, sigma_y):
    o = Origami(tuple(sigma_x), tuple(sigma_y))
    validate(o)
    return o


def validate(o):
    """Raise LengthMismatch / NotBijection / NotConnected as appropriate."""
    if len(o.sigma_x) != len(o.sigma_y):
        raise LengthMismatch(
            f"sigma_x has length {len(o.sigma_x)}, sigma_y {len(o.sigma_y)}")
    perms.check_perm(o.sigma_x)
    perms.check_perm(o.sigma_y)
    if not perms.is_transitive((o.sigma_x, o.sigma_y), o.degree):
        raise NotConnected("<sigma_x, sigma_y> is not transitive")
    return o


def commutator(o):
    """K = sigma_x * sigma_y * sigma_x^-1 * sigma_y^-1 (cycles = vertices)."""
    sx, sy = o.sigma_x, o.sigma_y
    return mul(mul(sx, sy), mul(inv(sx), inv(sy)))


def genus(o):
    """Genus from the Euler count 2 - 2g = #vertex classes - #squares."""
    c = len(perms.cycles(commutator(o)))
    return (2 - (c - o.degree)) // 2


def stratum(o):
    """One zero of order k-1 for each k-cycle (k >= 2) of the commutator."""
    orders = sorted(len(c) - 1 for c in perms.cycles(commutator(o)) if len(c) > 1)
    return Stratum(tuple(orders), genus(o))


def _propagate(o, j0, gx, gy):
    """The unique f with f(0)=j0, f(sigma_x i)=gx(f i), f(sigma_y i)=gy(f i).

    Returns the permutation tuple, or None when no such bijection exists.
    """
    d = o.degree
    sx, sy = o.sigma_x, o.sigma_y
    f = [-1] * d
    f[0] = j0
    queue = [0]
    while queue:
        i = queue.pop()
        for s, g in ((sx, gx), (sy, gy)):
            i2, j2 = s[i], g[f[i]]
            if f[i2] < 0:
                f[i2] = j2
                queue.append(i2)
            elif f[i2] != j2:
                return None
    if sorted(f) != list(range(d)):
        return None
    # transitivity filled everything; verify the defining relations in full
    for i in range(d):
        if f[sx[i]] != gx[f[i]] or f[sy[i]] != gy[f[i]]:
            return None
    return tuple(f)


def isomorphism(o1, o2):
    """A relabeling rho with rho sigma_x1 rho^-1 = sigma_x2 (and for y), or None."""
    if o1.degree != o2.degree:
        return None
    for j0 in range(o2.degree):
        f = _propagate(o1, j0, o2.sigma_x, o2.sigma_y)
        if f is not None:
            return f
    return None


def are_isomorphic(o1, o2):
    return isomorphism(o1, o2) is not None


def canonical_key(o):
    """Byte string equal for two origamis iff they are isomorphic.

    Lexicographic minimum, over all d base squares, of the breadth-first
    relabeling of (sigma_x, sigma_y) with edge priority x, x^-1, y, y^-1.
    """
    d = o.degree
    sx, sy = o.sigma_x, o.sigma_y
    sxi, syi = inv(sx), inv(sy)
    best = None
    for base in range(d):
        new = [-1] * d
        new[base] = 0
        order = [base]
        for i in order:
            for nb in (sx[i], sxi[i], sy[i], syi[i]):
                if new[nb] < 0:
                    new[nb] = len(order)
                    order.append(nb)
        cand = tuple(new[sx[i]] for i in order) + tuple(new[sy[i]] for i in order)
        if best is None or cand < best:
            best = cand
    width = 1 if d <= 0xFF else 2
    return b"".join(v.to_bytes(width, "big") for v in (d,) + best)


def translations(o):
    """All permutations commuting with sigma_x and sigma_y (the deck group)."""
    out = []
    for j0 in range(o.degree):
        f = _propagate(o, j0, o.sigma_x, o.sigma_y)
        if f is not None:
            out.append(f)
    return out


def minus_one_lifts(o):
    """All rho conjugating sigma_x, sigma_y to their inverses, with the
    fixed-point counts of the induced map (i,(u,v)) -> (rho(i),(1-u,1-v))."""
    sx, sy = o.sigma_x, o.sigma_y
    sxi, syi = inv(sx), inv(sy)
    vclass = perms.cycle_index(commutator(o))
    nclasses = max(vclass) + 1
    out = []
    for j0 in range(o.degree):
        rho = _propagate(o, j0, sxi, syi)
        if rho is None:
            continue
        centers = sum(1 for i in range(o.degree) if rho[i] == i)
        vmid = sum(1 for i in range(o.degree) if rho[i] == sx[i])
        hmid = sum(1 for i in range(o.degree) if rho[i] == sy[i])
        # a vertex class C is fixed iff the upper-right corner of rho(i),
        # re-read as a lower-left corner, lands back in C
        fixed = [None] * nclasses
        for i in range(o.degree):
            hit = vclass[sy[sx[rho[i]]]] == vclass[i]
            c = vclass[i]
            assert fixed[c] in (None, hit), "inconsistent vertex transport"
            fixed[c] = hit
        out.append(MinusOneLift(rho, centers, vmid, hmid, sum(fixed)))
    return out


def quotient_by_translations(o, group):
    """Quotient origami by a group of translations acting freely on squares."""
    d = o.degree
    ident = perms.identity(d)
    for t in group:
        if t != ident and any(t[i] == i for i in range(d)):
            raise NotFreeAction("translation with a fixed square")
    orbit_of = [-1] * d
    norb = 0
    for i in range(d):
        if orbit_of[i] < 0:
            for t in group:
                orbit_of[t[i]] = norb
            norb += 1
    rep = [-1] * norb
    for i in range(d - 1, -1, -1):
        rep[orbit_of[i]] = i
    qx = tuple(orbit_of[o.sigma_x[rep[k]]] for k in range(norb))
    qy = tuple(orbit_of[o.sigma_y[rep[k]]] for k in range(norb))
    return make_origami(qx, qy)


def to_json_dict(o):
    return {"degree": o.degree,
            "sigma_x": list(o.sigma_x),
            "sigma_y": list(o.sigma_y)}


def from_json_dict(d):
    o = Origami(tuple(d["sigma_x"]), tuple(d["sigma_y"]))
    if o.degree != d.get("degree", o.degree):
        raise LengthMismatch("declared degree does not match permutation length")
    return validate(o)
