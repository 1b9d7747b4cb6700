"""Shared random generators for the test suite."""

from math import gcd

from origami_veech.origami import Origami, make_origami, validate
from origami_veech.perms import inv, is_transitive, mul
from origami_veech.sl2 import MatZ


def _extgcd(a, b):
    """(g, x, y) with a*x + b*y = g = gcd(a, b)."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def random_matz(rng, bound=10 ** 6):
    """A uniform-ish random determinant-1 integer matrix with entries of
    size up to roughly `bound`."""
    while True:
        a = rng.randint(-bound, bound)
        c = rng.randint(-bound, bound)
        if gcd(a, c) == 1:
            break
    g, x, y = _extgcd(a, c)
    assert g == 1 or g == -1
    # a*x + c*y = g; flip signs so a*d - c*b = 1
    d0, b0 = x * g, -y * g
    k = rng.randint(-5, 5)
    return MatZ(a, b0 + k * a, c, d0 + k * c)


def random_perm(rng, d):
    p = list(range(d))
    rng.shuffle(p)
    return tuple(p)


def random_origami(rng, d):
    """A random connected origami on d squares."""
    while True:
        sx, sy = random_perm(rng, d), random_perm(rng, d)
        if is_transitive((sx, sy), d):
            return make_origami(sx, sy)


def conjugate(o, rho):
    """The origami relabeled by rho (simultaneous conjugation)."""
    return validate(Origami(mul(mul(rho, o.sigma_x), inv(rho)),
                            mul(mul(rho, o.sigma_y), inv(rho))))
