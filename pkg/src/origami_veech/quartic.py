"""The plane quartic family x^4 + y^4 + z^4 + 2a x^2y^2 + 2b x^2z^2 + 2c y^2z^2.

Everything is exact: parameters are rationals, and quartic forms take
coefficients in a pluggable exact field — the rationals, Q(i), or
Q[t]/(t^4 - 8) (the Fermat identity needs a fourth root of 8).
"""

from dataclasses import dataclass
from fractions import Fraction


class BadModulus(ValueError):
    pass


class ExcludedValue(ValueError):
    pass


class NotInvertible(ValueError):
    pass


# ---------------------------------------------------------------------------
# exact field extensions Q[t]/(modulus)

class QuotientField:
    """Q[t]/(m(t)) for a monic irreducible m; elements are coefficient tuples."""

    def __init__(self, modulus, name="t"):
        self.modulus = tuple(Fraction(c) for c in modulus)
        assert self.modulus[-1] == 1
        self.degree = len(self.modulus) - 1
        self.name = name

    def element(self, coeffs):
        coeffs = [Fraction(c) for c in coeffs]
        while len(coeffs) > self.degree:  # reduce by the modulus
            lead = coeffs.pop()
            if lead:
                k = len(coeffs) - self.degree
                for i in range(self.degree):
                    coeffs[k + i] -= lead * self.modulus[i]
        coeffs += [Fraction(0)] * (self.degree - len(coeffs))
        return FieldElement(self, tuple(coeffs))

    def gen(self):
        return self.element([0, 1])

    def __call__(self, scalar):
        return self.element([Fraction(scalar)])


@dataclass(frozen=True)
class FieldElement:
    field: QuotientField
    coeffs: tuple

    def _lift(self, other):
        if isinstance(other, FieldElement):
            return other
        return self.field(other)

    def __add__(self, other):
        o = self._lift(other)
        return FieldElement(self.field, tuple(a + b for a, b in
                                              zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, FieldElement):
            return FieldElement(self.field,
                                tuple(a * Fraction(other) for a in self.coeffs))
        prod = [Fraction(0)] * (2 * self.field.degree - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return self.field.element(prod)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.coeffs == other.coeffs
        return self == self.field(other)

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)


QQ_I = QuotientField([1, 0, 1], name="i")          # t^2 + 1
QQ_ROOT8 = QuotientField([-8, 0, 0, 0, 1])         # t^4 - 8


# ---------------------------------------------------------------------------
# quartic forms

MONOMIALS = tuple((i, j, 4 - i - j) for i in range(5) for j in range(5 - i))


@dataclass(frozen=True)
class QuarticParams:
    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for f in ("a", "b", "c"):
            object.__setattr__(self, f, Fraction(getattr(self, f)))

    def triple(self):
        return (self.a, self.b, self.c)


def quartic_form(params, ring=None):
    """The form of Prop-style family parameters as a monomial -> coeff map."""
    lift = Fraction if ring is None else ring
    a, b, c = params.triple()
    f = {(4, 0, 0): lift(1), (0, 4, 0): lift(1), (0, 0, 4): lift(1),
         (2, 2, 0): lift(2 * a), (2, 0, 2): lift(2 * b), (0, 2, 2): lift(2 * c)}
    return {k: v for k, v in f.items() if v != 0 * v}


def _poly_mul(f, g):
    out = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c != 0 * c}


def _det3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def transform_quartic(f, m):
    """The pullback f(M v), expanded exactly; M a 3x3 invertible matrix."""
    det = _det3(m)
    if det == 0 * det:
        raise NotInvertible("matrix has determinant zero")
    subs = []
    for row in m:
        subs.append({e: c for e, c in
                     zip(((1, 0, 0), (0, 1, 0), (0, 0, 1)), row)
                     if c != 0 * c})
    out = {}
    for (i, j, k), coeff in f.items():
        term = {(0, 0, 0): coeff}
        for var, power in ((0, i), (1, j), (2, k)):
            for _ in range(power):
                term = _poly_mul(term, subs[var])
        for e, c in term.items():
            out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c != 0 * c}


def is_singular(params):
    """The family member is singular iff some parameter is +-1 or
    a^2 + b^2 + c^2 - 2abc - 1 = 0."""
    a, b, c = params.triple()
    if 1 in (a, -a, b, -b, c, -c):
        return True
    return a * a + b * b + c * c - 2 * a * b * c - 1 == 0


def singular_points_mod_q(params, q):
    """All projective points mod an odd prime q where f and its three
    partial derivatives vanish (Jacobi's criterion, brute force)."""
    if q < 3 or q % 2 == 0 or any(q % k == 0 for k in range(2, q)):
        raise BadModulus(f"{q} is not an odd prime")
    vals = []
    for x in params.triple():
        if x.denominator % q == 0:
            raise BadModulus(f"denominator of {x} vanishes mod {q}")
        vals.append(x.numerator * pow(x.denominator, -1, q) % q)
    a, b, c = vals

    def equations(x, y, z):
        f = (x ** 4 + y ** 4 + z ** 4 + 2 * a * x * x * y * y
             + 2 * b * x * x * z * z + 2 * c * y * y * z * z)
        fx = 4 * x ** 3 + 4 * a * x * y * y + 4 * b * x * z * z
        fy = 4 * y ** 3 + 4 * a * x * x * y + 4 * c * y * z * z
        fz = 4 * z ** 3 + 4 * b * x * x * z + 4 * c * y * y * z
        return (f % q, fx % q, fy % q, fz % q)

    points = [(1, y, z) for y in range(q) for z in range(q)]
    points += [(0, 1, z) for z in range(q)]
    points.append((0, 0, 1))
    return [pt for pt in points if equations(*pt) == (0, 0, 0, 0)]


# ---------------------------------------------------------------------------
# the parameter symmetry group L and its subgroup L_H

@dataclass(frozen=True)
class ParamSymmetry:
    perm: tuple   # slot permutation
    signs: tuple  # sign vector, product +1

    def __post_init__(self):
        assert sorted(self.perm) == [0, 1, 2]
        assert all(s in (1, -1) for s in self.signs)
        assert self.signs[0] * self.signs[1] * self.signs[2] == 1

    def apply(self, params):
        t = params.triple()
        return QuarticParams(*(self.signs[i] * t[self.perm[i]]
                               for i in range(3)))

    def compose(self, other):
        """self after other."""
        perm = tuple(other.perm[self.perm[i]] for i in range(3))
        signs = tuple(self.signs[i] * other.signs[self.perm[i]]
                      for i in range(3))
        return ParamSymmetry(perm, signs)

    def order(self):
        k, g = 1, self
        ident = ParamSymmetry((0, 1, 2), (1, 1, 1))
        while g != ident:
            g = g.compose(self)
            k += 1
        return k


def _closure(gens):
    ident = ParamSymmetry((0, 1, 2), (1, 1, 1))
    group = {ident}
    frontier = [ident]
    while frontier:
        g = frontier.pop()
        for h in gens:
            gh = g.compose(h)
            if gh not in group:
                group.add(gh)
                frontier.append(gh)
    return sorted(group, key=lambda g: (g.perm, g.signs))


def param_group_L():
    """The order-24 group generated by slot permutations and
    s: (a,b,c) -> (-a,-b,c); isomorphic to the symmetric group S4."""
    return _closure([ParamSymmetry((1, 0, 2), (1, 1, 1)),
                     ParamSymmetry((1, 2, 0), (1, 1, 1)),
                     ParamSymmetry((0, 1, 2), (-1, -1, 1))])


def subgroup_L_H():
    """The order-8 subgroup generated by the a<->b swap and the sign maps."""
    return _closure([ParamSymmetry((1, 0, 2), (1, 1, 1)),
                     ParamSymmetry((0, 1, 2), (-1, -1, 1)),
                     ParamSymmetry((0, 1, 2), (-1, 1, -1))])


def l_orbit(params, group=None):
    if group is None:
        group = param_group_L()
    return sorted({g.apply(params).triple() for g in group})


# ---------------------------------------------------------------------------
# Legendre parameter

def lambda_a_convert(value, direction):
    """a = (lambda+1)/(lambda-1) and its inverse (the map is an involution)."""
    value = Fraction(value)
    if direction == "to_a":
        if value in (0, 1):
            raise ExcludedValue("lambda must avoid {0, 1}")
        return (value + 1) / (value - 1)
    if direction == "to_lambda":
        if value in (1, -1):
            raise ExcludedValue("a must avoid {1, -1}")
        return (value + 1) / (value - 1)
    raise ValueError(f"unknown direction {direction!r}")


def legendre_orbit(lam):
    """The orbit {lambda, 1/lambda, 1-lambda, 1-1/lambda,
    lambda/(lambda-1), 1/(1-lambda)} of the anharmonic group."""
    lam = Fraction(lam)
    if lam in (0, 1):
        raise ExcludedValue("lambda must avoid {0, 1}")
    return sorted({lam, 1 / lam, 1 - lam, 1 - 1 / lam,
                   lam / (lam - 1), 1 / (1 - lam)})
