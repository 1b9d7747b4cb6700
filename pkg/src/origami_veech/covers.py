"""The quaternion origami W and the torsion-point origamis D_P.

D_P is a degree-2n^2 origami: a double cover of the n^2-square torus
branched over the four-point configuration S of a TorsionConfig.  The
cover is encoded by an edge cocycle with values in Z/2 on the n x n grid:
lambda_x(a,b) flips the sheet when crossing the right edge of square
(a,b), lambda_y(a,b) when crossing its top edge.  The four monodromy
choices (flavors) are the parities of the sheet flip along x^n and y^n.
"""

from dataclasses import dataclass

from . import origami, sl2
from .modular import (NotGeneralPosition, NotOdd, general_position,
                      pointed_equivalent, predicted_veech_action,
                      sl2_group_order, stab_of_config)
from .orbit import veech_action, veech_contains
from .origami import make_origami, minus_one_lifts


class Unsolvable(ValueError):
    """The cocycle linear system is inconsistent (cannot happen for a
    valid TorsionConfig; kept as a guard)."""


@dataclass(frozen=True)
class Flavor:
    eps_x: int
    eps_y: int

    def __post_init__(self):
        if self.eps_x not in (0, 1) or self.eps_y not in (0, 1):
            raise ValueError("flavor entries must be 0 or 1")


# mu_1 .. mu_4 in the fixed order
FLAVORS = (Flavor(1, 1), Flavor(0, 0), Flavor(1, 0), Flavor(0, 1))


@dataclass(frozen=True)
class EdgeCocycle:
    n: int
    lambda_x: tuple  # lambda_x[a][b]
    lambda_y: tuple


# ---------------------------------------------------------------------------
# the quaternion origami W

_QUAT = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")

_QMUL = {}  # multiplication table on (sign, letter) pairs


def _qfill():
    base = {("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"),
            ("1", "k"): (1, "k"), ("i", "1"): (1, "i"), ("j", "1"): (1, "j"),
            ("k", "1"): (1, "k"), ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"),
            ("k", "k"): (-1, "1"), ("i", "j"): (1, "k"), ("j", "i"): (-1, "k"),
            ("j", "k"): (1, "i"), ("k", "j"): (-1, "i"), ("k", "i"): (1, "j"),
            ("i", "k"): (-1, "j")}
    for name_a in _QUAT:
        for name_b in _QUAT:
            sa, la = (1, name_a) if not name_a.startswith("-") else (-1, name_a[1:])
            sb, lb = (1, name_b) if not name_b.startswith("-") else (-1, name_b[1:])
            s, l = base[(la, lb)]
            s *= sa * sb
            _QMUL[(name_a, name_b)] = l if s == 1 else "-" + l


_qfill()


def build_w():
    """W: squares are the 8 quaternions; x glues by right multiplication
    by i, y by right multiplication by j."""
    idx = {name: k for k, name in enumerate(_QUAT)}
    sx = tuple(idx[_QMUL[(g, "i")]] for g in _QUAT)
    sy = tuple(idx[_QMUL[(g, "j")]] for g in _QUAT)
    return make_origami(sx, sy)


# ---------------------------------------------------------------------------
# torsion-point origamis D_P

def solve_cocycle(cfg, flavor, reverse_vars=False):
    """Solve for the edge cocycle of (cfg, flavor) over the two-element field.

    Unknowns are lambda_x(a,b) and lambda_y(a,b).  Constraints: around
    each grid vertex (a,b) the four incident edge flips sum to the
    multiplicity of (a,b) in S; the flips along row 0 sum to eps_x and
    along column 0 to eps_y.  reverse_vars picks another pivot order (for
    the solution-independence tests).
    """
    n = cfg.n
    nn = n * n
    nvars = 2 * nn

    def vx(a, b):
        return (a % n) * n + (b % n)

    def vy(a, b):
        return nn + (a % n) * n + (b % n)

    mult = {}
    for pt in cfg.points():
        mult[pt] = mult.get(pt, 0) + 1

    rows = []  # (bitmask over variables, rhs bit)
    for a in range(n):
        for b in range(n):
            mask = (1 << vx(a - 1, b - 1)) ^ (1 << vy(a, b - 1)) \
                 ^ (1 << vx(a - 1, b)) ^ (1 << vy(a - 1, b - 1))
            rows.append((mask, mult.get((a, b), 0) % 2))
    mask = 0
    for a in range(n):
        mask ^= 1 << vx(a, 0)
    rows.append((mask, flavor.eps_x))
    mask = 0
    for b in range(n):
        mask ^= 1 << vy(0, b)
    rows.append((mask, flavor.eps_y))

    cols = list(range(nvars))
    if reverse_vars:
        cols.reverse()

    # Gaussian elimination over GF(2), free variables set to 0
    pivots = []  # (column, row mask, rhs)
    for mask, rhs in rows:
        for col, pmask, prhs in pivots:
            if mask >> col & 1:
                mask ^= pmask
                rhs ^= prhs
        if mask == 0:
            if rhs:
                raise Unsolvable("inconsistent cocycle constraints")
            continue
        col = next(c for c in cols if mask >> c & 1)
        pivots.append((col, mask, rhs))
    solution = [0] * nvars
    for col, mask, rhs in reversed(pivots):
        val = rhs
        for c in range(nvars):
            if c != col and mask >> c & 1:
                val ^= solution[c]
        solution[col] = val

    lx = tuple(tuple(solution[vx(a, b)] for b in range(n)) for a in range(n))
    ly = tuple(tuple(solution[vy(a, b)] for b in range(n)) for a in range(n))
    cocycle = EdgeCocycle(n, lx, ly)
    _check_cocycle(cfg, flavor, cocycle)
    return cocycle


def _check_cocycle(cfg, flavor, cocycle):
    n = cocycle.n
    lx, ly = cocycle.lambda_x, cocycle.lambda_y
    mult = {}
    for pt in cfg.points():
        mult[pt] = mult.get(pt, 0) + 1
    for a in range(n):
        for b in range(n):
            total = (lx[(a - 1) % n][(b - 1) % n] + ly[a][(b - 1) % n]
                     + lx[(a - 1) % n][b] + ly[(a - 1) % n][(b - 1) % n])
            assert total % 2 == mult.get((a, b), 0) % 2
    assert sum(lx[a][0] for a in range(n)) % 2 == flavor.eps_x
    assert sum(ly[0][b] for b in range(n)) % 2 == flavor.eps_y


def _square_index(n, a, b, s):
    return s * n * n + (b % n) * n + (a % n)


def build_dp(cfg, flavor, reverse_vars=False):
    """The origami D_P: squares (a,b,s) with a,b in Z/n and sheet s in Z/2."""
    n = cfg.n
    cocycle = solve_cocycle(cfg, flavor, reverse_vars)
    lx, ly = cocycle.lambda_x, cocycle.lambda_y
    d = 2 * n * n
    sx, sy = [0] * d, [0] * d
    for a in range(n):
        for b in range(n):
            for s in (0, 1):
                i = _square_index(n, a, b, s)
                sx[i] = _square_index(n, a + 1, b, s ^ lx[a][b])
                sy[i] = _square_index(n, a, b + 1, s ^ ly[a][b])
    return make_origami(sx, sy)


def branch_vertices(cfg, o):
    """Grid vertices under the 2-cycles of the commutator of a D_P origami."""
    n = cfg.n
    from .perms import cycles
    out = []
    for cyc in cycles(origami.commutator(o)):
        if len(cyc) > 1:
            i = cyc[0] % (n * n)
            out.append((i % n, i // n))
    return sorted(out)


def is_hyperelliptic(o):
    """True iff some lift of -I has 8 fixed points."""
    return any(l.total_fixed == 8 for l in minus_one_lifts(o))


def classify_flavors(cfg):
    """Per-flavor report: lift fixed-point totals and hyperellipticity.

    The "distinguished" flavor is the non-hyperelliptic one whose lift of
    -I fixes two vertices (over the origin) and two square centers (over
    the half-integer 2-torsion point (n/2, n/2)); the remaining two
    flavors fix edge midpoints instead, which conjugates their Veech
    groups away from the mod-2 condition of the verified theorem.
    """
    if cfg.n % 2 == 0:
        raise NotOdd("flavor classification requires odd n")
    reports = []
    for flavor in FLAVORS:
        o = build_dp(cfg, flavor)
        lifts = minus_one_lifts(o)
        totals = sorted(l.total_fixed for l in lifts)
        distinguished = any(l.total_fixed == 4 and l.fixed_vertices == 2
                            and l.fixed_centers == 2 for l in lifts)
        reports.append({"flavor": (flavor.eps_x, flavor.eps_y),
                        "lift_totals": totals,
                        "hyperelliptic": 8 in totals,
                        "distinguished": distinguished})
    assert sum(r["hyperelliptic"] for r in reports) == 1
    assert sum(r["distinguished"] for r in reports) == 1
    return reports


def verify_theorem(cfg):
    """End-to-end check of the predicted Veech group for a configuration.

    Returns a report with the computed index of the distinguished
    (non-hyperelliptic) flavor, the predicted index, pointed equivalence
    of the two coset actions, the index-3 identity and spot membership
    checks.
    """
    if cfg.n % 2 == 0:
        raise NotOdd("n must be odd")
    if not general_position(cfg):
        raise NotGeneralPosition(f"p^2 + q^2 is not a unit mod {cfg.n}")
    flavor_reports = classify_flavors(cfg)
    chosen = next(f for f in flavor_reports if f["distinguished"])
    o = build_dp(cfg, Flavor(*chosen["flavor"]))
    action = veech_action(o)
    predicted = predicted_veech_action(cfg)
    stab = stab_of_config(cfg)
    index3 = 3 * sl2_group_order(cfg.n) // len(stab)
    membership = {"-I in Gamma": veech_contains(action, sl2.NEG_I),
                  "T in Gamma": veech_contains(action, sl2.T)}
    ok = (action.size == predicted.size
          and pointed_equivalent(action, predicted)
          and action.size == index3
          and membership["-I in Gamma"] and not membership["T in Gamma"])
    return {"config": {"n": cfg.n, "p": cfg.p, "q": cfg.q},
            "chosen_flavor": chosen["flavor"],
            "flavor_reports": flavor_reports,
            "computed_index": action.size,
            "predicted_index": predicted.size,
            "pointed_equivalent": pointed_equivalent(action, predicted),
            "index3_check": action.size == index3,
            "membership_checks": membership,
            "pass": ok}
