"""The SL2(Z) action on origamis and Veech groups via orbit enumeration.

Action convention (frozen; see the relation tests):

    T . (sx, sy) = (sx, sy*sx)        S . (sx, sy) = (sy^-1, sx)

With the composition rule (p*q)(i) = p(q(i)) these satisfy, exactly as
maps on permutation pairs, S^2 . (sx, sy) = (sx^-1, sy^-1), S^4 = id and
(S T)^6 = id, so every SL2(Z) relation holds on the nose and the orbit
carries a genuine pointed coset action.
"""

from dataclasses import dataclass

from . import sl2
from .origami import Origami, canonical_key
from .perms import inv, is_transitive, mul


@dataclass(frozen=True)
class CosetAction:
    size: int
    perm_S: tuple
    perm_T: tuple
    base: int = 0

    def __post_init__(self):
        assert is_transitive((self.perm_S, self.perm_T), self.size)

    def letter_perm(self, letter):
        return {"S": self.perm_S, "S^-1": inv(self.perm_S),
                "T": self.perm_T, "T^-1": inv(self.perm_T)}[letter]

    def apply_word(self, word, node):
        """Act by a word in S, T; the rightmost letter acts first."""
        for letter in reversed(word):
            node = self.letter_perm(letter)[node]
        return node


@dataclass(frozen=True)
class OrbitGraph:
    keys: tuple          # canonical keys, discovery order; node 0 = start
    reps: tuple          # one representative Origami per node
    edges_S: tuple       # node index -> S-image node index
    edges_T: tuple


def act_generator(g, o):
    """Apply one of S, T, S^-1, T^-1 to an origami."""
    sx, sy = o.sigma_x, o.sigma_y
    if g == "T":
        return Origami(sx, mul(sy, sx))
    if g == "T^-1":
        return Origami(sx, mul(sy, inv(sx)))
    if g == "S":
        return Origami(inv(sy), sx)
    if g == "S^-1":
        return Origami(sy, inv(sx))
    raise ValueError(f"unknown generator {g!r}")


def act_word(word, o):
    for letter in reversed(word):
        o = act_generator(letter, o)
    return o


def orbit(o):
    """Breadth-first closure of {o} under S and T, deduplicated by key."""
    keys = [canonical_key(o)]
    reps = [o]
    index = {keys[0]: 0}
    edges = {"S": [], "T": []}
    frontier = 0
    while frontier < len(reps):
        cur = reps[frontier]
        for g in ("S", "T"):
            img = act_generator(g, cur)
            k = canonical_key(img)
            j = index.get(k)
            if j is None:
                j = len(reps)
                index[k] = j
                keys.append(k)
                reps.append(img)
            edges[g].append(j)
        frontier += 1
    return OrbitGraph(tuple(keys), tuple(reps),
                      tuple(edges["S"]), tuple(edges["T"]))


def coset_action(graph):
    return CosetAction(len(graph.keys), graph.edges_S, graph.edges_T)


def veech_action(o):
    """Pointed action of S, T on the orbit; Stab(node 0) is the Veech group."""
    return coset_action(orbit(o))


def veech_generators(action):
    """Schreier generators of the stabilizer of the base node.

    Spanning-tree representatives W_v satisfy (W_v).base = v; every
    non-tree edge v ->g u contributes the stabilizer element
    W_u^-1 * M_g * W_v.
    """
    n = action.size
    rep = [None] * n
    rep[action.base] = sl2.I
    queue = [action.base]
    tree = set()
    while queue:
        v = queue.pop(0)
        for g in ("S", "T", "S^-1", "T^-1"):
            u = action.letter_perm(g)[v]
            if rep[u] is None:
                rep[u] = sl2.LETTER_MATRIX[g] * rep[v]
                tree.add((v, g, u))
                queue.append(u)
    gens = []
    for v in range(n):
        for g in ("S", "T"):
            u = action.letter_perm(g)[v]
            if (v, g, u) in tree:
                continue
            gens.append(rep[u].inverse() * sl2.LETTER_MATRIX[g] * rep[v])
    return gens


def veech_contains(action, m):
    """Membership of an integer determinant-1 matrix in the stabilizer."""
    word = sl2.decompose_word(m)
    return action.apply_word(word, action.base) == action.base


def orbit_to_json(graph):
    return {"nodes": [k.hex() for k in graph.keys],
            "perm_S": list(graph.edges_S),
            "perm_T": list(graph.edges_T)}


def orbit_to_dot(graph):
    lines = ["digraph orbit {"]
    for i, k in enumerate(graph.keys):
        lines.append(f'  n{i} [label="{i}:{k.hex()[:12]}"];')
    for i, j in enumerate(graph.edges_S):
        lines.append(f'  n{i} -> n{j} [label="S"];')
    for i, j in enumerate(graph.edges_T):
        lines.append(f'  n{i} -> n{j} [label="T"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
