"""Exact 2x2 integer matrices of determinant 1 and words in S, T.

S = (0 -1; 1 0), T = (1 1; 0 1).  Words are sequences over the letters
"S", "S^-1", "T", "T^-1"; a word evaluates to the product of its letter
matrices read left to right, so when acting the rightmost letter acts
first (matrices act on the left).
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class MatZ:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant is not 1: {self}")

    def __mul__(self, other):
        return MatZ(self.a * other.a + self.b * other.c,
                    self.a * other.b + self.b * other.d,
                    self.c * other.a + self.d * other.c,
                    self.c * other.b + self.d * other.d)

    def inverse(self):
        return MatZ(self.d, -self.b, -self.c, self.a)

    def entries(self):
        return (self.a, self.b, self.c, self.d)


I = MatZ(1, 0, 0, 1)
S = MatZ(0, -1, 1, 0)
T = MatZ(1, 1, 0, 1)
NEG_I = MatZ(-1, 0, 0, -1)

LETTERS = ("S", "S^-1", "T", "T^-1")
LETTER_MATRIX = {"S": S, "S^-1": S.inverse(), "T": T, "T^-1": T.inverse()}


def word_to_matrix(word):
    m = I
    for letter in word:
        m = m * LETTER_MATRIX[letter]
    return m


def decompose_word(m):
    """A word in S, T whose product is exactly m (Euclid on the first column).

    Left-multiplications by T-powers reduce |a| against c, S swaps the
    column entries; a final S^2 absorbs the sign -1.
    """
    a, b, c, d = m.entries()
    ops = []  # left factors applied, in application order
    while c != 0:
        q = a // c
        a, b = a - q * c, b - q * d  # T^-q
        ops.append(("T", -q))
        a, b, c, d = -c, -d, a, b  # S
        ops.append(("S", 1))
    if a == 1:  # (1 b; 0 1) = T^b
        ops.append(("T", -b))
    else:  # (-1 b; 0 -1); S^2 = -I brings it to T^-b
        ops.append(("S", 2))
        ops.append(("T", b))
    # ops reduce m to I from the left, so m = prod of inverses in ops order
    word = []
    for kind, e in ops:
        if kind == "T":
            word.extend(["T" if -e > 0 else "T^-1"] * abs(e))
        else:
            word.extend(["S^-1"] * e)
    assert word_to_matrix(word) == m
    return word
