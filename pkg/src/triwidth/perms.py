"""Permutations of {0,1,2,3}, used as face gluing maps."""


class Permutation4:
    """An element of S_4, stored as its image tuple.

    perm[i] is the image of i.  Composition is (p * q)(i) = p(q(i)).
    """

    __slots__ = ("image",)

    def __init__(self, image):
        image = tuple(image)
        if sorted(image) != [0, 1, 2, 3]:
            raise ValueError(f"not a permutation of 0..3: {image!r}")
        self.image = image

    @staticmethod
    def identity():
        return Permutation4((0, 1, 2, 3))

    @staticmethod
    def transposition(a, b):
        img = [0, 1, 2, 3]
        img[a], img[b] = img[b], img[a]
        return Permutation4(img)

    def __call__(self, i):
        return self.image[i]

    def __mul__(self, other):
        return Permutation4(tuple(self.image[other.image[i]] for i in range(4)))

    def inverse(self):
        inv = [0] * 4
        for i in range(4):
            inv[self.image[i]] = i
        return Permutation4(tuple(inv))

    def is_identity(self):
        return self.image == (0, 1, 2, 3)

    def sign(self):
        """+1 for even permutations, -1 for odd."""
        inversions = 0
        for i in range(4):
            for j in range(i + 1, 4):
                if self.image[i] > self.image[j]:
                    inversions += 1
        return -1 if inversions % 2 else 1

    def __eq__(self, other):
        return isinstance(other, Permutation4) and self.image == other.image

    def __hash__(self):
        return hash(self.image)

    def __repr__(self):
        return f"Permutation4({self.image})"


ALL_PERMS = tuple(
    Permutation4((a, b, c, d))
    for a in range(4)
    for b in range(4)
    for c in range(4)
    for d in range(4)
    if len({a, b, c, d}) == 4
)
