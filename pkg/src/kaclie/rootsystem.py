"""Root systems of the simple Lie algebras and their (twisted) affine diagrams.

Roots are integer vectors in the basis of simple roots.  Numbering is the
Bourbaki one except for F4 and G2, where the short simple roots come first:
F4 has marks (2, 4, 3, 2) and G2 has marks (3, 2).  The affine node 0 is
always listed first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

FAMILIES = "ABCDEFG"

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        f, l = self.family, self.rank
        if f not in FAMILIES:
            raise ValueError(f"unknown family {f!r}")
        ok = {
            "E": l in (6, 7, 8),
            "F": l == 4,
            "G": l == 2,
        }.get(f, l >= _MIN_RANK.get(f, 1))
        if not ok:
            raise ValueError(f"invalid rank {l} for family {f}")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "SimpleType":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", text)
        if not m:
            raise ValueError(f"cannot parse simple type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    @property
    def dim(self) -> int:
        f, l = self.family, self.rank
        if f == "A":
            return l * (l + 2)
        if f in "BC":
            return l * (2 * l + 1)
        if f == "D":
            return l * (2 * l - 1)
        return {("E", 6): 78, ("E", 7): 133, ("E", 8): 248, ("F", 4): 52, ("G", 2): 14}[(f, l)]


def inner_products(t: SimpleType) -> tuple[tuple[int, ...], ...]:
    """Gram matrix (alpha_i, alpha_j) with short roots of squared length 2."""
    f, l = t.family, t.rank
    B = [[0] * l for _ in range(l)]
    edges: list[tuple[int, int, int]] = []
    lengths = [2] * l
    if f == "A":
        edges = [(i, i + 1, -1) for i in range(l - 1)]
    elif f == "B":
        lengths = [4] * (l - 1) + [2]
        edges = [(i, i + 1, -2) for i in range(l - 1)]
    elif f == "C":
        lengths = [2] * (l - 1) + [4]
        edges = [(i, i + 1, -1) for i in range(l - 2)] + [(l - 2, l - 1, -2)]
    elif f == "D":
        edges = [(i, i + 1, -1) for i in range(l - 2)] + [(l - 3, l - 1, -1)]
    elif f == "E":
        edges = [(0, 2, -1), (2, 3, -1), (1, 3, -1)] + [(i, i + 1, -1) for i in range(3, l - 1)]
    elif f == "F":
        lengths = [2, 2, 4, 4]
        edges = [(0, 1, -1), (1, 2, -2), (2, 3, -2)]
    elif f == "G":
        lengths = [2, 6]
        edges = [(0, 1, -3)]
    for i in range(l):
        B[i][i] = lengths[i]
    for i, j, v in edges:
        B[i][j] = B[j][i] = v
    return tuple(tuple(r) for r in B)


def cartan_from_gram(B) -> tuple[tuple[int, ...], ...]:
    n = len(B)
    A = []
    for i in range(n):
        row = []
        for j in range(n):
            q = Fraction(2 * B[i][j]) / B[i][i]
            if q.denominator != 1:
                raise ValueError("Gram matrix does not give an integral Cartan matrix")
            row.append(int(q))
        A.append(tuple(row))
    return tuple(A)


def positive_root_closure(cartan) -> list[tuple[int, ...]]:
    """Positive roots of the root system with the given Cartan matrix.

    Uses root strings: if p is maximal with gamma - p*alpha_i a root, then
    gamma + alpha_i is a root iff p - <gamma, alpha_i^vee> > 0.
    """
    l = len(cartan)
    simple = [tuple(int(i == j) for j in range(l)) for i in range(l)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for g in layer:
            for i in range(l):
                pairing = sum(g[k] * cartan[i][k] for k in range(l))
                p = 0
                cur = list(g)
                while True:
                    cur[i] -= 1
                    if tuple(cur) in roots:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    up = list(g)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(roots, key=lambda r: (sum(r), r))


@dataclass(frozen=True)
class RootSystem:
    type: SimpleType
    cartan: tuple[tuple[int, ...], ...]
    gram: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    highest_root: tuple[int, ...]
    exponents: tuple[int, ...]
    coxeter_number: int
    _index: dict = field(default_factory=dict, repr=False, compare=False, hash=False)

    @property
    def rank(self) -> int:
        return self.type.rank

    @property
    def marks(self) -> tuple[int, ...]:
        return self.highest_root

    @property
    def roots(self) -> tuple[tuple[int, ...], ...]:
        return self.positive_roots + tuple(tuple(-c for c in r) for r in self.positive_roots)

    @property
    def dim(self) -> int:
        return 2 * len(self.positive_roots) + self.rank

    def is_root(self, g) -> bool:
        if not self._index:
            for k, r in enumerate(self.roots):
                self._index[r] = k
        return tuple(g) in self._index

    def pairing(self, g, i: int) -> int:
        """<gamma, alpha_i^vee> for 0-based simple index i."""
        return sum(c * a for c, a in zip(g, self.cartan[i]))

    def inner(self, x, y) -> int:
        B = self.gram
        l = len(B)
        return sum(x[i] * B[i][j] * y[j] for i in range(l) if x[i] for j in range(l) if y[j])


def exponents_from_heights(heights) -> tuple[int, ...]:
    counts: dict[int, int] = {}
    for h in heights:
        counts[h] = counts.get(h, 0) + 1
    top = max(counts, default=0)
    exps = []
    for k in range(1, top + 1):
        exps += [k] * (counts.get(k, 0) - counts.get(k + 1, 0))
    return tuple(sorted(exps))


@lru_cache(maxsize=None)
def build_root_system(t: SimpleType) -> RootSystem:
    B = inner_products(t)
    A = cartan_from_gram(B)
    pos = positive_root_closure(A)
    top = pos[-1]
    if sum(top) != max(sum(r) for r in pos) or sum(1 for r in pos if sum(r) == sum(top)) != 1:
        raise AssertionError("highest root is not unique")
    exps = exponents_from_heights(sum(r) for r in pos)
    rs = RootSystem(t, A, B, tuple(pos), top, exps, sum(top) + 1)
    if rs.dim != t.dim or len(exps) != t.rank or sum(exps) != len(pos):
        raise AssertionError(f"root closure failed for {t}")
    return rs


def exponents_of(rs: RootSystem) -> list[int]:
    return list(exponents_from_heights(sum(r) for r in rs.positive_roots))


def identify_components(cartan) -> list[SimpleType]:
    """Simple types of the connected components of a Cartan matrix."""
    n = len(cartan)
    seen: set[int] = set()
    comps = []
    for s in range(n):
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j not in seen and cartan[i][j] != 0:
                    seen.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
    out = []
    for comp in comps:
        sub = [[cartan[i][j] for j in comp] for i in comp]
        out.append(_identify_connected(sub))
    return sorted(out)


def _identify_connected(A) -> SimpleType:
    l = len(A)
    nroots = 2 * len(positive_root_closure(A))
    entries = {A[i][j] for i in range(l) for j in range(l) if i != j}
    if -3 in entries:
        return SimpleType("G", 2)
    if -2 in entries:
        if l == 2:
            return SimpleType("B", 2)
        if nroots == 48 and l == 4:
            return SimpleType("F", 4)
        # short simple roots are the i with A_ij = -2 for some j
        d = _symmetrizer(A)
        short = sum(1 for x in d if x == min(d))
        return SimpleType("B", l) if short == 1 else SimpleType("C", l)
    if l == 1 or nroots == l * (l + 1):
        return SimpleType("A", l)
    if nroots == 2 * l * (l - 1):
        return SimpleType("D", l)
    return SimpleType("E", l)


def _symmetrizer(A) -> list[Fraction]:
    l = len(A)
    d: list[Fraction | None] = [None] * l
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(l):
            if A[i][j] and d[j] is None:
                # d_i A_ij = d_j A_ji
                d[j] = d[i] * A[i][j] / A[j][i]
                stack.append(j)
    return d  # type: ignore[return-value]


# -- affine diagrams ---------------------------------------------------------

def _sigma_orbits(t: SimpleType, twist: int) -> tuple[tuple[int, ...], ...]:
    """sigma-orbits of simple roots (1-based) in the order nu_1, ..., nu_r."""
    f, l = t.family, t.rank
    if twist == 1:
        return tuple((i,) for i in range(1, l + 1))
    if twist == 2 and f == "A" and l >= 2:
        if l % 2 == 0:
            return tuple((i, l + 1 - i) for i in range(1, l // 2 + 1))
        r = (l + 1) // 2
        return tuple((i, l + 1 - i) for i in range(1, r)) + ((r,),)
    if twist == 2 and f == "D":
        return tuple((i,) for i in range(1, l - 1)) + ((l - 1, l),)
    if twist == 2 and (f, l) == ("E", 6):
        return ((1, 6), (3, 5), (4,), (2,))
    if twist == 3 and (f, l) == ("D", 4):
        return ((1, 3, 4), (2,))
    raise ValueError(f"unsupported pair ({t}, {twist})")


def simple_root_permutation(t: SimpleType, twist: int) -> tuple[int, ...]:
    """sigma on simple roots as a 0-based permutation tuple."""
    perm = list(range(t.rank))
    for orb in _sigma_orbits(t, twist):
        if len(orb) == 1:
            continue
        if twist == 3:
            a, b, c = orb
            perm[a - 1], perm[b - 1], perm[c - 1] = b - 1, c - 1, a - 1
        else:
            a, b = orb
            perm[a - 1], perm[b - 1] = b - 1, a - 1
    return tuple(perm)


def apply_root_permutation(perm, g) -> tuple[int, ...]:
    out = [0] * len(g)
    for i, c in enumerate(g):
        out[perm[i]] = c
    return tuple(out)


def fixed_roots_odd(t: SimpleType, twist: int) -> bool:
    """Whether sigma acts by -1 on the root vectors of sigma-fixed roots.

    This happens exactly for the diagram symmetry of A_{2r}.
    """
    return twist == 2 and t.family == "A" and t.rank % 2 == 0


@dataclass(frozen=True)
class AffineDiagram:
    base: SimpleType
    twist: int
    marks: tuple[int, ...]
    cartan: tuple[tuple[int, ...], ...]
    symmetry_group: tuple[tuple[int, ...], ...]
    orbits: tuple[tuple[int, ...], ...]
    delta: tuple[int, ...]

    @property
    def node_count(self) -> int:
        return len(self.marks)

    @property
    def name(self) -> str:
        return str(self.base) + (f"^{self.twist}" if self.twist > 1 else "")

    def order_of(self, labels) -> int:
        return self.twist * sum(a * p for a, p in zip(self.marks, labels))

    def restrict(self, g) -> tuple[int, ...]:
        """Coordinates of the restriction of a root to the sigma-fixed torus."""
        return tuple(sum(g[i - 1] for i in orb) for orb in self.orbits)


def diagram_symmetries(A) -> tuple[tuple[int, ...], ...]:
    """All node permutations preserving the Cartan matrix (backtracking)."""
    n = len(A)
    found = []

    def extend(img: list[int]):
        k = len(img)
        if k == n:
            found.append(tuple(img))
            return
        for c in range(n):
            if c in img or A[c][c] != A[k][k]:
                continue
            if all(A[k][j] == A[c][img[j]] and A[j][k] == A[img[j]][c] for j in range(k)):
                extend(img + [c])

    extend([])
    return tuple(sorted(found))


@lru_cache(maxsize=None)
def affine_diagram(t: SimpleType, twist: int = 1) -> AffineDiagram:
    rs = build_root_system(t)
    orbits = _sigma_orbits(t, twist)
    B = rs.gram
    if twist == 1:
        delta = rs.highest_root
        vecs = [tuple(-c for c in delta)] + [tuple(int(i == j) for j in range(t.rank)) for i in range(t.rank)]
        gram = [[Fraction(rs.inner(x, y)) for y in vecs] for x in vecs]
    else:
        perm = simple_root_permutation(t, twist)
        odd = fixed_roots_odd(t, twist)
        cands = []
        for g in rs.positive_roots:
            fixed = apply_root_permutation(perm, g) == g
            if not fixed or odd:
                cands.append(tuple(sum(g[i - 1] for i in orb) for orb in orbits))
        top = max(sum(c) for c in cands)
        tops = {c for c in cands if sum(c) == top}
        if len(tops) != 1:
            raise AssertionError("highest weight of the odd part is not unique")
        delta = tops.pop()
        r = len(orbits)
        nu_gram = [[Fraction(sum(B[i - 1][j - 1] for i in oa for j in ob), len(oa) * len(ob))
                    for ob in orbits] for oa in orbits]
        vecs = [tuple(-c for c in delta)] + [tuple(int(i == j) for j in range(r)) for i in range(r)]
        gram = [[sum(x[a] * nu_gram[a][b] * y[b] for a in range(r) for b in range(r)) for y in vecs]
                for x in vecs]
    n = len(vecs)
    A = []
    for i in range(n):
        row = []
        for j in range(n):
            q = 2 * gram[i][j] / gram[i][i]
            if q.denominator != 1:
                raise AssertionError("non-integral affine Cartan entry")
            row.append(int(q))
        A.append(tuple(row))
    marks = (1,) + tuple(delta)
    for row in A:
        if sum(a * k for a, k in zip(row, marks)) != 0:
            raise AssertionError("marks are not a null vector of the affine Cartan matrix")
    return AffineDiagram(t, twist, marks, tuple(A), diagram_symmetries(A), orbits, tuple(delta))


def parse_affine(text: str) -> AffineDiagram:
    m = re.fullmatch(r"\s*([A-Ga-g]\d+)\s*(?:\^\s*(\d))?\s*", text)
    if not m:
        raise ValueError(f"cannot parse diagram type {text!r}")
    return affine_diagram(SimpleType.parse(m.group(1)), int(m.group(2) or 1))


def supported_twists(t: SimpleType) -> tuple[int, ...]:
    tw = [1]
    if (t.family == "A" and t.rank >= 2) or t.family == "D" or (t.family, t.rank) == ("E", 6):
        tw.append(2)
    if (t.family, t.rank) == ("D", 4):
        tw.append(3)
    return tuple(tw)


def all_types(max_rank: int, exceptional: bool = True) -> list[SimpleType]:
    out = []
    for f, l in product(FAMILIES, range(1, max_rank + 1)):
        try:
            st = SimpleType(f, l)
        except ValueError:
            continue
        if st.family in "EFG" and not exceptional:
            continue
        out.append(st)
    return out
