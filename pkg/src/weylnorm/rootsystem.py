"""Cartan matrices for the simple types, root generation by reflection
closure, and the Weyl group as a permutation group on roots.

Node numbering follows Bourbaki.  For the non-simply-laced types the arrow
orientation is fixed so that the rank-2 subconfigurations come out as
a[1][0] = -2 for B2 and a[1][0] = -3 for G2 (0-based indices).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

Root = tuple[int, ...]

COXETER_M = {0: 2, 1: 3, 2: 4, 3: 6}


@dataclass(frozen=True)
class CartanMatrix:
    type_label: str
    rank: int
    a: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.rank
        if len(self.a) != n or any(len(row) != n for row in self.a):
            raise ValueError("Cartan matrix shape does not match rank")
        for i in range(n):
            if self.a[i][i] != 2:
                raise ValueError(f"diagonal entry a[{i}][{i}] must be 2")
            for j in range(n):
                if i == j:
                    continue
                if self.a[i][j] > 0:
                    raise ValueError(f"off-diagonal a[{i}][{j}] must be <= 0")
                if (self.a[i][j] == 0) != (self.a[j][i] == 0):
                    raise ValueError(f"zero pattern not symmetric at ({i},{j})")
                if self.a[i][j] * self.a[j][i] not in (0, 1, 2, 3):
                    raise ValueError(f"a[{i}][{j}]*a[{j}][{i}] out of range")

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.a[ij[0]][ij[1]]

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.a]


def build_cartan(type_label: str, rank: int) -> CartanMatrix:
    """Standard Cartan matrix of a simple type in Bourbaki ordering."""
    t = type_label.upper()
    bounds = {"A": 1, "B": 2, "C": 2, "D": 4, "F": 4, "G": 2}
    if t not in "ABCDEFG" or len(t) != 1:
        raise ValueError(f"type must be one of A..G, got {type_label!r}")
    if t == "E":
        if rank not in (6, 7, 8):
            raise ValueError(f"rank {rank} invalid for type E (need 6, 7 or 8)")
    elif t in ("F", "G"):
        if rank != bounds[t]:
            raise ValueError(f"rank {rank} invalid for type {t} (need {bounds[t]})")
    elif rank < bounds[t]:
        raise ValueError(f"rank {rank} invalid for type {t} (need >= {bounds[t]})")

    n = rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if t in ("A", "B", "C"):
        for i in range(n - 1):
            link(i, i + 1)
        if t == "B" and n >= 2:
            a[n - 1][n - 2] = -2
        if t == "C" and n >= 2:
            a[n - 2][n - 1] = -2
    elif t == "D":
        for i in range(n - 3):
            link(i, i + 1)
        link(n - 3, n - 2)
        link(n - 3, n - 1)
    elif t == "E":
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for x, y in zip(chain, chain[1:]):
            link(x, y)
        link(1, 3)
    elif t == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif t == "G":
        link(0, 1, -1, -3)

    return CartanMatrix(t, n, tuple(tuple(row) for row in a))


def coxeter_m(cartan: CartanMatrix, i: int, j: int) -> int:
    """Order of s_i s_j: 2, 3, 4 or 6 depending on a_ij * a_ji."""
    if i == j:
        raise ValueError("coxeter_m requires distinct indices")
    return COXETER_M[cartan[i, j] * cartan[j, i]]


def weyl_reflect_cartan(cartan: CartanMatrix, i: int, h: Root) -> Root:
    """Reflect a vector written in the simple coroot basis: h_j -> h_j - a_ji h_i."""
    coeff = sum(h[j] * cartan[j, i] for j in range(cartan.rank))
    out = list(h)
    out[i] -= coeff
    return tuple(out)


def symmetrizers(cartan: CartanMatrix) -> tuple[int, ...]:
    """Minimal positive integers d with d_i a_ij = d_j a_ji (root length squares / 2)."""
    n = cartan.rank
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if cartan[i, j] != 0 and i != j and d[j] is None:
                    d[j] = d[i] * cartan[i, j] / cartan[j, i]
                    stack.append(j)
    den = lcm(*(f.denominator for f in d))
    ints = [int(f * den) for f in d]
    g = ints[0]
    for v in ints[1:]:
        g = __import__("math").gcd(g, v)
    return tuple(v // g for v in ints)


def coform_weights(cartan: CartanMatrix) -> tuple[int, ...]:
    """Minimal positive integers s with a_ki s_i = a_ik s_k (coroot length squares / 2)."""
    d = symmetrizers(cartan)
    m = lcm(*d)
    return tuple(m // v for v in d)


class RootSystem:
    """Finite root system in simple-root coordinates, closed under reflections."""

    def __init__(self, cartan: CartanMatrix, roots: list[Root]):
        self.cartan = cartan
        self.roots: tuple[Root, ...] = tuple(sorted(roots, key=lambda r: (sum(r), r)))
        self.index = {r: k for k, r in enumerate(self.roots)}
        self.positives: tuple[int, ...] = tuple(
            k for k, r in enumerate(self.roots) if sum(r) > 0
        )
        self._check()

    def _check(self):
        if len(self.roots) % 2 != 0:
            raise ValueError("odd number of roots")
        for r in self.roots:
            neg = tuple(-x for x in r)
            if neg not in self.index:
                raise ValueError(f"root set not symmetric at {r}")
            for i in range(self.cartan.rank):
                if self.reflect(i, r) not in self.index:
                    raise ValueError(f"root set not closed under s_{i} at {r}")

    @property
    def rank(self) -> int:
        return self.cartan.rank

    def simple_root(self, i: int) -> Root:
        v = [0] * self.rank
        v[i] = 1
        return tuple(v)

    def positive_roots(self) -> list[Root]:
        return [self.roots[k] for k in self.positives]

    def is_root(self, v: Root) -> bool:
        return v in self.index

    def pairing(self, root: Root, i: int) -> int:
        """<root, alpha_i^vee> = sum_j c_j a_ij."""
        a = self.cartan.a
        return sum(a[i][j] * root[j] for j in range(self.rank))

    def reflect(self, i: int, root: Root) -> Root:
        c = self.pairing(root, i)
        out = list(root)
        out[i] -= c
        return tuple(out)

    def height(self, root: Root) -> int:
        return sum(root)

    def simple_reflection_perm(self, i: int) -> tuple[int, ...]:
        return tuple(self.index[self.reflect(i, r)] for r in self.roots)

    def coroot_coords(self, root: Root) -> tuple[int, ...]:
        """Coordinates of the coroot of `root` in the simple coroot basis."""
        n = self.rank
        d = symmetrizers(self.cartan)
        a = self.cartan.a

        def form(j: int) -> Fraction:
            # (alpha_j, root) with (alpha_j, alpha_l) = d_j a_jl
            return Fraction(sum(d[j] * a[j][l] * root[l] for l in range(n)))

        norm = sum(root[j] * form(j) for j in range(n))
        m = [2 * form(j) / norm for j in range(n)]
        # solve sum_i k_i a_ij = m_j
        rows = [[Fraction(a[i][j]) for i in range(n)] + [m[j]] for j in range(n)]
        for col in range(n):
            piv = next(r for r in range(col, n) if rows[r][col] != 0)
            rows[col], rows[piv] = rows[piv], rows[col]
            inv = 1 / rows[col][col]
            rows[col] = [x * inv for x in rows[col]]
            for r in range(n):
                if r != col and rows[r][col] != 0:
                    f = rows[r][col]
                    rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
        ks = [rows[j][n] for j in range(n)]
        if any(k.denominator != 1 for k in ks):
            raise ArithmeticError(f"coroot of {root} is not integral: {ks}")
        return tuple(int(k) for k in ks)


def generate_roots(cartan: CartanMatrix, max_roots: int = 10000) -> RootSystem:
    """Close the simple roots under all simple reflections."""
    n = cartan.rank
    seen: set[Root] = set()
    frontier: list[Root] = []
    for i in range(n):
        v = [0] * n
        v[i] = 1
        r = tuple(v)
        seen.add(r)
        frontier.append(r)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(n):
                s = tuple(
                    x - (sum(cartan[i, j] * r[j] for j in range(n)) if k == i else 0)
                    for k, x in enumerate(r)
                )
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
        if len(seen) > max_roots:
            raise ValueError("root closure exceeded the iteration cap; invalid Cartan data")
        frontier = nxt
    return RootSystem(cartan, sorted(seen))


def weyl_group_order(rs: RootSystem) -> int:
    """Order of the group generated by the simple reflections acting on roots."""
    gens = [rs.simple_reflection_perm(i) for i in range(rs.rank)]
    ident = tuple(range(len(rs.roots)))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(g[x] for x in p)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return len(seen)


def root_system(type_label: str, rank: int) -> RootSystem:
    return generate_roots(build_cartan(type_label, rank))
