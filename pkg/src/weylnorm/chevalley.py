"""Exact matrix representations of the simple Lie algebras.

Root vectors are normalized the classical way: positive roots are processed
by increasing height, the pair (alpha, gamma - alpha) with alpha minimal
gets structure constant +(p+1), and every remaining constant of the same
height is forced by Jacobi identities, solved as exact linear systems.
The adjoint representation is assembled from these integers; defining
representations for types A and C use elementary matrices.  Everything is
re-verified against the Serre relations at construction time.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .cyclotomic import CycloNum, ExactMatrix, ONE, mat_to_json
from .rootsystem import (
    CartanMatrix,
    Root,
    RootSystem,
    build_cartan,
    coform_weights,
    generate_roots,
)


class RepresentationError(RuntimeError):
    """A constructed representation failed its own consistency checks."""


def commutator(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    return a * b - b * a


def _solve_linear(rows: list[list[Fraction]], nvars: int) -> list[Fraction]:
    """Solve an augmented system with a unique solution; raise otherwise."""
    rows = [row[:] for row in rows]
    pivots = []
    r = 0
    for col in range(nvars):
        piv = next((k for k in range(r, len(rows)) if rows[k][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][col] != 0:
                f = rows[k][col]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[r])]
        pivots.append(col)
        r += 1
    for k in range(r, len(rows)):
        if rows[k][nvars] != 0:
            raise RuntimeError("inconsistent linear system for structure constants")
    if len(pivots) != nvars:
        raise RuntimeError("underdetermined structure constants; ordering bug")
    sol = [Fraction(0)] * nvars
    for row_idx, col in enumerate(pivots):
        sol[col] = rows[row_idx][nvars]
    return sol


class StructureConstants:
    """Chevalley structure constants N(alpha, beta) for a root system."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self._order = {r: k for k, r in enumerate(sorted(rs.positive_roots(), key=lambda r: (sum(r), r)))}
        self._pos: dict[tuple[Root, Root], int] = {}
        self._solve_positive()
        self._mixed: dict[tuple[int, Root], int] = {}
        self._string_recursion()
        self._verify_magnitudes()
        self._root_ads: dict[Root, ExactMatrix] | None = None
        self._table: dict[tuple[Root, Root], int] | None = None

    # -- string bookkeeping ----------------------------------------------------

    def p_value(self, alpha: Root, beta: Root) -> int:
        """Largest k with beta - k*alpha still a root."""
        p = 0
        cur = tuple(b - a for a, b in zip(alpha, beta))
        while self.rs.is_root(cur):
            p += 1
            cur = tuple(c - a for a, c in zip(alpha, cur))
        return p

    # -- positive-positive constants ---------------------------------------------

    def n_pos(self, alpha: Root, beta: Root) -> int:
        """N(alpha, beta) for positive roots; 0 when alpha+beta is not a root."""
        s = tuple(a + b for a, b in zip(alpha, beta))
        if not self.rs.is_root(s):
            return 0
        if (alpha, beta) in self._pos:
            return self._pos[(alpha, beta)]
        return -self._pos[(beta, alpha)]

    def _solve_positive(self):
        positives = sorted(self.rs.positive_roots(), key=lambda r: (sum(r), r))
        pos_set = set(positives)
        for gamma in positives:
            if sum(gamma) < 2:
                continue
            pairs = []
            for alpha in positives:
                if (sum(alpha), alpha) >= (sum(gamma), gamma):
                    break
                beta = tuple(g - a for a, g in zip(alpha, gamma))
                if beta in pos_set and (sum(alpha), alpha) < (sum(beta), beta):
                    pairs.append((alpha, beta))
            pairs.sort(key=lambda p: (sum(p[0]), p[0]))
            extra = pairs[0]
            self._pos[extra] = self.p_value(*extra) + 1
            unknowns = pairs[1:]
            if not unknowns:
                continue
            var_of = {p: k for k, p in enumerate(pairs)}
            nv = len(pairs)
            rows = []
            for a_idx in range(len(positives)):
                rho = positives[a_idx]
                if (sum(rho), rho) >= (sum(gamma), gamma):
                    break
                for b_idx in range(a_idx + 1, len(positives)):
                    sig = positives[b_idx]
                    tau = tuple(g - r - s for r, s, g in zip(rho, sig, gamma))
                    if tau not in pos_set or (sum(tau), tau) <= (sum(sig), sig):
                        continue
                    row = [Fraction(0)] * (nv + 1)
                    used = False
                    for x, y, z in ((rho, sig, tau), (sig, tau, rho), (tau, rho, sig)):
                        inner = self.n_pos(y, z)
                        if inner == 0:
                            continue
                        used = True
                        s = tuple(p + q for p, q in zip(y, z))
                        pair = (x, s) if (sum(x), x) < (sum(s), s) else (s, x)
                        sign = 1 if pair[0] == x else -1
                        row[var_of[pair]] += Fraction(sign * inner)
                    if used:
                        rows.append(row)
            # pin the extraspecial value as an equation
            pin = [Fraction(0)] * (nv + 1)
            pin[var_of[extra]] = Fraction(1)
            pin[nv] = Fraction(self._pos[extra])
            rows.append(pin)
            sol = _solve_linear(rows, nv)
            for pair, k in var_of.items():
                v = sol[k]
                if v.denominator != 1:
                    raise RuntimeError(f"non-integer structure constant at {pair}")
                self._pos[pair] = int(v)

    # -- constants N(-alpha_i, beta) along alpha_i strings --------------------------

    def n_simple_neg(self, i: int, beta: Root) -> int:
        """N(-alpha_i, beta) for a positive root beta with beta - alpha_i a root."""
        return self._mixed[(i, beta)]

    def _string_recursion(self):
        rs = self.rs
        for i in range(rs.rank):
            ai = rs.simple_root(i)
            for top in rs.positive_roots():
                if top == ai:
                    continue
                up = tuple(t + a for a, t in zip(ai, top))
                if rs.is_root(up):
                    continue
                rho = top
                m_above = 0
                while True:
                    down = tuple(r - a for a, r in zip(ai, rho))
                    if not rs.is_root(down):
                        break
                    pairing = rs.pairing(rho, i)
                    numer = pairing + self.n_pos(ai, rho) * m_above
                    denom = self.n_pos(ai, down)
                    if numer % denom:
                        raise RuntimeError("non-integer string constant")
                    m = numer // denom
                    self._mixed[(i, rho)] = m
                    m_above = m
                    rho = down

    def _verify_magnitudes(self):
        for (alpha, beta), v in self._pos.items():
            if abs(v) != self.p_value(alpha, beta) + 1:
                raise RuntimeError(f"|N{(alpha, beta)}| != p+1")
        for (i, beta), v in self._mixed.items():
            nai = tuple(-x for x in self.rs.simple_root(i))
            if abs(v) != self.p_value(nai, beta) + 1:
                raise RuntimeError(f"|N(-alpha_{i}, {beta})| != p+1")

    # -- full table via per-root adjoint operators ------------------------------------

    def root_ads(self) -> dict[Root, ExactMatrix]:
        """Adjoint operator of each root vector, in the Chevalley basis."""
        if self._root_ads is not None:
            return self._root_ads
        rep = adjoint_rep(self.rs)
        rs = self.rs
        ads: dict[Root, ExactMatrix] = {}
        for i in range(rs.rank):
            ads[rs.simple_root(i)] = rep.e[i]
            ads[tuple(-x for x in rs.simple_root(i))] = rep.f[i]
        for gamma in sorted(rs.positive_roots(), key=lambda r: (sum(r), r)):
            if sum(gamma) < 2:
                continue
            i, beta = self._canonical_pair(gamma)
            c = self.n_pos(rs.simple_root(i), beta)
            ads[gamma] = commutator(rep.e[i], ads[beta]) * Fraction(1, c)
            neg = tuple(-x for x in gamma)
            w = commutator(rep.f[i], ads[tuple(-x for x in beta)]) * Fraction(-1, c)
            # normalize so that [e_gamma, e_-gamma] is the coroot of gamma
            target = ExactMatrix.zero(rep.dim, rep.dim)
            for k, coeff in enumerate(rs.coroot_coords(gamma)):
                if coeff:
                    target = target + rep.h[k] * coeff
            got = commutator(ads[gamma], w)
            lam = _proportionality(got, target)
            ads[neg] = w * (1 / lam)
        self._root_ads = ads
        return ads

    def _canonical_pair(self, gamma: Root) -> tuple[int, Root]:
        rs = self.rs
        best = None
        for i in range(rs.rank):
            beta = tuple(g - a for a, g in zip(rs.simple_root(i), gamma))
            if beta in rs.index and sum(beta) > 0:
                key = rs.simple_root(i)
                if best is None or key < best[1]:
                    best = (i, key, beta)
        if best is None:
            raise RuntimeError(f"{gamma} has no simple summand")
        return best[0], best[2]

    @property
    def table(self) -> dict[tuple[Root, Root], int]:
        """N(alpha, beta) over all ordered root pairs with alpha + beta a root."""
        if self._table is not None:
            return self._table
        ads = self.root_ads()
        rs = self.rs
        out = {}
        for alpha in rs.roots:
            for beta in rs.roots:
                s = tuple(a + b for a, b in zip(alpha, beta))
                if not rs.is_root(s):
                    continue
                got = commutator(ads[alpha], ads[beta])
                coeff = _proportionality(got, ads[s])
                if coeff.denominator != 1:
                    raise RuntimeError("non-integer entry in structure table")
                out[(alpha, beta)] = int(coeff)
        self._table = out
        return out


def _proportionality(m: ExactMatrix, base: ExactMatrix) -> Fraction:
    """The rational c with m == c * base; raises if no such c exists."""
    if base.is_zero():
        if m.is_zero():
            return Fraction(0)
        raise RuntimeError("no proportionality against the zero matrix")
    (r, c, v) = base.sorted_entries()[0]
    coeff = m.get(r, c) / v
    if not coeff.is_rational():
        raise RuntimeError("non-rational proportionality factor")
    lam = coeff.rational_value()
    if m != base.scale(lam):
        raise RuntimeError("matrices are not proportional")
    return lam


class Representation:
    """Images of the generators e_i, f_i, h_i with diagonal integral h_i."""

    def __init__(self, label, cartan, e, f, h, rootsys=None, structure=None):
        self.label = label
        self.cartan: CartanMatrix = cartan
        self.e: list[ExactMatrix] = e
        self.f: list[ExactMatrix] = f
        self.h: list[ExactMatrix] = h
        self.rootsys: RootSystem | None = rootsys
        self.structure: StructureConstants | None = structure
        self.dim = e[0].nrows
        self.weights = self._read_weights()
        self.invariant_form = self._build_form()
        self._verify()

    @property
    def rank(self) -> int:
        return self.cartan.rank

    def _read_weights(self) -> list[tuple[int, ...]]:
        ws = []
        for b in range(self.dim):
            row = []
            for i in range(self.rank):
                v = self.h[i].get(b, b)
                if not v.is_rational() or v.rational_value().denominator != 1:
                    raise RepresentationError("h generators must have integer diagonal")
                row.append(int(v.rational_value()))
            ws.append(tuple(row))
        for i in range(self.rank):
            if not self.h[i].is_diagonal():
                raise RepresentationError(f"h[{i}] is not diagonal")
        return ws

    def weight_set(self, i: int) -> list[int]:
        return sorted({w[i] for w in self.weights})

    def _build_form(self) -> ExactMatrix:
        if self.label != "adjoint":
            return ExactMatrix.identity(self.dim)
        rs = self.rootsys
        sc = self.structure
        w = coform_weights(self.cartan)
        s: dict[Root, Fraction] = {}
        for i in range(self.rank):
            s[rs.simple_root(i)] = Fraction(w[i])
        for gamma in sorted(rs.positive_roots(), key=lambda r: (sum(r), r)):
            if sum(gamma) < 2:
                continue
            i, beta = sc._canonical_pair(gamma)
            c = sc.n_pos(rs.simple_root(i), beta)
            s[gamma] = s[beta] * sc.n_simple_neg(i, gamma) / c
        ent = {}
        for k, r in enumerate(rs.roots):
            val = s[r] if sum(r) > 0 else s[tuple(-x for x in r)]
            if val <= 0:
                raise RepresentationError("invariant form is not positive on root vectors")
            ent[(k, k)] = CycloNum(val)
        off = len(rs.roots)
        for k in range(self.rank):
            for l in range(self.rank):
                v = self.cartan[k, l] * w[l]
                if v:
                    ent[(off + k, off + l)] = CycloNum(v)
        return ExactMatrix(self.dim, self.dim, ent)

    def _verify(self):
        a = self.cartan
        n = self.rank
        for i in range(n):
            for j in range(n):
                if commutator(self.h[i], self.e[j]) != self.e[j] * a[i, j]:
                    raise RepresentationError(f"[h_{i}, e_{j}] != a_ij e_{j}")
                if commutator(self.h[i], self.f[j]) != self.f[j] * (-a[i, j]):
                    raise RepresentationError(f"[h_{i}, f_{j}] != -a_ij f_{j}")
                expect = self.h[j] if i == j else ExactMatrix.zero(self.dim, self.dim)
                if commutator(self.e[i], self.f[j]) != expect:
                    raise RepresentationError(f"[e_{i}, f_{j}] != delta_ij h_{j}")
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                power = 1 - a[i, j]
                x = self.e[j]
                y = self.f[j]
                for _ in range(power):
                    x = commutator(self.e[i], x)
                    y = commutator(self.f[i], y)
                if not x.is_zero() or not y.is_zero():
                    raise RepresentationError(f"Serre vanishing fails at ({i},{j})")
        s = self.invariant_form
        for i in range(n):
            if self.e[i].transpose() * s != s * self.f[i]:
                raise RepresentationError(f"invariant form is not contravariant at {i}")


def adjoint_rep(rs: RootSystem) -> Representation:
    """Adjoint representation on the Chevalley basis (root vectors, then coroots)."""
    sc = StructureConstants(rs)
    n = rs.rank
    dim = len(rs.roots) + n
    idx = dict(rs.index)
    cart = {k: len(rs.roots) + k for k in range(n)}

    es, fs, hs = [], [], []
    for i in range(n):
        ai = rs.simple_root(i)
        nai = tuple(-x for x in ai)
        ee, ff, hh = {}, {}, {}
        for beta in rs.roots:
            up = tuple(b + a for a, b in zip(ai, beta))
            if beta == nai:
                ee[(cart[i], idx[beta])] = ONE
            elif rs.is_root(up):
                if sum(beta) > 0:
                    val = sc.n_pos(ai, beta)
                else:
                    val = -sc.n_simple_neg(i, tuple(-x for x in beta))
                ee[(idx[up], idx[beta])] = CycloNum(val)
            dn = tuple(b - a for a, b in zip(ai, beta))
            if beta == ai:
                ff[(cart[i], idx[beta])] = CycloNum(-1)
            elif rs.is_root(dn):
                if sum(beta) > 0:
                    val = sc.n_simple_neg(i, beta)
                else:
                    val = -sc.n_pos(ai, tuple(-x for x in beta))
                ff[(idx[dn], idx[beta])] = CycloNum(val)
        for k in range(n):
            ee[(idx[ai], cart[k])] = CycloNum(-rs.cartan[k, i])
            ff[(idx[nai], cart[k])] = CycloNum(rs.cartan[k, i])
        for beta in rs.roots:
            p = rs.pairing(beta, i)
            if p:
                hh[(idx[beta], idx[beta])] = CycloNum(p)
        es.append(ExactMatrix(dim, dim, ee))
        fs.append(ExactMatrix(dim, dim, ff))
        hs.append(ExactMatrix(dim, dim, hh))
    return Representation("adjoint", rs.cartan, es, fs, hs, rootsys=rs, structure=sc)


def _elem(dim: int, r: int, c: int, v=1) -> ExactMatrix:
    return ExactMatrix(dim, dim, {(r, c): CycloNum(v)})


def defining_rep(type_label: str, rank: int) -> Representation:
    """Defining representation of the simply connected form, types A and C."""
    t = type_label.upper()
    cartan = build_cartan(t, rank)
    rs = generate_roots(cartan)
    if t == "A":
        dim = rank + 1
        es = [_elem(dim, i, i + 1) for i in range(rank)]
        fs = [_elem(dim, i + 1, i) for i in range(rank)]
        hs = [_elem(dim, i, i) + _elem(dim, i + 1, i + 1, -1) for i in range(rank)]
        label = "sl2_2dim" if rank == 1 else "defining"
        return Representation(label, cartan, es, fs, hs, rootsys=rs)
    if t == "C":
        n = rank
        dim = 2 * n
        es, fs, hs = [], [], []
        for i in range(n - 1):
            e = _elem(dim, i, i + 1) + _elem(dim, n + i + 1, n + i, -1)
            h = (
                _elem(dim, i, i)
                + _elem(dim, i + 1, i + 1, -1)
                + _elem(dim, n + i, n + i, -1)
                + _elem(dim, n + i + 1, n + i + 1)
            )
            es.append(e)
            fs.append(e.transpose())
            hs.append(h)
        es.append(_elem(dim, n - 1, 2 * n - 1))
        fs.append(_elem(dim, 2 * n - 1, n - 1))
        hs.append(_elem(dim, n - 1, n - 1) + _elem(dim, 2 * n - 1, 2 * n - 1, -1))
        return Representation("defining", cartan, es, fs, hs, rootsys=rs)
    raise ValueError(f"no defining representation implemented for type {type_label}")


REP_KINDS = ("adjoint", "defining", "sl2")


@lru_cache(maxsize=None)
def representation(type_label: str, rank: int, kind: str) -> Representation:
    """Shared factory; representations are immutable, so caching is safe."""
    if kind == "adjoint":
        return adjoint_rep(generate_roots(build_cartan(type_label, rank)))
    if kind == "defining":
        return defining_rep(type_label, rank)
    if kind == "sl2":
        if type_label.upper() != "A" or rank != 1:
            raise ValueError("the 2-dimensional representation exists for (A, 1) only")
        return defining_rep("A", 1)
    raise ValueError(f"unknown representation kind {kind!r}")


# -- exact exponentials ---------------------------------------------------------


def exp_nilpotent(x: ExactMatrix, t=1) -> ExactMatrix:
    """exp(t*x) for nilpotent x, as the terminating power series."""
    if x.nrows != x.ncols:
        raise ValueError("exponential of a non-square matrix")
    if isinstance(t, (int, Fraction)):
        t = CycloNum(t)
    acc = ExactMatrix.identity(x.nrows)
    term = acc
    for k in range(1, x.nrows + 2):
        term = term * x * (t * Fraction(1, k))
        if term.is_zero():
            return acc
        if k > x.nrows:
            raise ValueError("matrix is not nilpotent")
        acc = acc + term
    raise ValueError("matrix is not nilpotent")


def exp_ih_quarter(rep: Representation, i: int, k: int) -> ExactMatrix:
    """exp(i*pi*k*h_i/4): diagonal with z^(k*w) on each weight-w basis vector."""
    return ExactMatrix.diagonal(
        [CycloNum.zeta_pow(k * w[i]) for w in rep.weights]
    )


def exp_semisimple_interp(x: ExactMatrix, spectrum: list[int], k: int) -> ExactMatrix:
    """exp(i*pi*k*x/4) for x with integer spectrum, by Lagrange interpolation.

    Requires prod(x - m) = 0 over the given spectrum; the result is the unique
    polynomial in x taking the value z^(k*m) at each spectrum point m.
    """
    if x.nrows != x.ncols:
        raise ValueError("exponential of a non-square matrix")
    pts = sorted(set(spectrum))
    n = x.nrows
    ident = ExactMatrix.identity(n)
    check = ident
    for m in pts:
        check = check * (x - ident * m)
    if not check.is_zero():
        raise ValueError("matrix does not annihilate the stated spectrum polynomial")
    out = ExactMatrix.zero(n, n)
    for m in pts:
        basis = ident
        denom = 1
        for mp in pts:
            if mp == m:
                continue
            basis = basis * (x - ident * mp)
            denom *= m - mp
        out = out + basis * (CycloNum.zeta_pow(k * m) * Fraction(1, denom))
    return out


def rep_to_json(rep: Representation) -> dict:
    gens = {
        name: [mat_to_json(m) for m in mats]
        for name, mats in (("e", rep.e), ("f", rep.f), ("h", rep.h))
    }
    return {
        "label": rep.label,
        "type": rep.cartan.type_label,
        "rank": rep.rank,
        "dim": rep.dim,
        "weights": [list(w) for w in rep.weights],
        "generators": gens,
    }
