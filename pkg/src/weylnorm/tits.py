"""Lifts of simple reflections into a represented group, presentation
checks for the resulting extension, and finite group enumeration."""

from __future__ import annotations

from dataclasses import dataclass, field

from .chevalley import Representation, exp_ih_quarter, exp_nilpotent, exp_semisimple_interp
from .cyclotomic import ExactMatrix
from .report import VerificationReport, run_instances
from .rootsystem import coxeter_m


def tits_lift(rep: Representation, i: int) -> ExactMatrix:
    """The lift exp(f_i) exp(-e_i) exp(f_i) of the i-th simple reflection.

    Both triple-product forms are computed and compared; a mismatch means the
    representation itself is broken.
    """
    ef = exp_nilpotent(rep.f[i], 1)
    ee = exp_nilpotent(rep.e[i], -1)
    a = ef * ee * ef
    b = ee * ef * ee
    if a != b:
        raise RuntimeError(f"the two triple-product forms of the lift differ at i={i}")
    return a


class TitsElements:
    """The lifts s_i together with their squares, which land in the torus."""

    def __init__(self, rep: Representation):
        self.rep = rep
        self.sdot = [tits_lift(rep, i) for i in range(rep.rank)]
        self.zeta = [s * s for s in self.sdot]
        for i, (s, z) in enumerate(zip(self.sdot, self.zeta)):
            if not (z * z).is_identity():
                raise RuntimeError(f"lift {i} does not have order dividing 4")
        # order 4 certified above, so the inverse is the cube
        self.sdot_inv = [s * z for s, z in zip(self.sdot, self.zeta)]


def verify_lift_identities(rep: Representation, threads: int = 1) -> VerificationReport:
    """Cross-checks between the product, conjugation and interpolation forms.

    For each i the three expressions for the reflection lift must agree, its
    square must be the order-two torus element exp(i*pi*h_i), and the two
    independent routes to exp(i*pi*(e_i+f_i)/2) must match bit-exactly.
    """
    te = TitsElements(rep)
    instances = []
    for i in range(rep.rank):
        ef = exp_nilpotent(rep.f[i], 1)
        ee = exp_nilpotent(rep.e[i], -1)
        spectrum = rep.weight_set(i)
        interp = exp_semisimple_interp(rep.e[i] + rep.f[i], spectrum, 2)
        dplus = exp_ih_quarter(rep, i, 1)
        dminus = exp_ih_quarter(rep, i, -1)
        s = te.sdot[i]

        instances.append(("lift_products_agree", (i,), lambda a=ef * ee * ef, b=ee * ef * ee: a == b))
        instances.append(
            ("lift_conjugation_form", (i,), lambda s=s, m=dplus * interp * dminus: s == m)
        )
        instances.append(
            ("lift_square_torus", (i,), lambda z=te.zeta[i], m=exp_ih_quarter(rep, i, 4): z == m)
        )
        instances.append(
            (
                "exp_paths_agree",
                (i,),
                lambda a=interp, b=dminus * s * dplus: a == b,
            )
        )
    return run_instances(instances, threads)


def verify_tits_presentation(rep: Representation, threads: int = 1) -> VerificationReport:
    """Check every defining relation of the extended reflection group."""
    te = TitsElements(rep)
    n = rep.rank
    sdot, zeta = te.sdot, te.zeta
    instances = []
    for i in range(n):
        instances.append(
            ("sq_torus", (i,), lambda i=i: sdot[i] * sdot[i] == zeta[i]
             and zeta[i] == exp_ih_quarter(rep, i, 4))
        )
        instances.append(("theta_square", (i,), lambda i=i: (zeta[i] * zeta[i]).is_identity()))
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            instances.append(
                ("theta_commute", (i, j), lambda i=i, j=j: zeta[i] * zeta[j] == zeta[j] * zeta[i])
            )
            aji = rep.cartan[j, i]
            instances.append(
                (
                    "conj_theta",
                    (i, j),
                    lambda i=i, j=j, aji=aji: sdot[i] * zeta[j]
                    == (zeta[i] ** (-aji)) * zeta[j] * sdot[i],
                )
            )
    for i in range(n):
        for j in range(i + 1, n):
            m = coxeter_m(rep.cartan, i, j)
            instances.append(
                ("braid", (i, j), lambda i=i, j=j, m=m: _alternating(sdot, i, j, m) == _alternating(sdot, j, i, m))
            )
    return run_instances(instances, threads)


def _alternating(gens, i, j, m):
    out = None
    for k in range(m):
        g = gens[i] if k % 2 == 0 else gens[j]
        out = g if out is None else out * g
    return out


def verify_normalizer_action(rep: Representation, threads: int = 1) -> VerificationReport:
    """Conjugation of the Cartan generators matches the reflection action."""
    te = TitsElements(rep)
    instances = []
    for i in range(rep.rank):
        for k in range(rep.rank):
            expect = rep.h[k] - rep.h[i] * rep.cartan[k, i]
            instances.append(
                (
                    "weyl_conj_cartan",
                    (i, k),
                    lambda i=i, k=k, expect=expect: te.sdot[i] * rep.h[k] == expect * te.sdot[i],
                )
            )
    return run_instances(instances, threads)


@dataclass
class FiniteGroupTable:
    """BFS closure of a generating set under multiplication."""

    elements: list = field(default_factory=list)
    words: dict = field(default_factory=dict)
    order: int | None = None
    capped: bool = False


def enumerate_group(gens, cap: int = 2**16) -> FiniteGroupTable:
    """Close `gens` under products, with canonical hashing for equality.

    Accepts plain matrices or semidirect-product elements.  If the closure
    exceeds `cap`, the table comes back with `capped=True` and no order.
    """
    from .galois_ext import GroupElement

    norm = []
    for g in gens:
        if isinstance(g, ExactMatrix):
            g = GroupElement(g, 0)
        norm.append(g)
    if not norm:
        raise ValueError("no generators")
    ident = GroupElement(ExactMatrix.identity(norm[0].linear.nrows), 0)
    table: dict = {ident.key(): (ident, ())}
    queue = [ident]
    while queue:
        nxt = []
        for elt in queue:
            word = table[elt.key()][1]
            for gi, g in enumerate(norm):
                prod = elt * g
                k = prod.key()
                if k not in table:
                    if len(table) >= cap:
                        out = FiniteGroupTable(capped=True)
                        out.elements = [v[0] for v in table.values()]
                        return out
                    table[k] = (prod, word + (gi,))
                    nxt.append(prod)
        queue = nxt
    out = FiniteGroupTable()
    out.elements = [v[0] for v in table.values()]
    out.words = {k: v[1] for k, v in table.items()}
    out.order = len(out.elements)
    return out


def weyl_image_order(table: FiniteGroupTable, rep: Representation) -> int:
    """Order of the permutation image on weight lines (the reflection group).

    Every enumerated element must act monomially on the chosen basis.
    """
    perms = set()
    for g in table.elements:
        m = g.linear
        perm = [None] * rep.dim
        for (r, c), _ in m.entries.items():
            if perm[c] is not None:
                raise ValueError("element is not monomial on the basis")
            perm[c] = r
        if any(p is None for p in perm):
            raise ValueError("element is not monomial on the basis")
        perms.add(tuple(perm))
    return len(perms)
