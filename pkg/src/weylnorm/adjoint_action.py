"""Conjugation of the algebra generators by the reflection lifts, compared
against closed-form iterated brackets.

The expected side is built from brackets only, the actual side from
conjugation only, so the two columns of the table are independent
computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .chevalley import Representation, commutator
from .cyclotomic import CycloNum, ExactMatrix, IUNIT
from .galois_ext import GroupElement, UnitaryLifts, make_unitary_lifts


def conj_generator(g: GroupElement, x: ExactMatrix) -> ExactMatrix:
    """g x g^-1, conjugating x entrywise first when g sits in the twisted coset."""
    if g.linear.ncols != x.nrows:
        raise ValueError("dimension mismatch in conjugation")
    arg = x.conj() if g.flag else x
    return g.linear * arg * g.linear.inverse()


def _iterated_bracket(op: ExactMatrix, arg: ExactMatrix, times: int) -> ExactMatrix:
    out = arg
    for _ in range(times):
        out = commutator(op, out)
    return out


def bracket_rhs_tits(rep: Representation, i: int, j: int, kind: str) -> ExactMatrix:
    """Closed form for the conjugate of e_j (or f_j) by the i-th reflection lift."""
    a = rep.cartan
    if kind == "e":
        if i == j:
            return -rep.f[i]
        if a[i, j] == 0:
            return rep.e[j]
        n = -a[i, j]
        return _iterated_bracket(rep.e[i], rep.e[j], n) * Fraction((-1) ** n, factorial(n))
    if kind == "f":
        if i == j:
            return -rep.e[i]
        if a[i, j] == 0:
            return rep.f[j]
        n = -a[i, j]
        return _iterated_bracket(rep.f[i], rep.f[j], n) * Fraction(1, factorial(n))
    raise ValueError(f"kind must be 'e' or 'f', got {kind!r}")


def bracket_rhs_unitary(rep: Representation, i: int, j: int, kind: str) -> ExactMatrix:
    """Closed form for the conjugate of i*e_j (or i*f_j) by the unitary lift."""
    a = rep.cartan
    gen = {"e": rep.e, "f": rep.f}[kind]
    other = {"e": rep.f, "f": rep.e}[kind]
    if i == j:
        return other[i] * (-IUNIT)
    if a[i, j] == 0:
        return gen[j] * (-IUNIT)
    n = -a[i, j]
    ix_i = gen[i] * IUNIT
    ix_j = gen[j] * IUNIT
    return _iterated_bracket(ix_i, ix_j, n) * Fraction(-1, factorial(n))


def bracket_rhs_tilde(rep: Representation, i: int, j: int, kind: str) -> ExactMatrix:
    """Sign-free closed form on the flipped generators et_i = -e_i, ft_i = f_i."""
    et = [-m for m in rep.e]
    ft = list(rep.f)
    gen = {"e": et, "f": ft}[kind]
    other = {"e": ft, "f": et}[kind]
    a = rep.cartan
    if i == j:
        return other[i]
    if a[i, j] == 0:
        return gen[j]
    n = -a[i, j]
    return _iterated_bracket(gen[i], gen[j], n) * Fraction(1, factorial(n))


@dataclass(frozen=True)
class ActionEntry:
    lift: str  # "tits" | "unitary" | "tits_tilde"
    i: int
    j: int
    kind: str  # "e" | "f"
    expected: ExactMatrix
    actual: ExactMatrix

    @property
    def match(self) -> bool:
        return self.expected == self.actual


@dataclass
class ActionTable:
    entries: list[ActionEntry]

    @property
    def all_match(self) -> bool:
        return all(e.match for e in self.entries)

    def to_json(self) -> list[dict]:
        return [
            {
                "lift": e.lift,
                "indices": [e.i, e.j],
                "generator": e.kind,
                "status": "pass" if e.match else "fail",
            }
            for e in self.entries
        ]


def verify_action_tables(rep: Representation, lifts: tuple[str, ...] = ("tits", "unitary", "tits_tilde")) -> ActionTable:
    """Compare conjugation against the bracket formulas for every table slot."""
    u: UnitaryLifts = make_unitary_lifts(rep)
    te = u.tits
    entries = []
    for i in range(rep.rank):
        sdot, sdot_inv = te.sdot[i], te.sdot_inv[i]
        sigma_lin = u.sigma[i].linear
        sigma_lin_inv = u._sigma_inv[i].linear.conj()
        for j in range(rep.rank):
            for kind in ("e", "f"):
                x = {"e": rep.e, "f": rep.f}[kind][j]
                if "tits" in lifts:
                    actual = sdot * x * sdot_inv
                    entries.append(
                        ActionEntry("tits", i, j, kind, bracket_rhs_tits(rep, i, j, kind), actual)
                    )
                if "unitary" in lifts:
                    # the coset element acts antilinearly, so the argument is
                    # conjugated entrywise before the sandwich
                    actual = sigma_lin * (x * IUNIT).conj() * sigma_lin_inv
                    entries.append(
                        ActionEntry(
                            "unitary", i, j, kind, bracket_rhs_unitary(rep, i, j, kind), actual
                        )
                    )
                if "tits_tilde" in lifts:
                    xt = (-x) if kind == "e" else x
                    actual = sdot * xt * sdot_inv
                    entries.append(
                        ActionEntry(
                            "tits_tilde", i, j, kind, bracket_rhs_tilde(rep, i, j, kind), actual
                        )
                    )
    entries.sort(key=lambda e: (e.lift, e.i, e.j, e.kind))
    return ActionTable(entries)
