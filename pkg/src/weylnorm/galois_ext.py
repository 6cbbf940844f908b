"""The group extension by complex conjugation: elements are (matrix, flag)
pairs multiplying through an entrywise conjugation twist, plus the unitary
lifts of the simple reflections and all their relation checks."""

from __future__ import annotations

from .chevalley import Representation, exp_ih_quarter, exp_semisimple_interp
from .cyclotomic import ExactMatrix
from .report import VerificationReport, run_instances
from .rootsystem import coxeter_m
from .tits import TitsElements, _alternating


class GroupElement:
    """Element (A, flag) of the extension; flag 1 marks the conjugating coset."""

    __slots__ = ("linear", "flag")

    def __init__(self, linear: ExactMatrix, flag: int = 0):
        if linear.nrows != linear.ncols:
            raise ValueError("group elements must be square matrices")
        self.linear = linear
        self.flag = flag & 1

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if self.linear.ncols != other.linear.nrows:
            raise ValueError("dimension mismatch in group product")
        rhs = other.linear.conj() if self.flag else other.linear
        return GroupElement(self.linear * rhs, self.flag ^ other.flag)

    def inverse(self) -> "GroupElement":
        inv = self.linear.inverse()
        if self.flag:
            inv = inv.conj()
        return GroupElement(inv, self.flag)

    def __pow__(self, n: int) -> "GroupElement":
        if n < 0:
            return self.inverse() ** (-n)
        out = GroupElement(ExactMatrix.identity(self.linear.nrows), 0)
        for _ in range(n):
            out = out * self
        return out

    def is_identity(self) -> bool:
        return self.flag == 0 and self.linear.is_identity()

    def key(self):
        return (self.flag, self.linear.key())

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.flag == other.flag and self.linear == other.linear

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"GroupElement(flag={self.flag}, {self.linear!r})"


def gprod(x: GroupElement, y: GroupElement) -> GroupElement:
    return x * y


def gamma_element(dim: int) -> GroupElement:
    return GroupElement(ExactMatrix.identity(dim), 1)


def torus_element(m: ExactMatrix) -> GroupElement:
    return GroupElement(m, 0)


class UnitaryLifts:
    """The conjugation-coset lifts of the simple reflections.

    sigma_i is built by conjugating the reflection lift with the quarter-turn
    torus element, then cross-checked against the interpolation exponential
    of e_i + f_i; both must agree before the object is handed out.
    """

    def __init__(self, rep: Representation):
        self.rep = rep
        self.tits = TitsElements(rep)
        self.sigma: list[GroupElement] = []
        self.sigma_bar: list[GroupElement] = []
        self.xi: list[GroupElement] = []
        self._sigma_inv: list[GroupElement] = []
        self._sigma_bar_inv: list[GroupElement] = []
        for i in range(rep.rank):
            dplus = exp_ih_quarter(rep, i, 1)
            dminus = exp_ih_quarter(rep, i, -1)
            s = self.tits.sdot[i]
            s_inv = self.tits.sdot_inv[i]
            lin = dminus * s * dplus
            lin_bar = dplus * s * dminus
            spectrum = rep.weight_set(i)
            if lin != exp_semisimple_interp(rep.e[i] + rep.f[i], spectrum, 2):
                raise RuntimeError(f"the two routes to sigma_{i} disagree")
            if lin_bar != exp_semisimple_interp(rep.e[i] + rep.f[i], spectrum, -2):
                raise RuntimeError(f"the two routes to sigma_bar_{i} disagree")
            self.sigma.append(GroupElement(lin, 1))
            self.sigma_bar.append(GroupElement(lin_bar, 1))
            self.xi.append(self.sigma[i] * self.sigma_bar[i])
            if self.xi[i].flag != 0 or self.xi[i].linear != exp_ih_quarter(rep, i, 4):
                raise RuntimeError(f"xi_{i} is not the order-two torus element")
            self._sigma_inv.append(GroupElement((dminus * s_inv * dplus).conj(), 1))
            self._sigma_bar_inv.append(GroupElement((dplus * s_inv * dminus).conj(), 1))

    @property
    def gamma(self) -> GroupElement:
        return gamma_element(self.rep.dim)


def make_unitary_lifts(rep: Representation) -> UnitaryLifts:
    return UnitaryLifts(rep)


def _chain_equal(elems: list[GroupElement]) -> bool:
    first = elems[0]
    return all(e == first for e in elems[1:])


def verify_wu_presentation(rep: Representation, threads: int = 1) -> VerificationReport:
    """All defining relations of the conjugation-twisted extension, plus the
    consequences that rewrite them pairwise (commuting, triple, quadruple and
    sextuple chains), instanced over every applicable generator pair."""
    u = make_unitary_lifts(rep)
    n = rep.rank
    sg, sb, xi = u.sigma, u.sigma_bar, u.xi
    a = rep.cartan
    instances = []
    for i in range(n):
        instances.append(("sigma_square", (i,), lambda i=i: (sg[i] * sg[i]).is_identity()))
        instances.append(("sigma_bar_square", (i,), lambda i=i: (sb[i] * sb[i]).is_identity()))
        instances.append(
            ("eta_product", (i,), lambda i=i: sg[i] * sb[i] == xi[i] and sb[i] * sg[i] == xi[i])
        )
        instances.append(("eta_square", (i,), lambda i=i: (xi[i] * xi[i]).is_identity()))
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            instances.append(
                ("eta_commute", (i, j), lambda i=i, j=j: xi[i] * xi[j] == xi[j] * xi[i])
            )
            aji = a[j, i]
            instances.append(
                (
                    "conj_eta",
                    (i, j),
                    lambda i=i, j=j, aji=aji: sg[i] * xi[j] == xi[j] * (xi[i] ** (-aji)) * sg[i],
                )
            )
            instances.append(
                (
                    "conj_eta_bar",
                    (i, j),
                    lambda i=i, j=j, aji=aji: sb[i] * xi[j] == xi[j] * (xi[i] ** (-aji)) * sb[i],
                )
            )
            m = coxeter_m(a, i, j)
            instances.append(
                (
                    "mixed_braid",
                    (i, j),
                    lambda i=i, j=j, m=m: _alternating(sg, i, j, m) == _alternating(sb, j, i, m),
                )
            )
            if a[i, j] == 0:
                instances.append(
                    (
                        "comm_completion",
                        (i, j),
                        lambda i=i, j=j: sg[i] * sg[j] * sb[j] == sg[j] * sb[j] * sg[i]
                        and sb[i] * sg[j] * sb[j] == sg[j] * sb[j] * sb[i],
                    )
                )
            if a[i, j] in (-1, -3):
                m = coxeter_m(a, i, j)
                instances.append(
                    (
                        "barred_chain",
                        (i, j),
                        lambda i=i, j=j, m=m: _alternating(sg, i, j, m) == _alternating(sb, i, j, m),
                    )
                )
    # pairwise rewritten relation families, by Cartan product class
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if a[i, j] == 0 and i < j:
                instances.append(
                    ("pair_comm", (i, j), lambda i=i, j=j: sg[i] * sg[j] == sb[j] * sb[i])
                )
            if a[i, j] == -1 and a[j, i] == -1 and i < j:
                instances.append(
                    (
                        "pair_triple",
                        (i, j),
                        lambda i=i, j=j: _chain_equal(
                            [
                                sg[j] * sg[i] * sg[j],
                                sb[j] * sb[i] * sb[j],
                                sg[i] * sg[j] * sg[i],
                                sb[i] * sb[j] * sb[i],
                            ]
                        ),
                    )
                )
            if a[j, i] == -2:
                instances.append(
                    (
                        "pair_quadruple",
                        (i, j),
                        lambda i=i, j=j: _chain_equal(
                            [
                                sg[i] * sg[j] * sg[i] * sg[j],
                                sg[i] * sb[j] * sg[i] * sb[j],
                                sb[j] * sb[i] * sb[j] * sb[i],
                                sg[j] * sb[i] * sg[j] * sb[i],
                            ]
                        ),
                    )
                )
            if a[j, i] == -3:
                instances.append(
                    (
                        "pair_sextuple",
                        (i, j),
                        lambda i=i, j=j: _chain_equal(
                            [
                                _alternating(sg, i, j, 6),
                                sb[i] * sb[j] * sb[i] * sg[j] * sg[i] * sg[j],
                                _alternating(sb, i, j, 6),
                                _alternating(sb, j, i, 6),
                                sb[j] * sb[i] * sb[j] * sg[i] * sg[j] * sg[i],
                                _alternating(sg, j, i, 6),
                            ]
                        ),
                    )
                )
    return run_instances(instances, threads)


def verify_unitary_lemmas(rep: Representation, threads: int = 1) -> VerificationReport:
    """Identities satisfied by the realized lifts themselves: squares, the
    conjugation-swap moves per pair class, and the auxiliary torus identities
    used to derive them."""
    u = make_unitary_lifts(rep)
    n = rep.rank
    sg = u.sigma
    gamma = u.gamma
    a = rep.cartan
    instances = []
    for i in range(n):
        instances.append(("unitary_square", (i,), lambda i=i: (sg[i] * sg[i]).is_identity()))
        instances.append(
            (
                "gamma_twist",
                (i,),
                lambda i=i: gamma * sg[i] * gamma == u.xi[i] * sg[i],
            )
        )
        instances.append(
            ("torus_full_period", (i,), lambda i=i: exp_ih_quarter(rep, i, 8).is_identity())
        )
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if a[i, j] == 0 and i < j:
                instances.append(
                    (
                        "swap_comm",
                        (i, j),
                        lambda i=i, j=j: sg[i] * sg[j] == gamma * (sg[j] * sg[i]) * gamma,
                    )
                )
                instances.append(
                    (
                        "swap_comm_torus",
                        (i, j),
                        lambda i=i, j=j: sg[i] * sg[j] == u.xi[i] * u.xi[j] * (sg[j] * sg[i])
                        and sg[i] * sg[j] == (sg[j] * sg[i]) * u.xi[i] * u.xi[j],
                    )
                )
            if a[i, j] == -1 and a[j, i] == -1 and i < j:
                instances.append(
                    (
                        "swap_triple",
                        (i, j),
                        lambda i=i, j=j: sg[i] * sg[j] * sg[i]
                        == gamma * (sg[j] * sg[i] * sg[j]) * gamma,
                    )
                )
            if a[j, i] == -2:
                instances.append(
                    (
                        "swap_quadruple",
                        (i, j),
                        lambda i=i, j=j: _alternating(sg, i, j, 4)
                        == gamma * _alternating(sg, j, i, 4) * gamma,
                    )
                )
            if a[j, i] == -3:
                instances.append(
                    (
                        "swap_sextuple",
                        (i, j),
                        lambda i=i, j=j: _alternating(sg, i, j, 6)
                        == gamma * _alternating(sg, j, i, 6) * gamma,
                    )
                )
    return run_instances(instances, threads)


def verify_m_intersection(rep: Representation, threads: int = 1) -> VerificationReport:
    """The two torus elements attached to each index coincide and are real,
    diagonal involutions."""
    u = make_unitary_lifts(rep)
    te = u.tits
    instances = []
    for i in range(rep.rank):
        z = te.zeta[i]
        x = u.xi[i].linear
        instances.append(("intersect_match", (i,), lambda z=z, x=x: z == x))
        instances.append(("intersect_real", (i,), lambda x=x: x.conj() == x))
        instances.append(("intersect_diagonal", (i,), lambda x=x: x.is_diagonal()))
        instances.append(("intersect_involution", (i,), lambda x=x: (x * x).is_identity()))
    return run_instances(instances, threads)
