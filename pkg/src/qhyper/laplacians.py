"""Base Laplacians, gauge Laplacians on sections, eigenvectors and spectrum tables."""
from dataclasses import dataclass, field

from qhyper.algebra import AlgElt
from qhyper.bundles import Section, basis_section, decompose_left, decompose_right
from qhyper.coeffs import ONE, QRat, qint, qpow
from qhyper.connection import CANONICAL, covariant_D_omega, covariant_Dhat_omega
from qhyper.forms import (
    Form,
    codifferential_left,
    codifferential_right,
    differential,
    form_star,
    hodge_left,
    hodge_left_inv,
    hodge_right,
    hodge_right_inv,
    wedge,
)

__all__ = [
    "base_laplacian_left",
    "base_laplacian_right",
    "gauge_laplacian_left",
    "gauge_laplacian_right",
    "ChainOperator",
    "chain_eigenvectors",
    "product_formula_eigenvector",
    "SpectrumRow",
    "spectrum_table",
    "closed_form",
    "table_cells",
    "gauge_commutator",
    "FAMILIES",
    "SpectrumMismatch",
    "DegenerateChainError",
    "chain_operator",
    "laplacian_operator",
    "simultaneous_eigen_witness",
]


def base_laplacian_left(u):
    """d d^* + d^* d with the left codifferential."""
    if isinstance(u, AlgElt):
        u = Form.from_alg(u)
    return differential(codifferential_left(u)) + codifferential_left(differential(u))


def base_laplacian_right(u):
    """d d^* + d^* d with the right codifferential."""
    if isinstance(u, AlgElt):
        u = Form.from_alg(u)
    return differential(codifferential_right(u)) + codifferential_right(differential(u))


def _section(T, n=None):
    if isinstance(T, Section):
        return T
    if isinstance(T, str):
        T = AlgElt.parse(T)
    return Section(T, n)


def gauge_laplacian_left(omega, T, n=None):
    """Left gauge Laplacian on a degree-n section.

    Only d^(nabla *) d^nabla contributes on sections.  With nabla(T) = sum mu_j (x) T^j:
    nu_j = (* . hodge_left)(mu_j); d^nabla(sum nu_j (x) T^j) has T^i-coefficient
    c_i = d nu_i - sum_j nu_j beta_ji where nabla(T^j) = sum_i beta_ji (x) T^i; finally
    the result is -sum_i (hodge_left_inv . *)(c_i) T^i(1).
    """
    omega = omega or CANONICAL
    T = _section(T, n)
    n = T.n
    if not T.value:
        return T
    m = abs(n)
    mus = decompose_left(covariant_D_omega(omega, Form.from_alg(T.value)), n)
    nus = [form_star(hodge_left(mu)) for mu, _ in mus]
    nabla_basis = _nabla_left(omega, n)
    out = AlgElt()
    for i in range(m + 1):
        c = differential(nus[i])
        for j in range(m + 1):
            beta = nabla_basis[j][i]
            if beta and nus[j]:
                c = c - wedge(nus[j], beta)
        b = hodge_left_inv(form_star(c)).coefficient(0)
        out = out - b * basis_section(n, i).value
    return Section(out, n)


_NABLA_CACHE = {}


def _nabla_left(omega, n):
    key = ("L", omega.mu.render(), n)
    got = _NABLA_CACHE.get(key)
    if got is None:
        got = []
        for j in range(abs(n) + 1):
            tj = basis_section(n, j).value
            got.append([mu for mu, _ in decompose_left(covariant_D_omega(omega, Form.from_alg(tj)), n)])
        _NABLA_CACHE[key] = got
    return got


def _nabla_right(omega, n):
    key = ("R", omega.mu.render(), n)
    got = _NABLA_CACHE.get(key)
    if got is None:
        got = []
        for j in range(abs(n) + 1):
            tj = basis_section(n, j).value
            got.append([mu for _, mu in decompose_right(covariant_Dhat_omega(omega, Form.from_alg(tj)), n)])
        _NABLA_CACHE[key] = got
    return got


def gauge_laplacian_right(omega, T, n=None):
    """Right gauge Laplacian on a degree-n section.

    With nablahat(T) = sum T^j (x) mu_j: nu_j = hodge_right(mu_j); the exterior
    derivative has T^i-coefficient c_i = d nu_i + sum_j beta_ji nu_j where
    nablahat(T^j) = sum_i T^i (x) beta_ji; the result is -sum_i T^i(1) hodge_right_inv(c_i).
    """
    omega = omega or CANONICAL
    T = _section(T, n)
    n = T.n
    if not T.value:
        return T
    m = abs(n)
    mus = decompose_right(covariant_Dhat_omega(omega, Form.from_alg(T.value)), n)
    nus = [hodge_right(mu) for _, mu in mus]
    nabla_basis = _nabla_right(omega, n)
    out = AlgElt()
    for i in range(m + 1):
        c = differential(nus[i])
        for j in range(m + 1):
            beta = nabla_basis[j][i]
            if beta and nus[j]:
                c = c + wedge(beta, nus[j])
        b = hodge_right_inv(c).coefficient(0)
        out = out - basis_section(n, i).value * b
    return Section(out, n)


def gauge_commutator(n, T):
    """[right, left] applied to T: right(left(T)) - left(right(T))."""
    T = _section(T, n)
    a = gauge_laplacian_right(CANONICAL, gauge_laplacian_left(CANONICAL, T))
    b = gauge_laplacian_left(CANONICAL, gauge_laplacian_right(CANONICAL, T))
    return a - b


def laplacian_operator(side):
    """The canonical-connection gauge Laplacian for side 'left' or 'right' as a map on Sections."""
    if side == "left":
        return lambda T: gauge_laplacian_left(CANONICAL, T)
    if side == "right":
        return lambda T: gauge_laplacian_right(CANONICAL, T)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


class DegenerateChainError(ArithmeticError):
    """Two diagonal entries of a chain coincide, so back substitution breaks down."""


class SpectrumMismatch(AssertionError):
    """Operator diagonal and closed form disagree on a table cell."""


def _mono_section(t, k, l):
    return Section(AlgElt.mono(t, k, l), t + k - l)


@dataclass
class ChainOperator:
    """An operator restricted to the chain a^t g^(k0+j) gs^(l0+j), j = 0..len-1.

    ``matrix[i][j]`` is the coefficient of element j in op(element i); it is
    lower bidiagonal: op(e_i) = matrix[i][i] e_i + matrix[i][i-1] e_(i-1).
    """

    sections: list
    matrix: list
    side: str = "left"
    top: tuple = field(default=())

    @property
    def diagonal(self):
        return [self.matrix[i][i] for i in range(len(self.sections))]

    @property
    def subdiagonal(self):
        return [self.matrix[i][i - 1] for i in range(1, len(self.sections))]

    def __len__(self):
        return len(self.sections)

    def apply(self, coeffs):
        """Image of sum_i coeffs[i] e_i, as a coefficient list."""
        size = len(self.sections)
        out = [QRat.from_int(0)] * size
        for i, c in enumerate(coeffs):
            if c:
                for j in range(size):
                    if self.matrix[i][j]:
                        out[j] = out[j] + c * self.matrix[i][j]
        return out

    def to_section(self, coeffs):
        val = AlgElt()
        for c, s in zip(coeffs, self.sections):
            if c:
                val = val + s.value.scale(c)
        return Section(val, self.sections[0].n)


def chain_operator(side, t, k, l):
    """Restrict a gauge Laplacian to the chain ending at a^t g^k gs^l (t < 0 means as^|t|)."""
    op = laplacian_operator(side)
    depth = min(k, l)
    cells = [(t, k - depth + j, l - depth + j) for j in range(depth + 1)]
    sections = [_mono_section(*c) for c in cells]
    index = {c: j for j, c in enumerate(cells)}
    zero = QRat.from_int(0)
    matrix = []
    for i, s in enumerate(sections):
        row = [zero] * len(cells)
        for (a, kk, ll), c in op(s).value.terms.items():
            j = index.get((a, kk, ll))
            if j is None or j > i or j < i - 1:
                raise ArithmeticError(
                    f"{side} Laplacian is not bidiagonal on the chain: "
                    f"image of {s.render()} contains {AlgElt.mono(a, kk, ll).render()}"
                )
            row[j] = c
        matrix.append(row)
    return ChainOperator(sections, matrix, side, (t, k, l))


def chain_eigenvectors(chain):
    """Eigenvectors p(e_j) = e_j + lower terms by back substitution on the triangular matrix.

    Returns a list of (Section, eigenvalue, coefficient list).
    """
    size = len(chain)
    diag = chain.diagonal
    for i in range(size):
        for j in range(i):
            if diag[i] == diag[j]:
                raise DegenerateChainError(f"repeated diagonal entry {diag[i].render()} at {j} and {i}")
    out = []
    zero = QRat.from_int(0)
    for j in range(size):
        lam = diag[j]
        a = [zero] * size
        a[j] = ONE
        # coefficient of e_i in op(sum a_r e_r) is sum_{r>=i} a_r M[r][i]
        for i in range(j - 1, -1, -1):
            acc = zero
            for r in range(i + 1, j + 1):
                if a[r] and chain.matrix[r][i]:
                    acc = acc + a[r] * chain.matrix[r][i]
            a[i] = acc / (lam - diag[i])
        out.append((chain.to_section(a), lam, a))
    return out


def product_formula_eigenvector(chain, j):
    """Coefficients of p(e_j) from the telescoping product

        a_i = prod_{r=i+1..j} s_r / (lambda_j - lambda_(r-1)),

    where s_r is the subdiagonal entry of row r.
    """
    diag = chain.diagonal
    lam = diag[j]
    zero = QRat.from_int(0)
    a = [zero] * len(chain)
    for i in range(j + 1):
        prod = ONE
        for r in range(i + 1, j + 1):
            prod = prod * chain.matrix[r][r - 1] / (lam - diag[r - 1])
        a[i] = prod
    return a


FAMILIES = ("gamma-gamma*", "alpha-mixed", "alphastar-mixed")

_TABLE_SIDE = {1: "left", 2: "left", 3: "left", 4: "right", 5: "right"}


def _q(e):
    return qpow(e)


def _left_gamma(k, l):
    return -(_q(-2 * l) * (ONE + _q(2) * qint(k)) * qint(l) + _q(4) * (ONE + _q(-2 * l) * qint(l)) * qint(k))


def _left_alpha(t, k, l):
    return -_q(-2 * l) * (
        qint(l) * qint(t + 1)
        + _q(2 * t + 2) * qint(l) * qint(k)
        + _q(4) * qint(t) * qint(l + 1)
        + _q(4 + 2 * t) * qint(k) * qint(l + 1)
    )


def _left_alphastar(t, k, l):
    return -_q(-2 * t) * (
        qint(t) * qint(k + 1)
        + _q(-2 * l) * qint(l) * qint(k + 1)
        + _q(4) * qint(k) * qint(t + 1)
        + _q(-2 * l + 4) * qint(k) * qint(l)
    )


def _right_gamma(k, l):
    return -(_q(-2 * k) * (ONE + _q(2) * qint(l)) * qint(k) + _q(4) * (ONE + _q(-2 * k) * qint(k)) * qint(l))


def _right_alpha(t, k, l):
    return -_q(-2 * t) * (
        qint(t) * qint(l + 1)
        + _q(-2 * k) * qint(k) * qint(l + 1)
        + _q(4) * qint(l) * qint(t + 1)
        + _q(-2 * k + 4) * qint(l) * qint(k)
    )


def _right_alphastar(t, k, l):
    return -_q(-2 * k) * (
        qint(k) * qint(t + 1)
        + _q(2 * t + 2) * qint(k) * qint(l)
        + _q(4) * qint(t) * qint(k + 1)
        + _q(4 + 2 * t) * qint(l) * qint(k + 1)
    )


def closed_form(which, family, t, k, l):
    """Closed-form eigenvalue of a table cell; t >= 0 is the absolute alpha or alphastar exponent."""
    side = _TABLE_SIDE.get(which)
    if side is None:
        raise ValueError(f"table must be 1..5, got {which}")
    if family == "gamma-gamma*":
        return (_left_gamma if side == "left" else _right_gamma)(k, l)
    if family == "alpha-mixed":
        return (_left_alpha if side == "left" else _right_alpha)(t, k, l)
    if family == "alphastar-mixed":
        return (_left_alphastar if side == "left" else _right_alphastar)(t, k, l)
    raise ValueError(f"unknown family {family!r}")


def _check_table_n(which, n):
    ok = {1: n == 0, 2: n >= 1, 3: n <= -1, 4: n >= 1, 5: n <= -1}.get(which)
    if ok is None:
        raise ValueError(f"table must be 1..5, got {which}")
    if not ok:
        raise ValueError(f"table {which} does not cover n={n}")


def table_cells(which, n, bound):
    """Admissible (family, t, k, l) with all exponents <= bound, in deterministic order."""
    _check_table_n(which, n)
    cells = []
    for k in range(bound + 1):
        l = k - n
        if 0 <= l <= bound:
            cells.append(("gamma-gamma*", 0, k, l))
    for t in range(1, bound + 1):
        for k in range(bound + 1):
            l = t + k - n
            if 0 <= l <= bound:
                cells.append(("alpha-mixed", t, k, l))
    for t in range(1, bound + 1):
        for k in range(bound + 1):
            l = -t + k - n
            if 0 <= l <= bound:
                cells.append(("alphastar-mixed", t, k, l))
    return cells


@dataclass(frozen=True)
class SpectrumRow:
    table: int
    n: int
    family: str
    t: int
    k: int
    l: int
    eigenvalue: QRat

    def as_dict(self):
        return {
            "table": self.table,
            "n": self.n,
            "family": self.family,
            "t": self.t,
            "k": self.k,
            "l": self.l,
            "eigenvalue": self.eigenvalue.render(),
        }


def operator_diagonal(side, family, t, k, l):
    """Coefficient of the monomial itself in the image of the gauge Laplacian."""
    a = -t if family == "alphastar-mixed" else t
    image = laplacian_operator(side)(_mono_section(a, k, l))
    return image.value.coefficient(a, k, l)


def spectrum_table(which, n, bound=4):
    """Rows of a spectrum table, each checked operator-vs-closed-form."""
    side = _TABLE_SIDE.get(which)
    rows = []
    for family, t, k, l in table_cells(which, n, bound):
        got = operator_diagonal(side, family, t, k, l)
        want = closed_form(which, family, t, k, l)
        if got != want:
            raise SpectrumMismatch(
                f"table {which}, n={n}, {family} t={t} k={k} l={l}: "
                f"operator gives {got.render()}, closed form {want.render()}"
            )
        rows.append(SpectrumRow(which, n, family, t, k, l, got))
    return rows


def simultaneous_eigen_witness(n, bound=3):
    """Look for a left-Laplacian eigenvector of degree n that the right Laplacian
    does not map to a multiple of itself.

    Every chain with exponents <= bound contributes its eigenvectors p(T).  A
    witness is either a p(T) that is not a right eigenvector, or the sum of two
    p(T) sharing a left eigenvalue but carrying different right eigenvalues.
    Returns (Section, right image) or None.
    """
    right = laplacian_operator("right")
    seen = {}
    for t in range(-bound, bound + 1):
        for k in range(bound + 1):
            l = t + k - n
            if not 0 <= l <= bound:
                continue
            chain = chain_operator("left", t, k, l)
            p, lam, _ = chain_eigenvectors(chain)[-1]
            img = right(p)
            mu = img.value.coefficient(t, k, l)
            if img != p.scale(mu):
                return p, img
            other = seen.setdefault(lam, (p, mu))
            if other[1] != mu:
                s = other[0] + p
                return s, right(s)
    return None
