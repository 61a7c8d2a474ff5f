"""Invariant suites run by ``qhyper verify``.

Each suite returns a list of :class:`Check` records.  Random corpora are
drawn from a seeded ``random.Random`` so runs are reproducible.
"""
from dataclasses import dataclass
from fractions import Fraction
import random

from qhyper.algebra import (
    AlgElt,
    alpha,
    alpha_star,
    antipode,
    coproduct,
    counit,
    gamma,
    gamma_star,
    jproject,
    mul,
    rho,
    star,
    unit,
    xi,
    zdegree,
)
from qhyper.bundles import (
    basis_section,
    decompose_left,
    decompose_right,
    dual_left,
    dual_right,
    recompose_left,
    recompose_right,
)
from qhyper.coeffs import ONE, ZERO, QRat, qint, qpow
from qhyper.connection import (
    CANONICAL,
    Qpc,
    covariant_D,
    gauge_transform,
    gauge_transform_inv,
    germs,
)
from qhyper.forms import (
    E3,
    EM,
    EP,
    Form,
    differential,
    dvol,
    eta_3,
    eta_minus,
    eta_plus,
    form_star,
    hodge_left,
    hodge_left_inv,
    lmul,
    metric_left,
    wedge,
)

__all__ = [
    "Check",
    "SUITES",
    "run_suites",
    "rewrite_word",
    "random_alg",
    "random_base_form",
    "random_horizontal",
]


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    ok: bool
    detail: str = ""


def _check(suite, name, got, want):
    ok = got == want
    detail = "" if ok else f"got {_text(got)}, expected {_text(want)}"
    return Check(suite, name, ok, detail)


def _text(x):
    return x.render() if hasattr(x, "render") else repr(x)


# ----------------------------------------------------------------------
# random corpora


def random_alg(rng, max_exp=2, terms=3, degree=None):
    """Random AlgElt with small exponents; z-homogeneous of the given degree if set."""
    out = AlgElt()
    for _ in range(rng.randint(1, terms)):
        k = rng.randint(0, max_exp)
        l = rng.randint(0, max_exp)
        a = rng.randint(-max_exp, max_exp) if degree is None else degree - k + l
        c = QRat.from_terms({rng.randint(-2, 2): rng.choice([-3, -2, -1, 1, 2, 3])})
        out = out + AlgElt.mono(a, k, l, c)
    return out


def random_base_form(rng, degree, max_exp=2):
    """Random base form of the given degree (coefficients of matching z-weight)."""
    if degree == 0:
        return Form.from_alg(random_alg(rng, max_exp, degree=0))
    if degree == 2:
        return Form.from_alg(random_alg(rng, max_exp, degree=0), EM | EP)
    return Form({EM: random_alg(rng, max_exp, degree=2), EP: random_alg(rng, max_exp, degree=-2)})


def random_horizontal(rng, max_exp=2):
    out = Form()
    for w in (0, EM, EP, EM | EP):
        if rng.random() < 0.6:
            out = out + Form.from_alg(random_alg(rng, max_exp), w)
    return out


def random_form(rng, max_exp=1):
    out = Form()
    for w in (0, EM, EP, E3, EM | EP, EM | E3, EP | E3, EM | EP | E3):
        if rng.random() < 0.4:
            out = out + Form.from_alg(random_alg(rng, max_exp, terms=2), w)
    return out


# ----------------------------------------------------------------------
# letter-by-letter rewriting in the free algebra, used as an oracle for mul


def _rules():
    q, qi, q2 = qpow(1), qpow(-1), qpow(2)
    return {
        ("g", "a"): [(qi, ("a", "g"))],
        ("gs", "a"): [(qi, ("a", "gs"))],
        ("g", "as"): [(q, ("as", "g"))],
        ("gs", "as"): [(q, ("as", "gs"))],
        ("gs", "g"): [(ONE, ("g", "gs"))],
        ("a", "as"): [(ONE, ()), (q2, ("g", "gs"))],
        ("as", "a"): [(ONE, ()), (ONE, ("g", "gs"))],
    }


_RULES = _rules()


def _redexes(word):
    return [i for i in range(len(word) - 1) if (word[i], word[i + 1]) in _RULES]


def rewrite_word(word, rng=None):
    """Normalize a word in a, as, g, gs by applying rewrite rules at random positions."""
    rng = rng or random.Random(0)
    poly = {tuple(word): ONE}
    while True:
        pending = [(w, _redexes(w)) for w in poly]
        pending = [(w, r) for w, r in pending if r]
        if not pending:
            break
        w, reds = rng.choice(pending)
        i = rng.choice(reds)
        c = poly.pop(w)
        for f, repl in _RULES[(w[i], w[i + 1])]:
            nw = w[:i] + repl + w[i + 2:]
            v = poly.get(nw, ZERO) + c * f
            if v:
                poly[nw] = v
            else:
                poly.pop(nw, None)
    out = AlgElt()
    for w, c in poly.items():
        a = w.count("a") - w.count("as")
        out = out + AlgElt.mono(a, w.count("g"), w.count("gs"), c)
    return out


_LETTER_ELT = {"a": alpha, "as": alpha_star, "g": gamma, "gs": gamma_star}


def _word_product(word):
    out = unit()
    for x in word:
        out = mul(out, _LETTER_ELT[x]())
    return out


# ----------------------------------------------------------------------
# suites


def suite_relations(bound=4, seed=0):
    s = "relations"
    a, a_, g, g_ = alpha(), alpha_star(), gamma(), gamma_star()
    q, q2 = qpow(1), qpow(2)
    one = unit()
    out = [
        _check(s, "as a - gs g = 1", a_ * a - g_ * g, one),
        _check(s, "a as - q^2 g gs = 1", a * a_ - (g * g_).scale(q2), one),
        _check(s, "g gs = gs g", g * g_, g_ * g),
        _check(s, "q g a = a g", (g * a).scale(q), a * g),
        _check(s, "q gs a = a gs", (g_ * a).scale(q), a * g_),
    ]
    rng = random.Random(seed)
    bad = 0
    for _ in range(200):
        word = [rng.choice(("a", "as", "g", "gs")) for _ in range(rng.randint(0, 8))]
        want = _word_product(word)
        if rewrite_word(word, rng) != want or rewrite_word(word, rng) != want:
            bad += 1
    out.append(Check(s, "confluence on 200 random words", bad == 0, f"{bad} mismatches" if bad else ""))
    r, x = rho(), xi()
    half, quarter = QRat.from_fraction(Fraction(1, 2)), QRat.from_fraction(Fraction(1, 4))
    lhs1 = (r.scale(q2) + AlgElt.scalar(half)) ** 2 - x * star(x)
    lhs2 = (r + AlgElt.scalar(half)) ** 2 - star(x) * x
    out.append(_check(s, "hyperboloid (q^2 rho + 1/2)^2 - xi xi* = 1/4", lhs1, AlgElt.scalar(quarter)))
    out.append(_check(s, "hyperboloid (rho + 1/2)^2 - xi* xi = 1/4", lhs2, AlgElt.scalar(quarter)))
    corpus = [AlgElt.mono(t, k, l) for t in range(-3, 4) for k in range(4) for l in range(4) if abs(t) + k + l <= 4]
    coassoc = counit_ok = antipode_ok = star_inv = True
    for x in corpus:
        dx = coproduct(x)
        left, right = {}, {}
        for (m1, m2), c in dx.terms.items():
            for (n1, n2), c2 in coproduct(AlgElt.mono(*m1)).terms.items():
                key = (n1, n2, m2)
                left[key] = left.get(key, ZERO) + c * c2
            for (n1, n2), c2 in coproduct(AlgElt.mono(*m2)).terms.items():
                key = (m1, n1, n2)
                right[key] = right.get(key, ZERO) + c * c2
        if {k: v for k, v in left.items() if v} != {k: v for k, v in right.items() if v}:
            coassoc = False
        if dx.apply(lambda y: AlgElt.scalar(counit(y)), lambda y: y).multiply() != x:
            counit_ok = False
        if dx.apply(antipode, lambda y: y).multiply() != AlgElt.scalar(counit(x)):
            antipode_ok = False
        if star(star(x)) != x:
            star_inv = False
    out.append(Check(s, "coassociativity on monomials", coassoc))
    out.append(Check(s, "counit axiom on monomials", counit_ok))
    out.append(Check(s, "antipode axiom on monomials", antipode_ok))
    out.append(Check(s, "star is an involution", star_inv))
    jd = True
    for x in (a, a_, g, g_):
        dj = {}
        for (m1, m2), c in coproduct(x).terms.items():
            j1, j2 = jproject(AlgElt.mono(*m1)), jproject(AlgElt.mono(*m2))
            for n1, c1 in j1.terms.items():
                for n2, c2 in j2.terms.items():
                    dj[(n1, n2)] = dj.get((n1, n2), ZERO) + c * c1 * c2
        if {k: v for k, v in dj.items() if v} != jproject(x).coproduct():
            jd = False
    out.append(Check(s, "j is a coalgebra map on generators", jd))
    add_ok = True
    for _ in range(50):
        x = random_alg(rng, 2, degree=rng.randint(-2, 2))
        y = random_alg(rng, 2, degree=rng.randint(-2, 2))
        if x and y and mul(x, y) and zdegree(mul(x, y)) != zdegree(x) + zdegree(y):
            add_ok = False
    out.append(Check(s, "zdegree is additive", add_ok))
    return out


def _germ(x):
    return germs(x).to_form()


def suite_calculus(bound=4, seed=1):
    s = "calculus"
    rng = random.Random(seed)
    out = []
    corpus = [random_form(rng) for _ in range(12)]
    out.append(Check(s, "d^2 = 0", all(not differential(differential(u)) for u in corpus)))
    out.append(Check(s, "d commutes with star", all(differential(form_star(u)) == form_star(differential(u)) for u in corpus)))
    leib = True
    for _ in range(10):
        u, v = random_form(rng), random_form(rng)
        for k in u.degrees():
            uk = u.degree_part(k)
            lhs = differential(wedge(uk, v))
            rhs = wedge(differential(uk), v) + wedge(uk, differential(v)).scale(QRat.from_int((-1) ** k))
            if lhs != rhs:
                leib = False
    out.append(Check(s, "graded Leibniz rule", leib))

    a, a_, g, g_ = (Form.from_alg(f()) for f in (alpha, alpha_star, gamma, gamma_star))
    e3, ep, em = eta_3(), eta_plus(), eta_minus()
    q = qpow
    rows = [
        ("e3 a = q^-2 a e3", e3 * a, (a * e3).scale(q(-2))),
        ("e3 as = q^2 as e3", e3 * a_, (a_ * e3).scale(q(2))),
        ("e3 g = q^-2 g e3", e3 * g, (g * e3).scale(q(-2))),
        ("e3 gs = q^2 gs e3", e3 * g_, (g_ * e3).scale(q(2))),
    ]
    for name, eta in (("ep", ep), ("em", em)):
        rows += [
            (f"{name} a = q^-1 a {name}", eta * a, (a * eta).scale(q(-1))),
            (f"{name} as = q as {name}", eta * a_, (a_ * eta).scale(q(1))),
            (f"{name} g = q^-1 g {name}", eta * g, (g * eta).scale(q(-1))),
            (f"{name} gs = q gs {name}", eta * g_, (g_ * eta).scale(q(1))),
        ]
    inv = ONE / qint(2)
    rows += [
        ("e3* = -e3", form_star(e3), -e3),
        ("em* = ep", form_star(em), ep),
        ("ep* = em", form_star(ep), em),
        ("d a", differential(a), (a * e3).scale(inv) + (g_ * ep).scale(q(1))),
        ("d as", differential(a_), (a_ * e3).scale(-q(2) * inv) + g * em),
        ("d g", differential(g), (g * e3).scale(inv) + a_ * ep),
        ("d gs", differential(g_), (g_ * e3).scale(-q(2) * inv) + (a * em).scale(q(-1))),
        ("ep em = -q^2 em ep", ep * em, (em * ep).scale(-q(2))),
        ("ep e3 = -q^4 e3 ep", ep * e3, (e3 * ep).scale(-q(4))),
        ("e3 em = -q^4 em e3", e3 * em, (em * e3).scale(-q(4))),
        ("ep^2 = em^2 = e3^2 = 0", (ep * ep, em * em, e3 * e3), (Form(), Form(), Form())),
        ("d e3", differential(e3), (em * ep).scale(-qint(2))),
        ("d ep", differential(ep), (e3 * ep).scale(q(2))),
        ("d em", differential(em), (e3 * em).scale(-q(-2))),
    ]
    out += [_check(s, name, got, want) for name, got, want in rows]

    A, As, G, Gs = alpha(), alpha_star(), gamma(), gamma_star()
    germ_rows = [
        ("pi(g) = ep", _germ(G), ep),
        ("pi(gs) = q^-1 em", _germ(Gs), em.scale(q(-1))),
        ("pi(a - as) = e3", _germ(A - As), e3),
        ("pi(as) = -q^2 pi(a)", _germ(As), _germ(A).scale(-q(2))),
        ("e3 = (1+q^2) pi(a)", _germ(A).scale(qint(2)), e3),
        ("q^2 pi(a^2) = (1+q^2) pi(a)", _germ(A * A).scale(q(2)), _germ(A).scale(qint(2))),
        ("pi(a g) = pi(g)", _germ(A * G), _germ(G)),
        ("pi(a gs) = pi(gs)", _germ(A * Gs), _germ(Gs)),
        ("pi(as g) = pi(g)", _germ(As * G), _germ(G)),
        ("pi(as gs) = pi(gs)", _germ(As * Gs), _germ(Gs)),
    ]
    out += [_check(s, name, got, want) for name, got, want in germ_rows]
    ideal = {
        "g^2": G * G,
        "gs^2": Gs * Gs,
        "g gs": G * Gs,
        "a g - g": A * G - G,
        "a gs - gs": A * Gs - Gs,
        "as g - g": As * G - G,
        "as gs - gs": As * Gs - Gs,
        "q^2 a + as - (1+q^2)": A.scale(q(2)) + As - AlgElt.scalar(qint(2)),
    }
    for name, x in ideal.items():
        out.append(_check(s, f"pi({name}) = 0", _germ(x), Form()))
    mc = True
    for t in range(-2, 3):
        for k in range(3):
            for l in range(3):
                x = AlgElt.mono(t, k, l)
                rhs = Form()
                for c, x1, x2 in coproduct(x).pairs():
                    rhs = rhs + lmul(x1, _germ(x2)).scale(c)
                if rhs != differential(x):
                    mc = False
    out.append(Check(s, "dp = p(1) pi(p(2)) for exponents <= 2", mc))

    D = lambda x: covariant_D(Form.from_alg(x))
    out += [
        _check(s, "D a", D(A), Form.from_alg(Gs, EP).scale(q(1))),
        _check(s, "D as", D(As), Form.from_alg(G, EM)),
        _check(s, "D g", D(G), Form.from_alg(As, EP)),
        _check(s, "D gs", D(Gs), Form.from_alg(A, EM).scale(q(-1))),
    ]
    powers = True
    for n in range(1, max(bound, 6) + 1):
        if D(A ** n) != Form.from_alg(AlgElt.mono(n - 1, 0, 1, q(3 - 2 * n) * qint(n)), EP):
            powers = False
        if D(As ** n) != Form.from_alg(AlgElt.mono(-(n - 1), 1, 0, qint(n)), EM):
            powers = False
        if D(G ** n) != Form.from_alg(mul(As, AlgElt.mono(0, n - 1, 0)).scale(q(1 - n) * qint(n)), EP):
            powers = False
        if D(Gs ** n) != Form.from_alg(mul(A, AlgElt.mono(0, 0, n - 1)).scale(q(-n) * qint(n)), EM):
            powers = False
    out.append(Check(s, "D on powers of generators (n <= 6)", powers))
    return out


def suite_bundles(bound=4, seed=2):
    from qhyper.connection import is_regular

    s = "bundles"
    rng = random.Random(seed)
    out = []
    top = max(bound, 6)
    part_l = part_r = True
    for n in range(-top, top + 1):
        lhs_l, lhs_r = AlgElt(), AlgElt()
        for j, (x, y) in enumerate(zip(dual_left(n).gens, dual_right(n).gens)):
            t = basis_section(n, j).value
            lhs_l = lhs_l + mul(x, t)
            lhs_r = lhs_r + mul(t, y)
        part_l &= lhs_l == unit()
        part_r &= lhs_r == unit()
    out.append(Check(s, f"sum x_nj T^j(1) = 1 for |n| <= {top}", part_l))
    out.append(Check(s, f"sum T^j(1) y_nj = 1 for |n| <= {top}", part_r))
    trip = True
    for n in range(-3, 4):
        for _ in range(4):
            T = random_alg(rng, 2, degree=n)
            phi = covariant_D(Form.from_alg(T))
            if recompose_left(decompose_left(phi, n), n) != phi:
                trip = False
            if recompose_right(decompose_right(phi, n), n) != phi:
                trip = False
    out.append(Check(s, "decompose/recompose round trips on D-images", trip))

    sq = True
    for k in (0, 1, 2):
        for _ in range(8):
            u = random_base_form(rng, k)
            sign = QRat.from_int((-1) ** (k * (2 - k)))
            if hodge_left(hodge_left(u)) != u.scale(sign):
                sq = False
    out.append(Check(s, "hodge_left^2 = (-1)^(k(2-k))", sq))
    pair = True
    for _ in range(50):
        k = rng.choice((0, 1, 2))
        u, v = random_base_form(rng, k), random_base_form(rng, 2 - k)
        if wedge(u, v) != Form.from_alg(metric_left(u, hodge_left_inv(v)), EM | EP):
            pair = False
    out.append(Check(s, "u v = <u, hodge_left_inv v> dvol on 50 random pairs", pair))

    corpus = [Form.from_alg(f()) for f in (alpha, alpha_star, gamma, gamma_star)]
    corpus += [eta_minus(), eta_plus(), dvol(), Form.from_alg(gamma(), EP), Form.from_alg(alpha(), EM)]
    mu = Form.from_alg(AlgElt.mono(2, 0, 0), EM)
    mu = mu - form_star(mu)
    out.append(Check(s, "canonical connection is regular", is_regular(CANONICAL, corpus)))
    out.append(Check(s, "a displaced connection is not regular", not is_regular(Qpc(mu), corpus)))
    out.append(_check(s, "gauge map sends e3 to e3 + mu", gauge_transform(mu, eta_3()), eta_3() + mu))
    inv_ok = all(gauge_transform(mu, gauge_transform_inv(mu, u)) == u for u in (random_form(rng) for _ in range(8)))
    out.append(Check(s, "gauge map composed with its inverse is the identity", inv_ok))
    return out


def suite_spectra(bound=4, seed=3):
    from qhyper.laplacians import (
        SpectrumMismatch,
        base_laplacian_left,
        base_laplacian_right,
        chain_eigenvectors,
        chain_operator,
        gauge_laplacian_left,
        gauge_laplacian_right,
        laplacian_operator,
        product_formula_eigenvector,
        spectrum_table,
    )
    from qhyper.bundles import Section

    s = "spectra"
    out = []
    plan = [(1, 0)] + [(w, n) for n in range(1, bound + 1) for w in (2, 4)]
    plan += [(w, -n) for n in range(1, bound + 1) for w in (3, 5)]
    for which, n in plan:
        try:
            rows = spectrum_table(which, n, bound)
            out.append(Check(s, f"table {which} n={n} ({len(rows)} cells)", True))
        except SpectrumMismatch as exc:
            out.append(Check(s, f"table {which} n={n}", False, str(exc)))
    eig = True
    for side in ("left", "right"):
        for t in range(-2, 3):
            for k in range(bound + 1):
                chain = chain_operator(side, t, k, k)
                op = laplacian_operator(side)
                for j, (p, lam, coeffs) in enumerate(chain_eigenvectors(chain)):
                    if op(p) != p.scale(lam) or product_formula_eigenvector(chain, j) != coeffs:
                        eig = False
    out.append(Check(s, "chain eigenvectors satisfy op p = lambda p", eig))
    lap0 = True
    for t in range(-2, 3):
        for k in range(3):
            l = t + k
            if l < 0 or l > 3:
                continue
            T = AlgElt.mono(t, k, l)
            if gauge_laplacian_left(CANONICAL, T, 0).value != base_laplacian_left(T).coefficient(0):
                lap0 = False
            if gauge_laplacian_right(CANONICAL, T, 0).value != base_laplacian_right(T).coefficient(0):
                lap0 = False
            if base_laplacian_left(T) != base_laplacian_right(T):
                lap0 = False
    out.append(Check(s, "gauge Laplacians equal base Laplacians at n = 0", lap0))
    conj = True
    for n in (1, -1, 2, -2):
        for t, k in ((n, 0), (n, 1), (n - 1, 1)):
            l = t + k - n
            if l < 0:
                continue
            T = Section(AlgElt.mono(t, k, l), n)
            want = gauge_laplacian_left(CANONICAL, T.star()).star()
            if gauge_laplacian_right(CANONICAL, T) != want:
                conj = False
    out.append(Check(s, "right Laplacian = star . left . star", conj))
    return out


SUITES = {
    "relations": suite_relations,
    "calculus": suite_calculus,
    "bundles": suite_bundles,
    "spectra": suite_spectra,
}


def run_suites(names=None, bound=4):
    names = list(SUITES) if names in (None, "all") else [names] if isinstance(names, str) else names
    out = []
    for name in names:
        out += SUITES[name](bound)
    return out
