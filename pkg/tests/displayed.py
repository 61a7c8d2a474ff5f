"""Displayed eigenvalue formulas, transcribed independently of the library tables."""
from qhyper.coeffs import ONE, qint as I, qpow as Q


# name -> (side, monomial (a, k, l) for an instance, scalar); each entry is a
# function of the free exponent(s) returning ((a, k, l), eigenvalue)
SINGLE = {
    # left Laplacian
    "n=0 alpha^k gs^k": ("left", lambda k: ((k, 0, k), -Q(-2 * k) * (ONE + Q(4)) * I(k) * I(k + 1))),
    "n=0 as^k g^k": ("left", lambda k: ((-k, k, 0), -Q(-2 * k) * (ONE + Q(4)) * I(k) * I(k + 1))),
    "n>0 alpha^n": ("left", lambda n: ((n, 0, 0), -Q(4) * I(n))),
    "n>0 alpha^t g^k": ("left", lambda t, k: ((t, k, 0), -Q(4) * (I(t) + Q(2 * t) * I(k)))),
    "n>0 g^n": ("left", lambda n: ((0, n, 0), -Q(4) * I(n))),
    "n>0 alpha^t gs^l": ("left", lambda t, l: ((t, 0, l), -Q(-2 * l) * (I(t + 1) * I(l) + Q(4) * I(t) * I(l + 1)))),
    "n>0 as^t g^k": ("left", lambda t, k: ((-t, k, 0), -Q(-2 * t) * (I(t) * I(k + 1) + Q(4) * I(t + 1) * I(k)))),
    "n<0 as^m": ("left", lambda m: ((-m, 0, 0), -Q(-2 * m) * I(m))),
    "n<0 as^t gs^l": ("left", lambda t, l: ((-t, 0, l), -Q(-2 * t) * (I(t) + Q(-2 * l) * I(l)))),
    "n<0 gs^m": ("left", lambda m: ((0, 0, m), -Q(-2 * m) * I(m))),
    "n<0 alpha^t gs^l": ("left", lambda t, l: ((t, 0, l), -Q(-2 * l) * (I(t + 1) * I(l) + Q(4) * I(t) * I(l + 1)))),
    # right Laplacian
    "right n>0 alpha^n": ("right", lambda n: ((n, 0, 0), -Q(-2 * n) * I(n))),
    "right n>0 alpha^t g^k": ("right", lambda t, k: ((t, k, 0), -Q(-2 * k) * (Q(-2 * t) * I(t) + I(k)))),
    "right n>0 g^n": ("right", lambda n: ((0, n, 0), -Q(-2 * n) * I(n))),
    "right n>0 alpha^t gs^l": ("right", lambda t, l: ((t, 0, l), -Q(-2 * t) * (Q(4) * I(t + 1) * I(l) + I(t) * I(l + 1)))),
    "right n>0 as^t g^k": ("right", lambda t, k: ((-t, k, 0), -Q(-2 * k) * (I(k) * I(t + 1) + Q(4) * I(t) * I(k + 1)))),
    "right n<0 as^m": ("right", lambda m: ((-m, 0, 0), -Q(4) * I(m))),
    "right n<0 as^t gs^l": ("right", lambda t, l: ((-t, 0, l), -Q(4) * (I(t) + Q(2 * t) * I(l)))),
    "right n<0 gs^m": ("right", lambda m: ((0, 0, m), -Q(4) * I(m))),
    "right n<0 alpha^t gs^l": ("right", lambda t, l: ((t, 0, l), -Q(-2 * t) * (I(t) * I(l + 1) + Q(4) * I(t + 1) * I(l)))),
    "right n<0 as^t g^k": ("right", lambda t, k: ((-t, k, 0), -Q(-2 * k) * (I(t + 1) * I(k) + Q(4) * I(t) * I(k + 1)))),
}

# admissible instances per entry: the smallest one and a larger one
INSTANCES = {
    "n=0 alpha^k gs^k": [(1,), (4,)],
    "n=0 as^k g^k": [(1,), (4,)],
    "n>0 alpha^n": [(1,), (5,)],
    "n>0 alpha^t g^k": [(1, 1), (3, 2)],
    "n>0 g^n": [(1,), (5,)],
    "n>0 alpha^t gs^l": [(2, 1), (5, 2)],
    "n>0 as^t g^k": [(1, 2), (2, 5)],
    "n<0 as^m": [(1,), (5,)],
    "n<0 as^t gs^l": [(1, 1), (2, 3)],
    "n<0 gs^m": [(1,), (5,)],
    "n<0 alpha^t gs^l": [(1, 2), (2, 5)],
    "right n>0 alpha^n": [(1,), (5,)],
    "right n>0 alpha^t g^k": [(1, 1), (3, 2)],
    "right n>0 g^n": [(1,), (5,)],
    "right n>0 alpha^t gs^l": [(2, 1), (5, 2)],
    "right n>0 as^t g^k": [(1, 2), (2, 5)],
    "right n<0 as^m": [(1,), (5,)],
    "right n<0 as^t gs^l": [(1, 1), (2, 3)],
    "right n<0 gs^m": [(1,), (5,)],
    "right n<0 alpha^t gs^l": [(1, 2), (2, 5)],
    "right n<0 as^t g^k": [(2, 1), (5, 2)],
}


# lower coefficient of the two-term actions: op(a^t g^k gs^l) has the term
# coefficient * a^t g^(k-1) gs^(l-1)
def lower_coefficient(side, t, k, l):
    base = (ONE + Q(4)) * I(k) * I(l)
    if side == "right":
        return -Q(-2 * k) * base
    if t == 0:
        return -Q(-2 * l) * base
    if t > 0:
        return -Q(-2 * l + 2 * t) * base
    return -Q(2 * t - 2 * l) * base


# non-commutativity proof for T(1) = alpha^n g gs, U(1) = alpha^n
def proof_b(n):
    b1 = -(I(n + 1) + Q(2 * n + 2) + Q(4) * (ONE + Q(2)) * I(n) + Q(4 + 2 * n) * (ONE + Q(2)))
    b2 = -Q(-2 + 2 * n) * (ONE + Q(4))
    b3 = -Q(4) * I(n)
    return b1, b2, b3


def proof_c(n):
    c1 = -Q(-2 * n) * ((ONE + Q(2)) * I(n) + Q(-2) * (ONE + Q(2)) + Q(4) * I(n + 1) + Q(2))
    c2 = -Q(-2) * (ONE + Q(4))
    c3 = -Q(-2 * n) * I(n)
    return c1, c2, c3


def proof_scalar(n):
    b1, b2, b3 = proof_b(n)
    c1, c2, c3 = proof_c(n)
    return b1 * c2 + b2 * c3 - b2 * c1 - b3 * c2
