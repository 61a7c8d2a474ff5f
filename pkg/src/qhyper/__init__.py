"""Exact symbolic engine for SU_q(1,1), its 3D calculus and the quantum hyperboloid."""
from qhyper.coeffs import ONE, ZERO, QRat, qint, qpow, qrat, qrat_add, qrat_eval, qrat_mul
from qhyper.algebra import AlgElt, GroupElt, Monomial, TensorElt
from qhyper.forms import Form
from qhyper.kernel import BACKEND

__all__ = [
    "ONE",
    "ZERO",
    "QRat",
    "qint",
    "qpow",
    "qrat",
    "qrat_add",
    "qrat_eval",
    "qrat_mul",
    "AlgElt",
    "GroupElt",
    "Monomial",
    "TensorElt",
    "Form",
    "BACKEND",
]
__version__ = "0.1.0"
