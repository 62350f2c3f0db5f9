"""Exact q-umbral calculus for q-Appell families, with an identity auditor."""

from .appell import AppellFamily, make_bernoulli, make_euler, make_family, make_genocchi, make_genocchi_order
from .errors import (
    ConsistencyError,
    ContextMismatch,
    NonOrthonormalFamily,
    QUmbralError,
    TruncationError,
    UnsupportedOperation,
)
from .genocchi import BasisExpansion, expand_in_order_m_basis, from_genocchi_basis, to_genocchi_basis
from .qcore import INFINITY, QContext, Rational, q_binomial, q_factorial, q_number
from .qpoly import Poly
from .qseries import Series, e_q_series
from .umbral import Functional, apply, operator_apply
from .verdict import AuditVerdict

__version__ = "0.1.0"

__all__ = [
    "AppellFamily",
    "AuditVerdict",
    "BasisExpansion",
    "ConsistencyError",
    "ContextMismatch",
    "Functional",
    "INFINITY",
    "NonOrthonormalFamily",
    "Poly",
    "QContext",
    "QUmbralError",
    "Rational",
    "Series",
    "TruncationError",
    "UnsupportedOperation",
    "apply",
    "e_q_series",
    "expand_in_order_m_basis",
    "from_genocchi_basis",
    "make_bernoulli",
    "make_euler",
    "make_family",
    "make_genocchi",
    "make_genocchi_order",
    "operator_apply",
    "q_binomial",
    "q_factorial",
    "q_number",
    "to_genocchi_basis",
]
