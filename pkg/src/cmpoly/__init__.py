"""Class polynomials and prime-order elliptic curves by complex multiplication."""
from .classpoly import (ClassPolynomial, build, double_eta_poly, hilbert_poly, ramanujan_poly,
                        single_eta_poly, weber_poly)
from .family import HILBERT, RAMANUJAN, WEBER, Family, double_eta, single_eta
from .forms import QuadraticForm, class_number, principal_form, reduced_forms

__version__ = "0.1.0"
