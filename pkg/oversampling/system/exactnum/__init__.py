"""Exact scalar and integer-matrix arithmetic."""
# Oversampling
from oversampling.system.exactnum.normalforms import hnf  # noQA
from oversampling.system.exactnum.normalforms import snf  # noQA
from oversampling.system.exactnum.quadratic import ComplexQuad  # noQA
from oversampling.system.exactnum.quadratic import QuadScalar  # noQA
from oversampling.system.exactnum.rational import Rational  # noQA
from oversampling.system.exactnum.rational import as_rational  # noQA
from oversampling.system.exactnum.rational import format_rational  # noQA
