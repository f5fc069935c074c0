"""Exact computations with internal cohom objects of quadratic algebras,
coend comonoids, corepresentations and the translation of linear
representations into corepresentations."""

from .exactlin import GF, QQ, Field, FieldError, Matrix, Subspace, field_from_name

__version__ = "0.1.0"

__all__ = ["Field", "FieldError", "GF", "Matrix", "QQ", "Subspace", "field_from_name", "__version__"]
