from .config import Config
from .polyalg import DimensionPolynomial, QPolynomial
from .schedules import BivariateSeries, dim_exact, hilbert_schedules
from .stability import CountingState, count_poly, dimension_polynomial
from .oracle import hilbert_parking, interpolate_dimension_poly


__all__ = [
    "Config",
    "DimensionPolynomial",
    "QPolynomial",
    "BivariateSeries",
    "dim_exact",
    "hilbert_schedules",
    "CountingState",
    "count_poly",
    "dimension_polynomial",
    "hilbert_parking",
    "interpolate_dimension_poly",
]
