"""Projective Reed-Muller-type codes, projective Segre codes, and exact
checks of their direct-product structure over finite fields."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    BudgetExceeded,
    DegenerateField,
    DimensionMismatch,
    DivisionByZero,
    DuplicatePoint,
    FieldMismatch,
    NotPrimePower,
    SegreCodesError,
    UnsupportedField,
    ZeroVector,
)
from .gf import FieldSpec, arith, enumerate_elements, inv, make_field  # noqa: E402
from .matcodes import (  # noqa: E402
    LinearCode,
    MatrixGF,
    direct_product_code,
    gaussian_binomial,
    ghw,
    kronecker,
    min_distance,
    rref,
    rowspace_equal,
    support,
)
from .projgeom import (  # noqa: E402
    PointSet,
    ProjectivePoint,
    canonicalize,
    custom_set,
    parameterized_set,
    projective_space,
    projective_torus,
    segre_embed,
)
from .rmtype import (  # noqa: E402
    EvaluationCode,
    evaluate_monomial,
    evaluation_code,
    hilbert_function,
    monomials_of_degree,
    quotient_invariants,
)
from .verify import (  # noqa: E402
    SegreConfig,
    VerificationReport,
    standard_suite,
    sweep,
    verify_hilbert_product,
    verify_parameterized_closure,
    verify_segre,
)
