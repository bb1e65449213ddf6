"""flagrep: exact character arithmetic for maps between flag manifolds.

The package decides which integer matrices, read as homomorphisms on the
second cohomology of complete flag manifolds, are induced by actual maps:
it forms the s-invariant of the matrix, tests whether that polynomial is
the character of an n-dimensional representation, and when it is, emits
the representation as a constructive certificate.
"""

from ._kernels import kernel_backend
from .cartan import (
    CartanData,
    Weight,
    builtin_cartan,
    cartan_from_tag,
    custom_cartan,
    dominant_representative,
    inner,
    is_dominant,
    simple_reflection,
    weyl_orbit,
)
from .characters import (
    Certificate,
    NotInOmega,
    certificate_character,
    decompose,
    dimension,
    dominant_weights_up_to_dim,
    is_in_omega_n,
    omega_n_enumerate,
    weight_multiplicities,
)
from .charpoly import CharPoly, NormalMonomial, denormalize, normalize, parse, render
from .errors import InputError, ResourceCapError
from .realize import (
    CohomHom,
    FactorizationCheck,
    NotCertified,
    SchurRealization,
    TorusRestriction,
    check_realizable,
    cohom_from_json,
    cohom_from_rows,
    induced_hom,
    realize_schur,
    s_map,
    torus_restriction_from_certificate,
    verify_factorization,
)
from .schur import (
    Partition,
    YPoly,
    alpha,
    alpha_inverse,
    parse_partition,
    parse_ypoly,
    render_ypoly,
    schur,
    schur_dim,
    ssyt_contents,
    weight_of_partition,
    weights_of_schur,
)

__version__ = "0.1.0"

__all__ = [
    "CartanData",
    "Certificate",
    "CharPoly",
    "CohomHom",
    "FactorizationCheck",
    "InputError",
    "NormalMonomial",
    "NotCertified",
    "NotInOmega",
    "Partition",
    "ResourceCapError",
    "SchurRealization",
    "TorusRestriction",
    "Weight",
    "YPoly",
    "alpha",
    "alpha_inverse",
    "builtin_cartan",
    "cartan_from_tag",
    "certificate_character",
    "check_realizable",
    "cohom_from_json",
    "cohom_from_rows",
    "custom_cartan",
    "decompose",
    "denormalize",
    "dimension",
    "dominant_representative",
    "dominant_weights_up_to_dim",
    "induced_hom",
    "inner",
    "is_dominant",
    "is_in_omega_n",
    "kernel_backend",
    "normalize",
    "omega_n_enumerate",
    "parse",
    "parse_partition",
    "parse_ypoly",
    "realize_schur",
    "render",
    "render_ypoly",
    "s_map",
    "schur",
    "schur_dim",
    "simple_reflection",
    "ssyt_contents",
    "torus_restriction_from_certificate",
    "verify_factorization",
    "weight_multiplicities",
    "weight_of_partition",
    "weights_of_schur",
    "weyl_orbit",
]
