from .caches import FileCache, NullCache, open_cache
from .certificate import certificate_bytes
from .claims import (
    verify_average,
    verify_caterpillar,
    verify_flip_span,
    verify_membership_lemma,
    verify_stability,
    verify_theorem1,
    verify_universality,
    verify_vanishing,
    verify_xi_compatibility,
)
from .context import VerificationContext

__all__ = [
    "FileCache",
    "NullCache",
    "open_cache",
    "certificate_bytes",
    "verify_average",
    "verify_caterpillar",
    "verify_flip_span",
    "verify_membership_lemma",
    "verify_stability",
    "verify_theorem1",
    "verify_universality",
    "verify_vanishing",
    "verify_xi_compatibility",
    "VerificationContext",
]
