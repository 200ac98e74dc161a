"""Green's relations, amiable/adequate classification and small-semigroup censuses."""

from .cayley import (
    CayleyTable,
    ElementSet,
    IsoWitness,
    adjoin_identity,
    canonical_form,
    find_isomorphism,
    generated_subsemigroup,
    idempotents,
    validate,
)
from .classify import ClassificationReport, check_quasi_identity, classify, idempotents_commute, verify_amiable_axioms
from .errors import NotAmiable, NotAmiableInput, NotAssociative, OutOfRangeEntry, SemilabError
from .green import GreenProfile, Partition, green_classic, green_profile, green_star, green_tilde, idempotent_maps
from .pattern import M_TABLE, EmbeddingWitness, find_embedding, find_M, verify_main_theorem_finite

__version__ = "0.1.0"
