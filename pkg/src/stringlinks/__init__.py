"""Exact computations with string links, Magnus expansions and Jacobi diagrams."""

from stringlinks.errors import CapExceeded, DomainError, ParseError, StringLinkError
from stringlinks.words import (
    Alphabet,
    ConjClass,
    Generator,
    GroupRingElement,
    GroupWord,
    TraceElement,
    commutator,
    conj_canonical,
    invert,
    multiply,
    parse_element,
    parse_word,
    ring_multiply,
    trace,
)
from stringlinks.magnus import (
    CyclicPoly,
    NcPoly,
    cyclize,
    cyclized_vanishing_order,
    filtration_degree,
    magnus,
    magnus_ring,
)
from stringlinks.braids import (
    BraidWord,
    FreeAutomorphism,
    Longitude,
    artin_action,
    free_pair_embed,
    is_pure,
    linking_number_oracle,
    longitude,
    milnor,
    parse_braid,
    permutation,
    pure_generator,
)

__version__ = "0.1.0"
