"""Semirigid systems of equivalence relations on finite sets.

A system is semirigid when the identity and the constant maps are its only
endomorphisms.  The package provides the ground representations, an
endomorphism search with class-consistency pruning, planar three-direction
systems with a monogenicity certificate, the named construction families,
3-net embedding through latin square completion, partition lattice tools
with a small-size census, and the set-valued ultrametric view.
"""

from .core import (
    Partition,
    SelfMap,
    System,
    is_homomorphism,
    is_reduced,
    restrict,
)
from .search import (
    CoordinateFamily,
    EndoEnumeration,
    EndoReport,
    canonical_embedding,
    coordinate_families,
    count_endomorphisms,
    endomorphisms,
    is_semirigid,
)
from .constructions import (
    from_matrix,
    pierce_system,
    product_system,
    simplex_system,
    tn,
    tn2,
    tn2p,
    to_matrix,
    u_example,
    zadori,
)
from .planar import (
    Certificate,
    CertificateResult,
    EmbedResult,
    GroupEnvelope,
    Homothety,
    PlanarSet,
    closure,
    delta_step,
    embed_search,
    fit_homothety,
    group_envelope,
    induced_system,
    is_monogenic,
    is_triangle,
    semirigidity_certificate,
    symmetry_center,
)
from .nets import (
    LatinSquare,
    PartialLatinSquare,
    embed_into_3net,
    evans_extend,
    is_3net,
    latin_to_3net,
    orthogonal,
    strongly_orthogonal,
    to_partial_latin,
)
from .lattice import (
    Isomorphism,
    are_isomorphic,
    census,
    canonical_triple,
    generates_eqv,
    is_m3,
    iter_partitions,
    join,
    meet,
    semirigid_triples,
)
from .ultra import (
    ChainUltrametric,
    chain_nonexpansive,
    is_nonexpansive,
    proper_nonexpansive_map,
    set_distance,
)

__version__ = "0.1.0"
