from .embedding import (
    TreeEmbedding,
    caterpillar_embedding,
    congestion,
    join_embeddings,
    restrict_embedding,
    validate_embedding,
)
from .carving import (
    carving_width_exact,
    carving_width_lower,
    carving_width_upper,
)
from .treewidth import treewidth_exact, treewidth_lower, treewidth_upper
from .decomposition import (
    TreeDecomposition,
    blowup_decomposition,
    join_decompositions,
    read_td,
    td_validate,
    write_td,
)
from .immersion import (
    CrushCertificate,
    apply_certificate,
    bienstock_check,
    lift,
    remove_node,
)

__all__ = [
    "TreeEmbedding",
    "caterpillar_embedding",
    "congestion",
    "join_embeddings",
    "restrict_embedding",
    "validate_embedding",
    "carving_width_exact",
    "carving_width_lower",
    "carving_width_upper",
    "treewidth_exact",
    "treewidth_lower",
    "treewidth_upper",
    "TreeDecomposition",
    "blowup_decomposition",
    "join_decompositions",
    "read_td",
    "td_validate",
    "write_td",
    "CrushCertificate",
    "apply_certificate",
    "bienstock_check",
    "lift",
    "remove_node",
]
