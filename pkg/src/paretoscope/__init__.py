"""Skyline computation and explanation for multi-criteria decision support."""

from .analytics import (
    AttributeStats,
    DiffMatrix,
    DominationPartition,
    Histogram,
    SearchOutcome,
    attribute_ranking,
    brush_filter,
    build_attribute_stats,
    build_diff_matrix,
    domination_partition,
    exclusive_dominated_details,
    search_point,
    standardized_diff,
    summary_diff,
    value_distribution,
)
from .dataset import Attribute, DataPoint, Dataset, unify_directions
from .embedding import (
    Embedding2D,
    EmbeddingConfig,
    ExactTSNE,
    GlyphPayload,
    distance_matrix,
    embed_skyline,
    glyph_payload,
    standardize,
    tsne_embed,
)
from .errors import (
    AnalysisError,
    CapacityError,
    ConfigError,
    ConflictError,
    ContractViolation,
    NotFoundError,
    ParseError,
)
from .ingest import (
    DatasetDescriptor,
    DatasetRegistry,
    QueryConfig,
    apply_query_config,
    load_csv,
)
from .skyline import (
    SkylineBNL,
    SkylineResult,
    compute_skyline,
    dominated_set,
    dominates,
    dominators_of,
)
from .subspace import (
    DecisiveSubspaceSet,
    decisive_subspaces,
    subspace_membership_map,
    subspace_skyline,
)

__version__ = "0.1.0"
