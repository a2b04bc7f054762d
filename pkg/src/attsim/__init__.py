"""Seedable simulator of attitude similarity mechanisms on social networks."""

from .config import ConfigError, SimulationConfig, load_config, save_config
from .experiment import (
    ClassStats,
    ReplicationSummary,
    classify_mechanism,
    run_experiment,
    run_replication,
    summarize,
    sweep,
)
from .graph import (
    AttitudeNetwork,
    GraphError,
    LayeringError,
    MissingNodeError,
    RelationClass,
    SelfLoopError,
    TieKind,
)
from .mechanisms import (
    MechanismParams,
    MechanismSchedule,
    Mode,
    StepReport,
    confounding_step,
    contagion_step,
    homophily_step,
    run_simulation,
)
from .metrics import (
    MATRIX_ROWS,
    CorrelationReport,
    EgoAlterMatrix,
    alter_average,
    build_matrix,
    correlation_report,
    pearson,
)
from .netgen import (
    AttachmentDistribution,
    DegenerateDistributionError,
    GenParams,
    StateError,
    attachment_distribution,
    ccdf_loglog_slope,
    degree_ccdf,
    derive_close_ties,
    generate_ba,
)
from .netio import NetworkFormatError, export_network, import_network

__version__ = "0.1.0"
