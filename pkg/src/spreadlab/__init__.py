"""Spread of finite simple groups.

Two toolchains share this package.  For small permutation groups,
``GroupIndex`` + ``matrix_from_spec`` + ``exact_spread`` compute the
spread exactly as a minimum set-cover over element supports.  For large
sporadic groups, ``even_order_trick`` + ``certify`` re-derive certified
upper bounds from a conjugacy class table and a certificate of evidence.
"""

from .cover import (
    CoverSearchConfig,
    SpreadResult,
    exact_spread,
    greedy_cover,
    spread_at_least,
    woldar_bound_elementwise,
)
from .errors import (
    BudgetExhausted,
    CountMismatch,
    DegreeMismatch,
    IdentityArgument,
    MissingPowerMap,
    OrderExceedsCap,
    OutOfRange,
    ParseError,
    ResidualMismatch,
    SpreadLabError,
    TargetNotSylowCentral,
    ValidationError,
)
from .fixtures import (
    Certificate,
    ClassTable,
    EvidenceItem,
    GroupSpec,
    class_table_from_group,
    default_data_dir,
    load_certificate,
    load_class_table,
    load_group_spec,
    load_passthrough,
    parse_certificate,
    parse_class_table,
    parse_group_spec,
    parse_passthrough,
)
from .perm import (
    ClassPartition,
    GroupIndex,
    StabilizerChain,
    compose,
    element_order,
    from_cycles,
    group_order,
    to_cycles,
    two_generates,
)
from .support import SupportMatrix, matrix_from_spec
from .trick import (
    CertificateReport,
    TrickReport,
    brenner_wiegold_spread,
    certify,
    check_evidence,
    even_order_trick,
    power_class,
    power_closure,
    woldar_bound,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExhausted",
    "Certificate",
    "CertificateReport",
    "ClassPartition",
    "ClassTable",
    "CountMismatch",
    "CoverSearchConfig",
    "DegreeMismatch",
    "EvidenceItem",
    "GroupIndex",
    "GroupSpec",
    "IdentityArgument",
    "MissingPowerMap",
    "OrderExceedsCap",
    "OutOfRange",
    "ParseError",
    "ResidualMismatch",
    "SpreadLabError",
    "SpreadResult",
    "StabilizerChain",
    "SupportMatrix",
    "TargetNotSylowCentral",
    "TrickReport",
    "ValidationError",
    "brenner_wiegold_spread",
    "certify",
    "check_evidence",
    "class_table_from_group",
    "compose",
    "default_data_dir",
    "element_order",
    "even_order_trick",
    "exact_spread",
    "from_cycles",
    "greedy_cover",
    "group_order",
    "load_certificate",
    "load_class_table",
    "load_group_spec",
    "load_passthrough",
    "matrix_from_spec",
    "parse_certificate",
    "parse_class_table",
    "parse_group_spec",
    "parse_passthrough",
    "power_class",
    "power_closure",
    "spread_at_least",
    "to_cycles",
    "two_generates",
    "woldar_bound",
    "woldar_bound_elementwise",
]
