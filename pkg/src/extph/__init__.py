"""Extended persistence barcodes and cycle representatives for graphs."""

from . import errors
from .backend import HAVE_NATIVE, active_backend, available_backends
from .extended import (
    Bar,
    CycleRepresentative,
    ExtendedBarcode,
    bar_base_values,
    barcode_from_json,
    barcode_to_json,
    compute_batch,
    compute_extended_persistence,
    cycle_scalars,
)
from .graph import (
    Graph,
    IndexFiltration,
    TieBreakPolicy,
    ValidationReport,
    build_lower_filtration,
    build_upper_filtration,
    graph_from_json,
    graph_to_json,
    validate_graph,
)
from .lct import DynamicForest
from .oracle import build_coned_filtration, oracle_barcode, reduce_and_pair
from .ph0 import PhZeroResult, UnionFindForest, component_extrema, ph0
from .vectorize import (
    RationalHatParams,
    init_rational_hat_params,
    rational_hat,
    rational_hat_grad,
    vectorize_barcode,
)

__version__ = "0.1.0"
