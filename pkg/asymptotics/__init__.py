# Asymptotic cost models, optimizer and security estimates
from asymptotics.entropy import h, g2, ratio, binomial_exponent
from asymptotics.models import (
    MODEL_VARIANTS,
    AsymptoticPoint,
    CostBreakdown,
    InternalParams,
    bjmm_cost,
    iteration_exponent,
    level_weights,
    stern_cost,
)
from asymptotics.optimizer import OptimizationResult, OptimizerSettings, optimize
from asymptotics.security import (
    AlgorithmSpec,
    SecurityEstimate,
    SweepTable,
    parse_grid,
    security_bits,
    sweep_curve,
    unique_weight_boundary,
    uniqueness_exponent,
)
from asymptotics.table import TableEntry, TableRow, report_csv, table_report, table_rows
