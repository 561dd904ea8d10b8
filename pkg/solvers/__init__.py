# Concrete ISD solvers over restricted error sets
from solvers.config import ALGORITHMS, LevelShape, SolverConfig, default_iteration_cap, validate_config
from solvers.representations import count_representations
from solvers.merge import MergeList, concatenation_merge, representation_merge, enumerate_vectors
from solvers.report import SolverReport, FOUND, EXHAUSTED
from solvers.isd import solve, solve_bjmm, solve_prange, solve_stern
from solvers.shifted import shift_transform, solve_shifted_bcj, unshift, weight_sweep
from solvers.planner import plan_config
