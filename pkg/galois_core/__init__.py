# Field arithmetic, error sets, instances and elimination
from galois_core.field import PrimeField, FieldElement, find_order_z_element, is_prime
from galois_core.error_sets import RestrictedSet, build_error_sets, binary_set, SUPPORTED_Z
from galois_core.instance import (
    DecodingInstance,
    error_set_for,
    instance_from_json,
    instance_to_json,
    read_instance,
    restricted_set,
    sample_instance,
    verify_solution,
    write_instance,
)
from galois_core.linalg import matmul_mod, matrix_inverse
from galois_core.pge import PGEForm, pge
from galois_core.uniqueness import uniqueness_log2, max_unique_weight
from galois_core.oracle import brute_force_solve, search_space
from galois_core.rng import stream
