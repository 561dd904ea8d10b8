"""
Decoding instances: generation, validation and the JSON file format.

JSON field order is fixed: q, z, g, n, k, w, H, s, e, seed.
"""

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np

from galois_core.error_sets import SUPPORTED_Z, RestrictedSet, build_error_sets
from galois_core.field import PrimeField, find_order_z_element
from galois_core.linalg import matmul_mod
from galois_core.rng import stream
from shared.debug_log import debug
from shared.errors import FieldError, InputError


def restricted_set(q: int, z: int) -> RestrictedSet:
    """E = {g^1..g^z} without an extension alphabet, for any z dividing q-1."""
    field = PrimeField(q)
    g = find_order_z_element(q, z)
    E = tuple(field.pow(g, i) for i in range(1, z + 1))
    return RestrictedSet(field=field, z=z, g=g, E=E)


def error_set_for(q: int, z: int) -> RestrictedSet:
    """Full error sets when an extension alphabet exists, plain E otherwise."""
    plain = restricted_set(q, z)
    if z not in SUPPORTED_Z:
        return plain
    try:
        return build_error_sets(q, z)
    except FieldError as e:
        debug.warn(f"No extension alphabet for q={q}, z={z}: {e}")
        return plain


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=np.int64)
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class DecodingInstance:
    """(H, s, w) over GF(q) with errors restricted to E0."""
    restricted: RestrictedSet
    n: int
    k: int
    w: int
    H: np.ndarray
    s: np.ndarray
    planted_e: Optional[np.ndarray] = None
    seed: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "H", _frozen(self.H))
        object.__setattr__(self, "s", _frozen(self.s))
        if self.planted_e is not None:
            object.__setattr__(self, "planted_e", _frozen(self.planted_e))
        self.validate()

    @property
    def field(self) -> PrimeField:
        return self.restricted.field

    @property
    def q(self) -> int:
        return self.restricted.q

    @property
    def z(self) -> int:
        return self.restricted.z

    def validate(self):
        n, k, w = self.n, self.k, self.w
        if not 0 < k < n:
            raise InputError(f"Need 0 < k < n, got n={n}, k={k}")
        if not 0 <= w <= n:
            raise InputError(f"Need 0 <= w <= n, got w={w}, n={n}")
        if self.H.shape != (n - k, n):
            raise InputError(f"H has shape {self.H.shape}, expected {(n - k, n)}")
        if self.s.shape != (n - k,):
            raise InputError(f"s has length {self.s.shape}, expected {n - k}")
        for name, a in (("H", self.H), ("s", self.s)):
            if a.size and (a.min() < 0 or a.max() >= self.q):
                raise InputError(f"{name} has entries outside [0, q-1]")
        if self.planted_e is not None:
            if self.planted_e.shape != (n,):
                raise InputError(f"e has length {self.planted_e.shape}, expected {n}")
            if not verify_solution(self, self.planted_e):
                raise InputError("Planted error is not a solution of the instance")

    def syndrome(self, e) -> np.ndarray:
        return matmul_mod(np.asarray(e, dtype=np.int64), self.H.T, self.q)


def verify_solution(instance: DecodingInstance, e) -> bool:
    """Entries in E0, Hamming weight w and e*H^T = s."""
    e = np.asarray(e, dtype=np.int64)
    if e.shape != (instance.n,):
        return False
    if not instance.restricted.is_restricted(e):
        return False
    if int(np.count_nonzero(e % instance.q)) != instance.w:
        return False
    return bool(np.array_equal(instance.syndrome(e), instance.s))


def sample_instance(q: int, z: int, n: int, k: int, w: int, seed: int) -> DecodingInstance:
    """
    Random instance with a planted solution.

    H is uniform, the planted error has a uniform weight-w support with
    values uniform in E. The output depends only on the arguments.
    """
    if not 0 < k < n:
        raise InputError(f"Need 0 < k < n, got n={n}, k={k}")
    if not 0 <= w <= n:
        raise InputError(f"Need 0 <= w <= n, got w={w}, n={n}")
    restricted = error_set_for(q, z)
    rng = stream(seed, 0)

    H = restricted.field.random(rng, n - k, n)
    e = np.zeros(n, dtype=np.int64)
    support = rng.choice(n, size=w, replace=False)
    e[support] = rng.choice(np.array(restricted.E, dtype=np.int64), size=w)
    s = matmul_mod(e, H.T, q)

    return DecodingInstance(restricted=restricted, n=n, k=k, w=w, H=H, s=s,
                            planted_e=e, seed=seed)


def instance_to_json(instance: DecodingInstance) -> str:
    payload = {
        "q": instance.q,
        "z": instance.z,
        "g": instance.restricted.g,
        "n": instance.n,
        "k": instance.k,
        "w": instance.w,
        "H": instance.H.tolist(),
        "s": instance.s.tolist(),
        "e": None if instance.planted_e is None else instance.planted_e.tolist(),
        "seed": instance.seed,
    }
    return json.dumps(payload, separators=(",", ":")) + "\n"


def instance_from_json(text: str) -> DecodingInstance:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"Instance is not valid JSON: {e}") from e
    if not isinstance(data, dict):
        raise InputError("Instance JSON must be an object")

    missing = [key for key in ("q", "z", "g", "n", "k", "w", "H", "s") if key not in data]
    if missing:
        raise InputError(f"Instance JSON lacks fields: {', '.join(missing)}")

    try:
        q, z, g = int(data["q"]), int(data["z"]), int(data["g"])
        n, k, w = int(data["n"]), int(data["k"]), int(data["w"])
        H = np.array(data["H"], dtype=np.int64).reshape(n - k, n) if n > k else None
        s = np.array(data["s"], dtype=np.int64)
        e = None if data.get("e") is None else np.array(data["e"], dtype=np.int64)
        seed = data.get("seed")
        if seed is not None:
            if isinstance(seed, bool) or (isinstance(seed, float) and not seed.is_integer()):
                raise ValueError(f"seed must be an integer, got {seed!r}")
            seed = int(seed)
    except (TypeError, ValueError) as e:
        raise InputError(f"Malformed instance field: {e}") from e
    if H is None:
        raise InputError(f"Need 0 < k < n, got n={n}, k={k}")

    restricted = error_set_for(q, z)
    if restricted.g != g:
        raise InputError(f"g={g} is not the canonical order-{z} element {restricted.g}")
    return DecodingInstance(restricted=restricted, n=n, k=k, w=w, H=H, s=s,
                            planted_e=e, seed=seed)


def write_instance(instance: DecodingInstance, path) -> None:
    Path(path).write_text(instance_to_json(instance), encoding="utf-8")


def read_instance(path) -> DecodingInstance:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"Cannot read instance {path}: {e}") from e
    return instance_from_json(text)
