"""
Asymptotic cost models.

All quantities are exponents relative to n: a cost of 2^(F n) is
reported as F = N + C, with N the iteration exponent and C the
enumeration exponent of the small instance.

For a levels the enumeration exponent is the maximum of

    Sigma_a / 2,  Sigma_a - U_{a-1},
    2 Sigma_j - U_{j-1} - U_{j-2}   for j = a..1,  with U_{-1} = Q L

where Sigma_i is the size of the level-i search space and U_i the
exponent of the representations of a level-i vector. The windows must
nest: U_{a-1} <= ... <= U_0 <= Q L.
"""

import math
from dataclasses import asdict, dataclass, field
from typing import List, Optional, Tuple

from asymptotics.entropy import g2, h, ratio
from shared.errors import DomainError, InputError

MODEL_VARIANTS = ("stern", "plain", "plus_z2", "plus_z4", "plus_z6", "shifted")


@dataclass(frozen=True)
class AsymptoticPoint:
    Q: float
    Z: float
    R: float
    W: float

    def __post_init__(self):
        if not 0 < self.R < 1:
            raise InputError(f"Rate R={self.R} must lie in (0, 1)")
        if not 0 <= self.W <= 1:
            raise InputError(f"Weight W={self.W} must lie in [0, 1]")
        if self.Q <= 0 or self.Z < 0 or self.Q < self.Z:
            raise InputError(f"Need Q > 0 and 0 <= Z <= Q, got Q={self.Q}, Z={self.Z}")

    @classmethod
    def of(cls, q: float, z: float, R: float, W: float) -> "AsymptoticPoint":
        return cls(math.log2(q), math.log2(z), R, W)


@dataclass(frozen=True)
class InternalParams:
    """Free parameters of one model. Per-level tuples are indexed 1..a as [0..a-1]."""
    variant: str
    levels: int
    L: float
    V: float
    E: Tuple[float, ...] = ()
    B: Tuple[float, ...] = ()
    C: Tuple[float, ...] = ()

    def __post_init__(self):
        if self.variant not in MODEL_VARIANTS:
            raise InputError(f"Unknown model variant {self.variant!r}")
        for name in ("E", "B", "C"):
            value = tuple(float(x) for x in getattr(self, name))
            object.__setattr__(self, name, value or (0.0,) * self.levels)

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class CostBreakdown:
    N: float
    C: float
    F: float
    # Sigma_0..Sigma_a and U_0..U_{a-1}
    sigma: List[float] = field(default_factory=list)
    U: List[float] = field(default_factory=list)
    V: List[float] = field(default_factory=list)
    M: List[float] = field(default_factory=list)
    terms: List[Tuple[str, float]] = field(default_factory=list)
    dominant: str = ""
    memory: float = 0.0
    # Total violation of window nesting and the optional memory cap
    violation: float = 0.0
    params: Optional[InternalParams] = None

    @property
    def feasible(self) -> bool:
        return self.violation <= 1e-12

    def to_dict(self) -> dict:
        return {
            "F": self.F, "N": self.N, "C": self.C,
            "sigma": self.sigma, "U": self.U, "V": self.V, "M": self.M,
            "terms": [[label, value] for label, value in self.terms],
            "dominant": self.dominant,
            "memory": self.memory,
            "feasible": self.feasible,
            "params": None if self.params is None else self.params.to_dict(),
        }


def target_weight(point: AsymptoticPoint, variant: str) -> float:
    """Relative weight of the error that is actually searched for."""
    if variant == "shifted":
        if abs(point.W - 1.0) > 1e-12:
            raise DomainError("The shifted model is defined for W = 1 only")
        return 0.5
    return point.W


def iteration_exponent(point: AsymptoticPoint, L: float, V: float, W: Optional[float] = None) -> float:
    """h(W) - (R+L) h(V/(R+L)) - (1-R-L) h((W-V)/(1-R-L))."""
    W = point.W if W is None else W
    R = point.R
    if L < -1e-12 or L > 1 - R + 1e-12 or V < -1e-12:
        raise DomainError(f"L={L}, V={V} outside the parameter domain")
    K = R + L
    N = h(W) - K * h(ratio(V, K)) - (1 - K) * h(ratio(W - V, 1 - K))
    return max(N, 0.0)


def _finish(N: float, terms: List[Tuple[str, float]], **kwargs) -> CostBreakdown:
    label, C = max(terms, key=lambda t: t[1])
    return CostBreakdown(N=N, C=C, F=N + C, terms=terms, dominant=label, **kwargs)


def stern_cost(point: AsymptoticPoint, L: float, V: float, max_mem: Optional[float] = None) -> CostBreakdown:
    """Restricted Stern/Dumer: max(Sigma/2, Sigma - Q L)."""
    N = iteration_exponent(point, L, V)
    K = point.R + L
    sigma = K * h(ratio(V, K)) + point.Z * V
    terms = [("Sigma/2", sigma / 2), ("Sigma-QL", sigma - point.Q * L)]
    memory = max(sigma / 2, sigma - point.Q * L)
    violation = max(0.0, memory - max_mem) if max_mem is not None else 0.0
    params = InternalParams("stern", 0, L, V)
    return _finish(N, terms, sigma=[sigma], V=[V], M=[0.0], memory=memory,
                   violation=violation, params=params)


def level_weights(params: InternalParams) -> Tuple[List[float], List[float]]:
    """V_0..V_a and M_0..M_a from the recurrences of the variant."""
    Vs, Ms = [params.V], [0.0]
    for i in range(params.levels):
        E, B, C = params.E[i], params.B[i], params.C[i]
        V_prev, M_prev = Vs[-1], Ms[-1]
        if params.variant == "plain":
            Vs.append(V_prev / 2 + E)
            Ms.append(0.0)
        elif params.variant in ("plus_z2", "plus_z4"):
            Vs.append(V_prev / 2 + E + C)
            Ms.append((M_prev - C) / 2 + B)
        elif params.variant == "plus_z6":
            Vs.append(V_prev / 2 + E + B)
            Ms.append(0.0)
        elif params.variant == "shifted":
            Vs.append(V_prev / 2 + E)
            Ms.append(M_prev / 2 + E)
        else:
            raise InputError(f"Variant {params.variant} has no representation levels")
    return Vs, Ms


def _sigma(point: AsymptoticPoint, variant: str, K: float, V: float, M: float) -> float:
    if variant in ("plus_z2", "plus_z4"):
        return K * g2(ratio(V, K), ratio(M, K)) + point.Z * (V + M)
    if variant == "shifted":
        return K * g2(ratio(V, K), ratio(M, K))
    return K * h(ratio(V, K)) + point.Z * V


def _representations(point: AsymptoticPoint, variant: str, K: float, V: float, M: float,
                     E: float, B: float, C: float) -> float:
    Z = point.Z
    if variant == "plain":
        zeros = K - V
        return V + zeros * h(ratio(E, zeros)) + Z * E
    if variant in ("plus_z2", "plus_z4"):
        zeros = K - V - M
        U = (V * (1 + h(ratio(2 * B, V)))
             + M * g2(ratio(C, M), ratio(M - C, 2 * M))
             + zeros * h(ratio(E, zeros)) + Z * E)
        if variant == "plus_z4":
            U += 2 * B + C
        return U
    if variant == "plus_z6":
        zeros = K - V
        U = V * g2(ratio(2 * B, V), ratio(V / 2 - B, V))
        return U + 2 * B + zeros * h(ratio(E, zeros)) + Z * E
    zeros = K - V - M
    return V + M + zeros * h(ratio(2 * E, zeros)) + 2 * E


def bjmm_cost(point: AsymptoticPoint, params: InternalParams, max_mem: Optional[float] = None) -> CostBreakdown:
    """
    Cost of BJMM(a) or one of its extensions.

    Raises DomainError when an entropy argument leaves its domain; window
    nesting and the memory cap are reported through `violation`.
    """
    if params.variant == "stern":
        return stern_cost(point, params.L, params.V, max_mem)
    a = params.levels
    if a < 1:
        raise InputError("BJMM models need at least one level")
    W = target_weight(point, params.variant)
    N = iteration_exponent(point, params.L, params.V, W)
    K = point.R + params.L
    QL = point.Q * params.L

    Vs, Ms = level_weights(params)
    for V, M in zip(Vs, Ms):
        if V < -1e-12 or M < -1e-12 or V + M > K + 1e-12:
            raise DomainError(f"Level weights V={V}, M={M} outside [0, R+L]")
    sigma = [_sigma(point, params.variant, K, V, M) for V, M in zip(Vs, Ms)]
    U = [_representations(point, params.variant, K, Vs[i], Ms[i],
                          params.E[i], params.B[i], params.C[i]) for i in range(a)]

    def u(i: int) -> float:
        return QL if i < 0 else U[i]

    terms = [(f"Sigma{a}/2", sigma[a] / 2), (f"Sigma{a}-U{a - 1}", sigma[a] - u(a - 1))]
    for j in range(a, 0, -1):
        terms.append((f"2Sigma{j}-U{j - 1}-U{j - 2}", 2 * sigma[j] - u(j - 1) - u(j - 2)))

    violation = sum(max(0.0, u(i) - u(i - 1)) for i in range(a))
    memory = max([sigma[a] / 2] + [sigma[j] - u(j - 1) for j in range(1, a + 1)])
    if max_mem is not None:
        violation += max(0.0, memory - max_mem)
    return _finish(N, terms, sigma=sigma, U=U, V=Vs, M=Ms, memory=memory,
                   violation=violation, params=params)
