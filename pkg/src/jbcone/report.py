"""Suite specifications and machine-readable verification reports."""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import alg_to_json

SUITE_IDS = (
    "jordan_identity",
    "power_assoc",
    "commutator_lemma31",
    "derivation_eq30",
    "jb_norm_axioms",
    "cone_squares",
    "homogeneity",
    "tau_invariance",
    "symmetry_loos",
    "geodesic_reversal",
    "thompson_caratheodory",
    "self_duality",
    "jh_identity",
    "normality",
    "metric_comparison",
)


@dataclass(frozen=True)
class SuiteSpec:
    """One named verification suite bound to an algebra instance, a trial
    count, a residual tolerance and a seed."""

    suite_id: str
    alg: object
    trials: int
    tol: float
    seed: int

    def __post_init__(self):
        if self.suite_id not in SUITE_IDS:
            raise ValueError(f"unknown suite_id: {self.suite_id!r}")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not self.tol > 0.0:
            raise ValueError("tol must be > 0")


@dataclass
class SuiteReport:
    """Outcome of a suite run.

    ``passed`` is True iff ``max_residual <= spec.tol`` and no boolean
    predicate subcheck found a counterexample.  ``witness`` holds the worst
    trial's serialized inputs when the suite failed.
    """

    spec: SuiteSpec
    passed: bool
    max_residual: float
    witness: dict | None = None
    wall_time: float = 0.0
    skipped: bool = False
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "suite": self.spec.suite_id,
            "algebra": alg_to_json(self.spec.alg),
            "trials": self.spec.trials,
            "seed": self.spec.seed,
            "tolerance": self.spec.tol,
            "max_residual": self.max_residual,
            "pass": self.passed,
            "skipped": self.skipped,
            "witness": self.witness,
            "wall_time": self.wall_time,
            "details": self.details,
        }
