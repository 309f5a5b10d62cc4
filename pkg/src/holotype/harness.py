"""Named verification suites and their JSON reports.

Every random sample draws from its own ``random.Random`` seeded with the
string ``"<suite>/<seed>/<sample_index>"``. That string is stored with each
failure, and :func:`replay` feeds it back into the same sample function.
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterator

from . import acs, lie, symplectic
from .ratlin import rng_from

__all__ = [
    "SUITES",
    "SuiteConfig",
    "VerificationReport",
    "replay",
    "run_suite",
    "seed_material",
]

SUITES = (
    "thurston-theorem",
    "lemma-equivalence",
    "milnor-integrable",
    "type-t",
    "algebra-sanity",
)


@dataclass(frozen=True)
class SuiteConfig:
    suite: str
    n: int = 1
    q: int = 1
    p: int = 1
    samples: int = 1
    seed: int = 0
    output: str | None = None

    def __post_init__(self):
        if self.suite not in SUITES:
            raise ValueError(f"unknown suite {self.suite!r}; choose from {', '.join(SUITES)}")
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.q < 1 or self.p < 0:
            raise ValueError("need q >= 1 and p >= 0")
        if self.seed < 0:
            raise ValueError("seed must be a nonnegative integer")

    def parameters(self) -> dict:
        if self.suite == "type-t":
            return {"n": self.n, "q": self.q, "p": self.p}
        if self.suite == "algebra-sanity":
            return {"n": self.n, "q_max": self.q, "p_max": self.p}
        return {"n": self.n}


@dataclass
class VerificationReport:
    suite: str
    parameters: dict
    seed: int
    samples_run: int
    passed: bool
    failures: list = field(default_factory=list)

    def to_json(self) -> dict:
        return asdict(self)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"

    def summary(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({len(self.failures)} failures)"
        params = " ".join(f"{k}={v}" for k, v in self.parameters.items())
        return f"{self.suite} [{params}] seed={self.seed} samples={self.samples_run}: {status}"


def seed_material(suite: str, seed: int, index: int) -> str:
    return f"{suite}/{seed}/{index}"


# Each sample function returns (expected, observed); a sample fails when
# some key of ``expected`` has a different value in ``observed``.


def _thurston_theorem(params: dict, rng: random.Random) -> tuple[dict, dict]:
    n = params["n"]
    L = lie.thurston(n)
    J = symplectic.sample_lemma_family(n, rng)
    g = symplectic.identity_metric(L.dim)
    expected = {"block_form": True, "symplectic": True, "nijenhuis_dim": 2 * n, "holomorphic_type": 1}
    observed = {
        "block_form": symplectic.block_form_check(J, n),
        "symplectic": symplectic.is_symplectic(L, g, J),
        "nijenhuis_dim": acs.nijenhuis_space(L, J).dim,
        "holomorphic_type": acs.holomorphic_type(L, J),
    }
    return expected, observed


def _lemma_pair(L: lie.LieAlgebra, J: acs.AlmostComplexStructure, n: int) -> dict:
    g = symplectic.identity_metric(L.dim)
    return {"symplectic": symplectic.is_symplectic(L, g, J), "block_form": symplectic.block_form_check(J, n)}


def _lemma_equivalence(params: dict, rng: random.Random) -> tuple[dict, dict]:
    n = params["n"]
    L = lie.thurston(n)
    compatible = _lemma_pair(L, symplectic.sample_compatible(L.dim, rng), n)
    family = _lemma_pair(L, symplectic.sample_lemma_family(n, rng), n)
    expected = {
        "compatible_sample": {"symplectic": compatible["block_form"], "block_form": compatible["block_form"]},
        "lemma_family_sample": {"symplectic": True, "block_form": True},
    }
    return expected, {"compatible_sample": compatible, "lemma_family_sample": family}


def _milnor_integrable(params: dict, rng: random.Random) -> tuple[dict, dict]:
    n = params["n"]
    L = lie.milnor(2 * n)
    J = acs.random_acs(L, rng)
    expected = {"nijenhuis_dim": 0, "holomorphic_type": n}
    observed = {"nijenhuis_dim": acs.nijenhuis_space(L, J).dim, "holomorphic_type": acs.holomorphic_type(L, J)}
    return expected, observed


def heisenberg_factors(q: int, p: int) -> list[tuple[int, int]]:
    """Factors for the type-t suite: H(q, p) alone if q is even, else doubled."""
    return [(q, p)] if q % 2 == 0 else [(q, p), (q, p)]


def _type_t_record(L: lie.LieAlgebra, J: acs.AlmostComplexStructure) -> dict:
    t = acs.holomorphic_type(L, J)
    h, ok = acs.type_t_witness(L, J)
    return {
        "hypothesis": 2 * lie.commutator_ideal(L).dim < L.dim,
        "type_at_least_1": t >= 1,
        "witness_is_ij_subalgebra": ok,
        "witness_codim_at_least_2": h.dim <= L.dim - 2,
        "holomorphic_type": t,
        "witness_dim": h.dim,
    }


def _type_t(params: dict, rng: random.Random) -> tuple[dict, dict]:
    keys = ("hypothesis", "type_at_least_1", "witness_is_ij_subalgebra", "witness_codim_at_least_2")
    algebras = {
        "thurston": lie.thurston(params["n"]),
        "heisenberg_product": lie.heisenberg_product(heisenberg_factors(params["q"], params["p"])),
    }
    expected, observed = {}, {}
    for name, L in algebras.items():
        J = symplectic.sample_compatible(L.dim, rng)
        expected[name] = dict.fromkeys(keys, True)
        observed[name] = _type_t_record(L, J)
    return expected, observed


SAMPLERS: dict[str, Callable[[dict, random.Random], tuple[dict, dict]]] = {
    "thurston-theorem": _thurston_theorem,
    "lemma-equivalence": _lemma_equivalence,
    "milnor-integrable": _milnor_integrable,
    "type-t": _type_t,
}


def _matches(expected, observed) -> bool:
    if isinstance(expected, dict):
        return isinstance(observed, dict) and all(_matches(v, observed.get(k)) for k, v in expected.items())
    return expected == observed


def _sanity_cases(params: dict) -> Iterator[tuple[str, Callable[[], tuple[dict, dict]]]]:
    def heis(q, p):
        L = lie.gen_heisenberg(q, p)
        return (
            {"valid": True, "dim": 2 * q * p + q, "commutator_dim": q * p},
            {"valid": lie.validate(L), "dim": L.dim, "commutator_dim": lie.commutator_ideal(L).dim},
        )

    def thur(n):
        L = lie.thurston(n)
        return (
            {"valid": True, "dim": 2 * n + 2, "commutator_dim": n, "two_step_nilpotent": True},
            {
                "valid": lie.validate(L),
                "dim": L.dim,
                "commutator_dim": lie.commutator_ideal(L).dim,
                "two_step_nilpotent": lie.is_two_step_nilpotent(L),
            },
        )

    def miln(d):
        L = lie.milnor(d)
        return (
            {"valid": True, "dim": d, "commutator_dim": d - 1},
            {"valid": lie.validate(L), "dim": L.dim, "commutator_dim": lie.commutator_ideal(L).dim},
        )

    def abel(d):
        L = lie.abelian(d)
        return (
            {"valid": True, "dim": d, "commutator_dim": 0},
            {"valid": lie.validate(L), "dim": L.dim, "commutator_dim": lie.commutator_ideal(L).dim},
        )

    for q in range(1, params["q_max"] + 1):
        for p in range(1, params["p_max"] + 1):
            yield f"gen_heisenberg({q},{p})", lambda q=q, p=p: heis(q, p)
    for n in range(1, params["n"] + 1):
        yield f"thurston({n})", lambda n=n: thur(n)
        yield f"milnor({2 * n})", lambda n=n: miln(2 * n)
        yield f"abelian({2 * n})", lambda n=n: abel(2 * n)


def _failure(index, material: str, expected: dict, observed: dict) -> dict:
    return {"sample_index": index, "seed_material": material, "expected": expected, "observed": observed}


def run_suite(cfg: SuiteConfig) -> VerificationReport:
    """Run every sample of the configured suite, recording all failures."""
    params = cfg.parameters()
    failures = []
    count = 0
    if cfg.suite == "algebra-sanity":
        for index, (name, case) in enumerate(_sanity_cases(params)):
            expected, observed = case()
            count += 1
            if not _matches(expected, observed):
                failures.append(_failure(index, f"case:{name}", expected, observed))
    else:
        sampler = SAMPLERS[cfg.suite]
        for index in range(cfg.samples):
            material = seed_material(cfg.suite, cfg.seed, index)
            expected, observed = sampler(params, rng_from(material))
            count += 1
            if not _matches(expected, observed):
                failures.append(_failure(index, material, expected, observed))
        if cfg.suite == "lemma-equivalence" and cfg.n == 2:
            for name, J, want in (
                ("nonsymmetric-A", symplectic.nonsymmetric_a_case(), True),
                ("rotation-B", symplectic.rotation_b_case(), False),
            ):
                expected = {"symplectic": want, "block_form": want}
                observed = _lemma_pair(lie.thurston(2), J, 2)
                if not _matches(expected, observed):
                    failures.append(_failure(None, f"handcrafted:{name}", expected, observed))
    return VerificationReport(
        suite=cfg.suite,
        parameters=params,
        seed=cfg.seed,
        samples_run=count,
        passed=not failures,
        failures=failures,
    )


def replay(suite: str, parameters: dict, material: str) -> tuple[dict, dict]:
    """Recompute ``(expected, observed)`` for a recorded random sample."""
    if suite not in SAMPLERS:
        raise ValueError(f"suite {suite!r} has no seeded samples to replay")
    return SAMPLERS[suite](parameters, rng_from(material))
