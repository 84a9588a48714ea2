"""Seeded identity battery over random demimatroids.

Every cross-route identity and algebraic law the package promises is
exercised on freshly sampled tables; a failure records a witness (the offending ranks) so runs are
reproducible from the seed alone.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import core, hamming, ops, simplicial, tutte, weights
from .poly import X, Y, monomial


@dataclass
class IdentityResult:
    passes: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class BatteryReport:
    seed: int
    n: int
    samples: int
    identities: dict[str, IdentityResult] = field(default_factory=dict)
    conjecture_census: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.identities.values())

    def as_dict(self) -> dict:
        return {
            "seed": self.seed,
            "n": self.n,
            "samples": self.samples,
            "ok": self.ok,
            "identities": {
                name: {"passes": r.passes, "failures": r.failures}
                for name, r in sorted(self.identities.items())
            },
            "conjecture_census": dict(self.conjecture_census),
        }


def _operator_group(m: core.RankTable) -> bool:
    return all(
        ops.compose_check(a, b, m) == ops.GROUP_TABLE[(a, b)]
        for a in ops.OPERATORS
        for b in ops.OPERATORS
    )


def _rank_complement(m: core.RankTable) -> bool:
    return m.rank + ops.dual(m).rank == m.n


def _supplement_routes(m: core.RankTable) -> bool:
    a = ops.nullity_operator(ops.dual(m))
    b = ops.dual(ops.nullity_operator(m))
    c = ops.supplement(m)
    return a.ranks == c.ranks and b.ranks == c.ranks


def _minor_duality(m: core.RankTable, rng: random.Random) -> bool:
    a = core.random_subset(m.n, rng)
    left = ops.dual(ops.delete(m, a)).ranks == ops.contract(ops.dual(m), a).ranks
    right = ops.dual(ops.contract(m, a)).ranks == ops.delete(ops.dual(m), a).ranks
    return left and right


def _lattice_laws(m: core.RankTable, rng: random.Random) -> bool:
    b = core.random_demimatroid(m.n, rng)
    c = core.random_demimatroid(m.n, rng)
    checks = [
        ops.join(m, b).ranks == ops.join(b, m).ranks,
        ops.meet(m, b).ranks == ops.meet(b, m).ranks,
        ops.join(m, ops.join(b, c)).ranks == ops.join(ops.join(m, b), c).ranks,
        ops.meet(m, ops.meet(b, c)).ranks == ops.meet(ops.meet(m, b), c).ranks,
        ops.join(m, ops.meet(m, b)).ranks == m.ranks,
        ops.meet(m, ops.join(m, b)).ranks == m.ranks,
        ops.meet(m, ops.join(b, c)).ranks
        == ops.join(ops.meet(m, b), ops.meet(m, c)).ranks,
        ops.join(m, ops.lattice_bottom(m.n)).ranks == m.ranks,
        ops.meet(m, ops.lattice_top(m.n)).ranks == m.ranks,
    ]
    return all(checks)


def _wei_bounds(m: core.RankTable) -> bool:
    profile = weights.wei_hierarchy(m)
    n, k = m.n, m.rank
    lower = all(k + d <= n + r for r, d in enumerate(profile.d, start=1))
    upper = all(k + d <= n + r for r, d in enumerate(profile.d_up))
    star = ops.dual(m)
    for r in range(m.total_nullity + 1):
        drop = max(
            core.popcount(mask)
            for mask in range(m.full + 1)
            if star.rank - star.ranks[mask] == r
        )
        if weights.min_size_at_nullity(m, r) + drop != m.n:
            return False
    return lower and upper


def _wei_sequence_roundtrip(m: core.RankTable, rng: random.Random) -> bool:
    k = rng.randint(1, m.n)
    d = sorted(rng.sample(range(1, m.n + 1), k))
    rebuilt = core.from_wei_sequence(m.n, d)
    return list(weights.wei_hierarchy(rebuilt).d) == d


def _elongation_laws(m: core.RankTable) -> bool:
    eta = m.total_nullity
    if ops.elongate(m, eta).ranks != ops.lattice_top(m.n).ranks:
        return False
    for i in range(1, eta + 1):
        step = ops.elongate(m, 1)
        for _ in range(i - 1):
            step = ops.elongate(step, 1)
        if step.ranks != ops.elongate(m, i).ranks:
            return False
        for mask in range(m.full + 1):
            ei = ops.elongate(m, i).nullity(mask)
            if (ei == 0) != (m.nullity(mask) <= i):
                return False
    return all(weights.elongation_distance_check(m, r) for r in range(eta))


def _tutte_identities(m: core.RankTable) -> bool:
    t = tutte.tutte(m)
    if any(tutte.tutte_recurrence(m, p) != t for p in range(1, m.n + 1)):
        return False
    if not tutte.tutte_dual_check(m):
        return False
    f = tutte.whitney_f(m)
    if f.substitute({"x": X - 1, "y": Y - 1}) != t:
        return False
    if tutte.whitney_f(ops.dual(m)) != f.substitute({"x": Y, "y": X}):
        return False
    for p in range(1, m.n + 1):
        bit = 1 << (p - 1)
        co = m.rank - m.ranks[m.full & ~bit]
        nu = 1 - m.ranks[bit]
        rec = monomial(1, x=co) * tutte.whitney_f(ops.delete(m, bit)) + monomial(
            1, y=nu
        ) * tutte.whitney_f(ops.contract(m, bit))
        if rec != f:
            return False
    tutte.characteristic(m)  # internally cross-checked
    return True


def _hamming_routes(m: core.RankTable) -> bool:
    w = hamming.hamming_subset_sum(m)
    if hamming.hamming_via_tutte(m) != w:
        return False
    if hamming.w_from_pj(m) != w:
        return False
    if simplicial.w_via_betti(m) != w:
        return False
    if w.substitute({"t": 1}) != monomial(1, x=m.n):
        return False
    return all(hamming.hamming_recurrence(m, p) == w for p in range(1, m.n + 1))


def _macwilliams_pair(m: core.RankTable) -> bool:
    w = hamming.hamming_subset_sum(m)
    star = hamming.macwilliams(m)
    back = hamming.macwilliams_transform(star, ops.dual(m).total_nullity)
    if back != w:
        return False
    return hamming.tutte_from_hamming(m) == tutte.tutte(m)


def _coefficient_structure(m: core.RankTable) -> bool:
    if m.total_nullity == 0:
        return True
    hamming.hamming_data(m)  # raises if the A_j structure is off
    if hamming.generalized_w(m, 0) != monomial(1, x=m.n):
        return False
    return hamming.generalized_w(m, 1) == hamming.generalized_w(m, 1, route="tutte")


IDENTITIES = {
    "operator_group": lambda m, rng: _operator_group(m),
    "rank_complement": lambda m, rng: _rank_complement(m),
    "supplement_routes": lambda m, rng: _supplement_routes(m),
    "minor_duality": _minor_duality,
    "lattice_laws": _lattice_laws,
    "wei_duality": lambda m, rng: weights.check_wei_duality(m),
    "wei_bounds": lambda m, rng: _wei_bounds(m),
    "wei_sequence_roundtrip": _wei_sequence_roundtrip,
    "elongation_laws": lambda m, rng: _elongation_laws(m),
    "tutte_identities": lambda m, rng: _tutte_identities(m),
    "hamming_routes": lambda m, rng: _hamming_routes(m),
    "macwilliams": lambda m, rng: _macwilliams_pair(m),
    "coefficient_structure": lambda m, rng: _coefficient_structure(m),
}


def run_battery(seed: int, n: int, samples: int) -> BatteryReport:
    rng = random.Random(seed)
    report = BatteryReport(seed=seed, n=n, samples=samples)
    report.identities = {name: IdentityResult() for name in IDENTITIES}
    census = {"holds": 0, "fails": 0, "unsupported": 0}
    for _ in range(samples):
        m = core.random_demimatroid(n, rng)
        for name, check in IDENTITIES.items():
            result = report.identities[name]
            try:
                passed = check(m, rng)
            except Exception as exc:  # count the witness, keep the run going
                passed = False
                result.failures.append({"ranks": list(m.ranks), "error": str(exc)})
                continue
            if passed:
                result.passes += 1
            else:
                result.failures.append({"ranks": list(m.ranks)})
        verdict = hamming.conjecture_check(m)
        if verdict.error:
            census["unsupported"] += 1
        elif verdict.holds:
            census["holds"] += 1
        else:
            census["fails"] += 1
    report.conjecture_census = census
    return report
