"""Brute-force reference semantics, mechanical theorem checkers, and a seeded
random framework generator.

The brute-force routines transcribe the definitions with raw quantifier
expansion over full powersets and no caching; they exist to certify the
engineered implementations bit for bit.  The theorem checkers instantiate the
library's structural results exhaustively on a concrete framework and report a
replayable counterexample on failure.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from typing import Iterable, Optional

from .core import (
    Arg,
    Framework,
    NotConflictEliminable,
    SizeLimitExceeded,
    StrengthModel,
)
from . import coalition, semantics

BRUTE_LIMIT = 8


def _guard(fw: Framework, limit: int = BRUTE_LIMIT) -> None:
    if len(fw.arguments) > limit:
        raise SizeLimitExceeded(
            f"brute force limited to {limit} arguments, got {len(fw.arguments)}"
        )


def _powerset(items, include_empty=True):
    items = sorted(items)
    start = 0 if include_empty else 1
    for r in range(start, len(items) + 1):
        for combo in itertools.combinations(items, r):
            yield frozenset(combo)


def brute_vmax(fw: Framework, attackers: Iterable[Arg], target: Arg) -> int:
    attackers = frozenset(attackers)
    best = 0
    for sub in _powerset(attackers, include_empty=False):
        v = fw.strengths.strength(sub, target)
        if v is not None and v > best:
            best = v
    return best


def brute_attacks(fw: Framework, attackers: Iterable[Arg], target: Arg) -> bool:
    return any(
        fw.strengths.strength(sub, target) is not None
        for sub in _powerset(frozenset(attackers), include_empty=False)
    )


def brute_defeats(fw: Framework, attackers: Iterable[Arg], target: Arg) -> bool:
    attackers = frozenset(attackers)
    return brute_attacks(fw, attackers, target) and (
        brute_vmax(fw, attackers, target) >= target.capacity
    )


def brute_conflict_eliminable(fw: Framework, subset: Iterable[Arg]) -> bool:
    subset = frozenset(subset)
    return not any(brute_defeats(fw, subset, s) for s in subset)


def brute_alpha(fw: Framework, subset: Iterable[Arg]) -> frozenset:
    subset = frozenset(subset)
    if not brute_conflict_eliminable(fw, subset):
        raise NotConflictEliminable(str(sorted(subset)))
    return frozenset(
        Arg(s.id, s.capacity - brute_vmax(fw, subset, s)) for s in subset
    )


def _brute_view_strength(fw, subset, attackers, target) -> Optional[int]:
    if target in subset and attackers <= subset:
        return None
    return fw.strengths.strength(attackers, target)


def brute_c_attacks(fw: Framework, subset: Iterable[Arg], target: Arg) -> bool:
    subset = frozenset(subset)
    if not brute_conflict_eliminable(fw, subset):
        return False
    alpha = brute_alpha(fw, subset)
    return any(
        _brute_view_strength(fw, subset, sub, target) is not None
        for sub in _powerset(alpha, include_empty=False)
    )


def brute_c_defeats(fw: Framework, subset: Iterable[Arg], target: Arg) -> bool:
    subset = frozenset(subset)
    if not brute_c_attacks(fw, subset, target):
        return False
    alpha = brute_alpha(fw, subset)
    for sub in _powerset(alpha, include_empty=False):
        v = _brute_view_strength(fw, subset, sub, target)
        if v is not None and v >= target.capacity:
            return True
    return False


def brute_c_admissible(fw: Framework, subset: Iterable[Arg]) -> bool:
    subset = frozenset(subset)
    if not brute_conflict_eliminable(fw, subset):
        return False
    alpha = brute_alpha(fw, subset)
    view_args = (fw.arguments - subset) | alpha
    for member in subset:
        for attack_set in _powerset(view_args, include_empty=False):
            if _brute_view_strength(fw, subset, attack_set, member) is None:
                continue
            if not any(brute_c_defeats(fw, subset, sx) for sx in attack_set):
                return False
    return True


def brute_c_preferred(fw: Framework) -> list:
    _guard(fw)
    admissible = [
        s
        for s in _powerset(fw.arguments)
        if brute_c_admissible(fw, s)
    ]
    maximal = [s for s in admissible if not any(s < t for t in admissible)]
    return sorted(maximal, key=lambda s: (len(s), sorted(s)))


def brute_one_directional(fw: Framework, subset: Iterable[Arg]) -> bool:
    subset = frozenset(subset)
    if not brute_conflict_eliminable(fw, subset):
        raise NotConflictEliminable(str(sorted(subset)))
    alpha = brute_alpha(fw, subset)
    view_args = (fw.arguments - subset) | alpha
    for member in subset:
        for attack_set in _powerset(view_args, include_empty=False):
            resolving = any(
                _brute_view_strength(fw, subset, sub, member) is not None
                for sub in _powerset(attack_set, include_empty=False)
            )
            if resolving and not any(
                brute_c_attacks(fw, subset, sx) for sx in attack_set
            ):
                return True
    return False


def brute_profitable(fw: Framework, first, second) -> bool:
    first, second = frozenset(first), frozenset(second)
    if not first <= second:
        return False
    if not (
        brute_conflict_eliminable(fw, first)
        and brute_conflict_eliminable(fw, second)
    ):
        return False

    def rank(s):
        if brute_c_admissible(fw, s):
            return 2
        if brute_one_directional(fw, s):
            return 0
        return 1

    if rank(first) > rank(second):
        return False

    def count(candidate):
        total = 0
        for s in fw.arguments:
            if any(
                fw.strengths.strength(frozenset((s,)), member) is not None
                for member in first
            ):
                if s not in candidate and not brute_c_defeats(fw, candidate, s):
                    total += 1
        return total

    return count(first) >= count(second)


def brute_max_sets(fw: Framework, subset) -> list:
    _guard(fw)
    subset = frozenset(subset)
    reachable = [
        t
        for t in _powerset(fw.arguments)
        if subset <= t and brute_profitable(fw, subset, t)
    ]
    maximal = [t for t in reachable if not any(t < u for u in reachable)]
    return sorted(maximal, key=lambda s: (len(s), sorted(s)))


def brute_max_profitable(
    fw: Framework, first, second, fewer_basis: str = "own"
) -> bool:
    _guard(fw)
    first, second = frozenset(first), frozenset(second)
    if not brute_profitable(fw, first, second):
        return False

    def count(base, candidate):
        total = 0
        for s in fw.arguments:
            if any(
                fw.strengths.strength(frozenset((s,)), member) is not None
                for member in base
            ):
                if s not in candidate and not brute_c_defeats(fw, candidate, s):
                    total += 1
        return total

    def rank(s):
        if brute_c_admissible(fw, s):
            return 2
        if brute_one_directional(fw, s):
            return 0
        return 1

    def leq(beta, sx, sy):
        if beta == "l":
            return len(sx) <= len(sy)
        if beta == "b":
            return rank(sx) <= rank(sy)
        if fewer_basis == "own":
            return count(sy, sy) <= count(sx, sx)
        return count(first, sy) <= count(first, sx)

    def less(beta, sx, sy):
        return leq(beta, sx, sy) and not leq(beta, sy, sx)

    firsts = brute_max_sets(fw, first)
    seconds = brute_max_sets(fw, second)
    for sx in seconds:
        ok = True
        for sy in firsts:
            for beta in ("l", "b", "f"):
                if less(beta, sx, sy) and not any(
                    less(gamma, sy, sx)
                    for gamma in ("l", "b", "f")
                    if gamma != beta
                ):
                    ok = False
        if ok:
            return True
    return False


def brute_formability(
    fw: Framework, kind: str, subset, fewer_basis: str = "own"
) -> list:
    _guard(fw)
    subset = frozenset(subset)
    if kind in ("W", "M"):
        relation = lambda a, b: brute_profitable(fw, a, b)
    else:
        relation = lambda a, b: brute_max_profitable(fw, a, b, fewer_basis)
    combine = any if kind in ("W", "WS") else all
    partners = []
    for candidate in _powerset(fw.arguments - subset, include_empty=False):
        if candidate & subset:
            continue
        union = subset | candidate
        if not brute_conflict_eliminable(fw, union):
            continue
        if combine((relation(subset, union), relation(candidate, union))):
            partners.append(candidate)
    return sorted(partners, key=lambda s: (len(s), sorted(s)))


# ---------------------------------------------------------------------------
# theorem checkers


@dataclass(frozen=True)
class TheoremReport:
    theorem: str
    framework: str
    verdict: bool
    counterexample: Optional[tuple] = None

    def to_json(self) -> str:
        payload = {
            "theorem": self.theorem,
            "framework": self.framework,
            "verdict": "pass" if self.verdict else "fail",
            "counterexample": _encode_witness(self.counterexample),
        }
        return json.dumps(payload, sort_keys=True)


def _encode_witness(witness):
    if witness is None:
        return None
    out = []
    for part in witness:
        if isinstance(part, frozenset):
            out.append(sorted([a.id, a.capacity] for a in part))
        elif isinstance(part, Arg):
            out.append([part.id, part.capacity])
        else:
            out.append(str(part))
    return out


def _ce_subsets(fw):
    return [
        s
        for s in _powerset(fw.arguments)
        if semantics.is_conflict_eliminable(fw, s)
    ]


def _check_L1(fw: Framework):
    # defeats survive into supersets
    for s1 in _powerset(fw.arguments, include_empty=False):
        for member in s1:
            if semantics.defeats(fw, s1, member):
                for extra in _powerset(fw.arguments - s1):
                    s2 = s1 | extra
                    if not semantics.defeats(fw, s2, member):
                        return (s1, s2, member)
    return None


def _check_P1(fw: Framework):
    # id-wise capacity raises keep strengths defined and non-decreasing
    from .core import instantiated_closure, _id_unique_subsets, _raisings

    domain = sorted(instantiated_closure(fw))
    for t in domain:
        for s in _id_unique_subsets(domain):
            v = fw.strengths.strength(s, t)
            if v is None:
                continue
            for raised in _raisings(s, domain):
                vr = fw.strengths.strength(raised, t)
                if vr is None or vr < v:
                    return (s, raised, t)
    return None


def _check_P2(fw: Framework):
    # intrinsic capacities never go negative
    for s in _ce_subsets(fw):
        for a in semantics.intrinsic(fw, s):
            if a.capacity < 0:
                return (s, a)
    return None


def _check_P4(fw: Framework):
    # intrinsic arguments are conflict-free inside the view
    for s in _ce_subsets(fw):
        vw = semantics.view(fw, s)
        for member in vw.alpha:
            for sub in _powerset(vw.alpha - {member}, include_empty=False):
                if vw.strength(sub, member) is not None:
                    return (s, sub, member)
    return None


def _check_P5(fw: Framework):
    # the framework-level and view-level formulations agree wherever both
    # apply, and coalition defeats imply coalition attacks
    for s in _ce_subsets(fw):
        vw = semantics.view(fw, s)
        verdicts = {}
        for t in sorted(fw.arguments | vw.arguments):
            ca = semantics.c_attacks(fw, s, t)
            cd = semantics.c_defeats(fw, s, t)
            verdicts[t] = (ca, cd)
            if cd and not ca:
                return (s, t, "defeat without attack")
        for t in sorted(fw.arguments & vw.arguments):
            if verdicts[t] != (
                semantics.c_attacks(fw, s, t),
                semantics.c_defeats(fw, s, t),
            ):
                return (s, t, "formulations disagree")
    return None


def _check_P6(fw: Framework):
    for s1 in _powerset(fw.arguments):
        for s2 in _powerset(fw.arguments):
            if coalition.coalition_permitted(fw, s1, s2):
                if not (
                    semantics.is_conflict_eliminable(fw, s1)
                    and semantics.is_conflict_eliminable(fw, s2)
                ):
                    return (s1, s2)
    return None


def _check_P7(fw: Framework):
    # placeholder: axiom independence is a property of specific fixtures and
    # is asserted in the test suite rather than per-framework
    return None


def _check_T1(fw: Framework):
    from .npreduction import check_reduction

    report = check_reduction(fw)
    if report.ok:
        return None
    return (report.violations[0].axiom,)


def _check_T2(fw: Framework):
    for sx in _powerset(fw.arguments, include_empty=False):
        if not semantics.is_c_admissible(fw, sx):
            continue
        for s1 in _powerset(sx):
            if s1 == sx or not semantics.is_conflict_eliminable(fw, s1):
                continue
            s2 = sx - s1
            if not semantics.is_conflict_eliminable(fw, s2):
                return (sx, s1, "difference not conflict-eliminable")
            if not coalition.coalition_permitted(fw, s1, s2):
                return (sx, s1, "coalition not permitted")
            if not coalition.profitable(fw, s1, sx).holds:
                return (sx, s1, "not profitable")
    return None


def _check_T3(fw: Framework):
    for s1 in _ce_subsets(fw):
        for s2 in _powerset(fw.arguments - s1, include_empty=False):
            union = s1 | s2
            if not coalition.coalition_permitted(fw, s1, s2):
                continue
            if not semantics.is_c_admissible(fw, union):
                continue
            if not coalition.profitable(fw, s1, union).holds:
                continue
            witness = None
            for s3 in _powerset(fw.arguments - s1, include_empty=False):
                if not s2 <= s3:
                    continue
                u3 = s1 | s3
                if (
                    coalition.coalition_permitted(fw, s1, s3)
                    and coalition.profitable(fw, s1, u3).holds
                    and u3 in set(semantics.enumerate_c_preferred(fw))
                ):
                    witness = s3
                    break
            if witness is None:
                return (s1, s2)
    return None


def _check_T4(fw: Framework):
    for s1 in _ce_subsets(fw):
        for sx in coalition.pref_supersets(fw, s1):
            rest = sx - s1
            if not coalition.profitable(fw, s1, sx).holds:
                return (s1, sx, "base not profitable")
            if rest and not coalition.profitable(fw, rest, sx).holds:
                return (s1, sx, "complement not profitable")
            for extra in _powerset(fw.arguments - sx, include_empty=False):
                sy = sx | extra
                if coalition.profitable(fw, s1, sy).holds:
                    return (s1, sx, sy)
                if rest and coalition.profitable(fw, rest, sy).holds:
                    return (s1, sx, sy)
    return None


def _check_T7(fw: Framework):
    # somewhere profitability is one-sided
    for s1 in _ce_subsets(fw):
        if not s1:
            continue
        for s2 in _powerset(fw.arguments - s1, include_empty=False):
            union = s1 | s2
            if coalition.profitable(fw, s1, union).holds and not coalition.profitable(
                fw, s2, union
            ).holds:
                return None
    return ("no one-sided profitable pair found",)


def _check_T8(fw: Framework):
    # somewhere a maximal profitable superset contains an unprofitable stage
    for s1 in _ce_subsets(fw):
        if not s1:
            continue
        for sx in coalition.max_sets(fw, s1):
            for s2 in _powerset(sx):
                if s1 <= s2 and s2 != s1:
                    if not coalition.profitable(fw, s1, s2).holds:
                        return None
    return ("no discontinuous growth stage found",)


def _check_T9(fw: Framework):
    for sx in semantics.enumerate_c_preferred(fw):
        pairs_ok = all(
            coalition.profitable(fw, sy, sy | sz).holds
            for sy in _powerset(sx)
            for sz in _powerset(sx - sy)
            if semantics.is_conflict_eliminable(fw, sy)
        )
        weak_ok = all(
            coalition.is_weakly_continuous(fw, s1)
            for s1 in _powerset(sx)
            if s1 != sx and semantics.is_conflict_eliminable(fw, s1)
        )
        if pairs_ok != weak_ok:
            return (sx,)
    return None


def _check_T10(fw: Framework):
    for s1 in _ce_subsets(fw):
        results = {
            kind: set(coalition.formability(fw, kind, s1).partners)
            for kind in ("W", "M", "WS", "S")
        }
        if not results["M"] <= results["W"]:
            return (s1, "M not within W")
        if not results["WS"] <= results["W"]:
            return (s1, "WS not within W")
        if not results["S"] <= results["M"]:
            return (s1, "S not within M")
        if not results["S"] <= results["WS"]:
            return (s1, "S not within WS")
    return None


_CHECKERS = {
    "L1": _check_L1,
    "P1": _check_P1,
    "P2": _check_P2,
    "P4": _check_P4,
    "P5": _check_P5,
    "P6": _check_P6,
    "P7": _check_P7,
    "T1": _check_T1,
    "T2": _check_T2,
    "T3": _check_T3,
    "T4": _check_T4,
    "T7": _check_T7,
    "T8": _check_T8,
    "T9": _check_T9,
    "T10": _check_T10,
}

THEOREM_IDS = tuple(sorted(_CHECKERS))


def check_theorem(fw: Framework, theorem: str, name: str = "") -> TheoremReport:
    """Instantiate one structural result exhaustively on the framework."""
    _guard(fw)
    theorem = theorem.upper()
    if theorem not in _CHECKERS:
        raise ValueError(f"unknown theorem id {theorem!r}")
    witness = _CHECKERS[theorem](fw)
    return TheoremReport(theorem, name, witness is None, witness)


# ---------------------------------------------------------------------------
# random generation


@dataclass(frozen=True)
class RandomModelSpec:
    argument_count: int
    capacity_range: tuple = (1, 4)
    attack_density: float = 0.25
    aggregator: str = "max"
    seed: int = 0


def generate_random(spec: RandomModelSpec) -> Framework:
    """A deterministic, axiom-valid random framework.

    Singleton strengths are drawn uniformly from [1, target capacity + 1] at
    the configured density; group strengths come from the aggregator, and
    reduced-capacity lookups use persist defaulting so coalition views stay
    computable.
    """
    rng = random.Random(spec.seed)
    lo, hi = spec.capacity_range
    args = [
        Arg(f"x{i + 1}", rng.randint(max(1, lo), max(1, hi)))
        for i in range(spec.argument_count)
    ]
    entries = {}
    for source in args:
        for target in args:
            if source.id == target.id:
                continue
            if rng.random() < spec.attack_density:
                entries[(frozenset((source,)), target)] = rng.randint(
                    1, target.capacity + 1
                )
    return Framework(
        frozenset(args),
        StrengthModel.from_entries(entries, spec.aggregator, "persist"),
    )


def generate_random_restricted(
    argument_count: int, attack_density: float, seed: int
) -> Framework:
    """A deterministic defeat-only framework in explicit-only mode, suitable
    for the reduction check: every listed attack reaches its target's
    capacity, and small group attacks are thrown in alongside singletons."""
    rng = random.Random(seed)
    args = [Arg(f"x{i + 1}", rng.randint(1, 3)) for i in range(argument_count)]
    entries = {}
    for source in args:
        for target in args:
            if source.id == target.id:
                continue
            if rng.random() < attack_density:
                entries[(frozenset((source,)), target)] = target.capacity + rng.randint(
                    0, 2
                )
    pool = [a for a in args]
    for _ in range(max(0, argument_count - 2)):
        group = frozenset(rng.sample(pool, 2))
        target = rng.choice(pool)
        if target in group:
            continue
        if rng.random() < attack_density:
            entries[(group, target)] = target.capacity + rng.randint(0, 2)
    return Framework(
        frozenset(args),
        StrengthModel.from_entries(entries, "explicit-only", "strict"),
    )
