"""Coalition profitability and formability on top of the attack semantics.

A conflict-eliminable set occupies one of three states: coalition-admissible
(it defends every member), one-directionally attacked (something attacks it
that it cannot even counter-attack), or the middle ground.  Growing into a
superset is profitable when the superset is at least as large, in at least as
good a state, and leaves no more of the base set's attackers undefeated.  The
maximal-profitability refinement additionally requires that some maximal
coalition reachable from the enlarged set is not strictly dominated, under the
size / state / undefeated-attacker criteria, by every maximal coalition
reachable from the original set.  Four formability semantics classify partner
sets by one-sided or mutual (maximal) profitability.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Literal

from .core import (
    Arg,
    Framework,
    NotConflictEliminable,
    SIZE_LIMIT_DEFAULT,
    _fmt,
    _subsets,
)
from . import semantics
from .semantics import (
    _is_ce,
    _minimal_attack_sets,
    _view,
    attacks,
    c_attacks,
    c_defeats,
    enumerate_c_preferred,
    is_c_admissible,
)

Criterion = Literal["l", "b", "f"]
FewerBasis = Literal["own", "shared"]
FormabilityKind = Literal["W", "M", "WS", "S"]

FORMABILITY_KINDS = ("W", "M", "WS", "S")


class StateRank(enum.IntEnum):
    """Quality of a conflict-eliminable set, best first."""

    ONE_DIRECTIONAL = 0
    MIDDLE = 1
    CADMISSIBLE = 2


@lru_cache(maxsize=None)
def _one_directional(fw: Framework, subset: frozenset) -> bool:
    if not _is_ce(fw, subset):
        raise NotConflictEliminable(_fmt(subset))
    vw = _view(fw, subset)
    for member in sorted(subset):
        for attack_set in _minimal_attack_sets(fw, vw, member):
            if not any(c_attacks(fw, subset, sx) for sx in attack_set):
                return True
    return False


def is_one_directionally_attacked(fw: Framework, subset: Iterable[Arg]) -> bool:
    """Something in the coalition's view attacks a member, and the coalition
    cannot counter-attack any element of that attacking set."""
    return _one_directional(fw, frozenset(subset))


@lru_cache(maxsize=None)
def _rank(fw: Framework, subset: frozenset) -> StateRank:
    if not _is_ce(fw, subset):
        raise NotConflictEliminable(_fmt(subset))
    if is_c_admissible(fw, subset):
        return StateRank.CADMISSIBLE
    if _one_directional(fw, subset):
        return StateRank.ONE_DIRECTIONAL
    return StateRank.MIDDLE


def state_rank(fw: Framework, subset: Iterable[Arg]) -> StateRank:
    return _rank(fw, frozenset(subset))


def state_leq(fw: Framework, first: Iterable[Arg], second: Iterable[Arg]) -> bool:
    """Is the second set in at least as good a state as the first?  False
    unless both sets are conflict-eliminable."""
    first, second = frozenset(first), frozenset(second)
    if not (_is_ce(fw, first) and _is_ce(fw, second)):
        return False
    return _rank(fw, first) <= _rank(fw, second)


def state_leq_literal(
    fw: Framework, first: Iterable[Arg], second: Iterable[Arg]
) -> bool:
    """The same ordering spelled out as its defining three-way disjunction;
    kept as an independent route for the equivalence tests."""
    first, second = frozenset(first), frozenset(second)
    if not (_is_ce(fw, first) and _is_ce(fw, second)):
        return False
    if is_c_admissible(fw, second):
        return True
    if _one_directional(fw, first):
        return True
    return not (
        is_c_admissible(fw, first)
        or is_c_admissible(fw, second)
        or _one_directional(fw, first)
        or _one_directional(fw, second)
    )


def coalition_permitted(
    fw: Framework, first: Iterable[Arg], second: Iterable[Arg]
) -> bool:
    """Disjoint sets whose union is conflict-eliminable may form a coalition."""
    first, second = frozenset(first), frozenset(second)
    return not (first & second) and _is_ce(fw, first | second)


def attackers(fw: Framework, subset: Iterable[Arg]) -> frozenset:
    """The framework members whose singletons attack some member of the set."""
    subset = frozenset(subset)
    return frozenset(
        s
        for s in fw.arguments
        if any(attacks(fw, frozenset((s,)), member) for member in subset)
    )


def undefeated_external(
    fw: Framework, base: Iterable[Arg], candidate: Iterable[Arg]
) -> int:
    """How many of the base set's attackers the candidate coalition neither
    absorbs nor defeats."""
    base, candidate = frozenset(base), frozenset(candidate)
    return sum(
        1
        for s in attackers(fw, base)
        if s not in candidate and not c_defeats(fw, candidate, s)
    )


@dataclass(frozen=True)
class ProfitVerdict:
    holds: bool
    larger_set: bool
    better_state: bool
    fewer_attackers: bool
    attacker_counts: tuple

    def __str__(self) -> str:
        flag = lambda b: "yes" if b else "no"
        return (
            f"holds={flag(self.holds)} larger-set={flag(self.larger_set)} "
            f"better-state={flag(self.better_state)} "
            f"fewer-attackers={flag(self.fewer_attackers)} "
            f"undefeated-before={self.attacker_counts[0]} "
            f"undefeated-after={self.attacker_counts[1]}"
        )


def profitable(
    fw: Framework, first: Iterable[Arg], second: Iterable[Arg]
) -> ProfitVerdict:
    """Is growing from ``first`` to ``second`` profitable?  All three axioms
    must hold: containment, state, and no increase in the base set's
    undefeated external attackers."""
    first, second = frozenset(first), frozenset(second)
    larger = first <= second
    better = state_leq(fw, first, second)
    before = undefeated_external(fw, first, first)
    after = undefeated_external(fw, first, second)
    fewer = before >= after
    return ProfitVerdict(
        larger and better and fewer, larger, better, fewer, (before, after)
    )


@lru_cache(maxsize=None)
def _profitable_holds(fw: Framework, first: frozenset, second: frozenset) -> bool:
    return profitable(fw, first, second).holds


@lru_cache(maxsize=None)
def _max_sets(fw: Framework, subset: frozenset, limit: int) -> tuple:
    if not _is_ce(fw, subset):
        raise NotConflictEliminable(_fmt(subset))
    semantics._check_limit(fw, limit)
    rest = fw.arguments - subset
    reachable = [
        subset | extra
        for extra in _subsets(rest, include_empty=True)
        if _profitable_holds(fw, subset, subset | extra)
    ]
    maximal = [
        t for t in reachable if not any(t < other for other in reachable)
    ]
    return tuple(sorted(maximal, key=lambda s: (len(s), sorted(s))))


def max_sets(
    fw: Framework, subset: Iterable[Arg], limit: int = SIZE_LIMIT_DEFAULT
) -> list:
    """All profit-maximal supersets of the given conflict-eliminable set."""
    return list(_max_sets(fw, frozenset(subset), limit))


def pref_supersets(
    fw: Framework, subset: Iterable[Arg], limit: int = SIZE_LIMIT_DEFAULT
) -> list:
    """The maximal coalition-admissible sets containing the given set."""
    subset = frozenset(subset)
    return [s for s in enumerate_c_preferred(fw, limit) if subset <= s]


def crit_leq(
    fw: Framework,
    beta: Criterion,
    first: Iterable[Arg],
    second: Iterable[Arg],
    fewer_basis: FewerBasis = "own",
    shared_base: frozenset = frozenset(),
) -> bool:
    """Is ``second`` at least as good as ``first`` by one criterion: ``l``
    (size), ``b`` (state rank), or ``f`` (undefeated attackers, fewer being
    better)?  For ``f`` each set is measured against its own attacker base by
    default; the ``shared`` basis measures both against ``shared_base``."""
    first, second = frozenset(first), frozenset(second)
    if beta == "l":
        return len(first) <= len(second)
    if not (_is_ce(fw, first) and _is_ce(fw, second)):
        raise NotConflictEliminable("criteria b/f compare conflict-eliminable sets")
    if beta == "b":
        return _rank(fw, first) <= _rank(fw, second)
    if beta == "f":
        if fewer_basis == "own":
            return undefeated_external(fw, second, second) <= undefeated_external(
                fw, first, first
            )
        return undefeated_external(fw, shared_base, second) <= undefeated_external(
            fw, shared_base, first
        )
    raise ValueError(f"unknown criterion {beta!r}")


def crit_less(
    fw: Framework,
    beta: Criterion,
    first,
    second,
    fewer_basis: FewerBasis = "own",
    shared_base: frozenset = frozenset(),
) -> bool:
    return crit_leq(fw, beta, first, second, fewer_basis, shared_base) and not crit_leq(
        fw, beta, second, first, fewer_basis, shared_base
    )


def max_profitable(
    fw: Framework,
    first: Iterable[Arg],
    second: Iterable[Arg],
    fewer_basis: FewerBasis = "own",
    limit: int = SIZE_LIMIT_DEFAULT,
) -> bool:
    """Profitability refined by reachable maximal coalitions: some maximal
    coalition of ``second`` must, against every maximal coalition of
    ``first``, compensate each strict criterion loss with a strict win on
    another criterion."""
    first, second = frozenset(first), frozenset(second)
    if not profitable(fw, first, second).holds:
        return False
    firsts = _max_sets(fw, first, limit)
    seconds = _max_sets(fw, second, limit)

    def survives(sx: frozenset) -> bool:
        for sy in firsts:
            for beta in ("l", "b", "f"):
                if crit_less(fw, beta, sx, sy, fewer_basis, first):
                    others = [g for g in ("l", "b", "f") if g != beta]
                    if not any(
                        crit_less(fw, gamma, sy, sx, fewer_basis, first)
                        for gamma in others
                    ):
                        return False
        return True

    return any(survives(sx) for sx in seconds)


def is_weakly_continuous(
    fw: Framework, subset: Iterable[Arg], limit: int = SIZE_LIMIT_DEFAULT
) -> bool:
    """Some profit-maximal superset can be grown towards through permitted
    intermediate coalitions that are each profitable."""
    subset = frozenset(subset)
    if not _is_ce(fw, subset):
        raise NotConflictEliminable(_fmt(subset))
    return any(
        _continuous_via(fw, subset, sz) for sz in _max_sets(fw, subset, limit)
    )


def is_continuous(
    fw: Framework, subset: Iterable[Arg], limit: int = SIZE_LIMIT_DEFAULT
) -> bool:
    """Every profit-maximal superset can be grown towards as above."""
    subset = frozenset(subset)
    if not _is_ce(fw, subset):
        raise NotConflictEliminable(_fmt(subset))
    return all(
        _continuous_via(fw, subset, sz) for sz in _max_sets(fw, subset, limit)
    )


def _continuous_via(fw: Framework, subset: frozenset, sz: frozenset) -> bool:
    for extra in _subsets(sz - subset, include_empty=True):
        sw = subset | extra
        if coalition_permitted(fw, subset, sw - subset):
            if not _profitable_holds(fw, subset, sw):
                return False
    return True


@dataclass(frozen=True)
class FormabilityResult:
    kind: str
    base: frozenset
    partners: tuple

    def sorted_partners(self) -> list:
        return sorted(self.partners, key=lambda s: (len(s), sorted(s)))


def formability(
    fw: Framework,
    kind: FormabilityKind,
    subset: Iterable[Arg],
    fewer_basis: FewerBasis = "own",
    limit: int = SIZE_LIMIT_DEFAULT,
) -> FormabilityResult:
    """Partner sets the coalition may form under one of the four semantics:
    one-sided profit (W), mutual profit (M), one-sided maximal profit (WS),
    and mutual maximal profit (S)."""
    subset = frozenset(subset)
    if kind not in FORMABILITY_KINDS:
        raise ValueError(f"unknown formability kind {kind!r}")
    if not _is_ce(fw, subset):
        raise NotConflictEliminable(_fmt(subset))
    semantics._check_limit(fw, limit)

    if kind in ("W", "M"):
        relation = lambda a, b: _profitable_holds(fw, a, b)
    else:
        relation = lambda a, b: max_profitable(fw, a, b, fewer_basis, limit)
    combine = any if kind in ("W", "WS") else all

    partners = []
    for candidate in _subsets(fw.arguments - subset):
        if not coalition_permitted(fw, subset, candidate):
            continue
        union = subset | candidate
        if combine((relation(subset, union), relation(candidate, union))):
            partners.append(candidate)
    return FormabilityResult(kind, subset, tuple(sorted(partners, key=lambda s: (len(s), sorted(s)))))
