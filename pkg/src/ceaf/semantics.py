"""Attack semantics: defeats, conflict-eliminable sets, intrinsic arguments,
coalition views, and the coalition-level admissibility notions built on them.

A set of arguments tolerates partial internal attacks as long as no member is
outright defeated (attacked with strength reaching its capacity).  Such a
conflict-eliminable set acts through its intrinsic arguments: the same
identifiers with capacities reduced by the strongest internal attack on each
member.  The coalition's view keeps external arguments at full capacity,
replaces the coalition by its intrinsic arguments, and drops the attacks that
were purely internal.  Attacks from the coalition are launched by subsets of
the intrinsic arguments inside the view; attacks on the coalition still target
the original, full-capacity members.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from .core import (
    Arg,
    Framework,
    NotConflictEliminable,
    SizeLimitExceeded,
    SIZE_LIMIT_DEFAULT,
    _fmt,
    _subsets,
)


def _check_limit(fw: Framework, limit: int = SIZE_LIMIT_DEFAULT) -> None:
    if len(fw.arguments) > limit:
        raise SizeLimitExceeded(
            f"framework has {len(fw.arguments)} arguments (> {limit})"
        )


def _resolving_candidates(fw: Framework, attackers: frozenset, target: Arg):
    """Subsets of ``attackers`` that can possibly resolve a strength, without
    scanning the whole powerset: the singleton-resolving core, every listed
    entry key contained in ``attackers``, and (under persist) id-matched
    projections of listed entry signatures."""
    model = fw.strengths
    core = frozenset(
        x for x in attackers if model.strength(frozenset((x,)), target) is not None
    )
    if core:
        yield core
        for x in sorted(core):
            yield frozenset((x,))
    for (key, t) in model._lookup:
        if t == target and key and key <= attackers:
            yield key
    if model.variant_policy == "persist":
        by_id = {a.id: a for a in attackers}
        if len(by_id) == len(attackers):
            for (key, t), _ in model._lookup.items():
                if t != target:
                    continue
                ids = [a.id for a in key]
                if len(set(ids)) == len(ids) and set(ids) <= set(by_id):
                    yield frozenset(by_id[i] for i in ids)


def attacks(fw: Framework, attackers: Iterable[Arg], target: Arg) -> bool:
    """Does some nonempty subset of ``attackers`` carry a defined strength
    against ``target``?"""
    attackers = frozenset(attackers)
    for cand in _resolving_candidates(fw, attackers, target):
        if fw.strengths.strength(cand, target) is not None:
            return True
    return False


def max_attack_strength(fw: Framework, attackers: Iterable[Arg], target: Arg) -> int:
    """The maximum defined strength over subsets of ``attackers`` against
    ``target``; 0 when no subset attacks."""
    attackers = frozenset(attackers)
    best = 0
    seen = set()
    for cand in _resolving_candidates(fw, attackers, target):
        if cand in seen:
            continue
        seen.add(cand)
        v = fw.strengths.strength(cand, target)
        if v is not None and v > best:
            best = v
    return best


# short name used throughout the enumerations
vmax = max_attack_strength


def defeats(fw: Framework, attackers: Iterable[Arg], target: Arg) -> bool:
    """An attack defeats its target when its strength reaches the target's
    capacity."""
    attackers = frozenset(attackers)
    if not attackers:
        return False
    return max_attack_strength(fw, attackers, target) >= target.capacity


@lru_cache(maxsize=None)
def _is_ce(fw: Framework, subset: frozenset) -> bool:
    return all(not defeats(fw, subset, s) for s in subset)


def is_conflict_eliminable(fw: Framework, subset: Iterable[Arg]) -> bool:
    """No member of the set is defeated by the set itself."""
    return _is_ce(fw, frozenset(subset))


@lru_cache(maxsize=None)
def _intrinsic(fw: Framework, subset: frozenset) -> frozenset:
    if not _is_ce(fw, subset):
        raise NotConflictEliminable(_fmt(subset))
    return frozenset(
        s.with_capacity(s.capacity - max_attack_strength(fw, subset, s))
        for s in subset
    )


def intrinsic(fw: Framework, subset: Iterable[Arg]) -> frozenset:
    """The intrinsic arguments of a conflict-eliminable set: each member's
    capacity reduced by the strongest internal attack on it."""
    return _intrinsic(fw, frozenset(subset))


@dataclass(frozen=True)
class View:
    """The framework as a coalition sees it."""

    framework: Framework
    base: frozenset  # the coalition's original members
    alpha: frozenset  # its intrinsic arguments
    arguments: frozenset  # (S \ base) | alpha
    diagnostics: tuple = ()

    def strength(self, attackers: Iterable[Arg], target: Arg) -> Optional[int]:
        """Strength lookup with the purely internal attacks removed."""
        attackers = frozenset(attackers)
        if target in self.base and attackers <= self.base:
            return None
        return self.framework.strengths.strength(attackers, target)

    def attacks(self, attackers: Iterable[Arg], target: Arg) -> bool:
        attackers = frozenset(attackers)
        for cand in _resolving_candidates(self.framework, attackers, target):
            if self.strength(cand, target) is not None:
                return True
        return False


@lru_cache(maxsize=None)
def _view(fw: Framework, subset: frozenset) -> View:
    alpha = _intrinsic(fw, subset)
    args = (fw.arguments - subset) | alpha
    diagnostics = []
    # Residual attacks from weakened intrinsic arguments back onto original
    # members survive the deletion of purely internal attacks; surface them.
    reduced = alpha - subset
    for target in sorted(subset):
        for cand in _subsets(alpha):
            if not cand & reduced:
                continue
            if cand <= subset:
                continue
            if fw.strengths.strength(cand, target) is not None:
                diagnostics.append(
                    f"residual attack from intrinsic arguments {_fmt(cand)} "
                    f"onto coalition member {target}"
                )
                break
    return View(fw, subset, alpha, frozenset(args), tuple(diagnostics))


def view(fw: Framework, subset: Iterable[Arg]) -> View:
    """The view a conflict-eliminable coalition has of the framework."""
    return _view(fw, frozenset(subset))


def _view_vmax(fw: Framework, vw: View, attackers: frozenset, target: Arg) -> int:
    """Maximum view strength over subsets of ``attackers`` against ``target``;
    0 when none is defined."""
    best = 0
    seen = set()
    for cand in _resolving_candidates(fw, attackers, target):
        if cand in seen:
            continue
        seen.add(cand)
        s = vw.strength(cand, target)
        if s is not None and s > best:
            best = s
    return best


def c_attacks(fw: Framework, subset: Iterable[Arg], target: Arg) -> bool:
    """Does some subset of the coalition's intrinsic arguments carry a defined
    strength against ``target`` inside the coalition's view?  False when the
    coalition is not conflict-eliminable."""
    subset = frozenset(subset)
    if not _is_ce(fw, subset):
        return False
    vw = _view(fw, subset)
    for cand in _resolving_candidates(fw, vw.alpha, target):
        if vw.strength(cand, target) is not None:
            return True
    return False


def c_defeats(fw: Framework, subset: Iterable[Arg], target: Arg) -> bool:
    """As ``c_attacks`` but requiring view strength at least the target's
    capacity."""
    subset = frozenset(subset)
    if not _is_ce(fw, subset):
        return False
    vw = _view(fw, subset)
    best = _view_vmax(fw, vw, vw.alpha, target)
    return 0 < best and best >= target.capacity


def _minimal_attack_sets(fw: Framework, vw: View, target: Arg):
    """Minimal subsets of the view's arguments with a defined view strength
    against ``target``.  Every larger attacking set contains one of these, so
    quantifications over attacking sets only need them."""
    model = fw.strengths
    found = set()
    # singletons
    for x in sorted(vw.arguments):
        if vw.strength(frozenset((x,)), target) is not None:
            found.add(frozenset((x,)))
    # listed entry keys inside the view that survive deletion
    for (key, t) in sorted(model._lookup, key=lambda k: (sorted(k[0]), k[1])):
        if t != target or not key or not key <= vw.arguments:
            continue
        if vw.strength(key, target) is None:
            continue
        if any(f < key for f in found):
            continue
        found = {f for f in found if not key < f}
        found.add(key)
    if model.variant_policy == "persist":
        by_id = {a.id: a for a in vw.arguments}
        if len(by_id) == len(vw.arguments):
            for (key, t), _ in model._lookup.items():
                if t != target:
                    continue
                ids = [a.id for a in key]
                if len(set(ids)) != len(ids) or not set(ids) <= set(by_id):
                    continue
                proj = frozenset(by_id[i] for i in ids)
                if vw.strength(proj, target) is None:
                    continue
                if any(f <= proj for f in found):
                    continue
                found = {f for f in found if not proj < f}
                found.add(proj)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def is_c_admissible(fw: Framework, subset: Iterable[Arg]) -> bool:
    """The coalition defends every original member: each attacking set in its
    view contains an element the coalition defeats from its intrinsic
    arguments."""
    subset = frozenset(subset)
    if not _is_ce(fw, subset):
        return False
    vw = _view(fw, subset)
    for member in sorted(subset):
        for attack_set in _minimal_attack_sets(fw, vw, member):
            if not any(c_defeats(fw, subset, sx) for sx in sorted(attack_set)):
                return False
    return True


def enumerate_conflict_eliminable(
    fw: Framework, limit: int = SIZE_LIMIT_DEFAULT
) -> list:
    _check_limit(fw, limit)
    return [s for s in _subsets(fw.arguments, include_empty=True) if _is_ce(fw, s)]


def enumerate_c_admissible(fw: Framework, limit: int = SIZE_LIMIT_DEFAULT) -> list:
    _check_limit(fw, limit)
    return [
        s
        for s in _subsets(fw.arguments, include_empty=True)
        if is_c_admissible(fw, s)
    ]


def enumerate_c_preferred(fw: Framework, limit: int = SIZE_LIMIT_DEFAULT) -> list:
    """Subset-maximal coalition-admissible sets, by exhaustive enumeration."""
    admissible = enumerate_c_admissible(fw, limit)
    out = [
        s
        for s in admissible
        if not any(s < other for other in admissible)
    ]
    return sorted(out, key=lambda s: (len(s), sorted(s)))
