"""Core data model: capacitated arguments, coherent sets, and group attack strengths.

An argument instance is an identifier together with a natural-number capacity
(how much independent content the argument carries).  A framework couples a
coherent set of instances with a partial strength table assigning a positive
strength to group attacks.  The table is finite; queries outside it may be
derived by an aggregation policy (``max``/``sum`` over singleton attacks) and,
under the ``persist`` variant policy, by falling back to the nearest listed
entry at higher capacities.  ``validate_axioms`` checks the eight structural
axioms of the attack-strength function over the finite instantiated domain.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Literal, Mapping, Optional

Aggregator = Literal["max", "sum", "explicit-only"]
VariantPolicy = Literal["strict", "persist"]

SIZE_LIMIT_DEFAULT = 16


class SizeLimitExceeded(Exception):
    """Raised when an exhaustive enumeration would exceed the configured bound."""


class NotConflictEliminable(Exception):
    """Raised when an operation requires a conflict-eliminable base set."""


class MissingVariantStrength(Exception):
    """A lookup needed a reduced-capacity strength that the table does not list.

    Only raised by explicit ``required`` lookups; ordinary resolution treats
    unlisted variants as undefined (strict) or defaulted (persist).
    """

    def __init__(self, attackers: frozenset["Arg"], target: "Arg"):
        self.attackers = attackers
        self.target = target
        names = ", ".join(str(a) for a in sorted(attackers))
        super().__init__(f"no strength listed for ({{{names}}}, {target})")


@dataclass(frozen=True, order=True)
class Arg:
    """An argument instance: identifier plus capacity."""

    id: str
    capacity: int

    def with_capacity(self, capacity: int) -> "Arg":
        """The same identifier at a different capacity."""
        if capacity == self.capacity:
            return self
        return Arg(self.id, capacity)

    def __str__(self) -> str:
        return f"{self.id}({self.capacity})"


def variant(s: Arg, capacity: int) -> Arg:
    return s.with_capacity(capacity)


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple
    message: str

    def __str__(self) -> str:
        return f"[{self.axiom}] {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return "\n".join(str(v) for v in self.violations)


def validate_coherent(members: Iterable[Arg]) -> ValidationReport:
    """Check the three coherence conditions on a set of argument instances.

    Finite, all capacities positive, and no identifier used twice.
    Violations are reported with the offending instance as witness.
    """
    members = list(members)
    violations = []
    seen: dict[str, Arg] = {}
    for a in sorted(members):
        if a.capacity <= 0:
            violations.append(
                Violation("capacity > 0", (a,), f"{a} has non-positive capacity")
            )
        if a.id in seen:
            violations.append(
                Violation(
                    "duplicate identifier",
                    (seen[a.id], a),
                    f"identifier {a.id!r} used by both {seen[a.id]} and {a}",
                )
            )
        else:
            seen[a.id] = a
    return ValidationReport(tuple(violations))


def _ids_unique(instances: Iterable[Arg]) -> bool:
    ids = [a.id for a in instances]
    return len(ids) == len(set(ids))


@dataclass(frozen=True)
class StrengthModel:
    """A finite table of group-attack strengths plus derivation policy.

    ``entries`` maps (attacker set, target) to a strength >= 1.  Resolution
    order for a query: exact listed entry; persist fallback (the minimum
    strength over listed entries with the same identifier signature, the same
    target instance, and attacker capacities at least the query's); aggregator
    fold over the query's singletons.  Under ``explicit-only`` nothing is
    derived.  Queries with an empty attacker set, or with the target among the
    attackers, are undefined.
    """

    entries_items: tuple = ()
    aggregator: Aggregator = "max"
    variant_policy: VariantPolicy = "strict"

    def __post_init__(self):
        lookup = {}
        for (attackers, target), strength in self.entries_items:
            lookup[(frozenset(attackers), target)] = strength
        object.__setattr__(self, "_lookup", lookup)

    @staticmethod
    def from_entries(
        entries: Mapping,
        aggregator: Aggregator = "max",
        variant_policy: VariantPolicy = "strict",
    ) -> "StrengthModel":
        items = tuple(
            sorted(
                (((frozenset(k[0]), k[1]), v) for k, v in entries.items()),
                key=lambda kv: (sorted(kv[0][0]), kv[0][1], kv[1]),
            )
        )
        return StrengthModel(items, aggregator, variant_policy)

    @property
    def entries(self) -> dict:
        return dict(self._lookup)

    def instances(self) -> frozenset:
        """Every argument instance mentioned in the table."""
        out = set()
        for (attackers, target) in self._lookup:
            out.update(attackers)
            out.add(target)
        return frozenset(out)

    def strength(self, attackers: Iterable[Arg], target: Arg) -> Optional[int]:
        attackers = frozenset(attackers)
        if not attackers or target in attackers:
            return None
        exact = self._lookup.get((attackers, target))
        if exact is not None:
            return exact
        if self.aggregator == "explicit-only":
            return None
        if self.variant_policy == "persist":
            fallback = self._persist_default(attackers, target)
            if fallback is not None:
                return fallback
        if len(attackers) == 1:
            return None
        values = []
        for x in attackers:
            v = self._singleton(x, target)
            if v is None:
                return None
            values.append(v)
        return max(values) if self.aggregator == "max" else sum(values)

    def required_strength(self, attackers: Iterable[Arg], target: Arg) -> int:
        """As ``strength`` but raising if an undefined variant lookup occurs."""
        v = self.strength(attackers, target)
        if v is None:
            raise MissingVariantStrength(frozenset(attackers), target)
        return v

    def _singleton(self, x: Arg, target: Arg) -> Optional[int]:
        if x == target:
            return None
        v = self._lookup.get((frozenset((x,)), target))
        if v is not None:
            return v
        if self.variant_policy == "persist":
            return self._persist_default(frozenset((x,)), target)
        return None

    def _persist_default(self, attackers: frozenset, target: Arg) -> Optional[int]:
        # A zero-capacity attacker carries no content and never attacks.
        if any(a.capacity == 0 for a in attackers):
            return None
        if not _ids_unique(attackers):
            return None
        want = {a.id: a.capacity for a in attackers}
        best = None
        for (listed, s), v in self._lookup.items():
            if s != target or len(listed) != len(attackers):
                continue
            got = {a.id: a.capacity for a in listed}
            if set(got) != set(want):
                continue
            if all(got[i] >= want[i] for i in want):
                best = v if best is None else min(best, v)
        return best


@dataclass(frozen=True)
class Framework:
    """A coherent set of arguments together with a strength model."""

    arguments: frozenset
    strengths: StrengthModel

    @staticmethod
    def build(
        arguments: Iterable[Arg],
        entries: Mapping,
        aggregator: Aggregator = "max",
        variant_policy: VariantPolicy = "strict",
    ) -> "Framework":
        return Framework(
            frozenset(arguments),
            StrengthModel.from_entries(entries, aggregator, variant_policy),
        )

    def strength(self, attackers: Iterable[Arg], target: Arg) -> Optional[int]:
        return self.strengths.strength(attackers, target)

    def by_id(self, name: str) -> Arg:
        for a in self.arguments:
            if a.id == name:
                return a
        raise KeyError(name)

    def sorted_arguments(self) -> list:
        return sorted(self.arguments)


def _subsets(items, include_empty=False):
    items = sorted(items)
    start = 0 if include_empty else 1
    for r in range(start, len(items) + 1):
        for combo in itertools.combinations(items, r):
            yield frozenset(combo)


def _id_unique_subsets(instances, include_empty=False):
    """Subsets of a (possibly multi-capacity) instance pool with unique ids."""
    by_id: dict[str, list] = {}
    for a in sorted(instances):
        by_id.setdefault(a.id, []).append(a)
    ids = sorted(by_id)
    # choices: for each id, either absent or one variant
    def rec(i):
        if i == len(ids):
            yield frozenset()
            return
        for rest in rec(i + 1):
            yield rest
            for a in by_id[ids[i]]:
                yield rest | {a}

    for s in rec(0):
        if s or include_empty:
            yield s


@lru_cache(maxsize=None)
def instantiated_closure(fw: Framework) -> frozenset:
    """All instances the semantics can touch: base arguments, every instance
    mentioned in the strength table, and every reduced-capacity instance that
    arises as an intrinsic argument of some conflict-eliminable subset."""
    from . import semantics  # deferred; semantics depends on core

    closure = set(fw.arguments) | set(fw.strengths.instances())
    for subset in _subsets(fw.arguments):
        if semantics.is_conflict_eliminable(fw, subset):
            closure.update(semantics.intrinsic(fw, subset))
    return frozenset(closure)


def _resolves(fw: Framework, attackers, target) -> Optional[int]:
    return fw.strengths.strength(attackers, target)


def validate_axioms(
    fw: Framework,
    restricted: bool = False,
    max_domain: int = 24,
) -> ValidationReport:
    """Exhaustively check the structural axioms over the instantiated domain.

    The domain is the instantiated closure; attacker sets range over its
    identifier-unique subsets (duplicate-identifier sets never arise in the
    semantics).  With ``restricted`` the two closure axioms and the three
    monotonicity axioms are skipped, leaving coherence, positivity and the
    self-attack ban, which is the regime used for the reduction to plain
    group-attack frameworks.
    """
    violations = list(validate_coherent(fw.arguments).violations)

    for (attackers, target), v in sorted(fw.strengths._lookup.items()):
        if not attackers:
            violations.append(
                Violation("coherence", (target,), "entry with empty attacker set")
            )
        if v < 1:
            violations.append(
                Violation(
                    "positive strength",
                    (attackers, target),
                    f"strength {v} < 1 for attack on {target}",
                )
            )
        if target in attackers:
            violations.append(
                Violation(
                    "no self attacks",
                    (attackers, target),
                    f"{target} appears in its own attacker set",
                )
            )

    domain = sorted(instantiated_closure(fw))
    if len(domain) > max_domain:
        raise SizeLimitExceeded(
            f"closure has {len(domain)} instances (> {max_domain})"
        )

    if restricted:
        return ValidationReport(tuple(violations))

    targets = domain
    attacker_sets = [s for s in _id_unique_subsets(domain)]
    resolved: dict = {}
    for t in targets:
        for s in attacker_sets:
            v = _resolves(fw, s, t)
            if v is not None:
                resolved[(s, t)] = v

    for (s, t), v in sorted(resolved.items()):
        # quasi-closure by subset + subset monotonicity (mono 2 corollary)
        for sub in _subsets(s):
            if sub == s:
                continue
            vsub = resolved.get((sub, t))
            if vsub is None:
                violations.append(
                    Violation(
                        "quasi-closure by subset",
                        (s, sub, t),
                        f"({_fmt(s)}, {t}) is defined but subset {_fmt(sub)} is not",
                    )
                )
            elif vsub > v:
                violations.append(
                    Violation(
                        "subset monotonicity",
                        (sub, s, t),
                        f"strength({_fmt(sub)}, {t})={vsub} exceeds "
                        f"strength({_fmt(s)}, {t})={v}",
                    )
                )
        # attack monotonicity 1: raising one attacker's capacity
        for a in sorted(s):
            for b in domain:
                if b.id != a.id or b.capacity <= a.capacity:
                    continue
                raised = (s - {a}) | {b}
                if not _ids_unique(raised):
                    continue
                vr = resolved.get((frozenset(raised), t))
                if vr is None:
                    violations.append(
                        Violation(
                            "attack monotonicity 1 (source)",
                            (s, a, b, t),
                            f"({_fmt(s)}, {t}) defined but raising {a} to {b} "
                            "is undefined",
                        )
                    )
                elif vr < v:
                    violations.append(
                        Violation(
                            "attack monotonicity 1 (source)",
                            (s, a, b, t),
                            f"raising {a} to {b} drops strength {v} -> {vr}",
                        )
                    )
        # attack monotonicity 3: raising the target's capacity
        if all(a.id != t.id for a in s):
            for u in domain:
                if u.id != t.id or u.capacity <= t.capacity:
                    continue
                vu = resolved.get((s, u))
                if vu is None:
                    violations.append(
                        Violation(
                            "attack monotonicity 3 (target)",
                            (s, t, u),
                            f"({_fmt(s)}, {t}) defined but target raised to {u} "
                            "is undefined",
                        )
                    )
                elif vu < v:
                    violations.append(
                        Violation(
                            "attack monotonicity 3 (target)",
                            (s, t, u),
                            f"raising target {t} to {u} drops strength {v} -> {vu}",
                        )
                    )

    # closure by set union + attack monotonicity 2 over resolved pairs
    by_target: dict = {}
    for (s, t), v in resolved.items():
        by_target.setdefault(t, []).append((s, v))
    for t, pairs in sorted(by_target.items()):
        for (s1, v1), (s2, v2) in itertools.combinations(sorted(pairs), 2):
            union = s1 | s2
            if t in union or not _ids_unique(union):
                continue
            vu = resolved.get((union, t))
            if vu is None:
                violations.append(
                    Violation(
                        "closure by set union",
                        (s1, s2, t),
                        f"({_fmt(s1)}, {t}) and ({_fmt(s2)}, {t}) defined but "
                        f"their union is not",
                    )
                )
            inter = s1 & s2
            if inter:
                vi = resolved.get((inter, t))
                if vi is not None and vi > min(v1, v2):
                    violations.append(
                        Violation(
                            "attack monotonicity 2 (source)",
                            (s1, s2, t),
                            f"strength of intersection {_fmt(inter)} on {t} "
                            f"exceeds a component",
                        )
                    )

    # generalised source monotonicity: raising capacities id-wise
    for (s, t), v in sorted(resolved.items()):
        for raised in _raisings(s, domain):
            if raised == s:
                continue
            vr = resolved.get((raised, t))
            if vr is None:
                violations.append(
                    Violation(
                        "generalised monotonicity",
                        (s, raised, t),
                        f"id-wise raise of {_fmt(s)} to {_fmt(raised)} vs {t} "
                        "is undefined",
                    )
                )
            elif vr < v:
                violations.append(
                    Violation(
                        "generalised monotonicity",
                        (s, raised, t),
                        f"id-wise raise of {_fmt(s)} drops strength {v} -> {vr}",
                    )
                )

    return ValidationReport(tuple(dict.fromkeys(violations)))


def _raisings(s: frozenset, domain) -> Iterable[frozenset]:
    """All id-wise capacity raisings of ``s`` within the domain."""
    choices = []
    for a in sorted(s):
        ups = [b for b in domain if b.id == a.id and b.capacity >= a.capacity]
        choices.append(ups or [a])
    for combo in itertools.product(*choices):
        if _ids_unique(combo):
            yield frozenset(combo)


def _fmt(instances) -> str:
    return "{" + ", ".join(str(a) for a in sorted(instances)) + "}"
