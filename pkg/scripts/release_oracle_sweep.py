"""Release gate: brute-force / engineered equivalence over 200 random models.

Compares every exported semantic operation against its brute-force reference
on 200 seeded random frameworks plus all built-in fixtures.  Slow by design
(run before a release, not in the regular test loop); prints one line per
framework and a final verdict.
"""

import sys
import time

sys.path.insert(0, "src")

from ceaf import RandomModelSpec, generate_random
from ceaf import coalition, fixtures, oracle, semantics
from ceaf.core import _subsets, instantiated_closure


def clear_caches():
    instantiated_closure.cache_clear()
    semantics._is_ce.cache_clear()
    semantics._intrinsic.cache_clear()
    semantics._view.cache_clear()
    coalition._one_directional.cache_clear()
    coalition._rank.cache_clear()
    coalition._profitable_holds.cache_clear()
    coalition._max_sets.cache_clear()


def frameworks():
    for name, maker in fixtures.ALL.items():
        yield name, maker()
    for seed in range(200):
        spec = RandomModelSpec(
            argument_count=3 + seed % 3,
            capacity_range=(1, 4),
            attack_density=0.1 + (seed % 6) * 0.09,
            aggregator="sum" if seed % 2 else "max",
            seed=seed,
        )
        yield f"seed{seed}", generate_random(spec)


def check(name, fw):
    problems = []
    args = sorted(fw.arguments)
    for target in args:
        for attackers in _subsets(fw.arguments - {target}):
            if semantics.max_attack_strength(
                fw, attackers, target
            ) != oracle.brute_vmax(fw, attackers, target):
                problems.append(("vmax", attackers, target))
    subsets = list(_subsets(fw.arguments, include_empty=True))
    ce = []
    for s in subsets:
        mine = semantics.is_conflict_eliminable(fw, s)
        if mine != oracle.brute_conflict_eliminable(fw, s):
            problems.append(("conflict-eliminable", s))
        if mine:
            ce.append(s)
            if semantics.intrinsic(fw, s) != oracle.brute_alpha(fw, s):
                problems.append(("intrinsic", s))
        if semantics.is_c_admissible(fw, s) != oracle.brute_c_admissible(fw, s):
            problems.append(("c-admissible", s))
    if semantics.enumerate_c_preferred(fw) != oracle.brute_c_preferred(fw):
        problems.append(("c-preferred",))
    # the brute relational routes are doubly exponential; scope the bases
    # they quantify over by framework size (the test suite covers the
    # seven-argument fixture's relations directly)
    n = len(fw.arguments)
    deep = n <= 4
    if n <= 6:
        for s1 in ce:
            for s2 in ce:
                if not s1 <= s2:
                    continue
                if coalition.profitable(
                    fw, s1, s2
                ).holds != oracle.brute_profitable(fw, s1, s2):
                    problems.append(("profitable", s1, s2))
                if (deep or len(s1) <= 1) and coalition.max_profitable(
                    fw, s1, s2
                ) != oracle.brute_max_profitable(fw, s1, s2):
                    problems.append(("max-profitable", s1, s2))
        for s1 in ce:
            if not s1 or not (deep or len(s1) == 1):
                continue
            for kind in ("W", "M", "WS", "S"):
                if list(
                    coalition.formability(fw, kind, s1).partners
                ) != oracle.brute_formability(fw, kind, s1):
                    problems.append(("formability", kind, s1))
    return problems


def main():
    start = time.time()
    bad = 0
    for name, fw in frameworks():
        if len(fw.arguments) > 7:
            continue
        clear_caches()
        t0 = time.time()
        problems = check(name, fw)
        status = "ok" if not problems else f"{len(problems)} DIFFS"
        print(f"{name}: {status} ({time.time() - t0:.1f}s)")
        if problems:
            bad += 1
            for p in problems[:5]:
                print("   ", p)
    print(f"done in {time.time() - start:.1f}s; {bad} frameworks with diffs")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
