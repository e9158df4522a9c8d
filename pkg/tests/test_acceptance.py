"""Acceptance criteria, one test per criterion (split where a known
irreconcilable deviation needs precise scoping; see fixtures/README.md and
the failure messages for the analysis)."""

import time

from ceaf import (
    Arg,
    RandomModelSpec,
    check_reduction,
    check_theorem,
    dot,
    generate_random,
    io_doc,
)
from ceaf import coalition, fixtures, oracle, semantics
from ceaf.core import _subsets, instantiated_closure
from ceaf.oracle import generate_random_restricted
from conftest import by_ids

from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
FIXDIR = ROOT / "fixtures"
GOLDDIR = FIXDIR / "goldens"


def clear_caches():
    instantiated_closure.cache_clear()
    semantics._is_ce.cache_clear()
    semantics._intrinsic.cache_clear()
    semantics._view.cache_clear()
    coalition._one_directional.cache_clear()
    coalition._rank.cache_clear()
    coalition._profitable_holds.cache_clear()
    coalition._max_sets.cache_clear()


def test_c1_intrinsic_arguments_of_running_example(ldp):
    clear_caches()
    start = time.monotonic()
    assert semantics.intrinsic(ldp, by_ids(ldp, "a1", "a3")) == {
        Arg("a1", 1),
        Arg("a3", 2),
    }
    assert semantics.intrinsic(ldp, by_ids(ldp, "a1", "a2", "a3")) == {
        Arg("a1", 1),
        Arg("a2", 1),
        Arg("a3", 1),
    }
    assert time.monotonic() - start < 1.0


def test_c2_running_example_verdicts(ldp):
    a2, a4 = ldp.by_id("a2"), ldp.by_id("a4")
    pair = by_ids(ldp, "a1", "a3")
    triple = by_ids(ldp, "a1", "a2", "a3")
    assert semantics.c_defeats(ldp, by_ids(ldp, "a3"), a4)
    assert semantics.c_attacks(ldp, pair, a2)
    assert not semantics.is_c_admissible(ldp, pair)
    assert coalition.is_one_directionally_attacked(ldp, triple)
    assert coalition.profitable(ldp, pair, triple).holds


SEVEN_TARGETS = {
    "W": {
        frozenset({"a3"}),
        frozenset({"s1"}),
        frozenset({"s6"}),
        frozenset({"s7"}),
        frozenset({"s1", "s6"}),
        frozenset({"s1", "s7"}),
        frozenset({"a3", "s7"}),
    },
    "M": {
        frozenset({"a3"}),
        frozenset({"s7"}),
        frozenset({"s1", "s6"}),
        frozenset({"s1", "s7"}),
        frozenset({"a3", "s7"}),
    },
    "WS": {
        frozenset({"a3"}),
        frozenset({"s1"}),
        frozenset({"s7"}),
        frozenset({"s1", "s7"}),
        frozenset({"a3", "s7"}),
    },
}
SEVEN_TARGETS["S"] = SEVEN_TARGETS["WS"]


def _partners(fw, kind):
    return {
        frozenset(a.id for a in p)
        for p in coalition.formability(fw, kind, by_ids(fw, "a2")).partners
    }


def test_c3_formability_equations_w_m_ws(seven):
    clear_caches()
    start = time.monotonic()
    for kind in ("W", "M", "WS"):
        assert _partners(seven, kind) == SEVEN_TARGETS[kind], kind
    assert time.monotonic() - start < 60.0


def test_c3_formability_equation_s(seven):
    """The target S equation is unsatisfiable: mutual maximal formability is
    contained in mutual formability by construction, so no framework can put
    {s1} in S while the target M excludes it.  The implementation realizes
    W, M and WS exactly; S comes out as the target minus {s1}.  Asserted
    as stated so the discrepancy stays visible; see fixtures/README.md."""
    computed = _partners(seven, "S")
    assert computed <= SEVEN_TARGETS["S"]
    assert SEVEN_TARGETS["S"] - computed == {frozenset({"s1"})}
    assert computed == SEVEN_TARGETS["S"], (
        "S differs from the target equation exactly on {s1}; the target "
        "equations are mutually inconsistent (S must be contained in M)"
    )


def test_c4_profit_axiom_independence(indep_larger, indep_state, indep_fewer):
    cases = [
        (indep_larger, ("a1",), ("a1", "a2"), "larger_set"),
        (indep_state, ("s1",), ("s3",), "better_state"),
        (indep_fewer, ("s3",), ("s2",), "fewer_attackers"),
    ]
    for fw, first, second, axiom in cases:
        verdict = coalition.profitable(fw, by_ids(fw, *first), by_ids(fw, *second))
        flags = {
            "larger_set": verdict.larger_set,
            "better_state": verdict.better_state,
            "fewer_attackers": verdict.fewer_attackers,
        }
        assert flags.pop(axiom), (axiom, verdict)
        assert not any(flags.values()), (axiom, verdict)
        assert not verdict.holds


def test_c5_asymmetry_and_discontinuation(asym, disc):
    s1, a2 = by_ids(asym, "s1"), by_ids(asym, "a2")
    union = by_ids(asym, "s1", "a2")
    assert coalition.profitable(asym, s1, union).holds
    verdict = coalition.profitable(asym, a2, union)
    assert not verdict.holds
    assert verdict.larger_set and verdict.better_state
    assert not verdict.fewer_attackers

    a1 = by_ids(disc, "a1")
    sx = by_ids(disc, "a1", "a2", "s3")
    assert sx in coalition.max_sets(disc, a1)
    assert not coalition.profitable(disc, a1, by_ids(disc, "a1", "a2")).holds
    assert not coalition.is_weakly_continuous(disc, a1)


def _random_suite():
    for seed in range(200):
        yield generate_random(
            RandomModelSpec(
                argument_count=3 + seed % 3,
                capacity_range=(1, 4),
                attack_density=0.1 + (seed % 6) * 0.09,
                aggregator="sum" if seed % 2 else "max",
                seed=seed,
            )
        )


PROPERTY_THEOREMS = ("L1", "P2", "P4", "P5", "T2", "T3", "T10")


def test_c6_property_suite(ldp, seven, asym, disc, indep_larger):
    clear_caches()
    small = [ldp, asym, disc, indep_larger]
    for fw in small:
        for theorem in PROPERTY_THEOREMS:
            report = check_theorem(fw, theorem)
            assert report.verdict, report.to_json()
    for theorem in ("L1", "P5"):
        assert check_theorem(seven, theorem).verdict
    failures = []
    for i, fw in enumerate(_random_suite()):
        for theorem in PROPERTY_THEOREMS:
            report = check_theorem(fw, theorem, f"seed{i}")
            if not report.verdict:
                failures.append(report.to_json())
    assert not failures, failures[:3]


def test_c6_theorem4_maximality(ldp, asym, disc, indep_larger):
    """Faithful check of the mutually-maximal-coalition result including its
    maximality clause.  The clause is refuted on randomized frameworks (a
    profit-maximal admissible coalition can sit below a larger reachable set
    when the base set is not coalition-admissible); the fixtures satisfy it,
    the random sweep reports replayable witnesses.  Kept as stated so the
    refutation stays visible; see fixtures/README.md."""
    for fw in (ldp, asym, disc, indep_larger):
        assert check_theorem(fw, "T4").verdict
    failures = []
    for i, fw in enumerate(_random_suite()):
        report = check_theorem(fw, "T4", f"seed{i}")
        if not report.verdict:
            failures.append(report.to_json())
    assert not failures, (
        f"{len(failures)} replayable maximality counterexamples, e.g. "
        + failures[0]
    )


def test_c7_reduction_on_random_restricted_frameworks():
    clear_caches()
    start = time.monotonic()
    for seed in range(50):
        fw = generate_random_restricted(
            argument_count=3 + seed % 4, attack_density=0.35, seed=seed
        )
        report = check_reduction(fw)
        assert report.ok, (seed, str(report))
    assert time.monotonic() - start < 30.0


def test_c8_oracle_equivalence(ldp, seven, asym, disc, indep_larger):
    fws = [ldp, asym, disc, indep_larger] + [
        generate_random(RandomModelSpec(4, (1, 3), 0.35, "max", seed))
        for seed in (11, 12, 13)
    ]
    for fw in fws:
        for target in sorted(fw.arguments):
            for attackers in _subsets(fw.arguments - {target}):
                assert semantics.max_attack_strength(
                    fw, attackers, target
                ) == oracle.brute_vmax(fw, attackers, target)
        subsets = list(_subsets(fw.arguments, include_empty=True))
        for s in subsets:
            assert semantics.is_c_admissible(fw, s) == oracle.brute_c_admissible(
                fw, s
            )
            if semantics.is_conflict_eliminable(fw, s):
                assert semantics.intrinsic(fw, s) == oracle.brute_alpha(fw, s)
        assert semantics.enumerate_c_preferred(fw) == oracle.brute_c_preferred(fw)
        ce = [s for s in subsets if s and semantics.is_conflict_eliminable(fw, s)]
        for s1 in ce:
            for s2 in ce:
                if s1 <= s2:
                    assert coalition.profitable(fw, s1, s2).holds == (
                        oracle.brute_profitable(fw, s1, s2)
                    )
                    assert coalition.max_profitable(fw, s1, s2) == (
                        oracle.brute_max_profitable(fw, s1, s2)
                    )
    # formability on the base of the seven-argument fixture
    base = by_ids(seven, "a2")
    for kind in ("W", "M", "WS", "S"):
        assert list(
            coalition.formability(seven, kind, base).partners
        ) == oracle.brute_formability(seven, kind, base)


def test_c9_dot_goldens_and_round_trip():
    ldp = fixtures.ldp()
    goldens = {
        "ldp-whole.dot": dot.export_dot(ldp),
        "ldp-view-a1-a3.dot": dot.export_dot(
            ldp, {ldp.by_id("a1"), ldp.by_id("a3")}
        ),
        "ldp-view-a1-a2-a3.dot": dot.export_dot(
            ldp, {ldp.by_id("a1"), ldp.by_id("a2"), ldp.by_id("a3")}
        ),
    }
    for name, text in goldens.items():
        assert (GOLDDIR / name).read_text() == text, name
    for name, maker in fixtures.ALL.items():
        fw = maker()
        assert io_doc.loads(io_doc.dumps(fw)).framework == fw, name
