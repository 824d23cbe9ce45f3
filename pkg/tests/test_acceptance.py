"""Acceptance suite: one test per criterion, every tolerance exact unless stated.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS/FAIL line
per criterion.
"""

from fractions import Fraction

from hookalex.braid import markov_variants, parse_braid
from hookalex.evaluator import alexander, check_scaling
from hookalex.laurent import LaurentPoly
from hookalex.oracle import burau_alexander
from hookalex.rmatrix import (assemble_R, commutation_holds, doublet_block,
                              hook_eigenvalues, symmetric_operator_numeric,
                              trace_product, trace_product_numeric,
                              yang_baxter_holds)
from hookalex.schur import (jacobi_trudi_schur, ratio_at_A1, ratio_closed_form,
                            topological_factors, topological_power_sums)
from hookalex.young import Hook, build_graph, hooks_up_to_size, partitions_of

from conftest import corpus_knots, random_knot_braids

SCALING_HOOKS = (Hook(1, 0), Hook(0, 1), Hook(1, 1), Hook(2, 0),
                 Hook(2, 1), Hook(1, 2), Hook(2, 2))

SCHUR_POINTS = (
    (Fraction(2), Fraction(3, 2)),
    (Fraction(3, 2), Fraction(2)),
    (Fraction(5, 2), Fraction(3)),
    (Fraction(3), Fraction(4, 3)),
    (Fraction(7, 4), Fraction(5, 2)),
)


def _report(number: int, name: str, failures: list) -> None:
    verdict = "PASS" if not failures else "FAIL"
    print(f"criterion {number} ({name}): {verdict}")
    assert not failures, f"criterion {number} ({name}): {failures[:5]}"


def test_criterion_1_scaling_property():
    failures = []
    for b in corpus_knots():
        for h in SCALING_HOOKS:
            report = check_scaling(h, b)
            if not report.equal:
                failures.append((str(b), str(h)))
    _report(1, "scaling property on the corpus", failures)


def test_criterion_2_unknot_calibration():
    failures = []
    for h in hooks_up_to_size(5):
        for text in ("1", "-1"):
            value = alexander(h, parse_braid(text, 2)).polynomial
            if value != LaurentPoly.one():
                failures.append((str(h), text, str(value)))
    _report(2, "unknot calibration", failures)


def test_criterion_3_fundamental_oracle_equivalence():
    # both sides are unit-normalized, so agreement up to +-q^k is equality
    failures = []
    for b in random_knot_braids(20, max_strands=4, max_length=12):
        engine = alexander(Hook(0, 0), b).polynomial
        reference = burau_alexander(b)
        if engine != reference:
            failures.append((str(b), str(engine), str(reference)))
    _report(3, "fundamental oracle equivalence", failures)


def test_criterion_4_yang_baxter_suite():
    failures = []
    for h in hooks_up_to_size(4):
        for strands in (3, 4):
            graph = build_graph(h, strands)
            for k in range(strands):
                for i in range(1, strands - 1):
                    if not yang_baxter_holds(graph, k, i):
                        failures.append(("yb", str(h), strands, k, i))
        graph = build_graph(h, 4)
        for k in range(4):
            if not commutation_holds(graph, k, 1, 3):
                failures.append(("far", str(h), k))
    _report(4, "Yang-Baxter and far commutativity", failures)


def test_criterion_5_doublet_constraints():
    failures = []
    for h in hooks_up_to_size(5):
        ev = hook_eigenvalues(h)
        arm, leg = ev.arm.as_rational(), ev.leg.as_rational()
        for n in range(2, 9):
            block = doublet_block(h, n)
            if block.trace() != arm + leg:
                failures.append(("trace", str(h), n))
            if block.trace_of_square() != arm * arm + leg * leg:
                failures.append(("trace_sq", str(h), n))
            if block.determinant() != arm * leg:
                failures.append(("det", str(h), n))
    _report(5, "doublet closed system of equations", failures)


def test_criterion_6_schur_consistency():
    failures = []
    for a, q in SCHUR_POINTS:
        for n in range(1, 7):
            spec = topological_power_sums(a, n)
            for nu in partitions_of(n):
                oracle = jacobi_trudi_schur(nu, spec).evaluate(q)
                direct = topological_factors(nu).evaluate(a, q)
                if oracle != direct:
                    failures.append(("jt", str(nu), str(a), str(q)))
    for color in hooks_up_to_size(12):
        for total in range(color.size, 13, color.size):
            for mu in (h for h in hooks_up_to_size(total) if h.size == total):
                if ratio_at_A1(color, mu.as_partition()) != ratio_closed_form(color, mu):
                    failures.append(("ratio", str(color), str(mu)))
    for n in range(2, 9):
        for mu in partitions_of(n):
            if mu.diagonal_length > 1 and not ratio_at_A1(Hook(0, 0), mu).is_zero():
                failures.append(("fat-hook", str(mu)))
    _report(6, "Schur consistency", failures)


def test_criterion_7_markov_invariance():
    failures = []
    for b in corpus_knots():
        for h in hooks_up_to_size(3):
            reference = alexander(h, b).polynomial
            mv = markov_variants(b, count=5, seed=42)
            for variant in mv.conjugates + (mv.stabilized_pos, mv.stabilized_neg):
                if alexander(h, variant).polynomial != reference:
                    failures.append((str(b), str(h), str(variant)))
    _report(7, "Markov invariance", failures)


def test_criterion_8_gauge_independence():
    failures = []
    braids = [b for b in corpus_knots() if b.strands == 3]
    points = (Fraction(3, 2), Fraction(2), Fraction(5, 3))
    for b in braids:
        for h in hooks_up_to_size(3):
            graph = build_graph(h, 3)
            for q in points:
                for k in range(3):
                    ops = [assemble_R(graph, k, abs(g), g < 0) for g in b.letters]
                    exact = float(trace_product(ops).evaluate(q))
                    mats = [symmetric_operator_numeric(graph, k, abs(g), float(q), g < 0)
                            for g in b.letters]
                    numeric = trace_product_numeric(mats)
                    if abs(exact - numeric) > 1e-9 * max(1.0, abs(exact)):
                        failures.append((str(b), str(h), str(q), k, exact, numeric))
    _report(8, "gauge independence", failures)
