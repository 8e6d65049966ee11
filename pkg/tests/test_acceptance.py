"""Acceptance criteria. Each test prints one PASS/FAIL line (visible with
``pytest -s`` or when run as a script) and asserts the criterion."""

import time
from itertools import permutations

import pytest

from trischur.character import Variant, character_sum, contribution_singular, evaluate_character, expand_character, specialize_q
from trischur.diagram import Diagram3
from trischur.dimension import dimension
from trischur.exactmath import rr_symbolic
from trischur.oracle import (
    GeneralDiagram,
    iter_partitions3,
    schur_module_character,
    schur_polynomial,
    weyl_dimension,
)
from trischur.tabloid import classify, d_matrix, enumerate_tabloids, singular_d_table, singular_tabloid
from trischur.verify import (
    CORPUS,
    DEFAULT_SEED,
    perturbed_identity_value,
    random_points,
    singular_values_agree,
)


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, elapsed, limit=None, detail=""):
        timed = ok and (limit is None or elapsed < limit)
        line = f"{'PASS' if timed else 'FAIL'} criterion {number}: {title} ({elapsed:.2f}s"
        line += f", limit {limit}s)" if limit else ")"
        if detail:
            line += f" {detail}"
        with capsys.disabled():
            print("\n" + line)
        assert ok, line
        assert limit is None or elapsed < limit, line

    return emit


def test_1_tabloid_count(report):
    start = time.perf_counter()
    counts = {n: len(enumerate_tabloids(n)) for n in (3, 4, 5, 6)}
    elapsed = time.perf_counter() - start
    ok = all(c == 11 * n * (n - 1) * (n - 2) for n, c in counts.items())
    report(1, "tabloid count 11n(n-1)(n-2) for n=3..6", ok, elapsed, 1, str(counts))


def test_2_rr_term_count(report):
    start = time.perf_counter()
    terms = len(rr_symbolic(6))
    elapsed = time.perf_counter() - start
    report(2, "RR_6 has 567 monomials", terms == 567, elapsed, 10, f"got {terms}")


def test_3_identity(report):
    start = time.perf_counter()
    zero = Diagram3.zero()
    failures = []
    for n in (3, 4, 5):
        for variant in Variant:
            cs = character_sum(zero, n, variant)
            for point in random_points(n, 20, DEFAULT_SEED + n, [cs.terms]):
                if evaluate_character(cs, point) != 1:
                    failures.append((n, variant.value, point))
        if dimension(zero, n) != 1:
            failures.append((n, "dimension"))
    elapsed = time.perf_counter() - start
    report(3, "all-zero character = 1 at 20 points per variant, dim = 1, n=3..5", not failures, elapsed, 60,
           f"failures {failures[:2]}" if failures else "")


def test_4_singular_d_table(report):
    start = time.perf_counter()
    bad = []
    for n in (3, 4, 5, 6):
        for i, j, k in permutations(range(1, n + 1), 3):
            if d_matrix(singular_tabloid(i, j, k, n)) != singular_d_table(i, j, k, n):
                bad.append((n, i, j, k))
        for tau in enumerate_tabloids(n):
            want = 3 * n - 2 if classify(tau).singular else 3 * n - 3
            if sum(map(sum, d_matrix(tau))) != want:
                bad.append(str(tau))
    elapsed = time.perf_counter() - start
    report(4, "singular d-table and d-sums 3n-2 / 3n-3 for n=3..6", not bad, elapsed, None,
           f"mismatches {bad[:3]}" if bad else "")


def test_5_variant_equality(report):
    start = time.perf_counter()
    details = []
    ok = True
    for n in (3, 4):
        for ijk in ((1, 2, 3), (2, 4, 1)):
            if max(ijk) > n:
                continue  # (2,4,1) needs label 4
            for d in (Diagram3.zero(), Diagram3((1,) * 7), Diagram3((2, 0, 1, 0, 1, 0, 3))):
                forms = [contribution_singular(ijk, d, v, n) for v in Variant]
                points = random_points(n, 10, DEFAULT_SEED, forms)
                agree, detail = singular_values_agree(ijk, d, n, points)
                ok &= agree
                if not agree:
                    details.append(detail)
        pt = random_points(n, 1, DEFAULT_SEED, [character_sum(Diagram3.zero(), n, Variant.SS).terms])[0]
        broken = perturbed_identity_value(n, pt) != 1
        ok &= broken
        if not broken:
            details.append(f"perturbation kept the identity at n={n}")
    elapsed = time.perf_counter() - start
    report(5, "SIMPLIFIED = SS = FM at 10 points; perturbed special character breaks identity", ok, elapsed,
           None, "; ".join(details))


def test_6_oracle_equivalence(report):
    start = time.perf_counter()
    bad = []
    checked = 0
    for n in (3, 4):
        for d in CORPUS:
            if n == 4 and d.total_boxes() > 6:
                continue
            truth = schur_module_character(GeneralDiagram.from_diagram3(d), n)
            cs = character_sum(d, n)
            if expand_character(cs) != truth or dimension(d, n) != truth.dimension():
                bad.append((n, str(d)))
            checked += 1
    elapsed = time.perf_counter() - start
    report(6, f"formula = brute-force oracle on {checked} (diagram, n) cases", not bad, elapsed, 300,
           f"mismatches {bad}" if bad else "")


def test_7_weyl_agreement(report):
    start = time.perf_counter()
    bad = []
    for n in (3, 4, 5):
        for lam in iter_partitions3(4):
            d = Diagram3.from_partition(lam)
            if dimension(d, n) != weyl_dimension(lam, n):
                bad.append(("dim", n, lam.parts))
            if n <= 4 and expand_character(character_sum(d, n)) != schur_polynomial(lam, n):
                bad.append(("char", n, lam.parts))
    s21 = dimension(Diagram3.from_partition((2, 1, 0)), 3)
    ok = not bad and s21 == 8
    elapsed = time.perf_counter() - start
    report(7, "Young diagrams with lambda1 <= 4 match Weyl and Schur, dim S_(2,1,0) = 8", ok, elapsed, None,
           f"mismatches {bad[:3]}, dim S_(2,1,0)={s21}" if not ok else "")


def test_8_cross_path_dimension(report):
    start = time.perf_counter()
    bad = []
    for n in (3, 4, 5):
        for d in list(CORPUS) + [Diagram3((1,) * 7)]:
            at_one = specialize_q(character_sum(d, n)).evaluate([1])
            if at_one != dimension(d, n):
                bad.append((n, str(d), str(at_one)))
    elapsed = time.perf_counter() - start
    report(8, "q-specialization at q=1 equals dimension, n=3..5", not bad, elapsed, None,
           f"mismatches {bad[:3]}" if bad else "")


def test_9_character_sanity(report):
    start = time.perf_counter()
    bad = []
    diagrams = list(CORPUS) + [Diagram3.from_partition(lam) for lam in iter_partitions3(3)] + [Diagram3((1,) * 7)]
    for n in (3, 4):
        for d in diagrams:
            ch = expand_character(character_sum(d, n))
            ok = (
                all(isinstance(k, int) and k > 0 for k in ch.entries.values())
                and ch.is_symmetric()
                and all(sum(e) == d.total_boxes() for e in ch.entries)
            )
            if not ok:
                bad.append((n, str(d)))
    elapsed = time.perf_counter() - start
    report(9, "expanded characters are nonnegative, symmetric, homogeneous", not bad, elapsed, None,
           f"failures {bad}" if bad else "")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-s", "-q"]))
