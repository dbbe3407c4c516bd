"""Acceptance criteria.

Each test records one PASS/FAIL line (with elapsed time against its budget);
the lines are printed at the end of the pytest run.  Run this file directly
to see just these lines.
"""

import functools
import itertools
import math
import subprocess
import sys
import time

import numpy as np
import pytest

from conftest import GRID, tower
from oracles import RefField, null_space_by_enumeration, orbits_by_closure
from orbitcode import OrbitCode
from orbitcode.code import (
    CodeSpec,
    build_check_matrix_direct,
    build_check_matrix_lfsr,
    degree_weight,
    generator_matrix,
    hamming_weight,
)
from orbitcode.decoder import build_min_poly_table, decode
from orbitcode.gilbert import (
    bad_mass,
    brute_force_min_weights,
    codewords,
    compute_D,
    gilbert_target,
    goppa_membership,
    search_good_g,
    weight_enumerator,
)
from orbitcode.orbits import check_orbit_count_bounds, count_orbits_closed_form, enumerate_orbits
from orbitcode.polyring import PolyF, inverse_mod_cyclic
from orbitcode.simulate import simulate

RESULTS = {}


def criterion(number, title, budget=None):
    """Record pass/fail and wall time; a blown time budget is a failure."""

    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            start = time.perf_counter()
            try:
                fn(*args, **kwargs)
                elapsed = time.perf_counter() - start
                if budget is not None:
                    assert elapsed < budget, f"took {elapsed:.1f}s, budget {budget}s"
            except BaseException as exc:
                elapsed = time.perf_counter() - start
                RESULTS[number] = (False, title, elapsed, budget, str(exc).splitlines()[0] if str(exc) else type(exc).__name__)
                raise
            RESULTS[number] = (True, title, elapsed, budget, "")

        return run

    return wrap


def summary_lines():
    lines = []
    for number in sorted(RESULTS):
        ok, title, elapsed, budget, why = RESULTS[number]
        limit = f" (budget {budget}s)" if budget else ""
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}: {elapsed:.2f}s{limit}"
        if not ok:
            line += f" :: {why}"
        lines.append(line)
    return lines


@criterion(1, "orbit-count closed form and bounds", budget=1)
def test_c1_orbit_count():
    for pkm in GRID:
        f = tower(*pkm)
        loc = enumerate_orbits(f)
        assert len(loc) == len(orbits_by_closure(f.q, f.m))
        assert count_orbits_closed_form(f.q, f.m) == len(loc)
        rep = check_orbit_count_bounds(f.q, f.m, len(loc))
        assert rep.lower_holds and rep.upper_holds, pkm


@criterion(2, "direct and LFSR check matrices agree", budget=10)
def test_c2_check_matrix_equivalence():
    rng = np.random.default_rng(2024)
    for pkm in GRID:
        f = tower(*pkm)
        loc = enumerate_orbits(f)
        rhos = [PolyF.one(f)]
        while len(rhos) < 21:
            rho = PolyF(f, rng.integers(0, f.q, size=int(rng.integers(1, 9))))
            if not rho.is_zero():
                rhos.append(rho)
        for rho in rhos:
            spec = CodeSpec(f, loc, 6, rho, check_rho=False)
            direct = build_check_matrix_direct(spec)
            assert np.array_equal(direct, build_check_matrix_lfsr(spec)), (pkm, rho.coeffs)
            for s in np.unique(direct):
                e = f.subfield_element(int(s))
                assert f.frobenius(e) == e


@criterion(3, "rank(H) <= t for t in 1..6")
def test_c3_dimension_bound():
    for pkm in GRID:
        f = tower(*pkm)
        loc = enumerate_orbits(f)
        for t in range(1, 7):
            spec = CodeSpec(f, loc, t, PolyF.one(f))
            rank, G, _ = generator_matrix(spec, build_check_matrix_direct(spec))
            assert rank <= t, (pkm, t, rank)
            assert G.shape[0] == len(loc) - rank


@criterion(4, "degree lemma and Hamming distance, exhaustive", budget=30)
def test_c4_distance():
    for pkm in [(2, 1, 3), (3, 1, 2)]:
        f = tower(*pkm)
        ref = RefField(*pkm)
        loc = enumerate_orbits(f)
        orbits = [list(o.members) for o in loc]
        for t in range(1, 5):
            H = ref.check_matrix([1], t, orbits)
            words = null_space_by_enumeration(ref, H, len(loc))
            spec = CodeSpec(f, loc, t, PolyF.one(f))
            assert sorted(map(tuple, codewords(spec, build_check_matrix_direct(spec)).tolist())) == sorted(words)
            nonzero = [np.array(w) for w in words if any(w)]
            for w in nonzero:
                assert degree_weight(loc, w) > t, (pkm, t, w)
                assert hamming_weight(w) >= math.ceil((t + 1) / f.m), (pkm, t, w)


def _errors_up_to(sizes, q, radius):
    def supports(start, budget):
        yield ()
        for i in range(start, len(sizes)):
            if sizes[i] <= budget:
                for rest in supports(i + 1, budget - sizes[i]):
                    yield (i,) + rest

    for support in supports(0, radius):
        for vals in itertools.product(range(1, q), repeat=len(support)):
            e = np.zeros(len(sizes), dtype=np.int64)
            e[list(support)] = vals
            yield e


@criterion(5, "decoder completeness for (3,2), t=4", budget=60)
def test_c5_decoder_completeness():
    f = tower(3, 1, 2)
    spec = CodeSpec.build(f, 4)
    H = build_check_matrix_direct(spec)
    table = build_min_poly_table(f, spec.locations)
    loc = spec.locations
    patterns = list(_errors_up_to(loc.sizes.tolist(), 3, 2))
    cws = codewords(spec, H)
    assert len(cws) == 9
    for c in cws:
        for e in patterns:
            res = decode(spec, H, table, f.f_add[c, e])
            assert np.array_equal(res.codeword, c)
            assert np.array_equal(res.error.word, e)

    def unit(rep, value):
        w = np.zeros(len(loc), dtype=np.int64)
        w[loc.index_of_rep(rep)] = value
        return w

    res = decode(spec, H, table, unit(4, 1))
    assert res.syndromes.tolist() == [1, 2, 1, 2]
    assert res.solution.lam.coeffs == (1, 1)
    assert res.error.values == {4: 1}
    res = decode(spec, H, table, unit(1, 2))
    assert res.syndromes.tolist() == [1, 1, 0, 1]
    assert res.solution.lam.coeffs == (1, 1, 2)
    assert res.error.values == {1: 2}


@criterion(6, "1000 seeded trials on (2,5), t=10", budget=60)
def test_c6_randomized_decoding():
    code = OrbitCode(p=2, m=5, t=10).fit()
    summary = simulate(code, 1000, 5, seed=20240601)
    assert summary.trials == 1000
    assert summary.successes == 1000, summary.to_text().splitlines()[-1]


@criterion(7, "Goppa membership equals H membership on all 3^5 words", budget=10)
def test_c7_goppa_equivalence():
    f = tower(3, 1, 2)
    loc = enumerate_orbits(f)
    g = PolyF(f, [1, 2, 0, 1])
    spec = CodeSpec(f, loc, 3, inverse_mod_cyclic(g))
    H = build_check_matrix_direct(spec)
    members = 0
    for w in itertools.product(range(3), repeat=len(loc)):
        w = np.array(w, dtype=np.int64)
        via_h = not f_syndrome(f, H, w).any()
        assert via_h == goppa_membership(w, g, f, loc), w
        members += via_h
    assert members >= 3 ** (len(loc) - 3)


def f_syndrome(f, H, w):
    acc = np.zeros(H.shape[0], dtype=np.int64)
    for j, s in enumerate(w):
        acc = f.f_add[acc, f.f_mul[H[:, j], s]]
    return acc


@criterion(8, "Gilbert machinery for (3,2), t=3", budget=60)
def test_c8_gilbert():
    f = tower(3, 1, 2)
    loc = enumerate_orbits(f)
    counts = weight_enumerator(loc, 3)
    census = [0] * (f.order + 1)
    for w in itertools.product(range(3), repeat=len(loc)):
        census[degree_weight(loc, np.array(w))] += 1
    assert counts == census
    D = compute_D(counts, 3, 3, m=2)
    assert D == 2
    target = gilbert_target(3, 3)
    assert target == 27 - 6 - 1
    assert bad_mass(counts, D) < target <= bad_mass(counts, D + 1)
    report = search_good_g(f, loc, 3, D, exhaustive=True)
    assert report.winner is not None
    assert report.meta_bound_holds
    for e, bound in report.bad_bounds.items():
        assert report.bad_counts.get(e, 0) <= bound
    spec = CodeSpec(f, loc, 3, inverse_mod_cyclic(report.winner))
    min_deg, _ = brute_force_min_weights(spec, build_check_matrix_direct(spec))
    assert min_deg > D and report.audit_degree == min_deg


CLI_SCRIPT = [
    ["params", "-p", "2", "-m", "5"],
    ["orbits", "-p", "3", "-m", "2"],
    ["init-spec", "-p", "3", "-m", "2", "-t", "4", "-o", "spec.txt"],
    ["matrix", "--spec", "spec.txt"],
    ["matrix", "--spec", "spec.txt", "--method", "lfsr"],
    ["encode", "--spec", "spec.txt", "--message", "msg.txt"],
    ["decode", "--spec", "spec.txt", "--word", "recv.txt"],
    ["decode", "--spec", "spec.txt", "--word", "bad.txt"],
    ["simulate", "--spec", "spec.txt", "--trials", "200", "--error-degree", "2", "--seed", "5"],
    ["simulate", "--spec", "spec.txt", "--trials", "100", "--error-degree", "4", "--seed", "5", "--stress"],
    ["search-g", "-p", "3", "-m", "2", "-t", "3", "--exhaustive"],
    ["audit", "--spec", "spec.txt"],
]


def _cli_transcript(workdir):
    (workdir / "msg.txt").write_text("# orbitcode v1\n1 2\n")
    (workdir / "recv.txt").write_text("# orbitcode v1\n0 0 0 1 0\n")
    (workdir / "bad.txt").write_text("# orbitcode v1\n1 1 0 0 0\n")
    chunks = []
    for argv in CLI_SCRIPT:
        proc = subprocess.run([sys.executable, "-m", "orbitcode.cli", *argv], cwd=workdir,
                              capture_output=True)
        chunks.append(b"$ " + " ".join(argv).encode() + b"\n" + proc.stdout + proc.stderr
                      + f"exit={proc.returncode}\n".encode())
    chunks.append((workdir / "spec.txt").read_bytes())
    return b"".join(chunks)


@criterion(9, "CLI transcripts are byte-identical across runs")
def test_c9_determinism(tmp_path):
    (tmp_path / "a").mkdir()
    (tmp_path / "b").mkdir()
    first = _cli_transcript(tmp_path / "a")
    second = _cli_transcript(tmp_path / "b")
    assert b"exit=3" not in first
    assert first.count(b"exit=0") == len(CLI_SCRIPT) - 1 and b"exit=2" in first
    assert first == second


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
