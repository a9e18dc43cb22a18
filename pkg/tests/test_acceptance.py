"""Acceptance suite: one test per shipped guarantee, exact tolerances.

Run with ``pytest tests/test_acceptance.py -v`` for one line per criterion
(add ``-s`` to see the PASS summaries; timings are asserted where stated).
"""

import itertools
import random
import time
from fractions import Fraction
from math import lcm

import pytest

from probstruct import (
    Formula,
    GenParams,
    MeasureFn,
    ProbabilitySpace,
    SampleSpace,
    SetAlgebra,
    WorldSet,
    bel,
    coats_ds,
    coats_ic,
    equivalent,
    from_json,
    incidence,
    inner_measure,
    is_total,
    measure,
    mobius_mass,
    parse_formula,
    random_ic,
    random_total_ds,
    round_trip_check,
    to_json,
)
from probstruct.cli import main
from probstruct.translate import ic_to_ds, ds_to_ic

HALF = Fraction(1, 2)


@pytest.fixture
def fixture_files(tmp_path):
    ds = tmp_path / "coats-ds.json"
    ic = tmp_path / "coats-ic.json"
    assert main(["example", "coats-ds", "-o", str(ds)]) == 0
    assert main(["example", "coats-ic", "-o", str(ic)]) == 0
    return ds, ic


def test_c01_ds_fixture_interval(fixture_files, capsys):
    """interval coats-ds "~d" is exactly [1/2, 1], under a second."""
    ds, _ = fixture_files
    capsys.readouterr()
    start = time.monotonic()
    assert main(["interval", str(ds), "~d"]) == 0
    elapsed = time.monotonic() - start
    assert capsys.readouterr().out.strip() == "[1/2, 1]"
    assert main(["bel", str(ds), "~d"]) == 0
    assert main(["plb", str(ds), "~d"]) == 0
    assert capsys.readouterr().out.splitlines() == ["1/2", "1"]
    assert elapsed < 1.0
    print(f"criterion 1: PASS - ds fixture interval is [1/2, 1] in {elapsed:.3f}s")


def test_c02_ic_fixture_interval(fixture_files, capsys):
    """interval coats-ic "~d" is exactly [1/2, 1], under a second."""
    _, ic = fixture_files
    capsys.readouterr()
    start = time.monotonic()
    assert main(["interval", str(ic), "~d"]) == 0
    elapsed = time.monotonic() - start
    assert capsys.readouterr().out.strip() == "[1/2, 1]"
    assert elapsed < 1.0
    print(f"criterion 2: PASS - ic fixture interval is [1/2, 1] in {elapsed:.3f}s")


def test_c03_collapse_construction_fidelity(fixture_files, tmp_path, capsys):
    """Collapsing the ds fixture yields the expected algebra and weights."""
    ds, _ = fixture_files
    out = tmp_path / "collapsed.json"
    assert main(["translate", str(ds), "--to-ic", "-o", str(out)]) == 0
    ic = from_json(out.read_text())
    member_texts = {
        "false",
        "~g & d",
        "~g & ~d",
        "(g & ~d) | (g & d)",
        "(~g & ~d) | (~g & d)",
        "(~g & d) | (g & ~d) | (g & d)",
        "(~g & ~d) | (g & ~d) | (g & d)",
        "true",
    }
    expected = {parse_formula(t, ic.lang) for t in member_texts}
    assert set(ic.psi.members()) == expected
    assert measure(ic.ps, ic.ps.space.subset(["w1"])) == HALF
    assert measure(ic.ps, ic.ps.space.subset(["w2"])) == HALF
    print("criterion 3: PASS - collapsed fixture has the 8-member algebra, weights 1/2 and 1/2")


def test_c04_lift_preserves_intervals_1000_seeds():
    """ic_to_ds output is total and interval-equivalent, 1000 seeds, <30s."""
    start = time.monotonic()
    for i in range(1000):
        params = GenParams(2 + i % 2, 2 + i % 5, 60_000 + i)
        ic = random_ic(params)
        lifted = ic_to_ds(ic)
        assert is_total(lifted), f"seed {params.seed}: lift not total"
        report = equivalent(ic, lifted)
        assert report.equivalent, f"seed {params.seed}: {report.witness}"
        assert report.checked_count == 1 << ic.lang.n_atoms
    elapsed = time.monotonic() - start
    assert elapsed < 30.0
    print(f"criterion 4: PASS - 1000 lifted structures equivalent in {elapsed:.2f}s")


def test_c05_collapse_preserves_intervals_1000_seeds():
    """ds_to_ic output is interval-equivalent, 1000 seeds, <30s."""
    start = time.monotonic()
    for i in range(1000):
        params = GenParams(2 + i % 2, 2 + i % 5, 70_000 + i)
        ds = random_total_ds(params)
        report = equivalent(ds, ds_to_ic(ds))
        assert report.equivalent, f"seed {params.seed}: {report.witness}"
        assert report.checked_count == 1 << ds.lang.n_atoms
    elapsed = time.monotonic() - start
    assert elapsed < 30.0
    print(f"criterion 5: PASS - 1000 collapsed structures equivalent in {elapsed:.2f}s")


def test_c06_round_trips_500_seeds_each():
    """Out-and-back translation stays equivalent, 500 seeds per direction."""
    for i in range(500):
        params = GenParams(2 + i % 2, 2 + i % 5, 80_000 + i)
        report = round_trip_check(random_ic(params))
        assert report.equivalent, f"ic seed {params.seed}: {report.witness}"
        report = round_trip_check(random_total_ds(params))
        assert report.equivalent, f"ds seed {params.seed}: {report.witness}"
    print("criterion 6: PASS - 500 round trips per direction stay equivalent")


def test_c07_belief_axioms_200_structures():
    """bel extremes, pair/triple inclusion-exclusion, mass cross-check."""
    for i in range(200):
        ds = random_total_ds(GenParams(2, 1 + i % 8, 90_000 + i))
        table = [bel(ds, Formula(ds.lang, m)) for m in range(16)]
        assert table[0] == 0
        assert table[15] == 1
        # integer arithmetic over a common denominator keeps this exact and fast
        den = lcm(*(q.denominator for q in table))
        b = [int(q * den) for q in table]
        for x, y in itertools.product(range(16), repeat=2):
            assert b[x | y] >= b[x] + b[y] - b[x & y]
        for x, y, z in itertools.product(range(16), repeat=3):
            rhs = (
                b[x] + b[y] + b[z]
                - b[x & y] - b[x & z] - b[y & z]
                + b[x & y & z]
            )
            assert b[x | y | z] >= rhs
        masses = mobius_mass(ds)
        assert all(m >= 0 for m in masses.values())
        assert sum(masses.values()) == 1
    print("criterion 7: PASS - belief axioms and mass recovery hold on 200 structures")


def _random_space(seed: int) -> ProbabilitySpace:
    rng = random.Random(seed)
    n = rng.randint(3, 5)
    space = SampleSpace(tuple(f"w{j + 1}" for j in range(n)))
    blocks: dict[int, int] = {}
    k = rng.randint(1, n)
    for i in range(n):
        urn = rng.randrange(k)
        blocks[urn] = blocks.get(urn, 0) | (1 << i)
    basis = tuple(WorldSet(space, bits) for bits in sorted(blocks.values(), key=lambda v: v & -v))
    nums = [rng.randint(0, 9) for _ in basis]
    if sum(nums) == 0:
        nums[0] = 1
    den = sum(nums)
    return ProbabilitySpace(space, SetAlgebra(space, basis), MeasureFn(tuple(Fraction(v, den) for v in nums)))


def test_c08_measure_axioms_200_spaces():
    """Additivity, complement, empty set, inner-measure order properties."""
    for i in range(200):
        ps = _random_space(100_000 + i)
        k = len(ps.algebra.basis)
        size = 1 << ps.space.size
        assert measure(ps, ps.space.nothing()) == 0
        assert measure(ps, ps.space.everything()) == 1
        # every disjoint pair of members, by three-way block assignment
        for split in itertools.product((0, 1, 2), repeat=k):
            x = y = 0
            for side, block in zip(split, ps.algebra.basis):
                if side == 1:
                    x |= block.bits
                elif side == 2:
                    y |= block.bits
            wx, wy = WorldSet(ps.space, x), WorldSet(ps.space, y)
            assert measure(ps, wx | wy) == measure(ps, wx) + measure(ps, wy)
            assert measure(ps, ~wx) == 1 - measure(ps, wx)
        inner = [inner_measure(ps, WorldSet(ps.space, bits)) for bits in range(size)]
        for a in range(size):
            for b in range(size):
                if a & ~b == 0:
                    assert inner[a] <= inner[b]
                if a & b == 0:
                    assert inner[a | b] >= inner[a] + inner[b]
    print("criterion 8: PASS - measure and inner-measure axioms hold on 200 spaces")


def test_c09_incidence_homomorphism_exhaustive():
    """Incidence respects ~, & and | on every member pair."""
    structures = [coats_ds(), coats_ic()]
    for i in range(100):
        structures.append(random_ic(GenParams(2, 1 + i % 8, 110_000 + i)))
        structures.append(random_total_ds(GenParams(2, 1 + i % 8, 120_000 + i)))
    for st in structures:
        assert len(st.psi.basis) <= 4
        members = list(st.psi.members())
        assert incidence(st, Formula(st.lang, 0)).is_empty
        assert incidence(st, Formula(st.lang, st.lang.full_mask)) == st.ps.space.everything()
        for phi in members:
            assert incidence(st, ~phi) == ~incidence(st, phi)
        for phi, psi_f in itertools.product(members, members):
            assert incidence(st, phi & psi_f) == incidence(st, phi) & incidence(st, psi_f)
            assert incidence(st, phi | psi_f) == incidence(st, phi) | incidence(st, psi_f)
    print("criterion 9: PASS - incidence is homomorphic on fixtures and 200 structures")


def test_c10_serialization_round_trips(fixture_files):
    """Byte identity on fixture documents, structural identity on randoms."""
    for path in fixture_files:
        text = path.read_text()
        assert to_json(from_json(text)) == text
    for i in range(50):
        ic = random_ic(GenParams(1 + i % 3, 1 + i % 8, 130_000 + i))
        assert from_json(to_json(ic)) == ic
        ds = random_total_ds(GenParams(1 + i % 3, 1 + i % 8, 140_000 + i))
        assert from_json(to_json(ds)) == ds
    print("criterion 10: PASS - documents round-trip byte- and structure-identically")
