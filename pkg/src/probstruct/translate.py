"""Translations between the two structure kinds, and equivalence checking.

Both directions preserve the probability interval of every formula:

* ``ic_to_ds`` lifts an incidence-calculus structure to a belief structure
  whose worlds are the language's atoms.  The formula algebra becomes the
  measurable algebra (an atom set is a world set, bit for bit), each basis
  block weighs as much as its incidence, and incidence on the new structure
  is the identity.  The result is always total.
* ``ds_to_ic`` collapses a *total* belief structure onto one world per
  measurable basis block.  A formula's incidence becomes defined exactly
  when its old incidence was measurable: the new formula algebra is generated
  by grouping the atoms whose images compose each measurable block, with the
  dead atoms (empty incidence) left as singleton blocks.

``equivalent`` verifies interval agreement by brute force over all
``2**2**n`` formulas, and seeded generators plus ``round_trip_check`` drive
randomized testing of both directions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import LanguageMismatchError, NotTotalError, ValidationError, WrongKindError
from .logic import Formula, FormulaAlgebra, Language, _sorted_blocks
from .measure import ZERO, SampleSpace, WorldSet, measure
from .structures import (
    Interval,
    ProbabilityStructure,
    StructureKind,
    interval,
    is_total,
)

MAX_EQUIV_PROPS = 4


@dataclass(frozen=True)
class EquivalenceReport:
    """Outcome of comparing two structures formula by formula.

    ``witness`` is the first formula (in atom-bitmask order) whose intervals
    disagree, together with both intervals; ``checked_count`` is how many
    formulas were compared before stopping.
    """

    equivalent: bool
    checked_count: int
    witness: Optional[tuple[Formula, Interval, Interval]]


@dataclass(frozen=True)
class GenParams:
    """Bounds for the seeded random generators."""

    n_props: int
    n_worlds: int
    seed: int

    def __post_init__(self):
        if not 1 <= self.n_props <= MAX_EQUIV_PROPS:
            raise ValidationError(f"n_props must be 1..{MAX_EQUIV_PROPS}, got {self.n_props}")
        if not 1 <= self.n_worlds <= 8:
            raise ValidationError(f"n_worlds must be 1..8, got {self.n_worlds}")
        if not 0 <= self.seed < 1 << 64:
            raise ValidationError("seed must be a 64-bit nonnegative integer")


def _atom_world_name(lang: Language, index: int) -> str:
    # identifier-safe rendering of the atom's literals, e.g. "notg_d"
    parts = []
    for j, name in enumerate(lang.props):
        parts.append(name if (index >> j) & 1 else "not" + name)
    return "_".join(parts)


def ic_to_ds(ic: ProbabilityStructure) -> ProbabilityStructure:
    """Lift an incidence-calculus structure to an equivalent total belief
    structure over the language's atoms.

    The language must have at most 6 propositions, since every atom becomes
    a world.
    """
    if ic.kind is not StructureKind.IC:
        raise WrongKindError(f"ic_to_ds requires an ic structure, got {ic.kind.value}")
    lang = ic.lang
    space = SampleSpace(tuple(_atom_world_name(lang, k) for k in range(lang.n_atoms)))
    chi_basis = tuple(WorldSet(space, block.atoms) for block in ic.psi.basis)
    weights = tuple(measure(ic.ps, image) for image in ic.inc.images)
    atom_images = tuple(WorldSet(space, 1 << k) for k in range(lang.n_atoms))
    return ProbabilityStructure.ds(space, chi_basis, weights, lang, atom_images)


def ds_to_ic(ds: ProbabilityStructure) -> ProbabilityStructure:
    """Collapse a total belief structure to an equivalent incidence-calculus
    structure with one world per measurable basis block."""
    if ds.kind is not StructureKind.DS:
        raise WrongKindError(f"ds_to_ic requires a ds structure, got {ds.kind.value}")
    if not is_total(ds):
        raise NotTotalError("ds_to_ic requires a total structure")
    chi = ds.ps.algebra
    space = SampleSpace(tuple(f"w{j + 1}" for j in range(len(chi.basis))))

    # image bits of each atom, in atom order (the formula basis is all atoms)
    atom_image = [0] * ds.lang.n_atoms
    for block, image in zip(ds.psi.basis, ds.inc.images):
        atom_image[block.atoms.bit_length() - 1] = image.bits

    blocks: dict[int, int] = {}  # atom mask -> new world bits
    grouped = 0
    for j, chi_block in enumerate(chi.basis):
        atoms = 0
        for k, bits in enumerate(atom_image):
            if bits and bits & ~chi_block.bits == 0:
                atoms |= 1 << k
        blocks[atoms] = 1 << j
        grouped |= atoms
    for k, bits in enumerate(atom_image):
        if not bits:
            blocks[1 << k] = 0
            grouped |= 1 << k
    assert grouped == ds.lang.full_mask

    basis = _sorted_blocks(blocks.keys(), ds.lang)
    psi = FormulaAlgebra(ds.lang, basis)
    images = tuple(WorldSet(space, blocks[block.atoms]) for block in basis)
    return ProbabilityStructure.ic(space, tuple(ds.ps.mu.weights), psi, images)


def _focal_weights(st: ProbabilityStructure) -> list[tuple[int, Fraction]]:
    """(atom mask, weight) pairs such that the lower probability of any
    formula is the sum of the weights whose mask it contains."""
    if st.kind is StructureKind.IC:
        return [
            (block.atoms, measure(st.ps, image))
            for block, image in zip(st.psi.basis, st.inc.images)
        ]
    # ds: a measurable block sits inside an incidence exactly when the
    # formula contains every atom whose image meets that block
    atom_of_world: dict[int, int] = {}
    for block, image in zip(st.psi.basis, st.inc.images):
        k = block.atoms.bit_length() - 1
        for i in range(st.ps.space.size):
            if (image.bits >> i) & 1:
                atom_of_world[i] = k
    pairs = []
    for chi_block, w in zip(st.ps.algebra.basis, st.ps.mu.weights):
        needed = 0
        for i in range(st.ps.space.size):
            if (chi_block.bits >> i) & 1:
                needed |= 1 << atom_of_world[i]
        pairs.append((needed, w))
    return pairs


def _lower_table(st: ProbabilityStructure) -> list[Fraction]:
    """Lower probability of every formula, indexed by atom bitmask."""
    pairs = _focal_weights(st)
    table = []
    for m in range(1 << st.lang.n_atoms):
        acc = ZERO
        for mask, w in pairs:
            if mask & ~m == 0:
                acc += w
        table.append(acc)
    return table


def equivalent(a: ProbabilityStructure, b: ProbabilityStructure) -> EquivalenceReport:
    """Compare the interval of every formula of the shared language.

    Exact equality, no tolerance; stops at the first disagreement.
    """
    if a.lang != b.lang:
        raise LanguageMismatchError("structures are over different languages")
    if len(a.lang.props) > MAX_EQUIV_PROPS:
        raise ValidationError(
            f"language too large for brute-force comparison "
            f"(max {MAX_EQUIV_PROPS} propositions)"
        )
    lo_a = _lower_table(a)
    lo_b = _lower_table(b)
    full = a.lang.full_mask
    for m in range(full + 1):
        if lo_a[m] != lo_b[m] or lo_a[full ^ m] != lo_b[full ^ m]:
            f = Formula(a.lang, m)
            return EquivalenceReport(False, m + 1, (f, interval(a, f), interval(b, f)))
    return EquivalenceReport(True, full + 1, None)


def round_trip_check(a: ProbabilityStructure) -> EquivalenceReport:
    """Translate out and back, then compare against the original."""
    if a.kind is StructureKind.IC:
        return equivalent(a, ds_to_ic(ic_to_ds(a)))
    return equivalent(a, ic_to_ds(ds_to_ic(a)))


def _random_weights(rng: random.Random, count: int) -> tuple[Fraction, ...]:
    nums = [rng.randint(1, 9) for _ in range(count)]
    den = sum(nums)
    return tuple(Fraction(n, den) for n in nums)


def _random_grouping(rng: random.Random, items: list[int]) -> list[int]:
    """Union the bitmask items into 1..len(items) nonempty groups."""
    k = rng.randint(1, len(items))
    groups: dict[int, int] = {}
    for bits in items:
        urn = rng.randrange(k)
        groups[urn] = groups.get(urn, 0) | bits
    return list(groups.values())


def random_ic(params: GenParams) -> ProbabilityStructure:
    """Seeded random incidence-calculus structure (deterministic per seed)."""
    rng = random.Random(params.seed)
    lang = Language(tuple(f"p{i + 1}" for i in range(params.n_props)))
    space = SampleSpace(tuple(f"w{i + 1}" for i in range(params.n_worlds)))

    atom_masks = _random_grouping(rng, [1 << k for k in range(lang.n_atoms)])
    basis = _sorted_blocks(atom_masks, lang)
    psi = FormulaAlgebra(lang, basis)

    image_bits = [0] * len(basis)
    for i in range(space.size):
        image_bits[rng.randrange(len(basis))] |= 1 << i
    images = tuple(WorldSet(space, bits) for bits in image_bits)

    return ProbabilityStructure.ic(space, _random_weights(rng, space.size), psi, images)


def random_total_ds(params: GenParams) -> ProbabilityStructure:
    """Seeded random total belief structure (deterministic per seed)."""
    rng = random.Random(params.seed)
    lang = Language(tuple(f"p{i + 1}" for i in range(params.n_props)))
    space = SampleSpace(tuple(f"w{i + 1}" for i in range(params.n_worlds)))

    atom_bits = [0] * lang.n_atoms
    for i in range(space.size):
        atom_bits[rng.randrange(lang.n_atoms)] |= 1 << i
    atom_images = tuple(WorldSet(space, bits) for bits in atom_bits)

    # grouping whole images guarantees every measurable block is a union of
    # incidences, i.e. the structure is total
    nonempty = [bits for bits in atom_bits if bits]
    block_bits = sorted(_random_grouping(rng, nonempty), key=lambda b: b & -b)
    chi_basis = tuple(WorldSet(space, bits) for bits in block_bits)

    return ProbabilityStructure.ds(
        space, chi_basis, _random_weights(rng, len(chi_basis)), lang, atom_images
    )
