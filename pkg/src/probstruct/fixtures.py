"""Built-in worked example, in both structure kinds.

Four coats: two blue single-breasted, one grey single-breasted, one grey
double-breasted.  A fair coin picks the colour; which coat of that colour
gets worn is decided by some unknown procedure.  Propositions: ``g`` (grey)
and ``d`` (double-breasted).

Both structures bound the probability of ``~d`` by [1/2, 1]: wearing
single-breasted is certain if the coin says blue, merely possible if grey.
"""

from __future__ import annotations

from fractions import Fraction

from .logic import FormulaAlgebra, Language, parse_formula
from .measure import SampleSpace
from .structures import ProbabilityStructure

HALF = Fraction(1, 2)


def coats_ds() -> ProbabilityStructure:
    """Belief-structure version: worlds are the four coats themselves.

    Only colour-level sets are measurable (the coin is the only known
    chance), so the incidence of ``~d`` has inner measure 1/2 but no exact
    measure.
    """
    lang = Language(("g", "d"))
    space = SampleSpace(("s1", "s2", "s3", "s4"))
    chi_basis = (space.subset(["s1", "s2"]), space.subset(["s3", "s4"]))
    atom_images = (
        space.subset(["s1", "s2"]),  # ~g & ~d: the blue coats
        space.subset(["s3"]),        # g & ~d
        space.subset([]),            # ~g & d: no such coat
        space.subset(["s4"]),        # g & d
    )
    return ProbabilityStructure.ds(space, chi_basis, (HALF, HALF), lang, atom_images)


def coats_ic() -> ProbabilityStructure:
    """Incidence-calculus version: one world per colour outcome.

    Every world set is measurable, but incidence is only defined on the
    algebra generated by the colour observations; ``~d`` falls outside it
    and gets the same [1/2, 1] bounds.
    """
    lang = Language(("g", "d"))
    space = SampleSpace(("w1", "w2"))
    psi = FormulaAlgebra(
        lang,
        (
            parse_formula("~g & ~d", lang),
            parse_formula("(g & ~d) | (g & d)", lang),
            parse_formula("~g & d", lang),
        ),
    )
    images = (space.subset(["w1"]), space.subset(["w2"]), space.subset([]))
    return ProbabilityStructure.ic(space, (HALF, HALF), psi, images)


FIXTURES = {"coats-ds": coats_ds, "coats-ic": coats_ic}
