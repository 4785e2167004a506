"""Rule engine for classical invariants of construction trees.

Derives, with per-rule provenance: a genus interval, the Alexander
polynomial, a sliceness tri-state, membership in class R (nontrivial
knots that are neither torus nor cable knots), and triviality.  Every
rule is either an exact closed form for a node type or a conservative
interval; nothing is ever guessed.

The satellite genus bound used throughout is Schubert's inequality:
a satellite with winding number w, companion C and pattern P satisfies
g >= |w|*g(C) + g(P).
"""

from __future__ import annotations

import dataclasses

from . import seifert
from .knotlang import (Atom, Fig8, Kfam, KnotExpr, Ksat, Sum, Trefoil, TriState,
                       Unknot, Wh0, builtin_flags, render)
from .laurent import ONE, LaurentPoly


@dataclasses.dataclass(frozen=True)
class IntInterval:
    """Integer interval [lo, hi]; hi=None means unbounded above."""

    lo: int
    hi: int | None

    def __post_init__(self):
        if self.lo < 0:
            raise ValueError(f"interval lower bound must be nonnegative, got {self.lo}")
        if self.hi is not None and self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, value: int) -> "IntInterval":
        return cls(value, value)

    def is_point(self) -> bool:
        return self.hi == self.lo

    def __add__(self, other: "IntInterval") -> "IntInterval":
        hi = None if self.hi is None or other.hi is None else self.hi + other.hi
        return IntInterval(self.lo + other.lo, hi)

    def __str__(self) -> str:
        return f"[{self.lo}, {'inf' if self.hi is None else self.hi}]"

    def to_json(self) -> dict:
        return {"lo": self.lo, "hi": self.hi}


@dataclasses.dataclass(frozen=True)
class Provenance:
    fact: str
    rule: str
    anchor: str

    def to_json(self) -> dict:
        return {"fact": self.fact, "rule": self.rule, "anchor": self.anchor}


@dataclasses.dataclass(frozen=True)
class KnotFacts:
    """Derived classical invariants of one expression."""

    genus: IntInterval
    alexander: LaurentPoly | None
    slice: TriState
    in_R: TriState
    trivial: TriState
    provenance: tuple[Provenance, ...]

    def to_json(self) -> dict:
        return {
            "genus": self.genus.to_json(),
            "alexander": "unknown" if self.alexander is None else self.alexander.to_json(),
            "slice": str(self.slice),
            "in_R": str(self.in_R),
            "trivial": str(self.trivial),
            "provenance": [p.to_json() for p in self.provenance],
        }


# Seifert matrices of the two curated leaves.
TREFOIL_MATRIX = seifert.SeifertMatrix(((-1, 1), (0, -1)))
FIG8_MATRIX = seifert.SeifertMatrix(((1, 1), (0, -1)))

# -2t^2 + 5t - 2: the Alexander polynomial of the first pretzel-family knot.
PRETZEL_BASE = LaurentPoly(0, (-2, 5, -2))


def schubert_bound(winding: int, g_companion: int, g_pattern: int) -> int:
    """Schubert's satellite lower bound |winding|*g(companion) + g(pattern)."""
    if g_companion < 0 or g_pattern < 0:
        raise ValueError("genera must be nonnegative")
    return abs(winding) * g_companion + g_pattern


def satellite_of_first(e: Ksat) -> TriState:
    """Whether the construction is a satellite with the first companion.

    Decision rule: yes if the clasp-side framing n is nonzero, or if it is
    zero and the second knot is known nontrivial; no if n is zero and the
    second knot is known trivial (the construction is then the unknot);
    unknown otherwise.
    """
    if not isinstance(e, Ksat):
        raise TypeError(f"expected a Ksat node, got {type(e).__name__}")
    if e.n != 0:
        return TriState.YES
    t = trivial_of(e.l)
    if t is TriState.NO:
        return TriState.YES
    if t is TriState.YES:
        return TriState.NO
    return TriState.UNKNOWN


def genus_of(e: KnotExpr) -> IntInterval:
    """Genus interval; a point wherever a closed form applies."""
    if isinstance(e, Unknot):
        return IntInterval.point(0)
    if isinstance(e, (Trefoil, Fig8)):
        return IntInterval.point(1)
    if isinstance(e, Kfam):
        return IntInterval.point(e.n)
    if isinstance(e, Atom):
        return IntInterval.point(e.genus)
    if isinstance(e, Sum):
        return genus_of(e.left) + genus_of(e.right)
    if isinstance(e, Wh0):
        t = trivial_of(e.companion)
        if t is TriState.YES:
            return IntInterval.point(0)
        if t is TriState.NO:
            return IntInterval.point(1)
        return IntInterval(0, 1)
    if isinstance(e, Ksat):
        tj, tl = trivial_of(e.j), trivial_of(e.l)
        # Exact unknot detection comes first: with a zero framing next to a
        # trivial knot the whole construction collapses.
        if (e.n == 0 and tl is TriState.YES) or (e.m == 0 and tj is TriState.YES):
            return IntInterval.point(0)
        # A certified satellite of either companion has genus exactly one
        # (the standard surface caps it at one).
        if tj is TriState.NO and (e.n != 0 or tl is TriState.NO):
            return IntInterval.point(1)
        if tl is TriState.NO and (e.m != 0 or tj is TriState.NO):
            return IntInterval.point(1)
        return IntInterval(0, 1)
    raise TypeError(f"not a KnotExpr: {e!r}")


def trivial_of(e: KnotExpr) -> TriState:
    """Trivial iff genus zero."""
    g = genus_of(e)
    if g.hi == 0:
        return TriState.YES
    if g.lo >= 1:
        return TriState.NO
    return TriState.UNKNOWN


def alexander_of(e: KnotExpr) -> LaurentPoly | None:
    """Canonical Alexander polynomial, or None when no rule applies."""
    if isinstance(e, Unknot):
        return ONE
    if isinstance(e, Trefoil):
        return seifert.alexander_polynomial(TREFOIL_MATRIX).canonical()
    if isinstance(e, Fig8):
        return seifert.alexander_polynomial(FIG8_MATRIX).canonical()
    if isinstance(e, Kfam):
        return (PRETZEL_BASE ** e.n).canonical()
    if isinstance(e, Wh0):
        return ONE
    if isinstance(e, Ksat):
        model = seifert.SeifertMatrix(((e.m, 1), (0, e.n)))
        return seifert.alexander_polynomial(model).canonical()
    if isinstance(e, Sum):
        a = alexander_of(e.left)
        b = alexander_of(e.right)
        if a is None or b is None:
            return None
        return (a * b).canonical()
    if isinstance(e, Atom):
        return None
    raise TypeError(f"not a KnotExpr: {e!r}")


def slice_of(e: KnotExpr) -> TriState:
    """Smooth sliceness tri-state."""
    if isinstance(e, Unknot):
        return TriState.YES
    if isinstance(e, Kfam):
        return TriState.YES  # ribbon, hence slice
    if isinstance(e, (Trefoil, Fig8, Atom)):
        return builtin_flags(e)[2]
    if isinstance(e, Wh0):
        return TriState.YES if slice_of(e.companion) is TriState.YES else TriState.UNKNOWN
    if isinstance(e, Sum):
        left, right = slice_of(e.left), slice_of(e.right)
        if left is TriState.YES and right is TriState.YES:
            return TriState.YES
        return TriState.UNKNOWN
    if isinstance(e, Ksat):
        return TriState.UNKNOWN
    raise TypeError(f"not a KnotExpr: {e!r}")


def class_r_of(e: KnotExpr) -> TriState:
    """Membership in class R: nontrivial, not a torus knot, not a cable knot."""
    trivial = trivial_of(e)
    torus, cable, _ = builtin_flags(e)
    if trivial is TriState.YES or torus is TriState.YES or cable is TriState.YES:
        return TriState.NO
    if trivial is TriState.NO and torus is TriState.NO and cable is TriState.NO:
        return TriState.YES
    return TriState.UNKNOWN


# -- provenance ----------------------------------------------------------------


_GENUS_RULES = {
    Unknot: ("genus/unknot", "the unknot bounds a disc"),
    Trefoil: ("genus/curated-leaf", "trefoil and figure-eight have genus one"),
    Fig8: ("genus/curated-leaf", "trefoil and figure-eight have genus one"),
    Kfam: ("genus/pretzel-family",
           "the n-th pretzel-family surface has genus n and is minimal by the degree of its Alexander polynomial"),
    Atom: ("genus/declared", "genus declared on the atom"),
    Sum: ("genus/connected-sum", "genus is additive under connected sum"),
    Wh0: ("genus/whitehead-double",
          "an untwisted double has genus one for a nontrivial companion and is trivial for a trivial one"),
}

_ALEXANDER_RULES = {
    Unknot: ("alexander/unknot", "the unknot has trivial Alexander polynomial"),
    Trefoil: ("alexander/seifert-determinant", "det(V - t*V^T) of the curated genus-one Seifert matrix"),
    Fig8: ("alexander/seifert-determinant", "det(V - t*V^T) of the curated genus-one Seifert matrix"),
    Kfam: ("alexander/pretzel-power", "the pretzel family satisfies Delta_n = (-2t^2+5t-2)^n"),
    Wh0: ("alexander/untwisted-double", "untwisted doubles have trivial Alexander polynomial"),
    Ksat: ("alexander/twist-model",
           "the standard genus-one surface with band framings m, n has Seifert matrix [[m,1],[0,n]]"),
    Sum: ("alexander/connected-sum", "Alexander polynomials multiply under connected sum"),
    Atom: ("alexander/unknown", "no rule produces the polynomial of an opaque atom"),
}

_SLICE_RULES = {
    Unknot: ("slice/unknot", "the unknot is slice"),
    Kfam: ("slice/ribbon", "the pretzel family is ribbon, and ribbon implies slice"),
    Trefoil: ("slice/curated-leaf", "curated flag: classical sliceness obstructions"),
    Fig8: ("slice/curated-leaf", "curated flag: classical sliceness obstructions"),
    Atom: ("slice/declared", "sliceness declared on the atom"),
    Wh0: ("slice/double-of-slice", "the untwisted double of a smoothly slice knot is smoothly slice"),
    Sum: ("slice/connected-sum", "a connected sum of slice knots is slice"),
    Ksat: ("slice/unknown", "no sliceness rule applies to the doubly-companioned construction"),
}


def _genus_rule(e: KnotExpr) -> Provenance:
    if isinstance(e, Ksat):
        g = genus_of(e)
        if g == IntInterval.point(0):
            rule, anchor = ("genus/satellite-unknot",
                            "a zero framing next to a trivial companion collapses the construction to the unknot")
        elif g == IntInterval.point(1):
            rule, anchor = ("genus/satellite-one",
                            "a certified satellite carried by the standard genus-one surface has genus exactly one")
        else:
            rule, anchor = ("genus/standard-surface",
                            "the standard surface bounds the genus by one; nontriviality is not established")
        return Provenance("genus", rule, anchor)
    rule, anchor = _GENUS_RULES[type(e)]
    return Provenance("genus", rule, anchor)


def facts_of(e: KnotExpr) -> KnotFacts:
    """All classical invariants with one provenance record per fact."""
    genus = genus_of(e)
    alexander = alexander_of(e)
    slice_ = slice_of(e)
    in_r = class_r_of(e)
    trivial = trivial_of(e)
    provenance = (
        _genus_rule(e),
        Provenance("alexander", *_ALEXANDER_RULES[type(e)]),
        Provenance("slice", *_SLICE_RULES[type(e)]),
        Provenance("in_R", "class-r/definition",
                   "class R consists of nontrivial knots that are neither torus nor cable knots"),
        Provenance("trivial", "trivial/genus", "a knot is trivial iff it has genus zero"),
    )
    if alexander is not None:
        assert abs(alexander.evaluate(1)) == 1, \
            f"Alexander polynomial of {render(e)} fails the determinant-one check"
    return KnotFacts(genus, alexander, slice_, in_r, trivial, provenance)
