"""Closed-form predictions for order-4 quotients.

Each of the four order-4 quotient classes admits closed forms for which
elements are tau-atomic and which atomic-factorization lengths occur, as a
function of the prime-class census of the element.  This module builds an
explicit isomorphism onto the model ring of the class, counts primes per
residue role, and evaluates the closed forms.  Everything here is
cross-validated against the enumeration oracle by the verify suites; facts
marked ``derived`` in a profile are exactly the ones the oracle, not the
closed form, is authoritative for.

Census conventions (k, l, m, n) per class:

    Z4        k: role 1,  l: role 2,  m: role 3,    n: role 0
    Z2X_X2P1  k: role 1,  l: role x,  m: role x+1,  n: role 0
    Z2X_X2PX  k: role 1,  l: role x,  m: role x+1,  n: role 0
    F4        k: role 0,  l: role 1,  m: role x,    n: role x+1
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import InternalCheckFailed, WrongIsoClass
from .poly import Poly
from .quotient import (
    Ideal,
    IsoClass,
    Residue,
    classify_order4,
    enumerate_residues,
    find_prime_in_class,
    reduce,
    residue_add,
    residue_mul,
    unit_classes,
)
from .rings import Element, FactoredElement, Ring, build_factored, expand

_X = Poly.x()
_XP1 = Poly((1, 1))

CANONICAL_IDEALS = {
    IsoClass.Z4: Ideal(Ring.Z, 4),
    IsoClass.Z2X_X2P1: Ideal(Ring.ZX, 2, Poly((1, 0, 1))),
    IsoClass.F4: Ideal(Ring.ZX, 2, Poly((1, 1, 1))),
    IsoClass.Z2X_X2PX: Ideal(Ring.ZX, 2, Poly((0, 1, 1))),
}

_MODEL_LABELS = {
    IsoClass.Z4: {0: "0", 1: "1", 2: "2", 3: "3"},
    IsoClass.Z2X_X2P1: {Poly(()): "0", Poly.one(): "1", _X: "x", _XP1: "x+1"},
    IsoClass.F4: {Poly(()): "0", Poly.one(): "1", _X: "x", _XP1: "x+1"},
    IsoClass.Z2X_X2PX: {Poly(()): "0", Poly.one(): "1", _X: "x", _XP1: "x+1"},
}

_CENSUS_ROLES = {
    IsoClass.Z4: ("1", "2", "3", "0"),
    IsoClass.Z2X_X2P1: ("1", "x", "x+1", "0"),
    IsoClass.Z2X_X2PX: ("1", "x", "x+1", "0"),
    IsoClass.F4: ("0", "1", "x", "x+1"),
}


class IsoMap:
    """Residue -> model-role assignment for an order-4 quotient, verified
    by transporting the full multiplication and addition tables."""

    __slots__ = ("ideal", "iso_class", "_role_of", "_residue_of")

    def __init__(self, ideal: Ideal, iso_class: IsoClass, role_of: dict):
        self.ideal = ideal
        self.iso_class = iso_class
        self._role_of = dict(role_of)
        self._residue_of = {role: res for res, role in role_of.items()}

    def role_of(self, residue: Residue) -> str:
        return self._role_of[residue]

    def residue_of(self, role: str) -> Residue:
        return self._residue_of[role]

    @property
    def roles(self) -> tuple[str, ...]:
        return tuple(self._residue_of)


def build_iso_map(ideal: Ideal) -> IsoMap:
    cls = classify_order4(ideal)
    residues = enumerate_residues(ideal)
    zero_r = reduce(_elem(ideal.ring, 0), ideal)
    one_r = reduce(_elem(ideal.ring, 1), ideal)

    if cls is IsoClass.Z4:
        nil = _unique(residues, lambda r: r != zero_r and residue_mul(r, r) == zero_r)
        minus_one = reduce(-_elem(ideal.ring, 1), ideal)
        role_of = {zero_r: "0", one_r: "1", nil: "2", minus_one: "3"}
    elif cls is IsoClass.Z2X_X2P1:
        nil = _unique(residues, lambda r: r != zero_r and residue_mul(r, r) == zero_r)
        x_img = _unique(residues, lambda r: r != one_r and residue_mul(r, r) == one_r)
        role_of = {zero_r: "0", one_r: "1", x_img: "x", nil: "x+1"}
    elif cls is IsoClass.F4:
        cands = sorted(
            (r for r in residues if residue_mul(r, r) == residue_add(r, one_r)),
            key=lambda r: Element(ideal.ring, r.rep).sort_key,
        )
        if len(cands) != 2:
            raise InternalCheckFailed("expected two generators with t*t == t+1")
        role_of = {zero_r: "0", one_r: "1", cands[0]: "x", cands[1]: "x+1"}
    elif cls is IsoClass.Z2X_X2PX:
        idems = sorted(
            (
                r
                for r in residues
                if r not in (zero_r, one_r) and residue_mul(r, r) == r
            ),
            key=lambda r: Element(ideal.ring, r.rep).sort_key,
        )
        if len(idems) != 2:
            raise InternalCheckFailed("expected two nontrivial idempotents")
        role_of = {zero_r: "0", one_r: "1", idems[0]: "x", idems[1]: "x+1"}
    else:
        raise WrongIsoClass(f"cannot build an isomorphism for {cls.value}")

    if len(role_of) != 4:
        raise InternalCheckFailed("role assignment is not a bijection")
    iso = IsoMap(ideal, cls, role_of)
    _verify_transport(iso)
    return iso


def _verify_transport(iso: IsoMap) -> None:
    canonical = CANONICAL_IDEALS[iso.iso_class]
    labels = _MODEL_LABELS[iso.iso_class]
    canon_residues = {
        labels[res.rep]: res for res in enumerate_residues(canonical)
    }
    label_of_canon = {res: label for label, res in canon_residues.items()}
    residues = enumerate_residues(iso.ideal)
    for a in residues:
        for b in residues:
            ca = canon_residues[iso.role_of(a)]
            cb = canon_residues[iso.role_of(b)]
            if iso.role_of(residue_mul(a, b)) != label_of_canon[residue_mul(ca, cb)]:
                raise InternalCheckFailed("multiplication table does not transport")
            if iso.role_of(residue_add(a, b)) != label_of_canon[residue_add(ca, cb)]:
                raise InternalCheckFailed("addition table does not transport")


@dataclass(frozen=True)
class Census:
    """Prime multiplicities of an element in the four residue roles, under
    the class's own (k, l, m, n) convention."""

    k: int
    l: int
    m: int
    n: int

    @property
    def total(self) -> int:
        return self.k + self.l + self.m + self.n


def class_census(fe: FactoredElement, ideal: Ideal, iso: IsoMap) -> Census:
    counts = {role: 0 for role in iso.roles}
    for prime, exp in fe.factors:
        counts[iso.role_of(reduce(prime, ideal))] += exp
    k_role, l_role, m_role, n_role = _CENSUS_ROLES[iso.iso_class]
    return Census(counts[k_role], counts[l_role], counts[m_role], counts[n_role])


class Atomicity(enum.Enum):
    ATOMIC = "atomic"
    NOT_ATOMIC = "not-atomic"
    NO_CLOSED_FORM = "no-closed-form"


@dataclass(frozen=True)
class PredictedProfile:
    atomicity: Atomicity
    lengths: Optional[frozenset[int]] = None
    elasticity: Optional[Fraction] = None
    derived: tuple[str, ...] = field(default=())


def _atomic(lengths: set[int], derived: tuple[str, ...] = ()) -> PredictedProfile:
    ls = frozenset(lengths)
    return PredictedProfile(
        Atomicity.ATOMIC, ls, Fraction(max(ls), min(ls)), derived
    )


_NOT_ATOMIC = PredictedProfile(Atomicity.NOT_ATOMIC)
_NO_CLOSED_FORM = PredictedProfile(Atomicity.NO_CLOSED_FORM)


def predict_z4(census: Census, a_class: str) -> PredictedProfile:
    """Closed form for quotients isomorphic to Z/4Z.

    Products in class 2 are atoms outright; units exist in classes 1 and 3,
    so elements there split into single primes; elements in the zero class
    factor through their zero-class primes (each atom holds exactly one,
    plus at most one class-2 prime) or, lacking those, through their class-2
    primes one per atom.
    """
    if a_class == "2":
        return _atomic({1})
    if a_class in ("1", "3"):
        return _atomic({census.k + census.m})
    if a_class == "0":
        if census.n >= 1:
            if census.l > census.n:
                return PredictedProfile(
                    Atomicity.NOT_ATOMIC, derived=("atomic-guard",)
                )
            return _atomic({census.n}, derived=("atomic-guard",))
        return _atomic({census.l})
    raise ValueError(f"unknown residue role {a_class!r}")


def predict_zx_x2p1(census: Census, unit_in_x_class: bool) -> PredictedProfile:
    """Closed form for quotients isomorphic to Z[x]/(2, x^2+1): the x+1 class
    is the nilpotent zero-divisor and plays the role class 2 plays in Z/4Z."""
    if census.n >= 1:
        if census.m > census.n:
            return PredictedProfile(Atomicity.NOT_ATOMIC, derived=("atomic-guard",))
        return _atomic({census.n}, derived=("atomic-guard",))
    if census.m >= 1:
        return _atomic({census.m})
    if unit_in_x_class:
        return _atomic({census.k + census.l})
    if census.l >= 1:
        return _atomic({census.l})
    return _atomic({census.k})


def predict_f4(
    census: Census,
    unit_classes_count: int,
    primes_in_both_xr_classes: bool,
) -> PredictedProfile:
    """Closed form for quotients isomorphic to the field of four elements.

    With units in every nonzero class the prime factorization itself
    splits completely.  Otherwise atoms in the zero class carry exactly one
    zero-class prime; away from the zero class, x- and x+1-class primes can
    only annihilate in pairs, so an element using both classes is atomic
    exactly when it uses them equally, each identity-class prime standing
    alone.
    """
    if unit_classes_count == 3:
        return _atomic({census.total})
    if not primes_in_both_xr_classes and census.m >= 1 and census.n >= 1:
        raise ValueError(
            "census uses both the x and x+1 classes, but the ring was "
            "declared to have primes in only one of them"
        )
    if census.k >= 1:
        return _atomic({census.k})
    if census.m == 0 or census.n == 0:
        longest = max(census.m, census.n)
        return _atomic({longest if longest >= 1 else census.l})
    if census.m == census.n:
        return _atomic({census.l + census.m})
    return _NOT_ATOMIC


def predict_zx_x2px(census: Census) -> PredictedProfile:
    """Closed form for quotients isomorphic to Z[x]/(2, x^2+x), the one
    class with elasticity above 1.

    Outside the ideal all factorizations share one length.  Inside it, with
    no zero-class primes, atoms hold exactly one x-class or one x+1-class
    prime each: the shortest split has length 2, the longest min(l, m), and
    every length between is realizable; min(l, m) = 1 leaves the element an
    atom.  Mixing zero-class primes into an ideal element has no closed
    form here and is left to the oracle.
    """
    if census.n == 0 and (census.l == 0 or census.m == 0):
        longest = max(census.l, census.m)
        return _atomic({longest if longest >= 1 else census.k})
    if census.n == 0:
        shortest_side = min(census.l, census.m)
        if shortest_side == 1:
            return _atomic({1})
        return _atomic(
            set(range(2, shortest_side + 1)), derived=("length-interval",)
        )
    return _NO_CLOSED_FORM


def sequence_element(i: int) -> FactoredElement:
    """The factored element x^i (x+1)^i in Z[x]."""
    if i < 1:
        raise ValueError("index must be >= 1")
    return build_factored(
        Ring.ZX,
        1,
        [
            (Element.polynomial(_X), i),
            (Element.polynomial(_XP1), i),
        ],
    )


@dataclass
class PredictionContext:
    """Per-ideal facts the predictors need: the isomorphism, which roles
    contain units of the ring, and whether bounded search finds primes in
    both the x and x+1 classes."""

    ideal: Ideal
    iso: IsoMap
    unit_roles: frozenset[str]
    primes_in_both_xr: bool

    def census(self, fe: FactoredElement) -> Census:
        return class_census(fe, self.ideal, self.iso)

    def element_role(self, fe: FactoredElement) -> str:
        return self.iso.role_of(reduce(expand(fe), self.ideal))

    def predict(self, fe: FactoredElement) -> PredictedProfile:
        census = self.census(fe)
        cls = self.iso.iso_class
        if cls is IsoClass.Z4:
            return predict_z4(census, self.element_role(fe))
        if cls is IsoClass.Z2X_X2P1:
            return predict_zx_x2p1(census, "x" in self.unit_roles)
        if cls is IsoClass.F4:
            return predict_f4(census, len(self.unit_roles), self.primes_in_both_xr)
        if cls is IsoClass.Z2X_X2PX:
            return predict_zx_x2px(census)
        raise WrongIsoClass(f"no predictor for {cls.value}")


def prediction_context(ideal: Ideal, bound: int = 50) -> PredictionContext:
    iso = build_iso_map(ideal)
    unit_roles = frozenset(iso.role_of(u) for u in unit_classes(ideal))
    both = (
        find_prime_in_class(ideal, iso.residue_of("x"), bound) is not None
        and find_prime_in_class(ideal, iso.residue_of("x+1"), bound) is not None
        if iso.iso_class is not IsoClass.Z4
        else False
    )
    return PredictionContext(ideal, iso, unit_roles, both)


def predict_profile(fe: FactoredElement, ideal: Ideal, bound: int = 50) -> PredictedProfile:
    """Convenience wrapper: build the context and predict for one element."""
    return prediction_context(ideal, bound).predict(fe)


def _elem(ring: Ring, n: int) -> Element:
    return Element.integer(n) if ring is Ring.Z else Element.polynomial(Poly.constant(n))


def _unique(residues, pred) -> Residue:
    matches = [r for r in residues if pred(r)]
    if len(matches) != 1:
        raise InternalCheckFailed(f"expected a unique residue, found {len(matches)}")
    return matches[0]
