"""Exhaustive tau-factorization oracle.

A tau-factorization of a factored element splits its prime multiset into
blocks and attaches a sign to each block so that all signed block products
are pairwise congruent modulo the ideal; the leftover unit lambda makes the
product exact.  Factorizations are counted up to block order and associates,
and under that identification a candidate is exactly one multiset partition
of the primes: block products of canonical primes are themselves canonical,
and unique factorization keeps distinct partitions distinct.

The sign search per candidate is not exponential.  Pairwise congruence of
the signed blocks means they all hit one target residue, and the target must
be one of the two signed residues of the first block, so resolving signs is
linear in the block count.  The first valid assignment in plus-before-minus
order is kept as the witness, which makes witnesses reproducible.

An element is a tau-atom when no candidate with two or more blocks admits a
sign witness.  Atomhood is memoized on the canonical associate of the
expanded element together with the ideal, because the same sub-blocks recur
across partitions and across calls.  All public results are canonically
sorted before returning, so output never depends on exploration order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .errors import BudgetExceeded, RingMismatch, ZeroOrUnitInput
from .partitions import vector_partitions
from .quotient import Ideal, Residue, reduce
from .rings import Element, FactoredElement, canonical_associate, expand, one


@dataclass(frozen=True)
class EnumerationBudget:
    """Caps on the enumeration; exceeding one raises BudgetExceeded."""

    max_primes: int = 14
    max_partitions: int = 1_000_000


DEFAULT_BUDGET = EnumerationBudget()


@dataclass(frozen=True)
class TauFactorization:
    """One factorization: unit lambda, canonically ordered blocks, and a
    sign witness proving pairwise congruence of the signed blocks."""

    lam: int
    blocks: tuple[FactoredElement, ...]
    signs: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.blocks)

    def __str__(self) -> str:
        inner = ", ".join(str(expand(b)) for b in self.blocks)
        signs = ",".join("+" if s > 0 else "-" for s in self.signs)
        return f"lambda={self.lam:+d} blocks=[{inner}] signs=[{signs}]"


@dataclass(frozen=True)
class ElasticityReport:
    is_atomic: bool
    atomic_lengths: frozenset[int]
    min_len: Optional[int]
    max_len: Optional[int]
    elasticity: Optional[Fraction]
    factorization_count: int
    atomic_count: int


_ATOM_MEMO: dict = {}


def clear_atom_memo() -> None:
    _ATOM_MEMO.clear()


class _Context:
    """Per-call state: the prime multiset as a vector plus product and
    residue caches keyed on part-vectors."""

    __slots__ = ("fe", "ideal", "budget", "primes", "vector", "_products", "_residues")

    def __init__(self, fe: FactoredElement, ideal: Ideal, budget: EnumerationBudget):
        if fe.ring is not ideal.ring:
            raise RingMismatch("factored element and ideal live in different rings")
        if not fe.factors:
            raise ZeroOrUnitInput("tau-factorizations are defined for nonzero nonunits")
        total = fe.total_multiplicity
        if total > budget.max_primes:
            raise BudgetExceeded(
                f"{total} primes exceed the budget of {budget.max_primes}"
            )
        self.fe = fe
        self.ideal = ideal
        self.budget = budget
        self.primes = tuple(p for p, _ in fe.factors)
        self.vector = tuple(exp for _, exp in fe.factors)
        self._products: dict = {}
        self._residues: dict = {}

    def product(self, part: tuple[int, ...]) -> Element:
        cached = self._products.get(part)
        if cached is None:
            acc = one(self.fe.ring)
            for prime, mult in zip(self.primes, part):
                for _ in range(mult):
                    acc = acc * prime
            cached = self._products[part] = acc
        return cached

    def signed_residues(self, part: tuple[int, ...]) -> tuple[Residue, Residue]:
        cached = self._residues.get(part)
        if cached is None:
            prod = self.product(part)
            cached = self._residues[part] = (
                reduce(prod, self.ideal),
                reduce(-prod, self.ideal),
            )
        return cached

    def resolve_signs(self, parts) -> Optional[tuple[int, ...]]:
        plus0, minus0 = self.signed_residues(parts[0])
        targets = (plus0,) if plus0 == minus0 else (plus0, minus0)
        for target in targets:
            signs = []
            for part in parts:
                plus, minus = self.signed_residues(part)
                if plus == target:
                    signs.append(1)
                elif minus == target:
                    signs.append(-1)
                else:
                    break
            else:
                return tuple(signs)
        return None

    def block(self, part: tuple[int, ...]) -> FactoredElement:
        factors = tuple(
            (prime, mult) for prime, mult in zip(self.primes, part) if mult
        )
        return FactoredElement(self.fe.ring, 1, factors)

    def candidates(self, min_blocks: int = 1) -> Iterator[tuple[list, tuple[int, ...]]]:
        """Sign-resolvable partitions as (blocks sorted ascending, signs)."""
        for partition in vector_partitions(
            self.vector, min_blocks=min_blocks, max_partitions=self.budget.max_partitions
        ):
            parts = sorted(partition, key=lambda p: self.product(p).sort_key)
            signs = self.resolve_signs(parts)
            if signs is not None:
                yield parts, signs

    def block_is_atom(self, part: tuple[int, ...]) -> bool:
        if sum(part) == 1:
            return True
        return is_tau_atom(self.block(part), self.ideal, self.budget)


def enumerate_tau_factorizations(
    fe: FactoredElement, ideal: Ideal, budget: EnumerationBudget = DEFAULT_BUDGET
) -> list[TauFactorization]:
    """Every tau-factorization of fe, deduplicated up to block order and
    associates, in canonical (length, blocks) order.  Includes the trivial
    length-1 factorization."""
    ctx = _Context(fe, ideal, budget)
    found = []
    for parts, signs in ctx.candidates():
        lam = fe.unit
        for s in signs:
            lam *= s
        blocks = tuple(ctx.block(p) for p in parts)
        key = (len(parts), tuple(ctx.product(p).sort_key for p in parts))
        found.append((key, TauFactorization(lam, blocks, signs)))
    found.sort(key=lambda item: item[0])
    return [tf for _, tf in found]


def is_tau_atom(
    fe: FactoredElement, ideal: Ideal, budget: EnumerationBudget = DEFAULT_BUDGET
) -> bool:
    """True iff fe admits no tau-factorization with two or more blocks."""
    ctx = _Context(fe, ideal, budget)
    _, canon = canonical_associate(expand(fe))
    memo_key = (canon, ideal)
    cached = _ATOM_MEMO.get(memo_key)
    if cached is not None:
        return cached
    result = True
    for partition in vector_partitions(
        ctx.vector, min_blocks=2, max_partitions=budget.max_partitions
    ):
        if ctx.resolve_signs(partition) is not None:
            result = False
            break
    _ATOM_MEMO[memo_key] = result
    return result


def atomic_tau_factorizations(
    fe: FactoredElement, ideal: Ideal, budget: EnumerationBudget = DEFAULT_BUDGET
) -> list[TauFactorization]:
    """The tau-factorizations of fe whose every block is a tau-atom."""
    ctx = _Context(fe, ideal, budget)
    found = []
    for parts, signs in ctx.candidates():
        if not all(ctx.block_is_atom(p) for p in parts):
            continue
        lam = fe.unit
        for s in signs:
            lam *= s
        blocks = tuple(ctx.block(p) for p in parts)
        key = (len(parts), tuple(ctx.product(p).sort_key for p in parts))
        found.append((key, TauFactorization(lam, blocks, signs)))
    found.sort(key=lambda item: item[0])
    return [tf for _, tf in found]


def elasticity(
    fe: FactoredElement, ideal: Ideal, budget: EnumerationBudget = DEFAULT_BUDGET
) -> ElasticityReport:
    """Atomic-factorization length statistics and exact elasticity.

    The length set is finite, so the elasticity is exactly max/min; an
    element with no atomic factorization reports is_atomic=False and no
    ratio.
    """
    ctx = _Context(fe, ideal, budget)
    factorization_count = 0
    atomic_count = 0
    lengths: set[int] = set()
    for parts, _ in ctx.candidates():
        factorization_count += 1
        if all(ctx.block_is_atom(p) for p in parts):
            atomic_count += 1
            lengths.add(len(parts))
    if lengths:
        lo, hi = min(lengths), max(lengths)
        return ElasticityReport(
            True, frozenset(lengths), lo, hi, Fraction(hi, lo),
            factorization_count, atomic_count,
        )
    return ElasticityReport(
        False, frozenset(), None, None, None, factorization_count, atomic_count
    )
