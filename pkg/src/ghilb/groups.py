"""Diagonal finite abelian subgroups of SL3(C) and their character groups.

A group element is a weight triple (v1, v2, v3) taken modulo the common
exponent R; it stands for the diagonal matrix diag(w^v1, w^v2, w^v3) with
w = exp(2*pi*i/R).  The determinant-one condition reads v1+v2+v3 = 0 mod R.
Characters are recorded by their value table over the canonically ordered
elements, so that equality of fingerprints is equality of characters.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

Triple = tuple[int, int, int]


class GroupSpecError(ValueError):
    """Generator data that does not define a nontrivial subgroup of SL3."""


@dataclass(frozen=True)
class Generator:
    """One diagonal generator of order r with weights (w1, w2, w3)."""

    order: int
    weights: Triple


@dataclass(frozen=True)
class GroupSpec:
    generators: tuple[Generator, ...]

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        """Parse a spec string like "7:1,2,4" or "2:1,1,0;2:1,0,1"."""
        generators = []
        for chunk in text.split(";"):
            chunk = chunk.strip()
            head, sep, tail = chunk.partition(":")
            if not sep:
                raise GroupSpecError(f"generator {chunk!r} is not of the form r:w1,w2,w3")
            try:
                order = int(head)
                weights = tuple(int(w) for w in tail.split(","))
            except ValueError as exc:
                raise GroupSpecError(f"generator {chunk!r} is not of the form r:w1,w2,w3") from exc
            if len(weights) != 3:
                raise GroupSpecError(f"generator {chunk!r} must carry exactly three weights")
            generators.append(Generator(order, weights))
        spec = cls(tuple(generators))
        spec.validate()
        return spec

    def validate(self) -> None:
        if not self.generators:
            raise GroupSpecError("no generators given")
        for gen in self.generators:
            if gen.order < 1:
                raise GroupSpecError(f"generator order {gen.order} must be >= 1")
            if any(not 0 <= w < gen.order for w in gen.weights):
                raise GroupSpecError(f"weights {gen.weights} must lie in [0, {gen.order})")
            if sum(gen.weights) % gen.order != 0:
                raise GroupSpecError(
                    f"weights {gen.weights} have w1+w2+w3 != 0 mod {gen.order}; "
                    "the generator is not in SL3"
                )
        if all(w == 0 for gen in self.generators for w in gen.weights):
            raise GroupSpecError("all generators are trivial")


@dataclass(frozen=True)
class Character:
    """A character of G, as its exponent-value table over the group elements.

    fingerprint[k] is the exponent e with character value w^e at the k-th
    element in canonical order, w = exp(2*pi*i/R).
    """

    fingerprint: tuple[int, ...]

    def is_trivial(self) -> bool:
        return not any(self.fingerprint)


class AbelianGroup:
    """Closure of the diagonal generators, with precomputed character data.

    Elements are canonically ordered lexicographically; characters are
    ordered lexicographically on their fingerprints, which puts the trivial
    character first.  Instances are immutable after construction.
    """

    def __init__(self, spec: GroupSpec):
        spec.validate()
        R = lcm(*(g.order for g in spec.generators))
        gens = [
            tuple((w * (R // g.order)) % R for w in g.weights) for g in spec.generators
        ]
        elems = {(0, 0, 0)}
        frontier = [(0, 0, 0)]
        while frontier:
            cur = frontier.pop()
            for g in gens:
                nxt = tuple((c + w) % R for c, w in zip(cur, g))
                if nxt not in elems:
                    elems.add(nxt)
                    frontier.append(nxt)
        self.spec = spec
        self.R = R
        self.elements: tuple[Triple, ...] = tuple(sorted(elems))
        self.order = len(self.elements)
        self.generator_elements = tuple(tuple(g) for g in gens)
        if self.order == 1:
            raise GroupSpecError("the generated group is trivial")
        self._element_set = frozenset(self.elements)
        self._build_characters()

    def _fingerprint(self, e: Triple) -> tuple[int, ...]:
        R = self.R
        l, m, n = e
        return tuple((l * g1 + m * g2 + n * g3) % R for (g1, g2, g3) in self.elements)

    def _build_characters(self) -> None:
        R = self.R
        rep_of_fp: dict[tuple[int, ...], Triple] = {}
        fp_of_exp: dict[Triple, tuple[int, ...]] = {}
        for e in itertools.product(range(R), repeat=3):
            fp = self._fingerprint(e)
            fp_of_exp[e] = fp
            if fp not in rep_of_fp:
                rep_of_fp[fp] = e
        if len(rep_of_fp) != self.order:
            raise RuntimeError(
                f"character scan found {len(rep_of_fp)} fingerprints for a group "
                f"of order {self.order}; group construction is inconsistent"
            )
        fingerprints = sorted(rep_of_fp)
        self.characters: tuple[Character, ...] = tuple(Character(fp) for fp in fingerprints)
        self.char_exponents: tuple[Triple, ...] = tuple(rep_of_fp[fp] for fp in fingerprints)
        index_of_fp = {fp: k for k, fp in enumerate(fingerprints)}
        self._index_of_expmod = {e: index_of_fp[fp] for e, fp in fp_of_exp.items()}
        self._index_of_fp = index_of_fp
        # Index table for products of characters, via fingerprint addition.
        self.char_add: tuple[tuple[int, ...], ...] = tuple(
            tuple(
                index_of_fp[tuple((a + b) % R for a, b in zip(fp1, fp2))]
                for fp2 in fingerprints
            )
            for fp1 in fingerprints
        )

    # -- character operations -------------------------------------------------

    def char_index(self, e: Triple) -> int:
        """Index of the character carried by the monomial x^l y^m z^n."""
        R = self.R
        return self._index_of_expmod[(e[0] % R, e[1] % R, e[2] % R)]

    def char_of_monomial(self, e: Triple) -> Character:
        return self.characters[self.char_index(e)]

    def char_index_of(self, chi: Character) -> int:
        return self._index_of_fp[chi.fingerprint]

    # -- ages and junior elements --------------------------------------------

    def age(self, g: Triple) -> Fraction:
        """(g1+g2+g3)/R as an exact rational; 0 for the identity, else 1 or 2."""
        if tuple(g) not in self._element_set:
            raise ValueError(f"{g} is not an element of the group")
        return Fraction(sum(g), self.R)

    def junior_elements(self) -> tuple[Triple, ...]:
        return tuple(g for g in self.elements if self.age(g) == 1)

    def __repr__(self) -> str:
        gens = ";".join(
            f"{g.order}:{g.weights[0]},{g.weights[1]},{g.weights[2]}"
            for g in self.spec.generators
        )
        return f"AbelianGroup({gens}, order={self.order})"


def build_group(spec: GroupSpec) -> AbelianGroup:
    """Construct the group from a validated spec; rejects the trivial group."""
    return AbelianGroup(spec)


def group_from_text(text: str) -> AbelianGroup:
    return AbelianGroup(GroupSpec.parse(text))
