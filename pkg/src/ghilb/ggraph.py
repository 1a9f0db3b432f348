"""Torus-fixed points of the G-Hilbert scheme as monomial staircases.

A fixed point is a monomial ideal whose complement Gamma carries every
character of G exactly once.  Each such ideal is generated by

    x^alpha, y^beta, z^gamma, x^a y^e, y^b z^f, z^c x^d, xyz

with the pure-power exponents equal to (a+d-1, b+e-1, c+f-1) for kind A or
(a+d, b+e, c+f) for kind B.  The six parameters are pinned down purely by
character matching (the monomial of Gamma sharing the character of z^gamma
is x^(a-1) y^(e-1), and rotations), which also covers the degenerate cases
where one of the mixed monomials fails to be a minimal generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .groups import AbelianGroup

Monomial = tuple[int, int, int]


class InfiniteComplementError(Exception):
    """A monomial ideal misses a pure power on some axis."""


class ClassificationError(RuntimeError):
    """A staircase violates the kind A / kind B structure theory."""


class OracleCapError(ValueError):
    """The brute-force search was asked to run above its group-order cap."""


def mono_mul(u: Monomial, v: Monomial) -> Monomial:
    return (u[0] + v[0], u[1] + v[1], u[2] + v[2])


def mono_divides(u: Monomial, v: Monomial) -> bool:
    return u[0] <= v[0] and u[1] <= v[1] and u[2] <= v[2]


def mono_lcm(u: Monomial, v: Monomial) -> Monomial:
    return (max(u[0], v[0]), max(u[1], v[1]), max(u[2], v[2]))


def mono_str(m: Monomial) -> str:
    return f"x^{m[0]} y^{m[1]} z^{m[2]}"


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal stored by its minimal generators, sorted."""

    gens: tuple[Monomial, ...]

    @classmethod
    def from_generators(cls, monomials) -> "MonomialIdeal":
        minimal: list[Monomial] = []
        for m in sorted(set(tuple(g) for g in monomials)):
            if not any(mono_divides(g, m) for g in minimal):
                minimal = [g for g in minimal if not mono_divides(m, g)]
                minimal.append(m)
        return cls(tuple(sorted(minimal)))

    def contains(self, m: Monomial) -> bool:
        return any(mono_divides(g, m) for g in self.gens)

    def pure_power_exponents(self) -> tuple[int, int, int]:
        """Exponents (alpha, beta, gamma) of the pure-power generators."""
        out = [None, None, None]
        for g in self.gens:
            for axis in range(3):
                if g[axis] and not g[(axis + 1) % 3] and not g[(axis + 2) % 3]:
                    out[axis] = g[axis]
        if any(v is None for v in out):
            raise InfiniteComplementError(
                f"ideal {self.gens} has no pure power on some axis; "
                "its complement is infinite"
            )
        return tuple(out)


@dataclass(frozen=True)
class GGraph:
    """A torus-fixed ideal together with its staircase and classification."""

    gamma: tuple[Monomial, ...]
    ideal: MonomialIdeal
    char_index: tuple[int, ...]
    kind: str
    params: tuple[int, int, int, int, int, int]
    alpha_beta_gamma: tuple[int, int, int]

    def char_to_gamma(self) -> dict[int, int]:
        """Map a character index to the position of its monomial in gamma."""
        return {c: i for i, c in enumerate(self.char_index)}

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "params": list(self.params),
            "generators": [list(g) for g in self.ideal.gens],
            "gamma": [list(m) for m in self.gamma],
            "characters": list(self.char_index),
        }


def complement(ideal: MonomialIdeal) -> list[Monomial]:
    """All monomials outside the ideal, sorted; requires a finite staircase."""
    alpha, beta, gamma = ideal.pure_power_exponents()
    out = [
        m
        for m in product(range(alpha), range(beta), range(gamma))
        if not ideal.contains(m)
    ]
    return sorted(out)


def classify(
    G: AbelianGroup, gamma: list[Monomial], chars: list[int], ideal: MonomialIdeal
):
    """Determine (kind, params, pure-power exponents) from character matching.

    Raises ClassificationError when the matched monomials do not have the
    required shape or the three axis relations disagree on the kind; either
    event contradicts the structure theory and is treated as fatal.
    """
    alpha, beta, gamma_exp = ideal.pure_power_exponents()
    pos_of_char = {c: i for i, c in enumerate(chars)}

    def matched(exponent: Monomial) -> Monomial:
        return gamma[pos_of_char[G.char_index(exponent)]]

    mz = matched((0, 0, gamma_exp))
    if mz[2] != 0:
        raise ClassificationError(
            f"monomial {mono_str(mz)} matching z^{gamma_exp} is not of the form x^(a-1) y^(e-1)"
        )
    a, e = mz[0] + 1, mz[1] + 1
    mx = matched((alpha, 0, 0))
    if mx[0] != 0:
        raise ClassificationError(
            f"monomial {mono_str(mx)} matching x^{alpha} is not of the form y^(b-1) z^(f-1)"
        )
    b, f = mx[1] + 1, mx[2] + 1
    my = matched((0, beta, 0))
    if my[1] != 0:
        raise ClassificationError(
            f"monomial {mono_str(my)} matching y^{beta} is not of the form z^(c-1) x^(d-1)"
        )
    c, d = my[2] + 1, my[0] + 1

    kinds = []
    for total, u, v in ((alpha, a, d), (beta, b, e), (gamma_exp, c, f)):
        if total == u + v - 1:
            kinds.append("A")
        elif total == u + v:
            kinds.append("B")
        else:
            raise ClassificationError(
                f"pure-power exponent {total} matches neither {u}+{v}-1 nor {u}+{v}"
            )
    if len(set(kinds)) != 1:
        raise ClassificationError(f"axis relations disagree on the kind: {kinds}")
    return kinds[0], (a, b, c, d, e, f), (alpha, beta, gamma_exp)


def is_ggraph(G: AbelianGroup, ideal: MonomialIdeal) -> GGraph | None:
    """The classified staircase if the ideal is a torus-fixed point, else None."""
    gamma = complement(ideal)
    if len(gamma) != G.order:
        return None
    chars = [G.char_index(m) for m in gamma]
    if len(set(chars)) != len(chars):
        return None
    kind, params, abg = classify(G, gamma, chars, ideal)
    return GGraph(
        gamma=tuple(gamma),
        ideal=ideal,
        char_index=tuple(chars),
        kind=kind,
        params=params,
        alpha_beta_gamma=abg,
    )


def seven_generators(kind: str, params) -> tuple[Monomial, ...]:
    a, b, c, d, e, f = params
    delta = 1 if kind == "A" else 0
    return (
        (a + d - delta, 0, 0),
        (0, b + e - delta, 0),
        (0, 0, c + f - delta),
        (a, e, 0),
        (0, b, f),
        (d, 0, c),
        (1, 1, 1),
    )


def count_identity_value(kind: str, params) -> int:
    """Predicted group order from the classification parameters."""
    a, b, c, d, e, f = params
    total = a + b + c + d + e + f
    quad = a * b + a * c + a * e + b * c + b * f + d * c + d * e + d * f + e * f
    if kind == "A":
        return 4 - 2 * total + quad
    return 1 - total + quad


def verify_count_identity(gg: GGraph) -> bool:
    return count_identity_value(gg.kind, gg.params) == len(gg.gamma)


def enumerate_fixed_points(G: AbelianGroup) -> list[GGraph]:
    """All torus-fixed points, by scanning both kinds over the parameter box.

    The staircase of a fixed point contains 1, x, ..., x^(alpha-1) with
    pairwise distinct characters, so alpha, beta, gamma are at most |G| and
    each parameter search range [1, |G|] is exhaustive.  Candidates are
    pruned by the three character-matching conditions and by the counting
    identity before the staircase is built, and deduplicated on the minimal
    generators of the resulting ideal.
    """
    N = G.order
    ci = G.char_index
    cx = [ci((k, 0, 0)) for k in range(N + 1)]
    cy = [ci((0, k, 0)) for k in range(N + 1)]
    cz = [ci((0, 0, k)) for k in range(N + 1)]
    pairs_by_char: dict[int, list[tuple[int, int]]] = {}
    for b in range(1, N + 1):
        for f in range(1, N + 1):
            pairs_by_char.setdefault(ci((0, b - 1, f - 1)), []).append((b, f))

    seen: set[tuple[Monomial, ...]] = set()
    results: list[GGraph] = []
    for kind in ("A", "B"):
        delta = 1 if kind == "A" else 0
        for a in range(1, N + 1):
            for d in range(1, N + 1):
                alpha = a + d - delta
                if not 1 <= alpha <= N:
                    continue
                for b, f in pairs_by_char.get(cx[alpha], ()):
                    for e in range(1, N + 1):
                        beta = b + e - delta
                        if not 1 <= beta <= N:
                            continue
                        target_z = ci((a - 1, e - 1, 0))
                        target_y = cy[beta]
                        for c in range(1, N + 1):
                            gamma_exp = c + f - delta
                            if not 1 <= gamma_exp <= N:
                                continue
                            if cz[gamma_exp] != target_z:
                                continue
                            if ci((d - 1, 0, c - 1)) != target_y:
                                continue
                            params = (a, b, c, d, e, f)
                            if count_identity_value(kind, params) != N:
                                continue
                            ideal = MonomialIdeal.from_generators(
                                seven_generators(kind, params)
                            )
                            if ideal.gens in seen:
                                continue
                            seen.add(ideal.gens)
                            gg = is_ggraph(G, ideal)
                            if gg is not None:
                                results.append(gg)
    results.sort(key=lambda gg: gg.gamma)
    return results


def brute_force_fixed_points(G: AbelianGroup, cap: int = 16) -> list[GGraph]:
    """Independent oracle: depth-first search over admissible staircases.

    Staircases are grown one monomial at a time in increasing (degree, lex)
    order, so each candidate set is visited exactly once.  Only monomials
    with a zero exponent are eligible (xyz shares the trivial character with
    1, hence lies in every fixed ideal), and a monomial is only added when
    its character is still unused.
    """
    if G.order > cap:
        raise OracleCapError(f"group order {G.order} exceeds the oracle cap {cap}")
    N = G.order
    ci = G.char_index

    def key(m: Monomial):
        return (m[0] + m[1] + m[2], m)

    results: list[GGraph] = []

    def candidates(gamma: set[Monomial], last) -> list[Monomial]:
        succ = set()
        for m in gamma:
            for axis in range(3):
                s = list(m)
                s[axis] += 1
                s = tuple(s)
                if s in gamma or min(s) != 0:
                    continue
                if all(
                    s[ax] == 0 or _lowered(s, ax) in gamma for ax in range(3)
                ):
                    succ.add(s)
        return sorted((s for s in succ if key(s) > last), key=key)

    def close(gamma: set[Monomial]) -> None:
        gens = set()
        for m in gamma:
            for axis in range(3):
                s = list(m)
                s[axis] += 1
                s = tuple(s)
                if s in gamma:
                    continue
                if all(s[ax] == 0 or _lowered(s, ax) in gamma for ax in range(3)):
                    gens.add(s)
        ideal = MonomialIdeal.from_generators(gens)
        gg = is_ggraph(G, ideal)
        if gg is None:
            raise RuntimeError(
                f"oracle staircase {sorted(gamma)} failed revalidation; "
                "enumeration and validation disagree"
            )
        results.append(gg)

    def dfs(gamma: set[Monomial], used: set[int], last) -> None:
        if len(gamma) == N:
            close(gamma)
            return
        for s in candidates(gamma, last):
            c = ci(s)
            if c in used:
                continue
            gamma.add(s)
            used.add(c)
            dfs(gamma, used, key(s))
            gamma.discard(s)
            used.discard(c)

    dfs({(0, 0, 0)}, {ci((0, 0, 0))}, key((0, 0, 0)))
    results.sort(key=lambda gg: gg.gamma)
    return results


def _lowered(m: Monomial, axis: int) -> Monomial:
    s = list(m)
    s[axis] -= 1
    return tuple(s)


def fixed_points_2d(r: int) -> list[tuple[tuple[int, int], ...]]:
    """Torus-fixed staircases for the cyclic SL2 model with weights (1, r-1).

    Returns the Young diagrams of size r whose cells carry pairwise distinct
    characters i - j mod r.
    """
    if r < 2:
        raise ValueError(f"order must be at least 2, got {r}")
    results = []
    for lam in _partitions(r):
        cells = tuple(
            sorted((i, j) for i, height in enumerate(lam) for j in range(height))
        )
        chars = {(i - j) % r for i, j in cells}
        if len(chars) == r:
            results.append(cells)
    return sorted(results)


def _partitions(n: int, cap: int | None = None):
    cap = n if cap is None else cap
    if n == 0:
        yield []
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions(n - first, first):
            yield [first] + rest
