"""Module realizations at chart points and exact homology of their complexes.

A point of a chart with coordinates (lambda, mu, nu) determines a cyclic
module with basis the staircase of the owning fixed point.  Multiplication
by each variable is computed by rewriting: whenever a monomial is divisible
by one of the seven chart generators, the generator is replaced by its
chart relation (a coefficient monomial in lambda, mu, nu times the
complementary monomial).  Each rewrite strictly lowers the pairing with
n0, the sum of the chart's three rays, by at least one, which bounds the
loop.  Equivariance makes every multiplication matrix a generalized
permutation matrix on character lines.

Two exact complexes are computed from the resulting matrices: the four-term
wedge complex of a single module (exact whenever some B is invertible), and
the two-module complex with differential B2 ^ eta - eta ^ B1 whose middle
homology computes the equivariant Hom into the quotient.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg, toric
from .ggraph import GGraph, Monomial, mono_divides
from .groups import AbelianGroup

Matrix = tuple[tuple[Fraction, ...], ...]
COORD_EXPONENTS = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
WEDGE_PAIRS = ((0, 1), (0, 2), (1, 2))


class RewriteError(RuntimeError):
    """Monomial rewriting exceeded its termination bound."""


@dataclass(frozen=True)
class ChartPoint:
    """A point of the affine chart of a fixed point; (0,0,0) is the point itself."""

    base: GGraph
    coords: tuple[Fraction, Fraction, Fraction]


@dataclass(frozen=True)
class ModuleRep:
    """Multiplication matrices on the staircase basis, plus the cyclic vector."""

    gg: GGraph
    coords: tuple[Fraction, Fraction, Fraction]
    b: tuple[Matrix, Matrix, Matrix]
    i_vec: tuple[Fraction, ...]


def rewrite_rules(gg: GGraph):
    """The seven chart relations as (source, replacement, coefficient powers)."""
    a, b, c, d, e, f = gg.params
    if gg.kind == "A":
        rules = [
            ((a + d - 1, 0, 0), (0, b - 1, f - 1), (1, 0, 0)),
            ((0, b + e - 1, 0), (d - 1, 0, c - 1), (0, 1, 0)),
            ((0, 0, c + f - 1), (a - 1, e - 1, 0), (0, 0, 1)),
            ((a, e, 0), (0, 0, c + f - 2), (1, 1, 0)),
            ((0, b, f), (a + d - 2, 0, 0), (0, 1, 1)),
            ((d, 0, c), (0, b + e - 2, 0), (1, 0, 1)),
            ((1, 1, 1), (0, 0, 0), (1, 1, 1)),
        ]
    else:
        rules = [
            ((a + d, 0, 0), (0, b - 1, f - 1), (1, 0, 1)),
            ((0, b + e, 0), (d - 1, 0, c - 1), (1, 1, 0)),
            ((0, 0, c + f), (a - 1, e - 1, 0), (0, 1, 1)),
            ((a, e, 0), (0, 0, c + f - 1), (1, 0, 0)),
            ((0, b, f), (a + d - 1, 0, 0), (0, 1, 0)),
            ((d, 0, c), (0, b + e - 1, 0), (0, 0, 1)),
            ((1, 1, 1), (0, 0, 0), (1, 1, 1)),
        ]
    return rules


def build_rep(
    G: AbelianGroup, pt: ChartPoint, cone: toric.ChartCone | None = None
) -> ModuleRep:
    """Multiplication matrices of the chart-point module in the staircase basis."""
    gg = pt.base
    if cone is None:
        pair = toric.lattices(G)
        cone = toric.chart_cone(G, pair, gg, owner=0)
    n0 = [sum(ray[i] for ray in cone.rays) for i in range(3)]
    rules = rewrite_rules(gg)
    coords = pt.coords
    gamma = gg.gamma
    index = {m: i for i, m in enumerate(gamma)}
    gamma_set = set(gamma)
    n = len(gamma)
    mats = []
    for alpha in range(3):
        mat = [[Fraction(0)] * n for _ in range(n)]
        for col, mono in enumerate(gamma):
            w = list(mono)
            w[alpha] += 1
            result = _normal_form(tuple(w), rules, coords, n0, gamma_set)
            if result is None:
                continue
            target, coeff = result
            expected = G.char_add[G.char_index(COORD_EXPONENTS[alpha])][
                G.char_index(mono)
            ]
            if G.char_index(target) != expected:
                raise RewriteError(
                    f"rewriting x_{alpha} * {mono} landed on the wrong character line"
                )
            mat[index[target]][col] = coeff
        mats.append(tuple(tuple(row) for row in mat))
    i_vec = tuple(
        Fraction(int(m == (0, 0, 0))) for m in gamma
    )
    return ModuleRep(gg=gg, coords=coords, b=tuple(mats), i_vec=i_vec)


def _normal_form(start: Monomial, rules, coords, n0, gamma_set):
    """Reduce a monomial to the staircase; None when the coefficient dies."""
    phi = sum(f * e for f, e in zip(n0, start))
    budget = int(phi)
    w = start
    coeff = Fraction(1)
    steps = 0
    while w not in gamma_set:
        for lhs, rhs, powers in rules:
            if mono_divides(lhs, w):
                w = (
                    w[0] - lhs[0] + rhs[0],
                    w[1] - lhs[1] + rhs[1],
                    w[2] - lhs[2] + rhs[2],
                )
                for coord, power in zip(coords, powers):
                    if power:
                        if coord == 0:
                            return None
                        coeff *= coord**power
                break
        else:
            raise RewriteError(
                f"monomial {w} is outside the staircase but no chart rule applies"
            )
        steps += 1
        if steps > budget:
            raise RewriteError(
                f"rewriting of {start} exceeded its bound of {budget} steps; "
                "the chart is misclassified"
            )
    return w, coeff


def fixed_point_rep(G: AbelianGroup, gg: GGraph, cone=None) -> ModuleRep:
    zero = Fraction(0)
    return build_rep(G, ChartPoint(base=gg, coords=(zero, zero, zero)), cone=cone)


def verify_adhm(rep: ModuleRep) -> bool:
    """Exact commutator vanishing plus fullness of the cyclic span."""
    b1, b2, b3 = rep.b
    for left, right in ((b1, b2), (b1, b3), (b2, b3)):
        comm = linalg.mat_sub(linalg.mat_mul(left, right), linalg.mat_mul(right, left))
        if any(any(x for x in row) for row in comm):
            return False
    return krylov_dim(rep) == len(rep.i_vec)


def krylov_dim(rep: ModuleRep) -> int:
    """Dimension of the smallest B-invariant subspace containing the cyclic vector."""
    basis = linalg.EchelonBasis(len(rep.i_vec))
    queue = [list(rep.i_vec)]
    basis.add(queue[0])
    while queue:
        vec = queue.pop()
        for mat in rep.b:
            image = [
                sum((row[j] * vec[j] for j in range(len(vec)) if vec[j]), Fraction(0))
                for row in mat
            ]
            if basis.add(image):
                queue.append(image)
    return basis.dim()


def all_b_invertible(rep: ModuleRep) -> bool:
    return all(linalg.det_dense(mat) != 0 for mat in rep.b)


def cpxnil_differentials(rep: ModuleRep):
    """The three differentials of the four-term wedge complex of one module."""
    b1, b2, b3 = ([list(row) for row in mat] for mat in rep.b)
    n = len(rep.i_vec)
    zero = [[Fraction(0)] * n for _ in range(n)]
    d3 = _stack_rows(b1, b2, b3)
    d2 = _stack_rows(
        _stack_cols(_neg(b2), b1, zero),
        _stack_cols(_neg(b3), zero, b1),
        _stack_cols(zero, _neg(b3), b2),
    )
    d1 = _stack_cols(b3, _neg(b2), b1)
    return d3, d2, d1


def cpxnil_homology(rep: ModuleRep) -> tuple[int, int, int, int]:
    """Homology dimensions (h3, h2, h1, h0) of the four-term wedge complex."""
    d3, d2, d1 = cpxnil_differentials(rep)
    return _homology_of_ranks(len(rep.i_vec), d3, d2, d1)


def _neg(mat):
    return [[-x for x in row] for row in mat]


def _stack_rows(*blocks):
    return [row for block in blocks for row in block]


def _stack_cols(*mats):
    return [sum((list(m[i]) for m in mats), []) for i in range(len(mats[0]))]


def _homology_of_ranks(n, d3, d2, d1):
    r3 = linalg.rank_dense(d3)
    r2 = linalg.rank_dense(d2)
    r1 = linalg.rank_dense(d1)
    h3 = n - r3
    h2 = 3 * n - r2 - r3
    h1 = 3 * n - r1 - r2
    h0 = n - r1
    return (h3, h2, h1, h0)


def _packed(G: AbelianGroup, rep: ModuleRep):
    """Coefficient and shift tables of the generalized permutation matrices.

    Raises when some matrix entry sits off its character line, which would
    mean the representation is not equivariant.
    """
    gamma = rep.gg.gamma
    chars = rep.gg.char_index
    pos = rep.gg.char_to_gamma()
    coord = [G.char_index(e) for e in COORD_EXPONENTS]
    n = len(gamma)
    coeffs = [[Fraction(0)] * n for _ in range(3)]
    shifts = [[0] * n for _ in range(3)]
    for alpha in range(3):
        mat = rep.b[alpha]
        for col in range(n):
            target_row = pos[G.char_add[coord[alpha]][chars[col]]]
            for row in range(n):
                if mat[row][col] and row != target_row:
                    raise RuntimeError(
                        "multiplication matrix is not supported on its "
                        "character-shift pattern"
                    )
            coeffs[alpha][col] = mat[target_row][col]
            shifts[alpha][col] = target_row
    return coeffs, shifts, pos, coord


def koszul_differentials(G: AbelianGroup, rep1: ModuleRep, rep2: ModuleRep):
    """Differentials of the two-module equivariant complex, packed.

    The terms are the equivariant Homs of the first module into the wedge
    powers tensored with the second; each is packed on character lines, so
    the spaces have dimensions n, 3n, 3n, n.  The differential is the
    graded commutator with the two multiplication maps.
    """
    b1, shift1, _, coord = _packed(G, rep1)
    b2, _, pos2, _ = _packed(G, rep2)
    chars1 = rep1.gg.char_index
    add = G.char_add
    n = len(rep1.gg.gamma)
    if len(rep2.gg.gamma) != n:
        raise ValueError("modules must share the group order")
    frac0 = Fraction(0)

    def match2(c):
        return pos2[c]

    # d3: packed Hom -> three packed blocks.
    d3 = [[frac0] * n for _ in range(3 * n)]
    for i in range(n):
        ci = chars1[i]
        for alpha in range(3):
            row = alpha * n + i
            d3[row][i] += b2[alpha][match2(ci)]
            d3[row][shift1[alpha][i]] -= b1[alpha][i]

    # d2: three blocks -> three wedge blocks.
    d2 = [[frac0] * (3 * n) for _ in range(3 * n)]
    for i in range(n):
        ci = chars1[i]
        for p, (alpha, beta) in enumerate(WEDGE_PAIRS):
            row = p * n + i
            d2[row][beta * n + i] += b2[alpha][match2(add[ci][coord[beta]])]
            d2[row][alpha * n + i] -= b2[beta][match2(add[ci][coord[alpha]])]
            d2[row][alpha * n + shift1[beta][i]] += b1[beta][i]
            d2[row][beta * n + shift1[alpha][i]] -= b1[alpha][i]

    # d1: three wedge blocks -> packed Hom; signs of the top wedge product.
    d1 = [[frac0] * (3 * n) for _ in range(n)]
    signs = {(1, 2): 1, (0, 2): -1, (0, 1): 1}
    for i in range(n):
        ci = chars1[i]
        for p, (alpha, beta) in enumerate(WEDGE_PAIRS):
            gamma_idx = 3 - alpha - beta
            sign = signs[(alpha, beta)]
            cpair = add[coord[alpha]][coord[beta]]
            d1[i][p * n + i] += sign * b2[gamma_idx][match2(add[ci][cpair])]
            d1[i][p * n + shift1[gamma_idx][i]] -= sign * b1[gamma_idx][i]

    return d3, d2, d1


def koszul_homology(
    G: AbelianGroup, rep1: ModuleRep, rep2: ModuleRep
) -> tuple[int, int, int, int]:
    """Homology (h3, h2, h1, h0) of the two-module equivariant complex."""
    d3, d2, d1 = koszul_differentials(G, rep1, rep2)
    return _homology_of_ranks(len(rep1.gg.gamma), d3, d2, d1)


def pair_report(i: int, j: int, h, expected) -> dict:
    return {
        "pair": [i, j],
        "h": list(h),
        "expected": list(expected),
        "pass": tuple(h) == tuple(expected),
    }


def sample_chart_points(
    gg: GGraph, count: int, rng: random.Random
) -> list[ChartPoint]:
    """Seeded chart points with nonzero small-height rational coordinates."""
    points = []
    for _ in range(count):
        coords = tuple(
            Fraction(rng.randint(1, 5), rng.randint(1, 5))
            * rng.choice((1, -1))
            for _ in range(3)
        )
        points.append(ChartPoint(base=gg, coords=coords))
    return points


def orbit_spectrum_check(
    G: AbelianGroup, rep: ModuleRep, rng: random.Random, retries: int = 3
) -> str:
    """Best-effort support check via a random combination of the B matrices.

    When the characteristic polynomial splits over Q it must have |G|
    distinct roots (the support of a module at an invertible chart point is
    a free orbit).  If it does not split, the check is 'skipped'.
    """
    n = len(rep.i_vec)
    for _ in range(retries):
        t = [rng.randint(1, 9) for _ in range(3)]
        combo = [
            [
                t[0] * rep.b[0][r][c] + t[1] * rep.b[1][r][c] + t[2] * rep.b[2][r][c]
                for c in range(n)
            ]
            for r in range(n)
        ]
        roots = linalg.rational_roots(linalg.charpoly(combo))
        if roots is None:
            return "skipped"
        if len(set(roots)) == n:
            return "pass"
    raise RuntimeError(
        "characteristic polynomial splits with repeated roots; "
        "the support is not a free orbit"
    )
