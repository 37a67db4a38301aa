"""
Schur multipliers of finite p-groups.

The tails method: every relation of a pc presentation of G = F/R gets a new
central generator (its tail) carrying an unbounded integer exponent. Collecting
both sides of each overlap with tails switched on gives an integer relation
among the tails. Together these present R/[F,R] = M(G) + Z^n for the pc
generating set; also killing the tails of the relations that define the
Frattini generators passes to a generating set of size d(G), leaving
M(G) + Z^d(G) up to a part of order prime to p. The multiplier is the p-part
of the torsion and the free rank is checked against d(G) on every call.

The bar-resolution oracle computes H_2(G; Z) directly from a multiplication
table and is independent of everything above.
"""
import itertools
import logging
from dataclasses import dataclass
from math import gcd

from . import limits
from .exceptions import (
    InconsistentPresentationError,
    MultiplierSoundnessError,
    PresentationError,
    ResourceCapExceeded,
)
from .intlinalg import (
    AbelianInvariants,
    IntMatrix,
    abelian_invariants,
    invariants_from_orders,
    p_part,
    rank_mod_p,
    sparse_smith_form,
)
from .pcgroup import (
    PcElement,
    PcPresentation,
    abelianization,
    frattini_subgroup,
    multiplication_table,
    overlap_evaluations,
    pair_index,
    run_collector,
    word_letters,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TailedPresentation:
    base: PcPresentation

    @classmethod
    def from_presentation(cls, pres):
        return cls(pres)

    @property
    def r(self):
        return self.base.relation_count

    def power_tail(self, i):
        return i

    def comm_tail(self, j, i):
        return self.base.n + pair_index(j, i)

    def tail_of_relation(self):
        """Tail index per relation: ``('power', i)`` and ``('comm', j, i)`` keys."""
        n = self.base.n
        mapping = {('power', i): self.power_tail(i) for i in range(n)}
        mapping.update({('comm', j, i): self.comm_tail(j, i) for j in range(n) for i in range(j)})
        return mapping


@dataclass(frozen=True)
class TailedElement:
    main: PcElement
    tails: tuple


@dataclass(frozen=True)
class MultiplierResult:
    multiplier: AbelianInvariants
    free_rank_check: int
    consistency_rows: int
    definition_rows: int = 0

    def log_order(self, p):
        return self.multiplier.log_order(p)


def _tailed_letters(tp, word, tails):
    # g_k^-1 = g_k^(p-1) (w_k t_k)^-1 where g_k^p = w_k t_k
    pres = tp.base
    letters = []
    for k, e in word:
        if not 0 <= k < pres.n:
            raise PresentationError(f'generator index {k} out of range for {pres.n} generators')
        if e >= 0:
            letters.extend(word_letters(pres, [(k, e)]))
            continue
        inverse_rhs = [(j, -f) for j, f in reversed(pres.power_letters[k])]
        for _ in range(-e):
            letters.append((k, pres.p - 1))
            letters.extend(_tailed_letters(tp, inverse_rhs, tails))
            tails[tp.power_tail(k)] -= 1
    return letters


def tailed_collect(tp, word):
    """
    Collect a word with every relation application recorded on its tail.

    Tails are signed: an inverse letter uses the power relation backwards and
    subtracts its tail.

    Args:
        tp (TailedPresentation): the tailed presentation
        word (list): (generator index, integer exponent) pairs

    Raises:
        PresentationError: an index out of range
    """
    pres = tp.base
    exps = [0] * pres.n
    tails = [0] * tp.r
    run_collector(pres, exps, _tailed_letters(tp, word, tails), tails)
    return TailedElement(PcElement(tuple(exps)), tuple(tails))


def consistency_relation_matrix(tp):
    """
    One row per overlap: the difference of the tail vectors of its two sides.

    Raises:
        InconsistentPresentationError: if the two sides differ in G itself
    """
    rows = []
    for family, indices, overlap, (left, left_tails), (right, right_tails) in overlap_evaluations(tp.base, tailed=True):
        if left != right:
            raise InconsistentPresentationError(
                f'overlap {family} at {tuple(i + 1 for i in indices)} fails: {overlap}'
            )
        rows.append([a - b for a, b in zip(left_tails, right_tails)])
    return IntMatrix.from_rows(rows, tp.r)


def definition_rows(tp):
    """
    Unit rows killing the tails of a set of defining relations.

    A relation is taken when its right-hand side, read in the coordinates of
    the Frattini generators, is independent mod p of the ones taken before;
    the chosen relations define a pc generating set of Phi(G) from d(G)
    generators of G.
    """
    pres = tp.base
    frattini_depths = list(frattini_subgroup(pres).depths)
    candidates = [(tp.power_tail(i), pres.power_rhs[i]) for i in range(pres.n)]
    candidates.extend(
        (tp.comm_tail(j, i), pres.comm_rhs[j][i]) for j in range(pres.n) for i in range(j)
    )
    chosen = []
    span = []
    for tail, word in candidates:
        if len(span) == len(frattini_depths):
            break
        vec = [word[d] for d in frattini_depths]
        if rank_mod_p(span + [vec], len(frattini_depths), pres.p) > len(span):
            span.append(vec)
            chosen.append(tail)
    return [[1 if c == tail else 0 for c in range(tp.r)] for tail in chosen]


def schur_multiplier(pres):
    """
    M(G) by the tails method.

    Args:
        pres (PcPresentation): a consistent presentation

    Returns:
        MultiplierResult

    Raises:
        InconsistentPresentationError: if the presentation is inconsistent
        MultiplierSoundnessError: if the free rank of the tails quotient is not d(G)
    """
    tp = TailedPresentation.from_presentation(pres)
    overlaps = consistency_relation_matrix(tp)
    killed = definition_rows(tp)
    relations = IntMatrix.from_rows(overlaps.to_rows() + killed, tp.r)
    quotient = abelian_invariants(relations, tp.r)
    _, d = abelianization(pres)
    if quotient.free_rank != d:
        raise MultiplierSoundnessError(
            f'tails quotient has free rank {quotient.free_rank}, expected d(G) = {d}'
        )
    torsion = [p_part(x, pres.p) for x in quotient.torsion]
    multiplier = invariants_from_orders(torsion)
    logger.info('multiplier of a group of order %d^%d: %s', pres.p, pres.n, multiplier)
    return MultiplierResult(multiplier, quotient.free_rank, overlaps.rows, len(killed))


def classical_abelian_multiplier(invariants):
    """M of a finite abelian group Z_d1 x ... x Z_dt: the sum of Z_gcd(di, dj) over i < j."""
    if not invariants.is_finite:
        raise ValueError('the group must be finite')
    return invariants_from_orders([
        gcd(a, b) for a, b in itertools.combinations(invariants.torsion, 2)
    ])


def abelian_presentation(p, invariants):
    """Pc presentation of a finite abelian p-group, one power chain per cyclic factor."""
    powers = {}
    start = 0
    for order in invariants.torsion:
        length = 0
        while order > 1:
            if order % p:
                raise PresentationError(f'{invariants} is not a {p}-group')
            order //= p
            length += 1
        for i in range(start, start + length - 1):
            powers[i] = {i + 1: 1}
        start += length
    return PcPresentation.build(p, start, powers)


def h2_bar_oracle(table, cap=None):
    """
    H_2(G; Z) from the normalised bar resolution.

    The boundary of a 3-cell [g|h|k] is [h|k] - [gh|k] + [g|hk] - [g|h], cells
    containing the identity being zero. For finite G the homology is finite,
    so it equals the torsion of the cokernel of that boundary map.

    Args:
        table (list): multiplication table, element 0 need not be the identity
        cap (int): largest group order accepted

    Raises:
        ResourceCapExceeded: |G| above the cap
    """
    cap = limits.oracle_cap() if cap is None else cap
    size = len(table)
    if size > cap:
        raise ResourceCapExceeded('bar resolution', size, cap)
    identity = next(e for e in range(size) if all(table[e][x] == x for x in range(size)))
    others = [g for g in range(size) if g != identity]
    column = {pair: c for c, pair in enumerate(itertools.product(others, repeat=2))}
    rows = []
    for g, h, k in itertools.product(others, repeat=3):
        row = {}
        for sign, pair in (
            (1, (h, k)),
            (-1, (table[g][h], k)),
            (1, (g, table[h][k])),
            (-1, (g, h)),
        ):
            c = column.get(pair)
            if c is not None:
                row[c] = row.get(c, 0) + sign
        rows.append(row)
    diagonal, _ = sparse_smith_form(rows, len(column))
    result = AbelianInvariants(tuple(d for d in diagonal if d != 1))
    logger.info('bar resolution of a group of order %d: H2 = %s', size, result)
    return result


def oracle_multiplier(pres, cap=None):
    """H_2 of a pc-presented group through its multiplication table."""
    cap = limits.oracle_cap() if cap is None else cap
    if pres.order > cap:
        raise ResourceCapExceeded('bar resolution', pres.order, cap)
    return h2_bar_oracle(multiplication_table(pres), cap=cap)
