"""
Power-commutator presentations of finite p-groups.

A presentation has generators g_0 .. g_{n-1} (0-based in the Python API, 1-based
in every text format), each of relative order p, with relations

    g_i^p      = power_rhs[i]      (a normal word in g_{i+1} .. g_{n-1})
    [g_j, g_i] = comm_rhs[j][i]    (j > i, a normal word in g_{j+1} .. g_{n-1})

where [x, y] = x^-1 y^-1 x y, so that g_j g_i = g_i g_j [g_j, g_i].

Elements are normal-form exponent vectors. Multiplication is collection from
the left: the collected prefix is kept as an exponent vector and the letters
still to be multiplied sit on a stack. Moving a letter g_i past the collected
tail g_{i+1}^{e_{i+1}} ... replaces the tail by its conjugate under g_i, so
the rewriting is deterministic and every normal form is reproducible.

The same collector runs with an optional integer tail vector (see
``pgroups.multiplier``) that counts every application of a relation.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property
from random import Random

from sympy import factorint, isprime

from . import limits
from .exceptions import (
    InconsistentPresentationError,
    InvalidTableError,
    NotCentralError,
    PresentationError,
    ResourceCapExceeded,
)
from .intlinalg import IntMatrix, abelian_invariants, nullspace_mod_p

logger = logging.getLogger(__name__)


def pair_index(j, i):
    """Position of the commutator relation (j, i), j > i, among all pairs."""
    return j * (j - 1) // 2 + i


def _letters(exps):
    return tuple((k, e) for k, e in enumerate(exps) if e)


@dataclass(frozen=True)
class PcElement:
    """Normal form g_0^e_0 ... g_{n-1}^e_{n-1}, each exponent in [0, p)."""

    exps: tuple

    @property
    def is_identity(self):
        return not any(self.exps)

    @property
    def depth(self):
        """Index of the first nonzero exponent, or len(exps) for the identity."""
        for k, e in enumerate(self.exps):
            if e:
                return k
        return len(self.exps)

    @property
    def leading(self):
        d = self.depth
        return self.exps[d] if d < len(self.exps) else 0

    def letters(self):
        return _letters(self.exps)


@dataclass(frozen=True)
class PcPresentation:
    p: int
    n: int
    power_rhs: tuple
    comm_rhs: tuple
    names: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if not isprime(self.p):
            raise PresentationError(f'{self.p} is not prime')
        if len(self.power_rhs) != self.n or len(self.comm_rhs) != self.n:
            raise PresentationError('relation tables do not match the generator count')
        for i, word in enumerate(self.power_rhs):
            self._check_word(word, i, f'power relation of g{i + 1}')
        for j, row in enumerate(self.comm_rhs):
            if len(row) != j:
                raise PresentationError(f'commutator row {j + 1} has {len(row)} entries, expected {j}')
            for i, word in enumerate(row):
                self._check_word(word, j, f'commutator [g{j + 1},g{i + 1}]')
        if self.names and len(self.names) != self.n:
            raise PresentationError('one name per generator is required')

    def _check_word(self, word, after, label):
        if len(word) != self.n:
            raise PresentationError(f'{label}: word of length {len(word)} in a {self.n}-generator presentation')
        for k, e in enumerate(word):
            if not 0 <= e < self.p:
                raise PresentationError(f'{label}: exponent {e} outside [0, {self.p})')
            if e and k <= after:
                raise PresentationError(f'{label}: g{k + 1} breaks the echelon property')

    @classmethod
    def build(cls, p, n, powers=None, comms=None, names=None):
        """
        Build a presentation from sparse relation maps.

        Args:
            p (int): the prime
            n (int): number of generators
            powers (dict): i -> {k: e}, the value of g_i^p (missing = identity)
            comms (dict): (j, i) -> {k: e} with j > i, the value of [g_j, g_i]
            names (list): optional generator names

        Returns:
            PcPresentation
        """
        def word(mapping):
            exps = [0] * n
            for k, e in (mapping or {}).items():
                if not 0 <= k < n:
                    raise PresentationError(f'generator index {k} out of range')
                exps[k] = e
            return tuple(exps)

        powers = powers or {}
        comms = comms or {}
        for (j, i) in comms:
            if not 0 <= i < j < n:
                raise PresentationError(f'commutator pair ({j}, {i}) must satisfy n > j > i >= 0')
        return cls(
            p=p,
            n=n,
            power_rhs=tuple(word(powers.get(i)) for i in range(n)),
            comm_rhs=tuple(tuple(word(comms.get((j, i))) for i in range(j)) for j in range(n)),
            names=tuple(names or ()),
        )

    @cached_property
    def power_letters(self):
        return tuple(_letters(w) for w in self.power_rhs)

    @cached_property
    def comm_letters(self):
        return tuple(tuple(_letters(w) for w in row) for row in self.comm_rhs)

    @property
    def order(self):
        return self.p ** self.n

    @property
    def relation_count(self):
        return self.n + self.n * (self.n - 1) // 2

    def name(self, k):
        return self.names[k] if self.names else f'g{k + 1}'

    def format(self, x):
        """Human-readable normal word, e.g. ``g1*g3^2``; ``1`` for the identity."""
        parts = [self.name(k) if e == 1 else f'{self.name(k)}^{e}' for k, e in enumerate(x.exps) if e]
        return '*'.join(parts) if parts else '1'


def trivial_presentation(p):
    return PcPresentation(p=p, n=0, power_rhs=(), comm_rhs=())


# Elements and collection

def identity(pres):
    return PcElement((0,) * pres.n)


def generator(pres, k):
    if not 0 <= k < pres.n:
        raise PresentationError(f'generator index {k} out of range for {pres.n} generators')
    return PcElement(tuple(1 if i == k else 0 for i in range(pres.n)))


def run_collector(pres, exps, letters, tails=None):
    """
    Multiply the normal form ``exps`` (mutated in place) by ``letters``.

    Letters are (generator, exponent) pairs with 1 <= exponent < p. When
    ``tails`` is a list it is incremented at index i for every use of the power
    relation of g_i and at index n + pair_index(j, i) for every use of the
    commutator relation (j, i).
    """
    p, n = pres.p, pres.n
    power_letters = pres.power_letters
    comm_letters = pres.comm_letters
    stack = list(reversed(letters))
    while stack:
        i, e = stack.pop()
        tail = [(j, exps[j]) for j in range(i + 1, n) if exps[j]]
        if tail:
            # exps * g_i^e = prefix * g_i * (tail)^{g_i} * g_i^{e-1}
            for j, _ in tail:
                exps[j] = 0
            if e > 1:
                stack.append((i, e - 1))
            pending = []
            for j, t in tail:
                if tails is not None:
                    tails[n + pair_index(j, i)] += t
                c = comm_letters[j][i]
                if c:
                    for _ in range(t):
                        pending.append((j, 1))
                        pending.extend(c)
                else:
                    pending.append((j, t))
            stack.extend(reversed(pending))
            e = 1
        total = exps[i] + e
        if total < p:
            exps[i] = total
        else:
            exps[i] = total - p
            if tails is not None:
                tails[i] += 1
            stack.extend(reversed(power_letters[i]))
    return exps


def word_letters(pres, word):
    letters = []
    for k, e in word:
        if not 0 <= k < pres.n:
            raise PresentationError(f'generator index {k} out of range for {pres.n} generators')
        if e > 0:
            q, r = divmod(e, pres.p - 1)
            letters.extend([(k, pres.p - 1)] * q)
            if r:
                letters.append((k, r))
        elif e < 0:
            inv = inverse(pres, generator(pres, k)).letters()
            for _ in range(-e):
                letters.extend(inv)
    return letters


def collect(pres, word):
    """
    Normal form of a word.

    Args:
        pres (PcPresentation): the presentation
        word (list): (generator index, integer exponent) pairs, 0-based

    Returns:
        PcElement

    Raises:
        PresentationError: if an index is out of range
    """
    exps = run_collector(pres, [0] * pres.n, word_letters(pres, word))
    return PcElement(tuple(exps))


def multiply(pres, a, b):
    return PcElement(tuple(run_collector(pres, list(a.exps), b.letters())))


def inverse(pres, a):
    # grow y until a*y collapses, one layer of the pc series at a time
    y = identity(pres)
    c = a
    while not c.is_identity:
        k = c.depth
        step = ((k, pres.p - c.exps[k]),)
        y = PcElement(tuple(run_collector(pres, list(y.exps), step)))
        c = PcElement(tuple(run_collector(pres, list(c.exps), step)))
    return y


def power(pres, a, k):
    if k < 0:
        return power(pres, inverse(pres, a), -k)
    result = identity(pres)
    base = a
    while k:
        if k & 1:
            result = multiply(pres, result, base)
        k >>= 1
        if k:
            base = multiply(pres, base, base)
    return result


def commutator(pres, a, b):
    """[a, b] = a^-1 b^-1 a b."""
    return multiply(pres, inverse(pres, multiply(pres, b, a)), multiply(pres, a, b))


def element_order(pres, a):
    order = 1
    while not a.is_identity:
        a = power(pres, a, pres.p)
        order *= pres.p
    return order


def elements(pres, cap=None):
    """Every element in normal-form order; refuses groups above ``cap``."""
    cap = limits.center_enumeration_cap() if cap is None else cap
    if pres.order > cap:
        raise ResourceCapExceeded('group enumeration', pres.order, cap)
    for exps in itertools.product(range(pres.p), repeat=pres.n):
        yield PcElement(exps)


# Consistency

@dataclass(frozen=True)
class Violation:
    family: str
    indices: tuple
    overlap: str
    left: PcElement
    right: PcElement


def overlap_evaluations(pres, tailed=False):
    """
    Evaluate both sides of every overlap of the consistency test.

    Yields (family, indices, description, left, right), where each side is an
    (exps, tails) pair; tails is None unless ``tailed``. Families:
    ``a``: g_k(g_j g_i) vs (g_k g_j)g_i for k > j > i;
    ``b``: (g_j^p)g_i vs g_j^{p-1}(g_j g_i), and g_j(g_i^p) vs (g_j g_i)g_i^{p-1}, j > i;
    ``c``: g_i(g_i^p) vs (g_i^p)g_i.
    """
    n, p = pres.n, pres.p
    width = pres.relation_count

    def word(letters, start=None, carried=None):
        exps = list(start) if start is not None else [0] * n
        if tailed:
            tails = list(carried) if carried is not None else [0] * width
        else:
            tails = None
        run_collector(pres, exps, letters, tails)
        return exps, tails

    def unit(i, e=1):
        return [e if k == i else 0 for k in range(n)]

    def p_th(i):
        return word([(i, p - 1), (i, 1)])

    for k, j, i in itertools.combinations(reversed(range(n)), 3):
        inner, t = word([(j, 1), (i, 1)])
        left = word(_letters(inner), start=unit(k), carried=t)
        inner, t = word([(k, 1), (j, 1)])
        right = word([(i, 1)], start=inner, carried=t)
        yield 'a', (k, j, i), 'g_k(g_j g_i) = (g_k g_j)g_i', left, right

    for j, i in itertools.combinations(reversed(range(n)), 2):
        pj, t = p_th(j)
        left = word([(i, 1)], start=pj, carried=t)
        inner, t = word([(j, 1), (i, 1)])
        right = word(_letters(inner), start=unit(j, p - 1), carried=t)
        yield 'b', (j, i), '(g_j^p)g_i = g_j^(p-1)(g_j g_i)', left, right

        pi, t = p_th(i)
        left = word(_letters(pi), start=unit(j), carried=t)
        inner, t = word([(j, 1), (i, 1)])
        right = word([(i, p - 1)], start=inner, carried=t)
        yield 'b', (j, i), 'g_j(g_i^p) = (g_j g_i)g_i^(p-1)', left, right

    for i in range(n):
        pi, t = p_th(i)
        left = word(_letters(pi), start=unit(i), carried=t)
        right = word([(i, 1)], start=pi, carried=t)
        yield 'c', (i,), 'g_i(g_i^p) = (g_i^p)g_i', left, right


def check_consistency(pres):
    """
    Run the overlap test.

    Returns:
        list: Violation records; empty exactly when the presentation defines a
        group of order p^n
    """
    violations = []
    for family, indices, overlap, (left, _), (right, _) in overlap_evaluations(pres):
        if left != right:
            violations.append(Violation(family, indices, overlap, PcElement(tuple(left)), PcElement(tuple(right))))
    if violations:
        logger.debug('%d overlap violations', len(violations))
    return violations


def require_consistent(pres):
    violations = check_consistency(pres)
    if violations:
        raise InconsistentPresentationError(
            f'presentation fails {len(violations)} overlap checks', violations
        )
    return pres


# Subgroups

@dataclass(frozen=True)
class SubgroupBasis:
    """Induced pc sequence: strictly increasing depths, leading exponents 1."""

    members: tuple = ()

    @property
    def size_exponent(self):
        return len(self.members)

    def order(self, p):
        return p ** len(self.members)

    @property
    def depths(self):
        return tuple(b.depth for b in self.members)

    def by_depth(self):
        return {b.depth: b for b in self.members}

    @property
    def is_trivial(self):
        return not self.members


def whole_group(pres):
    return SubgroupBasis(tuple(generator(pres, k) for k in range(pres.n)))


def sift(pres, basis, x):
    """Strip x by left multiplication with basis powers; identity iff x is in the subgroup."""
    table = basis if isinstance(basis, dict) else basis.by_depth()
    while not x.is_identity:
        d = x.depth
        b = table.get(d)
        if b is None:
            return x
        x = multiply(pres, power(pres, b, pres.p - x.exps[d]), x)
    return x


def contains(pres, basis, x):
    return sift(pres, basis, x).is_identity


def _canonical(pres, table):
    depths = sorted(table)
    members = []
    for d in depths:
        b = table[d]
        for l in depths:
            if l > d and b.exps[l]:
                b = multiply(pres, b, power(pres, table[l], pres.p - b.exps[l]))
        members.append(b)
    return SubgroupBasis(tuple(members))


def _closure(pres, gens, normal):
    p = pres.p
    table = {}
    conjugators = whole_group(pres).members if normal else ()
    queue = list(gens)
    while queue:
        x = sift(pres, table, queue.pop())
        if x.is_identity:
            continue
        d = x.depth
        x = power(pres, x, pow(x.exps[d], -1, p))
        queue.append(power(pres, x, p))
        queue.extend(commutator(pres, x, b) for b in table.values())
        queue.extend(commutator(pres, x, g) for g in conjugators)
        table[d] = x
    return _canonical(pres, table)


def subgroup(pres, gens):
    """Induced basis of the subgroup generated by ``gens``."""
    return _closure(pres, gens, normal=False)


def normal_closure(pres, gens):
    """
    Induced basis of the smallest normal subgroup containing ``gens``.

    Args:
        pres (PcPresentation): a consistent presentation
        gens (list): PcElements

    Returns:
        SubgroupBasis: canonical (reduced) basis, so equal subgroups compare equal
    """
    return _closure(pres, gens, normal=True)


def reduce_modulo(pres, normal, x):
    """Canonical coset representative of xN: zero exponents at N's depths."""
    for b in normal.members:
        d = b.depth
        if x.exps[d]:
            x = multiply(pres, x, power(pres, b, pres.p - x.exps[d]))
    return x


def exponents_modulo(pres, upper, lower, x):
    """
    Coordinates of x in the section upper/lower.

    ``lower`` must be a normal subgroup of ``upper`` and x an element of
    ``upper``. The coordinates are the exponents of x along the members of
    ``upper`` whose depths are not depths of ``lower``; when the section is
    elementary abelian this is its GF(p) coordinate vector.
    """
    combined = upper.by_depth()
    combined.update(lower.by_depth())
    lower_depths = set(lower.depths)
    coords = {}
    while not x.is_identity:
        d = x.depth
        b = combined.get(d)
        if b is None:
            raise PresentationError(f'{pres.format(x)} is not in the subgroup')
        if d not in lower_depths:
            coords[d] = x.exps[d]
        x = multiply(pres, power(pres, b, pres.p - x.exps[d]), x)
    return tuple(coords.get(d, 0) for d in sorted(set(combined) - lower_depths))


def derived_subgroup(pres):
    return normal_closure(pres, [
        commutator(pres, generator(pres, j), generator(pres, i))
        for j in range(pres.n) for i in range(j)
    ])


def frattini_subgroup(pres):
    """Phi(G) = G'G^p, the normal closure of every relation's right-hand side."""
    gens = [power(pres, generator(pres, i), pres.p) for i in range(pres.n)]
    gens.extend(
        commutator(pres, generator(pres, j), generator(pres, i))
        for j in range(pres.n) for i in range(j)
    )
    return normal_closure(pres, gens)


def lower_central_series(pres):
    """
    gamma_1 = G, gamma_{i+1} = [gamma_i, G], down to and including the trivial term.

    Returns:
        list: SubgroupBasis per term; the nilpotency class is len(series) - 1
    """
    gens = whole_group(pres).members
    series = [whole_group(pres)]
    while series[-1].members:
        series.append(normal_closure(pres, [
            commutator(pres, b, g) for b in series[-1].members for g in gens
        ]))
    return series


def nilpotency_class(pres):
    return len(lower_central_series(pres)) - 1


def is_abelian(pres):
    return not any(any(word) for row in pres.comm_rhs for word in row)


def has_trivial_powers(pres):
    return not any(any(word) for word in pres.power_rhs)


def _layered_kernel(pres, basis, images):
    """
    Kernel of x -> images(x) inside ``basis``, one pc layer at a time.

    ``images`` maps an element to a list of elements; on the subgroup S_k of
    elements whose images all lie in G_k = <g_k, ...> the map to their k-th
    coordinates is a homomorphism to GF(p)^m, so S_{k+1} is its kernel.
    """
    p = pres.p
    current = list(basis.members)
    for k in range(pres.n):
        if not current:
            break
        values = [[img.exps[k] for img in images(b)] for b in current]
        if not any(any(row) for row in values):
            continue
        columns = [[row[s] for row in values] for s in range(len(values[0]))]
        gens = []
        for coeffs in nullspace_mod_p(columns, len(current), p):
            x = identity(pres)
            for b, c in zip(current, coeffs):
                if c:
                    x = multiply(pres, x, power(pres, b, c))
            gens.append(x)
        current = list(subgroup(pres, gens).members)
    return subgroup(pres, current)


def center(pres, strategy='layers', cap=None):
    """
    Basis of Z(G).

    Args:
        pres (PcPresentation): a consistent presentation
        strategy (str): ``layers`` (kernel of the commutator map, layer by
            layer; no enumeration) or ``enumerate`` (test every element)
        cap (int): enumeration cap for the ``enumerate`` strategy

    Raises:
        ResourceCapExceeded: |G| above the cap with ``enumerate``
    """
    gens = whole_group(pres).members
    if strategy == 'enumerate':
        central = [
            x for x in elements(pres, cap)
            if all(commutator(pres, x, g).is_identity for g in gens)
        ]
        return subgroup(pres, central)
    if strategy != 'layers':
        raise ValueError(f'unknown center strategy {strategy!r}')
    return _layered_kernel(pres, whole_group(pres), lambda x: [commutator(pres, x, g) for g in gens])


def omega_one(pres, abelian):
    """Elements of order dividing p in an abelian subgroup (its socle)."""
    return _layered_kernel(pres, abelian, lambda x: [power(pres, x, pres.p)])


def abelianization(pres):
    """
    Invariants of G/G' from the exponent-relation matrix.

    Returns:
        tuple: (AbelianInvariants, d) where d = dim G/Phi(G) is the minimal
        number of generators
    """
    p, n = pres.p, pres.n
    rows = []
    for i, word in enumerate(pres.power_rhs):
        rows.append([(p if k == i else 0) - e for k, e in enumerate(word)])
    for row in pres.comm_rhs:
        for word in row:
            if any(word):
                rows.append(list(word))
    invariants = abelian_invariants(IntMatrix.from_rows(rows, n), n)
    return invariants, len(invariants.torsion)


def is_elementary_abelian(pres, sub):
    members = sub.members
    for a, b in itertools.combinations(members, 2):
        if not commutator(pres, a, b).is_identity:
            return False
    return all(power(pres, b, pres.p).is_identity for b in members)


def is_central(pres, sub):
    gens = whole_group(pres).members
    return all(commutator(pres, b, g).is_identity for b in sub.members for g in gens)


def central_order_p_subgroups(pres):
    """
    Every subgroup of order p of Z(G), one per point of the projective space
    of the socle of Z(G): (p^s - 1)/(p - 1) of them for a socle of rank s.
    """
    p = pres.p
    socle = omega_one(pres, center(pres)).members
    s = len(socle)
    result = []
    for lead in range(s):
        for rest in itertools.product(range(p), repeat=s - lead - 1):
            coeffs = (0,) * lead + (1,) + rest
            x = identity(pres)
            for b, c in zip(socle, coeffs):
                if c:
                    x = multiply(pres, x, power(pres, b, c))
            result.append(subgroup(pres, [x]))
    return result


# Quotients, subgroups and products as presentations

def quotient(pres, normal):
    """
    Presentation of G/N for a normal subgroup N.

    The generators of G whose depths are not depths of N form a pc sequence of
    G/N; each relation's right-hand side is replaced by its canonical coset
    representative, which only involves those generators.
    """
    kept = [i for i in range(pres.n) if i not in set(normal.depths)]
    position = {i: k for k, i in enumerate(kept)}

    def project(exps):
        x = reduce_modulo(pres, normal, PcElement(exps))
        return {position[i]: x.exps[i] for i in kept if x.exps[i]}

    powers = {position[i]: project(pres.power_rhs[i]) for i in kept}
    comms = {
        (position[j], position[i]): project(pres.comm_rhs[j][i])
        for j in kept for i in kept if i < j
    }
    names = [pres.name(i) for i in kept] if pres.names else None
    return PcPresentation.build(pres.p, len(kept), powers, comms, names)


def central_quotient(pres, k, strategy='pcgs', cap=None):
    """
    Presentation of G/K for a central subgroup K.

    Args:
        pres (PcPresentation): a consistent presentation
        k (SubgroupBasis): central subgroup
        strategy (str): ``pcgs`` (canonical coset representatives) or
            ``table`` (coset multiplication table rebuilt by
            pcp_from_multiplication)
        cap (int): table cap for the ``table`` strategy

    Raises:
        NotCentralError: if K is not central
        ResourceCapExceeded: |G/K| above the table cap
    """
    if not is_central(pres, k):
        raise NotCentralError('the subgroup does not commute with every generator')
    if strategy == 'pcgs':
        return quotient(pres, k)
    if strategy != 'table':
        raise ValueError(f'unknown quotient strategy {strategy!r}')
    cap = limits.table_cap() if cap is None else cap
    size = pres.order // k.order(pres.p)
    if size > cap:
        raise ResourceCapExceeded('coset table', size, cap)
    free = [i for i in range(pres.n) if i not in set(k.depths)]
    reps = []
    for values in itertools.product(range(pres.p), repeat=len(free)):
        exps = [0] * pres.n
        for i, v in zip(free, values):
            exps[i] = v
        reps.append(PcElement(tuple(exps)))
    index = {x: r for r, x in enumerate(reps)}
    table = [
        [index[reduce_modulo(pres, k, multiply(pres, a, b))] for b in reps]
        for a in reps
    ]
    return pcp_from_multiplication(table, p=pres.p, cap=cap)


def subgroup_presentation(pres, basis):
    """Presentation of a subgroup on its induced basis."""
    members = basis.members
    trivial = SubgroupBasis()

    def coords(x):
        return dict(enumerate(exponents_modulo(pres, basis, trivial, x)))

    powers = {i: coords(power(pres, b, pres.p)) for i, b in enumerate(members)}
    comms = {
        (j, i): coords(commutator(pres, members[j], members[i]))
        for j in range(len(members)) for i in range(j)
    }
    return PcPresentation.build(pres.p, len(members), powers, comms)


def direct_product(a, b):
    """
    A x B on n_a + n_b generators, A's first, cross commutators trivial.

    Raises:
        PresentationError: if the primes differ
    """
    if a.p != b.p:
        raise PresentationError(f'cannot multiply a {a.p}-group by a {b.p}-group')
    na = a.n

    def shifted(word, offset):
        return {k + offset: e for k, e in enumerate(word) if e}

    powers = {i: shifted(w, 0) for i, w in enumerate(a.power_rhs)}
    powers.update({na + i: shifted(w, na) for i, w in enumerate(b.power_rhs)})
    comms = {(j, i): shifted(w, 0) for j, row in enumerate(a.comm_rhs) for i, w in enumerate(row)}
    comms.update({
        (na + j, na + i): shifted(w, na) for j, row in enumerate(b.comm_rhs) for i, w in enumerate(row)
    })
    names = None
    if a.names or b.names:
        names = [a.name(k) for k in range(na)] + [b.name(k) for k in range(b.n)]
    return PcPresentation.build(a.p, na + b.n, powers, comms, names)


# Explicit groups

def multiplication_table(pres, cap=None):
    """Multiplication table over the elements in normal-form order."""
    cap = limits.table_cap() if cap is None else cap
    if pres.order > cap:
        raise ResourceCapExceeded('multiplication table', pres.order, cap)
    elems = list(elements(pres, cap))
    index = {x: r for r, x in enumerate(elems)}
    return [[index[multiply(pres, a, b)] for b in elems] for a in elems]


class ExplicitGroup:
    """A finite group given by its multiplication table."""

    def __init__(self, table):
        self.table = table
        self.size = len(table)
        self._validate()
        self.identity = next(
            e for e in range(self.size) if all(table[e][x] == x for x in range(self.size))
        )
        self.inverses = [table[x].index(self.identity) for x in range(self.size)]

    def _validate(self):
        table, size = self.table, self.size
        if size == 0:
            raise InvalidTableError('empty table')
        for row in table:
            if len(row) != size or sorted(row) != list(range(size)):
                raise InvalidTableError('rows must be permutations of the elements')
        for col in range(size):
            if sorted(row[col] for row in table) != list(range(size)):
                raise InvalidTableError('columns must be permutations of the elements')
        if not any(all(table[e][x] == x for x in range(size)) for e in range(size)):
            raise InvalidTableError('no identity element')
        if size <= 64:
            triples = itertools.product(range(size), repeat=3)
        else:
            rng = Random(size)
            triples = ((rng.randrange(size), rng.randrange(size), rng.randrange(size)) for _ in range(20000))
        for a, b, c in triples:
            if table[table[a][b]][c] != table[a][table[b][c]]:
                raise InvalidTableError(f'not associative at ({a}, {b}, {c})')

    def mul(self, a, b):
        return self.table[a][b]

    def power(self, a, k):
        x = self.identity
        for _ in range(k):
            x = self.table[x][a]
        return x

    def comm(self, a, b):
        inv = self.inverses
        return self.mul(self.mul(inv[a], inv[b]), self.mul(a, b))

    def closure(self, gens, base=None):
        """<base, gens> for a normal subgroup ``base`` (default trivial)."""
        found = set(base) if base else {self.identity}
        queue = list(found)
        while queue:
            x = queue.pop()
            for g in gens:
                y = self.table[x][g]
                if y not in found:
                    found.add(y)
                    queue.append(y)
        return found

    def generated(self, elems, conjugators=()):
        """Subgroup generated by ``elems``, closed under conjugation by ``conjugators``."""
        pool = list(dict.fromkeys(elems))
        gens = []
        group = {self.identity}
        while pool:
            x = pool.pop(0)
            if x in group:
                continue
            gens.append(x)
            group = self.closure(gens)
            pool.extend(self.mul(self.mul(self.inverses[c], x), c) for c in conjugators)
        return group

    def generating_set(self):
        gens = []
        group = {self.identity}
        for x in range(self.size):
            if x not in group:
                gens.append(x)
                group = self.closure(gens)
        return gens


def _exponent_p_central_series(group, p):
    gens = group.generating_set()
    series = [set(range(group.size))]
    while len(series[-1]) > 1:
        current = series[-1]
        elems = [group.comm(x, g) for x in current for g in gens]
        elems.extend(group.power(x, p) for x in current)
        series.append(group.generated(elems, conjugators=gens))
    return series


def pcp_from_multiplication(table, p=None, cap=None):
    """
    Consistent pc presentation of the p-group with the given multiplication table.

    Generators run along the lower exponent-p central series; wherever possible
    a generator is chosen as a p-th power or a commutator of earlier ones, so
    that it is defined by a single relation.

    Args:
        table (list): square table of element indices
        p (int): the prime; only needed for the trivial group
        cap (int): table size cap

    Raises:
        InvalidTableError: not a group, or not a p-group
        ResourceCapExceeded: table above the cap
    """
    cap = limits.table_cap() if cap is None else cap
    if len(table) > cap:
        raise ResourceCapExceeded('multiplication table', len(table), cap)
    group = ExplicitGroup(table)
    size = group.size
    if size == 1:
        return trivial_presentation(p or 2)
    factors = factorint(size)
    if len(factors) != 1:
        raise InvalidTableError(f'order {size} is not a prime power')
    (prime, n), = factors.items()
    if p is not None and p != prime:
        raise InvalidTableError(f'order {size} is not a power of {p}')
    p = prime

    series = _exponent_p_central_series(group, p)
    layers = []
    for depth in range(len(series) - 1):
        top, bottom = series[depth], series[depth + 1]
        if depth == 0:
            candidates = list(range(size))
        else:
            previous, first = layers[depth - 1], layers[0]
            candidates = [group.power(x, p) for x in previous]
            candidates.extend(group.comm(x, y) for x in previous for y in first)
            candidates.extend(sorted(top))
        span = set(bottom)
        chosen = []
        for x in candidates:
            if len(span) == len(top):
                break
            if x in span:
                continue
            chosen.append(x)
            span = group.closure([x], base=span)
        layers.append(chosen)
    gens = [x for layer in layers for x in layer]
    if len(gens) != n:
        raise PresentationError('pc sequence does not match the group order')

    powers_of = [[group.power(g, e) for e in range(p)] for g in gens]
    exps_of = {}
    for exps in itertools.product(range(p), repeat=n):
        x = group.identity
        for k, e in enumerate(exps):
            if e:
                x = group.mul(x, powers_of[k][e])
        exps_of[x] = exps
    if len(exps_of) != size:
        raise PresentationError('normal forms do not cover the group')

    def word(x):
        return {k: e for k, e in enumerate(exps_of[x]) if e}

    pres = PcPresentation.build(
        p, n,
        powers={i: word(group.power(g, p)) for i, g in enumerate(gens)},
        comms={(j, i): word(group.comm(gens[j], gens[i])) for j in range(n) for i in range(j)},
    )
    require_consistent(pres)
    rng = Random(size)
    for _ in range(min(200, size * size)):
        a, b = rng.randrange(size), rng.randrange(size)
        if multiply(pres, PcElement(exps_of[a]), PcElement(exps_of[b])).exps != exps_of[group.mul(a, b)]:
            raise PresentationError('rebuilt presentation is not isomorphic to the table')
    logger.debug('rebuilt a pc presentation on %d generators from a table of order %d', n, size)
    return pres
