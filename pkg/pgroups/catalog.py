"""
Named p-groups and the group-spec mini-language.

A spec names a family, a prime and family parameters::

    es@3
    g1@5,n=4
    elemab@3,rank=2
    es@3 x elemab@3,rank=1      (direct product)
    file:groups/h37.pcp         (a PCP file, see pgroups.pcpfile)

Families with a forced prime (h37, d8, q8) may leave out ``@p``.

Generator order per family (commutators always land in later generators):

    es        x, y, z                  [y,x] = z
    g2        a, a1, a2, b1, b2        [a_i,a] = b_i
    g3        a1, a2, a3, b1, b2, b3   [a1,a2] = b3, [a2,a3] = b1, [a3,a1] = b2
    h37       g3 generators, then c    [b_i,a_i] = c (p = 3)
    example1  a, a1, a2, a3, a4        [a,a1] = a2, [a2,a] = a3, [a2,a1] = a4
    example2  a, a1, a2, a3, a4        [a_i,a] = a_(i+1), i = 1..3
    modular   x, y, z                  x^p = z, [x,y] = z

All other commutators are trivial and every generator of those families has
order p. For p >= 5 the binomial correction terms of the example2 power
relations are all trivial, so plain p-th power relations are exact.
"""
import logging
import re
from dataclasses import dataclass, field

from sympy import isprime

from .exceptions import (
    InconsistentPresentationError,
    SpecParameterError,
    SpecSyntaxError,
)
from .pcgroup import PcPresentation, check_consistency, direct_product, trivial_presentation
from . import pcpfile

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroupSpec:
    family: str
    p: int = None
    params: tuple = ()
    product: tuple = ()
    path: str = ''

    def param(self, name):
        return dict(self.params)[name]


@dataclass(frozen=True)
class Family:
    builder: object
    defaults: dict = field(default_factory=dict)
    prime: int = None
    min_prime: int = 2
    odd: bool = False
    minimums: dict = field(default_factory=dict)
    bound_family: bool = True


# Builders

def _es(p):
    return PcPresentation.build(p, 3, comms={(1, 0): {2: 1}}, names=['x', 'y', 'z'])


def _elemab(p, rank):
    return PcPresentation.build(p, rank, names=[f'e{i + 1}' for i in range(rank)])


def _g1(p, n):
    return direct_product(_es(p), _elemab(p, n - 3))


def _g2(p):
    return PcPresentation.build(
        p, 5,
        comms={(1, 0): {3: 1}, (2, 0): {4: 1}},
        names=['a', 'a1', 'a2', 'b1', 'b2'],
    )


def _g3_relations(p):
    # [a2,a1] = b3^-1, [a3,a2] = b1^-1, [a3,a1] = b2
    return {(1, 0): {5: p - 1}, (2, 1): {3: p - 1}, (2, 0): {4: 1}}


def _g3(p):
    return PcPresentation.build(p, 6, comms=_g3_relations(p), names=['a1', 'a2', 'a3', 'b1', 'b2', 'b3'])


def _h37(p):
    comms = _g3_relations(p)
    comms.update({(3, 0): {6: 1}, (4, 1): {6: 1}, (5, 2): {6: 1}})
    return PcPresentation.build(p, 7, comms=comms, names=['a1', 'a2', 'a3', 'b1', 'b2', 'b3', 'c'])


def _example1(p):
    # [a1,a] = a2^-1
    return PcPresentation.build(
        p, 5,
        comms={(1, 0): {2: p - 1}, (2, 0): {3: 1}, (2, 1): {4: 1}},
        names=['a', 'a1', 'a2', 'a3', 'a4'],
    )


def _example2(p):
    return PcPresentation.build(
        p, 5,
        comms={(1, 0): {2: 1}, (2, 0): {3: 1}, (3, 0): {4: 1}},
        names=['a', 'a1', 'a2', 'a3', 'a4'],
    )


def _cyclic(p, m):
    return PcPresentation.build(p, m, powers={i: {i + 1: 1} for i in range(m - 1)})


def _d8(p):
    return PcPresentation.build(2, 3, powers={1: {2: 1}}, comms={(1, 0): {2: 1}}, names=['s', 'r', 'r2'])


def _q8(p):
    return PcPresentation.build(
        2, 3,
        powers={0: {2: 1}, 1: {2: 1}},
        comms={(1, 0): {2: 1}},
        names=['i', 'j', 'z'],
    )


def _modular(p):
    return PcPresentation.build(p, 3, powers={0: {2: 1}}, comms={(1, 0): {2: p - 1}}, names=['x', 'y', 'z'])


FAMILIES = {
    'es': Family(_es, odd=True),
    'g1': Family(_g1, defaults={'n': 3}, odd=True, minimums={'n': 3}),
    'g2': Family(_g2, odd=True),
    'g3': Family(_g3, odd=True),
    'h37': Family(_h37, prime=3),
    'example1': Family(_example1, min_prime=5),
    'example2': Family(_example2, min_prime=5),
    'elemab': Family(_elemab, defaults={'rank': 1}, minimums={'rank': 0}, bound_family=False),
    'cyclic': Family(_cyclic, defaults={'m': 1}, minimums={'m': 0}, bound_family=False),
    'd8': Family(_d8, prime=2, bound_family=False),
    'q8': Family(_q8, prime=2, bound_family=False),
    'modular': Family(_modular, odd=True, bound_family=False),
}


# Mini-language

PRODUCT = re.compile(r'\s+x\s+')
NAME = re.compile(r'[a-z][a-z0-9]*')
NUMBER = re.compile(r'\d+')


def _expect(regex, text, pos, what, offset):
    match = regex.match(text, pos)
    if not match:
        raise SpecSyntaxError(f'expected {what}', offset + pos)
    return match.group(0), match.end()


def _parse_factor(text, offset):
    if text.startswith('file:'):
        path = text[len('file:'):]
        if not path:
            raise SpecSyntaxError('empty file path', offset + len(text))
        return GroupSpec('file', path=path)
    family, pos = _expect(NAME, text, 0, 'a family name', offset)
    if family not in FAMILIES:
        raise SpecParameterError(f'unknown family {family!r}')
    p = None
    if pos < len(text) and text[pos] == '@':
        digits, pos = _expect(NUMBER, text, pos + 1, 'a prime', offset)
        p = int(digits)
    params = {}
    while pos < len(text):
        if text[pos] != ',':
            raise SpecSyntaxError(f'unexpected {text[pos]!r}', offset + pos)
        key, pos = _expect(NAME, text, pos + 1, 'a parameter name', offset)
        if pos >= len(text) or text[pos] != '=':
            raise SpecSyntaxError('expected "="', offset + pos)
        value, pos = _expect(NUMBER, text, pos + 1, 'an integer', offset)
        if key in params:
            raise SpecSyntaxError(f'parameter {key!r} given twice', offset + pos)
        params[key] = int(value)
    return validate(GroupSpec(family, p, tuple(sorted(params.items()))))


def validate(spec):
    """
    Check family constraints and fill in defaults.

    Raises:
        SpecParameterError: unknown parameter or a value out of range
    """
    if spec.family in ('file', 'product'):
        return spec
    family = FAMILIES[spec.family]
    p = spec.p
    if p is None:
        if family.prime is None:
            raise SpecParameterError(f'{spec.family} needs a prime: {spec.family}@<p>')
        p = family.prime
    if not isprime(p):
        raise SpecParameterError(f'{p} is not prime')
    if family.prime is not None and p != family.prime:
        raise SpecParameterError(f'{spec.family} is only defined for p = {family.prime}')
    if p < family.min_prime:
        raise SpecParameterError(f'{spec.family} needs p >= {family.min_prime}')
    if family.odd and p == 2:
        raise SpecParameterError(f'{spec.family} needs an odd prime')
    params = dict(family.defaults)
    for key, value in spec.params:
        if key not in family.defaults:
            raise SpecParameterError(f'{spec.family} has no parameter {key!r}')
        params[key] = value
    for key, low in family.minimums.items():
        if params[key] < low:
            raise SpecParameterError(f'{spec.family} needs {key} >= {low}')
    return GroupSpec(spec.family, p, tuple(sorted(params.items())))


def parse_spec(text):
    """
    Parse ``<family>@<p>[,name=value...]`` factors joined by `` x ``.

    Raises:
        SpecSyntaxError: with the offending character position
        SpecParameterError: unknown family, bad parameter, mixed primes
    """
    stripped = text.strip()
    if not stripped:
        raise SpecSyntaxError('empty group spec', 0)
    lead = len(text) - len(text.lstrip())
    factors = []
    start = 0
    for sep in list(PRODUCT.finditer(stripped)) + [None]:
        end = sep.start() if sep else len(stripped)
        chunk = stripped[start:end]
        if not chunk:
            raise SpecSyntaxError('missing factor', lead + start)
        factors.append(_parse_factor(chunk, lead + start))
        if sep:
            start = sep.end()
    if len(factors) == 1:
        return factors[0]
    primes = {f.p for f in factors if f.family != 'file'}
    if len(primes) > 1:
        raise SpecParameterError('all factors of a product must share the prime')
    return GroupSpec('product', primes.pop() if primes else None, product=tuple(factors))


def render(spec):
    """Canonical text of a spec; parse_spec(render(spec)) == spec."""
    if spec.family == 'product':
        return ' x '.join(render(f) for f in spec.product)
    if spec.family == 'file':
        return f'file:{spec.path}'
    text = f'{spec.family}@{spec.p}'
    return text + ''.join(f',{k}={v}' for k, v in spec.params)


def is_bound_family_group(spec):
    if spec.family == 'product':
        return all(is_bound_family_group(f) for f in spec.product)
    return spec.family != 'file' and FAMILIES[spec.family].bound_family


def build(spec):
    """
    Consistent presentation for a spec.

    Raises:
        InconsistentPresentationError: if the construction fails the overlap test
        PresentationError: unreadable PCP file
    """
    if spec.family == 'product':
        pres = None
        for factor in spec.product:
            part = build(factor)
            pres = part if pres is None else direct_product(pres, part)
        pres = pres or trivial_presentation(spec.p or 2)
    elif spec.family == 'file':
        try:
            pres = pcpfile.load(spec.path)
        except OSError as exc:
            raise SpecParameterError(f'cannot read {spec.path}: {exc.strerror}') from exc
    else:
        pres = FAMILIES[spec.family].builder(spec.p, **dict(spec.params))
    violations = check_consistency(pres)
    if violations:
        raise InconsistentPresentationError(f'{render(spec)} fails {len(violations)} overlap checks', violations)
    logger.debug('built %s: order %d^%d', render(spec), pres.p, pres.n)
    return pres


def build_from_text(text):
    return build(parse_spec(text))

