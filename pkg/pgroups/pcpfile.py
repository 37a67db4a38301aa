"""
Text format for pc presentations.

    # extraspecial group of order 27
    prime 3
    generators 3
    names x y z
    comm 2 1 = g3

Generators are numbered from 1. ``power i = word`` gives g_i^p and
``comm j i = word`` gives [g_j, g_i] for j > i; omitted relations are trivial.
A word is a product of factors ``g<k>`` or ``g<k>^<e>`` joined by ``*``; an
empty word or ``1`` is the identity. ``dumps`` writes the canonical form:
fixed header order, relations sorted, trivial ones left out.
"""
import re
from pathlib import Path

from .exceptions import PresentationError
from .pcgroup import PcPresentation

FACTOR = re.compile(r'^g(\d+)(?:\^(\d+))?$')


def format_word(exps):
    factors = [f'g{k + 1}' if e == 1 else f'g{k + 1}^{e}' for k, e in enumerate(exps) if e]
    return '*'.join(factors)


def parse_word(text, n, lineno):
    text = text.strip()
    word = {}
    if text in ('', '1'):
        return word
    last = -1
    for factor in text.split('*'):
        match = FACTOR.match(factor.strip())
        if not match:
            raise PresentationError(f'line {lineno}: cannot read factor {factor.strip()!r}')
        k = int(match.group(1)) - 1
        e = int(match.group(2) or 1)
        if not 0 <= k < n:
            raise PresentationError(f'line {lineno}: generator g{k + 1} out of range')
        if k <= last:
            raise PresentationError(f'line {lineno}: word is not in normal form')
        last = k
        word[k] = e
    return word


def dumps(pres):
    lines = [f'prime {pres.p}', f'generators {pres.n}']
    if pres.names:
        lines.append('names ' + ' '.join(pres.names))
    for i, word in enumerate(pres.power_rhs):
        if any(word):
            lines.append(f'power {i + 1} = {format_word(word)}')
    for j, row in enumerate(pres.comm_rhs):
        for i, word in enumerate(row):
            if any(word):
                lines.append(f'comm {j + 1} {i + 1} = {format_word(word)}')
    return '\n'.join(lines) + '\n'


def loads(text):
    """
    Read a presentation from PCP text.

    Raises:
        PresentationError: on any syntax or range problem, naming the line
    """
    p = n = None
    names = None
    powers = {}
    comms = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(' ')
        rest = rest.strip()
        if head == 'prime':
            p = _integer(rest, lineno)
        elif head == 'generators':
            n = _integer(rest, lineno)
        elif head == 'names':
            names = rest.split()
        elif head in ('power', 'comm'):
            if p is None or n is None:
                raise PresentationError(f'line {lineno}: relations must follow "prime" and "generators"')
            lhs, eq, rhs = rest.partition('=')
            if not eq:
                raise PresentationError(f'line {lineno}: missing "="')
            indices = [_integer(tok, lineno) - 1 for tok in lhs.split()]
            word = parse_word(rhs, n, lineno)
            if head == 'power':
                if len(indices) != 1:
                    raise PresentationError(f'line {lineno}: "power" takes one generator')
                key, target = indices[0], powers
            else:
                if len(indices) != 2:
                    raise PresentationError(f'line {lineno}: "comm" takes two generators')
                key, target = tuple(indices), comms
            if key in target:
                raise PresentationError(f'line {lineno}: relation given twice')
            target[key] = word
        else:
            raise PresentationError(f'line {lineno}: unknown keyword {head!r}')
    if p is None or n is None:
        raise PresentationError('"prime" and "generators" are required')
    for i in powers:
        if not 0 <= i < n:
            raise PresentationError(f'power relation for g{i + 1} out of range')
    return PcPresentation.build(p, n, powers, comms, names)


def load(path):
    return loads(Path(path).read_text(encoding='utf-8'))


def dump(pres, path):
    Path(path).write_text(dumps(pres), encoding='utf-8')


def _integer(token, lineno):
    try:
        return int(token)
    except ValueError:
        raise PresentationError(f'line {lineno}: expected an integer, got {token!r}') from None
