"""Accessors for the computation caps configured in ``settings.PGROUPS``."""
from django.conf import settings


def _limit(key):
    return settings.PGROUPS[key]


def center_enumeration_cap():
    return _limit('CENTER_ENUMERATION_CAP')


def table_cap():
    return _limit('TABLE_CAP')


def oracle_cap():
    return _limit('ORACLE_CAP')


def default_threads():
    return _limit('THREADS')


def fast_primes():
    return tuple(_limit('FAST_PRIMES'))


def full_primes():
    return tuple(_limit('FULL_PRIMES'))


def slow_prime():
    return _limit('SLOW_PRIME')
