"""Exact braid group action on reflection arrangements.

Matrices are lists of rows of expression strings such as "2cos(pi*1/5)".
"""
import json

from . import _hurwitz
from ._hurwitz import (ParseError, act_sigma, act_word, approx, catalog, det,
                       extension, normalize, suite_names)


def orbit(matrix, cap=1000000, threads=1):
    return json.loads(_hurwitz.orbit_json(matrix, cap, threads))


def hurwitz(group, roots, cap=1000000):
    return json.loads(_hurwitz.hurwitz_json(group, roots, cap))


def classify(matrix):
    return json.loads(_hurwitz.classify_json(matrix))


def fingerprint(matrix):
    return json.loads(_hurwitz.fingerprint_json(matrix))


def count_orbits(group, exhaustive=True, threads=1, seed=1):
    return json.loads(_hurwitz.count_orbits_json(group, exhaustive, threads, seed))


def search_buckets(group, samples, seed=1, threads=1):
    return json.loads(_hurwitz.search_buckets_json(group, samples, seed, threads))


def realize(matrix):
    return json.loads(_hurwitz.realize_json(matrix))


def verify(suite, threads=1, long_run=False):
    return json.loads(_hurwitz.verify_json(suite, threads, long_run))


__all__ = [
    "ParseError", "act_sigma", "act_word", "approx", "catalog", "classify",
    "count_orbits", "det", "extension", "fingerprint", "hurwitz", "normalize",
    "orbit", "realize", "search_buckets", "suite_names", "verify",
]
