"""Finite name permutations as sequences of swaps.

A ``Swap`` is an unordered transposition ``(a, b)``; a ``Perm`` is a tuple
of swaps applied left to right.  Every such word denotes a finite bijection
on names: composition is concatenation, the inverse is the reversed word,
and the empty tuple is the identity.

Words are not normalized.  Two words are compared extensionally with
``perm_equiv``, which only needs to probe the names mentioned in either
word: everything else is fixed by both.
"""

from __future__ import annotations

from .atoms import Name, NameSet

Swap = tuple[Name, Name]
Perm = tuple[Swap, ...]

IDENTITY: Perm = ()


def swap_perm(a: Name, b: Name) -> Perm:
    """The single-transposition permutation exchanging ``a`` and ``b``."""
    return ((a, b),)


def swap_apply(s: Swap, c: Name) -> Name:
    a, b = s
    if a == c:
        return b
    if b == c:
        return a
    return c


def perm_apply(p: Perm, a: Name) -> Name:
    """Apply the swaps of ``p`` to ``a``, first swap first."""
    for s in p:
        a = swap_apply(s, a)
    return a


def perm_compose(p: Perm, q: Perm) -> Perm:
    """The permutation acting as ``p`` first, then ``q``."""
    return p + q


def perm_inverse(p: Perm) -> Perm:
    return tuple(reversed(p))


def perm_domain(p: Perm) -> NameSet:
    """Every name mentioned in ``p``; a superset of the moved names."""
    return frozenset(n for s in p for n in s)


def perm_equiv(p: Perm, q: Perm) -> bool:
    """Extensional equality of the denoted bijections.

    Names outside ``perm_domain(p) | perm_domain(q)`` are fixed by both
    permutations, so agreement on that finite union implies agreement
    everywhere.
    """
    probe = perm_domain(p) | perm_domain(q)
    return all(perm_apply(p, a) == perm_apply(q, a) for a in probe)
