"""Constructive freshness as a decision procedure.

A name ``a`` is fresh for ``x`` when swapping ``a`` with a name outside
``support(x)`` fixes ``x``.  One canonical witness suffices: any witness
outside the support behaves like any other (the some/any principle), so
``fresh_dec`` tests exactly one swap.  The universal reading survives only
as ``fresh_universal_probe`` over a finite witness set, kept for
cross-validating the two forms; quantifying over all names is not
decidable.

``minimize_support`` strips the decidably-fresh names from a declared
support.  The result equals the classical least support whenever that
exists, and is always a subset of the declared one; it is never claimed
to be constructively least.
"""

from __future__ import annotations

from typing import Sequence, TypeVar

from .atoms import Name, NameSet, fresh_for
from .nominal import NominalInstance
from .perms import swap_perm

X = TypeVar("X")


class WitnessError(ValueError):
    """A supplied witness violates its freshness precondition."""


def fresh_dec(inst: NominalInstance[X], a: Name, x: X) -> bool:
    """Decide ``a # x`` with the canonical witness outside
    ``support(x) | {a}``."""
    b = fresh_for(inst.support(x) | {a})
    return inst.equiv(inst.act(swap_perm(a, b), x), x)


def fresh_universal_probe(
    inst: NominalInstance[X], a: Name, x: X, witnesses: NameSet
) -> bool:
    """Check the swap condition for every supplied witness.

    Every witness must lie outside ``support(x)``; a violating witness is
    rejected with :class:`WitnessError` rather than folded into the verdict.
    The witness ``a`` itself is exempt: its swap is the identity, so it is
    valid regardless of support membership.
    """
    support = inst.support(x)
    for b in witnesses:
        if b != a and b in support:
            raise WitnessError(f"witness {b!r} is in the support of {x!r}")
    return all(
        inst.equiv(inst.act(swap_perm(a, b), x), x) for b in witnesses
    )


def fresh_tuple(
    insts: Sequence[NominalInstance], a: Name, xs: Sequence
) -> bool:
    """``a`` fresh for every component of a heterogeneous tuple."""
    if len(insts) != len(xs):
        raise ValueError("one instance per component required")
    return all(fresh_dec(i, a, x) for i, x in zip(insts, xs))


def minimize_support(inst: NominalInstance[X], x: X) -> NameSet:
    """The declared support minus its decidably-fresh members."""
    return frozenset(
        a for a in inst.support(x) if not fresh_dec(inst, a, x)
    )
