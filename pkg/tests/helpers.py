"""Plain-random helpers for building alpha-equal variants in tests."""

import random

from nomset.abstraction import Abstraction
from nomset.atoms import Name, fresh_for
from nomset.freshness import fresh_dec
from nomset.lam import App, Lam, Term, Var, fv, term_act
from nomset.nominal import NominalInstance
from nomset.perms import swap_perm

POOL = tuple(Name(i) for i in range(6))


def rename_binders(t: Term, rng: random.Random, pool=POOL) -> Term:
    """An alpha-equal term obtained by randomly renaming binders."""
    match t:
        case Var(_):
            return t
        case App(f, x):
            return App(rename_binders(f, rng, pool), rename_binders(x, rng, pool))
        case Lam(b, s):
            s = rename_binders(s, rng, pool)
            # Any c outside fv(s) keeps the class; c == b is the identity.
            candidates = [c for c in pool if c == b or c not in fv(s)]
            candidates.append(fresh_for(fv(s) | {b}))
            c = rng.choice(candidates)
            return Lam(c, term_act(swap_perm(b, c), s))
    raise TypeError(f"not a term: {t!r}")


def alpha_variant_abs(
    inst: NominalInstance, ab: Abstraction, rng: random.Random, pool=POOL
) -> Abstraction:
    """An abstraction alpha-equal to ``ab``, by renaming the bound name."""
    candidates = [
        c for c in pool if c == ab.name or fresh_dec(inst, c, ab.term)
    ]
    candidates.append(fresh_for(inst.support(ab.term) | {ab.name}))
    c = rng.choice(candidates)
    return Abstraction(c, inst.act(swap_perm(ab.name, c), ab.term))
