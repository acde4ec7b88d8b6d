"""Lambda-calculus terms as a nominal carrier, with an independent oracle.

Terms are raw trees; the nominal instance (:func:`instance_term`) equips
them with alpha-equivalence as the equality, free variables as the
support, and the all-names permutation action (binders included).  A raw
syntactic instance, where support would be every occurring name, is easy
to build from the same pieces but deliberately not shipped: everything
downstream wants the alpha view.

:func:`to_debruijn` converts to a nameless form in which bound variables
are depth indices; structural equality of images decides alpha-equivalence
by construction, giving an oracle for :func:`alpha_eq` that shares none of
its code path.

:func:`subst` is capture-avoiding substitution.  Its binder clause always
renames to the canonical fresh name, even when no capture threatens;
uniformity keeps it obviously alpha-correct.  :func:`alpha_rec` is the
recursion principle built on the FCB lift: one supported function per
constructor, with the binder clause descending to alpha-classes.

:func:`beta_step` / :func:`normalize` contract leftmost-outermost redexes
under an explicit fuel bound; reduction strategy is demo plumbing, not
part of the core theory.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, TypeVar, Union

from .abstraction import Abstraction
from .atoms import Name, NameSet, fresh_for
from .nominal import NominalInstance
from .perms import Perm, perm_apply
from .suppfn import SuppFn, fcb_lift

Y = TypeVar("Y")


@dataclass(frozen=True, slots=True)
class Var:
    name: Name


@dataclass(frozen=True, slots=True)
class App:
    fn: "Term"
    arg: "Term"


@dataclass(frozen=True, slots=True)
class Lam:
    binder: Name
    body: "Term"


Term = Union[Var, App, Lam]


@dataclass(frozen=True, slots=True)
class DbVar:
    index: int


@dataclass(frozen=True, slots=True)
class DbFree:
    name: Name


@dataclass(frozen=True, slots=True)
class DbApp:
    fn: "DbTerm"
    arg: "DbTerm"


@dataclass(frozen=True, slots=True)
class DbLam:
    body: "DbTerm"


DbTerm = Union[DbVar, DbFree, DbApp, DbLam]


def term_act(p: Perm, t: Term) -> Term:
    """Apply a permutation to every name in the term, binders included."""
    match t:
        case Var(a):
            return Var(perm_apply(p, a))
        case App(f, x):
            return App(term_act(p, f), term_act(p, x))
        case Lam(b, s):
            return Lam(perm_apply(p, b), term_act(p, s))
    raise TypeError(f"not a term: {t!r}")


def _swap_term(a: Name, b: Name, t: Term) -> Term:
    # term_act for a single transposition; the hot path of alpha_eq/subst.
    match t:
        case Var(n):
            return Var(b if n == a else a if n == b else n)
        case App(f, x):
            return App(_swap_term(a, b, f), _swap_term(a, b, x))
        case Lam(n, s):
            m = b if n == a else a if n == b else n
            return Lam(m, _swap_term(a, b, s))
    raise TypeError(f"not a term: {t!r}")


def fv(t: Term) -> NameSet:
    """Free variables; the support of the alpha-instance."""
    match t:
        case Var(a):
            return frozenset((a,))
        case App(f, x):
            return fv(f) | fv(x)
        case Lam(b, s):
            return fv(s) - {b}
    raise TypeError(f"not a term: {t!r}")


def _max_id(t: Term) -> int:
    match t:
        case Var(a):
            return a.id
        case App(f, x):
            return max(_max_id(f), _max_id(x))
        case Lam(b, s):
            return max(b.id, _max_id(s))
    raise TypeError(f"not a term: {t!r}")


def alpha_eq(t: Term, u: Term) -> bool:
    """Decide alpha-equivalence.

    Each binder pair is compared through a common fresh mediator, exactly
    as abstractions are.  For speed the mediator swaps are suspended as a
    permutation and applied to names lazily, instead of rebuilding both
    bodies at every level; mediators are drawn above the largest index
    occurring in either term, which makes them fresh for everything in
    play.  Any fresh mediator decides the same relation, and agreement
    with the one-shot abstraction procedure is part of the test suite.
    """
    if t == u:
        return True
    base = max(_max_id(t), _max_id(u)) + 1

    def go(t: Term, u: Term, pl: Perm, pr: Perm, depth: int) -> bool:
        match t, u:
            case (Var(a), Var(b)):
                return perm_apply(pl, a) == perm_apply(pr, b)
            case (App(f1, x1), App(f2, x2)):
                return go(f1, f2, pl, pr, depth) and go(x1, x2, pl, pr, depth)
            case (Lam(a, s), Lam(b, r)):
                ia, ib = perm_apply(pl, a), perm_apply(pr, b)
                if ia == ib:
                    return go(s, r, pl, pr, depth)
                c = Name(base + depth)
                return go(
                    s, r, pl + ((ia, c),), pr + ((ib, c),), depth + 1
                )
            case _:
                return False

    return go(t, u, (), (), 0)


def instance_term() -> NominalInstance[Term]:
    """Terms up to alpha: equivalence ``alpha_eq``, support ``fv``."""
    return NominalInstance(equiv=alpha_eq, act=term_act, support=fv)


def to_debruijn(t: Term) -> DbTerm:
    """Nameless conversion: bound occurrences become binder-depth indices,
    free occurrences stay named."""

    def go(t: Term, env: tuple[Name, ...]) -> DbTerm:
        match t:
            case Var(a):
                try:
                    return DbVar(env.index(a))
                except ValueError:
                    return DbFree(a)
            case App(f, x):
                return DbApp(go(f, env), go(x, env))
            case Lam(b, s):
                return DbLam(go(s, (b,) + env))
        raise TypeError(f"not a term: {t!r}")

    return go(t, ())


def subst(t: Term, a: Name, u: Term) -> Term:
    """Capture-avoiding substitution of ``u`` for free ``a`` in ``t``.

    Every binder is renamed to the canonical fresh name before descending.
    """
    match t:
        case Var(b):
            return u if b == a else t
        case App(f, x):
            return App(subst(f, a, u), subst(x, a, u))
        case Lam(b, s):
            c = fresh_for(fv(s) | fv(u) | {a, b})
            return Lam(c, subst(_swap_term(b, c, s), a, u))
    raise TypeError(f"not a term: {t!r}")


def alpha_rec(
    iy: NominalInstance[Y],
    fvar: SuppFn[Name, Y],
    fapp: SuppFn[tuple[Y, Y], Y],
    flam: SuppFn[tuple[Name, Y], Y],
) -> SuppFn[Term, Y]:
    """Alpha-structural recursion: one clause per constructor.

    The binder clause feeds ``[a] r(body)`` through the FCB lift of
    ``flam``, so the result respects alpha-equivalence provided ``flam``
    passes ``check_fcb`` and all three clauses honor their declared
    supports.  Those obligations are the caller's, checked by the
    samplers beforehand; the combinator itself is total.
    """
    flam_bar = fcb_lift(iy, flam)

    def rec(t: Term) -> Y:
        match t:
            case Var(a):
                return fvar.fn(a)
            case App(f, x):
                return fapp.fn((rec(f), rec(x)))
            case Lam(a, s):
                return flam_bar.fn(Abstraction(a, rec(s)))
        raise TypeError(f"not a term: {t!r}")

    return SuppFn(
        fn=rec,
        supp=fvar.supp | fapp.supp | flam.supp,
        dom=instance_term(),
        cod=iy,
    )


def beta_step(t: Term) -> Term | None:
    """Contract the leftmost-outermost redex, or ``None`` in normal form."""
    match t:
        case App(Lam(b, s), u):
            return subst(s, b, u)
        case App(f, x):
            step = beta_step(f)
            if step is not None:
                return App(step, x)
            step = beta_step(x)
            if step is not None:
                return App(f, step)
            return None
        case Lam(b, s):
            step = beta_step(s)
            return None if step is None else Lam(b, step)
        case _:
            return None


@dataclass(frozen=True)
class NormalizeResult:
    term: Term
    steps: int
    normal_form: bool


def normalize(t: Term, fuel: int = 1000) -> NormalizeResult:
    """Iterate ``beta_step`` at most ``fuel`` times."""
    if fuel < 0:
        raise ValueError("fuel must be nonnegative")
    steps = 0
    while steps < fuel:
        nxt = beta_step(t)
        if nxt is None:
            return NormalizeResult(t, steps, True)
        t = nxt
        steps += 1
    return NormalizeResult(t, steps, beta_step(t) is None)


# ---------------------------------------------------------------------------
# Term enumeration (exhaustive desk-scale sweeps)
# ---------------------------------------------------------------------------

def term_size(t: Term) -> int:
    """Constructor count."""
    match t:
        case Var(_):
            return 1
        case App(f, x):
            return 1 + term_size(f) + term_size(x)
        case Lam(_, s):
            return 1 + term_size(s)
    raise TypeError(f"not a term: {t!r}")


@lru_cache(maxsize=None)
def terms_of_size(
    size: int, pool: tuple[Name, ...], binders: tuple[Name, ...] | None = None
) -> tuple[Term, ...]:
    """All terms of exactly ``size`` constructors, variables drawn from
    ``pool`` and binders from ``binders`` (default: the same pool)."""
    if binders is None:
        binders = pool
    if size < 1:
        return ()
    if size == 1:
        return tuple(Var(a) for a in pool)
    out: list[Term] = []
    for b in binders:
        out.extend(Lam(b, s) for s in terms_of_size(size - 1, pool, binders))
    for left in range(1, size - 1):
        for f in terms_of_size(left, pool, binders):
            for x in terms_of_size(size - 1 - left, pool, binders):
                out.append(App(f, x))
    return tuple(out)


def all_terms(
    max_size: int,
    pool: tuple[Name, ...],
    binders: tuple[Name, ...] | None = None,
) -> Iterator[Term]:
    """All terms of size 1 through ``max_size``, smallest first."""
    for size in range(1, max_size + 1):
        yield from terms_of_size(size, pool, binders)
