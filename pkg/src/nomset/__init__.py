"""Constructive nominal sets: names, permutations, support, freshness,
name abstraction, finitely supported functions, and a lambda-calculus
case study with capture-avoiding substitution."""

from .abstraction import (
    Abstraction,
    abs_act,
    abs_support,
    alpha_equiv_dec,
    alpha_universal_probe,
    instance_abstraction,
)
from .atoms import Name, NameSet, fresh_for, fresh_many
from .freshness import (
    WitnessError,
    fresh_dec,
    fresh_tuple,
    fresh_universal_probe,
    minimize_support,
)
from .lam import (
    App,
    DbApp,
    DbFree,
    DbLam,
    DbTerm,
    DbVar,
    Lam,
    NormalizeResult,
    Term,
    Var,
    all_terms,
    alpha_eq,
    alpha_rec,
    beta_step,
    fv,
    instance_term,
    normalize,
    subst,
    term_act,
    term_size,
    terms_of_size,
    to_debruijn,
)
from .nominal import (
    LawReport,
    LawResult,
    Left,
    NominalInstance,
    Right,
    check_laws,
    instance_list,
    instance_name,
    instance_nameset,
    instance_option,
    instance_pair,
    instance_sum,
    instance_trivial,
)
from .perms import (
    IDENTITY,
    Perm,
    Swap,
    perm_apply,
    perm_compose,
    perm_domain,
    perm_equiv,
    perm_inverse,
    swap_apply,
    swap_perm,
)
from .suppfn import (
    SuppFn,
    SuppSpecReport,
    check_fcb,
    check_fresh_hyp,
    check_supp_spec,
    compose,
    fcb_lift,
    fn_act,
    fn_equiv_probe,
    fresh_f,
)
from .syntax import NameTable, ParseError, parse_perm, parse_term, print_term

__all__ = [
    "Abstraction",
    "App",
    "DbApp",
    "DbFree",
    "DbLam",
    "DbTerm",
    "DbVar",
    "IDENTITY",
    "Lam",
    "LawReport",
    "LawResult",
    "Left",
    "Name",
    "NameSet",
    "NameTable",
    "NominalInstance",
    "NormalizeResult",
    "ParseError",
    "Perm",
    "Right",
    "SuppFn",
    "SuppSpecReport",
    "Swap",
    "Term",
    "Var",
    "WitnessError",
    "abs_act",
    "abs_support",
    "all_terms",
    "alpha_eq",
    "alpha_equiv_dec",
    "alpha_rec",
    "alpha_universal_probe",
    "beta_step",
    "check_fcb",
    "check_fresh_hyp",
    "check_laws",
    "check_supp_spec",
    "compose",
    "fcb_lift",
    "fn_act",
    "fn_equiv_probe",
    "fresh_dec",
    "fresh_f",
    "fresh_for",
    "fresh_many",
    "fresh_tuple",
    "fresh_universal_probe",
    "fv",
    "instance_abstraction",
    "instance_list",
    "instance_name",
    "instance_nameset",
    "instance_option",
    "instance_pair",
    "instance_sum",
    "instance_term",
    "instance_trivial",
    "minimize_support",
    "normalize",
    "parse_perm",
    "parse_term",
    "perm_apply",
    "perm_compose",
    "perm_domain",
    "perm_equiv",
    "perm_inverse",
    "print_term",
    "subst",
    "swap_apply",
    "swap_perm",
    "term_act",
    "term_size",
    "terms_of_size",
    "to_debruijn",
]
