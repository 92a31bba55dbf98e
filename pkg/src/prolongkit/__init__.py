"""Exact prolongation calculus for parameterized linear differential
systems over Q(x, t)."""

from .diffmod import (DiffModule, ModuleMorphism, change_basis_matrix,
                      conjugate_constant, dsum, dual, dual_morphism,
                      dual_swap_g, embedding_E, inclusion_i, is_morphism,
                      iterate_F, product_rule_map, projection_phi, prolong,
                      prolong_lemma, prolong_morphism, tensor, trivial_module)
from .exprparse import (EvalError, ExprError, ModuleDoc, ModuleDocError,
                        ParseError, load_module, parse_expr, render,
                        render_matrix)
from .hopf import (GA, GM, AxiomReport, DiffPoly, OrderOverflowError,
                   antipode, check_axioms, coproduct, counit,
                   reduce_mod_derivatives, subgroup_defining_poly)
from .ratfield import LinDiffOp, MPoly, RatFunc
from .solspace import (FundamentalCheck, SolExpr, UnrepresentableSolutionError,
                       build_fundamental_prolongation, load_solution,
                       unweighted_prolongation, verify_fundamental, xt_example)

__version__ = "0.1.0"

__all__ = [
    "DiffModule", "ModuleMorphism", "change_basis_matrix",
    "conjugate_constant", "dsum", "dual", "dual_morphism", "dual_swap_g",
    "embedding_E", "inclusion_i", "is_morphism", "iterate_F",
    "product_rule_map", "projection_phi", "prolong", "prolong_lemma",
    "prolong_morphism", "tensor", "trivial_module",
    "EvalError", "ExprError", "ModuleDoc", "ModuleDocError", "ParseError",
    "load_module", "parse_expr", "render", "render_matrix",
    "GA", "GM", "AxiomReport", "DiffPoly", "OrderOverflowError", "antipode",
    "check_axioms", "coproduct", "counit", "reduce_mod_derivatives",
    "subgroup_defining_poly",
    "LinDiffOp", "MPoly", "RatFunc",
    "FundamentalCheck", "SolExpr", "UnrepresentableSolutionError",
    "build_fundamental_prolongation", "load_solution",
    "unweighted_prolongation", "verify_fundamental", "xt_example",
]
