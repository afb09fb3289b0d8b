"""Exact wall-and-chamber structures, tau-tilting fans and maximal green sequences of kQ/I."""
from .algebra import PathAlgebra, Quiver, SpecError, build_algebra, bundled_algebra, bundled_spec, parse_algebra_spec
from .fields import QQ, PrimeField
from .rep import Representation, g_vector, hom_basis, hom_dim, indecomposable_projective, simple, tau
from .tilting import Catalog, TauPair, assemble_tau_tilting_pairs, mutate
from .fan import assemble_fan, stability_space, wall_of_facet
from .paths import build_exchange_graph, enumerate_mgs, mgs_to_path, verify_d_generic

__all__ = [
    "PathAlgebra", "Quiver", "SpecError", "build_algebra", "bundled_algebra", "bundled_spec",
    "parse_algebra_spec", "QQ", "PrimeField", "Representation", "g_vector", "hom_basis", "hom_dim",
    "indecomposable_projective", "simple", "tau", "Catalog", "TauPair", "assemble_tau_tilting_pairs",
    "mutate", "assemble_fan", "stability_space", "wall_of_facet", "build_exchange_graph",
    "enumerate_mgs", "mgs_to_path", "verify_d_generic",
]
