"""Subgroup enumeration for Coxeter tetrahedron groups.

For a tetrahedron symbol [p,q,r,s,t,u] this package enumerates the index
2, 3 and 4 subgroups of the reflection group and of its rotation subgroup
up to conjugacy, computes Schreier generators for each class, verifies the
results independently (full product-space recount and coset enumeration),
and exports classes as colorings.
"""

from .coloring import Coloring, coloring_of, colorings_fixing_c1_count
from .enumerator import (SubgroupClass, TransitiveRep, canonical_form,
                         classify_image, count_distinct_subgroups,
                         enumerate_candidates, enumerate_classes)
from .oracle import (BruteForceCounts, TCResult, brute_force_classes,
                     default_coset_budget, todd_coxeter, verify_class)
from .perms import (MAX_DEGREE, Assignment, Perm, all_perms, compose,
                    conjugate_assignment, evaluate_word, inverse,
                    is_transitive, order, parse_cycles)
from .presentations import (CATALOG, CatalogEntry, CoxeterSymbol,
                            Presentation, catalog, catalog_by_id,
                            full_presentation, kleinian_presentation,
                            parse_symbol, presentation_for)
from .stabilizer import (CosetTable, StabilizerGens, build_coset_table,
                         raw_schreier_words, same_subgroup,
                         schreier_generators, simplify_word,
                         stabilizer_words_check)
from .words import Word, parse_word

__version__ = "0.1.0"

__all__ = [
    "Assignment", "BruteForceCounts", "CATALOG", "CatalogEntry", "Coloring",
    "CosetTable", "CoxeterSymbol", "MAX_DEGREE", "Perm", "Presentation",
    "StabilizerGens", "SubgroupClass", "TCResult", "TransitiveRep", "Word",
    "all_perms", "brute_force_classes", "build_coset_table", "canonical_form",
    "catalog", "catalog_by_id", "classify_image", "coloring_of",
    "colorings_fixing_c1_count", "compose", "conjugate_assignment",
    "count_distinct_subgroups", "default_coset_budget",
    "enumerate_candidates", "enumerate_classes", "evaluate_word",
    "full_presentation", "inverse", "is_transitive",
    "kleinian_presentation", "order", "parse_cycles", "parse_symbol",
    "parse_word", "presentation_for", "raw_schreier_words", "same_subgroup",
    "schreier_generators", "simplify_word", "stabilizer_words_check",
    "todd_coxeter", "verify_class",
]
