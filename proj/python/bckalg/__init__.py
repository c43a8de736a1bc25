"""Finite BCK-algebras: axioms, pseudo-commutators, central series,
quotients, products, isomorphism and exhaustive enumeration."""

from bckalg._core import (
    Algebra,
    CanonicalForm,
    Morphism,
    QuotientAlgebra,
    SeriesReport,
    SweepRecord,
    WronskiElement,
    all_homomorphisms,
    all_ideals,
    canonical_form,
    catalog_line,
    chain_algebra,
    check_homomorphism,
    commutativization,
    commutator_subalgebra,
    derived_ideal,
    derived_series,
    derived_subalgebra,
    direct_product,
    enumerate_bck,
    format_table,
    ideal_closure,
    induced_commutativization_map,
    is_ideal,
    is_in_bck_c,
    is_isomorphic,
    is_subalgebra,
    load_algebra,
    lower_central_series,
    make_morphism,
    natural_projection,
    nilpotence_class,
    pseudo_center,
    quotient,
    raw_pseudo_center,
    save_algebra,
    solvability_class,
    subalgebra_closure,
    sweep,
    upper_central_raw_sets,
    upper_central_series,
    universal_property_check,
    validate,
    wronski_commutator,
    wronski_element,
    wronski_op,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
