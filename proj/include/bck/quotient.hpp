#pragma once

#include <optional>
#include <vector>

#include "bck/algebra.hpp"
#include "bck/closure.hpp"

namespace bck {

/// A/I with its bookkeeping. Classes are the ~_I blocks
/// (x ~_I y iff x*y and y*x are both in I); class indices are assigned by
/// ascending minimal representative, so the class of 0 (= I itself) is
/// always index 0.
struct QuotientAlgebra {
    Algebra algebra;
    std::vector<int> class_of;          // carrier element -> class index
    std::vector<Element> representative;  // class index -> minimal member
    ElementSet ideal;
};

struct NotAnIdeal : std::invalid_argument {
    explicit NotAnIdeal(IdealFailure f);
    IdealFailure failure;
};

/// Throws NotAnIdeal (with the failing implication witness) unless i is an
/// ideal of a. Well-definedness of the class operation is re-verified during
/// construction.
QuotientAlgebra quotient(const Algebra& a, const ElementSet& i);

/// A^comm = A/DI(A); always commutative.
QuotientAlgebra commutativization(const Algebra& a);

/// A total map between two algebras with cached analysis.
struct Morphism {
    Algebra source;
    Algebra target;
    std::vector<Element> map;
    bool is_hom = false;
    bool is_surjective = false;
    ElementSet kernel;  // {x | map(x) = 0}; an ideal of source when is_hom
};

struct HomFailure {
    Element x, y;  // map(x*y) != map(x)*map(y)
};

std::optional<HomFailure> hom_failure(const Algebra& src, const Algebra& dst,
                                      std::span<const Element> map);

/// Builds a Morphism and fills in its flags and kernel.
Morphism make_morphism(Algebra src, Algebra dst, std::vector<Element> map);

/// Refreshes the cached flags; returns whether f is a homomorphism.
bool check_homomorphism(Morphism& f);

/// The projection x -> class_of(x) as a Morphism (surjective, kernel = ideal).
Morphism natural_projection(const Algebra& a, const QuotientAlgebra& q);

/// For a homomorphism f: A -> B, the induced map A^comm -> B^comm sending
/// C_x to C_{f(x)}. Well-definedness is a theorem; it is re-verified and a
/// failure raises logic_error.
Morphism induced_commutativization_map(const Morphism& f);

/// All homomorphisms a -> c, each as a map vector. Brute force over all
/// |c|^(|a|-1) maps fixing 0; guarded to small orders.
std::vector<std::vector<Element>> all_homomorphisms(const Algebra& a, const Algebra& c);

/// Verifies that every homomorphism a -> c (c commutative) factors through
/// the natural projection a -> a^comm via exactly one homomorphism.
/// Rejects non-commutative c.
bool universal_property_check(const Algebra& a, const Algebra& c);

/// Componentwise operation on pairs, pair (x,y) at index x*order(b)+y.
Algebra direct_product(const Algebra& a, const Algebra& b);

/// An isomorphism a -> b if one exists (0 always maps to 0). Backtracking
/// with invariant pruning: order height, in/out-degrees, row/column value
/// multisets.
std::optional<Morphism> is_isomorphic(const Algebra& a, const Algebra& b);

}  // namespace bck
