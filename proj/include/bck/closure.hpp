#pragma once

#include <optional>
#include <vector>

#include "bck/algebra.hpp"

namespace bck {

/// Least *-closed superset of gens (always includes 0; empty gens give {0}).
ElementSet subalgebra_closure(const Algebra& a, const ElementSet& gens);

/// Least ideal containing gens, by the implication fixpoint: starting from
/// {0} | gens, add x whenever x*y is in the set for some y already in it.
ElementSet ideal_closure(const Algebra& a, const ElementSet& gens);

bool is_subalgebra(const Algebra& a, const ElementSet& s);

/// Why a set fails to be an ideal: either 0 is missing, or the implication
/// fails at (x, y) with x*y in s, y in s, x not in s.
struct IdealFailure {
    bool missing_zero = false;
    Element x = 0, y = 0;
    std::string describe() const;
};

/// nullopt when s is an ideal, otherwise the first failure found.
std::optional<IdealFailure> ideal_failure(const Algebra& a, const ElementSet& s);

inline bool is_ideal(const Algebra& a, const ElementSet& s) { return !ideal_failure(a, s); }

/// [S,T]: the subalgebra generated by all pairwise commutators [s,t].
ElementSet commutator_subalgebra(const Algebra& a, const ElementSet& s, const ElementSet& t);

/// A' = [A,A]; equals {0} exactly when the algebra is commutative.
ElementSet derived_subalgebra(const Algebra& a);

/// DI(A): the ideal generated by A'; the quotient by it is commutative.
ElementSet derived_ideal(const Algebra& a);

/// Every ideal, ordered as sets. Enumerates all subsets containing 0, so it
/// is restricted to small orders (used to verify DI(A) as an intersection
/// and the quotient-commutativity criterion).
std::vector<ElementSet> all_ideals(const Algebra& a);

}  // namespace bck
