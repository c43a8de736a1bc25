#pragma once

#include <string>
#include <vector>

#include "bck/algebra.hpp"

namespace bck {

/// Lexicographically minimal Cayley-table serialization over all carrier
/// permutations fixing element 0. Two algebras are isomorphic exactly when
/// their canonical forms coincide.
struct CanonicalForm {
    int order = 0;
    std::string bytes;  // one char per entry, row-major, values as raw bytes
    auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const Algebra& a);

/// The (n+1)-element chain M_n: x*y = 0 if x <= y, else x. Nilpotent of
/// class n.
Algebra chain_algebra(int n);

inline constexpr int kEnumerationCeiling = 8;

/// Every BCK-algebra of the given order, one per isomorphism class, ordered
/// by canonical form. Backtracking over the free Cayley cells with forced
/// values, incremental antisymmetry and BCK1/BCK2 pruning; a complete table
/// is emitted only when already in canonical form. jobs > 1 partitions the
/// search by the assignment of row 1; the merge is deterministic, so the
/// output does not depend on jobs.
std::vector<Algebra> enumerate_bck(int order, int jobs = 1);

struct SweepRecord {
    CanonicalForm canon;
    int order = 0;
    int nilpotence_class = 0;
    int solvability_class = 0;
    bool commutative = false;
    int pseudo_center_size = 0;
    int derived_ideal_size = 0;
};

/// One record per isomorphism class per order <= max_order. Aborts (throws
/// logic_error with the offending table) if any algebra fails to be
/// nilpotent or has solvability class above its nilpotence class; finding
/// such an algebra would mean the implementation is broken.
std::vector<SweepRecord> sweep(int max_order, int jobs = 1);

}  // namespace bck
