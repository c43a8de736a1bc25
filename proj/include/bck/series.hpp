#pragma once

#include <optional>
#include <vector>

#include "bck/algebra.hpp"

namespace bck {

enum class SeriesKind { derived, lower_central, upper_central };
const char* series_kind_name(SeriesKind k);

/// A stabilized chain of subalgebras. terms runs from index 0 to the first
/// repeat, so the last two entries are always equal. class_value is the
/// least index reaching {0} (descending kinds) or the full carrier
/// (ascending); absent if the series stalls elsewhere.
struct SeriesReport {
    SeriesKind kind;
    std::vector<ElementSet> terms;
    bool stabilized = false;
    std::optional<int> class_value;
};

/// A^(0) = A, A^(k+1) = [A^(k), A^(k)]. class_value is the solvability class.
SeriesReport derived_series(const Algebra& a);

/// A_0 = A, A_1 = A', A_{k+1} = [A_k, A].
SeriesReport lower_central_series(const Algebra& a);

/// Z_0 = {0}, Z_k = <S_k> where S_k = {x | [x,y] in S_{k-1} for all y}.
/// The raw-set recursion is equivalent to the k-tuple definition because
/// weighted commutators are left-normed folds; tests verify the equivalence
/// against the tuple form rather than assuming it.
SeriesReport upper_central_series(const Algebra& a);

/// The raw sets S_0, S_1, ... of the upper-series recursion, before taking
/// generated subalgebras. S_1 need not be a subalgebra.
std::vector<ElementSet> upper_central_raw_sets(const Algebra& a);

/// Z_1: the subalgebra generated by {x | [x,y] = 0 for all y}.
ElementSet pseudo_center(const Algebra& a);

/// The raw set {x | [x,y] = 0 for all y} itself.
ElementSet raw_pseudo_center(const Algebra& a);

/// Common class of the upper and lower central series. The two lengths
/// coincide for every BCK-algebra; a mismatch means the implementation is
/// broken and throws logic_error. Always defined for finite algebras.
int nilpotence_class(const Algebra& a);

/// Least k with A^(k) = {0}.
int solvability_class(const Algebra& a);

struct BckClassCheck {
    bool holds;
    /// On failure, a (c+1)-tuple whose weighted commutator is nonzero.
    std::vector<Element> witness;
};

/// Class-at-most-c membership: holds iff every [x, y_1, ..., y_c] vanishes,
/// equivalently nilpotence_class(a) <= c. Requires c >= 1.
BckClassCheck is_in_bck_c(const Algebra& a, int c);

}  // namespace bck
