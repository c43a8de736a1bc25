#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "bck/algebra.hpp"
#include "bck/io.hpp"

namespace bck::testing {

inline ElementSet make_set(int n, std::initializer_list<Element> xs) {
    ElementSet s(n);
    for (Element x : xs) s.insert(x);
    return s;
}

inline std::string data_path(const std::string& name) {
    return std::string(BCK_DATA_DIR) + "/" + name;
}

inline Algebra algebra_a5() { return load_algebra(data_path("a5.bck")); }
inline Algebra algebra_b8() { return load_algebra(data_path("b8.bck")); }

/// Order-4 algebra on a chain order whose raw pseudo-center {0,1,3} is not
/// closed (3*1 = 2); its generated subalgebra is the whole carrier, so the
/// upper central series stabilizes one step before the lower one.
inline Algebra closure_jump_c4() {
    return Algebra::from_table(4, {0, 0, 0, 0,
                                   1, 0, 0, 0,
                                   2, 2, 0, 0,
                                   3, 2, 1, 0});
}

/// meet tables of the two reference algebras, row x column y = x meet y
inline const std::vector<std::vector<Element>> kMeetA5 = {
    {0, 0, 0, 0, 0},
    {0, 1, 0, 0, 0},
    {0, 0, 2, 0, 2},
    {0, 1, 2, 3, 2},
    {0, 0, 2, 0, 4},
};

inline const std::vector<std::vector<Element>> kMeetB8 = {
    {0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 1, 1, 0, 1, 1, 1},
    {0, 1, 2, 1, 0, 1, 2, 1},
    {0, 1, 2, 3, 0, 1, 2, 3},
    {0, 0, 0, 0, 4, 4, 4, 4},
    {0, 1, 1, 1, 4, 5, 5, 5},
    {0, 1, 2, 1, 4, 5, 6, 5},
    {0, 1, 2, 3, 4, 5, 6, 7},
};

}  // namespace bck::testing
