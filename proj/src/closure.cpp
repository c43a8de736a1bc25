#include "bck/closure.hpp"

#include <stdexcept>

namespace bck {

ElementSet subalgebra_closure(const Algebra& a, const ElementSet& gens) {
    const int n = a.order();
    ElementSet cur(n);
    cur.insert(0);
    cur = cur | gens;
    for (bool grew = true; grew;) {
        grew = false;
        auto members = cur.to_vector();
        for (Element x : members)
            for (Element y : members) {
                Element p = a.op(x, y);
                if (!cur.contains(p)) {
                    cur.insert(p);
                    grew = true;
                }
            }
    }
    return cur;
}

ElementSet ideal_closure(const Algebra& a, const ElementSet& gens) {
    const int n = a.order();
    ElementSet cur(n);
    cur.insert(0);
    cur = cur | gens;
    for (bool grew = true; grew;) {
        grew = false;
        for (Element x = 0; x < n; ++x) {
            if (cur.contains(x)) continue;
            for (Element y = 0; y < n; ++y)
                if (cur.contains(y) && cur.contains(a.op(x, y))) {
                    cur.insert(x);
                    grew = true;
                    break;
                }
        }
    }
    return cur;
}

bool is_subalgebra(const Algebra& a, const ElementSet& s) {
    auto members = s.to_vector();
    for (Element x : members)
        for (Element y : members)
            if (!s.contains(a.op(x, y))) return false;
    return true;
}

std::string IdealFailure::describe() const {
    if (missing_zero) return "0 is not a member";
    return "implication fails: " + std::to_string(x) + "*" + std::to_string(y) + " and " +
           std::to_string(y) + " are members but " + std::to_string(x) + " is not";
}

std::optional<IdealFailure> ideal_failure(const Algebra& a, const ElementSet& s) {
    if (!s.contains(0)) return IdealFailure{true, 0, 0};
    const int n = a.order();
    for (Element x = 0; x < n; ++x) {
        if (s.contains(x)) continue;
        for (Element y = 0; y < n; ++y)
            if (s.contains(y) && s.contains(a.op(x, y))) return IdealFailure{false, x, y};
    }
    return std::nullopt;
}

ElementSet commutator_subalgebra(const Algebra& a, const ElementSet& s, const ElementSet& t) {
    ElementSet gens(a.order());
    s.for_each([&](Element x) { t.for_each([&](Element y) { gens.insert(a.commutator(x, y)); }); });
    return subalgebra_closure(a, gens);
}

ElementSet derived_subalgebra(const Algebra& a) {
    return commutator_subalgebra(a, a.carrier(), a.carrier());
}

ElementSet derived_ideal(const Algebra& a) { return ideal_closure(a, derived_subalgebra(a)); }

std::vector<ElementSet> all_ideals(const Algebra& a) {
    const int n = a.order();
    if (n > 20) throw std::invalid_argument("all_ideals: order too large for subset enumeration");
    std::vector<ElementSet> out;
    for (uint64_t bits = 1; bits < (uint64_t{1} << n); bits += 2) {  // always contains 0
        ElementSet s(n);
        for (Element x = 0; x < n; ++x)
            if (bits >> x & 1) s.insert(x);
        if (is_ideal(a, s)) out.push_back(s);
    }
    return out;
}

}  // namespace bck
