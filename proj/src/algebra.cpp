#include "bck/algebra.hpp"

#include <sstream>

namespace bck {

const char* axiom_name(Axiom a) {
    switch (a) {
        case Axiom::BCK1: return "BCK1";
        case Axiom::BCK2: return "BCK2";
        case Axiom::BCK3: return "BCK3";
        case Axiom::BCK4: return "BCK4";
        case Axiom::BCK5: return "BCK5";
    }
    return "?";
}

std::string ValidationReport::describe() const {
    if (structural) return "structural error: " + *structural;
    if (violations.empty()) return "valid";
    std::ostringstream os;
    for (size_t i = 0; i < violations.size(); ++i) {
        const auto& v = violations[i];
        if (i) os << "; ";
        os << axiom_name(v.axiom) << " violated at ";
        if (v.witness.size() == 1) {
            os << "x=" << v.witness[0];
        } else {
            os << "(";
            for (size_t j = 0; j < v.witness.size(); ++j) os << (j ? "," : "") << v.witness[j];
            os << ")";
        }
    }
    return os.str();
}

ValidationReport validate_table(int order, std::span<const Element> table) {
    ValidationReport rep;
    if (order < 1) {
        rep.structural = "order must be at least 1";
        return rep;
    }
    if (table.size() != static_cast<size_t>(order) * order) {
        rep.structural = "table is not " + std::to_string(order) + "x" + std::to_string(order);
        return rep;
    }
    for (size_t i = 0; i < table.size(); ++i) {
        if (table[i] < 0 || table[i] >= order) {
            rep.structural = "entry (" + std::to_string(i / order) + "," + std::to_string(i % order) +
                             ") = " + std::to_string(table[i]) + " out of range";
            return rep;
        }
    }

    auto at = [&](Element x, Element y) { return table[x * order + y]; };

    // BCK1: [(x*y)*(x*z)]*(z*y) = 0
    for (Element x = 0; x < order; ++x)
        for (Element y = 0; y < order; ++y)
            for (Element z = 0; z < order; ++z)
                if (at(at(at(x, y), at(x, z)), at(z, y)) != 0) {
                    rep.violations.push_back({Axiom::BCK1, {x, y, z}});
                    goto bck2;
                }
bck2:
    // BCK2: [x*(x*y)]*y = 0
    for (Element x = 0; x < order; ++x)
        for (Element y = 0; y < order; ++y)
            if (at(at(x, at(x, y)), y) != 0) {
                rep.violations.push_back({Axiom::BCK2, {x, y}});
                goto bck3;
            }
bck3:
    // BCK3: x*x = 0
    for (Element x = 0; x < order; ++x)
        if (at(x, x) != 0) {
            rep.violations.push_back({Axiom::BCK3, {x}});
            break;
        }
    // BCK4: 0*x = 0
    for (Element x = 0; x < order; ++x)
        if (at(0, x) != 0) {
            rep.violations.push_back({Axiom::BCK4, {x}});
            break;
        }
    // BCK5: x*y = 0 and y*x = 0 imply x = y
    for (Element x = 0; x < order; ++x)
        for (Element y = 0; y < order; ++y)
            if (x != y && at(x, y) == 0 && at(y, x) == 0) {
                rep.violations.push_back({Axiom::BCK5, {x, y}});
                return rep;
            }
    return rep;
}

InvalidTable::InvalidTable(ValidationReport r)
    : std::invalid_argument(r.describe()), report(std::move(r)) {}

Algebra Algebra::from_table(int order, std::vector<Element> table) {
    ValidationReport rep = validate_table(order, table);
    if (!rep.valid()) throw InvalidTable(std::move(rep));
    return Algebra(order, std::move(table));
}

Element Algebra::weighted_commutator(std::span<const Element> xs) const {
    if (xs.empty()) throw std::invalid_argument("weighted_commutator: empty element list");
    Element v = xs[0];
    for (size_t i = 1; i < xs.size(); ++i) v = commutator(v, xs[i]);
    return v;
}

ElementSet Algebra::maximal_elements() const {
    ElementSet m(order_);
    for (Element x = 0; x < order_; ++x) {
        bool maximal = true;
        for (Element y = 0; y < order_ && maximal; ++y)
            if (y != x && leq(x, y)) maximal = false;
        if (maximal) m.insert(x);
    }
    return m;
}

bool Algebra::is_commutative() const {
    for (Element x = 0; x < order_; ++x)
        for (Element y = x + 1; y < order_; ++y)
            if (meet(x, y) != meet(y, x)) return false;
    return true;
}

ElementSet Algebra::commuting_center() const {
    ElementSet c(order_);
    for (Element x = 0; x < order_; ++x) {
        bool central = true;
        for (Element y = 0; y < order_ && central; ++y)
            if (meet(x, y) != meet(y, x)) central = false;
        if (central) c.insert(x);
    }
    return c;
}

}  // namespace bck
