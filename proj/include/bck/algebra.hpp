#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bck/element_set.hpp"

namespace bck {

enum class Axiom { BCK1, BCK2, BCK3, BCK4, BCK5 };
const char* axiom_name(Axiom a);

/// One violated axiom with its lexicographically first witness.
/// Witness arity: BCK1 -> (x,y,z); BCK2, BCK5 -> (x,y); BCK3, BCK4 -> (x).
struct Violation {
    Axiom axiom;
    std::vector<Element> witness;
};

struct ValidationReport {
    /// Set when the table is malformed (non-square, out-of-range entry);
    /// distinct from axiom violations.
    std::optional<std::string> structural;
    std::vector<Violation> violations;
    bool valid() const { return !structural && violations.empty(); }
    std::string describe() const;
};

/// Checks (BCK1)-(BCK5) by brute force over all triples/pairs.
/// Reports every violated axiom, each with its first witness in
/// lexicographic order.
ValidationReport validate_table(int order, std::span<const Element> table);

struct InvalidTable : std::invalid_argument {
    explicit InvalidTable(ValidationReport r);
    ValidationReport report;
};

/// A finite BCK-algebra: an order-n Cayley table with the constant at
/// index 0. Construction refuses tables that fail validate_table, so every
/// live instance satisfies the axioms. Immutable; all operations are pure.
class Algebra {
public:
    /// Throws InvalidTable if the table is malformed or violates an axiom.
    static Algebra from_table(int order, std::vector<Element> table);
    static Algebra trivial() { return Algebra(1, {0}); }

    int order() const { return order_; }

    Element op(Element x, Element y) const {
        assert(x >= 0 && x < order_ && y >= 0 && y < order_);
        return table_[x * order_ + y];
    }

    /// x <= y iff x*y = 0; partial order with least element 0.
    bool leq(Element x, Element y) const { return op(x, y) == 0; }

    /// x meet y = y*(y*x); a lower bound of x and y (the glb exactly when
    /// x meet y = y meet x).
    Element meet(Element x, Element y) const { return op(y, op(y, x)); }

    /// [x,y] = (x meet y)*(y meet x).
    Element commutator(Element x, Element y) const { return op(meet(x, y), meet(y, x)); }

    /// Left-normed fold [x1,...,xc] = [[x1,...,x_{c-1}], xc]; a single
    /// element is returned unchanged. Empty input is a usage error.
    Element weighted_commutator(std::span<const Element> xs) const;

    ElementSet carrier() const { return ElementSet::full(order_); }

    /// M = {x | no y != x with x <= y}.
    ElementSet maximal_elements() const;

    /// True iff meet is symmetric on all pairs.
    bool is_commutative() const;

    /// {x | x meet y = y meet x for all y}: the elements that genuinely
    /// commute with everything. A subset of the raw pseudo-center.
    ElementSet commuting_center() const;

    const std::vector<Element>& table() const { return table_; }

    bool operator==(const Algebra&) const = default;

private:
    Algebra(int order, std::vector<Element> table)
        : order_(order), table_(std::move(table)) {}

    int order_;
    std::vector<Element> table_;
};

}  // namespace bck
