#include "bck/wronski.hpp"

#include <algorithm>
#include <stdexcept>

namespace bck {

std::string WronskiElement::str() const {
    switch (family) {
        case Family::nat: return std::to_string(index);
        case Family::a: return "a" + std::to_string(index);
        case Family::b: return "b" + std::to_string(index);
    }
    return "?";
}

namespace {

void check_window(WronskiElement x, int cap) {
    if (x.index < 0) throw std::invalid_argument("wronski: negative index");
    if (x.index > cap)
        throw std::invalid_argument("wronski: index " + std::to_string(x.index) +
                                    " exceeds the evaluation window (" + std::to_string(cap) + ")");
}

// The cap applies to query operands only; intermediate indices stay bounded
// by 2*cap+2, so the internal evaluation is unchecked.
WronskiElement op_unchecked(WronskiElement x, WronskiElement y) {
    using F = WronskiElement::Family;
    // mixed pairs rewrite in one step into the same-tower clause
    if (x.family == F::a && y.family == F::b) y = WronskiElement::a(y.index + 1);
    else if (x.family == F::b && y.family == F::a) y = WronskiElement::b(y.index + 1);

    if (x.family == F::nat && y.family == F::nat)
        return WronskiElement::nat(std::max(0, x.index - y.index));
    if (x.family == F::nat) return WronskiElement::nat(0);       // n*a_m = n*b_m = 0
    if (y.family == F::nat)                                      // a_n*m, b_n*m
        return {x.family, x.index + y.index};
    return WronskiElement::nat(std::max(0, y.index - x.index));  // a_n*a_m, b_n*b_m
}

WronskiElement meet_unchecked(WronskiElement x, WronskiElement y) {
    return op_unchecked(y, op_unchecked(y, x));  // y*(y*x)
}

}  // namespace

WronskiElement wronski_op(WronskiElement x, WronskiElement y, int cap) {
    check_window(x, cap);
    check_window(y, cap);
    return op_unchecked(x, y);
}

WronskiElement wronski_meet(WronskiElement x, WronskiElement y, int cap) {
    check_window(x, cap);
    check_window(y, cap);
    return meet_unchecked(x, y);
}

WronskiElement wronski_commutator(WronskiElement x, WronskiElement y, int cap) {
    check_window(x, cap);
    check_window(y, cap);
    return op_unchecked(meet_unchecked(x, y), meet_unchecked(y, x));
}

}  // namespace bck
