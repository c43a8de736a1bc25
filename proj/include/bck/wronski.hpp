#pragma once

#include <compare>
#include <string>

#include "bck/algebra.hpp"

namespace bck {

/// Element of the infinite algebra U on N ∪ {a_n} ∪ {b_n}. The natural
/// number 0 is the BCK constant.
struct WronskiElement {
    enum class Family { nat, a, b };
    Family family = Family::nat;
    int index = 0;

    static WronskiElement nat(int i) { return {Family::nat, i}; }
    static WronskiElement a(int i) { return {Family::a, i}; }
    static WronskiElement b(int i) { return {Family::b, i}; }
    bool is_zero() const { return family == Family::nat && index == 0; }
    std::string str() const;
    bool operator==(const WronskiElement&) const = default;
};

inline constexpr int kWronskiDefaultCap = 64;

/// The product on U:
///   n*m = max{0, n-m},  n*a_m = n*b_m = 0,
///   a_n*m = a_{n+m},    b_n*m = b_{n+m},
///   a_n*a_m = b_n*b_m = max{0, m-n},
///   a_n*b_m = a_n*a_{m+1},  b_n*a_m = b_n*b_{m+1}.
/// The two mixed clauses are single rewriting steps into the same-family
/// clause. Indices of the operands must not exceed cap (the algebra is
/// infinite; only a finite window is evaluated); intermediate indices may
/// exceed it by the +1 of the rewrite.
WronskiElement wronski_op(WronskiElement x, WronskiElement y, int cap = kWronskiDefaultCap);

WronskiElement wronski_meet(WronskiElement x, WronskiElement y, int cap = kWronskiDefaultCap);

/// [x,y] on U, folded through wronski_op via the meet definition. Matches
///   [a_n, b_m] = [b_n, a_m] = 0 / 1 / 2  for n > m / n = m / n < m
/// and vanishes on every non-mixed pair.
WronskiElement wronski_commutator(WronskiElement x, WronskiElement y,
                                  int cap = kWronskiDefaultCap);

}  // namespace bck
