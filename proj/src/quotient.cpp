#include "bck/quotient.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bck {

NotAnIdeal::NotAnIdeal(IdealFailure f)
    : std::invalid_argument("not an ideal: " + f.describe()), failure(f) {}

QuotientAlgebra quotient(const Algebra& a, const ElementSet& i) {
    if (auto fail = ideal_failure(a, i)) throw NotAnIdeal(*fail);
    const int n = a.order();

    std::vector<int> class_of(n, -1);
    std::vector<Element> reps;
    for (Element x = 0; x < n; ++x) {
        for (size_t j = 0; j < reps.size(); ++j)
            if (i.contains(a.op(x, reps[j])) && i.contains(a.op(reps[j], x))) {
                class_of[x] = static_cast<int>(j);
                break;
            }
        if (class_of[x] < 0) {
            class_of[x] = static_cast<int>(reps.size());
            reps.push_back(x);  // x is minimal in its class: scanning ascending
        }
    }

    const int m = static_cast<int>(reps.size());
    std::vector<Element> table(m * m);
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) table[p * m + q] = class_of[a.op(reps[p], reps[q])];

    // representative independence: C_x * C_y = C_{x*y} for every pair, not
    // just the chosen reps
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            if (class_of[a.op(x, y)] != table[class_of[x] * m + class_of[y]])
                throw std::logic_error("quotient operation not well-defined");

    return {Algebra::from_table(m, std::move(table)), std::move(class_of), std::move(reps), i};
}

QuotientAlgebra commutativization(const Algebra& a) { return quotient(a, derived_ideal(a)); }

std::optional<HomFailure> hom_failure(const Algebra& src, const Algebra& dst,
                                      std::span<const Element> map) {
    const int n = src.order();
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            if (map[src.op(x, y)] != dst.op(map[x], map[y])) return HomFailure{x, y};
    return std::nullopt;  // map(0)=0 is covered by the (0,0) instance
}

Morphism make_morphism(Algebra src, Algebra dst, std::vector<Element> map) {
    if (map.size() != static_cast<size_t>(src.order()))
        throw std::invalid_argument("morphism map must be total on the source carrier");
    for (Element v : map)
        if (v < 0 || v >= dst.order())
            throw std::invalid_argument("morphism map value out of target range");
    Morphism f{std::move(src), std::move(dst), std::move(map), false, false,
               ElementSet(0)};
    check_homomorphism(f);
    return f;
}

bool check_homomorphism(Morphism& f) {
    f.is_hom = !hom_failure(f.source, f.target, f.map);
    ElementSet image(f.target.order());
    for (Element v : f.map) image.insert(v);
    f.is_surjective = image == ElementSet::full(f.target.order());
    f.kernel = ElementSet(f.source.order());
    for (Element x = 0; x < f.source.order(); ++x)
        if (f.map[x] == 0) f.kernel.insert(x);
    return f.is_hom;
}

Morphism natural_projection(const Algebra& a, const QuotientAlgebra& q) {
    std::vector<Element> map(q.class_of.begin(), q.class_of.end());
    return make_morphism(a, q.algebra, std::move(map));
}

Morphism induced_commutativization_map(const Morphism& f) {
    if (!f.is_hom)
        throw std::invalid_argument("induced_commutativization_map requires a homomorphism");
    QuotientAlgebra qa = commutativization(f.source);
    QuotientAlgebra qb = commutativization(f.target);
    const int m = qa.algebra.order();
    std::vector<Element> phi(m);
    for (int j = 0; j < m; ++j) phi[j] = qb.class_of[f.map[qa.representative[j]]];
    // f(DI(A)) inside DI(B) makes this representative-independent; verify
    for (Element x = 0; x < f.source.order(); ++x)
        if (qb.class_of[f.map[x]] != phi[qa.class_of[x]])
            throw std::logic_error("induced commutativization map not well-defined");
    Morphism g = make_morphism(qa.algebra, qb.algebra, std::move(phi));
    if (!g.is_hom) throw std::logic_error("induced commutativization map is not a homomorphism");
    return g;
}

namespace {

constexpr int kHomEnumerationLimit = 6;

// all maps a -> c fixing 0, as map vectors, in lexicographic order
template <typename Visit>
void for_each_zero_fixing_map(int n, int m, Visit&& visit) {
    std::vector<Element> map(n, 0);
    while (true) {
        visit(map);
        int i = n - 1;
        while (i >= 1 && map[i] == m - 1) map[i--] = 0;
        if (i < 1) break;
        ++map[i];
    }
}

}  // namespace

std::vector<std::vector<Element>> all_homomorphisms(const Algebra& a, const Algebra& c) {
    if (a.order() > kHomEnumerationLimit || c.order() > kHomEnumerationLimit)
        throw std::invalid_argument(
            "all_homomorphisms: brute-force enumeration limited to orders <= " +
            std::to_string(kHomEnumerationLimit));
    std::vector<std::vector<Element>> homs;
    if (a.order() == 1) {
        homs.push_back({0});
        return homs;
    }
    for_each_zero_fixing_map(a.order(), c.order(), [&](const std::vector<Element>& map) {
        if (!hom_failure(a, c, map)) homs.push_back(map);
    });
    return homs;
}

bool universal_property_check(const Algebra& a, const Algebra& c) {
    if (!c.is_commutative())
        throw std::invalid_argument("universal_property_check: target must be commutative");
    QuotientAlgebra q = commutativization(a);
    auto phis = all_homomorphisms(a, c);
    auto psis = all_homomorphisms(q.algebra, c);
    for (const auto& phi : phis) {
        int factorizations = 0;
        for (const auto& psi : psis) {
            bool matches = true;
            for (Element x = 0; x < a.order() && matches; ++x)
                if (psi[q.class_of[x]] != phi[x]) matches = false;
            if (matches) ++factorizations;
        }
        if (factorizations != 1) return false;
    }
    return true;
}

Algebra direct_product(const Algebra& a, const Algebra& b) {
    const int na = a.order(), nb = b.order(), n = na * nb;
    std::vector<Element> table(n * n);
    for (Element x1 = 0; x1 < na; ++x1)
        for (Element y1 = 0; y1 < nb; ++y1)
            for (Element x2 = 0; x2 < na; ++x2)
                for (Element y2 = 0; y2 < nb; ++y2)
                    table[(x1 * nb + y1) * n + (x2 * nb + y2)] =
                        a.op(x1, x2) * nb + b.op(y1, y2);
    return Algebra::from_table(n, std::move(table));
}

namespace {

// Per-element invariants: height in the order, in/out-degree, and the
// multiplicity profiles of the element's row and column (the multiset of
// how often each value occurs; raw values are not invariant under
// relabeling, their multiplicities are).
struct Signature {
    int height = 0, outdeg = 0, indeg = 0;
    std::vector<int> row_profile, col_profile;
    auto operator<=>(const Signature&) const = default;
};

std::vector<int> profile(const std::vector<int>& counts) {
    std::vector<int> p;
    for (int c : counts)
        if (c) p.push_back(c);
    std::sort(p.begin(), p.end());
    return p;
}

std::vector<Signature> signatures(const Algebra& a) {
    const int n = a.order();
    std::vector<int> height(n, 0);
    for (bool changed = true; changed;) {
        changed = false;
        for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y)
                if (x != y && a.leq(x, y) && height[y] < height[x] + 1) {
                    height[y] = height[x] + 1;
                    changed = true;
                }
    }
    std::vector<Signature> sig(n);
    for (Element x = 0; x < n; ++x) {
        sig[x].height = height[x];
        std::vector<int> row_counts(n, 0), col_counts(n, 0);
        for (Element y = 0; y < n; ++y) {
            if (y != x && a.leq(x, y)) ++sig[x].outdeg;
            if (y != x && a.leq(y, x)) ++sig[x].indeg;
            ++row_counts[a.op(x, y)];
            ++col_counts[a.op(y, x)];
        }
        sig[x].row_profile = profile(row_counts);
        sig[x].col_profile = profile(col_counts);
    }
    return sig;
}

bool extend_iso(const Algebra& a, const Algebra& b, const std::vector<Signature>& sa,
                const std::vector<Signature>& sb, std::vector<Element>& map,
                std::vector<bool>& used, Element x) {
    const int n = a.order();
    if (x == n) return !hom_failure(a, b, map);
    for (Element u = (x == 0 ? 0 : 1); u < (x == 0 ? 1 : n); ++u) {
        if (used[u] || sa[x] != sb[u]) continue;
        map[x] = u;
        bool ok = true;
        for (Element y = 0; y <= x && ok; ++y) {
            Element p = a.op(x, y), q = a.op(y, x);
            if (p <= x && map[p] != b.op(u, map[y])) ok = false;
            if (ok && q <= x && map[q] != b.op(map[y], u)) ok = false;
        }
        if (!ok) continue;
        used[u] = true;
        if (extend_iso(a, b, sa, sb, map, used, x + 1)) return true;
        used[u] = false;
    }
    return false;
}

}  // namespace

std::optional<Morphism> is_isomorphic(const Algebra& a, const Algebra& b) {
    if (a.order() != b.order()) return std::nullopt;
    auto sa = signatures(a), sb = signatures(b);
    auto sorted_a = sa, sorted_b = sb;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b) return std::nullopt;
    std::vector<Element> map(a.order(), 0);
    std::vector<bool> used(a.order(), false);
    if (!extend_iso(a, b, sa, sb, map, used, 0)) return std::nullopt;
    return make_morphism(a, b, std::move(map));
}

}  // namespace bck
