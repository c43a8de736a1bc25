#include "bck/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "bck/closure.hpp"

namespace bck {

const char* series_kind_name(SeriesKind k) {
    switch (k) {
        case SeriesKind::derived: return "derived";
        case SeriesKind::lower_central: return "lower-central";
        case SeriesKind::upper_central: return "upper-central";
    }
    return "?";
}

namespace {

// Iterate term -> step(term) until two consecutive terms agree. Lemma-driven
// strict descent/ascent guarantees stabilization within order(a) steps; the
// cap turns a nontermination bug into a loud failure.
template <typename Step>
std::vector<ElementSet> run_chain(const Algebra& a, ElementSet first, Step step) {
    std::vector<ElementSet> terms{std::move(first)};
    const int cap = a.order() + 1;
    for (int i = 0; i <= cap; ++i) {
        ElementSet next = step(terms.back());
        bool done = next == terms.back();
        terms.push_back(std::move(next));
        if (done) return terms;
    }
    throw std::logic_error("series failed to stabilize within order+1 steps");
}

std::optional<int> first_index(const std::vector<ElementSet>& terms, const ElementSet& target) {
    if (terms.back() != target) return std::nullopt;
    for (size_t i = 0; i < terms.size(); ++i)
        if (terms[i] == target) return static_cast<int>(i);
    return std::nullopt;
}

}  // namespace

SeriesReport derived_series(const Algebra& a) {
    auto terms = run_chain(a, a.carrier(),
                           [&](const ElementSet& t) { return commutator_subalgebra(a, t, t); });
    SeriesReport r{SeriesKind::derived, std::move(terms), true, {}};
    r.class_value = first_index(r.terms, ElementSet::singleton(a.order(), 0));
    return r;
}

SeriesReport lower_central_series(const Algebra& a) {
    auto carrier = a.carrier();
    auto terms = run_chain(a, carrier,
                           [&](const ElementSet& t) { return commutator_subalgebra(a, t, carrier); });
    SeriesReport r{SeriesKind::lower_central, std::move(terms), true, {}};
    r.class_value = first_index(r.terms, ElementSet::singleton(a.order(), 0));
    return r;
}

std::vector<ElementSet> upper_central_raw_sets(const Algebra& a) {
    const int n = a.order();
    std::vector<ElementSet> sets{ElementSet::singleton(n, 0)};
    const int cap = n + 1;
    for (int i = 0; i <= cap; ++i) {
        ElementSet next(n);
        for (Element x = 0; x < n; ++x) {
            bool in = true;
            for (Element y = 0; y < n && in; ++y)
                if (!sets.back().contains(a.commutator(x, y))) in = false;
            if (in) next.insert(x);
        }
        bool done = next == sets.back();
        sets.push_back(std::move(next));
        if (done) return sets;
    }
    throw std::logic_error("upper central raw sets failed to stabilize");
}

SeriesReport upper_central_series(const Algebra& a) {
    SeriesReport r{SeriesKind::upper_central, {}, true, {}};
    for (const ElementSet& s : upper_central_raw_sets(a)) r.terms.push_back(subalgebra_closure(a, s));
    // the raw sets may stabilize one step after the closures do; trim so the
    // report ends at the first repeated term
    while (r.terms.size() >= 3 && r.terms[r.terms.size() - 2] == r.terms[r.terms.size() - 3])
        r.terms.pop_back();
    r.class_value = first_index(r.terms, a.carrier());
    return r;
}

ElementSet raw_pseudo_center(const Algebra& a) { return upper_central_raw_sets(a)[1]; }

ElementSet pseudo_center(const Algebra& a) { return subalgebra_closure(a, raw_pseudo_center(a)); }

int nilpotence_class(const Algebra& a) {
    auto lower = lower_central_series(a).class_value;
    auto upper = upper_central_series(a).class_value;
    if (!lower || !upper || *lower != *upper)
        throw std::logic_error("upper and lower central series disagree; implementation bug");
    return *lower;
}

int solvability_class(const Algebra& a) {
    auto c = derived_series(a).class_value;
    if (!c) throw std::logic_error("derived series did not reach {0} on a finite algebra");
    return *c;
}

BckClassCheck is_in_bck_c(const Algebra& a, int c) {
    if (c < 1) throw std::invalid_argument("is_in_bck_c: c must be >= 1");
    const int n = a.order();
    // layer k holds the set of weight-k commutator values; parents[k][v] is
    // one (previous value, tail element) pair producing v, for witnesses
    std::vector<ElementSet> layers{ElementSet::full(n)};
    std::vector<std::vector<std::pair<Element, Element>>> parents{{}};
    for (int k = 1; k <= c; ++k) {
        ElementSet next(n);
        std::vector<std::pair<Element, Element>> par(n, {-1, -1});
        layers.back().for_each([&](Element v) {
            for (Element y = 0; y < n; ++y) {
                Element w = a.commutator(v, y);
                if (!next.contains(w)) {
                    next.insert(w);
                    par[w] = {v, y};
                }
            }
        });
        layers.push_back(std::move(next));
        parents.push_back(std::move(par));
    }
    const ElementSet& top = layers.back();
    if (top == ElementSet::singleton(n, 0)) return {true, {}};
    Element bad = 0;
    for (Element v = n - 1; v >= 1; --v)
        if (top.contains(v)) {
            bad = v;
            break;
        }
    std::vector<Element> witness;
    Element v = bad;
    for (int k = c; k >= 1; --k) {
        auto [prev, y] = parents[k][v];
        witness.push_back(y);
        v = prev;
    }
    witness.push_back(v);
    std::reverse(witness.begin(), witness.end());
    return {false, std::move(witness)};
}

}  // namespace bck
