#include "bck/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "bck/closure.hpp"
#include "bck/series.hpp"

namespace bck {

namespace {

std::string serialize(int n, const std::vector<Element>& table) {
    std::string s(table.size(), '\0');
    for (size_t i = 0; i < table.size(); ++i) s[i] = static_cast<char>(table[i]);
    (void)n;
    return s;
}

}  // namespace

CanonicalForm canonical_form(const Algebra& a) {
    const int n = a.order();
    if (n > kEnumerationCeiling + 1)
        throw std::invalid_argument("canonical_form: order too large for permutation minimum");
    std::vector<Element> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best = serialize(n, a.table());
    std::string cur(n * n, '\0');
    while (std::next_permutation(perm.begin() + 1, perm.end())) {
        for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y)
                cur[perm[x] * n + perm[y]] = static_cast<char>(perm[a.op(x, y)]);
        if (cur < best) best = cur;
    }
    return {n, std::move(best)};
}

Algebra chain_algebra(int n) {
    if (n < 0) throw std::invalid_argument("chain_algebra: n must be >= 0");
    const int m = n + 1;
    std::vector<Element> table(m * m, 0);
    for (Element x = 0; x < m; ++x)
        for (Element y = 0; y < m; ++y) table[x * m + y] = x <= y ? 0 : x;
    return Algebra::from_table(m, std::move(table));
}

namespace {

// Backtracking enumeration of all valid Cayley tables. Row 0, column 0 and
// the diagonal are forced; the free cells fill row by row. After each
// assignment every BCK1/BCK2/BCK5 instance whose cells are all assigned is
// rechecked (lazily skipping unresolved lookups), which keeps the search
// sound while pruning early.
struct Search {
    int n;
    std::vector<int> t;  // n*n, -1 = unassigned
    std::vector<std::pair<int, int>> cells;
    std::vector<std::string>* out;

    explicit Search(int order) : n(order), t(order * order, -1) {
        for (int x = 0; x < n; ++x) {
            t[x * n] = x;      // x*0 = x
            t[x * n + x] = 0;  // x*x = 0
        }
        for (int y = 1; y < n; ++y) t[y] = 0;  // 0*y = 0
        for (int x = 1; x < n; ++x)
            for (int y = 1; y < n; ++y)
                if (x != y) cells.push_back({x, y});
    }

    int at(int x, int y) const { return t[x * n + y]; }

    bool consistent() const {
        for (int x = 1; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                int a = at(x, y);
                if (a < 0) continue;
                if (x != y && a == 0 && at(y, x) == 0) return false;  // BCK5
                int u = at(x, a);
                if (u >= 0 && at(u, y) > 0) return false;  // BCK2
                for (int z = 0; z < n; ++z) {
                    int b = at(x, z);
                    if (b < 0) continue;
                    int c = at(a, b);
                    if (c < 0) continue;
                    int d = at(z, y);
                    if (d < 0) continue;
                    if (at(c, d) > 0) return false;  // BCK1
                }
            }
        return true;
    }

    void run(size_t i) {
        if (i == cells.size()) {
            emit();
            return;
        }
        auto [x, y] = cells[i];
        for (int v = 0; v < n; ++v) {
            if (at(v, x) > 0) continue;  // x*y <= x must remain possible
            t[x * n + y] = v;
            if (consistent()) run(i + 1);
        }
        t[x * n + y] = -1;
    }

    void emit() {
        std::vector<Element> table(t.begin(), t.end());
        Algebra a = Algebra::from_table(n, table);  // recheck from first principles
        CanonicalForm cf = canonical_form(a);
        std::string raw = serialize(n, table);
        if (raw == cf.bytes) out->push_back(std::move(raw));  // one per class
    }

    // Assign the row-1 cells to every consistent prefix and hand each
    // resulting subtree to tasks; used for the parallel path.
    void prefixes(size_t i, size_t depth, std::vector<std::vector<int>>& acc) {
        if (i == depth) {
            acc.push_back(t);
            return;
        }
        auto [x, y] = cells[i];
        for (int v = 0; v < n; ++v) {
            if (at(v, x) > 0) continue;
            t[x * n + y] = v;
            if (consistent()) prefixes(i + 1, depth, acc);
        }
        t[x * n + y] = -1;
    }
};

}  // namespace

std::vector<Algebra> enumerate_bck(int order, int jobs) {
    if (order < 1) throw std::invalid_argument("enumerate_bck: order must be >= 1");
    if (order > kEnumerationCeiling)
        throw std::invalid_argument("enumerate_bck: order " + std::to_string(order) +
                                    " beyond the practical ceiling " +
                                    std::to_string(kEnumerationCeiling));
    std::vector<std::string> forms;
    if (order == 1) {
        forms.push_back(std::string(1, '\0'));
    } else if (jobs <= 1) {
        Search s(order);
        s.out = &forms;
        s.run(0);
    } else {
        // partition by the assignment of row 1 (the first order-2 cells)
        Search seed(order);
        size_t depth = std::min<size_t>(order - 2, seed.cells.size());
        std::vector<std::vector<int>> starts;
        seed.prefixes(0, depth, starts);
        std::vector<std::vector<std::string>> results(starts.size());
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            for (size_t k = next.fetch_add(1); k < starts.size(); k = next.fetch_add(1)) {
                Search s(order);
                s.t = starts[k];
                s.out = &results[k];
                s.run(depth);
            }
        };
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        for (auto& r : results) forms.insert(forms.end(), r.begin(), r.end());
    }
    std::sort(forms.begin(), forms.end());
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
    std::vector<Algebra> out;
    out.reserve(forms.size());
    for (const std::string& f : forms) {
        std::vector<Element> table(f.begin(), f.end());
        out.push_back(Algebra::from_table(order, std::move(table)));
    }
    return out;
}

std::vector<SweepRecord> sweep(int max_order, int jobs) {
    std::vector<SweepRecord> records;
    for (int n = 1; n <= max_order; ++n) {
        for (const Algebra& a : enumerate_bck(n, jobs)) {
            SweepRecord r;
            r.canon = canonical_form(a);
            r.order = n;
            // nilpotence class comes from the lower series (the fastest
            // descending central series); every finite algebra must be
            // nilpotent and solvable with solvability class no larger
            auto lower = lower_central_series(a).class_value;
            auto solv = derived_series(a).class_value;
            if (!lower || !solv || *solv > *lower) {
                std::string rows;
                for (Element x = 0; x < n; ++x) {
                    for (Element y = 0; y < n; ++y)
                        rows += std::to_string(a.op(x, y)) + (y + 1 < n ? " " : "");
                    rows += "\n";
                }
                throw std::logic_error("sweep: non-nilpotent or non-solvable algebra found:\n" + rows);
            }
            r.nilpotence_class = *lower;
            r.solvability_class = *solv;
            r.commutative = a.is_commutative();
            r.pseudo_center_size = pseudo_center(a).count();
            r.derived_ideal_size = derived_ideal(a).count();
            records.push_back(std::move(r));
        }
    }
    return records;
}

}  // namespace bck
