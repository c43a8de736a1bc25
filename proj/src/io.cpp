#include "bck/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace bck {

ParseError::ParseError(std::string msg, int line_, int column_)
    : std::runtime_error("line " + std::to_string(line_) +
                         (column_ ? ", token " + std::to_string(column_) : std::string()) + ": " +
                         msg),
      line(line_),
      column(column_) {}

namespace {

bool is_index_token(const std::string& tok, int n, int& value) {
    if (tok.empty() || tok.size() > 9) return false;
    for (char c : tok)
        if (!isdigit(static_cast<unsigned char>(c))) return false;
    if (tok.size() > 1 && tok[0] == '0') return false;  // no leading zeros
    value = std::stoi(tok);
    return value >= 0 && value < n;
}

}  // namespace

RawTable parse_table(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next_content_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos || line[i] == '#') continue;
            return true;
        }
        return false;
    };

    if (!next_content_line()) throw ParseError("missing order line", lineno + 1);
    int n = 0;
    {
        std::istringstream ls(line);
        std::string tok, extra;
        ls >> tok;
        if (ls >> extra) throw ParseError("order line must hold a single integer", lineno);
        try {
            size_t pos = 0;
            n = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ParseError("bad order '" + tok + "'", lineno);
        }
        if (n < 1) throw ParseError("order must be at least 1", lineno);
        if (n > 255) throw ParseError("order above the supported maximum 255", lineno);
    }

    std::vector<std::vector<std::string>> rows;
    for (int r = 0; r < n; ++r) {
        if (!next_content_line())
            throw ParseError("expected " + std::to_string(n) + " table rows, got " +
                                 std::to_string(r),
                             lineno + 1);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (static_cast<int>(toks.size()) != n)
            throw ParseError("row has " + std::to_string(toks.size()) + " entries, expected " +
                                 std::to_string(n),
                             lineno, static_cast<int>(toks.size()));
        rows.push_back(std::move(toks));
    }

    RawTable raw;
    raw.order = n;
    raw.entries.resize(n * n);

    bool all_indices = true;
    for (const auto& r : rows)
        for (const auto& tok : r) {
            int v;
            if (!is_index_token(tok, n, v)) {
                all_indices = false;
                break;
            }
        }

    if (all_indices) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                int v;
                is_index_token(rows[x][y], n, v);
                raw.entries[x * n + y] = v;
            }
        for (int i = 0; i < n; ++i) raw.labels.push_back(std::to_string(i));
        return raw;
    }

    // arbitrary labels: locate the constant element by its all-equal row and
    // identity column, then relabel
    int zero_row = -1;
    std::vector<std::string> label_of;
    for (int r = 0; r < n; ++r) {
        if (!std::all_of(rows[r].begin(), rows[r].end(),
                         [&](const std::string& t) { return t == rows[r][0]; }))
            continue;
        // candidate: column r must list each row's own label
        std::vector<std::string> cand(n);
        for (int x = 0; x < n; ++x) cand[x] = rows[x][r];
        if (cand[r] != rows[r][0]) continue;
        std::vector<std::string> sorted = cand;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
        bool tokens_ok = true;
        for (const auto& row : rows)
            for (const auto& t : row)
                if (!std::binary_search(sorted.begin(), sorted.end(), t)) tokens_ok = false;
        if (!tokens_ok) continue;
        if (zero_row >= 0) throw ParseError("ambiguous constant element", 0);
        zero_row = r;
        label_of = std::move(cand);
    }
    if (zero_row < 0)
        throw ParseError("cannot identify the constant element (no all-equal row with identity column)",
                         0);

    std::map<std::string, int> index_of;
    {
        std::vector<std::string> others;
        for (int x = 0; x < n; ++x)
            if (x != zero_row) others.push_back(label_of[x]);
        std::sort(others.begin(), others.end());
        index_of[label_of[zero_row]] = 0;
        for (int i = 0; i < n - 1; ++i) index_of[others[i]] = i + 1;
    }
    raw.labels.resize(n);
    for (const auto& [label, idx] : index_of) raw.labels[idx] = label;
    std::vector<int> row_index(n);
    for (int x = 0; x < n; ++x) row_index[x] = index_of[label_of[x]];
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            raw.entries[row_index[x] * n + row_index[y]] = index_of[rows[x][y]];
    return raw;
}

RawTable load_raw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    return parse_table(in);
}

Algebra load_algebra(const std::string& path) {
    RawTable raw = load_raw(path);
    return Algebra::from_table(raw.order, std::move(raw.entries));
}

std::string format_table(const Algebra& a) {
    std::ostringstream os;
    const int n = a.order();
    os << n << "\n";
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) os << (y ? " " : "") << a.op(x, y);
        os << "\n";
    }
    return os.str();
}

void save_algebra(const std::string& path, const Algebra& a) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << format_table(a);
}

std::string format_set(const ElementSet& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](Element x) {
        if (!first) out += ",";
        out += std::to_string(x);
        first = false;
    });
    return out + "}";
}

std::string catalog_line(const SweepRecord& r) {
    static const char digits[] = "0123456789abcdefghijklmnopqrstuvwxyz";
    std::string canon;
    for (char c : r.canon.bytes) canon += digits[static_cast<unsigned char>(c)];
    std::ostringstream os;
    os << r.order << "\t" << canon << "\t" << r.nilpotence_class << "\t" << r.solvability_class
       << "\t" << (r.commutative ? 1 : 0);
    return os.str();
}

}  // namespace bck
