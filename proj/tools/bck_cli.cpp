// Command-line front end for finite BCK-algebra computations.
//
// Exit codes: 0 success; 1 domain-level negative (axiom violation, not
// isomorphic, non-ideal spec); 2 input error; 3 resource refusal.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bck/algebra.hpp"
#include "bck/closure.hpp"
#include "bck/enumerate.hpp"
#include "bck/io.hpp"
#include "bck/quotient.hpp"
#include "bck/series.hpp"
#include "bck/wronski.hpp"

namespace {

constexpr int kOk = 0, kNegative = 1, kInputError = 2, kRefusal = 3;

std::string join_chain(const std::vector<bck::ElementSet>& terms, const char* sep) {
    std::string out;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i) out += sep;
        out += bck::format_set(terms[i]);
    }
    return out;
}

int cmd_validate(const std::string& path) {
    bck::RawTable raw = bck::load_raw(path);
    bck::ValidationReport rep = bck::validate_table(raw.order, raw.entries);
    if (rep.structural) {
        std::cout << "structural error: " << *rep.structural << "\n";
        return kInputError;
    }
    if (rep.valid()) {
        std::cout << "PASS\n";
        return kOk;
    }
    for (const auto& v : rep.violations) {
        std::cout << bck::axiom_name(v.axiom) << " violated at ";
        if (v.witness.size() == 1) {
            std::cout << "x=" << v.witness[0];
        } else {
            std::cout << "(";
            for (size_t j = 0; j < v.witness.size(); ++j)
                std::cout << (j ? "," : "") << v.witness[j];
            std::cout << ")";
        }
        std::cout << "\n";
    }
    return kNegative;
}

int cmd_info(const std::string& path) {
    bck::Algebra a = bck::load_algebra(path);
    std::cout << "order = " << a.order() << "\n";
    std::cout << "commutative = " << (a.is_commutative() ? "yes" : "no") << "\n";
    std::cout << "A' = " << bck::format_set(bck::derived_subalgebra(a)) << "\n";
    std::cout << "DI = " << bck::format_set(bck::derived_ideal(a)) << "\n";
    std::cout << "Z1 = " << bck::format_set(bck::pseudo_center(a)) << "\n";
    std::cout << "raw Z1 set = " << bck::format_set(bck::raw_pseudo_center(a)) << "\n";
    std::cout << "center = " << bck::format_set(a.commuting_center()) << "\n";
    std::cout << "maximal = " << bck::format_set(a.maximal_elements()) << "\n";
    auto lower = bck::lower_central_series(a);
    auto upper = bck::upper_central_series(a);
    std::cout << "class = " << *lower.class_value;
    if (upper.class_value != lower.class_value)
        std::cout << " (upper central series stabilizes at " << *upper.class_value << ")";
    std::cout << "\n";
    std::cout << "solvability class = " << bck::solvability_class(a) << "\n";
    std::cout << "lower central: " << join_chain(lower.terms, " >= ") << "\n";
    std::cout << "upper central: " << join_chain(upper.terms, " <= ") << "\n";
    std::cout << "derived series: " << join_chain(bck::derived_series(a).terms, " >= ") << "\n";
    return kOk;
}

int cmd_series(const std::string& path, const std::string& kind) {
    bck::Algebra a = bck::load_algebra(path);
    auto print = [](const bck::SeriesReport& r, const char* sep) {
        std::cout << bck::series_kind_name(r.kind) << ": " << join_chain(r.terms, sep);
        if (r.class_value)
            std::cout << "  (class " << *r.class_value << ")";
        else
            std::cout << "  (stabilized without reaching the terminus)";
        std::cout << "\n";
    };
    if (kind == "all" || kind == "derived") print(bck::derived_series(a), " >= ");
    if (kind == "all" || kind == "lower") print(bck::lower_central_series(a), " >= ");
    if (kind == "all" || kind == "upper") print(bck::upper_central_series(a), " <= ");
    return kOk;
}

int cmd_quotient(const std::string& path, const std::string& spec, bool close) {
    bck::Algebra a = bck::load_algebra(path);
    bck::ElementSet gens(a.order());
    if (spec == "derived") {
        gens = bck::derived_ideal(a);
    } else {
        std::stringstream ss(spec);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            int v;
            try {
                size_t pos = 0;
                v = std::stoi(tok, &pos);
                if (pos != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                std::cerr << "error: bad element '" << tok << "' in ideal spec\n";
                return kInputError;
            }
            if (v < 0 || v >= a.order()) {
                std::cerr << "error: element " << v << " out of range\n";
                return kInputError;
            }
            gens.insert(v);
        }
    }
    bck::ElementSet ideal = close ? bck::ideal_closure(a, gens) : gens;
    if (auto fail = bck::ideal_failure(a, ideal)) {
        std::cerr << "error: " << bck::format_set(gens) << " is not an ideal: " << fail->describe()
                  << " (use --close to quotient by the generated ideal)\n";
        return kNegative;
    }
    bck::QuotientAlgebra q = bck::quotient(a, ideal);
    for (int j = 0; j < q.algebra.order(); ++j) {
        bck::ElementSet block(a.order());
        for (int x = 0; x < a.order(); ++x)
            if (q.class_of[x] == j) block.insert(x);
        std::cout << "# class " << j << " = " << bck::format_set(block) << "\n";
    }
    std::cout << bck::format_table(q.algebra);
    return kOk;
}

int cmd_product(const std::string& p1, const std::string& p2) {
    bck::Algebra a = bck::load_algebra(p1);
    bck::Algebra b = bck::load_algebra(p2);
    std::cout << bck::format_table(bck::direct_product(a, b));
    return kOk;
}

int cmd_iso(const std::string& p1, const std::string& p2) {
    bck::Algebra a = bck::load_algebra(p1);
    bck::Algebra b = bck::load_algebra(p2);
    auto iso = bck::is_isomorphic(a, b);
    if (!iso) {
        std::cout << "NOT ISOMORPHIC\n";
        return kNegative;
    }
    std::cout << "ISOMORPHIC\n";
    for (int x = 0; x < a.order(); ++x)
        std::cout << x << " -> " << iso->map[x] << "\n";
    return kOk;
}

int cmd_chain(int n) {
    if (n < 0) {
        std::cerr << "error: n must be >= 0\n";
        return kInputError;
    }
    if (n > 254) {
        std::cerr << "refused: chain length " << n << " beyond the supported file format\n";
        return kRefusal;
    }
    std::cout << bck::format_table(bck::chain_algebra(n));
    return kOk;
}

int cmd_wronski(const std::string& t1, int i1, const std::string& t2, int i2, int cap) {
    auto parse = [](const std::string& tag, int idx) -> bck::WronskiElement {
        if (tag == "n") return bck::WronskiElement::nat(idx);
        if (tag == "a") return bck::WronskiElement::a(idx);
        if (tag == "b") return bck::WronskiElement::b(idx);
        throw bck::ParseError("unknown family tag '" + tag + "' (use n, a or b)", 0);
    };
    bck::WronskiElement x = parse(t1, i1), y = parse(t2, i2);
    try {
        std::cout << bck::wronski_commutator(x, y, cap).str() << "\n";
    } catch (const std::invalid_argument& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kRefusal;
    }
    return kOk;
}

int cmd_enumerate(int n, const std::string& catalog, int jobs, int max_order) {
    if (n < 1) {
        std::cerr << "error: order must be >= 1\n";
        return kInputError;
    }
    if (n > max_order || n > bck::kEnumerationCeiling) {
        std::cerr << "refused: order " << n << " beyond the ceiling "
                  << std::min(max_order, bck::kEnumerationCeiling)
                  << " (raise with --max-order; hard ceiling " << bck::kEnumerationCeiling
                  << ")\n";
        return kRefusal;
    }
    auto records = bck::sweep(n, jobs);
    std::ofstream cat;
    if (!catalog.empty()) {
        cat.open(catalog);
        if (!cat) {
            std::cerr << "error: cannot write '" << catalog << "'\n";
            return kInputError;
        }
    }
    int order = 0, count = 0;
    for (const auto& r : records) {
        if (r.order != order) {
            if (order) std::cout << "order " << order << ": " << count << " algebras\n";
            order = r.order;
            count = 0;
        }
        ++count;
        if (cat.is_open()) cat << bck::catalog_line(r) << "\n";
    }
    if (order) std::cout << "order " << order << ": " << count << " algebras\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite BCK-algebra toolkit"};
    app.require_subcommand(1);

    std::string path, path2, spec, kind = "all", catalog, wtag1, wtag2;
    int n = 0, widx1 = 0, widx2 = 0, cap = bck::kWronskiDefaultCap;
    int jobs = 1, max_order = 6;
    bool close = false;

    auto* validate = app.add_subcommand("validate", "check the axioms of a table file");
    validate->add_option("path", path)->required();

    auto* info = app.add_subcommand("info", "print the invariant report of an algebra");
    info->add_option("path", path)->required();

    auto* series = app.add_subcommand("series", "print derived/lower/upper series");
    series->add_option("path", path)->required();
    series->add_option("--kind", kind)->check(CLI::IsMember({"all", "derived", "lower", "upper"}));

    auto* quotient = app.add_subcommand("quotient", "quotient by an ideal ('derived' or a comma list)");
    quotient->add_option("path", path)->required();
    quotient->add_option("ideal", spec)->required();
    quotient->add_flag("--close", close, "apply ideal closure to the listed elements first");

    auto* product = app.add_subcommand("product", "direct product of two algebras");
    product->add_option("path1", path)->required();
    product->add_option("path2", path2)->required();

    auto* iso = app.add_subcommand("iso", "find an isomorphism between two algebras");
    iso->add_option("path1", path)->required();
    iso->add_option("path2", path2)->required();

    auto* chain = app.add_subcommand("chain", "emit the (n+1)-element chain algebra M_n");
    chain->add_option("n", n)->required();

    auto* wronski = app.add_subcommand("wronski-comm",
                                       "pseudo-commutator in the Wronski algebra (tags n|a|b)");
    wronski->add_option("tag1", wtag1)->required();
    wronski->add_option("idx1", widx1)->required();
    wronski->add_option("tag2", wtag2)->required();
    wronski->add_option("idx2", widx2)->required();
    wronski->add_option("--cap", cap, "index window bound");

    auto* enumerate = app.add_subcommand("enumerate", "enumerate algebras up to isomorphism");
    enumerate->add_option("n", n)->required();
    enumerate->add_option("--catalog", catalog, "write one record per class to this file");
    enumerate->add_option("--jobs", jobs, "parallel workers for the search");
    enumerate->add_option("--max-order", max_order, "refusal ceiling");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (validate->parsed()) return cmd_validate(path);
        if (info->parsed()) return cmd_info(path);
        if (series->parsed()) return cmd_series(path, kind);
        if (quotient->parsed()) return cmd_quotient(path, spec, close);
        if (product->parsed()) return cmd_product(path, path2);
        if (iso->parsed()) return cmd_iso(path, path2);
        if (chain->parsed()) return cmd_chain(n);
        if (wronski->parsed()) return cmd_wronski(wtag1, widx1, wtag2, widx2, cap);
        if (enumerate->parsed()) return cmd_enumerate(n, catalog, jobs, max_order);
    } catch (const bck::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const bck::InvalidTable& e) {
        std::cerr << "error: not a BCK-algebra: " << e.what() << "\n";
        return kNegative;
    } catch (const std::invalid_argument& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kRefusal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kOk;
}
