#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "bck/algebra.hpp"
#include "bck/enumerate.hpp"

namespace bck {

struct ParseError : std::runtime_error {
    ParseError(std::string msg, int line, int column = 0);
    int line;
    int column;  // 1-based token position; 0 when the whole line is at fault
};

/// A parsed .bck file before validation. labels maps element index to the
/// label used in the file; after normalization index 0 is always the
/// constant-candidate element.
struct RawTable {
    int order = 0;
    std::vector<Element> entries;     // order*order, normalized indices
    std::vector<std::string> labels;  // index -> original label
};

/// Format: optional '#' comment lines (and blank lines), then the order n,
/// then n rows of n whitespace-separated tokens. If every token is one of
/// the decimal strings 0..n-1, tokens are taken as element indices as-is.
/// Otherwise tokens are arbitrary labels: the element whose row is constant
/// and whose column lists each row's own label becomes index 0, and the
/// remaining labels are assigned 1..n-1 in lexicographic order.
RawTable parse_table(std::istream& in);
RawTable load_raw(const std::string& path);

/// Parses and validates; throws ParseError or InvalidTable.
Algebra load_algebra(const std::string& path);

/// Canonical text form: the order, then the table rows, space-separated.
/// Loading the result reproduces the algebra byte-for-byte on save.
std::string format_table(const Algebra& a);
void save_algebra(const std::string& path, const Algebra& a);

std::string format_set(const ElementSet& s);

/// Catalog record: order, canonical table in base-36 digits, nilpotence
/// class, solvability class, commutative flag, tab-separated.
std::string catalog_line(const SweepRecord& r);

}  // namespace bck
