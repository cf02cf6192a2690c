#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyctri/complex.hpp"
#include "cyctri/difference_cycle.hpp"

namespace cyctri {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_no(line) {}
    int line_no;
};

/// Contents of a `.dc` file: header `n=<int> d=<int>`, then one difference
/// cycle per line (d+1 entries). `#` starts a comment.
struct CycleFile {
    int n = 0;
    int d = 0;
    std::vector<DifferenceCycle> cycles; // canonical, in file order
};

CycleFile parse_cycles(std::istream& in);
CycleFile parse_cycles_file(const std::string& path);
std::string write_cycles(const CycleFile& f);

/// `.fct` files: one facet per line as a base-12 digit string.
std::vector<Simplex> parse_facets(std::istream& in);
std::vector<Simplex> parse_facets_file(const std::string& path);
std::string write_facets(const std::vector<Simplex>& facets); // sorted, one per line

/// Loads a complex from a `.dc` or `.fct` file (by extension).
/// For `.fct`, the universe is the smallest n >= 1 covering all labels,
/// or the given override.
SimplicialComplex load_complex(const std::string& path, int n_override = 0);

} // namespace cyctri
