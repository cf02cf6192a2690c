#include "cyctri/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace cyctri {

namespace {

std::string strip(const std::string& raw) {
    std::string s = raw;
    if (auto pos = s.find('#'); pos != std::string::npos) s.erase(pos);
    auto is_space = [](unsigned char c) { return std::isspace(c); };
    while (!s.empty() && is_space(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && is_space(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(i);
}

} // namespace

CycleFile parse_cycles(std::istream& in) {
    CycleFile out;
    std::string raw;
    int line_no = 0;
    bool have_header = false;
    std::set<DifferenceCycle> seen;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = strip(raw);
        if (line.empty()) continue;
        if (!have_header) {
            int n = 0, d = 0;
            if (std::sscanf(line.c_str(), "n=%d d=%d", &n, &d) != 2)
                throw ParseError("expected header 'n=<int> d=<int>', got '" + line + "'", line_no);
            if (n <= 0 || d < 1 || d >= n)
                throw ParseError("header requires n > d >= 1", line_no);
            out.n = n;
            out.d = d;
            have_header = true;
            continue;
        }
        std::istringstream is(line);
        std::vector<int> entries;
        long long v;
        while (is >> v) {
            if (v <= 0) throw ParseError("non-positive entry", line_no);
            entries.push_back(static_cast<int>(v));
        }
        if (!is.eof()) throw ParseError("malformed entry in '" + line + "'", line_no);
        if (static_cast<int>(entries.size()) != out.d + 1)
            throw ParseError("expected " + std::to_string(out.d + 1) + " entries, got " +
                                 std::to_string(entries.size()),
                             line_no);
        long long sum = 0;
        for (int e : entries) sum += e;
        if (sum != out.n)
            throw ParseError("entries sum to " + std::to_string(sum) + ", expected n=" +
                                 std::to_string(out.n),
                             line_no);
        DifferenceCycle c = DifferenceCycle::make(std::move(entries), out.n);
        if (!seen.insert(c).second)
            throw ParseError("duplicate cycle (canonical form " + c.str() + ")", line_no);
        out.cycles.push_back(std::move(c));
    }
    if (!have_header) throw ParseError("missing header", line_no);
    return out;
}

CycleFile parse_cycles_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_cycles(in);
}

std::string write_cycles(const CycleFile& f) {
    std::ostringstream os;
    os << "n=" << f.n << " d=" << f.d << "\n";
    for (const auto& c : f.cycles) os << c.str() << "\n";
    return os.str();
}

std::vector<Simplex> parse_facets(std::istream& in) {
    std::vector<Simplex> out;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = strip(raw);
        if (line.empty()) continue;
        try {
            out.push_back(simplex_from_labels(line));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), line_no);
        }
    }
    return out;
}

std::vector<Simplex> parse_facets_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_facets(in);
}

std::string write_facets(const std::vector<Simplex>& facets) {
    std::vector<Simplex> sorted = facets;
    std::sort(sorted.begin(), sorted.end());
    std::ostringstream os;
    for (const auto& f : sorted) os << f.str() << "\n";
    return os.str();
}

SimplicialComplex load_complex(const std::string& path, int n_override) {
    auto ends_with = [&](const char* suf) {
        std::string s(suf);
        return path.size() >= s.size() && path.compare(path.size() - s.size(), s.size(), s) == 0;
    };
    if (ends_with(".dc")) {
        CycleFile f = parse_cycles_file(path);
        if (f.cycles.empty()) throw std::runtime_error(path + ": no cycles");
        return SimplicialComplex::from_cycles(f.cycles);
    }
    if (ends_with(".fct")) {
        auto facets = parse_facets_file(path);
        if (facets.empty()) throw std::runtime_error(path + ": no facets");
        int n = n_override;
        if (n == 0)
            for (const auto& f : facets) n = std::max(n, f.vertices().back() + 1);
        std::sort(facets.begin(), facets.end());
        facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
        return SimplicialComplex::from_facets(n, std::move(facets));
    }
    throw std::runtime_error(path + ": unknown extension (expected .dc or .fct)");
}

} // namespace cyctri
