#include "cyctri/difference_cycle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cyctri {

std::vector<int> least_rotation(std::vector<int> word) {
    const std::size_t k = word.size();
    std::vector<int> best = word;
    for (std::size_t r = 1; r < k; ++r) {
        std::rotate(word.begin(), word.begin() + 1, word.end());
        if (word < best) best = word;
    }
    return best;
}

DifferenceCycle DifferenceCycle::make(std::vector<int> entries, int n) {
    if (entries.size() < 2) throw std::invalid_argument("difference cycle needs at least 2 entries");
    if (n <= 0) throw std::invalid_argument("modulus must be positive");
    long long sum = 0;
    for (int e : entries) {
        if (e <= 0) throw std::invalid_argument("non-positive entry in difference cycle");
        sum += e;
    }
    if (sum != n) {
        std::ostringstream os;
        os << "difference cycle entries sum to " << sum << ", expected n=" << n;
        throw std::invalid_argument(os.str());
    }
    DifferenceCycle c;
    c.entries_ = least_rotation(std::move(entries));
    c.n_ = n;
    return c;
}

int DifferenceCycle::orbit_length() const {
    // Order of the rotation stabilizer: rotations by r fixing the word.
    const std::size_t k = entries_.size();
    int stab = 0;
    std::vector<int> w = entries_;
    for (std::size_t r = 0; r < k; ++r) {
        if (w == entries_) ++stab;
        std::rotate(w.begin(), w.begin() + 1, w.end());
    }
    return n_ / stab;
}

Simplex DifferenceCycle::simplex_at(int x) const {
    std::vector<Vertex> v;
    v.reserve(entries_.size());
    int cur = ((x % n_) + n_) % n_;
    v.push_back(cur);
    for (std::size_t i = 0; i + 1 < entries_.size(); ++i) {
        cur = (cur + entries_[i]) % n_;
        v.push_back(cur);
    }
    return Simplex(std::move(v));
}

std::vector<Simplex> DifferenceCycle::expand() const {
    std::set<Simplex> orbit;
    for (int x = 0; x < n_; ++x) orbit.insert(simplex_at(x));
    return {orbit.begin(), orbit.end()};
}

DifferenceCycle DifferenceCycle::reversed() const {
    std::vector<int> rev(entries_.rbegin(), entries_.rend());
    return make(std::move(rev), n_);
}

DifferenceCycle DifferenceCycle::of_simplex(const Simplex& s, int n) {
    if (s.empty()) throw std::invalid_argument("empty simplex has no difference cycle");
    if (s.vertices().back() >= n) throw std::invalid_argument("vertex id out of range");
    std::vector<int> gaps;
    gaps.reserve(s.size());
    const auto& v = s.vertices();
    for (std::size_t i = 0; i + 1 < v.size(); ++i) gaps.push_back(v[i + 1] - v[i]);
    gaps.push_back(n - v.back() + v.front());
    return make(std::move(gaps), n);
}

std::string DifferenceCycle::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ' ';
        os << entries_[i];
    }
    return os.str();
}

std::string DifferenceCycle::compact_str() const {
    std::string s;
    for (int e : entries_) {
        if (e < 10) s.push_back(static_cast<char>('0' + e));
        else if (e < 36) s.push_back(static_cast<char>('a' + e - 10));
        else return str();
    }
    return s;
}

} // namespace cyctri
