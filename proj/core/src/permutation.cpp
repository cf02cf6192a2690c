#include "cyctri/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cyctri {

Perm::Perm(std::vector<Vertex> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (Vertex v : img_) {
        if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Perm Perm::identity(int degree) {
    std::vector<Vertex> img(static_cast<std::size_t>(degree));
    std::iota(img.begin(), img.end(), 0);
    return Perm(std::move(img));
}

Perm Perm::then(const Perm& second) const {
    if (degree() != second.degree()) throw std::invalid_argument("degree mismatch");
    std::vector<Vertex> img(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i)
        img[i] = second.img_[static_cast<std::size_t>(img_[i])];
    return Perm(std::move(img));
}

Perm Perm::inverse() const {
    std::vector<Vertex> img(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i)
        img[static_cast<std::size_t>(img_[i])] = static_cast<Vertex>(i);
    return Perm(std::move(img));
}

bool Perm::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != static_cast<Vertex>(i)) return false;
    return true;
}

int Perm::order() const {
    Perm p = *this;
    int k = 1;
    while (!p.is_identity()) {
        p = p.then(*this);
        ++k;
        if (k > 1'000'000) throw std::logic_error("runaway permutation order");
    }
    return k;
}

std::string Perm::cycle_str() const {
    std::vector<bool> seen(img_.size(), false);
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i] || img_[i] == static_cast<Vertex>(i)) continue;
        os << '(';
        Vertex v = static_cast<Vertex>(i);
        bool first = true;
        while (!seen[static_cast<std::size_t>(v)]) {
            seen[static_cast<std::size_t>(v)] = true;
            if (!first) os << ',';
            os << vertex_label(v);
            first = false;
            v = img_[static_cast<std::size_t>(v)];
        }
        os << ')';
        any = true;
    }
    return any ? os.str() : "()";
}

Perm perm_from_cycles(const std::string& s, int degree) {
    std::vector<Vertex> img(static_cast<std::size_t>(degree));
    std::iota(img.begin(), img.end(), 0);
    std::size_t i = 0;
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i]))) { ++i; continue; }
        if (s[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
        ++i;
        std::vector<Vertex> cyc;
        while (i < s.size() && s[i] != ')') {
            if (s[i] == ',' || std::isspace(static_cast<unsigned char>(s[i]))) { ++i; continue; }
            Vertex v = vertex_from_label(s[i]);
            if (v >= degree) throw std::invalid_argument("cycle vertex out of range");
            cyc.push_back(v);
            ++i;
        }
        if (i == s.size()) throw std::invalid_argument("unterminated cycle");
        ++i; // ')'
        for (std::size_t j = 0; j < cyc.size(); ++j)
            img[static_cast<std::size_t>(cyc[j])] = cyc[(j + 1) % cyc.size()];
    }
    return Perm(std::move(img));
}

} // namespace cyctri
