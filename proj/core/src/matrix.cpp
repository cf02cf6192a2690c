#include "cyctri/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cyctri {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::transposed() const {
    IntegerMatrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const {
    if (c_ != o.r_) throw std::invalid_argument("matrix product dimension mismatch");
    IntegerMatrix p(r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < c_; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.c_; ++j) p.at(i, j) += x * o.at(k, j);
        }
    return p;
}

bool IntegerMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

std::string IntegerMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < r_; ++i) {
        os << '[';
        for (std::size_t j = 0; j < c_; ++j) {
            if (j) os << ' ';
            os << at(i, j);
        }
        os << "]\n";
    }
    return os.str();
}

void IntegerMatrix::swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < c_; ++k) std::swap(at(i, k), at(j, k));
}
void IntegerMatrix::swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < r_; ++k) std::swap(at(k, i), at(k, j));
}
void IntegerMatrix::add_row(std::size_t src, std::size_t dst, const Int& f) {
    for (std::size_t k = 0; k < c_; ++k) at(dst, k) += f * at(src, k);
}
void IntegerMatrix::add_col(std::size_t src, std::size_t dst, const Int& f) {
    for (std::size_t k = 0; k < r_; ++k) at(k, dst) += f * at(k, src);
}
void IntegerMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < c_; ++k) at(i, k) = -at(i, k);
}
void IntegerMatrix::negate_col(std::size_t j) {
    for (std::size_t k = 0; k < r_; ++k) at(k, j) = -at(k, j);
}

std::vector<Int> SmithResult::invariant_factors() const {
    std::vector<Int> out;
    const std::size_t m = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < m; ++i)
        if (d.at(i, i) != 0) out.push_back(d.at(i, i));
    return out;
}

namespace {

// Position of an entry of minimal nonzero absolute value in the submatrix
// starting at (t, t); nullopt if the submatrix is zero.
std::optional<std::pair<std::size_t, std::size_t>> min_pivot(const IntegerMatrix& a, std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Int best_abs = 0;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            const Int& x = a.at(i, j);
            if (x == 0) continue;
            Int ax = abs(x);
            if (!best || ax < best_abs) {
                best = {{i, j}};
                best_abs = ax;
                if (best_abs == 1) return best;
            }
        }
    return best;
}

} // namespace

SmithResult smith_normal_form(const IntegerMatrix& input, bool with_transforms) {
    SmithResult res;
    res.d = input;
    res.with_transforms = with_transforms;
    if (with_transforms) {
        res.u = IntegerMatrix::identity(input.rows());
        res.v = IntegerMatrix::identity(input.cols());
    }
    IntegerMatrix& d = res.d;
    IntegerMatrix& u = res.u;
    IntegerMatrix& v = res.v;

    const std::size_t m = std::min(d.rows(), d.cols());
    std::size_t t = 0;
    while (t < m) {
        auto piv = min_pivot(d, t);
        if (!piv) break;
        d.swap_rows(t, piv->first);
        d.swap_cols(t, piv->second);
        if (with_transforms) {
            u.swap_rows(t, piv->first);
            v.swap_cols(t, piv->second);
        }

        bool clean = true;
        // Kill the rest of column t and row t; restart if a remainder pops up.
        for (std::size_t i = t + 1; i < d.rows(); ++i) {
            if (d.at(i, t) == 0) continue;
            Int q = d.at(i, t) / d.at(t, t);
            d.add_row(t, i, -q);
            if (with_transforms) u.add_row(t, i, -q);
            if (d.at(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < d.cols(); ++j) {
            if (d.at(t, j) == 0) continue;
            Int q = d.at(t, j) / d.at(t, t);
            d.add_col(t, j, -q);
            if (with_transforms) v.add_col(t, j, -q);
            if (d.at(t, j) != 0) clean = false;
        }
        if (!clean) continue; // a smaller pivot now exists in the submatrix

        // Divisibility: pivot must divide every remaining entry.
        bool fixed = true;
        for (std::size_t i = t + 1; i < d.rows() && fixed; ++i)
            for (std::size_t j = t + 1; j < d.cols() && fixed; ++j) {
                if (d.at(i, j) % d.at(t, t) != 0) {
                    d.add_row(i, t, 1);
                    if (with_transforms) u.add_row(i, t, 1);
                    fixed = false;
                }
            }
        if (!fixed) continue;

        if (d.at(t, t) < 0) {
            d.negate_row(t);
            if (with_transforms) u.negate_row(t);
        }
        ++t;
    }
    res.rank = t;
    return res;
}

std::size_t rank(const IntegerMatrix& a) { return smith_normal_form(a).rank; }

Int determinant(const IntegerMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    IntegerMatrix m = a;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && m.at(s, k) == 0) ++s;
            if (s == n) return 0;
            m.swap_rows(k, s);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

IntegerMatrix kernel_basis(const IntegerMatrix& a) {
    SmithResult s = smith_normal_form(a, true);
    const std::size_t k = a.cols() - s.rank;
    IntegerMatrix basis(a.cols(), k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < a.cols(); ++i)
            basis.at(i, j) = s.v.at(i, s.rank + j);
    return basis;
}

std::optional<IntegerMatrix> solve(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
    SmithResult s = smith_normal_form(a, true);
    IntegerMatrix ub = s.u * b;
    IntegerMatrix y(a.cols(), b.cols());
    const std::size_t m = std::min(a.rows(), a.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            const Int& rhs = ub.at(i, j);
            if (i < m && s.d.at(i, i) != 0) {
                if (rhs % s.d.at(i, i) != 0) return std::nullopt;
                y.at(i, j) = rhs / s.d.at(i, i);
            } else if (rhs != 0) {
                return std::nullopt;
            }
        }
    }
    return s.v * y;
}

IntegerMatrix inverse_unimodular(const IntegerMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
    Int det = determinant(a);
    if (det != 1 && det != -1) throw std::invalid_argument("matrix is not unimodular");
    auto x = solve(a, IntegerMatrix::identity(a.rows()));
    if (!x) throw std::logic_error("unimodular matrix failed to invert");
    return *x;
}

} // namespace cyctri
