#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

namespace cyctri {

using Int = boost::multiprecision::cpp_int;

/// Dense matrix of arbitrary-precision integers.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }

    Int& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    IntegerMatrix transposed() const;
    IntegerMatrix operator*(const IntegerMatrix& o) const;
    bool operator==(const IntegerMatrix& o) const = default;

    bool is_zero() const;
    std::string str() const;

    // Row/column elementary operations (used by the Smith reduction).
    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void add_row(std::size_t src, std::size_t dst, const Int& factor);  // dst += factor*src
    void add_col(std::size_t src, std::size_t dst, const Int& factor);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Int> a_;
};

/// U * A * V = D with D diagonal, d_1 | d_2 | ..., d_i >= 0.
struct SmithResult {
    IntegerMatrix d;
    IntegerMatrix u, v;            // unimodular transforms (when requested)
    bool with_transforms = false;
    std::size_t rank = 0;
    std::vector<Int> invariant_factors() const; // nonzero diagonal entries
};

SmithResult smith_normal_form(const IntegerMatrix& a, bool with_transforms = false);

std::size_t rank(const IntegerMatrix& a);

/// Determinant of a square matrix (via fraction-free elimination).
Int determinant(const IntegerMatrix& a);

/// Basis of the integer kernel lattice { x : A x = 0 }, as matrix columns.
IntegerMatrix kernel_basis(const IntegerMatrix& a);

/// One integer solution X of A X = B, or nullopt if none exists.
std::optional<IntegerMatrix> solve(const IntegerMatrix& a, const IntegerMatrix& b);

/// Inverse of a unimodular matrix; throws if |det| != 1.
IntegerMatrix inverse_unimodular(const IntegerMatrix& a);

} // namespace cyctri
