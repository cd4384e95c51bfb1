#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace oddarc {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Int> row(std::size_t i) const;
    IntMatrix transpose() const;
    bool is_zero() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

struct HermiteForm {
    IntMatrix H;  // row-style Hermite normal form, zero rows removed
    IntMatrix U;  // unimodular, U * A = H padded with zero rows (only if requested)
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Row Hermite normal form: pivots positive, entries above a pivot reduced into [0, pivot).
HermiteForm hermite_rows(const IntMatrix& A, bool with_transform = false);

// Canonical HNF basis of the row lattice of A (no transform); suited to tall spanning sets.
IntMatrix lattice_basis(const IntMatrix& A);

// Incrementally maintained lattice in HNF; adding rows never grows the basis past the ambient rank.
class Lattice {
public:
    explicit Lattice(std::size_t dim) : dim_(dim) {}
    // Returns true if the lattice changed.
    bool add(std::vector<Int> v);
    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    IntMatrix basis() const;  // canonical (fully reduced) HNF
    bool contains(std::vector<Int> v) const;

private:
    void reduce_above(std::size_t k);
    std::size_t dim_;
    std::vector<std::vector<Int>> rows_;  // echelon, sorted by pivot
    std::vector<std::size_t> piv_;
};

// Primitive basis of {v : M v = 0}, columns in canonical column-HNF form.
IntMatrix kernel_basis_Z(const IntMatrix& M);

struct SmithForm {
    IntMatrix U, D, V;  // U * M * V = D
};

SmithForm smith_normal_form(const IntMatrix& M);
std::vector<Int> smith_invariants(const IntMatrix& M);  // nonzero diagonal of D only

std::size_t rank_Q(const IntMatrix& M);
// Exact inverse of a square matrix over Q, nullopt if singular.
std::optional<std::vector<std::vector<Rational>>> inverse_Q(const IntMatrix& M);

// Some rational solution of A x = b (free variables zero), nullopt if inconsistent.
std::optional<std::vector<Rational>> solve_Q(const IntMatrix& A, const std::vector<Int>& b);

// Bit matrix over F2 for small dense systems.
using BitRow = std::vector<std::uint8_t>;
std::optional<BitRow> solve_f2(const std::vector<BitRow>& A, const BitRow& b);
std::size_t rank_f2(std::vector<BitRow> A);

}  // namespace oddarc
