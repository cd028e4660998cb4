#pragma once

// Exact integer linear algebra: dense matrices over arbitrary-precision
// integers, Smith normal form, kernels, cokernels and integer solving.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

namespace neron {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_columns(std::size_t rows, std::span<const IntVector> columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector row(std::size_t r) const;
    IntVector column(std::size_t c) const;

    IntMatrix transpose() const;
    IntVector operator*(std::span<const Integer> x) const;
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

    // Elementary operations used by the normal-form routines.
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
    void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
    void negate_row(std::size_t r);

    /// Vertical concatenation; column counts must agree (an empty operand
    /// with zero rows is accepted regardless of its column count).
    static IntMatrix vstack(std::span<const IntMatrix> blocks, std::size_t cols);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// U * M * V = S with U, V unimodular and S diagonal, d1 | d2 | ..., all di >= 0.
struct SNFResult {
    IntMatrix U;
    IntMatrix S;
    IntMatrix V;

    /// Diagonal of S (min(rows, cols) entries, zeros included).
    IntVector diagonal() const;
    /// Number of nonzero diagonal entries.
    std::size_t rank() const;
};

/// Pivot rule: smallest nonzero absolute value, ties broken by lowest row
/// and then lowest column.
SNFResult smith_normal_form(const IntMatrix& m);

/// Saturated lattice basis of {x : Mx = 0}. Each vector is normalised so
/// that its first nonzero entry is positive.
std::vector<IntVector> kernel_basis(const IntMatrix& m);

struct CokernelInvariants {
    IntVector torsion;          // invariant factors > 1, ascending
    std::size_t free_rank = 0;

    friend bool operator==(const CokernelInvariants&, const CokernelInvariants&) = default;
};

/// coker(M) = Z^rows / M Z^cols as torsion factors plus free rank.
CokernelInvariants cokernel_invariants(const IntMatrix& m);

/// Some integer x with Ax = b, or nullopt. Unique when A has full column rank.
std::optional<IntVector> solve_integer(const IntMatrix& a, std::span<const Integer> b);

/// Solves A X = B column by column against a single decomposition of A.
/// Returns nullopt if any column has no integer solution.
std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& m);

} // namespace neron
