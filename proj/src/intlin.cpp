#include "neron/intlin.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace neron {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long long v : r)
            data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, std::span<const IntVector> columns) {
    IntMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows)
            throw std::invalid_argument("IntMatrix::from_columns: column length mismatch");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = columns[c][r];
    }
    return m;
}

IntVector IntMatrix::row(std::size_t r) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
    IntVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out[r] = (*this)(r, c);
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

IntVector IntMatrix::operator*(std::span<const Integer> x) const {
    if (x.size() != cols_)
        throw std::invalid_argument("IntMatrix * vector: dimension mismatch");
    IntVector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!x[c].is_zero())
                y[r] += (*this)(r, c) * x[c];
    return y;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("IntMatrix * IntMatrix: dimension mismatch");
    IntMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                p(i, j) += aik * b(k, j);
        }
    return p;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
    if (factor.is_zero())
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!(*this)(source, c).is_zero())
            (*this)(target, c) += factor * (*this)(source, c);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
    if (factor.is_zero())
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        if (!(*this)(r, source).is_zero())
            (*this)(r, target) += factor * (*this)(r, source);
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(r, c) = -(*this)(r, c);
}

IntMatrix IntMatrix::vstack(std::span<const IntMatrix> blocks, std::size_t cols) {
    std::size_t total = 0;
    for (const auto& b : blocks) {
        if (b.rows() != 0 && b.cols() != cols)
            throw std::invalid_argument("IntMatrix::vstack: column count mismatch");
        total += b.rows();
    }
    IntMatrix out(total, cols);
    std::size_t r0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < cols; ++c)
                out(r0 + r, c) = b(r, c);
        r0 += b.rows();
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < m.cols(); ++c)
            os << (c ? ", " : "") << m(r, c);
        os << ']';
    }
    return os << ']';
}

IntVector SNFResult::diagonal() const {
    IntVector d(std::min(S.rows(), S.cols()));
    for (std::size_t i = 0; i < d.size(); ++i)
        d[i] = S(i, i);
    return d;
}

std::size_t SNFResult::rank() const {
    std::size_t r = 0;
    for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i)
        if (!S(i, i).is_zero())
            ++r;
    return r;
}

namespace {

struct Pivot {
    std::size_t row;
    std::size_t col;
};

// Smallest nonzero |entry| in the trailing submatrix starting at (t, t).
std::optional<Pivot> find_pivot(const IntMatrix& s, std::size_t t) {
    std::optional<Pivot> best;
    Integer best_abs;
    for (std::size_t i = t; i < s.rows(); ++i)
        for (std::size_t j = t; j < s.cols(); ++j) {
            const Integer& v = s(i, j);
            if (v.is_zero())
                continue;
            Integer a = abs(v);
            if (!best || a < best_abs) {
                best = Pivot{i, j};
                best_abs = std::move(a);
            }
        }
    return best;
}

} // namespace

SNFResult smith_normal_form(const IntMatrix& m) {
    SNFResult r{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
    IntMatrix& s = r.S;
    const std::size_t diag = std::min(m.rows(), m.cols());

    for (std::size_t t = 0; t < diag; ++t) {
        bool finished = false;
        for (;;) {
            auto pivot = find_pivot(s, t);
            if (!pivot) {
                finished = true;
                break;
            }
            s.swap_rows(t, pivot->row);
            r.U.swap_rows(t, pivot->row);
            s.swap_cols(t, pivot->col);
            r.V.swap_cols(t, pivot->col);

            bool clean = true;
            for (std::size_t i = t + 1; i < s.rows(); ++i) {
                if (s(i, t).is_zero())
                    continue;
                Integer q = s(i, t) / s(t, t);
                s.add_row_multiple(i, t, -q);
                r.U.add_row_multiple(i, t, -q);
                if (!s(i, t).is_zero())
                    clean = false;
            }
            for (std::size_t j = t + 1; j < s.cols(); ++j) {
                if (s(t, j).is_zero())
                    continue;
                Integer q = s(t, j) / s(t, t);
                s.add_col_multiple(j, t, -q);
                r.V.add_col_multiple(j, t, -q);
                if (!s(t, j).is_zero())
                    clean = false;
            }
            if (!clean)
                continue;

            // Pivot must divide the whole trailing block for the divisibility chain.
            std::optional<std::size_t> offending;
            for (std::size_t i = t + 1; i < s.rows() && !offending; ++i)
                for (std::size_t j = t + 1; j < s.cols(); ++j)
                    if (!(s(i, j) % s(t, t)).is_zero()) {
                        offending = i;
                        break;
                    }
            if (!offending)
                break;
            s.add_row_multiple(t, *offending, Integer(1));
            r.U.add_row_multiple(t, *offending, Integer(1));
        }
        if (finished)
            break;
        if (s(t, t) < 0) {
            s.negate_row(t);
            r.U.negate_row(t);
        }
    }
    return r;
}

std::vector<IntVector> kernel_basis(const IntMatrix& m) {
    const SNFResult snf = smith_normal_form(m);
    const std::size_t rank = snf.rank();
    std::vector<IntVector> basis;
    for (std::size_t c = rank; c < m.cols(); ++c) {
        IntVector v = snf.V.column(c);
        auto first = std::find_if(v.begin(), v.end(), [](const Integer& x) { return !x.is_zero(); });
        if (first != v.end() && *first < 0)
            for (auto& x : v)
                x = -x;
        basis.push_back(std::move(v));
    }
    return basis;
}

CokernelInvariants cokernel_invariants(const IntMatrix& m) {
    const SNFResult snf = smith_normal_form(m);
    CokernelInvariants out;
    std::size_t rank = 0;
    for (const Integer& d : snf.diagonal()) {
        if (d.is_zero())
            continue;
        ++rank;
        if (d > 1)
            out.torsion.push_back(d);
    }
    out.free_rank = m.rows() - rank;
    return out;
}

namespace {

std::optional<IntVector> solve_with(const SNFResult& snf, std::span<const Integer> b) {
    const IntMatrix& s = snf.S;
    // S y = U b, x = V y.
    const IntVector ub = snf.U * b;
    IntVector y(s.cols());
    for (std::size_t i = 0; i < s.rows(); ++i) {
        const bool on_diag = i < s.cols();
        if (on_diag && !s(i, i).is_zero()) {
            if (!(ub[i] % s(i, i)).is_zero())
                return std::nullopt;
            y[i] = ub[i] / s(i, i);
        } else if (!ub[i].is_zero()) {
            return std::nullopt;
        }
    }
    return snf.V * y;
}

} // namespace

std::optional<IntVector> solve_integer(const IntMatrix& a, std::span<const Integer> b) {
    if (b.size() != a.rows())
        throw std::invalid_argument("solve_integer: right-hand side has wrong length");
    return solve_with(smith_normal_form(a), b);
}

std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b) {
    if (b.rows() != a.rows())
        throw std::invalid_argument("solve_integer: right-hand side has wrong row count");
    const SNFResult snf = smith_normal_form(a);
    IntMatrix x(a.cols(), b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c) {
        const IntVector col = b.column(c);
        auto sol = solve_with(snf, col);
        if (!sol)
            return std::nullopt;
        for (std::size_t r = 0; r < a.cols(); ++r)
            x(r, c) = (*sol)[r];
    }
    return x;
}

Integer determinant(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0)
        return Integer(1);
    IntMatrix a = m;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a(p, k).is_zero())
                ++p;
            if (p == n)
                return Integer(0);
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

} // namespace neron
