#include "stableforms/matrix.hpp"

#include "stableforms/errors.hpp"

namespace stableforms {

Mat::Mat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Mat Mat::from_rows(std::vector<std::vector<Scalar>> rows) {
    Mat m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows[0].size();
    m.data_.reserve(m.rows_ * m.cols_);
    for (auto& r : rows) {
        if (r.size() != m.cols_)
            throw DimensionMismatch("ragged row list");
        for (auto& x : r) m.data_.push_back(std::move(x));
    }
    return m;
}

Scalar& Mat::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw IndexOutOfRange("matrix index");
    return data_[i * cols_ + j];
}

const Scalar& Mat::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw IndexOutOfRange("matrix index");
    return data_[i * cols_ + j];
}

Mat Mat::operator-() const {
    Mat r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
}

Mat Mat::operator+(const Mat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionMismatch("matrix addition shape");
    Mat r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += rhs.data_[k];
    return r;
}

Mat Mat::operator-(const Mat& rhs) const {
    return *this + (-rhs);
}

Mat Mat::operator*(const Mat& rhs) const {
    if (cols_ != rhs.rows_)
        throw DimensionMismatch("matrix product shape");
    Mat r(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& x = at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                r.at(i, j) += x * rhs.at(k, j);
        }
    return r;
}

Mat Mat::scaled(const Scalar& c) const {
    Mat r = *this;
    for (auto& x : r.data_) x *= c;
    return r;
}

Mat Mat::transpose() const {
    Mat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Mat::operator==(const Mat& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

bool Mat::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

Scalar Mat::trace() const {
    if (rows_ != cols_) throw DimensionMismatch("trace of non-square matrix");
    Scalar t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

Scalar Mat::det() const {
    if (rows_ != cols_) throw DimensionMismatch("determinant of non-square matrix");
    Mat w = *this;
    Scalar d(1);
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t pivot = col;
        while (pivot < rows_ && w.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows_) return Scalar(0);
        if (pivot != col) {
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap(w.at(pivot, j), w.at(col, j));
            d = -d;
        }
        d *= w.at(col, col);
        Scalar inv = w.at(col, col).inverse();
        for (std::size_t i = col + 1; i < rows_; ++i) {
            if (w.at(i, col).is_zero()) continue;
            Scalar f = w.at(i, col) * inv;
            for (std::size_t j = col; j < cols_; ++j)
                w.at(i, j) -= f * w.at(col, j);
        }
    }
    return d;
}

Mat Mat::rref(std::size_t* rank_out) const {
    Mat w = *this;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
        std::size_t pivot = r;
        while (pivot < rows_ && w.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap(w.at(pivot, j), w.at(r, j));
        Scalar inv = w.at(r, col).inverse();
        for (std::size_t j = col; j < cols_; ++j) w.at(r, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || w.at(i, col).is_zero()) continue;
            Scalar f = w.at(i, col);
            for (std::size_t j = col; j < cols_; ++j)
                w.at(i, j) -= f * w.at(r, j);
        }
        ++r;
    }
    if (rank_out) *rank_out = r;
    return w;
}

std::size_t Mat::rank() const {
    std::size_t r = 0;
    rref(&r);
    return r;
}

std::vector<std::vector<Scalar>> Mat::nullspace() const {
    std::size_t r = 0;
    Mat e = rref(&r);
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t i = 0, col = 0; i < r; ++i) {
        while (col < cols_ && e.at(i, col).is_zero()) ++col;
        pivot_col.push_back(col);
        is_pivot[col] = true;
    }
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(cols_, Scalar(0));
        v[free] = Scalar(1);
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = -e.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Mat Mat::inverse() const {
    if (rows_ != cols_) throw DimensionMismatch("inverse of non-square matrix");
    Mat aug(rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = Scalar(1);
    }
    Mat e = aug.rref();
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (e.at(i, j) != (i == j ? Scalar(1) : Scalar(0)))
                throw Error("matrix is singular");
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = e.at(i, cols_ + j);
    return r;
}

Mat Mat::substitute(const std::map<SymbolId, Scalar>& subs) const {
    Mat r = *this;
    for (auto& x : r.data_) x = x.substitute(subs);
    return r;
}

std::vector<std::vector<Scalar>> Mat::to_rows() const {
    std::vector<std::vector<Scalar>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        out[i].reserve(cols_);
        for (std::size_t j = 0; j < cols_; ++j) out[i].push_back(at(i, j));
    }
    return out;
}

bool same_row_space(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols()) return false;
    std::size_t ra = 0, rb = 0;
    Mat ea = a.rref(&ra);
    Mat eb = b.rref(&rb);
    if (ra != rb) return false;
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (ea.at(i, j) != eb.at(i, j)) return false;
    return true;
}

std::vector<Scalar> mat_apply(const Mat& m, const std::vector<Scalar>& v) {
    if (v.size() != m.cols()) throw DimensionMismatch("matrix apply");
    std::vector<Scalar> out(m.rows(), Scalar(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m.at(i, j).is_zero() || v[j].is_zero()) continue;
            out[i] += m.at(i, j) * v[j];
        }
    return out;
}

Mat submatrix(const Mat& m, const std::vector<std::size_t>& rows,
              const std::vector<std::size_t>& cols) {
    Mat out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out.at(i, j) = m.at(rows[i], cols[j]);
    return out;
}

RatMat eval_matrix(const Mat& m, const std::map<SymbolId, Rational>& point) {
    RatMat out(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i][j] = m.at(i, j).eval(point);
    return out;
}

std::pair<int, int> inertia(RatMat a) {
    const std::size_t n = a.size();
    int plus = 0, minus = 0;
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        // prefer a live diagonal entry
        std::size_t k = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && a[i][i] != 0) {
                k = i;
                break;
            }
        if (k == n) {
            // all live diagonals vanish; build one from an off-diagonal pair
            std::size_t pi = n, pj = n;
            for (std::size_t i = 0; i < n && pi == n; ++i) {
                if (done[i]) continue;
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!done[j] && a[i][j] != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            }
            if (pi == n) break;  // remaining block is zero
            for (std::size_t t = 0; t < n; ++t) a[pi][t] += a[pj][t];
            for (std::size_t t = 0; t < n; ++t) a[t][pi] += a[t][pj];
            k = pi;
        }
        Rational d = a[k][k];
        if (d > 0)
            ++plus;
        else
            ++minus;
        done[k] = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || a[i][k] == 0) continue;
            Rational f = a[i][k] / d;
            for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[k][j];
            for (std::size_t j = 0; j < n; ++j) a[j][i] -= f * a[j][k];
        }
    }
    return {plus, minus};
}

}  // namespace stableforms
