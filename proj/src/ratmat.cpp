#include "symbreak/ratmat.hpp"

#include <stdexcept>

namespace symbreak {

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat RatMat::from_rows(const std::vector<std::vector<Rat>>& rows) {
    if (rows.empty()) return RatMat(0, 0);
    RatMat m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int r = 0; r < m.rows; ++r) {
        if (static_cast<int>(rows[r].size()) != m.cols) throw std::invalid_argument("ragged rows");
        for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

std::vector<std::vector<Rat>> RatMat::to_rows() const {
    std::vector<std::vector<Rat>> out(rows, std::vector<Rat>(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) out[r][c] = at(r, c);
    return out;
}

RatMat RatMat::transpose() const {
    RatMat t(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
}

RatMat RatMat::operator*(const RatMat& o) const {
    if (cols != o.rows) throw std::invalid_argument("matrix product shape mismatch");
    RatMat r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Rat& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

std::vector<Rat> RatMat::apply(const std::vector<Rat>& x) const {
    if (static_cast<int>(x.size()) != cols) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<Rat> y(rows, Rat(0));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (at(r, c) != 0) y[r] += at(r, c) * x[c];
    return y;
}

bool RatMat::is_identity() const {
    if (rows != cols) return false;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (at(r, c) != (r == c ? 1 : 0)) return false;
    return true;
}

bool RatMat::is_zero() const {
    for (const auto& v : a)
        if (v != 0) return false;
    return true;
}

std::vector<int> rref(RatMat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int r = row; r < m.rows; ++r)
            if (m.at(r, col) != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(p, c), m.at(row, c));
        const Rat inv = Rat(1) / m.at(row, col);
        for (int c = col; c < m.cols; ++c) m.at(row, c) *= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row) continue;
            const Rat f = m.at(r, col);
            if (f == 0) continue;
            for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(RatMat m) { return static_cast<int>(rref(m).size()); }

std::vector<std::vector<Rat>> nullspace(const RatMat& m) {
    RatMat r = m;
    std::vector<int> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(m.cols, Rat(0));
        v[free] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(static_cast<int>(i), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rat>> solve(const RatMat& A, const std::vector<Rat>& b) {
    if (static_cast<int>(b.size()) != A.rows) throw std::invalid_argument("solve shape mismatch");
    RatMat aug(A.rows, A.cols + 1);
    for (int r = 0; r < A.rows; ++r) {
        for (int c = 0; c < A.cols; ++c) aug.at(r, c) = A.at(r, c);
        aug.at(r, A.cols) = b[r];
    }
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == A.cols) return std::nullopt;  // inconsistent
    std::vector<Rat> x(A.cols, Rat(0));
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(static_cast<int>(i), A.cols);
    return x;
}

std::optional<RatMat> inverse(const RatMat& m) {
    if (m.rows != m.cols) return std::nullopt;
    RatMat aug(m.rows, 2 * m.cols);
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols + r) = 1;
    }
    std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != m.rows) return std::nullopt;
    RatMat inv(m.rows, m.cols);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) inv.at(r, c) = aug.at(r, m.cols + c);
    return inv;
}

}  // namespace symbreak
