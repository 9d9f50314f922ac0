#include "wl2/linalg.hpp"

#include <algorithm>
#include <map>

namespace wl2 {

void SparseMatrix::set(int r, int c, const Rational& v) {
    if (v != 0) col[c].push_back({r, v});
}

void SparseMatrix::normalize() {
    for (auto& v : col) {
        std::sort(v.begin(), v.end(), [](auto& x, auto& y) { return x.first < y.first; });
        SparseVec merged;
        for (auto& [i, x] : v) {
            if (!merged.empty() && merged.back().first == i)
                merged.back().second += x;
            else
                merged.push_back({i, x});
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(), [](auto& e) { return e.second == 0; }), merged.end());
        v = std::move(merged);
    }
}

bool SparseMatrix::is_zero() const {
    for (auto& v : col)
        if (!v.empty()) return false;
    return true;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols, rows);
    for (int j = 0; j < cols; ++j)
        for (auto& [i, x] : col[j]) t.col[i].push_back({j, x});
    return t;
}

SparseVec SparseMatrix::apply(const SparseVec& x) const {
    std::map<int, Rational> acc;
    for (auto& [j, xj] : x)
        for (auto& [i, a] : col[j]) acc[i] += a * xj;
    SparseVec out;
    for (auto& [i, v] : acc)
        if (v != 0) out.push_back({i, v});
    return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("sparse product: shape mismatch");
    SparseMatrix out(a.rows, b.cols);
    for (int j = 0; j < b.cols; ++j) out.col[j] = a.apply(b.col[j]);
    return out;
}

SparseVec axpy(const SparseVec& y, const Rational& a, const SparseVec& x) {
    SparseVec out;
    out.reserve(y.size() + x.size());
    std::size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
            out.push_back(y[i++]);
        } else if (i == y.size() || x[j].first < y[i].first) {
            out.push_back({x[j].first, a * x[j].second});
            ++j;
        } else {
            Rational v = y[i].second + a * x[j].second;
            if (v != 0) out.push_back({y[i].first, v});
            ++i;
            ++j;
        }
    }
    return out;
}

Rational dot(const SparseVec& x, const SparseVec& y, const std::vector<Rational>& weight) {
    Rational acc = 0;
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i].first < y[j].first)
            ++i;
        else if (y[j].first < x[i].first)
            ++j;
        else {
            acc += x[i].second * y[j].second * (weight.empty() ? Rational(1) : weight[x[i].first]);
            ++i;
            ++j;
        }
    }
    return acc;
}

int rank(const SparseMatrix& m) {
    // Incremental echelon form keyed by leading index; sparse columns first.
    std::vector<int> order(m.cols);
    for (int j = 0; j < m.cols; ++j) order[j] = j;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return m.col[a].size() < m.col[b].size(); });
    std::vector<SparseVec> pivot(m.rows);
    std::vector<bool> has(m.rows, false);
    int r = 0;
    for (int j : order) {
        SparseVec v = m.col[j];
        while (!v.empty()) {
            int lead = v.front().first;
            if (!has[lead]) {
                Rational inv = 1 / v.front().second;
                for (auto& e : v) e.second *= inv;
                pivot[lead] = std::move(v);
                has[lead] = true;
                ++r;
                break;
            }
            v = axpy(v, -v.front().second, pivot[lead]);
        }
    }
    return r;
}

MatrixQ MatrixQ::identity(int n) {
    MatrixQ m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

MatrixQ MatrixQ::transpose() const {
    MatrixQ t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
}

MatrixQ operator*(const MatrixQ& x, const MatrixQ& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix product: shape mismatch");
    MatrixQ out(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Rational& a = x(i, k);
            if (a == 0) continue;
            for (int j = 0; j < y.cols; ++j)
                if (y(k, j) != 0) out(i, j) += a * y(k, j);
        }
    return out;
}

MatrixQ operator-(const MatrixQ& x, const MatrixQ& y) {
    MatrixQ out(x);
    for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] -= y.a[i];
    return out;
}

int rank(MatrixQ m) {
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i)
            if (m(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
        for (int i = r + 1; i < m.rows; ++i) {
            if (m(i, c) == 0) continue;
            Rational f = m(i, c) / m(r, c);
            for (int j = c; j < m.cols; ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

MatrixQ vstack(const std::vector<MatrixQ>& blocks) {
    int rows = 0, cols = blocks.empty() ? 0 : blocks[0].cols;
    for (auto& b : blocks) rows += b.rows;
    MatrixQ out(rows, cols);
    int at = 0;
    for (auto& b : blocks) {
        std::copy(b.a.begin(), b.a.end(), out.a.begin() + static_cast<std::size_t>(at) * cols);
        at += b.rows;
    }
    return out;
}

}  // namespace wl2
