#include "braidlat/poly_matrix.hpp"

#include <stdexcept>

namespace braidlat {

namespace {
const KPoly kZero{};
}

PolyMatrix PolyMatrix::identity(long dim) {
    PolyMatrix m(dim);
    for (long i = 0; i < dim; ++i) m.set(i, i, KPoly(1));
    return m;
}

long PolyMatrix::nnz() const {
    long n = 0;
    for (const auto& [r, row] : rows_) n += static_cast<long>(row.size());
    return n;
}

void PolyMatrix::add(long row, long col, const KPoly& v) {
    if (v.is_zero()) return;
    KPoly& slot = rows_[row][col];
    slot += v;
    if (slot.is_zero()) {
        rows_[row].erase(col);
        if (rows_[row].empty()) rows_.erase(row);
    }
}

void PolyMatrix::set(long row, long col, const KPoly& v) {
    if (v.is_zero()) {
        auto it = rows_.find(row);
        if (it != rows_.end()) {
            it->second.erase(col);
            if (it->second.empty()) rows_.erase(it);
        }
        return;
    }
    rows_[row][col] = v;
}

const KPoly& PolyMatrix::at(long row, long col) const {
    auto it = rows_.find(row);
    if (it == rows_.end()) return kZero;
    auto jt = it->second.find(col);
    return jt == it->second.end() ? kZero : jt->second;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("PolyMatrix: dimension mismatch in +");
    PolyMatrix r = *this;
    o.for_each([&](long i, long j, const KPoly& v) { r.add(i, j, v); });
    return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("PolyMatrix: dimension mismatch in -");
    PolyMatrix r = *this;
    o.for_each([&](long i, long j, const KPoly& v) { r.add(i, j, -v); });
    return r;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("PolyMatrix: dimension mismatch in *");
    PolyMatrix r(dim_);
    for (const auto& [i, rowA] : rows_) {
        for (const auto& [k, a] : rowA) {
            auto it = o.rows_.find(k);
            if (it == o.rows_.end()) continue;
            for (const auto& [j, b] : it->second) r.add(i, j, a * b);
        }
    }
    return r;
}

PolyMatrix PolyMatrix::kron(const PolyMatrix& o) const {
    PolyMatrix r(dim_ * o.dim_);
    for (const auto& [i1, rowA] : rows_)
        for (const auto& [j1, a] : rowA)
            for (const auto& [i2, rowB] : o.rows_)
                for (const auto& [j2, b] : rowB) r.add(i1 * o.dim_ + i2, j1 * o.dim_ + j2, a * b);
    return r;
}

PolyMatrix PolyMatrix::scaled(const KPoly& c) const {
    PolyMatrix r(dim_);
    for_each([&](long i, long j, const KPoly& v) { r.add(i, j, c * v); });
    return r;
}

KPoly PolyMatrix::trace() const {
    KPoly t;
    for (const auto& [i, row] : rows_) {
        auto it = row.find(i);
        if (it != row.end()) t += it->second;
    }
    return t;
}

int PolyMatrix::max_k_degree() const {
    int d = -1;
    for_each([&](long, long, const KPoly& v) { d = std::max(d, v.degree()); });
    return d;
}

NumMatrix PolyMatrix::eval(double q0, Complex K0) const {
    NumMatrix m = NumMatrix::Zero(dim_, dim_);
    for_each([&](long i, long j, const KPoly& v) { m(i, j) = v.eval(q0, K0); });
    return m;
}

void PolyMatrix::for_each(const std::function<void(long, long, const KPoly&)>& fn) const {
    for (const auto& [i, row] : rows_)
        for (const auto& [j, v] : row) fn(i, j, v);
}

}  // namespace braidlat
