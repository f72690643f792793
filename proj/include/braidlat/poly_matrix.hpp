#pragma once

#include "braidlat/kpoly.hpp"

#include <Eigen/Dense>

#include <functional>
#include <map>

namespace braidlat {

using NumMatrix = Eigen::MatrixXcd;

// Sparse matrix with exact KPoly entries, row-major nested maps.
// No stored zero entries; deterministic iteration order.
class PolyMatrix {
public:
    using Row = std::map<long, KPoly>;

    explicit PolyMatrix(long dim = 0) : dim_(dim) {}
    static PolyMatrix identity(long dim);

    long dim() const { return dim_; }
    long nnz() const;

    void add(long row, long col, const KPoly& v);
    void set(long row, long col, const KPoly& v);
    const KPoly& at(long row, long col) const;  // zero if absent
    const std::map<long, Row>& rows() const { return rows_; }

    bool operator==(const PolyMatrix& o) const { return dim_ == o.dim_ && rows_ == o.rows_; }

    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix kron(const PolyMatrix& o) const;
    PolyMatrix scaled(const KPoly& c) const;

    KPoly trace() const;
    int max_k_degree() const;

    // dense numeric evaluation at (q, K)
    NumMatrix eval(double q0, Complex K0) const;

    void for_each(const std::function<void(long, long, const KPoly&)>& fn) const;

private:
    long dim_;
    std::map<long, Row> rows_;
};

}  // namespace braidlat
