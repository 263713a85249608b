#pragma once

#include <vector>

#include "hcc/scalar.hpp"

namespace hcc {

using QVec = std::vector<Q>;
using QMat = std::vector<QVec>; // row-major, rows x cols

struct Rref {
	QMat r;
	std::vector<int> pivots; // pivot column per nonzero row
};

// Gauss-Jordan elimination over Q (rows scaled to leading 1).
Rref rref(QMat m, size_t cols);
int rank(const QMat &m, size_t cols);
// Basis of {v : m v = 0}, one vector per free column, in column order.
std::vector<QVec> kernel(const QMat &m, size_t cols);
// Whether v is in the column span of m (m given as rows x cols).
bool in_column_span(const QMat &m, size_t cols, const QVec &v);
QMat transpose(const QMat &m, size_t cols);

using SMat = std::vector<std::vector<ScalarExpr>>;

SMat smat_mul(const SMat &a, const SMat &b);
SMat smat_identity(size_t n);
ScalarExpr smat_det(const SMat &a);
SMat smat_adjugate(const SMat &a);
// Inverse when the determinant is a nonzero rational constant.
SMat smat_inverse_const_det(const SMat &a);
SMat smat_subst(const SMat &a, const std::map<Sym, ScalarExpr> &s);

} // namespace hcc
