#include "hcc/linalg.hpp"

namespace hcc {

Rref rref(QMat m, size_t cols)
{
	Rref out;
	size_t row = 0;
	for (size_t c = 0; c < cols && row < m.size(); ++c) {
		size_t piv = row;
		while (piv < m.size() && m[piv][c] == 0)
			++piv;
		if (piv == m.size())
			continue;
		std::swap(m[row], m[piv]);
		Q inv = Q(1) / m[row][c];
		for (auto &x : m[row])
			x *= inv;
		for (size_t r = 0; r < m.size(); ++r) {
			if (r == row || m[r][c] == 0)
				continue;
			Q f = m[r][c];
			for (size_t k = c; k < cols; ++k)
				m[r][k] -= f * m[row][k];
		}
		out.pivots.push_back(static_cast<int>(c));
		++row;
	}
	m.resize(row);
	out.r = std::move(m);
	return out;
}

int rank(const QMat &m, size_t cols) { return static_cast<int>(rref(m, cols).pivots.size()); }

std::vector<QVec> kernel(const QMat &m, size_t cols)
{
	Rref rr = rref(m, cols);
	std::vector<bool> is_piv(cols, false);
	for (int p : rr.pivots)
		is_piv[static_cast<size_t>(p)] = true;
	std::vector<QVec> basis;
	for (size_t f = 0; f < cols; ++f) {
		if (is_piv[f])
			continue;
		QVec v(cols, Q(0));
		v[f] = 1;
		for (size_t r = 0; r < rr.pivots.size(); ++r)
			v[static_cast<size_t>(rr.pivots[r])] = -rr.r[r][f];
		basis.push_back(std::move(v));
	}
	return basis;
}

QMat transpose(const QMat &m, size_t cols)
{
	QMat t(cols, QVec(m.size(), Q(0)));
	for (size_t r = 0; r < m.size(); ++r)
		for (size_t c = 0; c < cols; ++c)
			t[c][r] = m[r][c];
	return t;
}

bool in_column_span(const QMat &m, size_t cols, const QVec &v)
{
	QMat cs = transpose(m, cols);
	int r0 = rank(cs, v.size());
	cs.push_back(v);
	return rank(cs, v.size()) == r0;
}

SMat smat_mul(const SMat &a, const SMat &b)
{
	size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
	SMat c(n, std::vector<ScalarExpr>(m));
	for (size_t i = 0; i < n; ++i)
		for (size_t j = 0; j < m; ++j)
			for (size_t l = 0; l < k; ++l)
				c[i][j] += a[i][l] * b[l][j];
	return c;
}

SMat smat_identity(size_t n)
{
	SMat c(n, std::vector<ScalarExpr>(n));
	for (size_t i = 0; i < n; ++i)
		c[i][i] = ScalarExpr(1);
	return c;
}

namespace {

SMat minor_of(const SMat &a, size_t r, size_t c)
{
	SMat m;
	for (size_t i = 0; i < a.size(); ++i) {
		if (i == r)
			continue;
		std::vector<ScalarExpr> row;
		for (size_t j = 0; j < a.size(); ++j)
			if (j != c)
				row.push_back(a[i][j]);
		m.push_back(std::move(row));
	}
	return m;
}

} // namespace

ScalarExpr smat_det(const SMat &a)
{
	size_t n = a.size();
	if (n == 0)
		return ScalarExpr(1);
	if (n == 1)
		return a[0][0];
	ScalarExpr d;
	for (size_t j = 0; j < n; ++j) {
		if (a[0][j].is_zero())
			continue;
		ScalarExpr t = a[0][j] * smat_det(minor_of(a, 0, j));
		if (j % 2)
			d -= t;
		else
			d += t;
	}
	return d;
}

SMat smat_adjugate(const SMat &a)
{
	size_t n = a.size();
	SMat adj(n, std::vector<ScalarExpr>(n));
	if (n == 1) {
		adj[0][0] = ScalarExpr(1);
		return adj;
	}
	for (size_t i = 0; i < n; ++i)
		for (size_t j = 0; j < n; ++j) {
			ScalarExpr m = smat_det(minor_of(a, j, i));
			adj[i][j] = (i + j) % 2 ? -m : m;
		}
	return adj;
}

SMat smat_inverse_const_det(const SMat &a)
{
	ScalarExpr d = smat_det(a);
	if (!d.is_constant() || d.is_zero())
		throw Error("matrix determinant is not a nonzero rational constant: " + d.text());
	SMat adj = smat_adjugate(a);
	Q inv = Q(1) / d.constant();
	for (auto &row : adj)
		for (auto &x : row)
			x *= inv;
	return adj;
}

SMat smat_subst(const SMat &a, const std::map<Sym, ScalarExpr> &s)
{
	SMat r = a;
	for (auto &row : r)
		for (auto &x : row)
			x = x.subst(s);
	return r;
}

} // namespace hcc
