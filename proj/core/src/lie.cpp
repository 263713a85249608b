#include "hcc/lie.hpp"

#include <algorithm>

namespace hcc {

void lc_add(LieCochain &a, const std::vector<int> &k, const Q &c)
{
	if (c == 0)
		return;
	auto [it, ins] = a.try_emplace(k, c);
	if (!ins) {
		it->second += c;
		if (it->second == 0)
			a.erase(it);
	}
}

namespace {

int sort_sign(std::vector<int> &v)
{
	int s = 1;
	for (size_t i = 1; i < v.size(); ++i)
		for (size_t j = i; j > 0 && v[j] < v[j - 1]; --j) {
			std::swap(v[j], v[j - 1]);
			s = -s;
		}
	for (size_t i = 1; i < v.size(); ++i)
		if (v[i] == v[i - 1])
			return 0;
	return s;
}

} // namespace

LieCochain lc_wedge(const LieCochain &a, const LieCochain &b)
{
	LieCochain r;
	for (auto &[ka, ca] : a)
		for (auto &[kb, cb] : b) {
			std::vector<int> k = ka;
			k.insert(k.end(), kb.begin(), kb.end());
			int s = sort_sign(k);
			if (s)
				lc_add(r, k, s * ca * cb);
		}
	return r;
}

LieCochain lc_basis(std::vector<int> idx)
{
	LieCochain r;
	int s = sort_sign(idx);
	if (s)
		r[idx] = s;
	return r;
}

std::string lc_text(const LieCochain &a, const std::vector<std::string> &names)
{
	if (a.empty())
		return "0";
	std::string s;
	for (auto &[k, c] : a) {
		std::string m;
		for (size_t i = 0; i < k.size(); ++i)
			m += (i ? "∧" : "") + names.at(static_cast<size_t>(k[i]));
		if (m.empty())
			m = "1";
		Q ac = abs(c);
		std::string body = ac == 1 ? m : ac.get_str() + "·" + m;
		if (s.empty())
			s = (c < 0 ? "-" : "") + body;
		else
			s += (c < 0 ? " - " : " + ") + body;
	}
	return s;
}

LieAlgebra::LieAlgebra(std::vector<std::string> basis) : basis_(std::move(basis))
{
	size_t n = basis_.size();
	c_.assign(n, std::vector<QVec>(n, QVec(n, Q(0))));
}

int LieAlgebra::index_of(const std::string &name) const
{
	auto it = std::find(basis_.begin(), basis_.end(), name);
	if (it == basis_.end())
		throw Error("unknown basis element '" + name + "'");
	return static_cast<int>(it - basis_.begin());
}

void LieAlgebra::set_bracket(int i, int j, const QVec &v)
{
	for (size_t k = 0; k < dim(); ++k) {
		c_[i][j][k] = v[k];
		c_[j][i][k] = -v[k];
	}
}

void LieAlgebra::add_structure_constant(int i, int j, int k, const Q &c)
{
	if (i < 0 || j < 0 || k < 0 || static_cast<size_t>(std::max({i, j, k})) >= dim())
		throw Error("structure constant index out of range");
	c_[i][j][k] += c;
}

QVec LieAlgebra::unit(int i) const
{
	QVec v(dim(), Q(0));
	v[static_cast<size_t>(i)] = 1;
	return v;
}

QVec LieAlgebra::bracket(const QVec &a, const QVec &b) const
{
	size_t n = dim();
	QVec r(n, Q(0));
	for (size_t i = 0; i < n; ++i) {
		if (a[i] == 0)
			continue;
		for (size_t j = 0; j < n; ++j) {
			if (b[j] == 0)
				continue;
			Q f = a[i] * b[j];
			for (size_t k = 0; k < n; ++k)
				if (c_[i][j][k] != 0)
					r[k] += f * c_[i][j][k];
		}
	}
	return r;
}

QMat LieAlgebra::ad(int i) const
{
	size_t n = dim();
	QMat m(n, QVec(n, Q(0)));
	for (size_t j = 0; j < n; ++j)
		for (size_t k = 0; k < n; ++k)
			m[k][j] = c_[i][j][k];
	return m;
}

std::vector<std::string> LieAlgebra::check() const
{
	std::vector<std::string> out;
	int n = static_cast<int>(dim());
	for (int i = 0; i < n; ++i)
		for (int j = i; j < n; ++j)
			for (int k = 0; k < n; ++k)
				if (c_[i][j][k] != -c_[j][i][k]) {
					out.push_back("lie.antisym " + basis_[i] + "," + basis_[j]);
					k = n;
				}
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j)
			for (int k = j + 1; k < n; ++k) {
				QVec a = unit(i), b = unit(j), c = unit(k);
				QVec s = bracket(bracket(a, b), c);
				QVec t = bracket(bracket(b, c), a);
				QVec u = bracket(bracket(c, a), b);
				for (int l = 0; l < n; ++l)
					if (s[l] + t[l] + u[l] != 0) {
						out.push_back("lie.jacobi " + basis_[i] + "," + basis_[j] + "," + basis_[k]);
						break;
					}
			}
	return out;
}

MatchedPairLie MatchedPairLie::trivial(LieAlgebra g1, LieAlgebra g2)
{
	MatchedPairLie mp;
	size_t d1 = g1.dim(), d2 = g2.dim();
	mp.left.assign(d2, std::vector<QVec>(d1, QVec(d1, Q(0))));
	mp.right.assign(d2, std::vector<QVec>(d1, QVec(d2, Q(0))));
	mp.g1 = std::move(g1);
	mp.g2 = std::move(g2);
	return mp;
}

QVec MatchedPairLie::act_left(const QVec &y, const QVec &x) const
{
	QVec r(g1.dim(), Q(0));
	for (size_t a = 0; a < y.size(); ++a)
		for (size_t i = 0; i < x.size(); ++i) {
			if (y[a] == 0 || x[i] == 0)
				continue;
			for (size_t k = 0; k < r.size(); ++k)
				r[k] += y[a] * x[i] * left[a][i][k];
		}
	return r;
}

QVec MatchedPairLie::act_right(const QVec &y, const QVec &x) const
{
	QVec r(g2.dim(), Q(0));
	for (size_t a = 0; a < y.size(); ++a)
		for (size_t i = 0; i < x.size(); ++i) {
			if (y[a] == 0 || x[i] == 0)
				continue;
			for (size_t k = 0; k < r.size(); ++k)
				r[k] += y[a] * x[i] * right[a][i][k];
		}
	return r;
}

namespace {

QVec vsub(QVec a, const QVec &b)
{
	for (size_t i = 0; i < a.size(); ++i)
		a[i] -= b[i];
	return a;
}

QVec vadd(QVec a, const QVec &b)
{
	for (size_t i = 0; i < a.size(); ++i)
		a[i] += b[i];
	return a;
}

bool is_zero(const QVec &v)
{
	return std::all_of(v.begin(), v.end(), [](const Q &q) { return q == 0; });
}

} // namespace

std::vector<std::string> MatchedPairLie::validate() const
{
	std::vector<std::string> out;
	int d1 = static_cast<int>(g1.dim()), d2 = static_cast<int>(g2.dim());
	if (static_cast<int>(left.size()) != d2 || static_cast<int>(right.size()) != d2)
		throw Error("matched pair: action tensor dimension mismatch");
	const auto &n1 = g1.basis();
	const auto &n2 = g2.basis();
	for (int a = 0; a < d2; ++a)
		for (int b = 0; b < d2; ++b)
			for (int i = 0; i < d1; ++i) {
				QVec Y1 = g2.unit(a), Y2 = g2.unit(b), X = g1.unit(i);
				// [Y1,Y2] |> X = Y1 |> (Y2 |> X) - Y2 |> (Y1 |> X)
				QVec c1 = vsub(vadd(act_left(g2.bracket(Y1, Y2), X), act_left(Y2, act_left(Y1, X))),
				               act_left(Y1, act_left(Y2, X)));
				if (a < b && !is_zero(c1))
					out.push_back("lie.matched.cond1 (" + n2[a] + "," + n2[b] + ";" + n1[i] + ")");
				// [Y1,Y2] <| X = [Y1<|X, Y2] + [Y1, Y2<|X] + Y1 <| (Y2|>X) - Y2 <| (Y1|>X)
				QVec lhs = act_right(g2.bracket(Y1, Y2), X);
				QVec rhs = vadd(g2.bracket(act_right(Y1, X), Y2), g2.bracket(Y1, act_right(Y2, X)));
				rhs = vsub(vadd(rhs, act_right(Y1, act_left(Y2, X))), act_right(Y2, act_left(Y1, X)));
				if (a < b && !is_zero(vsub(lhs, rhs)))
					out.push_back("lie.matched.cond4 (" + n2[a] + "," + n2[b] + ";" + n1[i] + ")");
			}
	for (int a = 0; a < d2; ++a)
		for (int i = 0; i < d1; ++i)
			for (int j = 0; j < d1; ++j) {
				QVec Y = g2.unit(a), X1 = g1.unit(i), X2 = g1.unit(j);
				// Y <| [X1,X2] = (Y<|X1)<|X2 - (Y<|X2)<|X1
				QVec c2 = vsub(act_right(Y, g1.bracket(X1, X2)),
				               vsub(act_right(act_right(Y, X1), X2), act_right(act_right(Y, X2), X1)));
				if (i < j && !is_zero(c2))
					out.push_back("lie.matched.cond2 (" + n2[a] + ";" + n1[i] + "," + n1[j] + ")");
				// Y |> [X1,X2] = [Y|>X1,X2] + [X1,Y|>X2] + (Y<|X1)|>X2 - (Y<|X2)|>X1
				QVec rhs = vadd(g1.bracket(act_left(Y, X1), X2), g1.bracket(X1, act_left(Y, X2)));
				rhs = vsub(vadd(rhs, act_left(act_right(Y, X1), X2)), act_left(act_right(Y, X2), X1));
				if (i < j && !is_zero(vsub(act_left(Y, g1.bracket(X1, X2)), rhs)))
					out.push_back("lie.matched.cond3 (" + n2[a] + ";" + n1[i] + "," + n1[j] + ")");
			}
	return out;
}

LieAlgebra bicrossed_lie(const MatchedPairLie &mp)
{
	size_t d1 = mp.g1.dim(), d2 = mp.g2.dim(), n = d1 + d2;
	std::vector<std::string> names = mp.g1.basis();
	names.insert(names.end(), mp.g2.basis().begin(), mp.g2.basis().end());
	LieAlgebra g(names);
	for (size_t i = 0; i < n; ++i)
		for (size_t j = i + 1; j < n; ++j) {
			QVec v(n, Q(0));
			if (j < d1) {
				QVec b = mp.g1.bracket(mp.g1.unit(static_cast<int>(i)), mp.g1.unit(static_cast<int>(j)));
				for (size_t k = 0; k < d1; ++k)
					v[k] = b[k];
			} else if (i >= d1) {
				QVec b = mp.g2.bracket(mp.g2.unit(static_cast<int>(i - d1)), mp.g2.unit(static_cast<int>(j - d1)));
				for (size_t k = 0; k < d2; ++k)
					v[d1 + k] = b[k];
			} else {
				// [X, Y] = -(Y |> X) - (Y <| X)
				QVec X = mp.g1.unit(static_cast<int>(i)), Y = mp.g2.unit(static_cast<int>(j - d1));
				QVec l = mp.act_left(Y, X), r = mp.act_right(Y, X);
				for (size_t k = 0; k < d1; ++k)
					v[k] = -l[k];
				for (size_t k = 0; k < d2; ++k)
					v[d1 + k] = -r[k];
			}
			g.set_bracket(static_cast<int>(i), static_cast<int>(j), v);
		}
	return g;
}

std::vector<std::vector<int>> subsets(int n, int k)
{
	std::vector<std::vector<int>> out;
	if (k < 0 || k > n)
		return out;
	std::vector<int> cur(static_cast<size_t>(k));
	for (int i = 0; i < k; ++i)
		cur[static_cast<size_t>(i)] = i;
	for (;;) {
		out.push_back(cur);
		int i = k - 1;
		while (i >= 0 && cur[static_cast<size_t>(i)] == n - k + i)
			--i;
		if (i < 0)
			break;
		++cur[static_cast<size_t>(i)];
		for (int j = i + 1; j < k; ++j)
			cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
	}
	return out;
}

LieCochain ce_d(const LieAlgebra &g, const LieCochain &a)
{
	int n = static_cast<int>(g.dim());
	std::vector<LieCochain> de(static_cast<size_t>(n));
	for (int k = 0; k < n; ++k)
		for (int i = 0; i < n; ++i)
			for (int j = i + 1; j < n; ++j)
				lc_add(de[static_cast<size_t>(k)], {i, j}, -g.c(i, j, k));
	LieCochain r;
	for (auto &[key, c] : a)
		for (size_t pos = 0; pos < key.size(); ++pos) {
			LieCochain pre = lc_basis(std::vector<int>(key.begin(), key.begin() + static_cast<long>(pos)));
			LieCochain post = lc_basis(std::vector<int>(key.begin() + static_cast<long>(pos) + 1, key.end()));
			LieCochain t = lc_wedge(lc_wedge(pre, de[static_cast<size_t>(key[pos])]), post);
			Q s = pos % 2 ? -c : c;
			for (auto &[k2, c2] : t)
				lc_add(r, k2, s * c2);
		}
	return r;
}

QMat ce_matrix(const LieAlgebra &g, int k)
{
	int n = static_cast<int>(g.dim());
	auto src = subsets(n, k), dst = subsets(n, k + 1);
	std::map<std::vector<int>, size_t> row;
	for (size_t i = 0; i < dst.size(); ++i)
		row[dst[i]] = i;
	QMat m(dst.size(), QVec(src.size(), Q(0)));
	for (size_t j = 0; j < src.size(); ++j) {
		LieCochain img = ce_d(g, LieCochain{{src[j], Q(1)}});
		for (auto &[key, c] : img)
			m[row.at(key)][j] = c;
	}
	return m;
}

LieCochain interior(const LieCochain &a, const QVec &v)
{
	LieCochain r;
	for (auto &[key, c] : a)
		for (size_t pos = 0; pos < key.size(); ++pos) {
			const Q &w = v[static_cast<size_t>(key[pos])];
			if (w == 0)
				continue;
			std::vector<int> k2 = key;
			k2.erase(k2.begin() + static_cast<long>(pos));
			lc_add(r, k2, (pos % 2 ? -c : c) * w);
		}
	return r;
}

namespace {

std::map<std::vector<int>, size_t> index_map(const std::vector<std::vector<int>> &b)
{
	std::map<std::vector<int>, size_t> m;
	for (size_t i = 0; i < b.size(); ++i)
		m[b[i]] = i;
	return m;
}

LieCochain from_vec(const QVec &v, const std::vector<std::vector<int>> &b)
{
	LieCochain a;
	for (size_t i = 0; i < v.size(); ++i)
		lc_add(a, b[i], v[i]);
	return a;
}

} // namespace

std::vector<LieCochain> basic_cochains(const LieAlgebra &g, const std::vector<QVec> &h, int k)
{
	int n = static_cast<int>(g.dim());
	auto basis = subsets(n, k);
	if (h.empty()) {
		std::vector<LieCochain> out;
		for (auto &b : basis)
			out.push_back(LieCochain{{b, Q(1)}});
		return out;
	}
	auto lower = index_map(subsets(n, k - 1));
	auto same = index_map(subsets(n, k));
	size_t nl = lower.size(), ns = same.size();
	QMat constraints;
	for (auto &xi : h) {
		QMat a(nl, QVec(basis.size(), Q(0))), b(ns, QVec(basis.size(), Q(0)));
		for (size_t j = 0; j < basis.size(); ++j) {
			LieCochain e{{basis[j], Q(1)}};
			if (k > 0)
				for (auto &[kk, c] : interior(e, xi))
					a[lower.at(kk)][j] = c;
			for (auto &[kk, c] : interior(ce_d(g, e), xi))
				b[same.at(kk)][j] = c;
		}
		constraints.insert(constraints.end(), a.begin(), a.end());
		constraints.insert(constraints.end(), b.begin(), b.end());
	}
	std::vector<LieCochain> out;
	for (auto &v : kernel(constraints, basis.size()))
		out.push_back(from_vec(v, basis));
	return out;
}

Cohomology ce_cohomology(const LieAlgebra &g, const std::vector<QVec> &h)
{
	int n = static_cast<int>(g.dim());
	Cohomology out;
	// Work in coordinates relative to the basic subspace of each degree.
	std::vector<std::vector<LieCochain>> spaces;
	for (int k = 0; k <= n; ++k)
		spaces.push_back(basic_cochains(g, h, k));
	auto coords_in = [&](const LieCochain &a, int k) {
		// Solve a = sum x_i spaces[k][i].
		auto full = subsets(n, k);
		auto idx = index_map(full);
		const auto &sp = spaces[static_cast<size_t>(k)];
		QMat m(full.size(), QVec(sp.size() + 1, Q(0)));
		for (size_t i = 0; i < sp.size(); ++i)
			for (auto &[kk, c] : sp[i])
				m[idx.at(kk)][i] = c;
		for (auto &[kk, c] : a)
			m[idx.at(kk)][sp.size()] = c;
		Rref rr = rref(m, sp.size() + 1);
		QVec x(sp.size(), Q(0));
		for (size_t r = 0; r < rr.pivots.size(); ++r) {
			if (static_cast<size_t>(rr.pivots[r]) == sp.size())
				throw Error("ce_cohomology: differential leaves the basic subcomplex");
			x[static_cast<size_t>(rr.pivots[r])] = rr.r[r][sp.size()];
		}
		return x;
	};
	std::vector<QMat> dm; // dm[k]: spaces[k] -> spaces[k+1]
	for (int k = 0; k <= n; ++k) {
		const auto &sp = spaces[static_cast<size_t>(k)];
		size_t rows = k < n ? spaces[static_cast<size_t>(k + 1)].size() : 0;
		QMat m(rows, QVec(sp.size(), Q(0)));
		if (k < n)
			for (size_t j = 0; j < sp.size(); ++j) {
				QVec x = coords_in(ce_d(g, sp[j]), k + 1);
				for (size_t r = 0; r < rows; ++r)
					m[r][j] = x[r];
			}
		dm.push_back(std::move(m));
	}
	for (int k = 0; k <= n; ++k) {
		const auto &sp = spaces[static_cast<size_t>(k)];
		size_t dim = sp.size();
		auto ker = kernel(dm[static_cast<size_t>(k)], dim);
		// image of d_{k-1} in coordinates of spaces[k]
		QMat img; // rows = image vectors
		if (k > 0) {
			const QMat &prev = dm[static_cast<size_t>(k - 1)];
			QMat t = transpose(prev, spaces[static_cast<size_t>(k - 1)].size());
			img = rref(t, dim).r;
		}
		int b = static_cast<int>(ker.size()) - static_cast<int>(img.size());
		out.betti.push_back(b);
		Rref img_r = rref(img, dim);
		std::vector<LieCochain> reps;
		QMat acc = img_r.r;
		for (auto &v : ker) {
			QMat test = acc;
			test.push_back(v);
			if (rank(test, dim) == static_cast<int>(acc.size()))
				continue;
			// reduce v modulo the image for a canonical representative
			QVec w = v;
			for (size_t r = 0; r < img_r.pivots.size(); ++r) {
				Q f = w[static_cast<size_t>(img_r.pivots[r])];
				if (f == 0)
					continue;
				for (size_t c = 0; c < dim; ++c)
					w[c] -= f * img_r.r[r][c];
			}
			acc.push_back(v);
			LieCochain rep;
			for (size_t i = 0; i < dim; ++i)
				if (w[i] != 0)
					for (auto &[kk, c] : sp[i])
						lc_add(rep, kk, w[i] * c);
			reps.push_back(std::move(rep));
		}
		out.reps.push_back(std::move(reps));
	}
	return out;
}

QVec delta_character(const LieAlgebra &g)
{
	size_t n = g.dim();
	QVec d(n, Q(0));
	for (size_t i = 0; i < n; ++i)
		for (size_t k = 0; k < n; ++k)
			d[i] += g.c(static_cast<int>(i), static_cast<int>(k), static_cast<int>(k));
	return d;
}

SplitCochain natural_split(const LieCochain &w, int d1)
{
	SplitCochain out;
	for (auto &[k, c] : w) {
		std::vector<int> I, J;
		for (int i : k) {
			if (i < d1)
				I.push_back(i);
			else
				J.push_back(i - d1);
		}
		int q = static_cast<int>(I.size()), p = static_cast<int>(J.size());
		out[{q, p}][{I, J}] += c;
	}
	return out;
}

LieCochain natural_join(const SplitCochain &s, int d1)
{
	LieCochain w;
	for (auto &[qp, m] : s)
		for (auto &[IJ, c] : m) {
			std::vector<int> k = IJ.first;
			for (int j : IJ.second)
				k.push_back(j + d1);
			lc_add(w, k, c);
		}
	return w;
}

} // namespace hcc
