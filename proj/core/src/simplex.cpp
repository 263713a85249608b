#include "hcc/simplex.hpp"

#include <cstdio>

namespace hcc {

Sym simplex_param(int i)
{
	char buf[16];
	std::snprintf(buf, sizeof buf, "_t%02d", i);
	return Sym(buf);
}

std::map<Sym, ScalarExpr> simplex_parametrization(const AffineSimplex &s)
{
	if (s.vertices.empty())
		throw Error("simplex without vertices");
	std::map<Sym, ScalarExpr> sub;
	for (size_t c = 0; c < s.coords.size(); ++c) {
		const ScalarExpr &v0 = s.vertices[0].at(c);
		ScalarExpr x = v0;
		for (int i = 1; i <= s.p(); ++i)
			x += ScalarExpr::var(simplex_param(i)) * (s.vertices[static_cast<size_t>(i)].at(c) - v0);
		sub.emplace(s.coords[c], std::move(x));
	}
	return sub;
}

Q dirichlet(const std::vector<int> &a)
{
	Q num = 1;
	int tot = static_cast<int>(a.size());
	for (int e : a) {
		num *= factorial(e);
		tot += e;
	}
	return num / factorial(tot);
}

ScalarExpr integrate_standard(const ScalarExpr &q, const std::vector<Sym> &t)
{
	ScalarExpr r;
	for (auto &[ex, c] : q.split(t))
		r += c * dirichlet(ex);
	return r;
}

ScalarExpr integrate_over_simplex(const PolyForm &w, const AffineSimplex &s)
{
	const int p = s.p();
	if (w.is_zero())
		return {};
	if (w.degree() != p)
		throw Error("integrate_over_simplex: form degree " + std::to_string(w.degree()) + " != simplex dimension " +
		            std::to_string(p));
	std::vector<Sym> t;
	for (int i = 1; i <= p; ++i)
		t.push_back(simplex_param(i));
	PolyForm pulled = w.pullback(simplex_parametrization(s), t);
	PolyForm::Key top;
	for (auto &ti : t)
		top.push_back(dsym(ti));
	if (p == 0)
		return pulled.scalar();
	for (auto &[k, c] : pulled.terms())
		if (k != top)
			throw Error("integrate_over_simplex: form has directions outside the simplex");
	return integrate_standard(pulled.coeff(top), t);
}

} // namespace hcc
