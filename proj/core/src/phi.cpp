#include "hcc/phi.hpp"

#include <algorithm>

namespace hcc {

PhiMap::PhiMap(const CochainMaps &cm) : cm_(cm), g_(cm.group()), c1_(cm.group().c1)
{
	for (size_t i = 0; i < c1_.size(); ++i)
		if (g_.left[i] != ScalarExpr::var(c1_[i]))
			throw Error("Phi: only a trivial left action of G2 on G1 is supported");
}

static void fadd(FForm &f, const std::vector<Sym> &k, const Fn &v)
{
	if (v.is_zero())
		return;
	auto [it, ins] = f.try_emplace(k, v);
	if (!ins) {
		it->second += v;
		if (it->second.is_zero())
			f.erase(it);
	}
}

static void cadd(CElem &c, const CKey &k, const FForm &f)
{
	if (f.empty())
		return;
	auto &slot = c[k];
	for (auto &[key, v] : f)
		fadd(slot, key, v);
	if (slot.empty())
		c.erase(k);
}

// sort with sign; 0 on a repeated entry
template <class T> static int sort_sign(std::vector<T> &v)
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

FForm PhiMap::wedge(const FForm &a, const FForm &b) const
{
	FForm r;
	for (auto &[ka, fa] : a)
		for (auto &[kb, fb] : b) {
			std::vector<Sym> k = ka;
			k.insert(k.end(), kb.begin(), kb.end());
			int s = sort_sign(k);
			if (s == 0)
				continue;
			Fn prod = fa * fb;
			fadd(r, k, s > 0 ? prod : -prod);
		}
	return r;
}

CElem PhiMap::from_conv(const ConvTerms &a) const
{
	CElem r;
	for (auto &[psi, f] : a)
		cadd(r, CKey{{}, psi}, FForm{{{}, f}});
	return r;
}

CElem PhiMap::d(const ConvTerms &a) const
{
	CElem r;
	for (auto &[psi, f] : a) {
		FForm df;
		for (size_t k = 0; k < c1_.size(); ++k)
			fadd(df, {dsym(c1_[k])}, f.diff(c1_, k));
		cadd(r, CKey{{}, psi}, df);
		if (!is_identity_point(psi))
			cadd(r, CKey{{psi}, psi}, FForm{{{}, -f}});
	}
	return r;
}

CElem PhiMap::mul(const CElem &a, const CElem &b) const
{
	CElem r;
	for (auto &[ka, wa] : a)
		for (auto &[kb, wb] : b) {
			// U*_g delta_x = (delta_{x g} - delta_g) U*_g, expanded over kb.deltas
			std::vector<std::pair<std::vector<Point>, int>> moved{{ka.deltas, 1}};
			for (auto &x : kb.deltas) {
				Point xg = g_.mul_2(x, ka.U);
				std::vector<std::pair<std::vector<Point>, int>> nx;
				for (auto &[ds, s] : moved) {
					for (int pick = 0; pick < 2; ++pick) {
						const Point &pt = pick ? ka.U : xg;
						if (is_identity_point(pt))
							continue;
						auto nd = ds;
						nd.push_back(pt);
						nx.emplace_back(std::move(nd), pick ? -s : s);
					}
				}
				moved = std::move(nx);
			}
			Point U = g_.mul_2(kb.U, ka.U);
			size_t na = ka.deltas.size();
			for (auto &[ds, s0] : moved) {
				auto sorted = ds;
				int s = sort_sign(sorted);
				if (s == 0)
					continue;
				s *= s0;
				FForm w;
				// move the form of b past the deltas of a
				for (auto &[kw, fw] : wb)
					fadd(w, kw, ((na * kw.size()) % 2) ? -fw : fw);
				FForm prod = wedge(wa, w);
				if (s < 0)
					for (auto &[k, f] : prod)
						f = -f;
				cadd(r, CKey{sorted, U}, prod);
			}
		}
	return r;
}

Fn PhiMap::gamma_tilde_integrand(const DCochain &g, const CElem &c, bool strict) const
{
	size_t n = c1_.size();
	std::vector<Sym> top;
	for (auto &x : c1_)
		top.push_back(dsym(x));
	Fn total;
	for (auto &[k, w] : c) {
		if (static_cast<int>(k.deltas.size()) != g.p) {
			if (strict)
				throw Error("gamma~: expected " + std::to_string(g.p) + " delta factors, got " +
				            std::to_string(k.deltas.size()));
			continue;
		}
		if (!is_identity_point(k.U)) {
			if (is_concrete_point(k.U))
				continue;
			throw Error("gamma~: cannot decide whether a symbolic group element is e");
		}
		std::vector<Point> pts{g_.zero2()};
		pts.insert(pts.end(), k.deltas.begin(), k.deltas.end());
		PolyForm gv = g.f.subst_coeffs(cm_.vertex_subst(pts));
		for (auto &[kw, fw] : w) {
			if (kw.size() + static_cast<size_t>(g.q) != n) {
				if (strict)
					throw Error("gamma~: form degree does not complement the cochain");
				continue;
			}
			for (auto &[kg, cg] : gv.terms()) {
				std::vector<Sym> all = kw;
				all.insert(all.end(), kg.begin(), kg.end());
				// sign relative to the coordinate orientation
				std::vector<size_t> pos;
				for (auto &s : all)
					pos.push_back(static_cast<size_t>(std::find(top.begin(), top.end(), s) - top.begin()));
				int sg = sort_sign(pos);
				if (sg == 0)
					continue;
				Fn term = fw * Fn(cg);
				total += sg > 0 ? term : -term;
			}
		}
	}
	return total;
}

Integral PhiMap::gamma_tilde(const DCochain &g, const CElem &c, bool strict) const
{
	return integrate_fn(gamma_tilde_integrand(g, c, strict), c1_);
}

Fn PhiMap::phi_integrand(const DCochain &g, const std::vector<ConvTerms> &a) const
{
	int l = static_cast<int>(a.size()) - 1;
	if (l != target_degree(g))
		throw Error("Phi: cochain of bidegree (" + std::to_string(g.p) + "," + std::to_string(g.q) + ") takes " +
		            std::to_string(target_degree(g) + 1) + " arguments, got " + std::to_string(a.size()));
	std::vector<CElem> da;
	for (auto &x : a)
		da.push_back(d(x));
	CElem a0 = from_conv(a[0]);
	CElem sum;
	for (int j = 0; j <= l; ++j) {
		CElem prod;
		bool first = true;
		auto push = [&](const CElem &e) {
			prod = first ? e : mul(prod, e);
			first = false;
		};
		for (int i = j + 1; i <= l; ++i)
			push(da[i]);
		push(a0);
		for (int i = 1; i <= j; ++i)
			push(da[i]);
		bool neg = (j * (l - j)) % 2;
		for (auto &[k, w] : prod) {
			FForm ww = w;
			if (neg)
				for (auto &[kk, f] : ww)
					f = -f;
			cadd(sum, k, ww);
		}
	}
	Q pre = factorial(g.p) / factorial(l + 1);
	return gamma_tilde_integrand(g, sum) * Fn(ScalarExpr(pre));
}

Integral PhiMap::phi(const DCochain &g, const std::vector<ConvTerms> &a) const
{
	return integrate_fn(phi_integrand(g, a), c1_);
}

std::map<Sym, ScalarExpr> PhiMap::support_subst(int l) const
{
	Point prod = g_.zero2();
	for (int i = l; i >= 1; --i)
		prod = g_.mul_2(prod, cm_.vertex(i));
	Point p0 = g_.inv_2(prod);
	std::map<Sym, ScalarExpr> s;
	for (size_t i = 0; i < g_.d2(); ++i)
		s[vertex_sym(g_.c2[i], 0)] = p0[i];
	return s;
}

std::vector<ConvTerms> PhiMap::probes(int l, bool support) const
{
	std::vector<ConvTerms> out;
	auto s = support_subst(l);
	for (int i = 0; i <= l; ++i) {
		Point psi = cm_.vertex(i);
		if (support && i == 0)
			for (size_t k = 0; k < psi.size(); ++k)
				psi[k] = psi[k].subst(s);
		out.push_back({{psi, Fn::formal(Sym("f" + std::to_string(i)), c1_.size())}});
	}
	return out;
}

Tensor representative_word(const PhiMap &pm, const Fn &integrand, int l)
{
	const GroupModel &g = pm.cochains().group();
	auto frame1 = g.frame1();
	std::vector<int> zero(pm.coords().size(), 0);
	bool coordinate_fields = true;
	for (size_t i = 0; i < frame1.size(); ++i)
		if (frame1[i] != PolyForm::d(pm.coords()[i]))
			coordinate_fields = false;
	std::map<Sym, ScalarExpr> at0;
	for (auto &c : pm.coords())
		at0[c] = ScalarExpr();
	std::vector<Sym> vars;
	for (int i = 1; i <= l; ++i)
		for (auto &c : g.c2)
			vars.push_back(vertex_sym(c, i));
	size_t d2 = g.d2();
	Tensor w;
	for (auto &[key, c] : integrand.terms()) {
		if (key.gauss != 0 || static_cast<int>(key.factors.size()) != l + 1)
			throw Error("representative word: integrand is not multilinear in the probes");
		std::vector<Exp> ders(static_cast<size_t>(l) + 1);
		for (auto &f : key.factors) {
			int idx = std::stoi(f.name.name().substr(1));
			ders.at(static_cast<size_t>(idx)) = f.der;
		}
		if (ders[0] != zero)
			throw Error("representative word: derivative on f0");
		for (auto &d : ders)
			if (d != zero && !coordinate_fields)
				throw Error("representative word: derivatives need coordinate invariant fields");
		ScalarExpr c0 = c.subst(at0);
		for (auto &[ex, v] : c0.split(vars)) {
			std::vector<HKey> word;
			for (int i = 1; i <= l; ++i) {
				Exp f(ex.begin() + static_cast<long>((i - 1) * d2), ex.begin() + static_cast<long>(i * d2));
				word.push_back(HKey{f, ders[static_cast<size_t>(i)]});
			}
			acc(w, word, v.constant());
		}
	}
	return w;
}

int hp_parity(int degree, size_t dim_g1) { return static_cast<int>((static_cast<size_t>(degree) + dim_g1) % 2); }

} // namespace hcc
