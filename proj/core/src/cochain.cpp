#include "hcc/cochain.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace hcc {

void GCochain::add(const std::vector<int> &I, const ScalarExpr &v)
{
	if (v.is_zero())
		return;
	auto it = c.find(I);
	if (it == c.end()) {
		c.emplace(I, v);
		return;
	}
	it->second += v;
	if (it->second.is_zero())
		c.erase(it);
}

CochainMaps::CochainMaps(const Model &m) : m_(m), g_(m.grp()), d1_(m.d1()), d2_(m.d2())
{
	if (!g_.h2.empty())
		throw Error("cochain maps: nontrivial reductive block is not supported");
	frame_ = g_.frame();
	frame1_ = g_.frame1();
}

std::vector<Point> CochainMaps::vertices(int p) const
{
	std::vector<Point> v;
	for (int k = 0; k <= p; ++k)
		v.push_back(vertex(k));
	return v;
}

PolyForm CochainMaps::extend(const LieCochain &w) const
{
	std::map<Sym, PolyForm> g;
	for (size_t k = 0; k < frame_.size(); ++k)
		g[coframe_sym(static_cast<int>(k) + 1)] = frame_[k];
	return cochain_to_form(w).substitute_generators(g);
}

static std::map<Sym, ScalarExpr> full_subst(const GroupModel &g, const Point &img)
{
	std::map<Sym, ScalarExpr> s;
	auto all = g.all_coords();
	for (size_t i = 0; i < all.size(); ++i)
		s[all[i]] = img[i];
	return s;
}

PolyForm CochainMaps::nu_pullback(const LieCochain &w) const
{
	return extend(w).pullback(full_subst(g_, g_.nu(g_.vars1(), g_.vars2())), g_.all_coords());
}

PolyForm CochainMaps::nu_hat_pullback(const LieCochain &w) const
{
	return extend(w).pullback(full_subst(g_, g_.nu_hat(g_.vars1(), g_.vars2())), g_.all_coords());
}

std::map<std::vector<int>, PolyForm> CochainMaps::contract_part(const PolyForm &pulled, int q) const
{
	std::map<std::vector<int>, PolyForm> out;
	std::map<Sym, ScalarExpr> at0;
	std::vector<Sym> dphi;
	for (auto &c : g_.c1) {
		at0[c] = ScalarExpr();
		dphi.push_back(dsym(c));
	}
	for (auto &I : subsets(static_cast<int>(d1_), q)) {
		PolyForm f = pulled;
		for (int i : I)
			f = f.contract(dsym(g_.c1[i]));
		f = f.subst_coeffs(at0).drop(dphi);
		if (!f.is_zero())
			out[I] = f;
	}
	return out;
}

std::map<std::vector<int>, PolyForm> CochainMaps::mu(const LieCochain &w, int q) const
{
	return contract_part(nu_hat_pullback(w), q);
}

GCochain CochainMaps::E(const LieCochain &w, int p, int q) const
{
	GCochain r;
	r.p = p;
	r.q = q;
	auto simplex = g_.build_simplex(vertices(p));
	for (auto &[I, f] : mu(w, q)) {
		PolyForm part = f.homogeneous_part(p);
		if (!part.is_zero())
			r.add(I, integrate_over_simplex(part, simplex));
	}
	return r;
}

std::vector<GCochain> CochainMaps::E_all(const LieCochain &w) const
{
	std::vector<GCochain> out;
	std::map<int, LieCochain> byDeg;
	for (auto &[k, c] : w)
		lc_add(byDeg[static_cast<int>(k.size())], k, c);
	for (auto &[n, h] : byDeg) {
		PolyForm pulled = nu_hat_pullback(h);
		for (int q = 0; q <= std::min<int>(n, static_cast<int>(d1_)); ++q) {
			int p = n - q;
			if (p > static_cast<int>(d2_))
				continue;
			GCochain r;
			r.p = p;
			r.q = q;
			auto simplex = g_.build_simplex(vertices(p));
			for (auto &[I, f] : contract_part(pulled, q)) {
				PolyForm part = f.homogeneous_part(p);
				if (!part.is_zero())
					r.add(I, integrate_over_simplex(part, simplex));
			}
			if (!r.is_zero())
				out.push_back(std::move(r));
		}
	}
	return out;
}

std::map<Sym, ScalarExpr> CochainMaps::vertex_subst(const std::vector<Point> &pts) const
{
	std::map<Sym, ScalarExpr> s;
	for (size_t k = 0; k < pts.size(); ++k)
		for (size_t i = 0; i < d2_; ++i)
			s[vertex_sym(g_.c2[i], static_cast<int>(k))] = pts[k][i];
	return s;
}

GCochain CochainMaps::at(const GCochain &a, const std::vector<Point> &pts) const
{
	auto s = vertex_subst(pts);
	GCochain r;
	r.p = a.p;
	r.q = a.q;
	for (auto &[I, c] : a.c)
		r.add(I, c.subst(s));
	return r;
}

DCochain CochainMaps::at(const DCochain &d, const std::vector<Point> &pts) const
{
	return DCochain{d.p, d.q, d.f.subst_coeffs(vertex_subst(pts))};
}

DCochain CochainMaps::Theta(const GCochain &a) const
{
	std::vector<Point> moved;
	for (int k = 0; k <= a.p; ++k)
		moved.push_back(g_.act_right(vertex(k), g_.vars1()));
	auto s = vertex_subst(moved);
	DCochain r{a.p, a.q, {}};
	for (auto &[I, c] : a.c) {
		PolyForm t(c.subst(s));
		for (int i : I)
			t = t.wedge(frame1_[i]);
		r.f += t;
	}
	return r;
}

GCochain CochainMaps::Theta_inv(const DCochain &d) const
{
	std::map<Sym, ScalarExpr> at0;
	for (auto &c : g_.c1)
		at0[c] = ScalarExpr();
	GCochain r;
	r.p = d.p;
	r.q = d.q;
	for (auto &[k, c] : d.f.terms()) {
		std::vector<int> I;
		for (auto &g : k) {
			auto it = std::find(g_.c1.begin(), g_.c1.end(), coord_of(g));
			if (!is_differential(g) || it == g_.c1.end())
				throw Error("Theta^{-1}: unexpected generator " + g.name());
			I.push_back(static_cast<int>(it - g_.c1.begin()));
		}
		r.add(I, c.subst(at0));
	}
	return r;
}

// substitution sending vertex k of a (p+1)-simplex face to vertex k or k+1
static std::vector<std::map<Sym, ScalarExpr>> face_substs(const CochainMaps &cm, int p)
{
	std::vector<std::map<Sym, ScalarExpr>> out;
	for (int j = 0; j <= p + 1; ++j) {
		std::vector<Point> pts;
		for (int k = 0; k <= p; ++k)
			pts.push_back(cm.vertex(k < j ? k : k + 1));
		out.push_back(cm.vertex_subst(pts));
	}
	return out;
}

GCochain CochainMaps::d1(const GCochain &a) const
{
	GCochain r;
	r.p = a.p + 1;
	r.q = a.q;
	auto fs = face_substs(*this, a.p);
	for (int j = 0; j <= a.p + 1; ++j) {
		Q sg = (a.q + j) % 2 ? -1 : 1;
		for (auto &[I, c] : a.c)
			r.add(I, c.subst(fs[j]) * sg);
	}
	return r;
}

DCochain CochainMaps::d1(const DCochain &d) const
{
	DCochain r{d.p + 1, d.q, {}};
	auto fs = face_substs(*this, d.p);
	for (int j = 0; j <= d.p + 1; ++j) {
		Q sg = (d.q + j) % 2 ? -1 : 1;
		r.f += d.f.subst_coeffs(fs[j]) * ScalarExpr(sg);
	}
	return r;
}

DCochain CochainMaps::d2(const DCochain &d) const { return DCochain{d.p, d.q + 1, d.f.d(g_.c1)}; }

static void permutations_with_sign(int n, const std::function<void(const std::vector<int> &, int)> &f)
{
	std::vector<int> perm(static_cast<size_t>(n));
	std::iota(perm.begin(), perm.end(), 0);
	do {
		int inv = 0;
		for (int a = 0; a < n; ++a)
			for (int b = a + 1; b < n; ++b)
				if (perm[a] > perm[b])
					++inv;
		f(perm, inv % 2 ? -1 : 1);
	} while (std::next_permutation(perm.begin(), perm.end()));
}

LieCochain CochainMaps::j(const GCochain &a) const
{
	int p = a.p;
	std::vector<Sym> s;
	std::map<Sym, ScalarExpr> at0;
	for (int i = 0; i < p; ++i) {
		s.push_back(Sym("_s" + std::to_string(i + 1)));
		at0[s.back()] = ScalarExpr();
	}
	SplitCochain split;
	for (auto &J : subsets(static_cast<int>(d2_), p)) {
		std::map<std::vector<int>, ScalarExpr> tot;
		permutations_with_sign(p, [&](const std::vector<int> &perm, int sg) {
			std::vector<Point> v{g_.zero2()};
			for (int k = 0; k < p; ++k) {
				Point step = g_.zero2();
				step[J[perm[k]]] = ScalarExpr::var(s[perm[k]]);
				v.push_back(g_.mul_2(v.back(), step));
			}
			auto vs = vertex_subst(v);
			for (auto &[I, c] : a.c) {
				ScalarExpr e = c.subst(vs);
				for (auto &si : s)
					e = e.diff(si);
				e = e.subst(at0);
				if (!e.is_zero())
					tot[I] += e * Q(sg);
			}
		});
		for (auto &[I, c] : tot)
			if (!c.is_zero())
				split[{a.q, p}][{I, J}] += c.constant();
	}
	LieCochain out = natural_join(split, static_cast<int>(d1_));
	for (auto it = out.begin(); it != out.end();)
		it = it->second == 0 ? out.erase(it) : std::next(it);
	return out;
}

bool CochainMaps::strongly_covariant(const DCochain &d, std::string *why) const
{
	Point phip = g_.labeled1("p");
	std::vector<Point> moved;
	for (int k = 0; k <= d.p; ++k)
		moved.push_back(g_.act_right(vertex(k), phip));
	PolyForm lhs = d.f.subst_coeffs(vertex_subst(moved));
	Point prod = g_.mul_1(phip, g_.vars1());
	std::map<Sym, ScalarExpr> s;
	for (size_t i = 0; i < d1_; ++i)
		s[g_.c1[i]] = prod[i];
	PolyForm rhs = d.f.pullback(s, g_.c1);
	if (lhs == rhs)
		return true;
	if (why)
		*why = "difference " + (lhs - rhs).text();
	return false;
}

bool CochainMaps::right_invariant(const GCochain &a, std::string *why) const
{
	Point r = g_.labeled2("r");
	std::vector<Point> moved;
	for (int k = 0; k <= a.p; ++k)
		moved.push_back(g_.mul_2(vertex(k), r));
	GCochain b = at(a, moved);
	if (b == a)
		return true;
	if (why)
		for (auto &[I, c] : a.c) {
			auto it = b.c.find(I);
			ScalarExpr diff = c - (it == b.c.end() ? ScalarExpr() : it->second);
			if (!diff.is_zero()) {
				*why = "component " + std::to_string(I.size()) + "-form differs by " + diff.text();
				break;
			}
		}
	return false;
}

bool CochainMaps::antisymmetric(const GCochain &a, std::string *why) const
{
	if (a.p < 1)
		return true;
	for (int k = 0; k + 1 <= a.p; ++k) {
		auto pts = vertices(a.p);
		std::swap(pts[k], pts[k + 1]);
		GCochain b = at(a, pts);
		for (auto &[I, c] : b.c)
			c = -c;
		if (!(b == a)) {
			if (why)
				*why = "swap of vertices " + std::to_string(k) + "," + std::to_string(k + 1);
			return false;
		}
	}
	return true;
}

std::vector<DCochain> total_coboundary(const CochainMaps &cm, const std::vector<DCochain> &parts)
{
	std::map<std::pair<int, int>, PolyForm> acc;
	for (auto &d : parts) {
		auto a = cm.d1(d);
		acc[{a.p, a.q}] += a.f;
		auto b = cm.d2(d);
		acc[{b.p, b.q}] += b.f;
	}
	std::vector<DCochain> out;
	for (auto &[pq, f] : acc)
		out.push_back(DCochain{pq.first, pq.second, f});
	return out;
}

std::vector<Check> check_chain_map(const CochainMaps &cm, const LieCochain &w, const std::string &label)
{
	Check c{"cochain.chain_map." + label, true, ""};
	LieCochain dw = ce_d(cm.model().algebra(), w);
	if (!dw.empty()) {
		c.ok = false;
		c.detail = "class is not closed";
		return {c};
	}
	std::vector<DCochain> parts;
	for (auto &g : cm.E_all(w))
		parts.push_back(cm.Theta(g));
	for (auto &t : total_coboundary(cm, parts))
		if (!t.is_zero()) {
			c.ok = false;
			c.detail = "bidegree (" + std::to_string(t.p) + "," + std::to_string(t.q) + "): " + t.f.text();
			break;
		}
	return {c};
}

std::vector<Check> check_j_roundtrip(const CochainMaps &cm, int max_degree)
{
	std::vector<Check> out;
	int n = static_cast<int>(cm.model().d1() + cm.model().d2());
	for (int k = 0; k <= std::min(max_degree, n); ++k) {
		Check c{"cochain.j_roundtrip.deg" + std::to_string(k), true, ""};
		for (auto &I : subsets(n, k)) {
			LieCochain w = lc_basis(I), back;
			for (auto &g : cm.E_all(w))
				for (auto &[key, v] : cm.j(g))
					lc_add(back, key, v);
			if (back != w) {
				c.ok = false;
				std::string s;
				for (int i : I)
					s += (s.empty() ? "" : ",") + std::to_string(i);
				c.detail = "basis element {" + s + "}";
				break;
			}
		}
		out.push_back(c);
	}
	return out;
}

std::vector<Check> check_theta_roundtrip(const CochainMaps &cm, const LieCochain &w, const std::string &label)
{
	Check rt{"cochain.theta_roundtrip." + label, true, ""};
	Check sc{"cochain.strong_covariance." + label, true, ""};
	for (auto &g : cm.E_all(w)) {
		DCochain d = cm.Theta(g);
		if (!(cm.Theta_inv(d) == g) && rt.ok) {
			rt.ok = false;
			rt.detail = "bidegree (" + std::to_string(g.p) + "," + std::to_string(g.q) + ")";
		}
		std::string why;
		if (sc.ok && !cm.strongly_covariant(d, &why)) {
			sc.ok = false;
			sc.detail = "bidegree (" + std::to_string(g.p) + "," + std::to_string(g.q) + "): " + why;
		}
	}
	return {rt, sc};
}

} // namespace hcc
