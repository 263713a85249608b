#include "hcc/group.hpp"

namespace hcc {

Sym vertex_sym(const Sym &c, const std::string &k) { return Sym(c.name() + "_" + k); }

Sym point_sym(const Sym &c, int which) { return Sym(c.name() + "." + std::to_string(which)); }

std::map<Sym, ScalarExpr> point_subst(const std::vector<Sym> &coords, const Point &p)
{
	if (coords.size() != p.size())
		throw Error("point dimension mismatch");
	std::map<Sym, ScalarExpr> s;
	for (size_t i = 0; i < coords.size(); ++i)
		s.emplace(coords[i], p[i]);
	return s;
}

namespace {

Point subst_all(const std::vector<ScalarExpr> &v, const std::map<Sym, ScalarExpr> &s)
{
	Point r;
	r.reserve(v.size());
	for (auto &e : v)
		r.push_back(e.subst(s));
	return r;
}

Check compare(const std::string &name, const Point &a, const Point &b)
{
	Check c{name, true, ""};
	for (size_t i = 0; i < a.size(); ++i)
		if (a[i] != b[i]) {
			c.ok = false;
			c.detail = "component " + std::to_string(i) + ": " + a[i].text() + " != " + b[i].text();
			break;
		}
	return c;
}

Check compare_mat(const std::string &name, const SMat &a, const SMat &b)
{
	for (size_t i = 0; i < a.size(); ++i)
		for (size_t j = 0; j < a[i].size(); ++j)
			if (a[i][j] != b[i][j])
				return {name, false,
				        "entry (" + std::to_string(i) + "," + std::to_string(j) + "): " + a[i][j].text() +
				            " != " + b[i][j].text()};
	return {name, true, ""};
}

} // namespace

Point GroupModel::vars1() const
{
	Point p;
	for (auto &c : c1)
		p.push_back(ScalarExpr::var(c));
	return p;
}

Point GroupModel::vars2() const
{
	Point p;
	for (auto &c : c2)
		p.push_back(ScalarExpr::var(c));
	return p;
}

Point GroupModel::labeled1(const std::string &k) const
{
	Point p;
	for (auto &c : c1)
		p.push_back(ScalarExpr::var(vertex_sym(c, k)));
	return p;
}

Point GroupModel::labeled2(const std::string &k) const
{
	Point p;
	for (auto &c : c2)
		p.push_back(ScalarExpr::var(vertex_sym(c, k)));
	return p;
}

Point GroupModel::law(const std::vector<ScalarExpr> &l, const std::vector<Sym> &c, const Point &a, const Point &b)
{
	std::map<Sym, ScalarExpr> s;
	for (size_t i = 0; i < c.size(); ++i) {
		s.emplace(point_sym(c[i], 1), a.at(i));
		s.emplace(point_sym(c[i], 2), b.at(i));
	}
	return subst_all(l, s);
}

Point GroupModel::mul_1(const Point &a, const Point &b) const { return law(mul1, c1, a, b); }
Point GroupModel::mul_2(const Point &a, const Point &b) const { return law(mul2, c2, a, b); }
Point GroupModel::inv_1(const Point &a) const { return subst_all(inv1, point_subst(c1, a)); }
Point GroupModel::inv_2(const Point &a) const { return subst_all(inv2, point_subst(c2, a)); }

Point GroupModel::act_left(const Point &psi, const Point &phi) const
{
	auto s = point_subst(c2, psi);
	s.merge(point_subst(c1, phi));
	return subst_all(left, s);
}

Point GroupModel::act_right(const Point &psi, const Point &phi) const
{
	auto s = point_subst(c2, psi);
	s.merge(point_subst(c1, phi));
	return subst_all(right, s);
}

SMat GroupModel::gamma() const
{
	Point l = act_left(inv_2(vars2()), vars1());
	auto at_e = point_subst(c1, zero1());
	SMat g(d1(), std::vector<ScalarExpr>(d1()));
	for (size_t i = 0; i < d1(); ++i)
		for (size_t j = 0; j < d1(); ++j)
			g[i][j] = l[j].diff(c1[i]).subst(at_e);
	return g;
}

SMat GroupModel::big_gamma() const
{
	return smat_subst(gamma(), point_subst(c2, act_right(vars2(), vars1())));
}

ScalarExpr GroupModel::sigma() const { return smat_det(gamma()); }

namespace {

std::vector<PolyForm> factor_frame(const std::vector<ScalarExpr> &mul, const std::vector<Sym> &c)
{
	size_t n = c.size();
	std::map<Sym, ScalarExpr> at;
	for (auto &x : c) {
		at.emplace(point_sym(x, 1), ScalarExpr::var(x));
		at.emplace(point_sym(x, 2), ScalarExpr());
	}
	SMat J(n, std::vector<ScalarExpr>(n));
	for (size_t j = 0; j < n; ++j)
		for (size_t k = 0; k < n; ++k)
			J[j][k] = mul[j].diff(point_sym(c[k], 2)).subst(at);
	SMat Ji = smat_inverse_const_det(J);
	std::vector<PolyForm> out;
	for (size_t j = 0; j < n; ++j) {
		PolyForm th;
		for (size_t k = 0; k < n; ++k)
			th += PolyForm::d(c[k]) * Ji[j][k];
		out.push_back(th);
	}
	return out;
}

} // namespace

std::vector<PolyForm> GroupModel::frame1() const { return factor_frame(mul1, c1); }
std::vector<PolyForm> GroupModel::frame2() const { return factor_frame(mul2, c2); }

std::vector<PolyForm> GroupModel::frame() const
{
	auto f = frame1();
	auto g = frame2();
	f.insert(f.end(), g.begin(), g.end());
	return f;
}

std::vector<Sym> GroupModel::all_coords() const
{
	auto c = c1;
	c.insert(c.end(), c2.begin(), c2.end());
	return c;
}

Point GroupModel::nu(const Point &phi, const Point &psi) const
{
	Point r = phi;
	Point t = inv_2(act_right(psi, phi));
	r.insert(r.end(), t.begin(), t.end());
	return r;
}

Point GroupModel::nu_hat(const Point &phi, const Point &psi) const { return nu(phi, inv_2(psi)); }

AffineSimplex GroupModel::build_simplex(const std::vector<Point> &vertices) const
{
	if (!h2.empty())
		throw Error("build_simplex: nontrivial reductive block is not supported");
	AffineSimplex s;
	s.coords = c2;
	s.vertices = vertices;
	for (auto &v : vertices)
		if (v.size() != d2())
			throw Error("build_simplex: vertex dimension mismatch");
	return s;
}

Check GroupModel::check_affine() const
{
	for (size_t j = 0; j < right.size(); ++j) {
		ScalarExpr e = right[j];
		for (auto &[m, c] : e.terms()) {
			int deg = 0;
			for (auto &x : c2)
				deg += m.degree_in(x);
			if (deg > 1)
				return {"group.affine_right_action", false,
				        "coordinate " + c2[j].name() + " of psi<|phi is not affine in psi: " + e.text()};
		}
	}
	return {"group.affine_right_action", true, ""};
}

std::vector<Check> GroupModel::check_frames() const
{
	std::vector<Check> out;
	auto one = [&](const std::string &nm, const std::vector<PolyForm> &fr, const std::vector<Sym> &c,
	               const Point &moved) {
		Check ch{nm, true, ""};
		auto s = point_subst(c, moved);
		for (size_t i = 0; i < fr.size(); ++i) {
			PolyForm p = fr[i].pullback(s, c);
			if (p != fr[i]) {
				ch.ok = false;
				ch.detail = "theta_" + std::to_string(i + 1) + ": " + p.text() + " != " + fr[i].text();
				break;
			}
		}
		out.push_back(ch);
	};
	one("group.frame.g1.left_invariant", frame1(), c1, mul_1(labeled1("a"), vars1()));
	one("group.frame.g2.left_invariant", frame2(), c2, mul_2(labeled2("a"), vars2()));
	return out;
}

std::vector<Check> GroupModel::check_axioms() const
{
	std::vector<Check> out;
	if (!h2.empty())
		out.push_back({"group.h2_trivial", false, "reductive block is not supported"});
	Point a1 = labeled1("a"), b1 = labeled1("b"), e1 = labeled1("c");
	Point a2 = labeled2("a"), b2 = labeled2("b"), e2 = labeled2("c");
	out.push_back(compare("group.g1.assoc", mul_1(mul_1(a1, b1), e1), mul_1(a1, mul_1(b1, e1))));
	out.push_back(compare("group.g1.identity", mul_1(zero1(), a1), a1));
	out.push_back(compare("group.g1.identity_right", mul_1(a1, zero1()), a1));
	out.push_back(compare("group.g1.inverse", mul_1(a1, inv_1(a1)), zero1()));
	out.push_back(compare("group.g2.assoc", mul_2(mul_2(a2, b2), e2), mul_2(a2, mul_2(b2, e2))));
	out.push_back(compare("group.g2.identity", mul_2(zero2(), a2), a2));
	out.push_back(compare("group.g2.identity_right", mul_2(a2, zero2()), a2));
	out.push_back(compare("group.g2.inverse", mul_2(a2, inv_2(a2)), zero2()));
	out.push_back(compare("group.left_action", act_left(mul_2(a2, b2), a1), act_left(a2, act_left(b2, a1))));
	out.push_back(compare("group.left_action.unit", act_left(zero2(), a1), a1));
	out.push_back(compare("group.right_action", act_right(a2, mul_1(a1, b1)), act_right(act_right(a2, a1), b1)));
	out.push_back(compare("group.right_action.unit", act_right(a2, zero1()), a2));
	out.push_back(compare("group.matched.left", act_left(a2, mul_1(a1, b1)),
	                      mul_1(act_left(a2, a1), act_left(act_right(a2, a1), b1))));
	out.push_back(compare("group.matched.right", act_right(mul_2(a2, b2), a1),
	                      mul_2(act_right(a2, act_left(b2, a1)), act_right(b2, a1))));
	out.push_back(compare("group.matched.unit_left", act_left(a2, zero1()), zero1()));
	out.push_back(compare("group.matched.unit_right", act_right(zero2(), a1), zero2()));

	SMat g = gamma();
	auto gam = [&](const Point &psi) { return smat_subst(g, point_subst(c2, psi)); };
	out.push_back(compare_mat("group.gamma.cocycle", gam(mul_2(a2, b2)), smat_mul(gam(a2), gam(b2))));
	SMat G = big_gamma();
	auto Gam = [&](const Point &psi, const Point &phi) {
		auto s = point_subst(c2, psi);
		s.merge(point_subst(c1, phi));
		return smat_subst(G, s);
	};
	out.push_back(compare_mat("group.Gamma.at_identity", Gam(a2, zero1()), gam(a2)));
	out.push_back(compare_mat("group.Gamma.cocycle", Gam(mul_2(a2, b2), a1),
	                          smat_mul(Gam(a2, act_left(b2, a1)), Gam(b2, a1))));
	ScalarExpr dprod = smat_det(Gam(inv_2(a2), act_left(a2, a1))) * smat_det(Gam(a2, a1));
	out.push_back({"group.Gamma.det_inverse", dprod == ScalarExpr(1), dprod == ScalarExpr(1) ? "" : dprod.text()});
	out.push_back(check_affine());
	for (auto &c : check_frames())
		out.push_back(c);
	return out;
}

void bch_law(const LieAlgebra &g, const std::vector<Sym> &coords, std::vector<ScalarExpr> &mul,
             std::vector<ScalarExpr> &inv)
{
	size_t n = g.dim();
	if (coords.size() != n)
		throw Error("bch_law: coordinate count does not match the algebra");
	// class <= 3: all brackets of length 4 vanish
	for (size_t a = 0; a < n; ++a)
		for (size_t b = 0; b < n; ++b)
			for (size_t c = 0; c < n; ++c)
				for (size_t d = 0; d < n; ++d) {
					QVec v = g.bracket(g.bracket(g.bracket(g.unit(static_cast<int>(a)), g.unit(static_cast<int>(b))),
					                             g.unit(static_cast<int>(c))),
					                   g.unit(static_cast<int>(d)));
					for (auto &x : v)
						if (x != 0)
							throw Error("bch_law: algebra is not nilpotent of class <= 3");
				}
	using V = std::vector<ScalarExpr>;
	auto br = [&](const V &x, const V &y) {
		V r(n);
		for (size_t i = 0; i < n; ++i)
			for (size_t j = 0; j < n; ++j) {
				if (x[i].is_zero() || y[j].is_zero())
					continue;
				for (size_t k = 0; k < n; ++k) {
					const Q &c = g.c(static_cast<int>(i), static_cast<int>(j), static_cast<int>(k));
					if (c != 0)
						r[k] += c * (x[i] * y[j]);
				}
			}
		return r;
	};
	V X(n), Y(n);
	for (size_t i = 0; i < n; ++i) {
		X[i] = ScalarExpr::var(point_sym(coords[i], 1));
		Y[i] = ScalarExpr::var(point_sym(coords[i], 2));
	}
	V xy = br(X, Y);
	V xxy = br(X, xy), yyx = br(Y, br(Y, X));
	mul.assign(n, ScalarExpr());
	inv.assign(n, ScalarExpr());
	for (size_t i = 0; i < n; ++i) {
		mul[i] = X[i] + Y[i] + Q(1, 2) * xy[i] + Q(1, 12) * (xxy[i] + yyx[i]);
		inv[i] = -ScalarExpr::var(coords[i]);
	}
}

} // namespace hcc
