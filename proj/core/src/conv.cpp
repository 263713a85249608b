#include "hcc/conv.hpp"

#include <algorithm>

namespace hcc {

bool FKey::operator<(const FKey &o) const
{
	if (gauss != o.gauss)
		return gauss < o.gauss;
	return factors < o.factors;
}

Fn::Fn(const ScalarExpr &c)
{
	if (!c.is_zero())
		t_[FKey{}] = c;
}

Fn Fn::gaussian(const ScalarExpr &p, const Q &k)
{
	Fn f;
	f.add(FKey{k, {}}, p);
	return f;
}

Fn Fn::formal(const Sym &name, size_t dim)
{
	Fn f;
	f.add(FKey{0, {FFactor{name, std::vector<int>(dim, 0)}}}, ScalarExpr(1));
	return f;
}

void Fn::add(const FKey &k, const ScalarExpr &c)
{
	if (c.is_zero())
		return;
	auto [it, ins] = t_.try_emplace(k, c);
	if (!ins) {
		it->second += c;
		if (it->second.is_zero())
			t_.erase(it);
	}
}

Fn &Fn::operator+=(const Fn &o)
{
	for (auto &[k, c] : o.t_)
		add(k, c);
	return *this;
}

Fn &Fn::operator-=(const Fn &o)
{
	for (auto &[k, c] : o.t_)
		add(k, -c);
	return *this;
}

Fn Fn::operator-() const
{
	Fn r;
	for (auto &[k, c] : t_)
		r.t_[k] = -c;
	return r;
}

Fn operator*(const Fn &a, const Fn &b)
{
	Fn r;
	for (auto &[ka, ca] : a.t_)
		for (auto &[kb, cb] : b.t_) {
			FKey k{ka.gauss + kb.gauss, ka.factors};
			k.factors.insert(k.factors.end(), kb.factors.begin(), kb.factors.end());
			std::sort(k.factors.begin(), k.factors.end());
			r.add(k, ca * cb);
		}
	return r;
}

bool Fn::operator<(const Fn &o) const { return t_ < o.t_; }

Fn Fn::diff(const std::vector<Sym> &coords, size_t k) const
{
	Fn r;
	const Sym &v = coords.at(k);
	for (auto &[key, c] : t_) {
		r.add(key, c.diff(v));
		if (key.gauss != 0)
			r.add(key, c * ScalarExpr::var(v) * Q(-2 * key.gauss));
		for (size_t i = 0; i < key.factors.size(); ++i) {
			FKey nk = key;
			++nk.factors[i].der.at(k);
			std::sort(nk.factors.begin(), nk.factors.end());
			r.add(nk, c);
		}
	}
	return r;
}

Fn Fn::subst_coeffs(const std::map<Sym, ScalarExpr> &s) const
{
	Fn r;
	for (auto &[k, c] : t_)
		r.add(k, c.subst(s));
	return r;
}

Fn Fn::map_coeffs(const std::function<ScalarExpr(const ScalarExpr &)> &f) const
{
	Fn r;
	for (auto &[k, c] : t_)
		r.add(k, f(c));
	return r;
}

bool Fn::has_formal() const
{
	for (auto &[k, c] : t_)
		if (!k.factors.empty())
			return true;
	return false;
}

std::string factor_text(const FFactor &f)
{
	std::string s = text_name(f.name.name());
	if (f.der.size() == 1) {
		for (int i = 0; i < f.der[0]; ++i)
			s += "′";
		return s;
	}
	bool any = false;
	for (int d : f.der)
		any = any || d;
	if (!any)
		return s;
	s += "^(";
	for (size_t i = 0; i < f.der.size(); ++i)
		s += (i ? "," : "") + std::to_string(f.der[i]);
	return s + ")";
}

std::string factor_expr(const FFactor &f)
{
	std::string s = f.name.name();
	bool any = false;
	for (int d : f.der)
		any = any || d;
	if (!any)
		return s;
	s += "[";
	for (size_t i = 0; i < f.der.size(); ++i)
		s += (i ? "," : "") + std::to_string(f.der[i]);
	return s + "]";
}

std::string Fn::text(const std::vector<Sym> &coords) const
{
	if (t_.empty())
		return "0";
	std::string s;
	for (auto &[k, c] : t_) {
		if (!s.empty())
			s += " + ";
		s += "(" + c.text() + ")";
		if (k.gauss != 0) {
			std::string sq;
			for (size_t i = 0; i < coords.size(); ++i)
				sq += (i ? "+" : "") + text_name(coords[i].name()) + "²";
			s += "·exp(-" + (k.gauss == 1 ? std::string() : to_string(k.gauss) + "·") +
			     (coords.size() > 1 ? "(" + sq + ")" : sq) + ")";
		}
		for (auto &f : k.factors)
			s += "·" + factor_text(f);
	}
	return s;
}

Integral::Integral(const ScalarExpr &v)
{
	if (!v.is_zero())
		t_[{}] = v;
}

void Integral::add(const std::vector<FFactor> &k, const ScalarExpr &c)
{
	if (c.is_zero())
		return;
	auto [it, ins] = t_.try_emplace(k, c);
	if (!ins) {
		it->second += c;
		if (it->second.is_zero())
			t_.erase(it);
	}
}

ScalarExpr Integral::value() const
{
	if (!is_closed())
		throw Error("integral has unevaluated formal terms");
	return t_.empty() ? ScalarExpr() : t_.begin()->second;
}

Integral &Integral::operator+=(const Integral &o)
{
	for (auto &[k, c] : o.t_)
		add(k, c);
	return *this;
}

Integral Integral::operator-() const
{
	Integral r;
	for (auto &[k, c] : t_)
		r.t_[k] = -c;
	return r;
}

Integral &Integral::operator*=(const ScalarExpr &s)
{
	Terms n;
	for (auto &[k, c] : t_) {
		ScalarExpr v = c * s;
		if (!v.is_zero())
			n[k] = v;
	}
	t_ = std::move(n);
	return *this;
}

Integral Integral::subst(const std::map<Sym, ScalarExpr> &s) const
{
	Integral r;
	for (auto &[k, c] : t_)
		r.add(k, c.subst(s));
	return r;
}

std::string Integral::text(const std::vector<Sym> &coords) const
{
	if (t_.empty())
		return "0";
	std::string dv;
	for (auto &c : coords)
		dv += "d" + text_name(c.name());
	std::string s;
	for (auto &[k, c] : t_) {
		if (!s.empty())
			s += " + ";
		if (k.empty()) {
			s += c.text();
			continue;
		}
		std::string fs;
		for (auto &f : k)
			fs += (fs.empty() ? "" : "·") + factor_text(f);
		s += "(" + c.text() + ")·∫ " + fs + " " + dv;
	}
	return s;
}

std::string Integral::expr() const
{
	if (t_.empty())
		return "0";
	std::string s;
	for (auto &[k, c] : t_) {
		if (!s.empty())
			s += " + ";
		if (k.empty()) {
			s += "(" + c.expr() + ")";
			continue;
		}
		std::string fs;
		for (auto &f : k)
			fs += (fs.empty() ? "" : ",") + factor_expr(f);
		s += "int{" + fs + "}(" + c.expr() + ")";
	}
	return s;
}

std::pair<ScalarExpr, ScalarExpr> gauss_moment(int n, long m, const Q &k)
{
	if (k <= 0)
		throw Error("gaussian weight must be positive");
	// complete the square: theta = u + i m / 2k
	Q shift = Q(m) / (2 * k);
	Q re = 0, im = 0;
	for (int j = 0; j <= n; j += 2) {
		Q mj = 1;
		for (int t = j - 1; t > 0; t -= 2)
			mj *= t;
		Q tk = 1;
		for (int t = 0; t < j / 2; ++t)
			tk *= 2 * k;
		mj /= tk;
		int e = n - j;
		Q p = 1;
		for (int t = 0; t < e; ++t)
			p *= shift;
		Q term = binomial(n, j) * p * mj;
		switch (e % 4) {
		case 0: re += term; break;
		case 1: im += term; break;
		case 2: re -= term; break;
		default: im -= term; break;
		}
	}
	// sqrt(pi / k) e^{-m^2/4k}
	Q kk = k;
	kk.canonicalize();
	mpz_class pq = kk.get_num() * kk.get_den();
	if (!pq.fits_slong_p())
		throw Error("gaussian weight too large");
	ScalarExpr scale = ScalarExpr::sqrt_pi() * ScalarExpr::sqrt_int(pq.get_si()) * Q(mpz_class(1), kk.get_num());
	if (m != 0)
		scale *= ScalarExpr::exp_of(-Q(m * m) / (4 * k));
	return {scale * re, scale * im};
}

namespace {

using Cx = std::pair<ScalarExpr, ScalarExpr>;

// int theta^n sin^s cos^c e^{-k theta^2}
ScalarExpr trig_moment(int n, int s, int c, const Q &k)
{
	// cos^c sin^s as sum_m w_m e^{i m theta}, w complex rational
	std::map<long, std::pair<Q, Q>> w;
	for (int a = 0; a <= c; ++a) {
		Q coef = binomial(c, a) / Q(mpz_class(1) << c);
		long m = 2 * a - c;
		if (s == 0) {
			w[m].first += coef;
		} else {
			// sin = -i/2 (e^{i} - e^{-i})
			w[m + 1].second -= coef / 2;
			w[m - 1].second += coef / 2;
		}
	}
	ScalarExpr re, im;
	for (auto &[m, cw] : w) {
		if (cw.first == 0 && cw.second == 0)
			continue;
		auto [gr, gi] = gauss_moment(n, m, k);
		re += gr * cw.first - gi * cw.second;
		im += gr * cw.second + gi * cw.first;
	}
	if (!im.is_zero())
		throw Error("internal: imaginary part in a real gaussian moment");
	return re;
}

void normalize_ibp(Integral &in, const std::vector<Sym> &coords)
{
	for (;;) {
		const std::vector<FFactor> *hit = nullptr;
		for (auto &[k, c] : in.terms()) {
			if (k.empty())
				continue;
			for (int d : k[0].der)
				if (d) {
					hit = &k;
					break;
				}
			if (hit)
				break;
		}
		if (!hit)
			return;
		std::vector<FFactor> key = *hit;
		ScalarExpr c = in.terms().at(key);
		in.add(key, -c);
		size_t l = 0;
		while (key[0].der[l] == 0)
			++l;
		FFactor f0 = key[0];
		--f0.der[l];
		std::vector<FFactor> rest(key.begin() + 1, key.end());
		auto make = [&](std::vector<FFactor> r) {
			r.push_back(f0);
			std::sort(r.begin(), r.end());
			return r;
		};
		in.add(make(rest), -c.diff(coords[l]));
		for (size_t r = 0; r < rest.size(); ++r) {
			auto rr = rest;
			++rr[r].der[l];
			in.add(make(rr), -c);
		}
	}
}

} // namespace

Integral integrate_fn(const Fn &f, const std::vector<Sym> &coords)
{
	Integral out, formal;
	for (auto &[k, c] : f.terms()) {
		if (!k.factors.empty()) {
			if (k.gauss != 0)
				throw Error("mixed gaussian and formal test functions are not supported");
			formal.add(k.factors, c);
			continue;
		}
		if (k.gauss <= 0)
			throw Error("integrand without decay: " + c.text());
		ScalarExpr total;
		for (auto &[m, q] : c.terms()) {
			Mono rest = m;
			rest.vars.clear();
			rest.trig.clear();
			for (auto &[v, e] : m.vars)
				if (std::find(coords.begin(), coords.end(), v) == coords.end())
					rest.vars.emplace_back(v, e);
			for (auto &t : m.trig)
				if (std::find(coords.begin(), coords.end(), t.v) == coords.end())
					rest.trig.push_back(t);
			ScalarExpr val = ScalarExpr::from_mono(rest, q);
			for (auto &v : coords) {
				int n = m.degree_in(v), s = 0, cc = 0;
				for (auto &t : m.trig)
					if (t.v == v)
						s = t.s, cc = t.c;
				val *= trig_moment(n, s, cc, k.gauss);
				if (val.is_zero())
					break;
			}
			total += val;
		}
		out += Integral(total);
	}
	normalize_ibp(formal, coords);
	out += formal;
	return out;
}

bool is_identity_point(const Point &p)
{
	for (auto &x : p)
		if (!x.is_zero())
			return false;
	return true;
}

bool is_concrete_point(const Point &p)
{
	for (auto &x : p)
		if (!x.is_constant())
			return false;
	return true;
}

Conv::Conv(const Model &m) : m_(m)
{
	const GroupModel &g = m.grp();
	c1_ = g.c1;
	size_t n = c1_.size();
	std::map<Sym, ScalarExpr> at;
	for (auto &x : c1_) {
		at.emplace(point_sym(x, 1), ScalarExpr::var(x));
		at.emplace(point_sym(x, 2), ScalarExpr());
	}
	field_.assign(n, std::vector<ScalarExpr>(n));
	for (size_t k = 0; k < n; ++k)
		for (size_t i = 0; i < n; ++i)
			field_[k][i] = g.mul1[k].diff(point_sym(c1_[i], 2)).subst(at);
	ScalarExpr det = smat_det(field_);
	if (!det.is_constant() || det.is_zero())
		throw Error("left-invariant volume density is not constant");
	vol_ = Q(1) / det.constant();
	trivial_left_ = g.act_left(g.vars2(), g.vars1()) == g.vars1();
}

ConvTerms Conv::add(const ConvTerms &a, const ConvTerms &b) const
{
	ConvTerms r = a;
	for (auto &[p, f] : b) {
		Fn &t = r[p];
		t += f;
		if (t.is_zero())
			r.erase(p);
	}
	return r;
}

ConvTerms Conv::scale(const ConvTerms &a, const ScalarExpr &s) const
{
	ConvTerms r;
	for (auto &[p, f] : a) {
		Fn t = f * Fn(s);
		if (!t.is_zero())
			r[p] = t;
	}
	return r;
}

Fn Conv::compose(const Fn &g, const Point &psi) const
{
	if (trivial_left_)
		return g;
	for (auto &[k, c] : g.terms())
		if (k.gauss != 0 || !k.factors.empty())
			throw Error("composition with a nontrivial G2 action leaves the test-function class");
	return g.subst_coeffs(point_subst(c1_, m_.grp().act_left(psi, m_.grp().vars1())));
}

ConvTerms Conv::mul(const ConvTerms &a, const ConvTerms &b) const
{
	ConvTerms r;
	for (auto &[p1, f] : a)
		for (auto &[p2, g] : b) {
			Point p = m_.grp().mul_2(p2, p1);
			r = add(r, {{p, f * compose(g, p1)}});
		}
	return r;
}

Fn Conv::left_field(size_t i, const Fn &f) const
{
	Fn r;
	for (size_t k = 0; k < c1_.size(); ++k)
		if (!field_[k][i].is_zero())
			r += f.diff(c1_, k) * Fn(field_[k][i]);
	return r;
}

ConvTerms Conv::act(const Hopf &h, const HElem &a, const ConvTerms &x) const
{
	ConvTerms r;
	const GroupModel &g = m_.grp();
	for (auto &[k, c] : a)
		for (auto &[psi, f] : x) {
			ScalarExpr F = h.rf_expr({{k.f, Q(1)}}).subst(point_subst(g.c2, g.act_right(psi, g.vars1())));
			Fn cur = f;
			for (size_t i = k.u.size(); i-- > 0;)
				for (int t = 0; t < k.u[i]; ++t)
					cur = left_field(i, cur);
			r = add(r, {{psi, cur * Fn(F * c)}});
		}
	return r;
}

Integral Conv::trace(const ConvTerms &x) const
{
	Integral r;
	for (auto &[psi, f] : x) {
		if (is_identity_point(psi)) {
			r += integrate_fn(f, c1_) * ScalarExpr(vol_);
			continue;
		}
		if (is_concrete_point(psi))
			continue;
		throw Error("trace of a symbolic group element is undecided");
	}
	return r;
}

std::string Conv::text(const ConvTerms &x) const
{
	if (x.empty())
		return "0";
	std::string s;
	for (auto &[p, f] : x) {
		if (!s.empty())
			s += " + ";
		std::string pt;
		for (size_t i = 0; i < p.size(); ++i)
			pt += (i ? "," : "") + p[i].text();
		s += "[" + f.text(c1_) + "]·U*(" + pt + ")";
	}
	return s;
}

} // namespace hcc
