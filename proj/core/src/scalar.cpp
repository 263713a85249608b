#include "hcc/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace hcc {

std::string to_string(const Q &q) { return q.get_str(); }

Q factorial(int n)
{
	mpz_class r;
	mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
	return Q(r);
}

Q binomial(int n, int k)
{
	if (k < 0 || k > n)
		return 0;
	mpz_class r;
	mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
	return Q(r);
}

Sym::Sym(std::string_view name)
{
	static std::set<std::string, std::less<>> pool;
	static std::mutex mu;
	std::lock_guard<std::mutex> lk(mu);
	auto it = pool.find(name);
	if (it == pool.end())
		it = pool.emplace(name).first;
	p_ = &*it;
}

std::strong_ordering Sym::operator<=>(const Sym &o) const
{
	if (p_ == o.p_)
		return std::strong_ordering::equal;
	int c = p_->compare(*o.p_);
	return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

int Mono::degree() const
{
	int d = 0;
	for (auto &[v, e] : vars)
		d += e;
	return d;
}

int Mono::degree_in(const Sym &v) const
{
	for (auto &[w, e] : vars)
		if (w == v)
			return e;
	return 0;
}

bool Mono::operator==(const Mono &o) const
{
	return vars == o.vars && trig == o.trig && sqrtpi == o.sqrtpi && rad == o.rad && ex == o.ex;
}

bool Mono::operator<(const Mono &o) const
{
	size_t n = std::min(vars.size(), o.vars.size());
	for (size_t i = 0; i < n; ++i) {
		if (vars[i].first != o.vars[i].first)
			return vars[i].first < o.vars[i].first;
		if (vars[i].second != o.vars[i].second)
			return vars[i].second < o.vars[i].second;
	}
	if (vars.size() != o.vars.size())
		return vars.size() < o.vars.size();
	n = std::min(trig.size(), o.trig.size());
	for (size_t i = 0; i < n; ++i) {
		if (trig[i].v != o.trig[i].v)
			return trig[i].v < o.trig[i].v;
		if (trig[i].s != o.trig[i].s)
			return trig[i].s < o.trig[i].s;
		if (trig[i].c != o.trig[i].c)
			return trig[i].c < o.trig[i].c;
	}
	if (trig.size() != o.trig.size())
		return trig.size() < o.trig.size();
	if (sqrtpi != o.sqrtpi)
		return sqrtpi < o.sqrtpi;
	if (rad != o.rad)
		return rad < o.rad;
	return ex < o.ex;
}

namespace {

void mul_mono(const Mono &a, const Mono &b, const Q &coef, ScalarExpr &out)
{
	Mono base;
	{
		size_t i = 0, j = 0;
		while (i < a.vars.size() || j < b.vars.size()) {
			if (j == b.vars.size() || (i < a.vars.size() && a.vars[i].first < b.vars[j].first))
				base.vars.push_back(a.vars[i++]);
			else if (i == a.vars.size() || b.vars[j].first < a.vars[i].first)
				base.vars.push_back(b.vars[j++]);
			else {
				base.vars.emplace_back(a.vars[i].first, a.vars[i].second + b.vars[j].second);
				++i, ++j;
			}
		}
	}
	base.sqrtpi = a.sqrtpi + b.sqrtpi;
	long g = std::gcd(a.rad, b.rad);
	Q c = coef * g;
	base.rad = (a.rad / g) * (b.rad / g);
	base.ex = a.ex + b.ex;

	std::vector<TrigPow> merged;
	{
		size_t i = 0, j = 0;
		while (i < a.trig.size() || j < b.trig.size()) {
			if (j == b.trig.size() || (i < a.trig.size() && a.trig[i].v < b.trig[j].v))
				merged.push_back(a.trig[i++]);
			else if (i == a.trig.size() || b.trig[j].v < a.trig[i].v)
				merged.push_back(b.trig[j++]);
			else {
				merged.push_back({a.trig[i].v, a.trig[i].s + b.trig[j].s, a.trig[i].c + b.trig[j].c});
				++i, ++j;
			}
		}
	}
	// sin^2 -> 1 - cos^2
	std::vector<std::pair<std::vector<TrigPow>, Q>> parts{{{}, c}};
	for (auto &tp : merged) {
		if (tp.s < 2) {
			for (auto &p : parts)
				p.first.push_back(tp);
			continue;
		}
		std::vector<std::pair<std::vector<TrigPow>, Q>> next;
		for (auto &p : parts) {
			auto a1 = p.first, a2 = p.first;
			if (tp.c > 0)
				a1.push_back({tp.v, 0, tp.c});
			a2.push_back({tp.v, 0, tp.c + 2});
			next.emplace_back(std::move(a1), p.second);
			next.emplace_back(std::move(a2), -p.second);
		}
		parts = std::move(next);
	}
	for (auto &p : parts) {
		Mono m = base;
		m.trig = std::move(p.first);
		out.add_term(m, p.second);
	}
}

} // namespace

ScalarExpr::ScalarExpr(long v)
{
	if (v != 0)
		t_[Mono{}] = Q(v);
}

ScalarExpr::ScalarExpr(const Q &q)
{
	if (q != 0)
		t_[Mono{}] = q;
}

ScalarExpr ScalarExpr::var(const Sym &v)
{
	Mono m;
	m.vars.emplace_back(v, 1);
	return from_mono(m, 1);
}

ScalarExpr ScalarExpr::sin(const Sym &v)
{
	Mono m;
	m.trig.push_back({v, 1, 0});
	return from_mono(m, 1);
}

ScalarExpr ScalarExpr::cos(const Sym &v)
{
	Mono m;
	m.trig.push_back({v, 0, 1});
	return from_mono(m, 1);
}

ScalarExpr ScalarExpr::sqrt_pi(int power)
{
	Mono m;
	m.sqrtpi = power;
	return from_mono(m, 1);
}

ScalarExpr ScalarExpr::sqrt_int(long n)
{
	if (n < 0)
		throw Error("sqrt of negative integer");
	if (n == 0)
		return {};
	long outside = 1, inside = 1;
	long m = n;
	for (long p = 2; p * p <= m; ++p) {
		while (m % (p * p) == 0) {
			outside *= p;
			m /= p * p;
		}
		if (m % p == 0) {
			inside *= p;
			m /= p;
		}
	}
	inside *= m;
	Mono mo;
	mo.rad = inside;
	return from_mono(mo, Q(outside));
}

ScalarExpr ScalarExpr::exp_of(const Q &q)
{
	Mono m;
	m.ex = q;
	return from_mono(m, 1);
}

ScalarExpr ScalarExpr::from_mono(const Mono &m, const Q &c)
{
	ScalarExpr r;
	r.add_term(m, c);
	return r;
}

void ScalarExpr::add_term(const Mono &m, const Q &c)
{
	if (c == 0)
		return;
	auto [it, ins] = t_.try_emplace(m, c);
	if (!ins) {
		it->second += c;
		if (it->second == 0)
			t_.erase(it);
	}
}

bool ScalarExpr::is_constant() const
{
	return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one());
}

Q ScalarExpr::constant() const
{
	if (t_.empty())
		return 0;
	if (!is_constant())
		throw Error("expression is not a rational constant: " + text());
	return t_.begin()->second;
}

Q ScalarExpr::constant_term() const
{
	auto it = t_.find(Mono{});
	return it == t_.end() ? Q(0) : it->second;
}

bool ScalarExpr::is_polynomial() const
{
	for (auto &[m, c] : t_)
		if (!m.trig.empty() || m.sqrtpi != 0 || m.rad != 1 || m.ex != 0)
			return false;
	return true;
}

std::vector<Sym> ScalarExpr::variables() const
{
	std::set<Sym> s;
	for (auto &[m, c] : t_) {
		for (auto &[v, e] : m.vars)
			s.insert(v);
		for (auto &tp : m.trig)
			s.insert(tp.v);
	}
	return {s.begin(), s.end()};
}

bool ScalarExpr::depends_on(const Sym &v) const
{
	for (auto &[m, c] : t_) {
		for (auto &[w, e] : m.vars)
			if (w == v)
				return true;
		for (auto &tp : m.trig)
			if (tp.v == v)
				return true;
	}
	return false;
}

int ScalarExpr::degree_in(const Sym &v) const
{
	int d = 0;
	for (auto &[m, c] : t_)
		d = std::max(d, m.degree_in(v));
	return d;
}

int ScalarExpr::total_degree() const
{
	int d = 0;
	for (auto &[m, c] : t_)
		d = std::max(d, m.degree());
	return d;
}

ScalarExpr ScalarExpr::operator-() const
{
	ScalarExpr r = *this;
	for (auto &[m, c] : r.t_)
		c = -c;
	return r;
}

ScalarExpr &ScalarExpr::operator+=(const ScalarExpr &o)
{
	for (auto &[m, c] : o.t_)
		add_term(m, c);
	return *this;
}

ScalarExpr &ScalarExpr::operator-=(const ScalarExpr &o)
{
	for (auto &[m, c] : o.t_)
		add_term(m, -c);
	return *this;
}

ScalarExpr operator*(const ScalarExpr &a, const ScalarExpr &b)
{
	ScalarExpr r;
	for (auto &[ma, ca] : a.t_)
		for (auto &[mb, cb] : b.t_)
			mul_mono(ma, mb, ca * cb, r);
	return r;
}

ScalarExpr &ScalarExpr::operator*=(const ScalarExpr &o)
{
	*this = *this * o;
	return *this;
}

ScalarExpr &ScalarExpr::operator*=(const Q &q)
{
	if (q == 0) {
		t_.clear();
		return *this;
	}
	for (auto &[m, c] : t_)
		c *= q;
	return *this;
}

ScalarExpr ScalarExpr::pow(int n) const
{
	if (n < 0)
		throw Error("negative power");
	ScalarExpr r(1), b = *this;
	while (n) {
		if (n & 1)
			r *= b;
		n >>= 1;
		if (n)
			b = b * b;
	}
	return r;
}

ScalarExpr ScalarExpr::diff(const Sym &v) const
{
	ScalarExpr r;
	for (auto &[m, c] : t_) {
		for (size_t i = 0; i < m.vars.size(); ++i) {
			if (m.vars[i].first != v)
				continue;
			Mono m2 = m;
			int e = m2.vars[i].second;
			if (e == 1)
				m2.vars.erase(m2.vars.begin() + static_cast<long>(i));
			else
				m2.vars[i].second = e - 1;
			r.add_term(m2, c * e);
		}
		for (size_t i = 0; i < m.trig.size(); ++i) {
			if (m.trig[i].v != v)
				continue;
			const int s = m.trig[i].s, k = m.trig[i].c;
			auto with = [&](int s2, int c2) {
				Mono m2 = m;
				if (s2 == 0 && c2 == 0)
					m2.trig.erase(m2.trig.begin() + static_cast<long>(i));
				else
					m2.trig[i] = {v, s2, c2};
				return m2;
			};
			if (s == 1) {
				// d(sin cos^k) = (1+k) cos^{k+1} - k cos^{k-1}
				r.add_term(with(0, k + 1), c * (1 + k));
				if (k > 0)
					r.add_term(with(0, k - 1), -c * k);
			} else if (k > 0) {
				r.add_term(with(1, k - 1), -c * k);
			}
		}
	}
	return r;
}

std::pair<ScalarExpr, ScalarExpr> trig_of_linear(const ScalarExpr &arg)
{
	ScalarExpr S, C(1);
	for (auto &[m, c] : arg.terms()) {
		if (m.vars.size() != 1 || m.vars[0].second != 1 || !m.trig.empty() || m.sqrtpi || m.rad != 1 || m.ex != 0)
			throw Error("trig argument is not an integer linear combination of variables: " + arg.text());
		if (c.get_den() != 1)
			throw Error("trig argument has non-integer coefficient: " + arg.text());
		long n = c.get_num().get_si();
		Sym w = m.vars[0].first;
		ScalarExpr s1 = ScalarExpr::sin(w), c1 = ScalarExpr::cos(w);
		ScalarExpr sn, cn(1);
		for (long k = 0; k < std::labs(n); ++k) {
			ScalarExpr ns = sn * c1 + cn * s1;
			ScalarExpr nc = cn * c1 - sn * s1;
			sn = std::move(ns);
			cn = std::move(nc);
		}
		if (n < 0)
			sn = -sn;
		ScalarExpr ns = S * cn + C * sn;
		ScalarExpr nc = C * cn - S * sn;
		S = std::move(ns);
		C = std::move(nc);
	}
	return {S, C};
}

ScalarExpr ScalarExpr::subst(const std::map<Sym, ScalarExpr> &s) const
{
	std::map<std::pair<Sym, int>, ScalarExpr> pw;
	std::map<Sym, std::pair<ScalarExpr, ScalarExpr>> tr;
	auto power = [&](const Sym &v, int e) -> const ScalarExpr & {
		auto key = std::make_pair(v, e);
		auto it = pw.find(key);
		if (it == pw.end())
			it = pw.emplace(key, s.at(v).pow(e)).first;
		return it->second;
	};
	ScalarExpr r;
	for (auto &[m, c] : t_) {
		Mono keep;
		keep.sqrtpi = m.sqrtpi;
		keep.rad = m.rad;
		keep.ex = m.ex;
		ScalarExpr factor(1);
		bool touched = false;
		for (auto &[v, e] : m.vars) {
			if (s.count(v)) {
				factor *= power(v, e);
				touched = true;
			} else
				keep.vars.emplace_back(v, e);
		}
		for (auto &tp : m.trig) {
			if (s.count(tp.v)) {
				auto it = tr.find(tp.v);
				if (it == tr.end())
					it = tr.emplace(tp.v, trig_of_linear(s.at(tp.v))).first;
				if (tp.s)
					factor *= it->second.first;
				if (tp.c)
					factor *= it->second.second.pow(tp.c);
				touched = true;
			} else
				keep.trig.push_back(tp);
		}
		if (!touched)
			r.add_term(m, c);
		else
			r += ScalarExpr::from_mono(keep, c) * factor;
	}
	return r;
}

std::map<std::vector<int>, ScalarExpr> ScalarExpr::split(const std::vector<Sym> &vars) const
{
	std::map<std::vector<int>, ScalarExpr> out;
	for (auto &[m, c] : t_) {
		std::vector<int> ex(vars.size(), 0);
		Mono rest = m;
		rest.vars.clear();
		for (auto &[v, e] : m.vars) {
			auto it = std::find(vars.begin(), vars.end(), v);
			if (it != vars.end())
				ex[static_cast<size_t>(it - vars.begin())] = e;
			else
				rest.vars.emplace_back(v, e);
		}
		for (auto &tp : m.trig)
			if (std::find(vars.begin(), vars.end(), tp.v) != vars.end())
				throw Error("split: trig factor in split variable " + tp.v.name());
		out[ex].add_term(rest, c);
	}
	return out;
}

double ScalarExpr::eval(const std::map<Sym, double> &vals) const
{
	double total = 0;
	for (auto &[m, c] : t_) {
		double t = c.get_d();
		for (auto &[v, e] : m.vars)
			t *= std::pow(vals.at(v), e);
		for (auto &tp : m.trig)
			t *= std::pow(std::sin(vals.at(tp.v)), tp.s) * std::pow(std::cos(vals.at(tp.v)), tp.c);
		t *= std::pow(std::sqrt(M_PI), m.sqrtpi) * std::sqrt(static_cast<double>(m.rad)) * std::exp(m.ex.get_d());
		total += t;
	}
	return total;
}

// ---- emitters ----

namespace {

const std::map<std::string, std::pair<std::string, std::string>> &greek()
{
	static const std::map<std::string, std::pair<std::string, std::string>> g = {
	    {"theta", {"θ", "\\theta"}}, {"phi", {"φ", "\\varphi"}}, {"psi", {"ψ", "\\psi"}},
	    {"alpha", {"α", "\\alpha"}}, {"beta", {"β", "\\beta"}},  {"eta", {"η", "\\eta"}},
	    {"tau", {"τ", "\\tau"}},     {"xi", {"ξ", "\\xi"}},      {"omega", {"ω", "\\omega"}},
	};
	return g;
}

std::string subscript_digits(const std::string &d)
{
	static const char *sub[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
	std::string r;
	for (char ch : d)
		r += (ch >= '0' && ch <= '9') ? sub[ch - '0'] : std::string(1, ch);
	return r;
}

void split_name(const std::string &n, std::string &stem, std::string &sub, std::string &pt)
{
	stem = n;
	auto dot = stem.find('.');
	if (dot != std::string::npos) {
		pt = stem.substr(dot + 1);
		stem = stem.substr(0, dot);
	}
	auto us = stem.rfind('_');
	if (us != std::string::npos && us > 0 && us + 1 < stem.size()) {
		sub = stem.substr(us + 1);
		stem = stem.substr(0, us);
	}
}

} // namespace

std::string text_name(const std::string &name)
{
	std::string stem, sub, pt;
	split_name(name, stem, sub, pt);
	auto it = greek().find(stem);
	std::string r = it != greek().end() ? it->second.first : stem;
	if (!sub.empty())
		r += subscript_digits(sub);
	if (!pt.empty())
		r += "." + pt;
	return r;
}

std::string latex_name(const std::string &name)
{
	std::string stem, sub, pt;
	split_name(name, stem, sub, pt);
	auto it = greek().find(stem);
	std::string r = it != greek().end() ? it->second.second : stem;
	if (!sub.empty())
		r += "_{" + sub + "}";
	if (!pt.empty())
		r += "^{(" + pt + ")}";
	return r;
}

namespace {

enum class Fmt { Text, Latex, Expr };

std::vector<std::string> factor_strings(const Mono &m, Fmt f)
{
	std::vector<std::string> out;
	for (auto &[v, e] : m.vars) {
		switch (f) {
		case Fmt::Text:
			out.push_back(text_name(v.name()) + (e > 1 ? "^" + std::to_string(e) : ""));
			break;
		case Fmt::Latex:
			out.push_back(latex_name(v.name()) + (e > 1 ? "^{" + std::to_string(e) + "}" : ""));
			break;
		case Fmt::Expr:
			out.push_back(v.name() + (e > 1 ? "^" + std::to_string(e) : ""));
			break;
		}
	}
	for (auto &tp : m.trig) {
		auto one = [&](const char *fn, int e) {
			if (e == 0)
				return;
			switch (f) {
			case Fmt::Text:
				out.push_back(std::string(fn) + "(" + text_name(tp.v.name()) + ")" + (e > 1 ? "^" + std::to_string(e) : ""));
				break;
			case Fmt::Latex:
				out.push_back(std::string("\\") + fn + (e > 1 ? "^{" + std::to_string(e) + "}" : "") + " " + latex_name(tp.v.name()));
				break;
			case Fmt::Expr:
				out.push_back(std::string(fn) + "(" + tp.v.name() + ")" + (e > 1 ? "^" + std::to_string(e) : ""));
				break;
			}
		};
		one("sin", tp.s);
		one("cos", tp.c);
	}
	if (m.sqrtpi != 0) {
		std::string e = m.sqrtpi != 1 ? std::to_string(m.sqrtpi) : "";
		switch (f) {
		case Fmt::Text:
			out.push_back("√π" + (e.empty() ? "" : "^" + e));
			break;
		case Fmt::Latex:
			out.push_back("\\sqrt{\\pi}" + (e.empty() ? "" : "^{" + e + "}"));
			break;
		case Fmt::Expr:
			out.push_back("sqrtpi" + (e.empty() ? "" : "^" + e));
			break;
		}
	}
	if (m.rad != 1) {
		std::string r = std::to_string(m.rad);
		out.push_back(f == Fmt::Text ? "√" + r : f == Fmt::Latex ? "\\sqrt{" + r + "}" : "sqrt(" + r + ")");
	}
	if (m.ex != 0) {
		std::string q = m.ex.get_str();
		if (f == Fmt::Latex) {
			Q a = abs(m.ex);
			std::string aq = a.get_den() == 1 ? a.get_num().get_str()
			                                   : "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
			out.push_back("e^{" + std::string(m.ex < 0 ? "-" : "") + aq + "}");
		} else
			out.push_back("exp(" + q + ")");
	}
	return out;
}

std::string render(const ScalarExpr::Terms &t, Fmt f)
{
	if (t.empty())
		return "0";
	std::string s;
	bool first = true;
	for (auto &[m, c] : t) {
		Q a = abs(c);
		bool neg = c < 0;
		if (first)
			s += neg ? "-" : "";
		else
			s += neg ? " - " : " + ";
		first = false;
		auto fs = factor_strings(m, f);
		std::string coef;
		if (a != 1 || fs.empty()) {
			if (f == Fmt::Latex && a.get_den() != 1)
				coef = "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
			else
				coef = a.get_str();
		}
		std::string sep = f == Fmt::Text ? "·" : f == Fmt::Latex ? " " : "*";
		std::string body;
		if (!coef.empty())
			body = coef;
		for (auto &x : fs)
			body += (body.empty() ? "" : sep) + x;
		s += body;
	}
	return s;
}

} // namespace

std::string ScalarExpr::text() const { return render(t_, Fmt::Text); }
std::string ScalarExpr::latex() const { return render(t_, Fmt::Latex); }
std::string ScalarExpr::expr() const { return render(t_, Fmt::Expr); }

} // namespace hcc
