#include "hcc/hopf.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace hcc {

namespace {

Exp add(Exp a, const Exp &b)
{
	for (size_t i = 0; i < a.size(); ++i)
		a[i] += b[i];
	return a;
}

int total(const Exp &a)
{
	int s = 0;
	for (int x : a)
		s += x;
	return s;
}

// letters of a PBW monomial, left to right
std::vector<size_t> letters(const Exp &a)
{
	std::vector<size_t> l;
	for (size_t i = 0; i < a.size(); ++i)
		for (int k = 0; k < a[i]; ++k)
			l.push_back(i);
	return l;
}

} // namespace

Hopf::Hopf(const Model &m) : m_(m), d1_(m.d1()), d2_(m.d2())
{
	delta_ = delta_character(m.lie.g1);
	if (!m.group) {
		if (d2_ != 0)
			throw Error("Hopf: model needs a group section for R(G2)");
		gamma_.assign(d1_, std::vector<RFun>(d1_));
		for (size_t i = 0; i < d1_; ++i)
			gamma_[i][i] = rf_one();
		vel_.assign(d1_, {});
		sigma_ = sigma_inv_ = rf_one();
		return;
	}
	const GroupModel &g = *m.group;
	if (!g.h2.empty())
		throw Error("Hopf: nontrivial reductive block is not supported");
	c2_ = g.c2;
	mul2_ = g.mul2;
	inv2_ = g.inv2;
	SMat gm = g.gamma();
	gamma_.assign(d1_, std::vector<RFun>(d1_));
	for (size_t i = 0; i < d1_; ++i)
		for (size_t j = 0; j < d1_; ++j)
			gamma_[i][j] = rf(gm[i][j]);
	Point r = g.act_right(g.vars2(), g.vars1());
	auto at_e = point_subst(g.c1, g.zero1());
	vel_.assign(d1_, std::vector<RFun>(d2_));
	for (size_t i = 0; i < d1_; ++i)
		for (size_t j = 0; j < d2_; ++j)
			vel_[i][j] = rf(r[j].diff(g.c1[i]).subst(at_e));
	sigma_ = rf(smat_det(gm));
	sigma_inv_ = rf_antipode(sigma_);
}

RFun Hopf::rf(const ScalarExpr &e) const
{
	RFun r;
	for (auto &[k, c] : e.split(c2_)) {
		if (!c.is_constant())
			throw Error("not a polynomial in the G2 coordinates: " + e.text());
		acc(r, k, c.constant());
	}
	return r;
}

ScalarExpr Hopf::rf_expr(const RFun &f) const
{
	ScalarExpr s;
	for (auto &[e, c] : f) {
		ScalarExpr m(c);
		for (size_t j = 0; j < d2_; ++j)
			if (e[j])
				m *= ScalarExpr::var(c2_[j]).pow(e[j]);
		s += m;
	}
	return s;
}

RFun Hopf::rf_coord(size_t j) const
{
	Exp e(d2_, 0);
	e.at(j) = 1;
	return {{e, Q(1)}};
}

RFun Hopf::rf_one() const { return {{Exp(d2_, 0), Q(1)}}; }

RFun Hopf::rf_mul(const RFun &a, const RFun &b) const
{
	RFun r;
	for (auto &[ea, ca] : a)
		for (auto &[eb, cb] : b)
			acc(r, add(ea, eb), ca * cb);
	return r;
}

std::map<std::pair<Exp, Exp>, Q> Hopf::rf_coproduct(const RFun &f) const
{
	std::map<std::pair<Exp, Exp>, Q> r;
	for (auto &[e, c] : f) {
		auto it = cop_memo_.find(e);
		if (it == cop_memo_.end()) {
			ScalarExpr p(1);
			for (size_t j = 0; j < d2_; ++j)
				if (e[j])
					p *= mul2_[j].pow(e[j]);
			std::vector<Sym> two;
			for (auto &x : c2_)
				two.push_back(point_sym(x, 1));
			for (auto &x : c2_)
				two.push_back(point_sym(x, 2));
			std::map<std::pair<Exp, Exp>, Q> out;
			for (auto &[k, s] : p.split(two)) {
				if (!s.is_constant())
					throw Error("group law is not polynomial");
				Exp a(k.begin(), k.begin() + static_cast<long>(d2_)), b(k.begin() + static_cast<long>(d2_), k.end());
				acc(out, {a, b}, s.constant());
			}
			it = cop_memo_.emplace(e, std::move(out)).first;
		}
		for (auto &[k, s] : it->second)
			acc(r, k, s * c);
	}
	return r;
}

RFun Hopf::rf_antipode(const RFun &f) const
{
	RFun r;
	for (auto &[e, c] : f) {
		ScalarExpr p(c);
		for (size_t j = 0; j < d2_; ++j)
			if (e[j])
				p *= inv2_[j].pow(e[j]);
		acc_all(r, rf(p));
	}
	return r;
}

Q Hopf::rf_counit(const RFun &f) const
{
	auto it = f.find(Exp(d2_, 0));
	return it == f.end() ? Q(0) : it->second;
}

RFun Hopf::act(size_t i, const RFun &f) const
{
	RFun r;
	for (auto &[e, c] : f)
		for (size_t j = 0; j < d2_; ++j) {
			if (!e[j])
				continue;
			Exp lo = e;
			--lo[j];
			RFun t = rf_mul({{lo, c * e[j]}}, vel_[i][j]);
			acc_all(r, t);
		}
	return r;
}

RFun Hopf::act(const Exp &u, const RFun &f) const
{
	RFun r;
	auto ls = letters(u);
	for (auto &[e, c] : f) {
		auto key = std::make_pair(u, e);
		auto it = act_memo_.find(key);
		if (it == act_memo_.end()) {
			RFun cur{{e, Q(1)}};
			for (size_t k = ls.size(); k-- > 0;)
				cur = act(ls[k], cur);
			it = act_memo_.emplace(key, std::move(cur)).first;
		}
		acc_all(r, it->second, c);
	}
	return r;
}

Exp Hopf::u_gen(size_t i) const
{
	Exp e(d1_, 0);
	e.at(i) = 1;
	return e;
}

const UElem &Hopf::mul_gen_left(size_t i, const Exp &a) const
{
	auto key = std::make_pair(i, a);
	auto it = gen_memo_.find(key);
	if (it != gen_memo_.end())
		return it->second;
	size_t k = 0;
	while (k < d1_ && a[k] == 0)
		++k;
	UElem r;
	if (k == d1_ || i <= k) {
		Exp b = a;
		++b[i];
		r[b] = 1;
	} else {
		// Z_i Z_k = Z_k Z_i + [Z_i, Z_k]
		Exp rest = a;
		--rest[k];
		UElem inner = mul_gen_left(i, rest);
		for (auto &[t, c] : inner)
			acc_all(r, mul_gen_left(k, t), c);
		for (size_t mm = 0; mm < d1_; ++mm) {
			const Q &s = m_.lie.g1.c(static_cast<int>(i), static_cast<int>(k), static_cast<int>(mm));
			if (s != 0)
				acc_all(r, mul_gen_left(mm, rest), s);
		}
	}
	return gen_memo_.emplace(key, std::move(r)).first->second;
}

UElem Hopf::u_mul(const Exp &a, const Exp &b) const
{
	UElem cur{{b, Q(1)}};
	auto ls = letters(a);
	for (size_t k = ls.size(); k-- > 0;) {
		UElem nx;
		for (auto &[t, c] : cur)
			acc_all(nx, mul_gen_left(ls[k], t), c);
		cur = std::move(nx);
	}
	return cur;
}

UElem Hopf::u_mul(const UElem &a, const UElem &b) const
{
	UElem r;
	for (auto &[ea, ca] : a)
		for (auto &[eb, cb] : b)
			acc_all(r, u_mul(ea, eb), ca * cb);
	return r;
}

std::map<std::pair<Exp, Exp>, Q> Hopf::u_coproduct(const Exp &a) const
{
	std::map<std::pair<Exp, Exp>, Q> r;
	Exp b(d1_, 0);
	while (true) {
		Q c = 1;
		Exp rest(d1_);
		for (size_t i = 0; i < d1_; ++i) {
			c *= binomial(a[i], b[i]);
			rest[i] = a[i] - b[i];
		}
		acc(r, {b, rest}, c);
		size_t i = 0;
		while (i < d1_ && b[i] == a[i])
			b[i++] = 0;
		if (i == d1_)
			break;
		++b[i];
	}
	return r;
}

UElem Hopf::u_antipode(const Exp &a) const
{
	auto ls = letters(a);
	UElem cur{{u_zero(), Q(ls.size() % 2 ? -1 : 1)}};
	for (size_t l : ls) {
		UElem nx;
		for (auto &[t, c] : cur)
			acc_all(nx, mul_gen_left(l, t), c);
		cur = std::move(nx);
	}
	return cur;
}

Q Hopf::u_counit(const Exp &a) const { return total(a) == 0 ? Q(1) : Q(0); }

Q Hopf::delta_u(const Exp &a) const
{
	Q r = 1;
	for (size_t i = 0; i < d1_; ++i)
		for (int k = 0; k < a[i]; ++k)
			r *= delta_[i];
	return r;
}

std::map<std::pair<Exp, Exp>, Q> Hopf::coact_rec(const Exp &a) const
{
	std::map<std::pair<Exp, Exp>, Q> r;
	size_t k = 0;
	while (k < d1_ && a[k] == 0)
		++k;
	if (k == d1_) {
		r[{a, Exp(d2_, 0)}] = 1;
		return r;
	}
	Exp v = a;
	--v[k];
	const auto &cv = coaction(v);
	for (auto &[p, c] : cv) {
		auto &[v0, v1] = p;
		RFun f1{{v1, Q(1)}};
		for (size_t j = 0; j < d1_; ++j) {
			if (gamma_[k][j].empty())
				continue;
			RFun leg = rf_mul(rf_antipode(gamma_[k][j]), f1);
			for (auto &[u, cu] : mul_gen_left(j, v0))
				for (auto &[fe, fc] : leg)
					acc(r, {u, fe}, c * cu * fc);
		}
		for (auto &[fe, fc] : act(k, f1))
			acc(r, {v0, fe}, c * fc);
	}
	return r;
}

const std::map<std::pair<Exp, Exp>, Q> &Hopf::coaction(const Exp &a) const
{
	auto it = coact_memo_.find(a);
	if (it != coact_memo_.end())
		return it->second;
	auto r = coact_rec(a);
	return coact_memo_.emplace(a, std::move(r)).first->second;
}

HElem Hopf::one() const { return {{HKey{Exp(d2_, 0), u_zero()}, Q(1)}}; }

HElem Hopf::elem(const RFun &f, const Exp &u) const
{
	HElem r;
	for (auto &[e, c] : f)
		acc(r, HKey{e, u}, c);
	return r;
}

HElem Hopf::mul(const HElem &a, const HElem &b) const
{
	HElem r;
	for (auto &[ka, ca] : a)
		for (auto &[kb, cb] : b)
			for (auto &[p, cp] : u_coproduct(ka.u)) {
				RFun g = act(p.first, RFun{{kb.f, Q(1)}});
				if (g.empty())
					continue;
				RFun fg = rf_mul({{ka.f, Q(1)}}, g);
				UElem uv = u_mul(p.second, kb.u);
				for (auto &[fe, fc] : fg)
					for (auto &[ue, uc] : uv)
						acc(r, HKey{fe, ue}, ca * cb * cp * fc * uc);
			}
	return r;
}

Tensor Hopf::coproduct_bowtie(const HElem &a) const
{
	Tensor r;
	for (auto &[k, c] : a) {
		auto fc = rf_coproduct({{k.f, Q(1)}});
		for (auto &[up, ucf] : u_coproduct(k.u))
			for (auto &[co, cc] : coaction(up.first))
				for (auto &[fp, fcc] : fc) {
					RFun right = rf_mul({{fp.second, Q(1)}}, {{co.second, Q(1)}});
					for (auto &[re, rc] : right)
						acc(r, std::vector<HKey>{HKey{fp.first, co.first}, HKey{re, up.second}},
						    c * ucf * cc * fcc * rc);
				}
	}
	return r;
}

Tensor Hopf::coproduct(const HElem &a) const
{
	Tensor r;
	for (auto &[w, c] : coproduct_bowtie(a))
		acc(r, std::vector<HKey>{w[1], w[0]}, c);
	return r;
}

Q Hopf::counit(const HElem &a) const
{
	Q r = 0;
	for (auto &[k, c] : a)
		if (total(k.f) == 0 && total(k.u) == 0)
			r += c;
	return r;
}

HElem Hopf::antipode_bowtie(const HElem &a) const
{
	HElem r;
	for (auto &[k, c] : a)
		for (auto &[co, cc] : coaction(k.u)) {
			HElem left;
			for (auto &[ue, uc] : u_antipode(co.first))
				acc(left, HKey{Exp(d2_, 0), ue}, uc);
			RFun fu = rf_antipode(rf_mul({{k.f, Q(1)}}, {{co.second, Q(1)}}));
			acc_all(r, mul(left, from_rf(fu)), c * cc);
		}
	return r;
}

HElem Hopf::antipode_gen(const HKey &k) const
{
	// F |>< Z^a = (F |>< 1)(1 |>< Z_l1)...(1 |>< Z_lk); S^{-1} reverses
	HElem cur = one();
	auto ls = letters(k.u);
	for (size_t t = ls.size(); t-- > 0;) {
		HElem g;
		for (size_t j = 0; j < d1_; ++j)
			for (auto &[fe, fc] : gamma_[ls[t]][j])
				acc(g, HKey{fe, u_gen(j)}, -fc);
		cur = mul(cur, g);
	}
	return mul(cur, from_rf(rf_antipode({{k.f, Q(1)}})));
}

HElem Hopf::antipode(const HElem &a) const
{
	HElem r;
	for (auto &[k, c] : a)
		acc_all(r, antipode_gen(k), c);
	return r;
}

Q Hopf::delta(const HElem &a) const
{
	Q r = 0;
	for (auto &[k, c] : a)
		if (total(k.f) == 0)
			r += c * delta_u(k.u);
	return r;
}

HElem Hopf::s_delta(const HElem &a) const
{
	HElem r;
	for (auto &[w, c] : coproduct(a)) {
		Q d = delta(HElem{{w[0], Q(1)}});
		if (d != 0)
			acc_all(r, antipode_gen(w[1]), c * d);
	}
	return r;
}

Tensor Hopf::tensor1(const HElem &a) const
{
	Tensor t;
	for (auto &[k, c] : a)
		acc(t, std::vector<HKey>{k}, c);
	return t;
}

Tensor Hopf::tensor_mul(const Tensor &a, const Tensor &b) const
{
	Tensor r;
	for (auto &[wa, ca] : a)
		for (auto &[wb, cb] : b) {
			if (wa.size() != wb.size())
				throw Error("tensor_mul: length mismatch");
			Tensor cur;
			cur[{}] = ca * cb;
			for (size_t s = 0; s < wa.size(); ++s) {
				HElem p = mul(HElem{{wa[s], Q(1)}}, HElem{{wb[s], Q(1)}});
				Tensor nx;
				for (auto &[w, c] : cur)
					for (auto &[k, pc] : p) {
						auto nw = w;
						nw.push_back(k);
						acc(nx, nw, c * pc);
					}
				cur = std::move(nx);
			}
			acc_all(r, cur);
		}
	return r;
}

Tensor Hopf::tensor_cat(const Tensor &a, const Tensor &b) const
{
	Tensor r;
	for (auto &[wa, ca] : a)
		for (auto &[wb, cb] : b) {
			auto w = wa;
			w.insert(w.end(), wb.begin(), wb.end());
			acc(r, w, ca * cb);
		}
	return r;
}

Tensor Hopf::iterated_coproduct(const HElem &a, int n) const
{
	if (n <= 0) {
		Tensor t;
		Q e = counit(a);
		if (e != 0)
			t[{}] = e;
		return t;
	}
	Tensor t = tensor1(a);
	for (int k = 1; k < n; ++k)
		t = at_slot(t, static_cast<size_t>(k - 1), [&](const HElem &h) { return coproduct(h); });
	return t;
}

namespace {

std::string pbw_text(const Exp &u, const std::vector<std::string> &names)
{
	std::string s;
	for (size_t i = 0; i < u.size(); ++i) {
		if (!u[i])
			continue;
		if (!s.empty())
			s += "·";
		s += names[i];
		if (u[i] > 1)
			s += "^" + std::to_string(u[i]);
	}
	return s.empty() ? "1" : s;
}

} // namespace

std::string Hopf::text(const HElem &a) const
{
	if (a.empty())
		return "0";
	std::map<Exp, RFun> by_u;
	for (auto &[k, c] : a)
		acc(by_u[k.u], k.f, c);
	std::string s;
	for (auto &[u, f] : by_u) {
		if (!s.empty())
			s += " + ";
		s += "(" + rf_text(f) + ") ▶◁ " + pbw_text(u, m_.lie.g1.basis());
	}
	return s;
}

std::string Hopf::text(const Tensor &t) const
{
	if (t.empty())
		return "0";
	std::string s;
	for (auto &[w, c] : t) {
		if (!s.empty())
			s += " + ";
		s += to_string(c);
		if (w.empty())
			continue;
		s += "·";
		for (size_t i = 0; i < w.size(); ++i) {
			if (i)
				s += " ⊗ ";
			s += "[" + text(HElem{{w[i], Q(1)}}) + "]";
		}
	}
	return s;
}

std::vector<Exp> exps_upto(size_t n, int deg)
{
	std::vector<Exp> out;
	Exp e(n, 0);
	std::function<void(size_t, int)> rec = [&](size_t i, int left) {
		if (i == n) {
			out.push_back(e);
			return;
		}
		for (int k = 0; k <= left; ++k) {
			e[i] = k;
			rec(i + 1, left - k);
		}
		e[i] = 0;
	};
	rec(0, deg);
	std::sort(out.begin(), out.end(), [](const Exp &a, const Exp &b) {
		int ta = total(a), tb = total(b);
		return ta != tb ? ta < tb : a < b;
	});
	return out;
}

std::vector<HElem> hopf_basis(const Hopf &h, int rdeg, int udeg)
{
	std::vector<HElem> out;
	for (auto &u : exps_upto(h.d1(), udeg))
		for (auto &f : exps_upto(h.d2(), rdeg))
			out.push_back(h.elem({{f, Q(1)}}, u));
	return out;
}

namespace {

Check fail_or_pass(const std::string &name, const std::string &why)
{
	return {name, why.empty(), why};
}

} // namespace

std::vector<Check> check_rep_hopf(const Hopf &h, int rdeg)
{
	std::vector<Check> out;
	std::string coass, counit, anti, invol, mult;
	auto mons = exps_upto(h.d2(), rdeg);
	using Pair = std::map<std::pair<Exp, Exp>, Q>;
	for (auto &e : mons) {
		RFun f{{e, Q(1)}};
		Pair cp = h.rf_coproduct(f);
		// coassociativity on triples of exponents
		std::map<std::vector<Exp>, Q> l, r;
		for (auto &[p, c] : cp) {
			for (auto &[q, d] : h.rf_coproduct({{p.first, Q(1)}}))
				acc(l, std::vector<Exp>{q.first, q.second, p.second}, c * d);
			for (auto &[q, d] : h.rf_coproduct({{p.second, Q(1)}}))
				acc(r, std::vector<Exp>{p.first, q.first, q.second}, c * d);
		}
		if (l != r && coass.empty())
			coass = "F = " + h.rf_text(f);
		RFun a, b, s1, s2;
		for (auto &[p, c] : cp) {
			acc_all(a, RFun{{p.first, c * h.rf_counit({{p.second, Q(1)}})}});
			acc_all(b, RFun{{p.second, c * h.rf_counit({{p.first, Q(1)}})}});
			acc_all(s1, h.rf_mul(h.rf_antipode({{p.first, Q(1)}}), {{p.second, Q(1)}}), c);
			acc_all(s2, h.rf_mul({{p.first, Q(1)}}, h.rf_antipode({{p.second, Q(1)}})), c);
		}
		if ((a != f || b != f) && counit.empty())
			counit = "F = " + h.rf_text(f);
		RFun eps = scaled(h.rf_one(), h.rf_counit(f));
		if ((s1 != eps || s2 != eps) && anti.empty())
			anti = "F = " + h.rf_text(f);
		if (h.rf_antipode(h.rf_antipode(f)) != f && invol.empty())
			invol = "F = " + h.rf_text(f);
	}
	for (auto &e1 : mons)
		for (auto &e2 : mons) {
			if (!mult.empty())
				break;
			RFun f{{e1, Q(1)}}, g{{e2, Q(1)}};
			Pair lhs = h.rf_coproduct(h.rf_mul(f, g)), rhs;
			for (auto &[p, c] : h.rf_coproduct(f))
				for (auto &[q, d] : h.rf_coproduct(g))
					acc(rhs, {h.rf_mul({{p.first, 1}}, {{q.first, 1}}).begin()->first,
					          h.rf_mul({{p.second, 1}}, {{q.second, 1}}).begin()->first},
					    c * d);
			if (lhs != rhs)
				mult = h.rf_text(f) + " , " + h.rf_text(g);
		}
	out.push_back(fail_or_pass("hopf.R.coassoc", coass));
	out.push_back(fail_or_pass("hopf.R.counit", counit));
	out.push_back(fail_or_pass("hopf.R.antipode", anti));
	out.push_back(fail_or_pass("hopf.R.antipode_involutive", invol));
	out.push_back(fail_or_pass("hopf.R.bialgebra", mult));
	return out;
}

std::vector<Check> check_u_hopf(const Hopf &h, int udeg)
{
	std::vector<Check> out;
	auto mons = exps_upto(h.d1(), udeg);
	std::string assoc, coass, counit, anti, bialg;
	auto name = [&](const Exp &a) { return pbw_text(a, h.model().lie.g1.basis()); };
	for (auto &a : mons)
		for (auto &b : mons) {
			if (total(a) + total(b) > udeg + 1)
				continue;
			for (auto &c : mons) {
				if (total(a) + total(b) + total(c) > udeg + 1)
					continue;
				UElem l = h.u_mul(h.u_mul(a, b), UElem{{c, Q(1)}});
				UElem r = h.u_mul(UElem{{a, Q(1)}}, h.u_mul(b, c));
				if (l != r && assoc.empty())
					assoc = name(a) + "," + name(b) + "," + name(c);
			}
			// Delta(ab) = Delta(a) Delta(b)
			std::map<std::pair<Exp, Exp>, Q> lhs, rhs;
			for (auto &[e, c] : h.u_mul(a, b))
				for (auto &[p, d] : h.u_coproduct(e))
					acc(lhs, p, c * d);
			for (auto &[p, c] : h.u_coproduct(a))
				for (auto &[q, d] : h.u_coproduct(b))
					for (auto &[x, cx] : h.u_mul(p.first, q.first))
						for (auto &[y, cy] : h.u_mul(p.second, q.second))
							acc(rhs, {x, y}, c * d * cx * cy);
			if (lhs != rhs && bialg.empty())
				bialg = name(a) + "," + name(b);
		}
	for (auto &a : mons) {
		auto cp = h.u_coproduct(a);
		std::map<std::vector<Exp>, Q> l, r;
		UElem e1, e2, s1, s2;
		for (auto &[p, c] : cp) {
			for (auto &[q, d] : h.u_coproduct(p.first))
				acc(l, std::vector<Exp>{q.first, q.second, p.second}, c * d);
			for (auto &[q, d] : h.u_coproduct(p.second))
				acc(r, std::vector<Exp>{p.first, q.first, q.second}, c * d);
			acc(e1, p.first, c * h.u_counit(p.second));
			acc(e2, p.second, c * h.u_counit(p.first));
			acc_all(s1, h.u_mul(h.u_antipode(p.first), UElem{{p.second, Q(1)}}), c);
			acc_all(s2, h.u_mul(UElem{{p.first, Q(1)}}, h.u_antipode(p.second)), c);
		}
		UElem self{{a, Q(1)}}, eps;
		acc(eps, h.u_zero(), h.u_counit(a));
		if (l != r && coass.empty())
			coass = name(a);
		if ((e1 != self || e2 != self) && counit.empty())
			counit = name(a);
		if ((s1 != eps || s2 != eps) && anti.empty())
			anti = name(a);
	}
	out.push_back(fail_or_pass("hopf.U.assoc", assoc));
	out.push_back(fail_or_pass("hopf.U.coassoc", coass));
	out.push_back(fail_or_pass("hopf.U.counit", counit));
	out.push_back(fail_or_pass("hopf.U.antipode", anti));
	out.push_back(fail_or_pass("hopf.U.bialgebra", bialg));
	return out;
}

namespace {

HElem apply_m(const Hopf &h, const Tensor &t)
{
	HElem r;
	for (auto &[w, c] : t) {
		HElem cur = h.one();
		for (auto &k : w)
			cur = h.mul(cur, HElem{{k, Q(1)}});
		acc_all(r, cur, c);
	}
	return r;
}

std::vector<HElem> sample(const std::vector<HElem> &pool, size_t n, unsigned seed)
{
	std::mt19937 rng(seed);
	std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
	std::vector<HElem> out;
	for (size_t i = 0; i < n; ++i)
		out.push_back(pool[pick(rng)]);
	return out;
}

} // namespace

std::vector<Check> check_h_hopf(const Hopf &h, int rdeg, int udeg)
{
	std::vector<Check> out;
	auto basis = hopf_basis(h, rdeg, udeg);
	std::string assoc, unit, coass, counit, anti, bialg, sinv, cop_unit;
	auto x = sample(basis, 100, 11), y = sample(basis, 100, 12), z = sample(basis, 100, 13);
	for (size_t i = 0; i < x.size(); ++i) {
		if (assoc.empty() && h.mul(h.mul(x[i], y[i]), z[i]) != h.mul(x[i], h.mul(y[i], z[i])))
			assoc = h.text(x[i]) + " ; " + h.text(y[i]) + " ; " + h.text(z[i]);
		if (bialg.empty()) {
			Tensor l = h.coproduct(h.mul(x[i], y[i]));
			Tensor r = h.tensor_mul(h.coproduct(x[i]), h.coproduct(y[i]));
			if (l != r)
				bialg = h.text(x[i]) + " ; " + h.text(y[i]);
		}
		if (counit.empty() && h.counit(h.mul(x[i], y[i])) != h.counit(x[i]) * h.counit(y[i]))
			counit = "multiplicative: " + h.text(x[i]) + " ; " + h.text(y[i]);
	}
	for (auto &a : basis) {
		if (unit.empty() && (h.mul(h.one(), a) != a || h.mul(a, h.one()) != a))
			unit = h.text(a);
		Tensor d = h.coproduct(a);
		Tensor l = h.at_slot(d, 0, [&](const HElem &e) { return h.coproduct(e); });
		Tensor r = h.at_slot(d, 1, [&](const HElem &e) { return h.coproduct(e); });
		if (coass.empty() && l != r)
			coass = h.text(a);
		HElem e1, e2;
		Tensor s1, s2;
		for (auto &[w, c] : d) {
			acc_all(e1, HElem{{w[0], Q(1)}}, c * h.counit(HElem{{w[1], Q(1)}}));
			acc_all(e2, HElem{{w[1], Q(1)}}, c * h.counit(HElem{{w[0], Q(1)}}));
		}
		if (counit.empty() && (e1 != a || e2 != a))
			counit = h.text(a);
		Tensor t1 = h.at_slot(d, 0, [&](const HElem &e) { return h.tensor1(h.antipode(e)); });
		Tensor t2 = h.at_slot(d, 1, [&](const HElem &e) { return h.tensor1(h.antipode(e)); });
		HElem eps = scaled(h.one(), h.counit(a));
		if (anti.empty() && (apply_m(h, t1) != eps || apply_m(h, t2) != eps))
			anti = h.text(a);
		if (sinv.empty() && (h.antipode(h.antipode_bowtie(a)) != a || h.antipode_bowtie(h.antipode(a)) != a))
			sinv = h.text(a);
	}
	Tensor one2;
	one2[{h.one().begin()->first, h.one().begin()->first}] = 1;
	if (h.coproduct(h.one()) != one2)
		cop_unit = "Delta(1) != 1 (x) 1";
	out.push_back(fail_or_pass("hopf.H.assoc", assoc));
	out.push_back(fail_or_pass("hopf.H.unit", unit));
	out.push_back(fail_or_pass("hopf.H.coassoc", coass));
	out.push_back(fail_or_pass("hopf.H.counit", counit));
	out.push_back(fail_or_pass("hopf.H.antipode", anti));
	out.push_back(fail_or_pass("hopf.H.bialgebra", bialg + cop_unit));
	out.push_back(fail_or_pass("hopf.H.antipode_inverse", sinv));
	return out;
}

std::vector<Check> check_matched_hopf(const Hopf &h, int rdeg, int udeg)
{
	std::vector<Check> out;
	auto us = exps_upto(h.d1(), udeg);
	auto fs = exps_upto(h.d2(), rdeg);
	auto nm = [&](const Exp &u) { return pbw_text(u, h.model().lie.g1.basis()); };
	std::string c1, c2, c3, c4, comod, cocounit, action;
	using P = std::map<std::pair<Exp, Exp>, Q>;
	for (auto &u : us) {
		const P &cu = h.coaction(u);
		// comodule: (id (x) Delta) nabla = (nabla (x) id) nabla
		std::map<std::vector<Exp>, Q> l, r;
		UElem eu;
		for (auto &[p, c] : cu) {
			for (auto &[q, d] : h.rf_coproduct({{p.second, Q(1)}}))
				acc(l, std::vector<Exp>{p.first, q.first, q.second}, c * d);
			for (auto &[q, d] : h.coaction(p.first))
				acc(r, std::vector<Exp>{q.first, q.second, p.second}, c * d);
			acc(eu, p.first, c * h.rf_counit({{p.second, Q(1)}}));
		}
		if (l != r && comod.empty())
			comod = nm(u);
		if (eu != UElem{{u, Q(1)}} && cocounit.empty())
			cocounit = nm(u);
		for (auto &v : us) {
			// action: (uv) |> F = u |> (v |> F)
			if (total(u) + total(v) > udeg)
				continue;
			for (auto &f : fs) {
				RFun lhs;
				for (auto &[w, c] : h.u_mul(u, v))
					acc_all(lhs, h.act(w, {{f, Q(1)}}), c);
				if (lhs != h.act(u, h.act(v, {{f, Q(1)}})) && action.empty())
					action = nm(u) + "," + nm(v);
			}
			// nabla(uv) = u(1)<0> v<0> (x) u(1)<1> (u(2) |> v<1>)
			P lhs, rhs;
			for (auto &[w, c] : h.u_mul(u, v))
				for (auto &[p, d] : h.coaction(w))
					acc(lhs, p, c * d);
			for (auto &[up, uc] : h.u_coproduct(u))
				for (auto &[a, ac] : h.coaction(up.first))
					for (auto &[b, bc] : h.coaction(v)) {
						RFun leg = h.rf_mul({{a.second, Q(1)}}, h.act(up.second, {{b.second, Q(1)}}));
						for (auto &[x, xc] : h.u_mul(a.first, b.first))
							for (auto &[fe, fc] : leg)
								acc(rhs, {x, fe}, uc * ac * bc * xc * fc);
					}
			if (lhs != rhs && c3.empty())
				c3 = nm(u) + "," + nm(v);
		}
		for (auto &f : fs) {
			RFun F{{f, Q(1)}};
			// eps(u |> F) = eps(u) eps(F)
			if (h.rf_counit(h.act(u, F)) != h.u_counit(u) * h.rf_counit(F) && c1.empty())
				c1 = nm(u) + " |> " + h.rf_text(F);
			// Delta(u |> F) = u(1)<0> |> F(1) (x) u(1)<1> (u(2) |> F(2))
			P lhs, rhs;
			for (auto &[p, c] : h.rf_coproduct(h.act(u, F)))
				acc(lhs, p, c);
			for (auto &[up, uc] : h.u_coproduct(u))
				for (auto &[a, ac] : h.coaction(up.first))
					for (auto &[fp, fc] : h.rf_coproduct(F)) {
						RFun l1 = h.act(a.first, {{fp.first, Q(1)}});
						RFun l2 = h.rf_mul({{a.second, Q(1)}}, h.act(up.second, {{fp.second, Q(1)}}));
						for (auto &[e1, x1] : l1)
							for (auto &[e2, x2] : l2)
								acc(rhs, {e1, e2}, uc * ac * fc * x1 * x2);
					}
			if (lhs != rhs && c2.empty())
				c2 = nm(u) + " |> " + h.rf_text(F);
			// u(2)<0> (x) (u(1) |> F) u(2)<1> = u(1)<0> (x) u(1)<1> (u(2) |> F)
			P a4, b4;
			for (auto &[up, uc] : h.u_coproduct(u)) {
				RFun uf1 = h.act(up.first, F), uf2 = h.act(up.second, F);
				for (auto &[a, ac] : h.coaction(up.second))
					for (auto &[e, ec] : h.rf_mul(uf1, {{a.second, Q(1)}}))
						acc(a4, {a.first, e}, uc * ac * ec);
				for (auto &[a, ac] : h.coaction(up.first))
					for (auto &[e, ec] : h.rf_mul({{a.second, Q(1)}}, uf2))
						acc(b4, {a.first, e}, uc * ac * ec);
			}
			if (a4 != b4 && c4.empty())
				c4 = nm(u) + " , " + h.rf_text(F);
		}
	}
	out.push_back(fail_or_pass("hopf.matched.counit_action", c1));
	out.push_back(fail_or_pass("hopf.matched.coproduct_action", c2));
	out.push_back(fail_or_pass("hopf.matched.coaction_product", c3));
	out.push_back(fail_or_pass("hopf.matched.coaction_twist", c4));
	out.push_back(fail_or_pass("hopf.U.coaction_coassoc", comod));
	out.push_back(fail_or_pass("hopf.U.coaction_counit", cocounit));
	out.push_back(fail_or_pass("hopf.U.action_on_R", action));
	return out;
}

std::vector<Check> check_mpi(const Hopf &h, int rdeg)
{
	std::vector<Check> out;
	Q ds = h.delta(h.sigma_elem());
	out.push_back({"hopf.mpi.delta_sigma", ds == 1, ds == 1 ? "" : "delta(sigma) = " + to_string(ds)});
	HElem sg = h.sigma_elem(), si = h.sigma_inv_elem();
	std::string gl;
	if (h.mul(sg, si) != h.one())
		gl = "sigma * sigma^{-1} != 1";
	Tensor dsg = h.coproduct(sg), sgsg;
	for (auto &[k, c] : sg)
		for (auto &[k2, c2] : sg)
			acc(sgsg, std::vector<HKey>{k, k2}, c * c2);
	if (dsg != sgsg)
		gl += " sigma not group-like";
	out.push_back(fail_or_pass("hopf.mpi.sigma_grouplike", gl));
	std::string sq;
	std::vector<HElem> gens;
	for (auto &f : exps_upto(h.d2(), rdeg))
		if (!f.empty() && total(f) > 0)
			gens.push_back(h.elem({{f, Q(1)}}, h.u_zero()));
	for (size_t i = 0; i < h.d1(); ++i)
		gens.push_back(h.gen_z(i));
	for (auto &g : gens) {
		HElem l = h.s_delta(h.s_delta(g));
		HElem r = h.mul(h.mul(sg, g), si);
		if (l != r) {
			sq = h.text(g) + ": S_delta^2 = " + h.text(l) + " vs " + h.text(r);
			break;
		}
	}
	out.push_back(fail_or_pass("hopf.mpi.s_delta_squared", sq));
	return out;
}

std::vector<Check> check_sayd(const Hopf &h, int rdeg, int udeg)
{
	std::vector<Check> out;
	HElem sg = h.sigma_elem(), si = h.sigma_inv_elem();
	std::string ayd, cop;
	for (auto &a : hopf_basis(h, rdeg, udeg)) {
		Tensor d3 = h.iterated_coproduct(a, 3);
		HElem rhs, rhs_cop;
		for (auto &[w, c] : d3) {
			Q d = h.delta(HElem{{w[1], Q(1)}});
			if (d == 0)
				continue;
			HElem h1{{w[0], Q(1)}}, h3{{w[2], Q(1)}};
			acc_all(rhs, h.mul(h.mul(h.antipode(h3), sg), h1), c * d);
			acc_all(rhs_cop, h.mul(h.mul(h.antipode_bowtie(h1), si), h3), c * d);
		}
		if (ayd.empty() && rhs != scaled(sg, h.delta(a)))
			ayd = h.text(a) + ": " + h.text(rhs);
		if (cop.empty() && rhs_cop != scaled(si, h.delta(a)))
			cop = h.text(a) + ": " + h.text(rhs_cop);
	}
	Q st = h.delta(h.sigma_elem());
	out.push_back(fail_or_pass("hopf.sayd.ayd", ayd));
	out.push_back(fail_or_pass("hopf.sayd.stable", st == 1 ? "" : "delta(sigma) = " + to_string(st)));
	out.push_back(fail_or_pass("hopf.sayd.cop", cop));
	return out;
}

} // namespace hcc
