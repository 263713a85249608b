#include "hcc/bicomplex.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace hcc {

int rword_length(const RWord &w)
{
	if (w.empty())
		return -1;
	return static_cast<int>(w.begin()->first.second.size());
}

RWord rword_add(const RWord &a, const RWord &b, const Q &s)
{
	RWord r = a;
	acc_all(r, b, s);
	return r;
}

namespace {

int perm_sign(const std::vector<int> &p)
{
	int s = 1;
	for (size_t i = 0; i < p.size(); ++i)
		for (size_t j = i + 1; j < p.size(); ++j)
			if (p[i] > p[j])
				s = -s;
	return s;
}

// expand a product of polynomials given slotwise as lists of alternatives
// into monomial words
void expand_slots(const std::vector<RFun> &slots, const Q &c, const std::function<void(const std::vector<Exp> &, const Q &)> &emit)
{
	std::vector<Exp> cur(slots.size());
	std::function<void(size_t, const Q &)> rec = [&](size_t k, const Q &v) {
		if (k == slots.size()) {
			emit(cur, v);
			return;
		}
		for (auto &[e, x] : slots[k]) {
			cur[k] = e;
			rec(k + 1, v * x);
		}
	};
	rec(0, c);
}

} // namespace

Bicomplex::Bicomplex(const Hopf &h) : h_(h), m_(h.model()), d1_(h.d1()), d2_(h.d2()), g1_(h.model().lie.g1)
{
	if (m_.group) {
		const GroupModel &g = *m_.group;
		Point r = g.act_right(g.vars2(), g.vars1());
		auto at_e = point_subst(g.c1, g.zero1());
		vel_.assign(d1_, std::vector<ScalarExpr>(d2_));
		for (size_t i = 0; i < d1_; ++i)
			for (size_t j = 0; j < d2_; ++j)
				vel_[i][j] = r[j].diff(g.c1[i]).subst(at_e);
	}
}

std::map<std::pair<Exp, std::vector<int>>, Q> Bicomplex::coact_form(const std::vector<int> &I) const
{
	// running (R part, unsorted index list)
	std::map<std::pair<Exp, std::vector<int>>, Q> cur{{{Exp(d2_, 0), {}}, Q(1)}};
	for (int i : I) {
		std::map<std::pair<Exp, std::vector<int>>, Q> nx;
		for (auto &[k, c] : cur)
			for (size_t j = 0; j < d1_; ++j) {
				const RFun &gij = h_.gamma()[static_cast<size_t>(i)][j];
				if (gij.empty())
					continue;
				RFun prod = h_.rf_mul(mono(k.first), h_.rf_antipode(gij));
				auto J = k.second;
				J.push_back(static_cast<int>(j));
				for (auto &[e, x] : prod)
					acc(nx, {e, J}, c * x);
			}
		cur = std::move(nx);
	}
	std::map<std::pair<Exp, std::vector<int>>, Q> out;
	for (auto &[k, c] : cur)
		for (auto &[J, s] : lc_basis(k.second))
			acc(out, {k.first, J}, c * s);
	return out;
}

std::map<std::pair<Exp, std::vector<Exp>>, Q> Bicomplex::iter_coaction(const Exp &u, int n) const
{
	std::map<std::pair<Exp, std::vector<Exp>>, Q> cur{{{u, {}}, Q(1)}};
	for (int k = 0; k < n; ++k) {
		std::map<std::pair<Exp, std::vector<Exp>>, Q> nx;
		for (auto &[key, c] : cur)
			for (auto &[p, x] : h_.coaction(key.first)) {
				std::vector<Exp> legs{p.second};
				legs.insert(legs.end(), key.second.begin(), key.second.end());
				acc(nx, {p.first, legs}, c * x);
			}
		cur = std::move(nx);
	}
	return cur;
}

RWord Bicomplex::rmap_slot(const RWord &w, size_t slot,
                           const std::function<std::map<std::vector<Exp>, Q>(const Exp &)> &f) const
{
	RWord r;
	for (auto &[k, c] : w) {
		for (auto &[img, x] : f(k.second.at(slot))) {
			std::vector<Exp> nw(k.second.begin(), k.second.begin() + static_cast<long>(slot));
			nw.insert(nw.end(), img.begin(), img.end());
			nw.insert(nw.end(), k.second.begin() + static_cast<long>(slot) + 1, k.second.end());
			acc(r, {k.first, nw}, c * x);
		}
	}
	return r;
}

// ---- step 1 ----

RWord Bicomplex::b1(const RWord &w) const
{
	RWord r;
	int p = rword_length(w);
	if (p < 0)
		return r;
	for (auto &[k, c] : w) {
		std::vector<Exp> nw{Exp(d2_, 0)};
		nw.insert(nw.end(), k.second.begin(), k.second.end());
		acc(r, {k.first, nw}, c);
	}
	for (int i = 1; i <= p; ++i) {
		RWord t = rmap_slot(w, static_cast<size_t>(i - 1), [&](const Exp &e) {
			std::map<std::vector<Exp>, Q> o;
			for (auto &[ab, x] : h_.rf_coproduct(mono(e)))
				acc(o, std::vector<Exp>{ab.first, ab.second}, x);
			return o;
		});
		acc_all(r, t, Q(i % 2 ? -1 : 1));
	}
	Q s((p + 1) % 2 ? -1 : 1);
	for (auto &[k, c] : w)
		for (auto &[fj, x] : coact_form(k.first)) {
			auto nw = k.second;
			nw.push_back(fj.first);
			acc(r, {fj.second, nw}, c * x * s);
		}
	return r;
}

namespace {

// iterated coproduct of an R element into n legs
std::map<std::vector<Exp>, Q> rf_iter_cop(const Hopf &h, const RFun &f, int n)
{
	std::map<std::vector<Exp>, Q> cur;
	if (n == 0) {
		acc(cur, std::vector<Exp>{}, h.rf_counit(f));
		return cur;
	}
	for (auto &[e, c] : f)
		acc(cur, std::vector<Exp>{e}, c);
	for (int k = 1; k < n; ++k) {
		std::map<std::vector<Exp>, Q> nx;
		for (auto &[legs, c] : cur)
			for (auto &[ab, x] : h.rf_coproduct(RFun{{legs.back(), Q(1)}})) {
				auto nl = legs;
				nl.back() = ab.first;
				nl.push_back(ab.second);
				acc(nx, nl, c * x);
			}
		cur = std::move(nx);
	}
	return cur;
}

} // namespace

RWord Bicomplex::tau1(const RWord &w) const
{
	int p = rword_length(w);
	if (p <= 0)
		return w;
	RWord r;
	for (auto &[k, c] : w) {
		RFun s1 = h_.rf_antipode(mono(k.second[0]));
		auto legs = rf_iter_cop(h_, s1, p);
		for (auto &[fj, x] : coact_form(k.first)) {
			std::vector<Exp> X(k.second.begin() + 1, k.second.end());
			X.push_back(fj.first);
			for (auto &[lg, y] : legs) {
				std::vector<RFun> slots;
				for (int m = 0; m < p; ++m)
					slots.push_back(h_.rf_mul(mono(X[static_cast<size_t>(m)]), mono(lg[static_cast<size_t>(m)])));
				expand_slots(slots, c * x * y, [&](const std::vector<Exp> &nw, const Q &v) { acc(r, {fj.second, nw}, v); });
			}
		}
	}
	return r;
}

RWord Bicomplex::sigma1(const RWord &w) const
{
	RWord r;
	for (auto &[k, c] : w) {
		if (k.second.empty())
			throw Error("sigma: empty word");
		std::vector<Exp> nw(k.second.begin(), k.second.end() - 1);
		acc(r, {k.first, nw}, c * h_.rf_counit(mono(k.second.back())));
	}
	return r;
}

namespace {

RWord connes_B(const RWord &w, int p, const std::function<RWord(const RWord &)> &tau,
               const std::function<RWord(const RWord &)> &sigma)
{
	if (p <= 0 || w.empty())
		return {};
	RWord a = rword_add(w, tau(w), Q(p % 2 ? 1 : -1));
	a = sigma(tau(a));
	RWord r, cur = a;
	for (int i = 0; i < p; ++i) {
		acc_all(r, cur, Q(((p - 1) * i) % 2 ? -1 : 1));
		cur = tau(cur);
	}
	return r;
}

} // namespace

RWord Bicomplex::B1(const RWord &w) const
{
	return connes_B(w, rword_length(w), [&](const RWord &x) { return tau1(x); },
	                [&](const RWord &x) { return sigma1(x); });
}

RWord Bicomplex::twisted_act(size_t i, const RWord &w) const
{
	RWord r;
	int p = rword_length(w);
	for (auto &[k, c] : w)
		for (int m = 1; m <= p; ++m)
			for (auto &[ul, x] : iter_coaction(h_.u_gen(i), p - m)) {
				std::vector<RFun> slots;
				for (int s = 1; s <= p; ++s) {
					const Exp &F = k.second[static_cast<size_t>(s - 1)];
					if (s < m)
						slots.push_back(mono(F));
					else if (s == m)
						slots.push_back(h_.act(ul.first, mono(F)));
					else
						slots.push_back(h_.rf_mul(mono(ul.second[static_cast<size_t>(s - m - 1)]), mono(F)));
				}
				expand_slots(slots, c * x, [&](const std::vector<Exp> &nw, const Q &v) { acc(r, {k.first, nw}, v); });
			}
	return r;
}

RWord Bicomplex::dg_generic(const RWord &w, const std::function<RWord(size_t, const RWord &)> &act) const
{
	RWord r;
	for (auto &[k, c] : w) {
		for (auto &[K, v] : ce_d(g1_, lc_basis(k.first)))
			acc(r, {K, k.second}, c * v);
		RWord single{{k, c}};
		for (size_t i = 0; i < d1_; ++i)
			for (auto &[ak, x] : act(i, single))
				for (auto &[K, v] : lc_wedge(lc_basis({static_cast<int>(i)}), lc_basis(ak.first)))
					acc(r, {K, ak.second}, x * v * Q(dg_sign_));
	}
	return r;
}

RWord Bicomplex::dg1(const RWord &w) const
{
	return dg_generic(w, [&](size_t i, const RWord &x) { return twisted_act(i, x); });
}

// ---- step 2 ----

RWord Bicomplex::b2(const RWord &w) const
{
	RWord r;
	int n = rword_length(w);
	for (int i = 0; i <= n; ++i)
		for (auto &[k, c] : w) {
			auto nw = k.second;
			nw.insert(nw.begin() + i, Exp(d2_, 0));
			acc(r, {k.first, nw}, i % 2 ? -c : c);
		}
	return r;
}

RWord Bicomplex::tau2(const RWord &w) const
{
	RWord r;
	for (auto &[k, c] : w) {
		auto nw = k.second;
		if (!nw.empty())
			std::rotate(nw.begin(), nw.begin() + 1, nw.end());
		acc(r, {k.first, nw}, c);
	}
	return r;
}

RWord Bicomplex::sigma2(const RWord &w) const
{
	RWord r;
	for (auto &[k, c] : w) {
		if (k.second.size() < 2)
			throw Error("sigma: word too short");
		std::vector<Exp> nw(k.second.begin(), k.second.end() - 2);
		RFun prod = h_.rf_mul(mono(k.second[k.second.size() - 2]), mono(k.second.back()));
		for (auto &[e, x] : prod) {
			auto w2 = nw;
			w2.push_back(e);
			acc(r, {k.first, w2}, c * x);
		}
	}
	return r;
}

RWord Bicomplex::B2(const RWord &w) const
{
	return connes_B(w, rword_length(w) - 1, [&](const RWord &x) { return tau2(x); },
	                [&](const RWord &x) { return sigma2(x); });
}

RWord Bicomplex::diag_act(size_t i, const RWord &w) const
{
	RWord r;
	int n = rword_length(w);
	for (int s = 0; s < n; ++s) {
		RWord t = rmap_slot(w, static_cast<size_t>(s), [&](const Exp &e) {
			std::map<std::vector<Exp>, Q> o;
			for (auto &[f, x] : h_.act(i, mono(e)))
				acc(o, std::vector<Exp>{f}, x);
			return o;
		});
		acc_all(r, t);
	}
	return r;
}

RWord Bicomplex::dg2(const RWord &w) const
{
	return dg_generic(w, [&](size_t i, const RWord &x) { return diag_act(i, x); });
}

RWord Bicomplex::I(const RWord &w) const
{
	RWord r;
	for (auto &[k, c] : w) {
		for (auto &[fj, x] : coact_form(k.first)) {
			const auto &Fs = k.second;
			size_t p = Fs.size();
			// (done slots, pending antipode factor)
			std::map<std::pair<std::vector<Exp>, Exp>, Q> cur{{{{}, Exp(d2_, 0)}, c * x}};
			for (size_t m = 0; m < p; ++m) {
				std::map<std::pair<std::vector<Exp>, Exp>, Q> nx;
				auto cp = h_.rf_coproduct(mono(Fs[m]));
				for (auto &[st, v] : cur)
					for (auto &[ab, y] : cp) {
						RFun slot = h_.rf_mul(mono(st.second), mono(ab.first));
						RFun sb = h_.rf_antipode(mono(ab.second));
						for (auto &[e, z] : slot)
							for (auto &[e2, z2] : sb) {
								auto done = st.first;
								done.push_back(e);
								acc(nx, {done, e2}, v * y * z * z2);
							}
					}
				cur = std::move(nx);
			}
			for (auto &[st, v] : cur)
				for (auto &[e, z] : h_.rf_mul(mono(st.second), mono(fj.first))) {
					auto done = st.first;
					done.push_back(e);
					acc(r, {fj.second, done}, v * z);
				}
		}
	}
	return r;
}

RWord Bicomplex::I_inv(const RWord &w) const
{
	RWord r;
	for (auto &[k, c] : w) {
		const auto &Fs = k.second;
		int p = static_cast<int>(Fs.size()) - 1;
		Q eps = h_.rf_counit(mono(Fs.back()));
		if (eps == 0)
			continue;
		std::vector<std::map<std::vector<Exp>, Q>> legs;
		for (int i = 0; i < p; ++i)
			legs.push_back(rf_iter_cop(h_, mono(Fs[static_cast<size_t>(i)]), p - i));
		// choose one leg tuple per F^i
		std::vector<const std::vector<Exp> *> pick(static_cast<size_t>(p));
		std::function<void(int, const Q &)> rec = [&](int i, const Q &v) {
			if (i == p) {
				std::vector<RFun> slots;
				for (int s = 1; s <= p; ++s) {
					RFun prod = h_.rf_one();
					for (int j = 0; j < s; ++j)
						prod = h_.rf_mul(prod, mono((*pick[static_cast<size_t>(j)])[static_cast<size_t>(s - j - 1)]));
					slots.push_back(prod);
				}
				expand_slots(slots, v, [&](const std::vector<Exp> &nw, const Q &z) { acc(r, {k.first, nw}, z); });
				return;
			}
			for (auto &[lg, x] : legs[static_cast<size_t>(i)]) {
				pick[static_cast<size_t>(i)] = &lg;
				rec(i + 1, v * x);
			}
		};
		rec(0, c * eps);
	}
	return r;
}

bool Bicomplex::coinvariant(const RWord &w, std::string *why) const
{
	RWord lhs, rhs;
	for (auto &[k, c] : w) {
		for (auto &[fj, x] : coact_form(k.first)) {
			auto nw = k.second;
			nw.push_back(fj.first);
			acc(lhs, {fj.second, nw}, c * x);
		}
		std::vector<std::map<std::pair<Exp, Exp>, Q>> cps;
		for (auto &F : k.second)
			cps.push_back(h_.rf_coproduct(mono(F)));
		size_t n = cps.size();
		std::vector<std::pair<Exp, Exp>> pick(n);
		std::function<void(size_t, const Q &)> rec = [&](size_t i, const Q &v) {
			if (i == n) {
				std::vector<Exp> nw;
				RFun prod = h_.rf_one();
				for (auto &ab : pick) {
					nw.push_back(ab.first);
					prod = h_.rf_mul(prod, mono(ab.second));
				}
				for (auto &[e, z] : prod) {
					auto w2 = nw;
					w2.push_back(e);
					acc(rhs, {k.first, w2}, v * z);
				}
				return;
			}
			for (auto &[ab, y] : cps[i]) {
				pick[i] = ab;
				rec(i + 1, v * y);
			}
		};
		rec(0, c);
	}
	if (lhs == rhs)
		return true;
	if (why)
		*why = "coaction and diagonal coproduct disagree";
	return false;
}

// ---- step 3 ----

RWord Bicomplex::alpha_R(const RWord &w) const
{
	RWord r;
	for (auto &[k, c] : w) {
		std::vector<int> perm(k.second.size());
		std::iota(perm.begin(), perm.end(), 0);
		Q norm = Q(1) / factorial(static_cast<int>(perm.size()));
		do {
			std::vector<Exp> nw;
			for (int j : perm)
				nw.push_back(k.second[static_cast<size_t>(j)]);
			acc(r, {k.first, nw}, c * norm * Q(perm_sign(perm)));
		} while (std::next_permutation(perm.begin(), perm.end()));
	}
	return r;
}

ScalarExpr Bicomplex::eval_at_vertex(const Exp &f, int k) const
{
	ScalarExpr v(1);
	for (size_t j = 0; j < d2_; ++j)
		if (f[j])
			v *= ScalarExpr::var(vertex_sym(h_.coords()[j], k)).pow(f[j]);
	return v;
}

GCochain Bicomplex::J(const RWord &w) const
{
	GCochain out;
	if (w.empty())
		return out;
	out.p = rword_length(w) - 1;
	out.q = static_cast<int>(w.begin()->first.first.size());
	for (auto &[k, c] : w) {
		if (static_cast<int>(k.first.size()) != out.q || static_cast<int>(k.second.size()) != out.p + 1)
			throw Error("J: word is not homogeneous");
		std::vector<int> perm(k.second.size());
		std::iota(perm.begin(), perm.end(), 0);
		ScalarExpr v;
		do {
			ScalarExpr t(Q(perm_sign(perm)));
			for (size_t s = 0; s < perm.size(); ++s)
				t *= eval_at_vertex(k.second[static_cast<size_t>(perm[s])], static_cast<int>(s));
			v += t;
		} while (std::next_permutation(perm.begin(), perm.end()));
		out.add(k.first, v * (c / factorial(out.p + 1)));
	}
	return out;
}

GCochain Bicomplex::b3(const GCochain &c) const
{
	GCochain r{c.p + 1, c.q, {}};
	for (int i = 0; i <= c.p + 1; ++i) {
		std::map<Sym, ScalarExpr> s;
		for (int k = 0; k <= c.p; ++k)
			for (auto &x : h_.coords())
				s[vertex_sym(x, k)] = ScalarExpr::var(vertex_sym(x, k < i ? k : k + 1));
		for (auto &[I, v] : c.c)
			r.add(I, i % 2 ? -v.subst(s) : v.subst(s));
	}
	return r;
}

GCochain Bicomplex::dg3(const GCochain &c) const
{
	GCochain r{c.p, c.q + 1, {}};
	for (auto &[I, v] : c.c) {
		for (auto &[K, x] : ce_d(g1_, lc_basis(I)))
			r.add(K, v * x);
		for (size_t i = 0; i < d1_; ++i) {
			// Z_i acting on every vertex argument
			ScalarExpr zv;
			for (int k = 0; k <= c.p; ++k) {
				std::map<Sym, ScalarExpr> s;
				for (size_t j = 0; j < d2_; ++j)
					s[h_.coords()[j]] = ScalarExpr::var(vertex_sym(h_.coords()[j], k));
				for (size_t j = 0; j < d2_; ++j)
					zv += vel_[i][j].subst(s) * v.diff(vertex_sym(h_.coords()[j], k));
			}
			if (zv.is_zero())
				continue;
			for (auto &[K, x] : lc_wedge(lc_basis({static_cast<int>(i)}), lc_basis(I)))
				r.add(K, zv * (x * Q(dg_sign_)));
		}
	}
	return r;
}

RWord Bicomplex::preimage(const GCochain &c) const
{
	std::vector<Sym> vars;
	for (int k = 0; k <= c.p; ++k)
		for (auto &x : h_.coords())
			vars.push_back(vertex_sym(x, k));
	RWord r;
	for (auto &[I, v] : c.c)
		for (auto &[ex, coef] : v.split(vars)) {
			if (!coef.is_constant())
				throw Error("preimage: coefficient is not polynomial in the vertices");
			std::vector<Exp> nw;
			for (int k = 0; k <= c.p; ++k)
				nw.emplace_back(ex.begin() + static_cast<long>(static_cast<size_t>(k) * d2_),
				                ex.begin() + static_cast<long>(static_cast<size_t>(k + 1) * d2_));
			acc(r, {I, nw}, coef.constant());
		}
	return r;
}

// ---- appendix ----

PairWord Bicomplex::psi_bowtie(const Tensor &w) const
{
	PairWord r;
	for (auto &[word, c] : w) {
		size_t n = word.size();
		if (n == 0) {
			acc(r, {{}, {}}, c);
			continue;
		}
		std::vector<std::map<std::pair<Exp, std::vector<Exp>>, Q>> co;
		for (size_t i = 0; i + 1 < n; ++i)
			co.push_back(iter_coaction(word[i].u, static_cast<int>(n - 1 - i)));
		std::vector<const std::pair<Exp, std::vector<Exp>> *> pick(n - 1);
		std::function<void(size_t, const Q &)> rec = [&](size_t i, const Q &v) {
			if (i + 1 == n) {
				std::vector<RFun> slots;
				for (size_t m = 0; m < n; ++m) {
					RFun f = mono(word[m].f);
					// legs are u_<1>..u_<n-1-i>; slot m (0-based) takes u^i_<n-m>
					for (size_t j = 0; j < m; ++j)
						f = h_.rf_mul(f, h_.rf_antipode(mono(pick[j]->second[n - m - 1])));
					slots.push_back(f);
				}
				std::vector<Exp> us;
				for (size_t j = 0; j + 1 < n; ++j)
					us.push_back(pick[j]->first);
				us.push_back(word[n - 1].u);
				expand_slots(slots, v, [&](const std::vector<Exp> &fs, const Q &z) { acc(r, {fs, us}, z); });
				return;
			}
			for (auto &[k, x] : co[i]) {
				pick[i] = &k;
				rec(i + 1, v * x);
			}
		};
		rec(0, c);
	}
	return r;
}

Tensor Bicomplex::psi_bowtie_inv(const PairWord &w) const
{
	Tensor r;
	for (auto &[k, c] : w) {
		const auto &Fs = k.first;
		const auto &us = k.second;
		size_t n = Fs.size();
		if (us.size() != n)
			throw Error("Psi^-1: R and U parts differ in length");
		if (n == 0) {
			acc(r, std::vector<HKey>{}, c);
			continue;
		}
		std::vector<std::map<std::pair<Exp, std::vector<Exp>>, Q>> co;
		for (size_t i = 0; i + 1 < n; ++i)
			co.push_back(iter_coaction(us[i], static_cast<int>(n - 1 - i)));
		std::vector<const std::pair<Exp, std::vector<Exp>> *> pick(n - 1);
		std::function<void(size_t, const Q &)> rec = [&](size_t i, const Q &v) {
			if (i + 1 == n) {
				std::vector<RFun> slots;
				for (size_t m = 0; m < n; ++m) {
					RFun f = mono(Fs[m]);
					for (size_t j = 0; j < m; ++j)
						f = h_.rf_mul(f, mono(pick[j]->second[m - j - 1]));
					slots.push_back(f);
				}
				expand_slots(slots, v, [&](const std::vector<Exp> &fs, const Q &z) {
					std::vector<HKey> word;
					for (size_t m = 0; m < n; ++m)
						word.push_back(HKey{fs[m], m + 1 < n ? pick[m]->first : us[m]});
					acc(r, word, z);
				});
				return;
			}
			for (auto &[kk, x] : co[i]) {
				pick[i] = &kk;
				rec(i + 1, v * x);
			}
		};
		rec(0, c);
	}
	return r;
}

LieCochain Bicomplex::volume() const
{
	std::vector<int> all(d1_);
	std::iota(all.begin(), all.end(), 0);
	return lc_basis(all);
}

LieCochain Bicomplex::poincare(const std::vector<int> &eta) const
{
	LieCochain cur = volume();
	for (int i : eta)
		cur = interior(cur, g1_.unit(i));
	return cur;
}

// ---- AW and shuffle ----

Bicosimplicial cobar_bicosimplicial(const Hopf &h)
{
	Bicosimplicial X;
	auto one_r = Exp(h.d2(), 0);
	auto one_u = h.u_zero();
	auto face = [](const PairWord &w, int i, bool horiz, const Exp &one, const auto &cop) {
		PairWord r;
		for (auto &[k, c] : w) {
			const auto &v = horiz ? k.first : k.second;
			int n = static_cast<int>(v.size());
			auto put = [&](const std::vector<Exp> &nv, const Q &x) {
				acc(r, horiz ? std::make_pair(nv, k.second) : std::make_pair(k.first, nv), c * x);
			};
			if (i == 0 || i == n + 1) {
				auto nv = v;
				nv.insert(i == 0 ? nv.begin() : nv.end(), one);
				put(nv, Q(1));
				continue;
			}
			for (auto &[ab, x] : cop(v[static_cast<size_t>(i - 1)])) {
				auto nv = v;
				nv[static_cast<size_t>(i - 1)] = ab.first;
				nv.insert(nv.begin() + i, ab.second);
				put(nv, x);
			}
		}
		return r;
	};
	auto degen = [](const PairWord &w, int j, bool horiz, const auto &eps) {
		PairWord r;
		for (auto &[k, c] : w) {
			auto v = horiz ? k.first : k.second;
			Q e = eps(v.at(static_cast<size_t>(j)));
			v.erase(v.begin() + j);
			acc(r, horiz ? std::make_pair(v, k.second) : std::make_pair(k.first, v), c * e);
		}
		return r;
	};
	const Hopf *hp = &h;
	auto rcop = [hp](const Exp &e) { return hp->rf_coproduct(RFun{{e, Q(1)}}); };
	auto ucop = [hp](const Exp &e) { return hp->u_coproduct(e); };
	auto reps = [hp](const Exp &e) { return hp->rf_counit(RFun{{e, Q(1)}}); };
	auto ueps = [hp](const Exp &e) { return hp->u_counit(e); };
	X.hface = [=](const PairWord &w, int i) { return face(w, i, true, one_r, rcop); };
	X.vface = [=](const PairWord &w, int i) { return face(w, i, false, one_u, ucop); };
	X.hdeg = [=](const PairWord &w, int j) { return degen(w, j, true, reps); };
	X.vdeg = [=](const PairWord &w, int j) { return degen(w, j, false, ueps); };
	return X;
}

PairWord aw_map(const Bicosimplicial &X, const PairWord &w, int p, int q)
{
	PairWord r = w;
	for (int i = p + 1; i <= p + q; ++i)
		r = X.hface(r, i);
	for (int i = 0; i < p; ++i)
		r = X.vface(r, 0);
	return r;
}

PairWord shuffle_map(const Bicosimplicial &X, const PairWord &w, int p, int q)
{
	int n = p + q;
	PairWord r;
	// mu: p indices for the vertical codegeneracies, nu: q for the horizontal ones
	std::vector<bool> sel(static_cast<size_t>(n), false);
	std::fill(sel.begin(), sel.begin() + p, true);
	std::sort(sel.begin(), sel.end());
	do {
		std::vector<int> mu, nu, perm;
		for (int i = 0; i < n; ++i)
			(sel[static_cast<size_t>(i)] ? mu : nu).push_back(i);
		perm = mu;
		perm.insert(perm.end(), nu.begin(), nu.end());
		PairWord t = w;
		for (auto it = nu.rbegin(); it != nu.rend(); ++it)
			t = X.hdeg(t, *it);
		for (auto it = mu.rbegin(); it != mu.rend(); ++it)
			t = X.vdeg(t, *it);
		acc_all(r, t, Q(perm_sign(perm)));
	} while (std::next_permutation(sel.begin(), sel.end()));
	return r;
}

PairWord total_b(const Bicosimplicial &X, const PairWord &w, int p, int q)
{
	PairWord r;
	for (int i = 0; i <= p + 1; ++i)
		acc_all(r, X.hface(w, i), Q(i % 2 ? -1 : 1));
	for (int i = 0; i <= q + 1; ++i)
		acc_all(r, X.vface(w, i), Q((i + p) % 2 ? -1 : 1));
	return r;
}

PairWord diagonal_b(const Bicosimplicial &X, const PairWord &w, int n)
{
	PairWord r;
	for (int i = 0; i <= n + 1; ++i)
		acc_all(r, X.hface(X.vface(w, i), i), Q(i % 2 ? -1 : 1));
	return r;
}

// ---- checks ----

std::vector<RWord> sample_rwords(const Hopf &h, int len, size_t count, unsigned seed, int rdeg)
{
	std::mt19937 rng(seed);
	auto mons = exps_upto(h.d2(), rdeg);
	int d1 = static_cast<int>(h.d1());
	std::vector<RWord> out;
	for (size_t s = 0; s < count; ++s) {
		std::vector<int> I;
		for (int i = 0; i < d1; ++i)
			if (rng() % 2)
				I.push_back(i);
		std::vector<Exp> F;
		for (int k = 0; k < len; ++k)
			F.push_back(mons[rng() % mons.size()]);
		out.push_back(RWord{{{I, F}, Q(1)}});
	}
	return out;
}

namespace {

std::string word_text(const Hopf &h, const RWord &w)
{
	std::string s;
	for (auto &[k, c] : w) {
		if (!s.empty())
			s += " + ";
		s += to_string(c) + "*w[";
		for (size_t i = 0; i < k.first.size(); ++i)
			s += (i ? "," : "") + std::to_string(k.first[i] + 1);
		s += "]";
		for (auto &e : k.second)
			s += " (x) " + h.rf_text(RFun{{e, Q(1)}});
	}
	return s.empty() ? "0" : s;
}

// first counterexample or "" over the sampled words
std::string first_bad(const std::vector<RWord> &ws, const std::function<bool(const RWord &)> &ok, const Hopf &h)
{
	for (auto &w : ws)
		if (!ok(w))
			return "fails on " + word_text(h, w);
	return "";
}

Check mk(const std::string &name, const std::string &why, const std::string &okdetail)
{
	return {name, why.empty(), why.empty() ? okdetail : why};
}

} // namespace

std::vector<Check> check_step1(const Bicomplex &bc, int max_p, size_t per_p)
{
	const Hopf &h = bc.hopf();
	std::string bb, BB, bB, dd, db, dB;
	size_t n = 0;
	for (int p = 0; p <= max_p; ++p) {
		auto ws = sample_rwords(h, p, per_p, 101u + static_cast<unsigned>(p));
		n += ws.size();
		if (bb.empty())
			bb = first_bad(ws, [&](const RWord &w) { return bc.b1(bc.b1(w)).empty(); }, h);
		if (BB.empty())
			BB = first_bad(ws, [&](const RWord &w) { return bc.B1(bc.B1(w)).empty(); }, h);
		if (bB.empty())
			bB = first_bad(ws, [&](const RWord &w) { return rword_add(bc.b1(bc.B1(w)), bc.B1(bc.b1(w))).empty(); }, h);
		if (dd.empty())
			dd = first_bad(ws, [&](const RWord &w) { return bc.dg1(bc.dg1(w)).empty(); }, h);
		if (db.empty())
			db = first_bad(ws, [&](const RWord &w) { return bc.dg1(bc.b1(w)) == bc.b1(bc.dg1(w)); }, h);
		if (dB.empty())
			dB = first_bad(ws, [&](const RWord &w) { return bc.dg1(bc.B1(w)) == bc.B1(bc.dg1(w)); }, h);
	}
	std::string det = std::to_string(n) + " words, p <= " + std::to_string(max_p);
	return {mk("bicomplex.step1.b_squared", bb, det), mk("bicomplex.step1.B_squared", BB, det),
	        mk("bicomplex.step1.bB_anticommute", bB, det), mk("bicomplex.step1.dg_squared", dd, det),
	        mk("bicomplex.step1.dg_b_commute", db, det), mk("bicomplex.step1.dg_B_commute", dB, det)};
}

std::vector<Check> check_step2(const Bicomplex &bc, int max_p, size_t per_p)
{
	const Hopf &h = bc.hopf();
	std::string rt, rt2, co, ib, it, idg, bb, dd;
	size_t n = 0;
	for (int p = 0; p <= max_p; ++p) {
		auto ws = sample_rwords(h, p, per_p, 211u + static_cast<unsigned>(p));
		n += ws.size();
		if (rt.empty())
			rt = first_bad(ws, [&](const RWord &w) { return bc.I_inv(bc.I(w)) == w; }, h);
		if (co.empty())
			co = first_bad(ws, [&](const RWord &w) { return bc.coinvariant(bc.I(w)); }, h);
		if (ib.empty())
			ib = first_bad(ws, [&](const RWord &w) { return bc.I(bc.b1(w)) == bc.b2(bc.I(w)); }, h);
		if (it.empty())
			it = first_bad(ws, [&](const RWord &w) { return bc.I(bc.tau1(w)) == bc.tau2(bc.I(w)); }, h);
		if (idg.empty())
			idg = first_bad(ws, [&](const RWord &w) { return bc.I(bc.dg1(w)) == bc.dg2(bc.I(w)); }, h);
		// coinvariant words in the image of I: I o I^-1 = id there
		if (rt2.empty())
			rt2 = first_bad(ws, [&](const RWord &w) {
				RWord x = bc.I(w);
				return bc.I(bc.I_inv(x)) == x;
			}, h);
		auto w2 = sample_rwords(h, p + 1, per_p, 307u + static_cast<unsigned>(p));
		if (bb.empty())
			bb = first_bad(w2, [&](const RWord &w) { return bc.b2(bc.b2(w)).empty(); }, h);
		if (dd.empty())
			dd = first_bad(w2, [&](const RWord &w) { return bc.dg2(bc.dg2(w)).empty(); }, h);
	}
	std::string det = std::to_string(n) + " words, p <= " + std::to_string(max_p);
	return {mk("bicomplex.I.roundtrip", rt, det),         mk("bicomplex.I.onto_coinvariants", rt2, det),
	        mk("bicomplex.I.coinvariant", co, det),       mk("bicomplex.I.intertwines_b", ib, det),
	        mk("bicomplex.I.intertwines_tau", it, det),   mk("bicomplex.I.intertwines_dg", idg, det),
	        mk("bicomplex.step2.b_squared", bb, det),     mk("bicomplex.step2.dg_squared", dd, det)};
}

std::vector<Check> check_step3(const Bicomplex &bc, int max_p, size_t per_p)
{
	const Hopf &h = bc.hopf();
	std::string Bz, ts, jb, jd;
	size_t n = 0;
	for (int p = 0; p <= max_p; ++p) {
		auto ws = sample_rwords(h, p + 1, per_p, 401u + static_cast<unsigned>(p));
		n += ws.size();
		if (Bz.empty())
			Bz = first_bad(ws, [&](const RWord &w) { return bc.B2(bc.alpha_R(w)).empty(); }, h);
		if (ts.empty())
			ts = first_bad(ws, [&](const RWord &w) {
				RWord a = bc.alpha_R(w);
				return bc.tau2(a) == scaled(a, Q(p % 2 ? -1 : 1));
			}, h);
		if (jb.empty())
			jb = first_bad(ws, [&](const RWord &w) { return bc.J(bc.b2(w)).c == bc.b3(bc.J(w)).c; }, h);
		if (jd.empty())
			jd = first_bad(ws, [&](const RWord &w) {
				RWord d = bc.dg2(w);
				return (d.empty() ? GCochain{} : bc.J(d)).c == bc.dg3(bc.J(w)).c;
			}, h);
	}
	std::string det = std::to_string(n) + " words, p <= " + std::to_string(max_p);
	return {mk("bicomplex.step3.B_vanishes", Bz, det), mk("bicomplex.step3.tau_sign", ts, det),
	        mk("bicomplex.step3.J_intertwines_b", jb, det), mk("bicomplex.step3.J_intertwines_dg", jd, det)};
}

std::vector<Check> check_psi_bowtie(const Bicomplex &bc, int max_n)
{
	const Hopf &h = bc.hopf();
	std::mt19937 rng(503u);
	auto rm = exps_upto(h.d2(), 2);
	auto um = exps_upto(h.d1(), 2);
	std::string bad;
	size_t cnt = 0;
	for (int n = 1; n <= max_n && bad.empty(); ++n)
		for (int s = 0; s < 6 && bad.empty(); ++s) {
			std::vector<HKey> word;
			for (int k = 0; k < n; ++k)
				word.push_back(HKey{rm[rng() % rm.size()], um[rng() % um.size()]});
			Tensor t{{word, Q(1)}};
			++cnt;
			if (bc.psi_bowtie_inv(bc.psi_bowtie(t)) != t)
				bad = "Psi^-1 Psi != id on " + h.text(t);
		}
	return {mk("bicomplex.psi_bowtie.roundtrip", bad, std::to_string(cnt) + " words, n <= " + std::to_string(max_n))};
}

std::vector<Check> check_aw_sh(const Bicomplex &bc, int max_total, size_t per)
{
	const Hopf &h = bc.hopf();
	Bicosimplicial X = cobar_bicosimplicial(h);
	std::mt19937 rng(601u);
	// normalized words: no unit entries
	std::vector<Exp> rm, um;
	for (auto &e : exps_upto(h.d2(), 2))
		if (std::accumulate(e.begin(), e.end(), 0) > 0)
			rm.push_back(e);
	for (auto &e : exps_upto(h.d1(), 2))
		if (std::accumulate(e.begin(), e.end(), 0) > 0)
			um.push_back(e);
	std::string id, chain;
	size_t cnt = 0;
	for (int n = 0; n <= max_total; ++n)
		for (int p = 0; p <= n; ++p) {
			int q = n - p;
			if ((p > 0 && rm.empty()) || (q > 0 && um.empty()))
				continue;
			for (size_t s = 0; s < per; ++s) {
				std::vector<Exp> F, U;
				for (int k = 0; k < p; ++k)
					F.push_back(rm[rng() % rm.size()]);
				for (int k = 0; k < q; ++k)
					U.push_back(um[rng() % um.size()]);
				PairWord w{{{F, U}, Q(1)}};
				++cnt;
				if (id.empty() && shuffle_map(X, aw_map(X, w, p, q), p, q) != w)
					id = "Sh o AW != id at (" + std::to_string(p) + "," + std::to_string(q) + ")";
				if (chain.empty()) {
					// AW(b_tot w) = b_diag AW(w)
					PairWord lhs;
					for (auto &[k, c] : total_b(X, w, p, q)) {
						int pp = static_cast<int>(k.first.size()), qq = static_cast<int>(k.second.size());
						acc_all(lhs, aw_map(X, PairWord{{k, c}}, pp, qq));
					}
					if (lhs != diagonal_b(X, aw_map(X, w, p, q), n))
						chain = "AW not a chain map at (" + std::to_string(p) + "," + std::to_string(q) + ")";
				}
			}
		}
	std::string det = std::to_string(cnt) + " words, p + q <= " + std::to_string(max_total);
	return {mk("bicomplex.aw_sh.identity", id, det), mk("bicomplex.aw_sh.aw_chain_map", chain, det)};
}

std::vector<Check> check_poincare(const Bicomplex &bc)
{
	const Hopf &h = bc.hopf();
	const LieAlgebra &g1 = h.model().lie.g1;
	int d = static_cast<int>(g1.dim());
	std::string bij, mod, co;
	for (int k = 0; k <= d && bij.empty(); ++k) {
		std::set<std::vector<int>> seen;
		for (auto &eta : subsets(d, k)) {
			LieCochain img = bc.poincare(eta);
			if (img.size() != 1 || (img.begin()->second != 1 && img.begin()->second != -1) ||
			    !seen.insert(img.begin()->first).second) {
				bij = "not a signed bijection in degree " + std::to_string(k);
				break;
			}
		}
	}
	// Z . varpi = delta(Z) varpi for the coadjoint derivation action
	LieCochain vol = bc.volume();
	QVec delta = delta_character(g1);
	for (int z = 0; z < d && mod.empty(); ++z) {
		LieCochain acc_form;
		for (int j = 0; j < d; ++j) {
			// omega^j . Z = sum_k c_{zk}^j omega^k placed at slot j
			for (int k = 0; k < d; ++k) {
				Q c = g1.c(z, k, j);
				if (c == 0)
					continue;
				std::vector<int> idx(static_cast<size_t>(d));
				std::iota(idx.begin(), idx.end(), 0);
				idx[static_cast<size_t>(j)] = k;
				for (auto &[K, v] : lc_basis(idx))
					lc_add(acc_form, K, v * c);
			}
		}
		LieCochain want;
		for (auto &[K, v] : vol)
			lc_add(want, K, v * delta[static_cast<size_t>(z)]);
		if (acc_form != want)
			mod = "coadjoint action on the volume form is not delta(Z_" + std::to_string(z + 1) + ")";
	}
	// coaction of the volume form is sigma^{-1} (x) varpi
	std::vector<int> all(static_cast<size_t>(d));
	std::iota(all.begin(), all.end(), 0);
	std::map<std::pair<Exp, std::vector<int>>, Q> want;
	for (auto &[e, c] : h.sigma_inv())
		acc(want, {e, all}, c);
	if (bc.coact_form(all) != want)
		co = "coaction of varpi is not sigma^-1 (x) varpi";
	return {mk("bicomplex.poincare.bijective", bij, "dim g1 = " + std::to_string(d)),
	        mk("bicomplex.poincare.delta_twist", mod, "dim g1 = " + std::to_string(d)),
	        mk("bicomplex.poincare.coaction_sigma", co, "dim g1 = " + std::to_string(d))};
}

std::vector<Check> check_cross_module(const Bicomplex &bc, const CochainMaps &cm, const LieCochain &w,
                                      const std::string &label)
{
	std::string bad;
	size_t parts = 0;
	for (auto &e : cm.E_all(w)) {
		++parts;
		RWord pre = bc.preimage(e);
		GCochain back = pre.empty() ? GCochain{e.p, e.q, {}} : bc.J(bc.alpha_R(pre));
		back.p = e.p, back.q = e.q;
		if (!(back == e)) {
			bad = "J alpha_R differs on bidegree (" + std::to_string(e.p) + "," + std::to_string(e.q) + ")";
			break;
		}
	}
	return {mk("bicomplex.cross_module." + label, bad, std::to_string(parts) + " bidegree components")};
}

} // namespace hcc
