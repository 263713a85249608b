#include "hcc/cyclic.hpp"

#include <random>

namespace hcc {

int CyclicModule::length(const Tensor &w)
{
	if (w.empty())
		return -1;
	return static_cast<int>(w.begin()->first.size());
}

Tensor word(const std::vector<HElem> &hs)
{
	Tensor t;
	t[{}] = 1;
	for (auto &h : hs) {
		Tensor nx;
		for (auto &[w, c] : t)
			for (auto &[k, kc] : h) {
				auto nw = w;
				nw.push_back(k);
				acc(nx, nw, c * kc);
			}
		t = std::move(nx);
	}
	return t;
}

Tensor tensor_add(const Tensor &a, const Tensor &b, const Q &s)
{
	Tensor r = a;
	acc_all(r, b, s);
	return r;
}

Tensor CyclicModule::face(const Tensor &w, int i) const
{
	int m = length(w);
	if (m < 0)
		return {};
	if (i < 0 || i > m + 1)
		throw Error("face index out of range");
	if (i == 0)
		return h_.tensor_cat(h_.tensor1(h_.one()), w);
	if (i == m + 1)
		return h_.tensor_cat(w, h_.tensor1(h_.sigma_elem()));
	return h_.at_slot(w, static_cast<size_t>(i - 1), [&](const HElem &e) { return h_.coproduct(e); });
}

Tensor CyclicModule::degeneracy(const Tensor &w, int i) const
{
	int m = length(w);
	if (m < 0)
		return {};
	if (i < 0 || i >= m)
		throw Error("degeneracy index out of range");
	return h_.at_slot(w, static_cast<size_t>(i), [&](const HElem &e) {
		Tensor t;
		Q c = h_.counit(e);
		if (c != 0)
			t[{}] = c;
		return t;
	});
}

Tensor CyclicModule::tau(const Tensor &w) const
{
	int n = length(w);
	if (n <= 0)
		return w;
	Tensor r;
	for (auto &[ws, c] : w) {
		Tensor lead = h_.iterated_coproduct(h_.s_delta(HElem{{ws[0], Q(1)}}), n);
		Tensor tail;
		std::vector<HKey> rest(ws.begin() + 1, ws.end());
		for (auto &[sk, sc] : h_.sigma_elem()) {
			auto t = rest;
			t.push_back(sk);
			acc(tail, t, sc);
		}
		acc_all(r, h_.tensor_mul(lead, tail), c);
	}
	return r;
}

Tensor CyclicModule::tau_pow(const Tensor &w, int k) const
{
	Tensor r = w;
	for (int i = 0; i < k; ++i)
		r = tau(r);
	return r;
}

Tensor CyclicModule::b(const Tensor &w) const
{
	int m = length(w);
	Tensor r;
	for (int i = 0; i <= m + 1; ++i)
		acc_all(r, face(w, i), Q(i % 2 ? -1 : 1));
	return r;
}

Tensor CyclicModule::B(const Tensor &w) const
{
	int n = length(w);
	if (n <= 0)
		return {};
	Tensor t = tensor_add(w, tau(w), Q(n % 2 ? 1 : -1));
	Tensor s = degeneracy(tau(t), n - 1);
	Tensor r;
	Tensor cur = s;
	for (int i = 0; i < n; ++i) {
		acc_all(r, cur, Q(((n - 1) * i) % 2 ? -1 : 1));
		cur = tau(cur);
	}
	return r;
}

std::vector<Tensor> sample_words(const Hopf &h, int n, size_t count, unsigned seed, int rdeg, int udeg)
{
	auto pool = hopf_basis(h, rdeg, udeg);
	std::mt19937 rng(seed);
	std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
	std::vector<Tensor> out;
	for (size_t k = 0; k < count; ++k) {
		std::vector<HElem> hs;
		for (int i = 0; i < n; ++i)
			hs.push_back(pool[pick(rng)]);
		out.push_back(word(hs));
	}
	return out;
}

std::vector<Check> check_cyclic(const CyclicModule &c, int max_n, size_t per_n)
{
	const Hopf &h = c.hopf();
	std::string ff, ss, sf, tf, ts, tp, bb, BB, bB;
	auto note = [&](std::string &slot, const std::string &what, const Tensor &w) {
		if (slot.empty())
			slot = what + " on " + h.text(w);
	};
	for (int m = 0; m <= max_n; ++m) {
		auto words = sample_words(h, m, m == 0 ? 1 : per_n, 100u + static_cast<unsigned>(m));
		for (auto &w : words) {
			if (m + 2 <= max_n)
				for (int j = 0; j <= m + 2; ++j)
					for (int i = 0; i < j; ++i)
						if (c.face(c.face(w, i), j) != c.face(c.face(w, j - 1), i))
							note(ff, "d" + std::to_string(j) + "d" + std::to_string(i), w);
			if (m >= 2)
				for (int j = 0; j <= m - 2; ++j)
					for (int i = 0; i <= j; ++i)
						if (c.degeneracy(c.degeneracy(w, i), j) != c.degeneracy(c.degeneracy(w, j + 1), i))
							note(ss, "s" + std::to_string(j) + "s" + std::to_string(i), w);
			if (m + 1 <= max_n)
				for (int j = 0; j <= m; ++j)
					for (int i = 0; i <= m + 1; ++i) {
						Tensor l = c.degeneracy(c.face(w, i), j), r;
						if (i < j)
							r = c.face(c.degeneracy(w, j - 1), i);
						else if (i == j || i == j + 1)
							r = w;
						else
							r = c.face(c.degeneracy(w, j), i - 1);
						if (l != r)
							note(sf, "s" + std::to_string(j) + "d" + std::to_string(i), w);
					}
			if (m + 1 <= max_n)
				for (int i = 0; i <= m + 1; ++i) {
					Tensor l = c.tau(c.face(w, i));
					Tensor r = i == 0 ? c.face(w, m + 1) : c.face(c.tau(w), i - 1);
					if (l != r)
						note(tf, "t d" + std::to_string(i), w);
				}
			if (m >= 1)
				for (int i = 0; i <= m - 1; ++i) {
					Tensor l = c.tau(c.degeneracy(w, i));
					Tensor r = i == 0 ? c.degeneracy(c.tau_pow(w, 2), m - 1) : c.degeneracy(c.tau(w), i - 1);
					if (l != r)
						note(ts, "t s" + std::to_string(i), w);
				}
			if (c.tau_pow(w, m + 1) != w)
				note(tp, "tau^(n+1)", w);
			if (m + 2 <= max_n + 1 && !c.b(c.b(w)).empty())
				note(bb, "b^2", w);
			if (!c.B(c.B(w)).empty())
				note(BB, "B^2", w);
			Tensor anti = tensor_add(c.b(c.B(w)), c.B(c.b(w)));
			if (m + 1 <= max_n + 1 && !anti.empty())
				note(bB, "bB+Bb", w);
		}
	}
	auto mk = [](const std::string &n, const std::string &d) { return Check{n, d.empty(), d}; };
	return {mk("cyclic.faces", ff),        mk("cyclic.degeneracies", ss), mk("cyclic.degeneracy_face", sf),
	        mk("cyclic.tau_face", tf),     mk("cyclic.tau_degeneracy", ts), mk("cyclic.tau_power", tp),
	        mk("cyclic.b_squared", bb),    mk("cyclic.B_squared", BB),    mk("cyclic.bB_anticommute", bB)};
}

Integral characteristic_map(const Hopf &h, const Conv &cv, const Tensor &w, const std::vector<ConvTerms> &a)
{
	Integral r;
	for (auto &[ws, c] : w) {
		if (a.size() != ws.size() + 1)
			throw Error("characteristic map: expected " + std::to_string(ws.size() + 1) + " algebra elements");
		ConvTerms prod = a[0];
		for (size_t i = 0; i < ws.size(); ++i)
			prod = cv.mul(prod, cv.act(h, HElem{{ws[i], Q(1)}}, a[i + 1]));
		r += cv.trace(prod) * ScalarExpr(c);
	}
	return r;
}

std::vector<Check> check_trace_identities(const Hopf &h, const Conv &cv, size_t cases, unsigned seed)
{
	const Model &m = h.model();
	const GroupModel &g = m.grp();
	std::mt19937 rng(seed);
	auto coef = [&]() { return Q(static_cast<long>(rng() % 5) - 2); };
	// a concrete non-identity point with small rational entries
	Point v(g.d2()), vinv;
	for (size_t i = 0; i < v.size(); ++i)
		v[i] = ScalarExpr(Q(static_cast<long>(i % 3) + 1) / 2);
	vinv = g.inv_2(v);
	std::vector<Point> pts{g.zero2(), v, vinv};
	auto mons = exps_upto(cv.coords().size(), 2);
	auto hermite = [&](size_t pi) {
		ScalarExpr p;
		for (auto &e : mons) {
			ScalarExpr t(coef());
			for (size_t k = 0; k < e.size(); ++k)
				if (e[k])
					t *= ScalarExpr::var(cv.coords()[k]).pow(e[k]);
			p += t;
		}
		if (p.is_zero())
			p = ScalarExpr(1);
		return cv.elem(Fn::gaussian(p), pts[pi]);
	};
	auto pool = hopf_basis(h, 1, 1);
	std::string s1, s2, s3;
	size_t n = 0;
	for (size_t c = 0; c < cases; ++c) {
		// sweep h over the pool and a over the points; b mostly sits at the inverse point
		const HElem &hh = pool[c % pool.size()];
		size_t pa = (c / pool.size()) % pts.size();
		size_t pb = c % 3 == 2 ? rng() % pts.size() : (pa == 0 ? 0 : 3 - pa);
		ConvTerms a = hermite(pa), b = hermite(pb);
		++n;
		auto why = [&](const std::string &what) {
			return what + " fails for h = " + h.text(hh) + ", a = " + cv.text(a) + ", b = " + cv.text(b);
		};
		if (s1.empty() && cv.trace(cv.mul(a, b)) != cv.trace(cv.mul(b, cv.act(h, h.sigma_elem(), a))))
			s1 = why("tau(ab) = tau(b sigma(a))");
		if (s2.empty() && cv.trace(cv.act(h, hh, a)) != cv.trace(a) * ScalarExpr(h.delta(hh)))
			s2 = why("tau(h(a)) = delta(h) tau(a)");
		if (s3.empty() &&
		    cv.trace(cv.mul(cv.act(h, hh, a), b)) != cv.trace(cv.mul(a, cv.act(h, h.s_delta(hh), b))))
			s3 = why("tau(h(a) b) = tau(a S_delta(h)(b))");
	}
	std::string det = std::to_string(n) + " cases";
	auto mk = [&](const std::string &nm, const std::string &d) { return Check{nm, d.empty(), d.empty() ? det : d}; };
	return {mk("trace.sigma_trace", s1), mk("trace.delta_invariance", s2), mk("trace.integration_by_parts", s3)};
}

} // namespace hcc
