#include "hcc/form.hpp"

#include <algorithm>

namespace hcc {

Sym dsym(const Sym &coord) { return Sym("d:" + coord.name()); }

bool is_differential(const Sym &g) { return g.name().rfind("d:", 0) == 0; }

Sym coord_of(const Sym &g)
{
	if (!is_differential(g))
		throw Error("not a differential generator: " + g.name());
	return Sym(std::string_view(g.name()).substr(2));
}

namespace {

// Sort generators in place; returns sign, or 0 on repetition.
int sort_sign(std::vector<Sym> &v)
{
	int sign = 1;
	for (size_t i = 1; i < v.size(); ++i)
		for (size_t j = i; j > 0 && v[j] < v[j - 1]; --j) {
			std::swap(v[j], v[j - 1]);
			sign = -sign;
		}
	for (size_t i = 1; i < v.size(); ++i)
		if (v[i] == v[i - 1])
			return 0;
	return sign;
}

} // namespace

PolyForm::PolyForm(const ScalarExpr &s)
{
	if (!s.is_zero())
		t_[{}] = s;
}

PolyForm PolyForm::gen(const Sym &g)
{
	PolyForm r;
	r.t_[{g}] = ScalarExpr(1);
	return r;
}

PolyForm PolyForm::monomial(std::vector<Sym> gens, const ScalarExpr &c)
{
	PolyForm r;
	int s = sort_sign(gens);
	if (s != 0)
		r.add(gens, s > 0 ? c : -c);
	return r;
}

void PolyForm::add(const Key &k, const ScalarExpr &c)
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

int PolyForm::degree() const
{
	if (t_.empty())
		return -1;
	int d = static_cast<int>(t_.begin()->first.size());
	for (auto &[k, c] : t_)
		if (static_cast<int>(k.size()) != d)
			throw Error("form is not homogeneous: " + text());
	return d;
}

PolyForm PolyForm::homogeneous_part(int k) const
{
	PolyForm r;
	for (auto &[key, c] : t_)
		if (static_cast<int>(key.size()) == k)
			r.t_.emplace(key, c);
	return r;
}

ScalarExpr PolyForm::coeff(const Key &k) const
{
	auto it = t_.find(k);
	return it == t_.end() ? ScalarExpr() : it->second;
}

PolyForm PolyForm::operator-() const
{
	PolyForm r = *this;
	for (auto &[k, c] : r.t_)
		c = -c;
	return r;
}

PolyForm &PolyForm::operator+=(const PolyForm &o)
{
	for (auto &[k, c] : o.t_)
		add(k, c);
	return *this;
}

PolyForm &PolyForm::operator-=(const PolyForm &o)
{
	for (auto &[k, c] : o.t_)
		add(k, -c);
	return *this;
}

PolyForm &PolyForm::operator*=(const ScalarExpr &s)
{
	Terms n;
	for (auto &[k, c] : t_) {
		ScalarExpr v = c * s;
		if (!v.is_zero())
			n.emplace(k, std::move(v));
	}
	t_ = std::move(n);
	return *this;
}

PolyForm PolyForm::wedge(const PolyForm &o) const
{
	PolyForm r;
	for (auto &[ka, ca] : t_)
		for (auto &[kb, cb] : o.t_) {
			std::vector<Sym> k = ka;
			k.insert(k.end(), kb.begin(), kb.end());
			int s = sort_sign(k);
			if (s == 0)
				continue;
			ScalarExpr c = ca * cb;
			r.add(k, s > 0 ? c : -c);
		}
	return r;
}

PolyForm PolyForm::d(const std::vector<Sym> &coords) const
{
	PolyForm r;
	for (auto &[k, c] : t_)
		for (auto &x : coords) {
			ScalarExpr dc = c.diff(x);
			if (dc.is_zero())
				continue;
			std::vector<Sym> key{dsym(x)};
			key.insert(key.end(), k.begin(), k.end());
			int s = sort_sign(key);
			if (s != 0)
				r.add(key, s > 0 ? dc : -dc);
		}
	return r;
}

PolyForm PolyForm::pullback(const std::map<Sym, ScalarExpr> &subst, const std::vector<Sym> &coords) const
{
	std::map<Sym, PolyForm> gens;
	for (auto &[k, c] : t_)
		for (auto &g : k) {
			if (!is_differential(g) || gens.count(g))
				continue;
			Sym x = coord_of(g);
			auto it = subst.find(x);
			if (it == subst.end())
				throw Error("pullback: no substitution for coordinate " + x.name());
			gens.emplace(g, PolyForm(it->second).d(coords));
		}
	PolyForm r;
	for (auto &[k, c] : t_) {
		PolyForm term(c.subst(subst));
		for (auto &g : k)
			term = term.wedge(is_differential(g) ? gens.at(g) : PolyForm::gen(g));
		r += term;
	}
	return r;
}

PolyForm PolyForm::subst_coeffs(const std::map<Sym, ScalarExpr> &subst) const
{
	PolyForm r;
	for (auto &[k, c] : t_)
		r.add(k, c.subst(subst));
	return r;
}

PolyForm PolyForm::substitute_generators(const std::map<Sym, PolyForm> &g) const
{
	PolyForm r;
	for (auto &[k, c] : t_) {
		PolyForm term(c);
		for (auto &s : k) {
			auto it = g.find(s);
			term = term.wedge(it == g.end() ? PolyForm::gen(s) : it->second);
		}
		r += term;
	}
	return r;
}

PolyForm PolyForm::contract(const Sym &g) const
{
	PolyForm r;
	for (auto &[k, c] : t_) {
		auto it = std::find(k.begin(), k.end(), g);
		if (it == k.end())
			continue;
		auto pos = it - k.begin();
		Key k2 = k;
		k2.erase(k2.begin() + pos);
		r.add(k2, pos % 2 ? -c : c);
	}
	return r;
}

PolyForm PolyForm::drop(const std::vector<Sym> &gens) const
{
	PolyForm r;
	for (auto &[k, c] : t_) {
		bool hit = false;
		for (auto &g : k)
			hit = hit || std::find(gens.begin(), gens.end(), g) != gens.end();
		if (!hit)
			r.t_.emplace(k, c);
	}
	return r;
}

std::string gen_text(const Sym &g)
{
	return is_differential(g) ? "d" + text_name(coord_of(g).name()) : text_name(g.name());
}

std::string gen_latex(const Sym &g)
{
	return is_differential(g) ? "d" + latex_name(coord_of(g).name()) : latex_name(g.name());
}

std::string gen_expr(const Sym &g)
{
	return is_differential(g) ? "d(" + coord_of(g).name() + ")" : g.name();
}

namespace {

template <class G, class C>
std::string render(const PolyForm::Terms &t, G gen, C coef, const std::string &wedge, const std::string &times)
{
	if (t.empty())
		return "0";
	std::string s;
	bool first = true;
	for (auto &[k, c] : t) {
		std::string g;
		for (size_t i = 0; i < k.size(); ++i)
			g += (i ? wedge : "") + gen(k[i]);
		std::string cs = coef(c);
		bool single = c.terms().size() == 1;
		std::string body;
		if (k.empty())
			body = single || first ? cs : "(" + cs + ")";
		else if (c == ScalarExpr(1))
			body = g;
		else if (c == ScalarExpr(-1))
			body = "-" + g;
		else
			body = (single ? cs : "(" + cs + ")") + times + g;
		if (first)
			s = body;
		else if (body[0] == '-')
			s += " - " + body.substr(1);
		else
			s += " + " + body;
		first = false;
	}
	return s;
}

} // namespace

std::string PolyForm::text() const
{
	return render(t_, gen_text, [](const ScalarExpr &c) { return c.text(); }, "∧", "·");
}

std::string PolyForm::latex() const
{
	return render(t_, gen_latex, [](const ScalarExpr &c) { return c.latex(); }, " \\wedge ", " ");
}

std::string PolyForm::expr() const
{
	return render(t_, gen_expr, [](const ScalarExpr &c) { return c.expr(); }, "*", "*");
}

} // namespace hcc
