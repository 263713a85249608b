#include "hcc/report.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <sstream>

namespace hcc {

Format parse_format(const std::string &s)
{
	if (s == "text")
		return Format::Text;
	if (s == "latex")
		return Format::Latex;
	if (s == "expr")
		return Format::Expr;
	throw ParseError("unknown format '" + s + "' (text, latex, expr)");
}

ReportLine from_check(const Check &c) { return {c.name, c.ok ? "PASS" : "FAIL", c.detail}; }

std::string format_report(const std::vector<ReportLine> &lines)
{
	std::string out;
	for (auto &l : lines) {
		std::string d = l.detail;
		std::replace(d.begin(), d.end(), '\n', ' ');
		std::replace(d.begin(), d.end(), '\t', ' ');
		out += l.name + "\t" + l.status + "\t" + d + "\n";
	}
	return out;
}

bool report_ok(const std::vector<ReportLine> &lines)
{
	return std::none_of(lines.begin(), lines.end(), [](const ReportLine &l) { return l.status == "FAIL"; });
}

namespace {

void push_checks(std::vector<ReportLine> &out, const std::vector<Check> &cs)
{
	for (auto &c : cs)
		out.push_back(from_check(c));
}

// "lie.jacobi X,Y,Z" -> one FAIL line per violation, a single PASS line otherwise
void lie_family(std::vector<ReportLine> &out, const std::string &name, const std::vector<std::string> &viol,
                const std::string &where)
{
	bool any = false;
	for (auto &v : viol) {
		auto sp = v.find(' ');
		std::string n = v.substr(0, sp);
		if (n != name)
			continue;
		any = true;
		out.push_back({name, "FAIL", where + " " + (sp == std::string::npos ? "" : v.substr(sp + 1))});
	}
	if (!any)
		out.push_back({name, "PASS", where});
}

void lie_suite(std::vector<ReportLine> &out, const Model &m)
{
	std::vector<std::string> v1 = m.lie.g1.check(), v2 = m.lie.g2.check();
	for (auto &n : {"lie.antisym", "lie.jacobi"}) {
		lie_family(out, n, v1, "g1");
		lie_family(out, n, v2, "g2");
	}
	auto mp = m.lie.validate();
	for (auto &n : {"lie.matched.cond1", "lie.matched.cond2", "lie.matched.cond3", "lie.matched.cond4"})
		lie_family(out, n, mp, "g1 x g2");
	if (!mp.empty() || !v1.empty() || !v2.empty())
		return;
	LieAlgebra g = m.algebra();
	lie_family(out, "lie.jacobi", g.check(), "g1 + g2");
	Cohomology h = ce_cohomology(g);
	std::string bad;
	int euler = 0;
	for (size_t k = 0; k < h.betti.size(); ++k) {
		euler += (k % 2 ? -1 : 1) * h.betti[k];
		for (auto &r : h.reps[k])
			if (!ce_d(g, r).empty() && bad.empty())
				bad = "representative in degree " + std::to_string(k) + " is not closed";
	}
	std::string betti;
	for (int b : h.betti)
		betti += (betti.empty() ? "" : " ") + std::to_string(b);
	out.push_back({"lie.cohomology.closed_representatives", bad.empty() ? "PASS" : "FAIL", bad.empty() ? betti : bad});
	bool euler_ok = g.dim() == 0 ? euler == 1 : euler == 0;
	out.push_back({"lie.cohomology.euler", euler_ok ? "PASS" : "FAIL", "chi = " + std::to_string(euler)});
}

template <class F> void guarded(std::vector<ReportLine> &out, const std::string &cat, F f)
{
	try {
		f();
	} catch (const Error &e) {
		out.push_back({cat + ".error", "FAIL", e.what()});
	}
}

} // namespace

std::vector<ReportLine> validate_model(const Model &m, const std::string &category, int degree_bound)
{
	static const std::vector<std::string> cats{"lie", "group", "hopf", "trace", "cyclic", "cochain", "bicomplex"};
	if (category != "all" && std::find(cats.begin(), cats.end(), category) == cats.end())
		throw ParseError("unknown check category '" + category + "'");
	auto want = [&](const std::string &c) { return category == "all" || category == c; };
	int udeg = std::max(1, degree_bound), rdeg = std::min(2, udeg);
	std::vector<ReportLine> out;
	if (want("lie"))
		guarded(out, "lie", [&] { lie_suite(out, m); });
	bool lie_ok = m.lie.validate().empty() && m.lie.g1.check().empty() && m.lie.g2.check().empty();
	auto skip = [&](const std::string &c, const std::string &why) { out.push_back({c, "SKIP", why}); };
	if (want("group")) {
		if (!m.group)
			skip("group", "no group section");
		else
			guarded(out, "group", [&] { push_checks(out, m.group->check_axioms()); });
	}
	bool need_h = want("hopf") || want("trace") || want("cyclic") || want("bicomplex");
	if (!need_h && !want("cochain"))
		return out;
	if (!lie_ok) {
		skip("hopf", "Lie data invalid");
		return out;
	}
	std::unique_ptr<Hopf> h;
	try {
		h = std::make_unique<Hopf>(m);
	} catch (const Error &e) {
		if (need_h)
			skip("hopf", e.what());
	}
	if (h && want("hopf"))
		guarded(out, "hopf", [&] {
			push_checks(out, check_rep_hopf(*h, rdeg));
			push_checks(out, check_u_hopf(*h, udeg));
			push_checks(out, check_h_hopf(*h, rdeg, std::min(2, udeg)));
			push_checks(out, check_matched_hopf(*h, rdeg, udeg));
			push_checks(out, check_mpi(*h, rdeg));
			push_checks(out, check_sayd(*h, std::min(1, rdeg), std::min(2, udeg)));
		});
	if (h && want("trace")) {
		if (!m.group || m.d1() == 0)
			skip("trace", "needs a group section and dim g1 > 0");
		else
			try {
				Conv cv(m);
				push_checks(out, check_trace_identities(*h, cv, 60));
			} catch (const Error &e) {
				skip("trace", e.what());
			}
	}
	if (h && want("cyclic"))
		guarded(out, "cyclic", [&] {
			CyclicModule c(*h);
			push_checks(out, check_cyclic(c, 3, 4));
		});
	std::vector<std::pair<std::string, LieCochain>> classes;
	for (auto &cl : m.classes)
		classes.emplace_back(cl, select_class(m, cl));
	if (want("cochain")) {
		if (!m.group)
			skip("cochain", "no group section");
		else
			guarded(out, "cochain", [&] {
				CochainMaps cm(m);
				for (auto &[cl, w] : classes) {
					push_checks(out, check_chain_map(cm, w, cl));
					push_checks(out, check_theta_roundtrip(cm, w, cl));
				}
				push_checks(out, check_j_roundtrip(cm, static_cast<int>(std::min<size_t>(4, m.d1() + m.d2()))));
			});
	}
	if (h && want("bicomplex"))
		guarded(out, "bicomplex", [&] {
			Bicomplex bc(*h);
			push_checks(out, check_poincare(bc));
			push_checks(out, check_step1(bc, 2, 4));
			push_checks(out, check_step2(bc, 2, 4));
			push_checks(out, check_psi_bowtie(bc, 2));
			push_checks(out, check_aw_sh(bc, 3, 2));
			if (m.group) {
				push_checks(out, check_step3(bc, 2, 4));
				CochainMaps cm(m);
				for (auto &[cl, w] : classes)
					push_checks(out, check_cross_module(bc, cm, w, cl));
			}
		});
	return out;
}

std::string render(const PolyForm &f, Format fmt)
{
	switch (fmt) {
	case Format::Latex:
		return f.latex();
	case Format::Expr:
		return f.expr();
	default:
		return f.text();
	}
}

std::string integral_latex(const Integral &v, const std::vector<Sym> &coords)
{
	if (v.is_zero())
		return "0";
	std::string meas;
	for (auto &c : coords)
		meas += "\\, d" + latex_name(c.name());
	std::string s;
	for (auto &[k, c] : v.terms()) {
		if (!s.empty())
			s += " + ";
		if (k.empty()) {
			s += "\\left(" + c.latex() + "\\right)";
			continue;
		}
		std::string fs;
		for (auto &f : k) {
			std::string n = f.name.name();
			std::string base = latex_name(n);
			int tot = 0;
			for (int d : f.der)
				tot += d;
			if (tot > 0 && f.der.size() == 1)
				base += std::string(static_cast<size_t>(tot), '\'');
			else if (tot > 0) {
				std::string idx;
				for (size_t i = 0; i < f.der.size(); ++i)
					idx += (i ? "," : "") + std::to_string(f.der[i]);
				base = "\\partial^{(" + idx + ")}" + base;
			}
			fs += base + " ";
		}
		s += "\\int \\left(" + c.latex() + "\\right) " + fs + meas;
	}
	return s;
}

std::string render(const Integral &v, const std::vector<Sym> &coords, Format fmt)
{
	switch (fmt) {
	case Format::Latex:
		return integral_latex(v, coords);
	case Format::Expr:
		return v.expr();
	default:
		return v.text(coords);
	}
}

std::string cochain_text(const LieCochain &w, Format f) { return render(cochain_to_form(w), f); }

PolyForm gcochain_form(const GCochain &c)
{
	PolyForm f;
	for (auto &[I, v] : c.c) {
		std::vector<Sym> gens;
		for (int i : I)
			gens.push_back(coframe_sym(i + 1));
		f += PolyForm::monomial(gens, v);
	}
	return f;
}

std::string cohomology_report(const Model &m, Format f)
{
	Cohomology h = ce_cohomology(m.algebra());
	std::string betti;
	for (int b : h.betti)
		betti += (betti.empty() ? "" : " ") + std::to_string(b);
	std::string out = "betti\t" + betti + "\n";
	for (size_t k = 0; k < h.reps.size(); ++k) {
		if (h.reps[k].empty()) {
			out += "H^" + std::to_string(k) + "\t-\n";
			continue;
		}
		for (size_t i = 0; i < h.reps[k].size(); ++i)
			out += "H^" + std::to_string(k) + "[" + std::to_string(i) + "]\t" + cochain_text(h.reps[k][i], f) + "\n";
	}
	return out;
}

std::string realize_report(const Model &m, const LieCochain &w, const std::string &label, Format f)
{
	LieCochain dw = ce_d(m.algebra(), w);
	if (!dw.empty())
		throw Error("class " + label + " is not closed: d = " + cochain_text(dw, Format::Text));
	if (!m.group)
		throw Error("realize needs a group section");
	int deg = w.empty() ? 0 : static_cast<int>(w.begin()->first.size());
	for (auto &[k, c] : w)
		if (static_cast<int>(k.size()) != deg)
			throw Error("class " + label + " is not homogeneous");
	std::ostringstream os;
	os << "class\t" << cochain_text(w, f) << "\n";
	os << "degree\t" << deg << "\n";
	os << "parity\t" << (hp_parity(deg, m.d1()) ? "odd" : "even") << "\n";
	CochainMaps cm(m);
	std::unique_ptr<PhiMap> pm;
	std::string no_phi;
	try {
		pm = std::make_unique<PhiMap>(cm);
	} catch (const Error &e) {
		no_phi = e.what();
	}
	for (auto &e : cm.E_all(w)) {
		std::string bd = "(" + std::to_string(e.p) + "," + std::to_string(e.q) + ")";
		os << "E" << bd << "\t" << render(gcochain_form(e), f) << "\n";
		DCochain d = cm.Theta(e);
		os << "Theta" << bd << "\t" << render(d.f, f) << "\n";
		if (!pm) {
			os << "Phi" << bd << "\tunavailable\t" << no_phi << "\n";
			continue;
		}
		int l = pm->target_degree(d);
		Integral v = pm->phi(d, pm->probes(l, true));
		os << "Phi" << bd << "\tl=" << l << "\t" << render(v, pm->coords(), f) << "\n";
	}
	return os.str();
}

std::string read_golden(const std::string &path)
{
	std::ifstream in(path);
	if (!in)
		throw Error("cannot open golden file " + path);
	std::string line, out;
	while (std::getline(in, line)) {
		auto b = line.find_first_not_of(" \t\r");
		if (b == std::string::npos || line[b] == '#')
			continue;
		out += (out.empty() ? "" : " ") + line.substr(b);
	}
	return out;
}

Integral parse_integral(const std::string &src, size_t dim_g1)
{
	Integral r;
	size_t i = 0, n = src.size();
	auto skip_ws = [&] {
		while (i < n && (src[i] == ' ' || src[i] == '+'))
			++i;
	};
	// balanced (...) starting at src[i] == '('
	auto paren = [&]() {
		if (i >= n || src[i] != '(')
			throw ParseError("integral: expected '(' at offset " + std::to_string(i));
		int depth = 0;
		size_t start = i;
		for (; i < n; ++i) {
			if (src[i] == '(')
				++depth;
			else if (src[i] == ')' && --depth == 0) {
				++i;
				return src.substr(start + 1, i - start - 2);
			}
		}
		throw ParseError("integral: unbalanced parentheses");
	};
	skip_ws();
	if (src.substr(i) == "0")
		return r;
	while (i < n) {
		std::vector<FFactor> fs;
		if (src.compare(i, 4, "int{") == 0) {
			auto close = src.find('}', i);
			if (close == std::string::npos)
				throw ParseError("integral: missing '}'");
			std::string body = src.substr(i + 4, close - i - 4);
			i = close + 1;
			// split on commas outside brackets
			std::vector<std::string> parts;
			std::string cur;
			int br = 0;
			for (char ch : body) {
				if (ch == '[')
					++br;
				if (ch == ']')
					--br;
				if (ch == ',' && br == 0) {
					parts.push_back(cur);
					cur.clear();
				} else
					cur += ch;
			}
			parts.push_back(cur);
			for (auto &p : parts) {
				FFactor f;
				auto lb = p.find('[');
				f.name = Sym(p.substr(0, lb));
				f.der.assign(dim_g1, 0);
				if (lb != std::string::npos) {
					if (p.back() != ']')
						throw ParseError("bad factor '" + p + "'");
					std::stringstream ss(p.substr(lb + 1, p.size() - lb - 2));
					std::string tok;
					size_t k = 0;
					while (std::getline(ss, tok, ',')) {
						if (k >= dim_g1 || tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
							throw ParseError("bad derivative index in '" + p + "'");
						f.der[k++] = std::stoi(tok);
					}
					if (k != dim_g1)
						throw ParseError("derivative index of '" + p + "' needs " + std::to_string(dim_g1) + " entries");
				}
				fs.push_back(f);
			}
			std::sort(fs.begin(), fs.end());
		}
		ScalarExpr c = parse_scalar(paren());
		r.add(fs, c);
		skip_ws();
	}
	return r;
}

} // namespace hcc
