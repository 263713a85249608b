#include "hcc/model.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace hcc {

using nlohmann::json;

namespace {

const char *kDiamond = R"({
  "name": "diamond",
  "g1": {"basis": ["T"], "brackets": []},
  "g2": {"basis": ["X", "Y", "Z"], "brackets": [["X", "Y", "Z", "1"]]},
  "action_left": [],
  "action_right": [["X", "T", "Y", "1"], ["Y", "T", "X", "-1"]],
  "group": {
    "g1": {"coords": ["theta"]},
    "g2": {"coords": ["x", "y", "z"]},
    "mul": {
      "g1": ["theta.1 + theta.2"],
      "g2": ["x.1 + x.2", "y.1 + y.2", "z.1 + z.2 + 1/2*x.1*y.2 - 1/2*y.1*x.2"]
    },
    "inv": {"g1": ["-theta"], "g2": ["-x", "-y", "-z"]},
    "act_left": ["theta"],
    "act_right": ["cos(theta)*x + sin(theta)*y", "cos(theta)*y - sin(theta)*x", "z"]
  },
  "h2": [],
  "pipeline": {"classes": ["1", "theta_1", "theta_2*theta_3*theta_4", "theta_1*theta_2*theta_3*theta_4"]}
})";

const char *kHeisenberg = R"({
  "name": "heisenberg",
  "g1": {"basis": [], "brackets": []},
  "g2": {"basis": ["X", "Y", "Z"], "brackets": [["X", "Y", "Z", "1"]]},
  "action_left": [],
  "action_right": [],
  "group": {
    "g1": {"coords": []},
    "g2": {"coords": ["x", "y", "z"]},
    "bch": true,
    "act_left": [],
    "act_right": ["x", "y", "z"]
  },
  "h2": [],
  "pipeline": {"classes": []}
})";

const char *kAbelian = R"({
  "name": "abelian",
  "g1": {"basis": ["A"], "brackets": []},
  "g2": {"basis": ["B"], "brackets": []},
  "action_left": [],
  "action_right": [],
  "group": {
    "g1": {"coords": ["a"]},
    "g2": {"coords": ["b"]},
    "mul": {"g1": ["a.1 + a.2"], "g2": ["b.1 + b.2"]},
    "inv": {"g1": ["-a"], "g2": ["-b"]},
    "act_left": ["a"],
    "act_right": ["b"]
  },
  "h2": [],
  "pipeline": {"classes": ["1", "theta_1", "theta_2", "theta_1*theta_2"]}
})";

const char *kShear = R"({
  "name": "shear",
  "g1": {"basis": ["A", "B"], "brackets": []},
  "g2": {"basis": ["S"], "brackets": []},
  "action_left": [["S", "B", "A", "1"]],
  "action_right": [],
  "group": {
    "g1": {"coords": ["a", "b"]},
    "g2": {"coords": ["s"]},
    "mul": {"g1": ["a.1 + a.2", "b.1 + b.2"], "g2": ["s.1 + s.2"]},
    "inv": {"g1": ["-a", "-b"], "g2": ["-s"]},
    "act_left": ["a + s*b", "b"],
    "act_right": ["s"]
  },
  "h2": [],
  "pipeline": {"classes": []}
})";

const char *kHeisenbergR3 = R"({
  "name": "heisenberg_r3",
  "g1": {"basis": ["X", "Y", "Z"], "brackets": [["X", "Y", "Z", "1"]]},
  "g2": {"basis": ["P1", "P2", "P3"], "brackets": []},
  "action_left": [],
  "action_right": [["P1", "X", "P2", "1"], ["P2", "Y", "P3", "1"], ["P1", "Z", "P3", "1"]],
  "group": {
    "g1": {"coords": ["u", "v", "w"]},
    "g2": {"coords": ["p1", "p2", "p3"]},
    "mul": {
      "g1": ["u.1 + u.2", "v.1 + v.2", "w.1 + w.2 + 1/2*u.1*v.2 - 1/2*v.1*u.2"],
      "g2": ["p1.1 + p1.2", "p2.1 + p2.2", "p3.1 + p3.2"]
    },
    "inv": {"g1": ["-u", "-v", "-w"], "g2": ["-p1", "-p2", "-p3"]},
    "act_left": ["u", "v", "w"],
    "act_right": ["p1", "p2 + u*p1", "p3 + w*p1 + 1/2*u*v*p1 + v*p2"]
  },
  "h2": [],
  "pipeline": {"classes": ["1"]}
})";

const char *kNonUnimodular = R"({
  "name": "nonunimodular",
  "g1": {"basis": ["A", "B"], "brackets": [["A", "B", "B", "1"]]},
  "g2": {"basis": [], "brackets": []},
  "action_left": [],
  "action_right": [],
  "h2": [],
  "pipeline": {"classes": []}
})";

const char *kHeisenbergG1 = R"({
  "name": "heisenberg_g1",
  "g1": {"basis": ["X", "Y", "Z"], "brackets": [["X", "Y", "Z", "1"]]},
  "g2": {"basis": [], "brackets": []},
  "action_left": [],
  "action_right": [],
  "group": {
    "g1": {"coords": ["u", "v", "w"]},
    "g2": {"coords": []},
    "bch": true,
    "act_left": ["u", "v", "w"],
    "act_right": []
  },
  "h2": [],
  "pipeline": {"classes": []}
})";

const std::map<std::string, const char *> &builtins()
{
	static const std::map<std::string, const char *> b = {
	    {"abelian", kAbelian},           {"diamond", kDiamond}, {"heisenberg", kHeisenberg},
	    {"heisenberg_g1", kHeisenbergG1}, {"heisenberg_r3", kHeisenbergR3}, {"nonunimodular", kNonUnimodular}, {"shear", kShear},
	};
	return b;
}

Q parse_coeff(const json &j)
{
	try {
		if (j.is_number_integer())
			return Q(j.get<long>());
		if (j.is_string()) {
			Q q(j.get<std::string>());
			q.canonicalize();
			if (q.get_den() == 0)
				throw ParseError("zero denominator");
			return q;
		}
	} catch (const std::invalid_argument &) {
	}
	throw ParseError("bad rational literal: " + j.dump());
}

int resolve(const LieAlgebra &g, const json &j, const std::string &where)
{
	if (j.is_number_integer()) {
		int i = j.get<int>();
		if (i < 0 || static_cast<size_t>(i) >= g.dim())
			throw ParseError(where + ": index " + std::to_string(i) + " out of range");
		return i;
	}
	if (j.is_string()) {
		int i = g.index_of(j.get<std::string>());
		if (i < 0)
			throw ParseError(where + ": undeclared basis name '" + j.get<std::string>() + "'");
		return i;
	}
	throw ParseError(where + ": expected basis name or index");
}

LieAlgebra parse_algebra(const json &j, const std::string &where)
{
	if (!j.is_object() || !j.contains("basis") || !j["basis"].is_array())
		throw ParseError(where + ".basis missing");
	std::vector<std::string> basis;
	std::set<std::string> seen;
	for (auto &b : j["basis"]) {
		if (!b.is_string())
			throw ParseError(where + ".basis entries must be strings");
		if (!seen.insert(b.get<std::string>()).second)
			throw ParseError(where + ".basis repeats '" + b.get<std::string>() + "'");
		basis.push_back(b.get<std::string>());
	}
	LieAlgebra g(basis);
	if (j.contains("brackets"))
		for (auto &e : j["brackets"]) {
			if (!e.is_array() || e.size() != 4)
				throw ParseError(where + ".brackets entries are [i, j, k, coeff]");
			int a = resolve(g, e[0], where), b = resolve(g, e[1], where), c = resolve(g, e[2], where);
			if (a == b)
				throw ParseError(where + ".brackets: [e, e] must vanish");
			Q q = parse_coeff(e[3]);
			g.add_structure_constant(a, b, c, q);
			g.add_structure_constant(b, a, c, -q);
		}
	return g;
}

std::vector<Sym> parse_coords(const json &j, const std::string &where)
{
	if (!j.is_object() || !j.contains("coords") || !j["coords"].is_array())
		throw ParseError(where + ".coords missing");
	std::vector<Sym> c;
	for (auto &x : j["coords"]) {
		if (!x.is_string())
			throw ParseError(where + ".coords entries must be strings");
		c.emplace_back(x.get<std::string>());
	}
	return c;
}

std::vector<ScalarExpr> parse_exprs(const json &j, size_t n, const std::set<Sym> &allowed, const std::string &where)
{
	if (!j.is_array() || j.size() != n)
		throw ParseError(where + ": expected " + std::to_string(n) + " expressions");
	std::vector<ScalarExpr> out;
	for (auto &e : j) {
		if (!e.is_string())
			throw ParseError(where + ": expressions are strings");
		ScalarExpr s;
		try {
			s = parse_scalar(e.get<std::string>());
		} catch (const Error &err) {
			throw ParseError(where + ": " + err.what());
		}
		for (auto &v : s.variables())
			if (!allowed.count(v))
				throw ParseError(where + ": unknown variable '" + v.name() + "'");
		out.push_back(s);
	}
	return out;
}

GroupModel parse_group(const json &j, const MatchedPairLie &lie)
{
	GroupModel g;
	g.c1 = parse_coords(j.value("g1", json::object()), "group.g1");
	g.c2 = parse_coords(j.value("g2", json::object()), "group.g2");
	if (g.c1.size() != lie.g1.dim() || g.c2.size() != lie.g2.dim())
		throw ParseError("group coordinates do not match the algebra dimensions");
	std::set<Sym> all;
	for (auto &c : g.c1)
		all.insert(c);
	for (auto &c : g.c2)
		all.insert(c);
	if (all.size() != g.c1.size() + g.c2.size())
		throw ParseError("group coordinate names must be distinct");
	auto two_point = [](const std::vector<Sym> &c) {
		std::set<Sym> s;
		for (auto &x : c) {
			s.insert(point_sym(x, 1));
			s.insert(point_sym(x, 2));
		}
		return s;
	};
	auto plain = [](const std::vector<Sym> &c) { return std::set<Sym>(c.begin(), c.end()); };
	bool bch = j.value("bch", false);
	auto law = [&](const char *which, const std::vector<Sym> &c, const LieAlgebra &alg, std::vector<ScalarExpr> &mul,
	               std::vector<ScalarExpr> &inv) {
		bool have = j.contains("mul") && j["mul"].contains(which);
		if (have) {
			mul = parse_exprs(j["mul"][which], c.size(), two_point(c), std::string("group.mul.") + which);
			if (!j.contains("inv") || !j["inv"].contains(which))
				throw ParseError(std::string("group.inv.") + which + " missing");
			inv = parse_exprs(j["inv"][which], c.size(), plain(c), std::string("group.inv.") + which);
		} else if (bch) {
			try {
				bch_law(alg, c, mul, inv);
			} catch (const Error &e) {
				throw ParseError(std::string("group.bch.") + which + ": " + e.what());
			}
		} else {
			throw ParseError(std::string("group.mul.") + which + " missing (and bch not requested)");
		}
	};
	law("g1", g.c1, lie.g1, g.mul1, g.inv1);
	law("g2", g.c2, lie.g2, g.mul2, g.inv2);
	if (!j.contains("act_left") || !j.contains("act_right"))
		throw ParseError("group.act_left / group.act_right missing");
	g.left = parse_exprs(j["act_left"], g.c1.size(), all, "group.act_left");
	g.right = parse_exprs(j["act_right"], g.c2.size(), all, "group.act_right");
	return g;
}

} // namespace

const GroupModel &Model::grp() const
{
	if (!group)
		throw Error("model '" + name + "' has no group section");
	return *group;
}

Model parse_model(const std::string &text)
{
	json j;
	try {
		j = json::parse(text);
	} catch (const json::parse_error &e) {
		throw ParseError(std::string("json: ") + e.what());
	}
	if (!j.is_object())
		throw ParseError("model document must be an object");
	Model m;
	m.name = j.value("name", "model");
	m.lie.g1 = parse_algebra(j.value("g1", json()), "g1");
	m.lie.g2 = parse_algebra(j.value("g2", json()), "g2");
	m.lie = MatchedPairLie::trivial(m.lie.g1, m.lie.g2);
	auto actions = [&](const char *key, bool left) {
		if (!j.contains(key))
			return;
		for (auto &e : j[key]) {
			if (!e.is_array() || e.size() != 4)
				throw ParseError(std::string(key) + " entries are [a2, i1, k, coeff]");
			int a = resolve(m.lie.g2, e[0], key);
			int i = resolve(m.lie.g1, e[1], key);
			Q c = parse_coeff(e[3]);
			if (left)
				m.lie.left[a][i][resolve(m.lie.g1, e[2], key)] += c;
			else
				m.lie.right[a][i][resolve(m.lie.g2, e[2], key)] += c;
		}
	};
	actions("action_left", true);
	actions("action_right", false);
	if (j.contains("group") && !j["group"].is_null())
		m.group = parse_group(j["group"], m.lie);
	if (j.contains("h2") && j["h2"].is_array() && !j["h2"].empty()) {
		if (!m.group)
			throw ParseError("h2 given without a group section");
		for (auto &h : j["h2"])
			m.group->h2.emplace_back(h.is_string() ? h.get<std::string>() : h.dump());
	}
	if (j.contains("pipeline") && j["pipeline"].contains("classes"))
		for (auto &c : j["pipeline"]["classes"]) {
			if (!c.is_string())
				throw ParseError("pipeline.classes entries are strings");
			m.classes.push_back(c.get<std::string>());
		}
	return m;
}

Model builtin_model(const std::string &name)
{
	auto it = builtins().find(name);
	if (it == builtins().end())
		throw ParseError("unknown builtin model '" + name + "'");
	return parse_model(it->second);
}

std::vector<std::string> builtin_names()
{
	std::vector<std::string> n;
	for (auto &[k, v] : builtins())
		n.push_back(k);
	return n;
}

Model load_model(const std::string &where)
{
	if (where.rfind("builtin:", 0) == 0)
		return builtin_model(where.substr(8));
	std::ifstream in(where);
	if (!in)
		throw ParseError("cannot open model file '" + where + "'");
	std::stringstream ss;
	ss << in.rdbuf();
	return parse_model(ss.str());
}

Sym coframe_sym(int k) { return Sym("theta_" + std::to_string(k)); }

PolyForm cochain_to_form(const LieCochain &c)
{
	PolyForm f;
	for (auto &[k, q] : c) {
		std::vector<Sym> g;
		for (int i : k)
			g.push_back(coframe_sym(i + 1));
		f += PolyForm::monomial(g, ScalarExpr(q));
	}
	return f;
}

LieCochain form_to_cochain(const PolyForm &f)
{
	LieCochain c;
	for (auto &[k, s] : f.terms()) {
		if (!s.is_constant())
			throw ParseError("class coefficients must be rational: " + s.text());
		std::vector<int> idx;
		for (auto &g : k) {
			const std::string &n = g.name();
			if (n.rfind("theta_", 0) != 0)
				throw ParseError("class generators must be theta_<k>, got '" + gen_expr(g) + "'");
			idx.push_back(std::stoi(n.substr(6)) - 1);
		}
		LieCochain b = lc_basis(idx);
		for (auto &[bk, bc] : b)
			lc_add(c, bk, bc * s.constant());
	}
	return c;
}

LieCochain select_class(const Model &m, const std::string &sel)
{
	size_t n = m.d1() + m.d2();
	auto colon = sel.find(':');
	if (colon != std::string::npos) {
		int deg = 0, idx = 0;
		try {
			deg = std::stoi(sel.substr(0, colon));
			idx = std::stoi(sel.substr(colon + 1));
		} catch (const std::exception &) {
			throw ParseError("bad class selector '" + sel + "'");
		}
		Cohomology h = ce_cohomology(m.algebra());
		if (deg < 0 || static_cast<size_t>(deg) >= h.reps.size() || idx < 0 ||
		    static_cast<size_t>(idx) >= h.reps[static_cast<size_t>(deg)].size())
			throw ParseError("class selector '" + sel + "' out of range");
		return h.reps[static_cast<size_t>(deg)][static_cast<size_t>(idx)];
	}
	PolyForm f;
	try {
		f = parse_form(sel);
	} catch (const Error &e) {
		throw ParseError(std::string("class: ") + e.what());
	}
	LieCochain c = form_to_cochain(f);
	for (auto &[k, q] : c)
		for (int i : k)
			if (i < 0 || static_cast<size_t>(i) >= n)
				throw ParseError("class '" + sel + "' uses a generator beyond the dimension");
	return c;
}

} // namespace hcc
