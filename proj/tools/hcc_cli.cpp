#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hcc/model.hpp"
#include "hcc/report.hpp"

using namespace hcc;

namespace {

int run(const std::string &cmd, const std::string &model, const std::string &cls, const std::string &fmt,
        const std::string &check, int degree_bound)
{
	Format f = parse_format(fmt);
	Model m = load_model(model);
	std::string out;
	int code = 0;
	if (cmd == "validate") {
		auto lines = validate_model(m, check, degree_bound);
		out = format_report(lines);
		code = report_ok(lines) ? 0 : 1;
	} else if (cmd == "cohomology") {
		if (!m.lie.validate().empty() || !m.lie.g1.check().empty() || !m.lie.g2.check().empty()) {
			std::cerr << "model is not a valid matched pair; run validate\n";
			return 1;
		}
		out = cohomology_report(m, f);
	} else {
		std::vector<std::string> sel;
		if (!cls.empty())
			sel.push_back(cls);
		else
			sel = m.classes;
		if (sel.empty()) {
			std::cerr << "no class selected and the model has no pipeline classes\n";
			return 1;
		}
		for (auto &s : sel) {
			LieCochain w = select_class(m, s);
			out += realize_report(m, w, s, f);
		}
	}
	// written only once everything succeeded
	std::cout << out << std::flush;
	return code;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"hcc: Hopf cyclic cocycles from matched pairs of Lie groups"};
	app.require_subcommand(1);
	std::string model = "builtin:diamond", cls, fmt = "text", check = "all";
	int degree_bound = 3;
	app.add_option("--model", model, "model file or builtin:<name>");
	app.add_option("--class", cls, "class name or degree:index");
	app.add_option("--format", fmt, "text, latex or expr");
	app.add_option("--check", check, "all, lie, group, hopf, trace, cyclic, cochain, bicomplex");
	app.add_option("--degree-bound", degree_bound, "PBW degree bound for the Hopf suites")->check(CLI::Range(1, 6));
	for (auto &[n, d] : {std::pair{"validate", "run the axiom and property suites"},
	                     std::pair{"cohomology", "Betti numbers and representatives"},
	                     std::pair{"realize", "E, Theta and Phi for the selected classes"}})
		app.add_subcommand(n, d)->fallthrough();
	app.add_subcommand("builtins", "list builtin models")->fallthrough();
	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp &e) {
		return app.exit(e);
	} catch (const CLI::ParseError &e) {
		app.exit(e);
		return 2;
	}
	std::string cmd = app.get_subcommands().front()->get_name();
	if (cmd == "builtins") {
		for (auto &n : builtin_names())
			std::cout << n << "\n";
		return 0;
	}
	try {
		return run(cmd, model, cls, fmt, check, degree_bound);
	} catch (const ParseError &e) {
		std::cerr << "parse error: " << e.what() << "\n";
		return 2;
	} catch (const Error &e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
}
