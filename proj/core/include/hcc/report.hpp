#pragma once

#include <string>
#include <vector>

#include "hcc/bicomplex.hpp"
#include "hcc/phi.hpp"

namespace hcc {

enum class Format { Text, Latex, Expr };
Format parse_format(const std::string &s);

struct ReportLine {
	std::string name, status, detail; // status PASS, FAIL or SKIP
};

ReportLine from_check(const Check &c);
std::string format_report(const std::vector<ReportLine> &lines);
bool report_ok(const std::vector<ReportLine> &lines);

// Axiom and property suites selected by category: all, lie, group, hopf,
// trace, cyclic, cochain, bicomplex. degree_bound caps the U degree.
std::vector<ReportLine> validate_model(const Model &m, const std::string &category, int degree_bound = 3);

std::string cohomology_report(const Model &m, Format f);

// Lie cochain in the coframe theta_1..theta_n
std::string cochain_text(const LieCochain &w, Format f);
// E-component as a form in the g1 coframe with vertex-polynomial coefficients
PolyForm gcochain_form(const GCochain &c);
std::string integral_latex(const Integral &v, const std::vector<Sym> &coords);
std::string render(const PolyForm &f, Format fmt);
std::string render(const Integral &v, const std::vector<Sym> &coords, Format fmt);

// One line per item; throws Error when w is not closed.
std::string realize_report(const Model &m, const LieCochain &w, const std::string &label, Format f);

// Golden files hold one expression (expr grammar); '#' lines are comments.
std::string read_golden(const std::string &path);
// int{f0,f1[1]}(coeff) + ... as written by Integral::expr
Integral parse_integral(const std::string &src, size_t dim_g1);

} // namespace hcc
