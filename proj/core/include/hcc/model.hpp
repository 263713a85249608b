#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hcc/group.hpp"
#include "hcc/lie.hpp"

namespace hcc {

// Thrown for malformed model documents and selectors (CLI exit code 2).
class ParseError : public Error {
  public:
	using Error::Error;
};

struct Model {
	std::string name;
	MatchedPairLie lie;
	std::optional<GroupModel> group;
	std::vector<std::string> classes; // pipeline selection

	size_t d1() const { return lie.g1.dim(); }
	size_t d2() const { return lie.g2.dim(); }
	LieAlgebra algebra() const { return bicrossed_lie(lie); }
	const GroupModel &grp() const;
};

Model parse_model(const std::string &json_text);
// Path or "builtin:<name>".
Model load_model(const std::string &where);
Model builtin_model(const std::string &name);
std::vector<std::string> builtin_names();

// Coframe generator theta_<k>, 1-based.
Sym coframe_sym(int k);
PolyForm cochain_to_form(const LieCochain &c);
LieCochain form_to_cochain(const PolyForm &f);

// "theta_2*theta_3*theta_4" or "<degree>:<index>" into the cohomology table.
LieCochain select_class(const Model &m, const std::string &selector);

} // namespace hcc
