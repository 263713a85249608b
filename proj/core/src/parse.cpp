#include <cctype>

#include "hcc/form.hpp"

namespace hcc {

namespace {

class Parser {
  public:
	explicit Parser(std::string_view s) : s_(s) {}

	PolyForm parse()
	{
		PolyForm r = sum();
		ws();
		if (i_ != s_.size())
			fail("unexpected trailing input");
		return r;
	}

  private:
	std::string_view s_;
	size_t i_ = 0;

	[[noreturn]] void fail(const std::string &msg) const
	{
		throw Error("parse error at offset " + std::to_string(i_) + " in '" + std::string(s_) + "': " + msg);
	}

	void ws()
	{
		while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
			++i_;
	}

	bool eat(char c)
	{
		ws();
		if (i_ < s_.size() && s_[i_] == c) {
			++i_;
			return true;
		}
		return false;
	}

	void expect(char c)
	{
		if (!eat(c))
			fail(std::string("expected '") + c + "'");
	}

	PolyForm sum()
	{
		PolyForm r = product();
		for (;;) {
			if (eat('+'))
				r += product();
			else if (eat('-'))
				r -= product();
			else
				return r;
		}
	}

	PolyForm product()
	{
		PolyForm r = unary();
		for (;;) {
			if (eat('*'))
				r = r.wedge(unary());
			else if (eat('/')) {
				PolyForm den = unary();
				if (den.degree() != 0 || !den.scalar().is_constant() || den.scalar().is_zero())
					fail("division only by nonzero rational constants");
				r *= ScalarExpr(Q(1) / den.scalar().constant());
			} else
				return r;
		}
	}

	PolyForm unary()
	{
		if (eat('-'))
			return -unary();
		if (eat('+'))
			return unary();
		return power();
	}

	PolyForm power()
	{
		PolyForm base = atom();
		if (eat('^')) {
			ws();
			size_t st = i_;
			while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
				++i_;
			if (st == i_)
				fail("expected non-negative integer exponent");
			int e = std::stoi(std::string(s_.substr(st, i_ - st)));
			if (base.degree() > 0)
				fail("power of a form of positive degree");
			return PolyForm(base.scalar().pow(e));
		}
		return base;
	}

	ScalarExpr scalar_arg()
	{
		expect('(');
		PolyForm a = sum();
		expect(')');
		if (a.degree() > 0)
			fail("function argument must be a scalar");
		return a.scalar();
	}

	PolyForm atom()
	{
		ws();
		if (i_ >= s_.size())
			fail("unexpected end of input");
		char c = s_[i_];
		if (c == '(') {
			++i_;
			PolyForm r = sum();
			expect(')');
			return r;
		}
		if (std::isdigit(static_cast<unsigned char>(c))) {
			size_t st = i_;
			while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
				++i_;
			return PolyForm(ScalarExpr(Q(mpz_class(std::string(s_.substr(st, i_ - st))))));
		}
		if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
			size_t st = i_;
			while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
				++i_;
			if (i_ + 1 < s_.size() && s_[i_] == '.' && std::isdigit(static_cast<unsigned char>(s_[i_ + 1]))) {
				++i_;
				while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
					++i_;
			}
			std::string name(s_.substr(st, i_ - st));
			ws();
			bool call = i_ < s_.size() && s_[i_] == '(';
			if (call && (name == "sin" || name == "cos")) {
				auto [sn, cs] = trig_of_linear(scalar_arg());
				return PolyForm(name == "sin" ? sn : cs);
			}
			if (call && name == "sqrt") {
				ScalarExpr a = scalar_arg();
				if (!a.is_constant() || a.constant().get_den() != 1)
					fail("sqrt takes an integer constant");
				return PolyForm(ScalarExpr::sqrt_int(a.constant().get_num().get_si()));
			}
			if (call && name == "exp") {
				ScalarExpr a = scalar_arg();
				if (!a.is_constant())
					fail("exp takes a rational constant");
				return PolyForm(ScalarExpr::exp_of(a.constant()));
			}
			if (call && name == "d") {
				expect('(');
				ws();
				size_t s2 = i_;
				while (i_ < s_.size() && s_[i_] != ')' && !std::isspace(static_cast<unsigned char>(s_[i_])))
					++i_;
				std::string coord(s_.substr(s2, i_ - s2));
				expect(')');
				if (coord.empty())
					fail("empty differential");
				return PolyForm::d(coord);
			}
			if (call)
				fail("unknown function '" + name + "'");
			if (name == "sqrtpi")
				return PolyForm(ScalarExpr::sqrt_pi());
			if (name.rfind("theta_", 0) == 0 && name.size() > 6 &&
			    std::isdigit(static_cast<unsigned char>(name[6])) && name.find('.') == std::string::npos)
				return PolyForm::gen(Sym(name)); // Lie coframe generator
			return PolyForm(ScalarExpr::var(name));
		}
		fail(std::string("unexpected character '") + c + "'");
	}
};

} // namespace

PolyForm parse_form(std::string_view src) { return Parser(src).parse(); }

ScalarExpr parse_scalar(std::string_view src)
{
	PolyForm f = parse_form(src);
	if (f.degree() > 0)
		throw Error("expected a scalar expression: " + std::string(src));
	return f.scalar();
}

} // namespace hcc
