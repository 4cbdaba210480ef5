#include "symtan/text.hpp"

#include <cctype>
#include <limits>
#include <set>

#include "symtan/render.hpp"

namespace symtan {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument(position ? message + " at position " + std::to_string(position) : message),
      position_(position) {}

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& vars, const Semiring& sr)
      : text_(text), vars_(vars), sr_(sr) {}

  Polynomial<Gen> parse() {
    Polynomial<Gen> p = poly();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError("syntax error: " + what, pos_ + 1); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial<Gen> negated(const Polynomial<Gen>& p, std::size_t at) {
    if (!sr_.has_negatives()) throw ParseError("negation unavailable in semiring " + sr_.selector(), at + 1);
    Polynomial<Gen> out(sr_);
    for (const auto& [m, c] : p.terms()) out.add_term(m, sr_.negate(c));
    return out;
  }

  Polynomial<Gen> poly() {
    skip_space();
    Polynomial<Gen> out(sr_);
    const std::size_t lead = pos_;
    if (accept('-'))
      out = negated(term(), lead);
    else
      out = term();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('+'))
        out += term();
      else if (accept('-'))
        out += negated(term(), at);
      else
        return out;
    }
  }

  Polynomial<Gen> term() {
    Polynomial<Gen> out = factor();
    while (accept('*')) out = multiply(out, factor());
    return out;
  }

  BigInt natural() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a natural-number literal");
    return BigInt(text_.substr(start, pos_ - start));
  }

  Polynomial<Gen> factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    Polynomial<Gen> base(sr_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      base = poly();
      if (!accept(')')) fail("expected ')'");
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      base = constant_polynomial<Gen>(sr_, sr_.natural(natural()));
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string name = text_.substr(start, pos_ - start);
      std::size_t index = vars_.size();
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) index = i;
      if (index == vars_.size()) throw ParseError("undeclared variable '" + name + "'", start + 1);
      base = variable_polynomial(sr_, Gen{static_cast<std::uint32_t>(index)});
    } else {
      fail("unexpected '" + std::string(1, c) + "'");
    }
    if (accept('^')) {
      skip_space();
      const std::size_t at = pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("exponent must be a natural-number literal");
      BigInt e = natural();
      if (e > std::numeric_limits<std::uint32_t>::max()) throw ParseError("exponent too large", at + 1);
      base = power(base, static_cast<std::uint64_t>(e));
    }
    return base;
  }

  const std::string& text_;
  const std::vector<std::string>& vars_;
  const Semiring& sr_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::string> parse_variables(const std::string& csv) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = csv.find(',', start);
    std::string name = csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!is_identifier(name)) throw ParseError("invalid variable name '" + name + "'", 0);
    if (!seen.insert(name).second) throw ParseError("variable '" + name + "' declared twice", 0);
    out.push_back(std::move(name));
    if (comma == std::string::npos) return out;
    start = comma + 1;
  }
}

Polynomial<Gen> parse_polynomial(const std::string& text, const std::vector<std::string>& vars, const Semiring& sr) {
  return Parser(text, vars, sr).parse();
}

std::vector<Scalar> parse_scalars(const std::string& csv, const Semiring& sr) {
  std::vector<Scalar> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = csv.find(',', start);
    const std::string item = csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      out.push_back(sr.parse_scalar(item));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), 0);
    }
    if (comma == std::string::npos) return out;
    start = comma + 1;
  }
}

std::string format_derivative(const std::vector<std::string>& vars, const DerivativeElement<Gen>& d) {
  const Semiring& sr = d.semiring();
  std::vector<Polynomial<Gen>> groups(vars.size(), Polynomial<Gen>(sr));
  for (const auto& [key, c] : d.terms()) groups.at(std::get<1>(key).index).add_term(std::get<0>(key), c);
  const Names names{vars};
  std::string out;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (groups[i].is_zero()) continue;
    std::string coeff = render(names, groups[i]);
    if (groups[i].size() > 1) coeff = "(" + coeff + ")";
    if (out.empty())
      out = coeff;
    else if (coeff.front() == '-')
      out += " - " + coeff.substr(1);
    else
      out += " + " + coeff;
    out += " (" + vars[i] + ")";
  }
  return out.empty() ? "0" : out;
}

}  // namespace symtan
