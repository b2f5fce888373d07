#include "pvf/cli/expression.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <vector>

namespace pvf::cli {

namespace {

const char* alias_name(int n, AliasMode mode, int index) {
  static const char* xyz[] = {"x", "y", "z"};
  static const char* txyz[] = {"t", "x", "y", "z"};
  if (mode == AliasMode::xyz && n == 3) return xyz[index - 1];
  if (mode == AliasMode::txyz && n == 4) return txyz[index - 1];
  return nullptr;
}

// Resolves an identifier to (is_partial, 1-based index), or index 0 if unknown.
std::pair<bool, int> resolve(const std::string& id, int n) {
  bool partial = false;
  std::string name = id;
  if (name.size() > 1 && name[0] == 'd') {
    partial = true;
    name = name.substr(1);
  }
  auto digits = [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  if (partial && digits(name)) return {true, std::stoi(name)};
  if (!partial && name.size() > 1 && name[0] == 'x' && digits(name.substr(1))) {
    return {false, std::stoi(name.substr(1))};
  }
  if (name.size() == 1) {
    if (n == 3 && name[0] >= 'x' && name[0] <= 'z') return {partial, name[0] - 'x' + 1};
    if (n == 4 && name[0] == 't') return {partial, 1};
    if (n == 4 && name[0] >= 'x' && name[0] <= 'z') return {partial, name[0] - 'x' + 2};
  }
  return {partial, 0};
}

template <class Tag>
class Parser {
 public:
  Parser(const std::string& text, int n) : text_(text), n_(n) {}

  GradedTensor<Tag> parse() {
    GradedTensor<Tag> result(n_);
    skip_space();
    if (at_end()) throw ParseError("empty expression", pos_);
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      result += parse_term() * Rational(sign);
      first = false;
      skip_space();
    }
    return result;
  }

 private:
  enum class Sep { none, star, wedge };

  GradedTensor<Tag> parse_term() {
    Rational coeff = 1;
    std::vector<int> exps(static_cast<std::size_t>(n_), 0);
    std::vector<int> partials;
    bool last_partial = false;
    Sep sep = Sep::none;
    for (;;) {
      skip_space();
      std::size_t start = pos_;
      if (at_end()) throw ParseError("expected a factor", pos_);
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        if (sep == Sep::wedge) throw ParseError("'/\\' must join partials", start);
        coeff *= parse_number();
        last_partial = false;
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string id;
        while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) id += text_[pos_++];
        auto [is_partial, index] = resolve(id, n_);
        if (index == 0) throw ParseError("unknown symbol '" + id + "'", start);
        if (index < 1 || index > n_) {
          throw ParseError("index of '" + id + "' exceeds dimension " + std::to_string(n_), start);
        }
        if (is_partial) {
          if (sep == Sep::star && last_partial) throw ParseError("partials must be joined by '/\\'", start);
          partials.push_back(index);
          last_partial = true;
        } else {
          if (sep == Sep::wedge) throw ParseError("'/\\' must join partials", start);
          int power = 1;
          skip_space();
          if (!at_end() && peek() == '^') {
            ++pos_;
            skip_space();
            std::size_t exp_pos = pos_;
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
              throw ParseError("expected exponent", exp_pos);
            }
            std::string digits;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
            if (digits.size() > 3) throw ParseError("exponent too large", exp_pos);
            power = std::stoi(digits);
          }
          exps[static_cast<std::size_t>(index - 1)] += power;
          if (exps[static_cast<std::size_t>(index - 1)] > 255) throw ParseError("exponent too large", start);
          last_partial = false;
        }
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", start);
      }
      skip_space();
      if (at_end() || peek() == '+' || peek() == '-') break;
      if (peek() == '*') {
        ++pos_;
        sep = Sep::star;
      } else if (peek() == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '\\') {
        if (!last_partial) throw ParseError("'/\\' must join partials", pos_);
        pos_ += 2;
        sep = Sep::wedge;
      } else {
        throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
      }
    }
    return GradedTensor<Tag>::term(n_, coeff, exps, partials);
  }

  Rational parse_number() {
    std::string num;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) num += text_[pos_++];
    if (!at_end() && peek() == '/' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      std::size_t den_pos = ++pos_;
      std::string den;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) den += text_[pos_++];
      Integer d(den);
      if (sgn(d) == 0) throw ParseError("zero denominator", den_pos);
      return ratio(Integer(num), d);
    }
    return Rational(Integer(num));
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  const std::string& text_;
  int n_;
  std::size_t pos_ = 0;
};

std::string name_of(int n, AliasMode mode, int index, bool partial) {
  const char* alias = alias_name(n, mode, index);
  if (alias) return (partial ? "d" : "") + std::string(alias);
  return (partial ? "d" : "x") + std::to_string(index);
}

template <class Tag>
std::string format(const GradedTensor<Tag>& t, AliasMode mode) {
  if (t.is_zero()) return "0";
  const int n = t.dim();
  std::string out;
  bool first = true;
  for (const auto& [key, c] : t.terms()) {
    std::string factors;
    auto append = [&](const std::string& f, const char* joiner) {
      if (!factors.empty()) factors += joiner;
      factors += f;
    };
    for (int i = 0; i < n; ++i) {
      int e = key.exponents[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      std::string f = name_of(n, mode, i + 1, false);
      if (e > 1) f += "^" + std::to_string(e);
      append(f, "*");
    }
    bool first_partial = true;
    for (int idx : key.index_list()) {
      append(name_of(n, mode, idx, true), first_partial ? "*" : "/\\");
      first_partial = false;
    }
    Rational magnitude = abs(c);
    std::string body;
    if (factors.empty()) {
      body = to_string(magnitude);
    } else if (magnitude == 1) {
      body = factors;
    } else {
      body = to_string(magnitude) + "*" + factors;
    }
    if (first) {
      out = (sgn(c) < 0 ? "-" : "") + body;
      first = false;
    } else {
      out += (sgn(c) < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

}  // namespace

AliasMode parse_alias(const std::string& name) {
  if (name == "numeric") return AliasMode::numeric;
  if (name == "xyz") return AliasMode::xyz;
  if (name == "txyz") return AliasMode::txyz;
  throw std::invalid_argument("unknown alias mode '" + name + "'");
}

PolyVectorField parse_expr(const std::string& text, int n) { return Parser<VectorTag>(text, n).parse(); }

PolyDifferentialForm parse_form(const std::string& text, int n) { return Parser<FormTag>(text, n).parse(); }

std::string format_expr(const PolyVectorField& u, AliasMode mode) { return format(u, mode); }

std::string format_expr(const PolyDifferentialForm& omega, AliasMode mode) { return format(omega, mode); }

}  // namespace pvf::cli
