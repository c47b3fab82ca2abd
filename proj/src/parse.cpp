#include "asf/parse.hpp"

#include <cctype>
#include <regex>

#include "asf/error.hpp"

namespace asf {

namespace {

class TermParser {
 public:
  TermParser(std::string_view text, FiniteField field, char var, bool allow_gen)
      : text_(text), field_(std::move(field)), var_(var), allow_gen_(allow_gen) {}

  std::map<std::int64_t, Element> parse_all() {
    auto out = parse_sum(false);
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    raise(ErrorCode::ParseError, why + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::int64_t parse_int(bool allow_sign) {
    skip_ws();
    bool neg = false;
    if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
      skip_ws();
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected integer");
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (INT64_MAX - 9) / 10) fail("integer too large");
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return neg ? -v : v;
  }

  std::int64_t parse_exponent(bool allow_negative) {
    if (!accept('^')) return 1;
    std::int64_t k = parse_int(allow_negative);
    if (k < 0 && !allow_negative) fail("negative exponent");
    return k;
  }

  std::map<std::int64_t, Element> parse_sum(bool element_only) {
    std::map<std::int64_t, Element> acc;
    bool first = true;
    for (;;) {
      skip_ws();
      bool negate = false;
      if (accept('-')) {
        negate = true;
      } else if (!accept('+') && !first) {
        break;
      }
      auto [exp, coeff] = parse_term(element_only);
      if (negate) coeff = -coeff;
      auto it = acc.find(exp);
      if (it == acc.end()) {
        acc.emplace(exp, coeff);
      } else {
        it->second += coeff;
      }
      first = false;
      skip_ws();
      if (pos_ >= text_.size() || (text_[pos_] != '+' && text_[pos_] != '-')) break;
    }
    std::erase_if(acc, [](const auto& kv) { return kv.second.is_zero(); });
    return acc;
  }

  std::pair<std::int64_t, Element> parse_term(bool element_only) {
    Element coeff = field_.one();
    std::int64_t exp = 0;
    bool any = false;
    do {
      skip_ws();
      if (pos_ >= text_.size()) fail("unexpected end of input");
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= field_.from_int(parse_int(false));
      } else if (c == 'g' && allow_gen_) {
        ++pos_;
        coeff *= field_.gen().pow(static_cast<std::uint64_t>(parse_exponent(false)));
      } else if (c == var_ && !element_only) {
        ++pos_;
        exp += parse_exponent(true);
      } else if (c == '(') {
        ++pos_;
        auto inner = parse_sum(true);
        if (!accept(')')) fail("expected ')'");
        auto it = inner.find(0);
        coeff *= it == inner.end() ? field_.zero() : it->second;
      } else {
        fail(std::string("unexpected '") + c + "'");
      }
      any = true;
    } while (accept('*'));
    if (!any) fail("empty term");
    return {exp, coeff};
  }

  std::string_view text_;
  FiniteField field_;
  char var_;
  bool allow_gen_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

FiniteField parse_field(std::string_view text) {
  static const std::regex re(R"(^\s*GF\(\s*(\d+)\s*(?:\^\s*(\d+)\s*)?\)\s*(?:/(.+))?$)");
  std::cmatch m;
  const std::string s(text);
  if (!std::regex_match(s.c_str(), m, re)) raise(ErrorCode::ParseError, "bad field literal '" + s + "'");
  const std::uint64_t base = std::stoull(m[1].str());
  std::uint32_t p = 0;
  int n = 0;
  if (m[2].matched) {
    if (!is_prime(base)) raise(ErrorCode::NotPrime, std::to_string(base));
    p = static_cast<std::uint32_t>(base);
    n = std::stoi(m[2].str());
  } else {
    std::tie(p, n) = prime_power_decompose(base);
    if (p == 0) raise(ErrorCode::NotPrime, std::to_string(base) + " is not a prime power");
  }
  if (n < 1) raise(ErrorCode::InvalidArgument, "extension degree must be >= 1");
  if (!m[3].matched) return FiniteField::canonical(p, n);
  PolyFp modulus = parse_fp_poly(m[3].str(), p);
  if (modulus.degree() != n) {
    raise(ErrorCode::ParseError, "modulus degree " + std::to_string(modulus.degree()) + " does not match n=" + std::to_string(n));
  }
  return FiniteField::make(p, modulus);
}

Element parse_element(std::string_view text, const FiniteField& field) {
  auto terms = TermParser(text, field, '\0', true).parse_all();
  Element acc = field.zero();
  for (const auto& [exp, c] : terms) acc += c;
  return acc;
}

std::vector<Element> parse_element_list(std::string_view text, const FiniteField& field) {
  std::vector<Element> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      auto item = trim(text.substr(start, i - start));
      if (item.empty()) raise(ErrorCode::ParseError, "empty item in list '" + std::string(text) + "'");
      out.push_back(parse_element(item, field));
      start = i + 1;
    } else if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      --depth;
    }
  }
  return out;
}

PolyFp parse_fp_poly(std::string_view text, std::uint32_t p) {
  const auto field = FiniteField::prime(p);
  auto terms = TermParser(text, field, 'x', false).parse_all();
  if (terms.empty()) return PolyFp(p);
  if (terms.begin()->first < 0) raise(ErrorCode::ParseError, "negative exponent in polynomial");
  std::vector<std::uint32_t> c(static_cast<std::size_t>(terms.rbegin()->first) + 1, 0);
  for (const auto& [exp, v] : terms) c[static_cast<std::size_t>(exp)] = v.prime_value();
  return PolyFp(p, std::move(c));
}

FqPoly parse_fq_poly(std::string_view text, const FiniteField& field) {
  auto terms = TermParser(text, field, 'x', true).parse_all();
  if (terms.empty()) return FqPoly(field);
  if (terms.begin()->first < 0) raise(ErrorCode::ParseError, "negative exponent in polynomial");
  if (terms.rbegin()->first > (1 << 24)) raise(ErrorCode::ParseError, "polynomial degree too large");
  std::vector<Element> c(static_cast<std::size_t>(terms.rbegin()->first) + 1, field.zero());
  for (const auto& [exp, v] : terms) c[static_cast<std::size_t>(exp)] = v;
  return FqPoly(field, std::move(c));
}

std::map<std::int64_t, Element> parse_series_terms(std::string_view text, const FiniteField& field) {
  return TermParser(text, field, 't', true).parse_all();
}

}  // namespace asf
