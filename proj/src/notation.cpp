#include "finst/notation.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "finst/errors.hpp"

namespace finst {

const char* const kConventionBanner =
    "DivClass (p,q,r) is p*l + q*e + r*xi, so O_F(a l - b e + c xi) is stored as (a,-b,c); "
    "CurveClass (p,q,r) is p*l*xi + q*e*xi + r*l^2, so the charge alpha*l*xi - beta*e*xi + gamma*l^2 is "
    "(alpha,-beta,gamma).";

namespace {

void replace_all(std::string& s, std::string_view from, std::string_view to) {
  for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size())
    s.replace(pos, from.size(), to);
}

std::string normalize(std::string_view text) {
  std::string s(text);
  replace_all(s, "ℓ", "l");
  replace_all(s, "ξ", "xi");
  replace_all(s, "−", "-");
  replace_all(s, "²", "2");
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '^') out.push_back(static_cast<char>(std::tolower(c)));
  return out;
}

Int parse_int(std::string_view s, std::string_view whole) {
  Int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("bad integer '" + std::string(s) + "' in '" + std::string(whole) + "'");
  return v;
}

std::array<Int, 3> parse_triple(const std::string& s, std::string_view whole) {
  std::string body = s;
  if (!body.empty() && (body.front() == '(' || body.front() == '[')) {
    if (body.size() < 2 || (body.back() != ')' && body.back() != ']'))
      throw ParseError("unbalanced triple '" + std::string(whole) + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::array<Int, 3> out{};
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    std::size_t comma = body.find(',', start);
    if ((i < 2) != (comma != std::string::npos)) throw ParseError("expected three components in '" + std::string(whole) + "'");
    std::string_view part(body.data() + start, (i < 2 ? comma : body.size()) - start);
    out[static_cast<std::size_t>(i)] = parse_int(part, whole);
    start = comma + 1;
  }
  return out;
}

// Splits "3l-e+2xi" into (coefficient, symbol) pairs.
std::vector<std::pair<Int, std::string>> parse_terms(const std::string& s, std::string_view whole) {
  std::vector<std::pair<Int, std::string>> terms;
  std::size_t i = 0;
  if (s.empty()) throw ParseError("empty class expression");
  if (s == "0") return terms;
  while (i < s.size()) {
    Int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!terms.empty()) {
      throw ParseError("expected '+' or '-' in '" + std::string(whole) + "'");
    }
    std::size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    Int coeff = digits == i ? 1 : parse_int(std::string_view(s).substr(digits, i - digits), whole);
    if (i < s.size() && s[i] == '*') ++i;
    std::size_t ident = i;
    if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i])))
      while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
    std::string sym = s.substr(ident, i - ident);
    if (sym.empty()) throw ParseError("missing symbol in '" + std::string(whole) + "'");
    terms.emplace_back(checked::mul(sign, coeff), sym);
  }
  return terms;
}

bool looks_like_triple(const std::string& s) { return s.find(',') != std::string::npos; }

void append_term(std::string& out, Int coeff, const char* sym) {
  if (coeff == 0) return;
  if (out.empty()) {
    if (coeff < 0) out += "-";
  } else {
    out += coeff < 0 ? " - " : " + ";
  }
  Int mag = coeff < 0 ? -coeff : coeff;
  if (mag != 1) out += std::to_string(mag);
  out += sym;
}

}  // namespace

DivClass parse_div(std::string_view text) {
  const std::string s = normalize(text);
  if (looks_like_triple(s)) {
    auto t = parse_triple(s, text);
    return {t[0], t[1], t[2]};
  }
  DivClass d;
  for (const auto& [coeff, sym] : parse_terms(s, text)) {
    if (sym == "l") d.l = checked::add(d.l, coeff);
    else if (sym == "e") d.e = checked::add(d.e, coeff);
    else if (sym == "xi") d.xi = checked::add(d.xi, coeff);
    else if (sym == "h") d = d + coeff * kH;
    else throw ParseError("unknown divisor symbol '" + sym + "' (expected l, e, xi or h)");
  }
  return d;
}

CurveClass parse_curve(std::string_view text) {
  const std::string s = normalize(text);
  if (looks_like_triple(s)) {
    auto t = parse_triple(s, text);
    return {t[0], t[1], t[2]};
  }
  CurveClass c;
  for (const auto& [coeff, sym] : parse_terms(s, text)) {
    if (sym == "lxi") c.lxi = checked::add(c.lxi, coeff);
    else if (sym == "exi") c.exi = checked::add(c.exi, coeff);
    else if (sym == "l2") c.l2 = checked::add(c.l2, coeff);
    else throw ParseError("unknown curve symbol '" + sym + "' (expected lxi, exi or l2)");
  }
  return c;
}

std::string format_div(const DivClass& d) {
  std::string out;
  append_term(out, d.l, "l");
  append_term(out, d.e, "e");
  append_term(out, d.xi, "xi");
  return out.empty() ? "0" : out;
}

std::string format_curve(const CurveClass& c) {
  std::string out;
  append_term(out, c.lxi, "lxi");
  append_term(out, c.exi, "exi");
  append_term(out, c.l2, "l2");
  return out.empty() ? "0" : out;
}

}  // namespace finst
