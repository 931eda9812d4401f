#include "finst/cox_oracle.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <mutex>
#include <shared_mutex>

#include "finst/errors.hpp"

namespace finst {

namespace {

constexpr std::array<const char*, kNumCoxVars> kVarNames{"x1", "x2", "y", "z", "s0", "s1"};

// Class of each Cox variable.
constexpr std::array<DivClass, kNumCoxVars> kVarClass{
    DivClass{1, -1, 0}, DivClass{1, -1, 0}, DivClass{0, 1, 0}, DivClass{1, 0, 0}, DivClass{0, 0, 1}, DivClass{0, 0, 1}};

std::shared_ptr<const Basis> enumerate(const DivClass& d) {
  auto b = std::make_shared<Basis>();
  b->cls = d;
  // a1 + a2 + n = l,  m - (a1 + a2) = e,  d0 + d1 = xi.
  if (d.l >= 0 && d.xi >= 0) {
    for (Int k = std::max<Int>(0, -d.e); k <= d.l; ++k) {
      const Int n = d.l - k;
      const Int m = d.e + k;
      for (Int a1 = 0; a1 <= k; ++a1)
        for (Int d0 = 0; d0 <= d.xi; ++d0) {
          CoxMonomial mono;
          mono.exp = {static_cast<std::uint32_t>(a1), static_cast<std::uint32_t>(k - a1), static_cast<std::uint32_t>(m),
                      static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(d0),
                      static_cast<std::uint32_t>(d.xi - d0)};
          b->monomials.push_back(mono);
        }
    }
  }
  std::sort(b->monomials.begin(), b->monomials.end(), std::greater<>());
  for (std::size_t i = 0; i < b->monomials.size(); ++i) b->index.emplace(b->monomials[i], i);
  return b;
}

}  // namespace

DivClass CoxMonomial::multidegree() const {
  DivClass d;
  for (int v = 0; v < kNumCoxVars; ++v) d = d + static_cast<Int>(exp[static_cast<std::size_t>(v)]) * kVarClass[static_cast<std::size_t>(v)];
  return d;
}

CoxMonomial CoxMonomial::operator*(const CoxMonomial& o) const {
  CoxMonomial r;
  for (std::size_t v = 0; v < exp.size(); ++v) r.exp[v] = exp[v] + o.exp[v];
  return r;
}

CoxMonomial parse_monomial(std::string_view text) {
  CoxMonomial m;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty() || s == "1") return m;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t star = s.find('*', pos);
    std::string factor = s.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
    std::uint32_t power = 1;
    if (auto caret = factor.find('^'); caret != std::string::npos) {
      auto [p, ec] = std::from_chars(factor.data() + caret + 1, factor.data() + factor.size(), power);
      if (ec != std::errc() || p != factor.data() + factor.size()) throw ParseError("bad exponent in '" + factor + "'");
      factor.resize(caret);
    }
    auto it = std::find(kVarNames.begin(), kVarNames.end(), factor);
    if (it == kVarNames.end()) throw ParseError("unknown Cox variable '" + factor + "'");
    m.exp[static_cast<std::size_t>(it - kVarNames.begin())] += power;
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  return m;
}

std::string format_monomial(const CoxMonomial& m) {
  std::string out;
  for (std::size_t v = 0; v < m.exp.size(); ++v) {
    if (m.exp[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += kVarNames[v];
    if (m.exp[v] > 1) out += "^" + std::to_string(m.exp[v]);
  }
  return out.empty() ? "1" : out;
}

std::shared_ptr<const Basis> basis(const DivClass& d) {
  static std::shared_mutex mutex;
  static std::map<DivClass, std::shared_ptr<const Basis>> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  auto fresh = enumerate(d);
  std::unique_lock lock(mutex);
  return cache.emplace(d, std::move(fresh)).first->second;
}

std::vector<CoxMonomial> basis_f(const DivClass& d) { return basis(d)->monomials; }

Int count_f1(Int u, Int v) {
  // x1^a1 x2^a2 y^m z^n has class (a1+a2+n) l + (m-a1-a2) e on F1.
  Int count = 0;
  for (Int a1 = 0; a1 <= u; ++a1)
    for (Int a2 = 0; a1 + a2 <= u; ++a2)
      if (a1 + a2 - v >= 0) ++count;
  return count;
}

SectionVector SectionVector::zero(const DivClass& cls) { return {cls, std::vector<Rational>(basis(cls)->monomials.size())}; }

SectionVector SectionVector::from_monomial(const CoxMonomial& m) {
  SectionVector s = zero(m.multidegree());
  s.coeffs[basis(s.cls)->index.at(m)] = 1;
  return s;
}

SectionVector SectionVector::from_polynomial(const DivClass& cls, const CoxPolynomial& p) {
  SectionVector s = zero(cls);
  auto b = basis(cls);
  for (const auto& [m, c] : p) {
    auto it = b->index.find(m);
    if (it == b->index.end()) throw InvalidArgument("monomial " + format_monomial(m) + " is not of the section's class");
    s.coeffs[it->second] += c;
  }
  return s;
}

CoxPolynomial SectionVector::polynomial() const {
  CoxPolynomial p;
  auto b = basis(cls);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (sgn(coeffs[i]) != 0) p.emplace(b->monomials[i], coeffs[i]);
  return p;
}

bool SectionVector::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return sgn(c) == 0; });
}

SectionVector SectionVector::operator*(const SectionVector& o) const {
  CoxPolynomial prod;
  for (const auto& [m1, c1] : polynomial())
    for (const auto& [m2, c2] : o.polynomial()) prod[m1 * m2] += c1 * c2;
  std::erase_if(prod, [](const auto& kv) { return sgn(kv.second) == 0; });
  return from_polynomial(cls + o.cls, prod);
}

linalg::SparseMatrix mult_matrix(const SectionVector& s, const DivClass& source) {
  auto src = basis(source);
  auto dst = basis(source + s.cls);
  linalg::SparseMatrix mat(src->monomials.size(), dst->monomials.size());
  const CoxPolynomial poly = s.polynomial();
  for (std::size_t r = 0; r < src->monomials.size(); ++r)
    for (const auto& [m, c] : poly) mat.add(r, dst->index.at(src->monomials[r] * m), c);
  return mat;
}

bool irrelevant_check(const CoxPoint& p) {
  auto nz = [&](CoxVar v) { return sgn(p[static_cast<std::size_t>(v)]) != 0; };
  return (nz(kX1) || nz(kX2)) && (nz(kY) || nz(kZ)) && (nz(kS0) || nz(kS1));
}

Rational evaluate(const CoxPolynomial& poly, const CoxPoint& point) {
  Rational total = 0;
  for (const auto& [m, c] : poly) {
    Rational term = c;
    for (std::size_t v = 0; v < m.exp.size(); ++v)
      for (std::uint32_t k = 0; k < m.exp[v]; ++k) term *= point[v];
    total += term;
  }
  return total;
}

}  // namespace finst
