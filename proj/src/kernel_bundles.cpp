#include "finst/kernel_bundles.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "finst/cohomology.hpp"
#include "finst/linalg.hpp"
#include "finst/notation.hpp"

namespace finst {

namespace {

std::string cls_str(const DivClass& d) { return "O(" + format_div(d) + ")"; }

DivClass c1_of(const KernelBundlePresentation& pres) {
  DivClass c1{};
  for (const auto& s : pres.sources) c1 = c1 + s;
  return c1 - pres.target;
}

// Serre duality in the form h^i(E(d)) = h^{3-i}(E(-d)) needs E^v (x) omega = E,
// which for rank 2 means c1 = omega.
void require_self_dual(const KernelBundlePresentation& pres, const char* who) {
  if (c1_of(pres) != kOmega)
    throw InvalidArgument(std::string(who) + ": c1 = " + format_div(c1_of(pres)) + " is not omega");
}

CoxMonomial mono(std::initializer_list<std::pair<CoxVar, std::uint32_t>> powers) {
  CoxMonomial m;
  for (auto [v, k] : powers) m.exp[static_cast<std::size_t>(v)] = k;
  return m;
}

SectionVector random_section(const DivClass& cls, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  SectionVector s = SectionVector::zero(cls);
  while (s.is_zero())
    for (auto& c : s.coeffs) {
      c = Rational(num(rng), den(rng));
      c.canonicalize();
    }
  return s;
}

struct Shape {
  const char* label;
  std::vector<DivClass> sources;
  DivClass target;
  InstantonCharge charge;
};

Shape shape_of(MinimalCharge which) {
  switch (which) {
    case MinimalCharge::Charge422:
      return {"422", {{-1, 0, -1}, {-1, 0, -1}, {-2, 1, 0}}, {-1, 0, 0}, {4, 2, 2}};
    case MinimalCharge::Charge313:
      return {"313", {{-1, 0, -1}, {-1, 0, -1}, {-1, 1, -1}}, {0, 0, -1}, {3, 1, 3}};
  }
  throw InvalidArgument("unknown minimal charge");
}

// ---------------------------------------------------------------------------
// Chart certificates

using Exp3 = std::array<std::uint32_t, 3>;
using Poly3 = std::map<Exp3, Rational>;

struct Chart {
  std::array<CoxVar, 3> units;
  std::array<CoxVar, 3> free;
};

std::vector<Chart> charts() {
  std::vector<Chart> out;
  for (CoxVar x : {kX1, kX2})
    for (CoxVar yz : {kY, kZ})
      for (CoxVar s : {kS0, kS1}) {
        const CoxVar xo = x == kX1 ? kX2 : kX1;
        const CoxVar yzo = yz == kY ? kZ : kY;
        const CoxVar so = s == kS0 ? kS1 : kS0;
        out.push_back({{x, yz, s}, {xo, yzo, so}});
      }
  return out;
}

Poly3 dehomogenize(const CoxPolynomial& p, const Chart& ch) {
  Poly3 out;
  for (const auto& [m, c] : p) {
    Exp3 e{};
    for (std::size_t k = 0; k < 3; ++k) e[k] = m.exp[static_cast<std::size_t>(ch.free[k])];
    out[e] += c;
  }
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

Poly3 mul3(const Poly3& a, const Poly3& b) {
  Poly3 out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) out[{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}] += ca * cb;
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

std::vector<Exp3> monomials_upto(std::uint32_t degree) {
  std::vector<Exp3> out;
  for (std::uint32_t total = 0; total <= degree; ++total)
    for (std::uint32_t i = 0; i <= total; ++i)
      for (std::uint32_t j = 0; i + j <= total; ++j) out.push_back({i, j, total - i - j});
  return out;
}

const char* var_name(CoxVar v) {
  static const char* names[] = {"x1", "x2", "y", "z", "s0", "s1"};
  return names[static_cast<int>(v)];
}

std::string format_poly3(const Poly3& p, const Chart& ch) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    const Rational a = abs(c);
    bool unit = e == Exp3{};
    if (a != 1 || unit) os << a.get_str();
    for (std::size_t k = 0; k < 3; ++k) {
      if (e[k] == 0) continue;
      if (a != 1 || !unit) os << (a != 1 ? "*" : "");
      os << var_name(ch.free[k]);
      if (e[k] > 1) os << '^' << e[k];
      unit = false;
    }
  }
  return os.str();
}

constexpr std::uint32_t kMaxCertificateDegree = 6;

// Multipliers g_i of degree <= D with sum g_i f_i = 1, by linear algebra on
// the coefficient vectors.
std::optional<ChartCertificate> certify_chart(const std::vector<Poly3>& f, const Chart& ch) {
  for (std::uint32_t degree = 0; degree <= kMaxCertificateDegree; ++degree) {
    const auto mus = monomials_upto(degree);
    std::map<Exp3, std::size_t> cols{{Exp3{}, 0}};
    std::vector<std::pair<std::size_t, Exp3>> unknowns;
    std::vector<Poly3> products;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i].empty()) continue;
      for (const auto& mu : mus) {
        Poly3 prod = mul3(Poly3{{mu, Rational(1)}}, f[i]);
        for (const auto& kv : prod) cols.emplace(kv.first, cols.size());
        unknowns.emplace_back(i, mu);
        products.push_back(std::move(prod));
      }
    }
    if (unknowns.empty()) return std::nullopt;
    linalg::SparseMatrix a(unknowns.size(), cols.size());
    for (std::size_t r = 0; r < products.size(); ++r)
      for (const auto& [e, c] : products[r]) a.add(r, cols.at(e), c);
    std::vector<Rational> rhs(cols.size());
    rhs[0] = 1;
    const auto x = linalg::solve_left(a, rhs);
    if (!x) continue;

    std::vector<Poly3> g(f.size());
    for (std::size_t r = 0; r < unknowns.size(); ++r)
      if (sgn((*x)[r]) != 0) g[unknowns[r].first][unknowns[r].second] += (*x)[r];
    Poly3 total;
    for (std::size_t i = 0; i < f.size(); ++i)
      for (const auto& [e, c] : mul3(g[i], f[i])) total[e] += c;
    std::erase_if(total, [](const auto& kv) { return sgn(kv.second) == 0; });
    if (total != Poly3{{Exp3{}, Rational(1)}})
      throw InternalDefect("chart certificate does not reproduce 1");

    ChartCertificate cert;
    cert.units = ch.units;
    cert.degree = static_cast<int>(degree);
    for (const auto& gi : g) cert.multipliers.push_back(format_poly3(gi, ch));
    return cert;
  }
  return std::nullopt;
}

bool common_zero(const std::vector<CoxPolynomial>& polys, const CoxPoint& p) {
  return std::all_of(polys.begin(), polys.end(), [&](const auto& q) { return sgn(evaluate(q, p)) == 0; });
}

std::optional<CoxPoint> search_witness(const std::vector<CoxPolynomial>& polys) {
  static const int values[] = {0, 1, -1, 2};
  CoxPoint p;
  std::array<int, kNumCoxVars> idx{};
  for (;;) {
    for (std::size_t v = 0; v < idx.size(); ++v) p[v] = values[idx[v]];
    if (irrelevant_check(p) && common_zero(polys, p)) return p;
    std::size_t v = 0;
    while (v < idx.size() && ++idx[v] == 4) idx[v++] = 0;
    if (v == idx.size()) return std::nullopt;
  }
}

std::string point_str(const CoxPoint& p) {
  std::string s = "[";
  for (std::size_t v = 0; v < p.size(); ++v) s += (v ? "," : "") + p[v].get_str();
  return s + "]";
}

// ---------------------------------------------------------------------------
// Binary forms on the line {y = 0}

using Form = std::vector<Rational>;  // coefficient of x1^j x2^(deg-j)

Int line_degree(const DivClass& d) { return -d.e; }

Form restrict_form(const SectionVector& s, const std::array<Rational, 2>& base) {
  const Int deg = line_degree(s.cls);
  if (deg < 0) return {};
  Form out(static_cast<std::size_t>(deg + 1));
  for (const auto& [m, c] : s.polynomial()) {
    if (m.exp[kY] != 0) continue;
    Rational v = c;
    for (std::uint32_t k = 0; k < m.exp[kS0]; ++k) v *= base[0];
    for (std::uint32_t k = 0; k < m.exp[kS1]; ++k) v *= base[1];
    out[m.exp[kX1]] += v;
  }
  return out;
}

bool is_zero_form(const Form& f) {
  return std::all_of(f.begin(), f.end(), [](const Rational& c) { return sgn(c) == 0; });
}

using UPoly = std::vector<Rational>;  // low to high

void trim(UPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

UPoly poly_mod(UPoly a, const UPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational q = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= q * b[k];
    trim(a);
  }
  return a;
}

// True when the nonzero forms have a common root on P^1.
bool forms_share_root(const std::vector<Form>& forms) {
  std::vector<const Form*> nz;
  for (const auto& f : forms)
    if (!is_zero_form(f)) nz.push_back(&f);
  if (nz.empty()) return true;
  // Root [1:0]: every top coefficient (pure x1 power) vanishes.
  if (std::all_of(nz.begin(), nz.end(), [](const Form* f) { return sgn(f->back()) == 0; })) return true;
  // Affine roots x2 = 1: gcd of the dehomogenized polynomials.
  UPoly g;
  for (const Form* f : nz) {
    UPoly p(f->begin(), f->end());
    trim(p);
    while (!p.empty()) {
      UPoly r = poly_mod(g, p);
      g = std::move(p);
      p = std::move(r);
    }
  }
  return g.size() > 1;
}

Int line_h0_kernel(const std::vector<Int>& src_deg, Int tgt_deg, const std::vector<Form>& forms, Int t) {
  const Int cols = std::max<Int>(0, tgt_deg + t + 1);
  Int rows = 0;
  for (Int a : src_deg) rows += std::max<Int>(0, a + t + 1);
  linalg::SparseMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  std::size_t r = 0;
  for (std::size_t i = 0; i < src_deg.size(); ++i) {
    const Int n = src_deg[i] + t;
    for (Int j = 0; j <= n; ++j, ++r)
      for (std::size_t k = 0; k < forms[i].size(); ++k)
        if (sgn(forms[i][k]) != 0) m.add(r, static_cast<std::size_t>(j) + k, forms[i][k]);
  }
  return rows - static_cast<Int>(linalg::rank(m));
}

constexpr double kModPBudget = 5e7;

}  // namespace

// ---------------------------------------------------------------------------

void KernelBundlePresentation::validate() const {
  if (sources.size() != entries.size())
    throw InvalidArgument("presentation " + label + ": " + std::to_string(sources.size()) + " sources but " +
                          std::to_string(entries.size()) + " entries");
  for (std::size_t i = 0; i < sources.size(); ++i)
    if (entries[i].cls != target - sources[i])
      throw InvalidArgument("presentation " + label + ": entry " + std::to_string(i) + " has class " +
                            format_div(entries[i].cls) + ", expected " + format_div(target - sources[i]));
  if (sources.size() != 3) throw RankMismatch("presentation " + label + ": kernel rank is not 2");
}

KClass KernelBundlePresentation::kclass() const {
  KClass k;
  for (const auto& s : sources) k.add(s, 1);
  k.add(target, -1);
  return k;
}

KernelBundlePresentation make_presentation(std::string label, std::vector<DivClass> sources, DivClass target,
                                           std::vector<SectionVector> entries, InstantonCharge charge) {
  KernelBundlePresentation p{std::move(label), std::move(sources), target, std::move(entries), charge};
  p.validate();
  return p;
}

KernelBundlePresentation minimal_presentation(MinimalCharge which) {
  const Shape sh = shape_of(which);
  std::vector<SectionVector> entries;
  if (which == MinimalCharge::Charge422) {
    entries = {SectionVector::from_monomial(mono({{kS0, 1}})), SectionVector::from_monomial(mono({{kS1, 1}})),
               SectionVector::from_monomial(mono({{kX1, 1}}))};
  } else {
    entries = {SectionVector::from_monomial(mono({{kZ, 1}})),
               SectionVector::from_monomial(mono({{kX1, 1}, {kY, 1}})),
               SectionVector::from_monomial(mono({{kX2, 1}}))};
  }
  return make_presentation(sh.label, sh.sources, sh.target, std::move(entries), sh.charge);
}

KernelBundlePresentation random_presentation(MinimalCharge which, std::uint64_t seed) {
  const Shape sh = shape_of(which);
  std::mt19937_64 rng(seed);
  std::vector<SectionVector> entries;
  for (const auto& s : sh.sources) entries.push_back(random_section(sh.target - s, rng));
  return make_presentation(std::string(sh.label) + "-random-" + std::to_string(seed), sh.sources, sh.target,
                           std::move(entries), sh.charge);
}

SurjectivityCertificate verify_surjective(const KernelBundlePresentation& pres, std::uint64_t seed,
                                          std::size_t samples) {
  std::vector<CoxPolynomial> polys;
  for (const auto& e : pres.entries) polys.push_back(e.polynomial());

  SurjectivityCertificate out;
  out.seed = seed;
  for (const auto& ch : charts()) {
    std::vector<Poly3> local;
    for (const auto& p : polys) local.push_back(dehomogenize(p, ch));
    auto cert = certify_chart(local, ch);
    if (!cert) {
      const auto witness = search_witness(polys);
      std::string msg = "presentation " + pres.label + " has no unit-ideal certificate on chart " +
                        var_name(ch.units[0]) + "=" + var_name(ch.units[1]) + "=" + var_name(ch.units[2]) +
                        "=1 up to degree " + std::to_string(kMaxCertificateDegree);
      msg += witness ? "; common zero at " + point_str(*witness) : "; no common zero found in {0,1,-1,2}^6";
      throw NotSurjective(msg, witness);
    }
    out.charts.push_back(std::move(*cert));
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-5, 5);
  while (out.samples < samples) {
    CoxPoint p;
    for (auto& c : p) c = coord(rng);
    if (!irrelevant_check(p)) continue;
    ++out.samples;
    if (common_zero(polys, p))
      throw InternalDefect("sampling found common zero " + point_str(p) + " despite chart certificates");
  }
  return out;
}

TwistMap twist_map(const KernelBundlePresentation& pres, const DivClass& d) {
  const auto tgt = basis(pres.target + d);
  linalg::SparseMatrix m(0, tgt->monomials.size());
  for (std::size_t i = 0; i < pres.sources.size(); ++i) m.append_rows(mult_matrix(pres.entries[i], pres.sources[i] + d));

  TwistMap out;
  out.twist = d;
  out.rows = m.rows();
  out.cols = m.cols();
  out.rank = linalg::rank(m);
  const double cost = static_cast<double>(m.rows()) * static_cast<double>(m.cols()) *
                      static_cast<double>(std::min(m.rows(), m.cols()));
  if (cost <= kModPBudget) {
    out.rank_mod_p = linalg::rank_mod_p(m);
    if (out.rank_mod_p && *out.rank_mod_p > out.rank)
      throw InternalDefect("rank mod p exceeds rational rank at twist " + format_div(d));
  }
  return out;
}

Int h0_twist(const KernelBundlePresentation& pres, const DivClass& d) { return twist_map(pres, d).kernel(); }

TwistCohomResult h1_twist(const KernelBundlePresentation& pres, const DivClass& d) {
  const TwistMap tm = twist_map(pres, d);
  Int h1v = 0;
  for (const auto& s : pres.sources) h1v += cohom_f(s + d).h1;
  if (h1v == 0) return TwistCohomResult::Exact(tm.cokernel(), "cokernel of H^0(V(d)) -> H^0(T(d)); H^1(V(d)) = 0");
  return TwistCohomResult::Interval(tm.cokernel(), tm.cokernel() + h1v,
                                    "cokernel plus up to h^1(V(d)) = " + std::to_string(h1v));
}

std::optional<Int> h3_twist_dual(const KernelBundlePresentation& pres, const DivClass& d) {
  if (cohom_f(pres.target + d).h2 != 0) return std::nullopt;
  const DivClass base = kOmega - pres.target - d;
  std::vector<std::size_t> offsets;
  std::size_t cols = 0;
  for (const auto& s : pres.sources) {
    offsets.push_back(cols);
    cols += basis(kOmega - s - d)->monomials.size();
  }
  const auto rows = basis(base)->monomials.size();
  linalg::SparseMatrix m(rows, cols);
  for (std::size_t i = 0; i < pres.sources.size(); ++i) {
    const auto block = mult_matrix(pres.entries[i], base);
    for (std::size_t r = 0; r < block.rows(); ++r)
      for (const auto& [c, v] : block.row(r)) m.add(r, offsets[i] + c, v);
  }
  return static_cast<Int>(cols) - static_cast<Int>(linalg::rank(m));
}

std::vector<DivClass> enumerate_destabilizer_candidates(const KernelBundlePresentation& pres) {
  auto ceil_div2 = [](Int x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); };
  std::set<DivClass> found;
  for (const auto& s : pres.sources) {
    // d = -a l + b e - c xi; s + d effective needs a <= s.l, c <= s.xi and
    // b >= a - s.l - s.e; the half-space gives b <= 3a + 2c + 6.
    const Int c_lo = ceil_div2(-3 * s.l - s.e - 6);
    if (c_lo > s.xi) continue;
    double volume = 0;
    for (Int c = c_lo; c <= s.xi; ++c) {
      const Int a_lo = ceil_div2(-s.l - s.e - 2 * c - 6);
      for (Int a = a_lo; a <= s.l; ++a) volume += static_cast<double>(2 * a + 2 * c + 6 + s.l + s.e + 1);
    }
    if (volume > 1e7) throw NonFiniteRegion("destabilizer search region too large for source " + cls_str(s));
    for (Int c = c_lo; c <= s.xi; ++c)
      for (Int a = ceil_div2(-s.l - s.e - 2 * c - 6); a <= s.l; ++a)
        for (Int b = a - s.l - s.e; b <= 3 * a + 2 * c + 6; ++b) {
          const DivClass d{-a, b, -c};
          if (!hoppe_region(a, b, c) || cohom_f(s + d).h0 <= 0)
            throw InternalDefect("destabilizer bounds admitted " + format_div(d));
          found.insert(d);
        }
  }
  return {found.begin(), found.end()};
}

StabilityReport verify_stability(const KernelBundlePresentation& pres) {
  StabilityReport rep;
  for (const auto& d : enumerate_destabilizer_candidates(pres)) {
    StabilityCheck chk{d, h0_twist(pres, d), 3 * (-d.l) + 2 * (-d.xi) + 6 == d.e};
    if (chk.h0 > 0) {
      rep.stable = false;
      if (!rep.destabilized) rep.destabilized = chk;
    }
    rep.checks.push_back(chk);
  }
  return rep;
}

AcmReport verify_acm(const KernelBundlePresentation& pres, Int window) {
  AcmReport rep;
  for (Int t = -window; t <= window; ++t) {
    AcmCell cell{t, h1_twist(pres, t * kH)};
    if (!cell.h1.exact) {
      rep.all_exact_zero = false;
      if (cell.h1.lo > 0) rep.pass = false;
      else rep.inconclusive.push_back(t);
    } else if (cell.h1.lo != 0) {
      rep.pass = false;
      rep.all_exact_zero = false;
    }
    rep.cells.push_back(std::move(cell));
  }
  return rep;
}

bool defect_gate(const CohomDefect& d) { return 2 * d.delta >= d.epsilon; }

EarnestReport verify_earnest(const KernelBundlePresentation& pres) {
  EarnestReport rep;
  rep.delta = h1_twist(pres, -kE);
  rep.epsilon = h1_twist(pres, -kE - kXi);
  rep.earnest = rep.delta.is_exact_zero();
  rep.gate_ok = rep.delta.exact && rep.epsilon.exact && defect_gate({rep.delta.lo, rep.epsilon.lo});
  return rep;
}

UlrichReport weakly_ulrich_window(const KernelBundlePresentation& pres, Int window) {
  require_self_dual(pres, "weakly_ulrich_window");
  UlrichReport rep;
  auto put = [&](int i, Int t, const TwistCohomResult& r) {
    UlrichCell cell{i, t, r.exact, r.lo, r.provenance};
    if (r.exact && r.lo != 0) rep.pass = false;
    if (!r.exact) {
      rep.all_decided = false;
      if (r.lo > 0) rep.pass = false;
    }
    rep.cells.push_back(std::move(cell));
  };
  // F = E(2h), so h^i(F(th)) = h^i(E(sh)) with s = t + 2.
  for (Int t = -window - 4; t <= window; ++t) {
    const Int s = t + 2;
    if (t <= -2) put(0, t, TwistCohomResult::Exact(h0_twist(pres, s * kH), "kernel of H^0(V) -> H^0(T)"));
    if (t != -1 && t != -2) put(1, t, h1_twist(pres, s * kH));
    if (t != -2 && t != -3) {
      auto r = h1_twist(pres, -s * kH);
      r.provenance = "h^1(E(-sh)) by duality; " + r.provenance;
      put(2, t, r);
    }
    if (t >= -2)
      put(3, t, TwistCohomResult::Exact(h0_twist(pres, -s * kH), "h^0(E(-sh)) by duality"));
  }
  return rep;
}

Int h0_on_line(const KernelBundlePresentation& pres, const std::array<Rational, 2>& base_point, Int t) {
  std::vector<Form> forms;
  std::vector<Int> src_deg;
  for (std::size_t i = 0; i < pres.sources.size(); ++i) {
    forms.push_back(restrict_form(pres.entries[i], base_point));
    src_deg.push_back(line_degree(pres.sources[i]));
  }
  if (forms_share_root(forms))
    throw SpecialLine("restricted map is not surjective on the line over [" + base_point[0].get_str() + ":" +
                      base_point[1].get_str() + "]");
  return line_h0_kernel(src_deg, line_degree(pres.target), forms, t);
}

LineSplitting restrict_to_line(const KernelBundlePresentation& pres, std::array<Rational, 2> base_point) {
  const std::array<std::array<Rational, 2>, 4> tries{
      {base_point, {Rational(0), Rational(1)}, {Rational(1), Rational(1)}, {Rational(1), Rational(-1)}}};
  std::string last;
  int attempts = 0;
  for (std::size_t i = 0; i < tries.size(); ++i) {
    const auto& bp = tries[i];
    if (std::find(tries.begin(), tries.begin() + static_cast<std::ptrdiff_t>(i), bp) != tries.begin() + static_cast<std::ptrdiff_t>(i))
      continue;
    ++attempts;
    try {
      LineSplitting out;
      out.base_point = bp;
      out.attempts = attempts;
      out.degree = line_degree(c1_of(pres));
      for (int k = 0; k < 3; ++k) out.h0_values[static_cast<std::size_t>(k)] = h0_on_line(pres, bp, k - 1);
      // E|_L is a subsheaf of (+) O(deg source), so h^0(E|_L(t)) = 0 for t < -max;
      // the first t with a section is -a.
      Int t = 0;
      for (const auto& s : pres.sources) t = std::min(t, -line_degree(s));
      while (h0_on_line(pres, bp, t) == 0) ++t;
      out.a = -t;
      out.b = out.degree - out.a;
      return out;
    } catch (const SpecialLine& e) {
      last = e.what();
    }
  }
  throw SpecialLine(last + " (after " + std::to_string(attempts) + " base points)");
}

ChiConsistency check_chi_consistency(const KernelBundlePresentation& pres, std::size_t trials, std::uint64_t seed) {
  require_self_dual(pres, "check_chi_consistency");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-3, 3);
  const KClass k = pres.kclass();
  ChiConsistency out;
  for (std::size_t n = 0; n < trials; ++n) {
    const DivClass d{coord(rng), coord(rng), coord(rng)};
    ++out.trials;
    const auto h1 = h1_twist(pres, d);
    const auto h2 = h1_twist(pres, -d);
    if (!h1.exact || !h2.exact) continue;
    ++out.determined;
    const Int chi = h0_twist(pres, d) - h1.lo + h2.lo - h0_twist(pres, -d);
    if (chi != chi_twist(k, d)) {
      ++out.mismatches;
      if (!out.first_mismatch) out.first_mismatch = d;
    }
  }
  return out;
}

}  // namespace finst
