#include "azulink/linkgroup.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace azulink {

namespace {

TriPoly mono(long c, int ex, int ey, int ez) {
  return TriPoly::monomial(Rational(c), ex, ey, ez);
}

// z^3 - xyz^2 + (x^2 + y^2 - 2)z - xy
TriPoly poly_w512() {
  return mono(1, 0, 0, 3) + mono(-1, 1, 1, 2) + mono(1, 2, 0, 1) +
         mono(1, 0, 2, 1) + mono(-2, 0, 0, 1) + mono(-1, 1, 1, 0);
}

// z^4 - xyz^3 + (x^2 + y^2 - 3)z^2 - xyz + 1
TriPoly poly_l622() {
  return mono(1, 0, 0, 4) + mono(-1, 1, 1, 3) + mono(1, 2, 0, 2) +
         mono(1, 0, 2, 2) + mono(-3, 0, 0, 2) + mono(-1, 1, 1, 1) +
         mono(1, 0, 0, 0);
}

// z^3 - xyz^2 + (x^2 + y^2 - 1)z - xy
TriPoly poly_l632() {
  return mono(1, 0, 0, 3) + mono(-1, 1, 1, 2) + mono(1, 2, 0, 1) +
         mono(1, 0, 2, 1) + mono(-1, 0, 0, 1) + mono(-1, 1, 1, 0);
}

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kUnimodularTol = 1e-10;
constexpr double kParabolicTol = 1e-12;
constexpr double kRootTol = 1e-12;
constexpr long kRootMaxSweeps = 200;

}  // namespace

const std::vector<LinkTag>& all_tags() {
  static const std::vector<LinkTag> tags{LinkTag::W512, LinkTag::L622,
                                         LinkTag::L632};
  return tags;
}

std::string tag_name(LinkTag tag) {
  switch (tag) {
    case LinkTag::W512: return "W512";
    case LinkTag::L622: return "L622";
    case LinkTag::L632: return "L632";
  }
  throw std::logic_error("unknown tag");
}

std::optional<LinkTag> tag_from_name(const std::string& name) {
  auto lower = [](std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
  };
  for (LinkTag t : all_tags())
    if (lower(name) == lower(tag_name(t))) return t;
  return std::nullopt;
}

std::string Word::str() const {
  std::string s;
  for (const Letter& l : letters)
    s += (l.exp > 0) ? l.gen : static_cast<char>(l.gen - 'a' + 'A');
  return s;
}

Word schubert_word(long alpha, long beta) {
  if (alpha < 2) throw std::invalid_argument("torsion must be at least 2");
  if (beta <= 0 || beta >= alpha)
    throw std::invalid_argument("crossing number must satisfy 0 < beta < alpha");
  if (beta % 2 == 0)
    throw std::invalid_argument("crossing number must be odd");
  Word w;
  for (long i = 1; i <= alpha - 1; ++i) {
    char gen = (i % 2 == 1) ? 'b' : 'a';
    int exp = (i * beta / alpha) % 2 == 0 ? 1 : -1;
    w.letters.push_back({gen, exp});
  }
  return w;
}

const LinkCase& case_data(LinkTag tag) {
  static const LinkCase w512{LinkTag::W512, 8, 3, poly_w512(),
                             schubert_word(8, 3)};
  static const LinkCase l622{LinkTag::L622, 10, 3, poly_l622(),
                             schubert_word(10, 3)};
  static const LinkCase l632{LinkTag::L632, 12, 5, poly_l632(),
                             schubert_word(12, 5)};
  switch (tag) {
    case LinkTag::W512: return w512;
    case LinkTag::L622: return l622;
    case LinkTag::L632: return l632;
  }
  throw std::logic_error("unknown tag");
}

SymbolPair hilbert_symbol_pair(LinkTag) {
  return {mono(1, 2, 0, 0) + mono(-4, 0, 0, 0),
          mono(1, 2, 0, 0) + mono(1, 0, 2, 0) + mono(1, 0, 0, 2) +
              mono(-1, 1, 1, 1) + mono(-4, 0, 0, 0)};
}

double max_abs(const CMat& m) {
  return std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)});
}

CMat word_matrix(const Word& w, const CMat& A, const CMat& B) {
  if (std::abs(A.det() - 1.0) > kUnimodularTol ||
      std::abs(B.det() - 1.0) > kUnimodularTol)
    throw std::invalid_argument("word_matrix needs unimodular matrices");
  const CMat Ai = A.adjugate(), Bi = B.adjugate();
  CMat m = CMat::identity();
  for (const Letter& l : w.letters) {
    const CMat& step = (l.gen == 'a') ? (l.exp > 0 ? A : Ai)
                                      : (l.exp > 0 ? B : Bi);
    if (l.gen != 'a' && l.gen != 'b')
      throw std::invalid_argument("word letter outside a, b");
    m = m * step;
  }
  return m;
}

double relator_residual(const LinkCase& lc, const CMat& A, const CMat& B) {
  CMat W = word_matrix(lc.word, A, B);
  return max_abs(A * W - W * A);
}

std::pair<CMat, CMat> lift_character(Cplx x, Cplx y, Cplx z) {
  if (std::abs(std::abs(x) - 2.0) < kParabolicTol ||
      std::abs(std::abs(y) - 2.0) < kParabolicTol)
    throw std::invalid_argument("parabolic trace: cannot lift");
  Cplx p = (x + std::sqrt(x * x - 4.0)) / 2.0;
  Cplx q = (y + std::sqrt(y * y - 4.0)) / 2.0;
  Cplx r = z - p * q - 1.0 / (p * q);
  CMat A{p, 1.0, 0.0, 1.0 / p};
  CMat B{q, 0.0, r, 1.0 / q};
  return {A, B};
}

RootSearch all_roots(std::vector<Cplx> coeffs, std::mt19937_64& rng) {
  while (!coeffs.empty() && std::abs(coeffs.back()) < 1e-13) coeffs.pop_back();
  if (coeffs.size() < 2)
    throw std::invalid_argument("root search needs degree >= 1");
  size_t n = coeffs.size() - 1;
  Cplx lead = coeffs.back();
  for (Cplx& c : coeffs) c /= lead;
  auto eval = [&coeffs](Cplx v) {
    Cplx acc = 0.0;
    for (size_t i = coeffs.size(); i-- > 0;) acc = acc * v + coeffs[i];
    return acc;
  };
  std::vector<Cplx> roots(n);
  Cplx seed_pt(0.4, 0.9);
  Cplx powv = 1.0;
  for (size_t k = 0; k < n; ++k) {
    powv *= seed_pt;
    roots[k] = powv;
  }
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  long since_improvement = 0;
  double best = std::numeric_limits<double>::infinity();
  for (long sweep = 1; sweep <= kRootMaxSweeps; ++sweep) {
    double delta = 0.0;
    for (size_t k = 0; k < n; ++k) {
      Cplx denom = 1.0;
      for (size_t j = 0; j < n; ++j)
        if (j != k) denom *= roots[k] - roots[j];
      if (std::abs(denom) < 1e-300) {
        denom = Cplx(1e-12 * unit(rng), 1e-12 * unit(rng));
      }
      Cplx step = eval(roots[k]) / denom;
      roots[k] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < kRootTol) return {true, roots, sweep};
    if (delta < best) {
      best = delta;
      since_improvement = 0;
    } else if (++since_improvement >= 30) {
      for (Cplx& r : roots) r += Cplx(1e-3 * unit(rng), 1e-3 * unit(rng));
      since_improvement = 0;
      best = std::numeric_limits<double>::infinity();
    }
  }
  return {false, roots, kRootMaxSweeps};
}

ValidationReport sample_validate(const LinkCase& lc, long n, double tol,
                                 unsigned long seed) {
  if (n < 1) throw std::invalid_argument("need at least one sample");
  ValidationReport rep{0.0, {}, n, false};
  std::vector<TriPoly> zcoeffs = lc.canonical_poly.coeffs_in(2);
  for (long i = 0; i < n; ++i) {
    // Each sample owns its generator, so runs are reproducible and samples
    // independent of evaluation order.
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + 0xD1B54A32D192ED03ull +
                        static_cast<unsigned long>(i));
    std::uniform_real_distribution<double> mod_dist(0.5, 3.0);
    std::uniform_real_distribution<double> arg_dist(0.0, kTwoPi);
    auto draw = [&]() {
      double m = mod_dist(rng);
      while (std::abs(m - 2.0) <= 0.05) m = mod_dist(rng);
      double t = arg_dist(rng);
      return Cplx(m * std::cos(t), m * std::sin(t));
    };
    Cplx x = draw(), y = draw();
    std::vector<Cplx> poly;
    poly.reserve(zcoeffs.size());
    for (const TriPoly& c : zcoeffs)
      poly.push_back(c.eval_complex(x, y, 0.0));
    RootSearch rs = all_roots(poly, rng);
    if (!rs.converged) {
      rep.failures.push_back("sample " + std::to_string(i) +
                             ": root finder did not converge");
      continue;
    }
    for (Cplx z : rs.roots) {
      auto [A, B] = lift_character(x, y, z);
      rep.max_residual =
          std::max(rep.max_residual, relator_residual(lc, A, B));
    }
  }
  rep.ok = rep.failures.empty() && rep.max_residual < tol;
  return rep;
}

}  // namespace azulink
