#include "salemkit/salem.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "salemkit/error.hpp"

namespace salemkit::salem {

std::string to_string(Reason r) {
  switch (r) {
    case Reason::kSalem: return "salem";
    case Reason::kZeroPolynomial: return "zero polynomial";
    case Reason::kConstant: return "constant polynomial";
    case Reason::kNotMonic: return "not monic";
    case Reason::kNotReciprocal: return "not reciprocal";
    case Reason::kCyclotomicOnly: return "all roots are roots of unity (lambda = 1)";
    case Reason::kCyclotomicFactor: return "has a cyclotomic factor";
    case Reason::kComplexOffCircle: return "non-real roots off the unit circle";
    case Reason::kNegativeRealRoot: return "real root below -1";
    case Reason::kTooManyOffCircle: return "more than one real root outside the unit disk";
  }
  return "unknown";
}

namespace {

bool palindromic(const IntPoly& p) {
  const auto& c = p.coeffs();
  for (std::size_t i = 0, j = c.size() - 1; i < j; ++i, --j)
    if (c[i] != c[j]) return false;
  return true;
}

// Everything except the lambda bracket.
SalemClassification classify_structure(const IntPoly& s) {
  SalemClassification out;
  out.input = s;
  out.core = s;
  out.degree = s.degree();
  if (s.is_zero()) {
    out.reason = Reason::kZeroPolynomial;
    return out;
  }
  out.monic = s.leading() == 1;
  out.reciprocal = palindromic(s);
  if (s.degree() == 0) {
    out.reason = Reason::kConstant;
    return out;
  }
  if (!out.monic) {
    out.reason = Reason::kNotMonic;
    return out;
  }
  if (!out.reciprocal) {
    out.reason = Reason::kNotReciprocal;
    return out;
  }
  auto split = strip_cyclotomic_factors(s);
  out.core = split.core;
  out.cyclotomic_factors = split.factors;
  out.locations = root_locations(s);
  if (out.core.degree() == 0) {
    out.reason = Reason::kCyclotomicOnly;
    return out;
  }
  if (!out.cyclotomic_factors.empty()) {
    out.reason = Reason::kCyclotomicFactor;
    return out;
  }
  const auto& loc = out.locations;
  if (loc.n_complex_off_circle > 0) {
    out.reason = Reason::kComplexOffCircle;
  } else if (loc.n_real_lt_minus1 > 0) {
    out.reason = Reason::kNegativeRealRoot;
  } else if (loc.n_real_gt1 > 1) {
    out.reason = Reason::kTooManyOffCircle;
  } else if (loc.n_real_gt1 == 0) {
    // All roots on the circle makes every root a root of unity (Kronecker).
    throw_internal("polynomial with all roots on the unit circle survived cyclotomic stripping");
  } else {
    out.is_salem = true;
    out.reason = Reason::kSalem;
  }
  return out;
}

unsigned bits_for(const Rational& tol) {
  // Smallest b with 2^-b <= tol.
  unsigned b = 0;
  Rational step = 1;
  while (step > tol) {
    step /= 2;
    ++b;
  }
  return b;
}

// lambda bracket from the unique root of r in (2, inf).
RatInterval lambda_from_trace(const IntPoly& r, const Rational& tol) {
  if (sturm_count(r, Endpoint::at(2), Endpoint::pos_inf()) != 1) {
    throw_precondition("trace polynomial needs exactly one root above 2");
  }
  const Rational upper = std::max(root_bound(r), Rational(3));
  Rational r_tol = tol / 8;
  for (int attempt = 0; attempt < 64; ++attempt) {
    const auto roots = isolate_real_roots(r, Rational(2), upper, r_tol);
    if (roots.size() != 1) throw_internal("isolation disagrees with the Sturm count above 2");
    const RatInterval& rb = roots.front();
    const unsigned bits = bits_for(r_tol) + 1;
    const RatInterval s_lo = sqrt_bracket(rb.lo * rb.lo - 4, bits);
    const RatInterval s_hi = sqrt_bracket(rb.hi * rb.hi - 4, bits);
    RatInterval lam{(rb.lo + s_lo.lo) / 2, (rb.hi + s_hi.hi) / 2};
    if (lam.width() <= tol) return lam;
    r_tol /= 64;
  }
  throw_internal("lambda bracket failed to converge");
}

}  // namespace

RatInterval salem_lambda(const IntPoly& s, const Rational& tol) {
  if (tol <= 0) throw_input("tolerance must be positive");
  const auto cls = classify_structure(s);
  if (!cls.is_salem) throw_precondition("not a Salem polynomial: " + to_string(cls.reason));
  RatInterval lam = lambda_from_trace(trace_poly(s), tol);
  if (sturm_count(s, Endpoint::at(lam.lo), Endpoint::at(lam.hi)) != 1 ||
      eval(s, lam.lo) * eval(s, lam.hi) > 0) {
    throw_internal("lambda bracket does not isolate a root of S");
  }
  return lam;
}

SalemClassification classify_salem(const IntPoly& s, const Rational& tol) {
  SalemClassification out = classify_structure(s);
  if (out.is_salem) out.lambda = salem_lambda(s, tol);
  return out;
}

Entropy entropy(const IntPoly& s, const Rational& tol) {
  Entropy e;
  e.lambda = salem_lambda(s, tol);
  const double mid = e.lambda.midpoint().get_d();
  e.value = std::log(mid);
  // |log x - log y| <= |x - y| / min(x, y), plus rounding of the conversion and log.
  const double half_width = Rational(e.lambda.width() / 2).get_d();
  const double lo = e.lambda.lo.get_d();
  e.error_bound = half_width / lo + 4 * std::numeric_limits<double>::epsilon() * std::fabs(e.value) +
                  std::numeric_limits<double>::denorm_min();
  return e;
}

Entropy entropy_or_zero(const IntPoly& s, const Rational& tol) {
  const auto cls = classify_structure(s);
  if (cls.reason == Reason::kCyclotomicOnly) return {0.0, 0.0, {Rational(1), Rational(1)}};
  return entropy(s, tol);
}

H2Spectrum h2_spectrum(const IntPoly& q, const Rational& tol) {
  if (q.is_zero() || q.degree() % 2 != 0 || !is_monic_reciprocal(q)) {
    throw_input("H2 spectrum needs a monic reciprocal polynomial of even degree");
  }
  const auto loc = root_locations(q);
  if (loc.n_real_gt1 != 1 || loc.n_real_lt_minus1 != 0 || loc.n_complex_off_circle != 0) {
    throw_precondition("H2 spectrum needs exactly one real root pair off the unit circle, both positive");
  }
  const IntPoly r = trace_poly(q);
  H2Spectrum out;
  for (const auto& f : squarefree_decomposition(r)) {
    if (sturm_count(f.factor, Endpoint::at(2), Endpoint::pos_inf()) == 1) out.lambda = lambda_from_trace(f.factor, tol);
    for (const auto& iv : isolate_real_roots(f.factor, Rational(-2), Rational(2), tol))
      for (unsigned k = 0; k < f.multiplicity; ++k) out.unit_eigenvalue_traces.push_back(iv);
  }
  for (int edge : {2, -2}) {
    const unsigned mult = root_multiplicity(r, edge);
    for (unsigned k = 0; k < mult; ++k) out.unit_eigenvalue_traces.push_back({Rational(edge), Rational(edge)});
  }
  std::sort(out.unit_eigenvalue_traces.begin(), out.unit_eigenvalue_traces.end(),
            [](const RatInterval& a, const RatInterval& b) { return a.lo < b.lo; });
  out.lambda_inv = {1 / out.lambda.hi, 1 / out.lambda.lo};
  return out;
}

std::vector<SalemClassification> enumerate_salem(int degree, int bound, unsigned workers) {
  if (degree < 2 || degree > 22 || degree % 2 != 0) throw_input("enumeration degree must be even, 2..22");
  if (bound < 1) throw_input("enumeration bound must be at least 1");
  const int half = degree / 2;
  const int width = 2 * bound + 1;

  // Work units: one per value of the t^1 coefficient.
  std::vector<std::vector<SalemClassification>> units(static_cast<std::size_t>(width));
  auto run_unit = [&](int unit) {
    std::vector<int> free(static_cast<std::size_t>(half), -bound);
    free[0] = unit - bound;
    std::vector<SalemClassification> found;
    while (true) {
      std::vector<Integer> c(static_cast<std::size_t>(degree + 1), 0);
      c[0] = c[static_cast<std::size_t>(degree)] = 1;
      for (int i = 1; i <= half; ++i) {
        c[static_cast<std::size_t>(i)] = free[static_cast<std::size_t>(i - 1)];
        c[static_cast<std::size_t>(degree - i)] = free[static_cast<std::size_t>(i - 1)];
      }
      auto cls = classify_salem(IntPoly(std::move(c)));
      if (cls.is_salem) found.push_back(std::move(cls));
      // Odometer over free[1..half-1].
      int pos = half - 1;
      while (pos >= 1 && free[static_cast<std::size_t>(pos)] == bound) {
        free[static_cast<std::size_t>(pos)] = -bound;
        --pos;
      }
      if (pos < 1) break;
      ++free[static_cast<std::size_t>(pos)];
    }
    units[static_cast<std::size_t>(unit)] = std::move(found);
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(width));
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> failures(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int u = next++; u < width; u = next++) run_unit(u);
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& f : failures)
    if (f) std::rethrow_exception(f);

  std::vector<SalemClassification> all;
  for (auto& u : units)
    for (auto& c : u) all.push_back(std::move(c));
  std::sort(all.begin(), all.end(), [](const SalemClassification& a, const SalemClassification& b) {
    const Rational ma = a.lambda->midpoint();
    const Rational mb = b.lambda->midpoint();
    if (ma != mb) return ma < mb;
    return lex_less(a.input, b.input);
  });
  return all;
}

}  // namespace salemkit::salem
