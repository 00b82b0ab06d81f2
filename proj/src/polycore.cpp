#include "salemkit/polycore.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "salemkit/error.hpp"

namespace salemkit {

namespace {

int sign_of(const Integer& v) { return mpz_sgn(v.get_mpz_t()); }

// Sign of p(num/den) for den > 0, via the homogenized integer Horner scheme.
int sign_at(const IntPoly& p, const Rational& x) {
  if (p.is_zero()) return 0;
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  Integer acc = p.leading();
  Integer den_pow = 1;
  for (int i = p.degree() - 1; i >= 0; --i) {
    den_pow *= den;
    acc = acc * num + p.coeffs()[static_cast<std::size_t>(i)] * den_pow;
  }
  return sign_of(acc);
}

int sign_at(const IntPoly& p, const Endpoint& e) {
  if (p.is_zero()) return 0;
  switch (e.kind) {
    case Endpoint::Kind::kPosInf:
      return sign_of(p.leading());
    case Endpoint::Kind::kNegInf:
      return (p.degree() % 2 == 0) ? sign_of(p.leading()) : -sign_of(p.leading());
    case Endpoint::Kind::kFinite:
      break;
  }
  return sign_at(p, e.value);
}

unsigned sign_variations(const std::vector<IntPoly>& chain, const Endpoint& e) {
  unsigned changes = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = sign_at(q, e);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

bool before(const Endpoint& a, const Endpoint& b) {
  using K = Endpoint::Kind;
  if (a.kind == K::kNegInf) return b.kind != K::kNegInf;
  if (a.kind == K::kPosInf) return false;
  if (b.kind == K::kPosInf) return true;
  if (b.kind == K::kNegInf) return false;
  return a.value < b.value;
}

}  // namespace

IntPoly::IntPoly(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::from_descending(const std::vector<Integer>& descending) {
  return IntPoly(std::vector<Integer>(descending.rbegin(), descending.rend()));
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t exponent) {
  std::vector<Integer> v(exponent + 1, 0);
  v[exponent] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::linear_root(const Integer& root) { return IntPoly(std::vector<Integer>{-root, 1}); }

std::vector<Integer> IntPoly::descending() const { return {coeffs_.rbegin(), coeffs_.rend()}; }

Integer IntPoly::operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

const Integer& IntPoly::leading() const {
  if (coeffs_.empty()) throw_precondition("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

bool lex_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(), b.coeffs_.end());
}

IntPoly pow(const IntPoly& p, unsigned e) {
  IntPoly result{1};
  IntPoly base = p;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

IntPoly derivative(const IntPoly& p) {
  if (p.degree() <= 0) return {};
  std::vector<Integer> d(static_cast<std::size_t>(p.degree()));
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) d[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

IntPoly reversal(const IntPoly& p) {
  auto c = p.coeffs();
  std::reverse(c.begin(), c.end());
  return IntPoly(std::move(c));
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<Integer> c = p.coeffs();
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(c));
}

DivResult divmod_monic(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw_precondition("division by the zero polynomial");
  std::vector<Integer> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {IntPoly{}, a};
  std::vector<Integer> quot(static_cast<std::size_t>(a.degree() - db + 1), 0);
  const Integer& lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    Integer& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) {
      throw_precondition("division is not exact over the integers");
    }
    Integer q = top / lb;
    quot[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw_precondition("division by the zero polynomial");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Integer> rem = a.coeffs();
  const int db = b.degree();
  std::vector<Integer> quot(static_cast<std::size_t>(a.degree() - db + 1), 0);
  const Integer& lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    Integer& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    Integer q = top / lb;
    quot[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return IntPoly(std::move(quot));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw_precondition("pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  const int db = b.degree();
  const Integer& lb = b.leading();
  std::vector<Integer> r = a.coeffs();
  // Each of the delta+1 steps multiplies everything by lb.
  for (int i = a.degree(); i >= db; --i) {
    Integer top = r[static_cast<std::size_t>(i)];
    for (auto& x : r) x *= lb;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= top * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return IntPoly(std::move(r));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  IntPoly x = primitive_part(a);
  IntPoly y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  return primitive_part(x);
}

std::vector<SquarefreeFactor> squarefree_decomposition(const IntPoly& p) {
  std::vector<SquarefreeFactor> out;
  if (p.degree() <= 0) return out;
  const IntPoly f = primitive_part(p);
  const IntPoly df = derivative(f);
  const IntPoly b = gcd(f, df);
  IntPoly c = *divide_exact(f, b);
  IntPoly d = *divide_exact(df, b) - derivative(c);
  unsigned i = 1;
  while (c.degree() > 0) {
    IntPoly a = gcd(c, d);
    c = *divide_exact(c, a);
    d = d.is_zero() ? IntPoly{} : *divide_exact(d, a);
    d -= derivative(c);
    if (a.degree() > 0) out.push_back({a, i});
    ++i;
  }
  return out;
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.degree() <= 0) return primitive_part(p);
  const IntPoly f = primitive_part(p);
  return *divide_exact(f, gcd(f, derivative(f)));
}

Rational eval(const IntPoly& p, const Rational& x) {
  Rational acc = 0;
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coeffs()[static_cast<std::size_t>(i)];
  return acc;
}

Integer eval(const IntPoly& p, const Integer& x) {
  Integer acc = 0;
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coeffs()[static_cast<std::size_t>(i)];
  return acc;
}

unsigned root_multiplicity(const IntPoly& p, const Integer& x) {
  if (p.is_zero()) throw_precondition("root multiplicity in the zero polynomial");
  const IntPoly lin = IntPoly::linear_root(x);
  unsigned m = 0;
  IntPoly q = p;
  while (q.degree() > 0 && eval(q, x) == 0) {
    q = divmod_monic(q, lin).quotient;
    ++m;
  }
  return m;
}

bool is_monic_reciprocal(const IntPoly& p) {
  if (p.is_zero()) throw_input("reciprocity test on the zero polynomial");
  if (p.leading() != 1) return false;
  const auto& c = p.coeffs();
  const std::size_t d = c.size() - 1;
  for (std::size_t i = 0; i <= d / 2; ++i)
    if (c[i] != c[d - i]) return false;
  return true;
}

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      while (n % q == 0) n /= q;
      result -= result / q;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<unsigned> cyclotomic_indices_up_to_degree(unsigned degree) {
  std::vector<unsigned> out;
  // phi(n) >= sqrt(n/2), so phi(n) <= degree forces n <= 2 degree^2.
  const unsigned long limit = std::max<unsigned long>(2, 2ul * degree * degree);
  for (unsigned long n = 1; n <= limit; ++n)
    if (euler_phi(n) <= degree) out.push_back(static_cast<unsigned>(n));
  return out;
}

namespace {

IntPoly compute_cyclotomic(unsigned n, std::map<unsigned, IntPoly>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  IntPoly num = IntPoly::monomial(1, n) - IntPoly{1};
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = divmod_monic(num, compute_cyclotomic(d, memo)).quotient;
  }
  memo.emplace(n, num);
  return num;
}

// Phi_n for every n with phi(n) <= 22, built once.
const std::map<unsigned, IntPoly>& cyclotomic_table() {
  static const std::map<unsigned, IntPoly> table = [] {
    std::map<unsigned, IntPoly> memo;
    std::map<unsigned, IntPoly> out;
    for (unsigned n : cyclotomic_indices_up_to_degree(22)) out.emplace(n, compute_cyclotomic(n, memo));
    return out;
  }();
  return table;
}

}  // namespace

IntPoly cyclotomic(unsigned n) {
  if (n == 0) throw_input("cyclotomic index must be positive");
  const auto& table = cyclotomic_table();
  if (auto it = table.find(n); it != table.end()) return it->second;
  std::map<unsigned, IntPoly> memo;
  return compute_cyclotomic(n, memo);
}

CyclotomicSplit strip_cyclotomic_factors(const IntPoly& p) {
  if (p.is_zero()) throw_input("cyclotomic stripping of the zero polynomial");
  CyclotomicSplit out{p, {}};
  if (p.degree() <= 0) return out;
  for (unsigned n : cyclotomic_indices_up_to_degree(static_cast<unsigned>(p.degree()))) {
    if (static_cast<int>(euler_phi(n)) > out.core.degree()) continue;
    const IntPoly phi = cyclotomic(n);
    unsigned mult = 0;
    while (out.core.degree() >= phi.degree()) {
      DivResult qr = divmod_monic(out.core, phi);
      if (!qr.remainder.is_zero()) break;
      out.core = std::move(qr.quotient);
      ++mult;
    }
    if (mult > 0) out.factors.push_back({n, mult});
  }
  return out;
}

IntPoly trace_poly(const IntPoly& s) {
  if (s.is_zero() || s.degree() % 2 != 0) throw_input("trace polynomial needs an even-degree polynomial");
  if (!is_monic_reciprocal(s)) throw_input("trace polynomial needs a monic reciprocal polynomial");
  const std::size_t h = static_cast<std::size_t>(s.degree() / 2);
  // t^k + t^-k = V_k(t + 1/t) with V_0 = 2, V_1 = x, V_{k+1} = x V_k - V_{k-1}.
  const IntPoly x{0, 1};
  IntPoly v_prev{2};
  IntPoly v_cur = x;
  IntPoly r = IntPoly::constant(s.coeffs()[h]);
  for (std::size_t k = 1; k <= h; ++k) {
    r += v_cur * s.coeffs()[h + k];
    IntPoly next = x * v_cur - v_prev;
    v_prev = std::move(v_cur);
    v_cur = std::move(next);
  }
  if (trace_expand(r) != s) throw_internal("trace polynomial failed to re-expand to its input");
  return r;
}

IntPoly trace_expand(const IntPoly& r) {
  if (r.is_zero()) return {};
  const std::size_t deg = static_cast<std::size_t>(r.degree());
  const IntPoly t2p1{1, 0, 1};
  IntPoly out;
  IntPoly power{1};  // (t^2 + 1)^i
  for (std::size_t i = 0; i <= deg; ++i) {
    if (r.coeffs()[i] != 0) out += IntPoly::monomial(r.coeffs()[i], deg - i) * power;
    power *= t2p1;
  }
  return out;
}

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
  std::vector<IntPoly> chain;
  if (p.degree() <= 0) {
    if (!p.is_zero()) chain.push_back(p);
    return chain;
  }
  chain.push_back(squarefree_part(p));
  chain.push_back(derivative(chain.back()));
  while (chain.back().degree() > 0) {
    const IntPoly& a = chain[chain.size() - 2];
    const IntPoly& b = chain.back();
    IntPoly r = pseudo_remainder(a, b);
    // prem multiplies by lc(b)^(delta+1); undo a negative factor so signs stay Sturm.
    const int delta = a.degree() - b.degree();
    if (b.leading() < 0 && (delta + 1) % 2 != 0) r = -r;
    if (r.is_zero()) break;
    Integer g = content(r);
    std::vector<Integer> c = r.coeffs();
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    chain.push_back(-IntPoly(std::move(c)));
  }
  return chain;
}

unsigned sturm_count(const IntPoly& p, const Endpoint& lo, const Endpoint& hi) {
  if (p.is_zero()) throw_input("root counting on the zero polynomial");
  if (p.degree() <= 0 || !before(lo, hi)) return 0;
  const auto chain = sturm_chain(p);
  // V(a) - V(b) counts roots in (a, b]; drop b when it is itself a root.
  const unsigned va = sign_variations(chain, lo);
  const unsigned vb = sign_variations(chain, hi);
  unsigned count = va - vb;
  if (hi.kind == Endpoint::Kind::kFinite && sign_at(chain.front(), hi.value) == 0) --count;
  return count;
}

unsigned count_roots_with_multiplicity(const IntPoly& p, const Endpoint& lo, const Endpoint& hi) {
  unsigned total = 0;
  for (const auto& f : squarefree_decomposition(p)) total += f.multiplicity * sturm_count(f.factor, lo, hi);
  return total;
}

RootLocationReport root_locations(const IntPoly& s) {
  if (s.is_zero() || !is_monic_reciprocal(s)) throw_input("root locations need a monic reciprocal polynomial");
  RootLocationReport rep;
  if (s.degree() == 0) return rep;
  rep.at_one = root_multiplicity(s, 1);
  rep.at_minus_one = root_multiplicity(s, -1);
  IntPoly rest = s;
  rest = divmod_monic(rest, pow(IntPoly{-1, 1}, rep.at_one)).quotient;
  rest = divmod_monic(rest, pow(IntPoly{1, 1}, rep.at_minus_one)).quotient;
  if (rest.degree() % 2 != 0 || !is_monic_reciprocal(rest)) {
    throw_internal("deflating t = +-1 from a reciprocal polynomial left a non-reciprocal part");
  }
  if (rest.degree() == 0) return rep;

  const IntPoly r = trace_poly(rest);
  const unsigned above = count_roots_with_multiplicity(r, Endpoint::at(2), Endpoint::pos_inf());
  const unsigned below = count_roots_with_multiplicity(r, Endpoint::neg_inf(), Endpoint::at(-2));
  const unsigned inside = count_roots_with_multiplicity(r, Endpoint::at(-2), Endpoint::at(2));
  const unsigned real_total = above + below + inside;
  const unsigned deg_r = static_cast<unsigned>(r.degree());
  if (real_total > deg_r) throw_internal("root counts exceed the trace polynomial degree");
  rep.n_real_gt1 = rep.n_real_0_1 = above;
  rep.n_real_lt_minus1 = rep.n_real_minus1_0 = below;
  rep.n_on_circle = 2 * inside;
  rep.n_complex_off_circle = 2 * (deg_r - real_total);
  return rep;
}

RatInterval refine_root(const IntPoly& p, const RatInterval& bracket, const Rational& tol) {
  if (tol <= 0) throw_input("refinement tolerance must be positive");
  if (bracket.lo > bracket.hi) throw_input("bracket endpoints out of order");
  RatInterval iv = bracket;
  int s_lo = sign_at(p, iv.lo);
  const int s_hi = sign_at(p, iv.hi);
  if (s_lo == 0) return {iv.lo, iv.lo};
  if (s_hi == 0) return {iv.hi, iv.hi};
  if (s_lo == s_hi) throw_precondition("no sign change on the bracket");
  while (iv.width() > tol) {
    Rational mid = iv.midpoint();
    const int s_mid = sign_at(p, mid);
    if (s_mid == 0) return {mid, mid};
    if (s_mid == s_lo) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
  return iv;
}

std::vector<RatInterval> isolate_real_roots(const IntPoly& p, const Rational& lo, const Rational& hi,
                                            const Rational& tol) {
  std::vector<RatInterval> out;
  if (p.degree() <= 0 || lo >= hi) return out;
  const IntPoly f = squarefree_part(p);
  // Work stack of open intervals known to contain `count` roots.
  struct Item {
    Rational a, b;
    unsigned count;
  };
  std::vector<Item> stack;
  const unsigned total = sturm_count(f, Endpoint::at(lo), Endpoint::at(hi));
  if (total > 0) stack.push_back({lo, hi, total});
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    const int sa = sign_at(f, it.a);
    const int sb = sign_at(f, it.b);
    if (it.count == 1 && sa != 0 && sb != 0) {
      out.push_back(refine_root(f, {it.a, it.b}, tol));
      continue;
    }
    Rational mid = (it.a + it.b) / 2;
    if (sign_at(f, mid) == 0) out.push_back({mid, mid});
    const unsigned left = sturm_count(f, Endpoint::at(it.a), Endpoint::at(mid));
    const unsigned right = sturm_count(f, Endpoint::at(mid), Endpoint::at(it.b));
    if (left > 0) stack.push_back({it.a, mid, left});
    if (right > 0) stack.push_back({mid, it.b, right});
  }
  std::sort(out.begin(), out.end(), [](const RatInterval& x, const RatInterval& y) { return x.lo < y.lo; });
  return out;
}

RatInterval sqrt_bracket(const Rational& q, unsigned bits) {
  if (q < 0) throw_input("square root of a negative rational");
  Integer scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), 2 * (bits + 1));
  const Rational scaled = q * scale;
  Integer fl, ce;
  mpz_fdiv_q(fl.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  mpz_cdiv_q(ce.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Integer root_lo, root_hi, rem;
  mpz_sqrtrem(root_lo.get_mpz_t(), rem.get_mpz_t(), fl.get_mpz_t());
  Integer denom = 1;
  mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), bits + 1);
  if (fl == ce && rem == 0) {
    Rational exact(root_lo, denom);
    exact.canonicalize();
    return {exact, exact};
  }
  mpz_sqrt(root_hi.get_mpz_t(), ce.get_mpz_t());
  root_hi += 1;
  Rational a(root_lo, denom), b(root_hi, denom);
  a.canonicalize();
  b.canonicalize();
  return {a, b};
}

Rational root_bound(const IntPoly& p) {
  if (p.is_zero()) throw_input("root bound of the zero polynomial");
  Rational best = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r(abs(p.coeffs()[static_cast<std::size_t>(i)]), abs(p.leading()));
    r.canonicalize();
    best = std::max(best, r);
  }
  return best + 1;
}

Rational default_tolerance() {
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, 12);
  return Rational(Integer(1), den);
}

std::string to_string(const IntPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Integer& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Integer mag = abs(c);
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
    first = false;
  }
  return os.str();
}

}  // namespace salemkit
