#include "arcnest/ratfunc.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "arcnest/errors.hpp"

namespace arcnest {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

// ---- word-size modular arithmetic -----------------------------------------

using u64 = std::uint64_t;

u64 mul_mod(u64 a, u64 b, u64 p) { return (a * b) % p; }

u64 pow_mod(u64 base, u64 e, u64 p) {
  u64 r = 1;
  base %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

bool is_prime_u32(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Primes below 2^31, descending; products stay below 2^62.
class PrimeSource {
 public:
  u64 next() {
    while (!is_prime_u32(--candidate_)) {
    }
    return candidate_;
  }

 private:
  u64 candidate_ = (u64{1} << 31);
};

// Characteristic polynomial det(tI - A) mod p, ascending coefficients
// (length n + 1, monic). Hessenberg reduction followed by the standard
// three-term recurrence.
std::vector<u64> charpoly_mod(const AdjacencyMatrix& a, u64 p) {
  const std::size_t n = a.size();
  std::vector<std::vector<u64>> h(n, std::vector<u64>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t v = a[i][j] % static_cast<std::int64_t>(p);
      h[i][j] = static_cast<u64>(v < 0 ? v + static_cast<std::int64_t>(p) : v);
    }

  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && h[piv][m - 1] == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      std::swap(h[piv], h[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][piv], h[r][m]);
    }
    const u64 inv = inv_mod(h[m][m - 1], p);
    for (std::size_t i = m + 1; i < n; ++i) {
      if (h[i][m - 1] == 0) continue;
      const u64 u = mul_mod(h[i][m - 1], inv, p);
      for (std::size_t j = 0; j < n; ++j) h[i][j] = (h[i][j] + p - mul_mod(u, h[m][j], p)) % p;
      for (std::size_t j = 0; j < n; ++j) h[j][m] = (h[j][m] + mul_mod(u, h[j][i], p)) % p;
    }
  }

  // polys[m] = charpoly of the leading m x m block.
  std::vector<std::vector<u64>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<u64> cur(m + 1, 0);
    const auto& prev = polys[m - 1];
    const u64 diag = h[m - 1][m - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      cur[d + 1] = (cur[d + 1] + prev[d]) % p;
      cur[d] = (cur[d] + p - mul_mod(diag, prev[d], p)) % p;
    }
    u64 t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = mul_mod(t, h[m - i][m - i - 1], p);
      const u64 coef = mul_mod(t, h[m - i - 1][m - 1], p);
      if (coef == 0) continue;
      const auto& lower = polys[m - i - 1];
      for (std::size_t d = 0; d < lower.size(); ++d) cur[d] = (cur[d] + p - mul_mod(coef, lower[d], p)) % p;
    }
    polys[m] = std::move(cur);
  }
  return polys[n];
}

}  // namespace

// ---- IntPoly ----------------------------------------------------------------

IntPoly::IntPoly(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coefficients) {
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, int degree) {
  std::vector<BigInt> v(idx(degree) + 1, 0);
  v.back() = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coefficient(int i) const {
  return i >= 0 && i <= degree() ? coeffs_[idx(i)] : BigInt(0);
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (leading() < 0) g = -g;
  std::vector<BigInt> v = coeffs_;
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(v));
}

BigInt IntPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(v));
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw InvalidInput("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw ConsistencyError("inexact polynomial division");
  std::vector<BigInt> rem = a.coefficients();
  std::vector<BigInt> quot(idx(a.degree() - b.degree()) + 1, 0);
  const auto& bc = b.coefficients();
  const BigInt& lead = b.leading();
  for (int d = a.degree() - b.degree(); d >= 0; --d) {
    BigInt& top = rem[idx(d + b.degree())];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) throw ConsistencyError("inexact polynomial division");
    BigInt q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t i = 0; i < bc.size(); ++i) {
      mpz_submul(rem[idx(d) + i].get_mpz_t(), q.get_mpz_t(), bc[i].get_mpz_t());
    }
    quot[idx(d)] = std::move(q);
  }
  for (const auto& c : rem)
    if (c != 0) throw ConsistencyError("inexact polynomial division");
  return IntPoly(std::move(quot));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw InvalidInput("pseudo-remainder by the zero polynomial");
  std::vector<BigInt> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const BigInt lead = b.leading();
  int deg = a.degree();
  while (deg >= b.degree() && deg >= 0) {
    const BigInt top = rem[idx(deg)];
    for (auto& c : rem) c *= lead;
    const int shift = deg - b.degree();
    for (std::size_t i = 0; i < bc.size(); ++i) {
      mpz_submul(rem[idx(shift) + i].get_mpz_t(), top.get_mpz_t(), bc[i].get_mpz_t());
    }
    rem.resize(idx(deg));
    IntPoly trimmed(rem);
    rem = trimmed.coefficients();
    deg = trimmed.degree();
  }
  return IntPoly(std::move(rem));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive_part() * b.content();
  if (b.is_zero()) return a.primitive_part() * a.content();
  BigInt c;
  const BigInt ca = a.content();
  const BigInt cb = b.content();
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part() * c;
}

std::string to_string(const IntPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = 0; d <= p.degree(); ++d) {
    const BigInt& c = p.coefficients()[idx(d)];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (c < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    if (d == 0 || mag != 1) os << mag;
    if (d >= 1) os << var;
    if (d >= 2) os << '^' << d;
    first = false;
  }
  return os.str();
}

// ---- RationalFunction -------------------------------------------------------

RationalFunction::RationalFunction(IntPoly numerator, IntPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw InvalidInput("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = IntPoly{1};
    return;
  }
  const IntPoly g = gcd(num_, den_);
  num_ = divide_exact(num_, g);
  den_ = divide_exact(den_, g);
  const auto& dc = den_.coefficients();
  const auto low = std::find_if(dc.begin(), dc.end(), [](const BigInt& c) { return c != 0; });
  if (*low < 0) {
    num_ *= BigInt(-1);
    den_ *= BigInt(-1);
  }
}

std::string to_string(const RationalFunction& rf) {
  return "(" + to_string(rf.numerator()) + ")/(" + to_string(rf.denominator()) + ")";
}

LinearFactorization factor_linear(const IntPoly& p) {
  LinearFactorization f{{}, p};
  if (p.is_zero() || p.coefficient(0) != 1 || p.degree() < 1) return f;
  // (1 - a x) | q  <=>  a is a root of the reversed polynomial, so a divides
  // the leading coefficient of q.
  auto divisors = [](BigInt n) {
    std::vector<BigInt> out;
    n = abs(n);
    if (n > BigInt("1000000000000")) return out;
    for (BigInt d = 1; d * d <= n; ++d) {
      if (n % d == 0) {
        out.push_back(d);
        if (d * d != n) out.push_back(n / d);
      }
    }
    return out;
  };
  bool progress = true;
  while (progress && f.rest.degree() >= 1) {
    progress = false;
    for (const BigInt& d : divisors(f.rest.leading())) {
      for (const BigInt& a : {d, BigInt(-d)}) {
        const IntPoly factor{1};
        IntPoly lin(std::vector<BigInt>{1, -a});
        // Reversed evaluation: sum q_i a^(deg - i) == 0.
        BigInt acc = 0;
        for (int i = 0; i <= f.rest.degree(); ++i) acc = acc * a + f.rest.coefficient(i);
        if (acc != 0) continue;
        f.rest = divide_exact(f.rest, lin);
        f.roots.push_back(a);
        progress = true;
        break;
      }
      if (progress) break;
    }
  }
  std::sort(f.roots.begin(), f.roots.end(), [](const BigInt& x, const BigInt& y) { return x < y; });
  return f;
}

std::string to_factored_string(const LinearFactorization& f) {
  std::string out;
  for (const BigInt& a : f.roots) out += "(" + to_string(IntPoly(std::vector<BigInt>{1, -a})) + ")";
  if (f.rest != IntPoly{1} || out.empty()) out += "(" + to_string(f.rest) + ")";
  return out;
}

// ---- determinants -----------------------------------------------------------

IntPoly det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw InvalidInput("determinant of a non-square matrix");
  if (n == 0) return IntPoly{1};
  PolyMatrix a = m;
  IntPoly prev{1};
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k].is_zero()) ++piv;
      if (piv == n) return {};
      std::swap(a[piv], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = divide_exact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      }
    }
    prev = a[k][k];
  }
  IntPoly result = a[n - 1][n - 1];
  return negate ? -result : result;
}

PolyMatrix one_minus_x(const AdjacencyMatrix& a) {
  const std::size_t n = a.size();
  PolyMatrix b(n, std::vector<IntPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      b[i][j] = IntPoly(std::vector<BigInt>{i == j ? 1 : 0, BigInt(static_cast<long>(-a[i][j]))});
  return b;
}

AdjacencyMatrix minor_matrix(const AdjacencyMatrix& a, std::size_t index) {
  AdjacencyMatrix out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == index) continue;
    std::vector<std::int64_t> row;
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (j != index) row.push_back(a[i][j]);
    out.push_back(std::move(row));
  }
  return out;
}

IntPoly det_one_minus_x(const AdjacencyMatrix& a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw InvalidInput("adjacency matrix must be square");
  if (n == 0) return IntPoly{1};

  // Coefficient m of det(I - xA) is (-1)^m times the sum of the principal
  // m x m minors; Hadamard bounds each minor by a product of row norms, so
  // every coefficient is at most prod_i (1 + |row_i|_1) in absolute value.
  BigInt bound = 1;
  for (const auto& row : a) {
    BigInt norm = 1;
    for (auto v : row) norm += BigInt(static_cast<long>(v < 0 ? -v : v));
    bound *= norm;
  }
  const BigInt needed = 2 * bound + 1;

  BigInt modulus = 1;
  std::vector<BigInt> residues(n + 1, 0);
  PrimeSource primes;
  while (modulus < needed) {
    const u64 p = primes.next();
    std::vector<u64> chi = charpoly_mod(a, p);
    const BigInt bp(static_cast<unsigned long>(p));
    const BigInt mmod = modulus % bp;
    const u64 minv = inv_mod(mmod.get_ui(), p);
    for (std::size_t m = 0; m <= n; ++m) {
      // det(I - xA) = x^n chi(1/x): coefficient m is chi_{n-m}.
      const u64 target = chi[n - m];
      const BigInt cur_mod = residues[m] % bp;
      const u64 cur = cur_mod.get_ui();
      const u64 t = mul_mod((target + p - cur) % p, minv, p);
      residues[m] += modulus * BigInt(static_cast<unsigned long>(t));
    }
    modulus *= bp;
  }
  const BigInt half = modulus / 2;
  for (auto& r : residues)
    if (r > half) r -= modulus;
  return IntPoly(std::move(residues));
}

RationalFunction gf_from_graph(const Multigraph& g, std::size_t dimension_cap) {
  if (g.state_count() > dimension_cap) {
    throw GuardExceeded("transfer matrix of dimension " + std::to_string(g.state_count()) +
                        " exceeds the dimension cap of " + std::to_string(dimension_cap));
  }
  const auto& a = g.adjacency();
  return RationalFunction(det_one_minus_x(minor_matrix(a, g.start())), det_one_minus_x(a));
}

Series series(const RationalFunction& rf, int terms, SeriesConvention convention) {
  const IntPoly& num = rf.numerator();
  const IntPoly& den = rf.denominator();
  const BigInt d0 = den.coefficient(0);
  if (d0 == 0) throw InvalidInput("denominator vanishes at x = 0; no power series");
  Series s{{}, convention};
  for (int n = 0; n <= terms; ++n) {
    BigInt acc = num.coefficient(n);
    for (int i = 1; i <= std::min(n, den.degree()); ++i) {
      mpz_submul(acc.get_mpz_t(), den.coefficients()[idx(i)].get_mpz_t(), s.coefficients[idx(n - i)].get_mpz_t());
    }
    if (!mpz_divisible_p(acc.get_mpz_t(), d0.get_mpz_t())) {
      throw InvalidInput("series coefficient " + std::to_string(n) + " is not an integer");
    }
    mpz_divexact(acc.get_mpz_t(), acc.get_mpz_t(), d0.get_mpz_t());
    s.coefficients.push_back(std::move(acc));
  }
  return s;
}

Series series_by_power(const Multigraph& g, int terms) {
  const auto& a = g.adjacency();
  const std::size_t n = g.state_count();
  std::vector<BigInt> w(n, 0);
  w[g.start()] = 1;
  Series s{{}, convention_for(g.family())};
  for (int t = 0; t <= terms; ++t) {
    s.coefficients.push_back(w[g.start()]);
    if (t == terms) break;
    std::vector<BigInt> next(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (w[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (a[i][j] != 0) next[j] += w[i] * BigInt(static_cast<long>(a[i][j]));
      }
    }
    w = std::move(next);
  }
  return s;
}

SeriesConvention convention_for(Family family) {
  return family == Family::SetPartition ? SeriesConvention::SetPartitionShifted : SeriesConvention::Plain;
}

}  // namespace arcnest
