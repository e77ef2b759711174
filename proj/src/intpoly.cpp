#include "intpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "error.hpp"

namespace fm {

IntPoly IntPoly::from_longs(const std::vector<long>& v) {
  std::vector<Integer> c;
  for (long x : v) c.emplace_back(x);
  return IntPoly(std::move(c));
}

IntPoly IntPoly::monomial(size_t k, const Integer& a) {
  std::vector<Integer> c(k + 1, Integer(0));
  c[k] = a;
  return IntPoly(std::move(c));
}

void IntPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> c(std::max(a.c.size(), b.c.size()), Integer(0));
  for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) c[i] += b.c[i];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> c(std::max(a.c.size(), b.c.size()), Integer(0));
  for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) c[i] -= b.c[i];
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Integer> c(a.c.size() + b.c.size() - 1, Integer(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
  }
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a) { return scale(a, -1); }

IntPoly scale(const IntPoly& a, const Integer& k) {
  std::vector<Integer> c = a.c;
  for (auto& x : c) x *= k;
  return IntPoly(std::move(c));
}

IntPoly derivative(const IntPoly& a) {
  if (a.c.size() <= 1) return IntPoly();
  std::vector<Integer> c(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i) c[i - 1] = a.c[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(c));
}

Integer content(const IntPoly& a) {
  Integer g(0);
  for (const auto& x : a.c) {
    g = gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& a) {
  if (a.is_zero()) return a;
  Integer g = content(a);
  if (a.lead() < 0) g = -g;
  std::vector<Integer> c = a.c;
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(c));
}

void pseudo_divmod(const IntPoly& a, const IntPoly& b, IntPoly& q, IntPoly& r) {
  if (b.is_zero()) throw Error(ErrorCode::Domain, "polynomial division by zero");
  r = a;
  q = IntPoly();
  if (a.degree() < b.degree()) return;
  const long db = b.degree();
  long steps = a.degree() - db + 1;
  std::vector<Integer> qc(static_cast<size_t>(steps), Integer(0));
  std::vector<Integer> rc = a.c;
  const Integer& lb = b.lead();
  for (long k = a.degree(); k >= db; --k) {
    Integer t = rc[static_cast<size_t>(k)];
    // multiply everything by lb, then cancel the top term
    for (auto& x : rc) x *= lb;
    for (auto& x : qc) x *= lb;
    qc[static_cast<size_t>(k - db)] += t;
    for (long i = 0; i <= db; ++i) rc[static_cast<size_t>(k - db + i)] -= t * b.c[static_cast<size_t>(i)];
  }
  q = IntPoly(std::move(qc));
  r = IntPoly(std::move(rc));
}

IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::Domain, "polynomial division by zero");
  if (a.is_zero()) return IntPoly();
  if (a.degree() < b.degree()) throw Error(ErrorCode::NotDivisible, "not divisible");
  std::vector<Integer> rc = a.c;
  const long db = b.degree();
  std::vector<Integer> qc(static_cast<size_t>(a.degree() - db + 1), Integer(0));
  for (long k = a.degree(); k >= db; --k) {
    Integer& t = rc[static_cast<size_t>(k)];
    if (t == 0) continue;
    if (!mpz_divisible_p(t.get_mpz_t(), b.lead().get_mpz_t())) throw Error(ErrorCode::NotDivisible, "not divisible");
    Integer f;
    mpz_divexact(f.get_mpz_t(), t.get_mpz_t(), b.lead().get_mpz_t());
    qc[static_cast<size_t>(k - db)] = f;
    for (long i = 0; i <= db; ++i) rc[static_cast<size_t>(k - db + i)] -= f * b.c[static_cast<size_t>(i)];
  }
  for (const auto& x : rc)
    if (x != 0) throw Error(ErrorCode::NotDivisible, "not divisible");
  return IntPoly(std::move(qc));
}

bool divides(const IntPoly& b, const IntPoly& a) {
  IntPoly q, r;
  pseudo_divmod(a, b, q, r);
  return r.is_zero();
}

IntPoly gcd(const IntPoly& a0, const IntPoly& b0) {
  if (a0.is_zero()) return primitive_part(b0);
  if (b0.is_zero()) return primitive_part(a0);
  IntPoly a = primitive_part(a0), b = primitive_part(b0);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly q, r;
    pseudo_divmod(a, b, q, r);
    a = std::move(b);
    b = primitive_part(r);
  }
  return primitive_part(a);
}

IntPoly squarefree_part(const IntPoly& a) {
  if (a.degree() < 1) return primitive_part(a);
  IntPoly g = gcd(a, derivative(a));
  return primitive_part(exact_quotient(primitive_part(a), g));
}

IntPoly strip_x_power(const IntPoly& a, size_t* removed) {
  size_t k = 0;
  while (k < a.c.size() && a.c[k] == 0) ++k;
  if (removed) *removed = k;
  return IntPoly(std::vector<Integer>(a.c.begin() + static_cast<long>(k), a.c.end()));
}

namespace {

long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

int mobius(long n) {
  int m = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    m = -m;
  }
  if (n > 1) m = -m;
  return m;
}

// n-th cyclotomic polynomial as prod_{d|n} (x^d - 1)^mu(n/d)
IntPoly cyclotomic(long n) {
  std::vector<Integer> c(1, Integer(1));
  std::vector<long> dens;
  for (long d = 1; d <= n; ++d) {
    if (n % d) continue;
    int mu = mobius(n / d);
    if (mu == 1) {
      std::vector<Integer> nc(c.size() + static_cast<size_t>(d), Integer(0));
      for (size_t i = 0; i < c.size(); ++i) {
        nc[i + static_cast<size_t>(d)] += c[i];
        nc[i] -= c[i];
      }
      c = std::move(nc);
    } else if (mu == -1) {
      dens.push_back(d);
    }
  }
  for (long d : dens) {
    // divide by x^d - 1
    size_t du = static_cast<size_t>(d);
    std::vector<Integer> q(c.size() - du, Integer(0));
    std::vector<Integer> r = c;
    for (size_t k = r.size() - 1; k + 1 > du; --k) {
      Integer t = r[k];
      if (t == 0) continue;
      q[k - du] = t;
      r[k] = 0;
      r[k - du] += t;
    }
    c = std::move(q);
  }
  return IntPoly(std::move(c));
}

}  // namespace

IntPoly remove_cyclotomic(const IntPoly& a, int) {
  IntPoly p = a;
  if (p.degree() < 1) return p;
  const long deg = p.degree();
  const long nmax = 2 * deg * deg + 2;
  for (long n = 1; n <= nmax && p.degree() >= 1; ++n) {
    if (euler_phi(n) > p.degree()) continue;
    IntPoly cyc = cyclotomic(n);
    while (p.degree() >= cyc.degree()) {
      try {
        p = exact_quotient(p, cyc);
      } catch (const Error&) {
        break;
      }
    }
  }
  return p;
}

int sign_at(const IntPoly& a, const Rational& x) {
  if (a.is_zero()) return 0;
  // sign of sum a_i p^i q^(n-i), q > 0
  const Integer& p = x.get_num();
  const Integer& q = x.get_den();
  Integer s(0);
  Integer qpow(1);
  for (size_t i = 0; i + 1 < a.c.size(); ++i) qpow *= q;
  // Horner in homogeneous form
  Integer acc = a.c.back();
  Integer qk(1);
  for (long i = a.degree() - 1; i >= 0; --i) {
    qk *= q;
    acc = acc * p + a.c[static_cast<size_t>(i)] * qk;
  }
  return sgn(acc);
}

Real eval(const IntPoly& a, const Real& x) {
  Real acc;
  for (long i = a.degree(); i >= 0; --i) acc = acc * x + Real(a.c[static_cast<size_t>(i)]);
  return acc;
}

namespace {

std::vector<IntPoly> sturm_sequence(const IntPoly& a) {
  std::vector<IntPoly> seq;
  seq.push_back(a);
  seq.push_back(derivative(a));
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    const IntPoly& p0 = seq[seq.size() - 2];
    const IntPoly& p1 = seq.back();
    IntPoly q, r;
    pseudo_divmod(p0, p1, q, r);
    // the pseudo-remainder carries lead(p1)^(d+1); undo a negative factor
    long e = p0.degree() - p1.degree() + 1;
    if (p1.lead() < 0 && (e % 2 != 0)) r = -r;
    if (r.is_zero()) break;
    Integer g = content(r);
    std::vector<Integer> c = r.c;
    for (auto& x : c) {
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
      x = -x;
    }
    seq.emplace_back(std::move(c));
  }
  return seq;
}

long variations(const std::vector<IntPoly>& seq, const Rational& x) {
  long v = 0;
  int last = 0;
  for (const auto& p : seq) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

long sturm_count(const IntPoly& a, const Rational& lo, const Rational& hi) {
  if (a.degree() < 1) return 0;
  if (!(lo < hi)) throw Error(ErrorCode::InvalidArgument, "empty interval");
  auto seq = sturm_sequence(a);
  // the chain ends in gcd(a, a'); repeated roots at an endpoint break the count
  if (seq.back().degree() > 0) seq = sturm_sequence(squarefree_part(a));
  return variations(seq, lo) - variations(seq, hi);
}

IntPoly reverse(const IntPoly& a) {
  std::vector<Integer> c(a.c.rbegin(), a.c.rend());
  return IntPoly(std::move(c));
}

int palindromic_kind(const IntPoly& a) {
  if (a.is_zero()) return 0;
  IntPoly r = reverse(a);
  if (r.degree() != a.degree()) return 0;  // a(0) = 0
  if (r == a) return 1;
  if (r == -a) return -1;
  return 0;
}

IntPoly palindromic_reduce(const IntPoly& a) {
  if (palindromic_kind(a) != 1) throw Error(ErrorCode::Domain, "polynomial is not palindromic");
  if (a.degree() % 2 != 0) throw Error(ErrorCode::Domain, "odd-degree palindrome (divisible by Y+1); remove that factor first");
  const size_t k = static_cast<size_t>(a.degree() / 2);
  // Y^j + Y^-j = S_j(A), S_0 = 2, S_1 = A, S_{j+1} = A S_j - S_{j-1}
  IntPoly A = IntPoly::monomial(1);
  IntPoly s_prev = IntPoly::from_longs({2}), s_cur = A;
  IntPoly q = IntPoly({a.c[k]});
  for (size_t j = 1; j <= k; ++j) {
    q = q + scale(s_cur, a.c[k + j]);
    IntPoly s_next = A * s_cur - s_prev;
    s_prev = std::move(s_cur);
    s_cur = std::move(s_next);
  }
  return primitive_part(q);
}

bool is_prime_small(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

using ModPoly = std::vector<uint64_t>;

void mtrim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

uint64_t inv_mod(uint64_t a, uint64_t p) {
  uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

ModPoly mmod(ModPoly a, const ModPoly& f, uint64_t p) {
  mtrim(a);
  const size_t df = f.size() - 1;
  const uint64_t il = inv_mod(f.back(), p);
  while (a.size() >= f.size()) {
    uint64_t t = a.back() * il % p;
    size_t shift = a.size() - f.size();
    for (size_t i = 0; i <= df; ++i) a[shift + i] = (a[shift + i] + p - t * f[i] % p) % p;
    mtrim(a);
  }
  return a;
}

ModPoly mmul(const ModPoly& a, const ModPoly& b, const ModPoly& f, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return mmod(std::move(c), f, p);
}

ModPoly mpow(ModPoly base, uint64_t e, const ModPoly& f, uint64_t p) {
  ModPoly r{1};
  while (e) {
    if (e & 1) r = mmul(r, base, f, p);
    base = mmul(base, base, f, p);
    e >>= 1;
  }
  return r;
}

ModPoly mgcd(ModPoly a, ModPoly b, uint64_t p) {
  mtrim(a);
  mtrim(b);
  while (!b.empty()) {
    ModPoly r = mmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

bool irreducible_mod_p(const IntPoly& a, unsigned long p) {
  if (!is_prime_small(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  if (p > (1ul << 31)) throw Error(ErrorCode::Limit, "prime too large");
  if (a.is_zero()) throw Error(ErrorCode::Domain, "zero polynomial");
  Integer pz(p);
  if (mpz_divisible_p(a.lead().get_mpz_t(), pz.get_mpz_t())) {
    throw Error(ErrorCode::Domain, "leading coefficient divisible by p");
  }
  const long n = a.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  ModPoly f(a.c.size());
  for (size_t i = 0; i < a.c.size(); ++i) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.c[i].get_mpz_t(), pz.get_mpz_t());
    f[i] = r.get_ui();
  }
  // no irreducible factor of degree <= n/2  <=>  irreducible
  ModPoly x{0, 1};
  ModPoly h = x;
  for (long k = 1; k <= n / 2; ++k) {
    h = mpow(h, p, f, p);
    ModPoly d = h;
    d.resize(std::max<size_t>(d.size(), 2), 0);
    d[1] = (d[1] + p - 1) % p;
    mtrim(d);
    ModPoly g = mgcd(f, d, p);
    if (g.size() > 1) return false;
    if (d.empty()) return false;
  }
  return true;
}

IntPoly resultant_sylvester(const std::vector<IntPoly>& f0, const std::vector<IntPoly>& g0) {
  auto deg = [](const std::vector<IntPoly>& v) {
    long d = static_cast<long>(v.size()) - 1;
    while (d >= 0 && v[static_cast<size_t>(d)].is_zero()) --d;
    return d;
  };
  const long m = deg(f0), n = deg(g0);
  if (m < 0 || n < 0) throw Error(ErrorCode::Domain, "resultant of a zero polynomial");
  if (m == 0 && n == 0) throw Error(ErrorCode::Degenerate, "degenerate degrees: neither polynomial involves the eliminated variable");
  const size_t N = static_cast<size_t>(m + n);
  std::vector<std::vector<IntPoly>> M(N, std::vector<IntPoly>(N));
  for (long i = 0; i < n; ++i)
    for (long k = 0; k <= m; ++k) M[static_cast<size_t>(i)][static_cast<size_t>(i + k)] = f0[static_cast<size_t>(m - k)];
  for (long i = 0; i < m; ++i)
    for (long k = 0; k <= n; ++k) M[static_cast<size_t>(n + i)][static_cast<size_t>(i + k)] = g0[static_cast<size_t>(n - k)];
  if (N == 0) return IntPoly::from_longs({1});
  // fraction-free Gaussian elimination (Bareiss)
  IntPoly prev = IntPoly::from_longs({1});
  bool negate = false;
  for (size_t k = 0; k + 1 < N; ++k) {
    if (M[k][k].is_zero()) {
      size_t r = k + 1;
      while (r < N && M[r][k].is_zero()) ++r;
      if (r == N) return IntPoly();
      std::swap(M[k], M[r]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < N; ++i) {
      for (size_t j = k + 1; j < N; ++j) {
        IntPoly t = M[k][k] * M[i][j] - M[i][k] * M[k][j];
        M[i][j] = exact_quotient(t, prev);
      }
      M[i][k] = IntPoly();
    }
    prev = M[k][k];
  }
  IntPoly det = M[N - 1][N - 1];
  return negate ? -det : det;
}

std::string to_string(const IntPoly& a, const std::string& var) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = a.degree(); i >= 0; --i) {
    const Integer& c = a.c[static_cast<size_t>(i)];
    if (c == 0) continue;
    Integer m = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m != 1 || i == 0) {
      os << m.get_str();
      if (i > 0) os << "*";
    }
    if (i > 0) os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace fm
