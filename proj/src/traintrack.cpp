#include "twistcert/traintrack.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace twistcert::traintrack {

IntMatrix identity_matrix(int n) {
  IntMatrix m(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  if (n == 0 || b.size() != a[0].size())
    throw std::invalid_argument("mat_mul: dimension mismatch");
  const std::size_t cols = b[0].size();
  IntMatrix out(n, std::vector<Int>(cols, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

Int mat_det(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("mat_det: not square");
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          swap = r;
          break;
        }
      if (swap < 0) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

int Chart::generator_index(const std::string& name) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].name == name) return static_cast<int>(i);
  return -1;
}

std::vector<std::string> validate(const Chart& chart) {
  std::vector<std::string> out;
  if (chart.branch_count < 1) out.push_back("branch_count must be positive");
  for (const ChartGenerator& g : chart.generators) {
    if (static_cast<int>(g.matrix.size()) != chart.branch_count) {
      out.push_back("generator '" + g.name + "': wrong row count");
      continue;
    }
    for (const auto& row : g.matrix)
      if (static_cast<int>(row.size()) != chart.branch_count)
        out.push_back("generator '" + g.name + "': wrong column count");
    for (const auto& row : g.matrix)
      for (const Int& e : row)
        if (e < 0) {
          out.push_back("generator '" + g.name + "': negative entry");
          goto next;
        }
    if (g.det_pm1) {
      const Int d = mat_det(g.matrix);
      if (d != 1 && d != -1)
        out.push_back("generator '" + g.name + "': determinant is not +-1");
    }
  next:;
  }
  return out;
}

namespace {

// Exact inverse of an integer matrix of determinant +-1, via rational
// Gauss-Jordan.
IntMatrix int_inverse(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  const Int d = mat_det(m);
  if (d != 1 && d != -1)
    throw std::invalid_argument("negative word exponent needs a determinant +-1 matrix");
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
    a[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    std::swap(a[col], a[piv]);
    const Rat p = a[col][col];
    for (int j = 0; j < 2 * n; ++j) a[col][j] /= p;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rat f = a[r][col];
      for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  IntMatrix out(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat v = a[i][n + j];
      v.canonicalize();
      if (v.get_den() != 1) throw std::logic_error("int_inverse: non-integer entry");
      out[i][j] = v.get_num();
    }
  return out;
}

}  // namespace

IntMatrix compose(const Chart& chart, const TwistWord& w) {
  IntMatrix acc = identity_matrix(chart.branch_count);
  for (const Letter& l : w.letters) {
    if (l.family < 0 || l.family >= static_cast<int>(chart.generators.size()))
      throw std::invalid_argument("compose: unknown generator index");
    const IntMatrix& g = chart.generators[l.family].matrix;
    if (static_cast<int>(g.size()) != chart.branch_count)
      throw std::invalid_argument("compose: dimension mismatch");
    const IntMatrix base = l.exp > 0 ? g : int_inverse(g);
    const long long reps = std::llabs(l.exp);
    for (long long k = 0; k < reps; ++k) acc = mat_mul(acc, base);
  }
  return acc;
}

Int Polynomial::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string to_string(const Polynomial& p) {
  if (p.coeffs.empty()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Int& c = p.coeffs[k];
    if (c == 0 && p.degree() > 0) continue;
    std::string term;
    const Int ac = abs(c);
    if (k == 0 || ac != 1) term += ac.get_str();
    if (k >= 1) {
      term += "x";
      if (k >= 2) term += "^" + std::to_string(k);
    }
    if (out.empty())
      out = (c < 0 ? "-" : "") + term;
    else
      out += (c < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

Polynomial char_poly(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("char_poly: not square");

  Polynomial p;
  p.coeffs.assign(n + 1, 0);
  p.coeffs[n] = 1;
  // Faddeev-LeVerrier: N_k = M (N_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(N_k)/k.
  IntMatrix nk = identity_matrix(n);
  for (int k = 1; k <= n; ++k) {
    nk = mat_mul(m, nk);
    Int tr = 0;
    for (int i = 0; i < n; ++i) tr += nk[i][i];
    Int c;
    mpz_divexact(c.get_mpz_t(), Int(-tr).get_mpz_t(), Int(k).get_mpz_t());
    p.coeffs[n - k] = c;
    for (int i = 0; i < n; ++i) nk[i][i] += c;
  }
  return p;
}

namespace {

// Exact division of monic p by monic d; nullopt when not divisible.
std::optional<Polynomial> poly_divide(const Polynomial& p, const Polynomial& d) {
  std::vector<Int> rem = p.coeffs;
  const int dd = d.degree();
  if (dd < 0 || p.degree() < dd) return std::nullopt;
  std::vector<Int> quot(p.degree() - dd + 1, 0);
  for (int k = p.degree() - dd; k >= 0; --k) {
    const Int q = rem[k + dd];  // monic divisor
    quot[k] = q;
    for (int j = 0; j <= dd; ++j) rem[k + j] -= q * d.coeffs[j];
  }
  for (int j = 0; j < dd; ++j)
    if (rem[j] != 0) return std::nullopt;
  return Polynomial{std::move(quot)};
}

std::vector<Int> divisors_signed(const Int& v) {
  std::vector<Int> out;
  const Int av = abs(v);
  for (Int k = 1; k * k <= av; ++k) {
    if (av % k != 0) continue;
    Int other = av / k;
    out.push_back(k);
    out.push_back(-k);
    if (other != k) {
      out.push_back(other);
      out.push_back(-other);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void push_factor(Factorization& f, const Polynomial& factor) {
  for (auto& [p, mult] : f.factors)
    if (p == factor) {
      ++mult;
      return;
    }
  f.factors.emplace_back(factor, 1);
}

}  // namespace

Factorization factor_poly(const Polynomial& p) {
  if (p.coeffs.empty() || p.coeffs.back() != 1)
    throw std::invalid_argument("factor_poly: monic polynomial required");

  Factorization out;
  Polynomial rest = p;

  // x factors
  while (rest.degree() >= 1 && rest.coeffs[0] == 0) {
    push_factor(out, Polynomial{{Int(0), Int(1)}});
    rest.coeffs.erase(rest.coeffs.begin());
  }

  // integer roots (rational roots of a monic integer polynomial are integers)
  bool progress = true;
  while (progress && rest.degree() >= 1) {
    progress = false;
    for (const Int& r : divisors_signed(rest.coeffs[0])) {
      if (rest.eval(r) != 0) continue;
      const Polynomial lin{{-r, Int(1)}};
      rest = *poly_divide(rest, lin);
      push_factor(out, lin);
      progress = true;
      break;
    }
  }

  // trial monic quadratic divisors x^2 + u x + v with v | constant term
  if (rest.degree() >= 2) {
    Int bound = 1;
    for (const Int& c : rest.coeffs) bound += abs(c);
    progress = true;
    while (progress && rest.degree() >= 2) {
      progress = false;
      if (rest.degree() == 2) {
        push_factor(out, rest);
        rest = Polynomial{{Int(1)}};
        break;
      }
      for (const Int& v : divisors_signed(rest.coeffs[0])) {
        for (Int u = -bound; u <= bound; ++u) {
          const Polynomial quad{{v, u, Int(1)}};
          if (auto q = poly_divide(rest, quad)) {
            push_factor(out, quad);
            rest = *q;
            progress = true;
            break;
          }
        }
        if (progress) break;
      }
    }
  }

  if (rest.degree() >= 1) push_factor(out, rest);

  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& x, const auto& y) {
              if (x.first.degree() != y.first.degree())
                return x.first.degree() < y.first.degree();
              return x.first.coeffs < y.first.coeffs;
            });
  return out;
}

long long squarefree_part(long long n, long long* square_factor) {
  if (n <= 0) throw std::invalid_argument("squarefree_part: positive argument required");
  long long sf = 1, sq = 1;
  for (long long p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) sq *= p;
    if (e % 2) sf *= p;
  }
  sf *= n;
  if (square_factor) *square_factor = sq;
  return sf;
}

namespace {

int sgn_rat(const Rat& r) { return sgn(r); }

long long common_d(const QuadraticNumber& x, const QuadraticNumber& y) {
  const bool xr = x.is_rational();
  const bool yr = y.is_rational();
  if (xr && yr) return x.d != 0 ? x.d : y.d;
  if (xr) return y.d;
  if (yr) return x.d;
  if (x.d != y.d) throw std::invalid_argument("mixed quadratic fields");
  return x.d;
}

}  // namespace

QuadraticNumber QuadraticNumber::operator+(const QuadraticNumber& rhs) const {
  return {a + rhs.a, b + rhs.b, common_d(*this, rhs)};
}

QuadraticNumber QuadraticNumber::operator-(const QuadraticNumber& rhs) const {
  return {a - rhs.a, b - rhs.b, common_d(*this, rhs)};
}

QuadraticNumber QuadraticNumber::operator-() const { return {-a, -b, d}; }

QuadraticNumber QuadraticNumber::operator*(const QuadraticNumber& rhs) const {
  const long long dd = common_d(*this, rhs);
  return {a * rhs.a + b * rhs.b * make_rat(dd), a * rhs.b + b * rhs.a, dd};
}

QuadraticNumber QuadraticNumber::operator/(const QuadraticNumber& rhs) const {
  const long long dd = common_d(*this, rhs);
  const Rat norm = rhs.a * rhs.a - rhs.b * rhs.b * make_rat(dd);
  if (norm == 0) throw std::invalid_argument("division by zero quadratic number");
  const QuadraticNumber conj{rhs.a, -rhs.b, dd};
  QuadraticNumber num = *this * conj;
  return {num.a / norm, num.b / norm, dd};
}

int QuadraticNumber::sign() const {
  if (b == 0 || d == 0) return sgn_rat(a);
  if (a == 0) return sgn_rat(b);
  const int sa = sgn_rat(a);
  const int sb = sgn_rat(b);
  if (sa == sb) return sa;
  const int c = cmp(a * a, b * b * make_rat(d));
  if (c == 0) return 0;
  return c > 0 ? sa : sb;
}

bool QuadraticNumber::operator==(const QuadraticNumber& rhs) const {
  const bool self_rat = is_rational();
  const bool rhs_rat = rhs.is_rational();
  if (self_rat != rhs_rat) return false;
  if (self_rat) return a == rhs.a;
  return a == rhs.a && b == rhs.b && d == rhs.d;
}

std::string to_string(const QuadraticNumber& q) {
  if (q.is_rational()) return rat_to_string(q.a);
  std::string out = rat_to_string(q.a);
  out += (q.b > 0 ? " + " : " - ");
  const Rat ab = abs(q.b);
  if (ab != 1) out += rat_to_string(ab) + "*";
  out += "sqrt(" + std::to_string(q.d) + ")";
  return out;
}

namespace {

// Folds any square factor of the radicand into b, so distinct radicands
// below really are distinct squarefree ones.
QuadraticNumber normalized(const QuadraticNumber& q) {
  if (q.b == 0 || q.d == 0) return {q.a, Rat(0), 0};
  if (q.d == 1) return {q.a + q.b, Rat(0), 0};
  long long sq = 1;
  const long long sf = squarefree_part(q.d, &sq);
  if (sf == 1) return {q.a + q.b * make_rat(sq), Rat(0), 0};
  return {q.a, q.b * make_rat(sq), sf};
}

}  // namespace

int compare(const QuadraticNumber& x_in, const QuadraticNumber& y_in) {
  const QuadraticNumber x = normalized(x_in);
  const QuadraticNumber y = normalized(y_in);
  if (x.is_rational() || y.is_rational() || x.d == y.d)
    return (x - QuadraticNumber{y.a, y.b, x.is_rational() ? y.d : x.d}).sign();

  // Distinct radicands: refine rational enclosures of each sqrt by bisection
  // until the value intervals separate. Equality across distinct squarefree
  // radicands with irrational parts is impossible, so this terminates.
  struct Enc {
    Rat lo, hi;
  };
  auto sqrt_enc = [](long long d) {
    Rat hi(1);
    while (hi * hi < make_rat(d)) hi *= 2;
    return Enc{hi / 2, hi};
  };
  auto refine = [](Enc& e, long long d) {
    const Rat mid = (e.lo + e.hi) / 2;
    if (mid * mid < make_rat(d))
      e.lo = mid;
    else
      e.hi = mid;
  };
  auto value_enc = [](const QuadraticNumber& q, const Enc& s) {
    if (q.b > 0) return Enc{q.a + q.b * s.lo, q.a + q.b * s.hi};
    return Enc{q.a + q.b * s.hi, q.a + q.b * s.lo};
  };
  Enc sx = sqrt_enc(x.d), sy = sqrt_enc(y.d);
  for (;;) {
    const Enc vx = value_enc(x, sx);
    const Enc vy = value_enc(y, sy);
    if (vx.hi < vy.lo) return -1;
    if (vy.hi < vx.lo) return 1;
    refine(sx, x.d);
    refine(sy, y.d);
  }
}

bool verify_eigenpair(const IntMatrix& m, const QuadraticNumber& lambda,
                      const std::vector<QuadraticNumber>& v) {
  const std::size_t n = m.size();
  if (v.size() != n) throw std::invalid_argument("verify_eigenpair: size mismatch");
  for (const QuadraticNumber& e : v)
    if (e.sign() <= 0) return false;
  for (std::size_t i = 0; i < n; ++i) {
    QuadraticNumber acc = QuadraticNumber::rational(0);
    for (std::size_t j = 0; j < n; ++j)
      acc = acc + QuadraticNumber::rational(Rat(m[i][j])) * v[j];
    if (!(acc == lambda * v[i])) return false;
  }
  return true;
}

namespace {

bool is_zero(const QuadraticNumber& q) { return q.a == 0 && q.b == 0; }

// Kernel vector of (M - lambda I) over Q(sqrt(d)); lambda is an eigenvalue,
// so the kernel is nontrivial.
std::vector<QuadraticNumber> kernel_vector(const IntMatrix& m, const QuadraticNumber& lambda) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<QuadraticNumber>> a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      QuadraticNumber e = QuadraticNumber::rational(Rat(m[i][j]));
      if (i == j) e = e - lambda;
      a[i].push_back(e);
    }

  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int piv = -1;
    for (int r = row; r < n; ++r)
      if (!is_zero(a[r][col])) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[row], a[piv]);
    const QuadraticNumber p = a[row][col];
    for (int j = col; j < n; ++j) a[row][j] = a[row][j] / p;
    for (int r = 0; r < n; ++r) {
      if (r == row || is_zero(a[r][col])) continue;
      const QuadraticNumber f = a[r][col];
      for (int j = col; j < n; ++j) a[r][j] = a[r][j] - f * a[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }

  int free_col = -1;
  for (int col = 0; col < n; ++col)
    if (std::find(pivot_col.begin(), pivot_col.end(), col) == pivot_col.end()) {
      free_col = col;
      break;
    }
  if (free_col < 0) throw std::logic_error("kernel_vector: trivial kernel");

  std::vector<QuadraticNumber> v(n, QuadraticNumber::rational(0));
  v[free_col] = QuadraticNumber::rational(1);
  for (int r = 0; r < static_cast<int>(pivot_col.size()); ++r)
    v[pivot_col[r]] = -a[r][free_col];
  return v;
}

}  // namespace

PaCertificate pa_certificate(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) throw std::invalid_argument("pa_certificate: empty matrix");
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("pa_certificate: not square");
    for (const Int& e : row)
      if (e < 0) throw std::invalid_argument("pa_certificate: negative entry");
  }

  PaCertificate cert;

  // primitivity: some boolean power <= n^2 is entrywise positive
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) reach[i][j] = m[i][j] > 0;
  auto all_positive = [&](const std::vector<std::vector<bool>>& b) {
    for (const auto& row : b)
      for (bool e : row)
        if (!e) return false;
    return true;
  };
  int k = 1;
  std::vector<std::vector<bool>> pw = reach;
  while (k <= n * n && !all_positive(pw)) {
    std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l)
        if (pw[i][l])
          for (int j = 0; j < n; ++j)
            if (reach[l][j]) next[i][j] = true;
    pw = std::move(next);
    ++k;
  }
  if (!all_positive(pw)) {
    cert.reason = "matrix is not primitive (no positive power up to n^2)";
    return cert;
  }
  cert.primitivity_power = k;

  const Factorization fac = factor_poly(char_poly(m));

  std::vector<QuadraticNumber> real_roots;
  std::string big_factor;
  for (const auto& [f, mult] : fac.factors) {
    if (f.degree() == 1) {
      real_roots.push_back(QuadraticNumber::rational(Rat(-f.coeffs[0])));
    } else if (f.degree() == 2) {
      const Int u = f.coeffs[1], v = f.coeffs[0];
      const Int disc = u * u - 4 * v;
      if (disc < 0) continue;
      if (disc == 0) {
        real_roots.push_back(QuadraticNumber::rational(Rat(-u) / 2));
        continue;
      }
      if (!disc.fits_slong_p()) {
        cert.reason = "quadratic discriminant too large for radicand extraction";
        return cert;
      }
      long long sq = 1;
      const long long sf = squarefree_part(disc.get_si(), &sq);
      if (sf == 1) {
        real_roots.push_back(QuadraticNumber::rational((Rat(Int(-u)) + make_rat(sq)) / 2));
        real_roots.push_back(QuadraticNumber::rational((Rat(Int(-u)) - make_rat(sq)) / 2));
      } else {
        real_roots.push_back(QuadraticNumber{Rat(Int(-u)) / 2, make_rat(sq) / 2, sf});
        real_roots.push_back(QuadraticNumber{Rat(Int(-u)) / 2, make_rat(-sq) / 2, sf});
      }
    } else {
      big_factor = to_string(f);
    }
  }

  if (real_roots.empty()) {
    cert.reason = "no real eigenvalue found in linear or quadratic factors";
    return cert;
  }
  QuadraticNumber dom = real_roots.front();
  for (const QuadraticNumber& r : real_roots)
    if (compare(r, dom) > 0) dom = r;

  if (!big_factor.empty()) {
    // a factor outside the quadratic scope could hide the true dominant root
    cert.reason = "characteristic polynomial has an unresolved factor of degree >= 3: " +
                  big_factor;
    return cert;
  }
  if (dom.is_rational()) {
    cert.reason = "dominant eigenvalue " + to_string(dom) +
                  " is rational (carried closed loops are not excluded)";
    return cert;
  }
  if (compare(dom, QuadraticNumber::rational(1)) <= 0) {
    cert.reason = "dominant eigenvalue is not > 1";
    return cert;
  }

  std::vector<QuadraticNumber> v = kernel_vector(m, dom);
  int neg = 0, pos = 0;
  for (const QuadraticNumber& e : v) (e.sign() < 0 ? neg : pos) += e.sign() != 0 ? 1 : 0;
  if (neg > 0 && pos == 0)
    for (QuadraticNumber& e : v) e = -e;
  for (const QuadraticNumber& e : v)
    if (e.sign() <= 0) {
      cert.reason = "eigenvector of the dominant eigenvalue is not entrywise positive";
      return cert;
    }
  if (!verify_eigenpair(m, dom, v)) {
    cert.reason = "eigenpair re-verification failed";
    return cert;
  }

  cert.certified = true;
  cert.dilatation = dom;
  cert.eigenvector = std::move(v);
  return cert;
}

}  // namespace twistcert::traintrack
