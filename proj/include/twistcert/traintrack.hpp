#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistcert/rational.hpp"
#include "twistcert/word.hpp"

namespace twistcert::traintrack {

using IntMatrix = std::vector<std::vector<Int>>;

IntMatrix identity_matrix(int n);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
Int mat_det(const IntMatrix& m);

// Branch-coordinate chart: one nonnegative integer transition matrix per
// generator. det_pm1 marks matrices claimed to be full-carrying actions.
struct ChartGenerator {
  std::string name;
  IntMatrix matrix;
  bool det_pm1 = false;
};

struct Chart {
  int branch_count = 0;
  std::vector<ChartGenerator> generators;
  std::string provenance;

  int generator_index(const std::string& name) const;  // -1 if unknown
};

std::vector<std::string> validate(const Chart& chart);

// Product of generator matrices in word order (rightmost letter acts
// first). Negative exponents use the exact integer inverse, which exists
// only for det +-1 matrices.
IntMatrix compose(const Chart& chart, const TwistWord& w);

// Monic integer polynomial, coefficients ascending (coeffs[k] multiplies x^k).
struct Polynomial {
  std::vector<Int> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Int eval(const Int& x) const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

std::string to_string(const Polynomial& p);

// Exact characteristic polynomial det(xI - M), via the Faddeev-LeVerrier
// recurrence (all divisions exact).
Polynomial char_poly(const IntMatrix& m);

// Monic integer factorization by integer-root extraction then trial
// quadratic divisors. Factors of degree >= 3 that resist both are returned
// unfactored.
struct Factorization {
  std::vector<std::pair<Polynomial, int>> factors;  // (factor, multiplicity)
};
Factorization factor_poly(const Polynomial& p);

// a + b*sqrt(d) with exact rational a, b and squarefree d >= 0 (d = 0 or
// b = 0 encodes a rational). All comparisons are exact.
struct QuadraticNumber {
  Rat a;
  Rat b;
  long long d = 0;

  static QuadraticNumber rational(Rat v) { return {std::move(v), Rat(0), 0}; }
  bool is_rational() const { return b == 0 || d == 0; }

  QuadraticNumber operator+(const QuadraticNumber& rhs) const;
  QuadraticNumber operator-(const QuadraticNumber& rhs) const;
  QuadraticNumber operator*(const QuadraticNumber& rhs) const;
  QuadraticNumber operator/(const QuadraticNumber& rhs) const;
  QuadraticNumber operator-() const;

  int sign() const;
  bool operator==(const QuadraticNumber& rhs) const;
};

std::string to_string(const QuadraticNumber& q);

// Exact order comparison, valid across different radicands.
int compare(const QuadraticNumber& x, const QuadraticNumber& y);

long long squarefree_part(long long n, long long* square_factor);

// Exact check that M v = lambda v with v entrywise positive; all entries
// must live in one quadratic field.
bool verify_eigenpair(const IntMatrix& m, const QuadraticNumber& lambda,
                      const std::vector<QuadraticNumber>& v);

// Pseudo-Anosov-on-chart certificate: primitivity of M, a dominant
// eigenvalue that is a quadratic irrational > 1, and an exactly computed
// positive eigenvector. Irrationality is what rules out carried closed
// loops and puncture-to-puncture leaves at the chart level.
struct PaCertificate {
  bool certified = false;
  QuadraticNumber dilatation;
  std::vector<QuadraticNumber> eigenvector;
  int primitivity_power = 0;
  std::string reason;  // failed condition when not certified
};
PaCertificate pa_certificate(const IntMatrix& m);

}  // namespace twistcert::traintrack
