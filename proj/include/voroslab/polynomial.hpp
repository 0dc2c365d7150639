#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace voroslab {

using cplx = std::complex<double>;

inline constexpr double kCoeffEps = 1e-13;

struct VError : std::runtime_error {
  // exit-code category: 1 verification, 2 input, 3 numerical resolution
  int category;
  explicit VError(const std::string& msg, int cat = 3)
      : std::runtime_error(msg), category(cat) {}
};

/// Dense univariate polynomial with complex coefficients, ascending degree.
/// Trailing coefficients below kCoeffEps relative to the largest one are
/// trimmed so that degree() always refers to a genuinely nonzero leading term.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<cplx> c) : c_(c) { trim(); }
  explicit Polynomial(std::vector<cplx> c) : c_(std::move(c)) { trim(); }
  static Polynomial constant(cplx a) { return Polynomial({a}); }
  static Polynomial x() { return Polynomial({cplx(0), cplx(1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  const std::vector<cplx>& coeffs() const { return c_; }
  cplx coeff(int k) const {
    return (k >= 0 && k < (int)c_.size()) ? c_[k] : cplx(0);
  }
  cplx leading() const { return c_.empty() ? cplx(0) : c_.back(); }

  cplx eval(cplx z) const {
    cplx r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * z + *it;
    return r;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<cplx> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = double(k) * c_[k];
    return Polynomial(std::move(d));
  }

  double max_abs_coeff() const {
    double m = 0;
    for (auto& a : c_) m = std::max(m, std::abs(a));
    return m;
  }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(cplx s) const;
  Polynomial operator-() const { return *this * cplx(-1); }

  // Quotient and remainder; the divisor's leading coefficient must be nonzero.
  static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q,
                     Polynomial& r);

  // GCD by a monic Euclidean remainder sequence with a relative cutoff.
  static Polynomial gcd(const Polynomial& a, const Polynomial& b);

  // Reverses coefficients: z^n p(1/z) for n = degree().
  Polynomial reversed() const {
    std::vector<cplx> r(c_.rbegin(), c_.rend());
    return Polynomial(std::move(r));
  }

  void trim() {
    double m = max_abs_coeff();
    while (!c_.empty() && std::abs(c_.back()) <= kCoeffEps * std::max(m, 1e-300))
      c_.pop_back();
    if (c_.empty()) c_.shrink_to_fit();
  }

 private:
  std::vector<cplx> c_;
};

/// Reduced ratio of two polynomials.  The denominator is kept monic.
class Rational {
 public:
  Rational() : num_(), den_({cplx(1)}) {}
  Rational(Polynomial num, Polynomial den, bool reduce_now = true);
  static Rational constant(cplx a) {
    return Rational(Polynomial::constant(a), Polynomial::constant(1), false);
  }
  static Rational zero() { return Rational(); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  cplx eval(cplx z) const { return num_.eval(z) / den_.eval(z); }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational operator*(cplx s) const { return Rational(num_ * s, den_, false); }
  Rational operator-() const { return *this * cplx(-1); }

  Rational derivative() const;

  // degree of num - degree of den; order of vanishing at infinity is -deg_diff
  int deg_diff() const { return num_.degree() - den_.degree(); }

  // substitute z -> 1/w and clear w powers: returns (num(1/w), den(1/w)) as a
  // rational in w (used for the chart at infinity together with the w^-4
  // Jacobian handled by the caller).
  Rational at_inverse_coordinate() const;

 private:
  void reduce();
  Polynomial num_, den_;
};

}  // namespace voroslab
