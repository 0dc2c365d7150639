#include "voroslab/polynomial.hpp"

#include <algorithm>

namespace voroslab {

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<cplx> r(std::max(c_.size(), o.c_.size()), cplx(0));
  for (size_t k = 0; k < c_.size(); ++k) r[k] += c_[k];
  for (size_t k = 0; k < o.c_.size(); ++k) r[k] += o.c_[k];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<cplx> r(std::max(c_.size(), o.c_.size()), cplx(0));
  for (size_t k = 0; k < c_.size(); ++k) r[k] += c_[k];
  for (size_t k = 0; k < o.c_.size(); ++k) r[k] -= o.c_[k];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::vector<cplx> r(c_.size() + o.c_.size() - 1, cplx(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(cplx s) const {
  std::vector<cplx> r(c_);
  for (auto& a : r) a *= s;
  return Polynomial(std::move(r));
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& q,
                        Polynomial& r) {
  if (b.is_zero()) throw VError("polynomial division by zero", 3);
  std::vector<cplx> rem(a.c_);
  int db = b.degree();
  int da = a.degree();
  if (da < db) {
    q = Polynomial();
    r = a;
    return;
  }
  std::vector<cplx> quo(da - db + 1, cplx(0));
  cplx lb = b.leading();
  for (int k = da - db; k >= 0; --k) {
    cplx f = rem[k + db] / lb;
    quo[k] = f;
    for (int j = 0; j <= db; ++j) rem[k + j] -= f * b.c_[j];
  }
  rem.resize(db > 0 ? db : 0);
  q = Polynomial(std::move(quo));
  r = Polynomial(std::move(rem));
}

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial u = a, v = b;
  auto monic = [](Polynomial& p) {
    if (!p.is_zero()) p = p * (cplx(1) / p.leading());
  };
  monic(u);
  monic(v);
  if (u.is_zero()) return v;
  if (v.is_zero()) return u;
  if (u.degree() < v.degree()) std::swap(u, v);
  // cutoff relative to the running scale of the remainder sequence
  while (!v.is_zero() && v.degree() > 0) {
    Polynomial q, r;
    divmod(u, v, q, r);
    // drop remainders that are numerically zero relative to the operands
    if (r.max_abs_coeff() <= 1e-10 * std::max(1.0, u.max_abs_coeff())) {
      monic(v);
      return v;
    }
    u = v;
    v = r;
    monic(v);
  }
  return Polynomial::constant(1);
}

// ---------------------------------------------------------------------------

Rational::Rational(Polynomial num, Polynomial den, bool reduce_now)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw VError("rational with zero denominator", 3);
  if (reduce_now) reduce();
  cplx lb = den_.leading();
  num_ = num_ * (cplx(1) / lb);
  den_ = den_ * (cplx(1) / lb);
}

void Rational::reduce() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  if (num_.degree() + den_.degree() > 400)
    throw VError("rational degree cap (400) exceeded", 3);
  Polynomial g = Polynomial::gcd(num_, den_);
  if (g.degree() > 0) {
    Polynomial q, r;
    Polynomial::divmod(num_, g, q, r);
    num_ = q;
    Polynomial::divmod(den_, g, q, r);
    den_ = q;
  }
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
Rational Rational::operator-(const Rational& o) const {
  return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
Rational Rational::operator*(const Rational& o) const {
  return Rational(num_ * o.num_, den_ * o.den_);
}
Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw VError("rational division by zero", 3);
  return Rational(num_ * o.den_, den_ * o.num_);
}

Rational Rational::derivative() const {
  return Rational(num_.derivative() * den_ - num_ * den_.derivative(),
                  den_ * den_);
}

Rational Rational::at_inverse_coordinate() const {
  // p(1/w)/q(1/w) = w^(dq-dp) * rev(p)(w)/rev(q)(w)
  int dp = num_.degree(), dq = den_.degree();
  Polynomial rp = num_.reversed(), rq = den_.reversed();
  int s = dq - dp;
  Polynomial shift({cplx(1)});
  Polynomial w = Polynomial::x();
  for (int i = 0; i < std::abs(s); ++i) shift = shift * w;
  if (s >= 0) return Rational(rp * shift, rq);
  return Rational(rp, rq * shift);
}

}  // namespace voroslab
