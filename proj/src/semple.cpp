#include "jetdiff/semple.hpp"

namespace jetdiff {

namespace {

void check_nr(unsigned n, unsigned r) {
  if (n < 1) throw ParameterError("need n >= 1");
  if (r < 1 || r > n) throw ParameterError("need 1 <= r <= n");
}

Rational sum(const WeightVector& a) {
  Rational s = 0;
  for (const auto& x : a) s += x;
  return s;
}

bool weight_criterion(const WeightVector& a, const Rational& p, bool strict) {
  const std::size_t k = a.size();
  if (k == 0) throw ParameterError("weight vector must have length >= 1");
  for (std::size_t j = 0; j + 2 < k; ++j) {
    if (a[j] < 3 * a[j + 1]) return false;
  }
  if (k >= 2) {
    if (strict ? !(a[k - 2] > 2 * a[k - 1]) : !(a[k - 2] >= 2 * a[k - 1])) return false;
  }
  if (strict ? !(a[k - 1] > 0) : !(a[k - 1] >= 0)) return false;
  const Rational bound = 2 * sum(a);
  return strict ? p > bound : p >= bound;
}

}  // namespace

unsigned long semple_dim(unsigned n, unsigned r, unsigned k) {
  check_nr(n, r);
  return n + static_cast<unsigned long>(k) * (r - 1);
}

unsigned semple_rank(unsigned n, unsigned r, unsigned) {
  check_nr(n, r);
  return r;
}

WeightVector weight_to_b(const WeightVector& a) {
  WeightVector b;
  Rational acc = 0;
  for (const auto& x : a) {
    acc += x;
    b.push_back(acc);
  }
  return b;
}

WeightVector first_differences(const WeightVector& b) {
  WeightVector a;
  Rational prev = 0;
  for (const auto& x : b) {
    a.push_back(x - prev);
    prev = x;
  }
  return a;
}

bool b_nonneg(const WeightVector& b) {
  for (const auto& x : b) {
    if (x < 0 || x.get_den() != 1) return false;
  }
  return true;
}

bool is_nef_weight(const WeightVector& a, const Rational& p) {
  return weight_criterion(a, p, false);
}

bool is_ample_weight(const WeightVector& a, const Rational& p) {
  return weight_criterion(a, p, true);
}

WeightedTwist lk_weight(unsigned k) {
  if (k < 1) throw ParameterError("need k >= 1");
  WeightVector a(k);
  BigInt w = 1;
  for (unsigned j = k; j-- > 0;) {
    a[j] = Rational(w);
    w *= 3;
  }
  return {std::move(a), Rational(w)};
}

WeightedTwist lk_prime_weight(unsigned k) {
  if (k < 1) throw ParameterError("need k >= 1");
  if (k == 1) return {{Rational(1)}, Rational(2)};
  WeightVector a(k);
  a[k - 1] = 1;
  BigInt w = 2;
  for (unsigned j = k - 1; j-- > 0;) {
    a[j] = Rational(w);
    w *= 3;
  }
  return {std::move(a), Rational(2 * pow(BigInt(3), k - 1))};
}

TautologicalClass& TautologicalClass::operator+=(const TautologicalClass& other) {
  if (weight.size() != other.weight.size()) {
    throw ParameterError("classes live on different Semple levels");
  }
  for (std::size_t j = 0; j < weight.size(); ++j) weight[j] += other.weight[j];
  base_twist += other.base_twist;
  kv_mult += other.kv_mult;
  return *this;
}

TautologicalClass TautologicalClass::operator-() const {
  TautologicalClass out = *this;
  for (auto& x : out.weight) x = -x;
  out.base_twist = -out.base_twist;
  out.kv_mult = -out.kv_mult;
  return out;
}

TautologicalClass pullback(const TautologicalClass& c) {
  TautologicalClass out = c;
  out.weight.push_back(0);
  return out;
}

TautologicalClass tautological(WeightVector weight) {
  return {std::move(weight), Rational(0), Rational(0)};
}

TautologicalClass canonical_twist(unsigned r, unsigned k) {
  if (r < 1) throw ParameterError("need r >= 1");
  return {WeightVector(k, -Rational(r - 1)), Rational(0), Rational(1)};
}

GglTwist ggl_twist(unsigned r, unsigned k, const Rational& eps) {
  if (eps <= 0) throw ParameterError("need eps > 0");
  const WeightVector c = lk_prime_weight(k).weight;
  WeightVector shift(k, Rational(r - 1));
  WeightVector scaled;
  for (const auto& x : c) scaled.push_back(eps * x);
  for (std::size_t j = 0; j < k; ++j) shift[j] += scaled[j];
  TautologicalClass cls = canonical_twist(r, k) + tautological(std::move(shift));
  return {std::move(cls), Rational(r - 1) * k + eps * sum(c)};
}

}  // namespace jetdiff
