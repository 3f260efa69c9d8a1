#include "polysect/vec.hpp"

#include <algorithm>

#include "polysect/error.hpp"

namespace polysect {

void require_same_dim(const Vec& a, const Vec& b, const char* context) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(context) + ": dimensions " + std::to_string(a.dim()) +
                            " and " + std::to_string(b.dim()) + " differ");
  }
}

bool Vec::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& c) { return c == 0; });
}

Vec& Vec::operator+=(const Vec& other) {
  require_same_dim(*this, other, "vector addition");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& other) {
  require_same_dim(*this, other, "vector subtraction");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Vec& Vec::operator*=(const Scalar& factor) {
  for (auto& c : coords_) c *= factor;
  return *this;
}

Vec& Vec::operator/=(const Scalar& divisor) {
  if (divisor == 0) throw PreconditionFailed("division of a vector by zero");
  for (auto& c : coords_) c /= divisor;
  return *this;
}

bool operator<(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                      b.coords_.end());
}

Vec operator+(Vec a, const Vec& b) { return a += b; }
Vec operator-(Vec a, const Vec& b) { return a -= b; }
Vec operator-(Vec a) { return a *= Scalar(-1); }
Vec operator*(Vec a, const Scalar& factor) { return a *= factor; }
Vec operator*(const Scalar& factor, Vec a) { return a *= factor; }
Vec operator/(Vec a, const Scalar& divisor) { return a /= divisor; }

Scalar dot(const Vec& a, const Vec& b) {
  require_same_dim(a, b, "dot product");
  Scalar sum = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) sum += a[i] * b[i];
  return sum;
}

Scalar norm2(const Vec& a) { return dot(a, a); }

Vec primitive_direction(const Vec& v) {
  if (v.is_zero()) return v;
  mpz_class lcm_den = 1;
  for (const auto& c : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(v.dim());
  mpz_class g = 0;
  for (const auto& c : v) {
    mpz_class n = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    ints.push_back(n);
  }
  Vec out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = Scalar(ints[i] / g);
  return out;
}

Vec unit_vector(std::size_t dim, std::size_t axis) {
  Vec e(dim);
  e[axis] = 1;
  return e;
}

Eigen::VectorXd to_eigen(const Vec& v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.dim()));
  for (std::size_t i = 0; i < v.dim(); ++i) out[static_cast<Eigen::Index>(i)] = v[i].get_d();
  return out;
}

Vec exact_vec(const Eigen::VectorXd& v) {
  Vec out(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(i)] = exact_from_double(v[i]);
  return out;
}

Vec rationalize(const Eigen::VectorXd& v, unsigned bits) {
  Vec out(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(i)] = rationalize(v[i], bits);
  return out;
}

std::string to_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

Point centroid(std::span<const Point> points) {
  if (points.empty()) throw PreconditionFailed("centroid of an empty point set");
  Point sum(points.front().dim());
  for (const auto& p : points) sum += p;
  return sum / Scalar(static_cast<long>(points.size()));
}

}  // namespace polysect
