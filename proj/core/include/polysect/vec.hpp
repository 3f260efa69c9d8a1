#pragma once

#include <Eigen/Dense>

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "polysect/scalar.hpp"

namespace polysect {

/// Exact point or vector in a low-dimensional ambient space. Arithmetic
/// between operands of different dimension throws DimensionMismatch.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t dim) : coords_(dim) {}
  explicit Vec(std::vector<Scalar> coords) : coords_(std::move(coords)) {}
  Vec(std::initializer_list<Scalar> coords) : coords_(coords) {}

  std::size_t dim() const { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  Scalar& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Scalar>& coords() const { return coords_; }

  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const;

  Vec& operator+=(const Vec& other);
  Vec& operator-=(const Vec& other);
  Vec& operator*=(const Scalar& factor);
  Vec& operator/=(const Scalar& divisor);

  friend bool operator==(const Vec& a, const Vec& b) { return a.coords_ == b.coords_; }
  /// Lexicographic order; used for deterministic output ordering.
  friend bool operator<(const Vec& a, const Vec& b);

 private:
  std::vector<Scalar> coords_;
};

using Point = Vec;
using Vector = Vec;

Vec operator+(Vec a, const Vec& b);
Vec operator-(Vec a, const Vec& b);
Vec operator-(Vec a);
Vec operator*(Vec a, const Scalar& factor);
Vec operator*(const Scalar& factor, Vec a);
Vec operator/(Vec a, const Scalar& divisor);

Scalar dot(const Vec& a, const Vec& b);
Scalar norm2(const Vec& a);

/// Positive multiple of v with coprime integer entries; zero stays zero.
Vec primitive_direction(const Vec& v);

/// Throws DimensionMismatch unless a and b share a dimension.
void require_same_dim(const Vec& a, const Vec& b, const char* context);

Vec unit_vector(std::size_t dim, std::size_t axis);

Eigen::VectorXd to_eigen(const Vec& v);
/// Exact conversion of every double coordinate.
Vec exact_vec(const Eigen::VectorXd& v);
/// Coordinates rounded to denominator 2^bits.
Vec rationalize(const Eigen::VectorXd& v, unsigned bits = 20);

std::string to_string(const Vec& v);

/// Arithmetic mean of a non-empty point set.
Point centroid(std::span<const Point> points);

}  // namespace polysect
