#include "polysect/body_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polysect/error.hpp"
#include "polysect/linalg.hpp"

namespace polysect {
namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

Membership classify(double signed_distance, double tau) {
  if (signed_distance < -tau) return Membership::inside;
  if (signed_distance <= tau) return Membership::boundary;
  return Membership::outside;
}

std::optional<Interval> clip_ball(const Eigen::VectorXd& c, double r, const Eigen::VectorXd& o,
                                  const Eigen::VectorXd& dir) {
  const Eigen::VectorXd w = o - c;
  const double a = dir.squaredNorm();
  const double b = w.dot(dir);
  const double disc = b * b - a * (w.squaredNorm() - r * r);
  if (a == 0 || disc < 0) return std::nullopt;
  const double s = std::sqrt(disc);
  return Interval{(-b - s) / a, (-b + s) / a};
}

/// Halfspaces in double precision with unit normals.
struct FloatHalfspace {
  Eigen::VectorXd normal;
  double offset;
};

std::vector<FloatHalfspace> unit_halfspaces(const std::vector<Halfspace>& hs) {
  std::vector<FloatHalfspace> out;
  for (const auto& h : hs) {
    Eigen::VectorXd n = to_eigen(h.normal);
    const double len = n.norm();
    out.push_back({n / len, to_double(h.offset) / len});
  }
  return out;
}

std::optional<Interval> clip_halfspaces(const std::vector<FloatHalfspace>& hs, const Eigen::VectorXd& o,
                                        const Eigen::VectorXd& dir) {
  Interval iv{-inf, inf};
  for (const auto& h : hs) {
    const double a = h.normal.dot(dir);
    const double b = h.offset - h.normal.dot(o);
    if (a == 0) {
      if (b < 0) return std::nullopt;
    } else if (a > 0) {
      iv.hi = std::min(iv.hi, b / a);
    } else {
      iv.lo = std::max(iv.lo, b / a);
    }
  }
  if (iv.lo > iv.hi) return std::nullopt;
  return iv;
}

double max_violation(const std::vector<FloatHalfspace>& hs, const Eigen::VectorXd& x) {
  double worst = -inf;
  for (const auto& h : hs) worst = std::max(worst, h.normal.dot(x) - h.offset);
  return worst;
}

class Ball final : public BodyOracle {
 public:
  Ball(Eigen::VectorXd c, double r, double tau) : c_(std::move(c)), r_(r), tau_(tau) {}

  std::size_t dim() const override { return c_.size(); }
  SupportResult support(const Eigen::VectorXd& u) const override {
    const double len = u.norm();
    return {c_.dot(u) + r_ * len, c_ + r_ * u / len};
  }
  Membership membership(const Eigen::VectorXd& x) const override { return classify((x - c_).norm() - r_, tau_); }
  std::optional<Interval> clip_line(const Eigen::VectorXd& o, const Eigen::VectorXd& dir) const override {
    return clip_ball(c_, r_, o, dir);
  }
  Eigen::VectorXd interior_point() const override { return c_; }
  double tolerance() const override { return tau_; }
  std::string kind() const override { return "ball"; }

 private:
  Eigen::VectorXd c_;
  double r_;
  double tau_;
};

class Ellipsoid final : public BodyOracle {
 public:
  Ellipsoid(Eigen::VectorXd c, Eigen::VectorXd axes, double tau) : c_(std::move(c)), a_(std::move(axes)), tau_(tau) {}

  std::size_t dim() const override { return c_.size(); }
  SupportResult support(const Eigen::VectorXd& u) const override {
    const Eigen::VectorXd au = a_.cwiseProduct(u);
    const double len = au.norm();
    const Eigen::VectorXd p = c_ + a_.cwiseProduct(au) / len;
    return {c_.dot(u) + len, p};
  }
  Membership membership(const Eigen::VectorXd& x) const override {
    const double gauge = (x - c_).cwiseQuotient(a_).norm();
    return classify((gauge - 1.0) * a_.minCoeff(), tau_);
  }
  std::optional<Interval> clip_line(const Eigen::VectorXd& o, const Eigen::VectorXd& dir) const override {
    const Eigen::VectorXd so = (o - c_).cwiseQuotient(a_);
    const Eigen::VectorXd sd = dir.cwiseQuotient(a_);
    return clip_ball(Eigen::VectorXd::Zero(c_.size()), 1.0, so, sd);
  }
  Eigen::VectorXd interior_point() const override { return c_; }
  double tolerance() const override { return tau_; }
  std::string kind() const override { return "ellipsoid"; }

 private:
  Eigen::VectorXd c_;
  Eigen::VectorXd a_;
  double tau_;
};

class WrappedPolytope final : public BodyOracle {
 public:
  explicit WrappedPolytope(VPolytope p) : p_(std::move(p)), hs_(unit_halfspaces(p_.facets())) {
    for (const auto& v : p_.vertices()) verts_.push_back(to_eigen(v));
    centre_ = to_eigen(centroid(p_.vertices()));
  }

  std::size_t dim() const override { return p_.ambient_dim(); }
  SupportResult support(const Eigen::VectorXd& u) const override {
    std::size_t best = 0;
    for (std::size_t i = 1; i < verts_.size(); ++i) {
      if (verts_[i].dot(u) > verts_[best].dot(u)) best = i;
    }
    return {verts_[best].dot(u), verts_[best]};
  }
  Membership membership(const Eigen::VectorXd& x) const override {
    const Point px = exact_vec(x);
    bool tight = false;
    for (const auto& h : p_.facets()) {
      const int s = sign(h.slack(px));
      if (s < 0) return Membership::outside;
      if (s == 0) tight = true;
    }
    return tight ? Membership::boundary : Membership::inside;
  }
  std::optional<Interval> clip_line(const Eigen::VectorXd& o, const Eigen::VectorXd& dir) const override {
    return clip_halfspaces(hs_, o, dir);
  }
  Eigen::VectorXd interior_point() const override { return centre_; }
  double tolerance() const override { return 0.0; }
  std::string kind() const override { return "polytope"; }
  bool exact() const override { return true; }
  const VPolytope* polytope() const override { return &p_; }

 private:
  VPolytope p_;
  std::vector<FloatHalfspace> hs_;
  std::vector<Eigen::VectorXd> verts_;
  Eigen::VectorXd centre_;
};

/// K' ∩ B where K' is the polytope with one facet pushed outward.
class CapBody final : public BodyOracle {
 public:
  struct Face {
    Eigen::VectorXd base;
    Eigen::MatrixXd frame;  // orthonormal columns spanning the face directions
  };

  CapBody(std::vector<FloatHalfspace> hs, std::vector<Face> faces, Eigen::VectorXd c, double r,
          Eigen::VectorXd interior, double tau)
      : hs_(std::move(hs)), faces_(std::move(faces)), c_(std::move(c)), r_(r), interior_(std::move(interior)),
        tau_(tau) {}

  std::size_t dim() const override { return c_.size(); }

  SupportResult support(const Eigen::VectorXd& u) const override {
    SupportResult best{-inf, Eigen::VectorXd()};
    const double slack = 1e-12 * (1.0 + r_);
    for (const auto& f : faces_) {
      const Eigen::VectorXd rel = c_ - f.base;
      Eigen::VectorXd cf = f.base;
      Eigen::VectorXd uf = Eigen::VectorXd::Zero(dim());
      if (f.frame.cols() > 0) {
        cf += f.frame * (f.frame.transpose() * rel);
        uf = f.frame * (f.frame.transpose() * u);
      }
      const double r2 = r_ * r_ - (c_ - cf).squaredNorm();
      if (r2 < 0) continue;
      Eigen::VectorXd x = cf;
      const double ulen = uf.norm();
      if (ulen > 1e-14 * u.norm()) x += std::sqrt(r2) * uf / ulen;
      if (max_violation(hs_, x) > slack) continue;
      const double value = u.dot(x);
      if (value > best.value) best = {value, x};
    }
    if (best.point.size() == 0) throw Error("cap body support found no candidate");
    return best;
  }

  Membership membership(const Eigen::VectorXd& x) const override {
    return classify(std::max(max_violation(hs_, x), (x - c_).norm() - r_), tau_);
  }
  std::optional<Interval> clip_line(const Eigen::VectorXd& o, const Eigen::VectorXd& dir) const override {
    auto a = clip_halfspaces(hs_, o, dir);
    auto b = clip_ball(c_, r_, o, dir);
    if (!a || !b) return std::nullopt;
    Interval iv{std::max(a->lo, b->lo), std::min(a->hi, b->hi)};
    if (iv.lo > iv.hi) return std::nullopt;
    return iv;
  }
  Eigen::VectorXd interior_point() const override { return interior_; }
  double tolerance() const override { return tau_; }
  std::string kind() const override { return "cap"; }

 private:
  std::vector<FloatHalfspace> hs_;
  std::vector<Face> faces_;
  Eigen::VectorXd c_;
  double r_;
  Eigen::VectorXd interior_;
  double tau_;
};

void require_positive_tau(double tau) {
  if (!(tau >= 0) || !std::isfinite(tau)) throw PreconditionFailed("tolerance must be finite and nonnegative");
}

}  // namespace

BodyPtr make_ball(const Eigen::VectorXd& center, double radius, double tau) {
  if (!(radius > 0) || !std::isfinite(radius)) throw PreconditionFailed("ball radius must be positive");
  if (center.size() < 2) throw PreconditionFailed("ball dimension must be at least 2");
  require_positive_tau(tau);
  return std::make_shared<Ball>(center, radius, tau);
}

BodyPtr make_ellipsoid(const Eigen::VectorXd& center, const Eigen::VectorXd& axes, double tau) {
  if (center.size() != axes.size()) throw DimensionMismatch("ellipsoid axes");
  if (center.size() < 2) throw PreconditionFailed("ellipsoid dimension must be at least 2");
  for (double a : axes) {
    if (!(a > 0) || !std::isfinite(a)) throw PreconditionFailed("ellipsoid axes must be positive");
  }
  require_positive_tau(tau);
  return std::make_shared<Ellipsoid>(center, axes, tau);
}

BodyPtr wrap_polytope(VPolytope polytope) {
  if (!polytope.full_dimensional()) throw PreconditionFailed("wrapped polytope must be full-dimensional");
  return std::make_shared<WrappedPolytope>(std::move(polytope));
}

BodyPtr glue_cap(const VPolytope& polytope, const FaceRef& facet, double height, double tau) {
  if (facet.dim + 1 != polytope.ambient_dim() || facet.facets.size() != 1) {
    throw PreconditionFailed("cap must be glued on a facet");
  }
  return glue_cap(polytope, facet.facets.front(), height, tau);
}

BodyPtr glue_cap(const VPolytope& polytope, std::size_t facet_index, double height, double tau) {
  if (!polytope.full_dimensional()) throw PreconditionFailed("cap body needs a full-dimensional polytope");
  if (facet_index >= polytope.facets().size()) throw PreconditionFailed("facet index out of range");
  if (!(height > 0) || !std::isfinite(height)) throw PreconditionFailed("cap height must be positive");
  require_positive_tau(tau);
  const std::size_t d = polytope.ambient_dim();

  const Halfspace& facet = polytope.facets()[facet_index];
  const Eigen::VectorXd n = to_eigen(facet.normal);
  const double nlen = n.norm();
  const Eigen::VectorXd nhat = n / nlen;

  // Push the facet out by `height`; the push must keep every vertex.
  std::vector<Halfspace> pushed = polytope.facets();
  pushed[facet_index] =
      Halfspace(facet.normal, facet.offset + rationalize(height * nlen, 40));
  const auto outer = vertices_of(HPolytope(d, pushed));
  if (!outer || outer->vertices().size() != polytope.vertices().size() ||
      outer->facets().size() != polytope.facets().size()) {
    throw PreconditionFailed("cap height too large: pushing the facet changes the polytope's combinatorics");
  }
  const double h = height;

  std::vector<Point> on_facet;
  for (auto i : polytope.facet_vertices()[facet_index]) on_facet.push_back(polytope.vertices()[i]);
  const Eigen::VectorXd g = to_eigen(centroid(on_facet));

  // Smallest admissible radius so that every vertex of K lies in the ball
  // centred at g - (R - h) nhat, with a 1% margin.
  double radius = 0;
  for (const auto& v : polytope.vertices()) {
    const Eigen::VectorXd rel = to_eigen(v) - g;
    const double s = rel.dot(nhat);
    const double need = (rel.squaredNorm() + h * h - 2 * h * s) / (2 * (h - s));
    radius = std::max(radius, need);
  }
  radius *= 1.01;
  radius = std::max(radius, 2 * h);
  const Eigen::VectorXd centre = g - (radius - h) * nhat;

  std::vector<CapBody::Face> faces;
  for (const auto& f : outer->faces()) {
    const auto pts = outer->face_points(f);
    const Eigen::VectorXd base = to_eigen(pts.front());
    Eigen::MatrixXd dirs(d, static_cast<Eigen::Index>(pts.size() - 1));
    for (std::size_t i = 1; i < pts.size(); ++i) dirs.col(static_cast<Eigen::Index>(i - 1)) = to_eigen(pts[i]) - base;
    Eigen::MatrixXd frame(d, 0);
    if (f.dim > 0) {
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(dirs, Eigen::ComputeThinU);
      frame = svd.matrixU().leftCols(static_cast<Eigen::Index>(f.dim));
    }
    faces.push_back({base, frame});
  }
  return std::make_shared<CapBody>(unit_halfspaces(outer->facets()), std::move(faces), centre, radius,
                                   to_eigen(centroid(polytope.vertices())), tau);
}

}  // namespace polysect
