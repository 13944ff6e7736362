#include "sdfvol/sdf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace sdfvol {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

double sign_nonneg(double v) { return v < 0.0 ? -1.0 : 1.0; }

}  // namespace

SdfNode SdfNode::sphere(const Vec3& center, double radius) {
    require(center.finite(), "sphere center must be finite");
    require(std::isfinite(radius) && radius > 0.0, "sphere radius must be > 0");
    SdfNode n;
    n.kind_ = Kind::Sphere;
    n.center_ = center;
    n.r0_ = radius;
    return n;
}

SdfNode SdfNode::box(const Vec3& center, const Vec3& half_extents) {
    require(center.finite() && half_extents.finite(), "box parameters must be finite");
    require(half_extents.x > 0.0 && half_extents.y > 0.0 && half_extents.z > 0.0,
            "box half-extents must be componentwise > 0");
    SdfNode n;
    n.kind_ = Kind::Box;
    n.center_ = center;
    n.half_extents_ = half_extents;
    return n;
}

SdfNode SdfNode::torus(const Vec3& center, double major_radius, double minor_radius) {
    require(center.finite(), "torus center must be finite");
    require(major_radius > 0.0 && minor_radius > 0.0, "torus radii must be > 0");
    SdfNode n;
    n.kind_ = Kind::Torus;
    n.center_ = center;
    n.r0_ = major_radius;
    n.r1_ = minor_radius;
    return n;
}

SdfNode SdfNode::plane(const Vec3& unit_normal, double offset) {
    require(unit_normal.finite() && std::isfinite(offset), "plane parameters must be finite");
    require(std::abs(unit_normal.norm() - 1.0) <= 1e-9, "plane normal must have unit length within 1e-9");
    SdfNode n;
    n.kind_ = Kind::Plane;
    n.center_ = unit_normal;
    n.r0_ = offset;
    return n;
}

SdfNode SdfNode::translate(SdfNode child, const Vec3& offset) {
    require(offset.finite(), "translate offset must be finite");
    SdfNode n;
    n.kind_ = Kind::Translate;
    n.center_ = offset;
    n.children_.push_back(std::move(child));
    return n;
}

SdfNode SdfNode::union_of(std::vector<SdfNode> children) {
    require(!children.empty(), "union needs at least one child");
    SdfNode n;
    n.kind_ = Kind::Union;
    n.children_ = std::move(children);
    return n;
}

SdfNode SdfNode::intersection_of(std::vector<SdfNode> children) {
    require(!children.empty(), "intersection needs at least one child");
    SdfNode n;
    n.kind_ = Kind::Intersection;
    n.children_ = std::move(children);
    return n;
}

SdfNode SdfNode::complement(SdfNode child) {
    SdfNode n;
    n.kind_ = Kind::Complement;
    n.children_.push_back(std::move(child));
    return n;
}

double SdfNode::eval(const Vec3& x) const {
    switch (kind_) {
        case Kind::Sphere:
            return (x - center_).norm() - r0_;
        case Kind::Box: {
            const Vec3 p = x - center_;
            const Vec3 q{std::abs(p.x) - half_extents_.x, std::abs(p.y) - half_extents_.y,
                         std::abs(p.z) - half_extents_.z};
            const Vec3 qpos{std::max(q.x, 0.0), std::max(q.y, 0.0), std::max(q.z, 0.0)};
            return qpos.norm() + std::min(std::max({q.x, q.y, q.z}), 0.0);
        }
        case Kind::Torus: {
            const Vec3 p = x - center_;
            const double rho = std::hypot(p.x, p.z);
            return std::hypot(rho - r0_, p.y) - r1_;
        }
        case Kind::Plane:
            return center_.dot(x) - r0_;
        case Kind::Translate:
            return children_[0].eval(x - center_);
        case Kind::Union: {
            double d = children_[0].eval(x);
            for (std::size_t i = 1; i < children_.size(); ++i) d = std::min(d, children_[i].eval(x));
            return d;
        }
        case Kind::Intersection: {
            double d = children_[0].eval(x);
            for (std::size_t i = 1; i < children_.size(); ++i) d = std::max(d, children_[i].eval(x));
            return d;
        }
        case Kind::Complement:
            return -children_[0].eval(x);
    }
    return 0.0;  // unreachable
}

SdfGradient SdfNode::grad(const Vec3& x) const {
    switch (kind_) {
        case Kind::Sphere: {
            const Vec3 u = x - center_;
            const double n = u.norm();
            if (n <= 1e-12) return {Vec3{1.0, 0.0, 0.0}, false};  // center: pick +x branch
            return {u / n, true};
        }
        case Kind::Box: {
            const Vec3 p = x - center_;
            const Vec3 s{sign_nonneg(p.x), sign_nonneg(p.y), sign_nonneg(p.z)};
            const Vec3 q{std::abs(p.x) - half_extents_.x, std::abs(p.y) - half_extents_.y,
                         std::abs(p.z) - half_extents_.z};
            const double qmax = std::max({q.x, q.y, q.z});
            if (qmax > 0.0) {
                const Vec3 qpos{std::max(q.x, 0.0), std::max(q.y, 0.0), std::max(q.z, 0.0)};
                const double n = qpos.norm();
                return {Vec3{s.x * qpos.x, s.y * qpos.y, s.z * qpos.z} / n, true};
            }
            // Inside: active axis is the largest q; exact ties break to the
            // lowest axis index and are flagged.
            int axis = 0;
            if (q.y > q[axis]) axis = 1;
            if (q.z > q[axis]) axis = 2;
            const bool tie = (axis != 0 && q.x == q[axis]) || (axis != 1 && q.y == q[axis]) ||
                             (axis != 2 && q.z == q[axis]);
            Vec3 g{0.0, 0.0, 0.0};
            g[axis] = s[axis];
            return {g, !tie && qmax != 0.0};
        }
        case Kind::Torus: {
            // Central differences (h = 1e-5); the analytic form is singular
            // on the symmetry axis and the core circle.
            const double h = 1e-5;
            auto f = [&](const Vec3& y) { return eval(y); };
            const Vec3 g{(f({x.x + h, x.y, x.z}) - f({x.x - h, x.y, x.z})) / (2 * h),
                         (f({x.x, x.y + h, x.z}) - f({x.x, x.y - h, x.z})) / (2 * h),
                         (f({x.x, x.y, x.z + h}) - f({x.x, x.y, x.z - h})) / (2 * h)};
            const Vec3 p = x - center_;
            const double rho = std::hypot(p.x, p.z);
            const bool smooth = rho > 1e-6 && std::hypot(rho - r0_, p.y) > 1e-6;
            return {g, smooth};
        }
        case Kind::Plane:
            return {center_, true};
        case Kind::Translate:
            return children_[0].grad(x - center_);
        case Kind::Union:
        case Kind::Intersection: {
            const bool want_min = kind_ == Kind::Union;
            std::size_t best = 0;
            double bestd = children_[0].eval(x);
            bool tie = false;
            for (std::size_t i = 1; i < children_.size(); ++i) {
                const double d = children_[i].eval(x);
                if (d == bestd) {
                    tie = true;  // lowest index wins
                } else if (want_min ? (d < bestd) : (d > bestd)) {
                    bestd = d;
                    best = i;
                    tie = false;
                }
            }
            SdfGradient g = children_[best].grad(x);
            g.smooth = g.smooth && !tie;
            return g;
        }
        case Kind::Complement: {
            SdfGradient g = children_[0].grad(x);
            g.grad = -g.grad;
            return g;
        }
    }
    return {Vec3{0.0, 0.0, 0.0}, false};  // unreachable
}

SdfScene::SdfScene(std::optional<SdfNode> root, double bounding_radius)
    : root_(std::move(root)), bounding_radius_(bounding_radius) {
    require(std::isfinite(bounding_radius) && bounding_radius > 0.0, "bounding radius must be > 0");
}

double SdfScene::eval(const Vec3& x) const {
    const double clamp = bounding_radius_ - x.norm();
    if (!root_) return clamp;
    return std::min(root_->eval(x), clamp);
}

SdfGradient SdfScene::grad(const Vec3& x) const {
    const double nx = x.norm();
    const double clamp = bounding_radius_ - nx;
    if (!root_) {
        if (nx <= 1e-12) return {Vec3{-1.0, 0.0, 0.0}, false};
        return {x / -nx, true};
    }
    const double dr = root_->eval(x);
    if (dr < clamp) return root_->grad(x);
    if (clamp < dr) {
        if (nx <= 1e-12) return {Vec3{-1.0, 0.0, 0.0}, false};
        return {x / -nx, true};
    }
    SdfGradient g = root_->grad(x);  // tie: root is the lower-index branch
    g.smooth = false;
    return g;
}

}  // namespace sdfvol
