#pragma once

#include <optional>
#include <vector>

#include "sdfvol/vec3.hpp"

namespace sdfvol {

/// Gradient of a signed distance field at a query point. `smooth` is false
/// when the query sat on a non-differentiable locus (exact CSG tie,
/// primitive center/axis) and a deterministically chosen branch was
/// returned instead of failing.
struct SdfGradient {
    Vec3 grad;
    bool smooth = true;
};

/// Node of an analytic CSG signed-distance tree. Sphere/Plane (and their
/// translates) are exact SDFs; Box and Torus use the standard closed forms
/// (exact); Union/Intersection via min/max give 1-Lipschitz lower/upper
/// distance bounds. Every composed node stays 1-Lipschitz.
///
/// Note on bounds: min-union preserves |d| as a lower bound on the distance
/// to the composed zero set, which the opacity error bounds rely on.
/// Intersection over-estimates that distance in some regions and is
/// therefore bound-conservative only empirically, not by proof.
class SdfNode {
public:
    enum class Kind { Sphere, Box, Torus, Plane, Translate, Union, Intersection, Complement };

    static SdfNode sphere(const Vec3& center, double radius);
    static SdfNode box(const Vec3& center, const Vec3& half_extents);
    /// Torus around the local y axis through `center`.
    static SdfNode torus(const Vec3& center, double major_radius, double minor_radius);
    static SdfNode plane(const Vec3& unit_normal, double offset);
    static SdfNode translate(SdfNode child, const Vec3& offset);
    static SdfNode union_of(std::vector<SdfNode> children);
    static SdfNode intersection_of(std::vector<SdfNode> children);
    static SdfNode complement(SdfNode child);

    Kind kind() const { return kind_; }
    const std::vector<SdfNode>& children() const { return children_; }

    double eval(const Vec3& x) const;
    SdfGradient grad(const Vec3& x) const;

private:
    SdfNode() = default;

    Kind kind_ = Kind::Sphere;
    Vec3 center_;        // sphere/box/torus center, plane normal, translate offset
    Vec3 half_extents_;  // box only
    double r0_ = 0.0;    // sphere radius / torus major radius / plane offset
    double r1_ = 0.0;    // torus minor radius
    std::vector<SdfNode> children_;
};

/// A scene is a CSG root clamped by the background bounding sphere:
/// d(x) = min(d_root(x), r - |x|). Everything at |x| >= r reads as
/// occluded, so every ray is eventually opaque. The root is optional; an
/// empty scene is just the bounding-sphere background.
class SdfScene {
public:
    SdfScene(std::optional<SdfNode> root, double bounding_radius);

    double bounding_radius() const { return bounding_radius_; }
    const std::optional<SdfNode>& root() const { return root_; }

    double eval(const Vec3& x) const;
    SdfGradient grad(const Vec3& x) const;

private:
    std::optional<SdfNode> root_;
    double bounding_radius_;
};

}  // namespace sdfvol
