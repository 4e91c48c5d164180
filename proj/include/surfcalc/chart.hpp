#pragma once

#include <memory>
#include <string>
#include <utility>

#include "surfcalc/fields.hpp"
#include "surfcalc/jet.hpp"
#include "surfcalc/tensor.hpp"

namespace surfcalc {

/// Open rectangle in parameter space.
struct Rect2 {
    double u1_lo = 0.0, u1_hi = 1.0;
    double u2_lo = 0.0, u2_hi = 1.0;
};

/// Parametrized surface patch, possibly moving: (t, u1, u2) -> R^3.
///
/// The map is evaluated on (t, u1, u2)-jets, so tangents, second parameter
/// derivatives, the point velocity and its mixed t-u derivatives all come out
/// of a single evaluation, exactly. Stationary charts simply ignore t.
class Chart {
public:
    virtual ~Chart() = default;

    virtual Vec3T<Jet2_3> map_j3(const Jet2_3& t, const Jet2_3& u1, const Jet2_3& u2) const = 0;
    virtual Rect2 domain() const = 0;
    virtual bool moving() const { return false; }

    /// Level-set twin f(t,x) with Sigma(t) = {f = 0} and grad f / |grad f|
    /// matching the chart normal on the surface, when one is available.
    virtual const AmbientScalarField* implicit_surface() const { return nullptr; }

    Vec3 position(double t, const Vec2& u) const {
        const auto p = map_j3(Jet2_3::constant(t), Jet2_3::constant(u.x), Jet2_3::constant(u.y));
        return {p.x.val, p.y.val, p.z.val};
    }
    /// Full jet of the map at (t, u): vars are (0:t, 1:u1, 2:u2).
    Vec3T<Jet2_3> jet_at(double t, const Vec2& u) const {
        return map_j3(Jet2_3::variable(t, 0), Jet2_3::variable(u.x, 1), Jet2_3::variable(u.y, 2));
    }
};

template <class F>
class AnalyticChart final : public Chart {
public:
    AnalyticChart(Rect2 dom, F f, bool moving, std::shared_ptr<AmbientScalarField> implicit)
        : dom_(dom), f_(std::move(f)), moving_(moving), implicit_(std::move(implicit)) {}

    Vec3T<Jet2_3> map_j3(const Jet2_3& t, const Jet2_3& u1, const Jet2_3& u2) const override {
        return f_(t, u1, u2);
    }
    Rect2 domain() const override { return dom_; }
    bool moving() const override { return moving_; }
    const AmbientScalarField* implicit_surface() const override { return implicit_.get(); }

private:
    Rect2 dom_;
    F f_;
    bool moving_;
    std::shared_ptr<AmbientScalarField> implicit_;
};

/// f(t, u1, u2) -> Vec3T<scalar>, written generically in the scalar type.
template <class F>
std::shared_ptr<Chart> make_chart(Rect2 dom, F f, bool moving = false,
                                  std::shared_ptr<AmbientScalarField> implicit = nullptr) {
    return std::make_shared<AnalyticChart<F>>(dom, std::move(f), moving, std::move(implicit));
}

// Built-in chart constructors. Domains avoid chart degeneracies (sphere poles,
// disc center) by a margin of kPoleMargin; the truncation this causes is far
// below every tolerance used by the verifiers.
inline constexpr double kPoleMargin = 1e-6;

std::shared_ptr<Chart> make_plane(double lx = 1.0, double ly = 1.0);
std::shared_ptr<Chart> make_disc(double radius = 1.0);
std::shared_ptr<Chart> make_graph(double a, double kx, double ky);
std::shared_ptr<Chart> make_sphere(double radius = 1.0);
std::shared_ptr<Chart> make_sphere_cap(double radius, double theta_max);
std::shared_ptr<Chart> make_ellipsoid(double a, double b, double c);
std::shared_ptr<Chart> make_torus(double R = 2.0, double r = 0.5);

std::shared_ptr<Chart> make_translate_plane(double c);
std::shared_ptr<Chart> make_expand_sphere(double R0, double c);
std::shared_ptr<Chart> make_wave_graph(double a, double k, double omega);
std::shared_ptr<Chart> make_stretch_plane(double rate);
std::shared_ptr<Chart> make_rotate_sphere(double omega);

}  // namespace surfcalc
