#pragma once

#include <memory>
#include <utility>

#include "surfcalc/jet.hpp"
#include "surfcalc/tensor.hpp"

namespace surfcalc {

// Fields come in two kinds and the kind decides which operators apply:
//  - ambient fields live on an open neighborhood of the surface and are
//    differentiable in (t, x1, x2, x3);
//  - surface fields live on the parameter domain and are differentiable in
//    (t, u1, u2) only.
// Both expose a second signature over (t, u1, u2)-jets so that compositions
// with a chart propagate derivatives through forward-mode evaluation.

class AmbientScalarField {
public:
    virtual ~AmbientScalarField() = default;

    virtual Jet2_4 eval_j4(const Jet2_4& t, const Jet2_4& x, const Jet2_4& y, const Jet2_4& z) const = 0;
    virtual Jet2_3 eval_j3(const Jet2_3& t, const Jet2_3& x, const Jet2_3& y, const Jet2_3& z) const = 0;

    /// Full space-time jet at a point: value, (d/dt, grad) and second partials.
    Jet2_4 jet_at(double t, const Vec3& p) const {
        return eval_j4(Jet2_4::variable(t, 0), Jet2_4::variable(p.x, 1), Jet2_4::variable(p.y, 2),
                       Jet2_4::variable(p.z, 3));
    }
    double value(double t, const Vec3& p) const { return jet_at(t, p).val; }
    Vec3 gradient(double t, const Vec3& p) const {
        const Jet2_4 j = jet_at(t, p);
        return {j.grad[1], j.grad[2], j.grad[3]};
    }
    double time_derivative(double t, const Vec3& p) const { return jet_at(t, p).grad[0]; }
};

class AmbientVectorField {
public:
    virtual ~AmbientVectorField() = default;

    virtual Vec3T<Jet2_4> eval_j4(const Jet2_4& t, const Jet2_4& x, const Jet2_4& y,
                                  const Jet2_4& z) const = 0;
    virtual Vec3T<Jet2_3> eval_j3(const Jet2_3& t, const Jet2_3& x, const Jet2_3& y,
                                  const Jet2_3& z) const = 0;

    Vec3T<Jet2_4> jet_at(double t, const Vec3& p) const {
        return eval_j4(Jet2_4::variable(t, 0), Jet2_4::variable(p.x, 1), Jet2_4::variable(p.y, 2),
                       Jet2_4::variable(p.z, 3));
    }
    Vec3 value(double t, const Vec3& p) const {
        const auto j = jet_at(t, p);
        return {j.x.val, j.y.val, j.z.val};
    }
    /// Spatial Jacobian J(i,j) = d a_i / d x_j.
    Mat3 jacobian(double t, const Vec3& p) const {
        const auto j = jet_at(t, p);
        Mat3 m;
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) m(i, k) = j[i].grad[k + 1];
        return m;
    }
};

/// Scalar density defined on the surface parameters only.
class SurfaceScalarField {
public:
    virtual ~SurfaceScalarField() = default;
    virtual Jet2_3 eval(const Jet2_3& t, const Jet2_3& u1, const Jet2_3& u2) const = 0;

    Jet2_3 jet_at(double t, const Vec2& u) const {
        return eval(Jet2_3::variable(t, 0), Jet2_3::variable(u.x, 1), Jet2_3::variable(u.y, 2));
    }
    double value(double t, const Vec2& u) const { return jet_at(t, u).val; }
};

/// Tangential surface vector given by contravariant components a^alpha(t, u).
class SurfaceVectorField2 {
public:
    virtual ~SurfaceVectorField2() = default;
    virtual Vec2T<Jet2_3> eval(const Jet2_3& t, const Jet2_3& u1, const Jet2_3& u2) const = 0;

    Vec2T<Jet2_3> jet_at(double t, const Vec2& u) const {
        return eval(Jet2_3::variable(t, 0), Jet2_3::variable(u.x, 1), Jet2_3::variable(u.y, 2));
    }
};

// --- generic-lambda adapters --------------------------------------------------

template <class F>
class AnalyticScalarField final : public AmbientScalarField {
public:
    explicit AnalyticScalarField(F f) : f_(std::move(f)) {}
    Jet2_4 eval_j4(const Jet2_4& t, const Jet2_4& x, const Jet2_4& y, const Jet2_4& z) const override {
        return f_(t, x, y, z);
    }
    Jet2_3 eval_j3(const Jet2_3& t, const Jet2_3& x, const Jet2_3& y, const Jet2_3& z) const override {
        return f_(t, x, y, z);
    }

private:
    F f_;
};

template <class F>
class AnalyticVectorField final : public AmbientVectorField {
public:
    explicit AnalyticVectorField(F f) : f_(std::move(f)) {}
    Vec3T<Jet2_4> eval_j4(const Jet2_4& t, const Jet2_4& x, const Jet2_4& y, const Jet2_4& z) const override {
        return f_(t, x, y, z);
    }
    Vec3T<Jet2_3> eval_j3(const Jet2_3& t, const Jet2_3& x, const Jet2_3& y, const Jet2_3& z) const override {
        return f_(t, x, y, z);
    }

private:
    F f_;
};

template <class F>
class AnalyticSurfaceField final : public SurfaceScalarField {
public:
    explicit AnalyticSurfaceField(F f) : f_(std::move(f)) {}
    Jet2_3 eval(const Jet2_3& t, const Jet2_3& u1, const Jet2_3& u2) const override { return f_(t, u1, u2); }

private:
    F f_;
};

template <class F>
class AnalyticSurfaceVector2 final : public SurfaceVectorField2 {
public:
    explicit AnalyticSurfaceVector2(F f) : f_(std::move(f)) {}
    Vec2T<Jet2_3> eval(const Jet2_3& t, const Jet2_3& u1, const Jet2_3& u2) const override {
        return f_(t, u1, u2);
    }

private:
    F f_;
};

/// f(t, x, y, z) -> scalar, written generically in the scalar type.
template <class F>
std::shared_ptr<AmbientScalarField> scalar_field(F f) {
    return std::make_shared<AnalyticScalarField<F>>(std::move(f));
}

/// f(t, x, y, z) -> Vec3T<scalar>.
template <class F>
std::shared_ptr<AmbientVectorField> vector_field(F f) {
    return std::make_shared<AnalyticVectorField<F>>(std::move(f));
}

/// f(t, u1, u2) -> scalar on the parameter domain.
template <class F>
std::shared_ptr<SurfaceScalarField> surface_field(F f) {
    return std::make_shared<AnalyticSurfaceField<F>>(std::move(f));
}

/// f(t, u1, u2) -> Vec2T<scalar> of contravariant components.
template <class F>
std::shared_ptr<SurfaceVectorField2> surface_vector2(F f) {
    return std::make_shared<AnalyticSurfaceVector2<F>>(std::move(f));
}

/// Marks a surface density as extended off the surface as a constant along
/// normal lines. The extension is never materialized; it only declares
/// psi_nu = 0, which makes the ambient-form operators applicable.
struct NormalConstantExtension {
    std::shared_ptr<SurfaceScalarField> base;
};

inline NormalConstantExtension extend_constant_in_normal(std::shared_ptr<SurfaceScalarField> f) {
    return {std::move(f)};
}

}  // namespace surfcalc
