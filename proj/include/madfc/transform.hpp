#pragma once

// Fold change coordinate transforms.
//
// A fold change is the ratio of an experiment group mean to a control group
// mean: strictly positive, with 1 denoting no change. On a raw axis the
// positive direction occupies (1, inf) while the negative direction is
// compressed into (0, 1); on a log axis both directions are symmetric but the
// spacing is no longer proportional to the fold change itself.
//
// mad_forward() maps a fold change to "fold change units from no change":
//
//     mad_forward(x) = x - 1      for x >= 1
//     mad_forward(x) = 1 - 1/x    for 0 < x < 1
//
// so 2 -> +1, 1/2 -> -1, 3 -> +2, 1/3 -> -2, 1 -> 0. The map is a strictly
// increasing bijection from (0, inf) onto all of R: reciprocal pairs land
// symmetrically about 0 and same-direction values keep their mutual
// proportions. It factors into a mirror step that reflects (0, 1) onto
// (-inf, -1) and a contraction step that closes the (-1, 1) gap; the factors
// and their inverses are exposed separately because axis labeling runs the
// inverses on tick coordinates (inverse_contraction first, then
// inverse_mirror).
//
// The 1 - 1/x branch is written exactly in that form on purpose: together
// with mad_inverse's 1/(1 - t) branch it makes integer coordinates round-trip
// bit-exactly (mad_forward(mad_inverse(-8)) == -8.0), which the simulated
// sweep datasets rely on.

#include <cmath>
#include <concepts>
#include <string>
#include <string_view>

#include <Eigen/Core>

#include "madfc/error.hpp"

namespace madfc {

namespace detail {

template <std::floating_point Scalar>
void check_fold_change(Scalar x) {
    if (!(std::isfinite(x) && x > Scalar(0)))
        throw domain_error("fold change must be finite and positive, got " +
                           std::to_string(x));
}

template <std::floating_point Scalar>
void check_finite(Scalar value, const char* what) {
    if (!std::isfinite(value))
        throw domain_error(std::string(what) + " must be finite, got " +
                           std::to_string(value));
}

}  // namespace detail

// Mirror transform: reflects negative-direction fold changes in (0, 1) onto
// (-inf, -1) so reciprocal pairs become equidistant from zero. Identity on
// [1, inf).
template <std::floating_point Scalar>
Scalar mirror_transform(Scalar x) {
    detail::check_fold_change(x);
    return x >= Scalar(1) ? x : Scalar(-1) / x;
}

// Contraction transform: shifts both branches of the mirrored axis one unit
// toward zero, closing the (-1, 1) gap left by the mirror. Undefined on
// [-1, 1), which the mirror never produces.
template <std::floating_point Scalar>
Scalar contraction_transform(Scalar m) {
    detail::check_finite(m, "mirrored value");
    if (m >= Scalar(1))
        return m - Scalar(1);
    if (m < Scalar(-1))
        return m + Scalar(1);
    throw undefined_region_error(
        "contraction transform is undefined on [-1, 1), got " + std::to_string(m));
}

// Full forward transform, contraction_transform(mirror_transform(x)).
template <std::floating_point Scalar>
Scalar mad_forward(Scalar x) {
    detail::check_fold_change(x);
    return x >= Scalar(1) ? x - Scalar(1) : Scalar(1) - Scalar(1) / x;
}

// First label-pipeline step: undoes the contraction. Total on R; zero maps
// back to the 1-fold-change reference.
template <std::floating_point Scalar>
Scalar inverse_contraction(Scalar t) {
    detail::check_finite(t, "coordinate");
    return t >= Scalar(0) ? t + Scalar(1) : t - Scalar(1);
}

// Second label-pipeline step: undoes the mirror. Defined on the range of
// inverse_contraction, (-inf, -1] U [1, inf); the boundary -1 maps to 1.
template <std::floating_point Scalar>
Scalar inverse_mirror(Scalar m) {
    detail::check_finite(m, "mirrored value");
    if (m >= Scalar(1))
        return m;
    if (m <= Scalar(-1))
        return Scalar(-1) / m;
    throw domain_error("inverse mirror is undefined on (-1, 1), got " +
                       std::to_string(m));
}

// Exact inverse of mad_forward, inverse_mirror(inverse_contraction(t)).
template <std::floating_point Scalar>
Scalar mad_inverse(Scalar t) {
    detail::check_finite(t, "coordinate");
    return t >= Scalar(0) ? t + Scalar(1) : Scalar(1) / (Scalar(1) - t);
}

// The three axis scales compared throughout: each is a strictly increasing
// bijection from (0, inf) onto its coordinate range.
enum class ScaleKind { log2, linear, madfc };

constexpr const char* to_string(ScaleKind kind) {
    switch (kind) {
        case ScaleKind::log2: return "log2";
        case ScaleKind::linear: return "linear";
        case ScaleKind::madfc: return "madfc";
    }
    return "?";
}

inline ScaleKind scale_kind_from_string(std::string_view name) {
    if (name == "log2") return ScaleKind::log2;
    if (name == "linear") return ScaleKind::linear;
    if (name == "madfc") return ScaleKind::madfc;
    throw domain_error("unknown scale '" + std::string(name) +
                       "' (expected log2, linear, or madfc)");
}

// Coordinate of the no-change reference point (fold change 1): 0 for log2 and
// madfc, 1 for linear.
template <std::floating_point Scalar = double>
constexpr Scalar reference_coordinate(ScaleKind kind) {
    return kind == ScaleKind::linear ? Scalar(1) : Scalar(0);
}

template <std::floating_point Scalar>
Scalar scale_forward(ScaleKind kind, Scalar x) {
    detail::check_fold_change(x);
    switch (kind) {
        case ScaleKind::log2: return std::log2(x);
        case ScaleKind::linear: return x;
        case ScaleKind::madfc: return x >= Scalar(1) ? x - Scalar(1) : Scalar(1) - Scalar(1) / x;
    }
    throw domain_error("unknown scale kind");
}

template <std::floating_point Scalar>
Scalar scale_inverse(ScaleKind kind, Scalar t) {
    detail::check_finite(t, "coordinate");
    switch (kind) {
        case ScaleKind::log2: return std::exp2(t);
        case ScaleKind::linear: return t;
        case ScaleKind::madfc: return t >= Scalar(0) ? t + Scalar(1) : Scalar(1) / (Scalar(1) - t);
    }
    throw domain_error("unknown scale kind");
}

// Elementwise array forms.

inline Eigen::ArrayXd mad_forward(const Eigen::Ref<const Eigen::ArrayXd>& x) {
    return x.unaryExpr([](double v) { return mad_forward(v); });
}

inline Eigen::ArrayXd mad_inverse(const Eigen::Ref<const Eigen::ArrayXd>& t) {
    return t.unaryExpr([](double v) { return mad_inverse(v); });
}

inline Eigen::ArrayXd scale_forward(ScaleKind kind, const Eigen::Ref<const Eigen::ArrayXd>& x) {
    return x.unaryExpr([kind](double v) { return scale_forward(kind, v); });
}

inline Eigen::ArrayXd scale_inverse(ScaleKind kind, const Eigen::Ref<const Eigen::ArrayXd>& t) {
    return t.unaryExpr([kind](double v) { return scale_inverse(kind, v); });
}

}  // namespace madfc
