#pragma once

// Benchmark problem suite: bi-objective test functions on box domains,
// plus box utilities (clipping, uniform sampling) and analytic reference
// fronts where known.

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcbo/rng.hpp"

namespace mcbo {

/// Axis-aligned search box; lower_l < upper_l in every coordinate.
struct BoxDomain {
    std::vector<double> lower;
    std::vector<double> upper;

    BoxDomain(std::vector<double> lo, std::vector<double> hi)
        : lower(std::move(lo)), upper(std::move(hi)) {
        if (lower.size() != upper.size() || lower.empty())
            throw std::invalid_argument("BoxDomain: bound size mismatch");
        for (std::size_t l = 0; l < lower.size(); ++l)
            if (!(lower[l] < upper[l]))
                throw std::invalid_argument(
                    "BoxDomain: lower bound must be strictly below upper "
                    "bound in coordinate " + std::to_string(l));
    }

    /// Cube [lo, hi]^d.
    static BoxDomain cube(int dim, double lo, double hi) {
        return BoxDomain(std::vector<double>(static_cast<std::size_t>(dim), lo),
                         std::vector<double>(static_cast<std::size_t>(dim), hi));
    }

    int dim() const { return static_cast<int>(lower.size()); }

    bool contains(std::span<const double> x, double tol = 0.0) const {
        if (x.size() != lower.size()) return false;
        for (std::size_t l = 0; l < x.size(); ++l)
            if (x[l] < lower[l] - tol || x[l] > upper[l] + tol) return false;
        return true;
    }
};

/// Coordinate-wise projection onto the box. Total on finite inputs and
/// idempotent.
inline void clip_to_domain_inplace(const BoxDomain& domain,
                                   std::span<double> x) {
    if (static_cast<int>(x.size()) != domain.dim())
        throw std::invalid_argument("clip_to_domain: dimension mismatch");
    for (std::size_t l = 0; l < x.size(); ++l)
        x[l] = std::min(domain.upper[l], std::max(domain.lower[l], x[l]));
}

inline std::vector<double> clip_to_domain(const BoxDomain& domain,
                                          std::span<const double> x) {
    std::vector<double> out(x.begin(), x.end());
    clip_to_domain_inplace(domain, out);
    return out;
}

/// `count` independent points, each coordinate uniform on its box interval.
/// Draws are consumed point-major, coordinate-minor; the result is a flat
/// row-major array of count x dim values.
inline std::vector<double> sample_uniform(const BoxDomain& domain, long count,
                                          RngStream& rng) {
    if (count < 1)
        throw std::invalid_argument("sample_uniform: count must be >= 1");
    const int d = domain.dim();
    std::vector<double> out(static_cast<std::size_t>(count) *
                            static_cast<std::size_t>(d));
    std::size_t at = 0;
    for (long i = 0; i < count; ++i)
        for (int l = 0; l < d; ++l) {
            std::uniform_real_distribution<double> coord(domain.lower[l],
                                                         domain.upper[l]);
            out[at++] = coord(rng);
        }
    return out;
}

/// A vector objective g: R^d -> R^m on a box search domain. `front` is the
/// analytic weak Pareto front parametrized over [0,1], when known.
struct Problem {
    std::string name;
    int dim = 0;
    int n_objectives = 0;
    BoxDomain domain;
    std::function<void(std::span<const double>, std::span<double>)> objective;
    std::function<std::vector<double>(double)> front; // optional, may be null

    bool has_front() const { return static_cast<bool>(front); }
};

/// Evaluates g(x) with input checking. Points outside the box are allowed;
/// the formulas are applied as written.
inline std::vector<double> eval_objectives(const Problem& problem,
                                           std::span<const double> x) {
    if (static_cast<int>(x.size()) != problem.dim)
        throw std::invalid_argument(
            "eval_objectives(" + problem.name + "): input has dimension " +
            std::to_string(x.size()) + ", expected " +
            std::to_string(problem.dim));
    for (double v : x)
        if (!std::isfinite(v))
            throw std::invalid_argument("eval_objectives(" + problem.name +
                                        "): non-finite input coordinate");
    std::vector<double> g(static_cast<std::size_t>(problem.n_objectives));
    problem.objective(x, g);
    return g;
}

namespace detail {

// g1 = 5(x1-0.1)^2 + (x2-0.1)^2,  g2 = (x1-0.9)^2 + 5(x2-0.9)^2  on [0,1]^2.
inline Problem make_problem1() {
    Problem p{"problem1", 2, 2, BoxDomain::cube(2, 0.0, 1.0), nullptr, nullptr};
    p.objective = [](std::span<const double> x, std::span<double> g) {
        const double a1 = x[0] - 0.1, a2 = x[1] - 0.1;
        const double b1 = x[0] - 0.9, b2 = x[1] - 0.9;
        g[0] = 5.0 * a1 * a1 + a2 * a2;
        g[1] = b1 * b1 + 5.0 * b2 * b2;
    };
    return p;
}

// DEB2DK knee problem with K = 1 knee on [0,1]^d:
//   f1 = g r sin(pi x1 / 2),  f2 = g r cos(pi x1 / 2)
//   g  = 1 + (9/(d-1)) sum_{j>=2} x_j
//   r  = 5 + 10 (x1-0.5)^2 + (2/K) cos(2 K pi x1)
inline Problem make_deb2dk(int dim) {
    if (dim < 2)
        throw std::invalid_argument("deb2dk: dimension must be >= 2");
    constexpr double knees = 1.0;
    Problem p{"deb2dk", dim, 2, BoxDomain::cube(dim, 0.0, 1.0), nullptr,
              nullptr};
    p.objective = [dim](std::span<const double> x, std::span<double> f) {
        constexpr double pi = std::numbers::pi;
        double tail = 0.0;
        for (int j = 1; j < dim; ++j) tail += x[static_cast<std::size_t>(j)];
        const double g = 1.0 + 9.0 / (dim - 1) * tail;
        const double r = 5.0 + 10.0 * (x[0] - 0.5) * (x[0] - 0.5) +
                         (2.0 / knees) * std::cos(2.0 * knees * pi * x[0]);
        f[0] = g * r * std::sin(pi * x[0] / 2.0);
        f[1] = g * r * std::cos(pi * x[0] / 2.0);
    };
    return p;
}

// Shared CEC'09 helper: y_j = x_j - sin(6 pi x1 + j pi / d), j = 2..d,
// accumulated separately over odd and even j through `term`.
template <typename Term>
inline void uf_tail_sums(std::span<const double> x, int dim, Term term,
                         double& odd_sum, int& odd_count, double& even_sum,
                         int& even_count) {
    constexpr double pi = std::numbers::pi;
    odd_sum = even_sum = 0.0;
    odd_count = even_count = 0;
    for (int j = 2; j <= dim; ++j) {
        const double y =
            x[static_cast<std::size_t>(j - 1)] -
            std::sin(6.0 * pi * x[0] + static_cast<double>(j) * pi / dim);
        if (j % 2 == 1) {
            odd_sum += term(y);
            ++odd_count;
        } else {
            even_sum += term(y);
            ++even_count;
        }
    }
}

// UF4: f1 = x1 + (2/|J1|) sum h(y_j), f2 = 1 - x1^2 + (2/|J2|) sum h(y_j),
// h(t) = |t|/(1+e^{2|t|}), x1 in [0,1], x_j in [-2,2]. Front: f2 = 1 - f1^2.
inline Problem make_uf4(int dim) {
    if (dim < 3)
        throw std::invalid_argument("uf4: dimension must be >= 3");
    std::vector<double> lo(static_cast<std::size_t>(dim), -2.0);
    std::vector<double> hi(static_cast<std::size_t>(dim), 2.0);
    lo[0] = 0.0;
    hi[0] = 1.0;
    Problem p{"uf4", dim, 2, BoxDomain(std::move(lo), std::move(hi)), nullptr,
              nullptr};
    p.objective = [dim](std::span<const double> x, std::span<double> f) {
        auto h = [](double t) {
            const double a = std::abs(t);
            return a / (1.0 + std::exp(2.0 * a));
        };
        double odd, even;
        int n_odd, n_even;
        uf_tail_sums(x, dim, h, odd, n_odd, even, n_even);
        f[0] = x[0] + 2.0 * odd / n_odd;
        f[1] = 1.0 - x[0] * x[0] + 2.0 * even / n_even;
    };
    p.front = [](double t) {
        return std::vector<double>{t, 1.0 - t * t};
    };
    return p;
}

// UF7: f1 = x1^(1/5) + (2/|J1|) sum y_j^2, f2 = 1 - x1^(1/5) + (2/|J2|) sum
// y_j^2, x1 in [0,1], x_j in [-1,1]. Front: f2 = 1 - f1.
inline Problem make_uf7(int dim) {
    if (dim < 3)
        throw std::invalid_argument("uf7: dimension must be >= 3");
    std::vector<double> lo(static_cast<std::size_t>(dim), -1.0);
    std::vector<double> hi(static_cast<std::size_t>(dim), 1.0);
    lo[0] = 0.0;
    hi[0] = 1.0;
    Problem p{"uf7", dim, 2, BoxDomain(std::move(lo), std::move(hi)), nullptr,
              nullptr};
    p.objective = [dim](std::span<const double> x, std::span<double> f) {
        auto square = [](double t) { return t * t; };
        double odd, even;
        int n_odd, n_even;
        uf_tail_sums(x, dim, square, odd, n_odd, even, n_even);
        const double root = std::pow(x[0], 0.2);
        f[0] = root + 2.0 * odd / n_odd;
        f[1] = 1.0 - root + 2.0 * even / n_even;
    };
    p.front = [](double t) {
        return std::vector<double>{t, 1.0 - t};
    };
    return p;
}

} // namespace detail

struct ProblemInfo {
    std::string name;
    int default_dim;
    bool fixed_dim;
    std::string note;
};

inline const std::vector<ProblemInfo>& builtin_problems() {
    static const std::vector<ProblemInfo> infos = {
        {"problem1", 2, true, "convex quadratic pair on [0,1]^2"},
        {"deb2dk", 2, false, "knee problem (K=1), d >= 2, [0,1]^d"},
        {"uf4", 5, false, "CEC'09 UF4, d >= 3, [0,1]x[-2,2]^(d-1)"},
        {"uf7", 5, false, "CEC'09 UF7, d >= 3, [0,1]x[-1,1]^(d-1)"},
    };
    return infos;
}

/// Builds a benchmark problem by name. `dim <= 0` selects the problem's
/// default dimension.
inline Problem make_problem(const std::string& name, int dim = 0) {
    if (name == "problem1") {
        if (dim > 0 && dim != 2)
            throw std::invalid_argument("problem1 is fixed at dimension 2");
        return detail::make_problem1();
    }
    if (name == "deb2dk") return detail::make_deb2dk(dim > 0 ? dim : 2);
    if (name == "uf4") return detail::make_uf4(dim > 0 ? dim : 5);
    if (name == "uf7") return detail::make_uf7(dim > 0 ? dim : 5);
    throw std::invalid_argument(
        "unknown problem \"" + name +
        "\" (built-ins: problem1, deb2dk, uf4, uf7)");
}

/// `count` points on the analytic weak Pareto front, parameter values
/// equispaced over [0,1]. Flat row-major count x m array.
inline std::vector<double> reference_front(const Problem& problem, int count) {
    if (!problem.has_front())
        throw std::invalid_argument(
            "reference_front(" + problem.name +
            "): no analytic front parametrization available");
    if (count < 1)
        throw std::invalid_argument("reference_front: count must be >= 1");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count) *
                static_cast<std::size_t>(problem.n_objectives));
    for (int i = 0; i < count; ++i) {
        const double t =
            count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
        for (double v : problem.front(t)) out.push_back(v);
    }
    return out;
}

} // namespace mcbo
