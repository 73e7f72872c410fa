#pragma once

// Weight simplex, weighted-ell_p scalarization family and deterministic
// weight grids. All functions here are pure and thread-safe.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcbo {

/// A point on the m-dimensional probability simplex: components >= 0,
/// summing to 1 within 1e-12. Identifies one scalar sub-problem.
class WeightVector {
public:
    explicit WeightVector(std::vector<double> components)
        : w_(std::move(components)) {
        if (w_.empty())
            throw std::invalid_argument("WeightVector: empty component list");
        double sum = 0.0;
        for (double c : w_) {
            if (!(c >= 0.0))
                throw std::invalid_argument(
                    "WeightVector: component " + std::to_string(c) +
                    " is negative or non-finite");
            sum += c;
        }
        if (std::abs(sum - 1.0) > 1e-12)
            throw std::invalid_argument(
                "WeightVector: components sum to " + std::to_string(sum) +
                ", expected 1 within 1e-12");
    }

    std::size_t size() const { return w_.size(); }
    double operator[](std::size_t k) const { return w_[k]; }
    std::span<const double> values() const { return w_; }

    bool operator==(const WeightVector& other) const { return w_ == other.w_; }

private:
    std::vector<double> w_;
};

/// Order p of the scalarization: a finite real >= 1 or infinity
/// (the weighted Chebyshev case).
class ScalarizationOrder {
public:
    explicit ScalarizationOrder(double p) : p_(p) {
        if (std::isnan(p) || p < 1.0)
            throw std::invalid_argument(
                "ScalarizationOrder: p must be >= 1 or infinity, got " +
                std::to_string(p));
    }

    static ScalarizationOrder chebyshev() {
        return ScalarizationOrder(std::numeric_limits<double>::infinity());
    }

    bool is_infinite() const { return std::isinf(p_); }
    double value() const { return p_; }

    bool operator==(const ScalarizationOrder& other) const {
        return p_ == other.p_;
    }

private:
    double p_;
};

/// Scalarized objective value:
///   finite p:  ( sum_k w_k |g_k|^p )^(1/p)
///   p = inf :  max_k w_k |g_k|
///
/// The finite-p sum is evaluated in shifted form M * (sum w_k (|g_k|/M)^p)^(1/p)
/// with M the largest |g_k| over the support of w, so large p neither
/// overflows nor loses the dominant term, and zero-weight components have
/// exactly no influence.
inline double evaluate_gp(std::span<const double> objective_values,
                          const WeightVector& w, ScalarizationOrder p) {
    if (objective_values.size() != w.size())
        throw std::invalid_argument(
            "evaluate_gp: objective vector has length " +
            std::to_string(objective_values.size()) + ", weights have length " +
            std::to_string(w.size()));

    const std::size_t m = w.size();
    if (p.is_infinite()) {
        double best = 0.0;
        for (std::size_t k = 0; k < m; ++k)
            best = std::max(best, w[k] * std::abs(objective_values[k]));
        return best;
    }

    double shift = 0.0;
    for (std::size_t k = 0; k < m; ++k)
        if (w[k] > 0.0)
            shift = std::max(shift, std::abs(objective_values[k]));
    if (shift == 0.0) return 0.0;

    const double order = p.value();
    double sum = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        if (w[k] == 0.0) continue;
        sum += w[k] * std::pow(std::abs(objective_values[k]) / shift, order);
    }
    return shift * std::pow(sum, 1.0 / order);
}

namespace detail {

// Number of compositions of h into m nonnegative parts, C(h+m-1, m-1),
// saturating at `cap` to avoid overflow.
inline unsigned long long composition_count(int h, int m,
                                            unsigned long long cap) {
    unsigned long long count = 1;
    for (int i = 1; i < m; ++i) {
        count = count * static_cast<unsigned long long>(h + i) /
                static_cast<unsigned long long>(i);
        if (count >= cap) return cap;
    }
    return count;
}

inline void enumerate_compositions(int remaining, int bins, int total,
                                   std::vector<int>& partial,
                                   std::vector<WeightVector>& out) {
    if (bins == 1) {
        partial.push_back(remaining);
        std::vector<double> w(partial.size());
        for (std::size_t k = 0; k < partial.size(); ++k)
            w[k] = static_cast<double>(partial[k]) / static_cast<double>(total);
        out.emplace_back(std::move(w));
        partial.pop_back();
        return;
    }
    for (int take = 0; take <= remaining; ++take) {
        partial.push_back(take);
        enumerate_compositions(remaining - take, bins - 1, total, partial, out);
        partial.pop_back();
    }
}

} // namespace detail

/// Deterministic weight grid covering the simplex.
///
/// m = 2 follows the two-objective rule w^i = ((i-1)*dw, 1-(i-1)*dw) with
/// dw = 1/(N-1), i = 1..N. For m > 2 a simplex-lattice design is used: all
/// compositions of H parts into m bins, H minimal such that the lattice has
/// at least N points, enumerated in lexicographic order.
inline std::vector<WeightVector> generate_uniform_weights(int n, int m) {
    if (m < 2)
        throw std::invalid_argument("generate_uniform_weights: m must be >= 2");
    if (n < 1)
        throw std::invalid_argument("generate_uniform_weights: N must be >= 1");

    if (m == 2) {
        if (n < 2)
            throw std::invalid_argument(
                "generate_uniform_weights: N must be >= 2 when m = 2 "
                "(weight spacing 1/(N-1) is undefined)");
        std::vector<WeightVector> weights;
        weights.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const double first =
                static_cast<double>(i) / static_cast<double>(n - 1);
            weights.emplace_back(std::vector<double>{first, 1.0 - first});
        }
        return weights;
    }

    const auto wanted = static_cast<unsigned long long>(n);
    int h = 1;
    while (detail::composition_count(h, m, wanted) < wanted) ++h;

    std::vector<WeightVector> weights;
    std::vector<int> partial;
    detail::enumerate_compositions(h, m, h, partial, weights);
    return weights;
}

} // namespace mcbo
