#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "xover/genome.hpp"
#include "xover/semantics.hpp"

namespace xover {

/// Exact non-negative rational, always normalised (gcd 1, positive denominator).
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t numerator, std::int64_t denominator = 1);

    [[nodiscard]] std::int64_t numerator() const noexcept { return num_; }
    [[nodiscard]] std::int64_t denominator() const noexcept { return den_; }
    [[nodiscard]] double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
    /// "3/2" or "2".
    [[nodiscard]] std::string to_string() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, std::int64_t d);
    friend bool operator==(const Rational&, const Rational&) = default;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// How the saturation depth k* is chosen. k* is the numeric value reported for
/// an unreachable target and the cap on finite distances.
class KStarPolicy {
public:
    /// ceil(log2 length) + 1.
    static KStarPolicy log_default() { return KStarPolicy{std::nullopt}; }
    /// A fixed value; must be at least 1.
    static KStarPolicy fixed(std::size_t value);
    /// Parses "log" or a positive integer.
    static KStarPolicy parse(const std::string& text);

    [[nodiscard]] bool is_log_default() const noexcept { return !value_; }
    [[nodiscard]] std::optional<std::size_t> value() const noexcept { return value_; }
    [[nodiscard]] std::string to_string() const;

private:
    explicit KStarPolicy(std::optional<std::size_t> value)
        : value_(value)
    { }

    std::optional<std::size_t> value_;
};

std::size_t resolve_kstar(std::size_t length, std::size_t n, const KStarPolicy& policy);

/// A generation count, or Unreachable; both remember the k* in force.
class DistanceValue {
public:
    static DistanceValue finite(std::size_t generations, std::size_t kstar);
    static DistanceValue unreachable(std::size_t kstar);

    [[nodiscard]] bool is_finite() const noexcept { return generations_.has_value(); }
    /// Throws std::logic_error for Unreachable.
    [[nodiscard]] std::size_t generations() const;
    [[nodiscard]] std::size_t kstar() const noexcept { return kstar_; }
    /// The generation count, or k* when unreachable.
    [[nodiscard]] std::size_t numeric_value() const noexcept { return generations_.value_or(kstar_); }
    /// "1" or "Unreachable(k*=4)".
    [[nodiscard]] std::string to_string() const;

    bool operator==(const DistanceValue&) const = default;

private:
    DistanceValue(std::optional<std::size_t> generations, std::size_t kstar)
        : generations_(generations)
        , kstar_(kstar)
    { }

    std::optional<std::size_t> generations_;
    std::size_t kstar_;
};

/// min{k : x in S_k(P)} computed on representations; nullopt if x is never
/// produced. Requires length <= 64 and 1 <= n <= length - 1.
std::optional<std::size_t> individual_min_generations(const Genome& x, const Population& population, std::size_t n);

/// Direction distance f_P from `source` to `target`. Finite values >= k* are
/// reported as Unreachable.
DistanceValue directed_distance(const Population& source, const Population& target, std::size_t n,
                                const KStarPolicy& policy, Semantics semantics);

/// (f(P1, P2) + f(P2, P1)) / 2 with k* standing in for Unreachable.
Rational symmetric_distance(const Population& p1, const Population& p2, std::size_t n,
                            const KStarPolicy& policy, Semantics semantics);

/// d_P((P \ {x}) ∪ {y}, (P \ {y}) ∪ {x}). Defaults to closure semantics, the
/// one the population distance is defined with.
Rational individual_distance(const Genome& x, const Genome& y, const Population& population, std::size_t n,
                             const KStarPolicy& policy, Semantics semantics = Semantics::closure);

} // namespace xover
