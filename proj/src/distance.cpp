#include "xover/distance.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "xover/crossover.hpp"
#include "xover/lower_set.hpp"

namespace xover {

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
{
    if (denominator == 0) {
        throw std::invalid_argument("zero denominator");
    }
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    const auto g = std::gcd(numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
}

std::string Rational::to_string() const
{
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b)
{
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

Rational operator/(const Rational& a, std::int64_t d)
{
    return {a.num_, a.den_ * d};
}

KStarPolicy KStarPolicy::fixed(std::size_t value)
{
    if (value == 0) {
        throw std::invalid_argument("explicit k* must be at least 1");
    }
    return KStarPolicy{value};
}

KStarPolicy KStarPolicy::parse(const std::string& text)
{
    if (text == "log") {
        return log_default();
    }
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("k* must be 'log' or a positive integer");
    }
    return fixed(value);
}

std::string KStarPolicy::to_string() const
{
    return value_ ? std::to_string(*value_) : "log";
}

std::size_t resolve_kstar(std::size_t length, std::size_t n, const KStarPolicy& policy)
{
    if (length == 0 || n == 0) {
        throw std::invalid_argument("k* needs a positive length and crossover count");
    }
    if (const auto v = policy.value()) {
        return *v;
    }
    // ceil(log2 length) == bit_width(length - 1)
    return static_cast<std::size_t>(std::bit_width(length - 1)) + 1;
}

DistanceValue DistanceValue::finite(std::size_t generations, std::size_t kstar)
{
    return {generations, kstar};
}

DistanceValue DistanceValue::unreachable(std::size_t kstar)
{
    return {std::nullopt, kstar};
}

std::size_t DistanceValue::generations() const
{
    if (!generations_) {
        throw std::logic_error("unreachable distance has no generation count");
    }
    return *generations_;
}

std::string DistanceValue::to_string() const
{
    if (generations_) {
        return std::to_string(*generations_);
    }
    return "Unreachable(k*=" + std::to_string(kstar_) + ")";
}

std::optional<std::size_t> individual_min_generations(const Genome& x, const Population& population, std::size_t n)
{
    require_non_empty(population, "population");
    if (x.length() != population.length()) {
        throw std::invalid_argument("genome length mismatch");
    }
    require_crossover_points(x.length(), n);
    if (population.contains(x)) {
        return 0;
    }
    return mu_steps_to_full(represent(x, population, n));
}

DistanceValue directed_distance(const Population& source, const Population& target, std::size_t n,
                                const KStarPolicy& policy, Semantics semantics)
{
    require_non_empty(source, "source population");
    require_non_empty(target, "target population");
    require_same_length({&source, &target});
    require_crossover_points(source.length(), n);
    const std::size_t kstar = resolve_kstar(source.length(), n, policy);

    std::size_t generations = 0;
    if (semantics == Semantics::closure && target.is_subset_of(source)) {
        generations = target == source ? 0 : 1;
    } else {
        // S_k is increasing in k, so the whole target is in S_k exactly when
        // its slowest member is.
        for (const auto& x : target) {
            const auto g = individual_min_generations(x, source, n);
            if (!g) {
                return DistanceValue::unreachable(kstar);
            }
            generations = std::max(generations, *g);
        }
    }
    if (generations >= kstar) {
        return DistanceValue::unreachable(kstar);
    }
    return DistanceValue::finite(generations, kstar);
}

Rational symmetric_distance(const Population& p1, const Population& p2, std::size_t n, const KStarPolicy& policy,
                            Semantics semantics)
{
    const auto forward = directed_distance(p1, p2, n, policy, semantics);
    const auto backward = directed_distance(p2, p1, n, policy, semantics);
    return Rational(static_cast<std::int64_t>(forward.numeric_value() + backward.numeric_value()), 2);
}

Rational individual_distance(const Genome& x, const Genome& y, const Population& population, std::size_t n,
                             const KStarPolicy& policy, Semantics semantics)
{
    require_non_empty(population, "population");
    if (x.length() != population.length() || y.length() != population.length()) {
        throw std::invalid_argument("genome length mismatch");
    }
    Population with_y = population;
    with_y.erase(x);
    with_y.insert(y);
    Population with_x = population;
    with_x.erase(y);
    with_x.insert(x);
    return symmetric_distance(with_y, with_x, n, policy, semantics);
}

} // namespace xover
