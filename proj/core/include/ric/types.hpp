#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ric/error.hpp"

namespace ric {

using Complex = std::complex<double>;

/// Ordered, non-empty run of finite complex samples. Used for time-domain
/// signals and spectra alike; indexing is 0-based.
class ComplexSequence {
public:
    ComplexSequence(std::vector<Complex> samples);
    ComplexSequence(std::initializer_list<Complex> samples);

    /// `length` zero-valued samples.
    static ComplexSequence zeros(std::size_t length);

    [[nodiscard]] std::size_t size() const noexcept { return samples_.size(); }
    [[nodiscard]] std::span<const Complex> samples() const noexcept { return samples_; }
    [[nodiscard]] const Complex& operator[](std::size_t i) const { return samples_[i]; }
    [[nodiscard]] auto begin() const noexcept { return samples_.begin(); }
    [[nodiscard]] auto end() const noexcept { return samples_.end(); }

    [[nodiscard]] const std::vector<Complex>& vector() const& noexcept { return samples_; }
    [[nodiscard]] std::vector<Complex> release() && noexcept { return std::move(samples_); }

    friend bool operator==(const ComplexSequence&, const ComplexSequence&) = default;

private:
    std::vector<Complex> samples_;
};

[[nodiscard]] constexpr bool is_power_of_two(std::size_t v) noexcept {
    return v != 0 && (v & (v - 1)) == 0;
}

/// Exponent e such that 2^e == v. Requires is_power_of_two(v).
[[nodiscard]] unsigned log2_exact(std::size_t v) noexcept;

/// Validated factorization n = l * c with 2 <= c <= n/2.
class RicPlan {
public:
    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] std::size_t c() const noexcept { return c_; }
    [[nodiscard]] std::size_t l() const noexcept { return l_; }
    /// log2(n), present when n and c are both powers of two.
    [[nodiscard]] std::optional<unsigned> q() const noexcept { return q_; }
    /// log2(c), present when n and c are both powers of two.
    [[nodiscard]] std::optional<unsigned> p() const noexcept { return p_; }

    friend bool operator==(const RicPlan&, const RicPlan&) = default;

private:
    friend RicPlan make_plan(std::size_t n, std::size_t c);
    RicPlan(std::size_t n, std::size_t c);

    std::size_t n_;
    std::size_t c_;
    std::size_t l_;
    std::optional<unsigned> q_;
    std::optional<unsigned> p_;
};

/// Throws Error{Range} when n < 4, c < 2 or c > n/2; Error{NonDivisor} when c does not divide n.
RicPlan make_plan(std::size_t n, std::size_t c);

/// n = 2^q, c = 2^p. Throws Error{Range} unless q >= 2 and 1 <= p <= q-1.
RicPlan plan_from_exponents(unsigned q, unsigned p);

/// Position in the L x C arrangement of an N-point sequence.
struct RectIndex {
    std::size_t row;     // l in [0, L)
    std::size_t column;  // c in [0, C)

    friend bool operator==(const RectIndex&, const RectIndex&) = default;
};

/// row * C + column. Throws Error{Range} when the index lies outside the plan.
std::size_t rect_to_flat(RectIndex idx, const RicPlan& plan);
RectIndex flat_to_rect(std::size_t flat, const RicPlan& plan);

enum class Direction { Forward, Inverse };

/// Scaling convention for a forward/inverse pair.
///   None        - no scaling in either direction
///   ReciprocalN - inverse carries 1/N
///   Unitary     - both directions carry 1/sqrt(N)
enum class Normalization { None, ReciprocalN, Unitary };

std::string_view to_string(Direction dir) noexcept;
std::string_view to_string(Normalization mode) noexcept;
/// Accepts "forward"/"inverse".
std::optional<Direction> parse_direction(std::string_view text) noexcept;
/// Accepts "none", "recip-n", "unitary".
std::optional<Normalization> parse_normalization(std::string_view text) noexcept;

/// Scale a length-`length` transform applies under `mode` in direction `dir`:
/// one of 1, 1/length, 1/sqrt(length).
double engine_scale(Normalization mode, Direction dir, std::size_t length) noexcept;

/// Factor K that turns a C-point transform of the folded sequence into the
/// N-point coefficients at RIC indices: 1, 1/L or 1/sqrt(L).
double correction_factor(Normalization mode, Direction dir, const RicPlan& plan) noexcept;

/// Complex operation tallies for one computation.
struct OpCounter {
    std::uint64_t complex_adds = 0;
    std::uint64_t complex_mults = 0;

    void reset() noexcept { *this = OpCounter{}; }

    friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

}  // namespace ric
