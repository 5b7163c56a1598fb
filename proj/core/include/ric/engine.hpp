#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "ric/types.hpp"

namespace ric {

/// W_M^e = exp(j*2*pi*e/M).
struct TwiddleFactor {
    std::size_t order;
    std::int64_t exponent;
    Complex value;
};

/// Exponent is reduced modulo `order` before evaluation, so W_M^{e+M} and
/// W_M^e are bit-identical. Throws Error{Range} for order 0.
TwiddleFactor twiddle(std::size_t order, std::int64_t exponent);

/// Forward-sign table {W_M^{-i} : i in [0, M)}, built once per length and
/// shared read-only afterwards. Safe to call from multiple threads.
std::shared_ptr<const std::vector<Complex>> twiddle_table(std::size_t order);

// Operation counting conventions:
//  - dft_direct counts every product x[n] * W, trivial twiddles included:
//    M*M multiplications and M*(M-1) additions.
//  - fft_radix2 counts one multiplication per butterfly (trivial twiddles
//    included): (M/2)*log2(M) multiplications and M*log2(M) additions.
//  - Real-valued normalization scaling is not a complex multiplication and
//    is never counted.

/// O(M^2) direct evaluation, any length.
ComplexSequence dft_direct(const ComplexSequence& x, Direction dir, Normalization mode, OpCounter& counter);
ComplexSequence dft_direct(const ComplexSequence& x, Direction dir, Normalization mode);

/// Direct evaluation of only the requested output bins of the full-length
/// transform. Costs bins.size() * M multiplications.
std::vector<Complex> dft_direct_at(const ComplexSequence& x, std::span<const std::size_t> bins,
                                   Direction dir, Normalization mode, OpCounter& counter);
std::vector<Complex> dft_direct_at(const ComplexSequence& x, std::span<const std::size_t> bins,
                                   Direction dir, Normalization mode);

/// Iterative decimation-in-time radix-2 FFT. Throws Error{NotPowerOfTwo}.
ComplexSequence fft_radix2(const ComplexSequence& x, Direction dir, Normalization mode, OpCounter& counter);
ComplexSequence fft_radix2(const ComplexSequence& x, Direction dir, Normalization mode);

/// fft_radix2 for power-of-two lengths, dft_direct otherwise.
ComplexSequence transform(const ComplexSequence& x, Direction dir, Normalization mode, OpCounter& counter);
ComplexSequence transform(const ComplexSequence& x, Direction dir, Normalization mode);

enum class EngineKind { Radix2, Direct };
EngineKind engine_for_length(std::size_t length) noexcept;
std::string_view to_string(EngineKind kind) noexcept;

}  // namespace ric
