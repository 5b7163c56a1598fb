#include "ric/engine.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <utility>

namespace ric {

namespace {

// Plain product; skips the NaN/Inf recovery of operator* since inputs are
// finite by construction.
inline Complex mul(const Complex& a, const Complex& b) noexcept {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

Complex unit_root(std::size_t order, std::size_t residue) {
    const double fraction = static_cast<double>(residue) / static_cast<double>(order);
    return std::polar(1.0, 2.0 * std::numbers::pi * fraction);
}

void apply_scale(std::vector<Complex>& values, double scale) {
    if (scale == 1.0) return;
    for (auto& v : values) v *= scale;
}

std::size_t bit_reverse(std::size_t v, unsigned bits) noexcept {
    std::size_t r = 0;
    for (unsigned b = 0; b < bits; ++b) {
        r = (r << 1) | (v & 1U);
        v >>= 1;
    }
    return r;
}

}  // namespace

TwiddleFactor twiddle(std::size_t order, std::int64_t exponent) {
    if (order == 0) {
        throw Error(ErrorCode::Range, "twiddle order must be positive");
    }
    const auto m = static_cast<std::int64_t>(order);
    const auto residue = static_cast<std::size_t>(((exponent % m) + m) % m);
    return {order, exponent, unit_root(order, residue)};
}

std::shared_ptr<const std::vector<Complex>> twiddle_table(std::size_t order) {
    static std::mutex mutex;
    static std::map<std::size_t, std::shared_ptr<const std::vector<Complex>>> cache;

    std::lock_guard lock(mutex);
    auto& slot = cache[order];
    if (!slot) {
        std::vector<Complex> table(order);
        for (std::size_t i = 0; i < order; ++i) {
            table[i] = unit_root(order, (order - i) % order);
        }
        slot = std::make_shared<const std::vector<Complex>>(std::move(table));
    }
    return slot;
}

ComplexSequence dft_direct(const ComplexSequence& x, Direction dir, Normalization mode, OpCounter& counter) {
    const std::size_t m = x.size();
    const auto table = twiddle_table(m);
    const auto in = x.samples();
    std::vector<Complex> out(m);
    for (std::size_t k = 0; k < m; ++k) {
        Complex acc{};
        std::size_t e = 0;  // k*n mod m
        for (std::size_t n = 0; n < m; ++n) {
            const Complex w = dir == Direction::Forward ? (*table)[e] : std::conj((*table)[e]);
            acc += mul(in[n], w);
            e += k;
            if (e >= m) e -= m;
        }
        out[k] = acc;
    }
    counter.complex_mults += m * m;
    counter.complex_adds += m * (m - 1);
    apply_scale(out, engine_scale(mode, dir, m));
    return ComplexSequence(std::move(out));
}

ComplexSequence dft_direct(const ComplexSequence& x, Direction dir, Normalization mode) {
    OpCounter scratch;
    return dft_direct(x, dir, mode, scratch);
}

std::vector<Complex> dft_direct_at(const ComplexSequence& x, std::span<const std::size_t> bins, Direction dir,
                                   Normalization mode, OpCounter& counter) {
    const std::size_t m = x.size();
    const auto table = twiddle_table(m);
    const auto in = x.samples();
    std::vector<Complex> out;
    out.reserve(bins.size());
    for (const std::size_t bin : bins) {
        if (bin >= m) {
            throw Error(ErrorCode::Range,
                        "bin " + std::to_string(bin) + " outside a length-" + std::to_string(m) + " transform");
        }
        Complex acc{};
        std::size_t e = 0;
        for (std::size_t n = 0; n < m; ++n) {
            const Complex w = dir == Direction::Forward ? (*table)[e] : std::conj((*table)[e]);
            acc += mul(in[n], w);
            e += bin;
            if (e >= m) e -= m;
        }
        out.push_back(acc);
    }
    counter.complex_mults += bins.size() * m;
    counter.complex_adds += bins.size() * (m - 1);
    apply_scale(out, engine_scale(mode, dir, m));
    return out;
}

std::vector<Complex> dft_direct_at(const ComplexSequence& x, std::span<const std::size_t> bins, Direction dir,
                                   Normalization mode) {
    OpCounter scratch;
    return dft_direct_at(x, bins, dir, mode, scratch);
}

ComplexSequence fft_radix2(const ComplexSequence& x, Direction dir, Normalization mode, OpCounter& counter) {
    const std::size_t m = x.size();
    if (!is_power_of_two(m)) {
        throw Error(ErrorCode::NotPowerOfTwo, "radix-2 FFT needs a power-of-two length, got " + std::to_string(m));
    }
    const unsigned stages = log2_exact(m);

    std::vector<Complex> a(m);
    const auto in = x.samples();
    for (std::size_t i = 0; i < m; ++i) {
        a[bit_reverse(i, stages)] = in[i];
    }

    if (m > 1) {
        const auto table = twiddle_table(m);
        const bool inverse = dir == Direction::Inverse;
        for (std::size_t len = 2; len <= m; len <<= 1) {
            const std::size_t half = len / 2;
            const std::size_t stride = m / len;
            for (std::size_t base = 0; base < m; base += len) {
                for (std::size_t j = 0; j < half; ++j) {
                    const Complex& t = (*table)[j * stride];
                    const Complex w = inverse ? std::conj(t) : t;
                    const Complex odd = mul(a[base + j + half], w);
                    const Complex even = a[base + j];
                    a[base + j] = even + odd;
                    a[base + j + half] = even - odd;
                }
            }
        }
        counter.complex_mults += (m / 2) * stages;
        counter.complex_adds += m * stages;
    }

    apply_scale(a, engine_scale(mode, dir, m));
    return ComplexSequence(std::move(a));
}

ComplexSequence fft_radix2(const ComplexSequence& x, Direction dir, Normalization mode) {
    OpCounter scratch;
    return fft_radix2(x, dir, mode, scratch);
}

EngineKind engine_for_length(std::size_t length) noexcept {
    return is_power_of_two(length) ? EngineKind::Radix2 : EngineKind::Direct;
}

std::string_view to_string(EngineKind kind) noexcept {
    return kind == EngineKind::Radix2 ? "radix2" : "direct";
}

ComplexSequence transform(const ComplexSequence& x, Direction dir, Normalization mode, OpCounter& counter) {
    if (engine_for_length(x.size()) == EngineKind::Radix2) {
        return fft_radix2(x, dir, mode, counter);
    }
    return dft_direct(x, dir, mode, counter);
}

ComplexSequence transform(const ComplexSequence& x, Direction dir, Normalization mode) {
    OpCounter scratch;
    return transform(x, dir, mode, scratch);
}

}  // namespace ric
