#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ric/ric.hpp"
#include "ric/types.hpp"

namespace ric {

/// Csv    - one "re,im" pair per line, optional "re,im" header line.
/// RawF64 - little-endian IEEE-754 doubles, interleaved re,im, no header.
enum class SignalFormat { Csv, RawF64 };
enum class SpectrumFormat { Csv, Json };

std::optional<SignalFormat> parse_signal_format(std::string_view text) noexcept;
std::optional<SpectrumFormat> parse_spectrum_format(std::string_view text) noexcept;

/// 17 significant digits; parses back to the identical double.
std::string format_double(double value);

/// Throws Error{Parse} naming the line, Error{Empty} with no samples.
ComplexSequence parse_signal_csv(std::string_view text);
/// Throws Error{Parse} naming the byte offset, Error{Empty} with no samples.
ComplexSequence parse_signal_raw(std::span<const std::byte> bytes);

std::string render_signal_csv(const ComplexSequence& x);
std::vector<std::byte> render_signal_raw(const ComplexSequence& x);

/// File wrappers over the parse/render pairs. Throw Error{Io} when the file
/// cannot be opened.
ComplexSequence read_signal(const std::filesystem::path& path, SignalFormat format);
void write_signal(const ComplexSequence& x, const std::filesystem::path& path, SignalFormat format);

/// CSV: header "k,index,re,im" then one row per coefficient.
/// JSON: an array whose first element is the header record
/// {"n","c","l","mode","direction"} followed by {"k","index","re","im"} records.
std::string render_spectrum(const RicSpectrum& spectrum, SpectrumFormat format);
void write_spectrum(const RicSpectrum& spectrum, const std::filesystem::path& path, SpectrumFormat format);

/// Reads back the CSV written by write_spectrum.
std::vector<RicEntry> read_spectrum_csv(const std::filesystem::path& path);

struct Tone {
    std::size_t bin;
    double amplitude = 1.0;
    double phase = 0.0;  // radians
};

/// x[m] = sum over tones of a * exp(j*(2*pi*bin*m/n + phase)).
/// Throws Error{Range} if n == 0 or any bin >= n.
ComplexSequence synthesize_tones(std::size_t n, std::span<const Tone> tones);

/// Deterministic pseudorandom samples with components uniform in [-1, 1).
ComplexSequence random_signal(std::size_t n, std::uint64_t seed);

/// Reads a whole file into memory. Throws Error{Io}.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace ric
