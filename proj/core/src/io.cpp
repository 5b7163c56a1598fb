#include "ric/io.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

namespace ric {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view text, double& out) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    if (text.empty()) return false;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc{} && ptr == text.data() + text.size() && std::isfinite(out);
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 1;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const std::string_view line = text.substr(0, nl);
        fn(line_no, line);
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
        ++line_no;
    }
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        fields.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

[[noreturn]] void parse_error_at_line(std::size_t line_no, std::string_view line, std::string_view why) {
    throw Error(ErrorCode::Parse,
                "line " + std::to_string(line_no) + ": " + std::string(why) + " in \"" + std::string(line) + "\"");
}

std::uint64_t to_little_endian(std::uint64_t v) {
    if constexpr (std::endian::native == std::endian::big) {
        std::uint64_t r = 0;
        for (int i = 0; i < 8; ++i) {
            r = (r << 8) | (v & 0xFFU);
            v >>= 8;
        }
        return r;
    }
    return v;
}

}  // namespace

std::optional<SignalFormat> parse_signal_format(std::string_view text) noexcept {
    if (text == "csv") return SignalFormat::Csv;
    if (text == "raw" || text == "raw-f64" || text == "f64") return SignalFormat::RawF64;
    return std::nullopt;
}

std::optional<SpectrumFormat> parse_spectrum_format(std::string_view text) noexcept {
    if (text == "csv") return SpectrumFormat::Csv;
    if (text == "json") return SpectrumFormat::Json;
    return std::nullopt;
}

std::string format_double(double value) {
    char buf[40];
    const int len = std::snprintf(buf, sizeof buf, "%.17g", value);
    return std::string(buf, static_cast<std::size_t>(len));
}

ComplexSequence parse_signal_csv(std::string_view text) {
    std::vector<Complex> samples;
    bool seen_content = false;
    for_each_line(text, [&](std::size_t line_no, std::string_view raw) {
        const std::string_view line = trim(raw);
        if (line.empty()) return;
        const bool first = !seen_content;
        seen_content = true;
        const auto fields = split_fields(line);
        if (first && fields.size() == 2 && trim(fields[0]) == "re" && trim(fields[1]) == "im") {
            return;
        }
        if (fields.size() != 2) {
            parse_error_at_line(line_no, raw, "expected two comma-separated fields");
        }
        double re = 0.0;
        double im = 0.0;
        if (!parse_double(fields[0], re) || !parse_double(fields[1], im)) {
            parse_error_at_line(line_no, raw, "expected finite decimal numbers");
        }
        samples.emplace_back(re, im);
    });
    if (samples.empty()) {
        throw Error(ErrorCode::Empty, "CSV input holds no samples");
    }
    return ComplexSequence(std::move(samples));
}

ComplexSequence parse_signal_raw(std::span<const std::byte> bytes) {
    constexpr std::size_t pair_size = 2 * sizeof(double);
    if (bytes.empty()) {
        throw Error(ErrorCode::Empty, "raw input holds no samples");
    }
    if (bytes.size() % pair_size != 0) {
        throw Error(ErrorCode::Parse, "offset " + std::to_string(bytes.size() - bytes.size() % pair_size) +
                                          ": trailing " + std::to_string(bytes.size() % pair_size) +
                                          " bytes do not form a complete re,im pair");
    }
    std::vector<Complex> samples(bytes.size() / pair_size);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        double parts[2];
        for (std::size_t j = 0; j < 2; ++j) {
            const std::size_t offset = i * pair_size + j * sizeof(double);
            std::uint64_t bits = 0;
            std::memcpy(&bits, bytes.data() + offset, sizeof bits);
            parts[j] = std::bit_cast<double>(to_little_endian(bits));
            if (!std::isfinite(parts[j])) {
                throw Error(ErrorCode::Parse, "offset " + std::to_string(offset) + ": value is not finite");
            }
        }
        samples[i] = {parts[0], parts[1]};
    }
    return ComplexSequence(std::move(samples));
}

std::string render_signal_csv(const ComplexSequence& x) {
    std::string out = "re,im\n";
    for (const auto& v : x) {
        out += format_double(v.real());
        out += ',';
        out += format_double(v.imag());
        out += '\n';
    }
    return out;
}

std::vector<std::byte> render_signal_raw(const ComplexSequence& x) {
    std::vector<std::byte> out(x.size() * 2 * sizeof(double));
    std::size_t offset = 0;
    for (const auto& v : x) {
        for (const double part : {v.real(), v.imag()}) {
            const std::uint64_t bits = to_little_endian(std::bit_cast<std::uint64_t>(part));
            std::memcpy(out.data() + offset, &bits, sizeof bits);
            offset += sizeof bits;
        }
    }
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (path.empty() || !in) {
        throw Error(ErrorCode::Io, "cannot open '" + path.string() + "' for reading");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw Error(ErrorCode::Io, "failed reading '" + path.string() + "'");
    }
    return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
    if (path.empty()) {
        throw Error(ErrorCode::Io, "output path is empty");
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::Io, "cannot open '" + path.string() + "' for writing");
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) {
        throw Error(ErrorCode::Io, "failed writing '" + path.string() + "'");
    }
}

ComplexSequence read_signal(const std::filesystem::path& path, SignalFormat format) {
    const std::string contents = read_text_file(path);
    if (format == SignalFormat::Csv) {
        return parse_signal_csv(contents);
    }
    return parse_signal_raw(std::as_bytes(std::span(contents.data(), contents.size())));
}

void write_signal(const ComplexSequence& x, const std::filesystem::path& path, SignalFormat format) {
    if (format == SignalFormat::Csv) {
        write_text_file(path, render_signal_csv(x));
        return;
    }
    const auto bytes = render_signal_raw(x);
    write_text_file(path, std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

std::string render_spectrum(const RicSpectrum& spectrum, SpectrumFormat format) {
    if (format == SpectrumFormat::Csv) {
        std::string out = "k,index,re,im\n";
        for (std::size_t k = 0; k < spectrum.size(); ++k) {
            const auto& e = spectrum[k];
            out += std::to_string(k) + ',' + std::to_string(e.index) + ',' + format_double(e.value.real()) + ',' +
                   format_double(e.value.imag()) + '\n';
        }
        return out;
    }

    nlohmann::json doc = nlohmann::json::array();
    const auto& plan = spectrum.plan();
    doc.push_back({{"n", plan.n()},
                   {"c", plan.c()},
                   {"l", plan.l()},
                   {"mode", std::string(to_string(spectrum.mode()))},
                   {"direction", std::string(to_string(spectrum.direction()))}});
    for (std::size_t k = 0; k < spectrum.size(); ++k) {
        const auto& e = spectrum[k];
        doc.push_back({{"k", k}, {"index", e.index}, {"re", e.value.real()}, {"im", e.value.imag()}});
    }
    return doc.dump(2) + '\n';
}

void write_spectrum(const RicSpectrum& spectrum, const std::filesystem::path& path, SpectrumFormat format) {
    write_text_file(path, render_spectrum(spectrum, format));
}

std::vector<RicEntry> read_spectrum_csv(const std::filesystem::path& path) {
    const std::string contents = read_text_file(path);
    std::vector<RicEntry> entries;
    bool header_seen = false;
    for_each_line(contents, [&](std::size_t line_no, std::string_view raw) {
        const std::string_view line = trim(raw);
        if (line.empty()) return;
        if (!header_seen) {
            header_seen = true;
            if (line == "k,index,re,im") return;
        }
        const auto fields = split_fields(line);
        if (fields.size() != 4) {
            parse_error_at_line(line_no, raw, "expected k,index,re,im");
        }
        double k = 0.0;
        double index = 0.0;
        double re = 0.0;
        double im = 0.0;
        if (!parse_double(fields[0], k) || !parse_double(fields[1], index) || !parse_double(fields[2], re) ||
            !parse_double(fields[3], im) || index < 0.0) {
            parse_error_at_line(line_no, raw, "malformed spectrum row");
        }
        entries.push_back({static_cast<std::size_t>(index), {re, im}});
    });
    if (entries.empty()) {
        throw Error(ErrorCode::Empty, "spectrum file holds no rows");
    }
    return entries;
}

ComplexSequence synthesize_tones(std::size_t n, std::span<const Tone> tones) {
    if (n == 0) {
        throw Error(ErrorCode::Range, "tone length must be positive");
    }
    std::vector<Complex> out(n);
    for (const auto& tone : tones) {
        if (tone.bin >= n) {
            throw Error(ErrorCode::Range,
                        "tone bin " + std::to_string(tone.bin) + " outside [0, " + std::to_string(n - 1) + "]");
        }
        std::size_t e = 0;  // bin*m mod n
        for (std::size_t m = 0; m < n; ++m) {
            const double angle =
                2.0 * std::numbers::pi * (static_cast<double>(e) / static_cast<double>(n)) + tone.phase;
            out[m] += std::polar(tone.amplitude, angle);
            e += tone.bin;
            if (e >= n) e -= n;
        }
    }
    return ComplexSequence(std::move(out));
}

ComplexSequence random_signal(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<Complex> out(n);
    for (auto& v : out) {
        const double re = dist(rng);
        const double im = dist(rng);
        v = {re, im};
    }
    return ComplexSequence(std::move(out));
}

}  // namespace ric
