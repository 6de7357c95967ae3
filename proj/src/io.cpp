#include "arpaint/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace arpaint {

namespace {

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& what) {
    throw std::runtime_error(path.string() + ": " + what);
}

std::uint32_t read_u32(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) |
           (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16(const unsigned char* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void append_u32(std::string& out, std::uint32_t v) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
    out.push_back(static_cast<char>((v >> 16) & 0xff));
    out.push_back(static_cast<char>((v >> 24) & 0xff));
}

void append_u16(std::string& out, std::uint16_t v) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
}

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

}  // namespace

Signal read_wav(const std::filesystem::path& path, bool downmix) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(path, "cannot open file");
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const auto* bytes = reinterpret_cast<const unsigned char*>(data.data());
    if (data.size() < 12 || std::memcmp(bytes, "RIFF", 4) != 0 ||
        std::memcmp(bytes + 8, "WAVE", 4) != 0)
        fail(path, "not a RIFF/WAVE file");

    std::uint16_t format = 0, channels = 0, bits = 0;
    std::uint32_t rate = 0;
    bool have_fmt = false;
    std::size_t data_off = 0, data_len = 0;

    std::size_t pos = 12;
    while (pos + 8 <= data.size()) {
        const char* id = data.data() + pos;
        const std::uint32_t chunk_len = read_u32(bytes + pos + 4);
        pos += 8;
        if (pos + chunk_len > data.size()) fail(path, "truncated chunk");
        if (std::memcmp(id, "fmt ", 4) == 0) {
            if (chunk_len < 16) fail(path, "fmt chunk too short");
            format = read_u16(bytes + pos);
            channels = read_u16(bytes + pos + 2);
            rate = read_u32(bytes + pos + 4);
            bits = read_u16(bytes + pos + 14);
            if (format == kFormatExtensible) {
                if (chunk_len < 40) fail(path, "extensible fmt chunk too short");
                format = read_u16(bytes + pos + 24);  // first two bytes of the subformat GUID
            }
            have_fmt = true;
        } else if (std::memcmp(id, "data", 4) == 0) {
            data_off = pos;
            data_len = chunk_len;
        }
        pos += chunk_len + (chunk_len % 2);  // chunks are word aligned
    }
    if (!have_fmt) fail(path, "missing fmt chunk");
    if (data_len == 0) fail(path, "missing or empty data chunk");
    if (channels == 0) fail(path, "zero channels");

    const bool pcm16 = format == kFormatPcm && bits == 16;
    const bool float32 = format == kFormatFloat && bits == 32;
    if (!pcm16 && !float32)
        fail(path, "unsupported encoding: format " + std::to_string(format) + ", " +
                       std::to_string(bits) + "-bit (need 16-bit PCM or 32-bit float)");
    if (channels > 1 && !downmix)
        fail(path, std::to_string(channels) +
                       " channels; pass the downmix option to average them");

    const std::size_t bytes_per_sample = bits / 8;
    const std::size_t frame_size = bytes_per_sample * channels;
    const std::size_t frames = data_len / frame_size;
    if (frames == 0) fail(path, "no samples");

    Signal signal;
    signal.sample_rate = static_cast<int>(rate);
    signal.samples.resize(frames);
    for (std::size_t f = 0; f < frames; ++f) {
        double acc = 0.0;
        for (std::size_t c = 0; c < channels; ++c) {
            const std::size_t off = data_off + f * frame_size + c * bytes_per_sample;
            if (pcm16) {
                const auto raw = static_cast<std::int16_t>(read_u16(bytes + off));
                acc += raw / 32768.0;
            } else {
                std::uint32_t u = read_u32(bytes + off);
                float v;
                std::memcpy(&v, &u, 4);
                acc += v;
            }
        }
        signal.samples[f] = acc / channels;
    }
    return signal;
}

void write_wav(const Signal& signal, const std::filesystem::path& path,
               WavEncoding encoding) {
    const std::size_t n = signal.size();
    const std::uint16_t bits = encoding == WavEncoding::Pcm16 ? 16 : 32;
    const std::uint32_t byte_count = static_cast<std::uint32_t>(n * bits / 8);

    std::string out;
    out.reserve(44 + byte_count);
    out += "RIFF";
    append_u32(out, 36 + byte_count);
    out += "WAVE";
    out += "fmt ";
    append_u32(out, 16);
    append_u16(out, encoding == WavEncoding::Pcm16 ? kFormatPcm : kFormatFloat);
    append_u16(out, 1);  // mono
    append_u32(out, static_cast<std::uint32_t>(signal.sample_rate));
    append_u32(out, static_cast<std::uint32_t>(signal.sample_rate) * bits / 8);
    append_u16(out, bits / 8);
    append_u16(out, bits);
    out += "data";
    append_u32(out, byte_count);

    if (encoding == WavEncoding::Pcm16) {
        constexpr double top = 1.0 - 1.0 / 32768.0;
        for (double s : signal.samples) {
            const double clamped = std::clamp(s, -1.0, top);
            const auto v = static_cast<std::int16_t>(std::llround(clamped * 32768.0));
            append_u16(out, static_cast<std::uint16_t>(v));
        }
    } else {
        for (double s : signal.samples) {
            const float v = static_cast<float>(s);
            std::uint32_t u;
            std::memcpy(&u, &v, 4);
            append_u32(out, u);
        }
    }

    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) fail(path, "cannot open for writing");
    f.write(out.data(), static_cast<std::streamsize>(out.size()));
    if (!f) fail(path, "write failed");
}

MaskFile read_mask(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(path, "cannot open file");

    int version = -1;
    long long signal_length = -1, sample_rate = -1;
    std::vector<Gap> gaps;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string key;
        ss >> key;
        if (key == "version") {
            ss >> version;
        } else if (key == "signal_length") {
            ss >> signal_length;
        } else if (key == "sample_rate") {
            ss >> sample_rate;
        } else if (key == "gap") {
            long long start = -1, length = -1;
            ss >> start >> length;
            if (!ss || start < 0 || length <= 0)
                fail(path, "line " + std::to_string(line_no) +
                               ": gap needs a nonnegative start and a positive length");
            gaps.push_back(Gap{static_cast<std::size_t>(start),
                               static_cast<std::size_t>(length)});
        } else {
            fail(path, "line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
        if (key != "gap" && !ss)
            fail(path, "line " + std::to_string(line_no) + ": malformed value");
    }
    if (version != 1)
        fail(path, "unsupported mask version " + std::to_string(version));
    if (signal_length < 0) fail(path, "missing signal_length");
    if (sample_rate <= 0) fail(path, "missing or invalid sample_rate");

    MaskFile file;
    file.sample_rate = static_cast<int>(sample_rate);
    try {
        file.mask = GapMask(std::move(gaps), static_cast<std::size_t>(signal_length));
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    }
    return file;
}

void write_mask(const MaskFile& mask, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) fail(path, "cannot open for writing");
    out << "version 1\n";
    out << "sample_rate " << mask.sample_rate << "\n";
    out << "signal_length " << mask.mask.signal_length() << "\n";
    for (const Gap& g : mask.mask.gaps())
        out << "gap " << g.start << " " << g.length << "\n";
    if (!out) fail(path, "write failed");
}

namespace {

constexpr const char* kCsvHeader =
    "signal_id,method,estimator,order,gap_length_ms,gap_index,sdr_db,elapsed_s";

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

bool record_less(const EvalRecord& a, const EvalRecord& b) {
    if (a.signal_id != b.signal_id) return a.signal_id < b.signal_id;
    if (a.method != b.method) return a.method < b.method;
    if (a.estimator != b.estimator) return a.estimator < b.estimator;
    if (a.order != b.order) return a.order < b.order;
    if (a.gap_length_ms != b.gap_length_ms) return a.gap_length_ms < b.gap_length_ms;
    return a.gap_index < b.gap_index;
}

double parse_double(const std::string& s) {
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    return std::stod(s);
}

}  // namespace

void write_results(const ResultsTable& table, const std::filesystem::path& path) {
    std::vector<EvalRecord> rows = table.rows;
    std::sort(rows.begin(), rows.end(), record_less);

    std::ofstream out(path, std::ios::trunc);
    if (!out) fail(path, "cannot open for writing");
    out << kCsvHeader << "\n";
    for (const EvalRecord& r : rows) {
        out << r.signal_id << ',' << r.method << ',' << r.estimator << ',' << r.order
            << ',' << format_double(r.gap_length_ms) << ',' << r.gap_index << ','
            << format_double(r.sdr_db) << ',' << format_double(r.elapsed_s) << "\n";
    }
    if (!out) fail(path, "write failed");
}

ResultsTable read_results(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(path, "cannot open file");
    std::string line;
    if (!std::getline(in, line)) fail(path, "empty file");
    if (line != kCsvHeader) fail(path, "unexpected CSV header");

    ResultsTable table;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string> cols;
        std::size_t begin = 0;
        for (std::size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == ',') {
                cols.push_back(line.substr(begin, i - begin));
                begin = i + 1;
            }
        }
        if (cols.size() != 8)
            fail(path, "line " + std::to_string(line_no) + ": expected 8 columns");
        EvalRecord r;
        r.signal_id = cols[0];
        r.method = cols[1];
        r.estimator = cols[2];
        try {
            r.order = static_cast<unsigned>(std::stoul(cols[3]));
            r.gap_length_ms = parse_double(cols[4]);
            r.gap_index = std::stoi(cols[5]);
            r.sdr_db = parse_double(cols[6]);
            r.elapsed_s = parse_double(cols[7]);
        } catch (const std::exception&) {
            fail(path, "line " + std::to_string(line_no) + ": malformed number");
        }
        table.rows.push_back(std::move(r));
    }
    return table;
}

}  // namespace arpaint
