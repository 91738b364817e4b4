#include "henonseq/bit_file.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <iterator>
#include <sstream>
#include <vector>

#include "henonseq/errors.hpp"

namespace henonseq {

namespace {

constexpr std::string_view kCsvHeader = "index,bit";

std::vector<std::uint8_t> slurp(std::istream& is) {
    return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>());
}

BitSequence parse_packed(const std::vector<std::uint8_t>& data) {
    if (data.size() < kBitFileHeaderSize) {
        throw BitFileError("truncated header: " + std::to_string(data.size()) + " bytes");
    }
    if (!std::equal(kBitFileMagic.begin(), kBitFileMagic.end(), data.begin())) {
        throw BitFileError("bad magic, expected \"HNSQ\"");
    }
    if (data[4] != kBitFileVersion) {
        throw BitFileError("unsupported bit file version " + std::to_string(data[4]));
    }
    if (data[5] != 0) {
        throw BitFileError("unsupported format tag " + std::to_string(data[5]));
    }
    std::uint64_t count = 0;
    for (int i = 7; i >= 0; --i) {
        count = (count << 8) | data[8 + static_cast<std::size_t>(i)];
    }
    const std::uint64_t payload = data.size() - kBitFileHeaderSize;
    if ((count + 7) / 8 != payload) {
        throw BitFileError("payload holds " + std::to_string(payload) + " bytes but header declares " +
                           std::to_string(count) + " bits");
    }
    return BitSequence::from_bytes_msb(std::span(data).subspan(kBitFileHeaderSize), count);
}

BitSequence parse_ascii(const std::vector<std::uint8_t>& data) {
    BitSequence out;
    out.reserve(data.size());
    for (auto c : data) {
        if (c == '0' || c == '1') {
            out.push_back(c == '1');
        } else if (!std::isspace(c)) {
            throw BitFileError("unexpected byte value " + std::to_string(c) + " in ascii bit file");
        }
    }
    return out;
}

BitSequence parse_csv(const std::vector<std::uint8_t>& data) {
    std::istringstream in(std::string(data.begin(), data.end()));
    std::string line;
    if (!std::getline(in, line) || line.rfind(kCsvHeader, 0) != 0) {
        throw BitFileError("csv bit file must start with \"index,bit\"");
    }
    BitSequence out;
    std::size_t expected = 1;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw BitFileError("csv row without comma: " + line);
        }
        const std::string idx = line.substr(0, comma);
        const std::string bit = line.substr(comma + 1);
        if (idx != std::to_string(expected) || (bit != "0" && bit != "1")) {
            throw BitFileError("malformed csv row: " + line);
        }
        out.push_back(bit == "1");
        ++expected;
    }
    return out;
}

}  // namespace

std::optional<BitFormat> parse_bit_format(std::string_view name) {
    if (name == "packed" || name == "binary") return BitFormat::Packed;
    if (name == "ascii") return BitFormat::Ascii;
    if (name == "csv") return BitFormat::Csv;
    if (name == "raw") return BitFormat::Raw;
    return std::nullopt;
}

std::string_view format_name(BitFormat f) {
    switch (f) {
        case BitFormat::Packed: return "packed";
        case BitFormat::Ascii: return "ascii";
        case BitFormat::Csv: return "csv";
        case BitFormat::Raw: return "raw";
    }
    return "unknown";
}

void write_bits(std::ostream& os, const BitSequence& bits, BitFormat format) {
    switch (format) {
        case BitFormat::Packed: {
            std::array<char, kBitFileHeaderSize> header{};
            std::copy(kBitFileMagic.begin(), kBitFileMagic.end(), header.begin());
            header[4] = static_cast<char>(kBitFileVersion);
            std::uint64_t count = bits.size();
            for (std::size_t i = 0; i < 8; ++i) {
                header[8 + i] = static_cast<char>(count & 0xff);
                count >>= 8;
            }
            os.write(header.data(), header.size());
            [[fallthrough]];
        }
        case BitFormat::Raw: {
            const auto bytes = bits.to_bytes_msb();
            os.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
            break;
        }
        case BitFormat::Ascii:
            os << bits.to_string();
            break;
        case BitFormat::Csv:
            os << kCsvHeader << '\n';
            for (std::size_t i = 0; i < bits.size(); ++i) {
                os << (i + 1) << ',' << (bits[i] ? '1' : '0') << '\n';
            }
            break;
    }
    if (!os) {
        throw BitFileError("failed writing bit stream");
    }
}

BitSequence read_bits(std::istream& is, BitFormat format) {
    const auto data = slurp(is);
    switch (format) {
        case BitFormat::Packed: return parse_packed(data);
        case BitFormat::Ascii: return parse_ascii(data);
        case BitFormat::Csv: return parse_csv(data);
        case BitFormat::Raw: return BitSequence::from_bytes_msb(data, data.size() * 8);
    }
    throw BitFileError("unknown bit format");
}

BitSequence read_bits_auto(std::istream& is) {
    const auto data = slurp(is);
    if (data.size() >= kBitFileMagic.size() &&
        std::equal(kBitFileMagic.begin(), kBitFileMagic.end(), data.begin())) {
        return parse_packed(data);
    }
    if (data.size() >= kCsvHeader.size() && std::equal(kCsvHeader.begin(), kCsvHeader.end(), data.begin())) {
        return parse_csv(data);
    }
    return parse_ascii(data);
}

void write_bit_file(const std::string& path, const BitSequence& bits, BitFormat format) {
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        throw BitFileError("cannot open " + path + " for writing");
    }
    write_bits(os, bits, format);
}

BitSequence read_bit_file(const std::string& path, std::optional<BitFormat> format) {
    std::ifstream is(path, std::ios::binary);
    if (!is) {
        throw BitFileError("cannot open " + path);
    }
    return format ? read_bits(is, *format) : read_bits_auto(is);
}

}  // namespace henonseq
