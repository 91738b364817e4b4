#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "henonseq/bit_sequence.hpp"

namespace henonseq {

/// On-disk bit formats.
///
/// packed  16-byte header then ceil(n/8) payload bytes, bits MSB-first,
///         pad bits zero. Header layout:
///           0..3   magic "HNSQ"
///           4      version (1)
///           5      format tag (0 = packed MSB-first)
///           6..7   reserved, zero
///           8..15  bit count, unsigned little-endian
/// ascii   '0'/'1' characters, no header and no trailing newline; readable
///         directly by NIST STS as an ASCII input file.
/// csv     "index,bit" header, then "i,b" rows with 1-based i.
/// raw     packed MSB-first payload without header (NIST STS binary input);
///         reading requires the caller to know the length is bytes * 8.
enum class BitFormat { Packed, Ascii, Csv, Raw };

inline constexpr std::string_view kBitFileMagic = "HNSQ";
inline constexpr std::uint8_t kBitFileVersion = 1;
inline constexpr std::size_t kBitFileHeaderSize = 16;

std::optional<BitFormat> parse_bit_format(std::string_view name);
std::string_view format_name(BitFormat f);

void write_bits(std::ostream& os, const BitSequence& bits, BitFormat format);
/// Throws BitFileError on malformed input.
BitSequence read_bits(std::istream& is, BitFormat format);
/// Packed when the magic matches, csv when the first line is the csv header,
/// otherwise ascii (whitespace ignored).
BitSequence read_bits_auto(std::istream& is);

void write_bit_file(const std::string& path, const BitSequence& bits, BitFormat format);
BitSequence read_bit_file(const std::string& path, std::optional<BitFormat> format = std::nullopt);

}  // namespace henonseq
