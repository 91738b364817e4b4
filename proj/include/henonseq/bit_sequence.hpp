#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace henonseq {

using Bit = std::uint8_t;

/// Length-counted sequence of bits backed by packed 64-bit words.
///
/// Bit i (0-based) lives in word i / 64 at bit position i % 64. Bits past
/// size() in the last word are always zero, so word-level operations such as
/// popcount and equality never see garbage.
///
/// at() uses the 1-based b(1)..b(length) convention of the analysis
/// formulas; operator[] is the unchecked 0-based accessor for inner loops.
class BitSequence {
public:
    BitSequence() = default;
    explicit BitSequence(std::size_t length, bool value = false);

    static BitSequence from_string(std::string_view bits);
    static BitSequence from_bytes_msb(std::span<const std::uint8_t> bytes, std::size_t length);

    std::size_t size() const noexcept { return length_; }
    bool empty() const noexcept { return length_ == 0; }

    bool operator[](std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
    bool at(std::size_t one_based) const;
    void set(std::size_t i, bool value) noexcept;
    void push_back(bool value);
    void reserve(std::size_t bits) { words_.reserve((bits + 63) / 64); }

    std::size_t count_ones() const noexcept;
    std::span<const std::uint64_t> words() const noexcept { return words_; }

    BitSequence complement() const;
    BitSequence slice(std::size_t offset, std::size_t length) const;
    /// Cyclic right shift: result[i] = (*this)[(i - shift) mod size()].
    BitSequence rotated_right(std::int64_t shift) const;

    std::string to_string() const;
    /// MSB-first packing; trailing pad bits of the last byte are zero.
    std::vector<std::uint8_t> to_bytes_msb() const;

    friend bool operator==(const BitSequence&, const BitSequence&) = default;

private:
    void clear_tail() noexcept;

    std::vector<std::uint64_t> words_;
    std::size_t length_ = 0;
};

/// Number of positions where a and b differ. Lengths must match.
std::size_t hamming_distance(const BitSequence& a, const BitSequence& b);

}  // namespace henonseq
