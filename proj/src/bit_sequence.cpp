#include "henonseq/bit_sequence.hpp"

#include <bit>
#include <stdexcept>

#include "henonseq/errors.hpp"

namespace henonseq {

BitSequence::BitSequence(std::size_t length, bool value)
    : words_((length + 63) / 64, value ? ~std::uint64_t{0} : 0), length_(length) {
    clear_tail();
}

BitSequence BitSequence::from_string(std::string_view bits) {
    BitSequence out;
    out.reserve(bits.size());
    for (char c : bits) {
        if (c == '0' || c == '1') {
            out.push_back(c == '1');
        } else {
            throw std::invalid_argument(std::string("invalid bit character '") + c + "'");
        }
    }
    return out;
}

BitSequence BitSequence::from_bytes_msb(std::span<const std::uint8_t> bytes, std::size_t length) {
    if (bytes.size() * 8 < length) {
        throw std::invalid_argument("byte buffer shorter than requested bit length");
    }
    BitSequence out(length);
    for (std::size_t i = 0; i < length; ++i) {
        out.set(i, (bytes[i >> 3] >> (7 - (i & 7))) & 1u);
    }
    return out;
}

bool BitSequence::at(std::size_t one_based) const {
    if (one_based < 1 || one_based > length_) {
        throw std::out_of_range("bit index " + std::to_string(one_based) + " outside 1.." +
                                std::to_string(length_));
    }
    return (*this)[one_based - 1];
}

void BitSequence::set(std::size_t i, bool value) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= mask;
    } else {
        words_[i >> 6] &= ~mask;
    }
}

void BitSequence::push_back(bool value) {
    if ((length_ & 63) == 0) {
        words_.push_back(0);
    }
    ++length_;
    set(length_ - 1, value);
}

std::size_t BitSequence::count_ones() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) {
        n += static_cast<std::size_t>(std::popcount(w));
    }
    return n;
}

BitSequence BitSequence::complement() const {
    BitSequence out = *this;
    for (auto& w : out.words_) {
        w = ~w;
    }
    out.clear_tail();
    return out;
}

BitSequence BitSequence::slice(std::size_t offset, std::size_t length) const {
    if (offset > length_ || length > length_ - offset) {
        throw std::out_of_range("slice outside sequence");
    }
    BitSequence out(length);
    const std::size_t shift = offset & 63;
    const std::size_t base = offset >> 6;
    for (std::size_t w = 0; w < out.words_.size(); ++w) {
        std::uint64_t lo = words_[base + w] >> shift;
        if (shift != 0 && base + w + 1 < words_.size()) {
            lo |= words_[base + w + 1] << (64 - shift);
        }
        out.words_[w] = lo;
    }
    out.clear_tail();
    return out;
}

BitSequence BitSequence::rotated_right(std::int64_t shift) const {
    if (length_ == 0) {
        return *this;
    }
    const auto n = static_cast<std::int64_t>(length_);
    const auto s = static_cast<std::size_t>(((shift % n) + n) % n);
    if (s == 0) {
        return *this;
    }
    // result = tail(n - s .. n) followed by head(0 .. n - s)
    BitSequence out = slice(length_ - s, s);
    const BitSequence head = slice(0, length_ - s);
    out.reserve(length_);
    for (std::size_t i = 0; i < head.size(); ++i) {
        out.push_back(head[i]);
    }
    return out;
}

std::string BitSequence::to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i) {
        if ((*this)[i]) {
            s[i] = '1';
        }
    }
    return s;
}

std::vector<std::uint8_t> BitSequence::to_bytes_msb() const {
    std::vector<std::uint8_t> out((length_ + 7) / 8, 0);
    for (std::size_t i = 0; i < length_; ++i) {
        if ((*this)[i]) {
            out[i >> 3] |= static_cast<std::uint8_t>(0x80u >> (i & 7));
        }
    }
    return out;
}

void BitSequence::clear_tail() noexcept {
    if ((length_ & 63) != 0 && !words_.empty()) {
        words_.back() &= (std::uint64_t{1} << (length_ & 63)) - 1;
    }
}

std::size_t hamming_distance(const BitSequence& a, const BitSequence& b) {
    if (a.size() != b.size()) {
        throw LengthMismatch("sequences differ in length: " + std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()));
    }
    const auto wa = a.words();
    const auto wb = b.words();
    std::size_t d = 0;
    for (std::size_t i = 0; i < wa.size(); ++i) {
        d += static_cast<std::size_t>(std::popcount(wa[i] ^ wb[i]));
    }
    return d;
}

}  // namespace henonseq
