#include "henonseq/cipher.hpp"

#include <stdexcept>

namespace henonseq {

std::vector<std::uint8_t> xor_keystream(std::span<const std::uint8_t> data, const BitSequence& keystream) {
    if (keystream.size() < data.size() * 8) {
        throw std::invalid_argument("keystream shorter than 8 bits per data byte");
    }
    std::vector<std::uint8_t> out(data.begin(), data.end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint8_t k = 0;
        for (std::size_t b = 0; b < 8; ++b) {
            k = static_cast<std::uint8_t>((k << 1) | (keystream[8 * i + b] ? 1 : 0));
        }
        out[i] ^= k;
    }
    return out;
}

std::vector<std::uint8_t> vernam(std::span<const std::uint8_t> data, const GeneratorConfig& cfg) {
    std::vector<std::uint8_t> out(data.begin(), data.end());
    VernamStream stream(cfg);
    stream.apply(out);
    return out;
}

void VernamStream::apply(std::span<std::uint8_t> bytes) {
    for (auto& byte : bytes) {
        std::uint8_t k = 0;
        for (int b = 0; b < 8; ++b) {
            k = static_cast<std::uint8_t>((k << 1) | gen_.next_bit());
        }
        byte ^= k;
    }
}

}  // namespace henonseq
