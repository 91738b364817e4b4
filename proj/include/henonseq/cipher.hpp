#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "henonseq/bit_sequence.hpp"
#include "henonseq/generator.hpp"

namespace henonseq {

/// XOR data with a keystream packed MSB-first into bytes. The keystream must
/// hold at least 8 * data.size() bits.
std::vector<std::uint8_t> xor_keystream(std::span<const std::uint8_t> data, const BitSequence& keystream);

/// Vernam encryption with a Hénon keystream; the same call decrypts.
/// No authentication or nonce handling: reusing a configuration for two
/// messages leaks their XOR.
std::vector<std::uint8_t> vernam(std::span<const std::uint8_t> data, const GeneratorConfig& cfg);

/// Incremental form for streams of unknown length.
class VernamStream {
public:
    explicit VernamStream(const GeneratorConfig& cfg) : gen_(cfg) {}

    /// Transforms bytes in place, continuing the keystream across calls.
    void apply(std::span<std::uint8_t> bytes);

private:
    Generator gen_;
};

}  // namespace henonseq
