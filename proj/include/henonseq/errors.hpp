#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace henonseq {

// Raised when an orbit leaves the divergence bound or becomes non-finite.
class DivergenceError : public std::runtime_error {
public:
    explicit DivergenceError(std::uint64_t iteration)
        : std::runtime_error("orbit diverged at iteration " + std::to_string(iteration)),
          iteration_(iteration) {}

    std::uint64_t iteration() const noexcept { return iteration_; }

private:
    std::uint64_t iteration_;
};

class LengthMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class EmptySequence : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SequenceTooShort : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class WrongLength : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InsufficientSamples : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed bit file: bad magic, unsupported version, truncated payload, stray characters.
class BitFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace henonseq
