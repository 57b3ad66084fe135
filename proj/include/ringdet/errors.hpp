#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringdet {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
    using Error::Error;
};

struct NotHermitianError : Error {
    using Error::Error;
};

struct NotPsdError : Error {
    using Error::Error;
};

struct ConvergenceError : Error {
    using Error::Error;
};

// Zero-variance rows make standardization undefined; carries every offending
// row index so callers can report all bad channels at once.
struct DeadChannelError : Error {
    std::vector<std::size_t> channels;
    explicit DeadChannelError(std::vector<std::size_t> ch)
        : Error(describe(ch)), channels(std::move(ch)) {}

  private:
    static std::string describe(const std::vector<std::size_t>& ch) {
        std::string msg = "dead channel(s) with zero variance:";
        for (std::size_t c : ch) msg += " " + std::to_string(c);
        return msg;
    }
};

struct ConfigError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace ringdet
