#pragma once

/// Command dispatch behind the `lgcy` executable.

#include "lgcy/symmetry.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace lgcy {

enum class Verb { validate, sectors, cy, lg, bundles, pair, verify, report };
enum class Format { text, json };

struct Command {
    Verb verb = Verb::validate;
    std::string input;
    Format format = Format::text;
    std::optional<std::uint64_t> prime;
    std::optional<std::uint64_t> verify_prime;
    std::optional<int> qs_bound;
    std::optional<unsigned> jobs;
    std::optional<Side> side;
    bool exact = false;
};

namespace exit_code {
inline constexpr int pass = 0;
inline constexpr int mismatch = 1;     // a correspondence check failed
inline constexpr int invalid = 2;      // the model fails validation
inline constexpr int parse_error = 3;  // the input could not be read or parsed
}  // namespace exit_code

/// Runs one command. The report goes to `out`, diagnostics to `err`.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

std::optional<Verb> parse_verb(std::string_view name);

}  // namespace lgcy
