#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tropic/laurent.hpp"
#include "tropic/loglim.hpp"

namespace tropic::cli {

enum class SampleFormat
{
    csv,
    plotdata
};

/// Split "x,y,z" into variable names. Throws std::invalid_argument on an
/// empty or repeated name.
std::vector<std::string> parse_variable_list(std::string_view text);

/// One generator per nonblank line; '#' starts a comment. Parse errors carry
/// the byte offset within the whole text.
std::vector<LaurentPolynomial> parse_generators(std::string_view text, const std::vector<std::string>& variables);

/// Whole file contents; throws std::runtime_error if unreadable.
std::string read_file(const std::string& path);

/// Natural log of a magnitude written either as "e^N" or as a positive number.
double parse_log_magnitude(std::string_view text);

/// Thread count from TROPIC_THREADS, default 1.
unsigned threads_from_environment();

// Each command returns its complete standard output.

/// One JSON line per generator.
std::string cmd_newton(const std::vector<LaurentPolynomial>& generators);
/// One JSON line per generator.
std::string cmd_sphdual(const std::vector<LaurentPolynomial>& generators, unsigned threads = 1);
/// One JSON line; "outer" is true when more than one generator is given.
std::string cmd_loglim(const std::vector<LaurentPolynomial>& generators, unsigned threads = 1);
/// One JSON line. The variable count must be 2h.
std::string cmd_slopes(const std::vector<LaurentPolynomial>& generators, std::size_t h, int height,
                       unsigned threads = 1);
/// Expanded A-polynomial (or its PSL2 version) in the input grammar, with
/// factors and the slope report as '#' comment lines.
std::string cmd_torusknot(std::int64_t p, std::int64_t q, bool psl2, int height);
/// Samples of a two-variable generator followed by '#' cluster lines.
std::string cmd_sample(const LaurentPolynomial& f, const loglim::SamplingParams& params, SampleFormat format);

} // namespace tropic::cli
