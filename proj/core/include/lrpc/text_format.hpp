#pragma once

// Line-oriented text format for codes, errors and syndromes.
//
//   lrpc-text 1
//   kind code|error|syndrome
//   field <q> <m> <modulus coefficients, comma separated, constant first>
//   ... kind-specific sections ...
//   end
//
// A field element is written as its m coefficients joined by commas,
// constant term first. Sections:
//
//   code:     dims <n> <k> <d>
//             support <d>        then d lines, one element each
//             matrix <n-k> <n>   then n-k lines of n space-separated elements
//   error:    dims <n> <r>
//             support <r>        then r lines (the ordered basis beta)
//             coords <r> <n>     then r lines of n integers in [0, q)
//             vector <n>         then 1 line of n elements
//   syndrome: vector <n-k>       then 1 line of n-k elements

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lrpc/lrpc_code.hpp"

namespace lrpc {

inline constexpr int kTextFormatVersion = 1;

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void write_text(std::ostream& os, const LrpcCode& code);
void write_text(std::ostream& os, const RankError& error);
void write_text(std::ostream& os, const Syndrome& syndrome);

std::string to_text(const LrpcCode& code);
std::string to_text(const RankError& error);
std::string to_text(const Syndrome& syndrome);

/// Parsers throw FormatError on malformed input, a version or kind mismatch,
/// or a modulus that differs from the one Field::make picks for (q, m).
LrpcCode read_code(std::istream& is);
RankError read_error(std::istream& is);
Syndrome read_syndrome(std::istream& is);

LrpcCode code_from_text(std::string_view text);
RankError error_from_text(std::string_view text);
Syndrome syndrome_from_text(std::string_view text);

}  // namespace lrpc
