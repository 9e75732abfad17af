#ifndef CAUSALQA_ERRORS_HPP
#define CAUSALQA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace causalqa {

// Malformed input text: bad column counts, unparsable numbers, bad file syntax.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally invalid data: cyclic parses, empty corpora, length mismatches.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace causalqa

#endif
