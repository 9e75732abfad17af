#ifndef CAUSALQA_TEXT_HPP
#define CAUSALQA_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

namespace causalqa {

std::vector<std::string> split(std::string_view s, char sep);
std::vector<std::string> split_ws(std::string_view s);
std::string join(const std::vector<std::string>& parts, std::string_view sep);
std::string lower(std::string_view s);
std::string trim(std::string_view s);

// Lowercased maximal runs of alphanumeric characters; everything else separates.
std::vector<std::string> word_tokens(std::string_view s);

bool starts_with(std::string_view s, std::string_view prefix);

// Fixed-notation decimal with the given precision ("%.*f").
std::string format_fixed(double v, int precision);
// Shortest-ish general notation ("%.*g"), used for scores and probabilities.
std::string format_general(double v, int precision = 9);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace causalqa

#endif
