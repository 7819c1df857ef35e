#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace dogenet {

std::string to_lower(std::string_view s);
std::string_view trim(std::string_view s);

/// Splits on ASCII whitespace, dropping empty tokens.
std::vector<std::string> split_words(std::string_view s);

inline std::string_view trim(const std::string& s) { return trim(std::string_view(s)); }
inline std::string_view trim(const char* s) { return trim(std::string_view(s)); }

}  // namespace dogenet
