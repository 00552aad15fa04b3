#include "flownet/country.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace flownet {

CountryCode::CountryCode(std::string_view token) {
  if (token.empty()) {
    throw std::invalid_argument("empty country code");
  }
  code_.reserve(token.size());
  for (char ch : token) {
    auto uc = static_cast<unsigned char>(ch);
    if (std::isspace(uc) || ch == ',') {
      throw std::invalid_argument("invalid country code '" + std::string(token) + "'");
    }
    code_.push_back(static_cast<char>(std::toupper(uc)));
  }
}

bool CountryCode::is_iso() const noexcept {
  return code_.size() == 2 && std::all_of(code_.begin(), code_.end(), [](char c) {
           return c >= 'A' && c <= 'Z';
         });
}

}  // namespace flownet
