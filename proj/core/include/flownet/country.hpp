#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>

namespace flownet {

/// Country token, canonicalized to uppercase. Non-ISO tokens are allowed
/// (historical states appear in affiliation data).
class CountryCode {
 public:
  CountryCode() = default;

  /// Throws std::invalid_argument on empty tokens or tokens containing
  /// whitespace or commas.
  explicit CountryCode(std::string_view token);

  const std::string& str() const noexcept { return code_; }

  /// True for two-letter alphabetic tokens (ISO 3166-1 alpha-2 shape).
  bool is_iso() const noexcept;

  auto operator<=>(const CountryCode&) const = default;
  bool operator==(const CountryCode&) const = default;

 private:
  std::string code_;
};

}  // namespace flownet

template <>
struct std::hash<flownet::CountryCode> {
  std::size_t operator()(const flownet::CountryCode& c) const noexcept {
    return std::hash<std::string>{}(c.str());
  }
};
