#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flownet/network.hpp"

namespace flownet {

/// Named, year-stamped node -> score map over a slice roster. A missing
/// value (nullopt) marks a metric that is undefined for that node.
struct ScoreVector {
  std::string name;
  int year = 0;
  RosterPtr roster;
  std::vector<std::optional<double>> values;

  ScoreVector() = default;
  ScoreVector(std::string name_, int year_, RosterPtr roster_)
      : name(std::move(name_)), year(year_), roster(std::move(roster_)),
        values(roster ? roster->size() : 0) {}

  std::size_t size() const noexcept { return values.size(); }
  const CountryCode& node(std::size_t i) const { return roster->at(i); }
  std::optional<double> at(const CountryCode& code) const;
  std::size_t defined_count() const;
};

/// Score vector holding each node's in- or out-strength.
ScoreVector in_strength_scores(const TimeSlice& s);
ScoreVector out_strength_scores(const TimeSlice& s);

}  // namespace flownet
