#pragma once

#include <string>
#include <vector>

#include "invord/error.hpp"
#include "invord/limits.hpp"

namespace invord {

// Finite carrier set. Points are indices 0..n-1; labels are display names.
class Universe {
public:
  explicit Universe(int size) : Universe(size, defaultLabels(size)) {}

  Universe(int size, std::vector<std::string> labels);

  int size() const { return size_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_.at(i); }
  bool hasDefaultLabels() const;

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.size_ == b.size_ && a.labels_ == b.labels_;
  }

  static std::vector<std::string> defaultLabels(int size);

private:
  int size_;
  std::vector<std::string> labels_;
};

// True when the two universes can be used together: equal sizes and equal
// labels, except that default labels match anything of the same size.
bool compatibleUniverses(const Universe& a, const Universe& b);

// The more descriptive of two compatible universes.
Universe mergeUniverses(const Universe& a, const Universe& b);

} // namespace invord
