#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cnkit/field.hpp"

namespace cnkit {

/// An ordered list of finite sets A_1, ..., A_n of field elements; the
/// product A_1 x ... x A_n is the evaluation domain for witness search
/// and the coefficient formula. Elements within a set are pairwise
/// distinct and keep their given order, which fixes enumeration order.
class Grid {
public:
  Grid(FieldSpec spec, std::vector<std::vector<FieldValue>> sets);

  std::size_t arity() const { return sets_.size(); }
  const FieldSpec& spec() const { return spec_; }
  const std::vector<std::vector<FieldValue>>& sets() const { return sets_; }
  const std::vector<FieldValue>& set(std::size_t i) const { return sets_[i]; }
  std::size_t size(std::size_t i) const { return sets_[i].size(); }

  bool has_points() const;

  /// The lexicographically first grid point; requires has_points().
  std::vector<FieldValue> first_point() const;

  std::optional<std::size_t> index_in_set(std::size_t axis,
                                          const FieldValue& v) const;
  bool contains_point(const std::vector<FieldValue>& point) const;

  /// A copy with one element dropped from one set.
  Grid without_element(std::size_t axis, std::size_t index) const;

  /// A copy with one set replaced (re-validated).
  Grid with_set(std::size_t axis, std::vector<FieldValue> values) const;

private:
  FieldSpec spec_;
  std::vector<std::vector<FieldValue>> sets_;
};

}  // namespace cnkit
