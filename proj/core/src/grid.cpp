#include "cnkit/grid.hpp"

namespace cnkit {

Grid::Grid(FieldSpec spec, std::vector<std::vector<FieldValue>> sets)
    : spec_(std::move(spec)), sets_(std::move(sets)) {
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    const auto& set = sets_[i];
    for (std::size_t j = 0; j < set.size(); ++j) {
      if (!(set[j].spec() == spec_)) {
        throw Error(Errc::field_mismatch,
                    "grid element in set " + std::to_string(i) +
                        " lives in a different field");
      }
      for (std::size_t k = j + 1; k < set.size(); ++k) {
        if (set[j] == set[k]) {
          throw Error(Errc::precondition,
                      "grid set " + std::to_string(i) +
                          " contains duplicate element " + set[j].str());
        }
      }
    }
  }
}

bool Grid::has_points() const {
  for (const auto& set : sets_) {
    if (set.empty()) return false;
  }
  return true;
}

std::vector<FieldValue> Grid::first_point() const {
  std::vector<FieldValue> p;
  p.reserve(arity());
  for (const auto& set : sets_) p.push_back(set.front());
  return p;
}

std::optional<std::size_t> Grid::index_in_set(std::size_t axis,
                                              const FieldValue& v) const {
  const auto& set = sets_[axis];
  for (std::size_t j = 0; j < set.size(); ++j) {
    if (set[j] == v) return j;
  }
  return std::nullopt;
}

bool Grid::contains_point(const std::vector<FieldValue>& point) const {
  if (point.size() != arity()) return false;
  for (std::size_t i = 0; i < arity(); ++i) {
    if (!index_in_set(i, point[i])) return false;
  }
  return true;
}

Grid Grid::without_element(std::size_t axis, std::size_t index) const {
  std::vector<std::vector<FieldValue>> sets = sets_;
  sets[axis].erase(sets[axis].begin() + static_cast<std::ptrdiff_t>(index));
  Grid g(spec_, {});
  g.sets_ = std::move(sets);  // already validated; erasing keeps invariants
  return g;
}

Grid Grid::with_set(std::size_t axis, std::vector<FieldValue> values) const {
  std::vector<std::vector<FieldValue>> sets = sets_;
  sets[axis] = std::move(values);
  return Grid(spec_, std::move(sets));
}

}  // namespace cnkit
