#pragma once

// Incremental semi-echelon basis with optional tracking of how each stored
// row combines the accepted input vectors.

#include <cstddef>
#include <optional>
#include <vector>

#include "aslab/field.hpp"

namespace aslab::detail {

class SemiEchelon {
 public:
  SemiEchelon(const FieldDescriptor& field, std::size_t dim, bool track)
      : f_(field), dim_(dim), track_(track) {}

  std::size_t rank() const noexcept { return rows_.size(); }

  // Accepts v if it is independent of the accepted vectors and returns
  // nullopt. Otherwise returns c with v = sum_j c[j] * accepted_j (empty when
  // tracking is off).
  std::optional<std::vector<Value>> insert(std::vector<Value> v) {
    const std::size_t id = rows_.size();
    std::vector<Value> comb;
    if (track_) {
      comb.assign(id + 1, f_.zero());
      comb[id] = f_.one();
    }
    // Rows are applied in increasing pivot order so eliminated columns stay zero.
    for (const std::size_t r : order_) {
      const std::size_t c = pivots_[r];
      if (f_.is_zero(v[c])) continue;
      const Value factor = v[c];
      const auto& row = rows_[r];
      for (std::size_t k = c; k < dim_; ++k)
        if (!f_.is_zero(row[k])) v[k] = f_.sub(v[k], f_.mul(factor, row[k]));
      if (track_) {
        const auto& rc = combs_[r];
        for (std::size_t k = 0; k < rc.size(); ++k)
          if (!f_.is_zero(rc[k])) comb[k] = f_.sub(comb[k], f_.mul(factor, rc[k]));
      }
    }
    std::size_t pivot = 0;
    while (pivot < dim_ && f_.is_zero(v[pivot])) ++pivot;
    if (pivot == dim_) {
      if (!track_) return std::vector<Value>{};
      comb.pop_back();
      for (auto& c : comb) c = f_.neg(c);
      return comb;
    }
    const Value inv = f_.inv(v[pivot]);
    if (!f_.is_one(inv)) {
      for (std::size_t k = pivot; k < dim_; ++k)
        if (!f_.is_zero(v[k])) v[k] = f_.mul(v[k], inv);
      if (track_)
        for (auto& c : comb)
          if (!f_.is_zero(c)) c = f_.mul(c, inv);
    }
    auto pos = order_.begin();
    while (pos != order_.end() && pivots_[*pos] < pivot) ++pos;
    order_.insert(pos, rows_.size());
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    if (track_) combs_.push_back(std::move(comb));
    return std::nullopt;
  }

 private:
  const FieldDescriptor& f_;
  std::size_t dim_;
  bool track_;
  std::vector<std::vector<Value>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<Value>> combs_;
};

}  // namespace aslab::detail
