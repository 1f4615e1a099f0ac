#include "dowker/relation.hpp"

namespace dowker {

Relation Relation::transposed() const {
  Relation t(n_);
  for (Vertex i = 0; i < n_; ++i)
    for (Vertex j = 0; j < n_; ++j) t.bits_[j * n_ + i] = bits_[i * n_ + j];
  return t;
}

bool Relation::subset_of(const Relation& other) const {
  if (other.n_ != n_) return false;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !other.bits_[i]) return false;
  return true;
}

Relation relation_at(const Network& g, Extended delta) {
  Relation r(g.size());
  for (Vertex i = 0; i < g.size(); ++i)
    for (Vertex j = 0; j < g.size(); ++j)
      if (g(i, j).is_finite() && g(i, j) <= delta) r.set(i, j);
  return r;
}

}  // namespace dowker
