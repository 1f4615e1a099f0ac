#include "dowker/diagram.hpp"

#include <algorithm>

namespace dowker {

PersistenceDiagram::PersistenceDiagram(std::vector<PersistencePair> pairs, std::size_t max_dim, Extended cutoff,
                                       bool censored)
    : pairs_(std::move(pairs)), max_dim_(max_dim), cutoff_(cutoff), censored_(censored) {
  std::sort(pairs_.begin(), pairs_.end(), [](const auto& a, const auto& b) { return a < b; });
}

std::vector<PersistencePair> PersistenceDiagram::reported() const {
  std::vector<PersistencePair> out;
  for (const auto& p : pairs_)
    if (!p.zero_length()) out.push_back(p);
  return out;
}

std::vector<PersistencePair> PersistenceDiagram::in_dim(std::size_t dim) const {
  std::vector<PersistencePair> out;
  for (const auto& p : pairs_)
    if (p.dim == dim && !p.zero_length()) out.push_back(p);
  return out;
}

std::vector<std::pair<Extended, Extended>> PersistenceDiagram::intervals(std::size_t dim) const {
  std::vector<std::pair<Extended, Extended>> out;
  for (const auto& p : in_dim(dim)) out.emplace_back(p.birth, p.death);
  return out;
}

PersistenceDiagram censor_at(const PersistenceDiagram& d, Extended cutoff) {
  std::vector<PersistencePair> out;
  for (PersistencePair p : d.raw()) {
    if (p.birth >= cutoff && cutoff.is_finite()) continue;
    if (p.death > cutoff) {
      p.death = cutoff;
      p.censored = true;
    }
    out.push_back(p);
  }
  return PersistenceDiagram(std::move(out), d.max_dim(), cutoff, cutoff.is_finite());
}

}  // namespace dowker
