#include "eps/lang/rank.hpp"

#include <algorithm>

namespace eps {

std::string Rank::str() const {
  switch (tag_) {
    case Tag::Fin:
      return std::to_string(n_);
    case Tag::Omega:
      return "W";
    case Tag::OmegaPlus:
      return "W+" + std::to_string(n_ + 1);
  }
  return "?";
}

std::uint32_t simple_rank(const Expression& e) {
  std::uint32_t best = e.kind() == Kind::Skolem ? e.symbol().level() : 0;
  for (const auto& k : e.children()) best = std::max(best, simple_rank(k));
  return best;
}

Rank rank(const SkolemSymbol& c) {
  if (c.clause_witness()) return Rank::omega();
  if (c.mentions_i()) return Rank::omega_plus(c.level());
  return Rank::fin(c.level());
}

Rank rank(const Expression& e) {
  if (e.kind() == Kind::InI) return Rank::omega();
  if (e.kind() == Kind::Skolem) return rank(e.symbol());
  throw ExprError("rank: not a Skolem term or I atom: " + to_string(e));
}

}  // namespace eps
