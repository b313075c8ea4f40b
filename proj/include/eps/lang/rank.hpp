#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "eps/lang/expr.hpp"

namespace eps {

// Ordinal-valued rank: a finite n, Omega, or Omega+n+1.
class Rank {
 public:
  enum class Tag : std::uint8_t { Fin, Omega, OmegaPlus };

  static Rank fin(std::uint32_t n) { return Rank(Tag::Fin, n); }
  static Rank omega() { return Rank(Tag::Omega, 0); }
  // Omega + n + 1
  static Rank omega_plus(std::uint32_t n) { return Rank(Tag::OmegaPlus, n); }

  Tag tag() const { return tag_; }
  std::uint32_t n() const { return n_; }
  bool is_omega() const { return tag_ == Tag::Omega; }
  bool below_omega() const { return tag_ == Tag::Fin; }
  bool above_omega() const { return tag_ == Tag::OmegaPlus; }

  friend bool operator==(const Rank&, const Rank&) = default;
  friend std::strong_ordering operator<=>(const Rank& a, const Rank& b) {
    if (a.tag_ != b.tag_) return a.tag_ <=> b.tag_;
    return a.n_ <=> b.n_;
  }

  std::string str() const;

 private:
  Rank(Tag t, std::uint32_t n) : tag_(t), n_(n) {}
  Tag tag_;
  std::uint32_t n_;
};

// Stratification level: 0 without Skolem terms, otherwise the largest level
// of a symbol occurring in e.
std::uint32_t simple_rank(const Expression& e);

Rank rank(const SkolemSymbol& c);

// Rank of a canonical expression (or any Skolem term / I atom by its head).
Rank rank(const Expression& e);

}  // namespace eps
