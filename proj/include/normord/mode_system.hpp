#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace normord {

/// Number of modes together with the {0,1} matrix kappa, where
/// kappa(i, j) is the scalar value of [a_i, a_j+]. Modes are zero-based
/// in the C++ API and one-based in every textual format.
class ModeSystem {
 public:
  /// Every pair of modes is coupled: [a_i, a_j+] = 1 for all i, j.
  static ModeSystem coupled(std::size_t n);
  /// Independent oscillators: [a_i, a_j+] = delta_ij.
  static ModeSystem noncoupled(std::size_t n);
  /// Throws std::invalid_argument unless the matrix is square, non-empty,
  /// has entries in {0,1} and a unit diagonal.
  static ModeSystem custom(std::vector<std::vector<int>> kappa);

  std::size_t modes() const noexcept { return n_; }
  int kappa(std::size_t i, std::size_t j) const { return kappa_[i * n_ + j]; }
  bool is_coupled() const noexcept;
  bool is_noncoupled() const noexcept;

  friend bool operator==(const ModeSystem&, const ModeSystem&) = default;

 private:
  ModeSystem(std::size_t n, std::vector<std::uint8_t> kappa)
      : n_(n), kappa_(std::move(kappa)) {}

  std::size_t n_;
  std::vector<std::uint8_t> kappa_;
};

}  // namespace normord
