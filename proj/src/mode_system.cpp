#include "normord/mode_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace normord {

ModeSystem ModeSystem::coupled(std::size_t n) {
  if (n == 0) throw std::invalid_argument("mode system needs at least one mode");
  return ModeSystem(n, std::vector<std::uint8_t>(n * n, 1));
}

ModeSystem ModeSystem::noncoupled(std::size_t n) {
  if (n == 0) throw std::invalid_argument("mode system needs at least one mode");
  std::vector<std::uint8_t> k(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) k[i * n + i] = 1;
  return ModeSystem(n, std::move(k));
}

ModeSystem ModeSystem::custom(std::vector<std::vector<int>> kappa) {
  const std::size_t n = kappa.size();
  if (n == 0) throw std::invalid_argument("mode system needs at least one mode");
  std::vector<std::uint8_t> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (kappa[i].size() != n) throw std::invalid_argument("coupling matrix must be square");
    for (std::size_t j = 0; j < n; ++j) {
      const int v = kappa[i][j];
      if (v != 0 && v != 1) throw std::invalid_argument("coupling entries must be 0 or 1");
      if (i == j && v != 1) throw std::invalid_argument("every mode must satisfy [a_i, a_i+] = 1");
      flat.push_back(static_cast<std::uint8_t>(v));
    }
  }
  return ModeSystem(n, std::move(flat));
}

bool ModeSystem::is_coupled() const noexcept {
  return std::all_of(kappa_.begin(), kappa_.end(), [](auto v) { return v == 1; });
}

bool ModeSystem::is_noncoupled() const noexcept {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (kappa_[i * n_ + j] != (i == j ? 1 : 0)) return false;
  return true;
}

}  // namespace normord
