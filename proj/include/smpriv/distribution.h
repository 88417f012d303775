#pragma once

#include <cstddef>
#include <vector>

namespace smpriv {

// Absolute tolerance for probability-mass sums and row normalization checks.
inline constexpr double kProbSumTol = 1e-12;

// Ordered alphabet of non-negative integer energy levels, e.g. {0,1,...,K}.
// Levels are physical energy units; indices are positions in the alphabet.
class EnergyAlphabet {
 public:
  explicit EnergyAlphabet(std::vector<int> levels);

  std::size_t size() const { return levels_.size(); }
  int level(std::size_t i) const { return levels_[i]; }
  const std::vector<int>& levels() const { return levels_; }
  int max_level() const { return levels_.back(); }

  // Index of an exact level; throws std::invalid_argument if absent.
  std::size_t index_of(int level) const;
  bool contains(int level) const;

  // Contiguous alphabet {0, 1, ..., top}.
  static EnergyAlphabet upto(int top);

  bool operator==(const EnergyAlphabet&) const = default;

 private:
  std::vector<int> levels_;
};

// Probability mass function on a finite energy alphabet.
// Immutable after construction; construction validates non-negativity and
// that the masses sum to 1 within kProbSumTol.
class FiniteDistribution {
 public:
  FiniteDistribution(EnergyAlphabet alphabet, std::vector<double> mass);

  const EnergyAlphabet& alphabet() const { return alphabet_; }
  const std::vector<double>& mass() const { return mass_; }
  double mass_at(std::size_t i) const { return mass_[i]; }
  std::size_t size() const { return mass_.size(); }

  // Expected energy level, E[X].
  double mean() const;

  // Shannon entropy in bits (0 log 0 = 0).
  double entropy_bits() const;

  // Bernoulli(q) on levels {0,1}: Pr{X=1} = q.
  static FiniteDistribution bernoulli(double q);
  static FiniteDistribution degenerate(EnergyAlphabet alphabet, int level);
  static FiniteDistribution uniform(EnergyAlphabet alphabet);

  bool operator==(const FiniteDistribution&) const = default;

 private:
  EnergyAlphabet alphabet_;
  std::vector<double> mass_;
};

}  // namespace smpriv
