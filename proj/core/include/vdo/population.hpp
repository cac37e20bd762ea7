#pragma once

#include <optional>
#include <span>
#include <vector>

namespace vdo {

// One candidate solution. fitness stays empty until the point is evaluated;
// no magic sentinel values are used.
struct Individual {
  std::vector<double> x;
  std::optional<double> fitness;
};

// Fixed-size population with best-so-far bookkeeping. The best is updated on
// every reported evaluation and never worsens, so it can be lower than the
// best fitness currently held by a member (members may later be replaced or
// restored from an archive).
class Population {
 public:
  Population() = default;
  explicit Population(std::size_t n) : members_(n) {}

  std::vector<Individual>& members() { return members_; }
  const std::vector<Individual>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  Individual& operator[](std::size_t i) { return members_[i]; }
  const Individual& operator[](std::size_t i) const { return members_[i]; }

  bool has_best() const { return best_f_.has_value(); }
  double best_f() const { return *best_f_; }
  const std::vector<double>& best_x() const { return best_x_; }

  // Records an evaluated point; replaces the best on strict improvement.
  void note_evaluation(std::span<const double> x, double f);

 private:
  std::vector<Individual> members_;
  std::vector<double> best_x_;
  std::optional<double> best_f_;
};

}  // namespace vdo
