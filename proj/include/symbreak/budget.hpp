#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>

namespace symbreak {

/// Limits shared by every search in the library. A search that would need
/// more raises BudgetExceeded instead of returning a partial answer.
struct Budget {
  /// Search-tree nodes per call (refinement nodes for the automorphism
  /// kernel, labeling nodes for the distinguishing solvers).
  std::uint64_t node_limit = 2'000'000;
  /// Largest automorphism group `automorphisms()` will materialize.
  std::size_t element_limit = 200'000;
  /// Random candidate labelings tried before exhaustive search.
  int retries = 512;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  bool expired() const {
    return deadline && std::chrono::steady_clock::now() > *deadline;
  }
};

/// Node counter tied to a Budget; `what` names the search in errors.
class NodeCounter {
 public:
  NodeCounter(const Budget& budget, const char* what) : budget_(budget), what_(what) {}

  /// Counts one node; throws BudgetExceeded past the node limit or deadline.
  void tick();
  std::uint64_t used() const { return used_; }

 private:
  const Budget& budget_;
  const char* what_;
  std::uint64_t used_ = 0;
};

}  // namespace symbreak
