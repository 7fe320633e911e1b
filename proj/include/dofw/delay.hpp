#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dofw/common.hpp"

namespace dofw {

// Pre-materialized delay sequence d_1..d_T, d_t >= 1.  The realized maximum
// is recorded for reporting; solvers never see it (they only see drained
// gradients).
class DelaySchedule {
 public:
  static DelaySchedule fixed(long horizon, long d);
  static DelaySchedule uniform_random(long horizon, long d_max,
                                      std::uint64_t seed);
  // delay = burst when t is a multiple of period, else 1
  static DelaySchedule bursty(long horizon, long period, long burst);

  long horizon() const { return static_cast<long>(delays_.size()); }
  long delay(long t) const;      // d_t, 1-based
  long max_delay() const { return max_delay_; }
  void dump_csv(std::ostream& os) const;  // columns: t,d_t

 private:
  explicit DelaySchedule(std::vector<long> delays);

  std::vector<long> delays_;
  long max_delay_;
};

// Buffer between query and arrival: the gradient queried at round k is
// released when drain(k + d_k - 1) is called.  Single-owner mutable state;
// one queue per experiment.
class FeedbackQueue {
 public:
  // stores (k, g) under arrival round k + d_k - 1; k must be new
  void enqueue(long k, Vector g, long d_k);

  // all (k, g_k) with k + d_k - 1 == t, ascending in k; must be called
  // with strictly increasing t
  std::vector<std::pair<long, Vector>> drain(long t);

  // gradients still buffered (arrival round not yet drained)
  std::size_t pending_count() const { return pending_items_; }

 private:
  std::map<long, std::vector<std::pair<long, Vector>>> pending_;
  std::unordered_set<long> enqueued_;
  std::size_t pending_items_ = 0;
  long last_drained_ = 0;
};

}  // namespace dofw
