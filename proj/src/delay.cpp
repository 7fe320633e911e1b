#include "dofw/delay.hpp"

#include <algorithm>
#include <ostream>

#include "dofw/rng.hpp"

namespace dofw {

DelaySchedule::DelaySchedule(std::vector<long> delays)
    : delays_(std::move(delays)) {
  if (delays_.empty()) throw ConfigError("delay schedule needs horizon >= 1");
  max_delay_ = 0;
  for (long d : delays_) {
    if (d < 1) throw ConfigError("delay schedule produced d_t < 1");
    max_delay_ = std::max(max_delay_, d);
  }
}

DelaySchedule DelaySchedule::fixed(long horizon, long d) {
  if (d < 1) throw ConfigError("fixed delay must be >= 1");
  return DelaySchedule(std::vector<long>(static_cast<std::size_t>(horizon), d));
}

DelaySchedule DelaySchedule::uniform_random(long horizon, long d_max,
                                            std::uint64_t seed) {
  if (d_max < 1) throw ConfigError("uniform delay bound must be >= 1");
  Rng rng(seed);
  std::vector<long> ds(static_cast<std::size_t>(horizon));
  for (long& d : ds)
    d = static_cast<long>(rng.uniform_int(1, static_cast<std::uint64_t>(d_max)));
  return DelaySchedule(std::move(ds));
}

DelaySchedule DelaySchedule::bursty(long horizon, long period, long burst) {
  if (period < 1) throw ConfigError("bursty period must be >= 1");
  if (burst < 1) throw ConfigError("bursty burst delay must be >= 1");
  std::vector<long> ds(static_cast<std::size_t>(horizon));
  for (long t = 1; t <= horizon; ++t)
    ds[static_cast<std::size_t>(t - 1)] = (t % period == 0) ? burst : 1;
  return DelaySchedule(std::move(ds));
}

long DelaySchedule::delay(long t) const {
  if (t < 1 || t > horizon())
    throw ContractViolation("delay index out of range");
  return delays_[static_cast<std::size_t>(t - 1)];
}

void DelaySchedule::dump_csv(std::ostream& os) const {
  os << "t,d_t\n";
  for (long t = 1; t <= horizon(); ++t) os << t << "," << delay(t) << "\n";
}

void FeedbackQueue::enqueue(long k, Vector g, long d_k) {
  if (d_k < 1) throw ContractViolation("enqueue requires d_k >= 1");
  if (!enqueued_.insert(k).second)
    throw ContractViolation("gradient for round " + std::to_string(k) +
                            " enqueued twice");
  long arrival = k + d_k - 1;
  pending_[arrival].emplace_back(k, std::move(g));
  ++pending_items_;
}

std::vector<std::pair<long, Vector>> FeedbackQueue::drain(long t) {
  if (t <= last_drained_)
    throw ContractViolation("drain must be called with increasing t");
  last_drained_ = t;
  auto it = pending_.find(t);
  if (it == pending_.end()) return {};
  std::vector<std::pair<long, Vector>> out = std::move(it->second);
  pending_.erase(it);
  // enqueue order is ascending in k when queries arrive in order; sorting
  // makes the delivery order independent of how the queue was filled
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  pending_items_ -= out.size();
  return out;
}

}  // namespace dofw
