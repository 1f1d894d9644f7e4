#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "permpoly/extension.hpp"
#include "permpoly/verify.hpp"

namespace permpoly::detail {

inline constexpr std::uint64_t kNoIndex = std::numeric_limits<std::uint64_t>::max();
inline constexpr std::uint64_t kParallelThreshold = 1u << 12;

inline std::string label(std::string_view name, std::string_view value) {
  return std::string(name) + "=" + std::string(value);
}
inline std::string label(std::string_view name, std::uint64_t value) {
  return std::string(name) + "=" + std::to_string(value);
}
inline std::string label(std::string_view name, Gf2mElement x) { return label(name, to_hex(x)); }

inline Counterexample cex(std::vector<std::string> inputs, std::string lhs, std::string rhs) {
  return Counterexample{std::move(inputs), std::move(lhs), std::move(rhs)};
}

inline std::string bool_str(bool b) { return b ? "true" : "false"; }

inline unsigned worker_count(const VerifyOptions& opts) {
  if (opts.workers != 0) return opts.workers;
  return std::max(1u, std::thread::hardware_concurrency());
}

inline std::uint64_t chunk_count(std::uint64_t count, unsigned workers) {
  if (count < kParallelThreshold || workers <= 1) return 1;
  return std::min<std::uint64_t>(workers, count);
}

/// Splits [0, count) into chunk_count() contiguous chunks; fn(chunk, begin, end)
/// runs once per chunk.
template <class Fn>
void parallel_for(std::uint64_t count, unsigned workers, Fn&& fn) {
  const std::uint64_t n = chunk_count(count, workers);
  if (n == 1) {
    fn(std::uint64_t{0}, std::uint64_t{0}, count);
    return;
  }
  std::vector<std::jthread> threads;
  threads.reserve(n);
  for (std::uint64_t w = 0; w < n; ++w) {
    const std::uint64_t begin = count * w / n;
    const std::uint64_t end = count * (w + 1) / n;
    threads.emplace_back([&fn, w, begin, end] { fn(w, begin, end); });
  }
}

/// Accumulates cases for one CheckOutcome.
class Recorder {
 public:
  Recorder(std::string name, CheckParams params, const VerifyOptions& opts)
      : opts_(opts), start_(std::chrono::steady_clock::now()) {
    outcome_.check_name = std::move(name);
    outcome_.params = std::move(params);
  }

  bool stopped() const { return outcome_.counterexample.has_value() && !opts_.count_all; }
  const VerifyOptions& options() const { return opts_; }

  /// One scalar case; describe() is only called on failure.
  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    if (stopped()) return;
    ++outcome_.tested;
    if (!ok) fail(describe());
  }

  /// fn(i) -> std::optional<Counterexample> for i in [0, count), possibly concurrently.
  template <class Fn>
  void sweep(std::uint64_t count, Fn&& fn) {
    if (stopped() || count == 0) return;
    struct Local {
      std::uint64_t first = kNoIndex;
      std::optional<Counterexample> found;
      std::uint64_t failures = 0;
    };
    const unsigned workers = worker_count(opts_);
    std::vector<Local> locals(chunk_count(count, workers));
    std::atomic<std::uint64_t> earliest{kNoIndex};
    const bool count_all = opts_.count_all;

    parallel_for(count, workers, [&](std::uint64_t chunk, std::uint64_t begin, std::uint64_t end) {
      Local& local = locals[chunk];
      for (std::uint64_t i = begin; i < end; ++i) {
        if (!count_all && i > earliest.load(std::memory_order_relaxed)) break;
        auto found = fn(i);
        if (!found) continue;
        ++local.failures;
        if (local.first == kNoIndex) {
          local.first = i;
          local.found = std::move(found);
        }
        std::uint64_t cur = earliest.load(std::memory_order_relaxed);
        while (i < cur && !earliest.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
        }
        if (!count_all) break;
      }
    });

    Local* best = nullptr;
    std::uint64_t failures = 0;
    for (auto& l : locals) {
      failures += l.failures;
      if (l.first != kNoIndex && (best == nullptr || l.first < best->first)) best = &l;
    }
    if (best == nullptr) {
      outcome_.tested += count;
    } else if (count_all) {
      outcome_.tested += count;
      outcome_.failures += failures;
      if (!outcome_.counterexample) outcome_.counterexample = std::move(best->found);
    } else {
      outcome_.tested += best->first + 1;
      outcome_.failures += 1;
      outcome_.counterexample = std::move(best->found);
    }
  }

  void fail(Counterexample c) {
    ++outcome_.failures;
    if (!outcome_.counterexample) outcome_.counterexample = std::move(c);
  }

  CheckOutcome finish() {
    outcome_.passed = !outcome_.counterexample.has_value();
    outcome_.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    return std::move(outcome_);
  }

 private:
  VerifyOptions opts_;
  std::chrono::steady_clock::time_point start_;
  CheckOutcome outcome_;
};

/// Images of every element, indexed by bit pattern.
template <class Fn>
std::vector<Gf2mElement> image_table(const BinaryField& field, const VerifyOptions& opts, Fn&& fn) {
  std::vector<Gf2mElement> images(field.order());
  parallel_for(field.order(), worker_count(opts), [&](std::uint64_t, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) images[i] = fn(Gf2mElement{static_cast<std::uint32_t>(i)});
  });
  return images;
}

inline std::string class_str(const TraceClassImage& c) {
  return (c.image ? "T" + std::to_string(*c.image) : std::string("none")) + (c.injective ? "" : ",not-injective");
}

/// Extension-field helpers shared by the B-set checks.
inline bool in_b0(const ProjectiveValue& z) {
  return z.is_infinity() || (ExtensionField::in_base(z.value()) && z.value() != ExtensionField::one());
}

inline bool in_b1(const ExtensionField& ext, const ProjectiveValue& z) {
  return !z.is_infinity() && z.value() != ExtensionField::one() && ext.norm(z.value()) == BinaryField::one();
}

/// Trace-class label of a projective value known to lie in GF(q), or nullopt.
inline std::optional<Gf2mElement> base_value(const ProjectiveValue& z) {
  if (z.is_infinity() || !ExtensionField::in_base(z.value())) return std::nullopt;
  return z.value().a;
}

}  // namespace permpoly::detail
