#include "arcnest/oracle.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "arcnest/errors.hpp"

namespace arcnest {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return b > kSaturated - a ? kSaturated : a + b;
}

std::uint64_t sat_pow(std::uint64_t base, int e) {
  std::uint64_t out = 1;
  for (int i = 0; i < e; ++i) out = sat_mul(out, base);
  return out;
}

void check_cap(const EnumSpec& spec, std::uint64_t cap) {
  const std::uint64_t raw = raw_object_count(spec);
  if (raw > cap) {
    throw GuardExceeded("enumeration of " + std::string(to_string(spec.family)) + " with n=" +
                        std::to_string(spec.n) + ", r=" + std::to_string(spec.r) + " generates " +
                        (raw == kSaturated ? std::string("more than 2^64") : std::to_string(raw)) +
                        " objects, above the oracle cap of " + std::to_string(cap));
  }
}

// Visits colour words of length m over [r] as base-r counters.
template <class F>
void for_each_colouring(int m, int r, F&& f) {
  std::vector<int> colours(static_cast<std::size_t>(m), 1);
  while (true) {
    f(colours);
    int pos = m - 1;
    while (pos >= 0 && colours[static_cast<std::size_t>(pos)] == r) {
      colours[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) return;
    ++colours[static_cast<std::size_t>(pos)];
  }
}

// Calls f(base_index, word) for each permutation word of [n] in lex order.
template <class F>
void for_each_word(int n, F&& f) {
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  std::uint64_t index = 0;
  do {
    f(index++, word);
  } while (std::next_permutation(word.begin(), word.end()));
}

// Calls f(base_index, blocks) for each set partition of [n] in restricted
// growth string order.
template <class F>
void for_each_rgs(int n, F&& f) {
  std::uint64_t index = 0;
  if (n == 0) {
    f(index, std::vector<std::vector<int>>{});
    return;
  }
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  auto emit = [&] {
    std::vector<std::vector<int>> blocks;
    for (int i = 0; i < n; ++i) {
      const auto b = static_cast<std::size_t>(a[static_cast<std::size_t>(i)]);
      if (b == blocks.size()) blocks.emplace_back();
      blocks[b].push_back(i + 1);
    }
    f(index++, blocks);
  };
  auto rec = [&](auto&& self, int i, int max_block) -> void {
    if (i == n) {
      emit();
      return;
    }
    for (int b = 0; b <= max_block + 1; ++b) {
      a[static_cast<std::size_t>(i)] = b;
      self(self, i + 1, std::max(max_block, b));
    }
  };
  rec(rec, 1, 0);
}

bool refinement_matches(const EnumSpec& spec, const std::set<int>& o, const std::set<int>& c) {
  return (!spec.openers || *spec.openers == o) && (!spec.closers || *spec.closers == c);
}

bool bounds_hold(const EnumSpec& spec, int crossing, int nesting) {
  return (!spec.j || crossing < *spec.j) && (!spec.k || nesting < *spec.k);
}

struct Accumulator {
  std::uint64_t count = 0;
  JointHistogram histogram;
};

void visit_permutations(const EnumSpec& spec, int worker, int workers,
                        const std::function<void(const ColouredPermutation&)>& f) {
  const bool filter_ends = spec.openers.has_value() || spec.closers.has_value();
  for_each_word(spec.n, [&](std::uint64_t index, const std::vector<int>& word) {
    if (static_cast<int>(index % static_cast<std::uint64_t>(workers)) != worker) return;
    const Permutation perm(word);
    if (filter_ends && !refinement_matches(spec, openers(perm), closers(perm))) return;
    for_each_colouring(spec.n, spec.r, [&](const std::vector<int>& colours) {
      const ColouredPermutation cp(perm, colours, spec.r);
      if ((spec.j || spec.k) && !bounds_hold(spec, cr(cp), ne(cp))) return;
      f(cp);
    });
  });
}

void visit_set_partitions(const EnumSpec& spec, int worker, int workers,
                          const std::function<void(const ColouredSetPartition&)>& f) {
  const bool filter_ends = spec.openers.has_value() || spec.closers.has_value();
  for_each_rgs(spec.n, [&](std::uint64_t index, const std::vector<std::vector<int>>& blocks) {
    if (static_cast<int>(index % static_cast<std::uint64_t>(workers)) != worker) return;
    if (filter_ends) {
      // Openers and closers are the first and last elements of non-singleton blocks.
      std::set<int> o, c;
      for (const auto& b : blocks) {
        if (b.size() < 2) continue;
        o.insert(b.front());
        c.insert(b.back());
      }
      if (!refinement_matches(spec, o, c)) return;
    }
    const int arcs = spec.n - static_cast<int>(blocks.size());
    for_each_colouring(arcs, spec.r, [&](const std::vector<int>& colours) {
      const ColouredSetPartition sp(spec.n, blocks, colours, spec.r);
      if ((spec.j || spec.k) && !bounds_hold(spec, cr(sp), ne(sp))) return;
      f(sp);
    });
  });
}

// Base objects (uncoloured words / partitions) are strided across workers.
Accumulator accumulate(const EnumSpec& spec, const OracleOptions& options, bool want_histogram) {
  validate(spec);
  check_cap(spec, options.cap);
  const int workers = std::max(1, options.threads);
  std::vector<Accumulator> parts(static_cast<std::size_t>(workers));
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&](int w) {
    Accumulator& acc = parts[static_cast<std::size_t>(w)];
    try {
      if (spec.family == Family::Permutation) {
        visit_permutations(spec, w, workers, [&](const ColouredPermutation& cp) {
          ++acc.count;
          if (want_histogram) acc.histogram.add(cr(cp), ne(cp));
        });
      } else {
        visit_set_partitions(spec, w, workers, [&](const ColouredSetPartition& sp) {
          ++acc.count;
          if (want_histogram) acc.histogram.add(cr(sp), ne(sp));
        });
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  Accumulator total;
  for (const auto& p : parts) {
    total.count += p.count;
    total.histogram.merge(p.histogram);
  }
  return total;
}

}  // namespace

void validate(const EnumSpec& spec) {
  if (spec.n < 0) throw InvalidInput("n must be nonnegative");
  if (spec.r < 1) throw InvalidInput("the number of colours must be at least 1");
  if (spec.j && *spec.j < 2) throw InvalidInput("j must be at least 2");
  if (spec.k && *spec.k < 2) throw InvalidInput("k must be at least 2");
  for (const auto* s : {&spec.openers, &spec.closers}) {
    if (!*s) continue;
    for (int v : **s)
      if (v < 1 || v > spec.n) throw InvalidInput("refinement vertex " + std::to_string(v) + " outside [1, n]");
  }
}

std::uint64_t raw_object_count(const EnumSpec& spec) {
  validate(spec);
  const auto r = static_cast<std::uint64_t>(spec.r);
  if (spec.family == Family::Permutation) {
    std::uint64_t f = 1;
    for (int i = 2; i <= spec.n; ++i) f = sat_mul(f, static_cast<std::uint64_t>(i));
    return sat_mul(f, sat_pow(r, spec.n));
  }
  // Stirling numbers of the second kind, row by row.
  std::vector<std::uint64_t> s{1};
  for (int m = 1; m <= spec.n; ++m) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(m) + 1, 0);
    for (int b = 1; b <= m; ++b) {
      const std::uint64_t stay = b < m ? sat_mul(static_cast<std::uint64_t>(b), s[static_cast<std::size_t>(b)]) : 0;
      next[static_cast<std::size_t>(b)] = sat_add(stay, s[static_cast<std::size_t>(b - 1)]);
    }
    s = std::move(next);
  }
  std::uint64_t total = 0;
  for (int b = 0; b <= spec.n; ++b) {
    total = sat_add(total, sat_mul(s[static_cast<std::size_t>(b)], sat_pow(r, spec.n - b)));
  }
  return total;
}

void for_each_permutation(const EnumSpec& spec,
                          const std::function<void(const ColouredPermutation&)>& f,
                          std::uint64_t cap) {
  validate(spec);
  if (spec.family != Family::Permutation) throw InvalidInput("spec does not describe permutations");
  check_cap(spec, cap);
  visit_permutations(spec, 0, 1, f);
}

void for_each_set_partition(const EnumSpec& spec,
                            const std::function<void(const ColouredSetPartition&)>& f,
                            std::uint64_t cap) {
  validate(spec);
  if (spec.family != Family::SetPartition) throw InvalidInput("spec does not describe set partitions");
  check_cap(spec, cap);
  visit_set_partitions(spec, 0, 1, f);
}

std::uint64_t count(const EnumSpec& spec, const OracleOptions& options) {
  return accumulate(spec, options, false).count;
}

JointHistogram joint_histogram(const EnumSpec& spec, const OracleOptions& options) {
  return accumulate(spec, options, true).histogram;
}

std::uint64_t refined_count(const EnumSpec& spec, const OracleOptions& options) {
  if (!spec.openers || !spec.closers) throw InvalidInput("refined_count needs both an opener and a closer set");
  return count(spec, options);
}

}  // namespace arcnest
