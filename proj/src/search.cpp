#include "cuboid/search.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>
#include <variant>

#include "cuboid/error.hpp"

namespace cuboid {

namespace {

struct Task {
  std::size_t seed;
  std::int64_t k = 0;
  std::int64_t m = 0;
  std::optional<Parametrization> parametrization;
};

bool parity_allows(Parity parity, std::int64_t k) {
  switch (parity) {
    case Parity::odd: return k % 2 != 0;
    case Parity::even: return k % 2 == 0;
    case Parity::both: return true;
  }
  return false;
}

std::vector<Task> expand(const SearchJob& job) {
  std::vector<std::size_t> order(job.seeds.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    return job.seeds[l].curve().N() < job.seeds[r].curve().N();
  });

  std::vector<Parametrization> params = job.parametrizations;
  std::sort(params.begin(), params.end());
  params.erase(std::unique(params.begin(), params.end()), params.end());

  std::vector<Task> tasks;
  for (std::size_t seed : order) {
    const std::size_t before = tasks.size();
    for (std::int64_t k = 1; k <= job.max_multiple; ++k) {
      if (!parity_allows(job.parity, k)) continue;
      for (std::int64_t m = k + 2; m <= job.max_multiple; m += 2) {
        for (auto p : params) tasks.push_back(Task{seed, k, m, p});
      }
    }
    if (tasks.size() == before) tasks.push_back(Task{seed, 0, 0, std::nullopt});
  }
  return tasks;
}

SearchRecord execute(const SearchJob& job, const Task& task) {
  const CurvePoint& seed = job.seeds[task.seed];
  SearchRecord rec;
  rec.N = seed.curve().N();
  rec.k = task.k;
  rec.m = task.m;
  rec.parametrization = task.parametrization;
  if (!task.parametrization) {
    rec.status = RecordStatus::skipped;
    rec.skip_reason = "no same-parity pairs with k < m <= " + std::to_string(job.max_multiple);
    return rec;
  }
  try {
    const SolutionPair pair = same_parity_pair(seed, task.k, task.m);
    Cuboid cuboid = build_npc(pair, *task.parametrization);
    rec.X = pair.X();
    rec.Z = pair.Z();
    rec.pc = pc_condition(cuboid);
    rec.digits = cuboid_digits(cuboid);
    if (rec.digits > job.height_limit) {
      rec.status = RecordStatus::truncated;
    } else {
      rec.cuboid = std::move(cuboid);
    }
  } catch (const Error& e) {
    rec.status = RecordStatus::skipped;
    rec.skip_reason = e.what();
  }
  return rec;
}

}  // namespace

std::string_view to_string(Parity p) {
  switch (p) {
    case Parity::odd: return "odd";
    case Parity::even: return "even";
    case Parity::both: return "both";
  }
  return "?";
}

std::optional<Parity> parse_parity(std::string_view name) {
  for (auto p : {Parity::odd, Parity::even, Parity::both}) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

std::string_view to_string(RecordStatus s) {
  switch (s) {
    case RecordStatus::ok: return "ok";
    case RecordStatus::truncated: return "truncated";
    case RecordStatus::skipped: return "skipped";
  }
  return "?";
}

void SearchJob::validate() const {
  if (max_multiple < 2) throw Error(Errc::trivial_input, "max_multiple must be >= 2");
  if (height_limit < 1) throw Error(Errc::trivial_input, "height_limit must be >= 1");
  for (const auto& seed : seeds) {
    if (seed.is_infinity() || seed.is_trivial() || !on_curve(seed)) {
      throw Error(Errc::invalid_seed, "seed on C_" + seed.curve().N().get_str() +
                                          " is not a nontrivial curve point");
    }
  }
}

std::size_t task_count(const SearchJob& job) { return expand(job).size(); }

std::vector<TaskKey> task_keys(const SearchJob& job) {
  std::vector<TaskKey> keys;
  for (const Task& t : expand(job)) keys.push_back(TaskKey{job.seeds[t.seed].curve().N(), t.k, t.m, t.parametrization});
  return keys;
}

TaskKey key_of(const SearchRecord& record) { return TaskKey{record.N, record.k, record.m, record.parametrization}; }

std::size_t cuboid_digits(const Cuboid& cuboid) {
  std::size_t digits = 0;
  for (const auto& e : cuboid.edges()) {
    digits = std::max({digits, decimal_digits(e.num()), decimal_digits(e.den())});
  }
  return digits;
}

std::size_t run_search(const SearchJob& job, const SearchOptions& options,
                       const std::function<void(const SearchRecord&)>& sink) {
  job.validate();
  const std::vector<Task> tasks = expand(job);
  const std::size_t start = std::min(options.resume_from, tasks.size());
  const std::size_t total = tasks.size() - start;
  const unsigned workers = std::max(1U, std::min<unsigned>(options.workers, static_cast<unsigned>(total)));

  if (workers <= 1) {
    for (std::size_t i = start; i < tasks.size(); ++i) sink(execute(job, tasks[i]));
    return total;
  }

  using Slot = std::variant<std::monostate, SearchRecord, std::exception_ptr>;
  std::vector<Slot> slots(tasks.size());
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<std::size_t> next{start};
  std::atomic<bool> abort{false};

  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < tasks.size() && !abort; i = next++) {
        Slot result;
        try {
          result = execute(job, tasks[i]);
        } catch (...) {
          result = std::current_exception();
        }
        {
          std::lock_guard lock(mutex);
          slots[i] = std::move(result);
        }
        ready.notify_all();
      }
    });
  }

  try {
    for (std::size_t i = start; i < tasks.size(); ++i) {
      Slot slot;
      {
        std::unique_lock lock(mutex);
        ready.wait(lock, [&] { return !std::holds_alternative<std::monostate>(slots[i]); });
        slot = std::move(slots[i]);
        slots[i] = std::monostate{};
      }
      if (auto* err = std::get_if<std::exception_ptr>(&slot)) std::rethrow_exception(*err);
      sink(std::get<SearchRecord>(slot));
    }
  } catch (...) {
    abort = true;
    throw;
  }
  return total;
}

std::vector<SearchRecord> run_search(const SearchJob& job, unsigned workers) {
  std::vector<SearchRecord> out;
  run_search(job, SearchOptions{workers, 0}, [&](const SearchRecord& r) { out.push_back(r); });
  return out;
}

std::vector<HeightDrop> height_drops(const std::vector<SearchRecord>& records) {
  std::vector<HeightDrop> drops;
  // Keyed by (N, k); records arrive sorted so m increases within a key.
  std::map<std::pair<Integer, std::int64_t>, std::pair<std::int64_t, std::size_t>> last;
  for (const auto& r : records) {
    if (r.status == RecordStatus::skipped || r.parametrization != Parametrization::invariant) continue;
    auto key = std::make_pair(r.N, r.k);
    auto it = last.find(key);
    if (it != last.end() && r.digits < it->second.second) {
      drops.push_back(HeightDrop{r.N, r.k, it->second.first, r.m, it->second.second, r.digits});
    }
    last[key] = {r.m, r.digits};
  }
  return drops;
}

}  // namespace cuboid
