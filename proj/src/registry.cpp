#include "qcong/registry.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

#include "qcong/cyclotomic.hpp"

namespace qcong {
namespace {

using Runner = std::function<std::vector<CheckResult>(long, const CheckParams&, CyclotomicCache&)>;

CheckEntry series_entry(std::string name, SeriesId id) {
  const long power = native_power(id);
  Runner run = [id, power](long n, const CheckParams& p, CyclotomicCache& cache) {
    const long m = p.power.value_or(power);
    if (id == SeriesId::WangYu) {
      std::vector<CheckResult> out;
      if (p.d.has_value()) {
        out.push_back(check_series(id, n, m, cache, *p.d));
      } else {
        for (long d = -5; d <= 5; ++d)
          if (n > 2 * std::labs(d) - 1) out.push_back(check_series(id, n, m, cache, d));
      }
      return out;
    }
    return std::vector<CheckResult>{check_series(id, n, m, cache)};
  };
  return CheckEntry{std::move(name), NFilter::OddOnly, power, std::move(run)};
}

CheckEntry step_entry(StepId id) {
  Runner run = [id](long n, const CheckParams& p, CyclotomicCache& cache) {
    std::optional<long> param;
    if (p.k.has_value()) param = p.k;
    if (id == StepId::QpowLemma) {
      if (p.s.has_value()) return std::vector<CheckResult>{proof_step(id, n, cache, *p.s)};
      std::vector<CheckResult> out;
      for (long s : {1L, 2L, 3L, (n - 1) / 2, (n - 3) / 2, (n + 1) / 2})
        out.push_back(proof_step(id, n, cache, s));
      return out;
    }
    return std::vector<CheckResult>{proof_step(id, n, cache, param)};
  };
  return CheckEntry{step_name(id), NFilter::OddOnly, 2, std::move(run)};
}

CheckEntry chain_entry(std::string name, int section) {
  Runner run = [section](long n, const CheckParams&, CyclotomicCache& cache) {
    return proof_chain(n, section, cache);
  };
  return CheckEntry{std::move(name), NFilter::OddOnly, 2, std::move(run)};
}

std::vector<CheckEntry> build_registry() {
  std::vector<CheckEntry> reg;
  reg.push_back(series_entry("a1", SeriesId::A1));
  reg.push_back(series_entry("a2", SeriesId::A2));
  reg.push_back(series_entry("b1", SeriesId::B1));
  reg.push_back(series_entry("c1", SeriesId::C1));
  reg.push_back(series_entry("anew3", SeriesId::Anew3));
  reg.push_back(series_entry("anew4", SeriesId::Anew4));
  reg.push_back(series_entry("anew5", SeriesId::Anew5));
  reg.push_back(series_entry("anew6", SeriesId::Anew6));
  reg.push_back(series_entry("wang-yu", SeriesId::WangYu));

  reg.push_back(CheckEntry{
      "carlitz", NFilter::AnyN, 0,
      [](long n, const CheckParams& p, CyclotomicCache&) {
        static const MonomialParam as[] = {{1, 1}, {1, 3}, {-1, 1}, {-1, 2}};
        static const MonomialParam bs[] = {{-1, 0}, {-1, 1}, {-1, 2}, {1, 1}};
        std::vector<CheckResult> out;
        for (const auto& a : as)
          for (const auto& b : bs)
            for (long s : {1L, 2L})
              if (!p.s.has_value() || s == *p.s) out.push_back(carlitz_check(n, a, b, s));
        return out;
      }});

  for (StepId id : {StepId::B2Identity, StepId::QbinomNegK, StepId::B3, StepId::B4, StepId::B5,
                    StepId::MorleyB9, StepId::B10, StepId::CentralQbinom, StepId::B11, StepId::B13,
                    StepId::B14, StepId::B15, StepId::B16, StepId::B18, StepId::B19, StepId::B20,
                    StepId::RatioIdentity, StepId::QpowLemma, StepId::C2Identity, StepId::C3,
                    StepId::C4, StepId::C5, StepId::C6, StepId::C7, StepId::C8, StepId::C9,
                    StepId::C10, StepId::C11})
    reg.push_back(step_entry(id));

  reg.push_back(chain_entry("proof-chain-s2", 2));
  reg.push_back(chain_entry("proof-chain-s3", 3));

  reg.push_back(CheckEntry{
      "sun-tauraso", NFilter::OddPrimes, 1,
      [](long n, const CheckParams& p, CyclotomicCache&) {
        return std::vector<CheckResult>{
            classical_check({n, p.r.value_or(1), p.power.value_or(1)})};
      }});
  reg.push_back(CheckEntry{
      "sun", NFilter::OddPrimes, 2,
      [](long n, const CheckParams& p, CyclotomicCache&) {
        return std::vector<CheckResult>{
            classical_check({n, p.r.value_or(1), p.power.value_or(2)})};
      }});
  reg.push_back(CheckEntry{
      "q-to-1", NFilter::OddPrimes, 0,
      [](long n, const CheckParams& p, CyclotomicCache& cache) {
        std::vector<CheckResult> out;
        for (SeriesId id : {SeriesId::Anew3, SeriesId::Anew4, SeriesId::A1, SeriesId::A2})
          out.push_back(q_to_1_consistency(id, n, p.r.value_or(1), cache));
        return out;
      }});
  return reg;
}

}  // namespace

const std::vector<CheckEntry>& check_registry() {
  static const std::vector<CheckEntry> reg = build_registry();
  return reg;
}

const CheckEntry* find_check(const std::string& name) {
  for (const CheckEntry& e : check_registry())
    if (e.name == name) return &e;
  return nullptr;
}

std::vector<CheckResult> run_checks(const std::vector<const CheckEntry*>& checks,
                                    const std::vector<long>& ns, const CheckParams& params,
                                    CyclotomicCache& cache, unsigned parallelism, bool fail_fast) {
  struct Task {
    const CheckEntry* entry;
    long n;
  };
  std::vector<Task> tasks;
  for (const CheckEntry* e : checks) {
    for (long n : ns) {
      switch (e->n_filter) {
        case NFilter::OddOnly:
          if (n % 2 == 0) continue;
          break;
        case NFilter::AnyN:
          break;
        case NFilter::OddPrimes:
          if (n == 2 || !is_prime(n)) continue;
          break;
      }
      // Steps restricted to one residue class mod 4 skip the other class.
      const std::string& name = e->name;
      if ((name == "b16" || name == "b18" || name == "c8" || name == "c9") && n % 4 != 1) continue;
      if ((name == "b19" || name == "b20" || name == "c10" || name == "c11") && n % 4 != 3) continue;
      tasks.push_back({e, n});
    }
  }

  // All cyclotomic lookups any task can make (Phi_n itself plus divisors of
  // Pochhammer exponents < 2n on the exact routes) are warmed serially here,
  // so the shared cache is read-only while the workers run.
  long max_n = 0;
  for (const Task& t : tasks) max_n = std::max(max_n, t.n);
  if (max_n > 0) cache.warm_up(2 * max_n);

  std::vector<std::vector<CheckResult>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size() || stop.load()) return;
      results[i] = tasks[i].entry->run(tasks[i].n, params, cache);
      if (fail_fast)
        for (const CheckResult& r : results[i])
          if (!r.holds) stop.store(true);
    }
  };

  if (parallelism <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    const unsigned count = std::min<std::size_t>(parallelism, tasks.size());
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::vector<CheckResult> out;
  for (auto& batch : results)
    for (CheckResult& r : batch) out.push_back(std::move(r));
  return out;
}

}  // namespace qcong
