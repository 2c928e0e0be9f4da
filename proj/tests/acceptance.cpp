// Acceptance suite: end-to-end verification runs, one summary line per
// criterion. Exits non-zero when any criterion fails.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>
#include <thread>
#include <vector>

#include "qcong/registry.hpp"
#include "test_util.hpp"

using namespace qcong;

namespace {

int failures = 0;

void report(int idx, const char* title, bool ok, const std::string& note = "") {
  std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", idx, title,
              note.empty() ? "" : " -- ", note.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

unsigned workers() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 4 : hc;
}

std::vector<long> odds_up_to(long max_n) {
  std::vector<long> ns;
  for (long n = 3; n <= max_n; n += 2) ns.push_back(n);
  return ns;
}

bool all_hold(const std::vector<CheckResult>& results, std::string& note) {
  for (const auto& r : results) {
    if (!r.holds) {
      note = r.name + " failed at n=" + std::to_string(r.n);
      return false;
    }
  }
  return !results.empty();
}

bool run_named(const char* name, const std::vector<long>& ns, const CheckParams& params,
               CyclotomicCache& cache, std::string& note) {
  const CheckEntry* entry = find_check(name);
  if (entry == nullptr) {
    note = std::string("unknown check ") + name;
    return false;
  }
  auto results = run_checks({entry}, ns, params, cache, workers());
  return all_hold(results, note);
}

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(QCONG_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  CliResult r;
  if (pipe == nullptr) return r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// ---- criteria ------------------------------------------------------------

// 1: the two headline congruences mod Phi_n^2 for every odd n <= 199.
void criterion1() {
  CyclotomicCache cache;
  std::string note;
  bool ok = run_named("a1", odds_up_to(199), {}, cache, note) &&
            run_named("a2", odds_up_to(199), {}, cache, note);
  report(1, "a1 and a2 hold mod Phi_n^2 for all odd n <= 199", ok, note);
}

// 2: the q -> 1/q companions give the same verdict at every odd n <= 99.
void criterion2() {
  CyclotomicCache cache;
  std::string note;
  bool ok = true;
  for (long n : odds_up_to(99)) {
    auto a1 = check_series(SeriesId::A1, n, 2, cache);
    auto b1 = check_series(SeriesId::B1, n, 2, cache);
    auto a2 = check_series(SeriesId::A2, n, 2, cache);
    auto c1 = check_series(SeriesId::C1, n, 2, cache);
    if (a1.holds != b1.holds || a2.holds != c1.holds || !a1.holds || !a2.holds) {
      ok = false;
      note = "verdict mismatch at n=" + std::to_string(n);
      break;
    }
  }
  report(2, "b1/c1 verdicts match a1/a2 for all odd n <= 99", ok, note);
}

// 3: the remaining published congruences over their stated ranges.
void criterion3() {
  CyclotomicCache cache;
  std::string note;
  bool ok = run_named("anew3", odds_up_to(149), {}, cache, note) &&
            run_named("anew4", odds_up_to(149), {}, cache, note) &&
            run_named("anew5", odds_up_to(149), {}, cache, note) &&
            run_named("anew6", odds_up_to(149), {}, cache, note);
  if (ok) {
    for (long d = -5; d <= 5 && ok; ++d) {
      CheckParams params;
      params.d = d;
      std::vector<long> ns;
      for (long n : odds_up_to(99))
        if (n > 2 * std::labs(d) - 1) ns.push_back(n);
      ok = run_named("wang-yu", ns, params, cache, note);
    }
  }
  report(3, "anew3..anew6 (odd n <= 149) and wang-yu (|d| <= 5, odd n <= 99)", ok, note);
}

// 4: Carlitz's identity exactly, on a parameter grid and under random
// rational specialization.
void criterion4() {
  std::string note;
  bool ok = true;
  const std::vector<MonomialParam> as = {{1, 1}, {1, 3}, {-1, 1}, {-1, 2}};
  const std::vector<MonomialParam> bs = {{-1, 0}, {-1, 1}, {-1, 2}, {1, 1}};
  for (long n = 0; n <= 25 && ok; ++n) {
    for (const auto& a : as) {
      for (const auto& b : bs) {
        for (long s : {1L, 2L}) {
          auto r = carlitz_check(n, a, b, s);
          if (!r.holds || r.valuation != kValInf) {
            ok = false;
            note = "grid failure at n=" + std::to_string(n);
          }
        }
      }
    }
  }
  if (ok) {
    testutil::Rng rng(2026);
    int verified = 0;
    for (int i = 0; i < 400 && verified < 100; ++i) {
      long n = rng.range(0, 15);
      Rat a(rng.range(-9, 9), rng.range(1, 6)), b(rng.range(-9, 9), rng.range(1, 6));
      Rat q(rng.range(-9, 9), rng.range(1, 6));
      a.canonicalize();
      b.canonicalize();
      q.canonicalize();
      try {
        if (!carlitz_eval_rational(n, a, b, q)) {
          ok = false;
          note = "rational specialization failed";
          break;
        }
        ++verified;
      } catch (const DomainError&) {
        // parameter hit a pole; skip
      }
    }
    if (ok && verified < 100) {
      ok = false;
      note = "too few valid random specializations";
    }
  }
  report(4, "Carlitz identity exact on grid n <= 25 plus 100 rational specializations", ok, note);
}

// 5: every displayed derivation step of both sections, every odd n <= 99.
void criterion5() {
  CyclotomicCache cache;
  std::string note;
  bool ok = run_named("proof-chain-s2", odds_up_to(99), {}, cache, note) &&
            run_named("proof-chain-s3", odds_up_to(99), {}, cache, note);
  report(5, "full section-2 and section-3 derivations for all odd n <= 99", ok, note);
}

// 6: the classical corollaries and the q -> 1 degeneration.
void criterion6() {
  CyclotomicCache cache;
  std::string note;
  bool ok = true;
  for (long p = 3; p < 200 && ok; p += 2) {
    if (!is_prime(p)) continue;
    if (!classical_check({p, 1, 1}).holds || !classical_check({p, 1, 2}).holds) {
      ok = false;
      note = "classical failure at p=" + std::to_string(p);
    }
    if (p < 50 && ok) {
      if (!classical_check({p, 2, 1}).holds || !classical_check({p, 2, 2}).holds) {
        ok = false;
        note = "classical failure at p=" + std::to_string(p) + " r=2";
      }
    }
  }
  if (ok) {
    const std::vector<std::pair<long, long>> ranges = {{3, 1}, {5, 1}, {7, 1},
                                                       {3, 2}, {5, 2}, {3, 3}, {7, 2}};
    for (SeriesId id : {SeriesId::Anew3, SeriesId::Anew4, SeriesId::A1, SeriesId::A2}) {
      for (auto [p, r] : ranges) {
        if (std::pow(static_cast<double>(p), static_cast<double>(r)) > 50) continue;
        auto res = q_to_1_consistency(id, p, r, cache);
        if (!res.holds) {
          ok = false;
          note = res.name + " q->1 failure at p=" + std::to_string(p) +
                 " r=" + std::to_string(r);
        }
      }
    }
  }
  report(6, "classical congruences (p < 200) and q -> 1 degeneration", ok, note);
}

// 7: infrastructure cross-validation at scale.
void criterion7() {
  std::string note;
  bool ok = true;
  CyclotomicCache cache;
  // cyclotomic against the independent Moebius oracle, and the divisor
  // product, for every n <= 500
  for (long n = 1; n <= 500 && ok; ++n) {
    if (cyclotomic(n, cache) != cyclotomic_oracle(n)) {
      ok = false;
      note = "cyclotomic mismatch at n=" + std::to_string(n);
    }
  }
  for (long n = 1; n <= 500 && ok; ++n) {
    IntPoly prod(Int(1));
    for (long d : divisors(n)) prod *= cache.get(d);
    if (prod != IntPoly::monomial(Int(1), n) - IntPoly(Int(1))) {
      ok = false;
      note = "divisor product mismatch at n=" + std::to_string(n);
    }
  }
  // q-binomial suite: symmetry, Pascal, specialization at q = 1
  for (long n = 0; n <= 20 && ok; ++n) {
    for (long k = 0; k <= n && ok; ++k) {
      IntPoly b = q_binomial(n, k);
      Int classical;
      mpz_bin_uiui(classical.get_mpz_t(), static_cast<unsigned long>(n),
                   static_cast<unsigned long>(k));
      if (b != q_binomial(n, n - k) || b.eval(Rat(1)) != classical ||
          (n >= 1 && b != q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shifted(k))) {
        ok = false;
        note = "q-binomial failure at n=" + std::to_string(n) + " k=" + std::to_string(k);
      }
    }
  }
  // 1000+ random canonicalization / ring-axiom cases
  testutil::Rng rng(424242);
  for (int i = 0; i < 1100 && ok; ++i) {
    IntPoly a = testutil::random_nonzero_poly(rng, 8, 1000);
    IntPoly b = testutil::random_nonzero_poly(rng, 8, 1000);
    IntPoly c = testutil::random_nonzero_poly(rng, 5, 100);
    if (a * (b + c) != a * b + a * c) {
      ok = false;
      note = "ring axiom failure";
      break;
    }
    RatFunc f(a * c, b * c);
    if (f != RatFunc(a, b) || f.den().leading() <= 0) {
      ok = false;
      note = "canonicalization failure";
      break;
    }
    RatFunc g(c, b);
    if (f + g != RatFunc(a * c + c * c, b * c) || (f * g).subst_qinv() != f.subst_qinv() * g.subst_qinv()) {
      ok = false;
      note = "field-operation failure";
      break;
    }
  }
  report(7, "cyclotomic oracle n <= 500, q-binomial suite, 1100 random algebra cases", ok, note);
}

// 8: CLI contract, determinism, serial/parallel equality.
void criterion8() {
  std::string note;
  bool ok = true;
  auto expect_exit = [&](const std::string& args, int want) {
    if (!ok) return;
    auto r = run_cli(args);
    if (r.exit_code != want) {
      ok = false;
      note = "`" + args + "` exited " + std::to_string(r.exit_code) + ", wanted " +
             std::to_string(want);
    }
  };
  expect_exit("verify a1 --n 3..=9", 0);
  expect_exit("verify anew5 --n 3..=11 --power 2", 1);
  expect_exit("verify a1 --n 4..=4", 2);
  expect_exit("verify bogus --n 3..=9", 2);
  expect_exit("proof-chain --n 2", 2);

  if (ok) {
    const std::string args =
        "verify a1 a2 anew3 anew4 anew5 anew6 b1 c1 proof-chain-s2 proof-chain-s3 "
        "--n 3..=49 --format json --no-timing";
    auto serial = run_cli(args + " --parallelism 1");
    auto parallel = run_cli(args + " --parallelism " + std::to_string(workers()));
    auto repeat = run_cli(args + " --parallelism " + std::to_string(workers()));
    if (serial.exit_code != 0 || serial.out != parallel.out || parallel.out != repeat.out) {
      ok = false;
      note = "serial/parallel or repeat outputs differ";
    } else if (serial.out.find("\"holds\":false") != std::string::npos) {
      ok = false;
      note = "unexpected failing check in CLI sweep";
    }
  }
  report(8, "CLI exit codes, determinism, serial/parallel identity (n <= 49)", ok, note);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all 8 criteria passed\n");
  return 0;
}
