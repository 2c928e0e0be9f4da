#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "qcong/registry.hpp"

namespace {

using namespace qcong;

enum class Format { Text, Json, Csv };

struct ReportOptions {
  Format format = Format::Text;
  bool timing = true;
};

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string format_ms(double ms) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << ms;
  return os.str();
}

std::string params_json(const std::map<std::string, long>& params) {
  std::string out = "{";
  bool first = true;
  for (const auto& [key, value] : params) {
    if (!first) out += ",";
    first = false;
    out += "\"" + json_escape(key) + "\":" + std::to_string(value);
  }
  return out + "}";
}

void emit(std::ostream& os, const CheckResult& r, const ReportOptions& opt) {
  const std::string val = r.valuation == kValInf ? "\"inf\"" : std::to_string(r.valuation);
  switch (opt.format) {
    case Format::Json: {
      os << "{\"check\":\"" << json_escape(r.name) << "\",\"n\":" << r.n << ",\"power\":" << r.power
         << ",\"params\":" << params_json(r.params) << ",\"holds\":" << (r.holds ? "true" : "false")
         << ",\"valuation\":" << val;
      if (opt.timing) os << ",\"ms\":" << format_ms(r.ms);
      os << "}\n";
      break;
    }
    case Format::Csv: {
      std::string params;
      for (const auto& [key, value] : r.params) {
        if (!params.empty()) params += " ";
        params += key + "=" + std::to_string(value);
      }
      os << r.name << "," << r.n << "," << r.power << "," << params << ","
         << (r.holds ? "true" : "false") << "," << (r.valuation == kValInf ? "inf" : std::to_string(r.valuation));
      if (opt.timing) os << "," << format_ms(r.ms);
      os << "\n";
      break;
    }
    case Format::Text: {
      os << (r.holds ? "  ok  " : " FAIL ") << r.name << "  n=" << r.n;
      for (const auto& [key, value] : r.params) os << " " << key << "=" << value;
      if (r.power > 0) os << "  mod Phi_n^" << r.power;
      os << "  valuation=";
      if (r.valuation == kValInf)
        os << "inf";
      else
        os << r.valuation << (r.valuation_capped ? "+" : "");
      if (opt.timing) os << "  (" << format_ms(r.ms) << " ms)";
      if (!r.detail.empty()) os << "  [" << r.detail << "]";
      os << "\n";
      break;
    }
  }
}

void emit_header(std::ostream& os, const ReportOptions& opt) {
  if (opt.format == Format::Csv) {
    os << "check,n,power,params,holds,valuation";
    if (opt.timing) os << ",ms";
    os << "\n";
  }
}

int report(const std::vector<CheckResult>& results, const ReportOptions& opt,
           const std::string& out_path) {
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "error: cannot open " << out_path << " for writing\n";
      return 2;
    }
  }
  std::ostream& os = out_path.empty() ? std::cout : file;
  emit_header(os, opt);
  bool all_hold = true;
  for (const CheckResult& r : results) {
    emit(os, r, opt);
    all_hold = all_hold && r.holds;
  }
  return all_hold ? 0 : 1;
}

bool parse_range(const std::string& text, long& lo, long& hi) {
  const auto pos = text.find("..=");
  try {
    if (pos == std::string::npos) {
      lo = hi = std::stol(text);
    } else {
      lo = std::stol(text.substr(0, pos));
      hi = std::stol(text.substr(pos + 3));
    }
  } catch (const std::exception&) {
    return false;
  }
  return lo >= 1 && hi >= lo;
}

std::string cache_path() {
  const char* dir = std::getenv("QCONG_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return {};
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  return std::string(dir) + "/cyclotomic.txt";
}

void load_cache(CyclotomicCache& cache) {
  const std::string path = cache_path();
  if (path.empty() || !std::filesystem::exists(path)) return;
  try {
    cache.load(path);
  } catch (const std::exception& e) {
    std::cerr << "warning: ignoring cyclotomic cache: " << e.what() << "\n";
  }
}

void save_cache(const CyclotomicCache& cache) {
  const std::string path = cache_path();
  if (!path.empty()) cache.save(path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the q-supercongruences and their proof chain"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "Run named checks over an n range");
  std::vector<std::string> check_names;
  std::string n_range = "1..=1";
  std::string format_name = "text";
  std::string out_path;
  long power_opt = 0;
  CheckParams params;
  long d_opt = 0, k_opt = 0, s_opt = 0, r_opt = 0;
  unsigned parallelism = std::max(1u, std::thread::hardware_concurrency());
  bool fail_fast = false, no_timing = false;
  verify->add_option("checks", check_names, "Check names (see registry)")->required();
  verify->add_option("--n", n_range, "Inclusive range a..=b or a single n");
  verify->add_option("--power", power_opt, "Modulus power override (1 or 2)");
  auto* d_flag = verify->add_option("--d", d_opt, "wang-yu shift parameter");
  auto* k_flag = verify->add_option("--k", k_opt, "step index k");
  auto* s_flag = verify->add_option("--s", s_opt, "exponent s (qpow-lemma) / base power (carlitz)");
  auto* r_flag = verify->add_option("--r", r_opt, "classical exponent r");
  verify->add_option("--format", format_name, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  verify->add_option("--out", out_path, "Write the report to a file");
  verify->add_option("--parallelism", parallelism, "Worker thread count");
  verify->add_flag("--fail-fast", fail_fast, "Stop scheduling after the first failure");
  verify->add_flag("--no-timing", no_timing, "Omit elapsed-time fields (deterministic output)");

  // proof-chain
  auto* chain = app.add_subcommand("proof-chain", "Replay the derivation steps for one n");
  long chain_n = 3;
  std::string section = "both";
  bool chain_no_timing = false;
  chain->add_option("--n", chain_n, "Odd n >= 3")->required();
  chain->add_option("--section", section, "2 | 3 | both")->check(CLI::IsMember({"2", "3", "both"}));
  chain->add_flag("--no-timing", chain_no_timing, "Omit elapsed-time fields");

  // cyclotomic
  auto* cyc = app.add_subcommand("cyclotomic", "Print Phi_n(q)");
  long cyc_n = 1;
  cyc->add_option("--n", cyc_n, "n >= 1")->required();

  // carlitz
  auto* car = app.add_subcommand("carlitz", "Verify Carlitz's identity for one (n, a, b)");
  long car_n = 0, car_s = 1;
  std::string car_a = "q", car_b = "-1";
  car->add_option("--n", car_n, "n >= 0")->required();
  car->add_option("--a", car_a, "Monomial parameter a (e.g. q, -q^2)");
  car->add_option("--b", car_b, "Monomial parameter b");
  car->add_option("--base-power", car_s, "Substitution q -> q^s");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    CyclotomicCache cache;
    load_cache(cache);

    if (verify->parsed()) {
      long lo = 0, hi = 0;
      if (!parse_range(n_range, lo, hi)) {
        std::cerr << "error: invalid --n range '" << n_range << "' (endpoints >= 1)\n";
        return 2;
      }
      if (power_opt != 0) {
        if (power_opt < 1 || power_opt > 2) {
          std::cerr << "error: --power must be 1 or 2\n";
          return 2;
        }
        params.power = power_opt;
      }
      if (d_flag->count() > 0) params.d = d_opt;
      if (k_flag->count() > 0) params.k = k_opt;
      if (s_flag->count() > 0) params.s = s_opt;
      if (r_flag->count() > 0) params.r = r_opt;

      std::vector<const CheckEntry*> entries;
      for (const std::string& name : check_names) {
        const CheckEntry* e = find_check(name);
        if (e == nullptr) {
          std::cerr << "error: unknown check '" << name << "'\n";
          return 2;
        }
        entries.push_back(e);
      }
      std::vector<long> ns;
      for (long n = lo; n <= hi; ++n) ns.push_back(n);

      std::vector<CheckResult> results =
          run_checks(entries, ns, params, cache, parallelism, fail_fast);
      if (results.empty()) {
        std::cerr << "error: no applicable (check, n) pairs in range\n";
        return 2;
      }
      save_cache(cache);
      ReportOptions opt;
      opt.timing = !no_timing;
      opt.format = format_name == "json" ? Format::Json
                   : format_name == "csv" ? Format::Csv
                                          : Format::Text;
      return report(results, opt, out_path);
    }

    if (chain->parsed()) {
      if (chain_n < 3 || chain_n % 2 == 0) {
        std::cerr << "error: proof-chain requires odd n >= 3\n";
        return 2;
      }
      std::vector<CheckResult> results;
      if (section != "3")
        for (CheckResult& r : proof_chain(chain_n, 2, cache)) results.push_back(std::move(r));
      if (section != "2")
        for (CheckResult& r : proof_chain(chain_n, 3, cache)) results.push_back(std::move(r));
      save_cache(cache);
      ReportOptions opt;
      opt.timing = !chain_no_timing;
      return report(results, opt, "");
    }

    if (cyc->parsed()) {
      if (cyc_n < 1) {
        std::cerr << "error: cyclotomic requires n >= 1\n";
        return 2;
      }
      std::cout << cyclotomic(cyc_n, cache).to_string() << "\n";
      save_cache(cache);
      return 0;
    }

    // carlitz
    MonomialParam a = MonomialParam::parse(car_a);
    MonomialParam b = MonomialParam::parse(car_b);
    CheckResult r = carlitz_check(car_n, a, b, car_s);
    ReportOptions opt;
    emit(std::cout, r, opt);
    return r.holds ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
