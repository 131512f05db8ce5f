// Command-line front end: single-knot queries, exhaustive sweeps,
// multi-route verification, Euclid traces, and the race-track demo.
//
// Exit codes: 0 success, 1 I/O failure, 2 bad input, 3 internal cross-check
// failure.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <atomic>
#include <thread>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lensfiber/fibering.hpp"
#include "lensfiber/report_json.hpp"

namespace lf = lensfiber;
using lf::Int;

namespace {

Int parse_int(const std::string& s, const char* what) {
  Int v;
  if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
    throw lf::precondition_error(lf::errc::argument_out_of_range,
                                 std::string(what) + " is not a decimal integer: " + s);
  return v;
}

void apply_env_config() {
  if (const char* env = std::getenv("LENSFIBER_MATERIALIZE_LIMIT")) {
    try {
      lf::global_config().materialize_limit = std::stoll(env);
    } catch (const std::exception&) {
      throw lf::precondition_error(lf::errc::argument_out_of_range,
                                   "LENSFIBER_MATERIALIZE_LIMIT is not an integer");
    }
  }
}

std::string join_ints(const std::vector<Int>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += lf::to_string(v[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// query

void print_report_text(const lf::FiberReport& rep, std::ostream& os) {
  const auto& kp = rep.params;
  os << "K(" << kp.p << "," << kp.q << "," << kp.k << ")\n";
  os << "  q_inv        = " << kp.q_inv << "\n";
  os << "  l            = " << kp.l << "\n";
  os << "  theta        = " << kp.theta << "\n";
  os << "  t            = " << kp.t << "\n";
  os << "  t_prime      = " << kp.t_prime << "\n";
  os << "  remainders   = (" << join_ints(rep.trace.remainders()) << ")\n";
  os << "  coefficients = (" << join_ints(rep.trace.coefficients()) << ")\n";
  os << "  harmonics    = {" << join_ints(rep.harmonics) << "}\n";
  os << "  fibers       = " << (rep.fibers ? "true" : "false") << "\n";
  os << "  minima_count = " << rep.minima_count << "\n";
  if (rep.minima) os << "  minima       = {" << join_ints(*rep.minima) << "}\n";
  if (rep.alexander) {
    os << "  alexander    = [" << join_ints(rep.alexander->coefficients()) << "]\n";
  } else {
    os << "  alexander    = (beyond materialization limit)\n";
  }
  os << "  breadth      = " << rep.breadth << "\n";
  os << "  euler_char   = " << rep.euler_char << "\n";
  os << "  max_coeff    = " << rep.max_coeff << "\n";
}

int cmd_query(const std::string& ps, const std::string& qs, const std::string& ks, bool json,
              bool verify) {
  Int p = parse_int(ps, "P"), q = parse_int(qs, "Q"), k = parse_int(ks, "K");
  lf::FiberReport rep = lf::build_fiber_report(p, q, k, {.verify_routes = verify});
  if (json) {
    std::cout << lf::report_to_json(rep).dump(2) << "\n";
  } else {
    print_report_text(rep, std::cout);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepRow {
  std::string csv;
  std::string jsonl;
};

void sweep_one_p(const Int& p, bool only_nonfibered, bool jsonl, std::string& out) {
  std::ostringstream os;
  for (Int q = 1; q < p; ++q) {
    if (lf::gcd(p, q) != 1) continue;
    lf::EuclidTrace trace = lf::euclid_trace(p, q);
    for (Int k = 1; k < p; ++k) {
      lf::KnotParams kp = lf::knot_params(p, q, k);
      bool fib = !lf::is_harmonic(trace, kp.theta);
      if (only_nonfibered && fib) continue;
      Int count = lf::minima_count_formula(trace, kp.theta);
      lf::JumpSequence seq(kp);
      Int max_coeff = seq.max_raw() - seq.min_raw();
      Int breadth = max_coeff - kp.theta + 1;
      if (jsonl) {
        nlohmann::json j;
        j["p"] = lf::int_to_json(p);
        j["q"] = lf::int_to_json(q);
        j["k"] = lf::int_to_json(k);
        j["theta"] = lf::int_to_json(kp.theta);
        j["fibers"] = fib;
        j["minima_count"] = lf::int_to_json(count);
        j["alexander_leading"] = lf::int_to_json(count);
        j["breadth"] = lf::int_to_json(breadth);
        os << j.dump() << "\n";
      } else {
        os << p << "," << q << "," << k << "," << kp.theta << "," << (fib ? 1 : 0) << "," << count
           << "," << count << "," << breadth << "\n";
      }
    }
  }
  out = os.str();
}

int cmd_sweep(std::int64_t max_p, const std::string& csv_path, bool only_nonfibered, bool jsonl) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!csv_path.empty()) {
    file.open(csv_path);
    if (!file) {
      std::cerr << "error: cannot open " << csv_path << " for writing\n";
      return 1;
    }
    os = &file;
  }
  if (!jsonl) *os << "p,q,k,theta,fibers,minima_count,alexander_leading,breadth\n";

  // Parallel across p; rows buffered and emitted in canonical (p,q,k) order.
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::string> blocks(static_cast<std::size_t>(std::max<std::int64_t>(0, max_p - 1)));
  std::atomic<std::int64_t> next{2};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        std::int64_t p = next.fetch_add(1);
        if (p > max_p) break;
        sweep_one_p(Int(p), only_nonfibered, jsonl, blocks[static_cast<std::size_t>(p - 2)]);
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& b : blocks) *os << b;
  os->flush();
  if (os->fail()) {
    std::cerr << "error: write failure\n";
    return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyStats {
  std::int64_t brute = 0, formula = 0, locator = 0, alexander = 0, racetrack = 0, symmetry = 0,
            fibering = 0;
  std::vector<std::string> mismatches;

  void merge(const VerifyStats& o) {
    brute += o.brute;
    formula += o.formula;
    locator += o.locator;
    alexander += o.alexander;
    racetrack += o.racetrack;
    symmetry += o.symmetry;
    fibering += o.fibering;
    mismatches.insert(mismatches.end(), o.mismatches.begin(), o.mismatches.end());
  }
};

struct VerifyModes {
  bool brute = false, formula = false, locator = false, alexander = false, racetrack = false,
       symmetry = false;
};

void verify_one_p(const Int& p, const VerifyModes& m, VerifyStats& st) {
  lf::LocatorOptions deep;
  deep.scan_threshold = 0;  // exercise the full recursion
  for (Int q = 1; q < p; ++q) {
    if (lf::gcd(p, q) != 1) continue;
    lf::EuclidTrace trace = lf::euclid_trace(p, q);
    for (Int k = 1; k < p; ++k) {
      lf::KnotParams kp = lf::knot_params(p, q, k);
      auto flag = [&](const std::string& what) {
        st.mismatches.push_back("(" + lf::to_string(p) + "," + lf::to_string(q) + "," +
                                lf::to_string(k) + "): " + what);
      };
      Int count_formula = lf::minima_count_formula(trace, kp.theta);
      bool fib = !lf::is_harmonic(trace, kp.theta);
      ++st.fibering;
      if (fib != (count_formula == 1)) flag("fibers vs formula count");

      std::vector<Int> located;
      if (m.locator || m.symmetry || m.brute) {
        located = lf::locate_minima(kp, deep);
        ++st.locator;
        if (Int(located.size()) != count_formula) flag("locator count vs formula");
      }
      std::vector<Int> brute;
      if (m.brute || m.racetrack) {
        lf::JumpSequence seq(kp);
        brute = lf::minima_bruteforce(seq);
        ++st.brute;
        if (Int(brute.size()) != count_formula) flag("brute count vs formula");
        if (m.brute && brute != located) flag("brute minima vs locator minima");
      }
      if (m.formula) ++st.formula;
      if (m.alexander) {
        lf::JumpSequence seq(kp);
        lf::LaurentPoly delta = lf::alexander(seq);
        ++st.alexander;
        if (delta.leading_coefficient() != count_formula) flag("alexander leading vs formula");
        if (delta != delta.reversed().canonical()) flag("alexander not palindromic");
        if (fib != (delta.leading_coefficient() == 1)) flag("fibers vs monic alexander");
        Int chi = lf::euler_characteristic(seq);
        if (Int(delta.breadth()) != 1 - chi) flag("breadth vs 1 - euler_char");
      }
      if (m.racetrack) {
        lf::JumpSequence seq(kp);
        auto starts = lf::race_track(seq);
        ++st.racetrack;
        if (starts.size() != brute.size()) flag("race-track start count vs minima count");
      }
      if (m.symmetry) {
        for (long i = 1; i < trace.n(); ++i) {
          if (trace.r(i) % kp.theta != 0) continue;
          ++st.symmetry;
          if (!lf::symmetry_check_mod(located, trace.r(i - 1), trace.r(i), p))
            flag("symmetry_check failed at r_" + std::to_string(i));
        }
      }
    }
  }
}

int cmd_verify(std::int64_t max_p, const std::string& modes_csv) {
  VerifyModes m;
  {
    std::stringstream ss(modes_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok == "all")
        m = {true, true, true, true, true, true};
      else if (tok == "brute")
        m.brute = true;
      else if (tok == "formula")
        m.formula = true;
      else if (tok == "locator")
        m.locator = true;
      else if (tok == "alexander")
        m.alexander = true;
      else if (tok == "racetrack")
        m.racetrack = true;
      else if (tok == "symmetry")
        m.symmetry = true;
      else
        throw lf::precondition_error(lf::errc::argument_out_of_range, "unknown mode: " + tok);
    }
  }
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<VerifyStats> stats(static_cast<std::size_t>(std::max<std::int64_t>(0, max_p - 1)));
  std::atomic<std::int64_t> next{2};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        std::int64_t p = next.fetch_add(1);
        if (p > max_p) break;
        verify_one_p(Int(p), m, stats[static_cast<std::size_t>(p - 2)]);
      }
    });
  }
  for (auto& th : pool) th.join();
  VerifyStats total;
  for (const auto& s : stats) total.merge(s);

  std::cout << "checked triples up to p = " << max_p << "\n";
  std::cout << "  fibering(3-route): " << total.fibering << "\n";
  if (m.brute) std::cout << "  brute:             " << total.brute << "\n";
  if (m.formula) std::cout << "  formula:           " << total.formula << "\n";
  if (m.locator) std::cout << "  locator:           " << total.locator << "\n";
  if (m.alexander) std::cout << "  alexander:         " << total.alexander << "\n";
  if (m.racetrack) std::cout << "  racetrack:         " << total.racetrack << "\n";
  if (m.symmetry) std::cout << "  symmetry:          " << total.symmetry << "\n";
  if (total.mismatches.empty()) {
    std::cout << "0 mismatches\n";
    return 0;
  }
  std::cout << total.mismatches.size() << " mismatches; first "
            << std::min<std::size_t>(10, total.mismatches.size()) << ":\n";
  for (std::size_t i = 0; i < total.mismatches.size() && i < 10; ++i)
    std::cout << "  " << total.mismatches[i] << "\n";
  return 3;
}

// ---------------------------------------------------------------------------
// euclid / racetrack

int cmd_euclid(const std::string& ps, const std::string& qs) {
  Int p = parse_int(ps, "P"), q = parse_int(qs, "Q");
  lf::EuclidTrace trace = lf::euclid_trace(p, q);
  std::cout << "p = " << p << ", q = " << q << ", n = " << trace.n() << "\n";
  std::cout << "remainders   = (" << join_ints(trace.remainders()) << ")\n";
  std::cout << "coefficients = (" << join_ints(trace.coefficients()) << ")\n";
  std::cout << "convergents  =";
  for (long i = -1; i <= trace.n(); ++i) {
    const auto& [pi, qi] = trace.convergent(i);
    std::cout << " " << pi << "/" << qi;
  }
  std::cout << "\n";
  std::cout << "harmonics    = {" << join_ints(lf::harmonics(trace)) << "}\n";
  return 0;
}

int cmd_racetrack(const std::string& ps, const std::string& qs, const std::string& ks) {
  Int p = parse_int(ps, "P"), q = parse_int(qs, "Q"), k = parse_int(ks, "K");
  lf::JumpSequence seq = lf::jump_sequence(p, q, k);
  auto starts = lf::race_track(seq);
  Int count = lf::minima_count_formula(lf::euclid_trace(p, q), seq.params().theta);
  std::cout << "track length " << p << ", " << k << " stations spaced " << q
            << " apart, each holding fuel for " << p << "/" << k << " units\n";
  std::cout << "valid start stations = {" << join_ints(starts) << "}\n";
  std::cout << "valid start count    = " << starts.size() << "\n";
  std::cout << "minima of S(p,q,k)   = " << count << "\n";
  if (Int(starts.size()) != count) {
    std::cerr << "error: race-track count disagrees with the minima count\n";
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"simple-knot fibering calculator for lens spaces"};
  app.require_subcommand(1);

  std::string p_arg, q_arg, k_arg;
  bool json = false, verify_flag = false;
  auto* query = app.add_subcommand("query", "invariants of one knot K(P,Q,K)");
  query->add_option("P", p_arg)->required();
  query->add_option("Q", q_arg)->required();
  query->add_option("K", k_arg)->required();
  query->add_flag("--json", json, "emit JSON");
  query->add_flag("--verify", verify_flag, "cross-check all routes");

  std::int64_t max_p = 0;
  std::string csv_path, modes = "all";
  bool only_nonfibered = false, jsonl = false;
  auto* sweep = app.add_subcommand("sweep", "enumerate all triples with p <= N");
  sweep->add_option("--max-p", max_p)->required();
  sweep->add_option("--csv", csv_path, "write CSV to this path instead of stdout");
  sweep->add_flag("--only-nonfibered", only_nonfibered);
  sweep->add_flag("--jsonl", jsonl, "emit JSON lines instead of CSV");

  auto* verify = app.add_subcommand("verify", "cross-route agreement sweep");
  verify->add_option("--max-p", max_p)->required();
  verify->add_option("--modes", modes, "comma list: brute,formula,locator,alexander,racetrack,symmetry,all");

  auto* euclid = app.add_subcommand("euclid", "Euclidean trace of (P,Q)");
  euclid->add_option("P", p_arg)->required();
  euclid->add_option("Q", q_arg)->required();

  auto* race = app.add_subcommand("racetrack", "race-track simulation for (P,Q,K)");
  race->add_option("P", p_arg)->required();
  race->add_option("Q", q_arg)->required();
  race->add_option("K", k_arg)->required();

  try {
    app.parse(argc, argv);
    apply_env_config();
    if (app.got_subcommand(query)) return cmd_query(p_arg, q_arg, k_arg, json, verify_flag);
    if (app.got_subcommand(sweep)) {
      if (max_p < 2) {
        std::cerr << "error: --max-p must be at least 2\n";
        return 2;
      }
      return cmd_sweep(max_p, csv_path, only_nonfibered, jsonl);
    }
    if (app.got_subcommand(verify)) {
      if (max_p < 2) {
        std::cerr << "error: --max-p must be at least 2\n";
        return 2;
      }
      return cmd_verify(max_p, modes);
    }
    if (app.got_subcommand(euclid)) return cmd_euclid(p_arg, q_arg);
    if (app.got_subcommand(race)) return cmd_racetrack(p_arg, q_arg, k_arg);
    return 2;
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const lf::precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const lf::size_limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const lf::internal_check_error& e) {
    std::cerr << "internal cross-check failure: " << e.what() << "\n";
    return 3;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return 1;
  }
}
