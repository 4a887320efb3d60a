#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fat/analysis.hpp"
#include "fat/catalog.hpp"
#include "fat/fatfile.hpp"
#include "fat/specialize.hpp"
#include "fat/stochastic.hpp"

namespace fat {
namespace cli {

// Exit codes: 0 success / all checks pass; 1 REJECT verdict or check
// failure; 2 usage, parse, or infeasibility errors.
inline constexpr int kOk = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;

struct CommonParams {
  int k = 1;
  int s = 4;
  std::string f_name = "sqrt";
  std::string oracle_id;
  std::string members;   // comma-separated explicit language for universal2
  std::uint64_t seed = 0;
  bool seed_set = false;
};

inline AdviceParams to_advice_params(const std::string& id, const CommonParams& c) {
  AdviceParams p;
  p.k = c.k;
  p.s = c.s;
  p.f_name = c.f_name;
  if (id == "universal2") {
    if (!c.members.empty()) {
      std::set<std::string> words;
      std::string cur;
      std::istringstream is(c.members);
      while (std::getline(is, cur, ',')) words.insert(cur);
      p.oracle = std::make_shared<LanguageOracle>(
          lang::explicit_set(std::move(words), Alphabet({"a", "b"})));
    } else if (c.seed_set) {
      p.oracle = std::make_shared<LanguageOracle>(lang::seeded_random(c.seed));
    } else {
      throw Error("universal2 needs --members or --seed to fix the language");
    }
  } else if (id == "expall") {
    p.oracle = std::make_shared<LanguageOracle>(
        make_oracle(c.oracle_id.empty() ? "pal" : c.oracle_id));
  }
  return p;
}

// Rough per-length advice size, for the work estimate only.
inline double advice_len_estimate(const std::string& id, double n, const CommonParams& c) {
  if (id == "equal2") return n / 2 + 1;
  if (id == "equal") return 2 * n + 1;
  if (id == "l_f") return n + 3;
  if (id == "l_k") return std::pow(n + 2, c.k);
  if (id == "pal2w") return n * n / 2 + n / 2 + 1;
  if (id == "universal2") return 2 * (n + 1) * std::pow(2.0, n) + 1;
  if (id == "expall") return (2 * n + 2) * std::pow(2.0, n);
  if (id == "equal3-rand") return n * c.s * c.s + c.s + 1;
  if (id == "equal3-pfat") return n * c.s * c.s * c.s / 3 + c.s;
  return n + 1;
}

inline double sweep_cost_estimate(const std::string& id, std::size_t sigma, std::size_t n_max,
                                  const CommonParams& c) {
  double cost = 0;
  for (std::size_t n = 0; n <= n_max; ++n)
    cost += std::pow((double)sigma, (double)n) *
            2 * ((double)n + 2 + advice_len_estimate(id, (double)n, c));
  return cost;
}

inline std::uint64_t work_budget(std::uint64_t flag_value) {
  if (flag_value != 0) return flag_value;
  if (const char* env = std::getenv("FAT_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 100000000ULL;  // 1e8 elementary steps
}

inline void require_budget(double estimated, std::uint64_t budget) {
  if (estimated > (double)budget) {
    std::ostringstream os;
    os << "refusing: estimated cost " << std::fixed << std::setprecision(0) << estimated
       << " elementary steps exceeds budget " << budget
       << " (raise with FAT_BUDGET or --budget)";
    throw Error(os.str());
  }
}

inline void apply_param(CommonParams& c, const std::string& kv) {
  auto eq = kv.find('=');
  if (eq == std::string::npos) throw Error("--param expects key=value, got '" + kv + "'");
  std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
  try {
    if (key == "k") c.k = std::stoi(val);
    else if (key == "s") c.s = std::stoi(val);
    else if (key == "f") c.f_name = val;
    else if (key == "oracle") c.oracle_id = val;
    else if (key == "members") c.members = val;
    else if (key == "seed") { c.seed = std::stoull(val); c.seed_set = true; }
    else throw Error("unknown parameter '" + key + "'");
  } catch (const std::invalid_argument&) {
    throw Error("bad value for parameter '" + key + "'");
  }
}

inline void add_common(CLI::App* cmd, CommonParams& c) {
  cmd->add_option("--k", c.k, "nesting depth for l_k");
  cmd->add_option("--s", c.s, "branch count for equal3 constructions");
  cmd->add_option("--f", c.f_name, "length budget for l_f (sqrt)");
  cmd->add_option("--oracle", c.oracle_id, "language oracle id (expall)");
  cmd->add_option("--members", c.members, "explicit language, comma-separated (universal2)");
  auto* seed = cmd->add_option("--seed", c.seed, "seeded pseudo-random language (universal2)");
  auto* params = cmd->add_option("--param", "construction parameter as key=value");
  params->type_size(1)->allow_extra_args(false)->take_all();
  cmd->parse_complete_callback([&c, seed, params] {
    c.seed_set = seed->count() > 0;
    for (const auto& kv : params->results()) apply_param(c, kv);
  });
}

inline std::string prob_line(const char* label, const Rational& p) {
  return std::string(label) + " = " + p.to_string() + " (" + decimal_string(p) + ")";
}

inline int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite automata with advice tapes"};
  app.require_subcommand(1);

  CommonParams common;
  std::string construction, machine_file, input, language;
  std::vector<std::string> advice_args;
  std::size_t opt_n = 0, opt_k = 0, max_n = 0, n_max_growth = 0;
  unsigned jobs = 1;
  std::uint64_t budget_flag = 0;
  bool trace = false, witnesses = false;

  auto* run_cmd = app.add_subcommand("run", "run a machine on one input");
  run_cmd->add_option("--construction", construction, "catalog construction id");
  run_cmd->add_option("--machine", machine_file, "machine description (.fat) file");
  run_cmd->add_option("-i,--input", input, "input string");
  run_cmd->add_option("--advice", advice_args, "advice string per tape (with --machine)");
  run_cmd->add_flag("--trace", trace, "stream the configuration trace");
  add_common(run_cmd, common);

  auto* verify_cmd = app.add_subcommand("verify", "exhaustive oracle-equivalence sweep");
  verify_cmd->add_option("--construction", construction, "catalog construction id")->required();
  verify_cmd->add_option("--max-n", max_n, "largest input length")->required();
  verify_cmd->add_option("--jobs", jobs, "parallel workers");
  verify_cmd->add_option("--budget", budget_flag, "work budget override");
  add_common(verify_cmd, common);

  auto* prob_cmd = app.add_subcommand("prob", "exact acceptance probability");
  prob_cmd->add_option("--construction", construction, "catalog construction id")->required();
  prob_cmd->add_option("-i,--input", input, "input string")->required();
  add_common(prob_cmd, common);

  auto* classes_cmd = app.add_subcommand("classes", "count prefix equivalence classes");
  classes_cmd->add_option("--language", language, "language oracle id")->required();
  classes_cmd->add_option("--n", opt_n, "total length")->required();
  classes_cmd->add_option("--k", opt_k, "prefix length")->required();
  classes_cmd->add_flag("--witnesses", witnesses, "print one representative per class");
  classes_cmd->add_option("--budget", budget_flag, "work budget override");

  auto* advice_cmd = app.add_subcommand("advice", "print an advice string or distribution");
  advice_cmd->add_option("--construction", construction, "catalog construction id")->required();
  advice_cmd->add_option("--n", opt_n, "input length")->required();
  advice_cmd->add_option("--budget", budget_flag, "work budget override");
  add_common(advice_cmd, common);

  auto* growth_cmd = app.add_subcommand("growth", "advice length growth table");
  growth_cmd->add_option("--construction", construction, "catalog construction id")->required();
  growth_cmd->add_option("--n-max", n_max_growth, "largest length")->required();
  growth_cmd->add_option("--budget", budget_flag, "work budget override");
  add_common(growth_cmd, common);

  auto* validate_cmd = app.add_subcommand("validate", "check machine well-formedness");
  validate_cmd->add_option("file", machine_file, "machine description (.fat) file");
  validate_cmd->add_option("--construction", construction, "catalog construction id");
  add_common(validate_cmd, common);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    std::uint64_t budget = work_budget(budget_flag);

    if (run_cmd->parsed()) {
      RunOptions opt;
      opt.trace_stream = trace ? &out : nullptr;
      RunOutcome res;
      if (!machine_file.empty()) {
        std::ifstream f(machine_file);
        if (!f) throw Error("cannot open '" + machine_file + "'");
        Machine m = fatfile::parse(f, machine_file);
        ValidationReport rep = validate_machine(m);
        if (!rep.ok()) throw Error("machine not well-formed:\n" + rep.to_string());
        res = Runner(m).run(input, advice_args, opt);
      } else if (!construction.empty()) {
        Construction c = build(construction, to_advice_params(construction, common));
        if (c.machine.kind != MachineKind::deterministic || c.advice.randomized())
          throw Error("construction '" + construction + "' is stochastic; use 'fat prob'");
        require_budget(advice_len_estimate(construction, (double)input.size(), common) +
                           (double)input.size(),
                       budget);
        res = Runner(c.machine).run(input, c.advice.eval(input.size()), opt);
      } else {
        throw Error("run needs --construction or --machine");
      }
      out << "VERDICT " << to_token(res.verdict) << " steps=" << res.steps << "\n";
      return res.verdict == Verdict::accept ? kOk : kFail;
    }

    if (verify_cmd->parsed()) {
      if (construction == "equal3-rand" || construction == "equal3-pfat") {
        BoundReport rep = check_error_bound(construction, common.s, max_n);
        out << "construction " << construction << " (s=" << common.s << "): members="
            << rep.members << " non-members=" << rep.nonmembers
            << " max non-member acceptance = " << rep.max_nonmember_accept.to_string() << " ("
            << decimal_string(rep.max_nonmember_accept) << ")"
            << " bound = " << rep.bound.to_string() << " violations=" << rep.violation_count
            << "\n";
        for (const auto& v : rep.violations)
          out << "violation: input \"" << v.input << "\" accept=" << v.accept.to_string()
              << " (" << v.rule << ")\n";
        return rep.ok() ? kOk : kFail;
      }
      Construction c = build(construction, to_advice_params(construction, common));
      require_budget(sweep_cost_estimate(construction, c.machine.input_alphabet.size(), max_n,
                                         common),
                     budget);
      SweepReport rep = run_language_sweep(c.machine, c.advice, c.oracle, max_n, jobs);
      out << "construction " << construction << ": " << rep.runs << " runs, "
          << rep.mismatches << " mismatches\n";
      if (rep.first)
        out << "first mismatch: input \"" << rep.first->input
            << "\" machine=" << to_token(rep.first->machine_verdict) << " oracle="
            << (rep.first->oracle_member ? "member" : "non-member") << "\n";
      return rep.mismatches == 0 ? kOk : kFail;
    }

    if (prob_cmd->parsed()) {
      Construction c = build(construction, to_advice_params(construction, common));
      AcceptanceResult r = acceptance_probability(c, input);
      out << prob_line("accept", r.accept) << "\n";
      out << prob_line("reject", r.reject) << "\n";
      out << prob_line("unresolved", r.unresolved) << "\n";
      return kOk;
    }

    if (classes_cmd->parsed()) {
      LanguageOracle oracle = make_oracle(language);
      require_budget(2 * std::pow((double)oracle.alphabet.size(), (double)opt_n), budget);
      ClassCountReport rep = count_equivalence_classes(oracle, opt_n, opt_k, witnesses);
      out << "language " << rep.language << " n=" << rep.n << " k=" << rep.k << ": "
          << rep.count << " classes\n";
      if (rep.representatives)
        for (std::size_t i = 0; i < rep.representatives->size(); ++i)
          out << "class " << i << ": \"" << (*rep.representatives)[i] << "\"\n";
      return kOk;
    }

    if (advice_cmd->parsed()) {
      require_budget(advice_len_estimate(construction, (double)opt_n, common), budget);
      AdviceFunction h = make_advice(construction, to_advice_params(construction, common));
      if (h.randomized()) {
        for (const auto& [tapes, p] : h.distribution(opt_n)) {
          out << p.to_string();
          for (const auto& t : tapes) out << "  " << t;
          out << "\n";
        }
      } else {
        for (const auto& t : h.eval(opt_n)) out << t << "\n";
      }
      return kOk;
    }

    if (growth_cmd->parsed()) {
      require_budget(advice_len_estimate(construction, (double)n_max_growth, common) *
                         (double)n_max_growth,
                     budget);
      GrowthTable t = measure_advice_growth(
          make_advice(construction, to_advice_params(construction, common)), n_max_growth);
      out << "construction " << t.construction << "\n";
      out << std::setw(6) << "n" << std::setw(14) << "length" << std::setw(14)
          << "ratio(2n/n)" << "\n";
      std::size_t ri = 0;
      for (const auto& [n, len] : t.rows) {
        out << std::setw(6) << n << std::setw(14) << len;
        if (ri < t.doubling_ratios.size() && t.doubling_ratios[ri].first == n) {
          std::ostringstream r;
          r << std::fixed << std::setprecision(4) << t.doubling_ratios[ri].second;
          out << std::setw(14) << r.str();
          ++ri;
        }
        out << "\n";
      }
      return kOk;
    }

    if (validate_cmd->parsed()) {
      Machine m;
      if (!machine_file.empty()) {
        std::ifstream f(machine_file);
        if (!f) throw Error("cannot open '" + machine_file + "'");
        m = fatfile::parse(f, machine_file);
      } else if (!construction.empty()) {
        m = build(construction, to_advice_params(construction, common)).machine;
      } else {
        throw Error("validate needs a file or --construction");
      }
      ValidationReport rep = validate_machine(m);
      if (rep.ok()) {
        out << "ok\n";
        return kOk;
      }
      out << rep.to_string();
      return kFail;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << "error: no subcommand\n";
  return kUsage;
}

}  // namespace cli
}  // namespace fat
