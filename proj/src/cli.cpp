#include "qround/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "qround/errors.hpp"
#include "qround/reductions.hpp"
#include "qround/sources.hpp"

namespace qround {

namespace {

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream ss;
  if (path == "-") {
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open " + path);
  ss << f.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

std::string ids_str(const std::vector<ElementId>& ids) {
  std::string s;
  for (ElementId id : ids) s += " " + std::to_string(id + 1);
  return s;
}

std::string describe(const Instance& inst) {
  std::ostringstream os;
  os << "problem: " << problem_name(inst.kind());
  if (inst.problem().is_selection()) os << " i=" << inst.rank();
  os << "\nn: " << inst.n() << "\nm: " << inst.m() << "\nk: " << inst.k() << "\n";
  return os.str();
}

struct RunArgs {
  std::string alg;
  std::string instance;
  std::string source;
  std::string oracle;
  std::uint64_t seed = 1;
  bool trace = false;
  bool log = false;
  std::vector<std::string> as_batches;
  std::vector<std::string> as_rounds;
};

std::string join_params(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : ",") + p;
  return s;
}

void require_known(const std::string& name, const std::vector<std::string>& names, const char* what) {
  if (std::find(names.begin(), names.end(), name) != names.end()) return;
  std::string all;
  for (const auto& n : names) all += " " + n;
  throw UsageError(std::string("unknown ") + what + " '" + name + "'; choose from" + all);
}

Trial load_trial(const RunArgs& a, std::istream& in) {
  int given = !a.instance.empty() + !a.source.empty() + !a.oracle.empty();
  if (given != 1) throw UsageError("run needs exactly one of --instance, --source, --oracle");
  if (!a.instance.empty()) {
    InstanceFile f = parse_instance(read_input(a.instance, in));
    if (!f.realization) throw InvalidRealization(a.instance + " has no realization (value lines)");
    Trial t{f.instance, fixed_oracle(f.instance, *f.realization), f.realization};
    return t;
  }
  return make_trial(a.source.empty() ? a.oracle : a.source, a.seed);
}

int cmd_run(const RunArgs& a, std::istream& in, std::ostream& out) {
  if (a.as_rounds.empty())
    require_known(a.alg, algorithm_names(), "algorithm");
  else
    require_known(a.alg, batch_algorithm_names(), "batch algorithm");
  Trial t = load_trial(a, in);
  if (!a.as_batches.empty() && !a.as_rounds.empty()) throw UsageError("--as-batches and --as-rounds exclude each other");
  if (!a.as_batches.empty()) {
    SourceSpec p = SourceSpec::parse("as-batches:" + join_params(a.as_batches));
    for (const auto& [k, v] : p.params)
      if (k != "r" && k != "alpha") throw UsageError("--as-batches takes r=<int> and alpha=<rational>");
    Rational alpha;
    if (!Rational::try_parse(p.get("alpha", "1"), alpha)) throw UsageError("bad alpha");
    std::size_t r = p.get_size("r", 2);
    const std::string name = a.alg;
    auto batch = std::make_unique<RoundsToBatches>([name] { return make_algorithm(name); }, alpha, r);
    auto rep = run_batches(*batch, t.instance, *t.oracle);
    out << "alg: " << batch->name() << "\n" << describe(t.instance);
    out << "r: " << r << "\nalpha: " << alpha << "\nsequences: " << batch->sequences() << "\nk schedule:";
    for (auto k : batch->k_schedule()) out << " " << k;
    out << "\nbatches: " << rep.batches << "\nbatch sizes:";
    for (auto b : rep.batch_sizes) out << " " << b;
    out << "\nqueries: " << rep.queries << "\nopt1: " << rep.opt1 << "\n";
    bool ok = rep.batches <= r;
    out << "batch budget: " << (ok ? "ok" : "exceeded") << "\n";
    return ok ? kExitOk : kExitViolation;
  }
  std::unique_ptr<RoundAlgorithm> alg;
  Instance inst = t.instance;
  if (!a.as_rounds.empty()) {
    SourceSpec p = SourceSpec::parse("as-rounds:" + join_params(a.as_rounds));
    for (const auto& [k, v] : p.params)
      if (k != "k") throw UsageError("--as-rounds takes k=<int>");
    std::size_t k = p.get_size("k", inst.k());
    if (k < 1) throw UsageError("k must be at least 1");
    if (k != inst.k()) {
      inst = inst.with_k(k);
      if (t.realization)
        t.oracle = fixed_oracle(inst, *t.realization);
      else
        throw UsageError("--as-rounds cannot change k of an adaptive adversary");
    }
    alg = batches_to_rounds(make_batch_algorithm(a.alg));
  } else {
    alg = make_algorithm(a.alg);
  }
  if (!alg->supports(inst)) throw UsageError(alg->name() + " does not support this " + problem_name(inst.kind()) + " instance");
  auto res = run(*alg, inst, *t.oracle);
  out << "alg: " << alg->name() << "\n" << describe(inst) << res.report.str();
  if (auto* b2r = dynamic_cast<BatchesToRounds*>(alg.get())) out << "batches: " << b2r->batches_used() << "\n";
  if (a.trace) out << res.trace.str();
  if (a.log) {
    for (const auto& l : alg->log()) out << "log: " << l << "\n";
    for (const auto& l : t.oracle->log()) out << "oracle: " << l << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& path, std::istream& in, std::ostream& out, std::ostream& err) {
  InstanceFile f;
  try {
    f = parse_instance(read_input(path, in));
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    err << "invalid instance: " << e.what() << "\n";
    return kExitViolation;
  }
  const Instance& inst = f.instance;
  out << describe(inst);
  if (!f.realization) {
    out << "realization: none\n";
    return kExitOk;
  }
  const Realization& r = *f.realization;
  bool ok = true;
  OptReport opt = canonical_opt(inst, r);
  out << "opt1: " << opt.opt1 << " (" << opt_method_name(opt.method) << ")\n";
  out << "opt_k: " << opt.opt_k << "\n";
  out << "opt set:" << ids_str(opt.opt_set) << "\n";
  bool feas = feasible(inst, r, opt.opt_set);
  out << "feasible: " << (feas ? "yes" : "no") << "\n";
  ok &= feas;
  bool minimal = true;
  for (std::size_t j = 0; j < opt.opt_set.size(); ++j) {
    auto smaller = opt.opt_set;
    smaller.erase(smaller.begin() + static_cast<long>(j));
    if (feasible(inst, r, smaller)) minimal = false;
  }
  out << "minimal: " << (minimal ? "yes" : "no") << "\n";
  ok &= minimal;
  if (opt.method == OptMethod::ClosedForm) {
    try {
      OptReport bf = opt1_bruteforce(inst, r);
      bool same = bf.opt1 == opt.opt1;
      out << "brute-force opt1: " << bf.opt1 << (same ? "" : " (mismatch)") << "\n";
      ok &= same;
    } catch (const CapExceeded&) {
      out << "brute-force opt1: skipped (too large)\n";
    }
  }
  if (inst.kind() == ProblemKind::Minimum) {
    bool prefix = true;
    for (std::size_t s = 0; s < inst.m(); ++s) {
      auto cands = minimum_candidates(inst, s, inst.initial_knowledge());
      std::vector<ElementId> ordered;
      for (ElementId id : inst.set(s).members)
        if (!inst.element(id).is_trivial()) ordered.push_back(id);
      std::sort(ordered.begin(), ordered.end(), [&](ElementId a, ElementId b) {
        int c = compare_lower(inst.element(a), inst.element(b));
        return c != 0 ? c < 0 : a < b;
      });
      bool outside = false;
      for (ElementId id : ordered) {
        bool in = std::binary_search(opt.opt_set.begin(), opt.opt_set.end(), id);
        // Strictly larger left endpoints after the first element outside OPT.
        if (!in) outside = true;
        else if (outside) {
          bool tied = false;
          for (ElementId o : ordered)
            if (!std::binary_search(opt.opt_set.begin(), opt.opt_set.end(), o) && inst.element(o).lo() == inst.element(id).lo()) tied = true;
          if (!tied) prefix = false;
        }
      }
    }
    out << "prefix: " << (prefix ? "yes" : "no") << "\n";
    ok &= prefix;
  }
  KnowledgeState K = knowledge_after(inst, r, opt.opt_set);
  if (feas) {
    auto cert = extract_certificate(inst, K);
    out << cert.str();
    std::string why = verify_certificate(inst, cert, r);
    if (!why.empty()) {
      out << "certificate: " << why << "\n";
      ok = false;
    } else {
      out << "certificate: ok\n";
    }
  }
  out << (ok ? "verified" : "FAILED") << "\n";
  return ok ? kExitOk : kExitViolation;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

std::uint64_t parse_u64(const std::string& s, std::size_t line, std::size_t col) {
  if (s.empty() || s.size() > 18 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError("expected a non-negative integer, got '" + s + "'", line, col);
  return std::stoull(s);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string csv_field(const std::string& f) {
  if (f.find_first_of(",\"") == std::string::npos) return f;
  std::string q = "\"";
  for (char c : f) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

int cmd_table(const std::string& path, std::istream& in, std::ostream& out) {
  std::istringstream csv(read_input(path, in));
  std::string line;
  if (!std::getline(csv, line)) throw ParseError("empty table", 1, 1);
  auto header = split_csv(line);
  std::map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < header.size(); ++i) col[header[i]] = i;
  for (const char* need : {"source", "alg", "rounds", "opt_k", "ratio", "wasted"})
    if (!col.count(need)) throw ParseError(std::string("missing column ") + need, 1, 1);
  struct Agg {
    std::size_t runs = 0;
    Rational ratio_sum{0};
    Rational ratio_max{0};
    long excess_max = 0;
    std::size_t wasted = 0;
    std::size_t violations = 0;
  };
  std::vector<std::pair<std::string, std::string>> order;
  std::map<std::pair<std::string, std::string>, Agg> agg;
  std::size_t lineno = 1;
  while (std::getline(csv, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto f = split_csv(line);
    if (f.size() != header.size()) throw ParseError("expected " + std::to_string(header.size()) + " fields", lineno, 1);
    auto key = std::make_pair(f[col["source"]], f[col["alg"]]);
    if (!agg.count(key)) order.push_back(key);
    auto& a = agg[key];
    Rational ratio;
    if (!Rational::try_parse(f[col["ratio"]], ratio)) throw ParseError("bad ratio", lineno, 1);
    long rounds = static_cast<long>(parse_u64(f[col["rounds"]], lineno, 1));
    long optk = static_cast<long>(parse_u64(f[col["opt_k"]], lineno, 1));
    ++a.runs;
    a.ratio_sum += ratio;
    a.ratio_max = std::max(a.ratio_max, ratio);
    a.excess_max = std::max(a.excess_max, rounds - optk);
    a.wasted += parse_u64(f[col["wasted"]], lineno, 1);
    if (col.count("prop1") && f[col["prop1"]] == "violated") ++a.violations;
  }
  out << "source,alg,runs,mean_ratio,max_ratio,max_excess_rounds,total_wasted,prop1_violations\n";
  for (const auto& key : order) {
    const auto& a = agg[key];
    Rational mean = a.ratio_sum / Rational(static_cast<long>(a.runs));
    std::ostringstream m;
    m << std::fixed << std::setprecision(4) << mean.to_double();
    out << csv_field(key.first) << "," << csv_field(key.second) << "," << a.runs << "," << m.str() << "," << a.ratio_max << "," << a.excess_max
        << "," << a.wasted << "," << a.violations << "\n";
  }
  return kExitOk;
}

}  // namespace

SweepSpec parse_sweep_spec(const std::string& text) {
  SweepSpec spec;
  std::istringstream is(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    auto toks = split_ws(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (toks.empty()) continue;
    if (toks[0] != "sweep") throw ParseError("unknown directive '" + toks[0] + "'", lineno, raw.find(toks[0]) + 1);
    if (toks.size() < 3) throw ParseError("sweep needs a kind and values", lineno, 1);
    const std::string& kind = toks[1];
    for (std::size_t i = 2; i < toks.size(); ++i) {
      const std::string& v = toks[i];
      std::size_t col = raw.find(v) + 1;
      if (kind == "alg") {
        spec.algorithms.push_back(v);
      } else if (kind == "source") {
        spec.sources.push_back(v);
      } else if (kind == "seeds") {
        auto dots = v.find("..");
        if (dots == std::string::npos) {
          spec.seeds.push_back(parse_u64(v, lineno, col));
        } else {
          auto a = parse_u64(v.substr(0, dots), lineno, col);
          auto b = parse_u64(v.substr(dots + 2), lineno, col);
          if (b < a || b - a > 1000000) throw ParseError("bad seed range '" + v + "'", lineno, col);
          for (auto s = a; s <= b; ++s) spec.seeds.push_back(s);
        }
      } else if (kind == "size") {
        spec.sizes.push_back(static_cast<std::size_t>(parse_u64(v, lineno, col)));
      } else {
        throw ParseError("unknown sweep kind '" + kind + "'", lineno, raw.find(kind) + 1);
      }
    }
  }
  if (spec.seeds.empty() && !spec.sources.empty()) spec.seeds.push_back(1);
  return spec;
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Round-based query algorithms under explorable uncertainty", args.empty() ? "qround" : args[0]};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("generate", "Write an instance file from a source");
  std::string gen_source;
  std::uint64_t gen_seed = 1;
  std::string gen_out = "-";
  gen->add_option("--source", gen_source, "Source spec, e.g. fig3:k=3,c=3")->required();
  gen->add_option("--seed", gen_seed, "Seed for random sources");
  gen->add_option("-o,--output", gen_out, "Output file, - for stdout");

  auto* runc = app.add_subcommand("run", "Run an algorithm and print its report");
  RunArgs ra;
  runc->add_option("--alg", ra.alg, "Algorithm selector")->required();
  runc->add_option("--instance", ra.instance, "Instance file with values");
  runc->add_option("--source", ra.source, "Fixed-realization source spec");
  runc->add_option("--oracle", ra.oracle, "Adversary spec, e.g. wlb:M=2");
  runc->add_option("--seed", ra.seed, "Seed for random sources");
  runc->add_flag("--trace", ra.trace, "Print one line per round");
  runc->add_flag("--log", ra.log, "Print algorithm and oracle notes");
  runc->add_option("--as-batches", ra.as_batches, "Run a round algorithm in the batch model: r=<int> alpha=<rat>")
      ->expected(1, 2);
  runc->add_option("--as-rounds", ra.as_rounds, "Run a batch algorithm in rounds: k=<int>")->expected(1);

  auto* ver = app.add_subcommand("verify", "Check OPT and certificate invariants of an instance file");
  std::string ver_path;
  ver->add_option("--instance", ver_path, "Instance file, - for stdin")->required();

  auto* bench = app.add_subcommand("bench", "Run a sweep and write a CSV table");
  std::string bench_spec;
  std::string bench_out = "-";
  std::size_t jobs = 1;
  bench->add_option("--spec", bench_spec, "Sweep spec file")->required();
  bench->add_option("-o,--output", bench_out, "CSV output, - for stdout");
  bench->add_option("--jobs", jobs, "Parallel runs")->check(CLI::PositiveNumber);

  auto* table = app.add_subcommand("table", "Aggregate a bench CSV per source and algorithm");
  std::string table_in = "-";
  table->add_option("--input", table_in, "CSV input, - for stdin");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("qround");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) {
      Trial t = make_trial(gen_source, gen_seed);
      write_output(gen_out, serialize_instance(t.instance, t.realization ? &*t.realization : nullptr), out);
      return kExitOk;
    }
    if (*runc) return cmd_run(ra, in, out);
    if (*ver) return cmd_verify(ver_path, in, out, err);
    if (*bench) {
      SweepSpec spec = parse_sweep_spec(read_input(bench_spec, in));
      for (const auto& a : spec.algorithms) require_known(a, algorithm_names(), "algorithm");
      auto rows = sweep(spec, jobs);
      std::ostringstream os;
      write_csv(os, rows);
      write_output(bench_out, os.str(), out);
      return kExitOk;
    }
    if (*table) return cmd_table(table_in, in, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitUsage;
}

}  // namespace qround
