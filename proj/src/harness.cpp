#include "qround/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "qround/errors.hpp"
#include "qround/sources.hpp"

namespace qround {

std::string RoundTrace::str() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rounds.size(); ++r) {
    os << "round " << r + 1 << ": ";
    for (std::size_t q = 0; q < rounds[r].ids.size(); ++q) os << (q ? "," : "") << rounds[r].ids[q] + 1;
    os << " -> ";
    for (std::size_t q = 0; q < rounds[r].values.size(); ++q) os << (q ? "," : "") << rounds[r].values[q];
    os << "\n";
  }
  return os.str();
}

std::string prop1_name(Prop1Status s) {
  switch (s) {
    case Prop1Status::Holds: return "ok";
    case Prop1Status::Violated: return "violated";
    case Prop1Status::NotApplicable: return "n/a";
  }
  return "?";
}

std::string RunReport::str() const {
  std::ostringstream os;
  os << "rounds: " << alg_rounds << "\n";
  os << "queries: " << alg_queries << "\n";
  os << "opt1: " << opt1 << " (" << opt_method_name(method) << ")\n";
  os << "opt_k: " << opt_k << "\n";
  os << "ratio: " << ratio << "\n";
  os << "wasted: " << wasted << "\n";
  os << "useful: " << useful << "\n";
  os << "opt set:";
  for (ElementId id : opt_set) os << " " << id + 1;
  os << "\n";
  os << "prop1: " << prop1_name(prop1) << "\n";
  os << certificate.str();
  return os.str();
}

std::vector<std::size_t> wasted_per_round(const RoundTrace& trace, const std::vector<ElementId>& opt_set) {
  std::vector<std::size_t> out;
  for (const auto& r : trace.rounds) {
    std::size_t w = 0;
    for (ElementId id : r.ids)
      if (!std::binary_search(opt_set.begin(), opt_set.end(), id)) ++w;
    out.push_back(w);
  }
  return out;
}

Prop1Status check_prop1(const RunReport& rep, std::size_t k, const RoundTrace& trace) {
  if (rep.useful != rep.opt1) return Prop1Status::NotApplicable;
  for (std::size_t r = 0; r + 1 < trace.rounds.size(); ++r)
    if (trace.rounds[r].ids.size() != k) return Prop1Status::NotApplicable;
  auto expect = static_cast<std::size_t>(ceil_div(static_cast<long>(rep.opt1 + rep.wasted_before_final), static_cast<long>(k)));
  auto bound = rep.opt_k + static_cast<std::size_t>(ceil_div(static_cast<long>(rep.wasted_before_final), static_cast<long>(k)));
  return rep.alg_rounds == expect && rep.alg_rounds <= bound ? Prop1Status::Holds : Prop1Status::Violated;
}

RunResult run(RoundAlgorithm& alg, const Instance& inst, ValueOracle& oracle, const RunOptions& opts) {
  if (!alg.supports(inst))
    throw Error(alg.name() + " does not support this " + problem_name(inst.kind()) + " instance");
  alg.reset(inst);
  RunResult res;
  auto& trace = res.trace;
  KnowledgeState K = inst.initial_knowledge();
  trace.solved_at.assign(inst.m(), 0);
  std::vector<bool> done(inst.m());
  for (std::size_t s = 0; s < inst.m(); ++s) done[s] = set_solved(inst, s, K);
  while (!instance_solved(inst, K)) {
    if (trace.rounds.size() > inst.n()) throw InternalError(alg.name() + " does not terminate");
    auto round = alg.next_round(inst, K);
    if (round.empty()) throw InternalError(alg.name() + " emitted an empty round on an unsolved instance");
    if (round.size() > inst.k())
      throw InternalError(alg.name() + " emitted " + std::to_string(round.size()) + " queries with k = " + std::to_string(inst.k()));
    std::set<ElementId> seen;
    for (ElementId id : round)
      if (id >= inst.n() || !seen.insert(id).second || K.is_known(id))
        throw InternalError(alg.name() + " emitted a repeated or known element " + std::to_string(id + 1));
    auto answers = oracle.answer_round(round);
    for (std::size_t q = 0; q < round.size(); ++q) K.reveal(round[q], answers[q]);
    trace.rounds.push_back({round, answers});
    for (std::size_t s = 0; s < inst.m(); ++s)
      if (!done[s] && set_solved(inst, s, K)) {
        done[s] = true;
        trace.solved_at[s] = trace.rounds.size();
      }
  }
  trace.final_realization = oracle.finalize();

  auto& rep = res.report;
  OptReport opt = canonical_opt(inst, trace.final_realization, opts.opt_cap);
  rep.alg_rounds = trace.rounds.size();
  rep.opt1 = opt.opt1;
  rep.opt_k = opt.opt_k;
  rep.opt_set = opt.opt_set;
  rep.method = opt.method;
  auto wasted = wasted_per_round(trace, opt.opt_set);
  for (std::size_t r = 0; r < trace.rounds.size(); ++r) {
    rep.alg_queries += trace.rounds[r].ids.size();
    rep.wasted += wasted[r];
    if (r + 1 < trace.rounds.size()) rep.wasted_before_final += wasted[r];
  }
  rep.useful = rep.alg_queries - rep.wasted;
  rep.ratio = rep.opt_k == 0 ? Rational(rep.alg_rounds == 0 ? 1 : 0)
                             : Rational(static_cast<long>(rep.alg_rounds), static_cast<long>(rep.opt_k));
  if (rep.opt_k == 0 && rep.alg_rounds != 0) throw InternalError("queries made on an instance solved from the start");
  rep.prop1 = check_prop1(rep, inst.k(), trace);
  rep.certificate = extract_certificate(inst, K);
  std::string why = verify_certificate(inst, rep.certificate, trace.final_realization);
  if (!why.empty()) throw InternalError("certificate does not verify: " + why);
  return res;
}

std::vector<SweepRow> sweep(const SweepSpec& spec, std::size_t jobs) {
  struct Job {
    std::string source;
    std::optional<std::size_t> size;
    std::string alg;
    std::uint64_t seed;
  };
  std::vector<Job> work;
  std::vector<std::optional<std::size_t>> sizes;
  if (spec.sizes.empty()) sizes.push_back(std::nullopt);
  for (std::size_t s : spec.sizes) sizes.push_back(s);
  for (const auto& src : spec.sources)
    for (const auto& size : sizes)
      for (const auto& alg : spec.algorithms)
        for (auto seed : spec.seeds) work.push_back({src, size, alg, seed});

  std::vector<std::optional<SweepRow>> rows(work.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  auto worker = [&] {
    while (true) {
      std::size_t i = next++;
      if (i >= work.size()) return;
      try {
        const auto& j = work[i];
        Trial t = make_trial(j.source, j.seed, j.size);
        auto alg = make_algorithm(j.alg);
        if (!alg->supports(t.instance)) continue;
        auto res = run(*alg, t.instance, *t.oracle);
        SweepRow row{j.source, j.alg, j.seed, t.instance.n(), t.instance.m(), t.instance.k(), std::move(res.report)};
        rows[i] = std::move(row);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        next = work.size();
      }
    }
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, work.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  std::vector<SweepRow> out;
  for (auto& r : rows)
    if (r) out.push_back(std::move(*r));
  return out;
}

std::string csv_header() { return "source,alg,seed,n,m,k,rounds,opt_k,ratio,queries,opt1,wasted,prop1"; }

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string csv_row(const SweepRow& row) {
  std::ostringstream os;
  const auto& r = row.report;
  os << csv_field(row.source) << "," << row.alg << "," << row.seed << "," << row.n << "," << row.m << "," << row.k << ","
     << r.alg_rounds << "," << r.opt_k << "," << r.ratio << "," << r.alg_queries << "," << r.opt1 << "," << r.wasted << ","
     << prop1_name(r.prop1);
  return os.str();
}

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << csv_header() << "\n";
  for (const auto& r : rows) os << csv_row(r) << "\n";
}

}  // namespace qround
