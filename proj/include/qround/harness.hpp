#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qround/algorithms.hpp"
#include "qround/opt.hpp"
#include "qround/oracles.hpp"
#include "qround/solvedness.hpp"

namespace qround {

struct RoundRecord {
  std::vector<ElementId> ids;
  std::vector<Rational> values;
};

struct RoundTrace {
  std::vector<RoundRecord> rounds;
  Realization final_realization;
  /// Round in which each set became solved; 0 if solved before any query.
  std::vector<std::size_t> solved_at;

  /// One line per round: "round <r>: <ids> -> <values>".
  std::string str() const;
};

enum class Prop1Status { Holds, Violated, NotApplicable };
std::string prop1_name(Prop1Status s);

struct RunReport {
  std::size_t alg_rounds = 0;
  std::size_t alg_queries = 0;
  std::size_t opt1 = 0;
  std::size_t opt_k = 0;
  std::size_t wasted = 0;
  std::size_t useful = 0;
  /// Wasted queries outside the final round.
  std::size_t wasted_before_final = 0;
  Rational ratio{1};
  OptMethod method = OptMethod::ClosedForm;
  std::vector<ElementId> opt_set;
  Prop1Status prop1 = Prop1Status::NotApplicable;
  SolutionCertificate certificate;

  std::string str() const;
};

struct RunResult {
  RoundTrace trace;
  RunReport report;
};

struct RunOptions {
  std::size_t opt_cap = kDefaultBruteForceCap;
};

/// Queries rounds from the algorithm until the instance is solved, then finalizes the
/// oracle, computes the canonical OPT_1 and the report, and re-verifies the certificate.
RunResult run(RoundAlgorithm& alg, const Instance& inst, ValueOracle& oracle, const RunOptions& opts = {});

/// Round identity: when every query of OPT_1 was made and every round but the last was full,
/// rounds = ceil((opt1 + wasted_before_final) / k).
Prop1Status check_prop1(const RunReport& rep, std::size_t k, const RoundTrace& trace);

/// Which queries of each round are outside OPT_1.
std::vector<std::size_t> wasted_per_round(const RoundTrace& trace, const std::vector<ElementId>& opt_set);

struct SweepSpec {
  std::vector<std::string> algorithms;
  std::vector<std::string> sources;
  std::vector<std::uint64_t> seeds;
  /// Overrides n of random sources; empty keeps each source's own n.
  std::vector<std::size_t> sizes;
};

struct SweepRow {
  std::string source;
  std::string alg;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  RunReport report;
};

/// One row per (source, size, algorithm, seed) in that order; combinations whose algorithm
/// does not support the instance are skipped. Rows run on up to `jobs` threads.
std::vector<SweepRow> sweep(const SweepSpec& spec, std::size_t jobs = 1);

std::string csv_header();
std::string csv_row(const SweepRow& row);
void write_csv(std::ostream& os, const std::vector<SweepRow>& rows);

}  // namespace qround
