#include "qround/sources.hpp"

#include <algorithm>

#include "qround/errors.hpp"
#include "qround/generators.hpp"

namespace qround {

SourceSpec SourceSpec::parse(const std::string& text) {
  SourceSpec s;
  auto colon = text.find(':');
  s.name = text.substr(0, colon);
  if (s.name.empty()) throw UsageError("empty source name in '" + text + "'");
  if (colon == std::string::npos) return s;
  std::string rest = text.substr(colon + 1);
  std::size_t start = 0;
  while (start <= rest.size()) {
    auto comma = rest.find(',', start);
    std::string kv = rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!kv.empty()) {
      auto eq = kv.find('=');
      if (eq == std::string::npos || eq == 0) throw UsageError("expected key=value in '" + text + "'");
      s.params[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return s;
}

std::string SourceSpec::str() const {
  std::string out = name;
  char sep = ':';
  for (const auto& [k, v] : params) {
    out += sep + k + "=" + v;
    sep = ',';
  }
  return out;
}

std::size_t SourceSpec::get_size(const std::string& key, std::size_t fallback) const {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  const auto& v = it->second;
  if (v.empty() || v.size() > 9 || !std::all_of(v.begin(), v.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw UsageError("parameter " + key + " of " + name + " must be a non-negative integer, got '" + v + "'");
  return static_cast<std::size_t>(std::stoul(v));
}

std::string SourceSpec::get(const std::string& key, const std::string& fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

namespace {

void only(const SourceSpec& s, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : s.params)
    if (std::none_of(keys.begin(), keys.end(), [&](const char* x) { return k == x; }))
      throw UsageError("source " + s.name + " has no parameter '" + k + "'");
}

Trial fixed(Generated g) {
  Trial t{g.instance, fixed_oracle(g.instance, g.realization), g.realization};
  return t;
}

Trial adaptive(AdversaryRun run) { return Trial{std::move(run.instance), std::move(run.oracle), std::nullopt}; }

}  // namespace

Trial make_trial(const std::string& text, std::uint64_t seed, std::optional<std::size_t> size) {
  SourceSpec s = SourceSpec::parse(text);
  try {
    if (s.name == "fig2") {
      only(s, {});
      return fixed(gen_fig2_bal_instance());
    }
    if (s.name == "fig3") {
      only(s, {"k", "c"});
      return fixed(gen_fig3_overlap_instance(s.get_size("k", 3), s.get_size("c", 3)));
    }
    if (s.name == "random") {
      only(s, {"n", "m", "k", "overlap", "problem", "i"});
      RandomParams p;
      p.n = size ? *size : s.get_size("n", 10);
      p.m = s.get_size("m", 1);
      p.k = s.get_size("k", 2);
      p.overlap = parse_overlap(s.get("overlap", "single"));
      p.problem = parse_problem_kind(s.get("problem", "minimum"));
      p.rank = s.get_size("i", 0);
      return fixed(gen_random(seed, p));
    }
    if (s.name == "fig1-pairs") {
      only(s, {"c", "k"});
      return adaptive(sorting_pair_adversary(s.get_size("c", 1), s.get_size("k", 1)));
    }
    if (s.name == "wlb") {
      only(s, {"M"});
      return adaptive(minimum_wlb_adversary(s.get_size("M", 2)));
    }
    if (s.name == "additive") {
      only(s, {"m"});
      return adaptive(minimum_additive_lb_adversary(s.get_size("m", 4)));
    }
    if (s.name == "sel-full-lb") {
      only(s, {"i"});
      return adaptive(selection_full_lb_adversary(s.get_size("i", 2)));
    }
    if (s.name == "sel-value-lb") {
      only(s, {"i", "k"});
      return adaptive(selection_value_lb_adversary(s.get_size("i", 2), s.get_size("k", 0)));
    }
  } catch (const InvalidInstance& e) {
    throw UsageError("source " + text + ": " + e.what());
  }
  throw UsageError("unknown source '" + s.name + "'");
}

std::vector<std::string> source_names() {
  return {"fig2", "fig3", "random", "fig1-pairs", "wlb", "additive", "sel-full-lb", "sel-value-lb"};
}

}  // namespace qround
