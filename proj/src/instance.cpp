#include "qround/instance.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "qround/errors.hpp"

namespace qround {

std::string problem_name(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::Sorting: return "sorting";
    case ProblemKind::Minimum: return "minimum";
    case ProblemKind::SelectionValue: return "selection-value";
    case ProblemKind::SelectionFull: return "selection-full";
  }
  return "?";
}

ProblemKind parse_problem_kind(std::string_view name) {
  if (name == "sorting") return ProblemKind::Sorting;
  if (name == "minimum") return ProblemKind::Minimum;
  if (name == "selection-value") return ProblemKind::SelectionValue;
  if (name == "selection-full") return ProblemKind::SelectionFull;
  throw InvalidInstance("unknown problem '" + std::string(name) + "'");
}

Instance::Instance(std::vector<UncertainInterval> elements, std::vector<ElementSet> sets, Problem problem,
                   std::size_t k)
    : elements_(std::move(elements)), sets_(std::move(sets)), problem_(problem), k_(k) {
  const std::size_t n = elements_.size();
  if (k_ < 1) throw InvalidInstance("k must be at least 1");
  if (n == 0) throw InvalidInstance("instance has no elements");
  if (problem_.is_selection()) {
    if (problem_.rank < 1 || problem_.rank > n)
      throw InvalidInstance("selection rank " + std::to_string(problem_.rank) + " outside 1.." + std::to_string(n));
  } else if (problem_.rank != 0) {
    throw InvalidInstance("rank is only meaningful for selection problems");
  }
  if (sets_.empty()) {
    ElementSet all{"S1", {}};
    for (ElementId i = 0; i < n; ++i) all.members.push_back(i);
    sets_.push_back(std::move(all));
  }
  sets_of_.assign(n, {});
  for (std::size_t s = 0; s < sets_.size(); ++s) {
    const auto& set = sets_[s];
    if (set.members.empty()) throw InvalidInstance("set " + set.name + " is empty");
    std::set<ElementId> seen;
    for (ElementId id : set.members) {
      if (id >= n) throw InvalidInstance("set " + set.name + " names unknown element " + std::to_string(id + 1));
      if (!seen.insert(id).second)
        throw InvalidInstance("set " + set.name + " lists element " + std::to_string(id + 1) + " twice");
      sets_of_[id].push_back(s);
    }
  }
  if (problem_.is_selection() && (sets_.size() != 1 || sets_[0].members.size() != n))
    throw InvalidInstance("selection instances use the single full set");
  if (problem_.kind == ProblemKind::Minimum || problem_.kind == ProblemKind::SelectionValue) {
    for (ElementId i = 0; i < n; ++i) {
      const auto& iv = elements_[i];
      if (!iv.is_trivial() && !iv.is_open())
        throw InvalidInstance("element " + std::to_string(i + 1) + " " + iv.str() + ": " +
                              problem_name(problem_.kind) + " requires open or trivial intervals");
    }
  }
}

bool Instance::share_set(ElementId a, ElementId b) const {
  const auto& x = sets_of_.at(a);
  const auto& y = sets_of_.at(b);
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i] == y[j]) return true;
    if (x[i] < y[j]) ++i; else ++j;
  }
  return false;
}

bool Instance::disjoint_family() const {
  return std::all_of(sets_of_.begin(), sets_of_.end(), [](const auto& v) { return v.size() <= 1; });
}

Instance Instance::with_k(std::size_t k) const {
  Instance copy = *this;
  if (k < 1) throw InvalidInstance("k must be at least 1");
  copy.k_ = k;
  return copy;
}

void Realization::validate(const Instance& inst) const {
  if (values.size() != inst.n())
    throw InvalidRealization("realization has " + std::to_string(values.size()) + " values for " +
                             std::to_string(inst.n()) + " elements");
  for (ElementId i = 0; i < inst.n(); ++i)
    if (!inst.element(i).contains(values[i]))
      throw InvalidRealization("value " + values[i].str() + " of element " + std::to_string(i + 1) +
                               " lies outside " + inst.element(i).str());
}

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::size_t parse_count(const Token& t, std::size_t line, const char* what) {
  if (t.text.empty() || !std::all_of(t.text.begin(), t.text.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      t.text.size() > 9)
    throw ParseError(std::string("expected ") + what + ", got '" + t.text + "'", line, t.column);
  return static_cast<std::size_t>(std::stoul(t.text));
}

ElementId parse_id(const Token& t, std::size_t line) {
  std::size_t v = parse_count(t, line, "element id");
  if (v == 0) throw ParseError("element ids start at 1", line, t.column);
  return v - 1;
}

}  // namespace

InstanceFile parse_instance(std::string_view text) {
  std::optional<std::size_t> k;
  std::optional<Problem> problem;
  std::map<ElementId, UncertainInterval> intervals;
  std::vector<ElementSet> sets;
  std::map<ElementId, std::pair<Rational, std::size_t>> values;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& d = toks[0].text;
    auto need = [&](std::size_t lo, std::size_t hi) {
      if (toks.size() < lo) throw ParseError("'" + d + "' is missing arguments", lineno, line.size() + 1);
      if (toks.size() > hi) throw ParseError("unexpected '" + toks[hi].text + "'", lineno, toks[hi].column);
    };
    if (d == "k") {
      need(2, 2);
      if (k) throw ParseError("duplicate k", lineno, toks[0].column);
      k = parse_count(toks[1], lineno, "round width");
      if (*k == 0) throw ParseError("k must be at least 1", lineno, toks[1].column);
    } else if (d == "problem") {
      need(2, 3);
      if (problem) throw ParseError("duplicate problem", lineno, toks[0].column);
      Problem p;
      try {
        p.kind = parse_problem_kind(toks[1].text);
      } catch (const InvalidInstance&) {
        throw ParseError("unknown problem '" + toks[1].text + "'", lineno, toks[1].column);
      }
      if (toks.size() == 3) {
        const auto& t = toks[2];
        if (t.text.rfind("i=", 0) != 0) throw ParseError("expected i=<rank>", lineno, t.column);
        p.rank = parse_count(Token{t.text.substr(2), t.column + 2}, lineno, "rank");
      }
      if (p.is_selection() && p.rank == 0) throw ParseError("selection needs i=<rank>", lineno, toks[1].column);
      if (!p.is_selection() && p.rank != 0) throw ParseError("rank given for non-selection problem", lineno, toks[2].column);
      problem = p;
    } else if (d == "interval") {
      if (toks.size() < 3) throw ParseError("'interval' is missing arguments", lineno, line.size() + 1);
      ElementId id = parse_id(toks[1], lineno);
      std::string body;
      for (std::size_t i = 2; i < toks.size(); ++i) body += toks[i].text;
      if (intervals.count(id)) throw ParseError("duplicate interval " + toks[1].text, lineno, toks[1].column);
      try {
        intervals.emplace(id, UncertainInterval::parse(body));
      } catch (const Error& e) {
        throw ParseError("bad interval '" + body + "'", lineno, toks[2].column);
      }
    } else if (d == "set") {
      need(3, static_cast<std::size_t>(-1));
      ElementSet s{toks[1].text, {}};
      for (const auto& other : sets)
        if (other.name == s.name) throw ParseError("duplicate set name " + s.name, lineno, toks[1].column);
      for (std::size_t i = 2; i < toks.size(); ++i) s.members.push_back(parse_id(toks[i], lineno));
      sets.push_back(std::move(s));
    } else if (d == "value") {
      need(3, 3);
      ElementId id = parse_id(toks[1], lineno);
      Rational v;
      if (!Rational::try_parse(toks[2].text, v)) throw ParseError("bad value '" + toks[2].text + "'", lineno, toks[2].column);
      if (values.count(id)) throw ParseError("duplicate value for element " + toks[1].text, lineno, toks[1].column);
      values.emplace(id, std::make_pair(v, lineno));
    } else {
      throw ParseError("unknown directive '" + d + "'", lineno, toks[0].column);
    }
  }
  if (!k) throw ParseError("missing 'k' directive", lineno, 1);
  if (!problem) throw ParseError("missing 'problem' directive", lineno, 1);
  if (intervals.empty()) throw ParseError("no intervals", lineno, 1);
  std::vector<UncertainInterval> elems;
  for (const auto& [id, iv] : intervals) {
    if (id != elems.size()) throw InvalidInstance("interval ids must be 1.." + std::to_string(intervals.size()));
    elems.push_back(iv);
  }
  InstanceFile out{Instance(std::move(elems), std::move(sets), *problem, *k), std::nullopt};
  const auto& inst = out.instance;
  bool all_trivial = std::all_of(inst.elements().begin(), inst.elements().end(), [](const auto& e) { return e.is_trivial(); });
  if (!values.empty() || all_trivial) {
    Realization r;
    for (ElementId i = 0; i < inst.n(); ++i) {
      auto it = values.find(i);
      if (it == values.end()) {
        if (!inst.element(i).is_trivial())
          throw InvalidRealization("missing value for element " + std::to_string(i + 1));
        r.values.push_back(inst.element(i).lo());
        continue;
      }
      if (!inst.element(i).contains(it->second.first))
        throw InvalidRealization("line " + std::to_string(it->second.second) + ": value " + it->second.first.str() +
                                 " of element " + std::to_string(i + 1) + " lies outside " + inst.element(i).str());
      r.values.push_back(it->second.first);
    }
    for (const auto& [id, v] : values)
      if (id >= inst.n()) throw InvalidRealization("value for unknown element " + std::to_string(id + 1));
    out.realization = std::move(r);
  }
  return out;
}

InstanceFile parse_instance(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

InstanceFile load_instance(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open " + path);
  return parse_instance(f);
}

std::string serialize_instance(const Instance& inst, const Realization* r) {
  std::ostringstream os;
  os << "k " << inst.k() << "\n";
  os << "problem " << problem_name(inst.kind());
  if (inst.problem().is_selection()) os << " i=" << inst.rank();
  os << "\n";
  for (ElementId i = 0; i < inst.n(); ++i) os << "interval " << i + 1 << " " << inst.element(i).str() << "\n";
  for (const auto& s : inst.sets()) {
    os << "set " << s.name;
    for (ElementId id : s.members) os << " " << id + 1;
    os << "\n";
  }
  if (r) {
    for (ElementId i = 0; i < inst.n(); ++i)
      if (!inst.element(i).is_trivial()) os << "value " << i + 1 << " " << r->values.at(i).str() << "\n";
  }
  return os.str();
}

}  // namespace qround
