#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>

#include "tabloid/criteria.hpp"
#include "tabloid/equivalence.hpp"
#include "tabloid/error.hpp"
#include "tabloid/group_actions.hpp"
#include "tabloid/io.hpp"

namespace tabloid::cli {

namespace {

using io::json;

const std::vector<std::string> all_criteria = {"pareto", "iia", "strong-majority", "condorcet"};

struct RunConfig {
  std::string command;
  std::string candidates;
  std::string composition;
  std::string weights;
  std::string against;
  std::string profile;
  std::string pair;
  std::string criteria = "pareto,iia,strong-majority,condorcet";
  std::string criterion;
  std::uint64_t seed = default_seed;
  std::uint64_t budget = default_search_budget;
  std::uint64_t cap = default_size_cap;
  std::string format = "json";
};

std::uint64_t cap_from_environment() {
  const char* value = std::getenv("TABLOID_VOTE_CAP");
  if (!value || !*value) return default_size_cap;
  char* end = nullptr;
  const unsigned long long cap = std::strtoull(value, &end, 10);
  if (*end != '\0' || cap == 0) throw ValidationError("TABLOID_VOTE_CAP must be a positive integer");
  return cap;
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw ValidationError("empty item in \"" + text + "\"");
    out.push_back(item.substr(first, last - first + 1));
  }
  return out;
}

class Session {
 public:
  Session(const RunConfig& config, std::ostream& out) : config_(config), out_(out) {}

  int dispatch() {
    const std::string& c = config_.command;
    if (c == "enumerate") return enumerate();
    if (c == "tally") return tally_command();
    if (c == "h2h") return h2h();
    if (c == "audit") return audit();
    if (c == "counterexample") return counterexample();
    if (c == "equiv") return equiv();
    if (c == "condorcet") return condorcet();
    throw ValidationError("unknown command " + c);
  }

 private:
  void require_format(std::initializer_list<const char*> allowed) const {
    for (const char* f : allowed) {
      if (config_.format == f) return;
    }
    throw ValidationError("--format " + config_.format + " is not available for " + config_.command);
  }

  SpacePtr space_from_flags() const {
    if (config_.composition.empty()) throw ValidationError("--composition is required");
    Composition composition = io::parse_composition(config_.composition);
    CandidateSet candidates = config_.candidates.empty() ? CandidateSet::standard(composition.total())
                                                         : io::parse_candidates(config_.candidates);
    return BallotSpace::make(std::move(candidates), std::move(composition), config_.cap);
  }

  Profile profile_from_flags() const {
    if (config_.profile.empty()) throw ValidationError("--profile is required");
    const json document = io::read_json_file(config_.profile);
    try {
      if (!config_.composition.empty()) return io::profile_from_json(document, space_from_flags());
      return io::profile_from_json(document, config_.cap);
    } catch (const ValidationError& e) {
      throw ValidationError(config_.profile + ": " + e.what());
    }
  }

  WeightVector weights_for(const BallotSpace& space) const {
    if (config_.weights.empty()) throw ValidationError("--weights is required");
    WeightVector w = io::parse_weights(config_.weights);
    w.require_compatible(space);
    return w;
  }

  std::pair<std::size_t, std::size_t> pair_for(const BallotSpace& space) const {
    if (config_.pair.empty()) {
      if (space.candidate_count() < 2) throw ValidationError("need at least two candidates");
      return {0, 1};
    }
    const auto names = split_names(config_.pair);
    if (names.size() != 2) throw ValidationError("--pair expects two candidates, e.g. A,B");
    const std::size_t x = space.candidates().index_of(names[0]);
    const std::size_t y = space.candidates().index_of(names[1]);
    space.require_distinct_pair(x, y);
    return {x, y};
  }

  void emit(const json& document) { out_ << document.dump(2) << '\n'; }

  int enumerate() {
    require_format({"json", "csv", "text"});
    const SpacePtr space = space_from_flags();
    const auto ballots = space->enumerate();
    if (config_.format == "json") {
      json rows = json::array();
      for (std::size_t i = 0; i < ballots.size(); ++i) {
        rows.push_back({{"index", i}, {"rows", io::rows_json(*space, ballots[i])}});
      }
      emit({{"candidates", space->candidates().names()},
            {"composition", space->composition().parts()},
            {"count", space->size()},
            {"ballots", std::move(rows)}});
    } else if (config_.format == "csv") {
      out_ << "index,ballot\n";
      for (std::size_t i = 0; i < ballots.size(); ++i) out_ << i << ',' << space->format(ballots[i]) << '\n';
    } else {
      for (std::size_t i = 0; i < ballots.size(); ++i) out_ << 'b' << i + 1 << "  " << space->format(ballots[i]) << '\n';
    }
    return exit_ok;
  }

  int tally_command() {
    require_format({"json", "csv", "text"});
    const Profile p = profile_from_flags();
    const auto& space = p.space();
    const WeightVector w = weights_for(space);
    const Scoreboard scores = tally(w, p);
    const WeakOrdering order = ranking(scores);
    if (config_.format == "json") {
      emit({{"weights", io::to_json(w)},
            {"scores", io::to_json(space, scores)},
            {"ranking", io::to_json(space, order)},
            {"trivial", w.is_trivial()}});
    } else if (config_.format == "csv") {
      out_ << "candidate,score\n";
      for (std::size_t x = 0; x < scores.size(); ++x) out_ << space.candidates().name(x) << ',' << to_string(scores[x]) << '\n';
    } else {
      for (std::size_t x = 0; x < scores.size(); ++x) out_ << space.candidates().name(x) << ": " << to_string(scores[x]) << '\n';
      out_ << "ranking: " << io::format_ordering(space, order) << '\n';
    }
    return exit_ok;
  }

  std::string describe(const BallotSpace& space, const HeadToHead& h, std::size_t x, std::size_t y) const {
    const std::string a = to_string(h.counts.above);
    const std::string b = to_string(h.counts.below);
    switch (h.outcome) {
      case Contest::FirstWins:
        return space.candidates().name(x) + " wins " + a + " to " + b;
      case Contest::SecondWins:
        return space.candidates().name(y) + " wins " + b + " to " + a;
      case Contest::Tie:
        break;
    }
    return "tie " + a + " to " + b;
  }

  int h2h() {
    require_format({"json", "text"});
    const Profile p = profile_from_flags();
    const auto& space = p.space();
    const auto [x, y] = pair_for(space);
    const HeadToHead h = head_to_head(p, x, y);
    const std::string summary = describe(space, h, x, y);
    if (config_.format == "text") {
      out_ << summary << '\n';
      return exit_ok;
    }
    const char* outcome = h.outcome == Contest::FirstWins ? "first" : h.outcome == Contest::SecondWins ? "second" : "tie";
    emit({{"pair", json::array({space.candidates().name(x), space.candidates().name(y)})},
          {"above", io::to_json(h.counts.above)},
          {"below", io::to_json(h.counts.below)},
          {"margin", io::to_json(h.counts.margin())},
          {"winner", outcome},
          {"summary", summary}});
    return exit_ok;
  }

  CriterionVerdict run_criterion(const std::string& name, const SpacePtr& space, const WeightVector& w) const {
    if (name == "pareto") return pareto_check(space, w);
    if (name == "iia") return iia_check(space, w);
    if (name == "strong-majority") return strong_majority_check(space, w);
    if (name == "condorcet") return condorcet_check(space, w, config_.budget, config_.seed);
    throw ValidationError("unknown criterion \"" + name + "\" (expected pareto, iia, strong-majority, condorcet)");
  }

  void print_verdict_text(const CriterionVerdict& v) {
    out_ << v.criterion << ": " << v.status() << '\n';
    for (const auto& note : v.notes) out_ << "  " << note << '\n';
  }

  int audit() {
    require_format({"json", "text"});
    const SpacePtr space = space_from_flags();
    const WeightVector w = weights_for(*space);
    std::vector<std::string> names = config_.criteria == "all" ? all_criteria : split_names(config_.criteria);
    for (const auto& name : names) {
      if (std::find(all_criteria.begin(), all_criteria.end(), name) == all_criteria.end()) {
        throw ValidationError("unknown criterion \"" + name + "\" (expected pareto, iia, strong-majority, condorcet)");
      }
    }
    json verdicts = json::array();
    bool any_fails = false;
    for (const auto& name : names) {
      const CriterionVerdict v = run_criterion(name, space, w);
      any_fails = any_fails || !v.holds;
      if (config_.format == "text") {
        print_verdict_text(v);
      } else {
        verdicts.push_back(io::to_json(*space, v));
      }
    }
    if (config_.format == "json") emit(verdicts);
    return any_fails ? exit_criterion_fails : exit_ok;
  }

  // Moves a witness for the pair (C1, C2) onto (x, y).
  static Profile relabel(const Profile& p, std::size_t x, std::size_t y) {
    const std::size_t n = p.space().candidate_count();
    std::vector<std::size_t> image(n, n);
    image[x] = 0;
    image[y] = 1;
    std::size_t next = 2;
    for (std::size_t c = 0; c < n; ++c) {
      if (image[c] == n) image[c] = next++;
    }
    return permute_profile(Permutation(std::move(image)), p);
  }

  json check(const std::string& what, bool passed, json value = nullptr) {
    all_passed_ = all_passed_ && passed;
    json entry = {{"check", what}, {"passed", passed}};
    if (!value.is_null()) entry["value"] = std::move(value);
    return entry;
  }

  json score_line(const BallotSpace& space, const WeightVector& w, const Profile& p) {
    return io::to_json(space, tally(w, p));
  }

  int counterexample() {
    require_format({"json"});
    const SpacePtr space = space_from_flags();
    const WeightVector w = weights_for(*space);
    const auto [x, y] = pair_for(*space);
    const std::string& criterion = config_.criterion;
    const std::string X = space->candidates().name(x);
    const std::string Y = space->candidates().name(y);

    json result = {{"criterion", criterion}, {"pair", json::array({X, Y})}};
    json transcript = json::array();
    auto holds = [&](const std::string& note, bool conclusive = true) {
      result["status"] = conclusive ? "holds" : "no_counterexample_within_budget";
      result["notes"] = json::array({note});
      emit(result);
      return conclusive ? exit_ok : exit_budget_exhausted;
    };

    if (criterion == "iia") {
      const auto ce = iia_counterexample(space, w, x, y);
      if (!ce) return holds(w.is_trivial() ? "trivial CWF" : "v_{X>Y} is a multiple of r_{X>Y}");
      const Rational vp = inner_product(ce->p, v_diff(space, w, x, y));
      const Rational vq = inner_product(ce->q, v_diff(space, w, x, y));
      const Scoreboard sp = tally(w, ce->p);
      const Scoreboard sq = tally(w, ce->q);
      result["profiles"] = {{"p", io::to_json(ce->p)}, {"q", io::to_json(ce->q)}};
      transcript.push_back(check("p and q are " + X + "," + Y + "-equivalent", xy_equivalent(ce->p, ce->q, x, y)));
      transcript.push_back(check("p is nonnegative", is_nonnegative(ce->p)));
      transcript.push_back(check("q is nonnegative", is_nonnegative(ce->q)));
      transcript.push_back(check("tally(p) ranks " + X + " above " + Y, sp[x] > sp[y], score_line(*space, w, ce->p)));
      transcript.push_back(check("tally(q) ranks " + Y + " above " + X, sq[y] > sq[x], score_line(*space, w, ce->q)));
      transcript.push_back(check("p . v_{X>Y} > 0", vp > 0, io::to_json(vp)));
      transcript.push_back(check("q . v_{X>Y} < 0", vq < 0, io::to_json(vq)));
    } else if (criterion == "pareto") {
      const CriterionVerdict v = pareto_check(space, w);
      if (v.holds) return holds(v.notes.back());
      const Profile p = relabel(v.witness->profiles.front().second, x, y);
      const Scoreboard s = tally(w, p);
      result["profiles"] = {{"p", io::to_json(p)}};
      transcript.push_back(check("every ballot of p ranks " + X + " above " + Y, unanimous_preference(p, x, y)));
      transcript.push_back(check("p is nonnegative", is_nonnegative(p)));
      transcript.push_back(check(X + " does not outscore " + Y, s[x] <= s[y], score_line(*space, w, p)));
    } else if (criterion == "strong-majority") {
      const CriterionVerdict v = strong_majority_check(space, w);
      if (v.holds) return holds(v.notes.back());
      const Profile p = relabel(v.witness->profiles.front().second, x, y);
      const HeadToHead h = head_to_head(p, x, y);
      const Scoreboard s = tally(w, p);
      result["profiles"] = {{"p", io::to_json(p)}};
      transcript.push_back(check(describe(*space, h, x, y), h.outcome == Contest::FirstWins, io::to_json(h.counts.margin())));
      transcript.push_back(check("p is nonnegative", is_nonnegative(p)));
      transcript.push_back(check(X + " does not outscore " + Y, s[x] <= s[y], score_line(*space, w, p)));
    } else if (criterion == "condorcet") {
      const CriterionVerdict v = condorcet_check(space, w, config_.budget, config_.seed);
      if (v.holds) return holds(v.notes.back(), v.conclusive);
      const Profile& p = v.witness->profiles.front().second;
      const auto c = condorcet_candidate(p);
      const Scoreboard s = tally(w, p);
      result["pair"] = json::array({space->candidates().name(v.witness->first), space->candidates().name(v.witness->second)});
      result["profiles"] = {{"p", io::to_json(p)}};
      transcript.push_back(check("Condorcet candidate is " + space->candidates().name(v.witness->first),
                                 c == v.witness->first));
      transcript.push_back(check("p is nonnegative", is_nonnegative(p)));
      transcript.push_back(check("Condorcet candidate is not the unique winner", c && !unique_winner(s, *c),
                                 score_line(*space, w, p)));
    } else {
      throw ValidationError("unknown criterion \"" + criterion + "\" (expected pareto, iia, strong-majority, condorcet)");
    }
    result["status"] = "fails";
    result["verification"] = std::move(transcript);
    result["verified"] = all_passed_;
    emit(result);
    if (!all_passed_) throw std::logic_error("witness failed re-verification");
    return exit_criterion_fails;
  }

  int equiv() {
    require_format({"json", "text"});
    if (config_.against.empty()) throw ValidationError("--against is required");
    const WeightVector u = io::parse_weights(config_.weights.empty() ? throw ValidationError("--weights is required")
                                                                     : config_.weights);
    const WeightVector w = io::parse_weights(config_.against);
    const auto order = order_certificate(u, w);
    const auto cardinal = cardinal_certificate(u, w);
    const bool equivalent = cardinal_equivalent(u, w);
    const auto pu = projective_coords(u);
    const auto pw = projective_coords(w);
    if (config_.format == "text") {
      out_ << (equivalent ? "equivalent" : "not equivalent");
      if (order) out_ << " (alpha=" << to_string(order->alpha) << ", beta=" << to_string(order->beta) << ')';
      out_ << '\n';
      return exit_ok;
    }
    json result = {{"weights", io::to_json(u)},
                   {"against", io::to_json(w)},
                   {"order_equivalent", equivalent},
                   {"cardinal_equivalent", equivalent},
                   {"canonical", json::array({io::to_json(canonicalize(u)), io::to_json(canonicalize(w))})},
                   {"projective", json::array({io::to_json(pu), io::to_json(pw)})},
                   {"same_projective_point", pu == pw}};
    result["order_certificate"] = order ? io::to_json(*order) : json(nullptr);
    result["cardinal_certificate"] = cardinal ? io::to_json(*cardinal) : json(nullptr);
    emit(result);
    return exit_ok;
  }

  int condorcet() {
    require_format({"json", "text"});
    const SpacePtr space = space_from_flags();
    const WeightVector w = weights_for(*space);
    const CriterionVerdict v = condorcet_check(space, w, config_.budget, config_.seed);
    if (config_.format == "text") {
      print_verdict_text(v);
    } else {
      json result = io::to_json(*space, v);
      result["budget"] = config_.budget;
      result["seed"] = config_.seed;
      emit(result);
    }
    if (!v.holds) return exit_criterion_fails;
    return v.conclusive ? exit_ok : exit_budget_exhausted;
  }

  const RunConfig& config_;
  std::ostream& out_;
  bool all_passed_ = true;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Positional voting on partially ranked ballots: tallies, criteria audits, equivalence classes"};
  app.require_subcommand(1);

  try {
    config.cap = cap_from_environment();
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return exit_validation;
  }

  struct CommandInfo {
    const char* name;
    const char* help;
  };
  const CommandInfo commands[] = {
      {"enumerate", "List the tabloids of a composition in canonical order"},
      {"tally", "Score a profile with a weight vector"},
      {"h2h", "Head-to-head comparison of two candidates"},
      {"audit", "Check voting criteria for a positional method"},
      {"counterexample", "Construct and re-verify a counterexample for one criterion"},
      {"equiv", "Order/cardinal equivalence of two weight vectors"},
      {"condorcet", "Search for a Condorcet counterexample"},
  };
  for (const auto& command : commands) {
    CLI::App* sub = app.add_subcommand(command.name, command.help);
    sub->add_option("--candidates", config.candidates, "Comma-separated candidate names (default A,B,C,...)");
    sub->add_option("--composition", config.composition, "Row sizes, e.g. 2,2");
    sub->add_option("--weights", config.weights, "Weight vector, e.g. 3,2,1 or 1,1/2,0");
    sub->add_option("--profile", config.profile, "Profile JSON file");
    sub->add_option("--pair", config.pair, "Two candidates, e.g. A,B");
    sub->add_option("--cap", config.cap, "Largest ballot space materialized densely")->capture_default_str();
    sub->add_option("--format", config.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    const std::string name = command.name;
    if (name == "audit") sub->add_option("--criteria", config.criteria, "Comma-separated criteria or all");
    if (name == "counterexample") {
      sub->add_option("--criterion", config.criterion, "pareto, iia, strong-majority or condorcet")->required();
    }
    if (name == "equiv") sub->add_option("--against", config.against, "Second weight vector");
    if (name == "audit" || name == "counterexample" || name == "condorcet") {
      sub->add_option("--seed", config.seed, "Search seed")->capture_default_str();
      sub->add_option("--budget", config.budget, "Profiles examined by the Condorcet search")->capture_default_str();
    }
    sub->final_callback([&config, name] { config.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_validation;
  }

  try {
    Session session(config, out);
    return session.dispatch();
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return exit_validation;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return exit_validation;
  }
}

}  // namespace tabloid::cli
