#include "tabloid/io.hpp"

#include <cstdio>
#include <fstream>

#include "tabloid/error.hpp"

namespace tabloid::io {

namespace {

std::vector<std::string> split(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string item(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    item = first == std::string::npos ? std::string() : item.substr(first, last - first + 1);
    if (item.empty()) throw ValidationError("empty item in list \"" + std::string(text) + "\"");
    out.push_back(std::move(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::size_t parse_size(const std::string& item) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(item, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != item.size() || item.front() == '-') throw ValidationError("expected a positive integer, got \"" + item + "\"");
  return static_cast<std::size_t>(value);
}

std::string where(std::size_t ballot) { return "ballots[" + std::to_string(ballot) + "]"; }

}  // namespace

CandidateSet parse_candidates(std::string_view text) { return CandidateSet(split(text)); }

Composition parse_composition(std::string_view text) {
  std::vector<std::size_t> parts;
  for (const auto& item : split(text)) parts.push_back(parse_size(item));
  return Composition(std::move(parts));
}

WeightVector parse_weights(std::string_view text) { return WeightVector(parse_rational_list(text)); }

json to_json(const Rational& value) { return to_string(value); }

Rational rational_from_json(const json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return Rational(std::to_string(value.get<std::uint64_t>()));
    return Rational(std::to_string(value.get<std::int64_t>()));
  }
  if (value.is_number_float()) return rational_from_double(value.get<double>());
  throw ValidationError("expected a number or a rational string, got " + value.dump());
}

std::string format_float(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

json rows_json(const BallotSpace& space, const Ballot& ballot) { return space.to_rows(ballot); }

json to_json(const Profile& p) {
  const auto& space = p.space();
  json ballots = json::array();
  for (const auto& t : p.terms()) {
    ballots.push_back({{"rows", rows_json(space, space.unrank(t.index))}, {"coefficient", to_json(t.coefficient)}});
  }
  return {{"candidates", space.candidates().names()},
          {"composition", space.composition().parts()},
          {"ballots", std::move(ballots)}};
}

json to_json(const FloatProfile& p) {
  const auto& space = p.space();
  json ballots = json::array();
  Ballot b = space.first();
  std::uint64_t i = 0;
  do {
    if (p[i] != 0.0) ballots.push_back({{"rows", rows_json(space, b)}, {"coefficient", p[i]}});
    ++i;
  } while (BallotSpace::advance(b));
  return {{"candidates", space.candidates().names()},
          {"composition", space.composition().parts()},
          {"ballots", std::move(ballots)}};
}

SpacePtr space_from_json(const json& document, std::uint64_t cap) {
  if (!document.is_object()) throw ValidationError("profile document must be a JSON object");
  if (!document.contains("composition")) throw ValidationError("profile document has no \"composition\"");
  std::vector<std::size_t> parts;
  try {
    parts = document.at("composition").get<std::vector<std::size_t>>();
  } catch (const json::exception&) {
    throw ValidationError("\"composition\" must be an array of positive integers");
  }
  Composition composition(std::move(parts));
  CandidateSet candidates = CandidateSet::standard(composition.total());
  if (document.contains("candidates")) {
    try {
      candidates = CandidateSet(document.at("candidates").get<std::vector<std::string>>());
    } catch (const json::exception&) {
      throw ValidationError("\"candidates\" must be an array of names");
    }
  }
  return BallotSpace::make(std::move(candidates), std::move(composition), cap);
}

Profile profile_from_json(const json& document, std::uint64_t cap) {
  return profile_from_json(document, space_from_json(document, cap));
}

Profile profile_from_json(const json& document, const SpacePtr& space) {
  if (!document.is_object()) throw ValidationError("profile document must be a JSON object");
  if (document.contains("candidates") || document.contains("composition")) {
    const SpacePtr declared = space_from_json(document, space->cap());
    if (!(*declared == *space)) {
      throw ValidationError("profile candidates/composition do not match the requested ballot space");
    }
  }
  std::vector<Profile::Term> terms;
  const json ballots = document.value("ballots", json::array());
  if (!ballots.is_array()) throw ValidationError("\"ballots\" must be an array");
  for (std::size_t i = 0; i < ballots.size(); ++i) {
    const json& entry = ballots[i];
    if (!entry.is_object() || !entry.contains("rows")) throw ValidationError(where(i) + ": missing \"rows\"");
    std::vector<std::vector<std::string>> rows;
    try {
      rows = entry.at("rows").get<std::vector<std::vector<std::string>>>();
    } catch (const json::exception&) {
      throw ValidationError(where(i) + ": \"rows\" must be an array of name arrays");
    }
    try {
      const Ballot b = space->from_rows(rows);
      const Rational c = entry.contains("coefficient") ? rational_from_json(entry.at("coefficient")) : Rational(1);
      terms.push_back(Profile::Term{space->rank(b), c});
    } catch (const ValidationError& e) {
      throw ValidationError(where(i) + ": " + e.what());
    }
  }
  return Profile(space, std::move(terms));
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

json to_json(const BallotSpace& space, const Scoreboard& scores) {
  json out = json::array();
  for (std::size_t x = 0; x < scores.size(); ++x) {
    out.push_back({{"candidate", space.candidates().name(x)}, {"score", to_json(scores[x])}});
  }
  return out;
}

json to_json(const BallotSpace& space, const WeakOrdering& ordering) {
  json out = json::array();
  for (const auto& tier : ordering.tiers) {
    json names = json::array();
    for (std::size_t x : tier) names.push_back(space.candidates().name(x));
    out.push_back(std::move(names));
  }
  return out;
}

json to_json(const BallotSpace& space, const CriterionVerdict& verdict) {
  json out = {{"criterion", verdict.criterion},
              {"status", verdict.status()},
              {"holds", verdict.holds},
              {"conclusive", verdict.conclusive},
              {"notes", verdict.notes}};
  if (verdict.witness) {
    const Witness& w = *verdict.witness;
    json profiles = json::object();
    for (const auto& [label, p] : w.profiles) profiles[label] = to_json(p);
    json scores = json::object();
    for (const auto& [label, s] : w.scores) scores[label] = to_json(space, s);
    out["witness"] = {{"pair", json::array({space.candidates().name(w.first), space.candidates().name(w.second)})},
                      {"profiles", std::move(profiles)},
                      {"scores", std::move(scores)}};
  }
  return out;
}

json to_json(const OrderCertificate& c) { return {{"alpha", to_json(c.alpha)}, {"beta", to_json(c.beta)}}; }

json to_json(const CardinalCertificate& c) { return {{"alpha", to_json(c.alpha)}, {"shift", to_json(c.shift)}}; }

json to_json(const CanonicalWeight& c) {
  json rep = json::array();
  for (const auto& x : c.representative) rep.push_back(to_json(x));
  json normalized = json::array();
  for (const auto& x : c.normalized) normalized.push_back(to_json(x));
  return {{"representative", std::move(rep)},
          {"scale", to_json(c.scale)},
          {"normalized", std::move(normalized)},
          {"trivial", c.trivial}};
}

json to_json(const std::optional<ProjectivePoint>& p) {
  if (!p) return "trivial";
  json out = json::array();
  for (const auto& x : p->coords) out.push_back(to_json(x));
  return out;
}

json to_json(const WeightVector& w) {
  json out = json::array();
  for (const auto& x : w.values()) out.push_back(to_json(x));
  return out;
}

std::string format_ordering(const BallotSpace& space, const WeakOrdering& ordering) {
  std::string out;
  for (std::size_t t = 0; t < ordering.tiers.size(); ++t) {
    if (t > 0) out += " > ";
    for (std::size_t i = 0; i < ordering.tiers[t].size(); ++i) {
      if (i > 0) out += " = ";
      out += space.candidates().name(ordering.tiers[t][i]);
    }
  }
  return out;
}

}  // namespace tabloid::io
