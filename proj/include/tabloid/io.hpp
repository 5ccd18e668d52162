#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "tabloid/criteria.hpp"
#include "tabloid/equivalence.hpp"
#include "tabloid/positional.hpp"
#include "tabloid/profile.hpp"

namespace tabloid::io {

using nlohmann::json;

// Comma-separated lists from the command line.
CandidateSet parse_candidates(std::string_view text);
Composition parse_composition(std::string_view text);
WeightVector parse_weights(std::string_view text);

// Rationals travel as canonical strings ("3", "-1/2"); numbers are also accepted on input.
json to_json(const Rational& value);
Rational rational_from_json(const json& value);

// %.17g
std::string format_float(double value);

json rows_json(const BallotSpace& space, const Ballot& ballot);

// {"candidates": [...], "composition": [...], "ballots": [{"rows": [[...]], "coefficient": "p/q"}, ...]}
json to_json(const Profile& p);
json to_json(const FloatProfile& p);

// Builds the ballot space from the document's candidates and composition.
SpacePtr space_from_json(const json& document, std::uint64_t cap = default_size_cap);
Profile profile_from_json(const json& document, std::uint64_t cap = default_size_cap);
// Reads ballots into a given space; candidates/composition in the document must match it if present.
Profile profile_from_json(const json& document, const SpacePtr& space);

// Parses a profile file; JSON syntax errors carry line and column.
json read_json_file(const std::filesystem::path& path);

json to_json(const BallotSpace& space, const Scoreboard& scores);
json to_json(const BallotSpace& space, const WeakOrdering& ordering);
json to_json(const BallotSpace& space, const CriterionVerdict& verdict);
json to_json(const OrderCertificate& c);
json to_json(const CardinalCertificate& c);
json to_json(const CanonicalWeight& c);
json to_json(const std::optional<ProjectivePoint>& p);
json to_json(const WeightVector& w);

std::string format_ordering(const BallotSpace& space, const WeakOrdering& ordering);

}  // namespace tabloid::io
