#include "tabloid/ballot.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "tabloid/error.hpp"

namespace tabloid {

using u128 = unsigned __int128;

CandidateSet::CandidateSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw ValidationError("candidate set must not be empty");
  std::set<std::string_view> seen;
  for (const auto& name : names_) {
    if (name.empty()) throw ValidationError("candidate names must be nonempty");
    if (!seen.insert(name).second) throw ValidationError("duplicate candidate '" + name + "'");
  }
  if (names_.size() > std::numeric_limits<std::uint16_t>::max()) {
    throw ValidationError("too many candidates");
  }
}

CandidateSet CandidateSet::standard(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(n <= 26 ? std::string(1, static_cast<char>('A' + i)) : "C" + std::to_string(i + 1));
  }
  return CandidateSet(std::move(names));
}

std::optional<std::size_t> CandidateSet::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t CandidateSet::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw ValidationError("unknown candidate '" + std::string(name) + "'");
}

std::uint64_t multinomial(std::span<const std::size_t> parts) {
  // Product of binomials C(running, part), each step exact in 128 bits.
  u128 result = 1;
  std::size_t running = 0;
  for (std::size_t part : parts) {
    for (std::size_t i = 1; i <= part; ++i) {
      ++running;
      result = result * running;
      result /= i;
      if (result > std::numeric_limits<std::uint64_t>::max()) {
        throw ValidationError("ballot space too large to index with 64 bits");
      }
    }
  }
  return static_cast<std::uint64_t>(result);
}

Composition::Composition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw ValidationError("composition must have at least one part");
  for (std::size_t p : parts_) {
    if (p == 0) throw ValidationError("composition parts must be positive");
  }
  total_ = std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
  ballot_count_ = multinomial(parts_);
}

BallotSpace::BallotSpace(CandidateSet candidates, Composition composition, std::uint64_t cap)
    : candidates_(std::move(candidates)), composition_(std::move(composition)), cap_(cap) {
  if (composition_.total() != candidates_.size()) {
    throw ValidationError("composition sums to " + std::to_string(composition_.total()) + " but there are " +
                          std::to_string(candidates_.size()) + " candidates");
  }
}

std::shared_ptr<const BallotSpace> BallotSpace::make(CandidateSet candidates, Composition composition,
                                                     std::uint64_t cap) {
  return std::make_shared<const BallotSpace>(std::move(candidates), std::move(composition), cap);
}

void BallotSpace::require_within_cap() const {
  if (size() > cap_) throw CapExceeded(size(), cap_);
}

void BallotSpace::require_candidate(std::size_t candidate) const {
  if (candidate >= candidate_count()) {
    throw ValidationError("candidate index " + std::to_string(candidate) + " out of range");
  }
}

void BallotSpace::require_distinct_pair(std::size_t x, std::size_t y) const {
  require_candidate(x);
  require_candidate(y);
  if (x == y) throw ValidationError("pair requires two distinct candidates, got " + candidates_.name(x) + " twice");
}

Ballot BallotSpace::first() const {
  std::vector<std::uint16_t> rows;
  rows.reserve(candidate_count());
  for (std::size_t r = 0; r < row_count(); ++r) {
    rows.insert(rows.end(), composition_.part(r), static_cast<std::uint16_t>(r));
  }
  return Ballot(std::move(rows));
}

bool BallotSpace::advance(Ballot& ballot) {
  auto& rows = ballot.mutable_rows();
  return std::next_permutation(rows.begin(), rows.end());
}

std::vector<Ballot> BallotSpace::enumerate() const {
  require_within_cap();
  std::vector<Ballot> ballots;
  ballots.reserve(size());
  Ballot b = first();
  do {
    ballots.push_back(b);
  } while (advance(b));
  return ballots;
}

void BallotSpace::validate(const Ballot& ballot) const {
  if (ballot.rows().size() != candidate_count()) {
    throw ValidationError("ballot assigns " + std::to_string(ballot.rows().size()) + " candidates, expected " +
                          std::to_string(candidate_count()));
  }
  std::vector<std::size_t> counts(row_count(), 0);
  for (auto r : ballot.rows()) {
    if (r >= row_count()) throw ValidationError("ballot row " + std::to_string(r + 1) + " out of range");
    ++counts[r];
  }
  if (counts != composition_.parts()) throw ValidationError("ballot row sizes do not match the composition");
}

std::uint64_t BallotSpace::rank(const Ballot& ballot) const {
  validate(ballot);
  std::vector<std::size_t> counts = composition_.parts();
  std::size_t remaining = candidate_count();
  u128 block = size();  // ballots sharing the prefix fixed so far
  u128 index = 0;
  for (std::size_t i = 0; i < candidate_count(); ++i) {
    const std::size_t row = ballot.row(i);
    for (std::size_t r = 0; r < row; ++r) {
      if (counts[r] > 0) index += block * counts[r] / remaining;
    }
    block = block * counts[row] / remaining;
    --counts[row];
    --remaining;
  }
  return static_cast<std::uint64_t>(index);
}

Ballot BallotSpace::unrank(std::uint64_t index) const {
  if (index >= size()) {
    throw ValidationError("ballot index " + std::to_string(index) + " out of range [0, " + std::to_string(size()) +
                          ")");
  }
  std::vector<std::size_t> counts = composition_.parts();
  std::vector<std::uint16_t> rows(candidate_count());
  std::size_t remaining = candidate_count();
  u128 block = size();
  u128 rest = index;
  for (std::size_t i = 0; i < candidate_count(); ++i) {
    for (std::size_t r = 0; r < row_count(); ++r) {
      if (counts[r] == 0) continue;
      const u128 sub = block * counts[r] / remaining;
      if (rest < sub) {
        rows[i] = static_cast<std::uint16_t>(r);
        block = sub;
        --counts[r];
        break;
      }
      rest -= sub;
    }
    --remaining;
  }
  return Ballot(std::move(rows));
}

std::size_t BallotSpace::evaluate(const Ballot& ballot, std::size_t candidate) const {
  require_candidate(candidate);
  return ballot.row(candidate) + 1;
}

std::size_t BallotSpace::evaluate(const Ballot& ballot, std::string_view candidate) const {
  return evaluate(ballot, candidates_.index_of(candidate));
}

Ballot BallotSpace::permute(const Permutation& tau, const Ballot& ballot) const {
  if (tau.size() != candidate_count()) throw ValidationError("permutation size does not match candidate count");
  std::vector<std::uint16_t> rows(candidate_count());
  for (std::size_t x = 0; x < candidate_count(); ++x) rows[x] = ballot.rows()[tau(x)];
  return Ballot(std::move(rows));
}

Ballot BallotSpace::from_rows(const std::vector<std::vector<std::string>>& rows) const {
  if (rows.size() != row_count()) {
    throw ValidationError("tabloid has " + std::to_string(rows.size()) + " rows, composition has " +
                          std::to_string(row_count()));
  }
  constexpr auto unset = std::numeric_limits<std::uint16_t>::max();
  std::vector<std::uint16_t> assignment(candidate_count(), unset);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != composition_.part(r)) {
      throw ValidationError("row " + std::to_string(r + 1) + " has " + std::to_string(rows[r].size()) +
                            " candidates, composition requires " + std::to_string(composition_.part(r)));
    }
    for (const auto& name : rows[r]) {
      const std::size_t x = candidates_.index_of(name);
      if (assignment[x] != unset) throw ValidationError("candidate '" + name + "' appears twice in a tabloid");
      assignment[x] = static_cast<std::uint16_t>(r);
    }
  }
  return Ballot(std::move(assignment));
}

std::vector<std::vector<std::string>> BallotSpace::to_rows(const Ballot& ballot) const {
  std::vector<std::vector<std::string>> rows(row_count());
  for (std::size_t x = 0; x < candidate_count(); ++x) rows[ballot.row(x)].push_back(candidates_.name(x));
  return rows;
}

std::string BallotSpace::format(const Ballot& ballot) const {
  std::string out;
  auto rows = to_rows(ballot);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r > 0) out += " | ";
    for (std::size_t i = 0; i < rows[r].size(); ++i) {
      if (i > 0) out += ' ';
      out += rows[r][i];
    }
  }
  return out;
}

std::uint64_t BallotSpace::pair_placement_count(std::size_t row_x, std::size_t row_y) const {
  if (row_x >= row_count() || row_y >= row_count()) throw ValidationError("row out of range");
  std::vector<std::size_t> counts = composition_.parts();
  if (counts[row_x] == 0) return 0;
  --counts[row_x];
  if (counts[row_y] == 0) return 0;
  --counts[row_y];
  return multinomial(counts);
}

std::uint64_t BallotSpace::placement_count(std::size_t row) const {
  if (row >= row_count()) throw ValidationError("row out of range");
  std::vector<std::size_t> counts = composition_.parts();
  --counts[row];
  return multinomial(counts);
}

}  // namespace tabloid
