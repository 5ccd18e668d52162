#include "tabloid/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "tabloid/error.hpp"
#include "tabloid/kernels.hpp"

namespace tabloid {

namespace {

// Lowest-index ballot with X in row_x and Y in row_y; the rest fill rows greedily.
Ballot ballot_with(const BallotSpace& space, std::size_t x, std::size_t row_x, std::size_t y, std::size_t row_y) {
  std::vector<std::size_t> capacity = space.composition().parts();
  if (capacity[row_x] == 0) throw ValidationError("row has no room");
  --capacity[row_x];
  if (capacity[row_y] == 0) throw ValidationError("row has no room");
  --capacity[row_y];
  std::vector<std::uint16_t> rows(space.candidate_count());
  std::size_t next = 0;
  for (std::size_t c = 0; c < rows.size(); ++c) {
    if (c == x) {
      rows[c] = static_cast<std::uint16_t>(row_x);
    } else if (c == y) {
      rows[c] = static_cast<std::uint16_t>(row_y);
    } else {
      while (capacity[next] == 0) ++next;
      rows[c] = static_cast<std::uint16_t>(next);
      --capacity[next];
    }
  }
  return Ballot(std::move(rows));
}

// Positive rescaling of p to coprime integer coefficients.
Profile integer_multiple(const Profile& p) {
  mpz_class lcm = 1;
  for (const auto& t : p.terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), t.coefficient.get_den_mpz_t());
  Profile scaled = Rational(lcm) * p;
  mpz_class gcd = 0;
  for (const auto& t : scaled.terms()) mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), t.coefficient.get_num_mpz_t());
  if (gcd > 1) scaled *= Rational(mpz_class(1), gcd);
  return scaled;
}

Rational max_abs_coefficient(const Profile& p) {
  Rational best = 0;
  for (const auto& t : p.terms()) best = std::max(best, Rational(abs(t.coefficient)));
  return best;
}

std::string trivial_note() { return "trivial CWF: every tally is an all-way tie"; }

// n x n matrix of p . r_{X>Y}, one pass over the support.
std::vector<std::vector<Rational>> pairwise_margins(const Profile& p) {
  const auto& space = p.space();
  const std::size_t n = space.candidate_count();
  std::vector<std::vector<Rational>> margin(n, std::vector<Rational>(n, 0));
  for (const auto& t : p.terms()) {
    const Ballot b = space.unrank(t.index);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (b.row(x) < b.row(y)) margin[x][y] += t.coefficient;
        if (b.row(x) > b.row(y)) margin[x][y] -= t.coefficient;
      }
    }
  }
  return margin;
}

std::optional<std::size_t> condorcet_from_margins(const std::vector<std::vector<Rational>>& margin) {
  const std::size_t n = margin.size();
  for (std::size_t x = 0; x < n; ++x) {
    bool beats_all = true;
    for (std::size_t y = 0; y < n && beats_all; ++y) {
      if (y != x && margin[x][y] <= 0) beats_all = false;
    }
    if (beats_all) return x;
  }
  return std::nullopt;
}

Witness make_witness(std::size_t x, std::size_t y, const WeightVector& w,
                     std::vector<std::pair<std::string, Profile>> profiles) {
  Witness witness{x, y, std::move(profiles), {}};
  for (const auto& [label, profile] : witness.profiles) witness.scores.emplace_back(label, tally(w, profile));
  return witness;
}

}  // namespace

std::string CriterionVerdict::status() const {
  if (!holds) return "fails";
  return conclusive ? "holds" : "no_counterexample_within_budget";
}

bool unique_winner(const Scoreboard& scores, std::size_t candidate) {
  for (std::size_t z = 0; z < scores.size(); ++z) {
    if (z != candidate && scores[z] >= scores[candidate]) return false;
  }
  return true;
}

bool xy_equivalent(const Profile& p, const Profile& q, std::size_t x, std::size_t y) {
  p.require_same_space(q);
  const PairCounts d = pair_counts(p - q, x, y);
  return d.above == 0 && d.below == 0;
}

bool xy_equivalent(const FloatProfile& p, const FloatProfile& q, std::size_t x, std::size_t y, double eps) {
  p.require_same_space(q);
  const auto& space = p.space();
  space.require_distinct_pair(x, y);
  double above = 0.0;
  double below = 0.0;
  Ballot b = space.first();
  std::uint64_t i = 0;
  do {
    const double d = p[i] - q[i];
    if (b.row(x) < b.row(y)) above += d;
    if (b.row(x) > b.row(y)) below += d;
    ++i;
  } while (BallotSpace::advance(b));
  return std::abs(above) <= eps && std::abs(below) <= eps;
}

FloatProfile rotation_correction(const FloatProfile& p, const AxisRotation& rotation, std::size_t x, std::size_t y) {
  const SpacePtr& space = p.space_ptr();
  rotation.axis().require_same_space(p);
  const FloatProfile r = FloatProfile::from(r_vector(space, x, y));
  const double alignment = std::abs(inner_product(r, rotation.axis())) / (r.norm() * rotation.axis().norm());
  if (alignment < 1.0 - boundary_epsilon) throw ValidationError("rotation axis is not r_{X>Y}");

  // q = ((p - T(p)) . a_{X>Y} / (1 . a_{X>Y})) * 1
  const FloatProfile moved = apply_rotation(rotation, p);
  double numerator = 0.0;
  double denominator = 0.0;
  Ballot b = space->first();
  std::uint64_t i = 0;
  do {
    if (b.row(x) < b.row(y)) {
      numerator += p[i] - moved[i];
      denominator += 1.0;
    }
    ++i;
  } while (BallotSpace::advance(b));
  const double c = numerator / denominator;
  return FloatProfile(space, std::vector<double>(space->size(), c));
}

std::optional<IIACounterexample> iia_counterexample(const SpacePtr& space, const WeightVector& w, std::size_t x,
                                                    std::size_t y) {
  w.require_compatible(*space);
  space->require_distinct_pair(x, y);
  if (w.is_trivial()) return std::nullopt;

  const Profile v = v_diff(space, w, x, y);
  const Profile above = a_vector(space, x, y);
  const Profile below = a_vector(space, y, x);
  const Rational count(static_cast<unsigned long>(above.support_size()));
  const Rational along_above = inner_product(v, above) / count;
  const Rational along_below = inner_product(v, below) / count;
  Profile d = v - along_above * above - along_below * below;
  if (d.is_zero()) return std::nullopt;

  d = integer_multiple(d);
  const Profile base = max_abs_coefficient(d) * unit_profile(space);
  return IIACounterexample{base + d, base - d, d};
}

CriterionVerdict iia_check(const SpacePtr& space, const WeightVector& w) {
  w.require_compatible(*space);
  CriterionVerdict verdict{"iia", true, true, std::nullopt, {}};
  if (space->candidate_count() < 2) {
    verdict.notes.push_back("fewer than two candidates: holds vacuously");
    return verdict;
  }
  if (w.is_trivial()) {
    verdict.notes.push_back(trivial_note() + "; IIA holds vacuously");
    return verdict;
  }
  auto ce = iia_counterexample(space, w, 0, 1);
  if (!ce) {
    verdict.notes.push_back("v_{X>Y} is a multiple of r_{X>Y}: X,Y-equivalent profiles keep the X-Y order");
    return verdict;
  }
  verdict.holds = false;
  verdict.witness = make_witness(0, 1, w, {{"p", ce->p}, {"q", ce->q}});
  verdict.notes.push_back("p and q are X,Y-equivalent but p . v_{X>Y} > 0 > q . v_{X>Y}");
  return verdict;
}

CriterionVerdict pareto_check(const SpacePtr& space, const WeightVector& w) {
  w.require_compatible(*space);
  CriterionVerdict verdict{"pareto", true, true, std::nullopt, {}};
  if (w.is_trivial()) verdict.notes.push_back(trivial_note());
  if (space->candidate_count() < 2) {
    verdict.notes.push_back("fewer than two candidates: holds vacuously");
    return verdict;
  }
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) continue;
    const Ballot b = ballot_with(*space, 0, i, 1, i + 1);
    verdict.holds = false;
    verdict.witness = make_witness(0, 1, w, {{"p", Profile::delta(space, b)}});
    verdict.notes.push_back("w(" + std::to_string(i + 1) + ") <= w(" + std::to_string(i + 2) +
                            "): a single ballot ranking X above Y does not give X more points");
    return verdict;
  }
  verdict.notes.push_back("w is strictly decreasing");
  return verdict;
}

std::optional<Profile> strong_majority_witness(const SpacePtr& space, const WeightVector& w, std::size_t x,
                                               std::size_t y) {
  w.require_compatible(*space);
  space->require_distinct_pair(x, y);
  const std::size_t m = w.size();
  if (m < 2) return std::nullopt;

  // On the class C(i, j) of ballots with X in row i and Y in row j, r_{X>Y} is
  // sign(j - i) and v_{X>Y} is w(i) - w(j). Every class is nonempty when i != j.
  struct Cell {
    std::size_t row_x, row_y;
    int margin;
    Rational gap;
  };
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j) cells.push_back(Cell{i, j, i < j ? 1 : -1, w[i] - w[j]});
    }
  }
  auto representative = [&](const Cell& c) { return space->rank(ballot_with(*space, x, c.row_x, y, c.row_y)); };
  std::sort(cells.begin(), cells.end(),
            [&](const Cell& a, const Cell& b) { return representative(a) < representative(b); });

  auto build = [&](std::vector<std::pair<const Cell*, Rational>> parts) {
    std::vector<Profile::Term> terms;
    for (auto& [cell, c] : parts) terms.push_back(Profile::Term{representative(*cell), c});
    return Profile(space, std::move(terms));
  };

  // Smallest-height violation over at most two classes with coefficients 1..5;
  // strict (X outscored) preferred over a tie.
  for (bool strict : {true, false}) {
    for (int h = 1; h <= 10; ++h) {
      for (const auto& a : cells) {
        if (h <= 5 && a.margin * h > 0 && (strict ? h * a.gap < 0 : h * a.gap <= 0)) return build({{&a, h}});
      }
      for (std::size_t ia = 0; ia < cells.size(); ++ia) {
        for (std::size_t ib = ia + 1; ib < cells.size(); ++ib) {
          for (int ca = std::max(1, h - 5); ca <= std::min(5, h - 1); ++ca) {
            const int cb = h - ca;
            const int margin = ca * cells[ia].margin + cb * cells[ib].margin;
            const Rational gap = ca * cells[ia].gap + cb * cells[ib].gap;
            if (margin > 0 && (strict ? gap < 0 : gap <= 0)) return build({{&cells[ia], ca}, {&cells[ib], cb}});
          }
        }
      }
    }
  }

  // Larger coefficients: among classes with X above Y take the smallest gap d1
  // and the largest d2 > d1. Then (c + 1) C(i1, j1) + c C(j2, i2) has margin 1
  // and gap d1 - c (d2 - d1), negative once c > d1 / (d2 - d1).
  const Cell* low = nullptr;
  const Cell* high = nullptr;
  for (const auto& c : cells) {
    if (c.margin < 0) continue;
    if (!low || c.gap < low->gap) low = &c;
    if (!high || c.gap > high->gap) high = &c;
  }
  if (!low || low->gap >= high->gap) return std::nullopt;
  const Rational ratio = low->gap / (high->gap - low->gap);
  mpz_class floor_ratio;
  mpz_fdiv_q(floor_ratio.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
  const Rational c = Rational(floor_ratio) + 1;
  const Cell* reversed = nullptr;
  for (const auto& cell : cells) {
    if (cell.row_x == high->row_y && cell.row_y == high->row_x) reversed = &cell;
  }
  return build({{low, c + 1}, {reversed, c}});
}

CriterionVerdict strong_majority_check(const SpacePtr& space, const WeightVector& w) {
  w.require_compatible(*space);
  CriterionVerdict verdict{"strong-majority", true, true, std::nullopt, {}};
  if (space->candidate_count() < 2 || w.size() < 2) {
    verdict.notes.push_back("no ballot separates two candidates, so there are no head-to-head wins: holds vacuously");
    if (w.is_trivial()) verdict.notes.push_back(trivial_note());
    return verdict;
  }
  if (w.is_trivial()) {
    const Ballot b = ballot_with(*space, 0, 0, 1, 1);
    verdict.holds = false;
    verdict.witness = make_witness(0, 1, w, {{"p", Profile::delta(space, b)}});
    verdict.notes.push_back(trivial_note() + ": head-to-head wins never become strict tally wins");
    return verdict;
  }
  // v_{X>Y} = c r_{X>Y} with c > 0 iff w(i) - w(j) is one positive constant over all i < j.
  const Rational c = w[0] - w[1];
  bool parallel = c > 0;
  for (std::size_t i = 0; i < w.size() && parallel; ++i) {
    for (std::size_t j = i + 1; j < w.size() && parallel; ++j) parallel = (w[i] - w[j]) == c;
  }
  if (parallel) {
    verdict.notes.push_back("v_{X>Y} = " + to_string(c) + " r_{X>Y}: head-to-head and tally agree");
    return verdict;
  }
  auto p = strong_majority_witness(space, w, 0, 1);
  if (!p) throw std::logic_error("strong majority fails but no witness was constructed");
  verdict.holds = false;
  verdict.witness = make_witness(0, 1, w, {{"p", *p}});
  verdict.notes.push_back("X beats Y head-to-head but does not outscore Y");
  return verdict;
}

Rational u_closed_form(const BallotSpace& space, const WeightVector& w) {
  w.require_compatible(space);
  Rational total = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      total += Rational(space.pair_placement_count(i, j)) * (w[i] - w[j]);
    }
  }
  return total;
}

Scoreboard u_vector(const SpacePtr& space, const WeightVector& w, std::size_t x, std::size_t y) {
  w.require_compatible(*space);
  space->require_distinct_pair(x, y);
  Scoreboard u = tally(w, r_vector(space, x, y));
  for (std::size_t z = 0; z < u.size(); ++z) {
    if (z != x && z != y && u[z] != 0) throw std::logic_error("u_{X>Y} is nonzero off {X, Y}");
  }
  if (u[x] != -u[y]) throw std::logic_error("u_{X>Y}(X) != -u_{X>Y}(Y)");
  if (u[x] != u_closed_form(*space, w)) throw std::logic_error("u_{X>Y}(X) differs from the closed form");
  return u;
}

std::optional<std::size_t> condorcet_candidate(const Profile& p) {
  const std::size_t n = p.space().candidate_count();
  for (std::size_t x = 0; x < n; ++x) {
    bool beats_all = true;
    for (std::size_t y = 0; y < n && beats_all; ++y) {
      if (y != x && pair_counts(p, x, y).margin() <= 0) beats_all = false;
    }
    if (beats_all) return x;
  }
  return std::nullopt;
}

std::optional<std::size_t> condorcet_candidate_by_orbit(const Profile& p) {
  const std::size_t n = p.space().candidate_count();
  if (n < 2) return std::nullopt;
  std::size_t orbit_bound = 1;
  for (std::size_t i = 2; i < n; ++i) {
    orbit_bound *= i;
    if (orbit_bound > p.space().cap()) throw CapExceeded(orbit_bound, p.space().cap());
  }
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t y = x == 0 ? 1 : 0;
    const auto generators = isotropy_generators(n, x);
    const auto members = orbit(p, generators, orbit_bound);
    const bool inside = std::all_of(members.begin(), members.end(),
                                    [&](const Profile& q) { return pair_counts(q, x, y).margin() > 0; });
    if (inside) return x;
  }
  return std::nullopt;
}

namespace {

constexpr int max_coefficient = 5;
constexpr std::uint64_t base = max_coefficient + 1;

struct SearchPlan {
  std::uint64_t prefix_ballots;  // ballots covered by the exhaustive phase
  std::uint64_t exhaustive;      // number of exhaustive profiles (nonzero vectors)
  std::uint64_t total;           // profiles examined overall
};

SearchPlan plan_search(const BallotSpace& space, std::uint64_t budget) {
  const std::uint64_t k = space.size();
  // Largest K with 6^K - 1 within the allowance; the whole space gets the full
  // budget, a proper prefix only half of it.
  std::uint64_t power = 1;
  std::uint64_t prefix = 0;
  while (prefix < k) {
    if (power > (std::numeric_limits<std::uint64_t>::max() - 1) / base) break;
    const std::uint64_t next = power * base;
    const std::uint64_t allowance = prefix + 1 == k ? budget : budget / 2;
    if (next - 1 > allowance) break;
    power = next;
    ++prefix;
  }
  const std::uint64_t exhaustive = power - 1;
  const std::uint64_t total = prefix == k ? exhaustive : budget;
  return SearchPlan{prefix, exhaustive, total};
}

Profile search_profile(const SpacePtr& space, const SearchPlan& plan, std::uint64_t seed, std::uint64_t index) {
  std::vector<Profile::Term> terms;
  if (index < plan.exhaustive) {
    std::uint64_t digits = index + 1;
    for (std::uint64_t b = 0; digits > 0; ++b, digits /= base) {
      if (digits % base != 0) terms.push_back(Profile::Term{b, static_cast<unsigned long>(digits % base)});
    }
    return Profile(space, std::move(terms));
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  const std::uint64_t k = space->size();
  std::uniform_int_distribution<std::uint64_t> support(1, std::min<std::uint64_t>(k, 6));
  std::uniform_int_distribution<std::uint64_t> ballot(0, k - 1);
  std::uniform_int_distribution<int> coefficient(1, max_coefficient);
  const std::uint64_t s = support(rng);
  for (std::uint64_t t = 0; t < s; ++t) {
    const std::uint64_t b = ballot(rng);
    terms.push_back(Profile::Term{b, coefficient(rng)});
  }
  return Profile(space, std::move(terms));
}

std::optional<std::size_t> failing_condorcet(const Profile& p, const WeightVector& w) {
  const auto x = condorcet_from_margins(pairwise_margins(p));
  if (!x) return std::nullopt;
  const Scoreboard scores{kernels::serial::tally(p, w.values())};
  if (unique_winner(scores, *x)) return std::nullopt;
  return x;
}

}  // namespace

Profile condorcet_search_profile(const SpacePtr& space, std::uint64_t budget, std::uint64_t seed,
                                 std::uint64_t index) {
  return search_profile(space, plan_search(*space, budget), seed, index);
}

std::optional<CondorcetCounterexample> find_condorcet_counterexample(const SpacePtr& space, const WeightVector& w,
                                                                     std::uint64_t budget, std::uint64_t seed,
                                                                     Execution execution) {
  w.require_compatible(*space);
  const SearchPlan plan = plan_search(*space, budget);
  auto found = [&](std::uint64_t index) {
    Profile p = search_profile(space, plan, seed, index);
    const auto x = failing_condorcet(p, w);
    return CondorcetCounterexample{std::move(p), *x, index};
  };

  if (execution == Execution::Serial) {
    for (std::uint64_t i = 0; i < plan.total; ++i) {
      if (failing_condorcet(search_profile(space, plan, seed, i), w)) return found(i);
    }
    return std::nullopt;
  }

  constexpr std::uint64_t block = 4096;
  constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t start = 0; start < plan.total; start += block) {
    const auto end = static_cast<std::int64_t>(std::min(plan.total, start + block));
    std::uint64_t best = none;
#pragma omp parallel for schedule(dynamic, 64) reduction(min : best)
    for (std::int64_t i = static_cast<std::int64_t>(start); i < end; ++i) {
      const auto index = static_cast<std::uint64_t>(i);
      if (index < best && failing_condorcet(search_profile(space, plan, seed, index), w)) best = index;
    }
    if (best != none) return found(best);
  }
  return std::nullopt;
}

CriterionVerdict condorcet_check(const SpacePtr& space, const WeightVector& w, std::uint64_t budget,
                                 std::uint64_t seed) {
  w.require_compatible(*space);
  CriterionVerdict verdict{"condorcet", true, true, std::nullopt, {}};
  if (w.is_trivial()) verdict.notes.push_back(trivial_note() + ", so a Condorcet candidate never wins outright");
  if (space->candidate_count() < 2) {
    verdict.notes.push_back("single candidate: holds vacuously");
    return verdict;
  }
  if (w.size() < 2) {
    verdict.notes.push_back("no ballot separates two candidates, so no Condorcet candidate exists: holds vacuously");
    return verdict;
  }

  auto fail_with = [&](const Profile& p, std::size_t x, std::string note) {
    const Scoreboard scores = tally(w, p);
    std::size_t rival = x == 0 ? 1 : 0;
    for (std::size_t z = 0; z < scores.size(); ++z) {
      if (z != x && scores[z] > scores[rival]) rival = z;
    }
    verdict.holds = false;
    verdict.witness = make_witness(x, rival, w, {{"p", p}});
    verdict.notes.push_back(std::move(note));
    return verdict;
  };

  const CriterionVerdict majority = strong_majority_check(space, w);
  if (!majority.holds && majority.witness) {
    const Profile& p = majority.witness->profiles.front().second;
    if (auto x = condorcet_candidate(p); x && !unique_winner(tally(w, p), *x)) {
      return fail_with(p, *x, "strong-majority witness re-verified: the Condorcet candidate is not the unique winner");
    }
  }
  if (auto ce = find_condorcet_counterexample(space, w, budget, seed)) {
    return fail_with(ce->profile, ce->condorcet,
                     "search index " + std::to_string(ce->search_index) +
                         ": the Condorcet candidate is not the unique winner");
  }
  verdict.conclusive = false;
  verdict.notes.push_back("no counterexample within budget of " + std::to_string(budget) + " profiles");
  if (majority.holds) {
    verdict.notes.push_back("strong majority holds, which implies the Condorcet criterion: a Condorcet candidate outscores every rival");
  }
  return verdict;
}

}  // namespace tabloid
