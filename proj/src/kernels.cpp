#include "tabloid/kernels.hpp"

#include <omp.h>

#include <algorithm>

#include "tabloid/error.hpp"

namespace tabloid::kernels {

namespace {

using Term = Profile::Term;

void check_weights(const Profile& p, std::span<const Rational> weights) {
  if (weights.size() != p.space().row_count()) {
    throw ValidationError("weight vector has " + std::to_string(weights.size()) + " entries, composition has " +
                          std::to_string(p.space().row_count()) + " parts");
  }
}

}  // namespace

Profile materialize(const SpacePtr& space, const BallotFunction& f) {
  space->require_within_cap();
  const std::uint64_t k = space->size();
  const int threads = std::max(1, std::min<int>(omp_get_max_threads(), static_cast<int>(std::min<std::uint64_t>(k, 1024))));
  std::vector<std::vector<Term>> chunks(static_cast<std::size_t>(threads));

#pragma omp parallel num_threads(threads)
  {
    const auto t = static_cast<std::uint64_t>(omp_get_thread_num());
    const std::uint64_t begin = k * t / static_cast<std::uint64_t>(threads);
    const std::uint64_t end = k * (t + 1) / static_cast<std::uint64_t>(threads);
    auto& out = chunks[t];
    if (begin < end) {
      Ballot b = space->unrank(begin);
      for (std::uint64_t i = begin; i < end; ++i) {
        Rational value = f(b);
        if (value != 0) out.push_back(Term{i, std::move(value)});
        BallotSpace::advance(b);
      }
    }
  }

  std::vector<Term> terms;
  for (auto& c : chunks) std::move(c.begin(), c.end(), std::back_inserter(terms));
  return Profile(space, std::move(terms));
}

std::vector<Rational> tally(const Profile& p, std::span<const Rational> weights) {
  check_weights(p, weights);
  const auto& space = p.space();
  const std::size_t n = space.candidate_count();
  const auto terms = p.terms();
  const auto count = static_cast<std::int64_t>(terms.size());
  std::vector<Rational> scores(n, 0);

#pragma omp parallel
  {
    std::vector<Rational> local(n, 0);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
      const auto& term = terms[static_cast<std::size_t>(i)];
      const Ballot b = space.unrank(term.index);
      for (std::size_t x = 0; x < n; ++x) local[x] += term.coefficient * weights[b.row(x)];
    }
#pragma omp critical(tabloid_tally_merge)
    for (std::size_t x = 0; x < n; ++x) scores[x] += local[x];
  }
  return scores;
}

PairCounts pair_counts(const Profile& p, std::size_t x, std::size_t y) {
  const auto& space = p.space();
  const auto terms = p.terms();
  const auto count = static_cast<std::int64_t>(terms.size());
  PairCounts result{0, 0};

#pragma omp parallel
  {
    Rational above = 0;
    Rational below = 0;
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
      const auto& term = terms[static_cast<std::size_t>(i)];
      const Ballot b = space.unrank(term.index);
      if (b.row(x) < b.row(y)) {
        above += term.coefficient;
      } else if (b.row(x) > b.row(y)) {
        below += term.coefficient;
      }
    }
#pragma omp critical(tabloid_pair_merge)
    {
      result.above += above;
      result.below += below;
    }
  }
  return result;
}

namespace serial {

Profile materialize(const SpacePtr& space, const BallotFunction& f) {
  space->require_within_cap();
  std::vector<Term> terms;
  Ballot b = space->first();
  std::uint64_t i = 0;
  do {
    Rational value = f(b);
    if (value != 0) terms.push_back(Term{i, std::move(value)});
    ++i;
  } while (BallotSpace::advance(b));
  return Profile(space, std::move(terms));
}

std::vector<Rational> tally(const Profile& p, std::span<const Rational> weights) {
  check_weights(p, weights);
  const auto& space = p.space();
  std::vector<Rational> scores(space.candidate_count(), 0);
  for (const auto& term : p.terms()) {
    const Ballot b = space.unrank(term.index);
    for (std::size_t x = 0; x < scores.size(); ++x) scores[x] += term.coefficient * weights[b.row(x)];
  }
  return scores;
}

PairCounts pair_counts(const Profile& p, std::size_t x, std::size_t y) {
  const auto& space = p.space();
  PairCounts result{0, 0};
  for (const auto& term : p.terms()) {
    const Ballot b = space.unrank(term.index);
    if (b.row(x) < b.row(y)) {
      result.above += term.coefficient;
    } else if (b.row(x) > b.row(y)) {
      result.below += term.coefficient;
    }
  }
  return result;
}

}  // namespace serial

}  // namespace tabloid::kernels
