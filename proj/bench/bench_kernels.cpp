// Times the OpenMP kernels against their serial references.
// Usage: bench_kernels [repetitions]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>

#include <omp.h>

#include "tabloid/criteria.hpp"
#include "tabloid/kernels.hpp"

using namespace tabloid;

namespace {

template <class F>
double seconds(int repetitions, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < repetitions; ++i) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / repetitions;
}

void report(const std::string& kernel, const std::string& shape, double serial, double parallel, bool agree) {
  std::printf("%-12s %-14s serial %10.6f s  parallel %10.6f s  speedup %5.2fx  %s\n", kernel.c_str(), shape.c_str(),
              serial, parallel, parallel > 0 ? serial / parallel : 0.0, agree ? "agree" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int repetitions = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
  std::printf("threads: %d, repetitions: %d\n", omp_get_max_threads(), repetitions);
  bool all_agree = true;

  const std::vector<std::pair<std::string, std::vector<std::size_t>>> shapes = {
      {"(2,2,2,2)", {2, 2, 2, 2}}, {"(1,1,1,1,1,1)", {1, 1, 1, 1, 1, 1}}, {"(2,3,3)", {2, 3, 3}}};
  for (const auto& [label, parts] : shapes) {
    Composition c(parts);
    const auto space = BallotSpace::make(CandidateSet::standard(c.total()), std::move(c));
    std::vector<Rational> w;
    for (std::size_t i = 0; i < parts.size(); ++i) w.emplace_back(static_cast<long>(parts.size() - i));
    const kernels::BallotFunction f = [&](const Ballot& b) -> Rational { return w[b.row(0)] - w[b.row(1)]; };

    Profile ps(space), pp(space);
    const double ms = seconds(repetitions, [&] { ps = kernels::serial::materialize(space, f); });
    const double mp = seconds(repetitions, [&] { pp = kernels::materialize(space, f); });
    all_agree = all_agree && ps == pp;
    report("materialize", label, ms, mp, ps == pp);

    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::uint64_t> index(0, space->size() - 1);
    std::uniform_int_distribution<long> coefficient(1, 9);
    Profile p(space);
    for (int i = 0; i < 20000; ++i) p += Profile::delta(space, space->unrank(index(rng)), Rational(coefficient(rng)));
    std::vector<Rational> ts, tp;
    const double ts_time = seconds(repetitions, [&] { ts = kernels::serial::tally(p, w); });
    const double tp_time = seconds(repetitions, [&] { tp = kernels::tally(p, w); });
    all_agree = all_agree && ts == tp;
    report("tally", label, ts_time, tp_time, ts == tp);

    PairCounts cs, cp;
    const double cs_time = seconds(repetitions, [&] { cs = kernels::serial::pair_counts(p, 0, 1); });
    const double cp_time = seconds(repetitions, [&] { cp = kernels::pair_counts(p, 0, 1); });
    const bool counts_agree = cs.above == cp.above && cs.below == cp.below;
    all_agree = all_agree && counts_agree;
    report("pair_counts", label, cs_time, cp_time, counts_agree);
  }

  {
    Composition c({1, 1, 1, 1});
    const auto space = BallotSpace::make(CandidateSet::standard(4), std::move(c));
    const WeightVector w(std::vector<Rational>{Rational(3), Rational(2), Rational(1), Rational(0)});
    constexpr std::uint64_t budget = 200000;
    std::optional<CondorcetCounterexample> s, q;
    const double st = seconds(repetitions, [&] { s = find_condorcet_counterexample(space, w, budget, 7, Execution::Serial); });
    const double pt = seconds(repetitions, [&] { q = find_condorcet_counterexample(space, w, budget, 7, Execution::Parallel); });
    const bool agree = s.has_value() == q.has_value() && (!s || s->search_index == q->search_index);
    all_agree = all_agree && agree;
    report("condorcet", "(1,1,1,1)", st, pt, agree);
  }
  return all_agree ? 0 : 1;
}
