// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#include "tetherhop/evo/nsga2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace tetherhop::evo {

void GAParams::validate() const {
  if (pop_A < 2) throw std::invalid_argument("GAParams: pop_A must be >= 2");
  if (off_B < 1) throw std::invalid_argument("GAParams: off_B must be >= 1");
  if (p_cross < 0.0 || p_cross > 1.0 || p_mut < 0.0 || p_mut > 1.0)
    throw std::invalid_argument("GAParams: probabilities must be in [0, 1]");
  if (generations < 1)
    throw std::invalid_argument("GAParams: generations must be >= 1");
  double wsum = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw std::invalid_argument("GAParams: weights must be >= 0");
    wsum += w;
  }
  if (std::abs(wsum - 1.0) > 1e-9)
    throw std::invalid_argument("GAParams: weights must sum to 1");
}

bool dominates(const EvalResult& a, const EvalResult& b) {
  if (a.feasible && !b.feasible) return true;
  if (!a.feasible) return false;
  const bool ge = a.f1 >= b.f1 && a.f2 <= b.f2 && a.f3 <= b.f3;
  const bool strict = a.f1 > b.f1 || a.f2 < b.f2 || a.f3 < b.f3;
  return ge && strict;
}

SortResult nondominated_sort(const std::vector<EvalResult>& results) {
  const int n = static_cast<int>(results.size());
  if (n == 0) throw std::invalid_argument("nondominated_sort: empty input");

  SortResult out;
  out.rank.assign(n, -1);
  out.crowding.assign(n, 0.0);

  // Deb's fast non-dominated sort.
  std::vector<std::vector<int>> dominated(n);
  std::vector<int> dom_count(n, 0);
  std::vector<int> current;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (dominates(results[i], results[j])) {
        dominated[i].push_back(j);
      } else if (dominates(results[j], results[i])) {
        ++dom_count[i];
      }
    }
    if (dom_count[i] == 0) {
      out.rank[i] = 0;
      current.push_back(i);
    }
  }
  int level = 0;
  while (!current.empty()) {
    out.fronts.push_back(current);
    std::vector<int> next;
    for (int i : current) {
      for (int j : dominated[i]) {
        if (--dom_count[j] == 0) {
          out.rank[j] = level + 1;
          next.push_back(j);
        }
      }
    }
    current = std::move(next);
    ++level;
  }

  // Crowding distance per front, summed over the three objectives.
  const double inf = std::numeric_limits<double>::infinity();
  for (const auto& front : out.fronts) {
    if (front.size() <= 2) {
      for (int i : front) out.crowding[i] = inf;
      continue;
    }
    for (int obj = 0; obj < 3; ++obj) {
      auto value = [&](int i) {
        return obj == 0 ? results[i].f1 : obj == 1 ? results[i].f2
                                                   : results[i].f3;
      };
      std::vector<int> order = front;
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (value(a) != value(b)) return value(a) < value(b);
        return a < b;
      });
      const double spread = value(order.back()) - value(order.front());
      out.crowding[order.front()] = inf;
      out.crowding[order.back()] = inf;
      if (spread <= 0.0) continue;
      for (std::size_t k = 1; k + 1 < order.size(); ++k) {
        if (std::isinf(out.crowding[order[k]])) continue;
        out.crowding[order[k]] +=
            (value(order[k + 1]) - value(order[k - 1])) / spread;
      }
    }
  }
  return out;
}

std::vector<double> scalar_fitness(const std::vector<EvalResult>& results,
                                   const std::array<double, 3>& weights) {
  if (results.empty())
    throw std::invalid_argument("scalar_fitness: empty generation");

  std::array<double, 3> lo{}, hi{};
  for (int obj = 0; obj < 3; ++obj) {
    lo[obj] = std::numeric_limits<double>::infinity();
    hi[obj] = -std::numeric_limits<double>::infinity();
  }
  auto value = [](const EvalResult& r, int obj) {
    return obj == 0 ? r.f1 : obj == 1 ? r.f2 : r.f3;
  };
  for (const auto& r : results) {
    for (int obj = 0; obj < 3; ++obj) {
      lo[obj] = std::min(lo[obj], value(r, obj));
      hi[obj] = std::max(hi[obj], value(r, obj));
    }
  }

  std::vector<double> fitness(results.size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    double f = 0.0;
    for (int obj = 0; obj < 3; ++obj) {
      const double spread = hi[obj] - lo[obj];
      double norm =
          spread > 0.0 ? (value(results[i], obj) - lo[obj]) / spread : 0.5;
      if (obj > 0) norm = 1.0 - norm; // minimized objectives
      f += weights[obj] * norm;
    }
    fitness[i] = f;
  }
  return fitness;
}

namespace {

struct Individual {
  std::vector<std::uint8_t> bits;
  EvalResult result;
};

class EvalCache {
 public:
  explicit EvalCache(const EvalFn& fn) : fn_(fn) {}

  EvalResult operator()(const std::vector<std::uint8_t>& bits) {
    std::string key(bits.begin(), bits.end());
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    EvalResult result = fn_(bits);
    cache_.emplace(std::move(key), result);
    return result;
  }

 private:
  const EvalFn& fn_;
  std::unordered_map<std::string, EvalResult> cache_;
};

}  // namespace

EvoHistory evolve_core(const GAParams& params, int genotype_bits,
                       const EvalFn& evaluate) {
  params.validate();
  if (genotype_bits < 1)
    throw std::invalid_argument("evolve_core: genotype_bits must be >= 1");

  std::mt19937_64 rng(params.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> bit_dist(0, 1);
  EvalCache cached_eval(evaluate);

  std::vector<Individual> pop(params.pop_A);
  for (auto& ind : pop) {
    ind.bits.resize(genotype_bits);
    for (auto& b : ind.bits) b = static_cast<std::uint8_t>(bit_dist(rng));
    ind.result = cached_eval(ind.bits);
  }

  auto results_of = [](const std::vector<Individual>& v) {
    std::vector<EvalResult> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].result;
    return r;
  };

  EvoHistory history;
  SortResult sorted = nondominated_sort(results_of(pop));

  auto record_generation = [&](const std::vector<Individual>& v,
                               const SortResult& s) {
    const std::vector<double> fitness =
        scalar_fitness(results_of(v), params.weights);
    std::vector<IndividualRecord> gen(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      gen[i].bits = v[i].bits;
      gen[i].result = v[i].result;
      gen[i].rank = s.rank[i];
      gen[i].crowding = s.crowding[i];
      gen[i].fitness = fitness[i];
    }
    history.generations.push_back(std::move(gen));
  };

  record_generation(pop, sorted);

  for (int gen = 1; gen < params.generations; ++gen) {
    // Binary tournament on (rank asc, crowding desc).
    std::uniform_int_distribution<int> pick(0, params.pop_A - 1);
    auto tournament = [&]() {
      const int a = pick(rng);
      const int b = pick(rng);
      if (sorted.rank[a] != sorted.rank[b])
        return sorted.rank[a] < sorted.rank[b] ? a : b;
      if (sorted.crowding[a] != sorted.crowding[b])
        return sorted.crowding[a] > sorted.crowding[b] ? a : b;
      return std::min(a, b);
    };

    std::vector<Individual> offspring;
    offspring.reserve(params.off_B);
    while (static_cast<int>(offspring.size()) < params.off_B) {
      std::vector<std::uint8_t> child_a = pop[tournament()].bits;
      std::vector<std::uint8_t> child_b = pop[tournament()].bits;
      if (genotype_bits > 1 && unit(rng) < params.p_cross) {
        std::uniform_int_distribution<int> cut(1, genotype_bits - 1);
        const int point = cut(rng);
        for (int k = point; k < genotype_bits; ++k)
          std::swap(child_a[k], child_b[k]);
      }
      for (auto* child : {&child_a, &child_b}) {
        for (auto& b : *child) {
          if (unit(rng) < params.p_mut) b = b ? 0 : 1;
        }
        if (static_cast<int>(offspring.size()) < params.off_B) {
          Individual ind;
          ind.bits = std::move(*child);
          ind.result = cached_eval(ind.bits);
          offspring.push_back(std::move(ind));
        }
      }
    }

    // Combined survival: top pop_A of parents + offspring by
    // (rank, crowding).
    std::vector<Individual> combined = pop;
    combined.insert(combined.end(), offspring.begin(), offspring.end());
    const SortResult csort = nondominated_sort(results_of(combined));

    std::vector<Individual> survivors;
    survivors.reserve(params.pop_A);
    for (const auto& front : csort.fronts) {
      if (static_cast<int>(survivors.size() + front.size()) <=
          params.pop_A) {
        for (int i : front) survivors.push_back(combined[i]);
      } else {
        std::vector<int> order = front;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
          if (csort.crowding[a] != csort.crowding[b])
            return csort.crowding[a] > csort.crowding[b];
          return a < b;
        });
        for (int i : order) {
          if (static_cast<int>(survivors.size()) >= params.pop_A) break;
          survivors.push_back(combined[i]);
        }
      }
      if (static_cast<int>(survivors.size()) >= params.pop_A) break;
    }

    pop = std::move(survivors);
    sorted = nondominated_sort(results_of(pop));
    record_generation(pop, sorted);
  }

  // Final archive: feasible rank-0 individuals, deduplicated by bits.
  std::vector<std::string> seen;
  const auto& last = history.generations.back();
  for (const auto& rec : last) {
    if (rec.rank != 0 || !rec.result.feasible) continue;
    std::string key(rec.bits.begin(), rec.bits.end());
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(std::move(key));
    history.archive.push_back(rec);
  }
  return history;
}

}  // namespace tetherhop::evo
