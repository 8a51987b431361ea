// Acceptance criteria: one line per criterion, all comparisons exact.
// A criterion also fails if it exceeds its wall-clock budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "f2v/block.hpp"
#include "f2v/correlations.hpp"
#include "f2v/oracle.hpp"
#include "f2v/transform.hpp"
#include "f2v/verify.hpp"

using namespace f2v;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

const VertexModel kRef = VertexModel::from_encoding("011001101");

std::vector<Gf2Matrix> class_matrices() {
  auto all = enumerate_matrices(MatrixClass::TwelveClass);
  const auto more = enumerate_matrices(MatrixClass::TwentySixClass);
  all.insert(all.end(), more.begin(), more.end());
  return all;
}

Outcome direct_sum() {
  std::size_t ok = 0;
  const auto list = class_matrices();
  for (const auto& a : list) ok += verify_direct_sum(VertexModel(a)).passed;
  return {ok == 38 && list.size() == 38, std::to_string(ok) + "/" + std::to_string(list.size()) + " matrices decompose"};
}

Outcome address_classes() {
  const Json r = run_suite("lemmas", VerifyOptions{});
  std::size_t induction = 0, counts = 0, bad = 0;
  for (const auto& c : r.at("checks")) {
    const auto name = c.at("name").get<std::string>();
    if (name != "address_class_induction" && name != "class_counts") continue;
    (name == "class_counts" ? counts : induction)++;
    if (!c.at("passed").get<bool>()) ++bad;
  }
  return {bad == 0 && induction == 4 && counts == 8,
          "induction n=1..4, closed-form counts n=1..8, " + std::to_string(bad) + " failures"};
}

Outcome low_order_spins() {
  std::size_t queries = 0, bad = 0;
  for (unsigned n = 1; n <= 3; ++n) {
    const CorrelationEngine engine(kRef, n);
    const auto oracle = cached_oracle(kRef, n);
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto expected = DyadicProbability::one_over_pow2(static_cast<unsigned>(k));
      for (const auto& idx : combinations(face_size(n), k)) {
        std::vector<EdgeAddress> edges;
        for (auto i : idx) edges.push_back(edge_at(i, n));
        ++queries;
        if (engine.probability_by_index(idx) != expected || oracle->probability(edges) != expected) ++bad;
      }
    }
  }
  return {bad == 0, std::to_string(queries) + " queries (n=1..3, k=1..3) by engine and oracle, " +
                        std::to_string(bad) + " mismatches"};
}

Outcome theorem() {
  VerifyOptions two;
  two.n_min = two.n_max = 2;
  const Json r2 = run_suite("theorem", two).at("checks").at(0);
  VerifyOptions three;
  three.n_min = three.n_max = 3;
  const Json r3 = run_suite("theorem", three).at("checks").at(0);
  const bool ok = r2.at("passed").get<bool>() && r2.at("quadruples") == 1820 && r3.at("passed").get<bool>() &&
                  r3.at("quadruples").get<std::size_t>() >= 500 && r3.at("squares") == square_quadruples(3).size();
  return {ok, "n=2: " + r2.at("quadruples").dump() + " quadruples, " + r2.at("squares").dump() + " squares; n=3: " +
                  r3.at("quadruples").dump() + " sampled incl. " + r3.at("squares").dump() +
                  " squares; predictor and oracle mismatches " +
                  std::to_string(r2.at("predictor_mismatches").get<std::size_t>() +
                                 r2.at("oracle_mismatches").get<std::size_t>() +
                                 r3.at("predictor_mismatches").get<std::size_t>() +
                                 r3.at("oracle_mismatches").get<std::size_t>())};
}

Outcome class_counts_check() {
  const Json r = run_suite("classes", VerifyOptions{});
  const Json& counts = r.at("checks").at(0);
  return {r.at("passed").get<bool>(), "TwelveClass " + counts.at("TwelveClass").dump() + ", TwentySixClass " +
                                          counts.at("TwentySixClass").dump() + ", H-closure of the listed six"};
}

Outcome twelve_uniform() {
  const Json r = scan_class(MatrixClass::TwelveClass, 2, 1);
  std::set<std::string> digests;
  for (const auto& m : r.at("matrices")) digests.insert(m.at("table_digest").get<std::string>());
  return {r.at("identical_tables").get<bool>() && r.at("matrices").size() == 12 && digests.size() == 1,
          std::to_string(r.at("matrices").size()) + " matrices, " + std::to_string(digests.size()) + " distinct table"};
}

Outcome twenty_six_independent() {
  const Json r = scan_class(MatrixClass::TwentySixClass, 2, 1);
  return {r.at("all_independent").get<bool>() && r.at("matrices").size() == 26,
          std::to_string(r.at("matrices").size()) + " matrices, every k<=4 query equals 1/2^k"};
}

Outcome fourier_machinery() {
  const Json r = run_suite("fourier", VerifyOptions{});
  std::size_t sum_kw = 0, prod = 0, duals = 0, bad = 0;
  for (const auto& c : r.at("checks")) {
    const auto name = c.at("name").get<std::string>();
    if (name == "subspace_sum_formula") sum_kw = c.at("instances");
    else if (name == "product_factorization") prod = c.at("instances");
    else if (name == "dual_transport") ++duals;
    else continue;
    if (!c.at("passed").get<bool>()) ++bad;
  }
  return {bad == 0 && sum_kw == 100 && prod == 20 && duals == 38,
          std::to_string(sum_kw) + " subspace sums, " + std::to_string(prod) + " products, " + std::to_string(duals) +
              " dual round trips, " + std::to_string(bad) + " failures"};
}

Outcome enumeration() {
  std::size_t checked = 0, bad = 0, queries = 0;
  for (auto cls : {MatrixClass::TwelveClass, MatrixClass::TwentySixClass}) {
    const auto list = enumerate_matrices(cls);
    for (std::size_t i = 0; i < list.size(); i += 4) {
      const auto r = enumerate_check(VertexModel(list[i]), 1);
      ++checked;
      queries += r.queries_checked;
      bad += !r.passed();
    }
  }
  return {bad == 0 && checked >= 5, std::to_string(checked) + " matrices, 4096 assignments each, " +
                                        std::to_string(queries) + " queries, " + std::to_string(bad) + " failures"};
}

Outcome independence() {
  std::size_t ok = 0;
  for (const auto& a : class_matrices()) ok += t_spin_independence_check(VertexModel(a), 1).independent;
  auto joint = t_spin_independence_check(kRef, 1).joint;
  std::size_t from = 0;
  while (joint.values[from].is_zero()) ++from;
  joint.values[from] -= Dyadic(1, 6);
  joint.values[from ^ 1U] += Dyadic(1, 6);
  const bool control = !joint_factorizes(joint);
  return {ok == 38 && control,
          std::to_string(ok) + "/38 factorize; perturbed control " + (control ? "rejected" : "NOT rejected")};
}

Outcome lemmas() {
  std::size_t hits = 0, bad = 0, admissible = 0;
  for (unsigned n = 1; n <= 3; ++n) {
    const auto r = lemma_m_check(n);
    hits += r.premise_hits;
    bad += r.counterexamples + !r.exhaustive;
  }
  for (const auto& a : enumerate_matrices(MatrixClass::TwelveClass)) {
    for (unsigned n = 1; n <= 4; ++n) {
      const auto r = lemma_k_check(VertexModel(a), n);
      admissible += r.admissible;
      bad += !r.passed();
    }
  }
  return {bad == 0, "equal-pairs lemma " + std::to_string(hits) + " premise hits; unity lemma " +
                        std::to_string(admissible) + " admissible pairs; " + std::to_string(bad) + " failures"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"direct-sum decomposition", 1, direct_sum},
      {"address classification", 1, address_classes},
      {"one-, two- and three-spin probabilities", 60, low_order_spins},
      {"four-spin theorem", 360, theorem},
      {"class counts", 1, class_counts_check},
      {"TwelveClass uniformity", 120, twelve_uniform},
      {"TwentySixClass independence", 120, twenty_six_independent},
      {"Fourier machinery", 30, fourier_machinery},
      {"enumeration ground truth", 30, enumeration},
      {"t-spin independence", 10, independence},
      {"lemma suite", 30, lemmas},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool within = secs <= criteria[i].budget_seconds;
    const bool ok = out.passed && within;
    failures += !ok;
    std::printf("%s criterion %2zu %-40s %s [%.3f s, budget %.0f s%s]\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].title, out.detail.c_str(), secs, criteria[i].budget_seconds, within ? "" : ", exceeded");
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
