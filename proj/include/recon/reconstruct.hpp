#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "recon/oracle.hpp"

namespace recon {

enum class Status { Unique, AmbiguousWitness };
std::string to_string(Status status);

struct ReconstructionResult {
  /// Canonical representative of the recovered class.
  Labeling labeling;
  Status status = Status::Unique;
  /// Every matching class when ambiguous (canonical representatives).
  std::vector<Labeling> candidates;
  std::int64_t sum_queries = 0;
  std::int64_t multiset_queries = 0;
  std::vector<QueryRecord> transcript;
};

struct SplitLI {
  Composition leaves;
  Composition internal;
};

/// Caches answers so each (kind, t) reaches the oracle at most once. A sum
/// asked after the multiset of the same order is derived from it for free.
class QuerySession {
 public:
  explicit QuerySession(QueryLedger& ledger) : ledger_(ledger) {}

  const CompositionMultiset& multiset(int t);
  const Composition& sum(int t);

  QueryLedger& ledger() { return ledger_; }
  const Graph& graph() const { return ledger_.graph(); }
  std::size_t k() const { return ledger_.k(); }
  int order() const { return ledger_.order(); }

 private:
  QueryLedger& ledger_;
  std::map<int, CompositionMultiset> multisets_;
  std::map<int, Composition> sums_;
};

/// I = S_{n-1} - (l-1) S_n and L = S_n - I. Two sum-queries.
SplitLI split_leaves_internal(QueryLedger& ledger);
SplitLI split_leaves_internal(QuerySession& session);

/// Center symbol of a subdivided star from the unique nonzero coordinate of
/// S_2 - L - 2I. One further sum-query.
Symbol center_label(QueryLedger& ledger, const SplitLI& split);
Symbol center_label(QuerySession& session, const SplitLI& split);

ReconstructionResult reconstruct_star(QueryLedger& ledger);

/// Intermediate values of the once-subdivided star algorithm.
struct SubdivOnceTrace {
  SplitLI split;
  Composition center_residual;
  Symbol center = 0;
  /// Complements S_n - X over X in M_{n-2}.
  CompositionMultiset residual;
  /// Leaf pairs removed from the residual.
  CompositionMultiset leaf_pairs;
  /// What is left: the length-2 branches.
  CompositionMultiset branches;
  Labeling labeling;
};

SubdivOnceTrace trace_star_subdiv_once_k2(QueryLedger& ledger);
ReconstructionResult reconstruct_star_subdiv_once_k2(QueryLedger& ledger);

ReconstructionResult reconstruct_bistar_k2(QueryLedger& ledger);
ReconstructionResult reconstruct_bistar(QueryLedger& ledger);

ReconstructionResult reconstruct_s11m(QueryLedger& ledger);
ReconstructionResult reconstruct_tm_odd(QueryLedger& ledger);

/// Default candidate cap of the brute-force reconstructor; the RECON_BUDGET
/// environment variable overrides it.
inline constexpr std::uint64_t kDefaultBruteBudget = 2'000'000;
std::uint64_t brute_budget();

/// Fixes the symbol content from M_1, then tries every arrangement against
/// M_1..M_n. Trees up to order 12, other carriers up to order 8.
ReconstructionResult brute_force_reconstruct(QueryLedger& ledger);
ReconstructionResult brute_force_reconstruct(QueryLedger& ledger, std::uint64_t budget);

/// Names accepted by reconstruct_named: star, subdiv-once, bistar-k2, bistar,
/// s11m, tm-odd, brute.
std::vector<std::string> algorithm_names();
/// Dedicated algorithm for a carrier, or "brute" when none applies.
std::string choose_algorithm(const Graph& g, std::size_t k);
ReconstructionResult reconstruct_named(QueryLedger& ledger, const std::string& name);

}  // namespace recon
