#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "recon/graph.hpp"

namespace recon {

enum class Verdict { SumReconstructable, ReconstructableNotSum, Confusable };
std::string to_string(Verdict verdict);

enum class WitnessKind { Multiset, SumOnly };

struct WitnessPair {
  Graph carrier;
  Labeling first;
  Labeling second;
  /// Shared fingerprint of the designated kind.
  std::string fingerprint;
  WitnessKind kind = WitnessKind::Multiset;
};

struct ScanEntry {
  std::string id;
  Graph carrier;
  Verdict verdict = Verdict::SumReconstructable;
  /// Lexicographically smallest equicomposable non-isomorphic pair.
  std::optional<WitnessPair> witness;
  /// Lexicographically smallest sum-equicomposable non-isomorphic pair.
  std::optional<WitnessPair> sum_witness;
  std::uint64_t labelings = 0;
  double seconds = 0;
};

struct ScanReport {
  std::vector<ScanEntry> entries;
  std::vector<const ScanEntry*> with_verdict(Verdict verdict) const;
};

bool equicomposable(const LabeledGraph& a, const LabeledGraph& b);
bool sum_equicomposable(const LabeledGraph& a, const LabeledGraph& b);

/// Joined S_1..S_n, e.g. "1,2|3,4".
std::string sum_fingerprint(const LabeledGraph& lg);

/// Largest carrier order classify accepts.
inline constexpr int kMaxClassifyOrder = 8;

/// Tries every symbol content of n vertices (counts nonincreasing along the
/// alphabet) and every arrangement of it, bucketing by exact fingerprint.
ScanEntry classify(const Graph& g, const std::string& id = "");

ScanReport survey(const std::vector<Graph>& carriers, const std::vector<std::string>& ids);

/// Survey of the atlas of one order; ids are tree-<n>-<i> or graph-<n>-<i>,
/// with i counted from 1 in atlas order.
ScanReport survey_order(int n, bool trees_only);

/// Re-checks every witness of an entry; true when all pass.
bool verify_entry(const ScanEntry& entry);

}  // namespace recon
