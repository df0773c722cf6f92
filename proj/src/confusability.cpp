#include "recon/confusability.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "recon/catalog.hpp"
#include "recon/error.hpp"
#include "recon/oracle.hpp"
#include "recon/reconstruct.hpp"

namespace recon {

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::SumReconstructable:
      return "sum-reconstructable";
    case Verdict::ReconstructableNotSum:
      return "reconstructable-not-sum";
    case Verdict::Confusable:
      return "confusable";
  }
  return "?";
}

std::vector<const ScanEntry*> ScanReport::with_verdict(Verdict verdict) const {
  std::vector<const ScanEntry*> out;
  for (const auto& e : entries)
    if (e.verdict == verdict) out.push_back(&e);
  return out;
}

namespace {

void require_same_carrier(const LabeledGraph& a, const LabeledGraph& b) {
  if (!(a.graph == b.graph)) fail(ErrorCode::CarrierMismatch, "labelings live on different carriers");
  if (!(a.alphabet == b.alphabet)) fail(ErrorCode::CarrierMismatch, "labelings use different alphabets");
}

}  // namespace

bool equicomposable(const LabeledGraph& a, const LabeledGraph& b) {
  require_same_carrier(a, b);
  return full_multiset(a) == full_multiset(b);
}

bool sum_equicomposable(const LabeledGraph& a, const LabeledGraph& b) {
  require_same_carrier(a, b);
  return full_sum(a) == full_sum(b);
}

std::string sum_fingerprint(const LabeledGraph& lg) {
  std::string out;
  for (const auto& s : full_sum(lg)) out += (out.empty() ? "" : "|") + s.to_string();
  return out;
}

namespace {

void partitions(int n, int cap, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(n, cap); part >= 1; --part) {
    current.push_back(part);
    partitions(n - part, part, current, out);
    current.pop_back();
  }
}

struct Collision {
  Labeling first, second;
};

void keep_smaller(std::optional<Collision>& best, const Labeling& a, const Labeling& b) {
  if (!best || std::tie(a, b) < std::tie(best->first, best->second)) best = Collision{a, b};
}

// Buckets labelings by signature and records the smallest pair of distinct
// orbits sharing one.
template <typename Key>
class Buckets {
 public:
  void add(Key key, std::uint32_t id) { buckets_[std::move(key)].push_back(id); }

  void collide(const std::vector<Labeling>& labelings, const std::vector<Permutation>& group,
               std::optional<Collision>& best) const {
    for (const auto& [key, ids] : buckets_) {
      if (ids.size() < 2) continue;
      std::set<Labeling> seen, orbits;
      for (auto id : ids) {
        if (seen.count(labelings[id]) != 0) continue;
        Labeling least = labelings[id];
        for (const auto& sigma : group) {
          Labeling image = permute(labelings[id], sigma);
          least = std::min(least, image);
          seen.insert(std::move(image));
        }
        orbits.insert(std::move(least));
      }
      if (orbits.size() < 2) continue;
      auto it = orbits.begin();
      const Labeling& a = *it++;
      keep_smaller(best, a, *it);
    }
  }

 private:
  std::map<Key, std::vector<std::uint32_t>> buckets_;
};

WitnessPair make_witness(const Graph& g, std::size_t k, const Collision& c, WitnessKind kind) {
  Alphabet alphabet = Alphabet::standard(k);
  LabeledGraph lg = make_labeled(g, alphabet, c.first);
  std::string fp = kind == WitnessKind::Multiset ? fingerprint(full_multiset(lg)) : sum_fingerprint(lg);
  return WitnessPair{g, c.first, c.second, fp, kind};
}

}  // namespace

ScanEntry classify(const Graph& g, const std::string& id) {
  auto start = std::chrono::steady_clock::now();
  int n = g.order();
  if (n > kMaxClassifyOrder)
    fail(ErrorCode::OrderTooLarge, "classify is limited to order " + std::to_string(kMaxClassifyOrder));
  std::uint64_t budget = brute_budget();

  SubgraphIndex index(g);
  std::vector<VertexMask> sets;
  for (int t = 1; t <= n; ++t)
    for (VertexMask m : index.of_order(t)) sets.push_back(m);
  auto group = automorphism_group(g);

  std::vector<std::vector<int>> contents;
  std::vector<int> scratch;
  partitions(n, n, scratch, contents);

  ScanEntry entry;
  entry.id = id;
  entry.carrier = g;
  std::optional<Collision> best, best_sum;

  for (const auto& content : contents) {
    std::size_t r = content.size();
    Labeling current;
    for (std::size_t s = 0; s < r; ++s) current.insert(current.end(), static_cast<std::size_t>(content[s]), static_cast<Symbol>(s));

    std::vector<Labeling> labelings;
    Buckets<std::vector<std::uint32_t>> by_multiset;
    Buckets<std::vector<std::int64_t>> by_sum;
    std::vector<VertexMask> by_symbol(r);
    do {
      if (++entry.labelings > budget)
        fail(ErrorCode::BudgetExceeded, "classify needs more than " + std::to_string(budget) + " labelings");
      std::fill(by_symbol.begin(), by_symbol.end(), 0);
      for (int v = 0; v < n; ++v) by_symbol[current[static_cast<std::size_t>(v)]] |= bit(v);

      std::vector<std::uint32_t> msig;
      msig.reserve(sets.size());
      for (VertexMask m : sets) {
        std::uint32_t key = 0;
        for (std::size_t s = 0; s < r; ++s) key |= static_cast<std::uint32_t>(popcount(m & by_symbol[s])) << (4 * s);
        msig.push_back(key);
      }
      std::sort(msig.begin(), msig.end());

      std::vector<std::int64_t> ssig(static_cast<std::size_t>(n) * r, 0);
      for (int t = 1; t <= n; ++t)
        for (int v = 0; v < n; ++v)
          ssig[static_cast<std::size_t>(t - 1) * r + current[static_cast<std::size_t>(v)]] += index.containing(t, v);

      auto id32 = static_cast<std::uint32_t>(labelings.size());
      labelings.push_back(current);
      by_multiset.add(std::move(msig), id32);
      by_sum.add(std::move(ssig), id32);
    } while (std::next_permutation(current.begin(), current.end()));

    std::optional<Collision> local, local_sum;
    by_multiset.collide(labelings, group, local);
    by_sum.collide(labelings, group, local_sum);
    if (local) keep_smaller(best, local->first, local->second);
    if (local_sum) keep_smaller(best_sum, local_sum->first, local_sum->second);
  }

  auto symbols_used = [](const Collision& c) {
    std::size_t k = 0;
    for (auto s : c.first) k = std::max<std::size_t>(k, s + 1u);
    return std::max<std::size_t>(k, 2);
  };
  if (best) {
    entry.verdict = Verdict::Confusable;
    entry.witness = make_witness(g, symbols_used(*best), *best, WitnessKind::Multiset);
  } else if (best_sum) {
    entry.verdict = Verdict::ReconstructableNotSum;
  }
  if (best_sum) entry.sum_witness = make_witness(g, symbols_used(*best_sum), *best_sum, WitnessKind::SumOnly);
  entry.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return entry;
}

ScanReport survey(const std::vector<Graph>& carriers, const std::vector<std::string>& ids) {
  if (ids.size() != carriers.size()) fail(ErrorCode::LengthMismatch, "one id per carrier");
  ScanReport report;
  for (std::size_t i = 0; i < carriers.size(); ++i) report.entries.push_back(classify(carriers[i], ids[i]));
  return report;
}

ScanReport survey_order(int n, bool trees_only) {
  if (n < 1) fail(ErrorCode::OrderOutOfRange, "order must be positive");
  std::vector<Graph> carriers = trees_only ? enumerate_trees(n) : enumerate_connected_graphs(n);
  std::vector<std::string> ids;
  std::string prefix = trees_only ? "tree-" : "graph-";
  for (std::size_t i = 0; i < carriers.size(); ++i)
    ids.push_back(prefix + std::to_string(n) + "-" + std::to_string(i + 1));
  return survey(carriers, ids);
}

bool verify_entry(const ScanEntry& entry) {
  auto check = [&](const WitnessPair& w) {
    std::size_t k = 2;
    for (auto s : w.first) k = std::max<std::size_t>(k, s + 1u);
    for (auto s : w.second) k = std::max<std::size_t>(k, s + 1u);
    Alphabet alphabet = Alphabet::standard(k);
    LabeledGraph a = make_labeled(w.carrier, alphabet, w.first);
    LabeledGraph b = make_labeled(w.carrier, alphabet, w.second);
    if (labelings_isomorphic(w.carrier, w.first, w.second)) return false;
    return w.kind == WitnessKind::Multiset ? equicomposable(a, b) : sum_equicomposable(a, b);
  };
  if (entry.verdict == Verdict::Confusable && !entry.witness) return false;
  if (entry.verdict != Verdict::SumReconstructable && !entry.sum_witness) return false;
  if (entry.witness && !check(*entry.witness)) return false;
  if (entry.sum_witness && !check(*entry.sum_witness)) return false;
  return true;
}

}  // namespace recon
