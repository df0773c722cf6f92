#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "recon/graph.hpp"

namespace recon {

/// Count vector over a k-symbol alphabet. Arithmetic is exact; subtraction
/// that would leave a negative entry throws NegativeCoordinate.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::size_t k) : counts_(k, 0) {}
  explicit Composition(std::vector<std::int64_t> counts);

  static Composition unit(std::size_t k, Symbol s);

  std::size_t size() const { return counts_.size(); }
  std::int64_t operator[](std::size_t i) const { return counts_.at(i); }
  std::int64_t& operator[](std::size_t i) { return counts_.at(i); }
  const std::vector<std::int64_t>& counts() const { return counts_; }
  std::int64_t total() const;
  bool is_zero() const { return total() == 0; }

  Composition& operator+=(const Composition& other);
  Composition& operator-=(const Composition& other);
  friend Composition operator+(Composition a, const Composition& b) { return a += b; }
  friend Composition operator-(Composition a, const Composition& b) { return a -= b; }
  friend Composition operator*(std::int64_t s, Composition a);

  /// "c0,c1,...".
  std::string to_string() const;
  /// Monomial form such as "A^2BC"; "1" for the zero vector.
  std::string monomial(const Alphabet& alphabet) const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<std::int64_t> counts_;
};

/// Compositions with positive multiplicities in strictly increasing order.
class CompositionMultiset {
 public:
  using Entry = std::pair<Composition, std::int64_t>;

  CompositionMultiset() = default;
  /// Collects an unsorted list, merging repeats.
  static CompositionMultiset from_list(std::vector<Composition> items);

  void add(const Composition& c, std::int64_t mult = 1);
  /// Removes `mult` copies; throws OracleInconsistent if not present.
  void remove(const Composition& c, std::int64_t mult = 1);
  std::int64_t count(const Composition& c) const;

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::int64_t cardinality() const;
  /// Coordinatewise sum with multiplicities.
  Composition sum(std::size_t k) const;

  /// Multiset union (multiplicities add).
  CompositionMultiset& merge(const CompositionMultiset& other);

  /// "{{A^2C, 2ABC, ...}}" in entry order.
  std::string display(const Alphabet& alphabet) const;

  friend bool operator==(const CompositionMultiset&, const CompositionMultiset&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Canonical serialization: per entry "mult x c0,c1,...;" with no
/// whitespace; the empty multiset is "-".
std::string fingerprint(const CompositionMultiset& m);

Composition composition_of(const LabeledGraph& lg, const VertexSet& vs);
Composition composition_of(const LabeledGraph& lg, VertexMask mask);

/// Connected vertex sets of a carrier grouped by order (index t holds the
/// sets of order t; index 0 is empty). Shared between queries on one carrier.
class SubgraphIndex {
 public:
  explicit SubgraphIndex(const Graph& g);

  int order() const { return static_cast<int>(by_order_.size()) - 1; }
  const std::vector<VertexMask>& of_order(int t) const;
  /// Number of order-t connected sets containing v.
  std::int64_t containing(int t, int v) const;

 private:
  std::vector<std::vector<VertexMask>> by_order_;
  std::vector<std::vector<std::int64_t>> containing_;
};

CompositionMultiset multiset_of_order(const LabeledGraph& lg, const SubgraphIndex& index, int t);
Composition sum_of_order(const LabeledGraph& lg, const SubgraphIndex& index, int t);

/// Union of every order's multiset.
CompositionMultiset full_multiset(const LabeledGraph& lg);
/// S_1..S_n in order.
std::vector<Composition> full_sum(const LabeledGraph& lg);

/// Per-order multisets M_1..M_n (index t-1).
std::vector<CompositionMultiset> multisets_by_order(const LabeledGraph& lg);

enum class QueryKind { Multiset, Sum };
std::string to_string(QueryKind kind);

struct QueryRecord {
  QueryKind kind;
  int t;
  std::string answer;
};

/// Holds a hidden labeling and answers composition queries, counting every
/// call by kind and order.
class QueryLedger {
 public:
  explicit QueryLedger(LabeledGraph hidden, std::shared_ptr<const SubgraphIndex> index = nullptr);

  const Graph& graph() const { return hidden_.graph; }
  const Alphabet& alphabet() const { return hidden_.alphabet; }
  std::size_t k() const { return hidden_.alphabet.size(); }
  int order() const { return hidden_.graph.order(); }

  CompositionMultiset multiset_query(int t);
  Composition sum_query(int t);

  std::int64_t count(QueryKind kind, int t) const;
  std::int64_t total(QueryKind kind) const;
  std::int64_t total() const { return total(QueryKind::Multiset) + total(QueryKind::Sum); }
  const std::vector<QueryRecord>& transcript() const { return transcript_; }

 private:
  void check_order(int t) const;

  LabeledGraph hidden_;
  std::shared_ptr<const SubgraphIndex> index_;
  std::map<std::pair<QueryKind, int>, std::int64_t> counts_;
  std::vector<QueryRecord> transcript_;
};

/// "Q <kind> <t> -> <answer>".
std::string report_line(const QueryRecord& record);

}  // namespace recon
