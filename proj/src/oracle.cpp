#include "recon/oracle.hpp"

#include <algorithm>
#include <unordered_map>

#include "recon/error.hpp"

namespace recon {

// ---------------------------------------------------------------------------
// Composition

Composition::Composition(std::vector<std::int64_t> counts) : counts_(std::move(counts)) {
  for (auto c : counts_)
    if (c < 0) fail(ErrorCode::NegativeCoordinate, "composition entries must be nonnegative");
}

Composition Composition::unit(std::size_t k, Symbol s) {
  Composition c(k);
  c[s] = 1;
  return c;
}

std::int64_t Composition::total() const {
  std::int64_t sum = 0;
  for (auto c : counts_) sum += c;
  return sum;
}

Composition& Composition::operator+=(const Composition& other) {
  if (other.size() != size()) fail(ErrorCode::LengthMismatch, "composition lengths differ");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  return *this;
}

Composition& Composition::operator-=(const Composition& other) {
  if (other.size() != size()) fail(ErrorCode::LengthMismatch, "composition lengths differ");
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] < other.counts_[i])
      fail(ErrorCode::NegativeCoordinate, "(" + to_string() + ") - (" + other.to_string() + ")");
  }
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] -= other.counts_[i];
  return *this;
}

Composition operator*(std::int64_t s, Composition a) {
  if (s < 0) fail(ErrorCode::NegativeCoordinate, "negative scalar multiple");
  for (auto& c : a.counts_) c *= s;
  return a;
}

std::string Composition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(counts_[i]);
  }
  return out;
}

std::string Composition::monomial(const Alphabet& alphabet) const {
  std::string out;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] == 0) continue;
    out += alphabet.name(static_cast<Symbol>(i));
    if (counts_[i] > 1) out += "^" + std::to_string(counts_[i]);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------
// CompositionMultiset

CompositionMultiset CompositionMultiset::from_list(std::vector<Composition> items) {
  std::sort(items.begin(), items.end());
  CompositionMultiset out;
  for (auto& c : items) {
    if (!out.entries_.empty() && out.entries_.back().first == c)
      ++out.entries_.back().second;
    else
      out.entries_.emplace_back(std::move(c), 1);
  }
  return out;
}

void CompositionMultiset::add(const Composition& c, std::int64_t mult) {
  if (mult <= 0) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), c,
                             [](const Entry& e, const Composition& x) { return e.first < x; });
  if (it != entries_.end() && it->first == c)
    it->second += mult;
  else
    entries_.emplace(it, c, mult);
}

void CompositionMultiset::remove(const Composition& c, std::int64_t mult) {
  if (mult <= 0) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), c,
                             [](const Entry& e, const Composition& x) { return e.first < x; });
  if (it == entries_.end() || it->first != c || it->second < mult)
    fail(ErrorCode::OracleInconsistent, "cannot remove " + std::to_string(mult) + " x (" +
                                            c.to_string() + ") from multiset");
  it->second -= mult;
  if (it->second == 0) entries_.erase(it);
}

std::int64_t CompositionMultiset::count(const Composition& c) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), c,
                             [](const Entry& e, const Composition& x) { return e.first < x; });
  return it != entries_.end() && it->first == c ? it->second : 0;
}

std::int64_t CompositionMultiset::cardinality() const {
  std::int64_t sum = 0;
  for (const auto& e : entries_) sum += e.second;
  return sum;
}

Composition CompositionMultiset::sum(std::size_t k) const {
  Composition out(k);
  for (const auto& [c, m] : entries_) out += m * c;
  return out;
}

CompositionMultiset& CompositionMultiset::merge(const CompositionMultiset& other) {
  for (const auto& [c, m] : other.entries_) add(c, m);
  return *this;
}

std::string CompositionMultiset::display(const Alphabet& alphabet) const {
  std::string out = "{{";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out += ", ";
    if (entries_[i].second > 1) out += std::to_string(entries_[i].second);
    out += entries_[i].first.monomial(alphabet);
  }
  return out + "}}";
}

std::string fingerprint(const CompositionMultiset& m) {
  if (m.empty()) return "-";
  std::string out;
  for (const auto& [c, mult] : m.entries()) out += std::to_string(mult) + "x" + c.to_string() + ";";
  return out;
}

// ---------------------------------------------------------------------------
// Compositions of subgraphs

Composition composition_of(const LabeledGraph& lg, VertexMask mask) {
  if (lg.order() < 64 && (mask >> lg.order()) != 0)
    fail(ErrorCode::VertexOutOfRange, "vertex set reaches past the carrier");
  Composition c(lg.alphabet.size());
  for (; mask != 0; mask &= mask - 1) ++c[lg.labeling[static_cast<std::size_t>(std::countr_zero(mask))]];
  return c;
}

Composition composition_of(const LabeledGraph& lg, const VertexSet& vs) {
  VertexMask mask = 0;
  for (int v : vs) {
    if (v < 0 || v >= lg.order()) fail(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
    mask |= bit(v);
  }
  return composition_of(lg, mask);
}

SubgraphIndex::SubgraphIndex(const Graph& g) {
  int n = g.order();
  by_order_.resize(static_cast<std::size_t>(n) + 1);
  containing_.assign(static_cast<std::size_t>(n) + 1, std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  for_each_connected_set(g, n, [&](VertexMask m) {
    auto t = static_cast<std::size_t>(popcount(m));
    by_order_[t].push_back(m);
    for (VertexMask r = m; r != 0; r &= r - 1) ++containing_[t][static_cast<std::size_t>(std::countr_zero(r))];
  });
  for (auto& sets : by_order_) std::sort(sets.begin(), sets.end());
}

const std::vector<VertexMask>& SubgraphIndex::of_order(int t) const {
  if (t < 1 || t > order())
    fail(ErrorCode::OrderOutOfRange, "order " + std::to_string(t) + " outside 1.." + std::to_string(order()));
  return by_order_[static_cast<std::size_t>(t)];
}

std::int64_t SubgraphIndex::containing(int t, int v) const {
  if (t < 1 || t > order())
    fail(ErrorCode::OrderOutOfRange, "order " + std::to_string(t) + " outside 1.." + std::to_string(order()));
  return containing_[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)];
}

CompositionMultiset multiset_of_order(const LabeledGraph& lg, const SubgraphIndex& index, int t) {
  std::vector<Composition> items;
  for (VertexMask m : index.of_order(t)) items.push_back(composition_of(lg, m));
  return CompositionMultiset::from_list(std::move(items));
}

Composition sum_of_order(const LabeledGraph& lg, const SubgraphIndex& index, int t) {
  Composition out(lg.alphabet.size());
  for (int v = 0; v < lg.order(); ++v)
    out[lg.labeling[static_cast<std::size_t>(v)]] += index.containing(t, v);
  return out;
}

namespace {

// Streams every connected set once; compositions are packed 7 bits per
// symbol when the alphabet allows it.
CompositionMultiset stream_multiset(const LabeledGraph& lg) {
  std::size_t k = lg.alphabet.size();
  std::vector<VertexMask> by_symbol(k, 0);
  for (int v = 0; v < lg.order(); ++v) by_symbol[lg.labeling[static_cast<std::size_t>(v)]] |= bit(v);
  CompositionMultiset out;
  if (k <= 9) {
    std::unordered_map<std::uint64_t, std::int64_t> counts;
    for_each_connected_set(lg.graph, lg.order(), [&](VertexMask m) {
      std::uint64_t key = 0;
      for (std::size_t s = 0; s < k; ++s)
        key |= static_cast<std::uint64_t>(popcount(m & by_symbol[s])) << (7 * s);
      ++counts[key];
    });
    std::vector<CompositionMultiset::Entry> entries;
    for (auto [key, mult] : counts) {
      Composition c(k);
      for (std::size_t s = 0; s < k; ++s) c[s] = static_cast<std::int64_t>((key >> (7 * s)) & 0x7f);
      entries.emplace_back(std::move(c), mult);
    }
    std::sort(entries.begin(), entries.end());
    for (auto& [c, mult] : entries) out.add(c, mult);
    return out;
  }
  std::map<Composition, std::int64_t> counts;
  for_each_connected_set(lg.graph, lg.order(), [&](VertexMask m) { ++counts[composition_of(lg, m)]; });
  for (auto& [c, mult] : counts) out.add(c, mult);
  return out;
}

}  // namespace

CompositionMultiset full_multiset(const LabeledGraph& lg) { return stream_multiset(lg); }

std::vector<CompositionMultiset> multisets_by_order(const LabeledGraph& lg) {
  std::vector<CompositionMultiset> out(static_cast<std::size_t>(lg.order()));
  auto all = stream_multiset(lg);
  for (const auto& [c, mult] : all.entries())
    out[static_cast<std::size_t>(c.total() - 1)].add(c, mult);
  return out;
}

std::vector<Composition> full_sum(const LabeledGraph& lg) {
  SubgraphIndex index(lg.graph);
  std::vector<Composition> out;
  for (int t = 1; t <= lg.order(); ++t) out.push_back(sum_of_order(lg, index, t));
  return out;
}

// ---------------------------------------------------------------------------
// Ledger

std::string to_string(QueryKind kind) { return kind == QueryKind::Multiset ? "multiset" : "sum"; }

QueryLedger::QueryLedger(LabeledGraph hidden, std::shared_ptr<const SubgraphIndex> index)
    : hidden_(std::move(hidden)), index_(std::move(index)) {
  if (!index_) index_ = std::make_shared<const SubgraphIndex>(hidden_.graph);
  if (index_->order() != hidden_.order())
    fail(ErrorCode::CarrierMismatch, "subgraph index built for another carrier");
}

void QueryLedger::check_order(int t) const {
  if (t < 1 || t > order())
    fail(ErrorCode::OrderOutOfRange, "query order " + std::to_string(t) + " outside 1.." + std::to_string(order()));
}

CompositionMultiset QueryLedger::multiset_query(int t) {
  check_order(t);
  auto answer = multiset_of_order(hidden_, *index_, t);
  ++counts_[{QueryKind::Multiset, t}];
  transcript_.push_back({QueryKind::Multiset, t, fingerprint(answer)});
  return answer;
}

Composition QueryLedger::sum_query(int t) {
  check_order(t);
  auto answer = sum_of_order(hidden_, *index_, t);
  ++counts_[{QueryKind::Sum, t}];
  transcript_.push_back({QueryKind::Sum, t, answer.to_string()});
  return answer;
}

std::int64_t QueryLedger::count(QueryKind kind, int t) const {
  auto it = counts_.find({kind, t});
  return it == counts_.end() ? 0 : it->second;
}

std::int64_t QueryLedger::total(QueryKind kind) const {
  std::int64_t sum = 0;
  for (const auto& [key, c] : counts_)
    if (key.first == kind) sum += c;
  return sum;
}

std::string report_line(const QueryRecord& record) {
  return "Q " + to_string(record.kind) + " " + std::to_string(record.t) + " -> " + record.answer;
}

}  // namespace recon
