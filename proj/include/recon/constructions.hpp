#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "recon/graph.hpp"

namespace recon {

/// Labels p_1..p_m of a path, left to right.
using LabeledPath = Labeling;

using LabeledPair = std::pair<LabeledGraph, LabeledGraph>;

LabeledPath reverse(const LabeledPath& p);

/// p1 a_1 p1 a_2 ... a_m p1 for p2 = a_1..a_m.
LabeledPath interleave(const LabeledPath& p1, const LabeledPath& p2);

/// interleave(p1, p2) and interleave(p1, reverse(p2)) on one path carrier.
LabeledPair interleaved_pair(const LabeledPath& p1, const LabeledPath& p2, std::size_t k = 0);

/// The two binary labelings of T_{2p}: u_1, u_2 at 0, 1 and v_i at i + 1.
LabeledPair tm_pair(int p);

/// 0-based position of the middle bit a_t of p2 (|p2| = 2t - 1) inside
/// interleave(p1, p2).
int interleave_center(std::size_t p1_size, std::size_t p2_size);

/// gbase followed by the interleaved path, with an edge from x to the middle
/// bit; the second graph uses reverse(p2).
LabeledPair attach_at_center(const LabeledGraph& base, int x, const LabeledPath& p1, const LabeledPath& p2);

/// One representative per reversal class of non-palindromic words of length
/// m, each smaller than its reversal, in lexicographic order.
std::vector<LabeledPath> nonpalindromic_path_classes(std::size_t k, int m);

/// Subdivided star fusing interleave(P, AAB) (or BAA when the bit is set) at
/// the middle vertex, one path per class P. Branches run root to leaf, the
/// left half of each path first.
LabeledGraph subdivided_star_family(std::size_t k, int m, const std::vector<bool>& bits);

}  // namespace recon
