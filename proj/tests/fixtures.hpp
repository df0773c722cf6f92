#pragma once

#include "recon/catalog.hpp"
#include "recon/graph.hpp"

namespace fixtures {

/// The nine-vertex example tree: internal vertices 0, 1, 4.
inline recon::Graph fig1_tree() {
  return recon::build_graph(9, {{0, 1}, {0, 4}, {0, 7}, {0, 8}, {1, 2}, {1, 3}, {4, 5}, {4, 6}});
}

inline recon::LabeledGraph fig1_labeled() { return recon::make_labeled(fig1_tree(), 4, "BAACDADCD"); }

/// Star subdivided once: center 0, leaves 1 and 2, branches 3-4 and 5-6.
inline recon::LabeledGraph fig2_labeled() {
  return recon::make_labeled(recon::generate(recon::FamilySpec::subdivided_star({1, 1, 2, 2})), 2, "AABABBA");
}

inline recon::LabeledGraph gem_left() { return recon::make_labeled(recon::gem(), 2, "ABBAA"); }
inline recon::LabeledGraph gem_right() { return recon::make_labeled(recon::gem(), 2, "BAAAB"); }

/// The two labelings of T_2 (u1, u2, v1, v2, v3).
inline recon::LabeledGraph t2_first() {
  return recon::make_labeled(recon::generate(recon::FamilySpec::triangle_tail(2)), 2, "BBABA");
}
inline recon::LabeledGraph t2_second() {
  return recon::make_labeled(recon::generate(recon::FamilySpec::triangle_tail(2)), 2, "ABBAB");
}

inline recon::LabeledGraph s123_first() {
  return recon::make_labeled(recon::generate(recon::FamilySpec::subdivided_star({1, 2, 3})), 2, "ABBAAAB");
}
inline recon::LabeledGraph s123_second() {
  return recon::make_labeled(recon::generate(recon::FamilySpec::subdivided_star({1, 2, 3})), 2, "AAABBAB");
}

/// Three-branch subdivided stars over three symbols that agree on every sum.
inline recon::LabeledGraph fig3_first() {
  return recon::make_labeled(recon::generate(recon::FamilySpec::subdivided_star({2, 2, 2})), 3, "ACABCAB");
}
inline recon::LabeledGraph fig3_second() {
  return recon::make_labeled(recon::generate(recon::FamilySpec::subdivided_star({2, 2, 2})), 3, "AACCBBA");
}

}  // namespace fixtures
