#pragma once

#include "ellcm/lax.hpp"

#include <memory>
#include <string>

namespace ellcm {

// One (algebra, class generator) pair with everything built on top of it.
// The GS basis and the frame are created on first use.
class Instance {
 public:
  // j indexes a minuscule coweight varpi_{j+1}^vee; -1 is the trivial class
  Instance(const RootSystem& rs, int j);
  Instance(const std::string& algebra, int j) : Instance(RootSystem::parse(algebra), j) {}

  const RootSystem& roots() const { return rs_; }
  const ChevalleyAlgebra& algebra() const { return g_; }
  const TransitionData& transition() const { return td_; }
  const SigmaLift& lift() const { return s_; }
  const GSBasis& basis();
  const LaxFrame& frame();
  // "A3 w2 l=2", "A2 l=1"
  std::string label() const;

 private:
  RootSystem rs_;
  ChevalleyAlgebra g_;
  TransitionData td_;
  SigmaLift s_;
  std::unique_ptr<GSBasis> b_;
  std::unique_ptr<LaxFrame> f_;
};

// 1-based coweight index from the command line to j; 0 is the trivial class.
// Throws std::invalid_argument unless varpi_k^vee is minuscule.
int class_index(const RootSystem& rs, int k);

}  // namespace ellcm
