#include "ellcm/instance.hpp"

#include <algorithm>
#include <stdexcept>

namespace ellcm {

Instance::Instance(const RootSystem& rs, int j)
    : rs_(rs),
      g_(rs_),
      td_(j < 0 ? trivial_transition(rs_) : make_transition(rs_, j)),
      s_(find_sigma(g_, td_)) {}

const GSBasis& Instance::basis() {
  if (!b_) b_ = std::make_unique<GSBasis>(g_, td_, s_);
  return *b_;
}

const LaxFrame& Instance::frame() {
  if (!f_) f_ = std::make_unique<LaxFrame>(basis());
  return *f_;
}

std::string Instance::label() const {
  if (td_.j < 0) return rs_.name() + " l=1";
  return rs_.name() + " w" + std::to_string(td_.j + 1) + " l=" + std::to_string(td_.l);
}

int class_index(const RootSystem& rs, int k) {
  if (k == 0) return -1;
  std::vector<int> m = rs.minuscule_coweights();
  if (k < 0 || k > rs.rank() || std::find(m.begin(), m.end(), k - 1) == m.end())
    throw std::invalid_argument("w" + std::to_string(k) + " is not a class generator of " + rs.name());
  return k - 1;
}

}  // namespace ellcm
