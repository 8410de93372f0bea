#pragma once

#include <functional>

#include "eqehr/instance.hpp"
#include "eqehr/sr.hpp"
#include "eqehr/triangulate.hpp"

namespace eqehr {

struct VerifyReport {
  struct Line {
    std::string check;
    bool pass = false;
    std::string detail;
  };
  std::vector<Line> lines;
  bool all_pass() const;
};

// Identity ledger over one instance: Ehrhart oracle agreement, det identity,
// pole orders, h* classification consistency, reciprocity, triangulation
// implications and the Stanley-Reisner cross-check (the latter gated by
// `deep` since it scales the lattice by |G|).
VerifyReport verify_instance(const InstanceFile& inst, bool deep);

}  // namespace eqehr
