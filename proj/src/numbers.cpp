#include "eqehr/numbers.hpp"

#include "eqehr/errors.hpp"

namespace eqehr {

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw InputError("empty rational literal");
  Rat q;
  if (q.set_str(s, 10) != 0) throw InputError("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

}  // namespace eqehr
