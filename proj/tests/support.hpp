#pragma once

#include "oracle.hpp"
#include "xprod/crossed.hpp"

inline oracle::Perm perm_of(const xprod::DynSystem& sys) {
  oracle::Perm p(sys.size());
  for (std::size_t x = 0; x < sys.size(); ++x) p[x] = sys.apply(x);
  return p;
}

inline oracle::Dense dense_of(const xprod::CrossedElement& f) {
  oracle::Dense d;
  for (const auto& [k, fk] : f.terms()) d[k] = fk.values();
  return d;
}

inline xprod::DynSystem s21() { return xprod::DynSystem({1, 0, 2}); }
// swap 2,3; fix 0,1
inline xprod::DynSystem swap_two_fix_two() { return xprod::DynSystem({0, 1, 3, 2}); }
