#include "platkit/classify.hpp"

namespace platkit {

bool plat_equivalent(std::int64_t p, std::int64_t q, std::int64_t p2, std::int64_t q2) {
  const PlatNormalForm a(p, q);
  const PlatNormalForm b(p2, q2);
  return a.p() == b.p() && mod_floor(a.q() - b.q(), a.p()) == 0;
}

PlatNormalForm canonical_class_rep(const PlatNormalForm& nf) {
  return PlatNormalForm(nf.p(), canonical_even_rep(nf.p(), nf.q()));
}

}  // namespace platkit
