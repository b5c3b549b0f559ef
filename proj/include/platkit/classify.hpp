#pragma once

#include <cstdint>

#include "platkit/platknot.hpp"

namespace platkit {

/// F(p, q) ~ F(p', q') iff p = p' and q = q' (mod p). Throws on invalid forms.
bool plat_equivalent(std::int64_t p, std::int64_t q, std::int64_t p2, std::int64_t q2);

/// (p, canonical_even_rep(p, q)); equal exactly for equivalent forms.
PlatNormalForm canonical_class_rep(const PlatNormalForm& nf);

}  // namespace platkit
