#pragma once

// Text forms for rings, elements and multisets.
//
//   integers    -?[0-9]+
//   rationals   p/q
//   gaussian    a | bi | a+bi | a-bi        (coefficient 1 may be omitted: i, -i, 2+i)
//   eisenstein  same shape with w for omega  (2-1w)
//   sqrt2       same shape with r for sqrt2  (-1+1r)
//   lunar       plain digit strings
//   prime(p)    integers, reduced mod p
//
// A multiset literal is a comma-separated list of element literals, each with
// an optional *k repetition suffix: 3,-5,-1*14,1

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "biop/multiset.hpp"
#include "biop/ring.hpp"

namespace biop {

// Accepts the names produced by RingId::name() plus "prime" with an explicit
// modulus. A modulus on its own selects the prime field.
RingId parse_ring(std::string_view name, std::optional<std::int64_t> modulus = std::nullopt);

RingElement parse_element(const RingId& ring, std::string_view text);
std::string render(const RingElement& x);

Multiset parse_multiset_literal(const RingId& ring, std::string_view text);
std::string render(const Multiset& s);

}  // namespace biop
