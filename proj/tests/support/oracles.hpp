#pragma once

#include "kisinlab/moduli.hpp"

#include <cstdint>
#include <map>
#include <vector>

// Deliberately naive reimplementations used only to cross-check the library.
namespace kisinlab::testkit {

// Schoolbook product of coefficient vectors (low to high), reduced by a monic modulus.
std::vector<std::uint32_t> naive_field_mul(std::uint32_t p, const std::vector<std::uint32_t>& modulus,
                                           const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b);

// True when no monic polynomial of degree 1..deg/2 divides it.
bool naive_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic);

// Exponent -> coefficient code convolution over the series' field.
std::map<std::int64_t, Field::code_t> naive_series_mul(const Series& f, const Series& g);

// Full odometer over [-radius, radius]^r, no pruning.
std::vector<AVector> brute_a_vectors(std::int64_t p, std::int64_t r, std::int64_t e, std::int64_t radius);

}  // namespace kisinlab::testkit
