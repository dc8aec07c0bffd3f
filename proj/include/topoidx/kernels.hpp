#pragma once

// Data-parallel inner loops. Each kernel has a plain serial version that
// the tests use as the reference for the OpenMP one.

#include <cstdint>
#include <span>
#include <vector>

#include "topoidx/canonical.hpp"
#include "topoidx/indices.hpp"

namespace topoidx::kernels {

// `levels` holds out.size() level sequences of order n back to back.
void tree_abc_abs_serial(std::span<const std::uint8_t> levels, std::size_t n, std::span<AbcAbs> out);
void tree_abc_abs_omp(std::span<const std::uint8_t> levels, std::size_t n, std::span<AbcAbs> out, int workers);

// Sorted, distinct canonical keys of every connected labeled graph on n
// vertices, found by scanning all 2^(n(n-1)/2) edge subsets.
std::vector<CanonicalKey> connected_keys_serial(std::size_t n);
std::vector<CanonicalKey> connected_keys_omp(std::size_t n, int workers);

// Shared per-subset step: fills rows from an edge-subset mask and reports
// whether the resulting graph is connected.
bool subset_rows(std::uint32_t mask, std::size_t n, std::span<std::uint16_t> rows);

}  // namespace topoidx::kernels
