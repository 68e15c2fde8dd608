#pragma once

// Data-parallel kernels. Each lives twice: a plain serial loop kept as the
// reference, and an OpenMP version used by the library. Both must produce
// identical results; tests and bench/ compare them.

#include "ietsaf/iet.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ietsaf::kernels {

namespace serial {

// Row-major d x d matrix sum_i (v_i w_i^T - w_i v_i^T).
std::vector<Rational> saf_matrix(std::span<const AlgNum> lengths, std::span<const AlgNum> translations, int d);
std::vector<WedgeClass> saf_batch(std::span<const Iet> maps);
std::vector<AlgNum> eval_points(const Iet& f, std::span<const AlgNum> points);
// Smallest bit pattern q (monic, degree k, q(0) = 1) with mbar * q palindromic.
std::optional<std::uint64_t> completion_search(std::uint64_t mbar_bits, int k);

}  // namespace serial

namespace omp {

std::vector<Rational> saf_matrix(std::span<const AlgNum> lengths, std::span<const AlgNum> translations, int d);
std::vector<WedgeClass> saf_batch(std::span<const Iet> maps);
std::vector<AlgNum> eval_points(const Iet& f, std::span<const AlgNum> points);
std::optional<std::uint64_t> completion_search(std::uint64_t mbar_bits, int k);

}  // namespace omp

}  // namespace ietsaf::kernels
