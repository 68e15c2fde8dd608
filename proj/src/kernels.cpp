#include "ietsaf/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <limits>

namespace ietsaf::kernels {

namespace {

void accumulate_wedge(std::vector<Rational>& m, const AlgNum& v, const AlgNum& w, int d) {
  const auto vc = v.coords();
  const auto wc = w.coords();
  for (int r = 0; r < d; ++r) {
    for (int c = r + 1; c < d; ++c) {
      const Rational x = vc[r] * wc[c] - wc[r] * vc[c];
      if (x == 0) continue;
      m[static_cast<std::size_t>(r * d + c)] += x;
      m[static_cast<std::size_t>(c * d + r)] -= x;
    }
  }
}

void check_lengths(std::span<const AlgNum> lengths, std::span<const AlgNum> translations) {
  if (lengths.size() != translations.size()) throw InvalidInput("one translation per length required");
}

// Bits of the reversal of a polynomial of the given degree.
std::uint64_t reverse_bits(std::uint64_t x, int degree) {
  std::uint64_t r = 0;
  for (int i = 0; i <= degree; ++i, x >>= 1) r = (r << 1) | (x & 1u);
  return r;
}

std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  for (; b != 0; b >>= 1, a <<= 1) {
    if (b & 1u) out ^= a;
  }
  return out;
}

int bit_degree(std::uint64_t x) { return x == 0 ? -1 : 63 - __builtin_clzll(x); }

bool palindromic_product(std::uint64_t mbar, std::uint64_t q, int degree) {
  const std::uint64_t prod = clmul(mbar, q);
  return reverse_bits(prod, degree) == prod;
}

void check_completion_args(std::uint64_t mbar, int k) {
  if ((mbar & 1u) == 0) throw InvalidInput("completion requires mbar(0) = 1");
  if (k < 0) throw InvalidInput("completion degree must be nonnegative");
  if (bit_degree(mbar) + k > 63) throw InvalidInput("completion product degree exceeds 63");
}

std::uint64_t candidate(std::uint64_t middle, int k) {
  // k == 0 -> 1; otherwise x^k + (middle bits) x + 1.
  if (k == 0) return 1;
  return (std::uint64_t{1} << k) | (middle << 1) | 1u;
}

std::uint64_t middle_count(int k) { return k <= 1 ? 1 : std::uint64_t{1} << (k - 1); }

}  // namespace

namespace serial {

std::vector<Rational> saf_matrix(std::span<const AlgNum> lengths, std::span<const AlgNum> translations, int d) {
  check_lengths(lengths, translations);
  std::vector<Rational> m(static_cast<std::size_t>(d * d));
  for (std::size_t i = 0; i < lengths.size(); ++i) accumulate_wedge(m, lengths[i], translations[i], d);
  return m;
}

std::vector<WedgeClass> saf_batch(std::span<const Iet> maps) {
  std::vector<WedgeClass> out;
  out.reserve(maps.size());
  for (const auto& f : maps) out.push_back(saf(f));
  return out;
}

std::vector<AlgNum> eval_points(const Iet& f, std::span<const AlgNum> points) {
  std::vector<AlgNum> out;
  out.reserve(points.size());
  for (const auto& x : points) out.push_back(f(x));
  return out;
}

std::optional<std::uint64_t> completion_search(std::uint64_t mbar, int k) {
  check_completion_args(mbar, k);
  const int degree = bit_degree(mbar) + k;
  for (std::uint64_t mid = 0; mid < middle_count(k); ++mid) {
    const std::uint64_t q = candidate(mid, k);
    if (palindromic_product(mbar, q, degree)) return q;
  }
  return std::nullopt;
}

}  // namespace serial

namespace omp {

std::vector<Rational> saf_matrix(std::span<const AlgNum> lengths, std::span<const AlgNum> translations, int d) {
  check_lengths(lengths, translations);
  const auto n = static_cast<long>(lengths.size());
  const int threads = omp_get_max_threads();
  std::vector<std::vector<Rational>> partial(static_cast<std::size_t>(threads),
                                             std::vector<Rational>(static_cast<std::size_t>(d * d)));
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    accumulate_wedge(partial[static_cast<std::size_t>(omp_get_thread_num())], lengths[i], translations[i], d);
  }
  // Exact sums: the reduction order cannot change the result.
  std::vector<Rational> m(static_cast<std::size_t>(d * d));
  for (const auto& p : partial) {
    for (std::size_t j = 0; j < m.size(); ++j) m[j] += p[j];
  }
  return m;
}

std::vector<WedgeClass> saf_batch(std::span<const Iet> maps) {
  const auto n = static_cast<long>(maps.size());
  std::vector<std::optional<WedgeClass>> slots(maps.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      slots[i].emplace(saf(maps[i]));
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  std::vector<WedgeClass> out;
  out.reserve(maps.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::vector<AlgNum> eval_points(const Iet& f, std::span<const AlgNum> points) {
  const auto n = static_cast<long>(points.size());
  std::vector<std::optional<AlgNum>> slots(points.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < n; ++i) {
    try {
      slots[i].emplace(f(points[i]));
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  std::vector<AlgNum> out;
  out.reserve(points.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::optional<std::uint64_t> completion_search(std::uint64_t mbar, int k) {
  check_completion_args(mbar, k);
  const int degree = bit_degree(mbar) + k;
  const auto count = static_cast<long long>(middle_count(k));
  // Candidates grow with mid. Scan ascending blocks in parallel and stop at the
  // first block with a hit; its minimum is the serial scan's answer.
  const long long block = 1 << 14;
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (long long begin = 0; begin < count && best == std::numeric_limits<std::uint64_t>::max(); begin += block) {
    const long long end = std::min(count, begin + block);
#pragma omp parallel for schedule(static) reduction(min : best)
    for (long long mid = begin; mid < end; ++mid) {
      const std::uint64_t q = candidate(static_cast<std::uint64_t>(mid), k);
      if (q < best && palindromic_product(mbar, q, degree)) best = q;
    }
  }
  if (best == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return best;
}

}  // namespace omp

}  // namespace ietsaf::kernels
