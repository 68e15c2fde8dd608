#include "ietsaf/iet.hpp"

#include "ietsaf/kernels.hpp"

#include <algorithm>
#include <numeric>

namespace ietsaf {

namespace {

std::vector<AlgNum> cumulative(const AlgNum& zero, const std::vector<AlgNum>& lengths) {
  std::vector<AlgNum> out{zero};
  out.reserve(lengths.size() + 1);
  for (const auto& len : lengths) out.push_back(out.back() + len);
  return out;
}

AlgNum zero_of(const AlgNum& x) { return AlgNum::from_rational(x.field(), 0); }

}  // namespace

Iet::Iet(AlgNum total, std::vector<AlgNum> lengths, std::vector<int> perm, std::vector<AlgNum> translations,
         std::vector<AlgNum> breakpoints, bool circle)
    : total_(std::move(total)),
      lengths_(std::move(lengths)),
      perm_(std::move(perm)),
      translations_(std::move(translations)),
      breakpoints_(std::move(breakpoints)),
      circle_(circle) {}

Iet Iet::create(AlgNum total, std::vector<AlgNum> lengths, std::vector<int> perm, bool circle) {
  const std::size_t n = lengths.size();
  if (n == 0) throw InvalidInput("an interval exchange needs at least one interval");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(lengths[i].field() == total.field())) throw InvalidInput("number field mismatch in lengths");
    if (alg_sign(lengths[i]) <= 0) throw InvalidInput("nonpositive length at interval " + std::to_string(i + 1));
  }
  auto breakpoints = cumulative(zero_of(total), lengths);
  if (!(breakpoints.back() == total)) throw InvalidInput("lengths do not sum to total");
  if (perm.size() != n) throw InvalidInput("perm not a bijection");
  std::vector<int> at_position(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const int p = perm[i];
    if (p < 0 || static_cast<std::size_t>(p) >= n || at_position[p] != -1) throw InvalidInput("perm not a bijection");
    at_position[p] = static_cast<int>(i);
  }
  // Image offset of each position in image order.
  std::vector<AlgNum> translations(n, zero_of(total));
  AlgNum offset = zero_of(total);
  for (std::size_t pos = 0; pos < n; ++pos) {
    const auto i = static_cast<std::size_t>(at_position[pos]);
    translations[i] = offset - breakpoints[i];
    offset += lengths[i];
  }
  return Iet(std::move(total), std::move(lengths), std::move(perm), std::move(translations), std::move(breakpoints),
             circle);
}

Iet Iet::from_translations(AlgNum total, std::vector<AlgNum> lengths, const std::vector<AlgNum>& translations,
                           bool circle) {
  const std::size_t n = lengths.size();
  if (translations.size() != n) throw InvalidInput("one translation per interval required");
  if (n == 0) throw InvalidInput("an interval exchange needs at least one interval");
  auto breakpoints = cumulative(zero_of(total), lengths);
  std::vector<AlgNum> image_starts;
  image_starts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) image_starts.push_back(breakpoints[i] + translations[i]);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return image_starts[a] < image_starts[b]; });
  std::vector<int> perm(n);
  for (std::size_t pos = 0; pos < n; ++pos) perm[order[pos]] = static_cast<int>(pos);
  Iet out = create(std::move(total), std::move(lengths), std::move(perm), circle);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(out.translations_[i] == translations[i])) {
      throw InvalidInput("image intervals do not tile the domain");
    }
  }
  return out;
}

std::size_t Iet::locate(const AlgNum& x) const {
  if (alg_sign(x) < 0 || !(x < total_)) throw InvalidInput("point outside the domain [0, total)");
  // First breakpoint strictly greater than x, minus one.
  auto it = std::upper_bound(breakpoints_.begin() + 1, breakpoints_.end(), x,
                             [](const AlgNum& v, const AlgNum& b) { return v < b; });
  return static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
}

AlgNum Iet::operator()(const AlgNum& x) const { return x + translations_[locate(x)]; }

Iet Iet::canonical() const {
  std::vector<std::size_t> firsts;
  std::vector<AlgNum> lengths;
  for (std::size_t i = 0; i < size(); ++i) {
    if (i > 0 && translations_[i] == translations_[i - 1]) {
      lengths.back() += lengths_[i];
    } else {
      firsts.push_back(i);
      lengths.push_back(lengths_[i]);
    }
  }
  if (firsts.size() == size()) return *this;
  // Merged runs occupy consecutive image positions, so ranking the first member suffices.
  std::vector<int> order(firsts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return perm_[firsts[a]] < perm_[firsts[b]]; });
  std::vector<int> perm(firsts.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) perm[order[pos]] = static_cast<int>(pos);
  return create(total_, std::move(lengths), std::move(perm), circle_);
}

Iet Iet::with_circle(bool circle) const {
  Iet out = *this;
  out.circle_ = circle;
  return out;
}

bool operator==(const Iet& a, const Iet& b) {
  if (a.circle_ != b.circle_ || !(a.total_ == b.total_)) return false;
  const Iet ca = a.canonical();
  const Iet cb = b.canonical();
  return ca.lengths_ == cb.lengths_ && ca.perm_ == cb.perm_;
}

Iet identity(const AlgNum& total, bool circle) { return Iet::create(total, {total}, {0}, circle); }

Iet rotation(const AlgNum& total, const AlgNum& theta) {
  if (alg_sign(theta) < 0 || !(theta < total)) throw InvalidInput("rotation amount must lie in [0, total)");
  if (theta.is_zero()) return identity(total, true);
  return Iet::create(total, {total - theta, theta}, {1, 0}, true);
}

Iet compose(const Iet& f, const Iet& g) {
  if (!(f.total() == g.total())) throw InvalidInput("domain mismatch in composition");
  std::vector<AlgNum> lengths, translations;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const AlgNum& tj = g.translations()[j];
    AlgNum cur = g.breakpoints()[j] + tj;
    const AlgNum end = cur + g.lengths()[j];
    std::size_t i = f.locate(cur);
    while (cur < end) {
      const AlgNum& fend = f.breakpoints()[i + 1];
      AlgNum piece_end = fend < end ? fend : end;
      lengths.push_back(piece_end - cur);
      translations.push_back(tj + f.translations()[i]);
      cur = std::move(piece_end);
      ++i;
    }
  }
  return Iet::from_translations(f.total(), std::move(lengths), translations, f.circle() && g.circle()).canonical();
}

Iet inverse(const Iet& f) {
  const std::size_t n = f.size();
  std::vector<AlgNum> lengths(n, f.lengths()[0]);
  std::vector<int> perm(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto pos = static_cast<std::size_t>(f.perm()[i]);
    lengths[pos] = f.lengths()[i];
    perm[pos] = static_cast<int>(i);
  }
  return Iet::create(f.total(), std::move(lengths), std::move(perm), f.circle());
}

Iet rotate(const Iet& f, const AlgNum& c) {
  if (!f.circle()) throw InvalidInput("rotation requires circle semantics");
  if (alg_sign(c) < 0 || !(c < f.total())) throw InvalidInput("rotation amount must lie in [0, total)");
  if (c.is_zero()) return f;
  const AlgNum& total = f.total();
  std::vector<AlgNum> lengths, translations;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const AlgNum& a = f.breakpoints()[i];
    const AlgNum& len = f.lengths()[i];
    AlgNum s = a + f.translations()[i] + c;
    if (!(s < total)) s -= total;
    const AlgNum room = total - s;
    if (len > room) {
      lengths.push_back(room);
      translations.push_back(s - a);
      lengths.push_back(len - room);
      translations.push_back(zero_of(total) - (a + room));
    } else {
      lengths.push_back(len);
      translations.push_back(s - a);
    }
  }
  return Iet::from_translations(total, std::move(lengths), translations, true).canonical();
}

Iet scale(const Iet& f, const AlgNum& s) {
  if (alg_sign(s) <= 0) throw InvalidInput("scale factor must be positive");
  std::vector<AlgNum> lengths;
  lengths.reserve(f.size());
  for (const auto& len : f.lengths()) lengths.push_back(len * s);
  return Iet::create(f.total() * s, std::move(lengths), f.perm(), f.circle());
}

FirstReturn first_return_detailed(const Iet& f, const AlgNum& b, long cap) {
  if (alg_sign(b) <= 0 || b > f.total()) throw InvalidInput("first-return window must satisfy 0 < b <= total");
  struct Piece {
    AlgNum start;  // in [0, b)
    AlgNum length;
    AlgNum position;  // current image of start
    AlgNum shift;
    long steps;
  };
  const AlgNum zero = zero_of(b);
  std::vector<Piece> active{{zero, b, zero, zero, 0}};
  std::vector<ReturnPiece> done;
  long iterations = 0;
  while (!active.empty()) {
    Piece p = std::move(active.back());
    active.pop_back();
    if (++iterations > cap) {
      throw IterationCapExceeded("first-return induction exceeded " + std::to_string(cap) + " piece iterations");
    }
    const std::size_t i = f.locate(p.position);
    const AlgNum& fend = f.breakpoints()[i + 1];
    if (p.position + p.length > fend) {
      AlgNum head = fend - p.position;
      active.push_back({p.start + head, p.length - head, fend, p.shift, p.steps});
      p.length = std::move(head);
    }
    const AlgNum& t = f.translations()[i];
    p.position += t;
    p.shift += t;
    ++p.steps;
    if (p.position < b) {
      const AlgNum room = b - p.position;
      if (p.length > room) {
        active.push_back({p.start + room, p.length - room, b, p.shift, p.steps});
        p.length = room;
      }
      done.push_back({std::move(p.start), std::move(p.length), std::move(p.shift), p.steps});
    } else {
      active.push_back(std::move(p));
    }
  }
  std::sort(done.begin(), done.end(), [](const ReturnPiece& x, const ReturnPiece& y) { return x.start < y.start; });
  std::vector<AlgNum> lengths, translations;
  for (const auto& piece : done) {
    lengths.push_back(piece.length);
    translations.push_back(piece.translation);
  }
  Iet map = Iet::from_translations(b, std::move(lengths), translations, f.circle()).canonical();
  return {std::move(map), std::move(done)};
}

Iet first_return(const Iet& f, const AlgNum& b, long cap) { return first_return_detailed(f, b, cap).map; }

Iet pair_involution(std::span<const AlgNum> blocks, std::span<const int> pairing) {
  const std::size_t n = blocks.size();
  if (n == 0) throw InvalidInput("pair involution needs at least one block");
  if (pairing.size() != n) throw InvalidInput("pairing must have one entry per block");
  for (std::size_t i = 0; i < n; ++i) {
    const int j = pairing[i];
    if (j < 0 || static_cast<std::size_t>(j) >= n || pairing[j] != static_cast<int>(i)) {
      throw InvalidInput("pairing is not an involution");
    }
    if (!(blocks[i] == blocks[j])) throw InvalidInput("paired blocks have different lengths");
  }
  std::vector<AlgNum> lengths(blocks.begin(), blocks.end());
  const auto starts = cumulative(zero_of(blocks[0]), lengths);
  std::vector<AlgNum> translations;
  for (std::size_t i = 0; i < n; ++i) translations.push_back(starts[pairing[i]] - starts[i]);
  return Iet::from_translations(starts.back(), std::move(lengths), translations, true);
}

// ---------------------------------------------------------------------------

WedgeClass::WedgeClass(NumberField field, std::vector<Rational> entries)
    : field_(std::move(field)), m_(std::move(entries)) {
  const auto d = static_cast<std::size_t>(field_.degree());
  if (m_.size() != d * d) throw InvalidInput("wedge matrix has the wrong size");
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (m_[i * d + j] != -m_[j * d + i]) throw InvalidInput("wedge matrix is not antisymmetric");
    }
  }
}

WedgeClass WedgeClass::zero(const NumberField& field) {
  const auto d = static_cast<std::size_t>(field.degree());
  return WedgeClass(field, std::vector<Rational>(d * d));
}

bool WedgeClass::is_zero() const {
  return std::all_of(m_.begin(), m_.end(), [](const Rational& q) { return q == 0; });
}

WedgeClass operator+(const WedgeClass& a, const WedgeClass& b) {
  if (!(a.field_ == b.field_)) throw InvalidInput("number field mismatch in wedge sum");
  std::vector<Rational> out(a.m_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.m_[i] + b.m_[i];
  return WedgeClass(a.field_, std::move(out));
}

WedgeClass operator-(const WedgeClass& a) {
  std::vector<Rational> out(a.m_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = -a.m_[i];
  return WedgeClass(a.field_, std::move(out));
}

bool operator==(const WedgeClass& a, const WedgeClass& b) { return a.field_ == b.field_ && a.m_ == b.m_; }

WedgeClass saf(const Iet& f) {
  return WedgeClass(f.field(), kernels::serial::saf_matrix(f.lengths(), f.translations(), f.field().degree()));
}

}  // namespace ietsaf
