#include "gckit/conv.hpp"

#include <algorithm>

namespace gckit {

ConvAlgebra::ConvAlgebra(SheafPtr sheaf, long long limit)
    : sheaf_(std::move(sheaf)), limit_(limit) {
  const FiniteGroupoid& g = base();
  stride_.assign(g.n_arrows, 0);
  carrier_size_ = 1;
  for (int a = 0; a < g.n_arrows; ++a) {
    stride_[a] = carrier_size_;
    int sz = sheaf_->stalk[g.r[a]]->n;
    if (carrier_size_ > (1LL << 62) / sz) {
      carrier_size_ = -1;  // overflow; enumeration impossible anyway
      break;
    }
    carrier_size_ *= sz;
  }
  factorizations_.assign(g.n_arrows, {});
  for (int b = 0; b < g.n_arrows; ++b)
    for (int a = 0; a < g.n_arrows; ++a) {
      int c = g.compose(b, a);
      if (c >= 0) factorizations_[c].emplace_back(b, a);
    }
}

void ConvAlgebra::ensure_enumerable() const {
  if (carrier_size_ < 0 || carrier_size_ > limit_)
    fail(errc::size_limit,
         "carrier of size " +
             (carrier_size_ < 0 ? std::string("> 2^62")
                                : std::to_string(carrier_size_)) +
             " exceeds limit " + std::to_string(limit_));
}

ConvAlgebra::Elem ConvAlgebra::zero() const {
  const FiniteGroupoid& g = base();
  Elem f(g.n_arrows);
  for (int a = 0; a < g.n_arrows; ++a) f[a] = sheaf_->stalk[g.r[a]]->zero;
  return f;
}

bool ConvAlgebra::is_zero(const Elem& f) const {
  const FiniteGroupoid& g = base();
  for (int a = 0; a < g.n_arrows; ++a)
    if (f[a] != sheaf_->stalk[g.r[a]]->zero) return false;
  return true;
}

ConvAlgebra::Elem ConvAlgebra::add(const Elem& f, const Elem& g) const {
  const FiniteGroupoid& gg = base();
  Elem out(gg.n_arrows);
  for (int a = 0; a < gg.n_arrows; ++a)
    out[a] = sheaf_->stalk[gg.r[a]]->a(f[a], g[a]);
  return out;
}

ConvAlgebra::Elem ConvAlgebra::neg(const Elem& f) const {
  const FiniteGroupoid& g = base();
  Elem out(g.n_arrows);
  for (int a = 0; a < g.n_arrows; ++a) out[a] = sheaf_->stalk[g.r[a]]->neg[f[a]];
  return out;
}

ConvAlgebra::Elem ConvAlgebra::convolve(const Elem& f, const Elem& g) const {
  const FiniteGroupoid& gg = base();
  Elem out = zero();
  for (int c = 0; c < gg.n_arrows; ++c) {
    const FiniteRing& st = *sheaf_->stalk[gg.r[c]];
    int acc = st.zero;
    for (auto [b, a] : factorizations_[c])
      acc = st.a(acc, st.m(f[b], sheaf_->apply(b, g[a])));
    out[c] = acc;
  }
  return out;
}

ConvAlgebra::Elem ConvAlgebra::chi(const Bisection& u) const {
  if (!is_bisection(base(), u))
    fail(errc::not_a_bisection, bisection_label(base(), u));
  Elem f = zero();
  for (int a : u) f[a] = *sheaf_->stalk[base().r[a]]->one;
  return f;
}

ConvAlgebra::Elem ConvAlgebra::schi(const Bisection& u,
                                    const std::vector<int>& vals) const {
  if (!is_bisection(base(), u))
    fail(errc::not_a_bisection, bisection_label(base(), u));
  if (vals.size() != u.size())
    fail(errc::parse_error, "section values must align with the bisection");
  Elem f = zero();
  for (std::size_t i = 0; i < u.size(); ++i) {
    int a = u[i];
    int v = vals[i];
    if (v < 0 || v >= sheaf_->stalk[base().r[a]]->n)
      fail(errc::parse_error, "section value outside the stalk");
    f[a] = v;
  }
  return f;
}

ConvAlgebra::Elem ConvAlgebra::identity() const {
  Bisection units;
  for (int x = 0; x < base().n_objects; ++x) units.push_back(base().unit[x]);
  std::sort(units.begin(), units.end());
  return chi(units);
}

std::vector<int> ConvAlgebra::support(const Elem& f) const {
  std::vector<int> out;
  for (int a = 0; a < base().n_arrows; ++a)
    if (f[a] != sheaf_->stalk[base().r[a]]->zero) out.push_back(a);
  return out;
}

bool ConvAlgebra::supported_on(const Elem& f, const Bisection& u) const {
  auto s = support(f);
  return std::includes(u.begin(), u.end(), s.begin(), s.end());
}

std::vector<ConvAlgebra::Elem> ConvAlgebra::local_units() const {
  int no = base().n_objects;
  if (no > 20) fail(errc::size_limit, "too many unit subsets");
  std::vector<Elem> out;
  for (unsigned mask = 0; mask < (1u << no); ++mask) {
    Bisection u;
    for (int x = 0; x < no; ++x)
      if (mask & (1u << x)) u.push_back(base().unit[x]);
    std::sort(u.begin(), u.end());
    out.push_back(chi(u));
  }
  return out;
}

bool ConvAlgebra::is_class_function(const Elem& f) const {
  const FiniteGroupoid& g = base();
  for (int c = 0; c < g.n_arrows; ++c) {
    const FiniteRing& st = *sheaf_->stalk[g.r[c]];
    if (f[c] != st.zero) {
      if (g.d[c] != g.r[c]) return false;
      for (int a = 0; a < st.n; ++a)
        if (st.m(a, f[c]) != st.m(f[c], sheaf_->apply(c, a))) return false;
    }
  }
  for (int c = 0; c < g.n_arrows; ++c) {
    if (g.d[c] != g.r[c]) continue;
    for (int s = 0; s < g.n_arrows; ++s) {
      if (g.r[s] != g.d[c]) continue;
      int conj = g.compose(g.compose(g.inv[s], c), s);
      if (sheaf_->apply(s, f[conj]) != f[c]) return false;
    }
  }
  return true;
}

std::vector<ConvAlgebra::Elem> ConvAlgebra::center() const {
  ensure_enumerable();
  const FiniteGroupoid& g = base();
  // Single-arrow generators span, so commuting with them suffices.
  std::vector<Elem> gens;
  for (int a = 0; a < g.n_arrows; ++a)
    for (int v = 0; v < sheaf_->stalk[g.r[a]]->n; ++v) {
      if (v == sheaf_->stalk[g.r[a]]->zero) continue;
      Elem e = zero();
      e[a] = v;
      gens.push_back(std::move(e));
    }
  std::vector<Elem> out;
  for (long long i = 0; i < carrier_size_; ++i) {
    Elem f = decode(static_cast<int>(i));
    bool central = true;
    for (const Elem& e : gens)
      if (convolve(f, e) != convolve(e, f)) {
        central = false;
        break;
      }
    if (central) out.push_back(std::move(f));
  }
  return out;
}

bool ConvAlgebra::spans_by(const std::vector<Bisection>& sub) const {
  ensure_enumerable();
  GermConditions gc = germ_conditions(base(), sub);
  if (!gc.g1) fail(errc::g1_fails, "family does not cover the arrow space");
  std::vector<char> in(static_cast<std::size_t>(carrier_size_), 0);
  in[encode(zero())] = 1;
  // Generators: every element supported on a single member of sub.
  std::vector<int> gens;
  for (const Bisection& u : sub) {
    long long cnt = 1;
    for (int a : u) cnt *= sheaf_->stalk[base().r[a]]->n;
    for (long long k = 0; k < cnt; ++k) {
      long long rest = k;
      Elem f = zero();
      for (int a : u) {
        int sz = sheaf_->stalk[base().r[a]]->n;
        f[a] = static_cast<int>(rest % sz);
        rest /= sz;
      }
      gens.push_back(encode(f));
    }
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (long long x = 0; x < carrier_size_; ++x) {
      if (!in[x]) continue;
      Elem fx = decode(static_cast<int>(x));
      for (int ge : gens) {
        int y = encode(add(fx, decode(ge)));
        if (!in[y]) {
          in[y] = 1;
          grew = true;
        }
      }
    }
  }
  for (long long x = 0; x < carrier_size_; ++x)
    if (!in[x]) return false;
  return true;
}

int ConvAlgebra::encode(const Elem& f) const {
  ensure_enumerable();
  long long idx = 0;
  for (int a = 0; a < base().n_arrows; ++a) idx += stride_[a] * f[a];
  return static_cast<int>(idx);
}

ConvAlgebra::Elem ConvAlgebra::decode(int idx) const {
  ensure_enumerable();
  Elem f(base().n_arrows);
  long long rest = idx;
  for (int a = 0; a < base().n_arrows; ++a) {
    int sz = sheaf_->stalk[base().r[a]]->n;
    f[a] = static_cast<int>(rest % sz);
    rest /= sz;
  }
  return f;
}

FiniteRing ConvAlgebra::as_ring() const {
  ensure_enumerable();
  int n = static_cast<int>(carrier_size_);
  std::vector<Elem> elems(n);
  for (int i = 0; i < n; ++i) elems[i] = decode(i);
  std::vector<int> addt(static_cast<std::size_t>(n) * n),
      mult(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      addt[static_cast<std::size_t>(i) * n + j] = encode(add(elems[i], elems[j]));
      mult[static_cast<std::size_t>(i) * n + j] =
          encode(convolve(elems[i], elems[j]));
    }
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = format(elems[i]);
  std::optional<int> one;
  if (base().n_objects <= 20) one = encode(identity());
  return FiniteRing::build(n, std::move(addt), std::move(mult),
                           encode(zero()), one, std::move(labels),
                           std::max<long long>(limit_, n));
}

RingPtr ConvAlgebra::as_ring_ptr() const { return make_ring(as_ring()); }

std::string ConvAlgebra::format(const Elem& f) const {
  const FiniteGroupoid& g = base();
  std::string out;
  for (int a = 0; a < g.n_arrows; ++a) {
    const FiniteRing& st = *sheaf_->stalk[g.r[a]];
    if (f[a] == st.zero) continue;
    if (!out.empty()) out += " + ";
    out += st.label(f[a]) + "*chi{" + g.label(a) + "}";
  }
  if (out.empty()) out = "0";
  return out;
}

}  // namespace gckit
