// Copyright 2026 The clopen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "clopen/upset.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>

namespace clopen {

namespace {

std::atomic<Nat> g_max_period{Nat{1} << 20};

std::vector<Nat> distinct_prime_factors(Nat n) {
  std::vector<Nat> ps;
  for (Nat q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      ps.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

Nat checked_lcm(Nat a, Nat b) {
  Nat g = std::gcd(a, b);
  unsigned __int128 l = static_cast<unsigned __int128>(a / g) * b;
  if (l > g_max_period.load()) {
    throw ResourceError("period " + std::to_string(static_cast<Nat>(l > ~Nat{0} ? ~Nat{0} : l)) +
                        " exceeds the period cap " + std::to_string(g_max_period.load()));
  }
  return static_cast<Nat>(l);
}

}  // namespace

Nat max_period() { return g_max_period.load(); }

void set_max_period(Nat cap) {
  if (cap < 1) throw ValidationError("period cap must be at least 1");
  g_max_period.store(cap);
}

UPSet::UPSet() : threshold_(0), period_(1), transient_(0), residues_(1) {}

UPSet UPSet::naturals() {
  UPSet s;
  s.residues_.set(0);
  return s;
}

UPSet UPSet::from_elements(const std::vector<Nat>& elems) {
  Nat t = 0;
  for (Nat e : elems) t = std::max(t, e + 1);
  Bits tr(t);
  for (Nat e : elems) tr.set(e);
  return from_bits(t, std::move(tr), 1, Bits(1));
}

UPSet UPSet::from_residues(Nat period, const std::vector<Nat>& residues, Nat threshold,
                           const std::vector<Nat>& transient) {
  if (period < 1) throw ValidationError("period must be at least 1");
  if (period > g_max_period.load()) {
    throw ResourceError("period " + std::to_string(period) + " exceeds the period cap");
  }
  Bits res(period);
  for (Nat r : residues) {
    if (r >= period) throw ValidationError("residue " + std::to_string(r) + " not below period");
    res.set(r);
  }
  Bits tr(threshold);
  for (Nat t : transient) {
    if (t >= threshold)
      throw ValidationError("transient element " + std::to_string(t) + " not below threshold");
    tr.set(t);
  }
  return from_bits(threshold, std::move(tr), period, std::move(res));
}

UPSet UPSet::from_bits(Nat threshold, Bits transient, Nat period, Bits residues) {
  if (period < 1 || residues.size() != period || transient.size() != threshold) {
    throw ValidationError("malformed raw tables");
  }
  UPSet s;
  s.threshold_ = threshold;
  s.transient_ = std::move(transient);
  s.period_ = period;
  s.residues_ = std::move(residues);
  s.canonicalize();
  return s;
}

void UPSet::canonicalize() {
  if (residues_.none()) {
    period_ = 1;
    residues_ = Bits(1);
  } else {
    // Minimal period: valid periods dividing p are the multiples of the true
    // minimum, so greedy descent through prime factors reaches it.
    bool progress = true;
    while (progress && period_ > 1) {
      progress = false;
      for (Nat q : distinct_prime_factors(period_)) {
        Nat d = period_ / q;
        bool folds = true;
        for (Nat r = d; r < period_ && folds; ++r) {
          if (residues_.test(r) != residues_.test(r % d)) folds = false;
        }
        if (folds) {
          Bits nr(d);
          for (Nat r = 0; r < d; ++r) nr.set(r, residues_.test(r));
          residues_ = std::move(nr);
          period_ = d;
          progress = true;
          break;
        }
      }
    }
  }
  // Minimal threshold given the period.
  while (threshold_ > 0 &&
         transient_.test(threshold_ - 1) == residues_.test((threshold_ - 1) % period_)) {
    --threshold_;
  }
  transient_.resize(threshold_);
}

Cardinality UPSet::classify() const {
  if (!residues_.none()) return Cardinality::infinite();
  return Cardinality::finite(transient_.count());
}

Nat UPSet::nth(Nat k) const {
  Nat tc = transient_.count();
  if (k < tc) return transient_.nth_set(k);
  if (residues_.none()) {
    throw RangeError("element index " + std::to_string(k) + " out of range for a set of size " +
                     std::to_string(tc));
  }
  Nat k2 = k - tc;
  // Members of [T, T+p) in ascending order, one per residue class.
  std::vector<Nat> base;
  for (Nat o = 0; o < period_; ++o) {
    if (residues_.test((threshold_ + o) % period_)) base.push_back(threshold_ + o);
  }
  Nat rcount = base.size();
  return base[k2 % rcount] + (k2 / rcount) * period_;
}

Nat UPSet::count_below(Nat limit) const {
  if (limit <= threshold_) return transient_.count_prefix(limit);
  Nat c = transient_.count();
  Nat span = limit - threshold_;
  Nat rcount = residues_.count();
  c += (span / period_) * rcount;
  for (Nat o = 0; o < span % period_; ++o) {
    if (residues_.test((threshold_ + o) % period_)) ++c;
  }
  return c;
}

std::vector<Nat> UPSet::transient_elements() const {
  std::vector<Nat> out;
  for (auto i : transient_.to_indices()) out.push_back(i);
  return out;
}

std::vector<Nat> UPSet::residues() const {
  std::vector<Nat> out;
  for (auto i : residues_.to_indices()) out.push_back(i);
  return out;
}

std::strong_ordering UPSet::operator<=>(const UPSet& o) const {
  if (auto c = threshold_ <=> o.threshold_; c != 0) return c;
  if (auto c = period_ <=> o.period_; c != 0) return c;
  if (auto c = transient_.words() <=> o.transient_.words(); c != 0) return c;
  return residues_.words() <=> o.residues_.words();
}

std::size_t UPSet::hash() const {
  std::size_t h = transient_.hash();
  h ^= residues_.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  h ^= threshold_ + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  h ^= period_ + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::string UPSet::brief() const {
  std::ostringstream os;
  if (residues_.none()) {
    os << "{";
    bool first = true;
    for (Nat e : transient_elements()) {
      if (!first) os << ",";
      os << e;
      first = false;
    }
    os << "}";
    return os.str();
  }
  os << "{T=" << threshold_ << " tr={";
  bool first = true;
  for (Nat e : transient_elements()) {
    if (!first) os << ",";
    os << e;
    first = false;
  }
  os << "} p=" << period_ << " R={";
  first = true;
  for (Nat r : residues()) {
    if (!first) os << ",";
    os << r;
    first = false;
  }
  os << "}}";
  return os.str();
}

namespace {

template <class Op>
UPSet pointwise(const UPSet& a, const UPSet& b, Op op) {
  Nat t = std::max(a.threshold(), b.threshold());
  Nat p = checked_lcm(a.period(), b.period());
  Bits tr(t);
  for (Nat n = 0; n < t; ++n) tr.set(n, op(a.contains(n), b.contains(n)));
  Bits res(p);
  for (Nat r = 0; r < p; ++r) {
    // For n >= t with n = r (mod p) membership depends only on the class.
    bool av = a.residue_bits().test(r % a.period());
    bool bv = b.residue_bits().test(r % b.period());
    res.set(r, op(av, bv));
  }
  return UPSet::from_bits(t, std::move(tr), p, std::move(res));
}

}  // namespace

UPSet set_union(const UPSet& a, const UPSet& b) {
  return pointwise(a, b, [](bool x, bool y) { return x || y; });
}

UPSet set_intersection(const UPSet& a, const UPSet& b) {
  return pointwise(a, b, [](bool x, bool y) { return x && y; });
}

UPSet set_complement(const UPSet& a) {
  Bits tr = ~a.transient_bits();
  Bits res = ~a.residue_bits();
  return UPSet::from_bits(a.threshold(), std::move(tr), a.period(), std::move(res));
}

UPSet set_difference(const UPSet& a, const UPSet& b) {
  return set_intersection(a, set_complement(b));
}

bool is_subset(const UPSet& a, const UPSet& b) {
  return set_difference(a, b).is_empty();
}

UPSet index_filter(const UPSet& a, Nat q, Nat r) {
  if (q < 1) throw ValidationError("index filter modulus must be at least 1");
  if (r >= q) throw ValidationError("index filter residue not below modulus");
  if (!a.is_infinite()) throw PreconditionError("index filter requires an infinite set");

  Nat tc = a.transient_bits().count();
  Nat rcount = a.residue_bits().count();
  Nat g = std::gcd(q, rcount);
  Nat m = rcount / g;
  unsigned __int128 wide = static_cast<unsigned __int128>(q / g) * a.period();
  if (wide > g_max_period.load()) {
    throw ResourceError("index filter period exceeds the period cap");
  }
  Nat pp = static_cast<Nat>(wide);
  // Periodic-zone indices j >= 0 (absolute index tc + j) selected when
  // j = r - tc (mod q); values repeat with stride (q/g)*p every m steps.
  Nat rp = ((r % q) + q - (tc % q)) % q;
  std::vector<Nat> starts;
  starts.reserve(m);
  for (Nat t = 0; t < m; ++t) starts.push_back(a.nth(tc + rp + t * q));
  Nat t0 = *std::max_element(starts.begin(), starts.end()) + 1;

  Bits tr(t0);
  for (Nat i = r; i < tc; i += q) tr.set(a.nth(i));
  for (Nat v : starts) tr.set(v);
  Bits res(pp);
  for (Nat v : starts) res.set(v % pp);
  return UPSet::from_bits(t0, std::move(tr), pp, std::move(res));
}

}  // namespace clopen
