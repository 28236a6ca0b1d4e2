// Copyright 2026 The proofmine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "proofmine/real_codes.hpp"

#include <algorithm>
#include <cassert>
#include <iostream>

#include "proofmine/error.hpp"

namespace proofmine {

mpz_class PairJ(const mpz_class& n, const mpz_class& m) {
  mpz_class s = n + m;
  mpz_class numerator = s * s + 3 * n + m;
  if (mpz_odd_p(numerator.get_mpz_t())) {
    // Unreachable: s^2 + 3n + m = s^2 + s + 2n and s^2 + s is even.
    std::cerr << "proofmine: odd pairing numerator for (" << n << "," << m << ")\n";
    return 0;
  }
  return numerator / 2;
}

std::uint64_t PairJ(std::uint64_t n, std::uint64_t m) {
  __extension__ typedef unsigned __int128 Wide;
  const Wide s = static_cast<Wide>(n) + m;
  const Wide r = (s * s + 3 * static_cast<Wide>(n) + m) / 2;
  if (s >> 64 || r >> 64) throw Error(ErrorCode::kUnsupportedType, "pair code exceeds 64 bits");
  return static_cast<std::uint64_t>(r);
}

std::pair<mpz_class, mpz_class> UnpairJ(const mpz_class& code) {
  // code = s(s+1)/2 + n with s = n + m and 0 <= n <= s.
  mpz_class disc = 8 * code + 1;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
  mpz_class s = (root - 1) / 2;
  while ((s + 1) * (s + 2) / 2 <= code) ++s;
  while (s * (s + 1) / 2 > code) --s;
  mpz_class n = code - s * (s + 1) / 2;
  return {n, s - n};
}

mpq_class RatValue(const RatCode& c) {
  auto [a, b] = UnpairJ(c.code);
  mpq_class q;
  if (mpz_even_p(a.get_mpz_t())) {
    q = mpq_class(a / 2, b + 1);
  } else {
    q = mpq_class(-((a + 1) / 2), b + 1);
  }
  q.canonicalize();
  return q;
}

double RatValueDouble(std::uint64_t code) {
  return RatValue(RatCode{mpz_class(std::to_string(code))}).get_d();
}

RatCode EncodeRational(const mpq_class& q_in) {
  mpq_class q = q_in;
  q.canonicalize();
  const mpz_class& p = q.get_num();
  const mpz_class& d = q.get_den();
  mpz_class a = p >= 0 ? mpz_class(2 * p) : mpz_class(-2 * p - 1);
  return RatCode{PairJ(a, d - 1)};
}

mpq_class PowTwoInv(unsigned n) {
  mpz_class den = 1;
  den <<= n;
  return mpq_class(mpz_class(1), den);
}

RealCode FromRational(const mpq_class& q) {
  RatCode c = EncodeRational(q);
  return RealCode([c](unsigned) { return c; }, true);
}

RatCode CanonicalRepAt(const mpq_class& r, unsigned n) {
  if (r < 0) throw Error(ErrorCode::kNegativeInput, "(r)o needs r >= 0, got " + r.get_str());
  mpz_class scale = 1;
  scale <<= (n + 1);
  // k0 = floor(r * 2^(n+1))
  mpq_class scaled = r * mpq_class(scale);
  mpz_class k0;
  mpz_fdiv_q(k0.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  return RatCode{PairJ(mpz_class(2 * k0), mpz_class(scale - 1))};
}

RealCode CanonicalRep(const mpq_class& r) {
  if (r < 0) throw Error(ErrorCode::kNegativeInput, "(r)o needs r >= 0, got " + r.get_str());
  return RealCode([r](unsigned n) { return CanonicalRepAt(r, n); }, true);
}

RealCode Add(const RealCode& x, const RealCode& y) {
  return RealCode([x, y](unsigned n) { return EncodeRational(x.approx(n + 1) + y.approx(n + 1)); },
                  x.fast_cauchy() && y.fast_cauchy());
}

RealCode Negate(const RealCode& x) {
  return RealCode([x](unsigned n) { return EncodeRational(-x.approx(n)); }, x.fast_cauchy());
}

RealCode Subtract(const RealCode& x, const RealCode& y) { return Add(x, Negate(y)); }

namespace {

/// Smallest e with 2^e >= v, for v >= 1.
unsigned CeilLog2(const mpz_class& v) {
  unsigned e = 0;
  mpz_class p = 1;
  while (p < v) {
    p <<= 1;
    ++e;
  }
  return e;
}

}  // namespace

RealCode Multiply(const RealCode& x, const RealCode& y) {
  // |x|, |y| <= B where B bounds |x(0)| + 1 and |y(0)| + 1.
  mpq_class ax = abs(x.approx(0));
  mpq_class ay = abs(y.approx(0));
  mpq_class m = std::max(ax, ay);
  mpz_class ceil_m;
  mpz_cdiv_q(ceil_m.get_mpz_t(), m.get_num_mpz_t(), m.get_den_mpz_t());
  mpz_class bound = ceil_m + 1;
  unsigned shift = CeilLog2(bound + 1) + 2;
  return RealCode(
      [x, y, shift](unsigned n) { return EncodeRational(x.approx(n + shift) * y.approx(n + shift)); },
      x.fast_cauchy() && y.fast_cauchy());
}

RealCode Abs(const RealCode& x) {
  return RealCode([x](unsigned n) { return EncodeRational(abs(x.approx(n))); }, x.fast_cauchy());
}

RealCode GuardedRecip(const RealCode& x, unsigned l) {
  // c = x(l+2) is within 2^-(l+2) of x. If |x| > 2^-l then |c| > (3/4) 2^-l,
  // and |c| > (3/4) 2^-l in turn gives |x| > 2^-(l+1). Reading x at
  // n + 2l + 3 then keeps the reciprocal within 2^-n.
  mpq_class c = abs(x.approx(l + 2));
  mpq_class threshold = mpq_class(3, 4) * PowTwoInv(l);
  if (c <= threshold) return FromRational(0);
  return RealCode([x, l](unsigned n) { return EncodeRational(1 / x.approx(n + 2 * l + 3)); }, true);
}

std::string ComparisonName(Comparison c) {
  switch (c) {
    case Comparison::kLess: return "lt";
    case Comparison::kGreater: return "gt";
    case Comparison::kWithin: return "within";
  }
  return "?";
}

Comparison CompareAt(const RealCode& x, const RealCode& y, unsigned k) {
  // d is within 2^-(k+1) of x - y.
  mpq_class d = x.approx(k + 2) - y.approx(k + 2);
  mpq_class half = PowTwoInv(k + 1);
  if (d < -half) return Comparison::kLess;
  if (d > half) return Comparison::kGreater;
  return Comparison::kWithin;
}

}  // namespace proofmine
