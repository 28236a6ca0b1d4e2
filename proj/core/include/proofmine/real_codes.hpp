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

#ifndef PROOFMINE_REAL_CODES_HPP_
#define PROOFMINE_REAL_CODES_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace proofmine {

/// Pairing j(n,m) = ((n+m)^2 + 3n + m) / 2. The numerator is always even.
mpz_class PairJ(const mpz_class& n, const mpz_class& m);
std::uint64_t PairJ(std::uint64_t n, std::uint64_t m);

/// Inverse of PairJ on its image (which is all of N).
std::pair<mpz_class, mpz_class> UnpairJ(const mpz_class& code);

/// A rational coded as a natural j(a,b): (a/2)/(b+1) for even a and
/// -((a+1)/2)/(b+1) for odd a.
struct RatCode {
  mpz_class code;

  friend bool operator==(const RatCode& a, const RatCode& b) { return a.code == b.code; }
};

mpq_class RatValue(const RatCode& c);
double RatValueDouble(std::uint64_t code);

/// Canonical code of a rational (reduced fraction).
RatCode EncodeRational(const mpq_class& q);

/// A real as a type-1 object: a sequence of rational codes. When
/// fast_cauchy is set the sequence satisfies |x(n) - x(m)| <= 2^-n + 2^-m.
class RealCode {
 public:
  using Sequence = std::function<RatCode(unsigned)>;

  RealCode(Sequence seq, bool fast_cauchy) : seq_(std::move(seq)), fast_cauchy_(fast_cauchy) {}

  RatCode at(unsigned n) const { return seq_(n); }
  mpq_class approx(unsigned n) const { return RatValue(seq_(n)); }
  bool fast_cauchy() const { return fast_cauchy_; }

 private:
  Sequence seq_;
  bool fast_cauchy_;
};

/// The constant sequence of a rational.
RealCode FromRational(const mpq_class& q);

/// (r)o(n) = j(2 k0, 2^(n+1) - 1) with k0 = max k [k / 2^(n+1) <= r].
/// Throws NegativeInput for r < 0.
RealCode CanonicalRep(const mpq_class& r);
RatCode CanonicalRepAt(const mpq_class& r, unsigned n);

RealCode Add(const RealCode& x, const RealCode& y);
RealCode Negate(const RealCode& x);
RealCode Subtract(const RealCode& x, const RealCode& y);
RealCode Multiply(const RealCode& x, const RealCode& y);
RealCode Abs(const RealCode& x);

/// Total reciprocal: represents 1/x whenever |x| > 2^-l, otherwise yields a
/// valid code (the constant 0).
RealCode GuardedRecip(const RealCode& x, unsigned l);

enum class Comparison { kLess, kGreater, kWithin };
std::string ComparisonName(Comparison c);

/// Decides x<y or x>y whenever |x-y| > 2^-k. kWithin guarantees
/// |x-y| <= 2^-k.
Comparison CompareAt(const RealCode& x, const RealCode& y, unsigned k);

/// 2^-n as an exact rational.
mpq_class PowTwoInv(unsigned n);

}  // namespace proofmine

#endif  // PROOFMINE_REAL_CODES_HPP_
