#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "adelic/errors.hpp"

namespace adelic::algebra {

// Element of F_{p^k}, encoded as an index in [0, q): the coefficient vector
// (c_0, ..., c_{k-1}) of the power-basis representative packed base p,
// c_0 least significant.
using Fq = std::uint32_t;

// Description object for F_{p^k} = F_p[x]/(m). Immutable and shareable; all
// arithmetic is exposed on element indices. For small q the add/mul/inv
// tables are precomputed, otherwise products are reduced on the fly.
class FqField {
 public:
  // Deterministic default modulus: the monic irreducible of degree k whose
  // packed coefficient index (c_0 + c_1 p + ...) is smallest.
  static std::shared_ptr<const FqField> make(long p, int k = 1);
  // Explicit monic modulus, coefficients c_0..c_k with c_k = 1.
  static std::shared_ptr<const FqField> make(long p, int k, const std::vector<long>& modulus);

  long p() const { return p_; }
  int k() const { return k_; }
  long q() const { return q_; }
  const std::vector<long>& modulus() const { return mod_; }

  Fq zero() const { return 0; }
  Fq one() const { return 1; }
  Fq from_int(long long n) const;  // image of n under Z -> F_p -> F_q
  Fq from_coeffs(const std::vector<long>& c) const;
  std::vector<long> coeffs(Fq a) const;

  Fq add(Fq a, Fq b) const;
  Fq sub(Fq a, Fq b) const;
  Fq neg(Fq a) const;
  Fq mul(Fq a, Fq b) const;
  Fq inv(Fq a) const;
  Fq pow(Fq a, long long e) const;
  Fq frobenius(Fq a) const { return pow(a, p_); }

  // Absolute trace F_{p^k} -> F_p, returned as an integer in [0, p).
  long trace(Fq a) const;

  bool is_zero(Fq a) const { return a == 0; }

 private:
  FqField(long p, int k, std::vector<long> mod);
  void build_tables();
  Fq mul_slow(Fq a, Fq b) const;

  long p_;
  int k_;
  long q_;
  std::vector<long> mod_;  // c_0..c_k, monic
  bool tables_ = false;
  std::vector<Fq> mul_table_;    // q*q when tables_
  std::vector<Fq> inv_table_;    // q when tables_
  std::vector<long> trace_table_;
};

using FqPtr = std::shared_ptr<const FqField>;

// Arithmetic on dense mod-p coefficient vectors (no leading-zero trimming
// guarantees). Shared by FqField internals, irreducibility testing and the
// cyclotomic oracle in the tests.
namespace modp {
std::vector<long> poly_mul(const std::vector<long>& a, const std::vector<long>& b, long p);
std::vector<long> poly_mod(std::vector<long> a, const std::vector<long>& m, long p);
bool poly_is_irreducible(const std::vector<long>& f, long p);
}  // namespace modp

bool is_prime(long n);

}  // namespace adelic::algebra
