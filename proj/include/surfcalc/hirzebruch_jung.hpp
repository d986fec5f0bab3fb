#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace surfcalc {

/// The cyclic quotient singularity 1/m(1,q): the germ of C^2 divided by
/// (x,y) -> (zx, z^q y) with z a primitive m-th root of unity.
struct CyclicQuotient {
  long long m = 0;
  long long q = 0;

  CyclicQuotient(long long order, long long weight) : m(order), q(weight) {
    if (m < 2) throw DomainError("cyclic quotient needs m >= 2");
    if (q < 1 || q >= m) throw DomainError("cyclic quotient needs 1 <= q < m");
    if (std::gcd(m, q) != 1) throw DomainError("cyclic quotient needs gcd(m,q) = 1");
  }

  bool operator==(const CyclicQuotient&) const = default;

  std::string to_string() const {
    return "1/" + std::to_string(m) + "(1," + std::to_string(q) + ")";
  }
};

/// A linear chain of rational curves: entry b_i >= 2 means the i-th curve
/// has self-intersection -b_i.
struct Chain {
  std::vector<long long> b;

  explicit Chain(std::vector<long long> entries) : b(std::move(entries)) {
    if (b.empty()) throw DomainError("chain must be nonempty");
    for (long long x : b)
      if (x < 2) throw DomainError("chain entries must be >= 2");
  }

  bool operator==(const Chain&) const = default;

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(b[i]);
    }
    return out + "]";
  }
};

/// Result of testing a cyclic quotient for class T, i.e. for admitting a
/// one-parameter Q-Gorenstein smoothing: a rational double point A_k, or
/// 1/(d n^2)(1, dna-1) with 0 < a < n coprime to n. The d = 1 case is the
/// Wahl singularity with Milnor number zero.
struct TClassification {
  enum class Kind { RdpA, T, NotT };

  Kind kind = Kind::NotT;
  long long index = 0; // A_index when RdpA
  long long d = 0, n = 0, a = 0; // parameters when T

  static TClassification rdp(long long index) {
    TClassification t;
    t.kind = Kind::RdpA;
    t.index = index;
    return t;
  }
  static TClassification t(long long d, long long n, long long a) {
    TClassification t_;
    t_.kind = Kind::T;
    t_.d = d;
    t_.n = n;
    t_.a = a;
    return t_;
  }
  static TClassification not_t() { return TClassification{}; }

  bool is_class_t() const { return kind != Kind::NotT; }
  bool is_wahl() const { return kind == Kind::T && d == 1; }

  bool operator==(const TClassification&) const = default;

  std::string to_string() const {
    switch (kind) {
    case Kind::RdpA: return "A" + std::to_string(index);
    case Kind::T:
      if (d == 1) return "Wahl(" + std::to_string(n) + "," + std::to_string(a) + ")";
      return "T(" + std::to_string(d) + ";" + std::to_string(n) + "," + std::to_string(a) + ")";
    case Kind::NotT: return "NotT";
    }
    return "NotT";
  }
};

/// Hirzebruch-Jung expansion: the unique [b_1,...,b_k], all b_i >= 2, with
/// m/q = b_1 - 1/(b_2 - 1/(... - 1/b_k)). Its entries are the negated
/// self-intersections of the minimal resolution chain of 1/m(1,q).
inline Chain hj_expand(const CyclicQuotient& s) {
  std::vector<long long> b;
  long long m = s.m, q = s.q;
  while (q > 0) {
    const long long ceil_div = (m + q - 1) / q;
    b.push_back(ceil_div);
    const long long next = ceil_div * q - m;
    m = q;
    q = next;
  }
  return Chain(std::move(b));
}

/// Inverse of hj_expand: evaluates the continued fraction back to (m, q).
inline CyclicQuotient chain_to_mq(const Chain& c) {
  long long num = c.b.back(), den = 1;
  for (std::size_t i = c.b.size() - 1; i-- > 0;) {
    const long long next_num = c.b[i] * num - den;
    den = num;
    num = next_num;
  }
  if (num < 2 || den < 1)
    throw DomainError("chain does not evaluate to a cyclic quotient");
  return CyclicQuotient(num, den);
}

/// Classifies 1/m(1,q). The RDP case is q = m-1 (A_{m-1}); otherwise the
/// T-parameters, if any, are pinned by g = gcd(m, q+1): the quotient is
/// 1/(d n^2)(1, dna-1) iff m divides g^2, with n = m/g, d = g^2/m,
/// a = (q+1)/g.
inline TClassification classify_t(const CyclicQuotient& s) {
  if (s.q == s.m - 1) return TClassification::rdp(s.m - 1);
  const long long g = std::gcd(s.m, s.q + 1);
  if (g * g % s.m != 0) return TClassification::not_t();
  const long long n = s.m / g;
  const long long d = g * g / s.m;
  const long long a = (s.q + 1) / g;
  if (n < 2 || d < 1 || a < 1 || a >= n || std::gcd(n, a) != 1)
    return TClassification::not_t();
  return TClassification::t(d, n, a);
}

/// Resolution chain of the Wahl singularity 1/n^2(1, na-1).
inline Chain wahl_chain(long long n, long long a) {
  if (n < 2 || a < 1 || a >= n || std::gcd(n, a) != 1)
    throw DomainError("wahl_chain needs 0 < a < n with gcd(n,a) = 1");
  return hj_expand(CyclicQuotient(n * n, n * a - 1));
}

/// Milnor number of the smoothing: k for A_k, d-1 for T(d;n,a).
inline long long milnor_number(const TClassification& t) {
  switch (t.kind) {
  case TClassification::Kind::RdpA: return t.index;
  case TClassification::Kind::T: return t.d - 1;
  case TClassification::Kind::NotT: break;
  }
  throw DomainError("milnor_number is undefined outside class T");
}

/// Dimension of the local Q-Gorenstein deformation space:
/// k for A_k, d for T(d;n,a).
inline long long local_qg_t1_dim(const TClassification& t) {
  switch (t.kind) {
  case TClassification::Kind::RdpA: return t.index;
  case TClassification::Kind::T: return t.d;
  case TClassification::Kind::NotT: break;
  }
  throw DomainError("local_qg_t1_dim is undefined outside class T");
}

} // namespace surfcalc
