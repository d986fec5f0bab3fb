#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace surfcalc {

/// Ordered basis of a unimodular lattice of signature (1, n): the first
/// label is the hyperplane class with square +1, every other label is an
/// exceptional class with square -1. Labels are unique identifiers.
class Basis {
public:
  explicit Basis(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw InvalidInputError("basis needs at least the hyperplane label");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      validate_label(labels_[i]);
      for (std::size_t j = i + 1; j < labels_.size(); ++j)
        if (labels_[i] == labels_[j])
          throw InvalidInputError("duplicate basis label '" + labels_[i] + "'");
    }
  }

  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::string& hyperplane() const { return labels_.front(); }

  bool contains(const std::string& name) const {
    return std::find(labels_.begin(), labels_.end(), name) != labels_.end();
  }

  std::size_t index_of(const std::string& name) const {
    const auto it = std::find(labels_.begin(), labels_.end(), name);
    if (it == labels_.end()) throw UnknownNameError("no basis label '" + name + "'");
    return static_cast<std::size_t>(it - labels_.begin());
  }

  /// Diagonal form: +1 on the hyperplane label, -1 elsewhere.
  int form(std::size_t i) const { return i == 0 ? 1 : -1; }

  bool operator==(const Basis& other) const { return labels_ == other.labels_; }

  static void validate_label(const std::string& name) {
    if (name.empty() || (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_'))
      throw InvalidInputError("invalid basis label '" + name + "'");
    for (char c : name)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw InvalidInputError("invalid basis label '" + name + "'");
  }

private:
  std::vector<std::string> labels_;
};

using BasisPtr = std::shared_ptr<const Basis>;

/// Immutable divisor class: exact rational coordinates over a shared basis.
/// All operations return fresh values.
class DivisorClass {
public:
  DivisorClass(BasisPtr basis, std::vector<Rational> coords)
      : basis_(std::move(basis)), coords_(std::move(coords)) {
    if (coords_.size() != basis_->rank())
      throw InvalidInputError("coordinate count does not match basis rank");
  }

  static DivisorClass zero(BasisPtr basis) {
    const std::size_t n = basis->rank();
    return DivisorClass(std::move(basis), std::vector<Rational>(n));
  }

  static DivisorClass unit(BasisPtr basis, const std::string& label) {
    std::vector<Rational> c(basis->rank());
    c[basis->index_of(label)] = 1;
    return DivisorClass(std::move(basis), std::move(c));
  }

  static DivisorClass from_coords(BasisPtr basis, const std::map<std::string, Rational>& coords) {
    std::vector<Rational> c(basis->rank());
    for (const auto& [name, value] : coords) c[basis->index_of(name)] = value;
    return DivisorClass(std::move(basis), std::move(c));
  }

  const BasisPtr& basis() const { return basis_; }
  const std::vector<Rational>& coords() const { return coords_; }

  const Rational& coefficient(const std::string& label) const {
    return coords_[basis_->index_of(label)];
  }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
  }

  bool is_integral() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return is_integer(c); });
  }

  DivisorClass operator+(const DivisorClass& other) const {
    check_same_basis(*this, other);
    std::vector<Rational> c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coords_[i];
    return DivisorClass(basis_, std::move(c));
  }

  DivisorClass operator-(const DivisorClass& other) const {
    check_same_basis(*this, other);
    std::vector<Rational> c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= other.coords_[i];
    return DivisorClass(basis_, std::move(c));
  }

  DivisorClass operator-() const {
    std::vector<Rational> c(coords_);
    for (auto& x : c) x = -x;
    return DivisorClass(basis_, std::move(c));
  }

  friend DivisorClass operator*(const Rational& scalar, const DivisorClass& d) {
    std::vector<Rational> c(d.coords_);
    for (auto& x : c) x *= scalar;
    return DivisorClass(d.basis_, std::move(c));
  }

  /// Re-coordinatizes into a larger basis that extends this one.
  DivisorClass extended(BasisPtr bigger) const {
    if (bigger->rank() < basis_->rank())
      throw BasisMismatchError("target basis is smaller than the source");
    for (std::size_t i = 0; i < basis_->rank(); ++i)
      if (basis_->label(i) != bigger->label(i))
        throw BasisMismatchError("target basis does not extend the source");
    std::vector<Rational> c(bigger->rank());
    std::copy(coords_.begin(), coords_.end(), c.begin());
    return DivisorClass(std::move(bigger), std::move(c));
  }

  /// Pushforward under the contraction of one exceptional label: the
  /// coordinate is deleted.
  DivisorClass without_label(BasisPtr smaller, std::size_t dropped_index) const {
    std::vector<Rational> c;
    c.reserve(coords_.size() - 1);
    for (std::size_t i = 0; i < coords_.size(); ++i)
      if (i != dropped_index) c.push_back(coords_[i]);
    return DivisorClass(std::move(smaller), std::move(c));
  }

  /// Renders over the basis labels, e.g. "3h - e1 - 2e2 + 1/2E4".
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      const Rational& c = coords_[i];
      if (c == 0) continue;
      const Rational mag = c < 0 ? Rational(-c) : c;
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (mag != 1) out += surfcalc::to_string(mag);
      out += basis_->label(i);
    }
    return out.empty() ? "0" : out;
  }

  friend void check_same_basis(const DivisorClass& a, const DivisorClass& b) {
    if (a.basis_ == b.basis_) return;
    if (*a.basis_ == *b.basis_) return;
    throw BasisMismatchError("divisor classes live in different lattices");
  }

private:
  BasisPtr basis_;
  std::vector<Rational> coords_;
};

/// Intersection pairing under the diagonal form <+1, -1, ..., -1>.
/// Symmetric and bilinear; classes must share a basis.
inline Rational intersect(const DivisorClass& a, const DivisorClass& b) {
  check_same_basis(a, b);
  Rational acc = a.coords()[0] * b.coords()[0];
  for (std::size_t i = 1; i < a.coords().size(); ++i) acc -= a.coords()[i] * b.coords()[i];
  return acc;
}

/// Coordinatewise exact equality of classes over the same basis.
inline bool is_equal(const DivisorClass& a, const DivisorClass& b) {
  check_same_basis(a, b);
  return a.coords() == b.coords();
}

inline bool operator==(const DivisorClass& a, const DivisorClass& b) { return is_equal(a, b); }

/// Exact divisibility in the lattice: returns L with d = k*L when every
/// coordinate of d is an integer divisible by k, otherwise nullopt. The
/// Picard group handled here is free, so divisibility is coordinatewise.
inline std::optional<DivisorClass> divide_class(const DivisorClass& d, long long k) {
  if (k < 1) throw DomainError("divisor k must be a positive integer");
  if (!d.is_integral())
    throw DomainError("divisibility is only meaningful for integral classes");
  std::vector<Rational> c(d.coords());
  for (auto& x : c) {
    if (numerator(x) % k != 0) return std::nullopt;
    x = Rational(numerator(x) / k);
  }
  return DivisorClass(d.basis(), std::move(c));
}

} // namespace surfcalc
