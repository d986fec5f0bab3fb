#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "expr.hpp"
#include "lattice.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace surfcalc {

/// One blow-up step: the fresh basis label and the curves through the
/// center with their multiplicities. A center on two curves is their
/// intersection point; an empty center is a general point. Infinitely-near
/// points are expressed by centering on a previously created exceptional
/// curve.
struct BlowUpRecord {
  std::string label;
  std::string curve_name; // table entry for the exceptional curve
  std::vector<std::pair<std::string, long long>> center;
};

/// An ordered list of curve names, read as a configuration whose adjacency
/// is implied by pairwise intersection numbers.
struct CurveConfig {
  std::vector<std::string> members;
};

/// Dual graph of a curve configuration: nodes carry self-intersections,
/// edges carry pairwise intersection numbers (zero edges omitted).
struct DualGraph {
  struct Node {
    std::string name;
    Rational self_intersection;
  };
  struct Edge {
    std::size_t a = 0, b = 0;
    Rational weight;
  };

  std::vector<Node> nodes;
  std::vector<Edge> edges;

  /// True when the graph is a path visiting the nodes in their given
  /// order: consecutive nodes joined by a single edge, no others.
  bool is_path_in_order() const {
    if (edges.size() + 1 != nodes.size()) return false;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const Edge& e = edges[k];
      const auto [lo, hi] = std::minmax(e.a, e.b);
      if (lo != k || hi != k + 1 || e.weight != 1) return false;
    }
    return true;
  }

  std::string to_dot(const std::string& graph_name = "config") const {
    std::string out = "graph \"" + graph_name + "\" {\n";
    for (const Node& n : nodes)
      out += "  \"" + n.name + "\" [label=\"" + n.name + " (" +
             surfcalc::to_string(n.self_intersection) + ")\"];\n";
    for (const Edge& e : edges) {
      out += "  \"" + nodes[e.a].name + "\" -- \"" + nodes[e.b].name + "\"";
      if (e.weight > 1) out += " [label=\"" + surfcalc::to_string(e.weight) + "\"]";
      out += ";\n";
    }
    out += "}\n";
    return out;
  }
};

/// A rational surface presented as an iterated blow-up of the projective
/// plane: the Picard basis, the canonical class, and a table of named
/// curve classes maintained as proper transforms. Immutable after
/// construction; the blow-up operations return fresh models.
class SurfaceModel {
public:
  /// The projective plane with named plane curves of the given degrees.
  static SurfaceModel projective_plane(const std::map<std::string, long long>& curve_degrees) {
    auto basis = std::make_shared<const Basis>(std::vector<std::string>{"h"});
    DivisorClass canonical(basis, {Rational(-3)});
    std::map<std::string, DivisorClass> curves;
    for (const auto& [name, degree] : curve_degrees) {
      validate_curve_name(name);
      if (degree < 1) throw InvalidInputError("plane curve '" + name + "' needs positive degree");
      curves.emplace(name, DivisorClass(basis, {Rational(degree)}));
    }
    return SurfaceModel(std::move(basis), std::move(canonical), std::move(curves), {});
  }

  const BasisPtr& basis() const { return basis_; }
  const DivisorClass& canonical() const { return canonical_; }
  const std::map<std::string, DivisorClass>& curves() const { return curves_; }
  const std::vector<BlowUpRecord>& blowup_log() const { return blowup_log_; }

  bool has_curve(const std::string& name) const { return curves_.count(name) > 0; }

  const DivisorClass& curve(const std::string& name) const {
    const auto it = curves_.find(name);
    if (it == curves_.end()) throw UnknownNameError("no curve named '" + name + "'");
    return it->second;
  }

  Rational k_squared() const { return intersect(canonical_, canonical_); }

  /// Blows up the point cut out by the center: appends a fresh basis
  /// label, subtracts m*e_new from every center curve, adds e_new to the
  /// canonical class, and enters the exceptional curve into the table.
  SurfaceModel blow_up(const std::vector<std::pair<std::string, long long>>& center,
                       const std::string& new_label, std::string curve_name = "") const {
    if (curve_name.empty()) curve_name = new_label;
    validate_curve_name(curve_name);
    if (basis_->contains(new_label))
      throw InvalidInputError("basis label '" + new_label + "' already in use");
    if (curves_.count(curve_name))
      throw InvalidInputError("curve name '" + curve_name + "' already in use");
    for (const auto& [name, mult] : center) {
      if (!curves_.count(name)) throw UnknownNameError("no curve named '" + name + "'");
      if (mult < 1) throw InvalidInputError("center multiplicity must be >= 1");
    }

    std::vector<std::string> labels = basis_->labels();
    labels.push_back(new_label);
    auto basis = std::make_shared<const Basis>(std::move(labels));
    const DivisorClass e_new = DivisorClass::unit(basis, new_label);

    std::map<std::string, DivisorClass> curves;
    for (const auto& [name, cls] : curves_) curves.emplace(name, cls.extended(basis));
    for (const auto& [name, mult] : center) {
      auto it = curves.find(name);
      it->second = it->second - Rational(mult) * e_new;
    }
    curves.emplace(curve_name, e_new);

    std::vector<BlowUpRecord> log = blowup_log_;
    log.push_back(BlowUpRecord{new_label, curve_name, center});
    return SurfaceModel(std::move(basis), canonical_.extended(basis) + e_new, std::move(curves),
                        std::move(log));
  }

  /// Blows down a curve whose class is exactly one exceptional basis
  /// label: the coordinate is deleted everywhere (pushforward) and the
  /// curve leaves the table. K^2 rises by one.
  SurfaceModel blow_down(const std::string& name) const {
    const DivisorClass& cls = curve(name);
    std::size_t label_index = basis_->rank();
    for (std::size_t i = 1; i < basis_->rank(); ++i) {
      if (cls.coords()[i] == 1) {
        if (label_index != basis_->rank())
          throw GeometryError("'" + name + "' is not a contractible exceptional curve");
        label_index = i;
      } else if (cls.coords()[i] != 0) {
        throw GeometryError("'" + name + "' is not a contractible exceptional curve");
      }
    }
    if (cls.coords()[0] != 0 || label_index == basis_->rank())
      throw GeometryError("'" + name + "' is not a contractible exceptional curve");

    std::vector<std::string> labels = basis_->labels();
    labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(label_index));
    auto basis = std::make_shared<const Basis>(std::move(labels));

    std::map<std::string, DivisorClass> curves;
    for (const auto& [curve_name, curve_cls] : curves_) {
      DivisorClass pushed = curve_cls.without_label(basis, label_index);
      if (!pushed.is_zero()) curves.emplace(curve_name, std::move(pushed));
    }
    return SurfaceModel(std::move(basis), canonical_.without_label(basis, label_index),
                        std::move(curves), blowup_log_);
  }

  /// Adds a named class to the curve table. Classes must be integral.
  SurfaceModel with_curve(const std::string& name, const DivisorClass& cls) const {
    validate_curve_name(name);
    if (curves_.count(name)) throw InvalidInputError("curve name '" + name + "' already in use");
    check_same_basis(cls, canonical_);
    if (!cls.is_integral())
      throw InvalidInputError("curve '" + name + "' has non-integral coordinates");
    std::map<std::string, DivisorClass> curves = curves_;
    curves.emplace(name, cls);
    return SurfaceModel(basis_, canonical_, std::move(curves), blowup_log_);
  }

  Rational intersection(const std::string& a, const std::string& b) const {
    return intersect(curve(a), curve(b));
  }

  std::vector<long long> self_intersections(const CurveConfig& config) const {
    std::vector<long long> out;
    out.reserve(config.members.size());
    for (const std::string& name : config.members) {
      const DivisorClass& c = curve(name);
      out.push_back(to_long(intersect(c, c)));
    }
    return out;
  }

  /// Resolves an expression identifier: "K" is the canonical class, then
  /// the curve table, then the basis labels.
  DivisorClass resolve(const std::string& name) const {
    if (name == "K") return canonical_;
    const auto it = curves_.find(name);
    if (it != curves_.end()) return it->second;
    if (basis_->contains(name)) return DivisorClass::unit(basis_, name);
    throw UnknownNameError("cannot resolve '" + name + "'");
  }

  DivisorClass evaluate(const std::string& expression) const {
    return evaluate_expression(expression, [this](const std::string& n) { return resolve(n); });
  }

  /// True iff the two expressions denote the same class in the lattice.
  bool verify_lineqv(const std::string& lhs, const std::string& rhs) const {
    return is_equal(evaluate(lhs), evaluate(rhs));
  }

  DualGraph dual_graph(const std::vector<std::string>& names) const {
    DualGraph g;
    for (const std::string& name : names) {
      const DivisorClass& c = curve(name);
      g.nodes.push_back({name, intersect(c, c)});
    }
    for (std::size_t i = 0; i < names.size(); ++i)
      for (std::size_t j = i + 1; j < names.size(); ++j) {
        const Rational w = intersection(names[i], names[j]);
        if (w != 0) g.edges.push_back({i, j, w});
      }
    return g;
  }

  Matrix intersection_matrix(const CurveConfig& config) const {
    const std::size_t n = config.members.size();
    Matrix m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m[i][j] = intersection(config.members[i], config.members[j]);
    return m;
  }

private:
  SurfaceModel(BasisPtr basis, DivisorClass canonical, std::map<std::string, DivisorClass> curves,
               std::vector<BlowUpRecord> log)
      : basis_(std::move(basis)), canonical_(std::move(canonical)), curves_(std::move(curves)),
        blowup_log_(std::move(log)) {}

  static void validate_curve_name(const std::string& name) {
    Basis::validate_label(name); // same identifier rules as labels
    if (name == "K") throw InvalidInputError("curve name 'K' is reserved for the canonical class");
  }

  BasisPtr basis_;
  DivisorClass canonical_;
  std::map<std::string, DivisorClass> curves_;
  std::vector<BlowUpRecord> blowup_log_;
};

#include "linalg.hpp"

} // namespace surfcalc
