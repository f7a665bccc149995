#pragma once

// Schur non-commutativity as an obstruction to being quantum isomorphic to a
// classical graph.

#include <optional>
#include <string>
#include <vector>

#include "qgraph/graph.hpp"

namespace qgraph {

struct ClosureElement {
  Matrix op;          // scaled to max-abs 1
  std::string trace;  // how it was built from the seeds
};

struct SchurClosure {
  SetPtr set;
  std::vector<ClosureElement> elements;  // linearly independent, in discovery order
  int rounds = 0;
  bool partial = false;  // max_dim or the round cap was hit before stabilizing

  std::size_t dim() const { return elements.size(); }
};

inline constexpr int kClosureRounds = 20;
inline constexpr double kSpanThreshold = 1e-8;
// Products smaller than this fraction of their inputs are treated as zero.
inline constexpr double kNoiseFloor = 1e-10;
inline constexpr double kCertificateThreshold = 1e-6;

/// Smallest span containing the seeds closed under composition, Schur product,
/// adjoint and Schur star. max_dim = 0 means N^2.
SchurClosure close_span(const SetPtr& set, const std::vector<ClosureElement>& seeds, std::size_t max_dim = 0);
/// Closure of {I, J, A}.
SchurClosure schur_closure(const QuantumGraph& g, std::size_t max_dim = 0);

struct Certificate {
  Operator x;
  Operator y;
  std::string x_trace;
  std::string y_trace;
  double residual = 0.0;  // max-abs of x . y - y . x
  double threshold = kCertificateThreshold;
};

struct ObstructionResult {
  std::optional<Certificate> certificate;  // unset means inconclusive
  std::size_t closure_dim = 0;
  int rounds = 0;
  bool partial = false;
  double max_residual = 0.0;
};

/// Scans all closure pairs; the largest commutator wins, ties by trace order.
/// An unset certificate does not mean the graph is classical.
ObstructionResult classical_obstruction(const QuantumGraph& g, std::size_t max_dim = 0);

/// max-abs of x . y - y . x.
double schur_commutator(const QuantumSet& set, const Matrix& x, const Matrix& y);

}  // namespace qgraph
