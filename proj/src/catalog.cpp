#include "qgraph/catalog.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qgraph/errors.hpp"

namespace qgraph {

const PauliBasis& pauli() {
  static const PauliBasis basis = [] {
    PauliBasis b;
    b.sigma1 = Matrix::from_rows({{0, 1}, {1, 0}});
    b.sigma2 = Matrix::from_rows({{0, -kI}, {kI, 0}});
    b.sigma3 = Matrix::from_rows({{1, 0}, {0, -1}});
    b.identity = Matrix::identity(2);
    const double r = 1.0 / std::sqrt(2.0);
    b.lambda8 = Matrix::from_rows({{r, 0, 0}, {0, r, 0}, {0, 0, -2.0 * r}});
    return b;
  }();
  return basis;
}

Matrix rotated_sigma3(double t) { return std::sin(t) * pauli().sigma3 + std::cos(t) * pauli().identity; }

QuantumGraph pauli_edge(int k) {
  switch (k) {
    case 1: return quantum_edge(2, pauli().sigma1);
    case 2: return quantum_edge(2, pauli().sigma2);
    case 3: return quantum_edge(2, pauli().sigma3);
    default: throw InvalidInput("pauli_edge: index must be 1, 2 or 3");
  }
}

QuantumGraph m2_graph(int m) {
  if (m < 0 || m > 3) throw InvalidInput("m2_graph: m must be in 0..3");
  const auto& p = pauli();
  std::vector<Matrix> span;
  if (m >= 1) span.push_back(p.sigma1);
  if (m >= 2) span.push_back(p.sigma2);
  if (m >= 3) span.push_back(p.sigma3);
  return graph_from_subspace(2, span);
}

QuantumGraph m2_partial_family(int m, double t) {
  if (m < 1 || m > 3) throw InvalidInput("m2_partial_family: m must be in 1..3");
  if (!(t >= 0.0 && t <= std::numbers::pi / 2.0)) {
    throw InvalidInput("m2_partial_family: t must lie in [0, pi/2]");
  }
  QuantumGraph g = quantum_edge(2, rotated_sigma3(t));
  if (m >= 2) g.adjacency += pauli_edge(2).adjacency;
  if (m >= 3) g.adjacency += pauli_edge(1).adjacency;
  return g;
}

int classify_m2(const QuantumGraph& g) {
  if (!g.set->has_blocks() || g.set->blocks() != std::vector<int>{2}) {
    throw InvalidInput("classify_m2: graph must live on M_2");
  }
  const GraphReport r = graph_report(g);
  if (!r.is_simple) {
    std::ostringstream os;
    os << "classify_m2: graph is not simple (graph=" << r.is_graph << ", undirected=" << r.is_undirected
       << ", loops=" << to_string(r.loop_status) << "); inspect graph_report";
    throw InvalidInput(os.str());
  }
  return static_cast<int>(*r.quantum_edges);
}

QuantumGraph anticommutative_square() {
  QuantumGraph g = pauli_edge(1);
  g.adjacency += pauli_edge(3).adjacency;
  return g;
}

QuantumGraph gell_mann_graph() { return quantum_edge(3, pauli().lambda8); }

std::vector<Matrix> random_su2_subspace(Rng& rng, int dim) {
  if (dim < 0 || dim > 3) throw InvalidInput("random_su2_subspace: dim must be in 0..3");
  std::normal_distribution<double> g(0.0, 1.0);
  const auto& p = pauli();
  std::vector<Matrix> out;
  for (int k = 0; k < dim; ++k) {
    // Real coefficients keep the span closed under adjoints.
    Matrix m = g(rng) * p.sigma1;
    m += g(rng) * p.sigma2;
    m += g(rng) * p.sigma3;
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace qgraph
