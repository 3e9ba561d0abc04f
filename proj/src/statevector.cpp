#include "apsbench/statevector.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace apsbench {

AngleAssignment::AngleAssignment(std::vector<double> theta) : theta_(std::move(theta)) {
  constexpr double quarter_pi = std::numbers::pi / 4;
  for (double t : theta_)
    if (!(t >= 0.0 && t <= quarter_pi + 1e-15))
      throw std::invalid_argument("angles: theta outside [0, pi/4]");
}

AngleAssignment AngleAssignment::uniform(const Graph& g, double theta) {
  return AngleAssignment(std::vector<double>(g.edge_count(), theta));
}

StateVector::StateVector(int qubits) : n_(qubits) {
  if (qubits < 0 || qubits > 30) throw std::invalid_argument("statevector: bad qubit count");
  amp_.assign(size_t{1} << n_, {0.0, 0.0});
  amp_[0] = {1.0, 0.0};
}

namespace {

// index masks splitting a 2^(n-2) group counter around two qubit positions
struct PairMasks {
  size_t lo, mid, hi, bi, bj;
  PairMasks(int n, int qi, int qj) {
    int a = std::min(qi, qj), b = std::max(qi, qj);
    if (a == b || a < 0 || b >= n) throw std::invalid_argument("statevector: bad qubit pair");
    size_t lo_mask = (size_t{1} << a) - 1;
    size_t mid_mask = ((size_t{1} << (b - 1)) - 1) ^ lo_mask;
    lo = lo_mask;
    mid = mid_mask;
    hi = ~(lo_mask | mid_mask);
    bi = size_t{1} << qi;
    bj = size_t{1} << qj;
  }
  size_t base(size_t g) const { return ((g & hi) << 2) | ((g & mid) << 1) | (g & lo); }
};

inline void pp_rotation_group(std::complex<double>* amp, size_t i00, size_t bi, size_t bj,
                              double c, double s) {
  size_t i01 = i00 | bj, i10 = i00 | bi, i11 = i00 | bi | bj;
  std::complex<double> a00 = amp[i00], a01 = amp[i01], a10 = amp[i10], a11 = amp[i11];
  amp[i00] = c * a00 - s * a11;
  amp[i11] = c * a11 + s * a00;
  amp[i01] = c * a01 + std::complex<double>(0, s) * a10;
  amp[i10] = c * a10 + std::complex<double>(0, s) * a01;
}

}  // namespace

void StateVector::apply_pp_rotation(int qi, int qj, double theta) {
  PairMasks m(n_, qi, qj);
  double c = std::cos(theta), s = std::sin(theta);
  std::complex<double>* amp = amp_.data();
  long long groups = 1LL << (n_ - 2);
#pragma omp parallel for schedule(static)
  for (long long g = 0; g < groups; ++g)
    pp_rotation_group(amp, m.base(static_cast<size_t>(g)), m.bi, m.bj, c, s);
}

void StateVector::apply_pp_rotation_serial(int qi, int qj, double theta) {
  PairMasks m(n_, qi, qj);
  double c = std::cos(theta), s = std::sin(theta);
  std::complex<double>* amp = amp_.data();
  long long groups = 1LL << (n_ - 2);
  for (long long g = 0; g < groups; ++g)
    pp_rotation_group(amp, m.base(static_cast<size_t>(g)), m.bi, m.bj, c, s);
}

double StateVector::norm() const {
  double s = 0;
  for (const auto& a : amp_) s += std::norm(a);
  return std::sqrt(s);
}

StateVector build_state(const Graph& g, const AngleAssignment& angles, int max_qubits) {
  if (g.order() > max_qubits) throw std::invalid_argument("build_state: qubit cap exceeded");
  if (!g.is_simple()) throw std::invalid_argument("build_state: collapse the multigraph first");
  if (angles.size() != g.edge_count())
    throw std::invalid_argument("build_state: angle count mismatch");
  StateVector s(g.order());
  for (int id = 0; id < g.edge_count(); ++id) {
    const auto& e = g.edge(id);
    s.apply_pp_rotation(e.u, e.v, angles.theta(id));
  }
  return s;
}

namespace {

struct Mat2 {
  std::complex<double> a00, a01, a10, a11;
};

Mat2 pauli_matrix(char which) {
  const double r = 1.0 / std::sqrt(2.0);
  switch (which) {
    case 'X': return {{0, 0}, {1, 0}, {1, 0}, {0, 0}};
    case 'Y': return {{0, 0}, {0, -1}, {0, 1}, {0, 0}};
    case 'Z': return {{1, 0}, {0, 0}, {0, 0}, {-1, 0}};
    case 'P': return {{0, 0}, {r, r}, {r, -r}, {0, 0}};   // (X - Y)/sqrt(2)
    case 'Q': return {{0, 0}, {r, -r}, {r, r}, {0, 0}};   // (X + Y)/sqrt(2)
  }
  throw std::invalid_argument("bad pauli");
}

void apply_single(std::vector<std::complex<double>>& amp, int n, int q, const Mat2& m) {
  size_t bq = size_t{1} << q;
  size_t half = size_t{1} << (n - 1);
  size_t lo = bq - 1, hi = ~lo;
  for (size_t i = 0; i < half; ++i) {
    size_t i0 = ((i & hi) << 1) | (i & lo);
    size_t i1 = i0 | bq;
    auto a0 = amp[i0], a1 = amp[i1];
    amp[i0] = m.a00 * a0 + m.a01 * a1;
    amp[i1] = m.a10 * a0 + m.a11 * a1;
  }
}

}  // namespace

double pauli_pair_expectation(const StateVector& s, PauliPair pair, int i, int j) {
  if (i == j) throw std::invalid_argument("pauli_pair_expectation: i == j");
  char a, b;
  switch (pair) {
    case PauliPair::QP: a = 'Q', b = 'P'; break;
    case PauliPair::PQ: a = 'P', b = 'Q'; break;
    case PauliPair::ZZ: a = 'Z', b = 'Z'; break;
    case PauliPair::XX: a = 'X', b = 'X'; break;
    case PauliPair::YY: a = 'Y', b = 'Y'; break;
    default: throw std::invalid_argument("bad pair");
  }
  std::vector<std::complex<double>> work(s.amplitudes().begin(), s.amplitudes().end());
  apply_single(work, s.qubit_count(), i, pauli_matrix(a));
  apply_single(work, s.qubit_count(), j, pauli_matrix(b));
  std::complex<double> acc = 0;
  auto amps = s.amplitudes();
  for (size_t t = 0; t < work.size(); ++t) acc += std::conj(amps[t]) * work[t];
  if (std::abs(acc.imag()) > 1e-12)
    throw std::runtime_error("pauli_pair_expectation: imaginary residue");
  return acc.real();
}

double epr_energy_exact(const Graph& g, const AngleAssignment& angles, int max_qubits) {
  StateVector s = build_state(g, angles, max_qubits);
  double total = 0;
  for (int id = 0; id < g.edge_count(); ++id) {
    const auto& e = g.edge(id);
    double xx = pauli_pair_expectation(s, PauliPair::XX, e.u, e.v);
    double zz = pauli_pair_expectation(s, PauliPair::ZZ, e.u, e.v);
    double yy = pauli_pair_expectation(s, PauliPair::YY, e.u, e.v);
    total += e.weight * 0.5 * (1.0 + xx + zz - yy);
  }
  return total;
}

namespace {

// per-edge action of 1/2 w (II+XX+ZZ-YY): rank-one on each index group,
// out_{00} and out_{11} both gain w (in_{00} + in_{11})
template <bool Parallel>
void epr_apply(const Graph& g, std::span<const double> in, std::span<double> out) {
  int n = g.order();
  if (in.size() != (size_t{1} << n) || out.size() != in.size())
    throw std::invalid_argument("epr apply: size mismatch");
  std::fill(out.begin(), out.end(), 0.0);
  long long groups = n >= 2 ? 1LL << (n - 2) : 0;
  for (const auto& e : g.edges()) {
    PairMasks m(n, e.u, e.v);
    double w = e.weight * e.mult;
    const double* pi = in.data();
    double* po = out.data();
#pragma omp parallel for schedule(static) if (Parallel)
    for (long long gi = 0; gi < groups; ++gi) {
      size_t i00 = m.base(static_cast<size_t>(gi));
      size_t i11 = i00 | m.bi | m.bj;
      double t = w * (pi[i00] + pi[i11]);
      po[i00] += t;
      po[i11] += t;
    }
  }
}

}  // namespace

void apply_epr_hamiltonian(const Graph& g, std::span<const double> in,
                           std::span<double> out) {
  epr_apply<true>(g, in, out);
}

void apply_epr_hamiltonian_serial(const Graph& g, std::span<const double> in,
                                  std::span<double> out) {
  epr_apply<false>(g, in, out);
}

double max_eigenvalue(const Graph& g, int max_qubits) {
  int n = g.order();
  if (n > max_qubits) throw std::invalid_argument("max_eigenvalue: qubit cap exceeded");
  if (n < 2 || g.edge_count() == 0) return 0.0;
  size_t dim = size_t{1} << n;
  double shift = g.total_weight() + n;
  std::vector<double> v(dim), hv(dim);
  // deterministic pseudo-random start, avoids symmetry-orthogonal starts
  uint64_t state = 0x243f6a8885a308d3ULL;
  for (auto& x : v) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    x = ((state >> 11) * 0x1.0p-53) - 0.5;
  }
  double rayleigh = 0, prev = 0;
  for (int it = 0; it < 200000; ++it) {
    apply_epr_hamiltonian(g, v, hv);
    double dot = 0, nrm2 = 0;
    for (size_t i = 0; i < dim; ++i) {
      hv[i] += shift * v[i];
      dot += v[i] * hv[i];
      nrm2 += v[i] * v[i];
    }
    rayleigh = dot / nrm2;
    double scale = 0;
    for (size_t i = 0; i < dim; ++i) scale += hv[i] * hv[i];
    scale = 1.0 / std::sqrt(scale);
    for (size_t i = 0; i < dim; ++i) v[i] = hv[i] * scale;
    if (it > 0 && std::abs(rayleigh - prev) < 1e-10 * std::max(1.0, std::abs(rayleigh)))
      break;
    prev = rayleigh;
  }
  return rayleigh - shift;
}

}  // namespace apsbench
