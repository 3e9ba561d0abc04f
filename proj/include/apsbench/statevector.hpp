#pragma once

#include <complex>
#include <span>
#include <vector>

#include "apsbench/angles.hpp"
#include "apsbench/graph.hpp"

namespace apsbench {

/// Dense 2^n state vector. Only what the energy checks need: the pair
/// rotation exp(i theta P_i P_j) with P = (X - Y)/sqrt(2), Pauli-pair
/// expectations, and the spin-model energy / dominant eigenvalue.
class StateVector {
 public:
  explicit StateVector(int qubits);  // |0...0>

  int qubit_count() const { return n_; }
  std::span<const std::complex<double>> amplitudes() const { return amp_; }
  std::span<std::complex<double>> amplitudes() { return amp_; }

  void apply_pp_rotation(int qi, int qj, double theta);         // OpenMP
  void apply_pp_rotation_serial(int qi, int qj, double theta);  // reference

  double norm() const;

 private:
  int n_ = 0;
  std::vector<std::complex<double>> amp_;
};

enum class PauliPair { QP, PQ, ZZ, XX, YY };

/// Apply the pair rotations in edge-id order to |0...0>. Simple graphs
/// only; throws above the qubit cap.
StateVector build_state(const Graph& g, const AngleAssignment& angles,
                        int max_qubits = 20);

/// <state| A_i B_j |state>; imaginary residue beyond 1e-12 is an error.
double pauli_pair_expectation(const StateVector& s, PauliPair pair, int i, int j);

/// Energy of the symmetric-pairing model 1/2 sum w_ij (II+XX+ZZ-YY)
/// evaluated on the rotated state.
double epr_energy_exact(const Graph& g, const AngleAssignment& angles,
                        int max_qubits = 20);

/// Dominant eigenvalue via shifted power iteration with a matrix-free
/// Hamiltonian apply; Rayleigh-quotient convergence.
double max_eigenvalue(const Graph& g, int max_qubits = 14);

/// out = H |in| for the real-symmetric Hamiltonian (kernels exposed for the
/// benchmark and the serial/parallel equivalence tests).
void apply_epr_hamiltonian(const Graph& g, std::span<const double> in,
                           std::span<double> out);
void apply_epr_hamiltonian_serial(const Graph& g, std::span<const double> in,
                                  std::span<double> out);

}  // namespace apsbench
