#pragma once

// Processes between block-Hermitian systems in Choi form. A process from A
// to B stores one Choi block per (input block i, output block j) pair, a
// Hermitian matrix on C^{m_i} ox C^{n_j} with input-major indexing: flat
// index alpha * n_j + a for input index alpha and output index a. Kraus
// operators for pair (i,j) are n_j x m_i matrices; the vectorization
// kvec(K)[alpha * n_j + a] = K(a, alpha) ties the two pictures together.

#include <cstdint>
#include <vector>

#include "jordanopt/block_hermitian.hpp"
#include "jordanopt/sampling.hpp"
#include "jordanopt/system.hpp"

namespace jordanopt {

struct ProcessChoi {
  SystemSpec input;
  SystemSpec output;
  // choi[i * output.block_count() + j], size (m_i n_j) x (m_i n_j).
  std::vector<Eigen::MatrixXcd> choi;

  ProcessChoi() = default;
  // Validates block count, sizes, and Hermiticity of every block.
  ProcessChoi(SystemSpec in, SystemSpec out, std::vector<Eigen::MatrixXcd> blocks,
              double hermiticity_tol = 1e-9);

  const Eigen::MatrixXcd& block(int i, int j) const;
  Eigen::MatrixXcd& block(int i, int j);

  // Smallest eigenvalue over all Choi blocks; nonnegative iff the process
  // is completely positive.
  double min_eigenvalue() const;

  double max_abs_diff(const ProcessChoi& o) const;
};

struct KrausProcess {
  SystemSpec input;
  SystemSpec output;
  // kraus[i * output.block_count() + j]: zero or more n_j x m_i operators.
  std::vector<std::vector<Eigen::MatrixXcd>> kraus;

  KrausProcess() = default;
  KrausProcess(SystemSpec in, SystemSpec out);

  std::vector<Eigen::MatrixXcd>& slots(int i, int j);
  const std::vector<Eigen::MatrixXcd>& slots(int i, int j) const;
};

// Column-stacking of a Kraus operator into the Choi index order.
Eigen::VectorXcd kvec(const Eigen::MatrixXcd& k);

ProcessChoi choi_from_kraus(const KrausProcess& kp);

// Eigendecomposes each Choi block and keeps components above the cutoff.
// Throws std::invalid_argument when a block has an eigenvalue below -cp_tol,
// since only completely positive processes admit a Kraus form.
KrausProcess kraus_from_choi(const ProcessChoi& p, double cp_tol = 1e-9,
                             double keep_cutoff = 1e-12);

// Action on states: out_j = sum_i Tr_in[(rho_i^T ox I) C_ij].
BlockHermitian apply(const ProcessChoi& p, const BlockHermitian& rho);
BlockHermitian apply(const KrausProcess& kp, const BlockHermitian& rho);

enum class ProcessClass { NotCP, CPTraceNonIncreasing, CPTP, CPTraceIncreasing };

// Membership thresholds: eigenvalues below -tol break complete positivity;
// the per-input-block partial traces sum_j Tr_out C_ij decide the trace
// behaviour against the identity.
ProcessClass classify_process(const ProcessChoi& p, double tol = 1e-9);

// Per-input-block partial trace sum_j Tr_out[C_ij], an m_i x m_i matrix.
// Trace preservation is equivalent to every one of these being the identity.
std::vector<Eigen::MatrixXcd> input_partial_traces(const ProcessChoi& p);

// For a trace-non-increasing process, builds the branch that restores trace
// preservation: its Kraus operators feed the defect of each input block into
// the first output block, so the two processes together form a test.
ProcessChoi complete_to_test(const ProcessChoi& p, double tol = 1e-9);

ProcessChoi identity_process(const SystemSpec& s);
ProcessChoi zero_process(const SystemSpec& in, const SystemSpec& out);

// Exchange of the two factors of a composite, as a process from A ox B to
// B ox A.
ProcessChoi swap_process(const SystemSpec& a, const SystemSpec& b);

// g after f, by contracting the shared middle system of the two Choi forms.
// Works for arbitrary Hermitian Chois, not only completely positive ones.
ProcessChoi compose_sequential(const ProcessChoi& g, const ProcessChoi& f);

// Side-by-side composition on the composite system, Kronecker of Chois with
// the middle factors interleaved back into composite index order.
ProcessChoi compose_parallel(const ProcessChoi& f, const ProcessChoi& g);

bool processes_equal(const ProcessChoi& f, const ProcessChoi& g, double tol = 1e-9);

// Equality after adjoining an idle partner: samples joint states on
// input ox partner and compares the two extended actions.
bool locally_equal(const ProcessChoi& f, const ProcessChoi& g, const SystemSpec& partner,
                   int trials, std::uint64_t seed, double tol = 1e-9);

// Random trace-preserving process: per input block, a Gaussian stacked
// isometry sliced into m_i Kraus slots per output block.
KrausProcess random_tp_process(Rng& rng, const SystemSpec& in, const SystemSpec& out);

// Random completely positive process with Gaussian Kraus operators, scaled
// to keep traces of order one.
KrausProcess random_cp_process(Rng& rng, const SystemSpec& in, const SystemSpec& out,
                               int slots_per_pair = 2);

}  // namespace jordanopt
