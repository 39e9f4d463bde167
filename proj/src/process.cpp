#include "jordanopt/process.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "jordanopt/composite.hpp"

namespace jordanopt {

// =============================================================================
// ProcessChoi / KrausProcess containers
// =============================================================================

ProcessChoi::ProcessChoi(SystemSpec in, SystemSpec out, std::vector<Eigen::MatrixXcd> blocks,
                         double hermiticity_tol)
    : input(std::move(in)), output(std::move(out)), choi(std::move(blocks)) {
  const size_t expected =
      static_cast<size_t>(input.block_count()) * static_cast<size_t>(output.block_count());
  if (choi.size() != expected)
    throw std::invalid_argument("ProcessChoi: block count does not match systems");
  for (int i = 0; i < input.block_count(); ++i)
    for (int j = 0; j < output.block_count(); ++j) {
      const auto& c = block(i, j);
      const long long d =
          static_cast<long long>(input.block_dim(i)) * output.block_dim(j);
      if (c.rows() != d || c.cols() != d)
        throw std::invalid_argument("ProcessChoi: Choi block size mismatch");
      if ((c - c.adjoint()).cwiseAbs().maxCoeff() > hermiticity_tol)
        throw std::invalid_argument("ProcessChoi: Choi block is not Hermitian");
    }
}

const Eigen::MatrixXcd& ProcessChoi::block(int i, int j) const {
  return choi.at(static_cast<size_t>(i * output.block_count() + j));
}

Eigen::MatrixXcd& ProcessChoi::block(int i, int j) {
  return choi.at(static_cast<size_t>(i * output.block_count() + j));
}

double ProcessChoi::min_eigenvalue() const {
  double mn = std::numeric_limits<double>::infinity();
  for (const auto& c : choi) {
    if (c.rows() == 0) continue;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(c, Eigen::EigenvaluesOnly);
    mn = std::min(mn, es.eigenvalues().minCoeff());
  }
  return mn;
}

double ProcessChoi::max_abs_diff(const ProcessChoi& o) const {
  if (input != o.input || output != o.output)
    throw std::invalid_argument("ProcessChoi::max_abs_diff: system mismatch");
  double m = 0.0;
  for (size_t l = 0; l < choi.size(); ++l)
    m = std::max(m, (choi[l] - o.choi[l]).cwiseAbs().maxCoeff());
  return m;
}

KrausProcess::KrausProcess(SystemSpec in, SystemSpec out)
    : input(std::move(in)), output(std::move(out)) {
  kraus.resize(static_cast<size_t>(input.block_count()) *
               static_cast<size_t>(output.block_count()));
}

std::vector<Eigen::MatrixXcd>& KrausProcess::slots(int i, int j) {
  return kraus.at(static_cast<size_t>(i * output.block_count() + j));
}

const std::vector<Eigen::MatrixXcd>& KrausProcess::slots(int i, int j) const {
  return kraus.at(static_cast<size_t>(i * output.block_count() + j));
}

// =============================================================================
// Choi <-> Kraus
// =============================================================================

Eigen::VectorXcd kvec(const Eigen::MatrixXcd& k) {
  const Eigen::Index out = k.rows(), in = k.cols();
  Eigen::VectorXcd v(in * out);
  for (Eigen::Index al = 0; al < in; ++al)
    for (Eigen::Index a = 0; a < out; ++a) v(al * out + a) = k(a, al);
  return v;
}

ProcessChoi choi_from_kraus(const KrausProcess& kp) {
  std::vector<Eigen::MatrixXcd> blocks;
  blocks.reserve(kp.kraus.size());
  for (int i = 0; i < kp.input.block_count(); ++i)
    for (int j = 0; j < kp.output.block_count(); ++j) {
      const long long d =
          static_cast<long long>(kp.input.block_dim(i)) * kp.output.block_dim(j);
      Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(d, d);
      for (const auto& k : kp.slots(i, j)) {
        if (k.rows() != kp.output.block_dim(j) || k.cols() != kp.input.block_dim(i))
          throw std::invalid_argument("choi_from_kraus: Kraus operator size mismatch");
        const Eigen::VectorXcd v = kvec(k);
        c += v * v.adjoint();
      }
      blocks.push_back(std::move(c));
    }
  return ProcessChoi(kp.input, kp.output, std::move(blocks));
}

KrausProcess kraus_from_choi(const ProcessChoi& p, double cp_tol, double keep_cutoff) {
  KrausProcess kp(p.input, p.output);
  for (int i = 0; i < p.input.block_count(); ++i)
    for (int j = 0; j < p.output.block_count(); ++j) {
      const auto& c = p.block(i, j);
      const int n_out = p.output.block_dim(j);
      const int m_in = p.input.block_dim(i);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(c);
      for (int e = 0; e < es.eigenvalues().size(); ++e) {
        const double lam = es.eigenvalues()(e);
        if (lam < -cp_tol)
          throw std::invalid_argument("kraus_from_choi: process is not completely positive");
        if (lam <= keep_cutoff) continue;
        const Eigen::VectorXcd v = std::sqrt(lam) * es.eigenvectors().col(e);
        Eigen::MatrixXcd k(n_out, m_in);
        for (int al = 0; al < m_in; ++al)
          for (int a = 0; a < n_out; ++a) k(a, al) = v(al * n_out + a);
        kp.slots(i, j).push_back(std::move(k));
      }
    }
  return kp;
}

// =============================================================================
// Action on states
// =============================================================================

BlockHermitian apply(const ProcessChoi& p, const BlockHermitian& rho) {
  if (rho.system() != p.input) throw std::invalid_argument("apply: state system mismatch");
  BlockHermitian out = BlockHermitian::zero(p.output);
  for (int j = 0; j < p.output.block_count(); ++j) {
    const int n = p.output.block_dim(j);
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < p.input.block_count(); ++i) {
      const int m = p.input.block_dim(i);
      const auto& c = p.block(i, j);
      const auto& r = rho.block(i);
      // out(a,b) += sum_{al,be} rho(be,al) * C(be*n + a, al*n + b)
      for (int al = 0; al < m; ++al)
        for (int be = 0; be < m; ++be) {
          const std::complex<double> w = r(be, al);
          if (w == std::complex<double>(0.0, 0.0)) continue;
          acc += w * c.block(be * n, al * n, n, n);
        }
    }
    out.block(j) = 0.5 * (acc + acc.adjoint());  // clear roundoff asymmetry
  }
  return out;
}

BlockHermitian apply(const KrausProcess& kp, const BlockHermitian& rho) {
  if (rho.system() != kp.input) throw std::invalid_argument("apply: state system mismatch");
  BlockHermitian out = BlockHermitian::zero(kp.output);
  for (int j = 0; j < kp.output.block_count(); ++j)
    for (int i = 0; i < kp.input.block_count(); ++i)
      for (const auto& k : kp.slots(i, j)) out.block(j) += k * rho.block(i) * k.adjoint();
  return out;
}

// =============================================================================
// Classification and completion
// =============================================================================

std::vector<Eigen::MatrixXcd> input_partial_traces(const ProcessChoi& p) {
  std::vector<Eigen::MatrixXcd> traces;
  traces.reserve(static_cast<size_t>(p.input.block_count()));
  for (int i = 0; i < p.input.block_count(); ++i) {
    const int m = p.input.block_dim(i);
    Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(m, m);
    for (int j = 0; j < p.output.block_count(); ++j) {
      const int n = p.output.block_dim(j);
      const auto& c = p.block(i, j);
      for (int al = 0; al < m; ++al)
        for (int be = 0; be < m; ++be) {
          std::complex<double> s(0.0, 0.0);
          for (int a = 0; a < n; ++a) s += c(al * n + a, be * n + a);
          t(al, be) += s;
        }
    }
    traces.push_back(std::move(t));
  }
  return traces;
}

ProcessClass classify_process(const ProcessChoi& p, double tol) {
  if (p.min_eigenvalue() < -tol) return ProcessClass::NotCP;
  const auto traces = input_partial_traces(p);
  bool tp = true;
  bool non_increasing = true;
  for (int i = 0; i < p.input.block_count(); ++i) {
    const int m = p.input.block_dim(i);
    const Eigen::MatrixXcd defect = Eigen::MatrixXcd::Identity(m, m) - traces[static_cast<size_t>(i)];
    if (defect.cwiseAbs().maxCoeff() > tol) tp = false;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        Eigen::MatrixXcd(0.5 * (defect + defect.adjoint())), Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tol) non_increasing = false;
  }
  if (tp) return ProcessClass::CPTP;
  if (non_increasing) return ProcessClass::CPTraceNonIncreasing;
  return ProcessClass::CPTraceIncreasing;
}

ProcessChoi complete_to_test(const ProcessChoi& p, double tol) {
  const ProcessClass cls = classify_process(p, tol);
  if (cls != ProcessClass::CPTP && cls != ProcessClass::CPTraceNonIncreasing)
    throw std::invalid_argument("complete_to_test: process must be CP and trace-non-increasing");

  const auto traces = input_partial_traces(p);
  KrausProcess completion(p.input, p.output);
  const int n0 = p.output.block_dim(0);
  for (int i = 0; i < p.input.block_count(); ++i) {
    const int m = p.input.block_dim(i);
    // Kraus normalization reads the transposed partial trace.
    const Eigen::MatrixXcd defect =
        Eigen::MatrixXcd::Identity(m, m) - traces[static_cast<size_t>(i)].transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        Eigen::MatrixXcd(0.5 * (defect + defect.adjoint())));
    Eigen::VectorXd lam = es.eigenvalues();
    for (int e = 0; e < lam.size(); ++e) {
      if (lam(e) < -tol)
        throw std::invalid_argument("complete_to_test: trace defect is not PSD");
      lam(e) = std::max(0.0, lam(e));
    }
    const Eigen::MatrixXcd root = es.eigenvectors() * lam.cwiseSqrt().asDiagonal() *
                                  es.eigenvectors().adjoint();
    // One operator per row of the root, feeding the first output block.
    for (int k = 0; k < m; ++k) {
      Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(n0, m);
      op.row(0) = root.row(k);
      completion.slots(i, 0).push_back(std::move(op));
    }
  }
  return choi_from_kraus(completion);
}

// =============================================================================
// Canonical processes
// =============================================================================

ProcessChoi identity_process(const SystemSpec& s) {
  KrausProcess kp(s, s);
  for (int l = 0; l < s.block_count(); ++l)
    kp.slots(l, l).push_back(Eigen::MatrixXcd::Identity(s.block_dim(l), s.block_dim(l)));
  return choi_from_kraus(kp);
}

ProcessChoi zero_process(const SystemSpec& in, const SystemSpec& out) {
  return choi_from_kraus(KrausProcess(in, out));
}

ProcessChoi swap_process(const SystemSpec& a, const SystemSpec& b) {
  const SystemSpec in = tensor_system(a, b);
  const SystemSpec out = tensor_system(b, a);
  KrausProcess kp(in, out);
  for (int i = 0; i < a.block_count(); ++i)
    for (int j = 0; j < b.block_count(); ++j) {
      const int m = a.block_dim(i);
      const int n = b.block_dim(j);
      // |u s> on B ox A from |s u> on A ox B.
      Eigen::MatrixXcd s_op = Eigen::MatrixXcd::Zero(n * m, m * n);
      for (int s = 0; s < m; ++s)
        for (int u = 0; u < n; ++u) s_op(u * m + s, s * n + u) = 1.0;
      const int in_block = i * b.block_count() + j;
      const int out_block = j * a.block_count() + i;
      kp.kraus.at(static_cast<size_t>(in_block * out.block_count() + out_block))
          .push_back(std::move(s_op));
    }
  return choi_from_kraus(kp);
}

// =============================================================================
// Composition
// =============================================================================

ProcessChoi compose_sequential(const ProcessChoi& g, const ProcessChoi& f) {
  if (f.output != g.input)
    throw std::invalid_argument("compose_sequential: middle system mismatch");
  const SystemSpec& in = f.input;
  const SystemSpec& mid = f.output;
  const SystemSpec& out = g.output;

  std::vector<Eigen::MatrixXcd> blocks;
  blocks.reserve(static_cast<size_t>(in.block_count()) * static_cast<size_t>(out.block_count()));
  for (int i = 0; i < in.block_count(); ++i) {
    const int m = in.block_dim(i);
    for (int k = 0; k < out.block_count(); ++k) {
      const int n = out.block_dim(k);
      Eigen::MatrixXcd y = Eigen::MatrixXcd::Zero(m * n, m * n);
      for (int j = 0; j < mid.block_count(); ++j) {
        const int d = mid.block_dim(j);
        const auto& cf = f.block(i, j);
        const auto& cg = g.block(j, k);
        // Matricized contraction over the shared middle indices (t, s):
        //   Y[(a,al),(b,be)] = sum_{t,s} Cf[(a,t),(b,s)] * Cg[(t,al),(s,be)]
        Eigen::MatrixXcd m1(m * m, d * d);
        for (int a = 0; a < m; ++a)
          for (int b = 0; b < m; ++b)
            for (int t = 0; t < d; ++t)
              for (int s = 0; s < d; ++s) m1(a * m + b, t * d + s) = cf(a * d + t, b * d + s);
        Eigen::MatrixXcd m2(d * d, n * n);
        for (int t = 0; t < d; ++t)
          for (int s = 0; s < d; ++s)
            for (int al = 0; al < n; ++al)
              for (int be = 0; be < n; ++be)
                m2(t * d + s, al * n + be) = cg(t * n + al, s * n + be);
        const Eigen::MatrixXcd prod = m1 * m2;
        for (int a = 0; a < m; ++a)
          for (int b = 0; b < m; ++b)
            for (int al = 0; al < n; ++al)
              for (int be = 0; be < n; ++be)
                y(a * n + al, b * n + be) += prod(a * m + b, al * n + be);
      }
      blocks.push_back(0.5 * (y + y.adjoint()));
    }
  }
  return ProcessChoi(in, out, std::move(blocks));
}

ProcessChoi compose_parallel(const ProcessChoi& f, const ProcessChoi& g) {
  const SystemSpec in = tensor_system(f.input, g.input);
  const SystemSpec out = tensor_system(f.output, g.output);

  std::vector<Eigen::MatrixXcd> blocks(
      static_cast<size_t>(in.block_count()) * static_cast<size_t>(out.block_count()));
  for (int ia = 0; ia < f.input.block_count(); ++ia)
    for (int ic = 0; ic < g.input.block_count(); ++ic)
      for (int jb = 0; jb < f.output.block_count(); ++jb)
        for (int jd = 0; jd < g.output.block_count(); ++jd) {
          const int m = f.input.block_dim(ia);
          const int n = f.output.block_dim(jb);
          const int p = g.input.block_dim(ic);
          const int q = g.output.block_dim(jd);
          const Eigen::MatrixXcd kk = kron(f.block(ia, jb), g.block(ic, jd));
          // kron index (al, a, ga, c) -> composite Choi index (al, ga, a, c).
          std::vector<int> idx(static_cast<size_t>(m * n * p * q));
          for (int al = 0; al < m; ++al)
            for (int a = 0; a < n; ++a)
              for (int ga = 0; ga < p; ++ga)
                for (int c = 0; c < q; ++c)
                  idx[static_cast<size_t>(((al * p + ga) * n + a) * q + c)] =
                      ((al * n + a) * p + ga) * q + c;
          const int dim = m * n * p * q;
          Eigen::MatrixXcd y(dim, dim);
          for (int r = 0; r < dim; ++r)
            for (int c2 = 0; c2 < dim; ++c2)
              y(r, c2) = kk(idx[static_cast<size_t>(r)], idx[static_cast<size_t>(c2)]);
          const int in_block = ia * g.input.block_count() + ic;
          const int out_block = jb * g.output.block_count() + jd;
          blocks.at(static_cast<size_t>(in_block * out.block_count() + out_block)) =
              std::move(y);
        }
  return ProcessChoi(in, out, std::move(blocks));
}

bool processes_equal(const ProcessChoi& f, const ProcessChoi& g, double tol) {
  if (f.input != g.input || f.output != g.output) return false;
  return f.max_abs_diff(g) <= tol;
}

bool locally_equal(const ProcessChoi& f, const ProcessChoi& g, const SystemSpec& partner,
                   int trials, std::uint64_t seed, double tol) {
  if (f.input != g.input || f.output != g.output) return false;
  const ProcessChoi idp = identity_process(partner);
  const ProcessChoi fe = compose_parallel(f, idp);
  const ProcessChoi ge = compose_parallel(g, idp);
  const SystemSpec joint = tensor_system(f.input, partner);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const BlockHermitian rho = random_state(rng, joint);
    if (apply(fe, rho).max_abs_diff(apply(ge, rho)) > tol) return false;
  }
  return true;
}

// =============================================================================
// Random processes
// =============================================================================

KrausProcess random_tp_process(Rng& rng, const SystemSpec& in, const SystemSpec& out) {
  KrausProcess kp(in, out);
  for (int i = 0; i < in.block_count(); ++i) {
    const int m = in.block_dim(i);
    // m slots per output block; stacked Gaussian -> thin QR isometry.
    int rows = 0;
    for (int j = 0; j < out.block_count(); ++j) rows += m * out.block_dim(j);
    Eigen::MatrixXcd gmat(rows, m);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < m; ++c) gmat(r, c) = rng.complex_gaussian();
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(gmat);
    Eigen::MatrixXcd iso = qr.householderQ() * Eigen::MatrixXcd::Identity(rows, m);
    int off = 0;
    for (int j = 0; j < out.block_count(); ++j) {
      const int n = out.block_dim(j);
      for (int slot = 0; slot < m; ++slot) {
        kp.slots(i, j).push_back(iso.block(off, 0, n, m));
        off += n;
      }
    }
  }
  return kp;
}

KrausProcess random_cp_process(Rng& rng, const SystemSpec& in, const SystemSpec& out,
                               int slots_per_pair) {
  KrausProcess kp(in, out);
  for (int i = 0; i < in.block_count(); ++i)
    for (int j = 0; j < out.block_count(); ++j) {
      const int m = in.block_dim(i);
      const int n = out.block_dim(j);
      const double scale =
          1.0 / std::sqrt(static_cast<double>(slots_per_pair * out.block_count() * n * m));
      for (int s = 0; s < slots_per_pair; ++s) {
        Eigen::MatrixXcd k(n, m);
        for (int r = 0; r < n; ++r)
          for (int c = 0; c < m; ++c) k(r, c) = scale * rng.complex_gaussian();
        kp.slots(i, j).push_back(std::move(k));
      }
    }
  return kp;
}

}  // namespace jordanopt
