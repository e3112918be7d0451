// Copyright 2026 The aamsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aam/tomography.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "aam/circuits.hpp"
#include "aam/rng.hpp"
#include "json_util.hpp"

namespace aam {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

constexpr double kUnusablePlanCondition = 1e6;

// Stacks a record list into the real vector matching the design-matrix row
// order: experiment-major, spectrum line order, Re before Im.
Eigen::VectorXd records_to_vector(const std::vector<SpectralRecord>& records) {
  size_t rows = 0;
  for (const SpectralRecord& r : records) rows += 2 * r.amplitudes.size();
  Eigen::VectorXd b(static_cast<Index>(rows));
  Index at = 0;
  for (const SpectralRecord& r : records)
    for (const SpectralAmplitude& a : r.amplitudes) {
      b(at++) = a.value.real();
      b(at++) = a.value.imag();
    }
  return b;
}

void validate_plan(const TomographyPlan& plan) {
  require(plan.n >= 1 && plan.n_hat >= 0 &&
              plan.n + plan.n_hat <= kMaxQubits,
          "tomography plan: register out of range");
  require(!plan.experiments.empty(), "tomography plan: no experiments");
  const Index nd = Index(1) << plan.n;
  const size_t blocks = size_t(1) << plan.n_hat;
  for (const TomographyExperiment& e : plan.experiments) {
    require(e.blocks.size() == blocks,
            "tomography plan: one block per ancilla basis state required");
    require(e.ancilla_local.rows() == Index(blocks) &&
                e.ancilla_local.cols() == Index(blocks),
            "tomography plan: ancilla operator dimension mismatch");
    for (const Matrix& u : e.blocks)
      require(u.rows() == nd && u.cols() == nd,
              "tomography plan: block dimension mismatch");
  }
}

}  // namespace

long min_experiments(int n, int n_hat) {
  require(n >= 1, "min_experiments: n must be >= 1");
  require(n_hat >= 0, "min_experiments: n_hat must be >= 0");
  require(n + n_hat <= 30, "min_experiments: register too large");
  const long unknowns = (1L << (2 * n)) - 1;
  const long per_experiment = long(n + n_hat) * (1L << (n + n_hat));
  return (unknowns + per_experiment - 1) / per_experiment;
}

int min_sspt_readout_ancillas(int n) {
  require(n >= 1 && n <= 7, "min_sspt_readout_ancillas: n out of range");
  for (int n_b = 0;; ++n_b)
    if (min_experiments(2 * n, n_b) == 1) return n_b;
}

std::vector<CountRow> count_table(int n_max) {
  require(n_max >= 1 && n_max <= 6, "count_table: n_max out of range");
  std::vector<CountRow> rows;
  rows.reserve(size_t(n_max));
  for (int n = 1; n <= n_max; ++n) {
    CountRow r;
    r.n = n;
    r.m_qpt = (1L << (2 * n)) * min_experiments(n, 0);
    r.m_aapt = min_experiments(2 * n, 0);
    r.n_a_aapt = n;
    r.n_a_sspt = n;
    r.n_b_sspt = min_sspt_readout_ancillas(n);
    r.m_sspt = min_experiments(2 * n, r.n_b_sspt);
    rows.push_back(r);
  }
  return rows;
}

UnitaryMatrix experiment_unitary(const TomographyExperiment& e) {
  const UnitaryMatrix blocks = controlled_block(e.blocks);
  const Matrix v_full =
      tensor(Matrix::Identity(e.blocks[0].rows(), e.blocks[0].rows()),
             e.ancilla_local);
  return UnitaryMatrix(v_full * blocks.matrix());
}

std::vector<Matrix> traceless_hermitian_basis(Index dim) {
  require(dim >= 2, "traceless_hermitian_basis: dim must be >= 2");
  std::vector<Matrix> basis;
  basis.reserve(size_t(dim * dim - 1));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (Index i = 0; i < dim; ++i)
    for (Index j = i + 1; j < dim; ++j) {
      Matrix sym = Matrix::Zero(dim, dim);
      sym(i, j) = sym(j, i) = inv_sqrt2;
      basis.push_back(std::move(sym));
      Matrix asym = Matrix::Zero(dim, dim);
      asym(i, j) = Complex(0.0, -inv_sqrt2);
      asym(j, i) = Complex(0.0, inv_sqrt2);
      basis.push_back(std::move(asym));
    }
  for (Index l = 1; l < dim; ++l) {
    Matrix d = Matrix::Zero(dim, dim);
    const double norm = 1.0 / std::sqrt(double(l) * double(l + 1));
    for (Index i = 0; i < l; ++i) d(i, i) = norm;
    d(l, l) = -double(l) * norm;
    basis.push_back(std::move(d));
  }
  return basis;
}

DesignMatrix assemble_design_matrix(const TomographyPlan& plan) {
  validate_plan(plan);
  const Index nd = Index(1) << plan.n;
  const Index ad = Index(1) << plan.n_hat;
  const int total_qubits = plan.n + plan.n_hat;
  const std::vector<Matrix> basis = traceless_hermitian_basis(nd);
  const size_t lines =
      size_t(total_qubits) << (total_qubits - 1);  // complex lines per run
  DesignMatrix d;
  d.matrix.resize(Index(2 * lines * plan.experiments.size()),
                  Index(basis.size()));
  const Matrix mixed_ancilla = Matrix::Identity(ad, ad) / double(ad);
  Index row0 = 0;
  for (const TomographyExperiment& e : plan.experiments) {
    const UnitaryMatrix u = experiment_unitary(e);
    for (size_t j = 0; j < basis.size(); ++j) {
      const DensityMatrix response = evolve(
          DensityMatrix(tensor(basis[j], mixed_ancilla), StateKind::deviation),
          u);
      const SpectralRecord rec = spectrum(response);
      for (size_t i = 0; i < rec.amplitudes.size(); ++i) {
        d.matrix(row0 + Index(2 * i), Index(j)) =
            rec.amplitudes[i].value.real();
        d.matrix(row0 + Index(2 * i + 1), Index(j)) =
            rec.amplitudes[i].value.imag();
      }
    }
    row0 += Index(2 * lines);
  }
  return d;
}

double design_condition_number(const DesignMatrix& d) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(d.matrix);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return std::numeric_limits<double>::infinity();
  const double smax = sv(0), smin = sv(sv.size() - 1);
  if (!(smin > 0.0) || !std::isfinite(smax))
    return std::numeric_limits<double>::infinity();
  return smax / smin;
}

TomographyPlan build_plan(int n, int n_hat, std::uint64_t seed, int draws) {
  require(n >= 1 && n_hat >= 0 && n + n_hat <= kMaxQubits,
          "build_plan: register out of range");
  require(draws >= 1, "build_plan: draws must be >= 1");
  const long k = min_experiments(n, n_hat);
  const Index nd = Index(1) << n;
  const Index ad = Index(1) << n_hat;
  const size_t blocks = size_t(1) << n_hat;

  TomographyPlan best;
  best.n = n;
  best.n_hat = n_hat;
  best.seed = seed;
  best.draws = draws;
  best.condition_number = std::numeric_limits<double>::infinity();
  for (int r = 0; r < draws; ++r) {
    TomographyPlan cand = best;
    cand.experiments.clear();
    for (long e = 0; e < k; ++e) {
      TomographyExperiment exp;
      // A Haar-random ancilla rotation keeps |V(b,a)|^2 non-uniform across
      // ancilla states; uniform-magnitude choices (e.g. Hadamard powers)
      // leave every input-register line reading the same block average and
      // the design matrix rank-deficient.
      exp.ancilla_local =
          ad == 1 ? identity(1)
                  : Matrix(random_unitary(
                               ad, mix_seed(seed, {std::uint64_t(r),
                                                   std::uint64_t(e),
                                                   0x616e63696c6cULL}))
                               .matrix());
      exp.blocks.reserve(blocks);
      for (size_t a = 0; a < blocks; ++a)
        exp.blocks.push_back(
            random_unitary(nd, mix_seed(seed, {std::uint64_t(r),
                                               std::uint64_t(e),
                                               std::uint64_t(a)}))
                .matrix());
      cand.experiments.push_back(std::move(exp));
    }
    cand.condition_number =
        design_condition_number(assemble_design_matrix(cand));
    if (cand.condition_number < best.condition_number) best = std::move(cand);
  }
  if (!std::isfinite(best.condition_number))
    throw std::runtime_error("build_plan: no candidate with finite condition");
  return best;
}

std::vector<SpectralRecord> acquire(const TomographyPlan& plan,
                                    const DensityMatrix& rho) {
  return acquire(plan, rho, 0.0, plan.seed);
}

std::vector<SpectralRecord> acquire(const TomographyPlan& plan,
                                    const DensityMatrix& rho,
                                    double noise_sigma,
                                    std::uint64_t noise_seed) {
  validate_plan(plan);
  require(rho.dim() == (Index(1) << plan.n),
          "acquire: state dimension does not match plan");
  const Index ad = Index(1) << plan.n_hat;
  const DensityMatrix joint = tensor(rho, DensityMatrix::maximally_mixed(ad));
  std::vector<SpectralRecord> records;
  records.reserve(plan.experiments.size());
  for (size_t e = 0; e < plan.experiments.size(); ++e) {
    const DensityMatrix evolved =
        evolve(joint, experiment_unitary(plan.experiments[e]));
    records.push_back(noise_sigma > 0.0
                          ? spectrum(evolved, noise_sigma,
                                     mix_seed(noise_seed, {std::uint64_t(e)}))
                          : spectrum(evolved));
  }
  return records;
}

ReconstructionResult reconstruct(const TomographyPlan& plan,
                                 const std::vector<SpectralRecord>& records,
                                 StateKind kind) {
  validate_plan(plan);
  require(records.size() == plan.experiments.size(),
          "reconstruct: record count does not match plan");
  const int total_qubits = plan.n + plan.n_hat;
  const size_t lines = size_t(total_qubits) << (total_qubits - 1);
  for (const SpectralRecord& r : records)
    require(r.n_qubits == total_qubits && r.amplitudes.size() == lines,
            "reconstruct: record shape does not match plan");

  const DesignMatrix design = assemble_design_matrix(plan);
  const double cond = design_condition_number(design);
  if (!(cond <= kUnusablePlanCondition))
    throw std::runtime_error("reconstruct: design matrix condition " +
                             std::to_string(cond) + " marks the plan unusable");
  const Eigen::VectorXd b = records_to_vector(records);
  Eigen::BDCSVD<Eigen::MatrixXd> svd(design.matrix,
                                     Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd c = svd.solve(b);
  const double residual = (design.matrix * c - b).norm();

  // Residual consistency: noise_sigma is relative to the largest ideal
  // amplitude, approximated here by the largest observed one; the absolute
  // floor covers the noiseless case.
  double sigma_rel = 0.0, amp_scale = 0.0;
  for (const SpectralRecord& r : records) {
    sigma_rel = std::max(sigma_rel, r.noise_sigma);
    for (const SpectralAmplitude& a : r.amplitudes)
      amp_scale = std::max(amp_scale, std::abs(a.value));
  }
  const double threshold =
      10.0 * sigma_rel * amp_scale * std::sqrt(double(b.size())) + 1e-7;
  if (residual > threshold)
    throw std::runtime_error("reconstruct: residual " +
                             std::to_string(residual) +
                             " inconsistent with the records' noise level");

  const Index nd = Index(1) << plan.n;
  const std::vector<Matrix> basis = traceless_hermitian_basis(nd);
  Matrix out = Matrix::Zero(nd, nd);
  for (size_t j = 0; j < basis.size(); ++j) out += c(Index(j)) * basis[j];
  if (kind == StateKind::normalized)
    out += Matrix::Identity(nd, nd) / double(nd);
  ReconstructionResult res;
  res.matrix = std::move(out);
  res.kind = kind;
  res.residual = residual;
  res.condition_number = cond;
  return res;
}

DensityMatrix project_to_physical(const Matrix& rho) {
  require(rho.rows() == rho.cols() && rho.rows() >= 1,
          "project_to_physical: matrix must be square");
  const Matrix h = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  Eigen::VectorXd ev = es.eigenvalues();
  for (Index i = 0; i < ev.size(); ++i) ev(i) = std::max(ev(i), 0.0);
  const double total = ev.sum();
  if (total <= 0.0)
    throw std::runtime_error("project_to_physical: no positive weight left");
  ev /= total;
  Matrix out = es.eigenvectors() * ev.cast<Complex>().asDiagonal() *
               es.eigenvectors().adjoint();
  out = 0.5 * (out + out.adjoint().eval());
  return DensityMatrix(std::move(out), StateKind::normalized);
}

double state_fidelity(const DensityMatrix& a, const DensityMatrix& b) {
  require(a.dim() == b.dim(), "state_fidelity: dimension mismatch");
  require(a.kind() == StateKind::normalized &&
              b.kind() == StateKind::normalized,
          "state_fidelity: states must be normalized");
  Eigen::SelfAdjointEigenSolver<Matrix> es(a.matrix());
  Eigen::VectorXd ev = es.eigenvalues();
  for (Index i = 0; i < ev.size(); ++i) ev(i) = std::sqrt(std::max(ev(i), 0.0));
  const Matrix sqrt_a = es.eigenvectors() * ev.cast<Complex>().asDiagonal() *
                        es.eigenvectors().adjoint();
  Matrix m = sqrt_a * b.matrix() * sqrt_a;
  m = 0.5 * (m + m.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Matrix> es2(m, Eigen::EigenvaluesOnly);
  double acc = 0.0;
  for (Index i = 0; i < es2.eigenvalues().size(); ++i)
    acc += std::sqrt(std::max(es2.eigenvalues()(i), 0.0));
  return acc * acc;
}

std::vector<Matrix> pauli_product_basis(int n) {
  require(n >= 1 && n <= 6, "pauli_product_basis: n out of range");
  const Matrix* singles[4] = {nullptr, &pauli_x(), &pauli_y(), &pauli_z()};
  const Matrix id2 = identity(2);
  std::vector<Matrix> basis;
  basis.reserve(size_t(1) << (2 * n));
  for (long m = 0; m < (1L << (2 * n)); ++m) {
    Matrix op = Matrix::Identity(1, 1);
    for (int pos = 0; pos < n; ++pos) {
      const int digit = int((m >> (2 * (n - 1 - pos))) & 3);
      op = tensor(op, digit == 0 ? id2 : *singles[digit]);
    }
    basis.push_back(std::move(op));
  }
  return basis;
}

ProcessMap ProcessMap::from_unitary(Matrix u) {
  require(is_unitary(u, kUnitaryTol), "ProcessMap: matrix not unitary");
  ProcessMap p;
  p.kraus.push_back(std::move(u));
  return p;
}

ProcessMap ProcessMap::from_kraus(std::vector<Matrix> ks) {
  require(!ks.empty(), "ProcessMap: empty Kraus list");
  const Index d = ks[0].rows();
  Matrix total = Matrix::Zero(d, d);
  for (const Matrix& k : ks) {
    require(k.rows() == d && k.cols() == d,
            "ProcessMap: inconsistent Kraus dimensions");
    total += k.adjoint() * k;
  }
  require(max_abs(total - Matrix::Identity(d, d)) <= 1e-8,
          "ProcessMap: Kraus operators must be trace-preserving");
  ProcessMap p;
  p.kraus = std::move(ks);
  return p;
}

Matrix ProcessMap::apply(const Matrix& rho) const {
  require(!kraus.empty() && rho.rows() == kraus[0].rows() &&
              rho.cols() == kraus[0].cols(),
          "ProcessMap::apply: dimension mismatch");
  Matrix out = Matrix::Zero(rho.rows(), rho.cols());
  for (const Matrix& k : kraus) out += k * rho * k.adjoint();
  return out;
}

Index ProcessMap::dim() const {
  require(!kraus.empty(), "ProcessMap::dim: empty map");
  return kraus[0].rows();
}

Eigen::MatrixXcd beta_matrix(int n) {
  const std::vector<Matrix> ops = pauli_product_basis(n);
  const Index nd = Index(1) << n;
  const Index nsq = nd * nd;
  Eigen::MatrixXcd beta(nsq * nsq, nsq * nsq);
  for (Index m = 0; m < nsq; ++m)
    for (Index nn = 0; nn < nsq; ++nn) {
      const Matrix& em = ops[size_t(m)];
      const Matrix& en = ops[size_t(nn)];
      // E_m E_rs E_n^dag has entries em(r', r) * conj(en(s', s)).
      for (Index r = 0; r < nd; ++r)
        for (Index s = 0; s < nd; ++s)
          for (Index rp = 0; rp < nd; ++rp)
            for (Index sp = 0; sp < nd; ++sp)
              beta((r * nd + s) * nsq + (rp * nd + sp), m * nsq + nn) =
                  em(rp, r) * std::conj(en(sp, s));
    }
  return beta;
}

ChiMatrix chi_from_process(const ProcessMap& process, int n) {
  const Index nd = Index(1) << n;
  require(process.dim() == nd, "chi_from_process: dimension mismatch");
  const std::vector<Matrix> ops = pauli_product_basis(n);
  const Index nsq = nd * nd;
  ChiMatrix chi;
  chi.n = n;
  chi.chi = Matrix::Zero(nsq, nsq);
  for (const Matrix& k : process.kraus) {
    Vector e(nsq);
    for (Index m = 0; m < nsq; ++m)
      e(m) = (ops[size_t(m)].adjoint() * k).trace() / double(nd);
    chi.chi += e * e.adjoint();
  }
  chi.chi = 0.5 * (chi.chi + chi.chi.adjoint().eval());
  return chi;
}

Matrix apply_chi(const ChiMatrix& chi, const Matrix& rho) {
  const Index nd = Index(1) << chi.n;
  require(rho.rows() == nd && rho.cols() == nd,
          "apply_chi: dimension mismatch");
  const std::vector<Matrix> ops = pauli_product_basis(chi.n);
  Matrix out = Matrix::Zero(nd, nd);
  for (Index m = 0; m < Index(ops.size()); ++m)
    for (Index nn = 0; nn < Index(ops.size()); ++nn) {
      const Complex w = chi.chi(m, nn);
      if (w == Complex(0.0, 0.0)) continue;
      out += w * ops[size_t(m)] * rho * ops[size_t(nn)].adjoint();
    }
  return out;
}

double trace_preservation_defect(const ChiMatrix& chi) {
  const Index nd = Index(1) << chi.n;
  const std::vector<Matrix> ops = pauli_product_basis(chi.n);
  Matrix acc = Matrix::Zero(nd, nd);
  for (Index m = 0; m < Index(ops.size()); ++m)
    for (Index nn = 0; nn < Index(ops.size()); ++nn)
      acc += chi.chi(m, nn) * ops[size_t(nn)].adjoint() * ops[size_t(m)];
  return max_abs(acc - Matrix::Identity(nd, nd));
}

double min_chi_eigenvalue(const ChiMatrix& chi) {
  const Matrix h = 0.5 * (chi.chi + chi.chi.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

SsptResult sspt(const ProcessMap& process, int n, int n_a, int n_b,
                double noise_sigma, std::uint64_t seed, int draws) {
  require(n >= 1, "sspt: n must be >= 1");
  require(n_a == n, "sspt: faithful ancilla register requires n_a = n");
  require(n_b >= 0, "sspt: n_b must be >= 0");
  require(noise_sigma >= 0.0, "sspt: noise_sigma must be >= 0");
  const Index nd = Index(1) << n;
  require(process.dim() == nd, "sspt: process dimension mismatch");
  require(min_experiments(2 * n, n_b) == 1,
          "sspt: configuration needs more than one scan");

  // Maximally entangled carrier |Phi> = sum_m |m>|m> / sqrt(N), system on
  // the most significant qubits.
  Vector phi = Vector::Zero(nd * nd);
  for (Index m = 0; m < nd; ++m) phi(m * nd + m) = 1.0 / std::sqrt(double(nd));
  Matrix carrier = phi * phi.adjoint();
  Matrix imprinted = Matrix::Zero(nd * nd, nd * nd);
  const Matrix id_n = Matrix::Identity(nd, nd);
  for (const Matrix& k : process.kraus) {
    const Matrix kk = tensor(k, id_n);
    imprinted += kk * carrier * kk.adjoint();
  }
  imprinted = 0.5 * (imprinted + imprinted.adjoint().eval());

  const TomographyPlan plan =
      build_plan(2 * n, n_b, mix_seed(seed, {0x706c616eULL}), draws);
  const DensityMatrix state(imprinted, StateKind::normalized);
  const std::vector<SpectralRecord> records =
      noise_sigma > 0.0
          ? acquire(plan, state, noise_sigma, mix_seed(seed, {0x6e6f6973ULL}))
          : acquire(plan, state);
  const ReconstructionResult recon =
      reconstruct(plan, records, StateKind::normalized);

  // lambda_{(r,s),(i,i')} = [eps(E_rs)]_{i i'} = N * rho_C[(i,r), (i',s)].
  const Index nsq = nd * nd;
  Eigen::VectorXcd lambda(nsq * nsq);
  for (Index r = 0; r < nd; ++r)
    for (Index s = 0; s < nd; ++s)
      for (Index i = 0; i < nd; ++i)
        for (Index ip = 0; ip < nd; ++ip)
          lambda((r * nd + s) * nsq + (i * nd + ip)) =
              double(nd) * recon.matrix(i * nd + r, ip * nd + s);

  const Eigen::MatrixXcd beta = beta_matrix(n);
  const Eigen::VectorXcd chi_vec = beta.colPivHouseholderQr().solve(lambda);

  SsptResult res;
  res.chi.n = n;
  res.chi.chi = Matrix(nsq, nsq);
  for (Index m = 0; m < nsq; ++m)
    for (Index nn = 0; nn < nsq; ++nn)
      res.chi.chi(m, nn) = chi_vec(m * nsq + nn);
  res.chi.chi = 0.5 * (res.chi.chi + res.chi.chi.adjoint().eval());
  res.reconstruction_residual = recon.residual;
  res.plan_condition_number = plan.condition_number;
  res.min_eigenvalue = min_chi_eigenvalue(res.chi);
  res.cp_warning = res.min_eigenvalue < -1e-6;
  return res;
}

double process_fidelity(const ChiMatrix& a, const ChiMatrix& b) {
  require(a.n == b.n, "process_fidelity: basis mismatch");
  const double na = std::sqrt(std::abs((a.chi.adjoint() * a.chi).trace()));
  const double nb = std::sqrt(std::abs((b.chi.adjoint() * b.chi).trace()));
  if (na == 0.0 || nb == 0.0)
    throw std::invalid_argument("process_fidelity: zero-norm chi");
  return std::abs((a.chi.adjoint() * b.chi).trace()) / (na * nb);
}

std::string chi_to_json(const ChiMatrix& chi) {
  return nlohmann::json{{"n", chi.n},
                        {"basis", "pauli-products-lexicographic"},
                        {"chi", detail::matrix_to_json(chi.chi)}}
      .dump();
}

ChiMatrix chi_from_json(const std::string& text) {
  const nlohmann::json j = detail::parse_json(text, "chi matrix");
  return detail::decode_json("chi matrix", [&j] {
    ChiMatrix chi;
    chi.n = j.at("n").get<int>();
    chi.chi = detail::matrix_from_json(j.at("chi"));
    const Index nsq = Index(1) << (2 * chi.n);
    if (chi.chi.rows() != nsq || chi.chi.cols() != nsq)
      throw std::invalid_argument("chi matrix: dimension mismatch");
    return chi;
  });
}

}  // namespace aam
