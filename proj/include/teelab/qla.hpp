#pragma once

// Dense quantum linear algebra: states, operators, partial traces, matrix
// functions, entropies and distances. Everything is a pure function on
// immutable values; all logarithms are natural.

#include <functional>
#include <random>

#include "teelab/common.hpp"

namespace teelab {

struct SubsystemLayout {
  std::vector<int> site_dims;

  SubsystemLayout() = default;
  explicit SubsystemLayout(std::vector<int> dims);
  static SubsystemLayout qubits(int n);

  int num_sites() const { return static_cast<int>(site_dims.size()); }
  long long dim() const;
  SubsystemLayout restricted_to(const std::vector<int>& sites) const;
  bool operator==(const SubsystemLayout& o) const { return site_dims == o.site_dims; }
};

// Offsets of every configuration of `sites` (resp. the remaining sites) into
// the flat index space of `layout`. Site 0 is the most significant factor,
// matching kron(site0, site1, ...).
struct IndexSplit {
  std::vector<long long> sub_offsets;   // indexed by configuration of `sites`, in given site order
  std::vector<long long> rest_offsets;  // indexed by configuration of the complement, ascending site order
};
IndexSplit make_index_split(const SubsystemLayout& layout, const std::vector<int>& sites);

class PureStateVector {
 public:
  PureStateVector(Vector amplitudes, SubsystemLayout layout);
  const Vector& amplitudes() const { return amps_; }
  const SubsystemLayout& layout() const { return layout_; }

 private:
  Vector amps_;
  SubsystemLayout layout_;
};

class HermitianOperator {
 public:
  HermitianOperator(Matrix m, SubsystemLayout layout);
  const Matrix& matrix() const { return m_; }
  const SubsystemLayout& layout() const { return layout_; }

 private:
  Matrix m_;
  SubsystemLayout layout_;
};

// Hermitian, PSD, arbitrary positive trace. Needed because e^{-H_X} is in
// general not normalized.
class PositiveOperator {
 public:
  PositiveOperator(Matrix m, SubsystemLayout layout);
  const Matrix& matrix() const { return m_; }
  const SubsystemLayout& layout() const { return layout_; }
  double trace() const { return m_.trace().real(); }

 private:
  Matrix m_;
  SubsystemLayout layout_;
};

class DensityOperator {
 public:
  DensityOperator(Matrix m, SubsystemLayout layout);
  const Matrix& matrix() const { return m_; }
  const SubsystemLayout& layout() const { return layout_; }
  PositiveOperator as_positive() const { return PositiveOperator(m_, layout_); }

 private:
  Matrix m_;
  SubsystemLayout layout_;
};

// Real eigenvalue list, sorted ascending, finite entries only.
struct Spectrum {
  std::vector<double> values;

  Spectrum() = default;
  explicit Spectrum(std::vector<double> v);
  static Spectrum of(const Matrix& hermitian);
  std::size_t size() const { return values.size(); }
};

// --- partial traces -------------------------------------------------------

DensityOperator partial_trace(const PureStateVector& psi, const std::vector<int>& keep);
DensityOperator partial_trace(const DensityOperator& rho, const std::vector<int>& keep);

// Eigenvalues of the reduction onto `sites`, computed on the smaller side of
// the cut (Schmidt symmetry); zeros from padding are dropped.
std::vector<double> region_eigenvalues(const PureStateVector& psi, const std::vector<int>& sites);

// --- matrix functions -----------------------------------------------------

HermitianOperator matrix_fn(const HermitianOperator& a, const std::function<double(double)>& f);
// log with an explicit floor for (near-)zero eigenvalues.
HermitianOperator matrix_log(const HermitianOperator& a, double eig_floor = tol::zero_eig);
HermitianOperator matrix_exp(const HermitianOperator& a);
Matrix matrix_sqrt_psd(const Matrix& m);  // clamps tiny negative eigenvalues to zero

// --- entropies and distances ----------------------------------------------

double entropy_of_eigenvalues(const std::vector<double>& p);
double von_neumann_entropy(const DensityOperator& rho);
double renyi_entropy(const DensityOperator& rho, double alpha);
double relative_entropy(const DensityOperator& rho, const PositiveOperator& sigma);
double relative_entropy(const DensityOperator& rho, const DensityOperator& sigma);
double trace_distance(const DensityOperator& rho, const DensityOperator& sigma);
double trace_norm(const Matrix& m);
double fidelity(const DensityOperator& rho, const DensityOperator& sigma);

// --- Uhlmann alignment ------------------------------------------------------

struct UhlmannResult {
  Matrix unitary;   // acts on the E' factor, maps it to E
  double overlap;   // |<psi| (I (x) U) |phi>|, equals F(psi_S, phi_S)
};
// Both states must carry the shared system S on their leading `n_sys_sites`
// sites; the trailing sites purify.
UhlmannResult uhlmann_align(const PureStateVector& psi, const PureStateVector& phi, int n_sys_sites);

// --- site manipulation ------------------------------------------------------

// Embeds `local` (acting on `sites`, in the given order) into the full space.
Matrix embed_on_sites(const Matrix& local, const std::vector<int>& sites, const SubsystemLayout& layout);
PureStateVector permute_sites(const PureStateVector& psi, const std::vector<int>& new_order);
DensityOperator permute_sites(const DensityOperator& rho, const std::vector<int>& new_order);
void apply_unitary_on_sites(Vector& amps, const Matrix& u, const std::vector<int>& sites,
                            const SubsystemLayout& layout);
Matrix kron(const Matrix& a, const Matrix& b);

// --- random inputs ----------------------------------------------------------

using Rng = std::mt19937_64;
Matrix random_unitary(int dim, Rng& rng);
Matrix random_hermitian(int dim, Rng& rng);
PureStateVector random_pure_state(const SubsystemLayout& layout, Rng& rng);
DensityOperator random_density_operator(const SubsystemLayout& layout, Rng& rng, int rank = 0);

}  // namespace teelab
