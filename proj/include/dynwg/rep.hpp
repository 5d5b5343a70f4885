#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "dynwg/linalg.hpp"
#include "dynwg/rootdata.hpp"

namespace dynwg {

inline constexpr long kDefaultDimCap = 500;

/// One weight space of an irrep: a contiguous block of the global basis.
struct WeightSpace {
  Weight weight;
  int offset = 0;
  int dim = 0;
  /// Basis vectors are divided-power monomials f_{i_1}^{(a_1)} ... v_hw, stored
  /// as letter sequences with repeats; letters[0] acts last.
  std::vector<std::vector<int>> monomials;
};

std::string monomial_label(const std::vector<int>& letters);

/// Finite-dimensional irreducible representation with exact Chevalley
/// generator matrices in a weight-graded basis. Immutable once built.
class Irrep {
 public:
  Irrep(LieType type, Weight hw, std::vector<WeightSpace> spaces, std::vector<SparseMatrix> e,
        std::vector<SparseMatrix> f);

  const LieType& type() const { return type_; }
  const RootSystem& roots() const { return roots_; }
  const Weight& highest_weight() const { return hw_; }
  int dim() const { return dim_; }
  int rank() const { return type_.rank; }

  const std::vector<WeightSpace>& spaces() const { return spaces_; }
  const WeightSpace* find(const Weight& mu) const;
  /// Throws InvalidArgument if mu is not a weight.
  const WeightSpace& space(const Weight& mu) const;
  int multiplicity(const Weight& mu) const;

  /// 1-based simple index.
  const SparseMatrix& e(int i) const { return e_.at(static_cast<std::size_t>(i - 1)); }
  const SparseMatrix& f(int i) const { return f_.at(static_cast<std::size_t>(i - 1)); }
  const SparseMatrix& h(int i) const { return h_.at(static_cast<std::size_t>(i - 1)); }

  /// Dense block of a generator from V_from to V_to (zero-sized if a space is missing).
  QMatrix block(const SparseMatrix& gen, const Weight& from, const Weight& to) const;

  std::vector<std::string> labels(const Weight& mu) const;

 private:
  LieType type_;
  RootSystem roots_;
  Weight hw_;
  std::vector<WeightSpace> spaces_;
  std::map<Weight, int> index_;
  int dim_ = 0;
  std::vector<SparseMatrix> e_, f_, h_;
};

/// Builds V(hw). Throws NotDominant, or DimensionCapExceeded when the Weyl
/// dimension exceeds dim_cap.
Irrep build_irrep(const LieType& t, const Weight& hw, long dim_cap = kDefaultDimCap);

// Independent oracles; they never construct matrices.
long weyl_dimension(const LieType& t, const Weight& hw);
/// Multiplicity of every weight of V(hw), by Freudenthal's recursion.
std::map<Weight, long> freudenthal_character(const LieType& t, const Weight& hw);
long freudenthal_multiplicity(const LieType& t, const Weight& hw, const Weight& mu);
/// Dominant weights with Weyl dimension <= cap, sorted.
std::vector<Weight> dominant_weights_up_to_dim(const LieType& t, long cap);

enum class Generator { E, F, H };

/// Exact product of a generator with a vector in the global basis.
QVector apply_generator(const Irrep& v, Generator kind, int i, const QVector& x);

struct StringComponent {
  int m = 0;  ///< highest sl2-weight of the string
  int k = 0;  ///< depth: m - 2k = <nu, coroot_i>
  /// Basis of ker E_i on V_{nu + k alpha_i} (columns, local coordinates).
  std::vector<QVector> primitive;
  /// F_i^{(k)} applied to the primitive basis, columns in V_nu coordinates.
  QMatrix injection;
};

/// V_nu = sum_k F_i^{(k)} (ker E_i on V_{nu + k alpha_i}); components ordered by k.
struct StringDecomposition {
  int index = 0;
  Weight weight;
  std::vector<StringComponent> components;

  /// Columns of all injections side by side: invertible change of basis.
  QMatrix change_of_basis() const;
};

StringDecomposition sl2_strings(const Irrep& v, int i, const Weight& nu);

/// Applies the divided power F_i^{(n)} to a vector of V_from; returns local
/// coordinates in V_{from - n alpha_i}.
QVector divided_power_f(const Irrep& v, int i, const Weight& from, const QVector& local, int n);

/// Chevalley and Serre relations; returns human-readable failures (empty = ok).
std::vector<std::string> check_chevalley_serre(const Irrep& v);

/// On-disk cache of built irreps (JSON), with an in-memory layer. Safe for
/// concurrent use within a process; across processes writes go through a
/// lock file and atomic rename.
class IrrepCache {
 public:
  IrrepCache() = default;
  explicit IrrepCache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {}

  std::shared_ptr<const Irrep> get(const LieType& t, const Weight& hw, long dim_cap = kDefaultDimCap);
  const std::optional<std::filesystem::path>& dir() const { return dir_; }

  /// Cache keys (file stems) present on disk, sorted.
  std::vector<std::string> list() const;
  /// Removes all cache files; returns how many were removed.
  int clear();

  static std::string key(const LieType& t, const Weight& hw);
  static constexpr int kFormatVersion = 1;

 private:
  std::optional<std::filesystem::path> dir_;
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<const Irrep>> memory_;
};

}  // namespace dynwg
