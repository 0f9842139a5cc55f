#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "wucalc/cohomology.hpp"

namespace wucalc {

class Automorphism {
 public:
  Automorphism() = default;
  // Must be a bijection of the listed vertices onto themselves.
  explicit Automorphism(std::map<Vertex, Vertex> mapping);
  static Automorphism identity(const std::vector<Vertex>& vertices);
  // Cycle notation such as "(1 2)(3 4 5)" or "(1,2)"; unlisted vertices are fixed.
  static Automorphism from_cycles(const std::string& text, const std::vector<Vertex>& vertices);

  Vertex operator()(Vertex v) const;
  const std::map<Vertex, Vertex>& mapping() const { return map_; }
  std::vector<Vertex> images() const;
  std::string cycle_notation() const;
  bool is_identity() const;
  int sign() const;  // parity of the vertex permutation

  Automorphism compose(const Automorphism& inner) const;  // this after inner
  Automorphism inverse() const;

  friend bool operator==(const Automorphism& a, const Automorphism& b) = default;
  friend bool operator<(const Automorphism& a, const Automorphism& b) { return a.images() < b.images(); }

 private:
  std::map<Vertex, Vertex> map_;
};

bool is_automorphism(const Graph& g, const Automorphism& t);
bool is_automorphism(const Complex& c, const Automorphism& t);

// Complete automorphism group by backtracking with degree and neighborhood
// fingerprints; sorted by image list, identity first.
std::vector<Automorphism> automorphism_group(const Graph& g, std::size_t bound = 12);
std::vector<Automorphism> automorphism_group(const Complex& c, std::size_t bound = 12);

// Signed permutation of the simplices of c induced by t.
struct CellAction {
  std::vector<std::uint32_t> image;
  std::vector<int> sign;
};
CellAction induced_action(const Complex& c, const Automorphism& t);

struct FixedTupleIndex {
  std::size_t grade;
  std::size_t position;
  int index;  // product of (-1)^dim(x_j) sign(T|x_j)
};

struct LefschetzReport {
  Rational lefschetz_number;
  long long index_sum = 0;
  std::size_t fixed_count = 0;
  bool ok = false;
};

// Caches the basis, harmonic representatives and their Gram inverses so many
// automorphisms can be evaluated cheaply. Sources must be simplicial (one factor).
class LefschetzEngine {
 public:
  explicit LefschetzEngine(std::vector<CellComplexPtr> sources);
  LefschetzEngine(const Complex& c, int k);

  const InteractionBasis& basis() const { return basis_; }
  const BettiVector& betti() const { return betti_; }

  // One automorphism per source, or a single one used for every source.
  std::vector<FixedTupleIndex> fixed_tuples(const std::vector<Automorphism>& t) const;
  Rational lefschetz_number(const std::vector<Automorphism>& t) const;
  LefschetzReport check(const std::vector<Automorphism>& t) const;
  // str(U_T exp(-tL)) by floating eigendecomposition
  double heat_trace(const std::vector<Automorphism>& t, double time) const;

 private:
  struct SignedImage {
    std::vector<std::uint32_t> position;
    std::vector<int> sign;
  };
  std::vector<SignedImage> tuple_action(const std::vector<Automorphism>& t) const;
  void ensure_eigen() const;

  InteractionBasis basis_;
  GradedIntMatrix d_;
  BettiVector betti_;
  std::vector<std::vector<std::vector<BigInt>>> harmonic_;  // [grade][vector][coordinate]
  std::vector<std::vector<Rational>> gram_inverse_;         // [grade] row-major b x b
  struct EigenCache;
  mutable std::shared_ptr<EigenCache> eigen_;
};

Rational lefschetz_number(const Automorphism& t, const Complex& c, int k);
LefschetzReport lefschetz_fixed_point_check(const Automorphism& t, const Complex& c, int k);
std::vector<FixedTupleIndex> fixed_tuples(const Automorphism& t, const InteractionBasis& b);
double heat_trace(const Automorphism& t, const Complex& c, int k, double time);

}  // namespace wucalc
