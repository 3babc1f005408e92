// Finite and affine Coxeter groups in their integral geometric
// representation, enumerated by length.
//
// An element is the matrix of its action on the simple-root lattice:
// generator s_i sends alpha_j to alpha_j - A_ij alpha_i, and the word
// s_{i1} ... s_{ik} is the product sigma_{i1} ... sigma_{ik}. The
// representation is faithful for every supported type, so the matrix is the
// element's identity and words are only witnesses.
#pragma once

#include "weylzeta/cartan.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace weylzeta {

/// Generator indices, 0-based (s_1 is index 0).
using Word = std::vector<int>;
using GeneratorSet = std::vector<int>;

/// Row-major k x k integer matrix of a group element.
using ElementMatrix = std::vector<std::int64_t>;

struct ElementMatrixHash
{
  std::size_t operator()(const ElementMatrix& m) const noexcept
  {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : m) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// Coxeter matrix entry for an infinite bond.
inline constexpr int kInfiniteOrder = 0;

class CoxeterSystem
{
public:
  /// Builds a system from a generalized Cartan matrix; the Coxeter matrix is
  /// derived from the products A_ij A_ji.
  CoxeterSystem(std::string type_tag, IntMatrix cartan, std::vector<std::int64_t> null_root = {});

  const std::string& type_tag() const { return type_tag_; }
  std::size_t rank() const { return cartan_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const IntMatrix& cartan() const { return cartan_; }
  /// m_ij with m_ii = 1; kInfiniteOrder for infinite bonds.
  int coxeter_entry(std::size_t i, std::size_t j) const { return coxeter_[i][j]; }
  const std::vector<std::vector<int>>& coxeter_matrix() const { return coxeter_; }
  bool affine() const { return !null_root_.empty(); }
  /// The null root delta in simple-root coordinates (affine systems only).
  const std::vector<std::int64_t>& null_root() const { return null_root_; }

  const ElementMatrix& generator(std::size_t i) const { return generators_.at(i); }
  ElementMatrix identity() const;
  ElementMatrix multiply(const ElementMatrix& a, const ElementMatrix& b) const;
  ElementMatrix evaluate(const Word& word) const;

  /// Generator subsets I with W_I finite, decided from the Cartan data.
  bool parabolic_is_finite(const GeneratorSet& subset) const;

  GeneratorSet all_generators() const;

private:
  std::string type_tag_;
  IntMatrix cartan_;
  std::vector<std::vector<int>> coxeter_;
  std::vector<std::string> labels_;
  std::vector<ElementMatrix> generators_;
  std::vector<std::int64_t> null_root_;
};

/// Builds the named system. Supported tags: finite types ("A3", "G2", ...),
/// the affine types "A1t" and rank >= 2 affine types ("A2t", "C2t", "G2t",
/// "E8t", ...). Rank-2 affine systems use the numbering in which
/// (m12, m23, m13) is (3,3,3), (4,2,4) and (6,2,3) respectively, so that
/// s1, s2 generate the finite Weyl group and s3 is the affine reflection.
CoxeterSystem build_system(const std::string& type_tag);

/// Same, with the family letter and rank given separately.
CoxeterSystem build_system(char family, int rank, bool affine);

class ResourceLimitExceeded : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class OutOfTableBound : public std::out_of_range
{
public:
  using std::out_of_range::out_of_range;
};

using ElementId = std::size_t;
inline constexpr ElementId kNoElement = std::numeric_limits<ElementId>::max();

struct GroupElement
{
  ElementMatrix matrix;
  std::size_t length = 0;
  Word word;
};

struct EnumerateOptions
{
  /// Only these generators are used (all when empty).
  GeneratorSet generators;
  /// Cap on the element count; 0 means default_max_elements().
  std::size_t max_elements = 0;
};

/// WEYLZETA_MAX_ELEMENTS when set, 2,000,000 otherwise.
std::size_t default_max_elements();

/// Every element of length <= bound, found by breadth-first search from the
/// identity by right multiplication. Immutable once built.
class ElementTable
{
public:
  const CoxeterSystem& system() const { return system_; }
  std::size_t bound() const { return bound_; }
  std::size_t size() const { return elements_.size(); }

  const GroupElement& element(ElementId id) const { return elements_.at(id); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const std::vector<std::vector<ElementId>>& layers() const { return layers_; }
  std::vector<std::size_t> layer_sizes() const;

  std::optional<ElementId> find(const ElementMatrix& m) const;
  /// Id of the element a word evaluates to; throws OutOfTableBound.
  ElementId lookup(const Word& word) const;
  ElementId identity() const { return 0; }

  /// Id of w s, or kNoElement when w s lies beyond the bound (or s is not
  /// one of the table's generators).
  ElementId right_multiple(ElementId w, std::size_t s) const { return right_[w][s]; }
  /// Id of s w, or kNoElement when s w lies beyond the bound.
  ElementId left_multiple(ElementId w, std::size_t s) const;

  bool has_right_descent(ElementId w, std::size_t s) const;
  bool has_left_descent(ElementId w, std::size_t s) const;

  /// True when every generator used lies in the set (W_J membership).
  bool in_parabolic(ElementId w, const GeneratorSet& subset) const;

  /// Generators the table was built from.
  const GeneratorSet& generators() const { return gens_; }

  friend ElementTable enumerate(const CoxeterSystem& system, std::size_t bound, const EnumerateOptions& opts);
  friend ElementTable enumerate_finite_parabolic(const CoxeterSystem& system, const GeneratorSet& subset,
                                                 std::size_t max_elements);
  friend ElementTable import_table(const CoxeterSystem& system, std::istream& in);

private:
  explicit ElementTable(const CoxeterSystem& system)
  : system_(system)
  {}

  ElementId insert(GroupElement e);
  void grow(std::size_t bound, std::size_t max_elements);
  void link_right();

  CoxeterSystem system_;
  std::size_t bound_ = 0;
  GeneratorSet gens_;
  std::vector<GroupElement> elements_;
  std::vector<std::vector<ElementId>> layers_;
  std::vector<std::vector<ElementId>> right_;
  std::unordered_map<ElementMatrix, ElementId, ElementMatrixHash> index_;
};

ElementTable enumerate(const CoxeterSystem& system, std::size_t bound, const EnumerateOptions& opts = {});

/// All of W_I for a finite parabolic subgroup (BFS until closure).
ElementTable enumerate_finite_parabolic(const CoxeterSystem& system, const GeneratorSet& subset,
                                        std::size_t max_elements = 0);

struct Product
{
  ElementId id = kNoElement;
  bool length_additive = false;
};

/// w v with its table length. Throws OutOfTableBound when w v is not in the
/// table (its length exceeds the bound).
Product multiply(const ElementTable& table, ElementId w, ElementId v);

enum class CosetSide
{
  /// W_{J/I}: no right descent in I (minimal left W_I-coset representatives).
  RightDescentFree,
  /// W_{I\J}: no left descent in I.
  LeftDescentFree,
};

/// W_{J/I} or W_{I\J} inside the (finite) parabolic W_J. Throws when I is
/// not contained in J or W_J is not finite within the table bound.
std::vector<ElementId> min_coset_reps(const ElementTable& table, const GeneratorSet& i_set,
                                      const GeneratorSet& j_set, CosetSide side);

/// The elements of a finite W_J; throws if W_J is infinite or exceeds the
/// table bound.
std::vector<ElementId> parabolic_elements(const ElementTable& table, const GeneratorSet& j_set);

/// Text export: one element per line, "length<TAB>word<TAB>matrix" with the
/// word as space separated 1-based generator indices ("e" for the empty
/// word) and the matrix entries row-major, space separated. A leading
/// "# type=<tag> bound=<L>" comment line identifies the system.
void export_table(const ElementTable& table, std::ostream& out);

/// Reads an exported table back, checking every line against the system.
ElementTable import_table(const CoxeterSystem& system, std::istream& in);

/// l(s_{i1} ... s_{ik}) without a table: multiplying by s changes the length
/// by -1 exactly when w(alpha_s) is a negative root.
std::size_t word_length(const CoxeterSystem& system, const Word& word);

std::string format_word(const Word& word);
/// Parses "1 2 3", "s1s2s3", "3,2,1" or "e" into 0-based indices.
Word parse_word(const std::string& text);

} // namespace weylzeta
