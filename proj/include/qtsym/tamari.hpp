#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtsym/rectangular.hpp"

namespace qtsym {

// horizontal: rotate by the horizontal distance to the staircase boundary.
// vertical: the same rule applied to the transposed (n,m) path.
enum class Rotation { horizontal, vertical };
// vertical when m < n, horizontal otherwise
Rotation default_rotation(int m, int n);

// (m,n)-Tamari order on the partitions inside staircase(m, n). The staircase
// itself is the bottom and the empty partition the top. Covers are the
// rotations of the path read as north/east steps from (0,0) to (m,n) above
// the staircase boundary: at a valley p, the east step before p is moved past
// the subpath from p to the next point with the same horizontal distance to
// the boundary (vertical rotation does this on the transposed path).
class TamariPoset {
 public:
  TamariPoset(int m, int n, std::optional<Rotation> rotation = std::nullopt);

  int m() const { return m_; }
  int n() const { return n_; }
  Rotation rotation() const { return rotation_; }
  const std::vector<DyckPath>& elements() const { return elements_; }
  size_t size() const { return elements_.size(); }
  size_t index_of(const Partition& mu) const;  // throws when mu is not an element
  const std::vector<size_t>& covers(size_t i) const { return covers_[i]; }
  size_t edge_count() const;
  bool leq(size_t a, size_t b) const { return up_[a][b]; }  // a below or equal b
  size_t bottom() const;
  size_t top() const;

  bool is_lattice() const;
  BigInt interval_count() const;
  BigInt decorated_count() const;  // intervals weighted by the top's column multinomial
  SymFunc interval_strip_sum() const;
  std::string to_dot() const;

 private:
  int m_;
  int n_;
  Rotation rotation_;
  std::vector<DyckPath> elements_;
  std::vector<std::vector<size_t>> covers_;
  std::vector<std::vector<bool>> up_;
};

// Rotations of a single path (for m = n the classical Tamari covers).
std::vector<Partition> tamari_covers(int m, int n, const Partition& mu,
                                     std::optional<Rotation> rotation = std::nullopt);

BigInt interval_count(int m, int n);
BigInt decorated_count(int m, int n);
SymFunc interval_strip_sum(int m, int n);
// Power-sum closed forms, m = rn+1 or m = rn-1; throws otherwise.
SymFunc interval_strip_closed_form(int m, int n);

}  // namespace qtsym
