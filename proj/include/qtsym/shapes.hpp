#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtsym/scalars.hpp"

namespace qtsym {

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Cells are (x, y) = (column, row), zero-based, rows counted bottom-up.
struct Cell {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts);  // trailing zeros are dropped
  // "321", "[10,2,1]", "10,2,1" and "0" / "" for the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int operator[](size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  Partition conjugate() const;
  BigInt z() const;
  long n() const;  // sum over cells of the row index
  std::vector<int> multiplicities() const;  // d_i at index i
  bool contains(const Partition& inner) const;
  bool has_cell(Cell c) const { return c.y >= 0 && c.x >= 0 && c.x < (*this)[c.y]; }
  std::vector<Cell> cells() const;  // row by row, bottom-up
  std::vector<Cell> corners() const;
  int arm(Cell c) const { return (*this)[c.y] - c.x - 1; }
  int leg(Cell c) const;
  int hook(Cell c) const { return arm(c) + leg(c) + 1; }
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

struct CellData {
  Cell cell;
  int arm;
  int leg;
  int hook;
};
std::vector<CellData> cell_data(const Partition& mu);

struct PartitionStats {
  int size;
  int length;
  BigInt z;
  long n;
};
PartitionStats stats(const Partition& mu);

// True iff lambda ⪯ mu. Throws on unequal sizes.
bool dominates(const Partition& mu, const Partition& lambda);

// Partitions of n in decreasing lexicographic order, optionally inside
// `outer` and with at most max_len parts.
std::vector<Partition> enumerate_partitions(int n, const std::optional<Partition>& outer = std::nullopt,
                                            std::optional<int> max_len = std::nullopt);
// All partitions contained in outer, by increasing size then decreasing lex.
std::vector<Partition> subpartitions(const Partition& outer);

struct SkewShape {
  Partition outer;
  Partition inner;
  SkewShape() = default;
  SkewShape(Partition o, Partition i = {});
  int size() const { return outer.size() - inner.size(); }
  bool has_cell(Cell c) const { return outer.has_cell(c) && !inner.has_cell(c); }
  std::vector<Cell> cells() const;
  std::string to_string() const;
  friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

// rows[y] lists the entries of row y from x = inner[y] to outer[y]-1.
struct Tableau {
  SkewShape shape;
  std::vector<std::vector<int>> rows;

  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> straight_rows);
  Tableau(SkewShape s, std::vector<std::vector<int>> r);
  int at(Cell c) const { return rows[c.y][c.x - shape.inner[c.y]]; }
  int size() const { return shape.size(); }
  std::string to_string() const;  // row lists bottom-up, e.g. [[1,1,2],[3]]
  friend bool operator==(const Tableau&, const Tableau&) = default;
};

bool is_semistandard(const Tableau& t);
bool is_standard(const Tableau& t);
std::vector<int> content(const Tableau& t);  // content[i] = #entries equal to i+1
std::vector<int> reading_word(const Tableau& t);

// Exhaustive SSYT of the shape with the given content (entry i+1 used
// content[i] times), in lexicographic order of reading words.
std::vector<Tableau> ssyt(const SkewShape& shape, const std::vector<int>& content);
std::vector<Tableau> ssyt_bounded(const SkewShape& shape, int max_entry);
std::vector<Tableau> standard_tableaux(const Partition& shape);

BigInt hook_count(const Partition& mu);
ParamRat hook_count_q(const Partition& mu);
BigInt kostka(const Partition& lambda, const Partition& mu);
ParamRat q_binomial(int n, int k);
ParamRat subpartition_poly(const Partition& mu);
ParamRat q_catalan_square(int n);

Tableau minimize(const Tableau& t);
long cocharge(const Tableau& t);
long charge(const Tableau& t);  // cyclic subword charge when the content is a partition
ParamRat kostka_foulkes(const Partition& lambda, const Partition& mu);
BigInt bpr_denominator(int n);

struct Insertion {
  Tableau tableau;
  Cell new_cell;
};
Insertion insert(const Tableau& p, int a);
Tableau insert_word(const std::vector<int>& word, Tableau start = Tableau());

struct Biword {
  std::vector<int> top;
  std::vector<int> bottom;
  Biword() = default;
  Biword(std::vector<int> t, std::vector<int> b);  // validates lexicographic order
  static Biword from_word(const std::vector<int>& word);  // top = 1..n
  Biword inverse() const;
  size_t size() const { return top.size(); }
  friend bool operator==(const Biword&, const Biword&) = default;
};

std::pair<Tableau, Tableau> rsk(const Biword& w);
Biword unrsk(const Tableau& p, const Tableau& q);

}  // namespace qtsym
