#pragma once

// Exact-arithmetic value types shared by every module: cyclic characters,
// configurations (m, n, d), weighted projective spaces and character-graded
// tables of Ext / cohomology dimensions.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sodcheck {

/// Raised when an input violates a documented precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A one-dimensional representation of mu_d, stored as its canonical residue in [0, d).
class Character {
 public:
  Character(long long value, int modulus);

  int value() const { return value_; }
  int modulus() const { return modulus_; }
  bool is_trivial() const { return value_ == 0; }

  Character operator+(Character other) const;
  Character operator-(Character other) const;
  Character operator-() const;
  Character operator+(long long shift) const { return Character(value_ + shift, modulus_); }
  Character operator-(long long shift) const { return Character(value_ - shift, modulus_); }

  bool operator==(const Character&) const = default;
  auto operator<=>(const Character&) const = default;

 private:
  int value_;
  int modulus_;
};

/// The parameters (m, n, d): X = V(f + g) in P^{m+n-1}, mu_d scaling the n y-variables.
class Config {
 public:
  /// Validates 1 <= m <= n <= d. m == 1 is accepted only with `cyclic` set.
  static Config make(int m, int n, int d, bool cyclic = false);

  int m() const { return m_; }
  int n() const { return n_; }
  int d() const { return d_; }
  bool cyclic() const { return cyclic_; }

  int ambient_dim() const { return m_ + n_ - 1; }
  int dim() const { return m_ + n_ - 2; }

  /// Degree and character of the Serre twist O_X(d-m-n) (x) chi^{-n}.
  std::pair<int, Character> serre_twist() const;
  /// Homological shift m+n-2 of the Serre functor.
  int serre_shift() const { return dim(); }

  Character chi(long long value) const { return Character(value, d_); }

  std::string label() const;

  bool operator==(const Config&) const = default;

 private:
  Config(int m, int n, int d, bool cyclic) : m_(m), n_(n), d_(d), cyclic_(cyclic) {}
  int m_;
  int n_;
  int d_;
  bool cyclic_;
};

/// Projective space with one mu_d weight per homogeneous coordinate.
class WeightedSpace {
 public:
  explicit WeightedSpace(std::vector<Character> weights);

  const std::vector<Character>& weights() const { return weights_; }
  int modulus() const { return weights_.front().modulus(); }
  int dim() const { return static_cast<int>(weights_.size()) - 1; }

  /// Sum of the coordinate weights; the canonical bundle is O(-dim-1) (x) chi^{determinant}.
  Character weight_determinant() const;

 private:
  std::vector<Character> weights_;
};

/// Coordinates x_1..x_m of weight 0 followed by y_1..y_n of weight -1.
WeightedSpace ambient_weights(const Config& cfg);
/// The join line P^1 with coordinates u (weight 0) and v (weight -1).
WeightedSpace join_line_weights(int d);

std::pair<int, Character> serre_twist(const Config& cfg);

/// Extended natural number: a finite count or the INFINITE flag.
class Mult {
 public:
  constexpr Mult() = default;
  constexpr Mult(std::uint64_t count) : count_(count) {}  // NOLINT(google-explicit-constructor)
  static constexpr Mult infinite() {
    Mult m;
    m.infinite_ = true;
    return m;
  }

  bool is_infinite() const { return infinite_; }
  bool is_zero() const { return !infinite_ && count_ == 0; }
  /// Throws std::logic_error when infinite.
  std::uint64_t finite() const;

  Mult operator+(Mult other) const;
  Mult operator*(Mult other) const;
  Mult& operator+=(Mult other) { return *this = *this + other; }

  bool operator==(const Mult&) const = default;

  std::string str() const;

 private:
  std::uint64_t count_ = 0;
  bool infinite_ = false;
};

/// Character -> multiplicity. Absent keys mean zero; zero entries are never stored.
class CharVector {
 public:
  explicit CharVector(int modulus) : modulus_(modulus) {}

  int modulus() const { return modulus_; }
  Mult at(Character c) const;
  Mult at(long long value) const { return at(Character(value, modulus_)); }
  Mult invariant() const { return at(0); }

  void add(Character c, Mult mult);
  void add(long long value, Mult mult) { add(Character(value, modulus_), mult); }

  bool is_zero() const { return entries_.empty(); }
  Mult total() const;

  /// Tensor with a character: every entry moves from e to e + shift.
  CharVector shifted(Character shift) const;
  /// Dual representation: e -> -e.
  CharVector dual() const;
  /// Tensor product of representations.
  CharVector tensor(const CharVector& other) const;

  CharVector operator+(const CharVector& other) const;

  const std::map<int, Mult>& entries() const { return entries_; }

  bool operator==(const CharVector&) const = default;

 private:
  int modulus_;
  std::map<int, Mult> entries_;
};

/// Cohomological degree -> CharVector. Degrees that are not stored are zero.
class ExtTable {
 public:
  explicit ExtTable(int modulus) : modulus_(modulus) {}

  int modulus() const { return modulus_; }
  CharVector row(int degree) const;
  void add(int degree, Character c, Mult mult);
  void add_row(int degree, const CharVector& row);

  bool is_zero() const { return rows_.empty(); }
  /// The character-0 column: dimensions of the mu_d-invariant part per degree.
  std::map<int, Mult> invariants() const;
  Mult invariant(int degree) const { return row(degree).invariant(); }
  bool invariant_zero() const { return invariants().empty(); }
  Mult total() const;

  ExtTable twisted(Character shift) const;
  ExtTable operator+(const ExtTable& other) const;
  /// Serre-duality image: degree i goes to top - i and every character is dualized.
  ExtTable dual_reversed(int top) const;

  const std::map<int, CharVector>& rows() const { return rows_; }

  bool operator==(const ExtTable&) const = default;

  /// Compact form, e.g. "{0:[0:1] 2:[3:1,1:inf]}".
  std::string str() const;
  /// Invariant dimensions only, e.g. "{0:1 2:1}".
  std::string invariant_str() const;

 private:
  int modulus_;
  std::map<int, CharVector> rows_;
};

/// Binomial coefficient with overflow detection; zero when k < 0 or k > n.
std::uint64_t binomial(long long n, long long k);
/// Checked arithmetic; throws std::overflow_error.
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

}  // namespace sodcheck
