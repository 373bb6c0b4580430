#include "sodcheck/equicore.hpp"

#include <sstream>

namespace sodcheck {

namespace {

int canonical(long long value, int modulus) {
  long long r = value % modulus;
  if (r < 0) r += modulus;
  return static_cast<int>(r);
}

void require_same_modulus(int a, int b) {
  if (a != b) throw InvalidArgument("characters of different groups mu_" + std::to_string(a) + ", mu_" + std::to_string(b));
}

}  // namespace

Character::Character(long long value, int modulus) : value_(0), modulus_(modulus) {
  if (modulus < 1) throw InvalidArgument("character modulus must be positive");
  value_ = canonical(value, modulus);
}

Character Character::operator+(Character other) const {
  require_same_modulus(modulus_, other.modulus_);
  return Character(static_cast<long long>(value_) + other.value_, modulus_);
}

Character Character::operator-(Character other) const {
  require_same_modulus(modulus_, other.modulus_);
  return Character(static_cast<long long>(value_) - other.value_, modulus_);
}

Character Character::operator-() const { return Character(-static_cast<long long>(value_), modulus_); }

Config Config::make(int m, int n, int d, bool cyclic) {
  if (m < 1 || n < 1 || d < 1) throw InvalidArgument("m, n, d must be positive");
  if (m > n) throw InvalidArgument("m <= n is required (got m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")");
  if (n > d) throw InvalidArgument("n <= d is required (got n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
  if (m == 1 && !cyclic) throw InvalidArgument("m = 1 is only admitted in cyclic mode");
  if (m >= 2 && cyclic) throw InvalidArgument("cyclic mode requires m = 1");
  return Config(m, n, d, cyclic);
}

std::pair<int, Character> Config::serre_twist() const { return {d_ - m_ - n_, chi(-n_)}; }

std::string Config::label() const {
  return "(" + std::to_string(m_) + "," + std::to_string(n_) + "," + std::to_string(d_) + ")";
}

WeightedSpace::WeightedSpace(std::vector<Character> weights) : weights_(std::move(weights)) {
  if (weights_.size() < 2) throw InvalidArgument("a weighted projective space needs at least two coordinates");
  for (const auto& w : weights_) require_same_modulus(w.modulus(), weights_.front().modulus());
}

Character WeightedSpace::weight_determinant() const {
  Character sum(0, modulus());
  for (const auto& w : weights_) sum = sum + w;
  return sum;
}

WeightedSpace ambient_weights(const Config& cfg) {
  std::vector<Character> w;
  w.reserve(static_cast<size_t>(cfg.m() + cfg.n()));
  for (int i = 0; i < cfg.m(); ++i) w.push_back(cfg.chi(0));
  for (int j = 0; j < cfg.n(); ++j) w.push_back(cfg.chi(-1));
  return WeightedSpace(std::move(w));
}

WeightedSpace join_line_weights(int d) { return WeightedSpace({Character(0, d), Character(-1, d)}); }

std::pair<int, Character> serre_twist(const Config& cfg) { return cfg.serre_twist(); }

std::uint64_t Mult::finite() const {
  if (infinite_) throw std::logic_error("multiplicity is infinite");
  return count_;
}

Mult Mult::operator+(Mult other) const {
  if (infinite_ || other.infinite_) return infinite();
  return Mult(checked_add(count_, other.count_));
}

Mult Mult::operator*(Mult other) const {
  if (is_zero() || other.is_zero()) return Mult(0);
  if (infinite_ || other.infinite_) return infinite();
  return Mult(checked_mul(count_, other.count_));
}

std::string Mult::str() const { return infinite_ ? "inf" : std::to_string(count_); }

Mult CharVector::at(Character c) const {
  require_same_modulus(modulus_, c.modulus());
  auto it = entries_.find(c.value());
  return it == entries_.end() ? Mult(0) : it->second;
}

void CharVector::add(Character c, Mult mult) {
  require_same_modulus(modulus_, c.modulus());
  if (mult.is_zero()) return;
  entries_[c.value()] += mult;
}

Mult CharVector::total() const {
  Mult sum;
  for (const auto& [c, mult] : entries_) sum += mult;
  return sum;
}

CharVector CharVector::shifted(Character shift) const {
  CharVector out(modulus_);
  for (const auto& [c, mult] : entries_) out.add(Character(c, modulus_) + shift, mult);
  return out;
}

CharVector CharVector::dual() const {
  CharVector out(modulus_);
  for (const auto& [c, mult] : entries_) out.add(-Character(c, modulus_), mult);
  return out;
}

CharVector CharVector::tensor(const CharVector& other) const {
  require_same_modulus(modulus_, other.modulus_);
  CharVector out(modulus_);
  for (const auto& [a, ma] : entries_)
    for (const auto& [b, mb] : other.entries_) out.add(static_cast<long long>(a) + b, ma * mb);
  return out;
}

CharVector CharVector::operator+(const CharVector& other) const {
  require_same_modulus(modulus_, other.modulus_);
  CharVector out = *this;
  for (const auto& [c, mult] : other.entries_) out.add(c, mult);
  return out;
}

CharVector ExtTable::row(int degree) const {
  auto it = rows_.find(degree);
  return it == rows_.end() ? CharVector(modulus_) : it->second;
}

void ExtTable::add(int degree, Character c, Mult mult) {
  if (mult.is_zero()) return;
  auto [it, inserted] = rows_.try_emplace(degree, modulus_);
  it->second.add(c, mult);
}

void ExtTable::add_row(int degree, const CharVector& row) {
  for (const auto& [c, mult] : row.entries()) add(degree, Character(c, modulus_), mult);
}

std::map<int, Mult> ExtTable::invariants() const {
  std::map<int, Mult> out;
  for (const auto& [deg, row] : rows_) {
    Mult inv = row.invariant();
    if (!inv.is_zero()) out[deg] = inv;
  }
  return out;
}

Mult ExtTable::total() const {
  Mult sum;
  for (const auto& [deg, row] : rows_) sum += row.total();
  return sum;
}

ExtTable ExtTable::twisted(Character shift) const {
  ExtTable out(modulus_);
  for (const auto& [deg, row] : rows_) out.add_row(deg, row.shifted(shift));
  return out;
}

ExtTable ExtTable::operator+(const ExtTable& other) const {
  require_same_modulus(modulus_, other.modulus_);
  ExtTable out = *this;
  for (const auto& [deg, row] : other.rows_) out.add_row(deg, row);
  return out;
}

ExtTable ExtTable::dual_reversed(int top) const {
  ExtTable out(modulus_);
  for (const auto& [deg, row] : rows_) out.add_row(top - deg, row.dual());
  return out;
}

std::string ExtTable::str() const {
  std::ostringstream os;
  os << '{';
  bool first_row = true;
  for (const auto& [deg, row] : rows_) {
    if (!first_row) os << ' ';
    first_row = false;
    os << deg << ":[";
    bool first = true;
    for (const auto& [c, mult] : row.entries()) {
      if (!first) os << ',';
      first = false;
      os << c << ':' << mult.str();
    }
    os << ']';
  }
  os << '}';
  return os.str();
}

std::string ExtTable::invariant_str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [deg, mult] : invariants()) {
    if (!first) os << ' ';
    first = false;
    os << deg << ':' << mult.str();
  }
  os << '}';
  return os.str();
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("multiplicity overflow");
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("multiplicity overflow");
  return out;
}

std::uint64_t binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // Multiplicative formula; each partial product is itself a binomial coefficient.
  unsigned __int128 acc = 1;
  for (long long i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (acc > UINT64_MAX) throw std::overflow_error("binomial overflow");
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace sodcheck
