#pragma once

#include <optional>
#include <string>

namespace padicfrac {

/// Which quotient rule an expansion follows.
///
///   browkin1  s at even n; t, or t - sign(t) when the 0-th digit vanishes, at odd n
///   browkin4  s₁ at even n, t₁ at odd n (quadratic irrationals only)
///   murru     s at even n, t at odd n
///   new       s̄ when v_p(α_n) >= 0 (and always at n = 0), t̄ when v_p(α_n) < 0
///   neww      s̄ at even n, t̄ at odd n
///   modified  s̄ at n = 0 mod 3, t̄ otherwise
///   rblock(r) s̄ at n = 0 mod r, t̄ otherwise (r >= 3)
struct AlgorithmId {
  enum class Kind { kBrowkin1, kBrowkin4, kMurru, kNew, kNeww, kModified, kRBlock };

  Kind kind = Kind::kNeww;
  int r = 0;  // block length, rblock only

  static AlgorithmId browkin1() { return {Kind::kBrowkin1, 0}; }
  static AlgorithmId browkin4() { return {Kind::kBrowkin4, 0}; }
  static AlgorithmId murru() { return {Kind::kMurru, 0}; }
  static AlgorithmId new_alg() { return {Kind::kNew, 0}; }
  static AlgorithmId neww() { return {Kind::kNeww, 0}; }
  static AlgorithmId modified() { return {Kind::kModified, 0}; }
  /// Throws std::invalid_argument for r < 3.
  static AlgorithmId rblock(int r);

  /// Accepts the names above, "rblock<r>" and "rblock:<r>".
  static std::optional<AlgorithmId> parse(const std::string& name);

  std::string name() const;
  bool quadratic_only() const { return kind == Kind::kBrowkin4; }

  /// Index classes that, together with (P_n, Q_n), determine the rule used
  /// at step n: 1 for new, 2 for the parity-based rules, 3 for modified, r
  /// for rblock(r). For new, step 0 with v_p(α_0) < 0 is a class of its own.
  long phase_modulus() const;

  friend bool operator==(const AlgorithmId&, const AlgorithmId&) = default;
};

}  // namespace padicfrac
