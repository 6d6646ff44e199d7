#pragma once

/**
 * @file matrix.hpp
 * @brief Dense n×n matrices over a prime field F_p, plus a scalar type for
 * transcribing polynomial formulas.
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace unitwist {

using Entry = std::uint32_t;

bool is_prime(std::uint32_t p);
/// Reduces any integer into [0, p).
Entry reduce_mod(long long x, std::uint32_t p);
Entry inv_mod(Entry a, std::uint32_t p);  // throws Singular for a == 0

/// An element of F_p. Mixed-modulus arithmetic is a programming error.
class Fp {
 public:
  Fp() = default;
  Fp(long long value, std::uint32_t p) : v_(reduce_mod(value, p)), p_(p) {}

  Entry value() const noexcept { return v_; }
  std::uint32_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return v_ == 0; }
  Fp inv() const { return {inv_mod(v_, p_), p_}; }
  Fp pow(unsigned k) const;

  friend Fp operator+(Fp a, Fp b) { return {static_cast<long long>(a.v_) + b.v_, a.p_}; }
  friend Fp operator-(Fp a, Fp b) { return {static_cast<long long>(a.v_) - b.v_, a.p_}; }
  friend Fp operator*(Fp a, Fp b) { return {static_cast<long long>(a.v_) * b.v_ % a.p_, a.p_}; }
  friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }
  friend Fp operator-(Fp a) { return {-static_cast<long long>(a.v_), a.p_}; }
  friend Fp operator+(Fp a, long long b) { return a + Fp(b, a.p_); }
  friend Fp operator+(long long a, Fp b) { return Fp(a, b.p_) + b; }
  friend Fp operator-(Fp a, long long b) { return a - Fp(b, a.p_); }
  friend Fp operator-(long long a, Fp b) { return Fp(a, b.p_) - b; }
  friend Fp operator*(long long a, Fp b) { return Fp(a, b.p_) * b; }
  friend Fp operator/(long long a, Fp b) { return Fp(a, b.p_) / b; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }

 private:
  Entry v_ = 0;
  std::uint32_t p_ = 2;
};

class Mat {
 public:
  Mat() = default;
  Mat(int n, std::uint32_t p);  // zero matrix
  /// Row-major integer rows, reduced mod p.
  Mat(std::uint32_t p, std::initializer_list<std::initializer_list<long long>> rows);

  static Mat identity(int n, std::uint32_t p);
  static Mat diagonal(const std::vector<Entry>& diag, std::uint32_t p);

  int n() const noexcept { return n_; }
  std::uint32_t p() const noexcept { return p_; }
  Entry operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  void set(int i, int j, long long value) { a_[static_cast<std::size_t>(i * n_ + j)] = reduce_mod(value, p_); }
  Fp at(int i, int j) const { return {(*this)(i, j), p_}; }
  void set(int i, int j, Fp value) { a_[static_cast<std::size_t>(i * n_ + j)] = value.value(); }
  const std::vector<Entry>& data() const noexcept { return a_; }

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b) = default;
  friend auto operator<=>(const Mat& a, const Mat& b) = default;

  Mat transpose() const;
  /// Throws Error(Singular).
  Mat inverse() const;
  Mat pow(unsigned k) const;
  Entry det() const;
  int rank() const;

  bool is_zero() const;
  bool is_upper_triangular() const;
  bool is_unit_upper() const;
  bool is_unit_lower() const;
  bool is_diagonal() const;

  std::string to_string() const;

 private:
  int n_ = 0;
  std::uint32_t p_ = 2;
  std::vector<Entry> a_;
};

struct MatHash {
  std::size_t operator()(const Mat& m) const noexcept;
};

}  // namespace unitwist
