#pragma once

#include <cstdint>
#include <vector>

#include "ppfq/exceptional.hpp"

namespace ppfq {

inline constexpr std::uint64_t kSearchFieldLimit = std::uint64_t{1} << 14;
inline constexpr std::uint64_t kCandidateLimit = std::uint64_t{1} << 48;
inline constexpr std::uint64_t kSearchSpaceLimit = std::uint64_t{1} << 32;

// Monic degree-n polynomials with zero constant term, and zero x^(n-1)
// coefficient when p does not divide n. Index digits run over the free
// coefficients with the highest one most significant.
class NormalizedCandidates {
 public:
  NormalizedCandidates(std::size_t n, Field field);

  std::size_t n() const { return n_; }
  const Field& field() const { return f_; }
  std::uint64_t size() const { return size_; }
  /// Free coefficient positions, highest first.
  const std::vector<std::size_t>& free_positions() const { return free_; }
  UniPoly at(std::uint64_t index) const;
  /// Coefficient vector of candidate `index`, written into `coeffs` (size n + 1).
  void fill(std::uint64_t index, std::vector<Elem>& coeffs) const;

 private:
  std::size_t n_;
  Field f_;
  std::vector<std::size_t> free_;
  std::uint64_t size_ = 1;
};

NormalizedCandidates normalized_candidates(std::size_t n, const Field& field);

bool is_normalized(const UniPoly& f);

/// Normalized members of the orbit {a f(bx + c) + d}, ascending by encoding.
std::vector<UniPoly> normalized_orbit(const UniPoly& f);

/// Encoding-minimal normalized member of the orbit of f.
UniPoly canonical_orbit_rep(const UniPoly& f);

struct OrbitResult {
  UniPoly rep;
  /// Normalized PPs found in the scan that belong to this orbit.
  std::uint64_t members_found = 0;
  bool is_pp = true;
  ExceptionalityVerdict verdict;
};

struct SearchReport {
  std::size_t n = 0;
  std::uint64_t q = 0;
  bool default_modulus = true;
  std::uint64_t candidates_scanned = 0;
  std::vector<UniPoly> pps_found;
  std::vector<OrbitResult> orbits;
  bool non_exceptional_exists = false;
};

SearchReport classify(std::size_t n, const Field& field, unsigned shards = 1);

}  // namespace ppfq
