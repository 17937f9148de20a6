#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "posets/poset.hpp"

namespace posets {

/// Largest carrier the census handles; codes pack the strict relation into
/// n*n bits of a 64-bit word.
inline constexpr std::size_t kCensusMaxSize = 8;

/// Minimum adjacency code over all relabelings. Two posets are isomorphic
/// iff their sizes and canonical codes agree.
std::uint64_t canonical_code(const Poset& p);
Poset poset_from_code(std::size_t n, std::uint64_t code);

/// One representative per isomorphism class on exactly n elements, sorted
/// by canonical code. Work for each parent class is spread over `threads`
/// workers (0 picks the hardware concurrency).
std::vector<Poset> posets_up_to_iso(std::size_t n, unsigned threads = 0);

/// Upper-triangular random relation closed transitively; every element is
/// below each later one independently with probability `density`.
Poset random_poset(std::size_t n, std::mt19937_64& rng, double density = 0.3);

struct IdentityFailure {
  std::string identity;
  std::string detail;
};

/// Cross-module identities on one poset:
///  * erdos-tarski: |et_decompose parts| = max strong antichain = number of
///    maximal elements = minimum ideal cover;
///  * factorization: both product descriptions of Int(P) at every x;
///  * restriction: Int(P|Q) = {J n Q} for every Q (only when |P| <=
///    `restriction_limit`, the check being exponential in |P|).
std::vector<IdentityFailure> check_identities(const Poset& p, std::size_t restriction_limit = 6);

struct CensusRow {
  std::size_t n;
  std::size_t classes;
  std::size_t violations;
};

struct CensusReport {
  std::vector<CensusRow> rows;
  std::vector<IdentityFailure> failures;  ///< first few failures, for diagnosis
  std::size_t violations() const;
};

CensusReport run_census(std::size_t max_n, unsigned threads = 0, std::size_t restriction_limit = 6);

}  // namespace posets
