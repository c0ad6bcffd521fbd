#pragma once

#include <cstdint>
#include <map>
#include <string_view>

#include "altdes/bi_poly.hpp"
#include "altdes/finding.hpp"
#include "altdes/int_poly.hpp"
#include "altdes/nc_poly.hpp"

namespace altdes {

/// Brute-force generating functions over S_n. Every entry point refuses
/// n > brute_max with LimitExceeded.
struct OracleConfig {
  int brute_max = 11;
  unsigned jobs = 1;
};

/// Throws LimitExceeded when n > cfg.brute_max and std::invalid_argument when n < 0.
void check_brute_limit(int n, const OracleConfig& cfg);

enum class Statistic { AltMaj, AltDes, Maj, Des3 };

Statistic parse_statistic(std::string_view name);
std::string_view statistic_name(Statistic s);

struct StatMultiset {
  int n = 0;
  std::map<long, std::uint64_t> values;

  std::uint64_t total() const;
  /// sum over values of count * q^value
  IntPoly generating_polynomial() const;
};

/// sum_{pi in S_n} t^{altdes(pi)}
IntPoly brute_alt_eulerian(int n, const OracleConfig& cfg = {});
/// sum_{pi in S_n} t^{altdes(pi)} q^{altmaj(pi)}
BiPolyTQ brute_qalt(int n, const OracleConfig& cfg = {});
/// sum_{pi in S_n} s^{altdes(pi^-1)} t^{altdes(pi)}; s sits in the t-slot.
BiPolyTQ brute_two_sided(int n, const OracleConfig& cfg = {});
/// Descent polynomial over Simsun permutations of length n.
IntPoly brute_simsun(int n, const OracleConfig& cfg = {});

struct CdIndexOracle {
  NCPoly phi;      // over SS_n in letters c, d
  NCPoly psi;      // descent sets in letters a, b
  NCPoly psi_hat;  // alternating descent sets in letters a, b
};
CdIndexOracle brute_cd_index(int n, const OracleConfig& cfg = {});

StatMultiset stat_multiset(int n, Statistic stat, const OracleConfig& cfg = {});

// Bijective arguments checked exhaustively ------------------------------------

/// Min- and max-insertion at every slot of every pi in S_n hit each element
/// of S_{n+1} exactly twice.
Finding double_count_check(int n, const OracleConfig& cfg = {});
/// theta is an involution with altdes(pi') = n-1-altdes(pi) and
/// altmaj(pi') = C(n,2) - n altdes(pi) + altmaj(pi).
Finding theta_identity_check(int n, const OracleConfig& cfg = {});
/// altdes over S_n is distributed like des3 over {pi in S_{n+1} : pi_1 = 1}.
Finding equidistribution_check(int n, const OracleConfig& cfg = {});

}  // namespace altdes
