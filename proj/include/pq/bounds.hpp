#pragma once

#include <optional>
#include <string>

#include "pq/rational.hpp"

namespace pq {

struct PQParams {
  int p = 0;
  int q = 0;
  int d = 2;
};

enum class Regime { kHdTight, kLargeQ, kLogP, kGeneral, kOutOfScope };

const char* regime_name(Regime r);

struct BoundReport {
  Regime regime = Regime::kOutOfScope;
  long lower = 0;                          // p - q + 1
  std::optional<long> upper_exact;         // HD_TIGHT and LARGE_Q_C only
  std::optional<Rational> upper_exponent;  // GENERAL_A (of p) and LOG_P_B (of p/q)
  std::string notes;
};

/// Minimum number of edges of a q-uniform hypergraph on n vertices with no
/// independent set of size p: ((n-p+1)/(n-q+1)) * C(n,q) / C(p-1,q-1).
Rational decaen_bound(int n, int p, int q);

/// Upper bound on f_{k-1} when f_{d+r} = 0: sum_{i=0..d} C(r,k-i) C(n-r,i).
BigInt kalai_bound(int n, int r, int d, int k);

/// Certified rational lower bound on the fraction of a (p,q)-family (n >= 2p)
/// pierced by a single point:
///   min(1/2, ((q-d)/e) (4q)^(-1/(q-d)) p^(-(q-1)/(q-d)))
/// with e rounded up and the root rounded down.
Rational piercing_fraction_bound(const PQParams& params);

/// Rational upper bound used for e in piercing_fraction_bound.
Rational euler_upper();

/// d(q-1)/(q-d). Throws PreconditionError when q <= d.
Rational exponent_a(const PQParams& params);

/// d^2 + d, the exponent of the classic Alon–Kleitman bound.
long alon_kleitman_exponent(int d);

/// Classifies (p,q,d). `eps` enables the large-q test q >= p^((d-1)/d + eps).
BoundReport hd_regime(const PQParams& params, std::optional<Rational> eps = std::nullopt);

struct WeakNetRelation {
  int r = 0;
  int q = 0;
  int d = 0;
  long p = 0;  // r q + 1
  std::string statement;
};

WeakNetRelation weak_net_hd_lower(int r, int q, int d);

/// i * j^4, the Ramsey-type bound for convex sets.
BigInt ramsey_bound(long i, long j);

/// ceil(log2(p)) for p >= 1.
int ceil_log2(long p);

}  // namespace pq
