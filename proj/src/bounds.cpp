#include "pq/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "pq/errors.hpp"

namespace pq {

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::kHdTight: return "HD_TIGHT";
    case Regime::kLargeQ: return "LARGE_Q_C";
    case Regime::kLogP: return "LOG_P_B";
    case Regime::kGeneral: return "GENERAL_A";
    case Regime::kOutOfScope: return "OUT_OF_SCOPE";
  }
  return "OUT_OF_SCOPE";
}

Rational decaen_bound(int n, int p, int q) {
  if (!(n >= p && p >= q && q >= 2)) {
    throw PreconditionError("decaen_bound requires n >= p >= q >= 2");
  }
  return Rational(BigInt(n - p + 1), BigInt(n - q + 1)) *
         Rational(binomial(n, q), binomial(p - 1, q - 1));
}

BigInt kalai_bound(int n, int r, int d, int k) {
  BigInt sum = 0;
  for (int i = 0; i <= d; ++i) sum += binomial(r, k - i) * binomial(n - r, i);
  return sum;
}

Rational euler_upper() { return Rational(27183, 10000); }

namespace {

void check_params(const PQParams& pr) {
  if (pr.d < 1) throw PreconditionError("dimension must be positive");
  if (!(pr.p >= pr.q && pr.q >= pr.d + 1)) {
    throw PreconditionError("requires p >= q >= d + 1");
  }
}

BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Largest a / 2^bits with (a / 2^bits)^m <= x, for x >= 0.
Rational root_lower(const Rational& x, unsigned long m, unsigned long bits) {
  if (m == 1) return x;
  const BigInt scale = ipow(BigInt(2), bits * m);
  BigInt scaled;
  const BigInt num = x.num() * scale;
  const BigInt den = x.den();
  mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  BigInt root;
  mpz_root(root.get_mpz_t(), scaled.get_mpz_t(), m);
  return Rational(root, ipow(BigInt(2), bits));
}

}  // namespace

Rational piercing_fraction_bound(const PQParams& params) {
  check_params(params);
  const long m = params.q - params.d;
  // alpha^m >= (q-d)^m / (4 q e^m p^(q-1)); every rounding step goes down.
  const BigInt numer = ipow(BigInt(m), m);
  const Rational e_pow(ipow(euler_upper().num(), m), ipow(euler_upper().den(), m));
  const Rational denom = Rational(BigInt(4L * params.q)) * e_pow *
                         Rational(ipow(BigInt(params.p), params.q - 1));
  const Rational alpha_pow = Rational(numer) / denom;
  const Rational alpha = root_lower(alpha_pow, static_cast<unsigned long>(m), 64);
  return std::min(alpha, Rational(1, 2));
}

Rational exponent_a(const PQParams& params) {
  if (params.q <= params.d) throw PreconditionError("exponent_a requires q > d");
  return Rational(BigInt(long{params.d} * (params.q - 1)), BigInt(params.q - params.d));
}

long alon_kleitman_exponent(int d) { return long{d} * d + d; }

int ceil_log2(long p) {
  if (p < 1) throw PreconditionError("ceil_log2 requires p >= 1");
  int k = 0;
  while ((1L << k) < p) ++k;
  return k;
}

BoundReport hd_regime(const PQParams& params, std::optional<Rational> eps) {
  check_params(params);
  const long p = params.p;
  const long q = params.q;
  const long d = params.d;
  BoundReport rep;
  rep.lower = p - q + 1;
  std::ostringstream notes;

  // q > (d-1)p/d + 1  <=>  d q > (d-1) p + d
  if (d * q > (d - 1) * p + d) {
    rep.regime = Regime::kHdTight;
    rep.upper_exact = p - q + 1;
    notes << "q > (d-1)p/d + 1: HD_d(p,q) = p-q+1 exactly (Hadwiger-Debrunner).";
    rep.notes = notes.str();
    return rep;
  }

  if (eps) {
    if (eps->sign() <= 0) throw PreconditionError("eps must be positive");
    // q >= p^((d-1)/d + eps)  <=>  q^den >= p^num with num/den = (d-1)/d + eps
    const Rational ex = Rational(BigInt(d - 1), BigInt(d)) + *eps;
    const unsigned long num = ex.num().get_ui();
    const unsigned long den = ex.den().get_ui();
    if (ipow(BigInt(q), den) >= ipow(BigInt(p), num)) {
      rep.regime = Regime::kLargeQ;
      rep.upper_exact = p - q + 2;
      notes << "q >= p^((d-1)/d + eps) with eps = " << eps->str()
            << ": p-q+1 <= HD_d(p,q) <= p-q+2, valid only for p >= p_d(eps); "
               "the threshold p_d(eps) is not effective, so this bound is conditional.";
      rep.notes = notes.str();
      return rep;
    }
  }

  // q >= log p regime. The bootstrapping reduces q by k = max(ceil(log2(p/q)), d)
  // per round and needs at least one round (q - k > k) to improve on (a).
  const int log_p = ceil_log2(p);
  const long ratio_log = ceil_log2((p + q - 1) / q);
  const long k = std::max<long>(ratio_log, d);
  if (q >= log_p && q > 2 * k) {
    rep.regime = Regime::kLogP;
    rep.upper_exponent = Rational(BigInt(d));
    notes << "q >= ceil(log2 p) = " << log_p
          << ": HD_d(p,q) <= p-q + O((p/q)^d polylog(p/q)); upper_exponent is the exponent of "
             "p/q. Hidden constants are not known.";
    rep.notes = notes.str();
    return rep;
  }

  rep.regime = Regime::kGeneral;
  rep.upper_exponent = exponent_a(params);
  notes << "HD_d(p,q) = O~(p^(d(q-1)/(q-d))) with exponent " << rep.upper_exponent->str()
        << " versus Alon-Kleitman exponent d^2+d = " << alon_kleitman_exponent(params.d)
        << ". Hidden constants are not known.";
  if (d == 2 && p == 4 && q == 3) notes << " Known bracket: 3 ≤ HD_2(4,3) ≤ 13.";
  rep.notes = notes.str();
  return rep;
}

WeakNetRelation weak_net_hd_lower(int r, int q, int d) {
  if (r < 1) throw PreconditionError("weak_net_hd_lower requires r >= 1");
  if (q < d + 1) throw PreconditionError("weak_net_hd_lower requires q >= d + 1");
  WeakNetRelation rel{r, q, d, long{r} * q + 1, {}};
  std::ostringstream s;
  s << "f(1/" << r << "," << d << ") <= HD_" << d << "(" << rel.p << "," << q
    << "): any verified lower bound on weak 1/" << r << "-net size for a point set in R^" << d
    << " is a lower bound on HD_" << d << "(" << rel.p << "," << q << ").";
  rel.statement = s.str();
  return rel;
}

BigInt ramsey_bound(long i, long j) {
  if (i < 1 || j < 1) throw PreconditionError("ramsey_bound requires i, j >= 1");
  return BigInt(i) * ipow(BigInt(j), 4);
}

}  // namespace pq
