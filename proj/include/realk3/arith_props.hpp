#pragma once

// Finite-range verification of the congruences between real and complex
// counts. Everything runs in residue rings unless the exact path is asked
// for explicitly.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "realk3/eta_forms.hpp"

namespace realk3 {

enum class ClauseId { mod2, mod4, mod8, mod3, mod9, mod16 };

/// A congruence statement: for applicable e_R it may assert w_g = c_g (mod m)
/// for every g >= 1, and it asserts w_g = c_g = 0 (mod m) for g passing the
/// vanishing filter.
struct CongruenceClause {
    ClauseId id;
    std::string_view label;  // "mod2", ...
    std::uint64_t modulus;
    bool asserts_congruence;
    std::function<bool(int)> applies;                 // on e_R
    std::function<bool(std::size_t)> vanishing_filter;  // on g >= 1
};

const std::vector<CongruenceClause>& all_clauses();
const CongruenceClause& clause(ClauseId id);
/// Throws std::invalid_argument for an unknown label.
const CongruenceClause& clause_by_label(std::string_view label);

enum class Status { pass, not_applicable, fail };
std::string_view to_string(Status s);
Status status_from_string(std::string_view s);

enum class Subclaim { congruence, vanishing };
std::string_view to_string(Subclaim s);
Subclaim subclaim_from_string(std::string_view s);

struct Violation {
    std::size_t g = 0;
    std::uint64_t w_mod = 0;
    std::uint64_t c_mod = 0;
    Subclaim subclaim = Subclaim::congruence;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Sub-claim outcome. `asserted` is false when the clause makes no such claim.
struct SubclaimResult {
    bool asserted = false;
    Status status = Status::not_applicable;

    friend bool operator==(const SubclaimResult&, const SubclaimResult&) = default;
};

struct CongruenceReport {
    ClauseId clause = ClauseId::mod2;
    std::uint64_t modulus = 2;
    int euler_real = 0;
    std::size_t g_max = 0;
    Status status = Status::pass;
    SubclaimResult congruence;
    SubclaimResult vanishing;
    std::vector<Violation> violations;

    friend bool operator==(const CongruenceReport&, const CongruenceReport&) = default;
};

enum class Arithmetic { modular, exact };

CongruenceReport check_clause(const CongruenceClause& c, const RealTopology& t, std::size_t g_max,
                              Arithmetic mode = Arithmetic::modular);

/// Same check against caller-supplied series in Z/mZ (or exact series, which
/// are reduced first). Lets one sweep share the complex series.
CongruenceReport check_clause(const CongruenceClause& c, int euler_real, const TruncatedSeries& w,
                              const TruncatedSeries& cg);

/// Every clause against every topology; ordered by e_R, then clause.
std::vector<CongruenceReport> run_congruence_suite(const std::vector<RealTopology>& topologies, std::size_t g_max,
                                                   Arithmetic mode = Arithmetic::modular);

/// Generic pass/fail record for the identity-style checks.
struct CheckReport {
    std::string name;
    std::size_t range = 0;
    bool passed = true;
    std::vector<std::size_t> failing;  // offending exponents / indices
    std::string detail;

    friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

/// i_0..i_K: parity of the q^n coefficient of prod (1 - q^n)^(-3), which is
/// also the parity of w_{8n} and c_{8n}.
std::vector<int> parity_sequence(std::size_t k);

/// a(2k) = 0 mod 2^11 and a(3k) = 0 mod 3^5 for 0 < k <= k_max.
CheckReport check_lehner(std::size_t k_max);
/// prod (1 - q^n)^(-24) = q j(q) coefficient-wise mod m, m in {16, 9}.
CheckReport check_j_congruence(std::size_t order, std::uint64_t m);
/// In prod (1 - q^n)^(3k): exponents = 1 (mod 3) carry multiples of 3 and
/// exponents = 2 (mod 3) carry multiples of 9.
CheckReport check_3dissection(long k, std::size_t order);
/// theta^9 mod 9 is supported on exponents divisible by 3.
CheckReport check_theta_ninth_power(std::size_t order);

/// Both real forms of the generating function agree exactly.
CheckReport check_cross_form(const RealTopology& t, std::size_t order);
/// prod (1 - q^n)^2 / prod (1 - q^(2n)) equals the theta series exactly.
CheckReport check_gauss_identity(std::size_t order);
/// w-series mod 2 equals prod (1 - q^(8n))^(-3) mod 2.
CheckReport check_mod2_collapse(const RealTopology& t, std::size_t order);
/// c-series mod 2 equals prod (1 - q^(8n))^(-3) mod 2.
CheckReport check_mod2_collapse_complex(std::size_t order);
/// sum i_n q^(8n) = J(q) sum i_n q^(16n) mod 2, J = prod (1 - q^(16n))^2 / (1 - q^(8n)).
CheckReport check_parity_self_similarity(std::size_t order);

/// Exponents where J(q) is odd, up to `order`, and the gaps between them.
/// Also records whether J = sum q^(4n(n+1)) mod 2 held over the range.
struct ParityGapReport {
    std::vector<std::size_t> odd_exponents;
    std::vector<std::size_t> gaps;
    bool matches_triangular_form = true;
};
ParityGapReport jacobi_parity_gaps(std::size_t order);

}  // namespace realk3
