#ifndef SUPERSYM_CAMPAIGN_HPP
#define SUPERSYM_CAMPAIGN_HPP

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/uniform_int_distribution.hpp>

#include "generators.hpp"
#include "json_io.hpp"
#include "supercharacters.hpp"
#include "supersym_algebra.hpp"
#include "weights.hpp"

namespace supersym {

using Rng = boost::random::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return boost::random::uniform_int_distribution<int>(lo, hi)(rng); }

/// Outcome of one check: empty witness means it passed.
struct CheckResult {
    bool passed = true;
    Json witness;

    static CheckResult pass() { return {}; }
    static CheckResult fail(Json w) { return {false, std::move(w)}; }
};

inline Json weight_json(const Weight& w) { return w.entries(); }

// ---------------------------------------------------------------------------
// Individual checks. Each is exhaustive over the stated range and returns the
// first counterexample it finds.

inline CheckResult check_c_supersymmetric(const Profile& profile, int r_max)
{
    for (int r = 0; r <= r_max; ++r) {
        if (!is_supersymmetric(c_generator(profile, r))) {
            return CheckResult::fail({{"r", r}});
        }
    }
    return CheckResult::pass();
}

inline CheckResult check_d_supersymmetric(const Profile& profile, int r_max)
{
    for (int r = 0; r <= r_max; ++r) {
        if (!is_supersymmetric_laurent(d_generator(profile, r))) {
            return CheckResult::fail({{"r", r}});
        }
    }
    return CheckResult::pass();
}

/// Generating-function Lambda^r(E) against the closed c_r formula and, for
/// r <= coset_max, against the coset enumeration.
inline CheckResult check_exterior_vs_c(const Profile& profile, int r_max, int coset_max)
{
    const SuperBasis e = standard_superspace(profile);
    for (int r = 0; r <= r_max; ++r) {
        const LaurentPolynomial gf = exterior_power_char(e, r);
        if (!(gf == c_generator(profile, r))) {
            return CheckResult::fail({{"r", r}, {"path", "closed formula"}, {"char", to_json(gf)}});
        }
        if (r <= coset_max && !(gf == exterior_supertrace_by_cosets(profile, r))) {
            return CheckResult::fail({{"r", r}, {"path", "coset enumeration"}, {"char", to_json(gf)}});
        }
    }
    return CheckResult::pass();
}

inline CheckResult check_symmetric_vs_d(const Profile& profile, int r_max, int coset_max)
{
    const SuperBasis dual = dual_superspace(standard_superspace(profile));
    for (int r = 0; r <= r_max; ++r) {
        const LaurentPolynomial gf = symmetric_power_char(dual, r);
        if (!(gf == d_generator(profile, r))) {
            return CheckResult::fail({{"r", r}, {"path", "d_r"}});
        }
        if (r <= coset_max && !(gf == symmetric_supertrace_by_cosets(profile, r, true))) {
            return CheckResult::fail({{"r", r}, {"path", "coset enumeration"}, {"char", to_json(gf)}});
        }
    }
    return CheckResult::pass();
}

/// (1^r, 0^{m-r} | 0^n) for r <= m, else (1^m | r-m, 0^{n-1}).
inline Weight expected_c_leading(int m, int n, int r)
{
    std::vector<int> e(static_cast<std::size_t>(m + n), 0);
    for (int k = 0; k < std::min(r, m); ++k) {
        e[static_cast<std::size_t>(k)] = 1;
    }
    if (r > m) {
        e[static_cast<std::size_t>(m)] = r - m;
    }
    return Weight(m, std::move(e));
}

/// (0^m | 0^{n-r}, (-1)^r) for r <= n, else (0^{m-1}, n-r | (-1)^n).
inline Weight expected_d_leading(int m, int n, int r)
{
    std::vector<int> e(static_cast<std::size_t>(m + n), 0);
    for (int k = 0; k < std::min(r, n); ++k) {
        e[static_cast<std::size_t>(m + n - 1 - k)] = -1;
    }
    if (r > n) {
        e[static_cast<std::size_t>(m - 1)] = n - r;
    }
    return Weight(m, std::move(e));
}

inline CheckResult check_unique_leading(const LaurentPolynomial& f, const Weight& expected, Json where)
{
    const auto lead = leading_summands(f);
    if (lead.size() != 1 || lead.front().first != expected) {
        Json got = Json::array();
        for (const auto& [w, c] : lead) {
            got.push_back(weight_json(w));
        }
        where["expected"] = weight_json(expected);
        where["leading"] = std::move(got);
        return CheckResult::fail(std::move(where));
    }
    return CheckResult::pass();
}

inline CheckResult check_c_leading(const Profile& profile, int r_max)
{
    for (int r = 1; r <= r_max; ++r) {
        auto res = check_unique_leading(c_generator(profile, r), expected_c_leading(profile.m(), profile.n(), r),
                                        {{"r", r}});
        if (!res.passed) {
            return res;
        }
    }
    return CheckResult::pass();
}

inline CheckResult check_d_leading(const Profile& profile, int r_max)
{
    for (int r = 1; r <= r_max; ++r) {
        auto res = check_unique_leading(d_generator(profile, r), expected_d_leading(profile.m(), profile.n(), r),
                                        {{"r", r}});
        if (!res.passed) {
            return res;
        }
    }
    return CheckResult::pass();
}

/// Calls fn on every integer vector of the given length with entries in [lo, hi].
inline void for_each_box_vector(int len, int lo, int hi, const std::function<void(const std::vector<int>&)>& fn)
{
    std::vector<int> v(static_cast<std::size_t>(len), lo);
    while (true) {
        fn(v);
        int k = len - 1;
        while (k >= 0 && v[static_cast<std::size_t>(k)] == hi) {
            v[static_cast<std::size_t>(k)] = lo;
            --k;
        }
        if (k < 0) {
            return;
        }
        ++v[static_cast<std::size_t>(k)];
    }
}

/// Every dominant weight with entries in [-bound, bound] either has a companion
/// product whose unique leading weight is itself, or is rejected with the
/// negative-exponent error (lambda_m + lambda_{m+1} < 0) and nothing else.
struct CompanionSweep {
    CheckResult result;
    std::size_t checked = 0;
    std::size_t undefined = 0;
};

inline CompanionSweep check_companion(const Profile& profile, int bound)
{
    CompanionSweep sweep;
    const int m = profile.m();
    for_each_box_vector(profile.vars(), -bound, bound, [&](const std::vector<int>& v) {
        if (!sweep.result.passed) {
            return;
        }
        const Weight lambda(m, v);
        if (!in_cone(lambda, Cone::Dominant)) {
            return;
        }
        const bool defined = v[static_cast<std::size_t>(m - 1)] + v[static_cast<std::size_t>(m)] >= 0;
        try {
            const LaurentPolynomial f = companion_image(profile, lambda);
            if (!defined) {
                sweep.result = CheckResult::fail({{"lambda", v}, {"reason", "expected negative-exponent error"}});
                return;
            }
            ++sweep.checked;
            auto res = check_unique_leading(f, lambda, {{"lambda", v}});
            if (!res.passed) {
                sweep.result = std::move(res);
            }
        } catch (const std::domain_error&) {
            if (defined) {
                sweep.result = CheckResult::fail({{"lambda", v}, {"reason", "unexpected error"}});
                return;
            }
            ++sweep.undefined;
        }
    });
    return sweep;
}

/// Both simultaneous-action identities on every word of length <= r_max. The
/// circ identity is read in the parity-changed convention, where the circ
/// action is the star action of E^c; in the standard convention it fails
/// already for I = (1,1), J = (1, m+1).
inline CheckResult check_sign_actions(int m, int n, int r_max)
{
    for (int r = 1; r <= r_max; ++r) {
        const auto perms = all_permutations(r);
        std::vector<MultiIndex> tuples;
        for_each_box_vector(r, 1, m + n, [&](const std::vector<int>& v) { tuples.emplace_back(m, n, v); });
        for (const MultiIndex& I : tuples) {
            for (const MultiIndex& J : tuples) {
                const SignedMonomialWord w(I, J);
                const SignedMonomialWord wc(I, J, 1, Convention::ParityChanged);
                const CanonicalWord base = canonical(w);
                const CanonicalWord base_c = canonical(wc);
                for (const Permutation& sigma : perms) {
                    if (!(canonical(star_action(star_action(w, sigma, Side::Row), sigma, Side::Col)) == base)) {
                        return CheckResult::fail({{"action", "star"}, {"I", I.entries()}, {"J", J.entries()}, {"sigma", sigma}});
                    }
                    if (!(canonical(circ_action(circ_action(wc, sigma, Side::Row), sigma, Side::Col)) == base_c)) {
                        return CheckResult::fail({{"action", "circ"}, {"I", I.entries()}, {"J", J.entries()}, {"sigma", sigma}});
                    }
                }
            }
        }
    }
    return CheckResult::pass();
}

/// Partial-order axioms on the [-bound, bound] box, predecessor soundness
/// (each predecessor is strictly below and pairwise incomparable, and every
/// weight strictly below lies under some predecessor) and lambda' < lambda.
inline CheckResult check_poset_axioms(int m, int n, int bound)
{
    std::vector<Weight> box;
    for_each_box_vector(m + n, -bound, bound, [&](const std::vector<int>& v) { box.emplace_back(m, v); });
    for (const Weight& a : box) {
        if (!leq(a, a)) {
            return CheckResult::fail({{"axiom", "reflexive"}, {"a", weight_json(a)}});
        }
        if (!less(odd_lowering(a), a)) {
            return CheckResult::fail({{"axiom", "odd lowering"}, {"a", weight_json(a)}});
        }
        for (const Weight& b : box) {
            if (!leq(a, b)) {
                continue;
            }
            if (a.total() != b.total()) {
                return CheckResult::fail({{"axiom", "total"}, {"a", weight_json(a)}, {"b", weight_json(b)}});
            }
            if (a != b && leq(b, a)) {
                return CheckResult::fail({{"axiom", "antisymmetric"}, {"a", weight_json(a)}, {"b", weight_json(b)}});
            }
            for (const Weight& c : box) {
                if (leq(b, c) && !leq(a, c)) {
                    return CheckResult::fail(
                        {{"axiom", "transitive"}, {"a", weight_json(a)}, {"b", weight_json(b)}, {"c", weight_json(c)}});
                }
            }
        }
    }
    for (Cone cone : {Cone::All, Cone::Dominant}) {
        for (const Weight& lambda : box) {
            if (!in_cone(lambda, cone)) {
                continue;
            }
            const auto preds = predecessors(lambda, cone);
            for (std::size_t i = 0; i < preds.size(); ++i) {
                if (!in_cone(preds[i], cone) || !less(preds[i], lambda)) {
                    return CheckResult::fail({{"axiom", "predecessor below"}, {"lambda", weight_json(lambda)}});
                }
                for (std::size_t j = 0; j < preds.size(); ++j) {
                    if (i != j && leq(preds[i], preds[j])) {
                        return CheckResult::fail({{"axiom", "predecessors incomparable"}, {"lambda", weight_json(lambda)}});
                    }
                }
            }
            for (const Weight& nu : box) {
                if (!in_cone(nu, cone) || !less(nu, lambda)) {
                    continue;
                }
                const bool covered = std::any_of(preds.begin(), preds.end(), [&](const Weight& p) { return leq(nu, p); });
                if (!covered) {
                    return CheckResult::fail(
                        {{"axiom", "predecessors cover"}, {"lambda", weight_json(lambda)}, {"nu", weight_json(nu)}});
                }
            }
        }
    }
    return CheckResult::pass();
}

/// Random nonnegative dominant weight: each block sorted descending.
inline Weight random_nonneg_dominant(Rng& rng, int m, int n, int max_entry)
{
    std::vector<int> v(static_cast<std::size_t>(m + n));
    for (int& x : v) {
        x = uniform(rng, 0, max_entry);
    }
    std::sort(v.begin(), v.begin() + m, std::greater<>());
    std::sort(v.begin() + m, v.end(), std::greater<>());
    return Weight(m, std::move(v));
}

inline CheckResult check_interval_bound(std::uint64_t seed, int samples, int max_m, int max_n, int max_entry)
{
    Rng rng(seed);
    for (int s = 0; s < samples; ++s) {
        const int m = uniform(rng, 1, max_m);
        const int n = uniform(rng, 1, max_n);
        const Weight mu = random_nonneg_dominant(rng, m, n, max_entry);
        const auto size = interval_nonneg_dominant(mu).size();
        const Integer bound = interval_size_bound(mu);
        if (Integer(size) > bound) {
            return CheckResult::fail({{"mu", weight_json(mu)}, {"m", m}, {"size", size}, {"bound", bound.str()}});
        }
    }
    return CheckResult::pass();
}

/// Random nonzero element of the degree-d part of A_s(p), or nullopt if that part is zero.
inline std::optional<LaurentPolynomial> random_asp_element(Rng& rng, const Profile& profile, int degree)
{
    const auto basis = p_balanced_supersymmetric_basis(profile, degree);
    if (basis.empty()) {
        return std::nullopt;
    }
    const int p = static_cast<int>(*profile.p());
    while (true) {
        LaurentPolynomial f(profile);
        for (const auto& b : basis) {
            f += b.scaled(uniform(rng, 0, p - 1));
        }
        if (!f.is_zero()) {
            return f;
        }
    }
}

/// Every A_s(p) generator is supersymmetric and p-balanced, and `samples`
/// random A_s(p) elements of degree 1..2p decompose into generator products.
inline CheckResult check_asp(const Profile& profile, std::uint64_t seed, int samples)
{
    const GeneratorSet gens = asp_generators(profile);
    const std::uint32_t p = *profile.p();
    for (std::size_t k = 0; k < gens.elements.size(); ++k) {
        if (!is_supersymmetric(gens.elements[k]) || !is_p_balanced(gens.elements[k], p)) {
            return CheckResult::fail({{"generator", gens.labels[k]}});
        }
    }
    std::vector<int> degrees;
    for (int d = 1; d <= 2 * static_cast<int>(p); ++d) {
        if (!p_balanced_supersymmetric_basis(profile, d).empty()) {
            degrees.push_back(d);
        }
    }
    Rng rng(seed);
    for (int s = 0; s < samples; ++s) {
        const int d = degrees[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(degrees.size()) - 1))];
        const LaurentPolynomial f = *random_asp_element(rng, profile, d);
        const MembershipReport rep = subalgebra_membership(f, gens, 2 * static_cast<int>(p));
        if (!rep.member) {
            return CheckResult::fail({{"sample", s}, {"element", to_json(f)}});
        }
    }
    return CheckResult::pass();
}

/// Both GL(1|1) families: supersymmetric for every admissible
/// (i, r), and p-balanced exactly when p | r.
inline CheckResult check_gl11(std::uint32_t p, int r_max)
{
    for (int r = 0; r <= r_max; ++r) {
        const bool divides = r == 0 || (p != 0 && r % static_cast<int>(p) == 0);
        for (int i = divides ? 0 : 1; i <= r; ++i) {
            const LaurentPolynomial f = gl11_simple_char(i, r, p);
            if (!is_supersymmetric(f)) {
                return CheckResult::fail({{"i", i}, {"r", r}, {"reason", "not supersymmetric"}});
            }
            if (p != 0 && is_p_balanced(f, p) != divides) {
                return CheckResult::fail({{"i", i}, {"r", r}, {"reason", "p-balance mismatch"}});
            }
        }
    }
    return CheckResult::pass();
}

/// Random product-order ideal with diagonal generators (-lambda, lambda) and
/// off-diagonal ones, entries in [-max_entry, max_entry].
inline WeightIdeal<PairOrder> random_pair_ideal(Rng& rng, int m, int n, int max_gens, int max_entry)
{
    const PairOrder order(m, n);
    std::vector<WeightPair> gens;
    const int count = uniform(rng, 1, max_gens);
    for (int g = 0; g < count; ++g) {
        std::vector<int> a(static_cast<std::size_t>(m + n));
        std::vector<int> b(static_cast<std::size_t>(m + n));
        for (int& v : b) {
            v = uniform(rng, -max_entry, max_entry);
        }
        std::sort(b.begin(), b.begin() + m, std::greater<>());
        std::sort(b.begin() + m, b.end(), std::greater<>());
        if (uniform(rng, 0, 1) == 0) {
            for (std::size_t k = 0; k < a.size(); ++k) {
                a[k] = -b[k];
            }
        } else {
            for (int& v : a) {
                v = uniform(rng, -max_entry, max_entry);
            }
            std::sort(a.begin(), a.begin() + m);
            std::sort(a.begin() + m, a.end());
        }
        gens.push_back({Weight(m, a), Weight(m, b)});
    }
    return WeightIdeal<PairOrder>(order, std::move(gens));
}

/// dk sequences of random ideals never place a weight before a strictly larger one.
inline CheckResult check_dk_order(std::uint64_t seed, int samples, int m, int n, int max_gens, int max_entry, int cutoff)
{
    Rng rng(seed);
    for (int s = 0; s < samples; ++s) {
        const auto ideal = random_pair_ideal(rng, m, n, max_gens, max_entry);
        const auto seq = dk_weight_sequence(ideal, cutoff);
        for (std::size_t k = 0; k < seq.size(); ++k) {
            for (std::size_t l = k + 1; l < seq.size(); ++l) {
                if (less(seq[k], seq[l])) {
                    return CheckResult::fail({{"sample", s}, {"k", k}, {"l", l}});
                }
            }
        }
    }
    return CheckResult::pass();
}

// ---------------------------------------------------------------------------
// Campaign files and runner.

struct TaskSpec {
    std::string kind;
    Json params; ///< object; unspecified keys take defaults
};

struct CampaignSpec {
    Profile profile{1, 1, std::nullopt};
    std::uint64_t seed = 0;
    std::vector<TaskSpec> tasks;
    std::string output = "-"; ///< "-" is standard output
    std::string format = "json";
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline const std::vector<std::string>& task_kinds()
{
    static const std::vector<std::string> kinds = {
        "supersym-c", "supersym-d", "ext-vs-c",      "sym-vs-d",       "leading-c", "leading-d", "companion",
        "sign-actions", "poset-axioms", "interval-bound", "asp",        "gl11",      "dk-order",  "hyp2"};
    return kinds;
}

/// Exploratory tasks report a status but never fail a campaign.
inline bool is_exploratory(const std::string& kind) { return kind == "hyp2"; }

inline CampaignSpec campaign_from_json(const Json& doc)
{
    if (!doc.is_object()) {
        throw UsageError("campaign must be a JSON object");
    }
    CampaignSpec spec;
    try {
        const Json prof = doc.value("profile", Json::object());
        std::optional<std::uint32_t> p;
        if (prof.contains("p") && !prof.at("p").is_null()) {
            p = prof.at("p").get<std::uint32_t>();
        }
        spec.profile = Profile(prof.value("m", 1), prof.value("n", 1), p);
        spec.seed = doc.value("seed", std::uint64_t{0});
        spec.output = doc.value("output", std::string("-"));
        spec.format = doc.value("format", std::string("json"));
        for (const Json& t : doc.value("tasks", Json::array())) {
            TaskSpec task{t.at("task").get<std::string>(), t.value("params", Json::object())};
            if (std::find(task_kinds().begin(), task_kinds().end(), task.kind) == task_kinds().end()) {
                throw UsageError("unknown task '" + task.kind + "'");
            }
            if (!task.params.is_object()) {
                throw UsageError("params of task '" + task.kind + "' must be an object");
            }
            spec.tasks.push_back(std::move(task));
        }
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(std::string("invalid campaign: ") + e.what());
    }
    if (spec.format != "json" && spec.format != "text") {
        throw UsageError("format must be json or text");
    }
    return spec;
}

struct TaskRecord {
    Json record; ///< {task, params, result, witness?, ms}
    bool failed = false;
};

namespace detail {

inline int int_param(Json& params, const char* key, int fallback)
{
    if (!params.contains(key)) {
        params[key] = fallback;
    }
    const Json& v = params.at(key);
    if (!v.is_number_integer()) {
        throw UsageError(std::string("parameter '") + key + "' must be an integer");
    }
    return v.get<int>();
}

inline void require_range(bool ok, const std::string& what)
{
    if (!ok) {
        throw UsageError("empty or invalid range: " + what);
    }
}

inline Json verdict(const CheckResult& r) { return r.passed ? "PASS" : "FAIL"; }

} // namespace detail

/// Runs one task. Parameters are completed with their defaults and the task
/// seed so that the record alone reproduces the run.
inline TaskRecord run_task(const CampaignSpec& spec, std::size_t index)
{
    using detail::int_param;
    const TaskSpec& task = spec.tasks[index];
    Json params = task.params;
    const std::uint64_t seed = params.contains("seed") ? params.at("seed").get<std::uint64_t>() : spec.seed + index;
    params["seed"] = seed;
    const Profile& profile = spec.profile;

    TaskRecord out;
    Json result;
    std::optional<CheckResult> check;
    const auto start = std::chrono::steady_clock::now();

    if (task.kind == "supersym-c" || task.kind == "supersym-d" || task.kind == "leading-c" || task.kind == "leading-d") {
        const int r_max = int_param(params, "r_max", 6);
        detail::require_range(r_max >= 0, "r_max");
        if (task.kind == "supersym-c") {
            check = check_c_supersymmetric(profile, r_max);
        } else if (task.kind == "supersym-d") {
            check = check_d_supersymmetric(profile, r_max);
        } else if (task.kind == "leading-c") {
            check = check_c_leading(profile, r_max);
        } else {
            check = check_d_leading(profile, r_max);
        }
    } else if (task.kind == "ext-vs-c" || task.kind == "sym-vs-d") {
        const int r_max = int_param(params, "r_max", 4);
        const int coset_max = int_param(params, "coset_max", std::min(r_max, 4));
        detail::require_range(r_max >= 0 && coset_max <= 6, "r_max / coset_max (coset_max <= 6)");
        check = task.kind == "ext-vs-c" ? check_exterior_vs_c(profile, r_max, coset_max)
                                        : check_symmetric_vs_d(profile, r_max, coset_max);
    } else if (task.kind == "companion") {
        const int bound = int_param(params, "bound", 3);
        detail::require_range(bound >= 0, "bound");
        const CompanionSweep sweep = check_companion(profile, bound);
        check = sweep.result;
        params["checked"] = sweep.checked;
        params["undefined"] = sweep.undefined;
    } else if (task.kind == "sign-actions") {
        const int r_max = int_param(params, "r_max", 4);
        detail::require_range(r_max >= 1 && r_max <= 6, "r_max in [1, 6]");
        check = check_sign_actions(profile.m(), profile.n(), r_max);
    } else if (task.kind == "poset-axioms") {
        const int bound = int_param(params, "bound", 2);
        detail::require_range(bound >= 0, "bound");
        check = check_poset_axioms(profile.m(), profile.n(), bound);
    } else if (task.kind == "interval-bound") {
        const int samples = int_param(params, "samples", 200);
        const int max_m = int_param(params, "max_m", profile.m());
        const int max_n = int_param(params, "max_n", profile.n());
        const int max_entry = int_param(params, "max_entry", 4);
        detail::require_range(samples >= 1 && max_m >= 1 && max_n >= 1 && max_entry >= 0, "interval-bound parameters");
        check = check_interval_bound(seed, samples, max_m, max_n, max_entry);
    } else if (task.kind == "asp") {
        if (!profile.p()) {
            throw UsageError("task 'asp' needs a prime characteristic");
        }
        const int samples = int_param(params, "samples", 20);
        detail::require_range(samples >= 0, "samples");
        check = check_asp(profile, seed, samples);
    } else if (task.kind == "gl11") {
        const int r_max = int_param(params, "r_max", 6);
        detail::require_range(r_max >= 0, "r_max");
        check = check_gl11(profile.p().value_or(0), r_max);
    } else if (task.kind == "dk-order") {
        const int samples = int_param(params, "samples", 50);
        const int max_gens = int_param(params, "max_gens", 3);
        const int max_entry = int_param(params, "max_entry", 2);
        const int cutoff = int_param(params, "cutoff", 3);
        detail::require_range(samples >= 1 && max_gens >= 1 && max_entry >= 0 && cutoff >= 1, "dk-order parameters");
        check = check_dk_order(seed, samples, profile.m(), profile.n(), max_gens, max_entry, cutoff);
    } else if (task.kind == "hyp2") {
        if (!profile.p()) {
            throw UsageError("task 'hyp2' needs a prime characteristic");
        }
        const int lo = int_param(params, "degree_min", 0);
        const int hi = int_param(params, "degree_max", 4);
        detail::require_range(0 <= lo && lo <= hi, "degree_min..degree_max");
        Json cells = Json::array();
        for (int d = lo; d <= hi; ++d) {
            cells.push_back(to_json(hypothesis2_cell(profile.m(), profile.n(), *profile.p(), d)));
        }
        result = {{"cells", std::move(cells)}};
    }

    Json record;
    record["task"] = task.kind;
    record["index"] = index;
    record["params"] = std::move(params);
    if (check) {
        record["result"] = detail::verdict(*check);
        if (!check->passed) {
            record["witness"] = check->witness;
            out.failed = true;
        }
    } else {
        record["result"] = std::move(result);
    }
    record["ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    out.record = std::move(record);
    return out;
}

/// Copy of a record with timing fields ("ms", "runtime_ms") removed at any depth.
inline Json strip_timing(const Json& doc)
{
    if (doc.is_object()) {
        Json out = Json::object();
        for (auto it = doc.begin(); it != doc.end(); ++it) {
            if (it.key() != "ms" && it.key() != "runtime_ms") {
                out[it.key()] = strip_timing(it.value());
            }
        }
        return out;
    }
    if (doc.is_array()) {
        Json out = Json::array();
        for (const Json& v : doc) {
            out.push_back(strip_timing(v));
        }
        return out;
    }
    return doc;
}

/// 64-bit FNV-1a.
inline std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h = 0xcbf29ce484222325ULL)
{
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

struct CampaignResult {
    std::vector<TaskRecord> records;
    Json summary;
    int exit_code = 0;
};

/// Runs every task with at most `jobs` worker threads. Records come back in
/// task order regardless of scheduling. A task that throws is recorded as
/// FAIL with the error message.
inline CampaignResult run_campaign(const CampaignSpec& spec, unsigned jobs = 1)
{
    CampaignResult res;
    res.records.resize(spec.tasks.size());
    std::atomic<std::size_t> next{0};
    std::mutex usage_mutex;
    std::optional<std::string> usage_error;
    auto worker = [&] {
        for (std::size_t k = next++; k < spec.tasks.size(); k = next++) {
            try {
                res.records[k] = run_task(spec, k);
            } catch (const UsageError& e) {
                const std::lock_guard<std::mutex> lock(usage_mutex);
                if (!usage_error) {
                    usage_error = "task " + std::to_string(k) + ": " + e.what();
                }
            } catch (const std::exception& e) {
                Json record;
                record["task"] = spec.tasks[k].kind;
                record["index"] = k;
                record["params"] = spec.tasks[k].params;
                record["result"] = "FAIL";
                record["witness"] = {{"error", e.what()}};
                record["ms"] = 0;
                res.records[k] = {std::move(record), true};
            }
        }
    };
    const unsigned threads = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(spec.tasks.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
        t.join();
    }
    if (usage_error) {
        throw UsageError(*usage_error);
    }

    std::uint64_t digest = fnv1a("");
    std::size_t failed = 0;
    for (const TaskRecord& r : res.records) {
        digest = fnv1a(strip_timing(r.record).dump() + "\n", digest);
        failed += r.failed ? 1 : 0;
    }
    std::ostringstream hex;
    hex << std::hex << std::setw(16) << std::setfill('0') << digest;
    res.summary = {{"summary",
                    {{"profile", spec.profile.describe()},
                     {"seed", spec.seed},
                     {"tasks", spec.tasks.size()},
                     {"failed", failed},
                     {"digest", hex.str()}}}};
    res.exit_code = failed == 0 ? 0 : 1;
    return res;
}

/// JSON lines: one record per task, then the summary.
inline void write_report(std::ostream& os, const CampaignResult& res, const std::string& format)
{
    if (format == "json") {
        for (const TaskRecord& r : res.records) {
            os << r.record.dump() << '\n';
        }
        os << res.summary.dump() << '\n';
        return;
    }
    for (const TaskRecord& r : res.records) {
        const Json& rec = r.record;
        os << '[' << rec.at("index").get<std::size_t>() << "] " << rec.at("task").get<std::string>() << ' ';
        if (rec.at("result").is_string()) {
            os << rec.at("result").get<std::string>();
        } else {
            os << "done";
        }
        os << " (" << rec.at("ms").get<long long>() << " ms)\n";
        if (rec.contains("witness")) {
            os << "    witness: " << rec.at("witness").dump() << '\n';
        }
        if (rec.at("result").is_object()) {
            for (const Json& cell : rec.at("result").at("cells")) {
                os << "    degree " << cell.at("cell").at("degree").get<int>() << ": "
                   << cell.at("status").get<std::string>() << " (basis " << cell.at("basis_dim").get<std::size_t>()
                   << ", span " << cell.at("span_dim").get<std::size_t>() << ")\n";
            }
        }
    }
    const Json& s = res.summary.at("summary");
    os << "tasks " << s.at("tasks").get<std::size_t>() << ", failed " << s.at("failed").get<std::size_t>()
       << ", digest " << s.at("digest").get<std::string>() << '\n';
}

} // namespace supersym

#endif
