#include "gmtkit/gmt.hpp"

#include <algorithm>

namespace gmtkit {

const char* correlator_rule_name(CorrelatorRule rule) {
    switch (rule) {
        case CorrelatorRule::ZeroClass: return "zero-class";
        case CorrelatorRule::DegreeZero: return "degree-zero";
        case CorrelatorRule::String: return "string";
        case CorrelatorRule::Divisor: return "divisor";
        case CorrelatorRule::Computed: return "computed";
        case CorrelatorRule::User: return "user";
    }
    return "?";
}

bool zero_class(int c, int N) { return c < 0 || c > N - 2; }

Rational degree_zero_correlator(int a, int b, const std::vector<int>& extras, int N, int k) {
    if (extras.size() == 1 && a + b + extras[0] == N - 2) return Rational(k);
    return Rational(0);
}

Rational divisor_reduction_factor(int m, const std::vector<int>& extras) {
    if (m < 1) throw std::invalid_argument("divisor_reduction_factor: requires degree m >= 1");
    for (int c : extras)
        if (c != 1) throw std::invalid_argument("divisor_reduction_factor: extra insertion is not h^1");
    return Rational::pow(Rational(m), static_cast<long>(extras.size()));
}

GmtEngine::GmtEngine(int N, int k, CorrelatorTable user_table, RingCache& cache)
    : N_(N), k_(k), cache_(cache), user_(std::move(user_table)) {
    if (N < 2) throw std::invalid_argument("GmtEngine: require N >= 2");
    if (k < 1) throw std::invalid_argument("GmtEngine: require k >= 1");
}

const Rational& GmtEngine::w_factor(int g) {
    auto it = w_factors_.find(g);
    if (it == w_factors_.end()) {
        Rational w = w_two_point(N_, k_, g, N_ - 3 + (N_ - k_) * g, 0, cache_);
        it = w_factors_.emplace(g, w / Rational(k_)).first;
    }
    return it->second;
}

Rational GmtEngine::two_point_value(int m, int a, int b, const TwoPointLookup& lookup,
                                    const std::vector<int>& extras_for_key) const {
    std::optional<Rational> computed = lookup(m, a, b);
    std::optional<Rational> user = user_.lookup(CorrelatorKey::make(N_, k_, m, {a, b}));
    if (computed) {
        // User-supplied values are never silently overridden.
        if (user && *user != *computed)
            throw CorrelatorConflict("user value " + user->str() + " conflicts with computed " +
                                     computed->str() + " for " +
                                     CorrelatorKey::make(N_, k_, m, {a, b}).str());
        return *computed;
    }
    if (user) return *user;
    std::vector<int> ins = extras_for_key;
    ins.push_back(a);
    ins.push_back(b);
    throw NeedsCorrelator(CorrelatorKey::make(N_, k_, m, std::move(ins)));
}

ResolvedCorrelator GmtEngine::resolve_correlator(int m, int a, int b,
                                                 const std::vector<int>& extras,
                                                 const TwoPointLookup& lookup) const {
    if (m < 0) throw std::invalid_argument("resolve_correlator: negative degree");
    bool any_zero_class = zero_class(a, N_) || zero_class(b, N_);
    for (int c : extras) any_zero_class = any_zero_class || zero_class(c, N_);
    if (any_zero_class) return {Rational(0), CorrelatorRule::ZeroClass};

    if (m == 0) return {degree_zero_correlator(a, b, extras, N_, k_), CorrelatorRule::DegreeZero};

    if (extras.empty()) return {two_point_value(m, a, b, lookup, {}), CorrelatorRule::Computed};

    // Fundamental-class vanishing: an identity insertion kills any positive-
    // degree correlator with three or more marked points.
    bool any_identity = a == 0 || b == 0;
    for (int c : extras) any_identity = any_identity || c == 0;
    if (any_identity) return {Rational(0), CorrelatorRule::String};

    bool all_divisor = std::all_of(extras.begin(), extras.end(), [](int c) { return c == 1; });
    if (all_divisor) {
        Rational factor = divisor_reduction_factor(m, extras);
        return {factor * two_point_value(m, a, b, lookup, extras), CorrelatorRule::Divisor};
    }

    std::vector<int> ins = extras;
    ins.push_back(a);
    ins.push_back(b);
    CorrelatorKey key = CorrelatorKey::make(N_, k_, m, std::move(ins));
    if (std::optional<Rational> user = user_.lookup(key)) return {*user, CorrelatorRule::User};
    throw NeedsCorrelator(key);
}

CorrectionTerm GmtEngine::build_term(int d, int a, int b, const Partition& sigma,
                                     const TwoPointLookup& lookup) {
    CorrectionTerm term;
    term.g = sigma.sum();
    term.sigma = sigma;
    term.symmetry = symmetry_factor(sigma);
    std::vector<int> extras;
    extras.reserve(sigma.parts.size());
    for (int gi : sigma.parts) extras.push_back(1 + (k_ - N_) * gi);
    term.correlator = resolve_correlator(d - term.g, a, b, extras, lookup);
    Rational product = term.symmetry * term.correlator.value;
    for (int gi : sigma.parts) {
        term.w_factors.push_back(w_factor(gi));
        product *= term.w_factors.back();
    }
    term.value = std::move(product);
    return term;
}

TransformationTerms GmtEngine::transformation_terms_with(int d, int a, int b, const TwoPointLookup& lookup) {
    TransformationTerms t;
    t.w_ab = w_two_point(N_, k_, d, a, b, cache_);
    t.w_sub = w_two_point(N_, k_, d, selection_sum(d), 0, cache_);
    t.correction_total = Rational(0);
    for (int g = 1; g <= d - 1; ++g) {
        for (const Partition& sigma : enumerate_partitions(g)) {
            CorrectionTerm term = build_term(d, a, b, sigma, lookup);
            t.correction_total += term.value;
            t.corrections.push_back(std::move(term));
        }
    }
    return t;
}

TwoPointLookup GmtEngine::own_lookup() {
    return [this](int m, int x, int y) -> std::optional<Rational> {
        auto level = gw_.find(m);
        if (level == gw_.end()) return std::nullopt;
        auto it = level->second.find({x, y});
        if (it == level->second.end()) return std::nullopt;
        return it->second;
    };
}

void GmtEngine::compute_through(int d) {
    for (int dd = 1; dd <= d; ++dd) {
        if (gw_.count(dd)) continue;
        std::map<std::pair<int, int>, Rational> table;
        int line = selection_sum(dd);
        for (int a = 0; a <= N_ - 2; ++a) {
            int b = line - a;
            if (b < 0 || b > N_ - 2) continue;
            TransformationTerms t = transformation_terms_with(dd, a, b, own_lookup());
            table[{a, b}] = t.w_ab - t.w_sub - t.correction_total;
        }
        gw_.emplace(dd, std::move(table));
    }
}

const std::map<std::pair<int, int>, Rational>& GmtEngine::two_point(int d) {
    if (d < 1) throw std::invalid_argument("two_point: require d >= 1");
    compute_through(d);
    return gw_.at(d);
}

Rational GmtEngine::gw(int d, int a, int b) {
    const auto& table = two_point(d);
    auto it = table.find({a, b});
    return it == table.end() ? Rational(0) : it->second;
}

TransformationTerms GmtEngine::transformation_terms(int d, int a, int b) {
    if (d < 1) throw std::invalid_argument("transformation_terms: require d >= 1");
    compute_through(d - 1);
    return transformation_terms_with(d, a, b, own_lookup());
}

std::vector<CorrectionTerm> GmtEngine::correction_terms(int d, int a, int b) {
    return transformation_terms(d, a, b).corrections;
}

std::vector<CorrectionTerm> GmtEngine::correction_terms_at_g(int d, int a, int b, int g) {
    if (g < 1 || g > d) throw std::invalid_argument("correction_terms_at_g: require 1 <= g <= d");
    compute_through(d - 1);
    std::vector<CorrectionTerm> out;
    for (const Partition& sigma : enumerate_partitions(g))
        out.push_back(build_term(d, a, b, sigma, own_lookup()));
    return out;
}

Rational general_type_d1(int N, int k, int n, RingCache& cache) {
    return Rational(k) * (vsc(N, k, 1, n, cache) - vsc(N, k, 1, 1 + k - N, cache));
}

GmtResidualReport verify_gmt_identity(int N, int k, int d, const GwTable& gw_table,
                                      const CorrelatorTable& user_table, RingCache& cache) {
    if (d < 1) throw std::invalid_argument("verify_gmt_identity: require d >= 1");
    GmtEngine engine(N, k, user_table, cache);
    TwoPointLookup lookup = [&gw_table](int m, int a, int b) -> std::optional<Rational> {
        auto level = gw_table.find(m);
        if (level == gw_table.end()) return std::nullopt;
        auto it = level->second.find({a, b});
        if (it == level->second.end()) return std::nullopt;
        return it->second;
    };
    auto top = gw_table.find(d);
    if (top == gw_table.end())
        throw std::invalid_argument("verify_gmt_identity: gw_table missing degree " +
                                    std::to_string(d));
    GmtResidualReport rep;
    rep.N = N;
    rep.k = k;
    rep.d = d;
    int line = N - 3 + (N - k) * d;
    for (int a = 0; a <= N - 2; ++a) {
        int b = line - a;
        if (b < 0 || b > N - 2) continue;
        auto it = top->second.find({a, b});
        if (it == top->second.end())
            throw std::invalid_argument("verify_gmt_identity: gw_table missing (" +
                                        std::to_string(a) + "," + std::to_string(b) +
                                        ") at degree " + std::to_string(d));
        Rational w_ab = w_two_point(N, k, d, a, b, cache);
        Rational w_sub = w_two_point(N, k, d, line, 0, cache);
        Rational corr(0);
        for (int g = 1; g <= d - 1; ++g)
            for (const Partition& sigma : enumerate_partitions(g))
                corr += engine.build_term(d, a, b, sigma, lookup).value;
        GmtResidualReport::Row row;
        row.a = a;
        row.b = b;
        row.residual = (w_ab - w_sub) - (it->second + corr);
        row.ok = row.residual.is_zero();
        rep.all_ok = rep.all_ok && row.ok;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

std::map<int, Rational> instanton_numbers(int d_max, GmtEngine& quintic_engine) {
    if (quintic_engine.N() != 5 || quintic_engine.k() != 5)
        throw std::invalid_argument("instanton_numbers: engine must be the quintic (N = k = 5)");
    if (d_max < 1) throw std::invalid_argument("instanton_numbers: require d_max >= 1");
    std::map<int, Rational> n;
    for (int d = 1; d <= d_max; ++d) {
        // K_d = d <O_h O_h>_{0,d} = sum_{e | d} e^3 n_e.
        Rational K = Rational(d) * quintic_engine.gw(d, 1, 1);
        for (int e = 1; e < d; ++e)
            if (d % e == 0) K.sub_mul(Rational::pow(Rational(e), 3), n.at(e));
        n[d] = K / Rational::pow(Rational(d), 3);
    }
    return n;
}

std::map<int, Rational> instanton_numbers(int d_max, RingCache& cache) {
    GmtEngine engine(5, 5, {}, cache);
    return instanton_numbers(d_max, engine);
}

}  // namespace gmtkit
