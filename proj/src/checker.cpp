#include "iwa/checker.hpp"

#include "iwa/curve.hpp"
#include "iwa/error.hpp"
#include "iwa/invariants.hpp"
#include "iwa/lseries.hpp"
#include "iwa/quad_field.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace iwa {

using nlohmann::json;

const char* status_name(Status s) {
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
    case Status::NotApplicable: return "not_applicable";
    }
    return "unknown";
}

const char* conclusion_name(Conclusion c) {
    switch (c) {
    case Conclusion::VerifiedConditionalOnSha: return "verified_conditional_on_sha";
    case Conclusion::ScVerified: return "sc_verified";
    case Conclusion::NotVerified: return "not_verified";
    case Conclusion::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

const char* mode_name(Mode m) {
    switch (m) {
    case Mode::Ordinary: return "ordinary";
    case Mode::Supersingular: return "supersingular";
    case Mode::Sc: return "sc";
    }
    return "unknown";
}

Status parse_status(const std::string& s) {
    for (Status v : {Status::Pass, Status::Fail, Status::Inconclusive, Status::NotApplicable})
        if (s == status_name(v)) return v;
    fail(ErrorKind::InvalidInput, "unknown status '" + s + "'");
}

Conclusion parse_conclusion(const std::string& s) {
    for (Conclusion v : {Conclusion::VerifiedConditionalOnSha, Conclusion::ScVerified, Conclusion::NotVerified,
                         Conclusion::Inconclusive})
        if (s == conclusion_name(v)) return v;
    fail(ErrorKind::InvalidInput, "unknown conclusion '" + s + "'");
}

Mode parse_mode(const std::string& s) {
    for (Mode v : {Mode::Ordinary, Mode::Supersingular, Mode::Sc})
        if (s == mode_name(v)) return v;
    fail(ErrorKind::InvalidInput, "unknown mode '" + s + "'");
}

const ConditionResult* Verdict::find(const std::string& id) const {
    for (auto& c : conditions)
        if (c.id == id) return &c;
    return nullptr;
}

std::vector<std::string> standing_caveats() { return {"sha-finiteness-assumed", "heegner-point-hypotheses-assumed"}; }

namespace {

std::string rat_str(const BigRational& q) { return q.get_str(); }

std::string precision_label(long p, long M) { return "O(" + std::to_string(p) + "^" + std::to_string(M) + ")"; }

// Least precision among the coefficients up to the lambda witness (or the whole series).
long witness_precision(const PAdicSeries& s, const InvariantReport& r) {
    std::size_t upto = r.lambda ? static_cast<std::size_t>(std::max(*r.lambda, r.ord_T_lower)) + 1 : s.length();
    long m = kInfinity;
    for (std::size_t k = 0; k < std::min(upto, s.length()); ++k) m = std::min(m, s[k].absolute_precision());
    return m;
}

std::string pair_precision(long p, const PAdicSeries& a, const InvariantReport& ra, const PAdicSeries& b,
                           const InvariantReport& rb) {
    long m = std::min(witness_precision(a, ra), witness_precision(b, rb));
    return m == kInfinity ? "exact" : precision_label(p, m);
}

ConditionResult make(std::string id, Status s, json ev = json::object(), std::string reason = {}) {
    ConditionResult c;
    c.id = std::move(id);
    c.status = s;
    c.evidence = std::move(ev);
    c.reason = std::move(reason);
    return c;
}

json series_evidence(const PAdicSeries& s, const InvariantReport& r) {
    json lead = json::array();
    for (std::size_t k = 0; k < std::min<std::size_t>(s.length(), 4); ++k) lead.push_back(s[k].to_string());
    json ev = {{"mu", r.mu},
               {"mu_lower_bound", r.mu_lower_bound},
               {"lambda", r.lambda ? json(*r.lambda) : json(nullptr)},
               {"ord_T_lower", r.ord_T_lower},
               {"reliable", r.reliable},
               {"leading", lead}};
    if (!r.reason.empty()) ev["reason"] = r.reason;
    return ev;
}

struct SeriesPair {
    std::optional<PAdicSeries> E, K;
    InvariantReport rE, rK;
    std::string error;
};

// Status of "lambda sum = target with both mu = 0".
Status lambda_status(const InvariantReport& a, const InvariantReport& b, long target, std::string& reason) {
    if (!a.reliable || !b.reliable) {
        reason = "precision";
        return Status::Inconclusive;
    }
    if (a.mu != 0 || b.mu != 0) {
        reason = "mu-positive";
        return Status::Inconclusive;
    }
    return *a.lambda + *b.lambda == target ? Status::Pass : Status::Fail;
}

Conclusion combine(const std::vector<const ConditionResult*>& branch) {
    bool inconclusive = false;
    for (auto* c : branch) {
        if (c->status == Status::Fail) return Conclusion::NotVerified;
        if (c->status != Status::Pass) inconclusive = true;
    }
    return inconclusive ? Conclusion::Inconclusive : Conclusion::VerifiedConditionalOnSha;
}

ConditionResult root_number_condition(const std::string& id, long N, const ImagQuadField& K) {
    try {
        int w = root_number_over_K(N, K);
        json ev = {{"root_number", w}, {"formula", "kronecker(D, -N)"}};
        return make(id, w == -1 ? Status::Pass : Status::Fail, ev);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::RamifiedBadPrime) throw;
        return make(id, Status::Inconclusive, {{"detail", e.what()}}, "ramified-bad-prime");
    }
}

ConditionResult heegner_condition(const std::string& id, long N, const ImagQuadField& K) {
    auto h = heegner_factorization(N, K);
    json primes = json::array();
    for (auto& [q, e, k] : h.primes) primes.push_back({{"q", q}, {"e", e}, {"kronecker", k}});
    json ev = {{"N_plus", h.N_plus},
               {"N_minus", h.N_minus},
               {"classification", heegner_class_name(h.classification)},
               {"primes", primes}};
    if (!h.reason.empty()) ev["detail"] = h.reason;
    return make(id, h.classification == HeegnerClass::Fails ? Status::Fail : Status::Pass, ev);
}

void check_prime(long p) {
    if (p < 3 || !is_prime(p)) fail(ErrorKind::InvalidInput, std::to_string(p) + " is not an odd prime");
}

}  // namespace

Verdict check_ordinary(const CurveSymbols& cs, long d, long p, const RunConfig& cfg) {
    validate(cfg);
    check_prime(p);
    const WeierstrassCurve& E = cs.curve();
    const long N = E.conductor();
    ImagQuadField K(d);
    const long D = K.discriminant();
    if (N % p == 0) fail(ErrorKind::BadReduction, std::to_string(p) + " divides the conductor " + std::to_string(N));
    if (K.splitting(p) == 0) fail(ErrorKind::RamifiedPrime, std::to_string(p) + " ramifies in " + K.name());
    const long a = ap(E, p);
    if (mod(a, p) == 0) fail(ErrorKind::SupersingularInput, "a_p = " + std::to_string(a) + " is divisible by p");

    Verdict v;
    v.caveats = standing_caveats();

    {
        bool ok = is_non_anomalous(E, p, D);
        json ev = {{"a_p", a}, {"splitting", K.splitting(p)}};
        if (K.splitting(p) == 1) ev["reduction_count"] = p + 1 - a;
        else ev["reduction_count_mod_p"] = mod(1 - a * a, p);
        if (auto w = torsion_witness(E, p)) ev["torsion_certificate"] = {{"ell", *w}, {"count", *w + 1 - ap(E, *w)}};
        v.conditions.push_back(make("ord.0", ok ? Status::Pass : Status::Fail, ev));
    }
    v.conditions.push_back(root_number_condition("ord.1", N, K));
    v.conditions.push_back(heegner_condition("ord.2", N, K));

    SeriesPair sp;
    try {
        sp.E = ordinary_lseries(cs, p, 1, cfg);
        sp.rE = mu_lambda(*sp.E);
        sp.K = ordinary_lseries(cs, p, D, cfg);
        sp.rK = mu_lambda(*sp.K);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::PrecisionExhausted && e.kind() != ErrorKind::RamifiedTwist) throw;
        sp.error = e.what();
    }
    const std::string prec = precision_label(p, cfg.coeff_prec);
    if (!sp.error.empty()) {
        for (const char* id : {"ord.3", "ord.4", "ord.r0"}) {
            auto c = make(id, Status::Inconclusive, {{"detail", sp.error}}, "precision");
            c.precision = prec;
            v.conditions.push_back(c);
        }
    } else {
        json ev = {{"E", series_evidence(*sp.E, sp.rE)}, {"twist", series_evidence(*sp.K, sp.rK)}, {"twist_D", D}};
        std::string reason;
        Status s3 = lambda_status(sp.rE, sp.rK, 1, reason);
        if (s3 != Status::Inconclusive) ev["lambda_sum"] = *sp.rE.lambda + *sp.rK.lambda;
        auto c3 = make("ord.3", s3, ev, reason);
        c3.precision = pair_precision(p, *sp.E, sp.rE, *sp.K, sp.rK);
        v.conditions.push_back(c3);

        long ord_sum = sp.rE.ord_T_lower + sp.rK.ord_T_lower;
        json ev4 = {{"ord_T_lower_E", sp.rE.ord_T_lower}, {"ord_T_lower_twist", sp.rK.ord_T_lower},
                    {"ord_T_lower_sum", ord_sum}, {"bound", "lower"}};
        Status s4;
        std::string r4;
        if (ord_sum >= 1) {
            s4 = Status::Pass;
            if (s3 == Status::Pass) ev4["ord_T_sum_inferred"] = 1;
        } else if (!(*sp.E)[0].is_zero() && !(*sp.K)[0].is_zero()) {
            s4 = Status::Fail;
        } else {
            s4 = Status::Inconclusive;
            r4 = "precision";
        }
        auto c4 = make("ord.4", s4, ev4, r4);
        c4.precision = c3.precision;
        v.conditions.push_back(c4);

        std::string r0;
        Status s0 = lambda_status(sp.rE, sp.rK, 0, r0);
        json ev0 = json::object();
        if (s0 == Status::Fail) {
            s0 = Status::NotApplicable;
            ev0["detail"] = "lambda sum is not 0";
        } else if (s0 == Status::Pass) {
            if (gcd(D, N) != 1) {
                s0 = Status::Inconclusive;
                r0 = "ramified-twist";
            } else {
                BigRational lE = algebraic_L_ratio(cs.plus(), 1);
                BigRational lK = algebraic_L_ratio(cs.symbol(CurveSymbols::sign_for(D)), D);
                ev0["L_ratio_E"] = rat_str(lE);
                ev0["L_ratio_twist"] = rat_str(lK);
                s0 = (lE != 0 && lK != 0) ? Status::Pass : Status::Fail;
            }
        }
        auto c0 = make("ord.r0", s0, ev0, r0);
        c0.precision = s0 == Status::Pass ? "exact" : c3.precision;
        v.conditions.push_back(c0);
    }

    auto get = [&](const char* id) { return v.find(id); };
    Conclusion rank1 = combine({get("ord.0"), get("ord.1"), get("ord.2"), get("ord.3"), get("ord.4")});
    Conclusion rank0 = get("ord.r0")->status == Status::NotApplicable
                           ? Conclusion::NotVerified
                           : combine({get("ord.0"), get("ord.2"), get("ord.r0")});
    if (rank1 == Conclusion::VerifiedConditionalOnSha) {
        v.conclusion = rank1;
        v.narrative = "Conditions ord.0-ord.4 hold. The lambda sum is 1 and the ord_T sum is at least 1, so the ord_T "
                      "sum equals 1; by the main conjecture the Selmer corank over K_cyc is 1, which gives (S-C).";
    } else if (rank0 == Conclusion::VerifiedConditionalOnSha) {
        v.conclusion = rank0;
        v.narrative = "Rank-0 branch: both lambda invariants vanish with mu = 0 and the L-ratios of E and its twist are "
                      "nonzero, so Sel(E/K) is finite.";
    } else if (rank1 == Conclusion::Inconclusive || rank0 == Conclusion::Inconclusive) {
        v.conclusion = Conclusion::Inconclusive;
        v.narrative = "Some conditions could not be certified at the current precision.";
    } else {
        v.conclusion = Conclusion::NotVerified;
        v.narrative = "A required condition fails on both branches.";
    }
    return v;
}

Verdict check_supersingular(const CurveSymbols& cs, long d, long p, const RunConfig& cfg) {
    validate(cfg);
    check_prime(p);
    const WeierstrassCurve& E = cs.curve();
    const long N = E.conductor();
    ImagQuadField K(d);
    const long D = K.discriminant();
    Verdict v;
    v.caveats = standing_caveats();

    const bool good = N % p != 0;
    v.conditions.push_back(make("ss.1", good ? Status::Pass : Status::Fail, {{"conductor", N}}));
    if (!good) {
        for (const char* id : {"ss.2", "ss.3", "ss.4", "ss.5"}) v.conditions.push_back(make(id, Status::NotApplicable));
        v.conclusion = Conclusion::NotVerified;
        v.narrative = "E has bad reduction at p.";
        return v;
    }
    const long a = ap(E, p);
    v.conditions.push_back(make("ss.2", a == 0 ? Status::Pass : Status::Fail, {{"a_p", a}}));
    const int split = K.splitting(p);
    v.conditions.push_back(make("ss.3", split == 1 ? Status::Pass : Status::Fail, {{"kronecker", split}}));
    if (split == 1) {
        bool ok = anticyclotomic_totally_ramified(K, p);
        v.conditions.push_back(make("ss.4", ok ? Status::Pass : Status::Inconclusive,
                                    {{"class_number", K.class_number()}}, ok ? "" : "certificate-not-found"));
    } else {
        v.conditions.push_back(make("ss.4", Status::NotApplicable, {{"detail", "p does not split"}}));
    }
    if (gcd(D, N) != 1) {
        v.conditions.push_back(make("ss.5", Status::Inconclusive, {{"gcd_D_N", gcd(D, N)}}, "ramified-twist"));
    } else {
        BigRational lE = algebraic_L_ratio(cs.plus(), 1);
        BigRational lK = algebraic_L_ratio(cs.symbol(CurveSymbols::sign_for(D)), D);
        json ev = {{"L_ratio_E", rat_str(lE)}, {"L_ratio_twist", rat_str(lK)}};
        v.conditions.push_back(make("ss.5", lE != 0 && lK != 0 ? Status::Pass : Status::Fail, ev));
    }
    std::vector<const ConditionResult*> all;
    for (auto& c : v.conditions) all.push_back(&c);
    v.conclusion = combine(all);
    switch (v.conclusion) {
    case Conclusion::VerifiedConditionalOnSha:
        v.narrative = "L(E/K,1) is nonzero, so Sel(E/K) is finite and the Mordell-Weil ranks stay bounded in every "
                      "Z_p-extension of K.";
        break;
    case Conclusion::NotVerified: v.narrative = "A required condition fails."; break;
    default: v.narrative = "Some conditions could not be certified."; break;
    }
    return v;
}

Verdict check_sc_supersingular(const CurveSymbols& cs, long d, long p, const RunConfig& cfg) {
    validate(cfg);
    check_prime(p);
    const WeierstrassCurve& E = cs.curve();
    const long N = E.conductor();
    ImagQuadField K(d);
    const long D = K.discriminant();
    Verdict v;
    v.caveats = standing_caveats();

    const bool good = N % p != 0;
    const long a = good ? ap(E, p) : 0;
    const int split = K.splitting(p);
    {
        json ev = {{"good_reduction", good}, {"splitting", split}};
        Status s = Status::Pass;
        std::string reason;
        if (good) ev["a_p"] = a;
        if (!good || a != 0 || split != 1) {
            s = Status::Fail;
        } else {
            ev["class_number"] = K.class_number();
            if (!anticyclotomic_totally_ramified(K, p)) {
                s = Status::Inconclusive;
                reason = "certificate-not-found";
            }
        }
        v.conditions.push_back(make("sc.0p", s, ev, reason));
    }
    v.conditions.push_back(root_number_condition("sc.1", N, K));
    v.conditions.push_back(heegner_condition("sc.2", N, K));

    const std::string prec = precision_label(p, cfg.coeff_prec);
    if (!good || a != 0) {
        v.conditions.push_back(make("sc.3p", Status::NotApplicable, {{"detail", "needs good reduction and a_p = 0"}}));
    } else {
        try {
            auto [pE, mE] = signed_lseries(cs, p, 1, cfg);
            auto [pK, mK] = signed_lseries(cs, p, D, cfg);
            json ev = json::object();
            Status best = Status::Fail;
            std::string reason, best_prec = prec;
            for (int i = 0; i < 2; ++i) {
                const PAdicSeries& sE = i == 0 ? pE : mE;
                const PAdicSeries& sK = i == 0 ? pK : mK;
                auto rE = mu_lambda(sE), rK = mu_lambda(sK);
                std::string r;
                Status s = lambda_status(rE, rK, 1, r);
                const char* sign = i == 0 ? "plus" : "minus";
                ev[sign] = {{"E", series_evidence(sE, rE)}, {"twist", series_evidence(sK, rK)},
                            {"status", status_name(s)}};
                if (s == Status::Pass && best != Status::Pass) {
                    best = Status::Pass;
                    best_prec = pair_precision(p, sE, rE, sK, rK);
                    ev["sign"] = sign;
                } else if (s == Status::Inconclusive && best == Status::Fail) {
                    best = Status::Inconclusive;
                    reason = r;
                }
            }
            if (best == Status::Pass) reason.clear();
            auto c = make("sc.3p", best, ev, reason);
            c.precision = best_prec;
            v.conditions.push_back(c);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::PrecisionExhausted && e.kind() != ErrorKind::RamifiedTwist &&
                e.kind() != ErrorKind::NonRationalResult)
                throw;
            auto c = make("sc.3p", Status::Inconclusive, {{"detail", e.what()}}, "precision");
            c.precision = prec;
            v.conditions.push_back(c);
        }
    }
    try {
        json places = json::array();
        for (auto& t : tamagawa_over_K(E, D))
            places.push_back({{"ell", t.ell}, {"places", t.places}, {"tamagawa", t.tamagawa}});
        bool ok = tamagawa_p_indivisible_over_K(E, D, p);
        v.conditions.push_back(make("sc.5p", ok ? Status::Pass : Status::Fail, {{"places", places}}));
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::RamifiedBadPrime) throw;
        v.conditions.push_back(make("sc.5p", Status::Inconclusive, {{"detail", e.what()}}, "ramified-bad-prime"));
    }

    std::vector<const ConditionResult*> all;
    for (auto& c : v.conditions) all.push_back(&c);
    Conclusion c = combine(all);
    v.conclusion = c == Conclusion::VerifiedConditionalOnSha ? Conclusion::ScVerified : c;
    switch (v.conclusion) {
    case Conclusion::ScVerified:
        v.narrative = "For the recorded sign the signed Selmer group over K_cyc has lambda <= 1 by the analytic bound "
                      "and lambda >= 1 by parity, with mu = 0; (S-C) holds for all four signed Selmer groups.";
        break;
    case Conclusion::NotVerified: v.narrative = "A required condition fails."; break;
    default: v.narrative = "Some conditions could not be certified."; break;
    }
    return v;
}

Verdict run_check(const CurveSymbols& cs, long d, long p, Mode mode, const RunConfig& cfg) {
    switch (mode) {
    case Mode::Ordinary: return check_ordinary(cs, d, p, cfg);
    case Mode::Supersingular: return check_supersingular(cs, d, p, cfg);
    case Mode::Sc: return check_sc_supersingular(cs, d, p, cfg);
    }
    fail(ErrorKind::InvalidInput, "unknown mode");
}

bool ScanCell::verified() const {
    return verdict && (verdict->conclusion == Conclusion::VerifiedConditionalOnSha ||
                       verdict->conclusion == Conclusion::ScVerified);
}

std::map<long, std::vector<long>> ScanResult::table() const {
    std::map<long, std::vector<long>> t;
    for (auto& c : cells)
        if (c.verified()) t[c.p].push_back(c.d);
    return t;
}

ScanResult scan(const CurveSymbols& cs, long d_max, long p_max, Mode mode, const RunConfig& cfg) {
    validate(cfg);
    const WeierstrassCurve& E = cs.curve();
    ScanResult out;
    out.mode = mode;
    std::vector<long> ps;
    for (long p : primes_up_to(std::max(0L, p_max - 1))) {
        if (p < 3 || E.conductor() % p == 0) continue;
        bool ss = mod(ap(E, p), p) == 0;
        if ((mode == Mode::Ordinary) != !ss) continue;
        ps.push_back(p);
    }
    for (long p : ps)
        for (long d : primes_up_to(std::max(0L, d_max - 1))) out.cells.push_back({p, d, std::nullopt, {}});
    if (out.cells.empty()) return out;

    // Build the shared symbols before fanning out.
    (void)cs.plus();
    (void)cs.minus();
    unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(out.cells.size()));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < out.cells.size();) {
            ScanCell& c = out.cells[i];
            try {
                c.verdict = run_check(cs, c.d, c.p, mode, cfg);
            } catch (const Error& e) {
                c.error = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace iwa
