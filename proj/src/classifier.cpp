#include "mlde/classifier.hpp"

#include "mlde/errors.hpp"
#include "mlde/frobenius.hpp"
#include "mlde/operator.hpp"

#include <algorithm>
#include <set>

namespace mlde {

namespace {

std::vector<long> signed_divisors(long n) {
    std::vector<long> out;
    long a = n < 0 ? -n : n;
    for (long d = 1; d * d <= a; ++d) {
        if (a % d) continue;
        out.push_back(d);
        if (d != a / d) out.push_back(a / d);
    }
    std::size_t k = out.size();
    for (std::size_t i = 0; i < k; ++i) out.push_back(-out[i]);
    return out;
}

const std::vector<CaseSpec>& specs() {
    static const std::vector<CaseSpec> v = {
        {1, 5, -42, 1, 66, -2880, -2880, make_rational(54, 5), 4, -1, make_rational(-1, 20)},
        {2, 15, -306, 3, 326, -100800, 100800, Rational(18), 32, -1, make_rational(3, 4)},
        {3, 5, 78, -1, -52, -4200, 4200, Rational(-6), 23, 1, make_rational(1, 4)},
        {4, 5, 18, -1, -9, -180, 180, make_rational(-66, 5), 3, 1, make_rational(1, 20)},
    };
    return v;
}

std::vector<Rational> all_roots(const Rational& s) {
    return {-s / 24 - make_rational(1, 20), -s / 24 + make_rational(3, 4), s / 24 + make_rational(1, 4),
            s / 24 + make_rational(1, 20)};
}

void sort_unique(std::vector<Rational>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

const CaseSpec& case_spec(int case_id) {
    if (case_id < 1 || case_id > 4) throw UnknownLabel("case must be 1..4, got " + std::to_string(case_id));
    return specs()[static_cast<std::size_t>(case_id - 1)];
}

Rational case_root(const CaseSpec& c, const Rational& s) { return c.root_sign * s / 24 + c.root_const; }

std::vector<Candidate> enumerate_case(const CaseSpec& c) {
    std::map<Rational, Integer> found;
    for (long d : signed_divisors(c.rhs)) {
        long t = d - c.shift;
        long num = c.rhs / d - t - c.offset;
        if (num % c.kappa) continue;
        long a1 = num / c.kappa;
        if (a1 < 0) continue;
        found.emplace(make_rational(t, c.multiplier), Integer(a1));
    }
    std::vector<Candidate> out;
    for (auto& [s, a1] : found) out.push_back({s, a1});
    return out;
}

CandidateReport filter_candidates(const CaseSpec& c, const std::vector<Candidate>& candidates, long depth) {
    CandidateReport rep;
    rep.case_id = c.case_id;
    rep.depth = depth;
    rep.raw = candidates;
    for (long d = 1; d <= depth; ++d) rep.survivors_by_depth[d];

    for (const auto& cand : candidates) {
        const Rational alpha = case_root(c, cand.s);
        for (const auto& r : all_roots(cand.s)) {
            Rational w = r - alpha;
            if (w > 0 && is_integer(w)) {
                rep.weight_violations.push_back(cand.s);
                break;
            }
        }
        Series f;
        try {
            f = frobenius_solve(build_flat(cand.s), alpha, depth);
        } catch (const Resonance& e) {
            rep.rejected.push_back({cand.s, e.index(), "resonance"});
            continue;
        }
        if (depth >= 1 && f.coeff_at(alpha + 1) != Rational(cand.a1)) rep.a1_mismatches.push_back(cand.s);
        long bad = 0;
        for (long n = 1; n <= depth; ++n) {
            Rational a = f.coeff_at(alpha + n);
            if (!is_integer(a) || a < 0) {
                bad = n;
                break;
            }
            rep.survivors_by_depth[n].push_back(cand.s);
        }
        if (bad) {
            rep.rejected.push_back({cand.s, bad, "coefficient not a non-negative integer"});
        } else {
            rep.final.push_back(cand.s);
        }
    }
    return rep;
}

CandidateReport classify_case(int case_id, std::optional<long> depth) {
    const CaseSpec& c = case_spec(case_id);
    return filter_candidates(c, enumerate_case(c), depth.value_or(c.filter_depth));
}

std::vector<Rational> classify_all(const std::map<int, long>& depths) {
    std::vector<Rational> out;
    for (const auto& c : specs()) {
        auto it = depths.find(c.case_id);
        auto rep = classify_case(c.case_id, it == depths.end() ? c.filter_depth : it->second);
        out.insert(out.end(), rep.final.begin(), rep.final.end());
        out.push_back(c.excluded_linear_root);
    }
    sort_unique(out);
    return out;
}

const std::vector<Rational>& quasimodular_values() {
    static const std::vector<Rational> v = {make_rational(-318, 5), make_rational(-198, 5), make_rational(-138, 5),
                                            make_rational(-78, 5),  make_rational(-18, 5),  make_rational(42, 5)};
    return v;
}

std::vector<Rational> modular_candidates() {
    std::vector<Rational> out;
    for (const auto& s : classify_all())
        if (std::find(quasimodular_values().begin(), quasimodular_values().end(), s) == quasimodular_values().end())
            out.push_back(s);
    return out;
}

Rational n1_polynomial_fixture(int case_id, const Rational& s, const Rational& a) {
    const Rational s2 = s * s;
    switch (case_id) {
        case 1: return (5 * s - 54) * (25 * s2 + 5 * s * a + 120 * s - 42 * a + 108);
        case 2: return (s - 18) * (75 * s2 + 15 * s * a + 100 * s - 306 * a + 348);
        case 3: return (s + 6) * (25 * s2 - 5 * s * a + 130 * s - 78 * a + 144);
        case 4: return (5 * s + 66) * (25 * s2 - 5 * s * a + 45 * s - 18 * a + 18);
    }
    throw UnknownLabel("case must be 1..4, got " + std::to_string(case_id));
}

Rational n2_polynomial_fixture(int case_id, const Rational& s, const Rational& a1, const Rational& a2) {
    const Rational s2 = s * s, s3 = s2 * s, s4 = s3 * s;
    switch (case_id) {
        case 1:
            return -386208 - 720360 * s - 255500 * s2 - 15750 * s3 + 3125 * s4 - 72792 * a1 - 22140 * s * a1 -
                   26250 * s2 * a1 + 1375 * s3 * a1 + 139536 * a2 - 12960 * s * a2 + 300 * s2 * a2;
        case 2:
            return 625 * s4 - 1350 * s3 + 475 * a1 * s3 - 155340 * s2 - 13650 * a1 * s2 + 140 * a2 * s2 -
                   385128 * s - 1836 * a1 * s - 8736 * a2 * s - 474336 + 161352 * a1 + 136080 * a2;
        case 3:
            return -245592 - 295812 * s - 124830 * s2 - 9975 * s3 + 625 * s4 + 15120 * a1 + 9216 * s * a1 -
                   6180 * s2 * a1 - 400 * s3 * a1 + 54648 * a2 + 5016 * s * a2 + 110 * s2 * a2;
        case 4:
            return -661608 - 1138860 * s - 551250 * s2 - 47625 * s3 + 3125 * s4 - 41472 * a1 + 11160 * s * a1 -
                   24000 * s2 * a1 - 1750 * s3 * a1 + 176904 * a2 + 18360 * s * a2 + 450 * s2 * a2;
    }
    throw UnknownLabel("case must be 1..4, got " + std::to_string(case_id));
}

}  // namespace mlde
