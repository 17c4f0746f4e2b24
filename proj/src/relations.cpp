#include "mlde/relations.hpp"

#include "mlde/errors.hpp"

namespace mlde {

namespace {

Expr F(const char* n) { return Expr::form(n); }
Expr at(const char* n, long m) { return subst(Expr::form(n), m); }
Expr p(const Expr& e, long k) { return pow(e, Rational(k)); }

RelationRecord rel(const char* label, const char* text, Expr lhs, Expr rhs) {
    std::string l(label);
    return RelationRecord{l.substr(0, 1), l, text, std::move(lhs), std::move(rhs), true, ""};
}

std::vector<RelationRecord> all_relations() {
    const Expr E2 = F("E2"), E4 = F("E4"), E6 = F("E6");
    const Expr H2 = F("H2"), D2 = F("Delta2"), I3 = F("I3"), D3 = F("Delta3");
    const Expr th = F("theta"), D4 = F("Delta4"), x = F("psi1"), y = F("psi2");
    const Expr I15 = F("I15"), D15 = F("Delta15");
    const Expr E2_5 = at("E2", 5), H2_5 = at("H2", 5), D2_5 = at("Delta2", 5);
    const Expr x2 = at("psi1", 2), y2 = at("psi2", 2), x4 = at("psi1", 4), y4 = at("psi2", 4);
    const Expr I3_5 = at("I3", 5), th5 = at("theta", 5), D4_5 = at("Delta4", 5);

    std::vector<RelationRecord> v;
    v.push_back(rel("a.1", "6 H2' = E2 H2 - H2^2 + 192 D2^2", 6 * deriv(H2), E2 * H2 - p(H2, 2) + 192 * p(D2, 2)));
    v.push_back(rel("a.2", "E4 = H2^2 + 192 D2^2", E4, p(H2, 2) + 192 * p(D2, 2)));
    v.push_back(rel("a.3", "6 D2' = (E2 + 2 H2) D2", 6 * deriv(D2), (E2 + 2 * H2) * D2));
    v.push_back(rel("a.4", "E6 = (H2^2 - 576 D2^2) H2", E6, (p(H2, 2) - 576 * p(D2, 2)) * H2));

    v.push_back(rel("b.1", "12 I3' = E2 I3 - I3^3 + 108 D3^3", 12 * deriv(I3), E2 * I3 - p(I3, 3) + 108 * p(D3, 3)));
    v.push_back(rel("b.2", "E4 = I3 (I3^3 + 216 D3^3)", E4, I3 * (p(I3, 3) + 216 * p(D3, 3))));
    v.push_back(rel("b.3", "12 D3' = (E2 + 3 I3^2) D3", 12 * deriv(D3), (E2 + 3 * p(I3, 2)) * D3));
    v.push_back(rel("b.4", "E6 = I3^6 - 540 I3^3 D3^3 - 5832 D3^6", E6,
                    p(I3, 6) - 540 * p(I3, 3) * p(D3, 3) - 5832 * p(D3, 6)));

    v.push_back(rel("c.1", "24 theta' = (E2 - theta^4 + 80 D4^4) theta", 24 * deriv(th),
                    (E2 - p(th, 4) + 80 * p(D4, 4)) * th));
    v.push_back(rel("c.2", "E4 = theta^8 + 224 theta^4 D4^4 + 256 D4^8", E4,
                    p(th, 8) + 224 * p(th, 4) * p(D4, 4) + 256 * p(D4, 8)));
    v.push_back(rel("c.3", "24 D4' = (E2 + 5 theta^4 - 16 D4^4) D4", 24 * deriv(D4),
                    (E2 + 5 * p(th, 4) - 16 * p(D4, 4)) * D4));
    v.push_back(rel("c.4", "E6 = (theta^4 + 16 D4^4)(theta^8 - 544 theta^4 D4^4 + 256 D4^8)", E6,
                    (p(th, 4) + 16 * p(D4, 4)) * (p(th, 8) - 544 * p(th, 4) * p(D4, 4) + 256 * p(D4, 8))));

    v.push_back(rel("d.1", "60 psi1' = (E2 - psi1^10 + 66 psi1^5 psi2^5 + 11 psi2^10) psi1", 60 * deriv(x),
                    (E2 - p(x, 10) + 66 * p(x, 5) * p(y, 5) + 11 * p(y, 10)) * x));
    v.push_back(rel("d.2", "60 psi2' = (E2 + 11 psi1^10 - 66 psi1^5 psi2^5 - psi2^10) psi2", 60 * deriv(y),
                    (E2 + 11 * p(x, 10) - 66 * p(x, 5) * p(y, 5) - p(y, 10)) * y));
    v.push_back(rel("d.3", "E4 = psi1^20 + 228 psi1^15 psi2^5 + 494 psi1^10 psi2^10 - 228 psi1^5 psi2^15 + psi2^20", E4,
                    p(x, 20) + 228 * p(x, 15) * p(y, 5) + 494 * p(x, 10) * p(y, 10) - 228 * p(x, 5) * p(y, 15) +
                        p(y, 20)));
    v.push_back(rel("d.4",
                    "E6 = (psi1^10 + psi2^10)(psi1^20 - 522 psi1^15 psi2^5 - 10006 psi1^10 psi2^10 + 522 psi1^5 "
                    "psi2^15 + psi2^20)",
                    E6,
                    (p(x, 10) + p(y, 10)) * (p(x, 20) - 522 * p(x, 15) * p(y, 5) - 10006 * p(x, 10) * p(y, 10) +
                                             522 * p(x, 5) * p(y, 15) + p(y, 20))));

    v.push_back(rel("e.1", "6 H2(q^5)' = 5 {E2(q^5) H2(q^5) - H2(q^5)^2 + 192 D2(q^5)^2}", 6 * deriv(H2_5),
                    5 * (E2_5 * H2_5 - p(H2_5, 2) + 192 * p(D2_5, 2))));
    v.push_back(rel("e.2", "6 D2(q^5)' = 5 D2(q^5) {E2(q^5) + H2(q^5)}", 6 * deriv(D2_5), 5 * D2_5 * (E2_5 + H2_5)));
    v.push_back(rel("e.3", "5 E2(q^5) = E2 + 4 {psi1^10 + psi2^10}", 5 * E2_5, E2 + 4 * (p(x, 10) + p(y, 10))));
    v.push_back(rel("e.4",
                    "55 H2(q^5) = -3 {5 psi2^10 + 7 psi1(q^2)^5 psi1^5 - 21 psi1(q^2)^5 psi2^5 + 30 psi2(q^2)^5 "
                    "psi1^5} + 76 psi1(q^2)^10 - 78 psi1(q^2)^5 psi2(q^2)^5 + 70 psi2(q^2)^10",
                    55 * H2_5,
                    -3 * (5 * p(y, 10) + 7 * p(x2, 5) * p(x, 5) - 21 * p(x2, 5) * p(y, 5) + 30 * p(y2, 5) * p(x, 5)) +
                        76 * p(x2, 10) - 78 * p(x2, 5) * p(y2, 5) + 70 * p(y2, 10)));
    {
        RelationRecord r;
        r.group = "e";
        r.label = "e.5";
        r.text = "3000 D2(q^5)^2 = 2 {H2^2 - 60 D2(1)^2} - ... (refers to D2(1))";
        r.parseable = false;
        v.push_back(r);
    }

    v.push_back(rel("f.1", "12 I15' = (E2 - 5 I15^2 - 2 I15 D15 - 13 D15^2 + I3^2) I15", 12 * deriv(I15),
                    (E2 - 5 * p(I15, 2) - 2 * I15 * D15 - 13 * p(D15, 2) + p(I3, 2)) * I15));
    v.push_back(rel("f.2", "12 D15' = (E2 + 13 I15^2 - 2 I15 D15 + 5 D15^2 - 2 I3^2) D15", 12 * deriv(D15),
                    (E2 + 13 * p(I15, 2) - 2 * I15 * D15 + 5 * p(D15, 2) - 2 * p(I3, 2)) * D15));
    v.push_back(rel("f.3",
                    "12 I3(q^5)' = E2 I3(q^5) + I3 {4 I15 + 4 I15 D15 + 2 D15^2} - I3(q^5) {5 I15^2 + 2 I15 D15 - 5 "
                    "D15^2}",
                    12 * deriv(I3_5),
                    E2 * I3_5 + I3 * (4 * I15 + 4 * I15 * D15 + 2 * p(D15, 2)) -
                        I3_5 * (5 * p(I15, 2) + 2 * I15 * D15 - 5 * p(D15, 2))));
    v.push_back(rel("f.4", "I3^2 = 6 I15^2 + 6 D15^2 - 5 I3(q^5)^2", p(I3, 2),
                    6 * p(I15, 2) + 6 * p(D15, 2) - 5 * p(I3_5, 2)));
    v.push_back(rel("f.5", "I3 I3(q^5) = I15^2 + 4 I15 D15 - D15^2", I3 * I3_5,
                    p(I15, 2) + 4 * I15 * D15 - p(D15, 2)));
    v.push_back(rel("f.6", "I3^3 = 6 I3 {I15^2 + D15^2} - 5 I3(q^5) {I15^2 + 4 I15 D15 - D15^2}", p(I3, 3),
                    6 * I3 * (p(I15, 2) + p(D15, 2)) - 5 * I3_5 * (p(I15, 2) + 4 * I15 * D15 - p(D15, 2))));
    v.push_back(rel("f.7",
                    "108 D3^3 = I3 {25 I15^2 - 2 I15 D15 - D15^2} - 5 I3(q^5) {5 I15^2 + 8 I15 D15 + D15^2}",
                    108 * p(D3, 3),
                    I3 * (25 * p(I15, 2) - 2 * I15 * D15 - p(D15, 2)) -
                        5 * I3_5 * (5 * p(I15, 2) + 8 * I15 * D15 + p(D15, 2))));
    v.push_back(rel("f.8",
                    "120 psi2^10 = 45 {I15^2 - 5 D15^2} - 6 I3 {14 I15 - 2 I15 D15 - 5 D15^2} + 3 I3(q^5) {8 I15 + "
                    "64 D15 - 5 I3}",
                    120 * p(y, 10),
                    45 * (p(I15, 2) - 5 * p(D15, 2)) - 6 * I3 * (14 * I15 - 2 * I15 * D15 - 5 * p(D15, 2)) +
                        3 * I3_5 * (8 * I15 + 64 * D15 - 5 * I3)));

    const Expr psi10 = 4 * p(x, 10) + 4 * p(y, 10);
    const Expr k10 = p(x, 10) - 11 * p(x, 5) * p(y, 5) - p(y, 10);
    v.push_back(rel("g.1", "theta(q^5)' = theta(q^5) {E2 + 4 psi1^10 + 4 psi2^10 - 5 theta(q^5)^4 + 400 D4(q^5)^4}",
                    deriv(th5), th5 * (E2 + psi10 - 5 * p(th5, 4) + 400 * p(D4_5, 4))));
    v.push_back(rel("g.2", "D4(q^5)' = D4(q^5) {E2 + 4 psi1^10 + 4 psi2^10 + 25 theta(q^5)^4 - 80 D4(q^5)^4}",
                    deriv(D4_5), D4_5 * (E2 + psi10 + 25 * p(th5, 4) - 80 * p(D4_5, 4))));
    v.push_back(rel("g.3",
                    "theta^5 = 80 theta D4^4 - 5 theta {psi1^5 + psi2^5} + 6 theta(q^5) {psi1^10 - 11 psi1^5 psi2^5 "
                    "- psi2^10}",
                    p(th, 5), 80 * th * p(D4, 4) - 5 * th * (p(x, 5) + p(y, 5)) + 6 * th5 * k10));
    v.push_back(rel("g.4",
                    "D4^5 = 5 D4 {theta^4 - psi1^10 - psi2^10} + 6 D4(q^5) {psi1^10 - 11 psi1^5 psi2^5 - psi2^10}",
                    p(D4, 5), 5 * D4 * (p(th, 4) - p(x, 10) - p(y, 10)) + 6 * D4_5 * k10));
    v.push_back(rel("g.5",
                    "40 D4^3 D4(q^5) = 5 theta^3 theta(q^5) + psi1^10 - 36 psi1^5 psi2^5 - psi2^10 - 6 {psi1(q^4)^10 "
                    "- 36 psi1(q^4)^5 psi2(q^4)^5 - psi2(q^4)^10}",
                    40 * p(D4, 3) * D4_5,
                    5 * p(th, 3) * th5 + p(x, 10) - 36 * p(x, 5) * p(y, 5) - p(y, 10) -
                        6 * (p(x4, 10) - 36 * p(x4, 5) * p(y4, 5) - p(y4, 10))));
    v.push_back(rel("g.6",
                    "48 psi1(q^4)^10 = 2 {5 psi1^10 + 36 psi1^5 psi2^5 + psi2^10} + 45 theta(q^5)^2 {theta(q^5)^2 + "
                    "theta^2} - 2 theta theta(q^5) {135 theta(q^5)^2 + 71 theta^2} - 160 D4^3 D4(q^5) + 360 "
                    "psi1(q^4)^5 psi1^5 - 504 psi2(q^4)^5 psi2^5",
                    48 * p(x4, 10),
                    2 * (5 * p(x, 10) + 36 * p(x, 5) * p(y, 5) + p(y, 10)) + 45 * p(th5, 2) * (p(th5, 2) + p(th, 2)) -
                        2 * th * th5 * (135 * p(th5, 2) + 71 * p(th, 2)) - 160 * p(D4, 3) * D4_5 +
                        360 * p(x4, 5) * p(x, 5) - 504 * p(y4, 5) * p(y, 5)));
    v.push_back(rel("g.7",
                    "48 psi2(q^4)^10 = 2 {psi1^10 - 36 psi1^5 psi2^5 + 5 psi2^10} + 45 theta(q^5)^2 {theta(q^5)^2 + "
                    "theta^2} + 2 theta theta(q^5) {135 theta(q^5)^2 + 71 theta^2} + 160 D4^3 D4(q^5) - 504 "
                    "psi1(q^4)^5 psi1^5 + 360 psi2(q^4)^5 psi2^5",
                    48 * p(y4, 10),
                    2 * (p(x, 10) - 36 * p(x, 5) * p(y, 5) + 5 * p(y, 10)) + 45 * p(th5, 2) * (p(th5, 2) + p(th, 2)) +
                        2 * th * th5 * (135 * p(th5, 2) + 71 * p(th, 2)) + 160 * p(D4, 3) * D4_5 -
                        504 * p(x4, 5) * p(x, 5) + 360 * p(y4, 5) * p(y, 5)));
    return v;
}

RelationRecord fixed(const char* label, const char* text, const char* correction, Expr lhs, Expr rhs) {
    RelationRecord r = rel(label, text, std::move(lhs), std::move(rhs));
    r.correction = correction;
    return r;
}

std::vector<RelationRecord> restated_relations() {
    const Expr E2 = F("E2"), I3 = F("I3"), I15 = F("I15"), D15 = F("Delta15");
    const Expr th = F("theta"), D4 = F("Delta4"), x = F("psi1"), y = F("psi2");
    const Expr E2_5 = at("E2", 5), H2_5 = at("H2", 5), D2_5 = at("Delta2", 5);
    const Expr I3_5 = at("I3", 5), th5 = at("theta", 5), D4_5 = at("Delta4", 5);
    const Expr psi10 = 4 * p(x, 10) + 4 * p(y, 10);
    const Expr k10 = p(x, 10) - 11 * p(x, 5) * p(y, 5) - p(y, 10);

    std::vector<RelationRecord> v;
    v.push_back(fixed("e.2", "6 D2(q^5)' = 5 D2(q^5) {E2(q^5) + 2 H2(q^5)}", "H2(q^5) -> 2 H2(q^5)", 6 * deriv(D2_5),
                      5 * D2_5 * (E2_5 + 2 * H2_5)));
    v.push_back(fixed("f.1", "12 I15' = (E2 - 5 I15^2 - 2 I15 D15 - 13 D15^2 + 4 I3^2) I15", "I3^2 -> 4 I3^2",
                      12 * deriv(I15), (E2 - 5 * p(I15, 2) - 2 * I15 * D15 - 13 * p(D15, 2) + 4 * p(I3, 2)) * I15));
    v.push_back(fixed("f.3",
                      "12 I3(q^5)' = E2 I3(q^5) + I3 {4 I15^2 + 4 I15 D15 + 2 D15^2} - I3(q^5) {5 I15^2 + 2 I15 "
                      "D15 - 5 D15^2}",
                      "4 I15 -> 4 I15^2", 12 * deriv(I3_5),
                      E2 * I3_5 + I3 * (4 * p(I15, 2) + 4 * I15 * D15 + 2 * p(D15, 2)) -
                          I3_5 * (5 * p(I15, 2) + 2 * I15 * D15 - 5 * p(D15, 2))));
    v.push_back(fixed("g.1",
                      "24 theta(q^5)' = theta(q^5) {E2 + 4 psi1^10 + 4 psi2^10 - 5 theta(q^5)^4 + 400 D4(q^5)^4}",
                      "lhs scaled by 24", 24 * deriv(th5), th5 * (E2 + psi10 - 5 * p(th5, 4) + 400 * p(D4_5, 4))));
    v.push_back(fixed("g.2",
                      "24 D4(q^5)' = D4(q^5) {E2 + 4 psi1^10 + 4 psi2^10 + 25 theta(q^5)^4 - 80 D4(q^5)^4}",
                      "lhs scaled by 24", 24 * deriv(D4_5), D4_5 * (E2 + psi10 + 25 * p(th5, 4) - 80 * p(D4_5, 4))));
    v.push_back(fixed("g.3",
                      "theta^5 = 80 theta D4^4 - 5 theta {psi1^10 + psi2^10} + 6 theta(q^5) {psi1^10 - 11 psi1^5 "
                      "psi2^5 - psi2^10}",
                      "psi^5 -> psi^10", p(th, 5),
                      80 * th * p(D4, 4) - 5 * th * (p(x, 10) + p(y, 10)) + 6 * th5 * k10));
    v.push_back(fixed("g.4",
                      "16 D4^5 = 5 D4 {theta^4 - psi1^10 - psi2^10} + 6 D4(q^5) {psi1^10 - 11 psi1^5 psi2^5 - "
                      "psi2^10}",
                      "lhs scaled by 16", 16 * p(D4, 5), 5 * D4 * (p(th, 4) - p(x, 10) - p(y, 10)) + 6 * D4_5 * k10));
    return v;
}

}  // namespace

const std::vector<std::string>& relation_groups() {
    static const std::vector<std::string> g = {"a", "b", "c", "d", "e", "f", "g"};
    return g;
}

std::vector<RelationRecord> relations(const std::string& group) {
    static const std::vector<RelationRecord> all = all_relations();
    if (group == "all") return all;
    bool known = false;
    for (const auto& g : relation_groups()) known |= g == group;
    if (!known) throw UnknownLabel("no relation group '" + group + "'");
    std::vector<RelationRecord> out;
    for (const auto& r : all)
        if (r.group == group) out.push_back(r);
    return out;
}

std::vector<RelationRecord> corrected_relations() {
    static const std::vector<RelationRecord> v = restated_relations();
    return v;
}

const std::vector<std::string>& documented_relation_quarantine() {
    static const std::vector<std::string> q = {"e.2", "e.5", "f.1", "f.3", "f.8", "g.1", "g.2", "g.3", "g.4"};
    return q;
}

long default_relation_order(const std::string& group) {
    return group == "e" || group == "f" || group == "g" ? 25 : 50;
}

RelationResult verify_relation(const RelationRecord& r, long order) {
    RelationResult res;
    res.label = r.label;
    res.order = order;
    res.correction = r.correction;
    if (!r.parseable) {
        res.status = RelationStatus::Unparseable;
        return res;
    }
    Series d = (r.lhs - r.rhs).eval_to_precision(Rational(order + 1));
    if (d.empty()) {
        res.status = RelationStatus::Verified;
    } else {
        res.status = RelationStatus::Failed;
        res.residual_exponent = d.base();
        res.residual_coefficient = d.leading();
    }
    return res;
}

std::vector<RelationResult> verify_group(const std::string& group, std::optional<long> order) {
    std::vector<RelationResult> out;
    std::vector<std::string> groups = group == "all" ? relation_groups() : std::vector<std::string>{group};
    for (const auto& g : groups)
        for (const auto& r : relations(g)) out.push_back(verify_relation(r, order.value_or(default_relation_order(g))));
    return out;
}

const char* status_name(RelationStatus s) {
    switch (s) {
        case RelationStatus::Verified: return "verified";
        case RelationStatus::Failed: return "quarantined";
        case RelationStatus::Unparseable: return "unparseable";
    }
    return "?";
}

}  // namespace mlde
