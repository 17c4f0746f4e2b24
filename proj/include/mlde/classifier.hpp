#pragma once

#include "mlde/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mlde {

// (t + shift)(t + kappa a1 + offset) = rhs with t = multiplier * s.
struct CaseSpec {
    int case_id = 0;
    long multiplier = 1;
    long shift = 0;
    long kappa = 1;
    long offset = 0;
    long rhs = 0;
    // constant as printed next to the factorization
    long printed_rhs = 0;
    Rational excluded_linear_root;
    long filter_depth = 1;
    // root in terms of s: alpha = root_sign * s / 24 + root_const
    int root_sign = 1;
    Rational root_const;
};

const CaseSpec& case_spec(int case_id);
Rational case_root(const CaseSpec& c, const Rational& s);

struct Candidate {
    Rational s;
    Integer a1;
};

// Sorted by s, deduplicated.
std::vector<Candidate> enumerate_case(const CaseSpec& c);

struct Rejection {
    Rational s;
    long depth = 0;  // first coefficient index that failed
    std::string reason;
};

struct CandidateReport {
    int case_id = 0;
    long depth = 0;
    std::vector<Candidate> raw;
    std::map<long, std::vector<Rational>> survivors_by_depth;
    std::vector<Rational> final;
    std::vector<Rejection> rejected;
    // s values where some alpha_j - alpha is a positive integer
    std::vector<Rational> weight_violations;
    // s values where the recursion a1 differs from the enumerated a1
    std::vector<Rational> a1_mismatches;
};

CandidateReport filter_candidates(const CaseSpec& c, const std::vector<Candidate>& candidates, long depth);
CandidateReport classify_case(int case_id, std::optional<long> depth = std::nullopt);

// Union of the filtered cases and the four excluded linear roots.
std::vector<Rational> classify_all(const std::map<int, long>& depths = {});
// classify_all without the six values whose solutions need quasimodular forms.
std::vector<Rational> modular_candidates();
const std::vector<Rational>& quasimodular_values();

// Printed n=1 polynomial (with its linear factor) of each case.
Rational n1_polynomial_fixture(int case_id, const Rational& s, const Rational& a1);
// Printed n=2 polynomial of each case.
Rational n2_polynomial_fixture(int case_id, const Rational& s, const Rational& a1, const Rational& a2);

}  // namespace mlde
