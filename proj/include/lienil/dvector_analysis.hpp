#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lienil/lie_dimension.hpp"

namespace lienil {

// A candidate d-sequence; weight() is the sum over m >= 1 of m * d_(m+1).
using DVector = DSequence;

DVector make_dvector(int p, std::map<int, int> d);

// Largest divisor of x coprime to p.
std::uint64_t theta_p_prime(int p, std::uint64_t x);

struct LemmaViolation {
    int part = 0;  // 1 or 2
    int m = 0;
    int witness = 0;  // part 1: the l with d_(l+1) = 0; part 2: the s with d_(s+1) != 0
    std::string str() const;
};

struct LemmaReport {
    bool ok = true;
    std::vector<LemmaViolation> violations;

    std::vector<LemmaViolation> part(int k) const;
};

// Part 1: for m >= 1, if d_(l+1) = 0 for some 1 <= l < pm, then d_(pm+1) <= d_(m+1).
// Part 2: if d_(m+1) = 0, then d_(s+1) = 0 for every s >= m with
// theta_p'(s) >= theta_p'(m).
// Both are checked for indices up to max(weight, largest support index).
LemmaReport lemma_constraints_ok(const DVector& v);

// Every d with the given weight, in lexicographic order of (d_(2), d_(3), ...).
std::vector<DVector> enumerate_weight(int p, int weight);
// The subset of enumerate_weight passing lemma_constraints_ok.
std::vector<DVector> enumerate_admissible(int p, int weight);

inline const std::vector<int> kReportPrimes{2, 3, 5, 7, 11, 13};

struct CaseReport {
    int weight = 0;
    std::map<int, std::vector<DVector>> survivors;  // keyed by p
    std::string text() const;
};

CaseReport proof_case_report(int weight);

}  // namespace lienil
