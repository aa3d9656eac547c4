#include "lienil/dvector_analysis.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lienil {

DVector make_dvector(int p, std::map<int, int> d) {
    DVector v;
    v.p = p;
    for (const auto& [m, x] : d) {
        if (m < 2) throw std::invalid_argument("d-vector indices start at 2");
        if (x < 0) throw std::invalid_argument("d-vector entries must be non-negative");
        if (x > 0) v.d[m] = x;
    }
    return v;
}

std::uint64_t theta_p_prime(int p, std::uint64_t x) {
    if (x < 1) throw std::invalid_argument("theta_p': argument must be positive");
    if (p < 2) throw std::invalid_argument("theta_p': p must be prime");
    const auto q = static_cast<std::uint64_t>(p);
    while (x % q == 0) x /= q;
    return x;
}

std::string LemmaViolation::str() const {
    std::ostringstream s;
    if (part == 1)
        s << "part 1 at m=" << m << ": d(" << witness + 1 << ")=0 with l=" << witness
          << " but d(pm+1) > d(" << m + 1 << ")";
    else
        s << "part 2 at m=" << m << ": d(" << m + 1 << ")=0 but d(" << witness + 1 << ") != 0";
    return s.str();
}

std::vector<LemmaViolation> LemmaReport::part(int k) const {
    std::vector<LemmaViolation> out;
    for (const auto& v : violations)
        if (v.part == k) out.push_back(v);
    return out;
}

LemmaReport lemma_constraints_ok(const DVector& v) {
    LemmaReport r;
    const int p = v.p;
    const int N = std::max(static_cast<int>(v.weight()), v.max_index());
    auto d = [&](int m) { return v.at(m); };
    for (int m = 1; static_cast<long long>(p) * m <= N; ++m) {
        const int pm = p * m;
        if (d(pm + 1) <= d(m + 1)) continue;
        for (int l = 1; l < pm; ++l)
            if (d(l + 1) == 0) {
                r.violations.push_back({1, m, l});
                break;
            }
    }
    for (int m = 1; m <= N; ++m) {
        if (d(m + 1) != 0) continue;
        const auto tm = theta_p_prime(p, static_cast<std::uint64_t>(m));
        for (int s = m; s <= N; ++s)
            if (d(s + 1) != 0 && theta_p_prime(p, static_cast<std::uint64_t>(s)) >= tm)
                r.violations.push_back({2, m, s});
    }
    r.ok = r.violations.empty();
    return r;
}

namespace {

void enumerate_rec(int p, int m, int weight, int remaining, std::map<int, int>& cur, std::vector<DVector>& out) {
    if (m > weight + 1) {
        if (remaining == 0) out.push_back(make_dvector(p, cur));
        return;
    }
    const int step = m - 1;
    for (int x = 0; x * step <= remaining; ++x) {
        if (x > 0) cur[m] = x;
        enumerate_rec(p, m + 1, weight, remaining - x * step, cur, out);
    }
    cur.erase(m);
}

}  // namespace

std::vector<DVector> enumerate_weight(int p, int weight) {
    if (weight < 1) throw std::invalid_argument("weight must be at least 1");
    std::vector<DVector> out;
    std::map<int, int> cur;
    enumerate_rec(p, 2, weight, weight, cur, out);
    return out;
}

std::vector<DVector> enumerate_admissible(int p, int weight) {
    std::vector<DVector> out;
    for (auto& v : enumerate_weight(p, weight))
        if (lemma_constraints_ok(v).ok) out.push_back(std::move(v));
    return out;
}

CaseReport proof_case_report(int weight) {
    CaseReport r;
    r.weight = weight;
    for (int p : kReportPrimes) r.survivors[p] = enumerate_admissible(p, weight);
    return r;
}

std::string CaseReport::text() const {
    std::ostringstream s;
    s << "lemma-admissible d-vectors of weight " << weight << "\n";
    for (const auto& [p, list] : survivors) {
        s << "p = " << p << " (" << list.size() << " vectors, t^L = " << 2 + (p - 1) * weight << ")\n";
        for (const auto& v : list) s << "  " << v.str() << "\n";
    }
    return s.str();
}

}  // namespace lienil
