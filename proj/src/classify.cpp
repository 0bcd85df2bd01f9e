#include "superaff/classify.hpp"

#include "superaff/errors.hpp"
#include "superaff/findim.hpp"

#include <algorithm>
#include <iterator>

namespace superaff {

bool CanonicalWeight::is_vacuum() const
{
    return std::all_of(pairings.begin(), pairings.end(), [](const Rational& x) { return x == 0; });
}

bool operator<(const CanonicalWeight& a, const CanonicalWeight& b)
{
    if (a.pairings != b.pairings) return a.pairings < b.pairings;
    return a.level < b.level;
}

CanonicalWeight canonical(const RootSystem& rs, const AffineWeight& w)
{
    return {w.level, rs.pairings(w.finite)};
}

Classification classify_detailed(const RootSystem& rs, const WeylGroup& w, int u, const ClassifyOptions& opts)
{
    auto cands = enumerate_candidates(rs, w, u, {opts.level_check, opts.threads});
    Classification c;
    c.candidates = cands.size();
    for (const auto& cand : cands) {
        if (!is_even_dominant_integral(rs, cand.weight).accepted) continue;
        ++c.survivors;
        c.weights.push_back(canonical(rs, cand.weight));
    }
    std::sort(c.weights.begin(), c.weights.end());
    c.weights.erase(std::unique(c.weights.begin(), c.weights.end()), c.weights.end());
    c.duplicates = c.survivors - c.weights.size();
    return c;
}

Classification classify_detailed(const RootSystem& rs, int u, const ClassifyOptions& opts)
{
    return classify_detailed(rs, generate_weyl(rs), u, opts);
}

std::vector<CanonicalWeight> classify(const RootSystem& rs, int u, const ClassifyOptions& opts)
{
    return classify_detailed(rs, u, opts).weights;
}

std::vector<CanonicalWeight> expected_closed_form(const RootSystem& rs, int u)
{
    const Rational level = principal_level(rs, u);
    const std::size_t r = rs.rank();
    std::vector<CanonicalWeight> out;
    if (!rs.spec.is_type_one()) {
        out.push_back({level, std::vector<Rational>(r)});
        return out;
    }
    const std::size_t odd = *rs.odd_node();
    if (rs.marks[odd] != 1) throw InternalError(rs.spec.name() + ": odd node comark is not 1");
    for (int p = 0; p < u; ++p) {
        // ((p+1)/u - 1) h∨ Lambda_0 - (p/u) h∨ Lambda_odd
        const Rational c0 = (Rational(p + 1, u) - 1) * rs.h_dual;
        const Rational c_odd = -Rational(p, u) * rs.h_dual;
        if (c0 + rs.marks[odd] * c_odd != level)
            throw InternalError(rs.spec.name() + ": closed form level does not reproduce h∨/u - h∨");
        CanonicalWeight w{level, std::vector<Rational>(r)};
        w.pairings[odd] = c_odd;
        out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::CountMismatch: return "COUNT_MISMATCH";
    case Verdict::WeightMismatch: return "WEIGHT_MISMATCH";
    }
    return "?";
}

Report verify(const RootSystem& rs, int u, const ClassifyOptions& opts)
{
    return verify(rs, generate_weyl(rs), u, opts);
}

Report verify(const RootSystem& rs, const WeylGroup& w, int u, const ClassifyOptions& opts)
{
    Classification c = classify_detailed(rs, w, u, opts);
    Report r;
    r.family = rs.spec;
    r.u = u;
    r.level = principal_level(rs, u);
    r.found = c.weights;
    r.expected = expected_closed_form(rs, u);
    r.candidates = c.candidates;
    r.survivors = c.survivors;
    r.duplicates = c.duplicates;
    std::set_difference(r.found.begin(), r.found.end(), r.expected.begin(), r.expected.end(),
                        std::back_inserter(r.unexpected));
    std::set_difference(r.expected.begin(), r.expected.end(), r.found.begin(), r.found.end(),
                        std::back_inserter(r.missing));
    const bool type_two_extra = !rs.spec.is_type_one() &&
                                std::any_of(r.found.begin(), r.found.end(), [](const auto& w) { return !w.is_vacuum(); });
    if (type_two_extra)
        r.verdict = Verdict::WeightMismatch;
    else if (r.found.size() != r.expected.size())
        r.verdict = Verdict::CountMismatch;
    else if (!r.unexpected.empty())
        r.verdict = Verdict::WeightMismatch;
    else
        r.verdict = Verdict::Pass;
    return r;
}

}  // namespace superaff
