#include "finrep/poset.hpp"

#include "finrep/errors.hpp"

namespace finrep {

ValidationReport validate_poset(const BoolMatrix& leq, int n) {
    require_carrier_size(n);
    if (static_cast<int>(leq.size()) != n)
        throw MalformedInput("order matrix has " + std::to_string(leq.size()) +
                             " rows, expected " + std::to_string(n));
    ElementSet carrier = ElementSet::first_n(n);
    for (int a = 0; a < n; ++a)
        if (!leq[a].subset_of(carrier))
            throw MalformedInput("order matrix row " + std::to_string(a) +
                                 " wider than the carrier");

    ValidationReport report;
    for (int a = 0; a < n; ++a)
        if (!leq[a].contains(a)) report.add("reflexive", {a});
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (leq[a].contains(b) && leq[b].contains(a))
                report.add("antisymmetric", {a, b});
    for (int a = 0; a < n; ++a)
        for (int b : leq[a].members())
            if (!leq[b].subset_of(leq[a])) {
                // find a concrete c with b <= c but not a <= c
                for (int c : (leq[b] - leq[a]).members()) {
                    report.add("transitive", {a, b, c});
                    break;
                }
            }
    return report;
}

FinitePoset::FinitePoset(BoolMatrix leq, int n) : n_(n), rows_(std::move(leq)) {
    ValidationReport report = validate_poset(rows_, n_);
    if (!report.ok())
        throw ValidationError("not a partial order: " + report.summary());
    cols_.assign(n_, ElementSet());
    for (int a = 0; a < n_; ++a)
        for (int b : rows_[a].members()) cols_[b].add(a);
}

std::vector<FinitePoset> enumerate_posets(int n) {
    require_carrier_size(n);
    if (n > 5) throw SizeCapExceeded("poset enumeration capped at size 5");
    std::vector<FinitePoset> out;
    int off_diag = n * (n - 1);
    // iterate over all assignments of the off-diagonal cells
    for (std::uint64_t mask = 0; mask < (1ULL << off_diag); ++mask) {
        BoolMatrix m(n);
        int bit = 0;
        for (int a = 0; a < n; ++a) {
            m[a].add(a);
            for (int b = 0; b < n; ++b) {
                if (a == b) continue;
                if ((mask >> bit) & 1) m[a].add(b);
                ++bit;
            }
        }
        if (validate_poset(m, n).ok()) out.emplace_back(m, n);
    }
    return out;
}

} // namespace finrep
