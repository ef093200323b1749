#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "pclean/decompositions.hpp"
#include "pclean/matrix.hpp"
#include "pclean/radicals.hpp"
#include "pclean/verifier.hpp"

using namespace pclean;

namespace {

struct Criterion {
    int id;
    const char* name;
    double seconds;  // wall-clock limit
    std::function<std::string()> run;  // empty string on success
};

RingPtr ring(std::string_view spec, std::uint64_t limit = kDefaultOrderLimit) {
    BuildOptions b;
    b.order_limit = limit;
    return build_ring(spec, b);
}

std::string worked_example() {
    auto z4 = ring("Z4");
    const RingTable& r = *z4;
    MatrixContext ctx(z4);
    const Matrix2 a = m2::parse(r, "[1,2;2,2]");
    const Matrix2 defect = m2::sub(r, a, m2::square(r, a));
    if (defect != m2::parse(r, "[0,0;0,2]")) return "A-A^2 = " + m2::format(r, defect);
    const MatrixAnalysis an = classify_pclean_2x2(ctx, a);
    if (!an.criteria.certificate) return "no certificate";
    const auto& c = *an.criteria.certificate;
    if (m2::square(r, c.idempotent) != c.idempotent) return "E not idempotent";
    if (m2::mul(r, c.idempotent, a) != m2::mul(r, a, c.idempotent)) return "E does not commute with A";
    if (m2::add(r, c.idempotent, c.remainder) != a) return "E+W != A";
    if (!ctx.in_mp(c.remainder)) return "W not in M2(P)";
    if (c.in_ring && ctx.m2())
        if (auto bad = validate(*ctx.m2(), *c.in_ring)) return *bad;
    return {};
}

std::string criteria_equivalence() {
    std::size_t total = 0;
    for (const char* spec : {"Z4", "Z8"}) {
        auto base = ring(spec);
        MatrixContext ctx(base);
        const std::size_t n = base->order();
        for (std::size_t i = 0; i < n * n * n * n; ++i) {
            const Matrix2 a{Index(i % n), Index(i / n % n), Index(i / n / n % n), Index(i / n / n / n)};
            const CriteriaVerdicts v = evaluate_criteria(ctx, a);
            if (v.definitional != v.square_test || v.definitional != v.root_test)
                return std::string(spec) + " mismatch at " + m2::format(*base, a);
            ++total;
        }
    }
    if (total != 256 + 4096) return "matrix count " + std::to_string(total);
    return {};
}

std::string matrix_radical() {
    auto m = ring("M2(Z4)");
    const RingTable& r = *m;
    const Ideal p = prime_radical(r);
    std::size_t even = 0;
    for (Index x = 0; x < r.order(); ++x) {
        bool all_even = true;
        for (Index e : r.matrix_entries(x)) all_even = all_even && e % 2 == 0;
        even += all_even;
        if (all_even != p.contains(x)) return "disagreement at " + r.format(x);
    }
    if (even != 16 || p.size() != 16) return "|P| = " + std::to_string(p.size());
    return {};
}

std::string radical_values() {
    struct Case {
        const char* spec;
        const char* generator;
        std::size_t p_order;
        std::size_t quotient_order;
    };
    for (const Case& c : {Case{"Z4[i]", "1+i", 8, 2}, Case{"Z9[w]", "1-w", 27, 3}}) {
        auto rp = ring(c.spec);
        const RingTable& r = *rp;
        const Ideal p = prime_radical(r);
        const Index g[] = {r.parse(c.generator)};
        const Ideal expected = ideal_generated(r, g);
        if (!(p.members == expected.members)) return std::string("P(") + c.spec + ") != ideal(" + c.generator + ")";
        if (p.size() != c.p_order) return std::string("|P(") + c.spec + ")| = " + std::to_string(p.size());
        const auto q = quotient_by_ideal(rp, p.members);
        if (q.ring->order() != c.quotient_order)
            return std::string(c.spec) + "/P has order " + std::to_string(q.ring->order());
    }
    return {};
}

std::string verdict_table() {
    auto spc = [](const RingPtr& r) { return is_strongly_pclean_ring(RingAnalysis(r)).holds; };
    if (!is_uniquely_pclean_ring(RingAnalysis(ring("Z4"))).holds) return "Z4 not uniquely P-clean";
    auto t2 = ring("T2(Z2)");
    if (!spc(t2)) return "T2(Z2) not strongly P-clean";
    if (is_uniquely_clean_ring(*t2).holds) return "T2(Z2) uniquely clean";
    if (spc(ring("Z9[w]"))) return "Z9[w] strongly P-clean";
    if (spc(ring("T2(Z9[w])", std::uint64_t{1} << 20))) return "T2(Z9[w]) strongly P-clean";
    std::size_t boolean = 0;
    for (const auto& r : default_catalog().rings) {
        if (!is_boolean(*r)) continue;
        ++boolean;
        if (!spc(r)) return r->name() + " Boolean but not strongly P-clean";
    }
    if (!boolean) return "no Boolean ring in the catalog";
    return {};
}

std::string local_triangular() {
    std::vector<RingPtr> rings;
    for (const char* s : {"Z2", "Z4", "Z8", "Z2[i]", "Z4[i]", "Z3[w]", "Z9[w]"}) rings.push_back(ring(s));
    Verifier v;
    for (const auto& c : v.verify("T3.5", rings))
        if (c.verdict != Verdict::Holds) return c.ring + " " + std::string(to_string(c.verdict)) + " " + c.counterexample.dump();
    // T3 over Z4 is part of the check above; confirm it was in range.
    if (std::uint64_t(4) * 4 * 4 * 4 * 4 * 4 > v.options().scan_limit) return "T3(Z4) not covered";
    return {};
}

// Definitional verdict against the discriminant condition, counted directly.
std::string discriminant(const char* spec, bool equivalence) {
    auto base = ring(spec);
    MatrixContext ctx(base);
    const std::size_t n = base->order();
    for (std::size_t i = 0; i < n * n * n * n; ++i) {
        const Matrix2 a{Index(i % n), Index(i / n % n), Index(i / n / n % n), Index(i / n / n / n)};
        const bool pclean = evaluate_criteria(ctx, a).definitional;
        const bool cond = discriminant_record(ctx, a).discriminant_condition();
        if (pclean && !cond) return std::string(spec) + " necessity fails at " + m2::format(*base, a);
        if (equivalence && cond && !pclean) return std::string(spec) + " sufficiency fails at " + m2::format(*base, a);
    }
    return {};
}

std::string idempotent_lift_property() {
    for (const auto& rp : default_catalog().rings) {
        const RingTable& r = *rp;
        RingAnalysis a(rp);
        for (Index x = 0; x < r.order(); ++x) {
            if (!a.in_prime_radical(r.sub(x, r.mul(x, x)))) continue;
            const Index e = idempotent_lift(r, x).idempotent;
            if (!r.is_idempotent(e) || !r.commutes(e, x) || !a.in_prime_radical(r.sub(x, e)))
                return r.name() + " at " + r.format(x);
        }
    }
    auto z8 = ring("Z8");
    if (idempotent_lift(*z8, 3).idempotent != z8->one()) return "f(3) != 1 over Z8";
    return {};
}

std::string phi_totality() {
    for (const char* spec : {"Z4", "Z8"}) {
        auto rp = ring(spec);
        const RingTable& r = *rp;
        std::size_t triples = 0;
        for (Index a = 0; a < r.order(); ++a)
            for (Index b = 0; b < r.order(); ++b)
                for (Index v = 0; v < r.order(); ++v) {
                    const bool nb = r.nilpotency_exponent(b).has_value();
                    const bool na = r.nilpotency_exponent(a).has_value();
                    if (r.is_unit(a) && nb) {
                        const Index x = solve_phi(r, a, b, v);
                        if (r.sub(r.mul(a, x), r.mul(x, b)) != v) return std::string(spec) + " solve_phi";
                        ++triples;
                    }
                    if (na && r.is_unit(b)) {
                        const Index y = solve_phi_mirror(r, a, b, v);
                        if (r.sub(r.mul(y, b), r.mul(a, y)) != v) return std::string(spec) + " solve_phi_mirror";
                        ++triples;
                    }
                }
        if (!triples) return std::string(spec) + " has no valid triples";
    }
    return {};
}

std::string full_suite() {
    Verifier v;
    const TheoremReport report = v.run_suite(default_catalog());
    if (report.exit_code() != 0) return "exit status " + std::to_string(report.exit_code());
    for (const auto& c : report.checks) {
        if (c.verdict == Verdict::Counterexample) return c.id + " on " + c.ring;
        if (c.id == "C2.14" && c.verdict != Verdict::Skipped) return "C2.14 not skipped on " + c.ring;
        if (c.id != "C2.14" && c.verdict == Verdict::Skipped && c.note.find("exceeds") == std::string::npos)
            return c.id + " skipped on " + c.ring + ": " + c.note;
    }
    return {};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "worked 2x2 example over Z4", 1, worked_example},
        {2, "three-way criterion agreement on M2(Z4), M2(Z8)", 60, criteria_equivalence},
        {3, "P(M2(Z4)) = M2({0,2})", 30, matrix_radical},
        {4, "P(Z4[i]) = (1+i), P(Z9[w]) = (1-w)", 10, radical_values},
        {5, "ring verdict table", 120, verdict_table},
        {6, "local rings vs T2/T3 equivalence", 300, local_triangular},
        {7, "discriminant necessity on M2(Z8), equivalence on M2(Z9)", 240,
         [] {
             // 120 s per ring.
             for (auto [spec, eq] : {std::pair{"Z8", false}, std::pair{"Z9", true}}) {
                 const auto start = std::chrono::steady_clock::now();
                 if (auto s = discriminant(spec, eq); !s.empty()) return s;
                 if (std::chrono::steady_clock::now() - start > std::chrono::seconds(120))
                     return std::string(spec) + " over 120 s";
             }
             return std::string();
         }},
        {8, "idempotent lift on every catalog ring", 60, idempotent_lift_property},
        {9, "phi solver totality over Z4, Z8", 10, phi_totality},
        {10, "full suite on the default catalog", 600, full_suite},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string problem;
        try {
            problem = c.run();
        } catch (const std::exception& e) {
            problem = e.what();
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (problem.empty() && s > c.seconds) problem = "over time limit";
        failed += !problem.empty();
        std::printf("AC%-2d %s  %-56s %8.2fs / %.0fs%s%s\n", c.id, problem.empty() ? "PASS" : "FAIL", c.name, s, c.seconds,
                    problem.empty() ? "" : "  ", problem.c_str());
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
