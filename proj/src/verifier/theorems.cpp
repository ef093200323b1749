#include <algorithm>

#include "context.hpp"

namespace pclean::verifier {

namespace {

using Violation = std::optional<json>;

std::vector<json> single(RingContext&, bool&) { return {json::object()}; }

std::optional<Gate> always(RingContext&) { return std::nullopt; }

std::optional<Gate> small_for_ideals(RingContext& c) {
    if (c.r().order() > c.options().ideal_limit)
        return Gate{Verdict::Skipped, "order " + std::to_string(c.r().order()) + " exceeds the ideal enumeration limit"};
    return std::nullopt;
}

std::optional<Gate> local_only(RingContext& c) {
    if (!c.local()) return Gate{Verdict::HypothesisNotMet, "ring is not local"};
    return std::nullopt;
}

std::optional<Gate> commutative_local(RingContext& c) {
    if (!c.matrices()) return Gate{Verdict::HypothesisNotMet, "ring is not commutative and local"};
    return std::nullopt;
}

std::optional<Gate> local_with_t2(RingContext& c) {
    if (auto g = local_only(c)) return g;
    if (!c.derived(RingSpec::Kind::Triangular, 2)) return Gate{Verdict::Skipped, "T2 over this ring is not available"};
    return std::nullopt;
}

std::vector<json> ideal_instances(RingContext& c, bool&) {
    std::vector<json> out;
    for (const Ideal& i : c.ideals()) out.push_back({{"ideal", ideal_json(c.r(), i)}});
    return out;
}

std::vector<json> element_instances(RingContext& c, bool& exhaustive) {
    std::vector<json> out;
    for (auto i : c.pick(c.r().order(), c.options().scan_limit, exhaustive)) out.push_back({{"a", c.r().format(Index(i))}});
    return out;
}

std::vector<json> idempotent_instances(RingContext& c, bool&) {
    std::vector<json> out;
    for (Index e : c.r().idempotents()) out.push_back({{"f", c.r().format(e)}});
    return out;
}

Matrix2 matrix_at(const RingTable& r, std::uint64_t i) {
    const std::uint64_t n = r.order();
    return {Index(i / (n * n * n)), Index(i / (n * n) % n), Index(i / n % n), Index(i % n)};
}

std::vector<json> matrix_instances(RingContext& c, bool& exhaustive) {
    MatrixContext* m = c.matrices();
    const std::uint64_t n = c.r().order();
    const std::size_t limit = m->m2() ? m->m2()->ring().order() : c.options().sample_size;
    std::vector<json> out;
    for (auto i : c.pick(n * n * n * n, limit, exhaustive)) out.push_back({{"A", m2::format(c.r(), matrix_at(c.r(), i))}});
    return out;
}

bool trivial_class(const MatrixContext& m, const Matrix2& a) {
    return m.in_mp(a) || m.in_mp(m2::sub(m.ring(), m2::identity(m.ring()), a));
}

bool boolean_quotient(RingContext& c, const Ideal& i) { return is_boolean(*c.quotient(i.members)); }

// --- ring-level characterizations --------------------------------------------

Violation t2_1(RingContext& c, const json&) {
    const Ideal& j = c.analysis().jacobson_radical();
    const bool lhs = c.spc();
    const bool clean = is_strongly_clean_ring(c.r()).holds;
    const bool boolean = boolean_quotient(c, j);
    const bool locnil = is_locally_nilpotent(c.r(), j);
    if (lhs == (clean && boolean && locnil)) return std::nullopt;
    return json{{"strongly_pclean", lhs}, {"strongly_clean", clean}, {"boolean_mod_j", boolean}, {"j_locally_nilpotent", locnil}};
}

Violation t2_4(RingContext& c, const json&) {
    const RingTable& r = c.r();
    const bool spc = c.spc();
    const bool boolean = boolean_quotient(c, c.analysis().prime_radical());
    bool lift = true, bicommutant = true;
    for (Index x = 0; x < r.order(); ++x) {
        std::vector<Index> comm;
        for (Index y = 0; y < r.order(); ++y)
            if (r.commutes(x, y)) comm.push_back(y);
        bool any = false, any_bi = false;
        for (Index e : r.idempotents()) {
            if (!c.in_p(r.sub(x, e))) continue;
            any = true;
            if (std::all_of(comm.begin(), comm.end(), [&](Index y) { return r.commutes(e, y); })) any_bi = true;
        }
        lift = lift && any;
        bicommutant = bicommutant && any_bi;
    }
    const bool upc = c.upc();
    if (spc == boolean && spc == lift && spc == bicommutant && (!upc || spc)) return std::nullopt;
    return json{{"strongly_pclean", spc},          {"boolean_mod_p", boolean}, {"idempotent_mod_p", lift},
                {"idempotent_in_bicommutant", bicommutant}, {"uniquely_pclean", upc}};
}

Violation c2_5(RingContext& c, const json&) {
    const RingTable& r = c.r();
    // Periodic: every x has x^m = x^n for some m < n.
    bool periodic = true;
    for (Index x = 0; x < r.order() && periodic; ++x) {
        std::vector<bool> seen(r.order(), false);
        Index p = x;
        std::size_t steps = 0;
        while (!seen[p] && steps <= r.order()) {
            seen[p] = true;
            p = r.mul(p, x);
            ++steps;
        }
        periodic = seen[p];
    }
    bool shifted = true;
    Index witness = 0;
    for (Index u : r.units())
        if (!c.in_p(r.add(r.one(), u))) {
            shifted = false;
            witness = u;
            break;
        }
    if (c.spc() == (periodic && shifted)) return std::nullopt;
    json v{{"strongly_pclean", c.spc()}, {"periodic", periodic}, {"one_plus_units_strongly_nilpotent", shifted}};
    if (!shifted) v["unit"] = r.format(witness);
    return v;
}

std::optional<Gate> spc_and_small(RingContext& c) {
    if (auto g = small_for_ideals(c)) return g;
    if (!c.spc()) return Gate{Verdict::HypothesisNotMet, "ring is not strongly P-clean"};
    return std::nullopt;
}

Violation l2_6(RingContext& c, const json& in) {
    const Ideal i = ideal_from_json(c.r(), in["ideal"]);
    if (c.quotient_spc(i.members)) return std::nullopt;
    return json{{"quotient_strongly_pclean", false}, {"ideal_order", i.size()}};
}

std::vector<json> nilpotent_ideal_instances(RingContext& c, bool&) {
    std::vector<json> out;
    for (const Ideal& i : c.ideals())
        if (nilpotency_index(c.r(), i)) out.push_back({{"ideal", ideal_json(c.r(), i)}});
    return out;
}

Violation l2_7(RingContext& c, const json& in) {
    const Ideal i = ideal_from_json(c.r(), in["ideal"]);
    if (!nilpotency_index(c.r(), i)) return json{{"error", "ideal is not nilpotent"}};
    const bool q = c.quotient_spc(i.members);
    if (q == c.spc()) return std::nullopt;
    return json{{"strongly_pclean", c.spc()}, {"quotient_strongly_pclean", q}};
}

Violation t2_8(RingContext& c, const json& in) {
    const RingTable& r = c.r();
    const Ideal i = ideal_from_json(r, in["ideal"]);
    std::vector<bool> verdicts;
    Ideal power = i;
    for (;;) {
        verdicts.push_back(c.quotient_spc(power.members));
        Ideal next = ideal_product(r, power, i);
        if (next.members == power.members) break;
        power = std::move(next);
    }
    const bool first = verdicts.front();
    const bool some = std::find(verdicts.begin(), verdicts.end(), true) != verdicts.end();
    const bool all = std::find(verdicts.begin(), verdicts.end(), false) == verdicts.end();
    if (first == some && first == all) return std::nullopt;
    return json{{"powers_checked", verdicts.size()}, {"first", first}, {"some", some}, {"all", all}};
}

std::vector<json> ideal_pair_instances(RingContext& c, bool&) {
    const auto& ideals = c.ideals();
    std::vector<json> out;
    for (std::size_t a = 0; a < ideals.size(); ++a)
        for (std::size_t b = a; b < ideals.size(); ++b)
            out.push_back({{"I", ideal_json(c.r(), ideals[a])}, {"J", ideal_json(c.r(), ideals[b])}});
    return out;
}

Violation p2_10(RingContext& c, const json& in) {
    const RingTable& r = c.r();
    const Ideal i = ideal_from_json(r, in["I"]);
    const Ideal j = ideal_from_json(r, in["J"]);
    const bool both = c.quotient_spc(i.members) && c.quotient_spc(j.members);
    const bool product = c.quotient_spc(ideal_product(r, i, j).members);
    const bool meet = c.quotient_spc(ideal_intersection(r, i, j).members);
    if (both == product && both == meet) return std::nullopt;
    return json{{"both_quotients", both}, {"quotient_by_product", product}, {"quotient_by_intersection", meet}};
}

Violation t2_10(RingContext& c, const json&) {
    if (c.upc() == (c.abelian() && c.spc())) return std::nullopt;
    return json{{"uniquely_pclean", c.upc()}, {"abelian", c.abelian()}, {"strongly_pclean", c.spc()}};
}

std::optional<Gate> upc_only(RingContext& c) {
    if (!c.upc()) return Gate{Verdict::HypothesisNotMet, "ring is not uniquely P-clean"};
    return std::nullopt;
}

Violation c2_11(RingContext& c, const json&) {
    const RingVerdict v = is_uniquely_clean_ring(c.r());
    if (v.holds) return std::nullopt;
    return json{{"uniquely_clean", false}, {"element", c.r().format(*v.counterexample)}};
}

std::optional<Gate> upc_with_spec(RingContext& c) {
    if (auto g = upc_only(c)) return g;
    if (!c.r().spec()) return Gate{Verdict::Skipped, "ring has no spec to build Tc_n from"};
    return std::nullopt;
}

std::vector<json> tc_instances(RingContext& c, bool& exhaustive) {
    std::vector<json> out;
    const std::uint64_t n = c.r().order();
    for (std::size_t k = 2; k <= 3; ++k) {
        // Tc_k has order |R|^(1 + k(k−1)/2).
        std::uint64_t order = n;
        for (std::size_t e = 0; e < k * (k - 1) / 2; ++e) order *= n;
        if (k == 2 || order <= c.options().scan_limit) out.push_back({{"n", k}});
        else exhaustive = false;
    }
    return out;
}

Violation c2_12(RingContext& c, const json& in) {
    const std::size_t k = in["n"].get<std::size_t>();
    if (c.derived_spc(RingSpec::Kind::ConstDiagTriangular, k)) return std::nullopt;
    return json{{"ring", c.derived(RingSpec::Kind::ConstDiagTriangular, k)->name()}, {"strongly_pclean", false}};
}

Violation t2_13(RingContext& c, const json&) {
    const bool unil = is_uniquely_nilclean_ring(c.r()).holds;
    if (c.upc() == (c.spc() && unil)) return std::nullopt;
    return json{{"uniquely_pclean", c.upc()}, {"strongly_pclean", c.spc()}, {"uniquely_nil_clean", unil}};
}

std::optional<Gate> skipped_primary(RingContext&) {
    return Gate{Verdict::Skipped, "primary ideals are out of scope"};
}

// --- corners and triangular rings --------------------------------------------

Violation l3_1(RingContext& c, const json& in) {
    const RingTable& r = c.r();
    const Index a = c.parse_element(in["a"]);
    for (Index e : r.idempotents()) {
        if (!r.commutes(a, e) || !c.in_p(r.sub(a, e))) continue;
        for (Index x = 0; x < r.order(); ++x) {
            if (r.mul(x, a) == r.zero() && r.mul(x, e) != r.zero())
                return json{{"e", r.format(e)}, {"x", r.format(x)}, {"side", "left"}};
            if (r.mul(a, x) == r.zero() && r.mul(e, x) != r.zero())
                return json{{"e", r.format(e)}, {"x", r.format(x)}, {"side", "right"}};
        }
    }
    return std::nullopt;
}

Violation t3_2(RingContext& c, const json& in) {
    const Index f = c.parse_element(in["f"]);
    const CornerResult corner = corner_ring(c.ring(), f);
    RingAnalysis ca(corner.ring);
    for (Index x = 0; x < corner.ring->order(); ++x) {
        const bool in_r = c.element_spc(corner.embedding[x]);
        const bool in_corner = strongly_pclean_element(ca, x).certificate.has_value();
        if (in_r != in_corner)
            return json{{"a", c.r().format(corner.embedding[x])}, {"in_ring", in_r}, {"in_corner", in_corner}};
    }
    return std::nullopt;
}

Violation c3_3(RingContext& c, const json&) {
    bool all = true;
    std::optional<Index> failing;
    for (Index e : c.r().idempotents()) {
        if (is_strongly_pclean_ring(RingAnalysis(corner_ring(c.ring(), e).ring)).holds) continue;
        all = false;
        failing = e;
        break;
    }
    if (c.spc() == all) return std::nullopt;
    json v{{"strongly_pclean", c.spc()}, {"all_corners", all}};
    if (failing) v["corner"] = c.r().format(*failing);
    return v;
}

Violation t3_5(RingContext& c, const json&) {
    const Ideal& j = c.analysis().jacobson_radical();
    const bool spc = c.spc();
    const bool upc = c.upc();
    const bool residue = c.r().order() == 2 * j.size() && is_locally_nilpotent(c.r(), j);
    json tn = json::object();
    bool agree = spc == upc && spc == residue;
    const std::uint64_t n = c.r().order();
    for (std::size_t k = 2; k <= 3; ++k) {
        if (k == 3 && n * n * n * n * n * n > c.options().scan_limit) break;
        if (!c.derived(RingSpec::Kind::Triangular, k)) break;
        const bool v = c.derived_spc(RingSpec::Kind::Triangular, k);
        tn["T" + std::to_string(k)] = v;
        agree = agree && v == spc;
    }
    if (agree) return std::nullopt;
    return json{{"strongly_pclean", spc}, {"uniquely_pclean", upc}, {"residue_z2_and_j_locally_nilpotent", residue}, {"triangular", tn}};
}

// diag(λ, μ) with one entry in P and the other in 1+P, reached by a unipotent
// conjugator [[1,q],[0,1]]; every unit of T2 is such a matrix times a
// diagonal unit, which keeps diagonal forms diagonal.
bool t2_split_similar(RingContext& c, const RingTable& t, Index a) {
    const RingTable& r = c.r();
    const auto e = t.matrix_entries(a);
    const bool first = c.in_p(e[0]) && c.in_one_plus_p(e[3]);
    const bool second = c.in_one_plus_p(e[0]) && c.in_p(e[3]);
    if (!first && !second) return false;
    for (Index q = 0; q < r.order(); ++q)
        // U⁻¹·A·U = [[a11, a11·q + a12 − q·a22], [0, a22]]
        if (r.sub(r.add(r.mul(e[0], q), e[1]), r.mul(q, e[3])) == r.zero()) return true;
    return false;
}

Violation c3_6(RingContext& c, const json&) {
    const RingAnalysis& t2 = *c.derived_analysis(RingSpec::Kind::Triangular, 2);
    const RingTable& t = t2.ring();
    bool all = true;
    Index failing = 0;
    for (Index a = 0; a < t.order(); ++a) {
        if (t2_split_similar(c, t, a) || t2.in_prime_radical(a) || t2.in_prime_radical(t.sub(t.one(), a))) continue;
        all = false;
        failing = a;
        break;
    }
    if (all == c.spc()) return std::nullopt;
    json v{{"strongly_pclean", c.spc()}, {"every_matrix_has_form", all}};
    if (!all) v["A"] = t.format(failing);
    return v;
}

std::vector<json> t2_instances(RingContext& c, bool& exhaustive) {
    const RingTable& t = *c.derived(RingSpec::Kind::Triangular, 2);
    std::vector<json> out;
    for (auto i : c.pick(t.order(), t.order() <= c.options().scan_limit ? t.order() : c.options().sample_size, exhaustive))
        out.push_back({{"A", t.format(Index(i))}});
    return out;
}

Violation p3_7(RingContext& c, const json& in) {
    const RingAnalysis& t2 = *c.derived_analysis(RingSpec::Kind::Triangular, 2);
    const RingTable& t = t2.ring();
    const Index a = t.parse(in["A"].get<std::string>());
    const auto e = t.matrix_entries(a);
    auto diagonal_ok = [&](Index x) { return c.in_p(x) || c.in_one_plus_p(x); };
    const bool lhs = strongly_pclean_element(t2, a).certificate.has_value();
    const bool rhs = diagonal_ok(e[0]) && diagonal_ok(e[3]);
    if (lhs != rhs) return json{{"strongly_pclean", lhs}, {"diagonal_in_p_or_one_plus_p", rhs}};
    const TriangularResult built = triangular_pclean(t2, e[0], e[1], e[3]);
    if (built.pclean != lhs) return json{{"strongly_pclean", lhs}, {"constructed", built.pclean}};
    return std::nullopt;
}

// --- 2x2 matrices over commutative local rings -------------------------------

std::optional<Gate> m2_available(RingContext& c) {
    if (!c.r().spec()) return Gate{Verdict::Skipped, "ring has no spec to build M2 from"};
    const std::uint64_t n = c.r().order();
    if (n > 256 || n * n * n * n > c.options().m2_sample_limit)
        return Gate{Verdict::Skipped, "M2 order exceeds " + std::to_string(c.options().m2_sample_limit)};
    return std::nullopt;
}

std::vector<json> l4_1_instances(RingContext& c, bool& exhaustive) {
    const std::uint64_t n = c.r().order();
    std::vector<json> out;
    for (auto i : c.pick(n * n * n * n, c.options().m2_limit >= n * n * n * n ? n * n * n * n : c.options().sample_size, exhaustive))
        out.push_back({{"A", m2::format(c.r(), matrix_at(c.r(), i))}});
    return out;
}

Violation l4_1(RingContext& c, const json& in) {
    const Matrix2 a = c.parse_matrix(in["A"]);
    const RingAnalysis& m = *c.derived_analysis(RingSpec::Kind::Matrix, 2);
    const RingTable& big = m.ring();
    const Index entries[] = {a.a11, a.a12, a.a21, a.a22};
    const Index ai = big.from_matrix_entries(entries);
    const bool in_big = big.order() <= c.options().m2_limit ? m.in_prime_radical(ai)
                                                            : is_strongly_nilpotent(big, ai).strongly_nilpotent;
    const bool entrywise = m2::entrywise(a, [&](Index x) { return c.in_p(x); });
    if (in_big == entrywise) return std::nullopt;
    return json{{"in_p_of_m2", in_big}, {"entries_in_p", entrywise}};
}

Violation t4_2(RingContext& c, const json& in) {
    MatrixContext& m = *c.matrices();
    const RingTable& r = c.r();
    const Matrix2 a = c.parse_matrix(in["A"]);
    const CriteriaVerdicts v = evaluate_criteria(m, a);
    bool rhs = trivial_class(m, a);
    auto good_pair = [&](Index l, Index u) { return (c.in_p(l) && c.in_one_plus_p(u)) || (c.in_one_plus_p(l) && c.in_p(u)); };
    if (!rhs && v.certificate) {
        const SimilarityWitness w = diagonalize_split(m, a, *v.certificate);
        rhs = check_witness(r, a, w) && good_pair(w.lambda, w.mu);
    }
    if (!rhs) {
        // Similar matrices share trace and determinant.
        bool possible = false;
        for (Index l = 0; l < r.order() && !possible; ++l) {
            const Index u = r.sub(m2::trace(r, a), l);
            possible = c.in_p(l) && c.in_one_plus_p(u) && r.mul(l, u) == m2::det(r, a);
        }
        if (possible) {
            if (r.order() > 16) return json{{"strongly_pclean", v.definitional}, {"similarity", "undecided"}};
            const Index n = Index(r.order());
            for (Index h = 0; h < n * n * n * n && !rhs; ++h) {
                const Matrix2 hm = matrix_at(r, h);
                const auto inv = m2::inverse(r, hm);
                if (!inv) continue;
                const Matrix2 d = m2::mul(r, m2::mul(r, hm, a), *inv);
                rhs = d.a12 == r.zero() && d.a21 == r.zero() && good_pair(d.a11, d.a22);
            }
        }
    }
    if (rhs == v.definitional) return std::nullopt;
    return json{{"strongly_pclean", v.definitional}, {"trivial_or_diagonalizable", rhs}};
}

Violation t4_4(RingContext& c, const json& in) {
    const CriteriaVerdicts v = evaluate_criteria(*c.matrices(), c.parse_matrix(in["A"]));
    if (v.definitional == v.square_test && v.definitional == v.root_test) return std::nullopt;
    return json{{"definitional", v.definitional}, {"square_test", v.square_test}, {"root_test", v.root_test}};
}

Violation c4_5(RingContext& c, const json& in) {
    const Matrix2 a = c.parse_matrix(in["A"]);
    const bool lhs = evaluate_criteria(*c.matrices(), a).definitional;
    const bool rhs = discriminant_record(*c.matrices(), a).cor45_condition();
    if (lhs == rhs) return std::nullopt;
    return json{{"strongly_pclean", lhs}, {"normalized_root_condition", rhs}};
}

std::optional<Gate> z4_only(RingContext& c) {
    if (c.name() != "Z4") return Gate{Verdict::HypothesisNotMet, "the worked instance is stated over Z4"};
    return std::nullopt;
}

Violation e4_6(RingContext& c, const json&) {
    MatrixContext& m = *c.matrices();
    const RingTable& r = c.r();
    const Matrix2 a{1, 2, 2, 2};
    const Matrix2 diff = m2::sub(r, a, m2::square(r, a));
    if (diff != Matrix2{0, 0, 0, 2}) return json{{"a_minus_a_squared", m2::format(r, diff)}};
    const CriteriaVerdicts v = evaluate_criteria(m, a);
    if (!v.certificate || !v.certificate->in_ring) return json{{"certificate", nullptr}};
    if (auto bad = validate(*m.m2(), *v.certificate->in_ring)) return json{{"certificate", *bad}};
    const RingAnalysis& big = *m.m2();
    if (big.in_prime_radical(m.to_index(a)) || big.in_prime_radical(m.to_index(m2::sub(r, m2::identity(r), a))))
        return json{{"trivial_class", true}};
    const Matrix2 e{1, 2, 2, 0}, w{0, 0, 0, 2};
    const bool listed = m2::square(r, e) == e && m2::mul(r, e, w) == m2::mul(r, w, e) && m2::add(r, e, w) == a &&
                        big.in_prime_radical(m.to_index(w));
    if (!listed) return json{{"listed_decomposition_valid", false}};
    return std::nullopt;
}

Violation t5_1(RingContext& c, const json& in) {
    const Matrix2 a = c.parse_matrix(in["A"]);
    if (!evaluate_criteria(*c.matrices(), a).definitional) return std::nullopt;
    const DiscriminantRecord d = discriminant_record(*c.matrices(), a);
    if (d.discriminant_condition()) return std::nullopt;
    return json{{"strongly_pclean", true}, {"discriminant", c.r().format(d.discriminant)}, {"square_root_in_one_plus_p", false}};
}

std::optional<Gate> two_invertible(RingContext& c) {
    if (auto g = commutative_local(c)) return g;
    if (!c.r().is_unit(c.r().scale(2, c.r().one()))) return Gate{Verdict::HypothesisNotMet, "2 is not a unit"};
    return std::nullopt;
}

Violation c5_2(RingContext& c, const json& in) {
    const Matrix2 a = c.parse_matrix(in["A"]);
    const bool lhs = evaluate_criteria(*c.matrices(), a).definitional;
    const bool rhs = discriminant_record(*c.matrices(), a).discriminant_condition();
    if (lhs == rhs) return std::nullopt;
    return json{{"strongly_pclean", lhs}, {"discriminant_condition", rhs}};
}

std::vector<json> e5_3_instances(RingContext& c, bool& exhaustive) {
    const RingTable& r = c.r();
    std::vector<Index> p;
    for (Index x = 0; x < r.order(); ++x)
        if (c.in_p(x)) p.push_back(x);
    std::vector<json> out;
    for (auto i : c.pick(std::uint64_t(p.size()) * r.order(), c.options().scan_limit, exhaustive))
        out.push_back({{"p", r.format(p[i / r.order()])}, {"q", r.format(Index(i % r.order()))}});
    return out;
}

Violation e5_3(RingContext& c, const json& in) {
    const RingTable& r = c.r();
    MatrixContext& m = *c.matrices();
    const Index p = c.parse_element(in["p"]), q = c.parse_element(in["q"]);
    const Matrix2 a{r.add(p, r.one()), p, q, p};
    if (trivial_class(m, a)) return json{{"trivial_class", true}};
    const Index target = r.add(r.one(), r.scale(4, r.mul(p, q)));
    bool square = false;
    for (Index u = 0; u < r.order() && !square; ++u) square = c.in_one_plus_p(u) && r.mul(u, u) == target;
    const bool lhs = evaluate_criteria(m, a).definitional;
    if (lhs == square) return std::nullopt;
    return json{{"strongly_pclean", lhs}, {"one_plus_4pq_square", square}};
}

bool matrix_pi_regular(MatrixContext& m, const Matrix2& a) {
    if (const RingAnalysis* big = m.m2()) return strongly_pi_regular_element(big->ring(), m.to_index(a)).regular;
    return m2::strongly_pi_regular(m.ring(), a);
}

Violation t5_4(RingContext& c, const json& in) {
    MatrixContext& m = *c.matrices();
    const RingTable& r = c.r();
    const Matrix2 a = c.parse_matrix(in["A"]);
    const bool lhs = evaluate_criteria(m, a).definitional;
    bool rhs = trivial_class(m, a);
    if (!rhs && matrix_pi_regular(m, a)) {
        if (auto w = companion_similarity(r, a))
            rhs = check_witness(r, a, *w) && c.in_p(w->lambda) && c.in_one_plus_p(w->mu);
    }
    if (lhs == rhs) return std::nullopt;
    return json{{"strongly_pclean", lhs}, {"trivial_or_companion", rhs}};
}

std::optional<Gate> residue_z2(RingContext& c) {
    if (!c.r().is_commutative()) return Gate{Verdict::HypothesisNotMet, "ring is not commutative"};
    const Ideal& j = c.analysis().jacobson_radical();
    if (c.r().order() != 2 * j.size()) return Gate{Verdict::HypothesisNotMet, "R/J(R) is not Z2"};
    if (!nilpotency_index(c.r(), j)) return Gate{Verdict::HypothesisNotMet, "J(R) is not nilpotent"};
    return commutative_local(c);
}

Violation p5_6(RingContext& c, const json& in) {
    MatrixContext& m = *c.matrices();
    const RingTable& r = c.r();
    const Matrix2 a = c.parse_matrix(in["A"]);
    const bool lhs = matrix_pi_regular(m, a);
    const bool unit = r.is_unit(m2::det(r, a));
    const bool nil = m2::is_nilpotent(r, a);
    const bool spc = evaluate_criteria(m, a).definitional;
    if (lhs == (unit || nil || spc)) return std::nullopt;
    return json{{"strongly_pi_regular", lhs}, {"unit", unit}, {"nilpotent", nil}, {"strongly_pclean", spc}};
}

// --- Products ----------------------------------------------------------------

std::optional<Gate> binary_product(RingContext& c) {
    if (c.r().kind() != RingKind::Product || c.r().components().size() != 2)
        return Gate{Verdict::HypothesisNotMet, "ring is not a product of two rings"};
    return std::nullopt;
}

Violation l2_9(RingContext& c, const json&) {
    const auto& parts = c.r().components();
    const bool a = is_strongly_pclean_ring(RingAnalysis(parts[0])).holds;
    const bool b = is_strongly_pclean_ring(RingAnalysis(parts[1])).holds;
    if (c.spc() == (a && b)) return std::nullopt;
    return json{{"product", c.spc()}, {"first", a}, {"second", b}};
}

}  // namespace

const std::vector<Theorem>& theorems() {
    static const std::vector<Theorem> list = {
        {"T2.1", "strongly P-clean iff strongly clean, R/J Boolean, J locally nilpotent", always, single, t2_1},
        {"T2.4", "strongly P-clean iff R/P Boolean iff idempotent mod P iff idempotent mod P in comm2(x)", always, single, t2_4},
        {"C2.5", "strongly P-clean iff periodic and 1+U(R) strongly nilpotent", always, single, c2_5},
        {"L2.6", "quotients of strongly P-clean rings are strongly P-clean", spc_and_small, ideal_instances, l2_6},
        {"L2.7", "R strongly P-clean iff R/I is, for nilpotent I", small_for_ideals, nilpotent_ideal_instances, l2_7},
        {"T2.8", "R/I strongly P-clean iff R/I^n is for some n iff for all n", small_for_ideals, ideal_instances, t2_8},
        {"L2.9", "R1 x R2 strongly P-clean iff both factors are", binary_product, single, l2_9},
        {"P2.10", "R/I and R/J iff R/IJ iff R/(I meet J) strongly P-clean", small_for_ideals, ideal_pair_instances, p2_10},
        {"T2.10", "uniquely P-clean iff abelian and strongly P-clean", always, single, t2_10},
        {"C2.11", "uniquely P-clean implies uniquely clean", upc_only, single, c2_11},
        {"C2.12", "uniquely P-clean implies Tc_n(R) strongly P-clean", upc_with_spec, tc_instances, c2_12},
        {"T2.13", "uniquely P-clean iff strongly P-clean and uniquely nil clean", always, single, t2_13},
        {"C2.14", "Boolean iff uniquely P-clean and primary ideals prime", skipped_primary, single, nullptr},
        {"L3.1", "annihilators of a lie in those of its idempotent part", always, element_instances, l3_1},
        {"T3.2", "a in fRf strongly P-clean in R iff in fRf", always, idempotent_instances, t3_2},
        {"C3.3", "R strongly P-clean iff every eRe is", always, single, c3_3},
        {"T3.5", "local R: strongly iff uniquely P-clean iff R/J = Z2 with J locally nilpotent iff T_n(R)", local_only, single, t3_5},
        {"C3.6", "local R: strongly P-clean iff every A in T2(R) is trivial or split-diagonalizable", local_with_t2, single, c3_6},
        {"P3.7", "local R: [[a,v],[0,b]] strongly P-clean iff a, b in P or 1+P", local_with_t2, t2_instances, p3_7},
        {"L4.1", "P(M2(R)) = M2(P(R))", m2_available, l4_1_instances, l4_1},
        {"T4.2", "A strongly P-clean iff trivial or similar to diag(P, 1+P)", commutative_local, matrix_instances, t4_2},
        {"T4.4", "A strongly P-clean iff A-A^2 in M2(P) iff roots in P and 1+P", commutative_local, matrix_instances, t4_4},
        {"C4.5", "A strongly P-clean iff trivial or trace-normalized root in P", commutative_local, matrix_instances, c4_5},
        {"E4.6", "[[1,2],[2,2]] over Z4 is strongly P-clean with A-A^2 = [[0,0],[0,2]]", z4_only, single, e4_6},
        {"T5.1", "strongly P-clean implies discriminant is a square of 1+P", commutative_local, matrix_instances, t5_1},
        {"C5.2", "with 1/2: strongly P-clean iff discriminant condition", two_invertible, matrix_instances, c5_2},
        {"E5.3", "[[p+1,p],[q,p]] strongly P-clean iff 1+4pq = u^2, u in 1+P", commutative_local, e5_3_instances, e5_3},
        {"T5.4", "A strongly P-clean iff trivial or strongly pi-regular and companion-similar", commutative_local, matrix_instances, t5_4},
        {"P5.6", "R/J = Z2, J nilpotent: strongly pi-regular iff unit, nilpotent or strongly P-clean", residue_z2, matrix_instances, p5_6},
    };
    return list;
}

const Theorem* find_theorem(std::string_view id) {
    for (const auto& t : theorems())
        if (t.id == id) return &t;
    return nullptr;
}

}  // namespace pclean::verifier
