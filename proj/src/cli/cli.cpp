#include "pclean/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pclean/decompositions.hpp"
#include "pclean/matrix.hpp"
#include "pclean/radicals.hpp"
#include "pclean/verifier.hpp"

namespace pclean {

namespace {

using nlohmann::json;

// Element lists are printed in full only for rings up to this order.
constexpr std::size_t kListLimit = 256;

const char* kFooter = R"(Ring specs: Z4, Z8[i], Z9[w], M2(Z4), T2(Z2), Tc3(Z4), Z4xZ2, Z4/(2).
Case-insensitive; whitespace ignored.

Element syntax:
  Zn            integer, e.g. 3 or -1
  Zn[i]         a+bi, e.g. 1+i, 2i, 3
  Zn[w]         a+bw or a+bα (a primitive cube root of unity), e.g. 1-w, 2α
  products      [r1,r2], e.g. [1,0]
  matrix rings  row-major [a,b;c,d] with entries in the base syntax
Matrix literals for `matrix analyze` use the same [a,b;c,d] form.

Exit status: 0 success, 1 counterexample, 2 usage or input error.)";

json element_list(const RingTable& r, const std::vector<Index>& xs) {
    json out = json::array();
    for (Index x : xs) out.push_back(r.format(x));
    return out;
}

json set_json(const RingTable& r, const std::vector<Index>& xs) {
    json j = {{"count", xs.size()}};
    if (r.order() <= kListLimit) j["elements"] = element_list(r, xs);
    return j;
}

json ideal_json(const RingTable& r, const Ideal& ideal) {
    json j = set_json(r, ideal.members.sorted());
    j["generators"] = element_list(r, ideal.generators);
    auto n = nilpotency_index(r, ideal);
    j["nilpotency_index"] = n ? json(*n) : json(nullptr);
    return j;
}

json verdict_json(const RingTable& r, const RingVerdict& v) {
    return {{"holds", v.holds}, {"counterexample", v.counterexample ? json(r.format(*v.counterexample)) : json(nullptr)}};
}

json certificate_json(const RingTable& r, const std::optional<CleanCertificate>& c) {
    if (!c) return {{"holds", false}};
    return {{"holds", true}, {"idempotent", r.format(c->idempotent)}, {"remainder", r.format(c->remainder)}};
}

json ring_report(const RingPtr& ring) {
    const RingTable& r = *ring;
    RingAnalysis a(ring);
    json j;
    j["ring"] = r.name();
    j["order"] = r.order();
    j["characteristic"] = r.characteristic();
    j["commutative"] = r.is_commutative();
    j["units"] = set_json(r, r.units());
    j["idempotents"] = set_json(r, r.idempotents());
    j["prime_radical"] = ideal_json(r, a.prime_radical());
    j["jacobson_radical"] = ideal_json(r, a.jacobson_radical());
    j["boolean"] = is_boolean(r);
    j["local"] = is_local(r);
    j["abelian"] = is_abelian(r);
    j["verdicts"] = {
        {"strongly_pclean", verdict_json(r, is_strongly_pclean_ring(a))},
        {"uniquely_pclean", verdict_json(r, is_uniquely_pclean_ring(a))},
        {"strongly_clean", verdict_json(r, is_strongly_clean_ring(r))},
        {"uniquely_clean", verdict_json(r, is_uniquely_clean_ring(r))},
        {"uniquely_nilclean", verdict_json(r, is_uniquely_nilclean_ring(r))},
        {"strongly_jclean", verdict_json(r, is_strongly_jclean_ring(a))},
    };
    return j;
}

json element_report(const RingPtr& ring, const std::string& text) {
    const RingTable& r = *ring;
    RingAnalysis a(ring);
    const Index x = r.parse(text);
    json j;
    j["ring"] = r.name();
    j["element"] = r.format(x);
    j["unit"] = r.is_unit(x);
    j["idempotent"] = r.is_idempotent(x);
    j["nilpotent"] = r.nilpotency_exponent(x).has_value();
    j["in_prime_radical"] = a.in_prime_radical(x);
    j["in_jacobson_radical"] = a.in_jacobson_radical(x);
    const PCleanResult pc = strongly_pclean_element(a, x);
    j["strongly_pclean"] = certificate_json(r, pc.certificate);
    j["strongly_pclean"]["commuting_idempotents"] = pc.count;
    j["strongly_pclean"]["all_idempotents"] = pc.any_count;
    j["strongly_clean"] = certificate_json(r, strongly_clean_element(r, x));
    j["strongly_nilclean"] = certificate_json(r, strongly_nilclean_element(r, x));
    j["strongly_jclean"] = certificate_json(r, strongly_jclean_element(a, x));
    j["uniquely_clean"] = uniquely_clean_element(r, x);
    j["uniquely_nilclean"] = uniquely_nilclean_element(r, x);
    const PiRegularity pi = strongly_pi_regular_element(r, x);
    j["strongly_pi_regular"] = {{"holds", pi.regular}};
    if (pi.regular) {
        j["strongly_pi_regular"]["n"] = pi.n;
        j["strongly_pi_regular"]["b"] = r.format(pi.b);
    }
    const Index defect = r.sub(x, r.mul(x, x));
    if (r.nilpotency_exponent(defect)) {
        const LiftResult lift = idempotent_lift(r, x);
        j["idempotent_lift"] = {{"idempotent", r.format(lift.idempotent)}, {"n", lift.n}};
    } else {
        j["idempotent_lift"] = nullptr;
    }
    return j;
}

json matrix_report(const RingPtr& ring, const std::string& text) {
    const RingTable& r = *ring;
    MatrixContext ctx(ring);
    ctx.require_commutative_local();
    const Matrix2 m = m2::parse(r, text);
    const MatrixAnalysis an = classify_pclean_2x2(ctx, m);
    json j;
    j["ring"] = r.name();
    j["matrix"] = m2::format(r, m);
    j["classification"] = std::string(to_string(an.cls));
    j["criteria"] = {{"definitional", an.criteria.definitional},
                     {"square_test", an.criteria.square_test},
                     {"root_test", an.criteria.root_test}};
    json roots = json::array();
    for (const auto& q : an.criteria.roots)
        roots.push_back({{"root", r.format(q.root)}, {"class", std::string(to_string(q.cls))}});
    j["roots"] = roots;
    if (const auto& c = an.criteria.certificate)
        j["certificate"] = {{"idempotent", m2::format(r, c->idempotent)}, {"remainder", m2::format(r, c->remainder)}};
    else
        j["certificate"] = nullptr;
    if (const auto& w = an.witness) {
        j["witness"] = {{"form", w->form == SimilarityWitness::Form::Diagonal ? "DIAGONAL" : "COMPANION"},
                        {"h", m2::format(r, w->h)},
                        {"h_inv", m2::format(r, w->h_inv)},
                        {"target", m2::format(r, w->target(r))},
                        {"valid", check_witness(r, m, *w)}};
    } else {
        j["witness"] = nullptr;
    }
    const DiscriminantRecord d = discriminant_criteria(ctx, m);
    j["discriminant"] = {{"trace", r.format(d.trace)},
                         {"det", r.format(d.det)},
                         {"discriminant", r.format(d.discriminant)},
                         {"trivial", d.trivial},
                         {"trace_in_one_plus_p", d.trace_in_one_plus_p},
                         {"square_witnesses", element_list(r, d.square_witnesses)},
                         {"trace_roots", element_list(r, d.cor45_roots)},
                         {"two_is_unit", d.two_is_unit},
                         {"discriminant_condition", d.discriminant_condition()},
                         {"trace_root_condition", d.cor45_condition()}};
    try {
        j["pi_regular"] = std::string(to_string(pi_regular_trichotomy(ctx, m)));
    } catch (const Error& e) {
        if (e.code() != ErrorCode::HypothesisViolated) throw;
        j["pi_regular"] = nullptr;
    }
    return j;
}

std::string scalar_text(const json& v) {
    if (v.is_null()) return "-";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

// Flattens a report into "dotted.key  value" rows.
void flatten(const json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
    if (v.is_object()) {
        for (const auto& [k, sub] : v.items()) flatten(sub, prefix.empty() ? k : prefix + "." + k, rows);
    } else if (v.is_array() && std::any_of(v.begin(), v.end(), [](const json& e) { return e.is_structured(); })) {
        for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "[" + std::to_string(i) + "]", rows);
    } else if (v.is_array()) {
        std::string s = "{";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
        rows.emplace_back(prefix, s + "}");
    } else {
        rows.emplace_back(prefix, scalar_text(v));
    }
}

void print_rows(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (width.size() <= i) width.push_back(0);
            width[i] = std::max(width[i], row[i].size());
        }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
        }
        line.erase(line.find_last_not_of(' ') + 1);
        out << line << '\n';
    }
}

void print_report(std::ostream& out, const json& report, bool as_json) {
    if (as_json) {
        out << report.dump(2) << '\n';
        return;
    }
    std::vector<std::pair<std::string, std::string>> flat;
    flatten(report, "", flat);
    std::vector<std::vector<std::string>> rows;
    for (auto& [k, v] : flat) rows.push_back({k, v});
    print_rows(out, rows);
}

void print_verify(std::ostream& out, const TheoremReport& report, bool as_json) {
    const json j = to_json(report);
    if (as_json) {
        out << j.dump(2) << '\n';
        return;
    }
    std::vector<std::vector<std::string>> rows{{"id", "ring", "verdict", "ms", "note"}};
    for (const auto& c : report.checks) {
        std::string note = c.note;
        if (c.verdict == Verdict::Counterexample) note = c.counterexample.dump();
        rows.push_back({c.id, c.ring, std::string(to_string(c.verdict)), std::to_string(c.millis), note});
    }
    print_rows(out, rows);
    out << "catalog " << report.catalog;
    for (const auto& [k, v] : j["summary"].items()) out << "  " << k << '=' << v.dump();
    out << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Strongly P-clean decompositions over finite rings", "pclean"};
    app.footer(kFooter);
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false;
    std::uint64_t limit = kDefaultOrderLimit;
    app.add_flag("--json", as_json, "Emit one JSON document");
    app.add_option("--limit", limit, "Largest ring order to materialize")->envname("PCLEAN_LIMIT")->check(CLI::PositiveNumber);

    std::string spec, element, matrix, theorem, catalog_file;

    auto* ring_cmd = app.add_subcommand("ring", "Ring-level analysis")->require_subcommand(1);
    auto* ring_analyze = ring_cmd->add_subcommand("analyze", "Order, units, idempotents, radicals and verdicts");
    ring_analyze->add_option("spec", spec, "Ring spec")->required();

    auto* element_cmd = app.add_subcommand("element", "Element-level analysis")->require_subcommand(1);
    auto* element_analyze = element_cmd->add_subcommand("analyze", "Decompositions of one element");
    element_analyze->add_option("spec", spec, "Ring spec")->required();
    element_analyze->add_option("element", element, "Element literal")->required();

    auto* matrix_cmd = app.add_subcommand("matrix", "2x2 matrices over a commutative local ring")->require_subcommand(1);
    auto* matrix_analyze = matrix_cmd->add_subcommand("analyze", "Criteria, certificate, similarity and discriminant");
    matrix_analyze->add_option("spec", spec, "Base ring spec")->required();
    matrix_analyze->add_option("matrix", matrix, "Matrix literal [a,b;c,d]")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Run the theorem suite over a catalog");
    verify_cmd->add_option("--theorem", theorem, "Only this theorem id");
    verify_cmd->add_option("--catalog", catalog_file, "Catalog file: one ring spec per line, # comments");

    auto* catalog_cmd = app.add_subcommand("catalog", "Catalog inspection")->require_subcommand(1);
    auto* catalog_list = catalog_cmd->add_subcommand("list", "List catalog rings");
    catalog_list->add_option("--catalog", catalog_file, "Catalog file instead of the default");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    BuildOptions build;
    build.order_limit = limit;
    auto catalog = [&] { return catalog_file.empty() ? default_catalog(build) : load_catalog_file(catalog_file, build); };

    try {
        if (ring_analyze->parsed()) {
            print_report(out, ring_report(build_ring(spec, build)), as_json);
        } else if (element_analyze->parsed()) {
            print_report(out, element_report(build_ring(spec, build), element), as_json);
        } else if (matrix_analyze->parsed()) {
            print_report(out, matrix_report(build_ring(spec, build), matrix), as_json);
        } else if (catalog_list->parsed()) {
            const Catalog c = catalog();
            json rings = json::array();
            for (const auto& r : c.rings) rings.push_back({{"ring", r->name()}, {"order", r->order()}});
            if (as_json) {
                out << json{{"catalog", c.description}, {"rings", rings}}.dump(2) << '\n';
            } else {
                std::vector<std::vector<std::string>> rows{{"ring", "order"}};
                for (const auto& r : c.rings) rows.push_back({r->name(), std::to_string(r->order())});
                print_rows(out, rows);
            }
        } else if (verify_cmd->parsed()) {
            std::vector<std::string> ids;
            if (!theorem.empty()) {
                const auto& known = theorem_ids();
                if (std::find(known.begin(), known.end(), theorem) == known.end())
                    throw Error(ErrorCode::UnknownTheoremId, theorem);
                ids.push_back(theorem);
            }
            Verifier verifier;
            const TheoremReport report = verifier.run_suite(catalog(), ids);
            print_verify(out, report, as_json);
            return report.exit_code();
        }
    } catch (const Error& e) {
        err << "pclean: " << e.what() << '\n';
        return e.code() == ErrorCode::CriterionMismatch ? 1 : 2;
    }
    return 0;
}

}  // namespace pclean
