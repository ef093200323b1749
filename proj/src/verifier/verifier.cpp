#include "pclean/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <sstream>

#include "context.hpp"

namespace pclean {

using verifier::RingContext;
using verifier::Theorem;
using nlohmann::json;

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::Holds: return "HOLDS";
    case Verdict::Counterexample: return "COUNTEREXAMPLE";
    case Verdict::HypothesisNotMet: return "HYPOTHESIS_NOT_MET";
    case Verdict::Skipped: return "SKIPPED";
    }
    return "?";
}

Catalog default_catalog(const BuildOptions& options) {
    Catalog c;
    c.description = "default";
    for (const char* spec : {"Z2", "Z3", "Z4", "Z6", "Z8", "Z9", "Z2[i]", "Z4[i]", "Z3[w]", "Z9[w]", "T2(Z2)", "T2(Z4)",
                             "Tc2(Z4)", "M2(Z2)", "M2(Z4)", "Z4xZ2"})
        c.rings.push_back(build_ring(spec, options));
    return c;
}

Catalog load_catalog(std::istream& in, std::string description, const BuildOptions& options) {
    Catalog c;
    c.description = std::move(description);
    std::string line;
    for (std::size_t n = 1; std::getline(in, line); ++n) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            c.rings.push_back(build_ring(line, options));
        } catch (const ParseError& e) {
            throw ParseError(e.offset(), "line " + std::to_string(n) + ": " + e.detail());
        }
    }
    return c;
}

Catalog load_catalog_file(const std::string& path, const BuildOptions& options) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::PreconditionFailed, "cannot read catalog " + path);
    return load_catalog(in, path, options);
}

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& t : verifier::theorems()) out.push_back(t.id);
        return out;
    }();
    return ids;
}

std::size_t TheoremReport::count(Verdict v) const {
    return std::size_t(std::count_if(checks.begin(), checks.end(), [&](const TheoremCheck& c) { return c.verdict == v; }));
}

int TheoremReport::exit_code() const { return count(Verdict::Counterexample) ? 1 : 0; }

struct Verifier::Impl {
    VerifierOptions options;
    std::map<const RingTable*, std::unique_ptr<RingContext>> contexts;
    std::vector<RingPtr> keep_alive;

    RingContext& context(const RingPtr& ring) {
        auto& slot = contexts[ring.get()];
        if (!slot) {
            slot = std::make_unique<RingContext>(ring, options);
            keep_alive.push_back(ring);
        }
        return *slot;
    }

    TheoremCheck run(const Theorem& t, const RingPtr& ring) {
        TheoremCheck check;
        check.id = t.id;
        check.ring = ring->name();
        const auto start = std::chrono::steady_clock::now();
        RingContext& ctx = context(ring);
        json instance = {{"stage", "setup"}};
        try {
            if (auto gate = t.applies(ctx)) {
                check.verdict = gate->verdict;
                check.note = gate->reason;
            } else {
                bool exhaustive = true;
                const auto instances = t.instances(ctx, exhaustive);
                check.exhaustive = exhaustive;
                for (const json& in : instances) {
                    instance = in;
                    ++check.instances;
                    if (auto v = t.check(ctx, in)) {
                        check.verdict = Verdict::Counterexample;
                        check.counterexample = {{"instance", in}, {"violation", *v}};
                        break;
                    }
                }
                if (!exhaustive) check.note = "deterministic sample";
            }
        } catch (const Error& e) {
            check.verdict = Verdict::Counterexample;
            check.counterexample = {{"instance", instance}, {"violation", {{"error", e.what()}}}};
        }
        check.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        return check;
    }

    std::vector<RingPtr> products(const std::vector<RingPtr>& rings) {
        std::vector<RingPtr> out;
        for (std::size_t i = 0; i < rings.size(); ++i)
            for (std::size_t j = i; j < rings.size(); ++j) {
                const auto& a = rings[i]->spec();
                const auto& b = rings[j]->spec();
                if (!a || !b) continue;
                if (std::uint64_t(rings[i]->order()) * rings[j]->order() > options.product_limit) continue;
                BuildOptions build;
                build.order_limit = options.product_limit;
                out.push_back(build_ring(RingSpec::product({*a, *b}), build));
            }
        return out;
    }
};

Verifier::Verifier(VerifierOptions options) : impl_(std::make_unique<Impl>()) { impl_->options = options; }
Verifier::~Verifier() = default;

const VerifierOptions& Verifier::options() const noexcept { return impl_->options; }

std::vector<TheoremCheck> Verifier::verify(std::string_view id, const std::vector<RingPtr>& rings) {
    const Theorem* t = verifier::find_theorem(id);
    if (!t) throw Error(ErrorCode::UnknownTheoremId, std::string(id));
    std::vector<TheoremCheck> out;
    if (t->id == "L2.9") {
        for (const RingPtr& p : impl_->products(rings)) out.push_back(impl_->run(*t, p));
        return out;
    }
    if (!t->check) {
        for (const RingPtr& r : rings) {
            TheoremCheck c;
            c.id = t->id;
            c.ring = r->name();
            c.verdict = Verdict::Skipped;
            c.note = t->applies(impl_->context(r))->reason;
            out.push_back(c);
        }
        return out;
    }
    for (const RingPtr& r : rings) out.push_back(impl_->run(*t, r));
    return out;
}

TheoremReport Verifier::run_suite(const Catalog& catalog, const std::vector<std::string>& ids) {
    TheoremReport report;
    report.catalog = catalog.description;
    for (const std::string& id : ids.empty() ? theorem_ids() : ids) {
        auto checks = verify(id, catalog.rings);
        std::stable_sort(checks.begin(), checks.end(),
                         [](const TheoremCheck& a, const TheoremCheck& b) { return a.ring < b.ring; });
        report.checks.insert(report.checks.end(), checks.begin(), checks.end());
    }
    return report;
}

std::optional<nlohmann::json> Verifier::replay(const TheoremCheck& check, const RingPtr& ring) {
    if (check.verdict != Verdict::Counterexample) return std::nullopt;
    const Theorem* t = verifier::find_theorem(check.id);
    if (!t) throw Error(ErrorCode::UnknownTheoremId, check.id);
    RingContext ctx(ring, impl_->options);
    const json& instance = check.counterexample.at("instance");
    try {
        if (instance.contains("stage")) {
            if (t->applies(ctx)) return std::nullopt;
            bool exhaustive = true;
            t->instances(ctx, exhaustive);
            return std::nullopt;
        }
        if (t->applies(ctx)) return std::nullopt;
        return t->check(ctx, instance);
    } catch (const Error& e) {
        return json{{"error", e.what()}};
    }
}

nlohmann::json to_json(const TheoremCheck& c) {
    return {{"id", c.id},
            {"ring", c.ring},
            {"verdict", std::string(to_string(c.verdict))},
            {"counterexample", c.counterexample},
            {"note", c.note},
            {"instances", c.instances},
            {"exhaustive", c.exhaustive},
            {"millis", c.millis}};
}

nlohmann::json to_json(const TheoremReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    nlohmann::json summary;
    for (Verdict v : {Verdict::Holds, Verdict::Counterexample, Verdict::HypothesisNotMet, Verdict::Skipped})
        summary[std::string(to_string(v))] = r.count(v);
    return {{"catalog", r.catalog}, {"checks", checks}, {"summary", summary}};
}

}  // namespace pclean
