#pragma once

#include <cstdint>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pclean/ring.hpp"

namespace pclean {

enum class Verdict { Holds, Counterexample, HypothesisNotMet, Skipped };
std::string_view to_string(Verdict v);

struct TheoremCheck {
    std::string id;
    /// Ring spec string (or the name of an explicit ring).
    std::string ring;
    Verdict verdict = Verdict::Holds;
    /// {"instance": ..., "violation": ...} for COUNTEREXAMPLE, else null.
    nlohmann::json counterexample;
    /// Why a check was skipped or its hypothesis failed; scope notes otherwise.
    std::string note;
    std::size_t instances = 0;
    bool exhaustive = true;
    std::int64_t millis = 0;
};

struct Catalog {
    std::string description;
    std::vector<RingPtr> rings;
};

/// Z2, Z3, Z4, Z6, Z8, Z9, Z2[i], Z4[i], Z3[w], Z9[w], T2(Z2), T2(Z4),
/// Tc2(Z4), M2(Z2), M2(Z4), Z4xZ2.
Catalog default_catalog(const BuildOptions& options = {});
/// One ring spec per line; '#' starts a comment. Throws ParseError with the
/// line number in the message.
Catalog load_catalog(std::istream& in, std::string description, const BuildOptions& options = {});
Catalog load_catalog_file(const std::string& path, const BuildOptions& options = {});

struct VerifierOptions {
    /// Ideal lattices are enumerated (sums of two principal ideals) up to this order.
    std::size_t ideal_limit = 256;
    /// Element-level scans are exhaustive up to this order, sampled above it.
    std::size_t scan_limit = 4096;
    std::size_t sample_size = 512;
    /// M2(R) is materialized when |R|^4 is at most this.
    std::uint64_t m2_limit = 8192;
    /// Sampled P(M2(R)) membership up to this M2 order.
    std::uint64_t m2_sample_limit = 65536;
    /// Order cap for derived rings (T_n, Tc_n, products).
    std::uint64_t derived_limit = std::uint64_t{1} << 20;
    /// Catalog pairs for the product check must have product order at most this.
    std::uint64_t product_limit = 512;
    std::uint64_t seed = 20240611;
};

/// Canonical ids, in report order.
const std::vector<std::string>& theorem_ids();

struct TheoremReport {
    std::string catalog;
    std::vector<TheoremCheck> checks;
    std::size_t count(Verdict v) const;
    /// 1 when any check is a counterexample, else 0.
    int exit_code() const;
};

class Verifier {
public:
    explicit Verifier(VerifierOptions options = {});
    ~Verifier();
    Verifier(const Verifier&) = delete;
    Verifier& operator=(const Verifier&) = delete;

    const VerifierOptions& options() const noexcept;

    /// One check per ring (per ring pair for L2.9). Throws Error(UnknownTheoremId).
    std::vector<TheoremCheck> verify(std::string_view id, const std::vector<RingPtr>& rings);
    /// Every id over the catalog, ordered by id then ring name.
    TheoremReport run_suite(const Catalog& catalog, const std::vector<std::string>& ids = {});

    /// Re-runs the stored instance of a COUNTEREXAMPLE. Returns the violation
    /// when it reproduces, nullopt otherwise. For L2.9 pass the product ring.
    std::optional<nlohmann::json> replay(const TheoremCheck& check, const RingPtr& ring);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

nlohmann::json to_json(const TheoremCheck& c);
nlohmann::json to_json(const TheoremReport& r);

}  // namespace pclean
