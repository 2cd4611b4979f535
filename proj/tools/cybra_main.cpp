// Command-line interface: diagram combinatorics, algebra checks and the
// centralizer computations, with JSON output and an on-disk result cache.
//
// Exit codes: 0 = pass/computed, 1 = a check failed, 2 = usage or input error.
#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "cybra/acceptance.hpp"
#include "cybra/json_io.hpp"
#include "cybra/schur_weyl.hpp"

namespace {

using cybra::json;

constexpr const char* kArtifactVersion = "1";

struct Output {
    bool as_json = false;
    std::string command;
    std::string status = "computed"; // pass | fail | computed
    json payload;
    long long millis = 0;

    int emit() const {
        if (as_json) {
            json doc{{"command", command}, {"status", status}, {"payload", payload}};
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << command << ": " << status << " [" << millis << " ms]\n";
            std::cout << payload.dump(2) << "\n";
        }
        if (status == "fail") return 1;
        return 0;
    }
};

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

/// JSON file cache keyed by (family, parameters, k, artifact version); a
/// checksum mismatch or any parse problem counts as a miss.
class ResultCache {
public:
    ResultCache(std::string dir) : dir_(std::move(dir)) {}

    std::optional<json> load(const std::string& key) const {
        if (dir_.empty()) return std::nullopt;
        std::ifstream in(path(key));
        if (!in) return std::nullopt;
        try {
            json doc = json::parse(in);
            std::string payload = doc.at("payload").dump();
            if (doc.at("checksum").get<std::string>() != std::to_string(fnv1a(payload)))
                return std::nullopt;
            if (doc.at("version").get<std::string>() != kArtifactVersion) return std::nullopt;
            return doc.at("payload");
        } catch (...) {
            return std::nullopt;
        }
    }

    void store(const std::string& key, const json& payload) const {
        if (dir_.empty()) return;
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        if (ec) return;
        json doc{{"version", kArtifactVersion},
                 {"payload", payload},
                 {"checksum", std::to_string(fnv1a(payload.dump()))}};
        std::ofstream out(path(key));
        out << doc.dump(2) << "\n";
    }

private:
    std::string path(const std::string& key) const { return dir_ + "/" + key + ".json"; }
    std::string dir_;
};

struct GroupFlags {
    std::string group = "sp";
    int n = 2, p = 3, q = 2;

    cybra::GroupSpec spec() const {
        if (group == "sp") return cybra::GroupSpec::sp(n);
        if (group == "so") return cybra::GroupSpec::so(p, q);
        throw CLI::ValidationError("--group must be sp or so");
    }
    std::string key_prefix(int k) const {
        cybra::GroupSpec s = spec();
        if (s.family == cybra::GroupFamily::Sp)
            return "sp_n" + std::to_string(s.n) + "_k" + std::to_string(k);
        return "so_p" + std::to_string(s.p) + "_q" + std::to_string(s.q) + "_k" + std::to_string(k);
    }
};

void add_group_flags(CLI::App* cmd, GroupFlags& g) {
    cmd->add_option("--group", g.group, "group family: sp or so")->check(CLI::IsMember({"sp", "so"}));
    cmd->add_option("--n", g.n, "rank n for sp");
    cmd->add_option("--p", g.p, "p for so(p,q)");
    cmd->add_option("--q", g.q, "q for so(p,q)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact diagram-algebra centralizer computations"};
    app.require_subcommand(1);

    bool as_json = false;
    std::string cache_dir;
    if (const char* env = std::getenv("CYBRA_CACHE_DIR")) cache_dir = env;
    app.add_flag("--json", as_json, "emit a single JSON document on stdout");
    app.add_option("--cache-dir", cache_dir, "directory for cached results (env CYBRA_CACHE_DIR)");

    // ---- diagrams ----
    auto* diagrams = app.add_subcommand("diagrams", "labeled diagram combinatorics");
    diagrams->require_subcommand(1);
    int k = 2, m = 2;

    auto* d_count = diagrams->add_subcommand("count", "closed-form diagram count");
    d_count->add_option("--k", k)->required();
    d_count->add_option("--m", m)->required();

    auto* d_enum = diagrams->add_subcommand("enumerate", "list all canonical diagrams");
    d_enum->add_option("--k", k)->required();
    d_enum->add_option("--m", m)->required();

    std::string diag_a, diag_b;
    auto* d_compose = diagrams->add_subcommand("compose", "concatenate two diagrams");
    d_compose->add_option("a", diag_a, "first diagram (text format)")->required();
    d_compose->add_option("b", diag_b, "second diagram (text format)")->required();
    d_compose->add_option("--k", k)->required();
    d_compose->add_option("--m", m)->required();

    // ---- algebra ----
    auto* algebra = app.add_subcommand("algebra", "algebra-level checks");
    algebra->require_subcommand(1);

    auto* a_verify = algebra->add_subcommand("verify", "verify the defining relations symbolically");
    a_verify->add_option("--k", k)->required();
    a_verify->add_option("--m", m)->required();

    auto* a_mul = algebra->add_subcommand("mul", "multiply two basis diagrams as algebra elements");
    a_mul->add_option("a", diag_a)->required();
    a_mul->add_option("b", diag_b)->required();
    a_mul->add_option("--k", k)->required();
    a_mul->add_option("--m", m)->required();

    int ws = 1, wt = 1;
    auto* a_walled = algebra->add_subcommand("walled", "walled diagram basis of the given shape");
    a_walled->add_option("--s", ws)->required();
    a_walled->add_option("--t", wt)->required();

    // ---- rep ----
    auto* rep = app.add_subcommand("rep", "group realizations and centralizer checks");
    rep->require_subcommand(1);
    GroupFlags gf;

    auto* r_context = rep->add_subcommand("context", "realization data for a group");
    add_group_flags(r_context, gf);

    auto* r_deltas = rep->add_subcommand("deltas", "measured loop parameters");
    add_group_flags(r_deltas, gf);

    auto* r_phirank = rep->add_subcommand("phi-rank", "rank of the diagram image span");
    add_group_flags(r_phirank, gf);
    r_phirank->add_option("--k", k)->required();

    auto* r_commutant = rep->add_subcommand("commutant", "centralizer vs diagram image span");
    add_group_flags(r_commutant, gf);
    r_commutant->add_option("--k", k)->required();

    auto* r_decompose = rep->add_subcommand("decompose", "sector decomposition (sp only)");
    r_decompose->add_option("--n", gf.n)->required();
    r_decompose->add_option("--k", k)->required();

    auto* r_ktypes = rep->add_subcommand("ktypes", "number of centralizer blocks");
    add_group_flags(r_ktypes, gf);
    r_ktypes->add_option("--k", k)->required();

    auto* r_identity = rep->add_subcommand("identity", "dimension identity for uneven diagrams");
    r_identity->add_option("--k", k)->required();

    // ---- accept ----
    auto* accept = app.add_subcommand("accept", "run the acceptance criteria");
    std::string profile = "small";
    accept->add_option("profile,--profile", profile, "small or full")
        ->check(CLI::IsMember({"small", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0; // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    Output out;
    out.as_json = as_json;
    ResultCache cache(cache_dir);
    auto started = std::chrono::steady_clock::now();

    try {
        if (d_count->parsed()) {
            out.command = "diagrams count";
            out.payload = json{{"count", cybra::count_diagrams(k, m)}};
        } else if (d_enum->parsed()) {
            out.command = "diagrams enumerate";
            json list = json::array();
            for (const auto& d : cybra::enumerate_diagrams(k, m)) list.push_back(cybra::diagram_to_text(d));
            out.payload = json{{"count", list.size()}, {"diagrams", list}};
        } else if (d_compose->parsed()) {
            out.command = "diagrams compose";
            cybra::CompositionResult r =
                cybra::compose(cybra::diagram_from_text(diag_a, k, m), cybra::diagram_from_text(diag_b, k, m));
            out.payload = json{{"loops", r.loops}, {"diagram", cybra::diagram_to_text(r.diagram)}};
        } else if (a_verify->parsed()) {
            out.command = "algebra verify";
            auto reports = cybra::verify_presentation(k, m);
            out.payload = json{{"k", k}, {"m", m}, {"relations", cybra::relation_reports_to_json(reports)}};
            bool all = true;
            for (const auto& r : reports) all = all && r.passed();
            out.status = all ? "pass" : "fail";
            if (!all)
                for (const auto& r : reports)
                    if (!r.passed()) {
                        out.payload["first_failure"] = r.relation_id;
                        break;
                    }
        } else if (a_mul->parsed()) {
            out.command = "algebra mul";
            cybra::AlgebraElement prod =
                cybra::AlgebraElement::from_diagram(cybra::diagram_from_text(diag_a, k, m)) *
                cybra::AlgebraElement::from_diagram(cybra::diagram_from_text(diag_b, k, m));
            out.payload = cybra::element_to_json(prod);
        } else if (a_walled->parsed()) {
            out.command = "algebra walled";
            auto basis = cybra::walled_basis(ws, wt);
            bool closed = cybra::walled_closed_under_mul(ws, wt);
            json list = json::array();
            for (const auto& b : basis) list.push_back(cybra::diagram_to_text(cybra::to_labeled(b, 1)));
            out.payload = json{{"count", basis.size()},
                               {"expected", cybra::factorial(ws + wt)},
                               {"closed_under_mul", closed},
                               {"diagrams", list}};
            out.status = (static_cast<long long>(basis.size()) == cybra::factorial(ws + wt) && closed)
                             ? "pass"
                             : "fail";
            if (out.status == "fail") out.payload["first_failure"] = "walled basis count or closure";
        } else if (r_context->parsed()) {
            out.command = "rep context";
            out.payload = cybra::context_to_json(cybra::group_context(gf.spec()));
        } else if (r_deltas->parsed()) {
            out.command = "rep deltas";
            std::string key = gf.key_prefix(2) + "_deltas";
            if (auto hit = cache.load(key)) {
                out.payload = *hit;
            } else {
                out.payload = cybra::deltas_to_json(cybra::measure_deltas(cybra::group_context(gf.spec())));
                cache.store(key, out.payload);
            }
        } else if (r_phirank->parsed()) {
            out.command = "rep phi-rank";
            std::string key = gf.key_prefix(k) + "_phirank";
            if (auto hit = cache.load(key)) {
                out.payload = *hit;
            } else {
                out.payload = cybra::phi_rank_to_json(cybra::phi_faithful(cybra::get_realization(gf.spec(), k)));
                cache.store(key, out.payload);
            }
            out.status = out.payload.at("injective").get<bool>() ? "pass" : "fail";
            if (out.status == "fail") out.payload["first_failure"] = "image span rank below diagram count";
        } else if (r_commutant->parsed()) {
            out.command = "rep commutant";
            std::string key = gf.key_prefix(k) + "_commutant";
            if (auto hit = cache.load(key)) {
                out.payload = *hit;
            } else {
                out.payload =
                    cybra::commutant_to_json(cybra::commutant_check(cybra::get_realization(gf.spec(), k)));
                cache.store(key, out.payload);
            }
            out.status = out.payload.at("equal").get<bool>() ? "pass" : "fail";
            if (out.status == "fail") out.payload["first_failure"] = "centralizer differs from image span";
        } else if (r_decompose->parsed()) {
            out.command = "rep decompose";
            std::string key = "sp_n" + std::to_string(gf.n) + "_k" + std::to_string(k) + "_decompose";
            if (auto hit = cache.load(key)) {
                out.payload = *hit;
            } else {
                out.payload = cybra::sectors_to_json(
                    cybra::decompose_sp(cybra::get_realization(cybra::GroupSpec::sp(gf.n), k)));
                cache.store(key, out.payload);
            }
            bool ok = out.payload.at("off_block_zero").get<bool>();
            for (const auto& s : out.payload.at("sectors"))
                ok = ok && s.at("block_dim").get<long long>() == s.at("expected").get<long long>();
            out.status = ok ? "pass" : "fail";
            if (out.status == "fail") out.payload["first_failure"] = "sector structure mismatch";
        } else if (r_ktypes->parsed()) {
            out.command = "rep ktypes";
            std::string key = gf.key_prefix(k) + "_ktypes";
            if (auto hit = cache.load(key)) {
                out.payload = *hit;
            } else {
                long long blocks = cybra::count_ktypes(cybra::get_realization(gf.spec(), k));
                out.payload = json{{"blocks", blocks},
                                   {"bipartitions", cybra::count_bipartitions(k)},
                                   {"equal", blocks == cybra::count_bipartitions(k)}};
                cache.store(key, out.payload);
            }
            out.status = out.payload.at("equal").get<bool>() ? "pass" : "fail";
            if (out.status == "fail") out.payload["first_failure"] = "block count differs from bipartitions";
        } else if (r_identity->parsed()) {
            out.command = "rep identity";
            cybra::DimensionIdentity r = cybra::so_dimension_identity(k);
            out.payload = cybra::dimension_identity_to_json(r);
            out.status = r.equal ? "pass" : "fail";
            if (out.status == "fail") out.payload["first_failure"] = "dimension identity";
        } else if (accept->parsed()) {
            out.command = "accept " + profile;
            auto rows = cybra::run_acceptance(profile == "full" ? cybra::SizeProfile::Full
                                                                : cybra::SizeProfile::Small);
            json list = json::array();
            bool all = true;
            for (const auto& r : rows) {
                list.push_back(json{{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
                if (!as_json)
                    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title
                              << " (" << r.detail << ") [" << r.millis << " ms]\n";
                all = all && r.pass;
            }
            out.payload = json{{"criteria", list}};
            out.status = all ? "pass" : "fail";
            if (!all)
                for (const auto& r : rows)
                    if (!r.pass) {
                        out.payload["first_failure"] = "criterion " + std::to_string(r.id);
                        break;
                    }
        }
    } catch (const cybra::parse_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const cybra::error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    out.millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started)
            .count();
    return out.emit();
}
