#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "fcslab/catalog.hpp"
#include "fcslab/ideals.hpp"
#include "fcslab/plane.hpp"
#include "fcslab/reports.hpp"
#include "fcslab/ring.hpp"
#include "fcslab/theorems.hpp"

namespace fs = std::filesystem;
using namespace fcslab;

namespace {

// exit codes: 0 success, 1 theorem/validation failure, 2 usage or I/O error
constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& message) : std::runtime_error(message) {}
};

int order_cap_from_env() {
    const char* env = std::getenv("FCSLAB_ORDER_CAP");
    if (!env || !*env) return kDefaultOrderCap;
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (*end != '\0' || cap < 1)
        throw UsageError(std::string("FCSLAB_ORDER_CAP must be a positive integer, got '") +
                         env + "'");
    return static_cast<int>(cap);
}

Side parse_side(const std::string& side) {
    if (side == "left") return Side::Left;
    if (side == "right") return Side::Right;
    throw UsageError("--side must be left or right");
}

int cmd_validate(const std::string& path) {
    FiniteRing ring = load_ring(path);
    std::cout << "ok: " << ring.name() << " is a valid unital ring of order " << ring.order()
              << "\n";
    return kExitOk;
}

int cmd_info(const std::string& path) {
    std::cout << info_text(load_ring(path));
    return kExitOk;
}

int cmd_classify(const std::string& path, const std::string& side, const std::string& format) {
    FiniteRing ring = load_ring(path);
    PlaneAnalysis analysis = analyze_plane(ring, parse_side(side), order_cap_from_env());
    if (format == "csv")
        std::cout << classification_csv(ring.name(), analysis);
    else if (format == "json")
        std::cout << classification_json(ring.name(), analysis);
    else
        throw UsageError("--format must be csv or json");
    return kExitOk;
}

int cmd_fcs(const std::string& path, const std::string& side, bool intersections) {
    FiniteRing ring = load_ring(path);
    PlaneAnalysis analysis = analyze_plane(ring, parse_side(side), order_cap_from_env());
    std::cout << fcs_text(ring.name(), analysis, intersections);
    return kExitOk;
}

int cmd_verify(const std::string& path, bool catalog, const std::string& format, bool timings,
               int radical_components) {
    SuiteOptions options;
    options.order_cap = order_cap_from_env();
    options.radical_components = radical_components;

    std::vector<FiniteRing> rings;
    if (catalog) {
        for (const auto& entry : builtin_catalog()) rings.push_back(entry.make());
    } else if (!path.empty()) {
        rings.push_back(load_ring(path));
    } else {
        throw UsageError("verify needs a ring file or --catalog");
    }

    std::vector<TheoremReport> reports;
    reports.reserve(rings.size());
    for (const auto& ring : rings) reports.push_back(run_all(ring, options));

    int failing = 0;
    for (const auto& report : reports)
        if (!report.all_passed()) ++failing;

    if (format == "json") {
        if (catalog)
            std::cout << theorem_reports_json(reports);
        else
            std::cout << theorem_report_json(reports.front());
    } else if (format == "text") {
        for (const auto& report : reports) std::cout << theorem_report_text(report, timings);
        if (catalog)
            std::cout << "catalog: " << reports.size() << " rings, " << failing
                      << " with failures\n";
    } else {
        throw UsageError("--format must be text or json");
    }
    return failing == 0 ? kExitOk : kExitFailure;
}

struct ScanJob {
    std::string name;                    // report name if loading fails
    std::function<FiniteRing()> make;
};

int cmd_scan(const std::string& dir, bool catalog, int max_order, const std::string& find,
             const std::string& out_format, int workers) {
    SuiteOptions options;
    options.order_cap = order_cap_from_env();

    std::vector<ScanJob> jobs;
    if (catalog) {
        for (const auto& entry : builtin_catalog())
            jobs.push_back({entry.name, entry.make});
    } else if (!dir.empty()) {
        if (!fs::is_directory(dir)) throw UsageError(dir + " is not a directory");
        std::vector<fs::path> paths;
        for (const auto& e : fs::directory_iterator(dir))
            if (e.is_regular_file() && e.path().extension() == ".json")
                paths.push_back(e.path());
        std::sort(paths.begin(), paths.end());
        for (const auto& p : paths)
            jobs.push_back({p.stem().string(), [p] { return load_ring(p.string()); }});
    } else {
        throw UsageError("scan needs a directory of ring files or --catalog");
    }

    std::vector<std::optional<ScanRow>> slots(jobs.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (std::size_t i; (i = cursor.fetch_add(1)) < jobs.size();) {
            ScanRow row;
            row.ring_name = jobs[i].name;
            try {
                FiniteRing ring = jobs[i].make();
                row.order = ring.order();
                if (max_order > 0 && ring.order() > max_order) continue;  // slot stays empty
                row = scan_ring(ring, options);
            } catch (const std::exception& e) {
                row.ok = false;
                row.error = e.what();
            }
            slots[i] = std::move(row);
        }
    };

    int thread_count = std::max(1, std::min<int>(workers, static_cast<int>(jobs.size())));
    std::vector<std::thread> pool;
    for (int t = 0; t < thread_count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::vector<ScanRow> rows;
    for (auto& slot : slots)
        if (slot) rows.push_back(std::move(*slot));

    if (!find.empty()) {
        std::vector<ScanRow> filtered;
        for (const auto& r : rows) {
            if (!r.ok) continue;
            if (find == "outliers" && (r.outliers_left > 0 || r.outliers_right > 0))
                filtered.push_back(r);
            else if (find == "nonunimodular-fcs" &&
                     (r.nonunimodular_fcs_left > 0 || r.nonunimodular_fcs_right > 0))
                filtered.push_back(r);
            else if (find != "outliers" && find != "nonunimodular-fcs")
                throw UsageError("--find must be outliers or nonunimodular-fcs");
        }
        rows = std::move(filtered);
    }

    if (out_format == "csv")
        std::cout << scan_csv(rows);
    else if (out_format == "json")
        std::cout << scan_json(rows);
    else
        throw UsageError("--out must be csv or json");
    return kExitOk;
}

int cmd_catalog(const std::string& export_dir) {
    if (!export_dir.empty()) {
        fs::create_directories(export_dir);
        for (const auto& entry : builtin_catalog()) {
            FiniteRing ring = entry.make();
            save_ring(ring, (fs::path(export_dir) / (entry.name + ".json")).string());
        }
        std::cout << "wrote " << builtin_catalog().size() << " ring files to " << export_dir
                  << "\n";
        return kExitOk;
    }
    for (const auto& entry : builtin_catalog()) {
        FiniteRing ring = entry.make();
        std::cout << entry.name << "  order=" << ring.order();
        const auto& f = entry.facts;
        if (f.unit_count) std::cout << "  units=" << *f.unit_count;
        if (f.max_right_ideals) std::cout << "  max_right=" << *f.max_right_ideals;
        if (f.radical_size) std::cout << "  radical=" << *f.radical_size;
        if (f.nilpotency) std::cout << "  nilpotency=" << *f.nilpotency;
        if (f.commutative) std::cout << "  commutative=" << (*f.commutative ? "yes" : "no");
        if (f.local) std::cout << "  local=" << (*f.local ? "yes" : "no");
        if (f.principal_right) std::cout << "  pir=" << (*f.principal_right ? "yes" : "no");
        std::cout << "  -- " << entry.description << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"analysis of finite unital rings: vector classification of the rank-2 "
                 "module, free cyclic submodules, ideal lattices and structural checks"};
    app.require_subcommand(1);

    std::string path, side = "left", format = "csv", find, out_format = "csv", export_dir;
    bool catalog = false, intersections = false, timings = false;
    int max_order = 0, workers = 1, radical_components = 2;

    auto* validate = app.add_subcommand("validate", "check every ring axiom on a ring file");
    validate->add_option("path", path, "ring file")->required();

    auto* info = app.add_subcommand("info", "units, ideals, radical and flags of a ring");
    info->add_option("path", path, "ring file")->required();

    auto* classify =
        app.add_subcommand("classify", "classify every vector of the rank-2 module");
    classify->add_option("path", path, "ring file")->required();
    classify->add_option("--side", side, "left or right module (default left)");
    classify->add_option("--format", format, "csv or json (default csv)");

    auto* fcs = app.add_subcommand("fcs", "list the free cyclic submodules");
    fcs->add_option("path", path, "ring file")->required();
    fcs->add_option("--side", side, "left or right module (default left)");
    fcs->add_flag("--intersections", intersections, "print the pairwise intersection matrix");

    auto* verify = app.add_subcommand("verify", "run every structural check");
    verify->add_option("path", path, "ring file");
    verify->add_flag("--catalog", catalog, "verify every built-in ring");
    std::string verify_format = "text";
    verify->add_option("--format", verify_format, "text or json (default text)");
    verify->add_flag("--timings", timings, "append per-check timings (text only)");
    verify->add_option("--radical-components", radical_components,
                       "components for the radical check (default 2)")
        ->check(CLI::Range(2, 3));

    auto* scan = app.add_subcommand("scan", "batch-analyze ring files or the catalog");
    scan->add_option("dir", path, "directory of ring files");
    scan->add_flag("--catalog", catalog, "scan the built-in rings");
    scan->add_option("--max-order", max_order, "skip rings larger than this");
    scan->add_option("--find", find, "filter: outliers or nonunimodular-fcs");
    scan->add_option("--out", out_format, "csv or json (default csv)");
    scan->add_option("--workers", workers, "concurrent rings (default 1)")
        ->check(CLI::Range(1, 256));

    auto* catalog_cmd = app.add_subcommand("catalog", "list the built-in rings");
    catalog_cmd->add_option("--export", export_dir, "write every catalog ring to a directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(path);
        if (app.got_subcommand(info)) return cmd_info(path);
        if (app.got_subcommand(classify)) return cmd_classify(path, side, format);
        if (app.got_subcommand(fcs)) return cmd_fcs(path, side, intersections);
        if (app.got_subcommand(verify))
            return cmd_verify(path, catalog, verify_format, timings, radical_components);
        if (app.got_subcommand(scan))
            return cmd_scan(path, catalog, max_order, find, out_format, workers);
        if (app.got_subcommand(catalog_cmd)) return cmd_catalog(export_dir);
    } catch (const ValidationError& e) {
        std::cerr << "validation failed: " << e.what() << "\n";
        return kExitFailure;
    } catch (const IntegrityError& e) {
        std::cerr << "integrity failure: " << e.what() << "\n";
        return kExitFailure;
    } catch (const OrderCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
