#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eip/errors.hpp"
#include "eip/identities.hpp"
#include "eip/martin.hpp"
#include "eip/processes.hpp"
#include "eip/textio.hpp"

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCap = 2;
constexpr int kExitInternal = 3;

void emit(const std::string& out_path, const std::string& body) {
    if (out_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
    f << body;
}

void emit_sidecar(const std::string& out_path, const std::string& subcommand, std::uint64_t seed,
                  const json& params) {
    if (out_path.empty()) return;
    json doc;
    doc["subcommand"] = subcommand;
    doc["seed"] = seed;
    doc["parameters"] = params;
    doc["version"] = EIP_VERSION;
    std::ofstream f(out_path + ".json", std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open sidecar file: " + out_path + ".json");
    f << doc.dump(2) << '\n';
}

eip::LimitSet load_limitset(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open limit set file: " + path);
    return eip::read_limitset(f);
}

std::string trajectory_csv(const eip::EipTrajectory& traj) {
    std::ostringstream csv;
    csv << "step,eta,system\n";
    const auto& eta = traj.erasers.values();
    for (int n = 1; n <= traj.size(); ++n) {
        csv << n << ',';
        if (n < traj.size()) csv << eta[n - 1];
        csv << ",\"" << eip::format_system(traj.at(n)) << "\"\n";
    }
    return csv.str();
}

int run_simulate(std::uint64_t seed, int n, const std::string& limitset_path, int resolution,
                 int depth, const std::string& out) {
    eip::LimitSet k;
    std::string source;
    if (!limitset_path.empty()) {
        k = load_limitset(limitset_path);
        source = limitset_path;
    } else if (depth >= 0) {
        k = eip::complete_tree_limit(depth);
        source = "complete_tree_limit(" + std::to_string(depth) + ")";
    } else {
        k = eip::spine_limit(resolution);
        source = "spine_limit(" + std::to_string(resolution) + ")";
    }
    eip::SeededRng rng(seed);
    const auto [traj, u] = eip::simulate_eip(k, n, rng);
    std::vector<int> checkpoints;
    for (int m = 2; m < n; m *= 2) checkpoints.push_back(m);
    if (n >= 2) checkpoints.push_back(n);
    std::ostringstream csv;
    csv << "checkpoint,hausdorff,bound\n";
    for (int m : checkpoints) {
        std::vector<double> prefix(u.values().begin(), u.values().begin() + m);
        std::sort(prefix.begin(), prefix.end());
        const auto [dp, dm] = eip::cdf_sup_deviation(eip::OrderedSample(std::move(prefix)));
        csv << m << ',' << eip::format_double(eip::hausdorff(eip::scale(traj.at(m)), k)) << ','
            << eip::format_double(dp + dm) << '\n';
    }
    emit(out, csv.str());
    emit_sidecar(out, "simulate-eip", seed, {{"n", n}, {"source", source}});
    return kExitOk;
}

int run_backward(std::uint64_t seed, const std::string& system_text, const std::string& out) {
    const eip::IntervalSystem top = eip::parse_system(system_text);
    eip::SeededRng rng(seed);
    emit(out, trajectory_csv(eip::backward_chain(top, rng)));
    emit_sidecar(out, "backward", seed, {{"system", system_text}});
    return kExitOk;
}

int run_remy(std::uint64_t seed, int n, bool census, int trials, const std::string& out) {
    if (!census) {
        eip::SeededRng rng(seed);
        emit(out, eip::format_system(eip::remy_chain(n, rng)) + "\n");
        emit_sidecar(out, "remy", seed, {{"n", n}});
        return kExitOk;
    }
    std::map<eip::IntervalSystem, std::int64_t> counts;
    for (int t = 0; t < trials; ++t) {
        eip::SeededRng rng = eip::SeededRng::substream(seed, static_cast<std::uint64_t>(t));
        ++counts[eip::remy_chain(n, rng)];
    }
    std::vector<std::int64_t> freq;
    double max_dev = 0.0;
    const double uniform = 1.0 / static_cast<double>(counts.size());
    std::ostringstream csv;
    csv << "tree,count,frequency\n";
    for (const auto& [tree, count] : counts) {
        freq.push_back(count);
        const double f = static_cast<double>(count) / trials;
        max_dev = std::max(max_dev, std::abs(f - uniform));
        csv << '"' << eip::format_system(tree) << "\"," << count << ',' << eip::format_double(f)
            << '\n';
    }
    const eip::ChiSquareReport chi = eip::uniformity_test(freq);
    std::cerr << "categories=" << counts.size() << " max_deviation=" << max_dev
              << " chi_square=" << chi.statistic << '\n';
    emit(out, csv.str());
    emit_sidecar(out, "remy", seed, {{"n", n}, {"census", true}, {"trials", trials}});
    return kExitOk;
}

int run_gamma(const std::string& target_text, const std::string& source_text) {
    const eip::Rational g =
        eip::gamma(eip::parse_system(target_text), eip::parse_system(source_text));
    std::cout << boost::multiprecision::numerator(g) << '/'
              << boost::multiprecision::denominator(g) << '\n';
    return kExitOk;
}

int run_converge(const std::string& family_name, const std::string& target_text,
                 const std::vector<int>& sizes, const std::string& out) {
    const eip::TreeFamily family =
        family_name == "spine" ? eip::TreeFamily::spine : eip::TreeFamily::complete;
    const eip::IntervalSystem target = eip::parse_system(target_text);
    const eip::GammaTable table = eip::gamma_convergence(family, target, sizes);
    std::ostringstream csv;
    csv << "n,target,gamma_num,gamma_den,gamma_float\n";
    for (const auto& [n, g] : table.entries)
        csv << n << ",\"" << eip::format_system(target) << "\","
            << boost::multiprecision::numerator(g) << ',' << boost::multiprecision::denominator(g)
            << ',' << eip::format_double(static_cast<double>(g)) << '\n';
    emit(out, csv.str());
    return kExitOk;
}

int run_identities(int max_n) {
    const auto reports = eip::run_identity_suites(max_n);
    for (const auto& r : reports)
        std::cout << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.cases
                  << " cases)\n";
    return eip::all_passed(reports) ? kExitOk : kExitInternal;
}

int run_conjecture(std::uint64_t seed, const std::vector<int>& sizes, int replicas,
                   const std::string& out) {
    std::ostringstream csv;
    csv << "n,replica,stream,hausdorff\n";
    for (int n : sizes) {
        for (int r = 0; r < replicas; ++r) {
            const std::uint64_t stream =
                (static_cast<std::uint64_t>(n) << 32) | static_cast<std::uint64_t>(r);
            eip::SeededRng rng = eip::SeededRng::substream(seed, stream);
            const eip::Permutation sigma = eip::sample_231_avoiding(n, rng);
            const eip::IntervalSystem tree = eip::remy_chain(n, rng);
            const double d =
                eip::hausdorff_points(eip::permutation_graph(sigma), eip::scale(tree).points());
            csv << n << ',' << r << ',' << stream << ',' << eip::format_double(d) << '\n';
        }
    }
    emit(out, csv.str());
    emit_sidecar(out, "conjecture", seed, {{"sizes", sizes}, {"replicas", replicas}});
    return kExitOk;
}

int run_render(const std::string& system_text, const std::string& limitset_path,
               const std::string& out) {
    eip::LimitSet k;
    if (!system_text.empty()) k = eip::scale(eip::parse_system(system_text));
    else if (!limitset_path.empty()) k = load_limitset(limitset_path);
    else throw std::invalid_argument("render: need --system or --limitset");
    emit(out, eip::render_limitset_svg(k));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Erased-interval-process experiments"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    int n = 2000, trials = 140000, depth = -1, resolution = 64, max_n = 4, replicas = 50;
    bool census = false;
    std::string out, system_text, target_text, source_text, limitset_path, family = "spine";
    std::vector<int> sizes;

    auto* sim = app.add_subcommand("simulate-eip", "forward simulation + reconstruction distances");
    sim->add_option("--seed", seed)->required();
    sim->add_option("--n", n)->check(CLI::PositiveNumber);
    sim->add_option("--limitset", limitset_path);
    sim->add_option("--resolution", resolution)->check(CLI::PositiveNumber);
    sim->add_option("--depth", depth)->check(CLI::NonNegativeNumber);
    sim->add_option("--out", out);

    auto* bwd = app.add_subcommand("backward", "backward chain from a system literal");
    bwd->add_option("--seed", seed)->required();
    bwd->add_option("--system", system_text)->required();
    bwd->add_option("--out", out);

    auto* remy = app.add_subcommand("remy", "tree growth chain, optional frequency census");
    remy->add_option("--seed", seed)->required();
    remy->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    remy->add_flag("--census", census);
    remy->add_option("--trials", trials)->check(CLI::PositiveNumber);
    remy->add_option("--out", out);

    auto* gam = app.add_subcommand("gamma", "exact density of a small system in a large one");
    gam->add_option("--target", target_text)->required();
    gam->add_option("--source", source_text)->required();

    auto* conv = app.add_subcommand("converge", "exact density tables for tree families");
    conv->add_option("--family", family)->check(CLI::IsMember({"spine", "complete"}));
    conv->add_option("--target", target_text)->required();
    conv->add_option("--sizes", sizes)->required();
    conv->add_option("--out", out);

    auto* ident = app.add_subcommand("identities", "exhaustive exact-identity suites");
    ident->add_option("--max-n", max_n)->check(CLI::PositiveNumber);

    auto* conj = app.add_subcommand("conjecture", "231-graph vs scaled random tree distances");
    conj->add_option("--seed", seed)->required();
    conj->add_option("--sizes", sizes);
    conj->add_option("--replicas", replicas)->check(CLI::PositiveNumber);
    conj->add_option("--out", out);

    auto* rend = app.add_subcommand("render", "SVG of a system or limit set");
    rend->add_option("--system", system_text);
    rend->add_option("--limitset", limitset_path);
    rend->add_option("--out", out);

    try {
        app.parse(argc, argv);
        if (sim->parsed()) return run_simulate(seed, n, limitset_path, resolution, depth, out);
        if (bwd->parsed()) return run_backward(seed, system_text, out);
        if (remy->parsed()) return run_remy(seed, n, census, trials, out);
        if (gam->parsed()) return run_gamma(target_text, source_text);
        if (conv->parsed()) return run_converge(family, target_text, sizes, out);
        if (ident->parsed()) return run_identities(max_n);
        if (conj->parsed()) {
            if (sizes.empty()) sizes = {100, 400, 1600};
            return run_conjecture(seed, sizes, replicas, out);
        }
        if (rend->parsed()) return run_render(system_text, limitset_path, out);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const eip::UnsupportedSizeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}
