#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cayley/diophantine.hpp"
#include "cayley/errors.hpp"
#include "cayley/geometry.hpp"
#include "cayley/saturation.hpp"
#include "cayley/series.hpp"
#include "cayley/torsor.hpp"

namespace {

using nlohmann::ordered_json;

constexpr std::int64_t kTorsorCountMax = 2000;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Output {
    std::ofstream file;
    bool to_file = false;

    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw std::invalid_argument("cannot open output file: " + path);
            to_file = true;
        }
    }
    std::ostream& stream() { return to_file ? static_cast<std::ostream&>(file) : std::cout; }
};

void emit_seed_comment(std::ostream& os, const std::optional<std::uint64_t>& seed) {
    if (seed) os << "# seed=" << *seed << "\n";
}

cayley::saturation::TargetPoint parse_target(const std::vector<double>& xi) {
    if (xi.size() != 4) throw std::invalid_argument("--xi needs exactly 4 comma-separated reals");
    return cayley::saturation::TargetPoint::validated({xi[0], xi[1], xi[2], xi[3]});
}

int cmd_series(const std::string& method, std::uint64_t cutoff, const std::string& out_path,
               const std::string& format, const std::optional<std::uint64_t>& seed) {
    cayley::series::SeriesEstimate est =
        method == "sum" ? cayley::series::singular_series_sum(cutoff)
                        : cayley::series::singular_series_product(cutoff);
    Output out(out_path);
    auto& os = out.stream();
    if (format == "json") {
        ordered_json j{{"method", method},
                       {"cutoff", cutoff},
                       {"value", est.value},
                       {"tail_bound", est.tail_bound}};
        if (seed) j["seed"] = *seed;
        os << j.dump(2) << "\n";
    } else {
        emit_seed_comment(os, seed);
        os << "method,cutoff,value,tail_bound\n";
        os << method << "," << cutoff << "," << fmt(est.value) << "," << fmt(est.tail_bound)
           << "\n";
    }
    return 0;
}

int cmd_construct(const std::vector<double>& xi, std::int64_t B, std::size_t limit,
                  const std::string& out_path, const std::optional<std::uint64_t>& seed) {
    if (B < 2) throw cayley::scale_error("construct: B out of supported range (need B >= 2)");
    auto target = parse_target(xi);
    auto prof = cayley::saturation::profile(target);
    std::optional<std::size_t> lim;
    if (limit > 0) lim = limit;
    auto pts = cayley::saturation::construct_points(target, B, lim);

    double logB = std::log(static_cast<double>(B));
    double ratio = static_cast<double>(pts.size()) * std::pow(logB, 7) /
                   static_cast<double>(B);

    ordered_json meta;
    meta["B"] = std::to_string(B);
    meta["xi"] = target.xi;
    meta["eta"] = prof.eta;
    meta["beta"] = prof.beta.beta;
    meta["closeness_bound"] = cayley::saturation::closeness_constant(prof) / logB;
    meta["found"] = pts.size();
    meta["ratio"] = ratio;
    if (seed) {
        meta["seed"] = *seed;
    } else {
        meta["seed"] = nullptr;
    }

    ordered_json points = ordered_json::array();
    for (const auto& pt : pts) {
        ordered_json rec;
        rec["x"] = {std::to_string(pt.x[0]), std::to_string(pt.x[1]), std::to_string(pt.x[2]),
                    std::to_string(pt.x[3])};
        rec["primes"] = pt.p;
        rec["beta"] = pt.beta;
        rec["closeness"] = pt.closeness;
        points.push_back(std::move(rec));
    }
    ordered_json doc{{"meta", std::move(meta)}, {"points", std::move(points)}};

    std::string summary = "found=" + std::to_string(pts.size()) + " B=" + std::to_string(B) +
                          " ratio=" + fmt(ratio) + "\n";
    if (!out_path.empty()) {
        Output out(out_path);
        out.stream() << doc.dump(2) << "\n";
        std::cout << summary;
    } else {
        std::cout << doc.dump(2) << "\n";
        std::cerr << summary;
    }
    return 0;
}

int cmd_count(const std::string& what, std::int64_t B, const std::vector<double>& xi, int r,
              std::uint64_t cutoff, unsigned threads, const std::string& out_path,
              const std::string& format, const std::optional<std::uint64_t>& seed) {
    Output out(out_path);
    auto& os = out.stream();
    ordered_json j;
    std::string header, row;

    if (what == "N-direct" || what == "N-torsor") {
        std::uint64_t count;
        if (what == "N-direct") {
            count = cayley::geometry::count_N_direct(B, threads);
        } else {
            if (B > kTorsorCountMax) {
                throw cayley::scale_error("count N-torsor: B > " +
                                          std::to_string(kTorsorCountMax) +
                                          " is beyond the supported enumeration range");
            }
            count = cayley::torsor::count_N_torsor(B);
        }
        header = "what,B,count";
        row = what + "," + std::to_string(B) + "," + std::to_string(count);
        j = ordered_json{{"what", what}, {"B", std::to_string(B)}, {"count", count}};
    } else {
        if (B < 2) throw cayley::scale_error("count: B out of supported range (need B >= 2)");
        auto target = parse_target(xi);
        auto prof = cayley::saturation::profile(target);
        if (what == "J") {
            auto spec = cayley::diophantine::IntervalSpec::from_eta(prof.eta, B);
            std::uint64_t J = cayley::diophantine::count_J(prof.beta, spec);
            header = "what,B,J";
            row = what + "," + std::to_string(B) + "," + std::to_string(J);
            j = ordered_json{{"what", what}, {"B", std::to_string(B)}, {"J", J}};
        } else if (what == "R") {
            auto spec = cayley::diophantine::IntervalSpec::from_eta(prof.eta, B);
            auto sols = cayley::diophantine::solve_prime_equation(prof.beta, spec);
            double R = cayley::diophantine::weighted_R(sols);
            std::uint64_t J = cayley::diophantine::count_J(prof.beta, spec);
            auto S = cayley::series::singular_series_product(cutoff);
            double predicted = cayley::series::main_term(J, S);
            double ratio = R / predicted;
            header = "what,B,R,J,S,main_term,ratio";
            row = what + "," + std::to_string(B) + "," + fmt(R) + "," + std::to_string(J) + "," +
                  fmt(S.value) + "," + fmt(predicted) + "," + fmt(ratio);
            j = ordered_json{{"what", what}, {"B", std::to_string(B)},   {"R", R},
                             {"J", J},       {"S", S.value},             {"main_term", predicted},
                             {"ratio", ratio}};
        } else {  // M
            std::uint64_t count = cayley::saturation::count_M(target, B, r);
            double logB = std::log(static_cast<double>(B));
            double ratio = static_cast<double>(count) * std::pow(logB, 7) /
                           static_cast<double>(B);
            header = "what,B,r,count,ratio";
            row = what + "," + std::to_string(B) + "," + std::to_string(r) + "," +
                  std::to_string(count) + "," + fmt(ratio);
            j = ordered_json{{"what", what},
                             {"B", std::to_string(B)},
                             {"r", r},
                             {"count", count},
                             {"ratio", ratio}};
        }
    }

    if (format == "json") {
        if (seed) j["seed"] = *seed;
        os << j.dump(2) << "\n";
    } else {
        emit_seed_comment(os, seed);
        os << header << "\n" << row << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"almost-prime integral points on Cayley's cubic surface"};
    app.require_subcommand(1);

    unsigned threads = std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    app.add_option("--threads", threads, "worker threads for partitionable scans")
        ->capture_default_str();
    std::optional<std::uint64_t> seed;
    app.add_option("--seed", seed, "reserved flag; recorded in output metadata, never used");

    auto* series_cmd = app.add_subcommand("series", "evaluate the singular series");
    std::string method;
    std::uint64_t series_cutoff = 0;
    std::string series_out, series_format = "csv";
    series_cmd->add_option("--method", method, "sum or product")
        ->required()
        ->check(CLI::IsMember({"sum", "product"}));
    series_cmd->add_option("--cutoff", series_cutoff, "truncation point")->required();
    series_cmd->add_option("--out", series_out, "output file (default stdout)");
    series_cmd->add_option("--format", series_format)->check(CLI::IsMember({"csv", "json"}));

    auto* construct_cmd =
        app.add_subcommand("construct", "construct almost-prime points near a real target");
    std::vector<double> con_xi;
    std::int64_t con_B = 0;
    std::size_t con_limit = 0;
    std::string con_out;
    construct_cmd->add_option("--xi", con_xi, "target point, 4 comma-separated reals")
        ->required()
        ->delimiter(',');
    construct_cmd->add_option("--B", con_B, "height bound")->required();
    construct_cmd->add_option("--limit", con_limit, "stop after this many points (0 = all)");
    construct_cmd->add_option("--out", con_out, "JSON output file (default stdout)");

    auto* count_cmd = app.add_subcommand("count", "count points or solutions");
    std::string what;
    std::int64_t cnt_B = 0;
    std::vector<double> cnt_xi;
    int cnt_r = 12;
    std::uint64_t cnt_cutoff = 10'000'000;
    std::string cnt_out, cnt_format = "csv";
    count_cmd->add_option("--what", what, "N-direct, N-torsor, J, M or R")
        ->required()
        ->check(CLI::IsMember({"N-direct", "N-torsor", "J", "M", "R"}));
    count_cmd->add_option("--B", cnt_B, "height bound")->required();
    count_cmd->add_option("--xi", cnt_xi, "target point for J/M/R")->delimiter(',');
    count_cmd->add_option("--r", cnt_r, "almost-prime bound for M")->capture_default_str();
    count_cmd->add_option("--cutoff", cnt_cutoff, "singular-series cutoff for R")
        ->capture_default_str();
    count_cmd->add_option("--out", cnt_out, "output file (default stdout)");
    count_cmd->add_option("--format", cnt_format)->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(series_cmd)) {
            return cmd_series(method, series_cutoff, series_out, series_format, seed);
        }
        if (app.got_subcommand(construct_cmd)) {
            return cmd_construct(con_xi, con_B, con_limit, con_out, seed);
        }
        return cmd_count(what, cnt_B, cnt_xi, cnt_r, cnt_cutoff, threads, cnt_out, cnt_format,
                         seed);
    } catch (const cayley::scale_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const cayley::consistency_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
