// Experiment runner for the jump-space laboratory. Every subcommand
// resolves to one report (CSV or JSON); identical flags and seed produce
// identical bytes. Exit codes: 0 success, 2 rejected input or violated
// precondition, 1 internal error or failed self-check.

#include <jumplab/analysis.hpp>
#include <jumplab/cover.hpp>
#include <jumplab/errors.hpp>
#include <jumplab/fields.hpp>
#include <jumplab/jump_space.hpp>
#include <jumplab/oracle.hpp>
#include <jumplab/report.hpp>
#include <jumplab/sets.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace jumplab;

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

unsigned parse_unsigned(const std::string& text) {
    std::size_t used = 0;
    const unsigned long v = std::stoul(text, &used);
    require(used == text.size(), "not a whole number: \"" + text + "\"");
    return static_cast<unsigned>(v);
}

// "3..8" (inclusive) or "3,5,7".
std::vector<unsigned> parse_levels(const std::string& text) {
    std::vector<unsigned> out;
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        const unsigned lo = parse_unsigned(text.substr(0, dots));
        const unsigned hi = parse_unsigned(text.substr(dots + 2));
        require(lo <= hi, "level range must be ascending: \"" + text + "\"");
        for (unsigned k = lo; k <= hi; ++k) out.push_back(k);
        return out;
    }
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(parse_unsigned(item));
    require(!out.empty(), "no levels given");
    return out;
}

std::vector<Dyadic> parse_dyadic_list(const std::string& text) {
    std::vector<Dyadic> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(Dyadic::parse(item));
    require(!out.empty(), "empty list");
    return out;
}

// "lo..hi" with dyadic endpoints.
std::pair<Dyadic, Dyadic> parse_interval(const std::string& text) {
    const auto dots = text.find("..");
    require(dots != std::string::npos, "interval must be \"lo..hi\", got \"" + text + "\"");
    Dyadic lo = Dyadic::parse(text.substr(0, dots));
    Dyadic hi = Dyadic::parse(text.substr(dots + 2));
    require(lo < hi, "interval endpoints must be ordered: \"" + text + "\"");
    return {lo, hi};
}

// dim+1 comma-separated numbers per entry, entries ';'-separated.
std::vector<ChartIncrement> parse_increments(const std::string& text, unsigned dim) {
    std::vector<ChartIncrement> out;
    std::stringstream entries(text);
    std::string entry;
    while (std::getline(entries, entry, ';')) {
        std::vector<double> nums;
        std::stringstream fields(entry);
        std::string field;
        while (std::getline(fields, field, ',')) {
            std::size_t used = 0;
            nums.push_back(std::stod(field, &used));
            require(used == field.size(), "not a number: \"" + field + "\"");
        }
        require(nums.size() == dim + 1,
                "each increment needs " + std::to_string(dim) +
                    " components plus a distance, got \"" + entry + "\"");
        ChartIncrement inc;
        inc.delta.assign(nums.begin(), nums.end() - 1);
        inc.dist = nums.back();
        out.push_back(std::move(inc));
    }
    require(!out.empty(), "no increments given");
    return out;
}

SpacePoint make_point(const std::string& base, const std::string& height) {
    SpacePoint p{PointM::parse(base), Dyadic::parse(height)};
    validate_space_point(p);
    return p;
}

std::string interval_list(const IntervalUnion& u) {
    std::ostringstream out;
    for (std::size_t i = 0; i < u.parts().size(); ++i) {
        if (i) out << ' ';
        out << '(' << u.parts()[i].first.str() << ',' << u.parts()[i].second.str() << ')';
    }
    return out.str();
}

struct Output {
    std::string path = "-";
    std::string format = "csv";
    bool stamp = false;
};

void emit(ScanReport report, const Output& output) {
    if (output.stamp && output.format == "json") {
        report.add_meta("timestamp", utc_timestamp());
    }
    const std::string payload =
        output.format == "json" ? report.to_json() : report.to_csv();
    if (output.path == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream file(output.path, std::ios::binary);
    require(static_cast<bool>(file), "cannot open output file \"" + output.path + "\"");
    file << payload;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic laboratory for a jump-metric product space"};
    app.require_subcommand(1);

    unsigned depth = kDefaultDepth;
    std::uint64_t seed = 1;
    Output output;
    std::string write_config;

    app.add_option("--depth", depth, "truncation depth of the base space")
        ->capture_default_str()
        ->check(CLI::Range(1u, kMaxDepth));
    auto* depth_opt = app.get_option("--depth");
    app.add_option("--seed", seed, "random stream seed")->capture_default_str();
    app.add_option("--out", output.path, "output file, - for stdout")->capture_default_str();
    app.add_option("--format", output.format, "report format")
        ->capture_default_str()
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("--stamp", output.stamp, "add a timestamp to JSON metadata (off keeps runs byte-identical)");
    app.set_config("--config", "", "flat key=value config file; section [sub] or sub.key selects a subcommand");
    app.add_option("--write-config", write_config, "write the resolved configuration to this file");

    // distance
    auto* cmd_distance = app.add_subcommand("distance", "jump and box distances between two points");
    cmd_distance->configurable();
    std::string arg_a, arg_b;
    cmd_distance->add_option("--a", arg_a, "first point, coords@height")->required();
    cmd_distance->add_option("--b", arg_b, "second point")->required();

    // ball
    auto* cmd_ball = app.add_subcommand("ball", "exact ball decomposition and measure");
    cmd_ball->configurable();
    std::string arg_base, arg_height, arg_radius;
    std::vector<std::string> arg_excluded;
    cmd_ball->add_option("--base", arg_base, "center base, comma-separated coords")->required();
    cmd_ball->add_option("--height", arg_height, "center height, dyadic")->required();
    cmd_ball->add_option("--radius", arg_radius, "ball radius, dyadic")->required();
    cmd_ball->add_option("--excluded", arg_excluded,
                         "height interval lo..hi to exclude (repeatable)");

    // nondoubling
    auto* cmd_nd = app.add_subcommand("nondoubling", "4x ball-growth ratios along grid-avoiding heights");
    cmd_nd->configurable();
    std::string nd_base, nd_height, nd_levels;
    cmd_nd->add_option("--base", nd_base, "base point coords")->required();
    cmd_nd->add_option("--height", nd_height, "height, dyadic")->required();
    cmd_nd->add_option("--levels", nd_levels, "levels to scan, \"3..8\" or \"3,5\"")->required();

    // cover
    auto* cmd_cover = app.add_subcommand("cover", "three-rectangle cover of a ball");
    cmd_cover->configurable();
    std::string cv_base, cv_height, cv_radius, cv_eps = "1/10";
    bool cv_search = false;
    cmd_cover->add_option("--base", cv_base, "center base coords")->required();
    cmd_cover->add_option("--height", cv_height, "center height, dyadic")->required();
    cmd_cover->add_option("--radius", cv_radius, "ball radius, dyadic")->required();
    cmd_cover->add_option("--epsilon", cv_eps, "uncovered-fraction bound, rational")
        ->capture_default_str();
    cmd_cover->add_flag("--search", cv_search, "halve the radius until the cover preconditions hold");

    // approxdiff
    auto* cmd_ad = app.add_subcommand("approxdiff", "approximate-differentiability defect of a field");
    cmd_ad->configurable();
    std::string ad_field, ad_point, ad_radius, ad_eps = "1/10", ad_tol = "1/1000000000";
    std::uint64_t ad_samples = 10000;
    double ad_df = 0.0;
    cmd_ad->add_option("--field", ad_field, "field descriptor (height, const:c, dist:p, cone:..., supcones:...)")
        ->required();
    cmd_ad->add_option("--point", ad_point, "base point, coords@height")->required();
    cmd_ad->add_option("--radius", ad_radius, "ball radius, dyadic")->required();
    cmd_ad->add_option("--epsilon", ad_eps, "relative deviation threshold, rational")
        ->capture_default_str();
    cmd_ad->add_option("--samples", ad_samples, "Monte Carlo sample count")->capture_default_str();
    auto* ad_df_opt = cmd_ad->add_option("--df", ad_df, "vertical derivative to test (default: derived)");
    cmd_ad->add_option("--tol", ad_tol, "stabilization tolerance when deriving df")
        ->capture_default_str();

    // porosity
    auto* cmd_por = app.add_subcommand("porosity", "hole-witness search around a point of a set");
    cmd_por->configurable();
    std::string por_set, por_subject, por_radii;
    unsigned por_budget = 50;
    cmd_por->add_option("--set", por_set, "set descriptor (level:h or points:p;p)")->required();
    cmd_por->add_option("--subject", por_subject, "point of the set, coords@height")->required();
    cmd_por->add_option("--radii", por_radii, "comma-separated dyadic radii")->required();
    cmd_por->add_option("--budget", por_budget, "random candidates per radius")->capture_default_str();

    // gamma
    auto* cmd_gamma = app.add_subcommand("gamma", "measure-porosity search: small-measure balls inside a ball");
    cmd_gamma->configurable();
    std::string gm_base, gm_height, gm_radius, gm_delta;
    unsigned gm_budget = 50, gm_resolution = 10;
    cmd_gamma->add_option("--base", gm_base, "center base coords")->required();
    cmd_gamma->add_option("--height", gm_height, "center height, dyadic")->required();
    cmd_gamma->add_option("--radius", gm_radius, "ambient radius, dyadic")->required();
    cmd_gamma->add_option("--delta", gm_delta, "measure ratio bound, rational")->required();
    cmd_gamma->add_option("--budget", gm_budget, "random hole centers to try")->capture_default_str();
    cmd_gamma->add_option("--resolution", gm_resolution, "hole-radius grid bits")->capture_default_str();

    // uniqueness
    auto* cmd_uq = app.add_subcommand("uniqueness", "worst-direction chart increment growth");
    cmd_uq->configurable();
    std::string uq_increments;
    unsigned uq_dim = 1;
    cmd_uq->add_option("--dim", uq_dim, "chart dimension, 1 or 2")->required();
    cmd_uq->add_option("--increments", uq_increments,
                       "entries \"d1,...,ddim,dist\" separated by ';'")
        ->required();

    // selftest
    auto* cmd_st = app.add_subcommand("selftest", "oracle-equivalence suite at small depth");
    cmd_st->configurable();
    unsigned st_trials = 200;
    cmd_st->add_option("--trials", st_trials, "trials per check")->capture_default_str();

    // Accept the global flags (--depth, --seed, ...) after the subcommand too.
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!write_config.empty()) {
            std::ofstream file(write_config);
            require(static_cast<bool>(file),
                    "cannot open config output file \"" + write_config + "\"");
            file << app.config_to_str(true, false);
        }

        if (cmd_distance->parsed()) {
            const SpacePoint a = SpacePoint::parse(arg_a);
            const SpacePoint b = SpacePoint::parse(arg_b);
            validate_space_point(a);
            validate_space_point(b);
            const Dyadic dj = jump_distance(a, b);
            const Dyadic db = box_distance(a, b);
            const Dyadic gap = abs(a.height - b.height);
            ScanReport report;
            report.experiment = "distance";
            report.provenance = "sec3";
            report.add_meta("depth", std::to_string(a.depth()));
            report.columns = {"point_a", "point_b", "jump_distance", "box_distance",
                              "height_gap", "jump_le_3box", "gap_le_jump"};
            report.add_row({a.str(), b.str(), dj.str(), db.str(), gap.str(),
                            yes_no(dj <= Dyadic(3) * db), yes_no(gap <= dj)});
            emit(std::move(report), output);
            return 0;
        }

        if (cmd_ball->parsed()) {
            const SpacePoint center = make_point(arg_base, arg_height);
            require(center.depth() == depth || !depth_opt->count(),
                    "--depth disagrees with the base point length");
            const Dyadic radius = Dyadic::parse(arg_radius);
            const BallDecomposition ball = ball_decompose(center, radius);
            ScanReport report;
            report.experiment = "ball";
            report.provenance = "sec3";
            report.add_meta("center", center.str());
            report.add_meta("radius", radius.str());
            report.add_meta("depth", std::to_string(center.depth()));
            report.add_meta("measure", ball.total_measure().str());
            if (!arg_excluded.empty()) {
                IntervalUnion excluded;
                for (const auto& item : arg_excluded) {
                    const auto [lo, hi] = parse_interval(item);
                    excluded.insert(lo, hi);
                }
                report.add_meta("excluded", interval_list(excluded));
                report.add_meta("restricted_measure",
                                ball_measure_restricted(center, radius, excluded).str());
            }
            report.columns = {"section", "weight", "length", "intervals"};
            for (unsigned k = 1; k < center.depth(); ++k) {
                const auto& section = ball.levels[k - 1];
                report.add_row({std::to_string(k), ball.level_weight(k).str(),
                                section.total_length().str(), interval_list(section)});
            }
            report.add_row({"center_line", nu(center.depth()).str(),
                            ball.center_line.total_length().str(),
                            interval_list(ball.center_line)});
            emit(std::move(report), output);
            return 0;
        }

        if (cmd_nd->parsed()) {
            const SpacePoint center = make_point(nd_base, nd_height);
            require(center.depth() == depth || !depth_opt->count(),
                    "--depth disagrees with the base point length");
            const auto rows = non_doubling_scan(center.base, center.height, parse_levels(nd_levels));
            ScanReport report;
            report.experiment = "nondoubling";
            report.provenance = "sec4";
            report.add_meta("base", center.base.str());
            report.add_meta("height", center.height.str());
            report.add_meta("depth", std::to_string(center.depth()));
            report.add_meta("levels", nd_levels);
            report.add_meta("lower_bound_convention",
                            "2(n+1), from the exact ball-measure bounds at radii 1/2^n and 1/2^(n+2)");
            report.columns = {"level", "in_E", "ratio", "lower_bound", "bound_ok", "note"};
            bool all_ok = true;
            for (const auto& row : rows) {
                if (row.valid && !row.bound_satisfied) all_ok = false;
                report.add_row({std::to_string(row.level), yes_no(row.valid),
                                row.valid ? row.ratio.str() : "",
                                row.lower_bound.str(),
                                row.valid ? yes_no(row.bound_satisfied) : "",
                                row.skip_reason});
            }
            emit(std::move(report), output);
            return all_ok ? 0 : 1;
        }

        if (cmd_cover->parsed()) {
            const SpacePoint center = make_point(cv_base, cv_height);
            require(center.depth() == depth || !depth_opt->count(),
                    "--depth disagrees with the base point length");
            const Dyadic requested = Dyadic::parse(cv_radius);
            const BigRational eps = BigRational::parse(cv_eps);
            Dyadic radius = requested;
            CoverResult cover;
            if (cv_search) {
                constexpr int kMaxHalvings = 200;
                bool done = false;
                for (int i = 0; i < kMaxHalvings && !done; ++i) {
                    try {
                        cover = rectangle_cover(center, radius, eps);
                        done = true;
                    } catch (const precondition_error&) {
                        radius = radius.scaled_pow2(-1);
                    }
                }
                if (!done) cover = rectangle_cover(center, radius, eps);  // surface the error
            } else {
                cover = rectangle_cover(center, radius, eps);
            }
            const BigRational fraction_bound =
                BigRational(2) * nu(cover.k1 + 1) / nu(cover.k1);
            ScanReport report;
            report.experiment = "cover";
            report.provenance = "sec5";
            report.add_meta("center", center.str());
            report.add_meta("depth", std::to_string(center.depth()));
            report.add_meta("epsilon", eps.str());
            report.add_meta("radius_requested", requested.str());
            report.add_meta("radius_used", radius.str());
            report.add_meta("k1", std::to_string(cover.k1));
            report.add_meta("ball_measure", cover.ball_measure.str());
            report.add_meta("covered_measure", cover.covered_measure.str());
            report.add_meta("uncovered_fraction", cover.uncovered_fraction.str());
            report.add_meta("fraction_bound", fraction_bound.str());
            report.add_meta("fraction_below_epsilon", yes_no(cover.uncovered_fraction < eps));
            report.add_meta("fraction_below_bound",
                            yes_no(cover.uncovered_fraction <= fraction_bound));
            report.columns = {"rectangle", "level", "center", "half_width", "measure"};
            for (std::size_t i = 0; i < cover.rectangles.size(); ++i) {
                const auto& rect = cover.rectangles[i];
                report.add_row({std::to_string(i + 1), std::to_string(rect.level()),
                                rect.center.str(), rect.half_width.str(),
                                rect.measure().str()});
            }
            emit(std::move(report), output);
            return 0;
        }

        if (cmd_ad->parsed()) {
            const LipschitzField field = LipschitzField::parse(ad_field);
            const SpacePoint p = SpacePoint::parse(ad_point);
            validate_space_point(p);
            const Dyadic radius = Dyadic::parse(ad_radius);
            const BigRational eps = BigRational::parse(ad_eps);
            double df = ad_df;
            std::string df_source = "flag";
            if (!ad_df_opt->count()) {
                try {
                    df = vertical_derivative(field, p, BigRational::parse(ad_tol));
                } catch (const no_stable_limit& e) {
                    throw precondition_error(std::string(e.what()) +
                                             " (pass --df to test a specific slope)");
                }
                df_source = "derived";
            }
            Rng rng(seed);
            const DefectEstimate est = approx_diff_defect(field, p, df, eps, radius, ad_samples, rng);
            ScanReport report;
            report.experiment = "approxdiff";
            report.provenance = "sec5";
            report.add_meta("seed", std::to_string(seed));
            report.add_meta("depth", std::to_string(p.depth()));
            report.add_meta("df_source", df_source);
            report.columns = {"field", "point", "df", "epsilon", "radius", "samples",
                              "exceed", "fraction", "ci_low", "ci_high"};
            report.add_row({field.describe(), p.str(), fmt_double(df), eps.str(), radius.str(),
                            std::to_string(est.samples), std::to_string(est.exceed_count),
                            fmt_double(est.fraction), fmt_double(est.ci_low),
                            fmt_double(est.ci_high)});
            emit(std::move(report), output);
            return 0;
        }

        if (cmd_por->parsed()) {
            const SetDescriptor set = parse_set(por_set);
            const SpacePoint subject = SpacePoint::parse(por_subject);
            validate_space_point(subject);
            Rng rng(seed);
            const auto result = porosity_scan(set, subject, parse_dyadic_list(por_radii),
                                              por_budget, rng);
            ScanReport report;
            report.experiment = "porosity";
            report.provenance = "sec1";
            report.add_meta("set", set_to_string(set));
            report.add_meta("subject", subject.str());
            report.add_meta("budget", std::to_string(por_budget));
            report.add_meta("seed", std::to_string(seed));
            report.add_meta("depth", std::to_string(subject.depth()));
            report.columns = {"radius", "best_ratio", "witness", "dist_to_set",
                              "dist_to_subject", "verified"};
            for (const auto& row : result.rows) {
                if (row.best) {
                    report.add_row({row.radius.str(), row.best_ratio.str(),
                                    row.best->witness.str(), row.best->dist_to_set.str(),
                                    row.best->dist_to_subject.str(),
                                    yes_no(row.best->verify(set))});
                } else {
                    report.add_row({row.radius.str(), row.best_ratio.str(), "", "", "", ""});
                }
            }
            emit(std::move(report), output);
            return 0;
        }

        if (cmd_gamma->parsed()) {
            const SpacePoint center = make_point(gm_base, gm_height);
            const Dyadic radius = Dyadic::parse(gm_radius);
            const BigRational delta = BigRational::parse(gm_delta);
            Rng rng(seed);
            const GammaResult res =
                measure_porosity_gamma(center, radius, delta, gm_budget, rng, gm_resolution);
            bool certificate_ok = !res.found;
            if (res.found) {
                certificate_ok = jump_distance(center, res.hole_center) + res.hole_radius <= radius &&
                                 res.hole_measure <= delta * res.ambient_measure &&
                                 ball_measure(res.hole_center, res.hole_radius) == res.hole_measure;
            }
            ScanReport report;
            report.experiment = "gamma";
            report.provenance = "sec2";
            report.add_meta("center", center.str());
            report.add_meta("radius", radius.str());
            report.add_meta("delta", delta.str());
            report.add_meta("budget", std::to_string(gm_budget));
            report.add_meta("resolution_bits", std::to_string(gm_resolution));
            report.add_meta("seed", std::to_string(seed));
            report.add_meta("depth", std::to_string(center.depth()));
            report.columns = {"gamma", "found", "hole_center", "hole_radius", "hole_measure",
                              "ambient_measure", "certificate_ok"};
            report.add_row({res.gamma.str(), yes_no(res.found),
                            res.found ? res.hole_center.str() : "",
                            res.found ? res.hole_radius.str() : "",
                            res.found ? res.hole_measure.str() : "",
                            res.ambient_measure.str(), yes_no(certificate_ok)});
            emit(std::move(report), output);
            return certificate_ok ? 0 : 1;
        }

        if (cmd_uq->parsed()) {
            const auto increments = parse_increments(uq_increments, uq_dim);
            const double lambda = chart_uniqueness_lambda(increments, uq_dim);
            ScanReport report;
            report.experiment = "uniqueness";
            report.provenance = "sec2";
            report.add_meta("dim", std::to_string(uq_dim));
            report.columns = {"dim", "increments", "lambda"};
            report.add_row({std::to_string(uq_dim), std::to_string(increments.size()),
                            fmt_double(lambda)});
            emit(std::move(report), output);
            return 0;
        }

        if (cmd_st->parsed()) {
            const unsigned st_depth = depth_opt->count() ? depth : 4;
            Rng rng(seed);
            SelfTestResult res = selftest(st_depth, st_trials, rng);
            res.report.add_meta("seed", std::to_string(seed));
            const bool passed = res.all_passed;
            emit(std::move(res.report), output);
            return passed ? 0 : 1;
        }

        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
