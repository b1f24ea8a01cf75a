// Command-line front end: point inversion, exact curve images, tangent
// ellipse chains, SVG figures, and the property self-test.
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ellinv/curve_ops.hpp"
#include "ellinv/metric.hpp"
#include "ellinv/oracles.hpp"
#include "ellinv/pappus.hpp"
#include "ellinv/selftest.hpp"
#include "ellinv/svg.hpp"

using json = nlohmann::ordered_json;
using namespace ellinv;

namespace {

constexpr double kPi = 3.14159265358979323846;

// All numeric inputs are carried as strings so decimal literals can enter
// the exact-arithmetic layer without a detour through binary floating
// point ("0.25" stays 1/4).
struct Job {
    std::string a = "2.5", b = "1.5", cx = "0", cy = "0", phi = "0";
    std::string point;
    std::string curve;
    std::string ab = "1", r = "2/3", k = "0.6";
    int n = 5;
    std::string format;
    std::string out;
    std::string figure;
    std::uint64_t seed = 20260818;
    std::string tol;
};

double as_double(const std::string& text) { return to_double(rational_from_string(text)); }

Ellipse job_ellipse(const Job& job) {
    return Ellipse({as_double(job.cx), as_double(job.cy)}, as_double(job.a),
                   as_double(job.b), as_double(job.phi));
}

InversionEllipseExact job_exact_ellipse(const Job& job) {
    Rational ra = rational_from_string(job.a), rb = rational_from_string(job.b);
    if (ra <= 0 || rb <= 0) throw InvalidSpecError("semi-axes must be positive");
    return {ra * ra, rb * rb};
}

Tolerance job_tolerance(const Job& job) {
    Tolerance tol;
    if (!job.tol.empty()) tol.rel = as_double(job.tol);
    return tol;
}

Point parse_point(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw ParseError("point must look like X,Y");
    return {as_double(text.substr(0, comma)), as_double(text.substr(comma + 1))};
}

void load_config(const std::string& path, Job& job) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file: " + path);
    json cfg;
    try {
        in >> cfg;
    } catch (const json::exception& ex) {
        throw ParseError(std::string("config is not valid JSON: ") + ex.what());
    }
    auto text = [](const json& v) -> std::string {
        return v.is_string() ? v.get<std::string>() : v.dump();
    };
    for (const auto& [key, value] : cfg.items()) {
        if (key == "a") job.a = text(value);
        else if (key == "b") job.b = text(value);
        else if (key == "cx") job.cx = text(value);
        else if (key == "cy") job.cy = text(value);
        else if (key == "phi") job.phi = text(value);
        else if (key == "point") job.point = text(value);
        else if (key == "curve") job.curve = text(value);
        else if (key == "ab") job.ab = text(value);
        else if (key == "r") job.r = text(value);
        else if (key == "k") job.k = text(value);
        else if (key == "n") job.n = value.get<int>();
        else if (key == "format") job.format = text(value);
        else if (key == "out") job.out = text(value);
        else if (key == "figure") job.figure = text(value);
        else if (key == "seed") job.seed = value.get<std::uint64_t>();
        else if (key == "tol") job.tol = text(value);
        else throw ParseError("unknown config key: " + key);
    }
}

void write_output(const Job& job, const std::string& payload) {
    if (job.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(job.out);
    if (!out) throw ParseError("cannot open output file: " + job.out);
    out << payload;
}

// ------------------------------------------------------------- rendering

std::vector<Point> ellipse_outline(const Ellipse& e, int n = 256) {
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        double t = 2 * kPi * i / n;
        pts.push_back(apply_motion(RigidMotion{e.phi, e.center},
                                   {e.a * std::cos(t), e.b * std::sin(t)}));
    }
    return pts;
}

std::vector<Point> upper_half_outline(const Ellipse& e, int n = 128) {
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        double t = kPi * i / n;
        pts.push_back(e.center + Point{e.a * std::cos(t), e.b * std::sin(t)});
    }
    return pts;
}

// marching-squares contour of an implicit curve, emitted as short segments
void add_contour(SvgScene& scene, const ImplicitCurve& curve, double xmin, double xmax,
                 double ymin, double ymax, const SvgStyle& style, int grid = 220) {
    std::vector<double> vals(static_cast<std::size_t>((grid + 1) * (grid + 1)));
    auto at = [&](int i, int j) -> double& {
        return vals[static_cast<std::size_t>(j) * (grid + 1) + i];
    };
    double dx = (xmax - xmin) / grid, dy = (ymax - ymin) / grid;
    for (int j = 0; j <= grid; ++j)
        for (int i = 0; i <= grid; ++i)
            at(i, j) = curve.evaluate(xmin + i * dx, ymin + j * dy);
    auto lerp = [](double x0, double x1, double v0, double v1) {
        return x0 + (x1 - x0) * (v0 / (v0 - v1));
    };
    for (int j = 0; j < grid; ++j)
        for (int i = 0; i < grid; ++i) {
            double x0 = xmin + i * dx, x1 = x0 + dx;
            double y0 = ymin + j * dy, y1 = y0 + dy;
            double v00 = at(i, j), v10 = at(i + 1, j);
            double v01 = at(i, j + 1), v11 = at(i + 1, j + 1);
            std::vector<Point> hits;
            if ((v00 < 0) != (v10 < 0)) hits.push_back({lerp(x0, x1, v00, v10), y0});
            if ((v01 < 0) != (v11 < 0)) hits.push_back({lerp(x0, x1, v01, v11), y1});
            if ((v00 < 0) != (v01 < 0)) hits.push_back({x0, lerp(y0, y1, v00, v01)});
            if ((v10 < 0) != (v11 < 0)) hits.push_back({x1, lerp(y0, y1, v10, v11)});
            if (hits.size() == 2) scene.add_polyline(hits, style);
            else if (hits.size() == 4) { // saddle cell: pair by x order
                scene.add_polyline({hits[0], hits[2]}, style);
                scene.add_polyline({hits[1], hits[3]}, style);
            }
        }
}

const SvgStyle kEllipseStyle{"#1f4e9c", 2.0, ""};
const SvgStyle kSourceStyle{"#2e7d32", 1.6, "7,4"};
const SvgStyle kImageStyle{"#c62828", 1.8, ""};
const SvgStyle kAxisStyle{"#888888", 1.0, "3,3"};

void add_sampled(SvgScene& scene, const Ellipse& e,
                 const std::function<Point(double)>& src, double t0, double t1, int n,
                 const SvgStyle& style) {
    scene.add_polyline(sample_image(e, src, t0, t1, n), style);
}

std::string render_chain_svg(const ChainSpec& spec,
                             const std::vector<ChainElement>& chain) {
    double ab = spec.ab, k = spec.k;
    double top = std::max(k * ab / 2, 0.05 * ab);
    SvgScene scene(-0.08 * ab, 1.08 * ab, -0.35 * top, 1.3 * top);
    scene.add_polyline({{-0.05 * ab, 0}, {1.05 * ab, 0}}, kAxisStyle);
    ChainBase base = chain_base(spec);
    for (const Ellipse* e : {&base.outer, &base.inner_left, &base.inner_right})
        scene.add_polyline(upper_half_outline(*e), kEllipseStyle, true);
    for (const ChainElement& el : chain)
        scene.add_polyline(ellipse_outline(Ellipse(el.center, el.rx, el.ry), 96),
                           kImageStyle, true);
    return scene.to_string();
}

std::string render_figure(const Job& job) {
    const std::string& id = job.figure;
    Ellipse e = job_ellipse(job);
    double window = 2.6 * std::max(e.a, e.b);
    SvgScene scene(e.center.x - window, e.center.x + window, e.center.y - 0.75 * window,
                   e.center.y + 0.75 * window);
    auto draw_e = [&] { scene.add_polyline(ellipse_outline(e), kEllipseStyle); };
    auto line_sampler = [&](Point p0, Point d) {
        return [p0, d](double t) { return p0 + t * d; };
    };

    if (id == "inversion") {
        draw_e();
        Point p = job.point.empty() ? Point{3.72, 1.6} : parse_point(job.point);
        Point img = invert_point(e, p).point();
        Point q = directional_radius(e, Direction::of(e.center, p)).boundary_point;
        scene.add_polyline({e.center, p + 0.35 * (p - e.center)}, kAxisStyle);
        scene.add_marker(e.center);
        scene.add_label(e.center, "O");
        scene.add_marker(p, "#2e7d32");
        scene.add_label(p, "P");
        scene.add_marker(img, "#c62828");
        scene.add_label(img, "P'");
        scene.add_marker(q, "#1f4e9c");
        scene.add_label(q, "Q");
    } else if (id == "perpendicular") {
        draw_e();
        Point h{0.45 * e.a, 0.3 * e.b};
        auto l1 = line_sampler(h, {1, 1});
        auto l2 = line_sampler(h, {1, -1});
        for (auto& l : {l1, l2}) {
            std::vector<Point> seg;
            for (int i = 0; i <= 64; ++i) seg.push_back(l(-8 + 0.25 * i));
            scene.add_polyline(seg, kSourceStyle);
            add_sampled(scene, e, l, -60, 60, 1600, kImageStyle);
        }
        scene.add_marker(e.center);
        scene.add_label(e.center, "O");
    } else if (id == "concurrent") {
        draw_e();
        Point h{-3.18, 2.06};
        for (int k = 0; k < 5; ++k) {
            double th = 0.12 + kPi * k / 5;
            auto l = line_sampler(h, {std::cos(th), std::sin(th)});
            std::vector<Point> seg;
            for (int i = 0; i <= 64; ++i) seg.push_back(l(-10 + 0.3125 * i));
            scene.add_polyline(seg, kSourceStyle);
            add_sampled(scene, e, l, -80, 80, 2400, kImageStyle);
        }
        scene.add_marker(e.center);
        scene.add_label(e.center, "O");
        Point hi = invert_point(e, h).point();
        scene.add_marker(hi, "#c62828");
        scene.add_label(hi, "H'");
        scene.add_marker(h, "#2e7d32");
        scene.add_label(h, "H");
    } else if (id == "parallel") {
        draw_e();
        for (double c : {2.0, 3.2, 4.6}) {
            auto l = line_sampler({0, c / 1.0}, {1, -0.5});
            std::vector<Point> seg;
            for (int i = 0; i <= 64; ++i) seg.push_back(l(-9 + 0.28125 * i));
            scene.add_polyline(seg, kSourceStyle);
            add_sampled(scene, e, l, -70, 70, 2000, kImageStyle);
        }
        scene.add_marker(e.center);
        scene.add_label(e.center, "O");
    } else if (id == "homothetic") {
        draw_e();
        InversionEllipseExact ex = job_exact_ellipse(job);
        TermMap src;
        poly::add_term(src, {2, 0}, 1 / ex.a2);
        poly::add_term(src, {0, 2}, 1 / ex.b2);
        poly::add_term(src, {1, 0}, Rational(1, 2));
        poly::add_term(src, {0, 1}, Rational(1, 4));
        poly::add_term(src, {0, 0}, Rational(-2));
        ImplicitCurve source(std::move(src));
        ImplicitCurve image = pushforward(ex, source);
        add_contour(scene, source, e.center.x - window, e.center.x + window,
                    e.center.y - 0.75 * window, e.center.y + 0.75 * window, kSourceStyle);
        add_contour(scene, image, e.center.x - window, e.center.x + window,
                    e.center.y - 0.75 * window, e.center.y + 0.75 * window, kImageStyle);
        scene.add_marker(e.center);
        scene.add_label(e.center, "O");
    } else if (id == "line-image") {
        draw_e();
        auto l = line_sampler({0.8 * e.a, 0}, {0, 1});
        std::vector<Point> seg;
        for (int i = 0; i <= 64; ++i) seg.push_back(l(-8 + 0.25 * i));
        scene.add_polyline(seg, kSourceStyle);
        add_sampled(scene, e, l, -60, 60, 1600, kImageStyle);
        scene.add_marker(e.center);
        scene.add_label(e.center, "O");
    } else if (id == "circle-image") {
        draw_e();
        auto circ = [](double t) {
            return Point{-2.8 + 1.2 * std::cos(t), 1.96 + 1.2 * std::sin(t)};
        };
        std::vector<Point> seg;
        for (int i = 0; i <= 128; ++i) seg.push_back(circ(2 * kPi * i / 128));
        scene.add_polyline(seg, kSourceStyle, true);
        add_sampled(scene, e, circ, 0, 2 * kPi, 800, kImageStyle);
        scene.add_marker(e.center);
        scene.add_label(e.center, "O");
    } else if (id == "parabola-image") {
        draw_e();
        auto par = [](double t) { return Point{t, 0.4 * t * t - 2.0}; };
        std::vector<Point> seg;
        for (int i = 0; i <= 96; ++i) seg.push_back(par(-7 + 14.0 * i / 96));
        scene.add_polyline(seg, kSourceStyle);
        add_sampled(scene, e, par, -45, 45, 1800, kImageStyle);
        scene.add_marker(e.center);
        scene.add_label(e.center, "O");
    } else if (id == "hyperbola-image") {
        draw_e();
        for (double sign : {1.0, -1.0}) {
            auto hyp = [sign](double t) {
                return Point{sign * 2.0 * std::cosh(t), 1.1 * std::sinh(t)};
            };
            std::vector<Point> seg;
            for (int i = 0; i <= 96; ++i) seg.push_back(hyp(-2.4 + 4.8 * i / 96));
            scene.add_polyline(seg, kSourceStyle);
            add_sampled(scene, e, hyp, -6, 6, 1200, kImageStyle);
        }
        scene.add_marker(e.center);
        scene.add_label(e.center, "O");
    } else if (id == "chain") {
        ChainSpec spec{as_double(job.ab), as_double(job.r), as_double(job.k), job.n};
        return render_chain_svg(spec, build_chain(spec));
    } else {
        throw ParseError("unknown figure id: " + id);
    }
    return scene.to_string();
}

// ----------------------------------------------------------- subcommands

json point_json(Point p) { return json::array({p.x, p.y}); }

int run_invert_point(const Job& job) {
    Ellipse e = job_ellipse(job);
    Tolerance tol = job_tolerance(job);
    if (job.point.empty()) throw ParseError("invert-point needs --point X,Y");
    Point p = parse_point(job.point);
    json rec;
    rec["input"] = point_json(p);
    if (p.x == e.center.x && p.y == e.center.y) {
        rec["image"] = "infinity";
    } else {
        Point img = invert_point(e, p).point();
        Point ray = invert_point_by_ray(e, p, tol);
        Point pol = oracle::invert_by_polar(e, p, tol);
        Point sq = oracle::invert_by_squash(e, p, tol);
        rec["image"] = point_json(img);
        rec["w"] = directional_radius(e, Direction::of(e.center, p)).w;
        rec["oracles"] = {{"ray", point_json(ray)},
                          {"polar", point_json(pol)},
                          {"squash", point_json(sq)}};
        rec["max_deviation"] = std::max(
            {distance(img, ray), distance(img, pol), distance(img, sq)});
    }
    write_output(job, rec.dump(2) + "\n");
    return 0;
}

int run_invert_curve(const Job& job) {
    if (job.curve.empty()) throw ParseError("invert-curve needs --curve TEXT");
    InversionEllipseExact ex = job_exact_ellipse(job);
    ImplicitCurve source = ImplicitCurve::parse(job.curve);
    ImplicitCurve image = pushforward(ex, source);
    CurveClass cls = classify_curve(ex, image);
    if (job.format == "svg") {
        Ellipse e = job_ellipse(job);
        double window = 2.6 * std::max(e.a, e.b);
        SvgScene scene(-window, window, -0.75 * window, 0.75 * window);
        scene.add_polyline(ellipse_outline(e), kEllipseStyle);
        add_contour(scene, source, -window, window, -0.75 * window, 0.75 * window,
                    kSourceStyle);
        add_contour(scene, image, -window, window, -0.75 * window, 0.75 * window,
                    kImageStyle);
        write_output(job, scene.to_string());
        return 0;
    }
    json rec;
    rec["input_canonical"] = source.text();
    rec["image_canonical"] = image.text();
    rec["class"] = cls.name();
    rec["degree"] = image.degree();
    write_output(job, rec.dump(2) + "\n");
    return 0;
}

int run_chain(const Job& job) {
    ChainSpec spec{as_double(job.ab), as_double(job.r), as_double(job.k), job.n};
    auto chain = build_chain(spec);
    ChainReport report = verify_chain(spec, chain);
    std::string format = job.format.empty() ? "csv" : job.format;
    std::ostream& report_stream = job.out.empty() ? std::cerr : std::cout;
    if (format == "csv") {
        write_output(job, chain_csv(chain));
        report_stream << report.summary() << '\n';
    } else if (format == "svg") {
        write_output(job, render_chain_svg(spec, chain));
        report_stream << report.summary() << '\n';
    } else if (format == "json") {
        json rec;
        rec["spec"] = {{"ab", spec.ab}, {"r", spec.r}, {"k", spec.k}, {"n", spec.count}};
        json rows = json::array();
        for (const ChainElement& el : chain)
            rows.push_back({{"n", el.n},
                            {"cx", el.center.x},
                            {"cy", el.center.y},
                            {"rx", el.rx},
                            {"ry", el.ry},
                            {"h", el.h},
                            {"ratio", el.h / (el.n * el.ry)}});
        rec["elements"] = rows;
        rec["report"] = {{"worst_tangency", report.worst_tangency},
                         {"worst_homothety", report.worst_homothety},
                         {"worst_identity", report.worst_identity},
                         {"ok", report.ok()}};
        write_output(job, rec.dump(2) + "\n");
    } else {
        throw ParseError("unknown format: " + format);
    }
    return 0;
}

int run_figure(const Job& job) {
    if (job.figure.empty()) throw ParseError("figure needs an id");
    write_output(job, render_figure(job));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"inversion with respect to an ellipse: points, curves, chains"};
    app.require_subcommand(1);

    Job job;
    std::string config_path;

    auto add_common = [&](CLI::App* sc) {
        sc->add_option("--config", config_path, "JSON config file");
        sc->add_option("--a", job.a, "semi-axis along local x");
        sc->add_option("--b", job.b, "semi-axis along local y");
        sc->add_option("--cx", job.cx, "center x");
        sc->add_option("--cy", job.cy, "center y");
        sc->add_option("--phi", job.phi, "axis rotation (radians)");
        sc->add_option("--format", job.format, "json | csv | svg");
        sc->add_option("--out", job.out, "output path (default: stdout)");
        sc->add_option("--seed", job.seed, "random seed for test suites");
        sc->add_option("--tol", job.tol, "relative tolerance override");
        return sc;
    };

    CLI::App* sc_point = add_common(app.add_subcommand(
        "invert-point", "invert a point, reporting all construction routes"));
    sc_point->add_option("--point", job.point, "point as X,Y");

    CLI::App* sc_curve = add_common(app.add_subcommand(
        "invert-curve", "exact image of a line or conic, with its class"));
    sc_curve->add_option("--curve", job.curve, "curve as \"i,j:coeff;...\"");

    CLI::App* sc_chain = add_common(app.add_subcommand(
        "chain", "build and verify the tangent ellipse chain"));
    sc_chain->add_option("--ab", job.ab, "baseline length");
    sc_chain->add_option("--r", job.r, "split ratio in (0,1)");
    sc_chain->add_option("--k", job.k, "vertical/horizontal semi-axis ratio");
    sc_chain->add_option("-n,--n", job.n, "number of chain elements");

    CLI::App* sc_fig = add_common(app.add_subcommand("figure", "render a named figure"));
    sc_fig->add_option("id", job.figure, "figure id");
    sc_fig->add_option("--ab", job.ab, "baseline length (chain figure)");
    sc_fig->add_option("--r", job.r, "split ratio (chain figure)");
    sc_fig->add_option("--k", job.k, "semi-axis ratio (chain figure)");
    sc_fig->add_option("-n,--n", job.n, "chain elements (chain figure)");
    sc_fig->add_option("--point", job.point, "point for the inversion figure");

    CLI::App* sc_self = add_common(
        app.add_subcommand("selftest", "run every property suite"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e); // --help and friends exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1; // any command-line parse failure is exit 1
    }

    try {
        if (!config_path.empty()) {
            // explicit command-line flags win over config values
            Job from_cli = job;
            Job merged;
            load_config(config_path, merged);
            CLI::App* active = app.get_subcommands().front();
            auto keep = [&](const std::string& flag, auto member) {
                if (active->count(flag)) merged.*member = from_cli.*member;
            };
            keep("--a", &Job::a);
            keep("--b", &Job::b);
            keep("--cx", &Job::cx);
            keep("--cy", &Job::cy);
            keep("--phi", &Job::phi);
            keep("--format", &Job::format);
            keep("--out", &Job::out);
            keep("--seed", &Job::seed);
            keep("--tol", &Job::tol);
            if (active->get_option_no_throw("--point") && active->count("--point"))
                merged.point = from_cli.point;
            if (active->get_option_no_throw("--curve") && active->count("--curve"))
                merged.curve = from_cli.curve;
            if (active->get_option_no_throw("--ab") && active->count("--ab"))
                merged.ab = from_cli.ab;
            if (active->get_option_no_throw("--r") && active->count("--r"))
                merged.r = from_cli.r;
            if (active->get_option_no_throw("--k") && active->count("--k"))
                merged.k = from_cli.k;
            if (active->get_option_no_throw("--n") && active->count("--n"))
                merged.n = from_cli.n;
            if (active->get_option_no_throw("id") && active->count("id"))
                merged.figure = from_cli.figure;
            job = merged;
        }

        if (sc_point->parsed()) return run_invert_point(job);
        if (sc_curve->parsed()) return run_invert_curve(job);
        if (sc_chain->parsed()) return run_chain(job);
        if (sc_fig->parsed()) return run_figure(job);
        if (sc_self->parsed())
            return run_selftest(job.seed, std::cout) ? 0 : 1;
        throw ParseError("no subcommand selected");
    } catch (const CenterSingularError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const UnsupportedDegreeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidSpecError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const IndexOutOfRangeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
}
