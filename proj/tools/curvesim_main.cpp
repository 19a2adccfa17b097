// curvesim: exact similarity detection for rational space curves.

#include <CLI11.hpp>

#include "curvesim/io.hpp"

#include <chrono>
#include <iostream>

using namespace curvesim;

namespace {

Options options_from(const std::string& strategy, bool all, int maxext, int precision,
                     const std::string& t0list) {
    Options o;
    o.strategy = strategy == "h-poly" ? Options::Strategy::HPoly : Options::Strategy::Resultant;
    o.enumerate_all = all;
    o.max_ext_degree = maxext;
    o.precision = precision;
    if (!t0list.empty()) {
        std::stringstream ss(t0list);
        std::string tok;
        while (std::getline(ss, tok, ',')) o.t0_list.push_back(parse_rational(tok));
    }
    return o;
}

int run_similar(const std::string& f1, const std::string& f2, const Options& opts, bool as_json) {
    RationalCurve3 x1 = parse_curve_file(f1);
    RationalCurve3 x2 = parse_curve_file(f2);
    SimilarityReport rep = similar3d(x1, x2, opts);
    std::cout << (as_json ? report_to_json_string(rep) : report_to_text(rep));
    if (rep.inconclusive) return 2;
    return rep.similar ? 0 : 1;
}

double bench_once(const RationalCurve3& a, const RationalCurve3& b, const Options& opts) {
    auto t0 = std::chrono::steady_clock::now();
    (void)similar3d(a, b, opts);
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact similarity detection for rational space curves"};
    app.require_subcommand(1);

    std::string file1, file2, strategy = "resultant", t0list, outfile, outfile2, family;
    bool as_json = false, all = false;
    int maxext = 2, precision = 12, param_j = 0, param_n = 1;
    std::string alpha = "1";

    auto* sim = app.add_subcommand("similar", "decide whether two curves are similar");
    sim->add_option("file1", file1)->required();
    sim->add_option("file2", file2)->required();
    sim->add_flag("--json", as_json, "emit the JSON report");
    sim->add_option("--strategy", strategy, "resultant | h-poly")
        ->check(CLI::IsMember({"resultant", "h-poly"}));
    sim->add_flag("--all", all, "enumerate the full candidate sets (no early termination)");
    sim->add_option("--max-ext-degree", maxext, "cap on the s0 extension degree");
    sim->add_option("--t0-list", t0list, "comma-separated preferred anchors for the helical route");
    sim->add_option("--precision", precision, "decimal digits in approximations");

    auto* cls = app.add_subcommand("classify", "classify a curve");
    cls->add_option("file1", file1)->required();
    cls->add_flag("--json", as_json);
    cls->add_option("--precision", precision);

    auto* gen = app.add_subcommand("gen", "generate test families");
    gen->add_option("family", family, "daisy | power | crunode | helical-alpha")->required();
    gen->add_option("--j", param_j, "daisy index (degree 4j+4)");
    gen->add_option("--n", param_n, "power family index (degree 2n+5)");
    gen->add_option("--alpha", alpha, "helical family parameter");
    gen->add_option("--out", outfile, "output file")->required();
    gen->add_option("--out2", outfile2, "second output file (pair families)");

    auto* seg = app.add_subcommand("segments", "control-polygon similarity");
    seg->add_option("file1", file1)->required();
    seg->add_option("file2", file2)->required();
    seg->add_flag("--json", as_json);
    seg->add_option("--precision", precision);

    auto* ben = app.add_subcommand("bench", "re-run the experiment families and print timings");
    ben->add_option("--max-daisy", param_j, "largest daisy index")->default_val(1);
    ben->add_option("--max-power", param_n, "largest power index")->default_val(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed())
            return run_similar(file1, file2,
                               options_from(strategy, all, maxext, precision, t0list), as_json);

        if (cls->parsed()) {
            RationalCurve3 c = parse_curve_file(file1);
            CurveClass cl = classify(c);
            if (as_json) {
                std::ostringstream o;
                o << "{\"class\":\"" << cl.tag_name() << "\",\"degree\":" << c.degree();
                if (cl.mu_squared)
                    o << ",\"mu_squared\":\"" << to_string(*cl.mu_squared) << "\",\"mu_sign\":"
                      << cl.mu_sign;
                if (cl.mu) o << ",\"mu\":\"" << to_string(*cl.mu) << "\"";
                o << "}\n";
                std::cout << o.str();
            } else {
                std::cout << cl.tag_name() << ", degree " << c.degree();
                if (cl.mu) {
                    std::cout << ", mu = " << to_string(*cl.mu);
                } else if (cl.mu_squared) {
                    std::cout << ", |mu| = sqrt(" << to_string(*cl.mu_squared) << ") ~ "
                              << decimal(
                                     [&] {
                                         auto roots = isolate_real_roots(UniPoly<Rational>(
                                             std::vector<Rational>{-*cl.mu_squared, 0, 1}));
                                         return roots.back();
                                     }(),
                                     precision);
                }
                std::cout << "\n";
            }
            return 0;
        }

        if (gen->parsed()) {
            if (family == "daisy") {
                write_curve_file(outfile, gen_daisy(param_j), "daisy-" + std::to_string(param_j));
            } else if (family == "power") {
                auto [a, b] = gen_power_family(param_n);
                if (outfile2.empty()) throw ParseError("power family needs --out2");
                write_curve_file(outfile, a, "power-" + std::to_string(param_n) + "-1");
                write_curve_file(outfile2, b, "power-" + std::to_string(param_n) + "-2");
            } else if (family == "crunode") {
                auto [a, b] = gen_crunode_pair();
                if (outfile2.empty()) throw ParseError("crunode family needs --out2");
                write_curve_file(outfile, a, "crunode-1");
                write_curve_file(outfile2, b, "crunode-2");
            } else if (family == "helical-alpha") {
                write_curve_file(outfile, gen_helical_alpha(parse_rational(alpha)),
                                 "helical-alpha-" + alpha);
            } else {
                throw ParseError("unknown family: " + family);
            }
            return 0;
        }

        if (seg->parsed()) {
            ControlPolygon P1 = parse_polygon_file(file1);
            ControlPolygon P2 = parse_polygon_file(file2);
            auto ms = polygon_similarity(P1, P2);
            if (ms.empty()) {
                std::cout << (P1.points.size() != P2.points.size()
                                  ? "not similar: control polygons have different lengths\n"
                                  : "not similar\n");
                return 1;
            }
            for (const auto& m : ms) {
                std::cout << "match" << (m.reversed ? " (reversed)" : "") << ": lambda^2 = "
                          << to_string(m.lambda_squared);
                if (m.rational) {
                    std::cout << ", lambda = " << to_string(m.rational->lambda) << ", b = ("
                              << to_string(m.rational->b[0]) << ", " << to_string(m.rational->b[1])
                              << ", " << to_string(m.rational->b[2]) << ")";
                } else if (m.algebraic) {
                    std::cout << ", lambda = "
                              << nf_str(m.algebraic->lambda, "sqrt(" + to_string(m.lambda_squared) + ")");
                }
                std::cout << "\n";
            }
            return 0;
        }

        if (ben->parsed()) {
            Options opts;
            Rational lambda;
            Mat3<Rational> Q;
            Vec3<Rational> b;
            example_similarity(lambda, Q, b);
            std::cout << "family,degree,seconds\n";
            for (int j = 0; j <= param_j; ++j) {
                auto c = gen_daisy(j);
                auto img = apply_similarity(lambda, Q, b, c);
                std::cout << "daisy," << c.degree() << "," << bench_once(c, img, opts) << "\n";
            }
            for (int n = 1; n <= param_n; ++n) {
                auto [a, bb] = gen_power_family(n);
                std::cout << "power," << a.degree() << "," << bench_once(a, bb, opts) << "\n";
            }
            {
                auto c1 = gen_helical_alpha(1), c2 = gen_helical_alpha(-1);
                std::cout << "helical," << c1.degree() << "," << bench_once(c1, c2, opts) << "\n";
                auto [q1, q2] = gen_quint_pair();
                std::cout << "quint," << q1.degree() << "," << bench_once(q1, q2, opts) << "\n";
            }
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PlanarUnsupported& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
