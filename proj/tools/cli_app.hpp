#pragma once

#include "cospec/balanced_spectrum.hpp"
#include "cospec/completion.hpp"
#include "cospec/cotree.hpp"
#include "cospec/diagonalize.hpp"
#include "cospec/interlacing.hpp"
#include "cospec/oracle.hpp"
#include "cospec/random_cotree.hpp"
#include "cospec/recognize.hpp"
#include "cospec/render.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace cospec::cli {

namespace detail {

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline BalancedParams parse_params(const std::string& csv) {
    BalancedParams p;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            p.a.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("balanced parameters: cannot parse '" + item + "'");
        }
    }
    p.validate();
    return p;
}

struct Input {
    std::string cotree_path;
    std::string edges_path;
    std::string balanced;

    bool is_balanced() const { return !balanced.empty(); }

    Cotree load_cotree() const {
        if (!cotree_path.empty()) return parse_cotree(slurp(cotree_path));
        if (!edges_path.empty()) return recognize_cograph(read_edge_list(slurp(edges_path)));
        return balanced_cotree(parse_params(balanced));
    }
    Graph load_graph() const {
        if (!edges_path.empty()) return read_edge_list(slurp(edges_path));
        return expand_to_graph(load_cotree());
    }

    void attach(CLI::App* cmd) {
        auto* group = cmd->add_option_group("input", "exactly one input source");
        group->add_option("--cotree", cotree_path, "cotree DSL file (*.ct)");
        group->add_option("--edges", edges_path, "edge list file, one 'u v' per line");
        group->add_option("--balanced", balanced, "balanced parameters a1,a2,...,ar");
        group->require_option(1);
    }
};

inline void print_spectrum_text(std::ostream& out, const std::map<Int, Int>& ms) {
    for (auto& [e, m] : ms) out << e.str() << " " << m.str() << "\n";
}

}  // namespace detail

/// Dispatches one invocation. Exit codes: 0 success, 1 domain error
/// (bad input data, not a cograph, invalid parameters), 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact spectral toolkit for cographs"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    detail::Input spectrum_in, inertia_in, locate_in, interlace_in, recognize_in;
    std::string at_text, tol_text;
    long long seed = 0, count = 100, max_n = 32;

    CLI::App* spectrum = app.add_subcommand("spectrum", "integer eigenvalues with multiplicities");
    spectrum->fallthrough();
    spectrum_in.attach(spectrum);

    CLI::App* inertia = app.add_subcommand("inertia", "eigenvalue counts around a rational point");
    inertia->fallthrough();
    inertia_in.attach(inertia);
    inertia->add_option("--at", at_text, "probe point, 'p' or 'p/q'")->required();

    CLI::App* locate = app.add_subcommand("locate", "isolate every eigenvalue");
    locate->fallthrough();
    locate_in.attach(locate);
    locate->add_option("--tol", tol_text, "interval width bound, 'p' or 'p/q' (default 1/2^40)");

    CLI::App* interlace_cmd = app.add_subcommand("interlace", "certified bounds via balanced completion");
    interlace_cmd->fallthrough();
    interlace_in.attach(interlace_cmd);

    CLI::App* recognize = app.add_subcommand("recognize", "build the cotree of a cograph");
    recognize->fallthrough();
    recognize_in.attach(recognize);

    CLI::App* verify = app.add_subcommand("verify", "random cross-check against the dense oracle");
    verify->fallthrough();
    verify->add_option("--seed", seed, "generator seed")->capture_default_str();
    verify->add_option("--count", count, "number of random cotrees")->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--max-n", max_n, "largest leaf count")->check(CLI::Range(1LL, 256LL))
        ->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help and friends
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    Rational at, tol = default_locate_tolerance();
    try {
        if (!at_text.empty()) at = Rational::parse(at_text);
        if (!tol_text.empty()) tol = Rational::parse(tol_text);
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 2;
    }

    bool json = format == "json";
    try {
        if (*spectrum) {
            if (spectrum_in.is_balanced()) {
                BalancedSpectrum s = full_spectrum(detail::parse_params(spectrum_in.balanced));
                if (json) out << spectrum_to_json(s.multiset()).dump(2) << "\n";
                else detail::print_spectrum_text(out, s.multiset());
            } else {
                SpectrumMultiset s = integer_spectrum(spectrum_in.load_cotree());
                if (json) {
                    nlohmann::json o{{"n", int_to_json(s.n)},
                                     {"integral", spectrum_to_json(s.integral)},
                                     {"residual", int_to_json(s.residual_count)}};
                    out << o.dump(2) << "\n";
                } else {
                    detail::print_spectrum_text(out, s.integral);
                    out << "residual " << s.residual_count.str() << "\n";
                }
            }
        } else if (*inertia) {
            CountTriple c = eigenvalue_counts(inertia_in.load_cotree(), at);
            if (json)
                out << nlohmann::json{{"greater", c.greater}, {"equal", c.equal}, {"less", c.less}}.dump(2)
                    << "\n";
            else
                out << "greater=" << c.greater << " equal=" << c.equal << " less=" << c.less << "\n";
        } else if (*locate) {
            auto items = locate_eigenvalues(locate_in.load_cotree(), tol);
            if (json) {
                out << located_to_json(items).dump(2) << "\n";
            } else {
                for (const auto& it : items) {
                    if (it.exact) out << "exact " << it.value.str() << " mult " << it.count.str() << "\n";
                    else out << "interval (" << it.lo.str() << ", " << it.hi.str() << ") count "
                             << it.count.str() << "\n";
                }
            }
        } else if (*interlace_cmd) {
            Cotree t = interlace_in.load_cotree();
            SpectrumEstimate est = estimate_spectrum(t);
            if (est.completion_order > Int(16) * Int(t.leaf_count()))
                err << "note: completion order " << est.completion_order.str() << " far exceeds target order "
                    << t.leaf_count() << "; bounds may be wide\n";
            if (json) {
                nlohmann::json params = nlohmann::json::array();
                for (long long a : est.params.a) params.push_back(a);
                nlohmann::json o{{"params", std::move(params)},
                                 {"completion_order", int_to_json(est.completion_order)},
                                 {"bounds", bounds_to_json(est.bounds)}};
                out << o.dump(2) << "\n";
            } else {
                out << "params ";
                for (std::size_t i = 0; i < est.params.a.size(); ++i)
                    out << (i ? "," : "") << est.params.a[i];
                out << "\ncompletion-order " << est.completion_order.str() << "\n";
                for (std::size_t k = 1; k <= est.bounds.m; ++k)
                    out << "beta[" << k << "] in " << bound_to_text(est.bounds.bounds[k - 1]) << "\n";
            }
        } else if (*recognize) {
            Cotree t = recognize_cograph(recognize_in.load_graph());
            if (json) out << cotree_to_json(t).dump(2) << "\n";
            else out << serialize_cotree(t) << "\n";
        } else if (*verify) {
            std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
            long long checks = 0, failures = 0;
            RandomCotreeOptions opt;
            opt.max_leaves = static_cast<std::size_t>(max_n);
            for (long long i = 0; i < count; ++i) {
                Cotree t = random_cotree(rng, opt);
                DenseSymmetric mat = adjacency_matrix(expand_to_graph(t));
                long long n = static_cast<long long>(t.leaf_count());
                std::uniform_int_distribution<long long> shift(-n, n);
                for (int s = 0; s < 3; ++s) {
                    Rational x(shift(rng));
                    InertiaTriple fast = diagonalize_shifted(t, x).inertia;
                    InertiaTriple slow = exact_inertia(mat, x);
                    ++checks;
                    if (!(fast == slow)) {
                        ++failures;
                        err << "inertia mismatch on cotree " << serialize_cotree(t) << " at shift "
                            << x.str() << "\n";
                    }
                }
                // No eigenvalue may fall inside the open interval (-1, 0).
                CountTriple c0 = eigenvalue_counts(t, Rational(0));
                CountTriple c1 = eigenvalue_counts(t, Rational(-1));
                ++checks;
                if (c0.less != c1.less + c1.equal) {
                    ++failures;
                    err << "eigenvalue inside (-1,0) on cotree " << serialize_cotree(t) << "\n";
                }
            }
            if (json)
                out << nlohmann::json{{"seed", seed}, {"cotrees", count}, {"checks", checks},
                                      {"failures", failures}}.dump(2)
                    << "\n";
            else
                out << "verified " << count << " cotrees (seed " << seed << "): " << checks << " checks, "
                    << failures << " failures\n";
            return failures == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace cospec::cli
