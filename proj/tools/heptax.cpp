#include <CLI11.hpp>

#ifdef HEPTAX_HAVE_OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "heptax/cyclic_smw.hpp"
#include "heptax/dense_oracle.hpp"
#include "heptax/io.hpp"
#include "heptax/kernels.hpp"
#include "heptax/opcount.hpp"

using namespace heptax;

namespace {

enum class CliMode { F64, Rational, Symbolic };

CliMode parse_mode(const std::string& name) {
    if (name == "f64") return CliMode::F64;
    if (name == "rational") return CliMode::Rational;
    if (name == "symbolic") return CliMode::Symbolic;
    throw ParseError("unknown mode \"" + name + "\" (expected f64, rational or symbolic)");
}

RawSystem<double> as_f64(const SystemFile& file) {
    return file.mode == FileMode::F64 ? std::get<RawSystem<double>>(file.data)
                                      : to_f64(std::get<RawSystem<Rational>>(file.data));
}

RawSystem<Rational> as_exact(const SystemFile& file) {
    return file.mode == FileMode::Rational ? std::get<RawSystem<Rational>>(file.data)
                                           : to_exact(std::get<RawSystem<double>>(file.data));
}

RawSystem<TRational> as_symbolic(const RawSystem<Rational>& sys) {
    RawSystem<TRational> out;
    out.kind = sys.kind;
    out.order = sys.order;
    out.d = to_symbolic(sys.d);
    out.a = to_symbolic(sys.a);
    out.A = to_symbolic(sys.A);
    out.C = to_symbolic(sys.C);
    out.b = to_symbolic(sys.b);
    out.B = to_symbolic(sys.B);
    out.D = to_symbolic(sys.D);
    out.rhs = to_symbolic(sys.rhs);
    return out;
}

/// The --tol flag is relative to the matrix scale; is_zero itself compares
/// absolutely, so scale by ||H||_inf here.
ZeroTest zero_test_for(const RawSystem<double>& sys, double rel_tol) {
    if (rel_tol <= 0.0) return ZeroTest{0.0};
    const double norm = sys.kind == SystemKind::Cyclic ? mat_inf_norm(sys.to_cyclic())
                                                       : mat_inf_norm(sys.to_hepta());
    return ZeroTest{rel_tol * norm};
}

template <ScalarField S>
SolveReport<S> run_solve(const RawSystem<S>& sys, const SolveOptions& opt) {
    if (sys.kind == SystemKind::Cyclic) return solve_cyclic(sys.to_cyclic(), sys.rhs, opt);
    return solve(sys.to_hepta(), sys.rhs, opt);
}

double f64_relative_residual(const RawSystem<double>& sys, const std::vector<double>& x) {
    return sys.kind == SystemKind::Cyclic ? relative_residual(sys.to_cyclic(), x, sys.rhs)
                                          : relative_residual(sys.to_hepta(), x, sys.rhs);
}

std::vector<double> to_f64_vec(const std::vector<Rational>& v) {
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.to_double());
    return out;
}

struct SolveArgs {
    std::string input;
    std::string mode = "f64";
    double tol = 0.0;
    std::string out;
    std::string dump_dense;
};

void print_report_header(const RawSystem<double>& f64_view, ScalarMode mode,
                         std::size_t substitutions, const std::string& det_text,
                         const std::vector<double>& x_f64) {
    std::cout << "kind: " << (f64_view.kind == SystemKind::Cyclic ? "cyclic" : "hepta") << "\n";
    std::cout << "order: " << f64_view.order << "\n";
    std::cout << "mode: " << to_string(mode) << "\n";
    std::cout << "determinant: " << det_text << "\n";
    std::cout << "substitutions: " << substitutions << "\n";
    std::cout << "relative_residual_f64: " << f64_relative_residual(f64_view, x_f64) << "\n";
}

int cmd_solve(const SolveArgs& args) {
    SystemFile file = load_system(args.input);
    if (!args.dump_dense.empty()) dump_dense_matrix_market(args.dump_dense, file);
    const CliMode mode = parse_mode(args.mode);

    if (mode == CliMode::F64) {
        RawSystem<double> sys = as_f64(file);
        SolveOptions opt;
        opt.zero_test = zero_test_for(sys, args.tol);
        SolveReport<double> rep = run_solve(sys, opt);
        std::ostringstream det;
        det << rep.det;
        print_report_header(sys, rep.mode, rep.substitutions_used, det.str(), rep.x);
        if (!args.out.empty()) {
            save_solution(args.out, rep.x);
            std::cout << "solution: " << args.out << "\n";
        } else {
            for (double v : rep.x) std::cout << v << "\n";
        }
        return 0;
    }

    RawSystem<Rational> sys = as_exact(file);
    SolveReport<Rational> rep;
    if (mode == CliMode::Rational) {
        rep = run_solve(sys, SolveOptions{});
    } else {
        SolveReport<TRational> srep = run_solve(as_symbolic(sys), SolveOptions{});
        rep.x = to_rational(srep.x);
        rep.det = to_rational(srep.det);
        rep.substitutions_used = srep.substitutions_used;
        rep.mode = ScalarMode::SymbolicT;
    }
    print_report_header(to_f64(sys), rep.mode, rep.substitutions_used, rep.det.to_string(),
                        to_f64_vec(rep.x));
    if (!args.out.empty()) {
        save_solution(args.out, rep.x);
        std::cout << "solution: " << args.out << "\n";
    } else {
        for (const auto& v : rep.x) std::cout << v.to_string() << "\n";
    }
    return 0;
}

int cmd_det(const SolveArgs& args) {
    SystemFile file = load_system(args.input);
    if (!args.dump_dense.empty()) dump_dense_matrix_market(args.dump_dense, file);
    const CliMode mode = parse_mode(args.mode);

    if (mode == CliMode::F64) {
        RawSystem<double> sys = as_f64(file);
        const ZeroTest zt = zero_test_for(sys, args.tol);
        const double det = sys.kind == SystemKind::Cyclic
                               ? det_cyclic(sys.to_cyclic(), zt)
                               : determinant(factorize(sys.to_hepta(), zt));
        std::cout << "determinant: " << det << "\n";
        return 0;
    }

    RawSystem<Rational> sys = as_exact(file);
    Rational det;
    if (mode == CliMode::Rational) {
        det = sys.kind == SystemKind::Cyclic ? det_cyclic(sys.to_cyclic())
                                             : determinant(factorize(sys.to_hepta()));
    } else {
        RawSystem<TRational> ssys = as_symbolic(sys);
        det = to_rational(ssys.kind == SystemKind::Cyclic
                              ? det_cyclic(ssys.to_cyclic())
                              : determinant(factorize(ssys.to_hepta())));
    }
    std::cout << "determinant: " << det.to_string() << "\n";
    return 0;
}

struct VerifyArgs {
    std::string input;
    std::string solution;
    std::string mode;  // empty: infer from the files, which must agree
};

int cmd_verify(const VerifyArgs& args) {
    SystemFile file = load_system(args.input);
    SolutionFile sol = load_solution(args.solution);

    CliMode mode;
    if (!args.mode.empty()) {
        mode = parse_mode(args.mode);
        if (mode == CliMode::Symbolic) mode = CliMode::Rational;
    } else if (file.mode == sol.mode) {
        mode = file.mode == FileMode::F64 ? CliMode::F64 : CliMode::Rational;
    } else {
        throw ModeMismatch("system is " + std::string(file.mode == FileMode::F64 ? "f64" : "rational") +
                           " but solution is " +
                           std::string(sol.mode == FileMode::F64 ? "f64" : "rational") +
                           "; pass --mode to pick the comparison arithmetic");
    }

    if (mode == CliMode::F64) {
        RawSystem<double> sys = as_f64(file);
        const std::vector<double> x = sol.mode == FileMode::F64
                                          ? std::get<std::vector<double>>(sol.x)
                                          : to_f64_vec(std::get<std::vector<Rational>>(sol.x));
        if (x.size() != sys.order) throw BadBandLength("solution length does not match order");
        const double res = sys.kind == SystemKind::Cyclic
                               ? residual_inf(sys.to_cyclic(), x, sys.rhs)
                               : residual_inf(sys.to_hepta(), x, sys.rhs);
        std::cout << "residual_inf: " << res << "\n";
        std::cout << "relative_residual: " << f64_relative_residual(sys, x) << "\n";
        return 0;
    }

    RawSystem<Rational> sys = as_exact(file);
    std::vector<Rational> x;
    if (sol.mode == FileMode::Rational) {
        x = std::get<std::vector<Rational>>(sol.x);
    } else {
        for (double v : std::get<std::vector<double>>(sol.x)) x.push_back(Rational::from_double(v));
    }
    if (x.size() != sys.order) throw BadBandLength("solution length does not match order");
    const Rational res = sys.kind == SystemKind::Cyclic
                             ? residual_inf(sys.to_cyclic(), x, sys.rhs)
                             : residual_inf(sys.to_hepta(), x, sys.rhs);
    const Rational rel = sys.kind == SystemKind::Cyclic
                             ? relative_residual(sys.to_cyclic(), x, sys.rhs)
                             : relative_residual(sys.to_hepta(), x, sys.rhs);
    std::cout << "residual_inf: " << res.to_string() << "\n";
    std::cout << "relative_residual: " << rel.to_string() << "\n";
    return 0;
}

struct GenArgs {
    std::string kind = "cyclic";
    std::size_t order = 0;
    std::uint64_t seed = 1;
    std::string profile = "diagonally-dominant";
    std::string mode = "f64";
    std::string out;
};

int cmd_gen(const GenArgs& args) {
    GenSpec spec;
    spec.kind = args.kind == "hepta" ? SystemKind::Hepta : SystemKind::Cyclic;
    if (args.kind != "hepta" && args.kind != "cyclic")
        throw ParseError("kind must be \"cyclic\" or \"hepta\"");
    spec.order = args.order;
    spec.seed = args.seed;
    spec.profile = parse_profile(args.profile, spec.zero_pivots);

    const CliMode mode = parse_mode(args.mode);
    if (mode == CliMode::F64) {
        if (spec.kind == SystemKind::Cyclic) {
            auto [c, rhs] = generate_cyclic<double>(spec);
            save_system(args.out, make_raw(c, std::move(rhs)));
        } else {
            auto [h, rhs] = generate_hepta<double>(spec);
            save_system(args.out, make_raw(h, std::move(rhs)));
        }
    } else {
        if (spec.kind == SystemKind::Cyclic) {
            auto [c, rhs] = generate_cyclic<Rational>(spec);
            save_system(args.out, make_raw(c, std::move(rhs)));
        } else {
            auto [h, rhs] = generate_hepta<Rational>(spec);
            save_system(args.out, make_raw(h, std::move(rhs)));
        }
    }
    std::cout << "wrote " << args.out << "\n";
    return 0;
}

struct BenchArgs {
    std::string sizes = "1000,2000,4000";
    int reps = 1;
    std::string profile = "diagonally-dominant";
    std::uint64_t seed = 1;
    std::string out;
};

constexpr const char* kBenchHeader = "solver,mode,n,rep,threads,wall_seconds,mult_count,residual_inf";
constexpr std::size_t kOracleCap = 512;

int bench_threads() {
#ifdef HEPTAX_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

int cmd_bench(const BenchArgs& args) {
    std::vector<std::size_t> sizes;
    {
        std::stringstream ss(args.sizes);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            sizes.push_back(static_cast<std::size_t>(std::stoull(item)));
        }
    }
    if (sizes.empty()) throw ParseError("--sizes is empty");
    std::sort(sizes.begin(), sizes.end());

    GenSpec spec;
    spec.kind = SystemKind::Cyclic;
    spec.profile = parse_profile(args.profile, spec.zero_pivots);
    spec.seed = args.seed;

    std::ostringstream csv;
    csv << kBenchHeader << "\n";
    using clock = std::chrono::steady_clock;

    for (std::size_t n : sizes) {
        spec.order = n;
        auto [c, rhs] = generate_cyclic<double>(spec);

        // One counted serial run pins the multiplication count for this n.
        auto counted = count_scalars(c);
        std::vector<Counted<double>> crhs(rhs.begin(), rhs.end());
        OpCounts::reset();
        (void)solve_cyclic(counted, crhs);
        const std::uint64_t banded_mults = OpCounts::mults;

        for (int rep = 0; rep < args.reps; ++rep) {
            const auto t0 = clock::now();
            auto report = solve_cyclic(c, rhs);
            const double secs = std::chrono::duration<double>(clock::now() - t0).count();
            csv << "banded,f64," << n << "," << rep << ",1," << secs << "," << banded_mults
                << "," << residual_inf(c, report.x, rhs) << "\n";
        }
#ifdef HEPTAX_HAVE_OPENMP
        if (bench_threads() > 1) {
            SolveOptions par;
            par.exec = Exec::Parallel;
            for (int rep = 0; rep < args.reps; ++rep) {
                const auto t0 = clock::now();
                auto report = solve_cyclic(c, rhs, par);
                const double secs = std::chrono::duration<double>(clock::now() - t0).count();
                csv << "banded,f64," << n << "," << rep << "," << bench_threads() << "," << secs
                    << "," << banded_mults << "," << residual_inf(c, report.x, rhs) << "\n";
            }
        }
#endif
        if (n <= kOracleCap) {
            auto dense = to_dense(c);
            DenseMatrix<Counted<double>> cdense(n);
            for (std::size_t i = 0; i < dense.entries.size(); ++i)
                cdense.entries[i] = Counted<double>{dense.entries[i]};
            OpCounts::reset();
            (void)dense_solve(cdense, crhs);
            const std::uint64_t dense_mults = OpCounts::mults;
            for (int rep = 0; rep < args.reps; ++rep) {
                const auto t0 = clock::now();
                auto x = dense_solve(dense, rhs);
                const double secs = std::chrono::duration<double>(clock::now() - t0).count();
                csv << "dense,f64," << n << "," << rep << ",1," << secs << "," << dense_mults
                    << "," << residual_inf(c, x, rhs) << "\n";
            }
        }
    }

    if (args.out.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream f(args.out);
        if (!f) throw ParseError(args.out + ": cannot open for writing");
        f << csv.str();
        std::cout << "wrote " << args.out << "\n";
    }
    return 0;
}

void apply_degree_cap_env() {
    if (const char* cap = std::getenv("HEPTAX_DEGREE_CAP")) {
        try {
            set_symbolic_degree_cap(std::stoi(cap));
        } catch (const std::exception&) {
            throw ParseError("HEPTAX_DEGREE_CAP is not an integer");
        }
    }
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const SingularMatrix*>(&e) != nullptr) return 2;
    if (dynamic_cast<const SingularCornerBlock*>(&e) != nullptr) return 2;
    if (dynamic_cast<const BreakdownInFloatMode*>(&e) != nullptr) return 4;
    if (dynamic_cast<const ParseError*>(&e) != nullptr) return 3;
    if (dynamic_cast<const ValidationError*>(&e) != nullptr) return 3;
    if (dynamic_cast<const ModeMismatch*>(&e) != nullptr) return 3;
    return 5;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solvers for heptadiagonal and cyclic heptadiagonal linear systems"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Solve a system file");
    solve_cmd->add_option("input", solve_args.input, "System file (JSON)")->required();
    solve_cmd->add_option("--mode", solve_args.mode, "f64 | rational | symbolic (default f64)");
    solve_cmd->add_option("--tol", solve_args.tol,
                          "Relative zero-pivot tolerance, f64 mode (default 0 = exact)");
    solve_cmd->add_option("--out", solve_args.out, "Write the solution to this file");
    solve_cmd->add_option("--dump-dense", solve_args.dump_dense,
                          "Debug: write the dense matrix in MatrixMarket array format");

    SolveArgs det_args;
    auto* det_cmd = app.add_subcommand("det", "Determinant of a system file");
    det_cmd->add_option("input", det_args.input, "System file (JSON)")->required();
    det_cmd->add_option("--mode", det_args.mode, "f64 | rational | symbolic (default f64)");
    det_cmd->add_option("--tol", det_args.tol, "Relative zero-pivot tolerance (f64 mode)");
    det_cmd->add_option("--dump-dense", det_args.dump_dense,
                        "Debug: write the dense matrix in MatrixMarket array format");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Residual of a solution against a system");
    verify_cmd->add_option("input", verify_args.input, "System file (JSON)")->required();
    verify_cmd->add_option("solution", verify_args.solution, "Solution file (JSON)")->required();
    verify_cmd->add_option("--mode", verify_args.mode,
                           "Comparison arithmetic when the file modes differ");

    GenArgs gen_args;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a reproducible random system");
    gen_cmd->add_option("--kind", gen_args.kind, "cyclic | hepta (default cyclic)");
    gen_cmd->add_option("--n", gen_args.order, "Matrix order")->required();
    gen_cmd->add_option("--seed", gen_args.seed, "Random seed (default 1)");
    gen_cmd->add_option("--profile", gen_args.profile,
                        "diagonally-dominant | uniform | zero-leading-pivots(k)");
    gen_cmd->add_option("--mode", gen_args.mode, "f64 | rational (default f64)");
    gen_cmd->add_option("--out", gen_args.out, "Output system file")->required();

    BenchArgs bench_args;
    auto* bench_cmd = app.add_subcommand("bench", "Banded solver vs dense reference, CSV report");
    bench_cmd->add_option("--sizes", bench_args.sizes, "Comma-separated orders");
    bench_cmd->add_option("--reps", bench_args.reps, "Repetitions per size (default 1)");
    bench_cmd->add_option("--profile", bench_args.profile, "Generator profile");
    bench_cmd->add_option("--seed", bench_args.seed, "Random seed (default 1)");
    bench_cmd->add_option("--out", bench_args.out, "Write the CSV here instead of stdout");

    try {
        app.parse(argc, argv);
        apply_degree_cap_env();
        if (solve_cmd->parsed()) return cmd_solve(solve_args);
        if (det_cmd->parsed()) return cmd_det(det_args);
        if (verify_cmd->parsed()) return cmd_verify(verify_args);
        if (gen_cmd->parsed()) return cmd_gen(gen_args);
        if (bench_cmd->parsed()) return cmd_bench(bench_args);
        return 5;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 3;
    } catch (const BreakdownInFloatMode& e) {
        std::cerr << e.what() << "\n";
        std::cerr << "hint: rerun with --mode symbolic\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return exit_code_for(e);
    }
}
