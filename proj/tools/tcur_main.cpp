// Command-line experiment runner: tensor generation, CUR approximation with
// the different slice samplers, rank sweeps and error-bound verification.
// Results are CSV on stdout so any external plotter can consume them.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <tcur/tcur.hpp>

namespace {

using tcur::Index;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::array<Index, 3> parse_dims(const std::string& text) {
    std::array<Index, 3> dims{};
    char sep1 = 0, sep2 = 0;
    long long a = 0, b = 0, c = 0;
    if (std::sscanf(text.c_str(), "%lld%c%lld%c%lld", &a, &sep1, &b, &sep2, &c) != 5 ||
        sep1 != 'x' || sep2 != 'x' || a < 1 || b < 1 || c < 1)
        throw CLI::ValidationError("--dims", "expected I1xI2xI3 with positive integers");
    dims = {static_cast<Index>(a), static_cast<Index>(b), static_cast<Index>(c)};
    return dims;
}

constexpr const char* kCsvHeader =
    "method,rank,trial,seed,error,eta_p,eta_q,wall_seconds,wall_seconds_with_basis";

struct Record {
    std::string method;
    Index rank = 0;
    Index trial = 0;
    std::optional<std::uint64_t> seed;
    double error = 0.0;
    double eta_p = 0.0;
    double eta_q = 0.0;
    double wall_seconds = 0.0;
    double wall_with_basis = 0.0;
};

void print_record(const Record& r) {
    std::string seed = r.seed ? std::to_string(*r.seed) : "";
    std::printf("%s,%lld,%lld,%s,%.17g,%.17g,%.17g,%.6f,%.6f\n", r.method.c_str(),
                static_cast<long long>(r.rank), static_cast<long long>(r.trial), seed.c_str(),
                r.error, r.eta_p, r.eta_q, r.wall_seconds, r.wall_with_basis);
    std::fflush(stdout);
}

struct ApproxOptions {
    std::string input;
    std::string method = "tdeim";
    Index rank = 1;
    Index extended_rank = 0;
    std::string middle = "optimal";
    std::optional<std::uint64_t> seed;
    bool no_header = false;
};

struct SweepOptions {
    std::string input;
    std::string methods = "tdeim";
    Index rank_min = 1;
    Index rank_max = 1;
    Index trials = 1;
    std::uint64_t seed = 0;
    std::string middle = "optimal";
    Index htdeim_base_rank = 0;  // 0: ceil(rank/2)
};

tcur::MiddleVariant parse_middle(const std::string& text) {
    if (text == "optimal") return tcur::MiddleVariant::optimal;
    if (text == "intersection") return tcur::MiddleVariant::intersection;
    throw CLI::ValidationError("--middle", "expected 'optimal' or 'intersection'");
}

tcur::SamplerMethod parse_method_or_fail(const std::string& name) {
    auto m = tcur::parse_sampler(name);
    if (!m)
        throw CLI::ValidationError("--method", "unknown sampler '" + name + "'");
    return *m;
}

// One sampler + CUR run against precomputed factors. Only the selection and
// model assembly are timed; error and constants are computed outside.
Record run_once(const tcur::Tensor3& x, const tcur::TSvdFactors& factors,
                const tcur::SamplerConfig& config, tcur::MiddleVariant middle,
                double basis_seconds, Index trial) {
    auto start = std::chrono::steady_clock::now();
    auto [p, q] = tcur::select_slices(config, factors, x.i1(), x.i2());
    tcur::CurModel model = tcur::build_cur(x, p, q, middle);
    double assembly = seconds_since(start);

    Index selected = p.size();
    tcur::TSvdFactors eta_basis = factors;
    if (config.method == tcur::SamplerMethod::htdeim && selected > factors.rank) {
        // constants need a basis as wide as the selection
        eta_basis = tcur::truncated_tsvd(x, selected);
    }
    tcur::ErrorConstants constants =
        tcur::error_constants(eta_basis.u, p, eta_basis.v, q);

    Record rec;
    rec.method = tcur::sampler_name(config.method);
    rec.rank = selected;
    rec.trial = trial;
    rec.seed = config.seed;
    rec.error = tcur::cur_error(x, model);
    rec.eta_p = constants.eta_p;
    rec.eta_q = constants.eta_q;
    rec.wall_seconds = assembly;
    rec.wall_with_basis = basis_seconds + assembly;
    return rec;
}

int cmd_approx(const ApproxOptions& opt) {
    tcur::Tensor3 x = tcur::read_tensor(opt.input);
    const Index max_rank = std::min(x.i1(), x.i2());
    if (opt.rank < 1 || opt.rank > max_rank) {
        std::cerr << "error: rank must be in [1, " << max_rank << "]\n";
        return 2;
    }
    tcur::SamplerConfig config;
    config.method = parse_method_or_fail(opt.method);
    config.rank = opt.rank;
    config.extended_rank = opt.extended_rank;
    config.seed = opt.seed;
    if (config.method == tcur::SamplerMethod::htdeim && opt.extended_rank != 0 &&
        (opt.extended_rank < opt.rank || opt.extended_rank > max_rank)) {
        std::cerr << "error: extended rank must be in [rank, " << max_rank << "]\n";
        return 2;
    }

    auto start = std::chrono::steady_clock::now();
    tcur::TSvdFactors factors = tcur::truncated_tsvd(x, opt.rank);
    double basis_seconds = seconds_since(start);

    Record rec = run_once(x, factors, config, parse_middle(opt.middle), basis_seconds, 0);
    if (!opt.no_header) std::printf("%s\n", kCsvHeader);
    print_record(rec);
    return 0;
}

int cmd_sweep(const SweepOptions& opt) {
    tcur::Tensor3 x = tcur::read_tensor(opt.input);
    const Index max_rank = std::min(x.i1(), x.i2());
    if (opt.rank_min < 1 || opt.rank_max < opt.rank_min || opt.rank_max > max_rank) {
        std::cerr << "error: rank range must satisfy 1 <= min <= max <= " << max_rank << "\n";
        return 2;
    }
    if (opt.trials < 1) {
        std::cerr << "error: trials must be positive\n";
        return 2;
    }

    std::vector<tcur::SamplerMethod> methods;
    std::string token;
    for (char ch : opt.methods + ",") {
        if (ch == ',') {
            if (!token.empty()) methods.push_back(parse_method_or_fail(token));
            token.clear();
        } else {
            token += ch;
        }
    }
    if (methods.empty()) {
        std::cerr << "error: no sampler methods given\n";
        return 2;
    }

    tcur::MiddleVariant middle = parse_middle(opt.middle);
    std::printf("%s\n", kCsvHeader);

    // basis cache: one t-SVD per distinct basis rank, with its wall time
    std::map<Index, std::pair<tcur::TSvdFactors, double>> bases;
    auto basis_at = [&](Index r) -> std::pair<const tcur::TSvdFactors&, double> {
        auto it = bases.find(r);
        if (it == bases.end()) {
            auto start = std::chrono::steady_clock::now();
            tcur::TSvdFactors f = tcur::truncated_tsvd(x, r);
            double secs = seconds_since(start);
            it = bases.emplace(r, std::make_pair(std::move(f), secs)).first;
        }
        return {it->second.first, it->second.second};
    };

    for (Index rank = opt.rank_min; rank <= opt.rank_max; ++rank) {
        for (tcur::SamplerMethod method : methods) {
            tcur::SamplerConfig config;
            config.method = method;
            config.rank = rank;
            Index basis_rank = rank;
            if (method == tcur::SamplerMethod::htdeim) {
                Index base = opt.htdeim_base_rank > 0 ? opt.htdeim_base_rank : (rank + 1) / 2;
                base = std::min(base, rank);
                config.rank = base;
                config.extended_rank = rank;
                basis_rank = base;
            }
            auto [factors, basis_seconds] = basis_at(basis_rank);

            const bool randomized = method == tcur::SamplerMethod::uniform ||
                                    method == tcur::SamplerMethod::leverage_sampling;
            const Index trials = randomized ? opt.trials : 1;
            for (Index trial = 0; trial < trials; ++trial) {
                if (randomized) config.seed = opt.seed + static_cast<std::uint64_t>(trial);
                print_record(run_once(x, factors, config, middle, basis_seconds, trial));
            }
        }
    }
    return 0;
}

int cmd_verify(const std::string& input, Index rank) {
    tcur::Tensor3 x = tcur::read_tensor(input);
    const Index max_rank = std::min(x.i1(), x.i2());
    if (rank < 1 || rank > max_rank) {
        std::cerr << "error: rank must be in [1, " << max_rank << "]\n";
        return 2;
    }
    tcur::TSvdFactors factors = tcur::truncated_tsvd(x, rank);
    tcur::IndexSet p = tcur::tdeim(factors.u);
    tcur::IndexSet q = tcur::tdeim(factors.v);
    tcur::CurModel model = tcur::build_cur(x, p, q, tcur::MiddleVariant::optimal);
    tcur::ErrorConstants constants = tcur::error_constants(factors.u, p, factors.v, q);
    tcur::BoundReport report = tcur::verify_bound(x, model, constants);

    std::printf("eta_p %.17g\n", report.eta_p);
    std::printf("eta_q %.17g\n", report.eta_q);
    std::printf("tail_sq %.17g\n", report.tail_sq);
    std::printf("theorem_lhs %.17g\n", report.theorem_lhs);
    std::printf("theorem_rhs %.17g\n", report.theorem_rhs);
    std::printf("theorem_pass %s\n", report.theorem_pass ? "true" : "false");
    std::printf("projector_lhs %.17g\n", report.projector_lhs);
    std::printf("projector_rhs %.17g\n", report.projector_rhs);
    std::printf("projector_pass %s\n", report.projector_pass ? "true" : "false");
    return report.theorem_pass && report.projector_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tubal-tensor CUR approximation toolkit"};
    app.require_subcommand(1);

    // generate
    auto* generate = app.add_subcommand("generate", "write a T3D1 tensor file");
    generate->require_subcommand(1);

    double syn_p = 3.0;
    std::string syn_dims = "100x100x100";
    std::string out_path;
    auto* synthetic = generate->add_subcommand("synthetic",
                                               "X(i,j,k) = (i^p + j^p + k^p)^(-1/p)");
    synthetic->add_option("--p", syn_p, "exponent p > 0")->required();
    synthetic->add_option("--dims", syn_dims, "shape I1xI2xI3")->required();
    synthetic->add_option("-o,--out", out_path, "output file")->required();

    std::string fn_name;
    bool booth_literal = false;
    auto* function = generate->add_subcommand("function",
                                              "100x100x100 optimization-function tensor");
    function->add_option("--name", fn_name,
                         "exponential|rastrigin|booth|matyas|easom")->required();
    function->add_flag("--booth-literal", booth_literal,
                       "booth with the second term unsquared");
    function->add_option("-o,--out", out_path, "output file")->required();

    // approx
    ApproxOptions approx_opt;
    auto* approx = app.add_subcommand("approx", "one sampler + CUR run, CSV row on stdout");
    approx->add_option("-i,--input", approx_opt.input, "T3D1 tensor file")->required();
    approx->add_option("-m,--method", approx_opt.method,
                       "tdeim|htdeim|top_leverage|leverage_sampling|uniform");
    approx->add_option("-r,--rank", approx_opt.rank, "tubal rank (basis width)")->required();
    approx->add_option("--extended-rank", approx_opt.extended_rank,
                       "htdeim only: total indices, >= rank");
    approx->add_option("--middle", approx_opt.middle, "optimal|intersection");
    std::uint64_t approx_seed = 0;
    auto* approx_seed_opt = approx->add_option("-s,--seed", approx_seed,
                                               "seed for randomized samplers");
    approx->add_flag("--no-header", approx_opt.no_header, "omit the CSV header row");

    // sweep
    SweepOptions sweep_opt;
    auto* sweep = app.add_subcommand("sweep", "rank sweep over samplers, CSV table on stdout");
    sweep->add_option("-i,--input", sweep_opt.input, "T3D1 tensor file")->required();
    sweep->add_option("-m,--methods", sweep_opt.methods, "comma-separated sampler list")
        ->required();
    sweep->add_option("--rank-min", sweep_opt.rank_min, "first rank")->required();
    sweep->add_option("--rank-max", sweep_opt.rank_max, "last rank")->required();
    sweep->add_option("-t,--trials", sweep_opt.trials, "repeats for randomized samplers");
    sweep->add_option("-s,--seed", sweep_opt.seed, "base seed; trial t uses seed + t");
    sweep->add_option("--middle", sweep_opt.middle, "optimal|intersection");
    sweep->add_option("--htdeim-base-rank", sweep_opt.htdeim_base_rank,
                      "htdeim internal rank (default ceil(rank/2))");

    // verify
    std::string verify_input;
    Index verify_rank = 1;
    auto* verify = app.add_subcommand("verify", "check the CUR error bound for TDEIM");
    verify->add_option("-i,--input", verify_input, "T3D1 tensor file")->required();
    verify->add_option("-r,--rank", verify_rank, "tubal rank")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (synthetic->parsed()) {
            tcur::write_tensor(out_path, tcur::gen_synthetic(syn_p, parse_dims(syn_dims)));
            return 0;
        }
        if (function->parsed()) {
            auto kind = tcur::parse_function(fn_name);
            if (!kind) {
                std::cerr << "error: unknown function '" << fn_name << "'\n";
                return 2;
            }
            tcur::write_tensor(out_path, tcur::gen_function_tensor(*kind, booth_literal));
            return 0;
        }
        if (approx->parsed()) {
            if (approx_seed_opt->count() > 0) approx_opt.seed = approx_seed;
            return cmd_approx(approx_opt);
        }
        if (sweep->parsed()) return cmd_sweep(sweep_opt);
        if (verify->parsed()) return cmd_verify(verify_input, verify_rank);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
