#include "khinlab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <random>

#include <CLI11.hpp>

#include "khinlab/constants.hpp"
#include "khinlab/errors.hpp"
#include "khinlab/forms.hpp"
#include "khinlab/io.hpp"
#include "khinlab/moments.hpp"
#include "khinlab/witnesses.hpp"

namespace khinlab::cli {

namespace {

using io::Json;

struct GlobalOptions {
    std::string out_dir;
    std::string format = "json";
    std::uint64_t seed = 0;
    std::optional<int> threads;
    int bit_budget = kDefaultBitBudget;
};

struct ConstantsArgs {
    std::string p;
    std::optional<int> M;
    std::optional<double> r;
    int m = 1;
};

struct MomentArgs {
    std::string tensor_file;
    double r = 0.0;
};

struct WitnessArgs {
    int m = 1;
    double r = 0.0;
    std::vector<std::uint64_t> N;
    std::string kind = "auto";
};

struct VerifyArgs {
    std::string form_file;
    std::string p;
    std::string which = "C";
    bool random = false;
    int M = 2;
    std::size_t N = 3;
};

/// A finished command: the document for stdout plus any extra files.
struct Outcome {
    std::string name;
    Json document;
    std::vector<std::pair<std::string, std::string>> files; // (filename, contents)
    int exit_code = kSuccess;
};

EnumerationOptions enumeration_options(const GlobalOptions& g)
{
    EnumerationOptions options;
    options.bit_budget = g.bit_budget;
    if (g.threads) {
        options.threads = *g.threads;
    } else if (const char* env = std::getenv("KHINLAB_THREADS")) {
        options.threads = std::max(0, std::atoi(env));
    }
    return options;
}

Outcome cmd_constants(const ConstantsArgs& args)
{
    const Exponent p = parse_exponent(args.p);
    const auto& breakpoint = cached_breakpoint();
    Json doc;
    doc["command"] = "constants";
    doc["p0"] = breakpoint.p0;
    doc["p0_residual"] = breakpoint.residual;
    doc["p"] = io::exponent_to_json(p);
    const auto a = haagerup_constant(p);
    doc["A"] = a.value;
    doc["branch"] = to_string(a.branch);
    if (args.r) {
        Json k;
        k["m"] = args.m;
        k["r"] = *args.r;
        k["value"] = multiple_khintchine_constant(args.m, *args.r);
        doc["K"] = k;
    }
    if (args.M) {
        Json c;
        c["M"] = *args.M;
        c["value"] = mixed_littlewood_constant(*args.M, p);
        doc["C"] = c;
    }
    return {"constants", doc, {}, kSuccess};
}

Outcome cmd_moment(const MomentArgs& args, const EnumerationOptions& options)
{
    const auto file = io::read_tensor_file(args.tensor_file);
    const auto result = exact_moment(file.tensor, args.r, options);
    Json doc;
    doc["command"] = "moment";
    doc["input_hash"] = file.hash;
    doc["shape"] = file.tensor.shape();
    const Json fields = io::to_json(result);
    for (const auto& [key, value] : fields.items()) {
        doc[key] = value;
    }
    doc["l2"] = l2_of_tensor(file.tensor);
    return {"moment", doc, {}, kSuccess};
}

Outcome cmd_witness(const WitnessArgs& args, const EnumerationOptions& options)
{
    std::optional<WitnessKind> kind;
    if (args.kind == "block") {
        kind = WitnessKind::BlockOnes;
    } else if (args.kind == "uniform") {
        kind = WitnessKind::Uniform;
    }
    const auto reports = lower_bound_sweep(args.m, args.r, args.N, kind, options);
    Json doc;
    doc["command"] = "witness";
    doc["m"] = args.m;
    doc["r"] = args.r;
    const WitnessKind used =
        kind.value_or(args.r <= cached_breakpoint().p0 ? WitnessKind::BlockOnes : WitnessKind::Uniform);
    doc["kind"] = to_string(used);
    doc["reports"] = Json::array();
    for (const auto& r : reports) {
        doc["reports"].push_back(io::to_json(r));
    }
    return {"witness", doc, {{"witness.csv", io::witness_csv(reports)}}, kSuccess};
}

CoefficientTensor random_tensor(std::size_t order, std::size_t N, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    auto tensor = CoefficientTensor::zeros(std::vector<std::size_t>(order, N));
    for (double& e : tensor.mutable_entries()) {
        e = dist(rng);
    }
    return tensor;
}

Outcome cmd_verify(const VerifyArgs& args, const GlobalOptions& g, const EnumerationOptions& options)
{
    std::optional<CoefficientTensor> tensor;
    std::string hash;
    if (args.random) {
        if (args.M < 1 || args.N < 1) {
            throw DomainError("--random needs --M >= 1 and --N >= 1");
        }
        tensor = random_tensor(static_cast<std::size_t>(args.M), args.N, g.seed);
        hash = io::fnv1a_hex(io::dump_json(io::tensor_to_json(*tensor), -1));
    } else {
        if (args.form_file.empty()) {
            throw DomainError("verify needs --form FILE or --random");
        }
        auto file = io::read_tensor_file(args.form_file);
        tensor = std::move(file.tensor);
        hash = file.hash;
    }

    const Exponent p = parse_exponent(args.p);
    InequalityReport report{};
    if (args.which == "equivalence") {
        if (p.is_infinite()) {
            throw DomainError("equivalence requires p in [1, 2]");
        }
        report = equivalence_report(*tensor, p.value(), options);
    } else {
        const auto which = args.which == "D" ? MixedTheorem::MixedD : MixedTheorem::MixedC;
        report = verify_mixed_littlewood(MultilinearForm(*tensor, p), which, options);
    }

    Json doc;
    doc["command"] = "verify";
    doc["which"] = args.which;
    doc["p"] = io::exponent_to_json(p);
    doc["shape"] = tensor->shape();
    doc["input_hash"] = hash;
    const Json fields = io::to_json(report);
    for (const auto& [key, value] : fields.items()) {
        doc[key] = value;
    }
    return {"verify", doc, {}, report.holds ? kSuccess : kInequalityViolated};
}

std::string join_results(const CLI::Option& opt)
{
    std::string joined;
    for (const auto& r : opt.results()) {
        if (!joined.empty()) {
            joined += ',';
        }
        joined += r;
    }
    return joined;
}

void write_file(const std::filesystem::path& path, const std::string& contents)
{
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot write " + path.string());
    }
    f << contents;
}

void emit(const Outcome& outcome, const GlobalOptions& g, const std::map<std::string, std::string>& parameters,
          long long wall_ms, std::ostream& out)
{
    const bool csv = g.format == "csv" && !outcome.files.empty();
    out << (csv ? outcome.files.front().second : io::dump_json(outcome.document) + "\n");

    if (g.out_dir.empty()) {
        return;
    }
    const std::filesystem::path dir(g.out_dir);
    std::filesystem::create_directories(dir);
    std::vector<std::string> outputs;
    const auto json_path = dir / (outcome.name + ".json");
    write_file(json_path, io::dump_json(outcome.document) + "\n");
    outputs.push_back(json_path.string());
    for (const auto& [name, contents] : outcome.files) {
        write_file(dir / name, contents);
        outputs.push_back((dir / name).string());
    }
    const auto manifest_path = dir / "manifest.json";
    outputs.push_back(manifest_path.string());

    Json manifest;
    manifest["command"] = outcome.name;
    manifest["parameters"] = Json::object();
    for (const auto& [k, v] : parameters) {
        manifest["parameters"][k] = v;
    }
    manifest["bit_budget"] = g.bit_budget;
    manifest["outputs"] = outputs;
    manifest["wall_time_ms"] = wall_ms;
    write_file(manifest_path, io::dump_json(manifest) + "\n");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"khinlab: exact Khintchine and mixed Littlewood constant checks"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--out", g.out_dir, "Also write result files and manifest.json into DIR");
    app.add_option("--format", g.format, "Stdout format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", g.seed, "Seed for randomized inputs");
    app.add_option("--threads", g.threads, "Worker cap (fallback: KHINLAB_THREADS)")->check(CLI::PositiveNumber);
    app.add_option("--bit-budget", g.bit_budget, "Largest sign-word width to enumerate")->check(CLI::Range(1, 62));

    ConstantsArgs ca;
    auto* constants = app.add_subcommand("constants", "Haagerup constants and derived optimal constants");
    constants->add_option("--p", ca.p, "Exponent (number or inf)")->required();
    constants->add_option("--M", ca.M, "Arity for C_(M),p");
    constants->add_option("--r", ca.r, "Exponent for K_m,r");
    constants->add_option("--m", ca.m, "Order for K_m,r");

    MomentArgs ma;
    auto* moment = app.add_subcommand("moment", "Exact Rademacher moment of a coefficient tensor");
    moment->add_option("--tensor", ma.tensor_file, "Tensor JSON file")->required();
    moment->add_option("--r", ma.r, "Moment exponent")->required();

    WitnessArgs wa;
    auto* witness = app.add_subcommand("witness", "Lower-bound witness sweep");
    witness->add_option("--m", wa.m, "Tensor order")->required();
    witness->add_option("--r", wa.r, "Moment exponent in (0,2)")->required();
    witness->add_option("--N", wa.N, "Comma-separated sizes")->delimiter(',');
    witness->add_option("--kind", wa.kind, "Witness family")->check(CLI::IsMember({"auto", "block", "uniform"}));

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Check a mixed Littlewood inequality or the equivalence construction");
    verify->add_option("--form", va.form_file, "Coefficient tensor JSON file");
    verify->add_option("--p", va.p, "First-factor exponent (equivalence: moment exponent in [1,2])")->required();
    verify->add_option("--which", va.which, "C, D or equivalence")
        ->check(CLI::IsMember({"C", "D", "equivalence"}));
    verify->add_flag("--random", va.random, "Generate the coefficients from --seed");
    verify->add_option("--M", va.M, "Order of the random tensor");
    verify->add_option("--N", va.N, "Axis length of the random tensor");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    }

    std::map<std::string, std::string> parameters;
    for (const auto* sub : app.get_subcommands()) {
        for (const auto* opt : sub->get_options()) {
            if (opt->count() > 0) {
                parameters[opt->get_name()] = join_results(*opt);
            }
        }
    }
    for (const auto* opt : app.get_options()) {
        if (opt->count() > 0 && opt->get_name() != "--help") {
            parameters[opt->get_name()] = join_results(*opt);
        }
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        const auto options = enumeration_options(g);
        Outcome outcome;
        if (*constants) {
            outcome = cmd_constants(ca);
        } else if (*moment) {
            outcome = cmd_moment(ma, options);
        } else if (*witness) {
            outcome = cmd_witness(wa, options);
        } else {
            outcome = cmd_verify(va, g, options);
        }
        const auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start);
        emit(outcome, g, parameters, wall.count(), out);
        return outcome.exit_code;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kBudgetExceeded;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kDomainError;
    } catch (const ShapeMismatch& e) {
        err << "domain error: " << e.what() << "\n";
        return kDomainError;
    }
}

} // namespace khinlab::cli
