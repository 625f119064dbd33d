// Command-line front end: exact Schubert code construction, parameter
// formulas with cross-validation, and brute-force distance searches.
//
// Exit codes: 0 ok, 1 assertion/identity failure, 2 invalid input,
// 3 budget refusal, 4 I/O error.

#include <omp.h>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "schubert/code_analysis.hpp"
#include "schubert/combinatorics.hpp"
#include "schubert/finite_field.hpp"
#include "schubert/formulas.hpp"
#include "schubert/geometry.hpp"
#include "schubert/index_tuple.hpp"

using json = nlohmann::ordered_json;
using namespace schubert;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;
constexpr int kExitIo = 4;

// Integers that fit int64 become JSON numbers, anything larger a decimal
// string, so output stays exact.
json to_json_int(const BigInt& v) {
    if (v.fits_slong_p()) return json(static_cast<long long>(v.get_si()));
    return json(v.get_str());
}

std::vector<long> parse_q_list(const std::string& text) {
    std::vector<long> qs;
    std::istringstream is(text);
    std::string part;
    while (std::getline(is, part, ',')) {
        if (part.empty()) continue;
        try {
            qs.push_back(std::stol(part));
        } catch (const std::exception&) {
            throw InvalidInput("cannot parse q value '" + part + "'");
        }
    }
    if (qs.empty()) throw InvalidInput("empty q list");
    return qs;
}

void check_l_consistency(const IndexTuple& alpha, int l_flag) {
    if (l_flag > 0 && l_flag != alpha.l())
        throw InvalidInput("--l disagrees with the length of --alpha");
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    return file;
}

struct CommonArgs {
    std::string alpha_text;
    int l = 0;
    int m = 0;
    std::string q_text;
    std::string format;
    std::string out_path;
    int r_max = 0;
    unsigned long long budget_points = Budget{}.max_points;
    unsigned long long budget_subspaces = Budget{}.max_subspaces;
    int workers = 0;
    bool assert_conjecture = false;
    bool timing = false;
    bool distribution = false;

    Budget budget() const {
        if (budget_points == 0 || budget_subspaces == 0)
            throw InvalidInput("budgets must be positive");
        return Budget{budget_points, budget_subspaces};
    }
    IndexTuple alpha() const {
        if (alpha_text.empty()) throw InvalidInput("--alpha is required");
        if (m <= 0) throw InvalidInput("--m is required");
        IndexTuple a = IndexTuple::parse(alpha_text, m);
        check_l_consistency(a, l);
        return a;
    }
    long single_q() const {
        std::vector<long> qs = parse_q_list(q_text);
        if (qs.size() != 1) throw InvalidInput("this command takes exactly one --q value");
        return qs[0];
    }
};

void add_common_flags(CLI::App* cmd, CommonArgs& args, bool sweep) {
    cmd->add_option("--alpha", args.alpha_text, "index tuple, e.g. 2,4 or (2,4)");
    if (sweep) {
        cmd->add_option("--l", args.l, "largest tuple length in the sweep");
        cmd->add_option("--m", args.m, "largest ambient dimension in the sweep");
    } else {
        cmd->add_option("--l", args.l, "tuple length (checked against --alpha)");
        cmd->add_option("--m", args.m, "ambient dimension m");
    }
    cmd->add_option("--q", args.q_text, sweep ? "field sizes, comma separated" : "field size");
    cmd->add_option("--format", args.format, "output format");
    cmd->add_option("--out", args.out_path, "output path (default stdout)");
    cmd->add_option("--budget-points", args.budget_points, "max enumerated points");
    cmd->add_option("--budget-subspaces", args.budget_subspaces, "max searched subspaces");
    cmd->add_option("--workers", args.workers, "worker threads (default: all cores)");
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    if (format.empty()) return;
    for (const char* a : allowed)
        if (format == a) return;
    throw InvalidInput("unsupported --format '" + format + "' for this command");
}

json params_report(const IndexTuple& alpha, long q) {
    make_field(q);  // rejects non-prime-power q up front
    const ParameterBundle b = compute_parameter_bundle(alpha, BigInt(q));

    json rep;
    rep["alpha"] = alpha.str();
    rep["l"] = alpha.l();
    rep["m"] = alpha.m();
    rep["q"] = q;
    rep["delta"] = b.delta;
    rep["n"] = {{"cells", to_json_int(b.n_cells)},
                {"nested_sums", to_json_int(b.n_nested_sums)},
                {"gv", to_json_int(b.n_gv)},
                {"agree", b.lengths_agree()}};
    rep["k"] = {{"determinant", to_json_int(b.k_determinant)},
                {"limit_sums", to_json_int(b.k_limit_sums)},
                {"downset", to_json_int(b.k_downset)},
                {"arith_progression",
                 b.k_arith_progression ? to_json_int(*b.k_arith_progression) : json(nullptr)},
                {"agree", b.dimensions_agree()}};
    rep["length_poly"] = b.poly.str();
    rep["length_poly_checks"] = {{"monic", b.poly.is_monic()},
                                 {"degree_is_delta", b.poly.degree() == b.delta},
                                 {"value_at_one_is_k", b.poly.evaluate(1) == b.k_determinant}};
    rep["d_lower_gv"] = to_json_int(b.d_lower.ceil());
    rep["d_upper"] = to_json_int(b.d_upper);
    return rep;
}

int cmd_params(const CommonArgs& args) {
    require_format(args.format, {"json", "text"});
    json rep = params_report(args.alpha(), args.single_q());
    std::ofstream file;
    std::ostream& os = open_out(file, args.out_path);
    if (args.format == "text") {
        os << "alpha=" << rep["alpha"].get<std::string>() << " q=" << rep["q"]
           << " delta=" << rep["delta"] << "\n"
           << "n: cells=" << rep["n"]["cells"] << " nested_sums=" << rep["n"]["nested_sums"]
           << " gv=" << rep["n"]["gv"] << (rep["n"]["agree"].get<bool>() ? " (agree)" : " (DISAGREE)")
           << "\n"
           << "k: determinant=" << rep["k"]["determinant"] << " limit_sums=" << rep["k"]["limit_sums"]
           << " downset=" << rep["k"]["downset"]
           << (rep["k"]["agree"].get<bool>() ? " (agree)" : " (DISAGREE)") << "\n"
           << "d bounds: [" << rep["d_lower_gv"] << ", " << rep["d_upper"] << "]\n";
    } else {
        os << rep.dump(2) << "\n";
    }
    bool ok = rep["n"]["agree"].get<bool>() && rep["k"]["agree"].get<bool>();
    for (const auto& [key, value] : rep["length_poly_checks"].items()) ok = ok && value.get<bool>();
    return ok ? kExitOk : kExitAssertion;
}

struct IdentityFailure {
    long q;
    std::string alpha;
    std::string what;
};

// Checks identity A (three lengths), identity B (two dimension formulas and
// the downset count, plus the arithmetic-progression form when it applies)
// and the length-polynomial facts for one tuple.
void check_tuple(const IndexTuple& alpha, const std::vector<long>& qs,
                 std::vector<IdentityFailure>& failures, long long& checked) {
    const BigInt k_det = dimension_via_determinant(alpha);
    const BigInt k_limit = dimension_via_limit_sums(alpha);
    const BigInt k_downset = BigInt(static_cast<long>(alpha.downset().size()));
    if (!(k_det == k_limit && k_limit == k_downset))
        failures.push_back({0, alpha.str(), "dimension formulas disagree"});
    if (auto k_ap = dimension_arith_progression(alpha); k_ap && *k_ap != k_det)
        failures.push_back({0, alpha.str(), "arithmetic-progression dimension disagrees"});
    const QPolynomial poly = length_poly(alpha);
    if (!poly.is_monic() || poly.degree() != alpha.delta())
        failures.push_back({0, alpha.str(), "length polynomial not monic of degree delta"});
    if (poly.evaluate(1) != k_det)
        failures.push_back({0, alpha.str(), "length polynomial at 1 differs from k"});
    ++checked;
    for (long q : qs) {
        const BigInt bq(q);
        const BigInt n_cells = length_via_cells(alpha, bq);
        if (n_cells != length_via_nested_sums(alpha, bq))
            failures.push_back({q, alpha.str(), "nested-sum length disagrees with cell sum"});
        if (n_cells != length_via_gv(alpha, bq))
            failures.push_back({q, alpha.str(), "flag-count length disagrees with cell sum"});
        if (poly.evaluate(bq) != n_cells)
            failures.push_back({q, alpha.str(), "length polynomial disagrees with cell sum"});
        ++checked;
    }
}

int cmd_identities(const CommonArgs& args) {
    require_format(args.format, {"text"});
    std::vector<long> qs = parse_q_list(args.q_text.empty() ? "2,3,4,5" : args.q_text);
    for (long q : qs) make_field(q);

    std::vector<IdentityFailure> failures;
    long long checked = 0;
    if (!args.alpha_text.empty()) {
        check_tuple(args.alpha(), qs, failures, checked);
    } else {
        const int l_max = args.l > 0 ? args.l : 4;
        const int m_max = args.m > 0 ? args.m : 7;
        for (int m = 1; m <= m_max; ++m)
            for (int l = 1; l <= std::min(l_max, m); ++l)
                for (const IndexTuple& alpha : IndexTuple::all(l, m))
                    check_tuple(alpha, qs, failures, checked);
    }

    std::ofstream file;
    std::ostream& os = open_out(file, args.out_path);
    for (const auto& f : failures) {
        os << "FAIL alpha=" << f.alpha;
        if (f.q > 0) os << " q=" << f.q;
        os << ": " << f.what << "\n";
    }
    os << (failures.empty() ? "identities: OK" : "identities: FAILED") << " (" << checked
       << " checks)\n";
    return failures.empty() ? kExitOk : kExitAssertion;
}

int cmd_distance(const CommonArgs& args, bool with_distribution) {
    require_format(args.format, {"json"});
    const IndexTuple alpha = args.alpha();
    const long q = args.single_q();
    const FieldSpec field = make_field(q);
    const Budget budget = args.budget();

    const auto start = std::chrono::steady_clock::now();
    const GeneratorMatrix code = build_schubert_code(alpha, field, budget);
    const int r_max = args.r_max > 0 ? std::min(args.r_max, code.k()) : 1;

    WeightReport report;
    report.n = code.n();
    report.k = code.k();
    for (int r = 1; r <= r_max; ++r)
        report.d.push_back(r == 1 ? min_distance_bruteforce(code, budget)
                                  : higher_weight_bruteforce(code, r, budget));
    if (with_distribution || args.distribution) report.distribution = weight_distribution(code, budget);
    report.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();

    json rep;
    rep["alpha"] = alpha.str();
    rep["q"] = q;
    rep["n"] = report.n;
    rep["k"] = report.k;
    rep["d"] = json::array();
    for (const BigInt& d : report.d) rep["d"].push_back(to_json_int(d));
    if (report.distribution) {
        json dist = json::object();
        for (const auto& [w, c] : *report.distribution) dist[std::to_string(w)] = c;
        rep["distribution"] = dist;
    }
    const BigInt conjectured = big_pow(BigInt(q), static_cast<unsigned long>(alpha.delta()));
    rep["conjectured_d"] = to_json_int(conjectured);
    rep["conjecture_holds"] = report.d[0] == conjectured;
    // elapsed_ms only on request: default output is byte-identical across runs.
    if (args.timing) rep["elapsed_ms"] = report.elapsed_ms;

    std::ofstream file;
    std::ostream& os = open_out(file, args.out_path);
    os << rep.dump(2) << "\n";
    if (args.assert_conjecture && report.d[0] != conjectured) return kExitAssertion;
    return kExitOk;
}

int cmd_matrix(const CommonArgs& args) {
    require_format(args.format, {"text"});
    const IndexTuple alpha = args.alpha();
    const long q = args.single_q();
    if (args.out_path.empty()) throw InvalidInput("matrix requires --out");
    const GeneratorMatrix code = build_schubert_code(alpha, make_field(q), args.budget());

    std::ofstream file(args.out_path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + args.out_path + "' for writing");
    file << "q=" << q << " l=" << alpha.l() << " m=" << alpha.m() << " alpha=" << alpha.str()
         << " n=" << code.n() << " k=" << code.k() << "\n";
    for (int i = 0; i < code.k(); ++i) {
        for (int j = 0; j < code.n(); ++j) {
            if (j > 0) file << " ";
            file << static_cast<long>(code.at(i, j));
        }
        file << "\n";
    }
    file.flush();
    if (!file) throw IoError("write to '" + args.out_path + "' failed");
    return kExitOk;
}

int cmd_enumerate(const CommonArgs& args) {
    require_format(args.format, {"text"});
    const IndexTuple alpha = args.alpha();
    const long q = args.single_q();
    const std::vector<PluckerPoint> points =
        enumerate_schubert_points(alpha, make_field(q), args.budget());

    std::ofstream file;
    std::ostream& os = open_out(file, args.out_path);
    for (const PluckerPoint& pt : points) {
        for (size_t c = 0; c < pt.coords.size(); ++c) {
            if (c > 0) os << ",";
            os << static_cast<long>(pt.coords[c]);
        }
        os << "\n";
    }
    os.flush();
    if (!os) throw IoError("write failed");
    return kExitOk;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

int cmd_table(const CommonArgs& args, bool with_distance) {
    require_format(args.format, {"csv"});
    std::vector<long> qs = parse_q_list(args.q_text.empty() ? "2,3" : args.q_text);
    std::vector<FieldSpec> fields;
    for (long q : qs) fields.push_back(make_field(q));
    const int l_max = args.l > 0 ? args.l : 3;
    const int m_max = args.m > 0 ? args.m : 5;
    const Budget budget = args.budget();

    std::ofstream file;
    std::ostream& os = open_out(file, args.out_path);
    os << "q,ell,m,alpha,delta,n_cells,n_na2,n_gv,k_det,k_limit,k_ap,gv_lower,mdc_upper";
    if (with_distance) os << ",d_measured,mdc_holds";
    os << "\n";
    for (size_t qi = 0; qi < qs.size(); ++qi) {
        const BigInt bq(qs[qi]);
        for (int m = 1; m <= m_max; ++m)
            for (int l = 1; l <= std::min(l_max, m); ++l)
                for (const IndexTuple& alpha : IndexTuple::all(l, m)) {
                    const std::optional<BigInt> k_ap = dimension_arith_progression(alpha);
                    os << qs[qi] << "," << l << "," << m << "," << csv_quote(alpha.str()) << ","
                       << alpha.delta() << "," << length_via_cells(alpha, bq).get_str() << ","
                       << length_via_nested_sums(alpha, bq).get_str() << ","
                       << length_via_gv(alpha, bq).get_str() << ","
                       << dimension_via_determinant(alpha).get_str() << ","
                       << dimension_via_limit_sums(alpha).get_str() << ","
                       << (k_ap ? k_ap->get_str() : "") << ","
                       << gv_lower_bound(alpha, bq).get_str() << ","
                       << big_pow(bq, static_cast<unsigned long>(alpha.delta())).get_str();
                    if (with_distance) {
                        const GeneratorMatrix code = build_schubert_code(alpha, fields[qi], budget);
                        const BigInt d = min_distance_bruteforce(code, budget);
                        const bool holds =
                            d == big_pow(bq, static_cast<unsigned long>(alpha.delta()));
                        os << "," << d.get_str() << "," << (holds ? "true" : "false");
                    }
                    os << "\n";
                }
    }
    os.flush();
    if (!os) throw IoError("write failed");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Schubert code toolkit: parameters, points, matrices, distances"};
    app.require_subcommand(1);

    CommonArgs args;
    bool with_distance = false;

    CLI::App* params = app.add_subcommand("params", "all parameter formulas for one code");
    add_common_flags(params, args, false);

    CLI::App* identities = app.add_subcommand("identities", "cross-validate the length and dimension formulas");
    add_common_flags(identities, args, true);

    CLI::App* distance = app.add_subcommand("distance", "brute-force minimum distance and higher weights");
    add_common_flags(distance, args, false);
    distance->add_option("--r-max", args.r_max, "compute d_1 .. d_r");
    distance->add_flag("--assert-conjecture", args.assert_conjecture,
                       "exit 1 unless d equals q^delta");
    distance->add_flag("--distribution", args.distribution, "include the weight distribution");
    distance->add_flag("--timing", args.timing, "include elapsed_ms (breaks byte determinism)");

    CLI::App* weights = app.add_subcommand("weights", "distance with the weight distribution");
    add_common_flags(weights, args, false);
    weights->add_option("--r-max", args.r_max, "compute d_1 .. d_r");
    weights->add_flag("--assert-conjecture", args.assert_conjecture, "exit 1 unless d equals q^delta");
    weights->add_flag("--timing", args.timing, "include elapsed_ms (breaks byte determinism)");

    CLI::App* matrix = app.add_subcommand("matrix", "write the generator matrix");
    add_common_flags(matrix, args, false);

    CLI::App* enumerate = app.add_subcommand("enumerate", "dump the points of the variety");
    add_common_flags(enumerate, args, false);

    CLI::App* table = app.add_subcommand("table", "CSV sweep of all parameter formulas");
    add_common_flags(table, args, true);
    table->add_flag("--with-distance", with_distance, "add brute-force distance columns");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: invalid-input: " << e.what() << "\n";
        return kExitInvalid;
    }

    if (args.workers > 0) omp_set_num_threads(args.workers);

    try {
        if (params->parsed()) return cmd_params(args);
        if (identities->parsed()) return cmd_identities(args);
        if (distance->parsed()) return cmd_distance(args, false);
        if (weights->parsed()) return cmd_distance(args, true);
        if (matrix->parsed()) return cmd_matrix(args);
        if (enumerate->parsed()) return cmd_enumerate(args);
        if (table->parsed()) return cmd_table(args, with_distance);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: budget-refused: " << e.what() << "\n";
        return kExitBudget;
    } catch (const IoError& e) {
        std::cerr << "error: io: " << e.what() << "\n";
        return kExitIo;
    } catch (const InvalidInput& e) {
        std::cerr << "error: invalid-input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::logic_error& e) {
        std::cerr << "error: internal-assertion: " << e.what() << "\n";
        return kExitAssertion;
    }
    return kExitInvalid;
}
