// klrtab: crystal graphs of semistandard tableaux, marginally large
// tableaux, and the segment-character calculus attached to them.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "klrtab/dot.hpp"
#include "klrtab/fixtures.hpp"
#include "klrtab/json_io.hpp"
#include "klrtab/verify.hpp"

namespace {

using namespace klrtab;

std::vector<int> parse_csv_ints(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::domain_error("not an integer list: " + s);
        }
        if (used != item.size()) throw std::domain_error("not an integer list: " + s);
        out.push_back(value);
    }
    if (out.empty()) throw std::domain_error("empty integer list");
    return out;
}

// "--lambda" takes fundamental-weight coefficients, "--shape" a partition.
Partition resolve_shape(const std::string& lambda_csv, const std::string& shape_csv, int n) {
    if (!lambda_csv.empty() && !shape_csv.empty())
        throw std::domain_error("give either --lambda or --shape, not both");
    if (!shape_csv.empty()) {
        Partition p(parse_csv_ints(shape_csv));
        if (p.length() > n) throw std::domain_error("shape has more rows than the rank allows");
        return p.trimmed();
    }
    if (lambda_csv.empty()) throw std::domain_error("one of --lambda or --shape is required");
    std::vector<int> a = parse_csv_ints(lambda_csv);
    if (static_cast<int>(a.size()) > n)
        throw std::domain_error("more coefficients than the rank allows");
    a.resize(static_cast<size_t>(n), 0);
    return Partition(dominant_to_partition(a)).trimmed();
}

SegmentList parse_segments(const std::string& s) {
    SegmentList sl;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';')) {
        std::vector<int> pair = parse_csv_ints(item);
        if (pair.size() != 2) throw std::domain_error("segment must be 'start,length': " + item);
        sl.push_back({pair[0], pair[1]});
    }
    return sl;
}

void emit(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(output);
    if (!os) throw std::domain_error("cannot open output file: " + output);
    os << text;
}

nlohmann::json sweep_json(const SweepReport& r) {
    nlohmann::json j;
    j["sweep"] = r.name;
    j["cases"] = r.cases;
    j["pass"] = r.passed();
    nlohmann::json fails = nlohmann::json::array();
    for (const VerifyFailure& f : r.failures)
        fails.push_back({{"check", f.check}, {"witness", f.witness}, {"detail", f.detail}});
    j["failures"] = std::move(fails);
    return j;
}

int finish_report(const nlohmann::json& report, bool passed, const std::string& output) {
    emit(report.dump(2) + "\n", output);
    std::cerr << (passed ? "pass" : "FAIL") << "\n";
    return passed ? 0 : 1;
}

int run(int argc, char** argv) {
    CLI::App app{"crystal and segment-character toolkit for type A"};
    app.require_subcommand(1);

    int n = 0;
    std::string lambda_csv, shape_csv, format, output;

    // crystal graph
    auto* crystal_cmd = app.add_subcommand("crystal", "crystal graph generation");
    crystal_cmd->require_subcommand(1);
    auto* graph_cmd = crystal_cmd->add_subcommand("graph", "generate the full crystal graph");
    std::string reading_name = "me";
    graph_cmd->add_option("--n", n, "rank")->required();
    graph_cmd->add_option("--lambda", lambda_csv, "fundamental-weight coefficients, comma separated");
    graph_cmd->add_option("--shape", shape_csv, "partition, comma separated");
    graph_cmd->add_option("--format", format, "dot|json|text")->default_val("dot");
    graph_cmd->add_option("--output", output, "write to file instead of stdout");
    graph_cmd->add_option("--reading", reading_name, "me|fe reading used for the operators")
        ->default_val("me");

    // char
    auto* char_cmd = app.add_subcommand("char", "induced character of segments or a tableau");
    std::string segments_csv, tableau_file;
    bool graded = false;
    char_cmd->add_option("--segments", segments_csv, "semicolon-separated start,length pairs");
    char_cmd->add_option("--tableau", tableau_file, "JSON tableau file");
    char_cmd->add_option("--n", n, "rank (default: smallest rank that fits)");
    char_cmd->add_flag("--graded", graded, "keep the q-grading");
    char_cmd->add_option("--format", format, "json|text")->default_val("json");
    char_cmd->add_option("--output", output, "write to file instead of stdout");

    // verify family
    auto* verify_cmd = app.add_subcommand("verify", "verification sweeps");
    verify_cmd->require_subcommand(1);

    auto* phi_cmd = verify_cmd->add_subcommand("phi-lambda", "certificate sweep over one crystal");
    int samples = 8;
    phi_cmd->add_option("--n", n, "rank")->required();
    phi_cmd->add_option("--lambda", lambda_csv, "fundamental-weight coefficients");
    phi_cmd->add_option("--shape", shape_csv, "partition");
    phi_cmd->add_option("--samples", samples, "sampled words per oversized character")
        ->default_val(8);
    phi_cmd->add_option("--output", output, "write the JSON report to a file");

    auto* mult_cmd = verify_cmd->add_subcommand("multiplicity", "distinguished-word multiplicities");
    int max_mu = 6;
    mult_cmd->add_option("--n", n, "rank")->default_val(6);
    mult_cmd->add_option("--max-mu", max_mu, "largest partition size")->default_val(6);
    mult_cmd->add_option("--output", output, "write the JSON report to a file");

    auto* serre_cmd = verify_cmd->add_subcommand("serre", "Serre relations over whole crystals");
    std::string shapes_csv = "2,1;2,2;3,1";
    serre_cmd->add_option("--n", n, "rank")->default_val(3);
    serre_cmd->add_option("--shapes", shapes_csv, "semicolon-separated partitions")
        ->default_val("2,1;2,2;3,1");
    serre_cmd->add_option("--output", output, "write the JSON report to a file");

    auto* binf_cmd = verify_cmd->add_subcommand("binfinity", "marginally large round-trips");
    int trials = 1000;
    unsigned seed = 0x5eed;
    binf_cmd->add_option("--trials", trials, "randomized inverse-property trials")
        ->default_val(1000);
    binf_cmd->add_option("--seed", seed, "random seed")->default_val(0x5eed);
    binf_cmd->add_option("--output", output, "write the JSON report to a file");

    auto* ex_cmd = verify_cmd->add_subcommand("example-1", "worked rank-5 example");
    ex_cmd->add_option("--output", output, "write the JSON report to a file");

    CLI11_PARSE(app, argc, argv);

    if (graph_cmd->parsed()) {
        Partition lambda = resolve_shape(lambda_csv, shape_csv, n);
        Reading rd = reading_name == "fe" ? Reading::FarEastern : Reading::MiddleEastern;
        if (reading_name != "me" && reading_name != "fe")
            throw std::domain_error("--reading must be me or fe");
        CrystalGraph g = generate_crystal(Tableau::highest_weight(lambda), n, rd);
        if (format == "dot") {
            std::ostringstream os;
            write_dot(os, g);
            emit(os.str(), output);
        } else if (format == "json") {
            emit(to_json(g).dump(2) + "\n", output);
        } else if (format == "text") {
            std::ostringstream os;
            os << g.size() << " vertices, " << g.edges.size() << " edges\n";
            for (size_t v = 0; v < g.size(); ++v)
                os << v << ": " << g.vertices[v].to_string() << "\n";
            for (const CrystalEdge& e : g.edges)
                os << e.source << " -" << e.letter << "-> " << e.target << "\n";
            emit(os.str(), output);
        } else {
            throw std::domain_error("--format must be dot, json or text");
        }
        return 0;
    }

    if (char_cmd->parsed()) {
        SegmentList sl;
        if (!segments_csv.empty() && !tableau_file.empty())
            throw std::domain_error("give either --segments or --tableau, not both");
        if (!segments_csv.empty()) {
            sl = parse_segments(segments_csv);
        } else if (!tableau_file.empty()) {
            std::ifstream is(tableau_file);
            if (!is) throw std::domain_error("cannot open tableau file: " + tableau_file);
            nlohmann::json j;
            is >> j;
            Tableau t = tableau_from_json(j);
            int need = 1;
            for (const auto& row : t.rows)
                for (int e : row) need = std::max(need, e - 1);
            if (n == 0) n = need;
            sl = s_T(t, n);
        } else {
            throw std::domain_error("one of --segments or --tableau is required");
        }
        if (n == 0)
            for (const Segment& s : sl) n = std::max(n, s.start + s.len - 1);
        if (n == 0) n = 1;
        QChar c = induced_char(sl, n, graded);
        if (format == "json") {
            emit(to_json(c).dump(2) + "\n", output);
        } else if (format == "text") {
            emit(c.to_string() + "\n", output);
        } else {
            throw std::domain_error("--format must be json or text");
        }
        return 0;
    }

    if (phi_cmd->parsed()) {
        Partition lambda = resolve_shape(lambda_csv, shape_csv, n);
        VerifyOptions opts;
        opts.samples = samples;
        PhiReport r = verify_phi_lambda(lambda, n, opts);
        return finish_report(to_json(r), r.passed(), output);
    }
    if (mult_cmd->parsed()) {
        SweepReport r = multiplicity_sweep(max_mu, n);
        return finish_report(sweep_json(r), r.passed(), output);
    }
    if (serre_cmd->parsed()) {
        std::vector<Partition> shapes;
        std::stringstream ss(shapes_csv);
        std::string item;
        while (std::getline(ss, item, ';')) shapes.push_back(Partition(parse_csv_ints(item)));
        SweepReport r = serre_sweep(shapes, n);
        return finish_report(sweep_json(r), r.passed(), output);
    }
    if (binf_cmd->parsed()) {
        SweepReport r = binfinity_sweep(trials, seed);
        return finish_report(sweep_json(r), r.passed(), output);
    }
    if (ex_cmd->parsed()) {
        Tableau ex = fixtures::sl6_sample_tableau();
        const int rank = fixtures::sl6_sample_rank;
        DescentData d = i_T_epsilon_Tplus(ex, rank);
        std::optional<Tableau> cur = ex;
        for (int k = 0; k < d.multiplicity && cur; ++k) cur = tableau_e(*cur, d.letter, rank);
        bool ok = cur.has_value() && *cur == d.raised;
        std::cout << "tableau: " << ex.to_string() << "\n";
        std::cout << "i_T = " << d.letter << "\n";
        std::cout << "epsilon = " << d.multiplicity << "\n";
        std::cout << "raised (replacement rule):  " << d.raised.to_string() << "\n";
        std::cout << "raised (crystal operators): " << (cur ? cur->to_string() : "none") << "\n";
        std::cout << (ok ? "pass" : "FAIL") << "\n";
        if (!output.empty()) {
            nlohmann::json j{{"i_T", d.letter},
                             {"epsilon", d.multiplicity},
                             {"raised", to_json(d.raised)},
                             {"pass", ok}};
            emit(j.dump(2) + "\n", output);
        }
        return ok ? 0 : 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
