#include "laygraph/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "laygraph/graph.hpp"
#include "laygraph/hilbert.hpp"
#include "laygraph/json_io.hpp"
#include "laygraph/oracle.hpp"

namespace laygraph::cli {

namespace {

std::string join(const std::vector<Int>& values) {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) os << (i ? ", " : "") << values[i];
    return os.str();
}

std::string read_text(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Syntax, "cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

LayeredGraph load_graph(const std::string& path) { return parse_graph(read_text(path)); }

std::string describe(const LayeredGraph& g) {
    std::ostringstream os;
    os << g.name().value_or("unnamed") << " (" << g.vertex_count() << " vertices, " << g.edge_count() << " edges)";
    return os.str();
}

/// Options shared by the commands that take a graph file.
struct GraphOptions {
    std::string file;
    std::size_t degree = kDefaultTruncation;
    std::string format = "text";
    std::uint64_t chain_cap = kDefaultChainCap;
};

void add_file_and_degree(CLI::App* cmd, GraphOptions& opts) {
    cmd->add_option("file", opts.file, "graph file ('-' reads stdin)")->required();
    cmd->add_option("--degree", opts.degree, "truncation degree T")->capture_default_str();
}

void add_format(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
}

int cmd_series(const GraphOptions& opts, const std::string& method, std::ostream& out) {
    const LayeredGraph g = load_graph(opts.file);
    if (method == "oracle") {
        const WordCount wc = count_words(g, opts.degree);
        if (opts.format == "json") {
            out << "{\"series\": [" << join(wc.counts) << "], \"truncation\": " << wc.truncation
                << ", \"method\": \"oracle\"}\n";
        } else {
            out << "graph: " << describe(g) << "\n"
                << "method: oracle\n"
                << "series: " << to_string(IntSeries(wc.counts, wc.truncation)) << "\n"
                << "coefficients: " << join(wc.counts) << "\n";
        }
        return kOk;
    }
    const HilbertResult r = hilbert_series(g, opts.degree, *parse_method(method), opts.chain_cap);
    if (opts.format == "json") {
        out << to_json(r) << "\n";
    } else {
        out << "graph: " << describe(g) << "\n"
            << "method: " << to_string(r.method) << "\n"
            << "denominator: " << to_string(r.denominator) << "\n"
            << "series: " << to_string(r.series) << "\n"
            << "coefficients: " << join(r.series.coeffs()) << "\n";
    }
    return kOk;
}

int cmd_dual(const GraphOptions& opts, std::ostream& out) {
    const LayeredGraph g = load_graph(opts.file);
    const DualResult d = dual_series(g, opts.degree);
    if (opts.format == "json") {
        out << to_json(d) << "\n";
        return kOk;
    }
    out << "graph: " << describe(g) << "\n"
        << "denominator: " << to_string(d.denominator) << "\n"
        << "dual series: " << to_string(d.series) << "\n";
    if (d.polynomial) {
        out << "dual polynomial: " << to_string(*d.polynomial) << "\n";
    } else {
        out << "dual polynomial: none (D(-t) is not divisible by 1 + t)\n";
    }
    return kOk;
}

int cmd_check(const GraphOptions& opts, std::ostream& out) {
    const LayeredGraph g = load_graph(opts.file);
    std::vector<NamedCoefficients> columns;
    columns.push_back({"mobius", hilbert_series(g, opts.degree, Method::mobius).series.coeffs()});
    try {
        columns.push_back({"chains", hilbert_series(g, opts.degree, Method::chains, opts.chain_cap).series.coeffs()});
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::ChainBudgetExceeded) throw;
        out << "chains: skipped, chain count exceeds the cap of " << opts.chain_cap << "\n";
    }
    columns.push_back({"oracle", count_words(g, opts.degree).counts});

    out << "graph: " << describe(g) << "\n";
    if (all_agree(columns)) {
        out << "agree: " << columns.size() << " methods through t^" << opts.degree << "\n"
            << "coefficients: " << join(columns.front().coeffs) << "\n";
        return kOk;
    }
    out << "DISAGREEMENT\n" << agreement_table(columns);
    return kDisagreement;
}

int cmd_info(const std::string& file, std::ostream& out) {
    const RawGraph raw = parse_raw_graph(read_text(file));
    const LayeredGraph g = LayeredGraph::validate(raw);
    const std::vector<std::size_t> sizes = g.level_sizes();
    std::vector<std::size_t> edges(sizes.size(), 0);
    for (auto [tail, head] : g.edges()) ++edges[g.level(tail)];

    out << "name: " << g.name().value_or("unnamed") << "\n"
        << "valid: yes\n"
        << "top level: " << g.top_level() << "\n";
    for (std::size_t level = sizes.size(); level-- > 0;) {
        out << "level " << level << ": " << sizes[level] << " vertices";
        if (level > 0) out << ", " << edges[level] << " edges down";
        out << "\n";
    }
    out << "total: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
    return kOk;
}

int emit_closed(const RationalFn& f, std::size_t degree, const std::string& format, std::ostream& out) {
    const IntSeries s = f.expand(degree);
    if (format == "json") {
        out << to_json(f, degree) << "\n";
        return kOk;
    }
    out << "closed form: (" << to_string(f.numerator()) << ") / (" << to_string(f.denominator()) << ")\n"
        << "series: " << to_string(s) << "\n"
        << "coefficients: " << join(s.coeffs()) << "\n";
    return kOk;
}

}  // namespace

bool all_agree(const std::vector<NamedCoefficients>& columns) {
    return std::all_of(columns.begin(), columns.end(),
                       [&](const NamedCoefficients& c) { return c.coeffs == columns.front().coeffs; });
}

std::string agreement_table(const std::vector<NamedCoefficients>& columns) {
    std::size_t rows = 0;
    for (const auto& c : columns) rows = std::max(rows, c.coeffs.size());
    std::vector<std::size_t> widths;
    for (const auto& c : columns) {
        std::size_t w = c.name.size();
        for (const Int& v : c.coeffs) w = std::max(w, v.str().size());
        widths.push_back(w);
    }

    std::ostringstream os;
    os << "   degree";
    for (std::size_t i = 0; i < columns.size(); ++i) os << "  " << std::setw(static_cast<int>(widths[i])) << columns[i].name;
    os << "\n";
    for (std::size_t d = 0; d < rows; ++d) {
        bool same = true;
        for (const auto& c : columns) {
            const auto& first = columns.front().coeffs;
            if (d >= c.coeffs.size() || d >= first.size() || c.coeffs[d] != first[d]) same = false;
        }
        os << (same ? "  " : "* ") << std::setw(7) << d;
        for (std::size_t i = 0; i < columns.size(); ++i) {
            const auto& c = columns[i].coeffs;
            os << "  " << std::setw(static_cast<int>(widths[i])) << (d < c.size() ? c[d].str() : std::string("-"));
        }
        os << "\n";
    }
    return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Hilbert series of algebras attached to layered graphs", "laygraph"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph file");
    gen->require_subcommand(1);
    std::string output;
    gen->add_option("-o,--output", output, "write to FILE instead of stdout");
    std::size_t gen_n = 0;
    std::uint32_t gen_q = 2;
    std::vector<std::size_t> gen_m;
    auto* gen_boolean_cmd = gen->add_subcommand("boolean", "subsets of {1..n}");
    gen_boolean_cmd->add_option("--n", gen_n)->required();
    auto* gen_subspace_cmd = gen->add_subcommand("subspace", "subspaces of F_q^n");
    gen_subspace_cmd->add_option("--n", gen_n)->required();
    gen_subspace_cmd->add_option("--q", gen_q)->required();
    auto* gen_complete_cmd = gen->add_subcommand("complete", "complete layered graph");
    gen_complete_cmd->add_option("--m", gen_m, "level sizes m_n,...,m_1,1")->required()->delimiter(',');
    for (auto* sub : {gen_boolean_cmd, gen_subspace_cmd, gen_complete_cmd}) {
        sub->add_option("-o,--output", output, "write to FILE instead of stdout");
    }

    // series
    GraphOptions series_opts;
    std::string method = "mobius";
    auto* series = app.add_subcommand("series", "Hilbert series of a graph");
    add_file_and_degree(series, series_opts);
    series->add_option("--method", method)->check(CLI::IsMember({"mobius", "chains", "oracle"}))->capture_default_str();
    add_format(series, series_opts.format);
    series->add_option("--chain-cap", series_opts.chain_cap, "refuse chain enumeration beyond this many chains")
        ->capture_default_str();

    // closed
    auto* closed = app.add_subcommand("closed", "closed-form series of a graph family");
    closed->require_subcommand(1);
    std::size_t closed_n = 0;
    std::int64_t closed_q = 2;
    std::vector<std::size_t> closed_m;
    std::size_t closed_degree = kDefaultTruncation;
    std::string closed_format = "text";
    auto* closed_qn_cmd = closed->add_subcommand("qn", "boolean lattice");
    closed_qn_cmd->add_option("--n", closed_n)->required();
    auto* closed_lnq_cmd = closed->add_subcommand("lnq", "subspace lattice");
    closed_lnq_cmd->add_option("--n", closed_n)->required();
    closed_lnq_cmd->add_option("--q", closed_q)->required()->check(CLI::PositiveNumber);
    auto* closed_complete_cmd = closed->add_subcommand("complete", "complete layered graph");
    closed_complete_cmd->add_option("--m", closed_m)->required()->delimiter(',');
    for (auto* sub : {closed_qn_cmd, closed_lnq_cmd, closed_complete_cmd}) {
        sub->add_option("--degree", closed_degree, "truncation degree T")->capture_default_str();
        add_format(sub, closed_format);
    }

    // dual
    GraphOptions dual_opts;
    auto* dual = app.add_subcommand("dual", "Koszul dual series");
    add_file_and_degree(dual, dual_opts);
    add_format(dual, dual_opts.format);

    // check
    GraphOptions check_opts;
    auto* check = app.add_subcommand("check", "cross-validate all methods");
    add_file_and_degree(check, check_opts);
    check->add_option("--chain-cap", check_opts.chain_cap)->capture_default_str();

    // info
    std::string info_file;
    auto* info = app.add_subcommand("info", "per-level counts and validation report");
    info->add_option("file", info_file)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (gen->parsed()) {
            LayeredGraph g = gen_boolean_cmd->parsed()    ? gen_boolean(gen_n)
                             : gen_subspace_cmd->parsed() ? gen_subspace(gen_n, gen_q)
                                                          : gen_complete(gen_m);
            const std::string text = serialize_graph(g);
            if (output.empty()) {
                out << text;
            } else {
                std::ofstream file(output, std::ios::binary);
                if (!file) throw Error(ErrorKind::Syntax, "cannot write " + output);
                file << text;
            }
            return kOk;
        }
        if (series->parsed()) return cmd_series(series_opts, method, out);
        if (closed->parsed()) {
            if (closed_qn_cmd->parsed()) return emit_closed(closed_qn(closed_n), closed_degree, closed_format, out);
            if (closed_lnq_cmd->parsed())
                return emit_closed(closed_lnq(closed_n, closed_q), closed_degree, closed_format, out);
            return emit_closed(closed_complete(closed_m), closed_degree, closed_format, out);
        }
        if (dual->parsed()) return cmd_dual(dual_opts, out);
        if (check->parsed()) return cmd_check(check_opts, out);
        if (info->parsed()) return cmd_info(info_file, out);
    } catch (const GraphError& e) {
        err << "error: " << to_string(e.graph_kind()) << ": " << e.detail() << "\n";
        return kFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kUsage;
}

}  // namespace laygraph::cli
