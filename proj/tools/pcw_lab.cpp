// pcw-lab: pseudo-codeword laboratory for binary LDPC codes.
//
// Loads a parity-check matrix, dispatches one analysis subcommand, and prints
// a JSON report on standard output.  Exit codes: 0 for success or an
// affirmative verdict, 1 for a negative verdict (not a cone member, not a
// pseudo-codeword, not realizable, not a codeword), 2 for usage, format or
// capacity errors.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcw/cone.hpp"
#include "pcw/covers.hpp"
#include "pcw/errors.hpp"
#include "pcw/gf2.hpp"
#include "pcw/io.hpp"
#include "pcw/lifting.hpp"
#include "pcw/poly.hpp"
#include "pcw/rational.hpp"
#include "pcw/tanner.hpp"
#include "pcw/zeta.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct Options {
    std::string matrix_path;
    std::string format = "auto";
    std::string out_path;
    int max_dimension = pcw::kDefaultMaxDimension;
    int det_bound = pcw::kDefaultZetaSlotBound;
};

pcw::BinaryMatrix load(const Options& opt) {
    pcw::MatrixFormat f = pcw::MatrixFormat::automatic;
    if (opt.format == "plain") f = pcw::MatrixFormat::plain;
    if (opt.format == "alist") f = pcw::MatrixFormat::alist;
    return pcw::load_matrix(opt.matrix_path, f);
}

std::vector<long long> parse_int_vector(const std::string& text) {
    std::vector<long long> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
        try {
            std::size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw pcw::DomainError("bad integer '" + tok + "' in vector");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

pcw::RationalVector parse_rational_vector(const std::string& text) {
    pcw::RationalVector out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
        out.push_back(pcw::parse_rational(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

ordered_json rational_vector_json(const pcw::RationalVector& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& q : v) arr.push_back(pcw::rational_to_string(q));
    return arr;
}

// Report skeleton shared by every subcommand; the timing field is filled in
// last so reports differ only there across identical runs.
class Report {
public:
    Report(const std::string& command, const pcw::BinaryMatrix& h) : start_(Clock::now()) {
        body_["tool"] = {{"name", "pcw-lab"}, {"version", kVersion}};
        body_["input"] = {{"digest", pcw::matrix_digest(h)},
                          {"rows", h.rows()},
                          {"cols", h.cols()}};
        body_["command"] = command;
        body_["parameters"] = ordered_json::object();
    }

    void rng(const std::string& algorithm) { body_["tool"]["rng"] = algorithm; }
    ordered_json& parameters() { return body_["parameters"]; }
    ordered_json& results() { return body_["results"]; }

    void emit(const Options& opt) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                                        start_);
        body_["timing_ms"] = ms.count();
        std::string text = body_.dump(2);
        if (opt.out_path.empty()) {
            std::cout << text << '\n';
        } else {
            std::ofstream out(opt.out_path);
            if (!out) throw pcw::Error("cannot write '" + opt.out_path + "'");
            out << text << '\n';
        }
    }

private:
    Clock::time_point start_;
    ordered_json body_;
};

ordered_json polynomial_json(const pcw::SparsePolynomial& p) {
    return ordered_json::parse(p.to_json());
}

ordered_json cover_json(const pcw::CoverSpec& cov) {
    return ordered_json::parse(pcw::cover_to_json(cov));
}

int run_info(const Options& opt) {
    auto h = load(opt);
    auto t = pcw::from_parity_matrix(h);
    Report rep("info", h);
    auto& res = rep.results();
    res["rows"] = h.rows();
    res["cols"] = h.cols();
    res["rank"] = pcw::gf2_rank(h);
    res["dimension"] = h.cols() - pcw::gf2_rank(h);
    ordered_json rw = ordered_json::array(), cw = ordered_json::array();
    for (int j = 0; j < h.rows(); ++j) rw.push_back(h.row_weight(j));
    for (int i = 0; i < h.cols(); ++i) cw.push_back(h.col_weight(i));
    res["row_weights"] = rw;
    res["col_weights"] = cw;
    res["bit_even"] = pcw::is_bit_even(t);
    bool cycle = true;
    for (int i = 0; i < h.cols(); ++i) cycle = cycle && h.col_weight(i) == 2;
    res["cycle_code"] = cycle;
    rep.emit(opt);
    return 0;
}

int run_codewords(const Options& opt) {
    auto h = load(opt);
    auto words = pcw::enumerate_codewords(h, opt.max_dimension);
    Report rep("codewords", h);
    rep.parameters()["max_dimension"] = opt.max_dimension;
    auto& res = rep.results();
    res["count"] = words.size();
    ordered_json arr = ordered_json::array();
    for (const auto& w : words) arr.push_back(pcw::to_string(w));
    res["codewords"] = arr;
    rep.emit(opt);
    return 0;
}

int run_decode(const Options& opt, const std::string& received) {
    auto h = load(opt);
    auto y = pcw::bitvector_from_string(received);
    auto dec = pcw::ml_decode_bsc(h, y, opt.max_dimension);
    Report rep("decode", h);
    rep.parameters()["received"] = received;
    rep.parameters()["max_dimension"] = opt.max_dimension;
    auto& res = rep.results();
    res["codeword"] = pcw::to_string(dec.codeword);
    res["distance"] = dec.distance;
    res["unique"] = dec.unique;
    rep.emit(opt);
    return 0;
}

int run_cone_check(const Options& opt, const std::string& vector_text) {
    auto h = load(opt);
    auto v = parse_rational_vector(vector_text);
    auto res = pcw::cone_membership(h, v);
    Report rep("cone check", h);
    rep.parameters()["vector"] = rational_vector_json(v);
    rep.results()["member"] = res.member;
    ordered_json viol = ordered_json::array();
    for (const auto& f : res.violated) {
        // Row 0 marks a negative coordinate; rows are 1-based otherwise.
        viol.push_back({{"row", f.row + 1}, {"bit", f.bit + 1}});
    }
    rep.results()["violations"] = viol;
    rep.emit(opt);
    return res.member ? 0 : 1;
}

int run_pcw_verify(const Options& opt, const std::string& vector_text) {
    auto h = load(opt);
    auto p = parse_int_vector(vector_text);
    bool verdict = pcw::is_unscaled_pcw(h, p);
    Report rep("pcw verify", h);
    rep.parameters()["vector"] = p;
    rep.results()["pseudo_codeword"] = verdict;
    rep.emit(opt);
    return verdict ? 0 : 1;
}

int run_realize(const Options& opt, const std::string& vector_text) {
    auto h = load(opt);
    auto p = parse_int_vector(vector_text);
    auto t = pcw::from_parity_matrix(h);
    Report rep("realize", h);
    rep.parameters()["vector"] = p;

    auto hyp = pcw::check_hypotheses(t, p);
    if (!hyp.ok) {
        auto& res = rep.results();
        res["realizable"] = false;
        ordered_json fails = ordered_json::array();
        for (const auto& f : hyp.failures) {
            ordered_json entry;
            entry["kind"] = f.kind == pcw::HypothesisFailure::Kind::odd_check_total
                                ? "odd_check_total"
                                : "dominant_bit";
            entry["check"] = f.check + 1;
            if (f.bit >= 0) entry["bit"] = f.bit + 1;
            fails.push_back(std::move(entry));
        }
        res["failures"] = fails;
        rep.emit(opt);
        return 1;
    }

    auto real = pcw::realize(t, p);
    auto& res = rep.results();
    res["realizable"] = true;
    res["M"] = real.m;
    res["cover"] = cover_json(real.cover);
    res["word"] = pcw::to_string(real.word);
    ordered_json paths = ordered_json::array();
    for (const auto& walk : real.paths) {
        ordered_json path = ordered_json::array();
        for (int fe : walk.edges) {
            int e = fe / real.m, slot = fe % real.m;
            path.push_back({{"edge", e + 1}, {"slot", slot + 1}});
        }
        paths.push_back(std::move(path));
    }
    res["paths"] = paths;
    res["pseudo_codeword"] = p;
    rep.emit(opt);
    return 0;
}

int run_cover_random(const Options& opt, int m, std::uint64_t seed) {
    auto h = load(opt);
    auto t = pcw::from_parity_matrix(h);
    auto cov = pcw::random_cover(t, m, seed);
    Report rep("cover random", h);
    rep.rng(pcw::kRngAlgorithm);
    rep.parameters()["m"] = m;
    rep.parameters()["seed"] = seed;
    rep.results()["cover"] = cover_json(cov);
    rep.emit(opt);
    return 0;
}

int run_lift(const Options& opt, const std::string& codeword, int m) {
    auto h = load(opt);
    auto c = pcw::bitvector_from_string(codeword);
    if (static_cast<int>(c.size()) != h.cols())
        throw pcw::DimensionError("codeword length " + std::to_string(c.size()) +
                                  " does not match " + std::to_string(h.cols()) +
                                  " columns");
    bool is_codeword = pcw::weight(pcw::syndrome(h, c)) == 0;
    Report rep("lift", h);
    rep.parameters()["codeword"] = codeword;
    rep.parameters()["m"] = m;
    auto& res = rep.results();
    res["is_codeword"] = is_codeword;
    if (is_codeword) {
        auto w = pcw::lift_codeword(c, m);
        res["word"] = pcw::to_string(w);
        auto p = pcw::pseudo_codeword(w, h.cols(), m);
        res["pseudo_codeword"] = p.unscaled;
    }
    rep.emit(opt);
    return is_codeword ? 0 : 1;
}

int run_reduce_bit_even(const Options& opt) {
    auto h = load(opt);
    auto t = pcw::from_parity_matrix(h);
    bool already = pcw::is_bit_even(t);
    auto reduced = already ? h : pcw::duplicate_checks(h);
    Report rep("reduce bit-even", h);
    auto& res = rep.results();
    res["already_bit_even"] = already;
    res["rows"] = reduced.rows();
    res["cols"] = reduced.cols();
    res["digest"] = pcw::matrix_digest(reduced);
    ordered_json rows = ordered_json::array();
    for (int j = 0; j < reduced.rows(); ++j) {
        std::string line;
        for (int i = 0; i < reduced.cols(); ++i) {
            if (i) line += ' ';
            line += reduced.at(j, i) ? '1' : '0';
        }
        rows.push_back(line);
    }
    res["matrix"] = rows;
    rep.emit(opt);
    return 0;
}

int run_zeta(const Options& opt, bool tanner, int degree) {
    auto h = load(opt);
    auto t = pcw::from_parity_matrix(h);
    pcw::ZetaOptions zopt;
    zopt.max_slots = opt.det_bound;

    pcw::MultiGraph g = tanner ? pcw::as_plain_graph(t) : pcw::normal_graph(t);
    auto reciprocal = pcw::zeta_reciprocal(g, zopt);
    auto series = pcw::series_expand(reciprocal, degree);

    Report rep("zeta", h);
    rep.parameters()["graph"] = tanner ? "tanner" : "normal";
    rep.parameters()["degree"] = degree;
    rep.parameters()["det_bound"] = opt.det_bound;
    auto& res = rep.results();
    res["edges"] = g.edges.size();
    res["reciprocal"] = polynomial_json(reciprocal);
    res["series"] = polynomial_json(series.poly);
    rep.emit(opt);
    return 0;
}

int run_enumerate(const Options& opt, int degree) {
    auto h = load(opt);
    auto t = pcw::from_parity_matrix(h);
    pcw::ZetaOptions zopt;
    zopt.max_slots = opt.det_bound;

    bool cycle = true;
    for (int i = 0; i < h.cols(); ++i) cycle = cycle && h.col_weight(i) == 2;

    std::string pipeline;
    std::vector<pcw::ExponentVector> vectors;
    if (cycle) {
        pipeline = "cycle";
        vectors = pcw::enumerate_cycle_pcw(h, degree, zopt);
    } else if (pcw::is_bit_even(t)) {
        pipeline = "bit-even";
        vectors = pcw::bit_even_pcw(h, degree, zopt);
    } else {
        // Doubling the checks changes neither the code nor the cone, so the
        // bit-even pipeline answers for the original matrix.
        pipeline = "bit-even (checks duplicated)";
        vectors = pcw::bit_even_pcw(pcw::duplicate_checks(h), degree, zopt);
    }

    Report rep("enumerate", h);
    rep.parameters()["degree"] = degree;
    rep.parameters()["det_bound"] = opt.det_bound;
    auto& res = rep.results();
    res["pipeline"] = pipeline;
    res["count"] = vectors.size();
    ordered_json arr = ordered_json::array();
    for (const auto& v : vectors) arr.push_back(v);
    res["vectors"] = arr;
    rep.emit(opt);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pseudo-codeword laboratory for binary LDPC codes"};
    app.require_subcommand(1);
    app.fallthrough(); // common flags may follow the subcommand

    Options opt;
    app.add_option("-H,--matrix", opt.matrix_path, "parity-check matrix file")
        ->required();
    app.add_option("--format", opt.format, "matrix format: auto, plain, alist")
        ->check(CLI::IsMember({"auto", "plain", "alist"}))
        ->capture_default_str();
    app.add_option("--out", opt.out_path, "write the report here instead of stdout");
    app.add_option("--max-dimension", opt.max_dimension,
                   "largest code dimension to enumerate")
        ->capture_default_str();
    app.add_option("--det-bound", opt.det_bound,
                   "largest directed edge matrix (slots) for zeta determinants")
        ->capture_default_str();

    auto* info = app.add_subcommand("info", "matrix shape, degrees, class");

    auto* codewords = app.add_subcommand("codewords", "enumerate all codewords");

    std::string received;
    auto* decode = app.add_subcommand("decode", "nearest-codeword decoding");
    decode->add_option("--received", received, "received word, e.g. 1011010")->required();

    std::string cone_vector;
    auto* cone = app.add_subcommand("cone", "fundamental cone analyses");
    cone->require_subcommand(1);
    auto* cone_check = cone->add_subcommand("check", "exact membership test");
    cone_check->add_option("--vector", cone_vector, "comma-separated rationals, e.g. 1/2,1,0")
        ->required();

    std::string pcw_vector;
    auto* pcw_cmd = app.add_subcommand("pcw", "pseudo-codeword analyses");
    pcw_cmd->require_subcommand(1);
    auto* pcw_verify = pcw_cmd->add_subcommand("verify", "unscaled pseudo-codeword test");
    pcw_verify->add_option("--vector", pcw_vector, "comma-separated nonnegative integers")
        ->required();

    std::string realize_vector;
    auto* realize = app.add_subcommand("realize", "construct a cover realizing a vector");
    realize->add_option("--vector", realize_vector, "comma-separated nonnegative integers")
        ->required();

    int cover_m = 0;
    std::uint64_t cover_seed = 0;
    auto* cover = app.add_subcommand("cover", "graph cover constructions");
    cover->require_subcommand(1);
    auto* cover_random = cover->add_subcommand("random", "uniformly random cover");
    cover_random->add_option("--m", cover_m, "cover degree M")->required();
    cover_random->add_option("--seed", cover_seed, "PRNG seed (required: no ambient entropy)")
        ->required();

    std::string lift_codeword;
    int lift_m = 0;
    auto* lift = app.add_subcommand("lift", "lift a codeword to an M-cover");
    lift->add_option("--codeword", lift_codeword, "base codeword bits")->required();
    lift->add_option("--m", lift_m, "cover degree M")->required();

    auto* reduce = app.add_subcommand("reduce", "matrix reductions");
    reduce->require_subcommand(1);
    auto* reduce_bit_even = reduce->add_subcommand("bit-even", "duplicate checks if needed");

    bool zeta_normal = false, zeta_tanner = false;
    int zeta_degree = 0;
    auto* zeta = app.add_subcommand("zeta", "edge zeta function of the code's graph");
    auto* flag_normal = zeta->add_flag("--normal", zeta_normal, "normal graph (cycle codes)");
    auto* flag_tanner = zeta->add_flag("--tanner", zeta_tanner, "Tanner graph as a plain graph");
    flag_normal->excludes(flag_tanner);
    zeta->add_option("--degree", zeta_degree, "series truncation degree")->required();

    int enum_degree = 0;
    auto* enumerate = app.add_subcommand("enumerate", "pseudo-codewords up to a degree");
    enumerate->add_option("--degree", enum_degree, "total degree bound")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*info) return run_info(opt);
        if (*codewords) return run_codewords(opt);
        if (*decode) return run_decode(opt, received);
        if (*cone_check) return run_cone_check(opt, cone_vector);
        if (*pcw_verify) return run_pcw_verify(opt, pcw_vector);
        if (*realize) return run_realize(opt, realize_vector);
        if (*cover_random) return run_cover_random(opt, cover_m, cover_seed);
        if (*lift) return run_lift(opt, lift_codeword, lift_m);
        if (*reduce_bit_even) return run_reduce_bit_even(opt);
        if (*zeta) return run_zeta(opt, zeta_tanner, zeta_degree);
        if (*enumerate) return run_enumerate(opt, enum_degree);
    } catch (const pcw::Error& e) {
        std::cerr << "pcw-lab: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "pcw-lab: unexpected error: " << e.what() << '\n';
        return 2;
    }
    return 2; // unreachable subcommand dispatch
}
