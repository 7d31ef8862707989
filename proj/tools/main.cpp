// Command-line front end: matrix generation, identity verification
// campaigns, and growth benchmarking, all reproducible from a seed.
//
// Exit codes: 0 all checks hold, 1 an identity check failed, 2 I/O
// failure, 64 usage error, 65 malformed or rejected input data.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sylv/bgm.hpp"
#include "sylv/fraction_free.hpp"
#include "sylv/glr.hpp"
#include "sylv/identities.hpp"
#include "sylv/mulders.hpp"
#include "sylv/newgen.hpp"
#include "sylv/rng.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitIo = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "N" or "A..B"; campaigns cycle through the range by trial index.
struct SizeRange {
    int lo = 0;
    int hi = 0;

    static SizeRange parse(const std::string& text) {
        const auto dots = text.find("..");
        try {
            if (dots == std::string::npos) {
                const int v = std::stoi(text);
                return {v, v};
            }
            const int lo = std::stoi(text.substr(0, dots));
            const int hi = std::stoi(text.substr(dots + 2));
            if (lo > hi) throw UsageError("empty size range '" + text + "'");
            return {lo, hi};
        } catch (const std::invalid_argument&) {
            throw UsageError("bad size '" + text + "' (expected N or A..B)");
        } catch (const std::out_of_range&) {
            throw UsageError("size '" + text + "' out of range");
        }
    }

    int pick(std::uint64_t trial) const { return lo + static_cast<int>(trial % static_cast<std::uint64_t>(hi - lo + 1)); }
};

// Output sink: stdout by default, --out redirects everything.
class Sink {
  public:
    explicit Sink(const std::string& path) {
        if (path.empty()) return;
        file_.open(path);
        if (!file_) throw std::ios_base::failure("cannot open output file '" + path + "'");
    }
    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }
    void finish() {
        out().flush();
        if (file_.is_open() && !file_) throw std::ios_base::failure("write failure on output file");
    }

  private:
    std::ofstream file_;
};

std::vector<sylv::IndexList> parse_list_family(const std::string& text) {
    std::vector<sylv::IndexList> lists;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ';')) {
        if (piece.empty()) continue;
        lists.push_back(sylv::IndexList::parse(piece));
    }
    if (lists.empty()) throw UsageError("no index lists in '" + text + "'");
    return lists;
}

struct GenOptions {
    int rows = 3, cols = 3;
    long lo = -9, hi = 9;
    std::uint64_t seed = 1;
    std::string out;
};

struct VerifyOptions {
    std::string identity;
    std::string file;
    std::string rows_text, cols_text;
    long lo = -9, hi = 9;
    std::uint64_t seed = 1;
    int trials = 1;
    std::optional<int> t, s, p, q, k;
    std::string i_text, j_text, lists_text, i_lists_text, j_lists_text, i0_text;
    int draws = 5;
    std::string out;
    bool json = true;
};

struct BenchOptions {
    int n = 8;
    int trials = 10;
    long lo = -99, hi = 99;
    std::uint64_t seed = 1;
    std::string out;
    bool json = false;
};

int run_gen(const GenOptions& opt) {
    if (opt.lo > opt.hi) throw UsageError("empty entry range [" + std::to_string(opt.lo) + "," + std::to_string(opt.hi) + "]");
    if (opt.rows < 1 || opt.cols < 1) throw UsageError("matrix dimensions must be positive");
    sylv::TrialRng rng(opt.seed, 0);
    const sylv::Matrix m = random_matrix(rng, opt.rows, opt.cols, opt.lo, opt.hi);
    Sink sink(opt.out);
    write_matrix(sink.out(), m);
    sink.finish();
    return kExitOk;
}

// One verification trial: the matrix, its index, and the rng that draws
// any parameters left open on the command line.
struct TrialContext {
    const sylv::Matrix& m;
    std::uint64_t trial;
    sylv::TrialRng& rng;
    const VerifyOptions& opt;
};

sylv::IdentityReport skip_report(const std::string& identity, const std::string& why) {
    return make_report(identity, {}, sylv::Rat(0), sylv::Rat(0), "skipped: " + why);
}

int pick_or(std::optional<int> fixed, sylv::TrialRng& rng, int lo, int hi, const char* what) {
    if (fixed) {
        if (*fixed < lo || *fixed > hi)
            throw UsageError(std::string(what) + "=" + std::to_string(*fixed) + " outside " + std::to_string(lo) +
                             ".." + std::to_string(hi));
        return *fixed;
    }
    return static_cast<int>(rng.next_in(lo, hi));
}

std::vector<std::vector<sylv::Rat>> draw_border_rows(sylv::TrialRng& rng, int q, int width) {
    std::vector<std::vector<sylv::Rat>> z;
    for (int i = 0; i < q; ++i) z.push_back(sylv::random_row(rng, width, -9, 9));
    return z;
}

void run_one_identity(const TrialContext& ctx, std::vector<sylv::IdentityReport>& reports) {
    using namespace sylv;
    const Matrix& m = ctx.m;
    const std::string& id = ctx.opt.identity;
    TrialRng& rng = ctx.rng;
    const int n = m.rows();
    const int width = m.cols();
    const int bound = n < width ? n : width;

    if (id == "sylvester") {
        if (!m.is_square()) throw UsageError("sylvester needs a square matrix");
        reports.push_back(sylvester_check(m, pick_or(ctx.opt.t, rng, 0, n - 1, "t")));
    } else if (id == "chio") {
        if (!m.is_square() || n < 2) throw UsageError("chio needs a square matrix of order >= 2");
        if (m.at(1, 1).is_zero()) {
            if (!ctx.opt.file.empty()) throw PivotError("condensation pivot a11 is zero", 1);
            reports.push_back(skip_report("chio", "zero pivot at (1,1)"));
            return;
        }
        reports.push_back(chio_condense(m).second);
    } else if (id == "block") {
        if (!m.is_square() || n < 2) throw UsageError("block needs a square matrix of order >= 2");
        reports.push_back(block_rule_check(m));
    } else if (id == "yakovlev") {
        if (!m.is_square()) throw UsageError("yakovlev needs a square matrix");
        if (ctx.opt.i_text.empty() != ctx.opt.j_text.empty()) throw UsageError("--I and --J must be given together");
        IndexList rows, cols;
        if (!ctx.opt.i_text.empty()) {
            rows = IndexList::parse(ctx.opt.i_text);
            cols = IndexList::parse(ctx.opt.j_text);
        } else {
            const int t = pick_or(ctx.opt.t, rng, 1, n - 1, "t");
            rows = random_ordered_subset(rng, n, t);
            cols = random_ordered_subset(rng, n, t);
        }
        reports.push_back(yakovlev_check(m, rows, cols));
    } else if (id == "glr") {
        if (!m.is_square()) throw UsageError("glr needs a square matrix");
        if (!ctx.opt.lists_text.empty()) {
            auto lists = parse_list_family(ctx.opt.lists_text);
            const int t = static_cast<int>(lists[0].size()) - 1;
            if (ctx.opt.t && *ctx.opt.t != t) throw UsageError("--t disagrees with the list lengths");
            reports.push_back(glr_check(m, GlrConfig(t, std::move(lists))));
            return;
        }
        const int t = pick_or(ctx.opt.t, rng, 1, n - 1, "t");
        const int q = n - t;
        // Random chain: each list drops one index and picks up one new
        // one, keeping consecutive overlaps at exactly t.
        std::vector<IndexList> lists = {random_ordered_subset(rng, n, t + 1)};
        for (int k = 1; k < q; ++k) {
            const IndexList& prev = lists.back();
            const int drop = prev.at(static_cast<std::size_t>(rng.next_in(0, t)));
            const IndexList rest = list_complement(prev, n);
            const int add = rest.at(static_cast<std::size_t>(rng.next_in(0, static_cast<long>(rest.size()) - 1)));
            lists.push_back(list_union(list_difference(prev, IndexList{drop}), IndexList{add}));
        }
        reports.push_back(glr_check(m, GlrConfig(t, std::move(lists))));
    } else if (id == "bgm") {
        std::optional<BgmConfig> cfg;
        if (!ctx.opt.i_lists_text.empty() || !ctx.opt.j_lists_text.empty()) {
            if (ctx.opt.i_lists_text.empty() || ctx.opt.j_lists_text.empty())
                throw UsageError("--I-lists and --J-lists must be given together");
            auto i_lists = parse_list_family(ctx.opt.i_lists_text);
            auto j_lists = parse_list_family(ctx.opt.j_lists_text);
            std::optional<IndexList> anchor;
            if (!ctx.opt.i0_text.empty()) anchor = IndexList::parse(ctx.opt.i0_text);
            cfg.emplace(std::move(i_lists), std::move(j_lists), std::move(anchor));
        } else {
            if (width < n) throw UsageError("the classical family needs cols >= rows; pass --I-lists/--J-lists instead");
            const int t = pick_or(ctx.opt.t, rng, 1, n - 1, "t");
            cfg.emplace(bgm_sylvester_config(n, t));
        }
        // Anchor rows default to a prefix of the row-list intersection.
        if (!cfg->i0 && static_cast<int>(cfg->j_union.size()) >= cfg->q) {
            const int need = static_cast<int>(cfg->j_union.size()) - cfg->q;
            if (static_cast<int>(cfg->i_meet.size()) >= need) {
                std::vector<int> prefix(cfg->i_meet.items().begin(), cfg->i_meet.items().begin() + need);
                cfg.emplace(cfg->i_lists, cfg->j_lists, IndexList(std::move(prefix)), cfg->z_rows);
            }
        }
        reports.push_back(bgm_corollary_checks(m, cfg->with_z(draw_border_rows(rng, cfg->q, width))));
        if (cfg->i0) {
            reports.push_back(bgm_ratio_constancy(m, *cfg, ctx.opt.draws, rng.next()));
        } else {
            reports.push_back(skip_report("bgm-ratio", "no admissible anchor rows for this family"));
        }
    } else if (id == "mulders") {
        const int t = pick_or(ctx.opt.t, rng, 0, bound, "t");
        const int p = pick_or(ctx.opt.p, rng, 0, t, "p");
        const int q = pick_or(ctx.opt.q, rng, 0, t, "q");
        const int s_max = (n - p) < (width - q) ? (n - p) : (width - q);
        if (s_max < 1) {
            reports.push_back(skip_report("mulders", "no room for a block update with p=" + std::to_string(p) +
                                                              " q=" + std::to_string(q)));
            return;
        }
        reports.push_back(mulders_check(m, t, p, q, pick_or(ctx.opt.s, rng, 1, s_max, "s")));
    } else if (id == "newgen") {
        if (bound < 2) throw UsageError("newgen needs order >= 2");
        const int t = ctx.opt.t ? *ctx.opt.t : static_cast<int>(rng.next_in(1, bound - 1));
        int s;
        if (ctx.opt.s) {
            s = *ctx.opt.s;
        } else {
            std::vector<int> divisors;
            for (int cand = 1; cand <= bound - t; ++cand)
                if ((bound - t) % cand == 0) divisors.push_back(cand);
            s = divisors[static_cast<std::size_t>(rng.next_in(0, static_cast<long>(divisors.size()) - 1))];
        }
        const NewGenConfig cfg(m, t, s);
        if (ctx.opt.k) {
            reports.push_back(newgen_check(m, t, s, *ctx.opt.k));
        } else {
            for (int k = 0; k <= cfg.q; ++k) reports.push_back(newgen_check(m, t, s, k));
        }
    } else if (id == "newgen-s2") {
        if (!m.is_square()) throw UsageError("newgen-s2 needs a square matrix");
        if (n < 3) throw UsageError("newgen-s2 needs order >= 3");
        int t;
        if (ctx.opt.t) {
            t = *ctx.opt.t;
        } else {
            const int q = static_cast<int>(rng.next_in(1, (n - 1) / 2));
            t = n - 2 * q;
        }
        reports.push_back(newgen_s2_check(m, t));
    } else if (id == "newgen-block") {
        if (!m.is_square() || n < 5) throw UsageError("newgen-block needs a square matrix of order >= 5");
        reports.push_back(newgen_block_check(m, n - 4));
    } else {
        throw UsageError("unknown identity '" + id + "'");
    }
}

int run_verify(const VerifyOptions& opt) {
    if (opt.trials < 1) throw UsageError("--trials must be >= 1");
    if (opt.lo > opt.hi) throw UsageError("empty entry range");

    std::optional<sylv::Matrix> fixed;
    if (!opt.file.empty()) {
        std::ifstream in(opt.file);
        if (!in) throw std::ios_base::failure("cannot open matrix file '" + opt.file + "'");
        fixed = sylv::read_matrix(in);
    }

    SizeRange rows{5, 5}, cols{0, 0};
    if (!opt.rows_text.empty()) rows = SizeRange::parse(opt.rows_text);
    if (!opt.cols_text.empty()) cols = SizeRange::parse(opt.cols_text);
    // A bare list family fixes the order it needs.
    if (opt.rows_text.empty() && !opt.lists_text.empty()) {
        const auto family = parse_list_family(opt.lists_text);
        const int n = static_cast<int>(family[0].size()) - 1 + static_cast<int>(family.size());
        rows = {n, n};
    }
    if (cols.lo == 0) cols = rows;

    Sink sink(opt.out);
    bool all_hold = true;
    for (std::uint64_t trial = 0; trial < static_cast<std::uint64_t>(opt.trials); ++trial) {
        sylv::TrialRng rng(opt.seed, trial);
        sylv::Matrix generated;
        if (!fixed) generated = random_matrix(rng, rows.pick(trial), cols.pick(trial), opt.lo, opt.hi);
        const sylv::Matrix& m = fixed ? *fixed : generated;

        std::vector<sylv::IdentityReport> reports;
        run_one_identity({m, trial, rng, opt}, reports);
        for (sylv::IdentityReport& report : reports) {
            report.params.emplace_back("trial", std::to_string(trial));
            report.params.emplace_back("seed", std::to_string(opt.seed));
            all_hold = all_hold && report.holds;
            sink.out() << report.to_json() << '\n';
        }
    }
    sink.finish();
    return all_hold ? kExitOk : kExitCheckFailed;
}

int run_bench(const BenchOptions& opt) {
    if (opt.n < 1 || opt.n > 12) throw UsageError("--n must be in 1..12");
    if (opt.trials < 1) throw UsageError("--trials must be >= 1");
    if (opt.lo > opt.hi) throw UsageError("empty entry range");

    std::vector<unsigned long long> ff_sum(static_cast<std::size_t>(opt.n), 0);
    std::vector<unsigned long long> naive_sum(static_cast<std::size_t>(opt.n), 0);
    int completed = 0, skipped = 0;
    for (std::uint64_t trial = 0; trial < static_cast<std::uint64_t>(opt.trials); ++trial) {
        sylv::TrialRng rng(opt.seed, trial);
        const sylv::Matrix m = random_matrix(rng, opt.n, opt.n, opt.lo, opt.hi);
        try {
            const sylv::GrowthStats stats = growth_report(m);
            for (int k = 0; k < opt.n; ++k) {
                ff_sum[static_cast<std::size_t>(k)] += stats.ff_bits[static_cast<std::size_t>(k)];
                naive_sum[static_cast<std::size_t>(k)] += stats.naive_bits[static_cast<std::size_t>(k)];
            }
            ++completed;
        } catch (const sylv::PivotError&) {
            ++skipped;
        }
    }

    // Two-decimal averages through integer arithmetic so reruns are
    // byte-identical.
    auto avg = [&](unsigned long long sum) {
        if (completed == 0) return std::string("0.00");
        const unsigned long long scaled =
            (sum * 200 + static_cast<unsigned long long>(completed)) / (2ULL * static_cast<unsigned long long>(completed));
        std::string digits = std::to_string(scaled);
        while (digits.size() < 3) digits.insert(digits.begin(), '0');
        return digits.substr(0, digits.size() - 2) + "." + digits.substr(digits.size() - 2);
    };

    Sink sink(opt.out);
    if (opt.json) {
        std::ostringstream body;
        body << "{\"n\":" << opt.n << ",\"trials\":" << opt.trials << ",\"completed\":" << completed
             << ",\"skipped\":" << skipped << ",\"stages\":[";
        for (int k = 0; k < opt.n; ++k) {
            if (k) body << ',';
            body << "{\"stage\":" << k << ",\"ff_bits\":" << avg(ff_sum[static_cast<std::size_t>(k)])
                 << ",\"naive_bits\":" << avg(naive_sum[static_cast<std::size_t>(k)]) << "}";
        }
        body << "]}";
        sink.out() << body.str() << '\n';
    } else {
        sink.out() << "# n=" << opt.n << " trials=" << opt.trials << " completed=" << completed
                   << " skipped=" << skipped << '\n';
        sink.out() << "stage\tff_bits\tnaive_bits\n";
        for (int k = 0; k < opt.n; ++k)
            sink.out() << k << '\t' << avg(ff_sum[static_cast<std::size_t>(k)]) << '\t'
                       << avg(naive_sum[static_cast<std::size_t>(k)]) << '\n';
    }
    sink.finish();
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Sylvester-identity toolkit"};
    app.require_subcommand(1);

    GenOptions gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "write a seeded random integer matrix");
    gen_cmd->add_option("--rows", gen.rows, "row count");
    gen_cmd->add_option("--cols", gen.cols, "column count");
    gen_cmd->add_option("--lo", gen.lo, "smallest entry");
    gen_cmd->add_option("--hi", gen.hi, "largest entry");
    gen_cmd->add_option("--seed", gen.seed, "master seed");
    gen_cmd->add_option("--out", gen.out, "output file (default stdout)");

    VerifyOptions verify;
    int vt = 0, vs = 0, vp = 0, vq = 0, vk = 0;
    CLI::App* verify_cmd = app.add_subcommand("verify", "check a determinantal identity");
    verify_cmd
        ->add_option("identity", verify.identity,
                     "one of: sylvester chio block yakovlev glr bgm mulders newgen newgen-s2 newgen-block")
        ->required();
    verify_cmd->add_option("--file", verify.file, "matrix file (otherwise a seeded campaign)");
    verify_cmd->add_option("--rows", verify.rows_text, "rows: N or A..B (campaign cycles the range)");
    verify_cmd->add_option("--cols", verify.cols_text, "cols: N or A..B (default: same as rows)");
    verify_cmd->add_option("--lo", verify.lo, "smallest entry");
    verify_cmd->add_option("--hi", verify.hi, "largest entry");
    verify_cmd->add_option("--seed", verify.seed, "master seed");
    verify_cmd->add_option("--trials", verify.trials, "number of campaign trials");
    CLI::Option* ot = verify_cmd->add_option("--t", vt, "leading order / list length");
    CLI::Option* os = verify_cmd->add_option("--s", vs, "block size / step");
    CLI::Option* op = verify_cmd->add_option("--p", vp, "row offset");
    CLI::Option* oq = verify_cmd->add_option("--q", vq, "column offset");
    CLI::Option* ok = verify_cmd->add_option("--k", vk, "stage index");
    verify_cmd->add_option("--I", verify.i_text, "row index list, e.g. \"(1,3,5,6)\"");
    verify_cmd->add_option("--J", verify.j_text, "column index list");
    verify_cmd->add_option("--lists", verify.lists_text, "column lists \"(..);(..);..\"");
    verify_cmd->add_option("--I-lists", verify.i_lists_text, "row list family \"(..);(..)\"");
    verify_cmd->add_option("--J-lists", verify.j_lists_text, "column list family \"(..);(..)\"");
    verify_cmd->add_option("--I0", verify.i0_text, "anchor rows");
    verify_cmd->add_option("--draws", verify.draws, "border-row draws per matrix");
    verify_cmd->add_option("--out", verify.out, "output file (default stdout)");
    verify_cmd->add_flag("--json", verify.json, "emit one JSON object per check (default)");

    BenchOptions bench;
    CLI::App* bench_cmd = app.add_subcommand("bench", "entry-growth comparison, fraction-free vs naive");
    bench_cmd->add_option("--n", bench.n, "matrix order (<= 12)");
    bench_cmd->add_option("--trials", bench.trials, "number of trials");
    bench_cmd->add_option("--lo", bench.lo, "smallest entry");
    bench_cmd->add_option("--hi", bench.hi, "largest entry");
    bench_cmd->add_option("--seed", bench.seed, "master seed");
    bench_cmd->add_option("--out", bench.out, "output file (default stdout)");
    bench_cmd->add_flag("--json", bench.json, "emit JSON instead of TSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*gen_cmd) return run_gen(gen);
        if (*verify_cmd) {
            if (*ot) verify.t = vt;
            if (*os) verify.s = vs;
            if (*op) verify.p = vp;
            if (*oq) verify.q = vq;
            if (*ok) verify.k = vk;
            return run_verify(verify);
        }
        return run_bench(bench);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const sylv::ParseError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kExitData;
    } catch (const sylv::PivotError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kExitData;
    } catch (const sylv::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitOk;
}
