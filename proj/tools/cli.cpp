#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "rcoo/closed.hpp"
#include "rcoo/coo_index.hpp"
#include "rcoo/index_file.hpp"
#include "rcoo/oracle.hpp"

namespace rcoo::cli {
namespace {

/// Thrown for unreadable or malformed input files.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  std::string text = std::move(buf).str();
  if (text.empty()) throw UsageError(path + " is empty");
  return text;
}

Pos parse_number(std::string_view s, std::string_view what) {
  Pos v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size())
    throw UsageError("malformed " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

std::pair<Pos, Pos> parse_pair(std::string_view s, std::string_view what) {
  const auto colon = s.find(':');
  if (colon == std::string_view::npos)
    throw UsageError("malformed " + std::string(what) + " '" + std::string(s) + "', expected A:B");
  return {parse_number(s.substr(0, colon), what), parse_number(s.substr(colon + 1), what)};
}

void print_stats(const IndexStats& st, std::ostream& out) {
  out << "n\t" << st.text_length << "\nnodes\t" << st.nodes << "\npaths\t" << st.paths
      << "\nsegments\t" << st.segments << "\nbuild_ms\t" << st.build_millis << "\n";
}

std::unique_ptr<RangeCooIndex> load_index(const std::string& path) {
  index_file::Contents c;
  try {
    c = index_file::load(path);
  } catch (const std::exception& e) {
    throw IoError(e.what());
  }
  const IndexOptions lazy{BuildMode::lazy, BuildMode::lazy};
  try {
    if (c.segments) return std::make_unique<RangeCooIndex>(std::move(c.text), std::move(*c.segments), lazy);
    return std::make_unique<RangeCooIndex>(std::move(c.text), lazy);
  } catch (const ConsistencyError& e) {
    throw IoError(path + ": " + e.what());
  }
}

// ---- query ------------------------------------------------------------------

struct QuerySpec {
  std::string pattern;
  Pos a = 0, b = 0;
  std::size_t k = 0;
  Pos g1 = 0, g2 = 0;
};

std::vector<ConsOcc> run_query(const RangeCooIndex& idx, bool gap, const QuerySpec& q) {
  if (gap) return idx.query_gap({q.pattern, q.a, q.b, q.g1, q.g2});
  return idx.query_topk({q.pattern, q.a, q.b, q.k});
}

void check_spec(const RangeCooIndex& idx, const QuerySpec& q) {
  if (q.pattern.empty()) throw UsageError("pattern must be nonempty");
  validate_window(idx.text().size(), q.a, q.b);
}

/// Batch lines: "PATTERN A:B K" for topk, "PATTERN A:B G1:G2" for gap. Blank
/// lines and lines starting with '#' are skipped.
std::vector<QuerySpec> read_batch(const std::string& path, bool gap) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::vector<QuerySpec> out;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    std::istringstream fields(line);
    std::string pattern, range, last, extra;
    if (!(fields >> pattern) || pattern[0] == '#') continue;
    if (!(fields >> range >> last) || (fields >> extra))
      throw UsageError("batch line " + std::to_string(no) + ": expected 3 fields");
    QuerySpec q;
    q.pattern = pattern;
    std::tie(q.a, q.b) = parse_pair(range, "range");
    if (gap)
      std::tie(q.g1, q.g2) = parse_pair(last, "gap");
    else
      q.k = parse_number(last, "k");
    out.push_back(std::move(q));
  }
  return out;
}

void write_results(const std::vector<std::vector<ConsOcc>>& results, bool batch, bool json,
                   std::ostream& out) {
  if (json) {
    auto to_json = [](const std::vector<ConsOcc>& r) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& c : r) arr.push_back({{"i", c.i}, {"j", c.j}, {"dist", c.dist()}});
      return arr;
    };
    nlohmann::json doc;
    if (batch) {
      doc = nlohmann::json::array();
      for (const auto& r : results) doc.push_back(to_json(r));
    } else {
      doc = to_json(results.front());
    }
    out << doc.dump() << "\n";
    return;
  }
  for (std::size_t q = 0; q < results.size(); ++q)
    for (const auto& c : results[q]) {
      if (batch) out << q + 1 << '\t';
      out << c.i << '\t' << c.j << '\t' << c.dist() << '\n';
    }
}

// ---- verify -----------------------------------------------------------------

struct VerifyConfig {
  std::size_t max_n = 64;
  std::size_t cases = 100;
  unsigned alphabet = 2;
  std::uint64_t seed = 1;
  bool flip_ties = false;
};

void flip_first_tie(std::vector<ConsOcc>& r) {
  for (std::size_t t = 1; t < r.size(); ++t)
    if (r[t - 1].dist() == r[t].dist()) {
      std::swap(r[t - 1], r[t]);
      return;
    }
}

std::string format_pairs(const std::vector<ConsOcc>& r) {
  std::string s = "[";
  for (const auto& c : r)
    s += (s.size() > 1 ? " " : "") + std::string("(") + std::to_string(c.i) + "," +
         std::to_string(c.j) + ")";
  return s + "]";
}

int verify(const VerifyConfig& cfg, std::ostream& out) {
  std::mt19937_64 rng(cfg.seed);
  auto uniform = [&rng](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  std::size_t queries = 0, closed_checks = 0;

  for (std::size_t c = 0; c < cfg.cases; ++c) {
    const std::size_t n = uniform(1, cfg.max_n);
    std::string text(n, 'a');
    for (auto& ch : text) ch = static_cast<char>('a' + uniform(0, cfg.alphabet - 1));
    const RangeCooIndex idx(text);

    auto report = [&](const std::string& query, const std::vector<ConsOcc>& want,
                      const std::vector<ConsOcc>& got) {
      out << "MISMATCH in case " << c << "\n"
          << "text\t" << text << "\nquery\t" << query << "\nexpected\t" << format_pairs(want)
          << "\nindex\t" << format_pairs(got) << "\n";
      return kVerifyFailed;
    };

    std::vector<std::string> patterns;
    for (int p = 0; p < 8; ++p) {
      const std::size_t m = uniform(1, std::min<std::size_t>(n, 6));
      patterns.push_back(text.substr(uniform(0, n - m), m));
    }
    for (int p = 0; p < 2; ++p) {
      std::string s(uniform(1, 3), 'a');
      for (auto& ch : s) ch = static_cast<char>('a' + uniform(0, cfg.alphabet));
      patterns.push_back(s);
    }

    for (const auto& pat : patterns) {
      const auto occ = oracle::occurrences(text, pat);
      for (int q = 0; q < 6; ++q) {
        Pos a = static_cast<Pos>(uniform(1, n)), b = static_cast<Pos>(uniform(1, n));
        if (q == 0) a = 1, b = static_cast<Pos>(n);
        if (a > b) std::swap(a, b);
        const std::string where = "'" + pat + "' " + std::to_string(a) + ":" + std::to_string(b);

        const std::size_t k = uniform(0, occ.size() + 1);
        const auto want_k = oracle::topk_in(occ, pat.size(), n, a, b, k);
        auto got_k = idx.query_topk({pat, a, b, k});
        if (cfg.flip_ties) flip_first_tie(got_k);
        ++queries;
        if (got_k != want_k) return report("topk " + where + " k=" + std::to_string(k), want_k, got_k);

        const Pos g1 = static_cast<Pos>(uniform(1, n)), g2 = static_cast<Pos>(uniform(1, n));
        const auto want_g = oracle::gap_in(occ, pat.size(), n, a, b, g1, g2);
        auto got_g = idx.query_gap({pat, a, b, g1, g2});
        if (cfg.flip_ties) flip_first_tie(got_g);
        ++queries;
        if (got_g != want_g)
          return report("gap " + where + " " + std::to_string(g1) + ":" + std::to_string(g2),
                        want_g, got_g);
      }
    }

    if (n <= 96) {
      ++closed_checks;
      const auto paths = compute_closed_paths(idx);
      if (enumerate_closed_occurrences(paths, n) != oracle::closed_substrings(text)) {
        out << "MISMATCH in case " << c << "\ntext\t" << text
            << "\nquery\tclosed --expand\n";
        return kVerifyFailed;
      }
    }
  }
  out << "verify\tcases " << cfg.cases << "\tqueries " << queries << "\tclosed " << closed_checks
      << "\tok\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Range consecutive-occurrence index"};
  app.require_subcommand(1);

  std::string text_path, out_path, index_path, pattern, range, gap_range, format = "tsv",
                                                                       batch_path, mode;
  bool with_segs = false, expand = false;
  std::size_t k = 0;
  unsigned threads = 1;
  VerifyConfig vcfg;

  auto* build = app.add_subcommand("build", "Build an index file from a text file");
  build->add_option("--text", text_path, "Text file")->required();
  build->add_option("--out", out_path, "Index file to write")->required();
  build->add_flag("--with-segs", with_segs, "Store extracted segments in the index file");

  auto* stats = app.add_subcommand("stats", "Print structure statistics of an index file");
  stats->add_option("--index", index_path, "Index file")->required();

  auto* query = app.add_subcommand("query", "Run range top-k or gap-bounded queries");
  query->add_option("mode", mode, "topk or gap")->required()->check(CLI::IsMember({"topk", "gap"}));
  query->add_option("--index", index_path, "Index file")->required();
  auto* pat_opt = query->add_option("--pattern", pattern, "Pattern");
  auto* range_opt = query->add_option("--range", range, "Window A:B, 1-based inclusive");
  auto* k_opt = query->add_option("-k", k, "Number of results (topk)");
  auto* gap_opt = query->add_option("--gap", gap_range, "Distance range G1:G2 (gap)");
  auto* batch_opt = query->add_option("--batch", batch_path,
                                      "File of queries, one per line: PATTERN A:B K|G1:G2");
  query->add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
  query->add_option("--threads", threads, "Worker threads for --batch")->check(CLI::Range(1u, 256u));
  batch_opt->excludes(pat_opt)->excludes(range_opt)->excludes(k_opt)->excludes(gap_opt);
  k_opt->excludes(gap_opt);

  auto* closed = app.add_subcommand("closed", "Emit the closed-substring representation");
  closed->add_option("--text", text_path, "Text file")->required();
  closed->add_flag("--expand", expand, "List every closed occurrence as start, end");

  auto* ver = app.add_subcommand("verify", "Cross-check the index against the oracle");
  ver->add_option("--max-n", vcfg.max_n, "Maximum text length")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  ver->add_option("--cases", vcfg.cases, "Number of random texts");
  ver->add_option("--alphabet", vcfg.alphabet, "Alphabet size")->check(CLI::Range(1u, 26u));
  ver->add_option("--seed", vcfg.seed, "Random seed");
  ver->add_flag("--flip-ties", vcfg.flip_ties)->group("");

  try {
    std::vector<std::string> rest(args.rbegin(), args.rend());
    if (!rest.empty()) rest.pop_back();
    app.parse(rest);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*build) {
      const std::string text = read_text_file(text_path);
      const RangeCooIndex idx(text, {BuildMode::lazy, BuildMode::lazy});
      try {
        index_file::save(out_path, text, with_segs ? &idx.segments() : nullptr);
      } catch (const std::exception& e) {
        throw IoError(e.what());
      }
      print_stats(idx.stats(), out);
    } else if (*stats) {
      print_stats(load_index(index_path)->stats(), out);
    } else if (*query) {
      const bool gap = mode == "gap";
      const bool batch = !batch_path.empty();
      if (!batch) {
        if (pattern.empty() || range.empty()) throw UsageError("query needs --pattern and --range");
        if (gap ? gap_range.empty() : k_opt->count() == 0)
          throw UsageError(gap ? "query gap needs --gap G1:G2" : "query topk needs -k K");
        if (gap ? k_opt->count() > 0 : !gap_range.empty())
          throw UsageError("-k belongs to topk, --gap to gap");
      }
      std::vector<QuerySpec> specs;
      if (batch) {
        specs = read_batch(batch_path, gap);
      } else {
        QuerySpec q;
        q.pattern = pattern;
        std::tie(q.a, q.b) = parse_pair(range, "range");
        if (gap) std::tie(q.g1, q.g2) = parse_pair(gap_range, "gap");
        q.k = k;
        specs.push_back(std::move(q));
      }
      const auto idx = load_index(index_path);
      for (const auto& q : specs) check_spec(*idx, q);

      std::vector<std::vector<ConsOcc>> results(specs.size());
      const unsigned workers = std::min<std::size_t>(threads, std::max<std::size_t>(specs.size(), 1));
      std::vector<std::thread> pool;
      for (unsigned w = 1; w < workers; ++w)
        pool.emplace_back([&, w] {
          for (std::size_t q = w; q < specs.size(); q += workers) results[q] = run_query(*idx, gap, specs[q]);
        });
      for (std::size_t q = 0; q < specs.size(); q += workers) results[q] = run_query(*idx, gap, specs[q]);
      for (auto& t : pool) t.join();
      write_results(results, batch, format == "json", out);
    } else if (*closed) {
      const SuffixTree tree(read_text_file(text_path));
      const HeavyPathDecomp hld(tree);
      const auto paths = compute_closed_paths(tree, hld, extract_segments(tree, hld));
      if (expand) {
        for (const auto& [s, e] : enumerate_closed_occurrences(paths, tree.text_size()))
          out << s << '\t' << e << '\n';
      } else {
        for (const auto& p : paths)
          out << p.pair.i << '\t' << p.pair.j << '\t' << p.min_len << '\t' << p.max_len << '\n';
      }
    } else if (*ver) {
      return verify(vcfg, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  }
  return kOk;
}

}  // namespace rcoo::cli
