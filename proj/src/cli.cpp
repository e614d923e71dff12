#include "eqg/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <thread>

#include "eqg/group_dual.hpp"
#include "eqg/homspace.hpp"
#include "eqg/oracle.hpp"
#include "eqg/partition.hpp"

namespace eqg {

MomentWord parse_word(std::string_view text, int n) {
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  std::string pair;
  while (in >> pair) {
    const auto comma = pair.find(',');
    auto number = [&](std::string_view s) {
      if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char c) {
            return c >= '0' && c <= '9';
          }))
        throw std::invalid_argument("malformed index pair '" + pair + "'");
      return std::stoi(std::string(s));
    };
    if (comma == std::string::npos) throw std::invalid_argument("malformed index pair '" + pair + "'");
    const std::string_view p(pair);
    letters.push_back({number(p.substr(0, comma)), number(p.substr(comma + 1))});
  }
  return MomentWord(std::move(letters), n);
}

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string category;
  int points = -1;
  int n = -1;
  int k = -1;
  std::string word;
  int max_power = -1;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 42;
  std::string input;
  double tol = kDefaultTolerance;
  double theta = std::numbers::pi / 6;
};

Category category_for(const Flags& f, bool allow_primed) {
  Category cat;
  try {
    cat = parse_category(f.category);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!allow_primed && is_primed(cat))
    throw UsageError("category " + f.category + " is not allowed for this command");
  return cat;
}

MomentWord word_for(const Flags& f) {
  try {
    return parse_word(f.word, f.n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read input file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void require_nonnegative(int value, const char* flag) {
  if (value < 0) throw UsageError(std::string(flag) + " must be nonnegative");
}

void require_dimension(int n) {
  if (n < 1) throw UsageError("--n must be at least 1");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact combinatorics and integration for easy quantum groups", "eqg"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  Flags f;

  auto category = [&](CLI::App* sub, const std::string& help) {
    sub->add_option("--category", f.category, help)->required();
  };
  auto points = [&](CLI::App* sub, bool required = true) {
    auto* o = sub->add_option("--points", f.points, "number of points s");
    if (required) o->required();
  };
  auto dimension = [&](CLI::App* sub) {
    sub->add_option("--n", f.n, "matrix dimension n")->required();
  };

  auto* partitions = app.add_subcommand("partitions", "list D(s) in canonical order");
  category(partitions, "any of the ten categories");
  points(partitions);

  auto* gram = app.add_subcommand("gram", "Gram matrix n^{|p v q|} as TSV, then its rank");
  category(gram, "unprimed category");
  points(gram);
  dimension(gram);

  auto* weingarten = app.add_subcommand("weingarten", "exact inverse of the Gram matrix as TSV");
  category(weingarten, "unprimed category");
  points(weingarten);
  dimension(weingarten);

  auto* moment = app.add_subcommand("moment", "Haar moment of a word (invariant state with --k)");
  category(moment, "unprimed category");
  dimension(moment);
  moment->add_option("--word", f.word, "space-separated i,j pairs")->required();
  moment->add_option("--k", f.k, "row cutoff: evaluate the invariant state on the row algebra");

  auto* char_moments = app.add_subcommand("char-moments", "moments of the character sum u_ii");
  category(char_moments, "unprimed category");
  dimension(char_moments);
  char_moments->add_option("--max-power", f.max_power, "largest power s")->required();

  auto* block_stable = app.add_subcommand("block-stable", "closure of D under block removal");
  category(block_stable, "any of the ten categories");
  block_stable->add_option("--points", f.points, "largest s checked (default 6)");

  auto* group_dual = app.add_subcommand("group-dual", "row algebra analysis of a group dual");
  group_dual->add_option("--input", f.input, "embedding description file")->required();

  auto* truncations = app.add_subcommand("truncations", "count distinct bottom-row truncations");
  category(truncations, "S or H");
  dimension(truncations);
  truncations->add_option("--k", f.k, "row cutoff")->required();

  auto* classify_cmd = app.add_subcommand("classify", "classify a truncated matrix read as TSV");
  classify_cmd->add_option("--input", f.input, "TSV matrix file")->required();
  classify_cmd->add_option("--tol", f.tol, "numeric tolerance");

  auto* oracle = app.add_subcommand("oracle", "exact (S, H) or Monte Carlo (O, B) Haar average");
  category(oracle, "S, H, O or B");
  dimension(oracle);
  oracle->add_option("--word", f.word, "space-separated i,j pairs")->required();
  oracle->add_option("--samples", f.samples, "Monte Carlo sample count");
  oracle->add_option("--seed", f.seed, "Monte Carlo seed");

  auto* witness = app.add_subcommand("witness43", "noncommutation witness for two projections");
  witness->add_option("--theta", f.theta, "angle in radians (default pi/6)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kOk : exit_code::kUsageError;
  }

  CLI::App* sub = app.get_subcommands().front();
  std::ostringstream log;
  log << "[eqg " << kToolVersion << "] " << sub->get_name();
  for (const CLI::Option* opt : sub->get_options())
    if (opt->count() > 0 && opt->get_name() != "--help")
      log << ' ' << opt->get_name().substr(2) << "=" << opt->as<std::string>();
  if (sub == oracle) {
    if (sub->get_option("--seed")->count() == 0) log << " seed=" << f.seed;
    log << " generator=" << kGeneratorName;
  }
  err << log.str() << '\n';

  try {
    if (sub == partitions) {
      require_nonnegative(f.points, "--points");
      for (const auto& p : enumerate_category(category_for(f, true), f.points))
        out << p.to_string() << '\n';
    } else if (sub == gram) {
      require_nonnegative(f.points, "--points");
      require_dimension(f.n);
      const Category cat = category_for(f, false);
      const auto g = gram_matrix(cat, f.points, f.n);
      out << g.to_tsv();
      out << "# rank " << gram_rank(cat, f.points, f.n) << " of " << g.size() << '\n';
    } else if (sub == weingarten) {
      require_nonnegative(f.points, "--points");
      require_dimension(f.n);
      out << weingarten_matrix(category_for(f, false), f.points, f.n).to_tsv();
    } else if (sub == moment) {
      require_dimension(f.n);
      const Category cat = category_for(f, false);
      const MomentWord w = word_for(f);
      if (moment->count("--k") > 0) {
        if (f.k < 0 || f.k > f.n) throw UsageError("--k must lie in 0..n");
        for (const auto& l : w.letters())
          if (l.row <= f.k) throw UsageError("row index " + std::to_string(l.row) +
                                             " must exceed --k " + std::to_string(f.k));
        out << to_string(invariant_state_moment(cat, f.k, w)) << '\n';
      } else {
        out << to_string(haar_moment(cat, w)) << '\n';
      }
    } else if (sub == char_moments) {
      require_dimension(f.n);
      require_nonnegative(f.max_power, "--max-power");
      const Category cat = category_for(f, false);
      for (int s = 0; s <= f.max_power; ++s)
        out << s << "→" << to_string(character_moment(cat, f.n, s)) << '\n';
    } else if (sub == block_stable) {
      const int s_max = f.points < 0 ? 6 : f.points;
      const auto r = is_block_stable(category_for(f, true), s_max);
      if (r.stable) {
        out << "stable\n";
      } else {
        const auto& w = *r.witness;
        std::string removed;
        for (const auto& b : w.removed_blocks) {
          removed += '{';
          for (std::size_t i = 0; i < b.size(); ++i) removed += (i ? "," : "") + std::to_string(b[i]);
          removed += '}';
        }
        out << "unstable\n"
            << "partition=" << w.partition.to_string() << '\n'
            << "removed=" << removed << '\n'
            << "subpartition=" << w.subpartition.to_string() << '\n';
      }
    } else if (sub == group_dual) {
      const std::string text = read_file(f.input);
      out << analyze_embedding(parse_embedding(text)).to_key_values();
    } else if (sub == truncations) {
      require_dimension(f.n);
      const Category cat = category_for(f, true);
      if (cat != Category::S && cat != Category::H)
        throw UsageError("truncations supports categories S and H");
      if (f.k < 0 || f.k > f.n) throw UsageError("--k must lie in 0..n");
      out << count_truncations(cat == Category::S ? TruncationGroup::S : TruncationGroup::H, f.n,
                               f.k)
          << '\n';
    } else if (sub == classify_cmd) {
      if (!(f.tol > 0)) throw UsageError("--tol must be positive");
      const std::string text = read_file(f.input);
      out << format_classes(classify(TruncatedMatrix::from_tsv(text), f.tol)) << '\n';
    } else if (sub == oracle) {
      require_dimension(f.n);
      const Category cat = category_for(f, true);
      const MomentWord w = word_for(f);
      if (cat == Category::S || cat == Category::H) {
        out << to_string(exact_group_average(cat == Category::S ? ExactGroup::S : ExactGroup::H,
                                             w))
            << '\n';
      } else if (cat == Category::O || cat == Category::B) {
        if (f.samples < 1) throw UsageError("--samples must be at least 1");
        SamplerOptions opts;
        opts.workers = std::max(1u, std::thread::hardware_concurrency());
        const auto report = cat == Category::O ? mc_orthogonal_average(w, f.samples, f.seed, opts)
                                               : mc_bistochastic_average(w, f.samples, f.seed, opts);
        out << report.to_tsv() << '\n';
      } else {
        throw UsageError("oracle supports categories S, H, O and B");
      }
    } else if (sub == witness) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", free_projection_witness(f.theta));
      out << buf << '\n';
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_code::kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kDomainError;
  }
  return exit_code::kOk;
}

}  // namespace eqg
