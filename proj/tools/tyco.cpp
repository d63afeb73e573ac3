// tyco: preprocess, train, complete, eval, probe and sweep from the shell.
//
// Exit codes: 0 success, 1 contract / configuration error, 2 I/O error.
// Errors are reported on stderr as one JSON object.

#include <iostream>
#include <iterator>

#include <CLI11.hpp>

#include "tyco/cli.hpp"

using namespace tyco;
namespace fs = std::filesystem;

namespace {

int fail(const std::string& kind, const std::string& msg, int code) {
  std::cerr << nlohmann::json{{"error", kind}, {"message", msg}, {"exit_code", code}}.dump() << '\n';
  return code;
}

struct Common {
  std::string config_file;
  std::vector<std::string> sets;
  std::optional<std::int64_t> seed;

  cli::RunConfig resolve() const {
    cli::RunConfig c;
    if (!config_file.empty()) c.load_file(config_file);
    for (const auto& s : sets) c.set(s);
    if (seed) c.set("seed", std::to_string(*seed));
    return c;
  }
};

struct DecodeFlags {
  std::optional<std::string> method;
  std::optional<int> b, k, max_new;
  std::optional<double> temp, p;

  void add(CLI::App* app) {
    app->add_option("--method", method, "greedy, beam, sample, temperature, top_k or top_p");
    app->add_option("--b", b, "beam width");
    app->add_option("--temp", temp, "temperature");
    app->add_option("--k", k, "top-k cutoff");
    app->add_option("--p", p, "top-p mass");
    app->add_option("--max-new", max_new, "maximum generated tokens");
  }
  void apply(cli::RunConfig& c) const {
    auto num = [](double v) {
      std::ostringstream s;
      s << std::setprecision(17) << v;
      return s.str();
    };
    if (method) c.set("decode.method", *method);
    if (b) c.set("decode.b", std::to_string(*b));
    if (k) c.set("decode.k", std::to_string(*k));
    if (max_new) c.set("decode.max_new", std::to_string(*max_new));
    if (temp) c.set("decode.temp", num(*temp));
    if (p) c.set("decode.p", num(*p));
  }
};

void print(const nlohmann::ordered_json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Syntax-aware Python code completion"};
  app.set_version_flag("--version", cli::kVersion);
  app.require_subcommand(1);
  Common common;
  app.add_option("--config", common.config_file, "key=value run configuration file");
  app.add_option("--set", common.sets, "override one config key (key=value)")->allow_extra_args(false);
  app.add_option("--seed", common.seed, "random seed");

  std::string src, out, corpus_dir, checkpoint, strategy = "hard", context_file, checker = "grammar",
                                                 pattern, axis = "weights";
  DecodeFlags dflags;

  auto* pre = app.add_subcommand("preprocess", "tokenize, split, build vocabulary and aligned datasets");
  pre->add_option("--src", src, "directory of .py files")->required();
  pre->add_option("--out", out, "output corpus directory")->required();

  auto* tr = app.add_subcommand("train", "train a model");
  tr->add_option("--corpus", corpus_dir, "preprocessed corpus directory")->required();
  tr->add_option("--strategy", strategy, "hard, soft, ift or single");
  tr->add_option("--out", out, "output run directory")->required();

  auto* co = app.add_subcommand("complete", "complete the current line of a source prefix");
  co->add_option("--checkpoint", checkpoint)->required();
  co->add_option("--corpus", corpus_dir, "corpus directory holding vocab.json and literal tables")->required();
  co->add_option("--context", context_file, "file with the source prefix (default: stdin)");
  dflags.add(co);

  auto* ev = app.add_subcommand("eval", "token-level and line-level evaluation on the test split");
  ev->add_option("--checkpoint", checkpoint)->required();
  ev->add_option("--corpus", corpus_dir)->required();
  ev->add_option("--out", out)->required();
  dflags.add(ev);

  auto* pr = app.add_subcommand("probe", "count parsable prefixes of source files");
  pr->add_option("--checker", checker, "token or grammar");
  pr->add_option("--glob", pattern, "glob pattern or directory")->required();
  pr->add_option("--out", out)->required();

  auto* sw = app.add_subcommand("sweep", "task-weight or decoding sweep");
  sw->add_option("--axis", axis, "weights or decode");
  sw->add_option("--corpus", corpus_dir)->required();
  sw->add_option("--checkpoint", checkpoint, "model for the decode sweep");
  sw->add_option("--out", out)->required();
  dflags.add(sw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("UsageError", e.what(), 1);
  }

  try {
    auto cfg = common.resolve();
    if (*pre) {
      print(cli::run_preprocess(src, out, cfg));
    } else if (*tr) {
      print(cli::run_train(corpus_dir, strategy, cfg, out));
    } else if (*co) {
      dflags.apply(cfg);
      std::string ctx;
      if (context_file.empty())
        ctx.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
      else
        ctx = read_file(context_file);
      const auto c = cli::run_complete(checkpoint, corpus_dir, ctx, cfg);
      std::cout << c.text << '\n';
    } else if (*ev) {
      dflags.apply(cfg);
      print(cli::run_eval(checkpoint, corpus_dir, cfg, out));
    } else if (*pr) {
      const auto r = cli::run_probe(pattern, probe::checker_from_name(checker), cfg, out);
      std::cout << read_file(fs::path(out) / "probe_summary.txt");
      (void)r;
    } else if (*sw) {
      dflags.apply(cfg);
      print(cli::run_sweep(axis, corpus_dir, cfg, out, checkpoint));
    }
  } catch (const IoError& e) {
    return fail("IoError", e.what(), 2);
  } catch (const fs::filesystem_error& e) {
    return fail("IoError", e.what(), 2);
  } catch (const Error& e) {
    return fail(e.kind(), e.what(), 1);
  } catch (const std::exception& e) {
    return fail("InternalError", e.what(), 1);
  }
  return 0;
}
